#include <gtest/gtest.h>

#include "support.hpp"

using namespace sectional;
using fixtures::make;

TEST(StarTable, HexagonMatchesWorkedTable) {
  auto doc = fixtures::load("hexagon.sp");
  Poset p = doc.poset("hex").poset;
  auto r = star_table(p);
  ASSERT_TRUE(r);
  EXPECT_EQ(*r.table, fixtures::partial(doc, "star"));
  EXPECT_TRUE(is_sp_table(*r.table));
}

TEST(StarTable, SubposetQ) {
  auto doc = fixtures::load("hexagon-q.sp");
  auto r = star_table(doc.poset("q").poset);
  ASSERT_TRUE(r);
  EXPECT_EQ(*r.table, fixtures::partial(doc, "star"));
}

TEST(StarTable, MissingPseudocomplementIsReported) {
  Poset v = make("v", {"0", "a", "b"}, {{"0", "a"}, {"0", "b"}});
  auto r = star_table(v);
  ASSERT_FALSE(r);
  ASSERT_TRUE(r.missing.has_value());
  EXPECT_EQ(r.missing->x, v.index_of("0"));
  EXPECT_EQ(r.missing->y, v.index_of("0"));
  EXPECT_EQ(r.missing->maximal_candidates, ElementSet::single(v.index_of("a")).with(v.index_of("b")));
  EXPECT_NE(describe(v, *r.missing).find("{a, b}"), std::string::npos);
}

TEST(StarTable, AgreesWithBruteForceOnAllSmallPosets) {
  for (int n = 1; n <= 5; ++n) {
    for_each_poset(n, Dedup::labeled, [&](const Poset& p) {
      oracle::Order o(p);
      auto expected = oracle::sp_table(o);
      auto got = star_table(p);
      EXPECT_EQ(got.table.has_value(), expected.has_value()) << emit_instance(p);
      if (got.table && expected) {
        std::vector<int> cells(got.table->cells().begin(), got.table->cells().end());
        EXPECT_EQ(cells, *expected) << emit_instance(p);
      }
      return !::testing::Test::HasFailure();
    });
  }
}

TEST(StarTable, PropertiesHoldOnEverySpTable) {
  for (int n = 1; n <= 5; ++n) {
    for_each_poset(n, Dedup::labeled, [&](const Poset& p) {
      auto s = star_table(p);
      if (!s) return true;
      auto r = verify_sp_properties(p, *s.table);
      EXPECT_TRUE(r.holds()) << emit_instance(p) << (r.violations.empty() ? "" : r.violations[0].axiom);
      EXPECT_EQ(r.checked.size(), 13u);
      return r.holds();
    });
  }
}

TEST(StarTable, SpPropertiesCatchAWrongTable) {
  Poset p = fixtures::poset("hexagon.sp", "hex");
  // c*0 = c instead of 0 breaks (b): c and c are not disjoint over 0
  auto cells = fixtures::cells(p, {{"1", "-", "-", "-", "-", "-"},
                                   {"b", "1", "-", "-", "-", "-"},
                                   {"a", "-", "1", "-", "-", "-"},
                                   {"c", "d", "d", "1", "-", "-"},
                                   {"0", "c", "c", "-", "1", "-"},
                                   {"0", "a", "b", "c", "d", "1"}});
  PartialTable bad(p, cells);
  EXPECT_FALSE(is_sp_table(bad));
  EXPECT_FALSE(verify_sp_properties(p, bad).holds());
}

TEST(ComplementTable, RelativePseudocomplementOfHexagon) {
  auto doc = fixtures::load("hexagon-rpc.sp");
  Poset p = doc.poset("hex").poset;
  auto rp = complement_table(p, Complement::rp);
  ASSERT_TRUE(rp.total());
  EXPECT_EQ(*rp.table, fixtures::total(doc, "rp"));
}

TEST(ComplementTable, RpRestrictsToWrpButNotSp) {
  auto doc = fixtures::load("hexagon-rpc.sp");
  Poset p = doc.poset("hex").poset;
  auto restricted = restrict(fixtures::total(doc, "rp"));
  auto wrp = star_table(p, Complement::wrp);
  ASSERT_TRUE(wrp);
  EXPECT_EQ(restricted, *wrp.table);
  EXPECT_FALSE(is_sp_table(restricted));
  auto i = [&](const char* l) { return p.index_of(l); };
  EXPECT_EQ(restricted.cell(i("c"), i("0")), i("0"));
  EXPECT_EQ(restricted.cell(i("c"), i("a")), i("a"));
  EXPECT_EQ(star_table(p).table->cell(i("c"), i("a")), i("d"));
}

TEST(ComplementTable, ClpIsTotalOnHexagon) {
  Poset p = fixtures::poset("hexagon.sp", "hex");
  auto clp = complement_table(p, Complement::clp);
  EXPECT_TRUE(clp.total());
}

TEST(PseudocomplementEntryPoints, SectionTopAndPointwise) {
  Poset p = fixtures::poset("twochains.sp", "chains");
  auto i = [&](const char* l) { return p.index_of(l); };
  EXPECT_EQ(section_top(p, i("a")), i("b"));
  EXPECT_EQ(section_top(p, i("c")), i("d"));
  EXPECT_EQ(sp_complement(p, i("b"), i("a")), i("a"));
  EXPECT_EQ(sp_complement_set_form(p, i("b"), i("a")), i("a"));
  EXPECT_THROW(sp_complement(p, i("a"), i("c")), Error);
  auto clauses = sp_clauses(p, i("b"), i("a"), i("a"));
  EXPECT_TRUE(clauses[0] && clauses[1] && clauses[2]);
}

TEST(PseudocomplementEntryPoints, ThreeDescriptionsAgree) {
  for (const Poset& p : enumerate_posets(4)) {
    auto n = static_cast<Element>(p.size());
    for (Element x = 0; x < n; ++x)
      for (Element y = 0; y < n; ++y) {
        if (!p.leq(y, x)) continue;
        auto v = sp_complement(p, x, y);
        EXPECT_EQ(v, sp_complement_set_form(p, x, y));
        for (Element u : p.up(y)) {
          auto c = sp_clauses(p, x, y, u);
          bool is_value = v && *v == u;
          EXPECT_EQ(c[0], is_value);
          EXPECT_EQ(c[1], is_value);
          EXPECT_EQ(c[2], is_value);
        }
      }
  }
}
