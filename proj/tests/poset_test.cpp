#include <gtest/gtest.h>

#include "support.hpp"

using namespace sectional;
using fixtures::make;

namespace {

Poset hexagon() { return fixtures::poset("hexagon.sp", "hex"); }

ElementSet set_of(const Poset& p, std::initializer_list<const char*> labels) {
  ElementSet s;
  for (const char* l : labels) s = s.with(p.index_of(l));
  return s;
}

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::Parse;
}

}  // namespace

TEST(Poset, ClosureOfCovers) {
  Poset p = hexagon();
  ASSERT_EQ(p.size(), 6u);
  auto i = [&](const char* l) { return p.index_of(l); };
  EXPECT_TRUE(p.leq(i("0"), i("1")));
  EXPECT_TRUE(p.leq(i("a"), i("d")));
  EXPECT_TRUE(p.lt(i("b"), i("1")));
  EXPECT_FALSE(p.leq(i("c"), i("d")));
  EXPECT_FALSE(p.comparable(i("a"), i("b")));
  EXPECT_EQ(covers(p).size(), 8u);
}

TEST(Poset, LeDeclarationsMixWithCovers) {
  std::vector<OrderDeclaration> decl{{OrderDeclaration::Kind::le, "x", "z"}, {OrderDeclaration::Kind::cover, "x", "y"},
                                     {OrderDeclaration::Kind::cover, "y", "z"}};
  Poset p = build_poset("m", {"x", "y", "z"}, decl);
  EXPECT_EQ(covers(p).size(), 2u);
  EXPECT_TRUE(classify(p).is_chain);
}

TEST(Poset, ConstructionErrors) {
  std::vector<OrderDeclaration> none;
  EXPECT_EQ(kind_of([&] { build_poset("p", {"a", "a"}, none); }), ErrorKind::DuplicateElement);
  EXPECT_EQ(kind_of([&] { make("p", {"a"}, {{"a", "q"}}); }), ErrorKind::UnknownElement);
  EXPECT_EQ(kind_of([&] { make("p", {"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"c", "a"}}); }),
            ErrorKind::AntisymmetryViolation);
  EXPECT_EQ(kind_of([&] { build_poset("p", {}, none); }), ErrorKind::EmptyPoset);
  EXPECT_EQ(kind_of([&] { build_poset("p", {"a", "b", "c"}, none, 2); }), ErrorKind::SizeCap);
  EXPECT_EQ(kind_of([&] { hexagon().index_of("z"); }), ErrorKind::UnknownElement);
}

TEST(Poset, CycleErrorNamesThePath) {
  try {
    make("p", {"a", "b"}, {{"a", "b"}, {"b", "a"}});
    FAIL();
  } catch (const Error& e) {
    std::string m = e.what();
    EXPECT_NE(m.find('a'), std::string::npos);
    EXPECT_NE(m.find('b'), std::string::npos);
  }
}

TEST(Poset, HexagonBoundsAndLocalMeets) {
  Poset p = hexagon();
  auto i = [&](const char* l) { return p.index_of(l); };
  EXPECT_FALSE(meet(p, i("c"), i("d")).has_value());
  EXPECT_FALSE(join(p, i("a"), i("b")).has_value());
  EXPECT_EQ(maximal_lower_bounds(p, i("c"), i("d")), set_of(p, {"a", "b"}));
  EXPECT_EQ(frink_ideal(p, i("a"), i("b")), set_of(p, {"0", "a", "b"}));
  EXPECT_TRUE(disjoint_over(p, i("c"), i("d"), i("a")));
  EXPECT_FALSE(disjoint_over(p, i("c"), i("d"), i("0")));
  EXPECT_EQ(meet_over(p, i("c"), i("d"), i("a")), i("a"));
  EXPECT_FALSE(meet_over(p, i("c"), i("d"), i("0")).has_value());
  EXPECT_EQ(segment(p, i("a"), i("1")), set_of(p, {"a", "c", "d", "1"}));
  EXPECT_TRUE(segment(p, i("c"), i("a")).empty());
  EXPECT_EQ(bounds(p, set_of(p, {"a", "b"}), BoundDirection::upper), set_of(p, {"c", "d", "1"}));
}

TEST(Poset, ClassifyHexagon) {
  Poset p = hexagon();
  auto r = classify(p);
  EXPECT_FALSE(r.is_chain);
  EXPECT_TRUE(r.is_up_directed);
  EXPECT_TRUE(r.has_greatest);
  EXPECT_TRUE(r.has_least);
  EXPECT_TRUE(r.is_sectionally_bounded);
  EXPECT_FALSE(r.is_upper_semilattice);
  EXPECT_FALSE(r.is_lower_semilattice);
  EXPECT_FALSE(r.is_lattice);
  ASSERT_TRUE(r.is_lower_semilattice.witness.has_value());
  auto [x, y] = *r.is_lower_semilattice.witness;
  EXPECT_FALSE(meet(p, x, y).has_value());
}

TEST(Poset, ClassifyTwoChainsAndFive) {
  auto chains = classify(fixtures::poset("twochains.sp", "chains"));
  EXPECT_FALSE(chains.is_up_directed);
  EXPECT_FALSE(chains.has_greatest);
  EXPECT_TRUE(chains.is_sectionally_bounded);
  EXPECT_TRUE(chains.all_lower_sections_chains);

  auto five = classify(fixtures::poset("five.sp", "five"));
  EXPECT_TRUE(five.is_lattice);
  EXPECT_TRUE(five.is_nearlattice);
  EXPECT_FALSE(five.all_lower_sections_chains);
}

TEST(Poset, NotSectionallyBounded) {
  Poset v = make("v", {"0", "a", "b"}, {{"0", "a"}, {"0", "b"}});
  auto r = classify(v);
  EXPECT_FALSE(r.is_sectionally_bounded);
  EXPECT_TRUE(r.is_lower_semilattice);
  EXPECT_FALSE(r.has_greatest);
}

TEST(Poset, Nearlattice) {
  // a join semilattice whose bounded pairs have meets
  Poset p = make("n", {"a", "b", "1"}, {{"a", "1"}, {"b", "1"}});
  auto r = classify(p);
  EXPECT_TRUE(r.is_upper_semilattice);
  EXPECT_FALSE(r.is_lower_semilattice);
  EXPECT_TRUE(r.is_nearlattice);
}

TEST(Poset, InducedSubposet) {
  Poset p = hexagon();
  Poset q = induced_subposet(p, set_of(p, {"0", "c", "d", "1"}), "q");
  EXPECT_TRUE(q.same_order(fixtures::poset("hexagon-q.sp", "q")));
  EXPECT_EQ(q.labels(), (std::vector<std::string>{"0", "c", "d", "1"}));
}

TEST(Poset, OracleAgreesOnMeets) {
  for (const Poset& p : enumerate_posets(4)) {
    oracle::Order o(p);
    for (int x = 0; x < o.n; ++x)
      for (int y = 0; y < o.n; ++y) {
        auto m = meet(p, x, y);
        auto om = o.meet(x, y);
        ASSERT_EQ(m.has_value(), om.has_value());
        if (m) EXPECT_EQ(*m, *om);
      }
  }
}
