#include <gtest/gtest.h>

#include <cmath>

#include "support.hpp"

using namespace sectional;

namespace {

// Random posets of up to five points, taken from the labeled enumeration.
std::vector<Poset> sample_posets(std::mt19937& rng, int count) {
  std::vector<Poset> all;
  for (int n = 2; n <= 5; ++n) {
    auto ps = enumerate_posets(n);
    all.insert(all.end(), ps.begin(), ps.end());
  }
  std::vector<Poset> out;
  std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
  for (int i = 0; i < count; ++i) out.push_back(all[pick(rng)]);
  return out;
}

// An extension of the star table with random free cells, then with
// probability one half a single random cell overwritten.
std::vector<int> random_table(std::mt19937& rng, const Poset& p, const PartialTable& s) {
  auto n = static_cast<int>(p.size());
  std::uniform_int_distribution<int> value(0, n - 1);
  std::vector<int> cells(s.cells().begin(), s.cells().end());
  for (int& c : cells)
    if (c < 0) c = value(rng);
  if (rng() % 2) cells[std::uniform_int_distribution<std::size_t>(0, cells.size() - 1)(rng)] = value(rng);
  return cells;
}

}  // namespace

TEST(Properties, EspCheckAgreesWithStarComparison) {
  std::mt19937 rng(7);
  int positives = 0, negatives = 0;
  for (const Poset& p : sample_posets(rng, 3000)) {
    auto s = star_table(p);
    if (!s) continue;
    auto cells = random_table(rng, p, *s.table);
    bool expected = oracle::is_esp(oracle::Order(p), cells);
    EXPECT_EQ(check_system(p, TotalTable(p, cells), System::ESP).holds(), expected) << emit_instance(p);
    EXPECT_EQ(is_esp(p, TotalTable(p, cells)).holds, expected);
    (expected ? positives : negatives)++;
  }
  EXPECT_GT(positives, 100);
  EXPECT_GT(negatives, 100);
}

TEST(Properties, NatCheckAgreesWithNaturalRule) {
  std::mt19937 rng(11);
  int positives = 0;
  for (const Poset& p : sample_posets(rng, 3000)) {
    auto s = star_table(p);
    if (!s || !classify(p).is_sectionally_bounded) continue;
    auto natural = *oracle::natural(oracle::Order(p));
    auto cells = rng() % 3 == 0 ? natural : random_table(rng, p, *s.table);
    bool expected = cells == natural;
    EXPECT_EQ(check_system(p, TotalTable(p, cells), System::NAT).holds(), expected) << emit_instance(p);
    positives += expected;
  }
  EXPECT_GT(positives, 100);
}

TEST(Properties, JCheckAgreesWithNaiveAxioms) {
  std::mt19937 rng(13);
  int positives = 0, negatives = 0;
  for (const Poset& p : sample_posets(rng, 3000)) {
    auto s = star_table(p);
    std::vector<int> cells;
    if (s && rng() % 2) {
      cells = random_table(rng, p, *s.table);
    } else {
      auto rp = complement_table(p, Complement::rp);
      if (!rp.total()) continue;
      cells.assign(rp.table->cells().begin(), rp.table->cells().end());
      if (rng() % 2) cells[rng() % cells.size()] = static_cast<int>(rng() % p.size());
    }
    bool expected = oracle::satisfies_j(oracle::Order(p), cells);
    EXPECT_EQ(check_system(p, TotalTable(p, cells), System::J).holds(), expected) << emit_instance(p);
    (expected ? positives : negatives)++;
  }
  EXPECT_GT(positives, 50);
  EXPECT_GT(negatives, 50);
}

TEST(Properties, SpCheckAgreesWithBruteForceStar) {
  std::mt19937 rng(17);
  int positives = 0;
  for (const Poset& p : sample_posets(rng, 3000)) {
    auto s = star_table(p);
    if (!s) continue;
    std::vector<int> cells(s.table->cells().begin(), s.table->cells().end());
    if (rng() % 2) {
      std::vector<std::size_t> defined;
      for (std::size_t k = 0; k < cells.size(); ++k)
        if (cells[k] >= 0) defined.push_back(k);
      auto k = defined[rng() % defined.size()];
      auto x = static_cast<Element>(k / p.size()), y = static_cast<Element>(k % p.size());
      // stay inside [y) so the table is well formed
      std::vector<Element> up(p.up(y).begin(), p.up(y).end());
      cells[k] = up[rng() % up.size()];
      (void)x;
    }
    bool expected = cells == *oracle::sp_table(oracle::Order(p));
    EXPECT_EQ(check_system(p, PartialTable(p, cells), System::SP).holds(), expected) << emit_instance(p);
    positives += expected;
  }
  EXPECT_GT(positives, 100);
}

// Every table the column sweep produces passes the checker, and the sweep
// misses none: brute force over all completions, judged by the checker.
class SweepAgreesWithChecker : public ::testing::TestWithParam<System> {};

TEST_P(SweepAgreesWithChecker, OnSmallPosets) {
  System sys = GetParam();
  int compared = 0;
  for (int n = 1; n <= 4; ++n) {
    for_each_poset(n, Dedup::labeled, [&](const Poset& p) {
      auto s = star_table(p);
      if (!s) return true;
      auto shape = classify(p);
      if ((sys == System::ESPW || sys == System::NRMW) && !shape.is_lower_semilattice) return true;
      if (sys == System::JWV && !shape.is_upper_semilattice) return true;
      if (sys == System::JWV2 && !shape.is_lattice) return true;
      auto free = free_cells(p);
      if (std::pow(n, free) > 4000) return true;
      auto sel = selection_frink(p);
      const LocalSelection* selp = sys == System::NATI ? &sel : nullptr;
      std::vector<int> cells(s.table->cells().begin(), s.table->cells().end());
      std::vector<std::size_t> slots;
      for (std::size_t k = 0; k < cells.size(); ++k)
        if (cells[k] < 0) slots.push_back(k);
      std::size_t expected = 0;
      std::vector<int> digits(slots.size(), 0);
      for (;;) {
        for (std::size_t k = 0; k < slots.size(); ++k) cells[slots[k]] = digits[k];
        if (check_system(p, TotalTable(p, cells), sys, selp).holds()) ++expected;
        std::size_t k = 0;
        while (k < digits.size() && ++digits[k] == n) digits[k++] = 0;
        if (k == digits.size()) break;
      }
      std::size_t got = 0;
      for_each_extension(
          *s.table, sys,
          [&](const TotalTable& t) {
            ++got;
            EXPECT_TRUE(check_system(p, t, sys, selp).holds());
            return true;
          },
          selp);
      EXPECT_EQ(got, expected) << to_string(sys) << "\n" << emit_instance(p);
      ++compared;
      return !::testing::Test::HasFailure();
    });
  }
  EXPECT_GT(compared, 5);
}

INSTANTIATE_TEST_SUITE_P(Systems, SweepAgreesWithChecker,
                         ::testing::Values(System::ESP, System::ESPW, System::NAT, System::NATI, System::NRM,
                                           System::NRMW, System::J, System::JWV, System::JWV2),
                         [](const auto& info) { return std::string(to_string(info.param)); });

TEST(Properties, SuitesHoldOnConstructedExtensions) {
  for (int n = 1; n <= 5; ++n) {
    for_each_poset(n, Dedup::labeled, [&](const Poset& p) {
      auto s = star_table(p);
      if (!s) return true;
      auto shape = classify(p);
      if (shape.is_sectionally_bounded) {
        auto nat = natural_extension(*s.table);
        EXPECT_TRUE(verify_lemma_suite(p, nat, Suite::esp_prop).holds()) << emit_instance(p);
        EXPECT_TRUE(verify_lemma_suite(p, pure_extension(*s.table), Suite::esp_prop).holds()) << emit_instance(p);
      }
      auto normal = normal_extension(*s.table);
      if (normal.total()) EXPECT_TRUE(verify_lemma_suite(p, *normal.table, Suite::jext_prop).holds()) << emit_instance(p);
      for (const auto& sel : {selection_union(p), selection_frink(p)}) {
        auto inat = i_natural_extension(p, sel);
        if (!inat.total()) continue;
        EXPECT_TRUE(verify_lemma_suite(p, *inat.table, Suite::inat_prop, &sel).holds()) << emit_instance(p);
        EXPECT_TRUE(verify_lemma_suite(p, *inat.table, Suite::simpl_i, &sel).holds()) << emit_instance(p);
      }
      return !::testing::Test::HasFailure();
    });
  }
}

TEST(Properties, RandomTablesRoundTripThroughText) {
  std::mt19937 rng(23);
  for (const Poset& p : sample_posets(rng, 200)) {
    std::vector<int> cells(p.size() * p.size());
    for (int& c : cells) c = static_cast<int>(rng() % p.size());
    TotalTable t(p, cells);
    Document d = parse_document(emit_instance(p, "t", t));
    EXPECT_EQ(std::get<TotalTable>(d.table("t").table), t);
  }
}
