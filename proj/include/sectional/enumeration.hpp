#pragma once

// Exhaustive generation of small posets (labeled or one per isomorphism
// class), of the extensions of a star table satisfying an axiom system, and
// the sweeps that check theorems and search for counterexamples over them.

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "sectional/axioms.hpp"
#include "sectional/document.hpp"
#include "sectional/extensions.hpp"
#include "sectional/pseudocomplements.hpp"

namespace sectional {

enum class Dedup { labeled, up_to_iso };

/// Number of partial orders on n labeled points, n = 0..7.
inline constexpr std::array<std::uint64_t, 8> kLabeledPosetCounts{1, 1, 3, 19, 219, 4231, 130023, 6129859};
/// Number of partial orders on n points up to isomorphism, n = 0..8.
inline constexpr std::array<std::uint64_t, 9> kUnlabeledPosetCounts{1, 1, 2, 5, 16, 63, 318, 2045, 16999};

inline int max_enumeration_size(Dedup d) { return d == Dedup::labeled ? 7 : 8; }

inline std::uint64_t known_poset_count(int n, Dedup d) {
  return d == Dedup::labeled ? kLabeledPosetCounts.at(static_cast<std::size_t>(n))
                             : kUnlabeledPosetCounts.at(static_cast<std::size_t>(n));
}

/// Up-set rows: up[x] = {z : x <= z}.
using OrderRows = std::vector<Mask>;

// ---------------------------------------------------------------------------
// Canonical form.

/// A code equal for two orders exactly when they are isomorphic (n <= 8):
/// the largest strict-relation bit string over relabelings that keep the
/// elements sorted by (down-set size, up-set size).
inline std::uint64_t canonical_code(const OrderRows& up) {
  auto n = static_cast<int>(up.size());
  if (n > 8) throw Error(ErrorKind::SizeCap, "canonical codes are limited to 8 elements");
  std::vector<Mask> down(up.size(), 0);
  for (int x = 0; x < n; ++x)
    for (Element y : ElementSet(up[static_cast<std::size_t>(x)])) down[static_cast<std::size_t>(y)] |= bit(x);
  auto key = [&](int x) {
    return std::pair{std::popcount(down[static_cast<std::size_t>(x)]), std::popcount(up[static_cast<std::size_t>(x)])};
  };
  std::vector<int> order(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return key(a) < key(b); });
  std::vector<std::pair<int, int>> classes;  // [begin, end) runs of equal key
  for (int i = 0; i < n;) {
    int j = i;
    while (j < n && key(order[static_cast<std::size_t>(j)]) == key(order[static_cast<std::size_t>(i)])) ++j;
    classes.emplace_back(i, j);
    i = j;
  }
  std::uint64_t best = 0;
  bool have = false;
  auto evaluate = [&] {
    std::uint64_t code = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j) {
          code <<= 1;
          if (up[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] & bit(order[static_cast<std::size_t>(j)]))
            code |= 1;
        }
    if (!have || code > best) best = code;
    have = true;
  };
  std::function<void(std::size_t)> permute = [&](std::size_t c) {
    if (c == classes.size()) return evaluate();
    auto first = order.begin() + classes[c].first, last = order.begin() + classes[c].second;
    std::sort(first, last);
    do permute(c + 1);
    while (std::next_permutation(first, last));
  };
  permute(0);
  return best;
}

inline OrderRows order_rows(const Poset& p) {
  OrderRows up;
  for (Element x = 0; x < static_cast<Element>(p.size()); ++x) up.push_back(p.up(x).bits());
  return up;
}

inline bool isomorphic(const Poset& p, const Poset& q) {
  return p.size() == q.size() && canonical_code(order_rows(p)) == canonical_code(order_rows(q));
}

// ---------------------------------------------------------------------------
// Poset generation.

namespace detail {

inline std::vector<Mask> closed_sets(const OrderRows& up, bool downward) {
  auto k = static_cast<int>(up.size());
  std::vector<Mask> out;
  for (Mask s = 0; s < (Mask{1} << k); ++s) {
    bool ok = true;
    for (int x = 0; x < k && ok; ++x) {
      if (!(s & bit(x))) continue;
      if (downward) {
        for (int y = 0; y < k && ok; ++y)
          if ((up[static_cast<std::size_t>(y)] & bit(x)) && !(s & bit(y))) ok = false;
      } else if ((up[static_cast<std::size_t>(x)] & ~s) != 0) {
        ok = false;
      }
    }
    if (ok) out.push_back(s);
  }
  return out;
}

// Every order on k+1 points whose restriction to the first k points is `up`:
// the new point sits above the down-closed set D and below the up-closed set
// U, where every element of U lies above every element of D.
template <class Emit>
bool extend_by_one(const OrderRows& up, Emit&& emit) {
  auto k = static_cast<int>(up.size());
  auto downs = closed_sets(up, true);
  auto ups = closed_sets(up, false);
  OrderRows next(up);
  next.push_back(0);
  for (Mask d : downs) {
    Mask allowed = full_mask(static_cast<std::size_t>(k));
    for (Element x : ElementSet(d)) allowed &= up[static_cast<std::size_t>(x)];
    for (Mask u : ups) {
      if ((u & ~allowed) != 0 || (u & d) != 0) continue;
      for (int x = 0; x < k; ++x)
        next[static_cast<std::size_t>(x)] = up[static_cast<std::size_t>(x)] | ((d & bit(x)) ? bit(k) : 0);
      next[static_cast<std::size_t>(k)] = u | bit(k);
      if (!emit(static_cast<const OrderRows&>(next))) return false;
    }
  }
  return true;
}

template <class Visit>
bool labeled_from(OrderRows& up, int n, Visit& visit) {
  if (static_cast<int>(up.size()) == n) return visit(static_cast<const OrderRows&>(up));
  return extend_by_one(up, [&](const OrderRows& next) {
    OrderRows copy(next);
    return labeled_from(copy, n, visit);
  });
}

}  // namespace detail

/// Calls visit(rows) for every order on n points (labeled) or for one
/// representative per isomorphism class; visit returns false to stop.
/// Returns false when stopped early.
template <class Visit>
bool for_each_order(int n, Dedup dedup, Visit&& visit) {
  if (n < 1) throw Error(ErrorKind::EmptyPoset, "posets need at least one element");
  if (n > max_enumeration_size(dedup))
    throw Error(ErrorKind::SizeCap, std::to_string(n) + " elements exceed the enumeration cap of " +
                                        std::to_string(max_enumeration_size(dedup)));
  if (dedup == Dedup::labeled) {
    OrderRows up;
    return detail::labeled_from(up, n, visit);
  }
  std::vector<OrderRows> level{OrderRows{}};
  for (int k = 0; k < n; ++k) {
    std::vector<OrderRows> next;
    std::unordered_set<std::uint64_t> seen;
    for (const auto& rep : level)
      detail::extend_by_one(rep, [&](const OrderRows& cand) {
        if (seen.insert(canonical_code(cand)).second) next.push_back(cand);
        return true;
      });
    level = std::move(next);
  }
  for (const auto& rep : level)
    if (!visit(static_cast<const OrderRows&>(rep))) return false;
  return true;
}

inline Poset poset_from_rows(const OrderRows& up, std::string name) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < up.size(); ++i) labels.push_back("e" + std::to_string(i));
  return Poset::from_up_sets(std::move(name), std::move(labels), up);
}

/// Like for_each_order, with each order wrapped as a Poset named nN_K (K the
/// position in enumeration order) on elements e0 ... e(N-1).
template <class Visit>
bool for_each_poset(int n, Dedup dedup, Visit&& visit) {
  std::uint64_t index = 0;
  return for_each_order(n, dedup, [&](const OrderRows& up) {
    return visit(poset_from_rows(up, "n" + std::to_string(n) + "_" + std::to_string(index++)));
  });
}

inline std::vector<Poset> enumerate_posets(int n, Dedup dedup = Dedup::labeled) {
  std::vector<Poset> out;
  for_each_poset(n, dedup, [&](const Poset& p) {
    out.push_back(p);
    return true;
  });
  return out;
}

inline std::uint64_t count_posets(int n, Dedup dedup = Dedup::labeled) {
  std::uint64_t count = 0;
  for_each_order(n, dedup, [&](const OrderRows&) {
    ++count;
    return true;
  });
  return count;
}

// ---------------------------------------------------------------------------
// Extensions of a star table.

/// Budget on the number of cells an extension sweep may leave free; read from
/// SECTIONAL_FREE_CELLS, default 24.
inline std::size_t free_cell_budget() {
  if (const char* env = std::getenv("SECTIONAL_FREE_CELLS")) {
    char* end = nullptr;
    unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0') return v;
  }
  return 24;
}

/// Per column, the assignments of the cells (x, c) with c not below x that
/// together with the fixed star values satisfy the axioms.
inline ColumnFamily extension_columns(const PartialTable& s, std::span<const Axiom> axioms,
                                      const LocalSelection* sel = nullptr,
                                      MeetReading reading = MeetReading::existential) {
  const Poset& p = s.poset();
  OrderData order(p);
  auto n = static_cast<Element>(p.size());
  std::vector<int> cells(s.cells().begin(), s.cells().end());
  for (int& v : cells)
    if (v == kUndefinedCell) v = kUnassignedCell;
  ColumnSweep sweep(order, axioms, sel, reading);
  ColumnFamily family;
  family.columns.resize(p.size());
  for (Element c = 0; c < n; ++c) {
    std::vector<Element> rows;
    for (Element x = 0; x < n; ++x)
      if (!p.leq(c, x)) rows.push_back(x);
    auto& found = family.columns[static_cast<std::size_t>(c)];
    auto stats = sweep.run(cells, c, rows, [&](const std::vector<int>& t) {
      std::vector<int> col(p.size());
      for (Element x = 0; x < n; ++x) col[static_cast<std::size_t>(x)] = t[static_cast<std::size_t>(x * n + c)];
      found.push_back(std::move(col));
      return true;
    });
    family.instances += stats.nodes + 1;
  }
  return family;
}

/// Every total table built from one assignment per column, in lexicographic
/// order of the per-column choices. visit returns false to stop.
template <class Visit>
void for_each_table(const Poset& p, const ColumnFamily& family, Visit&& visit) {
  if (family.any_empty()) return;
  std::size_t n = p.size();
  std::vector<std::size_t> pick(n, 0);
  for (;;) {
    std::vector<int> cells(n * n);
    for (std::size_t c = 0; c < n; ++c)
      for (std::size_t x = 0; x < n; ++x) cells[x * n + c] = family.columns[c][pick[c]][x];
    if (!visit(TotalTable(p, std::move(cells)))) return;
    std::size_t c = n;
    while (c > 0) {
      --c;
      if (++pick[c] < family.columns[c].size()) break;
      pick[c] = 0;
      if (c == 0) return;
    }
  }
}

inline std::size_t free_cells(const Poset& p) {
  std::size_t count = 0;
  for (Element x = 0; x < static_cast<Element>(p.size()); ++x)
    for (Element y = 0; y < static_cast<Element>(p.size()); ++y)
      if (!p.leq(y, x)) ++count;
  return count;
}

/// Total tables extending s that satisfy an arrow-table system.
template <class Visit>
void for_each_extension(const PartialTable& s, System system, Visit&& visit, const LocalSelection* sel = nullptr,
                        MeetReading reading = MeetReading::existential, std::size_t budget = free_cell_budget()) {
  const Poset& p = s.poset();
  if (table_kind(system) != TableKind::total)
    throw Error(ErrorKind::StructureMismatch, std::string("system ") + to_string(system) + " is not an arrow system");
  require_applicable(p, system, sel);
  std::size_t free = free_cells(p);
  if (free > budget)
    throw Error(ErrorKind::SizeCap, std::to_string(free) + " free cells exceed the budget of " + std::to_string(budget));
  for_each_table(p, extension_columns(s, system_axioms(system), sel, reading), visit);
}

inline std::vector<TotalTable> enumerate_extensions(const PartialTable& s, System system,
                                                    const LocalSelection* sel = nullptr,
                                                    MeetReading reading = MeetReading::existential,
                                                    std::size_t budget = free_cell_budget()) {
  std::vector<TotalTable> out;
  for_each_extension(
      s, system,
      [&](TotalTable t) {
        out.push_back(std::move(t));
        return true;
      },
      sel, reading, budget);
  return out;
}

// ---------------------------------------------------------------------------
// Verification reports.

struct Counterexample {
  int n = 0;
  /// Position of the poset in enumeration order at size n.
  std::uint64_t index = 0;
  /// Replayable text: the poset and any table involved, in document format.
  std::string instance;
  std::string witness;
};

struct LevelStats {
  int n = 0;
  std::uint64_t posets_enumerated = 0;
  std::uint64_t posets_in_class = 0;
  std::uint64_t instances = 0;
  bool complete = false;
};

struct VariantOutcome {
  std::string name;
  bool verified = false;
  std::vector<LevelStats> levels;
  std::optional<Counterexample> counterexample;
};

struct VerificationReport {
  std::string id;
  int max_n = 0;
  Dedup dedup = Dedup::labeled;
  std::vector<LevelStats> levels;
  bool verified = false;
  std::optional<Counterexample> counterexample;
  /// Filled when the statement is checked under several hypotheses; the
  /// first variant is the literal statement and decides `verified`.
  std::vector<VariantOutcome> variants;
  double elapsed_seconds = 0;

  std::uint64_t posets_checked() const {
    std::uint64_t t = 0;
    for (const auto& l : levels) t += l.posets_in_class;
    return t;
  }
  std::uint64_t instances_checked() const {
    std::uint64_t t = 0;
    for (const auto& l : levels) t += l.instances;
    return t;
  }
};

/// What a checker reports for one poset.
struct Probe {
  bool in_class = false;
  std::uint64_t instances = 0;
  std::optional<std::string> instance;  // replayable text, set with a failure
  std::optional<std::string> failure;
};

using PosetChecker = std::function<void(const Poset&, Probe&)>;

struct NamedChecker {
  std::string name;
  PosetChecker check;
};

namespace detail {

inline VerificationReport run_checkers(std::string id, int max_n, Dedup dedup, const std::vector<NamedChecker>& checkers) {
  auto start = std::chrono::steady_clock::now();
  if (max_n < 1) throw Error(ErrorKind::SizeCap, "max-n must be at least 1");
  if (max_n > max_enumeration_size(dedup))
    throw Error(ErrorKind::SizeCap, "max-n " + std::to_string(max_n) + " exceeds the enumeration cap of " +
                                        std::to_string(max_enumeration_size(dedup)));
  std::vector<VariantOutcome> out(checkers.size());
  for (std::size_t i = 0; i < checkers.size(); ++i) out[i].name = checkers[i].name;
  auto open = [&] {
    for (const auto& v : out)
      if (!v.counterexample) return true;
    return false;
  };
  for (int n = 1; n <= max_n && open(); ++n) {
    std::uint64_t enumerated = 0;
    for (auto& v : out)
      if (!v.counterexample) v.levels.push_back({n, 0, 0, 0, false});
    bool finished = for_each_poset(n, dedup, [&](const Poset& p) {
      ++enumerated;
      for (std::size_t i = 0; i < checkers.size(); ++i) {
        auto& v = out[i];
        if (v.counterexample) continue;
        Probe probe;
        checkers[i].check(p, probe);
        auto& level = v.levels.back();
        ++level.posets_enumerated;
        if (probe.in_class) ++level.posets_in_class;
        level.instances += probe.instances;
        if (probe.failure)
          v.counterexample = Counterexample{n, enumerated - 1, probe.instance.value_or(emit_instance(p)), *probe.failure};
      }
      return open();
    });
    if (finished) {
      if (enumerated != known_poset_count(n, dedup))
        throw Error(ErrorKind::InternalDisagreement, "enumerated " + std::to_string(enumerated) + " posets of size " +
                                                         std::to_string(n) + ", expected " +
                                                         std::to_string(known_poset_count(n, dedup)));
      for (auto& v : out)
        if (!v.counterexample) v.levels.back().complete = true;
    }
  }
  for (auto& v : out) {
    v.verified = !v.counterexample && static_cast<int>(v.levels.size()) == max_n;
    for (const auto& l : v.levels) v.verified = v.verified && l.complete;
  }
  VerificationReport r;
  r.id = std::move(id);
  r.max_n = max_n;
  r.dedup = dedup;
  r.levels = out.front().levels;
  r.verified = out.front().verified;
  r.counterexample = out.front().counterexample;
  if (out.size() > 1) r.variants = std::move(out);
  r.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

inline std::string cell_text(const Poset& p, const char* op, Element x, Element y, int v) {
  return p.label(x) + " " + op + " " + p.label(y) + " = " + (v < 0 ? std::string("undefined") : p.label(v));
}

inline std::string instance_text(const Poset& p, std::initializer_list<std::pair<const char*, const TotalTable*>> tables,
                                 const PartialTable* star = nullptr) {
  Document d;
  d.add_poset(p);
  if (star) d.add_table("star", *star);
  for (auto [name, t] : tables)
    if (t) d.add_table(name, *t);
  return emit(d);
}

// One I-natural value, or -1 when the maximum does not exist.
inline int i_natural_cell(const Poset& p, const LocalSelection& sel, Element x, Element y) {
  ElementSet slice = sel.at(x, y) & p.up(y);
  ElementSet cand;
  for (Element u : p.all())
    if ((p.down(u) & slice) == ElementSet::single(y)) cand = cand.with(u);
  auto g = greatest(p, cand);
  return g ? *g : -1;
}

// Column-local statements used by the right-implicativity sweep.
inline bool right_implicative_cell(const AxiomContext& c, const Element* t) {
  int v = c.op(t[0], t[1]);
  return v >= 0 && c.leq(t[0], t[1]) == (v == c.top(t[1]));
}
inline bool left_implicative_cell(const AxiomContext& c, const Element* t) {
  int v = c.op(t[0], t[1]);
  return v >= 0 && c.leq(t[0], t[1]) == (v == c.top(t[0]));
}

// Compares a column family with a single expected table (or with "no table"
// when expected is empty). Returns a description of the first difference.
inline std::optional<std::string> family_matches(const Poset& p, const ColumnFamily& family,
                                                 const std::optional<TotalTable>& expected, const char* system) {
  auto n = static_cast<Element>(p.size());
  if (!expected) {
    if (family.any_empty()) return std::nullopt;
    return std::string("tables satisfying ") + system + " exist although none is expected";
  }
  for (Element c = 0; c < n; ++c) {
    const auto& cols = family.columns[static_cast<std::size_t>(c)];
    std::vector<int> want(p.size());
    for (Element x = 0; x < n; ++x) want[static_cast<std::size_t>(x)] = expected->at(x, c);
    if (cols.size() == 1 && cols.front() == want) continue;
    if (std::find(cols.begin(), cols.end(), want) == cols.end())
      return "column " + p.label(c) + " of the expected table violates " + system;
    return "column " + p.label(c) + " admits " + std::to_string(cols.size()) + " assignments under " + system;
  }
  return std::nullopt;
}

// A table built from one assignment per column; `prefer` picks an index per column.
template <class Prefer>
TotalTable assemble(const Poset& p, const ColumnFamily& family, Prefer&& prefer) {
  std::size_t n = p.size();
  std::vector<int> cells(n * n);
  for (std::size_t c = 0; c < n; ++c) {
    const auto& col = family.columns[c][prefer(c)];
    for (std::size_t x = 0; x < n; ++x) cells[x * n + c] = col[x];
  }
  return TotalTable(p, std::move(cells));
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Theorems.

inline const std::vector<std::string>& theorem_ids() {
  static const std::vector<std::string> ids{"T-SPCHAR",  "T-GLB",       "T-NAT-EQ",   "T-JEXT-FIN",   "T-NRM-IMPL",
                                            "T-NRM-AX",  "T-STR-NRM",   "T-NAT-IMPLIC", "T-J-EQ-NRM", "T-LAT-F-EQ-J",
                                            "T-ISO",     "T-MONO",      "T-RIGHT-IMPL"};
  return ids;
}

namespace detail::theorems {

using detail::cell_text;

inline void spchar(const Poset& p, Probe& pr) {
  pr.in_class = true;
  OrderData order(p);
  auto family = sweep_columns(order, TableKind::partial, system_axioms(System::SP));
  pr.instances = family.instances;
  auto star = star_table(p);
  auto n = static_cast<Element>(p.size());
  if (!star) {
    if (family.any_empty()) return;
    Document d;
    d.add_poset(p);
    std::vector<int> cells(p.size() * p.size(), kUndefinedCell);
    for (Element c = 0; c < n; ++c)
      for (Element x = 0; x < n; ++x)
        if (p.leq(c, x)) cells[static_cast<std::size_t>(x * n + c)] = family.columns[static_cast<std::size_t>(c)][0][static_cast<std::size_t>(x)];
    d.add_table("star", PartialTable(p, std::move(cells)));
    pr.instance = emit(d);
    pr.failure = "a star table satisfies sp1-sp3 on a poset without sp-complementation (" + describe(p, *star.missing) + ")";
    return;
  }
  for (Element c = 0; c < n; ++c) {
    const auto& cols = family.columns[static_cast<std::size_t>(c)];
    std::vector<int> want(p.size());
    for (Element x = 0; x < n; ++x) want[static_cast<std::size_t>(x)] = star.table->cell(x, c);
    if (cols.size() == 1 && cols.front() == want) continue;
    std::vector<int> cells(star.table->cells().begin(), star.table->cells().end());
    std::string why = "the sp table violates sp1-sp3 in column " + p.label(c);
    for (const auto& col : cols) {
      if (col == want) continue;
      for (Element x = 0; x < n; ++x) cells[static_cast<std::size_t>(x * n + c)] = col[static_cast<std::size_t>(x)];
      why = "column " + p.label(c) + " has a non-sp assignment satisfying sp1-sp3";
      break;
    }
    Document d;
    d.add_poset(p);
    d.add_table("star", PartialTable(p, std::move(cells)));
    pr.instance = emit(d);
    pr.failure = why;
    return;
  }
}

inline void glb(const Poset& p, Probe& pr) {
  pr.in_class = true;
  OrderData o(p);
  auto s = classify(p);
  bool semilattice = s.is_upper_semilattice.value || s.is_lower_semilattice.value;
  auto n = static_cast<Element>(p.size());
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      for (Element z = 0; z < n; ++z) {
        ++pr.instances;
        bool a = o.is_mlb(z, x, y);
        bool b = o.meet(x, y) == z;
        bool c = o.meet_over(x, y, z) == z;
        if (a != c || (semilattice && a != b)) {
          pr.failure = "at (" + p.label(x) + ", " + p.label(y) + ", " + p.label(z) + "): mlb " + (a ? "yes" : "no") +
                       ", glb " + (b ? "yes" : "no") + ", glb in [z) " + (c ? "yes" : "no");
          return;
        }
      }
}

inline void nat_eq(const Poset& p, Probe& pr) {
  auto s = classify(p);
  if (!s.is_sectionally_bounded) return;
  auto star = star_table(p);
  if (!star) return;
  pr.in_class = true;
  const PartialTable& t = *star.table;
  auto max_form = natural_max_form(p);
  auto n = static_cast<Element>(p.size());
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      ++pr.instances;
      int rule = p.leq(y, x) ? t.cell(x, y) : *section_top(p, y);
      int mx = max_form.table ? max_form.table->at(x, y) : -1;
      auto first = least(p, detail::column_values(t, segment(p, y, x).with(y), y));
      auto second = least(p, detail::column_values(t, (p.down(x) | p.down(y)) & p.up(y), y));
      int m1 = first ? *first : -1, m2 = second ? *second : -1;
      if (rule != mx || rule != m1 || rule != m2) {
        auto lbl = [&](int v) { return v < 0 ? std::string("undefined") : p.label(v); };
        pr.failure = "at (" + p.label(x) + ", " + p.label(y) + "): natural rule " + lbl(rule) + ", max-form " +
                     lbl(mx) + ", min-forms " + lbl(m1) + " / " + lbl(m2);
        return;
      }
    }
}

inline void jext_fin(const Poset& p, Probe& pr) {
  auto star = star_table(p);
  if (!star) return;
  pr.in_class = true;
  pr.instances = 1;
  auto normal = normal_extension(*star.table);
  auto upper = classify(p).is_upper_semilattice;
  if (normal.total() == upper.value) return;
  if (normal.total()) {
    auto [a, b] = *upper.witness;
    pr.failure = "normal extension is total but " + p.label(a) + " and " + p.label(b) + " have no join";
  } else {
    pr.failure = "upper semilattice but the normal extension has an " + describe(p, normal.undefined_pairs.front());
  }
}

inline void nrm_impl(const Poset& p, Probe& pr) {
  auto star = star_table(p);
  if (!star) return;
  auto normal = normal_extension(*star.table);
  if (!normal.table) return;
  pr.in_class = true;
  pr.instances = p.size() * p.size();
  if (!classify(p).is_sectionally_bounded) {
    pr.failure = "normal extension is total on a poset that is not sectionally bounded";
    return;
  }
  auto imp = implicativity(p, *normal.table);
  if (imp.left && imp.right) return;
  pr.instance = detail::instance_text(p, {{"normal", &*normal.table}});
  pr.failure = "normal extension is not implicative: " + (imp.left ? imp.right.detail : imp.left.detail);
}

// NRM tables on any poset are exactly the normal extension of its sp table.
inline void nrm_ax(const Poset& p, Probe& pr, bool greatest_instead_of_nrm0) {
  OrderData order(p);
  if (greatest_instead_of_nrm0 && order.greatest() < 0) return;
  pr.in_class = true;
  std::vector<Axiom> axioms(system_axioms(System::NRM).begin(), system_axioms(System::NRM).end());
  if (greatest_instead_of_nrm0) axioms.erase(axioms.begin());
  auto family = sweep_columns(order, TableKind::total, axioms);
  pr.instances = family.instances;
  std::optional<TotalTable> expected;
  auto star = star_table(p);
  if (star) expected = normal_extension(*star.table).table;
  auto diff = detail::family_matches(p, family, expected, greatest_instead_of_nrm0 ? "nrm1-nrm3" : "nrm0-nrm3");
  if (!diff) return;
  if (!family.any_empty()) {
    auto t = detail::assemble(p, family, [](std::size_t) { return std::size_t{0}; });
    pr.instance = detail::instance_text(p, {{"arrow", &t}});
  }
  pr.failure = *diff;
}

inline void str_nrm(const Poset& p, Probe& pr) {
  auto star = star_table(p);
  if (!star) return;
  pr.in_class = true;
  auto normal = normal_extension(*star.table);
  for (const auto& sel : {selection_union(p), selection_frink(p)}) {
    auto nat = i_natural_extension(p, sel);
    if (!nat.table || !is_strong(p, *nat.table)) continue;
    ++pr.instances;
    if (normal.table && *normal.table == *nat.table) continue;
    pr.instance = detail::instance_text(p, {{"inatural", &*nat.table}});
    pr.failure = "strong " + sel.name() + "-natural extension is not the normal extension";
    return;
  }
}

inline void nat_implic(const Poset& p, Probe& pr) {
  auto s = classify(p);
  if (!s.is_sectionally_bounded) return;
  auto star = star_table(p);
  if (!star) return;
  pr.in_class = true;
  pr.instances = 2;
  auto nat = natural_extension(*star.table);
  auto imp = implicativity(p, nat);
  if (imp.left.holds != s.all_lower_sections_chains.value) {
    pr.instance = detail::instance_text(p, {{"natural", &nat}});
    pr.failure = std::string("natural extension is ") + (imp.left.holds ? "" : "not ") +
                 "left implicative while lower sections are " + (s.all_lower_sections_chains ? "" : "not all ") +
                 "chains";
  } else if (imp.right.holds != s.is_chain.value) {
    pr.instance = detail::instance_text(p, {{"natural", &nat}});
    pr.failure = std::string("natural extension is ") + (imp.right.holds ? "" : "not ") +
                 "right implicative while the poset is " + (s.is_chain ? "" : "not ") + "a chain";
  }
}

inline void j_eq_nrm(const Poset& p, Probe& pr) {
  OrderData order(p);
  if (order.greatest() < 0 || !classify(p).is_lower_semilattice) return;
  pr.in_class = true;
  auto j = sweep_columns(order, TableKind::total, system_axioms(System::J));
  auto nrm = sweep_columns(order, TableKind::total, system_axioms(System::NRM));
  pr.instances = j.instances + nrm.instances;
  if (j.any_empty() && nrm.any_empty()) return;
  for (std::size_t c = 0; c < p.size(); ++c) {
    if (j.columns[c] == nrm.columns[c]) continue;
    pr.failure = "column " + p.label(static_cast<Element>(c)) + ": " + std::to_string(j.columns[c].size()) +
                 " assignments satisfy j1-j3, " + std::to_string(nrm.columns[c].size()) + " satisfy nrm0-nrm3";
    const ColumnFamily& nonempty = j.any_empty() ? nrm : j;
    if (!nonempty.any_empty()) {
      auto t = detail::assemble(p, nonempty, [](std::size_t) { return std::size_t{0}; });
      pr.instance = detail::instance_text(p, {{"arrow", &t}});
    }
    return;
  }
}

inline void lat_f_eq_j(const Poset& p, Probe& pr) {
  if (!classify(p).is_lattice) return;
  pr.in_class = true;
  OrderData order(p);
  auto family = sweep_columns(order, TableKind::total, system_axioms(System::JWV2));
  pr.instances = family.instances;
  auto fnat = i_natural_extension(p, selection_frink(p));
  if (fnat.table) {
    auto star = star_table(p);
    auto normal = star ? normal_extension(*star.table) : ExtensionResult{};
    if (!normal.table || !(*normal.table == *fnat.table)) {
      pr.instance = detail::instance_text(p, {{"fnatural", &*fnat.table}});
      pr.failure = "F-natural extension differs from the normal extension";
      return;
    }
  }
  if (auto diff = detail::family_matches(p, family, fnat.table, "jwv1, jwv2'")) {
    if (!family.any_empty()) {
      auto t = detail::assemble(p, family, [](std::size_t) { return std::size_t{0}; });
      pr.instance = detail::instance_text(p, {{"arrow", &t}});
    }
    pr.failure = *diff;
  }
}

// Union sections ⊆ Frink ideals, so a union-natural poset should be
// Frink-natural; `strong` adds the strongness hypothesis.
inline void iso(const Poset& p, Probe& pr, bool strong) {
  auto s = classify(p);
  if (!s.is_up_directed) return;
  auto star = star_table(p);
  if (!star) return;
  auto uni = i_natural_extension(p, selection_union(p));
  if (!uni.table) return;
  if (strong && !is_strong(p, *uni.table)) return;
  pr.in_class = true;
  pr.instances = 1;
  auto fr = i_natural_extension(p, selection_frink(p));
  if (fr.table && *fr.table == *uni.table) return;
  pr.instance = detail::instance_text(p, {{"unatural", &*uni.table}});
  if (!fr.table) {
    pr.failure = "union-natural extension exists but the Frink-natural one has an " + describe(p, fr.undefined_pairs.front());
    return;
  }
  auto n = static_cast<Element>(p.size());
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      if (uni.table->at(x, y) != fr.table->at(x, y)) {
        pr.failure = "union-natural " + cell_text(p, "->", x, y, uni.table->at(x, y)) + " but Frink-natural " +
                     cell_text(p, "->", x, y, fr.table->at(x, y));
        return;
      }
}

inline void mono(const Poset& p, Probe& pr) {
  pr.in_class = true;
  auto small = selection_union(p);
  auto large = selection_frink(p);
  auto n = static_cast<Element>(p.size());
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      int v = detail::i_natural_cell(p, small, x, y);
      int w = detail::i_natural_cell(p, large, x, y);
      if (v < 0 || w < 0) continue;
      ++pr.instances;
      if (!p.leq(w, v)) {
        pr.failure = "Frink-natural " + cell_text(p, "->", x, y, w) + " is not below union-natural " +
                     cell_text(p, "->", x, y, v);
        return;
      }
    }
}

inline void right_impl(const Poset& p, Probe& pr) {
  if (!classify(p).is_sectionally_bounded) return;
  auto star = star_table(p);
  if (!star) return;
  pr.in_class = true;
  static const std::vector<Axiom> hyp{{"right", 2, 1, detail::right_implicative_cell},
                                      {"nrm0", 2, 1, detail::ax::nrm0}};
  static const Axiom left{"left", 2, 1, detail::left_implicative_cell};
  auto family = extension_columns(*star.table, hyp);
  pr.instances = family.instances;
  if (family.any_empty()) return;
  OrderData order(p);
  auto n = static_cast<Element>(p.size());
  for (Element c = 0; c < n; ++c) {
    const auto& cols = family.columns[static_cast<std::size_t>(c)];
    for (std::size_t k = 0; k < cols.size(); ++k) {
      auto t = detail::assemble(p, family, [&](std::size_t col) { return col == static_cast<std::size_t>(c) ? k : 0; });
      AxiomContext ctx{&order, t.cells()};
      for (Element x = 0; x < n; ++x) {
        Element tuple[2]{x, c};
        if (left.holds(ctx, tuple)) continue;
        pr.instance = detail::instance_text(p, {{"arrow", &t}});
        pr.failure = "right implicative with y <= x -> y, but " + cell_text(p, "->", x, c, t.at(x, c)) +
                     " breaks left implicativity";
        return;
      }
    }
  }
}

}  // namespace detail::theorems

inline std::vector<NamedChecker> theorem_checkers(std::string_view id) {
  namespace t = detail::theorems;
  if (id == "T-SPCHAR") return {{"sp1-sp3 tables are the sp table", t::spchar}};
  if (id == "T-GLB") return {{"mlb, glb and glb in [z) agree", t::glb}};
  if (id == "T-NAT-EQ") return {{"natural rule = max-form = min-forms", t::nat_eq}};
  if (id == "T-JEXT-FIN") return {{"normal extension total iff upper semilattice", t::jext_fin}};
  if (id == "T-NRM-IMPL") return {{"normal extension is implicative", t::nrm_impl}};
  if (id == "T-NRM-AX")
    return {{"nrm0-nrm3 tables are the normal extension", [](const Poset& p, Probe& pr) { t::nrm_ax(p, pr, false); }},
            {"greatest element with nrm1-nrm3", [](const Poset& p, Probe& pr) { t::nrm_ax(p, pr, true); }}};
  if (id == "T-STR-NRM") return {{"strong I-natural is normal (union, frink)", t::str_nrm}};
  if (id == "T-NAT-IMPLIC") return {{"natural implicativity by shape", t::nat_implic}};
  if (id == "T-J-EQ-NRM") return {{"j1-j3 = nrm0-nrm3 on lower semilattices with 1", t::j_eq_nrm}};
  if (id == "T-LAT-F-EQ-J") return {{"F-natural = normal = unique jwv1, jwv2' table", t::lat_f_eq_j}};
  if (id == "T-ISO")
    return {{"up-directed", [](const Poset& p, Probe& pr) { t::iso(p, pr, false); }},
            {"up-directed and strong", [](const Poset& p, Probe& pr) { t::iso(p, pr, true); }}};
  if (id == "T-MONO") return {{"union-natural >= Frink-natural", t::mono}};
  if (id == "T-RIGHT-IMPL") return {{"right implicative with nrm0 is implicative", t::right_impl}};
  throw Error(ErrorKind::UnknownTheorem, "unknown theorem '" + std::string(id) + "'");
}

inline VerificationReport verify_theorem(std::string_view id, int max_n, Dedup dedup = Dedup::labeled) {
  return detail::run_checkers(std::string(id), max_n, dedup, theorem_checkers(id));
}

// ---------------------------------------------------------------------------
// Counterexample search.

namespace detail::hunts {

// Arrow posets with a greatest element satisfying j1-j3 that are not ESP.
inline void j_esp(const Poset& p, Probe& pr) {
  OrderData order(p);
  if (order.greatest() < 0) return;
  pr.in_class = true;
  auto family = sweep_columns(order, TableKind::total, system_axioms(System::J));
  pr.instances = family.instances;
  if (family.any_empty()) return;
  auto star = star_table(p);
  auto n = static_cast<Element>(p.size());
  // Per column, the first assignment that disagrees with * on [c), if any.
  std::vector<std::size_t> pick(p.size(), 0);
  bool bad = !star;
  for (Element c = 0; c < n && star; ++c) {
    const auto& cols = family.columns[static_cast<std::size_t>(c)];
    for (std::size_t k = 0; k < cols.size(); ++k) {
      bool differs = false;
      for (Element x = 0; x < n; ++x)
        if (p.leq(c, x) && cols[k][static_cast<std::size_t>(x)] != star.table->cell(x, c)) differs = true;
      if (differs) {
        pick[static_cast<std::size_t>(c)] = k;
        bad = true;
        break;
      }
    }
  }
  if (!bad) return;
  auto t = detail::assemble(p, family, [&](std::size_t c) { return pick[c]; });
  pr.instance = detail::instance_text(p, {{"arrow", &t}});
  auto esp = is_esp(p, t);
  pr.failure = "satisfies j1-j3 but is not an esp-complementation: " + esp.detail;
}

inline void clp_esp(const Poset& p, Probe& pr) {
  auto clp = complement_table(p, Complement::clp);
  if (!clp.table) return;
  pr.in_class = true;
  pr.instances = 1;
  auto esp = is_esp(p, *clp.table);
  if (esp) return;
  pr.instance = detail::instance_text(p, {{"clp", &*clp.table}});
  pr.failure = "CLP table is not an esp-complementation: " + esp.detail;
}

// ESP tables on posets with a greatest element that break j1-j3.
inline void esp_j(const Poset& p, Probe& pr) {
  OrderData order(p);
  if (order.greatest() < 0) return;
  auto star = star_table(p);
  if (!star) return;
  pr.in_class = true;
  auto n = static_cast<Element>(p.size());
  std::vector<int> base(star.table->cells().begin(), star.table->cells().end());
  for (int& v : base)
    if (v == kUndefinedCell) v = 0;
  std::vector<int> cells = base;
  for (Element c = 0; c < n; ++c) {
    std::vector<Element> rows;
    for (Element x = 0; x < n; ++x)
      if (!p.leq(c, x)) rows.push_back(x);
    std::vector<int> digits(rows.size(), 0);
    for (;;) {
      for (std::size_t i = 0; i < rows.size(); ++i) cells[static_cast<std::size_t>(rows[i] * n + c)] = digits[i];
      AxiomContext ctx{&order, cells};
      for (const Axiom& a : system_axioms(System::J)) {
        std::array<Element, 4> t{};
        do {
          if (t[static_cast<std::size_t>(a.column_slot)] != c) continue;
          ++pr.instances;
          if (a.holds(ctx, t.data())) continue;
          TotalTable table(p, cells);
          pr.instance = detail::instance_text(p, {{"arrow", &table}});
          pr.failure = std::string("ESP table violates ") + a.id + " at " +
                       format_tuple(p, std::span<const Element>(t.data(), static_cast<std::size_t>(a.arity)));
          return;
        } while (detail::next_tuple(t, a.arity, n));
      }
      std::size_t i = digits.size();
      while (i > 0 && ++digits[i - 1] == n) digits[--i] = 0;
      if (i == 0) break;
    }
    for (Element r : rows) cells[static_cast<std::size_t>(r * n + c)] = base[static_cast<std::size_t>(r * n + c)];
  }
}

inline void sp_sp(const Poset& p, Probe& pr) {
  auto star = star_table(p);
  if (!star) return;
  pr.in_class = true;
  pr.instances = 1;
  auto r = check_system(p, *star.table, System::SP);
  if (r.holds()) return;
  pr.failure = "sp table violates " + r.violations.front().axiom;
}

}  // namespace detail::hunts

inline std::string normalize_predicate(std::string_view id) {
  std::string s;
  for (std::size_t i = 0; i < id.size(); ++i) {
    if (id.substr(i, 3) == "⇒") {
      s += "=>";
      i += 2;
    } else if (id[i] != ' ') {
      s += static_cast<char>(std::toupper(static_cast<unsigned char>(id[i])));
    }
  }
  if (s.starts_with("J-AXIOMS")) s = "J" + s.substr(8);
  return s;
}

inline const std::vector<std::string>& predicate_ids() {
  static const std::vector<std::string> ids{"J⇒ESP", "CLP⇒ESP", "ESP⇒J", "sp⇒sp"};
  return ids;
}

inline VerificationReport find_counterexample(std::string_view predicate, int max_n, Dedup dedup = Dedup::labeled) {
  namespace h = detail::hunts;
  std::string id = normalize_predicate(predicate);
  PosetChecker check;
  if (id == "J=>ESP") check = h::j_esp;
  else if (id == "CLP=>ESP") check = h::clp_esp;
  else if (id == "ESP=>J") check = h::esp_j;
  else if (id == "SP=>SP") check = h::sp_sp;
  else throw Error(ErrorKind::UnknownPredicate, "unknown predicate '" + std::string(predicate) + "'");
  return detail::run_checkers(std::string(predicate), max_n, dedup, {{id, check}});
}

}  // namespace sectional
