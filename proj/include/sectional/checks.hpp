#pragma once

// Machinery shared by the axiom systems and property suites: per-poset lookup
// tables, axioms as tuple predicates, exhaustive sweeps that record the first
// failing tuple, and a backtracking sweep that enumerates every column of an
// operation table satisfying a set of axioms.

#include <array>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sectional/poset.hpp"
#include "sectional/selection.hpp"
#include "sectional/tables.hpp"

namespace sectional {

/// Cell marker used while a sweep has not yet assigned a cell.
inline constexpr int kUnassignedCell = -2;

/// How partial meets inside identities are read: "both sides defined and
/// equal" (existential), "if both sides are defined they are equal"
/// (conditional), or "if one side is defined so is the other, and they are
/// equal" (one_sided).
enum class MeetReading { existential, conditional, one_sided };

/// Dense lookup tables for one poset. Every accessor tolerates negative
/// arguments (undefined values) and answers false / -1 for them.
class OrderData {
 public:
  explicit OrderData(Poset p) : poset_(std::move(p)), n_(static_cast<int>(poset_.size())) {
    auto n = static_cast<std::size_t>(n_);
    up_.resize(n);
    down_.resize(n);
    for (Element x = 0; x < n_; ++x) {
      up_[static_cast<std::size_t>(x)] = poset_.up(x).bits();
      down_[static_cast<std::size_t>(x)] = poset_.down(x).bits();
    }
    meet_.assign(n * n, -1);
    join_.assign(n * n, -1);
    mlb_.assign(n * n, 0);
    for (Element x = 0; x < n_; ++x) {
      for (Element y = 0; y < n_; ++y) {
        auto i = static_cast<std::size_t>(x * n_ + y);
        if (auto m = sectional::meet(poset_, x, y)) meet_[i] = *m;
        if (auto j = sectional::join(poset_, x, y)) join_[i] = *j;
        mlb_[i] = sectional::maximal_lower_bounds(poset_, x, y).bits();
      }
    }
    top_.assign(n, -1);
    for (Element x = 0; x < n_; ++x)
      if (auto t = sectional::greatest(poset_, poset_.up(x))) top_[static_cast<std::size_t>(x)] = *t;
    if (auto g = sectional::greatest(poset_, poset_.all())) greatest_ = *g;
  }

  const Poset& poset() const { return poset_; }
  int size() const { return n_; }

  bool leq(int a, int b) const { return a >= 0 && b >= 0 && ((up_[static_cast<std::size_t>(a)] >> b) & 1U) != 0; }
  Mask up(int a) const { return up_[static_cast<std::size_t>(a)]; }
  Mask down(int a) const { return down_[static_cast<std::size_t>(a)]; }
  int meet(int a, int b) const { return a < 0 || b < 0 ? -1 : meet_[static_cast<std::size_t>(a * n_ + b)]; }
  int join(int a, int b) const { return a < 0 || b < 0 ? -1 : join_[static_cast<std::size_t>(a * n_ + b)]; }
  Mask maximal_lower_bounds(int a, int b) const { return mlb_[static_cast<std::size_t>(a * n_ + b)]; }
  bool is_mlb(int z, int x, int y) const {
    return z >= 0 && x >= 0 && y >= 0 && ((mlb_[static_cast<std::size_t>(x * n_ + y)] >> z) & 1U) != 0;
  }
  /// 1_x, the greatest element of [x); -1 when absent.
  int top(int x) const { return x < 0 ? -1 : top_[static_cast<std::size_t>(x)]; }
  int greatest() const { return greatest_; }

  Mask segment(int a, int b) const { return up_[static_cast<std::size_t>(a)] & down_[static_cast<std::size_t>(b)]; }
  bool disjoint_over(int x, int y, int base) const {
    if (x < 0 || y < 0 || base < 0) return false;
    return (segment(base, x) & segment(base, y) & ~bit(base)) == 0;
  }
  /// x ∧_base y when it exists, else -1.
  int meet_over(int x, int y, int base) const {
    if (x < 0 || y < 0 || base < 0) return -1;
    Mask common = segment(base, x) & segment(base, y);
    for (Element z : ElementSet(common))
      if (segment(base, z) == common) return z;
    return -1;
  }

 private:
  Poset poset_;
  int n_;
  std::vector<Mask> up_, down_;
  std::vector<int> meet_, join_;
  std::vector<Mask> mlb_;
  std::vector<int> top_;
  int greatest_ = -1;
};

/// What an axiom predicate sees: the order, the operation cells (row-major,
/// kUndefinedCell outside a partial domain, kUnassignedCell during sweeps),
/// an optional selection and the meet reading.
struct AxiomContext {
  const OrderData* order = nullptr;
  std::span<const int> cells;
  const LocalSelection* selection = nullptr;
  MeetReading reading = MeetReading::existential;
  mutable bool incomplete = false;

  int n() const { return order->size(); }

  /// Value of x ∘ y, or -1 when undefined. Reading an unassigned cell flags
  /// the evaluation as incomplete.
  int op(int x, int y) const {
    if (x < 0 || y < 0) return -1;
    int v = cells[static_cast<std::size_t>(x * n() + y)];
    if (v == kUnassignedCell) {
      incomplete = true;
      return -1;
    }
    return v;
  }

  bool leq(int a, int b) const { return order->leq(a, b); }
  int meet(int a, int b) const { return order->meet(a, b); }
  int join(int a, int b) const { return order->join(a, b); }
  int top(int x) const { return order->top(x); }
  Mask select(int x, int y) const { return selection->at(x, y).bits(); }
};

using AxiomPredicate = bool (*)(const AxiomContext&, const Element*);

/// A universally quantified statement over `arity` element variables. All
/// operation values it reads lie in the column named by variable
/// `column_slot`; -1 marks statements that read several columns.
struct Axiom {
  const char* id;
  int arity;
  int column_slot;
  AxiomPredicate holds;
};

struct Violation {
  std::string axiom;
  std::vector<Element> witness;
};

/// Result of checking an axiom system or a property suite.
struct Report {
  std::string name;
  std::vector<std::string> checked;
  /// Items not evaluated, with the unmet hypothesis.
  std::vector<std::pair<std::string, std::string>> skipped;
  std::vector<Violation> violations;

  bool holds() const { return violations.empty(); }
  const Violation* find(std::string_view axiom) const {
    for (const auto& v : violations)
      if (v.axiom == axiom) return &v;
    return nullptr;
  }
};

using AxiomReport = Report;
using PropertyReport = Report;

namespace detail {

// Advances a tuple in lexicographic order; false once exhausted.
inline bool next_tuple(std::array<Element, 4>& t, int arity, int n) {
  for (int i = arity - 1; i >= 0; --i) {
    if (++t[static_cast<std::size_t>(i)] < n) return true;
    t[static_cast<std::size_t>(i)] = 0;
  }
  return false;
}

}  // namespace detail

/// First failing tuple of one axiom in lexicographic declaration order.
inline std::optional<std::vector<Element>> first_failure(const AxiomContext& ctx, const Axiom& axiom) {
  std::array<Element, 4> t{};
  do {
    ctx.incomplete = false;
    if (!axiom.holds(ctx, t.data()))
      return std::vector<Element>(t.begin(), t.begin() + axiom.arity);
  } while (detail::next_tuple(t, axiom.arity, ctx.n()));
  return std::nullopt;
}

/// Sweeps every axiom over all tuples; one violation (the first) per axiom.
inline Report run_axioms(std::string name, const AxiomContext& ctx, std::span<const Axiom> axioms) {
  Report r;
  r.name = std::move(name);
  for (const Axiom& a : axioms) {
    r.checked.emplace_back(a.id);
    if (auto w = first_failure(ctx, a)) r.violations.push_back({a.id, std::move(*w)});
  }
  return r;
}

/// Re-evaluates an axiom at a recorded witness.
inline bool replay(const AxiomContext& ctx, const Axiom& axiom, std::span<const Element> witness) {
  std::array<Element, 4> t{};
  for (std::size_t i = 0; i < witness.size() && i < t.size(); ++i) t[i] = witness[i];
  return axiom.holds(ctx, t.data());
}

inline std::string format_tuple(const Poset& p, std::span<const Element> t) {
  std::string s = "(";
  for (std::size_t i = 0; i < t.size(); ++i) s += (i ? ", " : "") + p.label(t[i]);
  return s + ")";
}

// ---------------------------------------------------------------------------
// Column sweeps.

struct SweepStats {
  std::uint64_t nodes = 0;
  std::uint64_t leaves = 0;
};

/// Enumerates every assignment of one operation column that satisfies a set
/// of column-local axioms, pruning as soon as a fully evaluable instance fails.
class ColumnSweep {
 public:
  ColumnSweep(const OrderData& order, std::span<const Axiom> axioms, const LocalSelection* selection = nullptr,
              MeetReading reading = MeetReading::existential)
      : order_(order), axioms_(axioms), selection_(selection), reading_(reading) {
    for (const Axiom& a : axioms_)
      if (a.column_slot < 0) throw Error(ErrorKind::InternalDisagreement, std::string("axiom ") + a.id + " is not column-local");
  }

  /// `cells` holds the whole table; the cells (row, column) for row in `rows`
  /// are assigned in turn and restored to kUnassignedCell afterwards.
  /// `visit(cells)` is called for each satisfying assignment and returns
  /// false to stop the sweep.
  template <class Visit>
  SweepStats run(std::vector<int>& cells, Element column, std::span<const Element> rows, Visit&& visit) {
    SweepStats stats;
    AxiomContext ctx{&order_, cells, selection_, reading_};
    std::vector<Instance> pending;
    collect(column, pending);
    std::vector<Instance> root;
    for (const Instance& inst : pending) {
      ctx.incomplete = false;
      bool ok = inst.axiom->holds(ctx, inst.t.data());
      if (ctx.incomplete) root.push_back(inst);
      else if (!ok) return stats;
    }
    std::vector<std::vector<Instance>> levels(rows.size() + 1);
    levels[0] = std::move(root);
    bool stop = false;
    descend(ctx, cells, column, rows, 0, levels, stats, stop, visit);
    return stats;
  }

 private:
  struct Instance {
    const Axiom* axiom;
    std::array<Element, 4> t;
  };

  void collect(Element column, std::vector<Instance>& out) const {
    int n = order_.size();
    for (const Axiom& a : axioms_) {
      std::array<Element, 4> t{};
      do {
        if (t[static_cast<std::size_t>(a.column_slot)] != column) continue;
        out.push_back({&a, t});
      } while (detail::next_tuple(t, a.arity, n));
    }
  }

  template <class Visit>
  void descend(AxiomContext& ctx, std::vector<int>& cells, Element column, std::span<const Element> rows,
               std::size_t depth, std::vector<std::vector<Instance>>& levels, SweepStats& stats, bool& stop,
               Visit& visit) {
    int n = order_.size();
    if (depth == rows.size()) {
      ++stats.leaves;
      if (!levels[depth].empty())
        throw Error(ErrorKind::InternalDisagreement,
                    std::string("axiom ") + levels[depth].front().axiom->id + " reads outside its column");
      if (!visit(static_cast<const std::vector<int>&>(cells))) stop = true;
      return;
    }
    auto cell = static_cast<std::size_t>(rows[depth] * n + column);
    for (int v = 0; v < n && !stop; ++v) {
      ++stats.nodes;
      cells[cell] = v;
      auto& next = levels[depth + 1];
      next.clear();
      bool ok = true;
      for (const Instance& inst : levels[depth]) {
        ctx.incomplete = false;
        bool holds = inst.axiom->holds(ctx, inst.t.data());
        if (ctx.incomplete) next.push_back(inst);
        else if (!holds) {
          ok = false;
          break;
        }
      }
      if (ok) descend(ctx, cells, column, rows, depth + 1, levels, stats, stop, visit);
    }
    cells[cell] = kUnassignedCell;
  }

  const OrderData& order_;
  std::span<const Axiom> axioms_;
  const LocalSelection* selection_;
  MeetReading reading_;
};

enum class TableKind { partial, total };

/// Per column, every assignment satisfying the axioms. Since every axiom is
/// column-local, the satisfying tables are exactly the products of one
/// assignment per column.
struct ColumnFamily {
  /// columns[c][k][row] is the value at (row, c) in the k-th assignment.
  std::vector<std::vector<std::vector<int>>> columns;
  std::uint64_t instances = 0;

  bool any_empty() const {
    for (const auto& c : columns)
      if (c.empty()) return true;
    return false;
  }

  /// Number of satisfying tables, saturating at the max of uint64.
  std::uint64_t table_count() const {
    std::uint64_t total = 1;
    for (const auto& c : columns) {
      if (c.empty()) return 0;
      if (total > std::numeric_limits<std::uint64_t>::max() / c.size()) return std::numeric_limits<std::uint64_t>::max();
      total *= c.size();
    }
    return total;
  }
};

/// Rows swept in column c: the section [c) for star operations, all rows for
/// arrow operations.
inline std::vector<Element> sweep_rows(const OrderData& order, TableKind kind, Element column) {
  std::vector<Element> rows;
  for (Element x = 0; x < order.size(); ++x)
    if (kind == TableKind::total || order.leq(column, x)) rows.push_back(x);
  return rows;
}

inline std::vector<int> blank_cells(const OrderData& order, TableKind kind) {
  auto n = order.size();
  std::vector<int> cells(static_cast<std::size_t>(n * n), kUnassignedCell);
  if (kind == TableKind::partial)
    for (Element x = 0; x < n; ++x)
      for (Element y = 0; y < n; ++y)
        if (!order.leq(y, x)) cells[static_cast<std::size_t>(x * n + y)] = kUndefinedCell;
  return cells;
}

inline ColumnFamily sweep_columns(const OrderData& order, TableKind kind, std::span<const Axiom> axioms,
                                  const LocalSelection* selection = nullptr,
                                  MeetReading reading = MeetReading::existential,
                                  std::size_t limit_per_column = std::numeric_limits<std::size_t>::max()) {
  ColumnFamily family;
  auto n = order.size();
  family.columns.resize(static_cast<std::size_t>(n));
  std::vector<int> cells = blank_cells(order, kind);
  ColumnSweep sweep(order, axioms, selection, reading);
  for (Element c = 0; c < n; ++c) {
    auto rows = sweep_rows(order, kind, c);
    auto& found = family.columns[static_cast<std::size_t>(c)];
    auto stats = sweep.run(cells, c, rows, [&](const std::vector<int>& t) {
      if (found.size() >= limit_per_column)
        throw Error(ErrorKind::SizeCap, "more than " + std::to_string(limit_per_column) + " satisfying columns");
      std::vector<int> col(static_cast<std::size_t>(n));
      for (Element x = 0; x < n; ++x) col[static_cast<std::size_t>(x)] = t[static_cast<std::size_t>(x * n + c)];
      found.push_back(std::move(col));
      return true;
    });
    family.instances += stats.nodes + 1;
  }
  return family;
}

}  // namespace sectional
