#pragma once

// Rules that extend a star table to a total arrow table. Rules built on a
// maximum or minimum report the pairs where it fails instead of throwing.

#include <optional>
#include <string>
#include <vector>

#include "sectional/pseudocomplements.hpp"
#include "sectional/selection.hpp"

namespace sectional {

namespace detail {

inline Element require_top(const Poset& p, Element x) {
  auto t = greatest(p, p.up(x));
  if (!t) throw Error(ErrorKind::NotSectionallyBounded, "the section [" + p.label(x) + ") has no greatest element");
  return *t;
}

inline std::vector<int> copy_cells(const PartialTable& s) { return {s.cells().begin(), s.cells().end()}; }

inline std::string pair_text(const Poset& p, Element x, Element y) {
  return "(" + p.label(x) + ", " + p.label(y) + ")";
}

// Values of s over a set of first arguments, all of which lie in [y).
inline ElementSet column_values(const PartialTable& s, ElementSet zs, Element y) {
  ElementSet out;
  for (Element z : zs) out = out.with(s.cell(z, y));
  return out;
}

}  // namespace detail

/// x→y = x*y if y <= x; 1_x if x < y; y otherwise.
inline TotalTable pure_extension(const PartialTable& s) {
  const Poset& p = s.poset();
  auto n = static_cast<Element>(p.size());
  std::vector<int> cells = detail::copy_cells(s);
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      if (!p.leq(y, x)) cells[static_cast<std::size_t>(x * n + y)] = p.lt(x, y) ? detail::require_top(p, x) : y;
  return TotalTable(p, std::move(cells));
}

/// x→y = max{u >= y : u ⊥_y x} when that maximum exists for every pair.
inline ExtensionResult natural_max_form(const Poset& p) {
  auto n = static_cast<Element>(p.size());
  detail::ResultBuilder b(p);
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      ElementSet cand;
      for (Element u : p.up(y))
        if (disjoint_over(p, u, x, y)) cand = cand.with(u);
      b.take_greatest(x, y, cand);
    }
  }
  return std::move(b).finish();
}

/// x→y = x*y if y <= x, else 1_y. When s is the sp table of its poset the
/// result is compared with the max-form; a difference is an internal error.
inline TotalTable natural_extension(const PartialTable& s) {
  const Poset& p = s.poset();
  auto n = static_cast<Element>(p.size());
  std::vector<int> cells = detail::copy_cells(s);
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      if (!p.leq(y, x)) cells[static_cast<std::size_t>(x * n + y)] = detail::require_top(p, y);
  TotalTable t(p, std::move(cells));
  if (is_sp_table(s)) {
    auto max_form = natural_max_form(p);
    if (!max_form.table || !(*max_form.table == t))
      throw Error(ErrorKind::InternalDisagreement, "natural extension differs from its max-form");
  }
  return t;
}

/// x→y = min{z*y : z ∈ [y,x] ∪ {y}}, checked against
/// min{z*y : z ∈ ((x] ∪ (y]) ∩ [y)} and against the natural rule.
inline TotalTable natural_min_form(const PartialTable& s) {
  const Poset& p = s.poset();
  auto n = static_cast<Element>(p.size());
  std::vector<int> cells(p.size() * p.size(), kUndefinedCell);
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      ElementSet first = detail::column_values(s, segment(p, y, x).with(y), y);
      ElementSet second = detail::column_values(s, (p.down(x) | p.down(y)) & p.up(y), y);
      auto a = least(p, first);
      auto b = least(p, second);
      if (!a || !b || *a != *b)
        throw Error(ErrorKind::InternalDisagreement, "the two min-forms disagree at " + detail::pair_text(p, x, y));
      cells[static_cast<std::size_t>(x * n + y)] = *a;
    }
  }
  TotalTable t(p, std::move(cells));
  if (!(t == natural_extension(s)))
    throw Error(ErrorKind::InternalDisagreement, "min-form differs from the natural extension");
  return t;
}

/// x→y = max{z*y : x, y <= z}.
inline ExtensionResult normal_extension(const PartialTable& s) {
  const Poset& p = s.poset();
  auto n = static_cast<Element>(p.size());
  detail::ResultBuilder b(p);
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) b.take_greatest(x, y, detail::column_values(s, p.up(x) & p.up(y), y));
  return std::move(b).finish();
}

/// x→y = max{u : (u] ∩ I(x,y) ∩ [y) = {y}}.
inline ExtensionResult i_natural_extension(const Poset& p, const LocalSelection& sel) {
  if (!sel.poset().same_order(p)) throw Error(ErrorKind::InvalidTable, "selection is over a different poset");
  auto n = static_cast<Element>(p.size());
  detail::ResultBuilder b(p);
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      ElementSet slice = sel.at(x, y) & p.up(y);
      ElementSet cand;
      for (Element u : p.all())
        if ((p.down(u) & slice) == ElementSet::single(y)) cand = cand.with(u);
      b.take_greatest(x, y, cand);
    }
  }
  return std::move(b).finish();
}

/// x→y = min{z*y : z ∈ I(x,y) ∩ [y)}.
inline ExtensionResult i_min_extension(const PartialTable& s, const LocalSelection& sel) {
  const Poset& p = s.poset();
  if (!sel.poset().same_order(p)) throw Error(ErrorKind::InvalidTable, "selection is over a different poset");
  auto n = static_cast<Element>(p.size());
  detail::ResultBuilder b(p);
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) b.take_least(x, y, detail::column_values(s, sel.at(x, y) & p.up(y), y));
  return std::move(b).finish();
}

/// x→y = min{z*y : [x) ∩ [y) ⊆ [z) ⊆ [y)}, compared with the Frink min-rule.
inline ExtensionResult dual_j_extension(const PartialTable& s) {
  const Poset& p = s.poset();
  auto n = static_cast<Element>(p.size());
  detail::ResultBuilder b(p);
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      ElementSet common = p.up(x) & p.up(y);
      ElementSet zs;
      for (Element z : p.up(y))
        if (common.subset_of(p.up(z))) zs = zs.with(z);
      b.take_least(x, y, detail::column_values(s, zs, y));
    }
  }
  auto r = std::move(b).finish();
  auto frink = i_min_extension(s, selection_frink(p));
  bool same = r.total() == frink.total() && (!r.total() || *r.table == *frink.table);
  if (!same) throw Error(ErrorKind::InternalDisagreement, "dual-join rule differs from the Frink min-rule");
  return r;
}

/// x→y = max{u : u ∧ x = x ∧ y} on a lower semilattice.
inline ExtensionResult sch_extension(const Poset& p) {
  auto n = static_cast<Element>(p.size());
  detail::ResultBuilder b(p);
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      auto xy = meet(p, x, y);
      ElementSet cand;
      for (Element u : p.all())
        if (xy && meet(p, u, x) == xy) cand = cand.with(u);
      b.take_greatest(x, y, cand);
    }
  }
  return std::move(b).finish();
}

/// x→y = x*(x ∧ y) on a lower semilattice. When s is the sp table the result
/// is compared with max{u : u ∧ x = x ∧ y}.
inline TotalTable m_extension(const PartialTable& s) {
  const Poset& p = s.poset();
  auto lower = classify(p).is_lower_semilattice;
  if (!lower) {
    auto [a, b] = *lower.witness;
    throw Error(ErrorKind::NotMeetSemilattice,
                "poset '" + p.name() + "' has no meet of " + p.label(a) + " and " + p.label(b));
  }
  auto n = static_cast<Element>(p.size());
  std::vector<int> cells(p.size() * p.size(), kUndefinedCell);
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) cells[static_cast<std::size_t>(x * n + y)] = s.cell(x, *meet(p, x, y));
  TotalTable t(p, std::move(cells));
  if (is_sp_table(s)) {
    auto sch = sch_extension(p);
    if (!sch.table || !(*sch.table == t))
      throw Error(ErrorKind::MextSchDisagreement, "m-extension differs from max{u : u ∧ x = x ∧ y}");
  }
  return t;
}

/// x→y = max{u : u, x have the same maximal lower bounds as x, y}. On the
/// pairs y <= x this agrees with x*y only when the poset is a semilattice.
inline ExtensionResult mlb_extension(const Poset& p) {
  auto n = static_cast<Element>(p.size());
  detail::ResultBuilder b(p);
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      ElementSet target = maximal_lower_bounds(p, x, y);
      ElementSet cand;
      for (Element u : p.all())
        if (maximal_lower_bounds(p, u, x) == target) cand = cand.with(u);
      b.take_greatest(x, y, cand);
    }
  }
  return std::move(b).finish();
}

/// Experimental: x→y = min{x*z : z <= x, y}. No totality or extension claim.
inline ExtensionResult lower_min_extension(const PartialTable& s) {
  const Poset& p = s.poset();
  auto n = static_cast<Element>(p.size());
  detail::ResultBuilder b(p);
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      ElementSet vals;
      for (Element z : p.down(x) & p.down(y)) vals = vals.with(s.cell(x, z));
      b.take_least(x, y, vals);
    }
  }
  return std::move(b).finish();
}

/// True when the total table agrees with s on every pair y <= x.
inline bool extends(const TotalTable& t, const PartialTable& s) { return restrict(t) == s; }

}  // namespace sectional
