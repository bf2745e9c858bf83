#pragma once

// Pointwise local pseudocomplements (sp, rp, wrp, CLP), the star table of a
// poset, and the lettered property list of sectional pseudocomplementation.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "sectional/checks.hpp"
#include "sectional/poset.hpp"
#include "sectional/tables.hpp"

namespace sectional {

/// The four notions differ only in the set whose maximum they take.
enum class Complement {
  sp,   // {u : u ∧_y x = y}, only for y <= x
  rp,   // {u : (u] ∩ (x] ⊆ (y]}
  wrp,  // {u : (u] ∩ (x] = (y]}
  clp,  // {u : L([x) ∩ [y)) ∩ (u] = (y]}
};

inline const char* to_string(Complement c) {
  switch (c) {
    case Complement::sp: return "sp";
    case Complement::rp: return "rp";
    case Complement::wrp: return "wrp";
    case Complement::clp: return "clp";
  }
  return "?";
}

/// The defining set whose greatest element is the complement of x w.r.t. y.
inline ElementSet complement_candidates(const Poset& p, Complement kind, Element x, Element y) {
  p.require(x);
  p.require(y);
  ElementSet out;
  ElementSet dy = p.down(y);
  ElementSet frink = kind == Complement::clp ? frink_ideal(p, x, y) : ElementSet{};
  for (Element u : p.all()) {
    bool in = false;
    switch (kind) {
      case Complement::sp: in = meet_over(p, u, x, y) == y; break;
      case Complement::rp: in = (p.down(u) & p.down(x)).subset_of(dy); break;
      case Complement::wrp: in = (p.down(u) & p.down(x)) == dy; break;
      case Complement::clp: in = (frink & p.down(u)) == dy; break;
    }
    if (in) out = out.with(u);
  }
  return out;
}

/// x * y = max{u : u ∧_y x = y}; absent when the set has no greatest element.
inline std::optional<Element> sp_complement(const Poset& p, Element x, Element y) {
  p.require(x);
  p.require(y);
  if (!p.leq(y, x))
    throw Error(ErrorKind::NotInSection, p.label(x) + " is not in the section [" + p.label(y) + ")");
  return greatest(p, complement_candidates(p, Complement::sp, x, y));
}

/// The same value computed as max{u : (u] ∩ (x] ∩ [y) = {y}}.
inline std::optional<Element> sp_complement_set_form(const Poset& p, Element x, Element y) {
  p.require(x);
  p.require(y);
  if (!p.leq(y, x))
    throw Error(ErrorKind::NotInSection, p.label(x) + " is not in the section [" + p.label(y) + ")");
  ElementSet s;
  for (Element u : p.all())
    if ((p.down(u) & p.down(x) & p.up(y)) == ElementSet::single(y)) s = s.with(u);
  return greatest(p, s);
}

inline std::optional<Element> rp_complement(const Poset& p, Element x, Element y) {
  return greatest(p, complement_candidates(p, Complement::rp, x, y));
}

inline std::optional<Element> wrp_complement(const Poset& p, Element x, Element y) {
  return greatest(p, complement_candidates(p, Complement::wrp, x, y));
}

inline std::optional<Element> clp_complement(const Poset& p, Element x, Element y) {
  return greatest(p, complement_candidates(p, Complement::clp, x, y));
}

/// 1_x, the greatest element of [x).
inline std::optional<Element> section_top(const Poset& p, Element x) {
  p.require(x);
  return greatest(p, p.up(x));
}

/// Which of the three equivalent descriptions of "v = x * y" hold at a
/// candidate v (y <= x assumed):
///   [0] v ∧_y x = y, and u ∧_y x = y implies u <= v
///   [1] for all u in [y): u <= v iff u ⊥_y x
///   [2] for all u: y <= u <= v iff u ∧_y x = y
inline std::array<bool, 3> sp_clauses(const Poset& p, Element x, Element y, Element v) {
  std::array<bool, 3> r{true, true, true};
  bool in_section = p.leq(y, x);
  r[0] = meet_over(p, v, x, y) == y;
  r[1] = in_section;
  r[2] = in_section;
  for (Element u : p.all()) {
    bool meets = meet_over(p, u, x, y) == y;
    if (meets && !p.leq(u, v)) r[0] = false;
    if (p.leq(y, u) && p.leq(u, v) != disjoint_over(p, u, x, y)) r[1] = false;
    if ((p.leq(y, u) && p.leq(u, v)) != meets) r[2] = false;
  }
  return r;
}

/// Why a star table could not be built: the first pair (in declaration
/// order) whose defining set has no greatest element.
struct MissingWitness {
  Element x = 0;
  Element y = 0;
  /// Maximal elements of the defining set (empty only if the set is empty).
  ElementSet maximal_candidates;
};

inline std::string describe(const Poset& p, const MissingWitness& m) {
  return "no pseudocomplement of " + p.label(m.x) + " in [" + p.label(m.y) + "); maximal candidates " +
         p.format(m.maximal_candidates);
}

struct StarTableResult {
  std::optional<PartialTable> table;
  std::optional<MissingWitness> missing;

  explicit operator bool() const { return table.has_value(); }
};

/// The partial table of a complement notion on the pairs y <= x (sp or wrp).
inline StarTableResult star_table(const Poset& p, Complement kind = Complement::sp) {
  auto n = static_cast<Element>(p.size());
  std::vector<int> cells(p.size() * p.size(), kUndefinedCell);
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (!p.leq(y, x)) continue;
      ElementSet cand = complement_candidates(p, kind, x, y);
      auto g = greatest(p, cand);
      if (!g) return {std::nullopt, MissingWitness{x, y, maximal_elements(p, cand)}};
      cells[static_cast<std::size_t>(x * n + y)] = *g;
    }
  }
  return {PartialTable(p, std::move(cells)), std::nullopt};
}

/// The total table of a complement notion on all pairs (rp or CLP).
inline ExtensionResult complement_table(const Poset& p, Complement kind) {
  auto n = static_cast<Element>(p.size());
  detail::ResultBuilder b(p);
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) b.take_greatest(x, y, complement_candidates(p, kind, x, y));
  return std::move(b).finish();
}

/// True when `s` is the sp-complementation of its poset.
inline bool is_sp_table(const PartialTable& s) {
  auto star = star_table(s.poset());
  return star.table && *star.table == s;
}

// ---------------------------------------------------------------------------
// Properties (a)-(m) of sectional pseudocomplementation. Each item is
// vacuous at tuples where an involved value is undefined.

namespace detail::sp_items {

using C = AxiomContext;
using E = Element;

inline bool a(const C& c, const E* t) {
  int v = c.op(t[0], t[1]);
  return v < 0 || c.leq(t[1], v);
}
inline bool b(const C& c, const E* t) {
  int v = c.op(t[0], t[1]);
  return v < 0 || c.order->disjoint_over(v, t[0], t[1]);
}
inline bool c_(const C& c, const E* t) {
  if (!c.leq(t[0], t[1])) return true;
  int yz = c.op(t[1], t[2]), xz = c.op(t[0], t[2]);
  return yz < 0 || xz < 0 || c.leq(yz, xz);
}
inline bool d(const C& c, const E* t) {
  int yz = c.op(t[1], t[2]), xz = c.op(t[0], t[2]);
  return yz < 0 || xz < 0 || !c.leq(t[0], yz) || c.leq(t[1], xz);
}
inline bool e(const C& c, const E* t) {
  int v = c.op(t[0], t[1]);
  int w = c.op(v, t[1]);
  return v < 0 || w < 0 || c.leq(t[0], w);
}
inline bool f(const C& c, const E* t) {
  int v = c.op(t[0], t[1]);
  int w = c.op(v, t[1]);
  return v < 0 || w < 0 || c.leq(t[1], w);
}
inline bool g(const C& c, const E* t) {
  if (!c.leq(t[1], t[0])) return true;
  int v = c.op(t[1], t[1]);
  return v < 0 || c.leq(t[0], v);
}
inline bool h(const C& c, const E* t) {
  if (!c.leq(t[1], t[0])) return true;
  int top = c.op(t[1], t[1]);
  int v = c.op(top, t[0]);
  return top < 0 || v < 0 || v == t[0];
}
inline bool i(const C& c, const E* t) {
  int v = c.op(t[0], t[1]);
  int w = c.op(v, t[1]);
  int u = c.op(w, t[1]);
  return v < 0 || w < 0 || u < 0 || u == v;
}
inline bool j(const C& c, const E* t) {
  int v = c.op(t[0], t[1]);
  return v < 0 || !c.leq(t[0], v) || c.leq(t[0], t[1]);
}
inline bool k(const C& c, const E* t) {
  if (!c.leq(t[1], t[0])) return true;
  int xx = c.op(t[0], t[0]), yy = c.op(t[1], t[1]);
  return xx < 0 || yy < 0 || xx == yy;
}
inline bool l(const C& c, const E* t) {
  int xy = c.op(t[0], t[1]), yy = c.op(t[1], t[1]);
  return xy < 0 || yy < 0 || xy != yy || t[0] == t[1];
}
inline bool m(const C& c, const E* t) {
  if (!c.order->is_mlb(t[2], t[0], t[1])) return true;
  int v = c.op(t[1], t[2]);
  return v < 0 || c.leq(t[0], v);
}

}  // namespace detail::sp_items

inline const std::vector<Axiom>& sp_property_items() {
  namespace s = detail::sp_items;
  static const std::vector<Axiom> items{
      {"a", 2, 1, s::a},  {"b", 2, 1, s::b},  {"c", 3, 2, s::c_}, {"d", 3, 2, s::d},  {"e", 2, 1, s::e},
      {"f", 2, 1, s::f},  {"g", 2, 1, s::g},  {"h", 2, -1, s::h}, {"i", 2, 1, s::i},  {"j", 2, 1, s::j},
      {"k", 2, -1, s::k}, {"l", 2, 1, s::l},  {"m", 3, 2, s::m},
  };
  return items;
}

/// Checks properties (a)-(m) on a partial table; first witness per failed item.
inline PropertyReport verify_sp_properties(const Poset& p, const PartialTable& s) {
  if (!s.poset().same_order(p)) throw Error(ErrorKind::InvalidTable, "table is over a different poset");
  OrderData order(p);
  AxiomContext ctx{&order, s.cells()};
  return run_axioms("sp-prop", ctx, sp_property_items());
}

}  // namespace sectional
