#pragma once

#include <algorithm>
#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sectional/element_set.hpp"
#include "sectional/error.hpp"

namespace sectional {

/// One line of an order declaration: `cover x y` or `le x y`. Both kinds feed
/// the same reflexive-transitive closure.
struct OrderDeclaration {
  enum class Kind { cover, le };
  Kind kind = Kind::le;
  std::string lower;
  std::string upper;
};

/// A finite partially ordered set. Immutable once built; copies share storage.
class Poset {
 public:
  /// Builds a poset from explicit rows `up[x] = {z : x <= z}`. The rows must
  /// already describe a partial order; the order laws are re-checked.
  static Poset from_up_sets(std::string name, std::vector<std::string> labels, std::vector<Mask> up);

  std::size_t size() const { return impl_->labels.size(); }
  const std::string& name() const { return impl_->name; }
  const std::vector<std::string>& labels() const { return impl_->labels; }
  const std::string& label(Element e) const { return impl_->labels.at(static_cast<std::size_t>(e)); }

  std::optional<Element> find(std::string_view label) const {
    const auto& ls = impl_->labels;
    auto it = std::find(ls.begin(), ls.end(), label);
    if (it == ls.end()) return std::nullopt;
    return static_cast<Element>(it - ls.begin());
  }

  Element index_of(std::string_view label) const {
    if (auto e = find(label)) return *e;
    throw Error(ErrorKind::UnknownElement, "'" + std::string(label) + "' is not an element of poset '" + name() + "'");
  }

  void require(Element e) const {
    if (e < 0 || static_cast<std::size_t>(e) >= size())
      throw Error(ErrorKind::UnknownElement, "index " + std::to_string(e) + " outside poset '" + name() + "'");
  }

  bool leq(Element x, Element y) const { return (impl_->up[static_cast<std::size_t>(x)] & bit(y)) != 0; }
  bool lt(Element x, Element y) const { return x != y && leq(x, y); }
  bool comparable(Element x, Element y) const { return leq(x, y) || leq(y, x); }

  ElementSet up(Element x) const { return ElementSet(impl_->up[static_cast<std::size_t>(x)]); }
  ElementSet down(Element x) const { return ElementSet(impl_->down[static_cast<std::size_t>(x)]); }
  ElementSet all() const { return ElementSet::all(size()); }

  /// Renders a set as `{a, b}` in declaration order.
  std::string format(ElementSet s) const {
    std::string out = "{";
    bool first = true;
    for (Element e : s) {
      if (!first) out += ", ";
      out += label(e);
      first = false;
    }
    return out + "}";
  }

  bool same_order(const Poset& other) const {
    return impl_ == other.impl_ || (impl_->labels == other.impl_->labels && impl_->up == other.impl_->up);
  }

 private:
  struct Impl {
    std::string name;
    std::vector<std::string> labels;
    std::vector<Mask> up;
    std::vector<Mask> down;
  };

  explicit Poset(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

  std::shared_ptr<const Impl> impl_;
};

namespace detail {

inline void check_size(std::size_t n, std::size_t cap) {
  if (n == 0) throw Error(ErrorKind::EmptyPoset, "a poset needs at least one element");
  std::size_t limit = std::min(cap, kHardElementLimit);
  if (n > limit)
    throw Error(ErrorKind::SizeCap, std::to_string(n) + " elements exceed the cap of " + std::to_string(limit));
}

// Shortest path along declared edges, used to explain antisymmetry failures.
inline std::vector<Element> declared_path(const std::vector<Mask>& edges, Element from, Element to) {
  std::size_t n = edges.size();
  std::vector<Element> parent(n, -1);
  std::vector<Element> queue{from};
  parent[static_cast<std::size_t>(from)] = from;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Element v = queue[head];
    for (Element w : ElementSet(edges[static_cast<std::size_t>(v)])) {
      if (parent[static_cast<std::size_t>(w)] != -1) continue;
      parent[static_cast<std::size_t>(w)] = v;
      queue.push_back(w);
    }
  }
  std::vector<Element> path;
  if (parent[static_cast<std::size_t>(to)] == -1) return path;
  for (Element v = to; v != from; v = parent[static_cast<std::size_t>(v)]) path.push_back(v);
  path.push_back(from);
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace detail

inline Poset Poset::from_up_sets(std::string name, std::vector<std::string> labels, std::vector<Mask> up) {
  std::size_t n = labels.size();
  detail::check_size(n, kHardElementLimit);
  if (up.size() != n) throw Error(ErrorKind::InvalidTable, "relation rows do not match the element count");
  std::vector<Mask> down(n, 0);
  for (std::size_t x = 0; x < n; ++x) {
    if ((up[x] & bit(static_cast<Element>(x))) == 0)
      throw Error(ErrorKind::InvalidTable, "relation is not reflexive at '" + labels[x] + "'");
    for (Element y : ElementSet(up[x])) {
      if (static_cast<std::size_t>(y) >= n) throw Error(ErrorKind::InvalidTable, "relation row out of range");
      down[static_cast<std::size_t>(y)] |= bit(static_cast<Element>(x));
      if ((up[static_cast<std::size_t>(y)] & ~up[x]) != 0)
        throw Error(ErrorKind::InvalidTable, "relation is not transitive through '" + labels[static_cast<std::size_t>(y)] + "'");
      if (static_cast<std::size_t>(y) != x && (up[static_cast<std::size_t>(y)] & bit(static_cast<Element>(x))) != 0)
        throw Error(ErrorKind::AntisymmetryViolation,
                    labels[x] + " <= " + labels[static_cast<std::size_t>(y)] + " <= " + labels[x]);
    }
  }
  auto impl = std::make_shared<Impl>();
  impl->name = std::move(name);
  impl->labels = std::move(labels);
  impl->up = std::move(up);
  impl->down = std::move(down);
  return Poset(std::move(impl));
}

/// Builds a poset from element identifiers and `cover`/`le` declarations; the
/// order is the reflexive-transitive closure of the declarations.
inline Poset build_poset(std::string name, std::vector<std::string> elements,
                         std::span<const OrderDeclaration> pairs, std::size_t cap = kDefaultElementCap) {
  detail::check_size(elements.size(), cap);
  std::size_t n = elements.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (elements[i] == elements[j])
        throw Error(ErrorKind::DuplicateElement, "'" + elements[i] + "' declared twice in poset '" + name + "'");

  auto index = [&](const std::string& label) {
    auto it = std::find(elements.begin(), elements.end(), label);
    if (it == elements.end())
      throw Error(ErrorKind::UnknownElement, "'" + label + "' is not declared in poset '" + name + "'");
    return static_cast<Element>(it - elements.begin());
  };

  std::vector<Mask> edges(n, 0);
  for (const auto& decl : pairs) {
    Element lo = index(decl.lower);
    Element hi = index(decl.upper);
    edges[static_cast<std::size_t>(lo)] |= bit(hi);
  }
  std::vector<Mask> up(n);
  for (std::size_t x = 0; x < n; ++x) up[x] = edges[x] | bit(static_cast<Element>(x));
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (up[i] & bit(static_cast<Element>(k))) up[i] |= up[k];

  for (std::size_t x = 0; x < n; ++x) {
    for (Element y : ElementSet(up[x])) {
      if (static_cast<std::size_t>(y) == x) continue;
      if ((up[static_cast<std::size_t>(y)] & bit(static_cast<Element>(x))) == 0) continue;
      auto there = detail::declared_path(edges, static_cast<Element>(x), y);
      auto back = detail::declared_path(edges, y, static_cast<Element>(x));
      std::string cycle;
      for (Element e : there) cycle += elements[static_cast<std::size_t>(e)] + " <= ";
      for (std::size_t i = 1; i < back.size(); ++i) {
        cycle += elements[static_cast<std::size_t>(back[i])];
        if (i + 1 < back.size()) cycle += " <= ";
      }
      throw Error(ErrorKind::AntisymmetryViolation, "cycle " + cycle + " in poset '" + name + "'");
    }
  }
  return Poset::from_up_sets(std::move(name), std::move(elements), std::move(up));
}

/// The covering pairs (x, y), x < y with nothing strictly between, in
/// declaration order of x then y.
inline std::vector<std::pair<Element, Element>> covers(const Poset& p) {
  std::vector<std::pair<Element, Element>> out;
  auto n = static_cast<Element>(p.size());
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      if (p.lt(x, y) && (p.up(x) & p.down(y)) == ElementSet::single(x).with(y)) out.emplace_back(x, y);
  return out;
}

/// The sub-poset carried by `subset`, with the induced order and the original
/// labels in their original relative order.
inline Poset induced_subposet(const Poset& p, ElementSet subset, std::string name) {
  std::vector<Element> kept(subset.begin(), subset.end());
  std::vector<std::string> labels;
  std::vector<Mask> up(kept.size(), 0);
  for (std::size_t i = 0; i < kept.size(); ++i) {
    labels.push_back(p.label(kept[i]));
    for (std::size_t j = 0; j < kept.size(); ++j)
      if (p.leq(kept[i], kept[j])) up[i] |= bit(static_cast<Element>(j));
  }
  return Poset::from_up_sets(std::move(name), std::move(labels), std::move(up));
}

// ---------------------------------------------------------------------------
// Sections, bounds and local meets.

inline ElementSet upper_section(const Poset& p, Element x) {
  p.require(x);
  return p.up(x);
}

inline ElementSet lower_section(const Poset& p, Element x) {
  p.require(x);
  return p.down(x);
}

/// [x, y]; empty when x is not below y.
inline ElementSet segment(const Poset& p, Element x, Element y) {
  p.require(x);
  p.require(y);
  return p.up(x) & p.down(y);
}

enum class BoundDirection { upper, lower };

/// U(X) or L(X). Both are the whole carrier for an empty X.
inline ElementSet bounds(const Poset& p, ElementSet xs, BoundDirection direction) {
  if (!xs.subset_of(p.all())) throw Error(ErrorKind::UnknownElement, "set is not contained in poset '" + p.name() + "'");
  ElementSet out = p.all();
  for (Element x : xs) out &= direction == BoundDirection::upper ? p.up(x) : p.down(x);
  return out;
}

inline ElementSet maximal_elements(const Poset& p, ElementSet s) {
  ElementSet out;
  for (Element z : s)
    if ((p.up(z) & s) == ElementSet::single(z)) out = out.with(z);
  return out;
}

inline ElementSet minimal_elements(const Poset& p, ElementSet s) {
  ElementSet out;
  for (Element z : s)
    if ((p.down(z) & s) == ElementSet::single(z)) out = out.with(z);
  return out;
}

inline std::optional<Element> greatest(const Poset& p, ElementSet s) {
  for (Element z : s)
    if (s.subset_of(p.down(z))) return z;
  return std::nullopt;
}

inline std::optional<Element> least(const Poset& p, ElementSet s) {
  for (Element z : s)
    if (s.subset_of(p.up(z))) return z;
  return std::nullopt;
}

/// x and y are disjoint over `base`: [base,x] ∩ [base,y] ⊆ {base}.
inline bool disjoint_over(const Poset& p, Element x, Element y, Element base) {
  ElementSet common = segment(p, base, x) & segment(p, base, y);
  return common.subset_of(ElementSet::single(base));
}

/// The z with [base,x] ∩ [base,y] = [base,z], if that intersection is a
/// non-empty segment.
inline std::optional<Element> meet_over(const Poset& p, Element x, Element y, Element base) {
  ElementSet common = segment(p, base, x) & segment(p, base, y);
  if (common.empty()) return std::nullopt;
  for (Element z : common)
    if ((p.up(base) & p.down(z)) == common) return z;
  return std::nullopt;
}

inline std::optional<Element> meet(const Poset& p, Element x, Element y) {
  p.require(x);
  p.require(y);
  return greatest(p, p.down(x) & p.down(y));
}

inline std::optional<Element> join(const Poset& p, Element x, Element y) {
  p.require(x);
  p.require(y);
  return least(p, p.up(x) & p.up(y));
}

inline ElementSet maximal_lower_bounds(const Poset& p, Element x, Element y) {
  p.require(x);
  p.require(y);
  return maximal_elements(p, p.down(x) & p.down(y));
}

/// The Frink ideal generated by x and y, L([x) ∩ [y)); the whole carrier when
/// x and y have no common upper bound.
inline ElementSet frink_ideal(const Poset& p, Element x, Element y) {
  p.require(x);
  p.require(y);
  return bounds(p, p.up(x) & p.up(y), BoundDirection::lower);
}

// ---------------------------------------------------------------------------
// Structure classification.

/// A classification flag. A false flag names a pair of elements that breaks it.
struct StructureFlag {
  bool value = true;
  std::optional<std::pair<Element, Element>> witness;

  explicit operator bool() const { return value; }
};

struct StructureReport {
  StructureFlag is_chain;
  StructureFlag is_up_directed;
  StructureFlag has_greatest;
  StructureFlag has_least;
  StructureFlag is_sectionally_bounded;
  StructureFlag is_upper_semilattice;
  StructureFlag is_lower_semilattice;
  StructureFlag is_lattice;
  StructureFlag is_nearlattice;
  StructureFlag all_lower_sections_chains;
};

namespace detail {

inline void fail(StructureFlag& flag, Element a, Element b) {
  if (!flag.value) return;
  flag.value = false;
  flag.witness = std::pair{a, b};
}

inline StructureFlag first_two(ElementSet s) {
  StructureFlag flag;
  if (s.size() >= 2) {
    Element a = s.first();
    flag.value = false;
    flag.witness = std::pair{a, s.without(a).first()};
  }
  return flag;
}

}  // namespace detail

/// Computes every flag by exhaustive pair scans. Witnesses are the first
/// offending pair in declaration order; for has_greatest/has_least they are
/// two distinct maximal/minimal elements, for sectional boundedness two
/// distinct maximal elements of one upper section.
inline StructureReport classify(const Poset& p) {
  StructureReport r;
  auto n = static_cast<Element>(p.size());
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (!p.comparable(x, y)) {
        detail::fail(r.is_chain, x, y);
        if (p.up(x).intersects(p.up(y))) detail::fail(r.all_lower_sections_chains, x, y);
      }
      ElementSet ub = p.up(x) & p.up(y);
      ElementSet lb = p.down(x) & p.down(y);
      if (ub.empty()) detail::fail(r.is_up_directed, x, y);
      if (!least(p, ub)) detail::fail(r.is_upper_semilattice, x, y);
      if (!greatest(p, lb)) {
        detail::fail(r.is_lower_semilattice, x, y);
        if (!lb.empty()) detail::fail(r.is_nearlattice, x, y);
      }
    }
  }
  if (!r.is_upper_semilattice) r.is_nearlattice = r.is_upper_semilattice;
  r.is_lattice = !r.is_upper_semilattice ? r.is_upper_semilattice : r.is_lower_semilattice;
  r.has_greatest = detail::first_two(maximal_elements(p, p.all()));
  r.has_least = detail::first_two(minimal_elements(p, p.all()));
  for (Element x = 0; x < n && r.is_sectionally_bounded.value; ++x)
    r.is_sectionally_bounded = detail::first_two(maximal_elements(p, p.up(x)));
  return r;
}

}  // namespace sectional
