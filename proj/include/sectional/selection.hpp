#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sectional/poset.hpp"

namespace sectional {

/// A local subset selection: a down-set I(x, y) for every pair, with
///   (I0) x, y ∈ I(x,y)          (I1) I(x,y) = I(y,x)
///   (I2) y <= x ⇒ I(x,y) = (x]  (I3) x <= x' ⇒ I(x,y) ⊆ I(x',y)
/// and the consequences (I4) x,y <= z ⇒ I(x,y) ⊆ (z], (I5) (x] ∪ (y] ⊆ I(x,y).
class LocalSelection {
 public:
  enum class Kind { union_of_sections, frink, custom };

  LocalSelection(Poset owner, Kind kind, std::string name, std::vector<ElementSet> sets)
      : owner_(std::move(owner)), kind_(kind), name_(std::move(name)), sets_(std::move(sets)) {}

  const Poset& poset() const { return owner_; }
  Kind kind() const { return kind_; }
  const std::string& name() const { return name_; }

  ElementSet at(Element x, Element y) const {
    return sets_[static_cast<std::size_t>(x) * owner_.size() + static_cast<std::size_t>(y)];
  }

  const std::vector<ElementSet>& sets() const { return sets_; }

 private:
  Poset owner_;
  Kind kind_;
  std::string name_;
  std::vector<ElementSet> sets_;
};

struct SelectionViolation {
  std::string axiom;
  std::vector<Element> witness;
};

/// First violated selection axiom, checked in the order down-set, I0..I5.
inline std::optional<SelectionViolation> find_selection_violation(const Poset& p, const std::vector<ElementSet>& sets) {
  auto n = static_cast<Element>(p.size());
  auto at = [&](Element x, Element y) { return sets[static_cast<std::size_t>(x * n + y)]; };
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      for (Element m : at(x, y))
        if (!p.down(m).subset_of(at(x, y))) return SelectionViolation{"down-set", {x, y, m}};
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      if (!at(x, y).contains(x) || !at(x, y).contains(y)) return SelectionViolation{"I0", {x, y}};
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      if (at(x, y) != at(y, x)) return SelectionViolation{"I1", {x, y}};
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      if (p.leq(y, x) && at(x, y) != p.down(x)) return SelectionViolation{"I2", {x, y}};
  for (Element x = 0; x < n; ++x)
    for (Element x2 = 0; x2 < n; ++x2)
      for (Element y = 0; y < n; ++y)
        if (p.leq(x, x2) && !at(x, y).subset_of(at(x2, y))) return SelectionViolation{"I3", {x, x2, y}};
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      for (Element z : p.up(x) & p.up(y))
        if (!at(x, y).subset_of(p.down(z))) return SelectionViolation{"I4", {x, y, z}};
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      if (!(p.down(x) | p.down(y)).subset_of(at(x, y))) return SelectionViolation{"I5", {x, y}};
  return std::nullopt;
}

/// I(x,y) = (x] ∪ (y]; the selection behind the natural extension.
inline LocalSelection selection_union(const Poset& p) {
  auto n = static_cast<Element>(p.size());
  std::vector<ElementSet> sets;
  sets.reserve(static_cast<std::size_t>(n * n));
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) sets.push_back(p.down(x) | p.down(y));
  return LocalSelection(p, LocalSelection::Kind::union_of_sections, "union", std::move(sets));
}

/// I(x,y) = F(x,y), the Frink ideal generated by x and y.
inline LocalSelection selection_frink(const Poset& p) {
  auto n = static_cast<Element>(p.size());
  std::vector<ElementSet> sets;
  sets.reserve(static_cast<std::size_t>(n * n));
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) sets.push_back(frink_ideal(p, x, y));
  return LocalSelection(p, LocalSelection::Kind::frink, "frink", std::move(sets));
}

/// A user-supplied selection, row-major over all ordered pairs; validated eagerly.
inline LocalSelection selection_custom(const Poset& p, std::string name, std::vector<ElementSet> sets) {
  if (sets.size() != p.size() * p.size())
    throw Error(ErrorKind::SelectionAxiomViolation, "selection '" + name + "' has the wrong number of entries");
  for (ElementSet s : sets)
    if (!s.subset_of(p.all())) throw Error(ErrorKind::UnknownElement, "selection '" + name + "' names foreign elements");
  if (auto v = find_selection_violation(p, sets)) {
    std::string w;
    for (Element e : v->witness) w += (w.empty() ? "" : ", ") + p.label(e);
    throw Error(ErrorKind::SelectionAxiomViolation, "selection '" + name + "' violates " + v->axiom + " at (" + w + ")");
  }
  return LocalSelection(p, LocalSelection::Kind::custom, std::move(name), std::move(sets));
}

}  // namespace sectional
