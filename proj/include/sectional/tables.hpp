#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sectional/poset.hpp"

namespace sectional {

/// Cell marker for pairs outside a partial table's domain.
inline constexpr int kUndefinedCell = -1;

/// A star operation: defined exactly on the pairs (x, y) with y <= x.
/// Cells are stored row-major, row x column y.
class PartialTable {
 public:
  PartialTable(Poset owner, std::vector<int> cells) : owner_(std::move(owner)), cells_(std::move(cells)) {
    std::size_t n = owner_.size();
    if (cells_.size() != n * n) throw Error(ErrorKind::InvalidTable, "partial table has the wrong number of cells");
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        int v = cells_[x * n + y];
        bool in_domain = owner_.leq(static_cast<Element>(y), static_cast<Element>(x));
        if (in_domain && (v < 0 || static_cast<std::size_t>(v) >= n))
          throw Error(ErrorKind::InvalidTable, "star table lacks a value at (" + owner_.label(static_cast<Element>(x)) +
                                                   ", " + owner_.label(static_cast<Element>(y)) + ")");
        if (!in_domain && v != kUndefinedCell)
          throw Error(ErrorKind::InvalidTable, "star table defines (" + owner_.label(static_cast<Element>(x)) + ", " +
                                                   owner_.label(static_cast<Element>(y)) + ") although " +
                                                   owner_.label(static_cast<Element>(y)) + " is not below " +
                                                   owner_.label(static_cast<Element>(x)));
      }
    }
  }

  const Poset& poset() const { return owner_; }
  std::size_t size() const { return owner_.size(); }
  bool defined(Element x, Element y) const { return cell(x, y) != kUndefinedCell; }

  std::optional<Element> at(Element x, Element y) const {
    int v = cell(x, y);
    if (v == kUndefinedCell) return std::nullopt;
    return v;
  }

  int cell(Element x, Element y) const { return cells_[static_cast<std::size_t>(x) * size() + static_cast<std::size_t>(y)]; }
  std::span<const int> cells() const { return cells_; }

  bool operator==(const PartialTable& o) const { return owner_.same_order(o.owner_) && cells_ == o.cells_; }

 private:
  Poset owner_;
  std::vector<int> cells_;
};

/// An arrow operation: a value for every pair.
class TotalTable {
 public:
  TotalTable(Poset owner, std::vector<int> cells) : owner_(std::move(owner)), cells_(std::move(cells)) {
    std::size_t n = owner_.size();
    if (cells_.size() != n * n) throw Error(ErrorKind::InvalidTable, "total table has the wrong number of cells");
    for (std::size_t i = 0; i < cells_.size(); ++i)
      if (cells_[i] < 0 || static_cast<std::size_t>(cells_[i]) >= n)
        throw Error(ErrorKind::InvalidTable, "total table lacks a value at (" + owner_.label(static_cast<Element>(i / n)) +
                                                 ", " + owner_.label(static_cast<Element>(i % n)) + ")");
  }

  const Poset& poset() const { return owner_; }
  std::size_t size() const { return owner_.size(); }
  Element at(Element x, Element y) const { return cells_[static_cast<std::size_t>(x) * size() + static_cast<std::size_t>(y)]; }
  std::span<const int> cells() const { return cells_; }

  bool operator==(const TotalTable& o) const { return owner_.same_order(o.owner_) && cells_ == o.cells_; }

 private:
  Poset owner_;
  std::vector<int> cells_;
};

/// The restriction of an arrow operation to the pairs y <= x.
inline PartialTable restrict(const TotalTable& t) {
  const Poset& p = t.poset();
  auto n = static_cast<Element>(p.size());
  std::vector<int> cells(t.cells().begin(), t.cells().end());
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      if (!p.leq(y, x)) cells[static_cast<std::size_t>(x * n + y)] = kUndefinedCell;
  return PartialTable(p, std::move(cells));
}

/// A pair where a max- or min-rule has no value.
struct UndefinedPair {
  enum class Reason { empty_set, no_greatest, no_least };
  Element x = 0;
  Element y = 0;
  Reason reason = Reason::empty_set;
  /// Maximal (for no_greatest) or minimal (for no_least) candidate values.
  ElementSet candidates;
};

/// Outcome of a rule that may be partial: a table exactly when no pair failed.
struct ExtensionResult {
  std::optional<TotalTable> table;
  std::vector<UndefinedPair> undefined_pairs;

  bool total() const { return table.has_value(); }
};

inline std::string describe(const Poset& p, const UndefinedPair& u) {
  std::string pair = "(" + p.label(u.x) + ", " + p.label(u.y) + ")";
  switch (u.reason) {
    case UndefinedPair::Reason::empty_set: return "undefined pair " + pair + ": the defining set is empty";
    case UndefinedPair::Reason::no_greatest:
      return "undefined pair " + pair + ": no greatest candidate; maximal candidates " + p.format(u.candidates);
    case UndefinedPair::Reason::no_least:
      return "undefined pair " + pair + ": no least candidate; minimal candidates " + p.format(u.candidates);
  }
  return "undefined pair " + pair;
}

namespace detail {

/// Collects per-pair outcomes of a rule into an ExtensionResult.
class ResultBuilder {
 public:
  explicit ResultBuilder(const Poset& p) : poset_(p), cells_(p.size() * p.size(), kUndefinedCell) {}

  void set(Element x, Element y, Element v) { cells_[static_cast<std::size_t>(x) * poset_.size() + static_cast<std::size_t>(y)] = v; }
  void fail(UndefinedPair u) { undefined_.push_back(u); }

  /// Records the greatest element of `candidates`, or why there is none.
  void take_greatest(Element x, Element y, ElementSet candidates) {
    if (candidates.empty()) return fail({x, y, UndefinedPair::Reason::empty_set, {}});
    if (auto g = greatest(poset_, candidates)) return set(x, y, *g);
    fail({x, y, UndefinedPair::Reason::no_greatest, maximal_elements(poset_, candidates)});
  }

  void take_least(Element x, Element y, ElementSet candidates) {
    if (candidates.empty()) return fail({x, y, UndefinedPair::Reason::empty_set, {}});
    if (auto l = least(poset_, candidates)) return set(x, y, *l);
    fail({x, y, UndefinedPair::Reason::no_least, minimal_elements(poset_, candidates)});
  }

  ExtensionResult finish() && {
    ExtensionResult r;
    if (undefined_.empty()) r.table.emplace(poset_, std::move(cells_));
    r.undefined_pairs = std::move(undefined_);
    return r;
  }

 private:
  Poset poset_;
  std::vector<int> cells_;
  std::vector<UndefinedPair> undefined_;
};

}  // namespace detail

}  // namespace sectional
