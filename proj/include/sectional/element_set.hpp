#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <iterator>

namespace sectional {

/// Index of an element in its poset's declaration order.
using Element = int;
using Mask = std::uint64_t;

/// Posets are stored as one machine word per row, which bounds their size.
inline constexpr std::size_t kHardElementLimit = 64;
inline constexpr std::size_t kDefaultElementCap = 16;

constexpr Mask bit(Element e) noexcept { return Mask{1} << static_cast<unsigned>(e); }

constexpr Mask full_mask(std::size_t n) noexcept {
  return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1;
}

/// A subset of a poset's carrier, as a bit set over element indices.
class ElementSet {
 public:
  class iterator {
   public:
    using value_type = Element;
    using difference_type = std::ptrdiff_t;
    using iterator_category = std::forward_iterator_tag;
    using reference = Element;
    using pointer = void;

    constexpr iterator() = default;
    constexpr explicit iterator(Mask rest) : rest_(rest) {}
    constexpr Element operator*() const { return std::countr_zero(rest_); }
    constexpr iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    constexpr bool operator==(const iterator&) const = default;

   private:
    Mask rest_ = 0;
  };

  constexpr ElementSet() = default;
  constexpr explicit ElementSet(Mask bits) : bits_(bits) {}

  static constexpr ElementSet single(Element e) { return ElementSet(bit(e)); }
  static constexpr ElementSet all(std::size_t n) { return ElementSet(full_mask(n)); }

  constexpr Mask bits() const { return bits_; }
  constexpr bool contains(Element e) const { return e >= 0 && (bits_ & bit(e)) != 0; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool subset_of(ElementSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(ElementSet other) const { return (bits_ & other.bits_) != 0; }

  /// Smallest index in the set; -1 when empty.
  constexpr Element first() const { return bits_ == 0 ? -1 : std::countr_zero(bits_); }

  constexpr ElementSet with(Element e) const { return ElementSet(bits_ | bit(e)); }
  constexpr ElementSet without(Element e) const { return ElementSet(bits_ & ~bit(e)); }

  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  friend constexpr ElementSet operator&(ElementSet a, ElementSet b) { return ElementSet(a.bits_ & b.bits_); }
  friend constexpr ElementSet operator|(ElementSet a, ElementSet b) { return ElementSet(a.bits_ | b.bits_); }
  friend constexpr ElementSet operator-(ElementSet a, ElementSet b) { return ElementSet(a.bits_ & ~b.bits_); }
  constexpr ElementSet& operator&=(ElementSet o) { bits_ &= o.bits_; return *this; }
  constexpr ElementSet& operator|=(ElementSet o) { bits_ |= o.bits_; return *this; }
  constexpr bool operator==(const ElementSet&) const = default;

 private:
  Mask bits_ = 0;
};

}  // namespace sectional
