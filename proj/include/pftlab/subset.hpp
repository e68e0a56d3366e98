#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <iterator>
#include <vector>

namespace pftlab {

/// Fixed-width bit-vector over carrier positions 0..63.
///
/// Every finite carrier in the library (poset points, lattice elements,
/// space points) is indexed by position, and subsets of a carrier are stored
/// as one machine word. Set algebra is word arithmetic; iteration yields
/// member indices in increasing order.
class Subset {
 public:
  static constexpr std::size_t capacity = 64;

  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = std::size_t;
    using difference_type = std::ptrdiff_t;
    using pointer = const std::size_t*;
    using reference = std::size_t;

    constexpr iterator() = default;
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
    constexpr std::size_t operator*() const { return static_cast<std::size_t>(std::countr_zero(rest_)); }
    constexpr iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr iterator operator++(int) {
      iterator tmp = *this;
      ++*this;
      return tmp;
    }
    constexpr bool operator==(const iterator&) const = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr Subset() = default;
  static constexpr Subset from_bits(std::uint64_t bits) { return Subset(bits); }
  static constexpr Subset singleton(std::size_t i) { return Subset(std::uint64_t{1} << i); }
  /// {0, ..., n-1}
  static constexpr Subset full(std::size_t n) {
    return Subset(n >= capacity ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool contains(std::size_t i) const { return i < capacity && ((bits_ >> i) & 1U) != 0; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  /// Largest member index plus one, 0 for the empty set.
  constexpr std::size_t extent() const { return capacity - static_cast<std::size_t>(std::countl_zero(bits_)); }

  constexpr Subset& insert(std::size_t i) {
    bits_ |= std::uint64_t{1} << i;
    return *this;
  }
  constexpr Subset& erase(std::size_t i) {
    bits_ &= ~(std::uint64_t{1} << i);
    return *this;
  }

  constexpr bool subset_of(Subset other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(Subset other) const { return (bits_ & other.bits_) != 0; }
  /// Complement relative to {0, ..., n-1}.
  constexpr Subset complement(std::size_t n) const { return Subset(~bits_ & full(n).bits_); }

  constexpr Subset& operator|=(Subset o) {
    bits_ |= o.bits_;
    return *this;
  }
  constexpr Subset& operator&=(Subset o) {
    bits_ &= o.bits_;
    return *this;
  }
  constexpr Subset& operator-=(Subset o) {
    bits_ &= ~o.bits_;
    return *this;
  }
  friend constexpr Subset operator|(Subset a, Subset b) { return a |= b; }
  friend constexpr Subset operator&(Subset a, Subset b) { return a &= b; }
  friend constexpr Subset operator-(Subset a, Subset b) { return a -= b; }

  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  std::vector<std::size_t> members() const { return {begin(), end()}; }

  /// The smallest member; undefined on the empty set.
  constexpr std::size_t front() const { return static_cast<std::size_t>(std::countr_zero(bits_)); }

  constexpr bool operator==(const Subset&) const = default;

 private:
  constexpr explicit Subset(std::uint64_t bits) : bits_(bits) {}
  std::uint64_t bits_ = 0;
};

/// Canonical order on subsets: by cardinality, then lexicographically on the
/// sorted member lists. Used as the tie-break for every listing the library
/// emits.
inline bool canonical_less(Subset a, Subset b) {
  if (a.size() != b.size()) return a.size() < b.size();
  auto ia = a.begin();
  auto ib = b.begin();
  for (; ia != a.end(); ++ia, ++ib) {
    if (*ia != *ib) return *ia < *ib;
  }
  return false;
}

/// Every subset of `ground`, in increasing bit order.
template <typename Fn>
void for_each_subset(Subset ground, Fn&& fn) {
  const std::uint64_t g = ground.bits();
  std::uint64_t s = 0;
  while (true) {
    fn(Subset::from_bits(s));
    if (s == g) break;
    s = (s - g) & g;
  }
}

}  // namespace pftlab
