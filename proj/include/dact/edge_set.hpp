#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <vector>

namespace dact {

using EdgeId = std::uint32_t;
using VertexId = std::uint32_t;

inline constexpr std::size_t kMaxEdges = 64;

// Set of edge ids stored as a bitmask. Ordering is numeric on the mask.
class EdgeSet {
 public:
  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = EdgeId;
    using difference_type = std::ptrdiff_t;
    using pointer = const EdgeId*;
    using reference = EdgeId;

    iterator() = default;
    explicit iterator(std::uint64_t rest) : rest_(rest) {}
    EdgeId operator*() const { return static_cast<EdgeId>(std::countr_zero(rest_)); }
    iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    bool operator==(const iterator&) const = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr EdgeSet() = default;
  constexpr EdgeSet(std::initializer_list<EdgeId> ids) {
    for (EdgeId e : ids) bits_ |= bit(e);
  }
  static constexpr EdgeSet from_bits(std::uint64_t bits) {
    EdgeSet s;
    s.bits_ = bits;
    return s;
  }
  // {0, ..., n-1}
  static constexpr EdgeSet first(std::size_t n) {
    return from_bits(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool contains(EdgeId e) const { return e < 64 && (bits_ >> e) & 1u; }
  constexpr void insert(EdgeId e) { bits_ |= bit(e); }
  constexpr void erase(EdgeId e) { bits_ &= ~bit(e); }
  constexpr EdgeSet with(EdgeId e) const { return from_bits(bits_ | bit(e)); }
  constexpr EdgeSet without(EdgeId e) const { return from_bits(bits_ & ~bit(e)); }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool subset_of(EdgeSet o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr bool intersects(EdgeSet o) const { return (bits_ & o.bits_) != 0; }
  EdgeId min() const { return static_cast<EdgeId>(std::countr_zero(bits_)); }

  iterator begin() const { return iterator(bits_); }
  iterator end() const { return iterator(0); }
  std::vector<EdgeId> elements() const { return {begin(), end()}; }

  friend constexpr EdgeSet operator|(EdgeSet a, EdgeSet b) { return from_bits(a.bits_ | b.bits_); }
  friend constexpr EdgeSet operator&(EdgeSet a, EdgeSet b) { return from_bits(a.bits_ & b.bits_); }
  friend constexpr EdgeSet operator^(EdgeSet a, EdgeSet b) { return from_bits(a.bits_ ^ b.bits_); }
  friend constexpr EdgeSet operator-(EdgeSet a, EdgeSet b) { return from_bits(a.bits_ & ~b.bits_); }
  EdgeSet& operator|=(EdgeSet o) { bits_ |= o.bits_; return *this; }
  EdgeSet& operator&=(EdgeSet o) { bits_ &= o.bits_; return *this; }
  EdgeSet& operator-=(EdgeSet o) { bits_ &= ~o.bits_; return *this; }

  friend constexpr auto operator<=>(EdgeSet, EdgeSet) = default;

 private:
  static constexpr std::uint64_t bit(EdgeId e) { return std::uint64_t{1} << e; }
  std::uint64_t bits_ = 0;
};

// All subsets of `universe`, in increasing mask order.
template <typename F>
void for_each_subset(EdgeSet universe, F&& f) {
  std::uint64_t u = universe.bits();
  std::uint64_t s = 0;
  while (true) {
    f(EdgeSet::from_bits(s));
    if (s == u) break;
    s = (s - u) & u;
  }
}

struct SubgraphInterval {
  EdgeSet lower;
  EdgeSet upper;

  bool contains(EdgeSet s) const { return lower.subset_of(s) && s.subset_of(upper); }
  std::uint64_t count() const { return std::uint64_t{1} << (upper - lower).size(); }
  bool operator==(const SubgraphInterval&) const = default;
};

}  // namespace dact
