#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <vector>

namespace nnto {

using VertexId = std::uint32_t;

/// Hard upper bound on the number of vertices any graph in this library may have.
inline constexpr std::size_t kMaxVertices = 64;

/// Subset of {0, ..., 63} stored as a bitmask.
class VertexSet {
 public:
  constexpr VertexSet() noexcept = default;
  constexpr explicit VertexSet(std::uint64_t bits) noexcept : bits_(bits) {}
  VertexSet(std::initializer_list<VertexId> members) noexcept {
    for (VertexId v : members) insert(v);
  }

  /// {0, ..., n-1}
  static constexpr VertexSet full(std::size_t n) noexcept {
    return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  constexpr std::uint64_t bits() const noexcept { return bits_; }
  constexpr bool empty() const noexcept { return bits_ == 0; }
  constexpr std::size_t size() const noexcept { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool contains(VertexId v) const noexcept { return (bits_ >> v) & 1U; }
  constexpr void insert(VertexId v) noexcept { bits_ |= std::uint64_t{1} << v; }
  constexpr void erase(VertexId v) noexcept { bits_ &= ~(std::uint64_t{1} << v); }

  constexpr VertexSet with(VertexId v) const noexcept { return VertexSet(bits_ | (std::uint64_t{1} << v)); }
  constexpr VertexSet without(VertexId v) const noexcept { return VertexSet(bits_ & ~(std::uint64_t{1} << v)); }

  constexpr bool subset_of(VertexSet other) const noexcept { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(VertexSet other) const noexcept { return (bits_ & other.bits_) != 0; }

  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) noexcept { return VertexSet(a.bits_ | b.bits_); }
  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) noexcept { return VertexSet(a.bits_ & b.bits_); }
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) noexcept { return VertexSet(a.bits_ & ~b.bits_); }
  constexpr VertexSet& operator|=(VertexSet o) noexcept { bits_ |= o.bits_; return *this; }
  constexpr VertexSet& operator&=(VertexSet o) noexcept { bits_ &= o.bits_; return *this; }
  constexpr VertexSet& operator-=(VertexSet o) noexcept { bits_ &= ~o.bits_; return *this; }

  friend constexpr bool operator==(VertexSet, VertexSet) noexcept = default;

  /// Iterates members in ascending order.
  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = VertexId;
    using difference_type = std::ptrdiff_t;
    using pointer = const VertexId*;
    using reference = VertexId;

    constexpr iterator() noexcept = default;
    constexpr explicit iterator(std::uint64_t rest) noexcept : rest_(rest) {}
    constexpr VertexId operator*() const noexcept { return static_cast<VertexId>(std::countr_zero(rest_)); }
    constexpr iterator& operator++() noexcept { rest_ &= rest_ - 1; return *this; }
    constexpr iterator operator++(int) noexcept { iterator old = *this; ++*this; return old; }
    friend constexpr bool operator==(iterator, iterator) noexcept = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr iterator begin() const noexcept { return iterator(bits_); }
  constexpr iterator end() const noexcept { return iterator(0); }

  std::vector<VertexId> members() const { return {begin(), end()}; }

 private:
  std::uint64_t bits_ = 0;
};

}  // namespace nnto
