#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <string>
#include <vector>

#include "gconvex/errors.hpp"

namespace gconvex {

using Vertex = int;
using Mask = std::uint32_t;

inline constexpr int kMaxVertices = 32;

constexpr Mask full_mask(int n) noexcept {
  return n >= 32 ? ~Mask{0} : (Mask{1} << n) - 1;
}

constexpr Mask bit(Vertex v) noexcept { return Mask{1} << v; }

/// A subset of the vertices {0..universe-1} of one particular graph.
///
/// Stored as a single machine word, so every set operation is O(1). Mixing
/// sets from different universes is a programming error and throws.
class VertexSet {
 public:
  class Iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;
    using pointer = const Vertex*;
    using reference = Vertex;

    Iterator() = default;
    explicit Iterator(Mask rest) : rest_(rest) {}

    Vertex operator*() const { return std::countr_zero(rest_); }
    Iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    Iterator operator++(int) {
      Iterator old = *this;
      ++*this;
      return old;
    }
    bool operator==(const Iterator&) const = default;

   private:
    Mask rest_ = 0;
  };

  VertexSet() = default;

  VertexSet(int universe, Mask members) : universe_(universe), bits_(members) {
    if (universe < 0 || universe > kMaxVertices) {
      throw InputError("vertex set universe " + std::to_string(universe) + " out of range");
    }
    if ((members & ~full_mask(universe)) != 0) {
      throw InputError("vertex set has members outside 0.." + std::to_string(universe - 1));
    }
  }

  static VertexSet none(int universe) { return VertexSet(universe, 0); }
  static VertexSet all(int universe) { return VertexSet(universe, full_mask(universe)); }
  static VertexSet of(int universe, std::initializer_list<Vertex> members) {
    Mask m = 0;
    for (Vertex v : members) {
      check_vertex(universe, v);
      m |= bit(v);
    }
    return VertexSet(universe, m);
  }
  static VertexSet of(int universe, const std::vector<Vertex>& members) {
    Mask m = 0;
    for (Vertex v : members) {
      check_vertex(universe, v);
      m |= bit(v);
    }
    return VertexSet(universe, m);
  }

  int universe() const noexcept { return universe_; }
  Mask bits() const noexcept { return bits_; }
  int size() const noexcept { return std::popcount(bits_); }
  bool empty() const noexcept { return bits_ == 0; }
  bool is_full() const noexcept { return bits_ == full_mask(universe_); }

  bool contains(Vertex v) const noexcept {
    return v >= 0 && v < universe_ && (bits_ & bit(v)) != 0;
  }
  bool is_subset_of(const VertexSet& other) const {
    same_universe(other);
    return (bits_ & ~other.bits_) == 0;
  }

  VertexSet with(Vertex v) const {
    check_vertex(universe_, v);
    return VertexSet(universe_, bits_ | bit(v), Unchecked{});
  }
  VertexSet without(Vertex v) const {
    check_vertex(universe_, v);
    return VertexSet(universe_, bits_ & ~bit(v), Unchecked{});
  }
  VertexSet complement() const {
    return VertexSet(universe_, ~bits_ & full_mask(universe_), Unchecked{});
  }

  Iterator begin() const { return Iterator(bits_); }
  Iterator end() const { return Iterator(0); }

  Vertex first() const { return empty() ? -1 : std::countr_zero(bits_); }

  std::vector<Vertex> to_vector() const { return {begin(), end()}; }

  friend VertexSet operator|(const VertexSet& a, const VertexSet& b) {
    a.same_universe(b);
    return VertexSet(a.universe_, a.bits_ | b.bits_, Unchecked{});
  }
  friend VertexSet operator&(const VertexSet& a, const VertexSet& b) {
    a.same_universe(b);
    return VertexSet(a.universe_, a.bits_ & b.bits_, Unchecked{});
  }
  friend VertexSet operator-(const VertexSet& a, const VertexSet& b) {
    a.same_universe(b);
    return VertexSet(a.universe_, a.bits_ & ~b.bits_, Unchecked{});
  }
  friend bool operator==(const VertexSet&, const VertexSet&) = default;

  static void check_vertex(int universe, Vertex v) {
    if (v < 0 || v >= universe) {
      throw InputError("vertex " + std::to_string(v) + " out of range for " +
                       std::to_string(universe) + " vertices");
    }
  }

 private:
  struct Unchecked {};
  VertexSet(int universe, Mask members, Unchecked) : universe_(universe), bits_(members) {}

  void same_universe(const VertexSet& other) const {
    if (universe_ != other.universe_) {
      throw InputError("vertex sets index different graphs");
    }
  }

  int universe_ = 0;
  Mask bits_ = 0;
};

/// "{0,3,4}" using integer labels.
std::string to_string(const VertexSet& s);

}  // namespace gconvex
