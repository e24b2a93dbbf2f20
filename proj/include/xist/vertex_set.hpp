#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace xist {

using Vertex = std::uint32_t;

/// Subset of the vertex range [0, universe) with O(1) membership and a
/// cached cardinality.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t universe) : bits_(universe, 0) {}
  VertexSet(std::size_t universe, std::span<const Vertex> members);
  VertexSet(std::size_t universe, std::initializer_list<Vertex> members);

  static VertexSet full(std::size_t universe);
  /// Bit i of mask selects vertex i; universe <= 64.
  static VertexSet from_mask(std::size_t universe, std::uint64_t mask);

  std::size_t universe() const noexcept { return bits_.size(); }
  std::size_t size() const noexcept { return count_; }
  bool empty() const noexcept { return count_ == 0; }
  /// ∅ ⊊ S ⊊ V
  bool is_proper() const noexcept {
    return count_ > 0 && count_ < bits_.size();
  }

  bool contains(Vertex v) const noexcept {
    return v < bits_.size() && bits_[v] != 0;
  }
  void insert(Vertex v);
  void erase(Vertex v);

  VertexSet complement() const;
  /// Ascending member list.
  std::vector<Vertex> members() const;
  std::uint64_t mask() const;

  friend bool operator==(const VertexSet &a, const VertexSet &b) {
    return a.bits_ == b.bits_;
  }

 private:
  std::vector<std::uint8_t> bits_;
  std::size_t count_ = 0;
};

}  // namespace xist
