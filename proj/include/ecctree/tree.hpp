#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "ecctree/error.hpp"

namespace ecctree {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

inline constexpr std::size_t kMaxOrder = 100000;

/// An unweighted tree on vertices 0..n-1 with n >= 2.
///
/// Instances are always valid: the only way to obtain one is through
/// from_edge_list, which rejects cycles, disconnection and bad labels.
/// The edge list keeps the order it was given in so that serialization
/// round-trips byte for byte.
class Tree {
 public:
  static Tree from_edge_list(std::size_t n, std::span<const Edge> edges);

  std::size_t order() const noexcept { return adjacency_.size(); }
  std::size_t size() const noexcept { return edges_.size(); }

  /// Neighbours of v in increasing label order.
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
  std::size_t degree(Vertex v) const { return adjacency_[v].size(); }
  bool adjacent(Vertex u, Vertex v) const;

  const std::vector<Edge>& edges() const noexcept { return edges_; }

  friend bool operator==(const Tree& a, const Tree& b) { return a.adjacency_ == b.adjacency_; }

 private:
  Tree() = default;

  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<Edge> edges_;
};

using DistanceMatrix = std::vector<std::vector<std::uint32_t>>;

/// BFS distances from a single source.
std::vector<std::uint32_t> bfs_distances(const Tree& t, Vertex source);

DistanceMatrix all_pairs_distances(const Tree& t);

struct EccProfile {
  std::vector<std::uint32_t> eccentricity;
  std::uint32_t radius = 0;
  std::uint32_t diameter = 0;
  std::vector<Vertex> center;
};

// Uses the fact that in a tree ecc(v) = max(d(v,a), d(v,b)) for the two
// ends a, b of any longest path, so only three BFS passes are needed.
EccProfile ecc_profile(const Tree& t);

std::uint32_t diameter(const Tree& t);

std::vector<Vertex> leaves(const Tree& t);

/// A diametral path found by double BFS. The first pass starts at vertex 0,
/// each pass picks the smallest-label farthest vertex, and the result is
/// oriented so that its first vertex has the smaller label.
std::vector<Vertex> longest_path(const Tree& t);

/// Backbone of a caterpillar, in path order. std::nullopt when t is not a
/// caterpillar; an empty vector when t is the single edge.
std::optional<std::vector<Vertex>> caterpillar_backbone(const Tree& t);

bool is_caterpillar(const Tree& t);

}  // namespace ecctree
