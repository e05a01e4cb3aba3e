#include "ecctree/tree.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

namespace ecctree {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotATree: return "NotATree";
    case ErrorCode::BadLabel: return "BadLabel";
    case ErrorCode::InvalidSequence: return "InvalidSequence";
    case ErrorCode::BadParameters: return "BadParameters";
    case ErrorCode::NotReducible: return "NotReducible";
    case ErrorCode::AlreadyCaterpillar: return "AlreadyCaterpillar";
    case ErrorCode::BadSubset: return "BadSubset";
    case ErrorCode::BadK: return "BadK";
    case ErrorCode::SizeLimit: return "SizeLimit";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::DomainError: return "DomainError";
  }
  return "Unknown";
}

namespace {

Vertex find_root(std::vector<Vertex>& parent, Vertex v) {
  while (parent[v] != v) {
    parent[v] = parent[parent[v]];
    v = parent[v];
  }
  return v;
}

// Smallest-label vertex at maximum distance.
Vertex farthest(const std::vector<std::uint32_t>& dist) {
  return static_cast<Vertex>(std::max_element(dist.begin(), dist.end()) - dist.begin());
}

}  // namespace

Tree Tree::from_edge_list(std::size_t n, std::span<const Edge> edges) {
  if (n < 2) throw Error(ErrorCode::NotATree, "a tree needs at least two vertices");
  if (n > kMaxOrder) throw Error(ErrorCode::SizeLimit, "order " + std::to_string(n) + " exceeds cap");
  if (edges.size() != n - 1) {
    throw Error(ErrorCode::NotATree, "expected " + std::to_string(n - 1) + " edges, got " +
                                         std::to_string(edges.size()));
  }

  Tree t;
  t.adjacency_.resize(n);
  t.edges_.assign(edges.begin(), edges.end());

  std::vector<Vertex> parent(n);
  std::iota(parent.begin(), parent.end(), Vertex{0});
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n) {
      throw Error(ErrorCode::BadLabel,
                  "edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range");
    }
    if (u == v) throw Error(ErrorCode::NotATree, "self-loop at " + std::to_string(u));
    Vertex ru = find_root(parent, u);
    Vertex rv = find_root(parent, v);
    if (ru == rv) {
      throw Error(ErrorCode::NotATree,
                  "edge (" + std::to_string(u) + "," + std::to_string(v) + ") closes a cycle");
    }
    parent[ru] = rv;
    t.adjacency_[u].push_back(v);
    t.adjacency_[v].push_back(u);
  }
  // n-1 edges without a cycle always connect n vertices.
  for (auto& nbrs : t.adjacency_) std::sort(nbrs.begin(), nbrs.end());
  return t;
}

bool Tree::adjacent(Vertex u, Vertex v) const {
  const auto& nbrs = adjacency_[u];
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<std::uint32_t> bfs_distances(const Tree& t, Vertex source) {
  constexpr auto kUnseen = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> dist(t.order(), kUnseen);
  std::vector<Vertex> queue;
  queue.reserve(t.order());
  dist[source] = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vertex v = queue[head];
    for (Vertex w : t.neighbors(v)) {
      if (dist[w] == kUnseen) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

DistanceMatrix all_pairs_distances(const Tree& t) {
  DistanceMatrix d;
  d.reserve(t.order());
  for (Vertex v = 0; v < t.order(); ++v) d.push_back(bfs_distances(t, v));
  return d;
}

EccProfile ecc_profile(const Tree& t) {
  auto path = longest_path(t);
  auto from_a = bfs_distances(t, path.front());
  auto from_b = bfs_distances(t, path.back());

  EccProfile p;
  p.eccentricity.resize(t.order());
  for (std::size_t v = 0; v < t.order(); ++v) p.eccentricity[v] = std::max(from_a[v], from_b[v]);
  p.diameter = static_cast<std::uint32_t>(path.size() - 1);
  p.radius = *std::min_element(p.eccentricity.begin(), p.eccentricity.end());
  for (Vertex v = 0; v < t.order(); ++v) {
    if (p.eccentricity[v] == p.radius) p.center.push_back(v);
  }
  return p;
}

std::uint32_t diameter(const Tree& t) {
  auto far = farthest(bfs_distances(t, 0));
  auto dist = bfs_distances(t, far);
  return *std::max_element(dist.begin(), dist.end());
}

std::vector<Vertex> leaves(const Tree& t) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < t.order(); ++v) {
    if (t.degree(v) == 1) out.push_back(v);
  }
  return out;
}

std::vector<Vertex> longest_path(const Tree& t) {
  Vertex a = farthest(bfs_distances(t, 0));
  auto dist = bfs_distances(t, a);
  Vertex b = farthest(dist);

  // Walk back from b towards a; in a tree the predecessor with distance one
  // less is unique.
  std::vector<Vertex> path{b};
  for (Vertex v = b; v != a;) {
    for (Vertex w : t.neighbors(v)) {
      if (dist[w] + 1 == dist[v]) {
        v = w;
        break;
      }
    }
    path.push_back(v);
  }
  if (path.front() > path.back()) std::reverse(path.begin(), path.end());
  return path;
}

std::optional<std::vector<Vertex>> caterpillar_backbone(const Tree& t) {
  const std::size_t n = t.order();
  std::vector<std::size_t> inner_degree(n, 0);
  std::vector<Vertex> inner;
  for (Vertex v = 0; v < n; ++v) {
    if (t.degree(v) > 1) inner.push_back(v);
  }
  for (Vertex v : inner) {
    for (Vertex w : t.neighbors(v)) {
      if (t.degree(w) > 1) ++inner_degree[v];
    }
  }

  std::vector<Vertex> backbone;
  if (inner.empty()) return backbone;

  Vertex start = inner.front();
  for (Vertex v : inner) {
    if (inner_degree[v] > 2) return std::nullopt;
  }
  for (Vertex v : inner) {
    if (inner_degree[v] <= 1) {
      start = v;
      break;
    }
  }
  // Removing the leaves of a tree leaves a tree; with max degree 2 it is a
  // path, traversed here from one of its ends.
  for (Vertex prev = start, v = start;;) {
    backbone.push_back(v);
    Vertex next = v;
    for (Vertex w : t.neighbors(v)) {
      if (t.degree(w) > 1 && w != prev) {
        next = w;
        break;
      }
    }
    if (next == v) break;
    prev = v;
    v = next;
  }
  if (backbone.size() != inner.size()) return std::nullopt;
  return backbone;
}

bool is_caterpillar(const Tree& t) { return caterpillar_backbone(t).has_value(); }

}  // namespace ecctree
