#include "ecctree/transforms.hpp"

#include <algorithm>
#include <optional>

namespace ecctree {

namespace {

// Vertices reachable from `start` without entering any vertex in `blocked`.
std::vector<Vertex> reach(const Tree& t, Vertex start, std::vector<char> blocked) {
  std::vector<Vertex> out{start};
  blocked[start] = 1;
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (Vertex w : t.neighbors(out[head])) {
      if (!blocked[w]) {
        blocked[w] = 1;
        out.push_back(w);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

MateResult mate(const Tree& t) {
  if (is_caterpillar(t)) throw Error(ErrorCode::AlreadyCaterpillar, "tree is already a caterpillar");

  auto path = longest_path(t);
  const std::size_t d = path.size() - 1;
  std::vector<char> on_path(t.order(), 0);
  for (Vertex v : path) on_path[v] = 1;

  // Best candidate by oriented index max(j, d - j), then smallest u.
  std::optional<std::pair<std::size_t, Vertex>> best;
  std::size_t best_raw_j = 0;
  for (std::size_t j = 0; j <= d; ++j) {
    for (Vertex u : t.neighbors(path[j])) {
      if (on_path[u] || t.degree(u) < 2) continue;
      const std::size_t oriented = std::max(j, d - j);
      if (!best || oriented > best->first || (oriented == best->first && u < best->second)) {
        best = {oriented, u};
        best_raw_j = j;
      }
    }
  }
  if (!best) {
    // A non-caterpillar always has such a vertex; reaching here means the
    // caterpillar test and the path disagree.
    throw Error(ErrorCode::DomainError, "no off-path non-leaf neighbour found");
  }
  if (2 * best_raw_j < d) std::reverse(path.begin(), path.end());

  MateTrace trace;
  trace.j = best->first;
  trace.u = best->second;
  const Vertex vj = path[trace.j];
  const Vertex vnext = path[trace.j + 1];

  std::vector<char> blocked(t.order(), 0);
  blocked[trace.u] = 1;
  blocked[vj] = 1;
  for (Vertex z : t.neighbors(trace.u)) {
    if (z == vj) continue;
    trace.moved.push_back(z);
    auto part = reach(t, z, blocked);
    trace.U.insert(trace.U.end(), part.begin(), part.end());
  }
  std::sort(trace.U.begin(), trace.U.end());

  std::vector<char> not_lr(t.order(), 0);
  for (Vertex v : trace.U) not_lr[v] = 1;
  auto side_l = not_lr;
  side_l[vnext] = 1;
  trace.L = reach(t, vj, side_l);
  auto side_r = not_lr;
  side_r[vj] = 1;
  trace.R = reach(t, vnext, side_r);
  trace.path = std::move(path);

  std::vector<Edge> edges = t.edges();
  for (auto& [a, b] : edges) {
    const bool ab = a == trace.u && std::binary_search(trace.moved.begin(), trace.moved.end(), b);
    const bool ba = b == trace.u && std::binary_search(trace.moved.begin(), trace.moved.end(), a);
    if (ab) a = vnext;
    if (ba) b = vnext;
  }
  return {Tree::from_edge_list(t.order(), edges), std::move(trace)};
}

CaterpillarizeResult caterpillarize(const Tree& t) {
  CaterpillarizeResult out{t, 0};
  while (!is_caterpillar(out.tree)) {
    out.tree = mate(out.tree).tree;
    ++out.steps;
  }
  return out;
}

}  // namespace ecctree
