#pragma once

#include <cstddef>
#include <vector>

#include "ecctree/tree.hpp"

namespace ecctree {

/// How a mate step was chosen, plus the vertex partition it induces.
struct MateTrace {
  std::vector<Vertex> path;  // longest path v_0..v_d, oriented so j >= d/2
  std::size_t j = 0;         // index of the backbone vertex adjacent to u
  Vertex u = 0;              // non-leaf off-path neighbour of v_j
  std::vector<Vertex> moved; // neighbours z of u re-attached to v_{j+1}
  std::vector<Vertex> U;     // vertices cut off from the path by removing u
  std::vector<Vertex> L;     // rest of the v_j side of edge v_j v_{j+1}
  std::vector<Vertex> R;     // rest of the v_{j+1} side
};

struct MateResult {
  Tree tree;
  MateTrace trace;
};

/// One mate step: every edge u z with z in U is replaced by v_{j+1} z.
///
/// Selection is deterministic. The path comes from longest_path; among all
/// path vertices with a non-leaf neighbour off the path, the one with the
/// largest index after orienting the path so that j >= d/2 wins, ties going
/// to the smallest u. Throws AlreadyCaterpillar if t is a caterpillar.
MateResult mate(const Tree& t);

struct CaterpillarizeResult {
  Tree tree;
  std::size_t steps = 0;
};

/// Applies mate until the tree is a caterpillar.
CaterpillarizeResult caterpillarize(const Tree& t);

}  // namespace ecctree
