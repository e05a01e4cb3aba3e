#include "doctest.h"

#include <algorithm>
#include <random>

#include "ecctree/ecc_sequence.hpp"
#include "ecctree/enumeration.hpp"
#include "ecctree/error.hpp"
#include "ecctree/indices.hpp"
#include "ecctree/transforms.hpp"
#include "oracles.hpp"

using namespace ecctree;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an ecctree::Error");
  return ErrorCode::DomainError;
}

bool contains(const std::vector<Vertex>& sorted_set, Vertex v) {
  return std::binary_search(sorted_set.begin(), sorted_set.end(), v);
}

Rational wiener(const Tree& t) { return wiener_type(t, WeightFunction::wiener()).exact(); }

// Checks everything that must hold for one mate step.
void check_mate(const Tree& t) {
  auto [result, trace] = mate(t);
  CHECK(of_tree(result) == of_tree(t));
  CHECK(leaves(result).size() > leaves(t).size());

  const std::size_t n = t.order();
  const std::size_t d = trace.path.size() - 1;
  CHECK(2 * trace.j >= d);
  CHECK(trace.j + 1 <= d);
  CHECK(t.adjacent(trace.path[trace.j], trace.u));
  CHECK(t.degree(trace.u) >= 2);
  CHECK_FALSE(std::count(trace.path.begin(), trace.path.end(), trace.u));

  // U, L and R partition the vertex set.
  std::vector<int> seen(n, 0);
  for (Vertex v : trace.U) ++seen[v];
  for (Vertex v : trace.L) ++seen[v];
  for (Vertex v : trace.R) ++seen[v];
  CHECK(std::all_of(seen.begin(), seen.end(), [](int c) { return c == 1; }));
  CHECK(contains(trace.L, trace.u));
  CHECK(contains(trace.R, trace.path[trace.j + 1]));

  auto before = oracle::distances(t);
  auto after = oracle::distances(result);
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = 0; b < n; ++b) {
      const int delta = static_cast<int>(after[a][b]) - static_cast<int>(before[a][b]);
      int expected = 0;
      if ((contains(trace.U, a) && contains(trace.R, b)) || (contains(trace.U, b) && contains(trace.R, a))) {
        expected = -2;
      } else if ((contains(trace.U, a) && b == trace.u) || (contains(trace.U, b) && a == trace.u)) {
        expected = 2;
      }
      CHECK(delta == expected);
    }
  }

  if (trace.R.size() >= 2) CHECK(wiener(result) < wiener(t));
}

}  // namespace

TEST_CASE("mate on the three-legged spider") {
  auto spider = oracle::spider(3, 2);
  auto [result, trace] = mate(spider);
  CHECK(trace.path == std::vector<Vertex>{2, 1, 0, 3, 4});
  CHECK(trace.j == 2);
  CHECK(trace.u == 5);
  CHECK(trace.moved == std::vector<Vertex>{6});
  CHECK(trace.U == std::vector<Vertex>{6});
  CHECK(trace.L == std::vector<Vertex>{0, 1, 2, 5});
  CHECK(trace.R == std::vector<Vertex>{3, 4});

  CHECK(is_caterpillar(result));
  CHECK(result.adjacent(0, 5));
  CHECK(result.adjacent(3, 6));
  CHECK_FALSE(result.adjacent(5, 6));
  CHECK(of_tree(result).to_string() == "2;3,3");
  CHECK(oracle::sorted_eccentricities(result) == std::vector<std::uint32_t>{2, 3, 3, 3, 4, 4, 4});
  CHECK(wiener(result) == wiener(spider) - 2);
  check_mate(spider);
}

TEST_CASE("mate refuses caterpillars") {
  CHECK(code_of([] { mate(oracle::caterpillar_4434()); }) == ErrorCode::AlreadyCaterpillar);
  CHECK(code_of([] { mate(oracle::path(5)); }) == ErrorCode::AlreadyCaterpillar);
  CHECK(code_of([] { mate(oracle::path(2)); }) == ErrorCode::AlreadyCaterpillar);
}

TEST_CASE("mate is deterministic under input edge order") {
  auto t = oracle::spider(3, 3);
  auto edges = t.edges();
  std::reverse(edges.begin(), edges.end());
  auto shuffled = Tree::from_edge_list(t.order(), edges);
  CHECK(mate(t).tree == mate(shuffled).tree);
}

TEST_CASE("caterpillarize examples") {
  auto one = caterpillarize(oracle::spider(3, 2));
  CHECK(one.steps == 1);
  CHECK(is_caterpillar(one.tree));

  auto cat = oracle::caterpillar_4434();
  auto zero = caterpillarize(cat);
  CHECK(zero.steps == 0);
  CHECK(zero.tree == cat);

  auto big = oracle::spider(3, 3);
  auto res = caterpillarize(big);
  CHECK(res.steps <= 2);
  CHECK(is_caterpillar(res.tree));
  CHECK(of_tree(res.tree) == of_tree(big));
}

TEST_CASE("mate properties on every non-caterpillar up to order 10") {
  std::size_t checked = 0;
  for (std::size_t n = 7; n <= 10; ++n) {
    for (const auto& t : free_trees(n)) {
      if (is_caterpillar(t)) continue;
      check_mate(t);
      auto c = caterpillarize(t);
      CHECK(c.steps <= n);
      CHECK(of_tree(c.tree) == of_tree(t));
      ++checked;
    }
  }
  CHECK(checked == 1 + 3 + 11 + 34);
}

TEST_CASE("mate properties on random trees") {
  std::mt19937_64 rng(424242);
  int checked = 0;
  while (checked < 300) {
    auto t = random_tree(7 + rng() % 14, rng);
    if (is_caterpillar(t)) continue;
    check_mate(t);
    auto c = caterpillarize(t);
    CHECK(c.steps <= t.order());
    CHECK(of_tree(c.tree) == of_tree(t));
    ++checked;
  }
}
