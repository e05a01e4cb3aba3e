#include "ecctree/indices.hpp"

#include <algorithm>
#include <numeric>

namespace ecctree {

std::vector<std::uint64_t> distance_histogram(const Tree& t) {
  std::vector<std::uint64_t> hist(2, 0);
  for (Vertex v = 0; v < t.order(); ++v) {
    auto dist = bfs_distances(t, v);
    for (Vertex w = v + 1; w < t.order(); ++w) {
      if (dist[w] >= hist.size()) hist.resize(dist[w] + 1, 0);
      ++hist[dist[w]];
    }
  }
  return hist;
}

IndexValue wiener_type(const Tree& t, const WeightFunction& g) {
  const auto hist = distance_histogram(t);
  const auto diam = static_cast<std::uint32_t>(hist.size() - 1);
  if (g.exact()) {
    Rational sum = 0;
    for (std::uint32_t x = 1; x < hist.size(); ++x) {
      if (hist[x]) sum += g.exact_value(x, diam) * hist[x];
    }
    return IndexValue(std::move(sum));
  }
  double sum = 0;
  for (std::uint32_t x = 1; x < hist.size(); ++x) {
    sum += g.approx_value(x, diam) * static_cast<double>(hist[x]);
  }
  return IndexValue(sum);
}

std::uint32_t steiner_distance(const Tree& t, std::span<const Vertex> subset) {
  if (subset.empty()) throw Error(ErrorCode::BadSubset, "empty vertex subset");
  const std::size_t n = t.order();
  std::vector<char> keep(n, 0);
  for (Vertex v : subset) {
    if (v >= n) throw Error(ErrorCode::BadSubset, "label " + std::to_string(v) + " out of range");
    keep[v] = 1;
  }

  // Strip leaves outside the subset until none remain; what is left is the
  // Steiner tree.
  std::vector<std::size_t> degree(n);
  std::vector<Vertex> stack;
  for (Vertex v = 0; v < n; ++v) {
    degree[v] = t.degree(v);
    if (degree[v] <= 1 && !keep[v]) stack.push_back(v);
  }
  std::size_t remaining = n;
  std::vector<char> removed(n, 0);
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    removed[v] = 1;
    --remaining;
    for (Vertex w : t.neighbors(v)) {
      if (removed[w]) continue;
      if (--degree[w] == 1 && !keep[w]) stack.push_back(w);
    }
  }
  return static_cast<std::uint32_t>(remaining - 1);
}

BigInt binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  BigInt result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

namespace {

void check_k(const Tree& t, std::uint32_t k) {
  if (k < 1 || k > t.order()) {
    throw Error(ErrorCode::BadK, "k=" + std::to_string(k) + " outside 1.." + std::to_string(t.order()));
  }
}

// Subtree sizes with the tree rooted at vertex 0, plus each vertex's parent.
void subtree_sizes(const Tree& t, std::vector<std::size_t>& size, std::vector<Vertex>& parent) {
  const std::size_t n = t.order();
  size.assign(n, 1);
  parent.assign(n, 0);
  std::vector<Vertex> order{0};
  for (std::size_t head = 0; head < order.size(); ++head) {
    Vertex v = order[head];
    for (Vertex w : t.neighbors(v)) {
      if (v != 0 && w == parent[v]) continue;
      parent[w] = v;
      order.push_back(w);
    }
  }
  for (auto it = order.rbegin(); it + 1 != order.rend(); ++it) size[parent[*it]] += size[*it];
}

}  // namespace

BigInt sw_k_formula(const Tree& t, std::uint32_t k) {
  check_k(t, k);
  const std::size_t n = t.order();
  std::vector<std::size_t> size;
  std::vector<Vertex> parent;
  subtree_sizes(t, size, parent);

  std::vector<BigInt> choose(n + 1);
  for (std::size_t a = 0; a <= n; ++a) choose[a] = binomial(a, k);

  BigInt total = 0;
  for (Vertex v = 1; v < n; ++v) total += choose[n] - choose[size[v]] - choose[n - size[v]];
  return total;
}

BigInt sw_k_bruteforce(const Tree& t, std::uint32_t k, std::uint64_t subset_cap) {
  check_k(t, k);
  const std::size_t n = t.order();
  if (binomial(n, k) > subset_cap) {
    throw Error(ErrorCode::SizeLimit, "C(" + std::to_string(n) + "," + std::to_string(k) +
                                          ") subsets exceed cap " + std::to_string(subset_cap));
  }
  std::vector<Vertex> subset(k);
  std::iota(subset.begin(), subset.end(), Vertex{0});
  BigInt total = 0;
  while (true) {
    total += steiner_distance(t, subset);
    // Next k-combination in lexicographic order.
    std::size_t i = k;
    while (i > 0 && subset[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++subset[i - 1];
    for (std::size_t j = i; j < k; ++j) subset[j] = subset[j - 1] + 1;
  }
  return total;
}

BinomialSplit binomial_split_max(std::uint64_t t, std::uint64_t z, std::uint64_t k) {
  if (t < 1 || k < 1 || 2 * t > z) {
    throw Error(ErrorCode::BadParameters, "binomial split needs t, k >= 1 and 2t <= z");
  }
  // A single feasible split is trivially unique; for k = 1 every split ties.
  const bool forced = z - 2 * t <= 1;
  return {t, z - t, forced || (k >= 2 && k <= z - t)};
}

IndexSpec IndexSpec::parse(std::string_view text) {
  constexpr std::string_view prefix = "steiner:";
  if (text.substr(0, prefix.size()) == prefix) {
    auto digits = text.substr(prefix.size());
    if (digits.empty() || digits.size() > 9 || digits.find_first_not_of("0123456789") != std::string_view::npos) {
      throw Error(ErrorCode::ParseError, "bad Steiner order in '" + std::string(text) + "'");
    }
    return IndexSpec(Steiner{static_cast<std::uint32_t>(std::stoul(std::string(digits)))});
  }
  return IndexSpec(WeightFunction::parse(text));
}

bool IndexSpec::minimize() const noexcept {
  if (is_steiner()) return true;
  return weight().monotonicity() == Monotonicity::StrictlyIncreasing;
}

bool IndexSpec::exact() const noexcept { return is_steiner() || weight().exact(); }

std::string IndexSpec::to_string() const {
  if (is_steiner()) return "steiner:" + std::to_string(k());
  return weight().spec();
}

IndexValue IndexSpec::evaluate(const Tree& t) const {
  if (is_steiner()) return IndexValue(Rational(sw_k_formula(t, k())));
  return wiener_type(t, weight());
}

}  // namespace ecctree
