#include "ecctree/enumeration.hpp"

#include <algorithm>
#include <cstdlib>
#include <queue>
#include <string>

namespace ecctree {

namespace {

std::optional<std::size_t> env_cap() {
  const char* value = std::getenv("ECCTREE_MAX_N");
  if (!value || !*value) return std::nullopt;
  char* end = nullptr;
  auto parsed = std::strtoull(value, &end, 10);
  if (*end != '\0' || parsed < 2) return std::nullopt;
  return static_cast<std::size_t>(parsed);
}

using Levels = std::vector<std::uint32_t>;

std::uint32_t max_of(const Levels& v) { return *std::max_element(v.begin(), v.end()); }

// Splits a level sequence into the first subtree of the root (levels
// shifted up by one) and the remainder with the root kept.
std::pair<Levels, Levels> split_tree(const Levels& layout) {
  std::size_t m = layout.size();
  bool one_found = false;
  for (std::size_t i = 0; i < layout.size(); ++i) {
    if (layout[i] == 1) {
      if (one_found) {
        m = i;
        break;
      }
      one_found = true;
    }
  }
  Levels left;
  for (std::size_t i = 1; i < m; ++i) left.push_back(layout[i] - 1);
  Levels rest{0};
  rest.insert(rest.end(), layout.begin() + static_cast<std::ptrdiff_t>(m), layout.end());
  return {std::move(left), std::move(rest)};
}

// Successor of a canonical rooted level sequence, starting the search at
// position p (or at the last entry above level 1 when p is unset).
std::optional<Levels> next_rooted_tree(const Levels& pred, std::optional<std::size_t> start = {}) {
  std::size_t p;
  if (start) {
    p = *start;
  } else {
    p = pred.size() - 1;
    while (pred[p] == 1) --p;
  }
  if (p == 0) return std::nullopt;
  std::size_t q = p - 1;
  while (pred[q] != pred[p] - 1) --q;
  Levels result = pred;
  for (std::size_t i = p; i < result.size(); ++i) result[i] = result[i - p + q];
  return result;
}

// Returns the candidate if it is center-rooted canonical, otherwise the
// next sequence that is.
Levels next_free_tree(const Levels& candidate) {
  auto [left, rest] = split_tree(candidate);
  const auto left_height = max_of(left);
  const auto rest_height = max_of(rest);
  bool valid = rest_height >= left_height;
  if (valid && rest_height == left_height) {
    if (left.size() > rest.size()) {
      valid = false;
    } else if (left.size() == rest.size() && left > rest) {
      valid = false;
    }
  }
  if (valid) return candidate;

  const std::size_t p = left.size();
  Levels next = *next_rooted_tree(candidate, p);
  if (candidate[p] > 2) {
    auto [new_left, new_rest] = split_tree(next);
    const auto height = max_of(new_left);
    const std::size_t len = height + 1;
    for (std::size_t i = 0; i < len; ++i) next[next.size() - len + i] = static_cast<std::uint32_t>(i + 1);
  }
  return next;
}

}  // namespace

std::size_t enumeration_cap() { return env_cap().value_or(kDefaultEnumerationCap); }
std::size_t verify_cap() { return env_cap().value_or(kDefaultVerifyCap); }

Tree tree_from_levels(std::span<const std::uint32_t> levels) {
  std::vector<Edge> edges;
  std::vector<Vertex> stack;
  for (Vertex i = 0; i < levels.size(); ++i) {
    while (!stack.empty() && levels[stack.back()] >= levels[i]) stack.pop_back();
    if (!stack.empty()) edges.emplace_back(stack.back(), i);
    stack.push_back(i);
  }
  return Tree::from_edge_list(levels.size(), edges);
}

FreeTreeGenerator::FreeTreeGenerator(std::size_t n) : n_(n) {
  if (n < 2) throw Error(ErrorCode::BadParameters, "free trees need n >= 2");
  if (n > enumeration_cap()) {
    throw Error(ErrorCode::SizeLimit, "order " + std::to_string(n) + " exceeds enumeration cap " +
                                          std::to_string(enumeration_cap()));
  }
  for (std::uint32_t i = 0; i <= n / 2; ++i) level_.push_back(i);
  for (std::uint32_t i = 1; i < (n + 1) / 2; ++i) level_.push_back(i);
}

bool FreeTreeGenerator::advance_to_valid() {
  if (started_) {
    auto succ = next_rooted_tree(level_);
    if (!succ) return false;
    level_ = std::move(*succ);
  }
  started_ = true;
  level_ = next_free_tree(level_);
  return true;
}

std::optional<Tree> FreeTreeGenerator::next() {
  if (done_) return std::nullopt;
  if (!advance_to_valid()) {
    done_ = true;
    return std::nullopt;
  }
  return tree_from_levels(level_);
}

std::vector<Tree> free_trees(std::size_t n) {
  std::vector<Tree> out;
  FreeTreeGenerator gen(n);
  while (auto t = gen.next()) out.push_back(std::move(*t));
  return out;
}

Tree prufer_decode(std::span<const Vertex> word, std::size_t n) {
  if (n < 2 || word.size() != n - 2) throw Error(ErrorCode::BadParameters, "Prüfer word must have length n-2");
  std::vector<std::size_t> degree(n, 1);
  for (Vertex v : word) {
    if (v >= n) throw Error(ErrorCode::BadLabel, "Prüfer entry out of range");
    ++degree[v];
  }
  std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> leaves;
  for (Vertex v = 0; v < n; ++v) {
    if (degree[v] == 1) leaves.push(v);
  }
  std::vector<Edge> edges;
  for (Vertex v : word) {
    Vertex leaf = leaves.top();
    leaves.pop();
    edges.emplace_back(leaf, v);
    if (--degree[v] == 1) leaves.push(v);
  }
  Vertex a = leaves.top();
  leaves.pop();
  edges.emplace_back(a, leaves.top());
  return Tree::from_edge_list(n, edges);
}

void for_each_labeled_tree(std::size_t n, const std::function<void(const Tree&)>& visit) {
  if (n < 2) throw Error(ErrorCode::BadParameters, "labeled trees need n >= 2");
  if (n > kLabeledTreeCap) {
    throw Error(ErrorCode::SizeLimit, "labeled tree enumeration is capped at n = " + std::to_string(kLabeledTreeCap));
  }
  std::vector<Vertex> word(n - 2, 0);
  while (true) {
    visit(prufer_decode(word, n));
    std::size_t i = 0;
    while (i < word.size() && ++word[i] == n) word[i++] = 0;
    if (i == word.size()) break;
  }
}

std::vector<Tree> labeled_trees(std::size_t n) {
  std::vector<Tree> out;
  for_each_labeled_tree(n, [&](const Tree& t) { out.push_back(t); });
  return out;
}

Tree random_tree(std::size_t n, std::mt19937_64& rng) {
  if (n < 2) throw Error(ErrorCode::BadParameters, "random tree needs n >= 2");
  std::uniform_int_distribution<Vertex> pick(0, static_cast<Vertex>(n - 1));
  std::vector<Vertex> word(n - 2);
  for (auto& v : word) v = pick(rng);
  return prufer_decode(word, n);
}

SequenceClasses classify_by_sequence(std::size_t n) {
  SequenceClasses classes;
  FreeTreeGenerator gen(n);
  while (auto t = gen.next()) {
    auto key = of_tree(*t);
    classes[std::move(key)].push_back(std::move(*t));
  }
  return classes;
}

}  // namespace ecctree
