#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "ecctree/ecc_sequence.hpp"
#include "ecctree/tree.hpp"

namespace ecctree {

inline constexpr std::size_t kDefaultEnumerationCap = 18;
inline constexpr std::size_t kDefaultVerifyCap = 14;
inline constexpr std::size_t kLabeledTreeCap = 9;

/// Enumeration cap, overridden by the ECCTREE_MAX_N environment variable.
std::size_t enumeration_cap();
/// Cap for full verification sweeps; ECCTREE_MAX_N overrides it as well.
std::size_t verify_cap();

/// Generates every free tree of order n exactly once, in a fixed order.
///
/// Each tree is a canonical level sequence of a tree rooted at its center
/// (Wright, Richmond, Odlyzko and McKay's successor rule); vertex i of the
/// emitted tree is position i of the level sequence, so 0 is the root.
class FreeTreeGenerator {
 public:
  explicit FreeTreeGenerator(std::size_t n);

  std::optional<Tree> next();

 private:
  bool advance_to_valid();

  std::size_t n_;
  std::vector<std::uint32_t> level_;
  bool done_ = false;
  bool started_ = false;
};

std::vector<Tree> free_trees(std::size_t n);

/// Tree with level sequence `levels` (levels[0] = 0, each later entry at
/// most one deeper than its predecessor).
Tree tree_from_levels(std::span<const std::uint32_t> levels);

/// Decodes a Prüfer word of length n-2 over 0..n-1.
Tree prufer_decode(std::span<const Vertex> word, std::size_t n);

/// Calls `visit` for each of the n^(n-2) labeled trees on n <= 9 vertices.
void for_each_labeled_tree(std::size_t n, const std::function<void(const Tree&)>& visit);
std::vector<Tree> labeled_trees(std::size_t n);

/// Uniformly random labeled tree via a random Prüfer word.
Tree random_tree(std::size_t n, std::mt19937_64& rng);

using SequenceClasses = std::map<EccSequence, std::vector<Tree>>;

/// Partitions the free trees of order n by eccentric sequence.
SequenceClasses classify_by_sequence(std::size_t n);

}  // namespace ecctree
