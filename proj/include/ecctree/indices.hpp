#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ecctree/tree.hpp"
#include "ecctree/weight_function.hpp"

namespace ecctree {

/// Number of unordered vertex pairs at each distance; entry 0 is unused.
std::vector<std::uint64_t> distance_histogram(const Tree& t);

/// W(T;g) = sum over unordered pairs of g(d(u,v)). RCW takes the diameter
/// from t itself.
IndexValue wiener_type(const Tree& t, const WeightFunction& g);

/// Edge count of the smallest subtree containing `subset`. Duplicate
/// labels are ignored. Throws BadSubset for empty or out-of-range input.
std::uint32_t steiner_distance(const Tree& t, std::span<const Vertex> subset);

/// C(n, k), zero when k > n.
BigInt binomial(std::uint64_t n, std::uint64_t k);

/// k-Steiner Wiener index via the edge-split identity
/// SW_k = sum_e [C(n,k) - C(n1(e),k) - C(n2(e),k)].
BigInt sw_k_formula(const Tree& t, std::uint32_t k);

inline constexpr std::uint64_t kDefaultSubsetCap = 10'000'000;

/// k-Steiner Wiener index by summing steiner_distance over every k-subset.
/// Throws SizeLimit when C(n,k) exceeds `subset_cap`.
BigInt sw_k_bruteforce(const Tree& t, std::uint32_t k, std::uint64_t subset_cap = kDefaultSubsetCap);

struct BinomialSplit {
  std::uint64_t x = 0;
  std::uint64_t y = 0;
  bool unique = false;
};

/// Maximizer of C(x,k) + C(y,k) subject to x + y = z and x, y >= t (needs
/// 2t <= z). The answer is always (t, z - t); `unique` is true when no other
/// split (up to swapping) attains it: k <= z - t with k >= 2, or a forced split.
BinomialSplit binomial_split_max(std::uint64_t t, std::uint64_t z, std::uint64_t k);

/// Either a Wiener-type weight function or the k-Steiner Wiener index.
/// Text form: wiener, hyper, harary, rcw, genw:<lambda>, steiner:<k>.
class IndexSpec {
 public:
  struct Steiner {
    std::uint32_t k;
  };

  IndexSpec(WeightFunction g) : spec_(g) {}  // NOLINT(google-explicit-constructor)
  IndexSpec(Steiner s) : spec_(s) {}         // NOLINT(google-explicit-constructor)

  static IndexSpec parse(std::string_view text);

  bool is_steiner() const noexcept { return std::holds_alternative<Steiner>(spec_); }
  const WeightFunction& weight() const { return std::get<WeightFunction>(spec_); }
  std::uint32_t k() const { return std::get<Steiner>(spec_).k; }

  /// Steiner indices are minimized; Wiener-type indices follow g.
  bool minimize() const noexcept;
  bool exact() const noexcept;
  std::string to_string() const;

  IndexValue evaluate(const Tree& t) const;

 private:
  std::variant<WeightFunction, Steiner> spec_;
};

}  // namespace ecctree
