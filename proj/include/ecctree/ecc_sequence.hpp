#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ecctree/tree.hpp"

namespace ecctree {

/// Compact tree eccentric sequence (r; m_2, ..., m_l).
///
/// Only the radius and the multiplicities of eccentricities r+1, ..., r+l-1
/// are stored. The center multiplicity m_1 follows from the diameter
/// parity, so an EccSequence can never disagree with itself. Construction
/// enforces m_j >= 2 and d = r + l - 1 in {2r - 1, 2r}; under those
/// conditions every instance is a tree eccentric sequence.
class EccSequence {
 public:
  static EccSequence make(std::uint32_t radius, std::vector<std::uint32_t> multiplicities);

  std::uint32_t radius() const noexcept { return radius_; }
  /// m_2, ..., m_l.
  std::span<const std::uint32_t> multiplicities() const noexcept { return m_; }
  /// Number of distinct eccentricities.
  std::uint32_t length() const noexcept { return static_cast<std::uint32_t>(m_.size()) + 1; }
  std::uint32_t diameter() const noexcept { return radius_ + static_cast<std::uint32_t>(m_.size()); }
  std::uint32_t center_count() const noexcept { return diameter() % 2 == 0 ? 1 : 2; }
  std::size_t order() const noexcept;

  /// m_j for 1 <= j <= l, with m_1 the center multiplicity.
  std::uint32_t m(std::uint32_t j) const;

  /// The full nondecreasing eccentricity list.
  std::vector<std::uint32_t> expand() const;

  /// "r;m2,...,ml", e.g. "4;4,3,4". The single edge is "1;".
  std::string to_string() const;

  friend auto operator<=>(const EccSequence&, const EccSequence&) = default;
  friend bool operator==(const EccSequence&, const EccSequence&) = default;

 private:
  EccSequence(std::uint32_t r, std::vector<std::uint32_t> m) : radius_(r), m_(std::move(m)) {}

  std::uint32_t radius_ = 0;
  std::vector<std::uint32_t> m_;
};

enum class Rejection { CenterCondition, MultiplicityGap, NotSorted, TooShort };

std::string_view to_string(Rejection r);

struct Validation {
  std::optional<EccSequence> sequence;
  Rejection reason = Rejection::CenterCondition;  // meaningful only when !sequence

  explicit operator bool() const noexcept { return sequence.has_value(); }
};

/// Lesniak's characterization of tree eccentric sequences, applied to a
/// nondecreasing list. Length 2 accepts exactly (1,1).
Validation validate_sorted(std::span<const std::uint32_t> seq);

/// Eccentric sequence of a tree.
EccSequence of_tree(const Tree& t);

/// Parses "2,2,3,3,3" (full sorted form, then validated) or "2;3" (compact).
/// Malformed text throws ParseError; a well-formed but invalid sequence
/// throws InvalidSequence with the rejection reason in the message.
EccSequence parse_sequence(std::string_view text);

/// Like parse_sequence, but invalid sequences come back as a rejection.
Validation parse_and_validate(std::string_view text);

/// T(r; m_2, ..., m_l): the path v_0..v_d with m_j - 2 pendants at
/// v_{l+1-j}. Path vertices get labels 0..d, pendants follow in order of j.
Tree build_extremal(const EccSequence& s);

/// T_{d,n}: path of order d+1 with n-d-1 pendants at a center vertex.
Tree build_Tdn(std::size_t n, std::uint32_t d);

/// Moves the surplus of the last multiplicity above 2 one step towards the
/// center: with i the largest index >= 3 having m_i > 2, m_{i-1} grows by
/// m_i - 2 and m_i drops to 2. Throws NotReducible when no such i exists.
EccSequence seq_reduce(const EccSequence& s);

/// Index i used by seq_reduce, or std::nullopt if not reducible.
std::optional<std::uint32_t> reduction_index(const EccSequence& s);

/// Two non-isomorphic trees of order n, diameter d and equal eccentric
/// sequence whose k-Steiner Wiener indices coincide for
/// n + 1 - ceil(d/2) <= k <= n - 1. Requires d >= 3, n >= d + 3.
std::pair<Tree, Tree> counterexample_pair(std::size_t n, std::uint32_t d);

}  // namespace ecctree
