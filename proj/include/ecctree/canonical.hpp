#pragma once

#include <compare>
#include <string>
#include <string_view>

#include "ecctree/tree.hpp"

namespace ecctree {

/// Isomorphism-invariant key for a tree.
///
/// The tree is rooted at its center. For a bicentral tree the central edge
/// is subdivided by a virtual root, so the key of an n-vertex tree has 2n
/// symbols when unicentral and 2n+2 when bicentral; the two cases can never
/// collide. Each rooted subtree encodes as '(' + sorted child codes + ')'.
class CanonicalForm {
 public:
  CanonicalForm() = default;

  std::size_t order() const noexcept { return order_; }
  const std::string& code() const noexcept { return code_; }

  /// Four hex digits of the order followed by the code packed one bit per
  /// symbol ('(' = 1), most significant bit first, zero padded.
  std::string hex() const;
  static CanonicalForm from_hex(std::string_view hex);

  /// Rebuilds a representative tree: vertex 0 is the (real) root, labels
  /// are assigned in preorder.
  Tree to_tree() const;

  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;

 private:
  friend CanonicalForm canonical_form(const Tree& t);
  CanonicalForm(std::size_t order, std::string code) : order_(order), code_(std::move(code)) {}

  std::size_t order_ = 0;
  std::string code_;
};

CanonicalForm canonical_form(const Tree& t);

bool is_isomorphic(const Tree& a, const Tree& b);

}  // namespace ecctree
