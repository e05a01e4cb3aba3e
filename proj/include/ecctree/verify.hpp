#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ecctree/canonical.hpp"
#include "ecctree/ecc_sequence.hpp"
#include "ecctree/indices.hpp"

namespace ecctree {

enum class ClassStatus { Pass, Fail, UniqueUnknown };

std::string_view to_string(ClassStatus s);

/// Extremal trees of one class (an eccentric sequence, or an order and
/// diameter) under one index.
struct ClassReport {
  std::string key;
  std::size_t size = 0;
  IndexValue extremal_value;
  std::vector<CanonicalForm> attainers;  // sorted
  CanonicalForm constructor;             // build_extremal(S) or T_{d,n}

  bool extremal_is_constructor = false;
  bool unique = false;
  bool uniqueness_required = false;
  bool uniqueness_threshold_respected = false;
  // Floating mode only: more than one tree within tolerance of the extremum.
  bool tie = false;
  ClassStatus status = ClassStatus::Fail;
};

struct VerifyReport {
  std::size_t order = 0;
  std::string index_spec;
  std::optional<std::uint32_t> diameter;
  std::vector<ClassReport> classes;  // sorted by class key order

  std::size_t tree_count() const;
  std::size_t failures() const;
  bool passed() const { return failures() == 0; }
};

struct VerifyOptions {
  /// Worker threads for per-class evaluation; 0 means hardware concurrency.
  unsigned jobs = 0;
  /// Restrict a sequence sweep to one class.
  std::optional<EccSequence> only_class;
};

/// Checks, for every eccentric-sequence class of order n, that the index is
/// extremal at build_extremal(S) (minimum for increasing g and for Steiner,
/// maximum for decreasing g). Uniqueness is required for every Wiener-type
/// g, and for SW_k only when k <= n - ceil(d/2).
VerifyReport verify_sequence_classes(std::size_t n, const IndexSpec& index, const VerifyOptions& options = {});

VerifyReport verify_wiener_type(std::size_t n, const WeightFunction& g, const VerifyOptions& options = {});

/// Requires 2 <= k <= n - 1.
VerifyReport verify_steiner(std::size_t n, std::uint32_t k, const VerifyOptions& options = {});

/// Single class: all trees of order n and diameter d, constructor T_{d,n}.
VerifyReport verify_diameter(std::size_t n, std::uint32_t d, const IndexSpec& index, const VerifyOptions& options = {});

/// JSON document for a report (two-space indented).
std::string to_json(const VerifyReport& report);

}  // namespace ecctree
