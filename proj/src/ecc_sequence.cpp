#include "ecctree/ecc_sequence.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

namespace ecctree {

std::string_view to_string(Rejection r) {
  switch (r) {
    case Rejection::CenterCondition: return "CenterCondition";
    case Rejection::MultiplicityGap: return "MultiplicityGap";
    case Rejection::NotSorted: return "NotSorted";
    case Rejection::TooShort: return "TooShort";
  }
  return "Unknown";
}

EccSequence EccSequence::make(std::uint32_t radius, std::vector<std::uint32_t> multiplicities) {
  if (radius == 0) throw Error(ErrorCode::InvalidSequence, "CenterCondition: radius must be positive");
  const auto count = multiplicities.size();
  if (count + 1 != radius && count != radius) {
    throw Error(ErrorCode::InvalidSequence,
                "CenterCondition: radius " + std::to_string(radius) + " needs " +
                    std::to_string(radius - 1) + " or " + std::to_string(radius) +
                    " multiplicities, got " + std::to_string(count));
  }
  for (auto m : multiplicities) {
    if (m < 2) throw Error(ErrorCode::InvalidSequence, "MultiplicityGap: every m_j must be at least 2");
  }
  EccSequence s(radius, std::move(multiplicities));
  if (s.order() > kMaxOrder) throw Error(ErrorCode::SizeLimit, "sequence order exceeds cap");
  return s;
}

std::size_t EccSequence::order() const noexcept {
  return std::accumulate(m_.begin(), m_.end(), std::size_t{center_count()});
}

std::uint32_t EccSequence::m(std::uint32_t j) const {
  if (j == 1) return center_count();
  if (j < 1 || j > length()) throw Error(ErrorCode::BadParameters, "multiplicity index out of range");
  return m_[j - 2];
}

std::vector<std::uint32_t> EccSequence::expand() const {
  std::vector<std::uint32_t> out(center_count(), radius_);
  for (std::size_t j = 0; j < m_.size(); ++j) {
    out.insert(out.end(), m_[j], radius_ + static_cast<std::uint32_t>(j) + 1);
  }
  return out;
}

std::string EccSequence::to_string() const {
  std::string out = std::to_string(radius_) + ";";
  for (std::size_t j = 0; j < m_.size(); ++j) {
    if (j) out += ",";
    out += std::to_string(m_[j]);
  }
  return out;
}

Validation validate_sorted(std::span<const std::uint32_t> a) {
  auto reject = [](Rejection r) { return Validation{std::nullopt, r}; };
  const std::size_t n = a.size();
  if (n < 2) return reject(Rejection::TooShort);
  if (!std::is_sorted(a.begin(), a.end())) return reject(Rejection::NotSorted);
  if (n == 2) {
    if (a[0] == 1 && a[1] == 1) return Validation{EccSequence::make(1, {}), {}};
    return reject(Rejection::CenterCondition);
  }

  // Condition (i): one center with a_1 = a_n / 2, or two with a_1 = (a_n + 1) / 2.
  const std::uint64_t first = a[0];
  const std::uint64_t last = a[n - 1];
  const bool unicentral = 2 * first == last && a[1] != a[0];
  const bool bicentral = 2 * first == last + 1 && a[1] == a[0] && a[2] != a[1];
  if (!unicentral && !bicentral) return reject(Rejection::CenterCondition);

  // Condition (ii): every value in (a_1, a_n] occurs at least twice. Values
  // are contiguous because the list is sorted and has no single gaps.
  std::vector<std::uint32_t> multiplicities;
  std::size_t i = unicentral ? 1 : 2;
  for (std::uint64_t k = first + 1; k <= last; ++k) {
    std::uint32_t count = 0;
    while (i < n && a[i] == k) {
      ++count;
      ++i;
    }
    if (count < 2) return reject(Rejection::MultiplicityGap);
    multiplicities.push_back(count);
  }
  return Validation{EccSequence::make(static_cast<std::uint32_t>(first), std::move(multiplicities)), {}};
}

EccSequence of_tree(const Tree& t) {
  auto ecc = ecc_profile(t).eccentricity;
  std::sort(ecc.begin(), ecc.end());
  auto v = validate_sorted(ecc);
  if (!v) {
    // Unreachable for a valid tree.
    throw Error(ErrorCode::DomainError, "tree produced invalid eccentric sequence");
  }
  return *v.sequence;
}

namespace {

std::vector<std::uint32_t> parse_list(std::string_view text, bool allow_empty) {
  std::vector<std::uint32_t> out;
  auto trim = [](std::string_view s) {
    auto b = s.find_first_not_of(" \t");
    if (b == std::string_view::npos) return std::string_view{};
    auto e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
  };
  text = trim(text);
  if (text.empty()) {
    if (allow_empty) return out;
    throw Error(ErrorCode::ParseError, "empty sequence");
  }
  while (true) {
    auto comma = text.find(',');
    auto token = trim(text.substr(0, comma));
    std::uint32_t value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
      throw Error(ErrorCode::ParseError, "bad sequence entry '" + std::string(token) + "'");
    }
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    text = text.substr(comma + 1);
  }
  return out;
}

Rejection reason_of(const Error& e) {
  std::string_view msg = e.what();
  for (auto r : {Rejection::MultiplicityGap, Rejection::NotSorted, Rejection::TooShort}) {
    if (msg.find(to_string(r)) != std::string_view::npos) return r;
  }
  return Rejection::CenterCondition;
}

}  // namespace

Validation parse_and_validate(std::string_view text) {
  auto semi = text.find(';');
  if (semi == std::string_view::npos) return validate_sorted(parse_list(text, false));

  auto head = parse_list(text.substr(0, semi), false);
  if (head.size() != 1) throw Error(ErrorCode::ParseError, "compact form needs one radius before ';'");
  auto tail = parse_list(text.substr(semi + 1), true);
  try {
    return Validation{EccSequence::make(head[0], std::move(tail)), {}};
  } catch (const Error& e) {
    if (e.code() != ErrorCode::InvalidSequence) throw;
    return Validation{std::nullopt, reason_of(e)};
  }
}

EccSequence parse_sequence(std::string_view text) {
  auto v = parse_and_validate(text);
  if (!v) {
    throw Error(ErrorCode::InvalidSequence,
                std::string(to_string(v.reason)) + ": '" + std::string(text) + "'");
  }
  return *v.sequence;
}

namespace {

// Path v_0..v_d, then for each (i, count) in `attach`, count new leaves on v_i.
Tree caterpillar(std::uint32_t d, const std::vector<std::pair<std::uint32_t, std::uint32_t>>& attach) {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < d; ++i) edges.emplace_back(i, i + 1);
  Vertex next = d + 1;
  for (auto [where, count] : attach) {
    for (std::uint32_t c = 0; c < count; ++c) edges.emplace_back(where, next++);
  }
  return Tree::from_edge_list(next, edges);
}

}  // namespace

Tree build_extremal(const EccSequence& s) {
  const std::uint32_t l = s.length();
  std::vector<std::pair<std::uint32_t, std::uint32_t>> attach;
  for (std::uint32_t j = 2; j <= l; ++j) attach.emplace_back(l + 1 - j, s.m(j) - 2);
  return caterpillar(s.diameter(), attach);
}

Tree build_Tdn(std::size_t n, std::uint32_t d) {
  if (d < 2 || n > kMaxOrder || d + 1 > n) {
    throw Error(ErrorCode::BadParameters,
                "T_{d,n} needs 2 <= d <= n-1 (n=" + std::to_string(n) + ", d=" + std::to_string(d) + ")");
  }
  std::vector<std::uint32_t> m(d / 2, 2);
  m[0] = static_cast<std::uint32_t>(n - d + 1);
  return build_extremal(EccSequence::make((d + 1) / 2, std::move(m)));
}

std::optional<std::uint32_t> reduction_index(const EccSequence& s) {
  if (s.diameter() < 3) return std::nullopt;
  for (std::uint32_t i = s.length(); i >= 3; --i) {
    if (s.m(i) > 2) return i;
  }
  return std::nullopt;
}

EccSequence seq_reduce(const EccSequence& s) {
  auto i = reduction_index(s);
  if (!i) throw Error(ErrorCode::NotReducible, "'" + s.to_string() + "' has m_j = 2 for all j >= 3");
  std::vector<std::uint32_t> m(s.multiplicities().begin(), s.multiplicities().end());
  // m_j lives at m[j - 2].
  m[*i - 3] += m[*i - 2] - 2;
  m[*i - 2] = 2;
  return EccSequence::make(s.radius(), std::move(m));
}

std::pair<Tree, Tree> counterexample_pair(std::size_t n, std::uint32_t d) {
  if (d < 3 || n > kMaxOrder || n < static_cast<std::size_t>(d) + 3) {
    throw Error(ErrorCode::BadParameters, "counterexample pair needs d >= 3 and n >= d + 3 (n=" +
                                              std::to_string(n) + ", d=" + std::to_string(d) + ")");
  }
  const auto pendants = static_cast<std::uint32_t>(n - d - 1);
  const std::uint32_t low = d % 2 == 1 ? (d - 1) / 2 : (d - 2) / 2;
  const std::uint32_t high = d % 2 == 1 ? (d + 1) / 2 : (d + 2) / 2;
  return {caterpillar(d, {{low, pendants}}), caterpillar(d, {{low, pendants - 1}, {high, 1}})};
}

}  // namespace ecctree
