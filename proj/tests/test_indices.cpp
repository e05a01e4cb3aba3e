#include "doctest.h"

#include <numeric>
#include <random>

#include "ecctree/enumeration.hpp"
#include "ecctree/error.hpp"
#include "ecctree/indices.hpp"
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

Rational exact(const Tree& t, std::string_view spec) { return IndexSpec::parse(spec).evaluate(t).exact(); }

Rational r(long p, long q = 1) { return Rational(p) / Rational(q); }

// Sum of g over unordered pairs straight from the Floyd-Warshall matrix.
Rational pair_sum(const Tree& t, const std::function<Rational(std::uint32_t, std::uint32_t)>& g) {
  auto d = oracle::distances(t);
  std::uint32_t diam = 0;
  for (const auto& row : d)
    for (auto x : row) diam = std::max(diam, x);
  Rational total = 0;
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = i + 1; j < d.size(); ++j) total += g(d[i][j], diam);
  return total;
}

BigInt lcm_upto(std::uint32_t m) {
  BigInt l = 1;
  for (std::uint32_t i = 2; i <= m; ++i) l = boost::multiprecision::lcm(l, BigInt(i));
  return l;
}

}  // namespace

TEST_CASE("Wiener-type index examples") {
  CHECK(exact(oracle::path(4), "wiener") == 10);
  CHECK(exact(oracle::path(3), "harary") == r(5, 2));
  CHECK(exact(oracle::path(3), "hyper") == 5);
  CHECK(exact(oracle::star(3), "rcw") == r(9, 2));
  CHECK(exact(oracle::caterpillar_4434(), "wiener") == 250);
  CHECK(exact(oracle::path(4), "genw:2") == 3 * 1 + 2 * 4 + 9);
  CHECK(exact(oracle::path(4), "genw:-1") == r(3) + r(2, 2) + r(1, 3));
  CHECK(IndexSpec::parse("wiener").evaluate(oracle::path(4)).to_string() == "10");
  CHECK(IndexSpec::parse("harary").evaluate(oracle::path(3)).to_string() == "5/2");
}

TEST_CASE("distance histogram") {
  CHECK(distance_histogram(oracle::path(4)) == std::vector<std::uint64_t>{0, 3, 2, 1});
  CHECK(distance_histogram(oracle::star(3)) == std::vector<std::uint64_t>{0, 3, 3});
}

TEST_CASE("Wiener-type indices agree with a pairwise oracle") {
  std::vector<std::pair<std::string, std::function<Rational(std::uint32_t, std::uint32_t)>>> cases{
      {"wiener", [](std::uint32_t x, std::uint32_t) { return Rational(x); }},
      {"hyper", [](std::uint32_t x, std::uint32_t) { return Rational(x * (x + 1)) / 2; }},
      {"harary", [](std::uint32_t x, std::uint32_t) { return Rational(1) / x; }},
      {"rcw", [](std::uint32_t x, std::uint32_t d) { return Rational(1) / (d + 1 - x); }},
      {"genw:3", [](std::uint32_t x, std::uint32_t) { return Rational(x * x * x); }},
      {"genw:-2", [](std::uint32_t x, std::uint32_t) { return Rational(1) / (x * x); }},
  };
  std::mt19937_64 rng(11);
  for (int i = 0; i < 100; ++i) {
    auto t = random_tree(2 + rng() % 25, rng);
    for (const auto& [spec, g] : cases) CHECK(exact(t, spec) == pair_sum(t, g));
  }
}

TEST_CASE("exact results have the expected denominators") {
  for (std::size_t n = 2; n <= 9; ++n) {
    for (const auto& t : free_trees(n)) {
      CHECK(denominator(exact(t, "wiener")) == 1);
      CHECK(denominator(exact(t, "hyper")) == 1);
      auto l = lcm_upto(diameter(t));
      CHECK(l % denominator(exact(t, "harary")) == 0);
      CHECK(l % denominator(exact(t, "rcw")) == 0);
    }
  }
}

TEST_CASE("pointwise larger weights give larger indices") {
  // hyper >= wiener >= harary and genw:2 >= wiener pointwise on x >= 1.
  std::mt19937_64 rng(5);
  for (int i = 0; i < 200; ++i) {
    auto t = random_tree(2 + rng() % 20, rng);
    auto w = exact(t, "wiener");
    CHECK(exact(t, "hyper") >= w);
    CHECK(exact(t, "genw:2") >= w);
    CHECK(w >= exact(t, "harary"));
    CHECK(exact(t, "genw:-1") >= exact(t, "genw:-2"));
  }
}

TEST_CASE("weight function parsing and metadata") {
  using M = Monotonicity;
  CHECK(WeightFunction::parse("wiener").monotonicity() == M::StrictlyIncreasing);
  CHECK(WeightFunction::parse("hyper").monotonicity() == M::StrictlyIncreasing);
  CHECK(WeightFunction::parse("rcw").monotonicity() == M::StrictlyIncreasing);
  CHECK(WeightFunction::parse("harary").monotonicity() == M::StrictlyDecreasing);
  CHECK(WeightFunction::parse("genw:2").monotonicity() == M::StrictlyIncreasing);
  CHECK(WeightFunction::parse("genw:-1").monotonicity() == M::StrictlyDecreasing);
  CHECK(WeightFunction::parse("genw:2").exact());
  CHECK(WeightFunction::parse("genw:2.0").exact());
  CHECK_FALSE(WeightFunction::parse("genw:2.5").exact());
  CHECK_FALSE(WeightFunction::parse("genw:100").exact());
  CHECK(WeightFunction::parse("genw:2").spec() == "genw:2");

  CHECK(code_of([] { WeightFunction::parse("genw:0"); }) == ErrorCode::BadParameters);
  CHECK(code_of([] { WeightFunction::parse("genw:abc"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { WeightFunction::parse("nope"); }) == ErrorCode::ParseError);

  auto s = IndexSpec::parse("steiner:4");
  CHECK(s.is_steiner());
  CHECK(s.k() == 4);
  CHECK(s.minimize());
  CHECK(s.to_string() == "steiner:4");
  CHECK_FALSE(IndexSpec::parse("harary").minimize());
  CHECK(IndexSpec::parse("genw:-2").to_string() == "genw:-2");
  CHECK(code_of([] { IndexSpec::parse("steiner:x"); }) == ErrorCode::ParseError);
}

TEST_CASE("floating mode") {
  auto v = IndexSpec::parse("genw:2.5").evaluate(oracle::path(4));
  CHECK_FALSE(v.is_exact());
  double expect = 3.0 + 2.0 * std::pow(2.0, 2.5) + std::pow(3.0, 2.5);
  CHECK(v.approx() == doctest::Approx(expect).epsilon(1e-12));
  CHECK(v.to_string() == "29.9021657671");

  CHECK(compare(IndexValue(1.0), IndexValue(1.0 + 1e-12)) == 0);
  CHECK(compare(IndexValue(1.0), IndexValue(1.1)) < 0);
  CHECK(compare(IndexValue(Rational(1, 3)), IndexValue(Rational(1, 2))) < 0);
  CHECK(compare(IndexValue(Rational(1, 2)), IndexValue(Rational(1, 2))) == 0);
}

TEST_CASE("Steiner distance examples") {
  auto p4 = oracle::path(4);
  std::vector<Vertex> ends{0, 3};
  CHECK(steiner_distance(p4, ends) == 3);
  std::vector<Vertex> three{1, 2, 3};
  CHECK(steiner_distance(oracle::star(3), three) == 3);
  for (Vertex v = 0; v < 4; ++v) {
    std::vector<Vertex> single{v};
    CHECK(steiner_distance(p4, single) == 0);
  }
  std::vector<Vertex> empty;
  CHECK(code_of([&] { steiner_distance(p4, empty); }) == ErrorCode::BadSubset);
  std::vector<Vertex> dup{1, 1};
  CHECK(steiner_distance(p4, dup) == 0);
  std::vector<Vertex> out{0, 9};
  CHECK(code_of([&] { steiner_distance(p4, out); }) == ErrorCode::BadSubset);
}

TEST_CASE("Steiner-Wiener examples") {
  auto p4 = oracle::path(4);
  auto k13 = oracle::star(3);
  std::vector<long> p4_expect{0, 10, 10, 3};
  std::vector<long> k13_expect{0, 9, 9, 3};
  for (std::uint32_t k = 1; k <= 4; ++k) {
    CHECK(sw_k_formula(p4, k) == p4_expect[k - 1]);
    CHECK(sw_k_bruteforce(p4, k) == p4_expect[k - 1]);
    CHECK(sw_k_formula(k13, k) == k13_expect[k - 1]);
    CHECK(sw_k_bruteforce(k13, k) == k13_expect[k - 1]);
  }
  CHECK(exact(p4, "steiner:4") == 3);
  CHECK(code_of([&] { sw_k_formula(p4, 0); }) == ErrorCode::BadK);
  CHECK(code_of([&] { sw_k_formula(p4, 5); }) == ErrorCode::BadK);
  CHECK(code_of([&] { sw_k_bruteforce(p4, 5); }) == ErrorCode::BadK);
  CHECK(code_of([] { sw_k_bruteforce(oracle::path(30), 10, 1000); }) == ErrorCode::SizeLimit);
}

TEST_CASE("binomials") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(2, 5) == 0);
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(60, 30) == BigInt("118264581564861424"));
}

TEST_CASE("edge-split formula matches brute force") {
  for (std::size_t n = 2; n <= 8; ++n) {
    for (const auto& t : free_trees(n)) {
      for (std::uint32_t k = 1; k <= n; ++k) CHECK(sw_k_formula(t, k) == sw_k_bruteforce(t, k));
    }
  }
  std::mt19937_64 rng(17);
  for (int i = 0; i < 100; ++i) {
    std::size_t n = 9 + rng() % 6;
    auto t = random_tree(n, rng);
    for (std::uint32_t k = 1; k <= std::min<std::size_t>(n, 10); ++k) CHECK(sw_k_formula(t, k) == sw_k_bruteforce(t, k));
  }
}

TEST_CASE("closed forms for small and large k") {
  for (std::size_t n = 3; n <= 10; ++n) {
    for (const auto& t : free_trees(n)) {
      BigInt w = sw_k_formula(t, 2);
      CHECK(Rational(w) == exact(t, "wiener"));
      CHECK(Rational(sw_k_formula(t, 3)) == Rational(BigInt(n - 2) * w) / 2);
      CHECK(sw_k_formula(t, static_cast<std::uint32_t>(n)) == n - 1);
      auto p = leaves(t).size();
      CHECK(sw_k_formula(t, static_cast<std::uint32_t>(n - 1)) == BigInt(n * (n - 1) - p));
    }
  }
}

TEST_CASE("binomial split examples") {
  auto a = binomial_split_max(2, 7, 3);
  CHECK(a.x == 2);
  CHECK(a.y == 5);
  CHECK(a.unique);

  auto b = binomial_split_max(3, 6, 2);
  CHECK(b.x == 3);
  CHECK(b.y == 3);
  CHECK(b.unique);

  auto c = binomial_split_max(2, 7, 6);
  CHECK(c.x == 2);
  CHECK(c.y == 5);
  CHECK_FALSE(c.unique);

  CHECK(code_of([] { binomial_split_max(0, 7, 3); }) == ErrorCode::BadParameters);
  CHECK(code_of([] { binomial_split_max(4, 7, 3); }) == ErrorCode::BadParameters);
  CHECK(code_of([] { binomial_split_max(2, 7, 0); }) == ErrorCode::BadParameters);
}

TEST_CASE("binomial split agrees with enumeration") {
  for (std::uint64_t z = 2; z <= 24; ++z) {
    for (std::uint64_t t = 1; 2 * t <= z; ++t) {
      for (std::uint64_t k = 1; k <= z + 1; ++k) {
        BigInt best = -1;
        std::size_t count = 0;
        for (std::uint64_t x = t; x <= z - t; ++x) {
          BigInt v = binomial(x, k) + binomial(z - x, k);
          if (v > best) {
            best = v;
            count = 1;
          } else if (v == best) {
            ++count;
          }
        }
        auto s = binomial_split_max(t, z, k);
        CHECK(s.x + s.y == z);
        CHECK(binomial(s.x, k) + binomial(s.y, k) == best);
        // The extremes x = t and x = z - t are the same split only when 2t = z.
        std::size_t distinct = (2 * t == z) ? count : (count + 1) / 2;
        CHECK(s.unique == (distinct == 1));
      }
    }
  }
}
