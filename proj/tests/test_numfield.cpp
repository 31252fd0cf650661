#include <doctest.h>

#include <cmath>

#include "entropia/numfield.hpp"
#include "entropia/suites.hpp"
#include "oracles.hpp"

using namespace entropia;

namespace {

using Factors = std::vector<IdealFactor>;

// Roots of x^k - a over F_p by exhaustion.
int count_roots(std::uint64_t k, std::int64_t a, std::uint64_t p) {
  const auto target = static_cast<std::uint64_t>(((a % (std::int64_t)p) + (std::int64_t)p) % (std::int64_t)p);
  int roots = 0;
  for (std::uint64_t x = 0; x < p; ++x) {
    std::uint64_t v = 1;
    for (std::uint64_t i = 0; i < k; ++i) v = v * x % p;
    if (v == target) ++roots;
  }
  return roots;
}

std::uint64_t brute_order(std::uint64_t a, std::uint64_t l) {
  std::uint64_t v = a % l;
  for (std::uint64_t k = 1;; ++k) {
    if (v == 1) return k;
    v = v * a % l;
  }
}

}  // namespace

TEST_CASE("field spec grammar") {
  CHECK(FieldSpec::parse("quad:-1") == FieldSpec::quadratic(-1));
  CHECK(FieldSpec::parse("cyclo:5").degree() == 4);
  CHECK(FieldSpec::parse("cubic:2").degree() == 3);
  CHECK(FieldSpec::parse("quad:13").to_string() == "quad:13");
  CHECK_THROWS_AS(FieldSpec::parse("Quad:2"), std::domain_error);
  CHECK_THROWS_AS(FieldSpec::parse("quad"), std::domain_error);
  CHECK_THROWS_AS(FieldSpec::parse("quad:"), std::domain_error);
  CHECK_THROWS_AS(FieldSpec::parse("quad:2x"), std::domain_error);
  CHECK_THROWS_AS(FieldSpec::parse("cubic:-2"), std::domain_error);
}

TEST_CASE("field invariants") {
  CHECK_THROWS_AS(FieldSpec::quadratic(0), std::domain_error);
  CHECK_THROWS_AS(FieldSpec::quadratic(1), std::domain_error);
  CHECK_THROWS_AS(FieldSpec::quadratic(12), std::domain_error);
  CHECK_THROWS_AS(FieldSpec::quadratic(-4), std::domain_error);
  CHECK_THROWS_AS(FieldSpec::cyclotomic(2), std::domain_error);
  CHECK_THROWS_AS(FieldSpec::cyclotomic(9), std::domain_error);
  CHECK_THROWS_AS(FieldSpec::pure_cubic(1), std::domain_error);
  CHECK_THROWS_AS(FieldSpec::pure_cubic(16), std::domain_error);  // not cubefree
  CHECK_THROWS_AS(FieldSpec::pure_cubic(10), std::domain_error);  // 100 = 1 mod 9
  CHECK_NOTHROW(FieldSpec::pure_cubic(12));
  CHECK(FieldSpec::quadratic(-5).is_galois());
  CHECK_FALSE(FieldSpec::pure_cubic(2).is_galois());
}

TEST_CASE("kronecker symbol against Euler's criterion") {
  for (std::uint64_t p = 3; p < 400; ++p) {
    if (!oracle::is_prime(p)) continue;
    for (std::int64_t a = -60; a <= 60; ++a) {
      const auto am = static_cast<std::uint64_t>(((a % (std::int64_t)p) + (std::int64_t)p) % (std::int64_t)p);
      int expected = 0;
      if (am != 0) expected = pow_mod(am, (p - 1) / 2, p) == 1 ? 1 : -1;
      REQUIRE(kronecker(a, p) == expected);
    }
  }
  CHECK(kronecker(5, 2) == -1);
  CHECK(kronecker(1, 2) == 1);
  CHECK(kronecker(6, 2) == 0);
}

TEST_CASE("split_prime examples") {
  const auto s55 = split_prime(FieldSpec::cyclotomic(5), 5);
  CHECK(s55.factors() == Factors{{4, 1}});
  CHECK(s55.g() == 1);

  const auto s29 = split_prime(FieldSpec::pure_cubic(2), 29);
  CHECK(s29.g() == 2);
  CHECK(s29.ramification_indices() == std::vector<std::uint32_t>{1, 1});
  CHECK(s29.factors() == Factors{{1, 2}, {1, 1}});

  const auto s31 = split_prime(FieldSpec::pure_cubic(2), 31);
  CHECK(s31.factors() == Factors{{1, 1}, {1, 1}, {1, 1}});

  CHECK(split_prime(FieldSpec::quadratic(-1), 2).factors() == Factors{{2, 1}});
  CHECK(split_prime(FieldSpec::quadratic(-1), 5).factors() == Factors{{1, 1}, {1, 1}});
  CHECK(split_prime(FieldSpec::quadratic(-1), 7).factors() == Factors{{1, 2}});
  CHECK(split_prime(FieldSpec::quadratic(5), 2).factors() == Factors{{1, 2}});
  CHECK(split_prime(FieldSpec::quadratic(-7), 2).factors() == Factors{{1, 1}, {1, 1}});
  CHECK(split_prime(FieldSpec::cyclotomic(7), 2).factors() == Factors{{1, 3}, {1, 3}});
  CHECK(split_prime(FieldSpec::pure_cubic(2), 3).factors() == Factors{{3, 1}});
  CHECK(split_prime(FieldSpec::pure_cubic(2), 2).factors() == Factors{{3, 1}});
  CHECK(split_prime(FieldSpec::pure_cubic(2), 7).factors() == Factors{{1, 3}});

  CHECK_THROWS_AS(split_prime(FieldSpec::quadratic(2), 9), std::domain_error);
}

TEST_CASE("quadratic splitting agrees with root counting") {
  for (std::int64_t d : {-1, 2, -2, 3, -3, 5, -5, 13, -7, 17, 21}) {
    const auto field = FieldSpec::quadratic(d);
    for (std::uint64_t p = 3; p < 2'000; ++p) {
      if (!oracle::is_prime(p)) continue;
      const int roots = count_roots(2, d, p);
      const auto sp = split_prime(field, p);
      const Factors expected = roots == 2 ? Factors{{1, 1}, {1, 1}}
                               : roots == 1 ? Factors{{2, 1}}
                                            : Factors{{1, 2}};
      REQUIRE(sp.factors() == expected);
    }
  }
}

TEST_CASE("cyclotomic splitting agrees with brute-force order") {
  for (std::uint64_t l : {3, 5, 7, 11, 13, 17, 19, 23}) {
    const auto field = FieldSpec::cyclotomic(l);
    for (std::uint64_t p = 2; p < 2'000; ++p) {
      if (!oracle::is_prime(p) || p == l) continue;
      const auto f = static_cast<std::uint32_t>(brute_order(p, l));
      const auto sp = split_prime(field, p);
      REQUIRE(sp.g() == (l - 1) / f);
      for (const auto& x : sp.factors()) REQUIRE(x == IdealFactor{1, f});
    }
  }
}

TEST_CASE("pure cubic splitting agrees with root counting of x^3 - m") {
  for (std::uint64_t m : {2, 3, 5, 7, 6, 11, 12, 20}) {
    const auto field = FieldSpec::pure_cubic(m);
    for (std::uint64_t p = 2; p < 2'000; ++p) {
      if (!oracle::is_prime(p) || m % p == 0 || p == 3) continue;
      const int roots = count_roots(3, static_cast<std::int64_t>(m), p);
      const auto sp = split_prime(field, p);
      const Factors expected = roots == 3 ? Factors{{1, 1}, {1, 1}, {1, 1}}
                               : roots == 1 ? Factors{{1, 2}, {1, 1}}
                                            : Factors{{1, 3}};
      REQUIRE(sp.factors() == expected);
    }
  }
}

TEST_CASE("splitting invariants across the test matrix") {
  for (const auto& field : field_test_matrix()) {
    for (std::uint64_t p = 2; p <= 10'000; ++p) {
      if (!is_prime(p)) continue;
      const auto sp = split_prime(field, p);
      std::uint64_t total = 0;
      for (const auto& f : sp.factors()) total += f.e * f.f;
      REQUIRE(total == field.degree());
      const double h = ideal_entropy(sp);
      const double log_g = std::log(static_cast<double>(sp.g()));
      REQUIRE(h >= 0.0);
      REQUIRE(h <= log_g + 1e-12);
      REQUIRE(log_g <= std::log(static_cast<double>(field.degree())) + 1e-12);
      if (field.is_galois()) {
        const auto& f0 = sp.factors().front();
        REQUIRE(f0.e * f0.f * sp.g() == field.degree());
        REQUIRE(std::fabs(h - log_g) < 1e-12);
      }
      REQUIRE(ideal_exponential_divisors(sp).size() == ideal_tau_e(sp));
    }
  }
}

TEST_CASE("pure cubic of 2: outcome classes by residue of p mod 3") {
  bool saw_split = false, saw_inert = false;
  const auto field = FieldSpec::pure_cubic(2);
  for (std::uint64_t p = 5; p <= 10'000; ++p) {
    if (!is_prime(p)) continue;
    const auto sp = split_prime(field, p);
    if (p % 3 == 1) {
      saw_split |= sp.g() == 3;
      saw_inert |= sp.g() == 1;
      REQUIRE((sp.g() == 3 || sp.g() == 1));
    } else {
      REQUIRE(sp.g() == 2);
    }
  }
  CHECK(saw_split);
  CHECK(saw_inert);
}

TEST_CASE("ideal entropy") {
  CHECK(ideal_entropy(split_prime(FieldSpec::cyclotomic(5), 5)) == 0.0);
  CHECK(std::fabs(ideal_entropy(split_prime(FieldSpec::pure_cubic(2), 29)) - std::log(2.0)) < 1e-12);
  CHECK(std::fabs(ideal_entropy(split_prime(FieldSpec::pure_cubic(2), 31)) - std::log(3.0)) < 1e-12);
  // Inert and totally ramified primes.
  CHECK(ideal_entropy(split_prime(FieldSpec::pure_cubic(2), 7)) == 0.0);
  CHECK(ideal_entropy(split_prime(FieldSpec::quadratic(-1), 3)) == 0.0);
  CHECK(ideal_entropy(split_prime(FieldSpec::cyclotomic(13), 13)) == 0.0);
  CHECK(ideal_entropy(SplittingPattern(Factors{{1, 6}})) == 0.0);
}

TEST_CASE("ideal tau and tau_e") {
  CHECK(ideal_tau(SplittingPattern(Factors{{4, 1}})) == 5);
  CHECK(ideal_tau(SplittingPattern(Factors{{1, 1}, {1, 1}, {1, 1}})) == 8);
  CHECK(ideal_tau(SplittingPattern(Factors{{1, 5}})) == 2);
  CHECK(ideal_tau_e(SplittingPattern(Factors{{4, 1}})) == 3);
  CHECK(ideal_tau_e(SplittingPattern(Factors{{1, 1}, {1, 2}})) == 1);
  CHECK(ideal_tau_e(SplittingPattern(Factors{{2, 1}, {2, 1}})) == 4);
}

TEST_CASE("ideal exponential divisors") {
  using Vecs = std::vector<std::vector<std::uint32_t>>;
  CHECK(ideal_exponential_divisors(SplittingPattern(Factors{{4, 1}})) == Vecs{{1}, {2}, {4}});
  CHECK(ideal_exponential_divisors(SplittingPattern(Factors{{1, 1}, {1, 1}})) == Vecs{{1, 1}});
  const SplittingPattern mixed(Factors{{2, 1}, {2, 1}, {1, 1}});
  CHECK(ideal_exponential_divisors(mixed).size() == 4);
  const auto derived = apply_exponents(mixed, {1, 2, 1});
  CHECK(derived.factors() == Factors{{2, 1}, {1, 1}, {1, 1}});
  CHECK_FALSE(derived.field().has_value());
  CHECK_THROWS_AS(apply_exponents(mixed, {1, 1}), std::domain_error);
  CHECK_THROWS_AS(apply_exponents(mixed, {3, 1, 1}), std::domain_error);
  CHECK_THROWS_AS(ideal_exponential_divisors(SplittingPattern(Factors{{12, 1}, {12, 1}}), 10),
                  std::range_error);
  for (const auto& sp : corollary_ideal_shapes(8)) {
    REQUIRE(ideal_exponential_divisors(sp).size() == ideal_tau_e(sp));
  }
}

TEST_CASE("pattern validation") {
  CHECK_THROWS_AS(SplittingPattern(Factors{}), std::domain_error);
  CHECK_THROWS_AS(SplittingPattern(Factors{{0, 1}}), std::domain_error);
  CHECK_THROWS_AS(SplittingPattern(7, FieldSpec::quadratic(2), Factors{{1, 1}}), std::domain_error);
  CHECK_THROWS_AS(SplittingPattern(7, FieldSpec::cyclotomic(5), Factors{{2, 1}, {1, 2}}),
                  std::domain_error);
  CHECK_NOTHROW(SplittingPattern(7, FieldSpec::pure_cubic(2), Factors{{1, 1}, {1, 2}}));
}
