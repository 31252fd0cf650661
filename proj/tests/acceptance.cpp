// Acceptance criteria, one PASS/FAIL line each. Exit status is nonzero if any
// criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "entropia/arith.hpp"
#include "entropia/entropy.hpp"
#include "entropia/laws.hpp"
#include "entropia/numfield.hpp"
#include "entropia/suites.hpp"
#include "oracles.hpp"

using namespace entropia;

namespace {

struct Verdict {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail = what;
    pass = pass && ok;
  }
};

struct Criterion {
  int id;
  const char* title;
  double time_limit;  // seconds, 0 for none
  std::function<Verdict()> body;
};

std::string num(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

Verdict from_suite(const char* name, SuiteOptions o = {}) {
  const auto r = run_suite(name, o);
  Verdict v;
  v.detail = std::to_string(r.checked) + " checked, " + std::to_string(r.violation_count) +
             " violations";
  if (!r.ok()) {
    v.pass = false;
    v.detail += "; first: " + r.violations.front();
  }
  return v;
}

Verdict golden_values() {
  Verdict v;
  auto H = [](std::uint64_t n) { return entropy_H(factorize(n)); };
  const double tol = 1e-9;
  v.require(std::fabs(H(6) - std::log(2.0)) <= tol, "H(6)");
  v.require(std::fabs(H(2310) - std::log(5.0)) <= tol, "H(2310)");
  v.require(std::fabs(product_entropy_gap(22, 105).gap - std::log(5.0 / 6.0)) <= tol, "gap(22,105)");
  v.require(std::fabs(product_entropy_gap(20, 63).gap - std::log(32.0 / 27.0) / 3.0) <= tol,
            "gap(20,63)");
  v.require(std::fabs(H(180) - (std::log(5.0) - 0.8 * std::log(2.0))) <= tol, "H(180)");
  v.require(std::fabs(H(60) - (std::log(4.0) - 0.5 * std::log(2.0))) <= tol, "H(60)");
  v.require(H(60) <= H(180), "H(60) <= H(180)");
  return v;
}

Verdict ideal_examples() {
  Verdict v;
  const auto h = [](const char* field, std::uint64_t p) {
    return ideal_entropy(split_prime(FieldSpec::parse(field), p));
  };
  v.require(std::fabs(h("cyclo:5", 5)) <= 1e-12, "H(5 Z[zeta_5])");
  v.require(std::fabs(h("cubic:2", 29) - std::log(2.0)) <= 1e-12, "H(29 Z[cbrt 2])");
  v.require(std::fabs(h("cubic:2", 31) - std::log(3.0)) <= 1e-12, "H(31 Z[cbrt 2])");
  return v;
}

Verdict closed_form() {
  Verdict v;
  double worst = 0.0;
  int checked = 0;
  for (std::uint64_t p = 2; p <= 50; ++p) {
    if (!oracle::is_prime(p)) continue;
    for (std::uint32_t a = 1; a <= 12; ++a) {
      const double err = std::fabs(hbar_prime_power(p, a) - oracle::Hbar_prime_power(p, a));
      worst = std::max(worst, err);
      ++checked;
      v.require(err <= 1e-9, "p=" + std::to_string(p) + " alpha=" + std::to_string(a));
    }
  }
  if (v.pass) v.detail = std::to_string(checked) + " checked, max error " + num(worst);
  return v;
}

Verdict edivisor_counts() {
  Verdict v;
  for (std::uint64_t n = 1; n <= 100'000; ++n) {
    const auto f = factorize(n);
    if (n == 1) {
      v.require(tau_e(f) == 1, "tau_e(1)");
      continue;
    }
    const auto count = exponential_divisors(f).size();
    v.require(count == tau_e(f), "n=" + std::to_string(n));
  }
  std::size_t patterns = 0;
  auto check = [&](const SplittingPattern& sp) {
    ++patterns;
    v.require(ideal_exponential_divisors(sp).size() == ideal_tau_e(sp), sp.to_string());
  };
  for (const auto& sp : corollary_ideal_shapes(8)) check(sp);
  for (const auto& field : field_test_matrix()) {
    for (std::uint64_t p = 2; p <= 200; ++p) {
      if (is_prime(p)) check(split_prime(field, p));
    }
  }
  using F = std::vector<IdealFactor>;
  for (const auto& sp : {SplittingPattern(F{{6, 1}, {4, 1}}), SplittingPattern(F{{12, 1}}),
                         SplittingPattern(F{{3, 2}, {9, 1}, {1, 1}})}) {
    check(sp);
  }
  if (v.pass) v.detail = "n <= 100000 and " + std::to_string(patterns) + " patterns";
  return v;
}

Verdict gap_identity_check() {
  Verdict v;
  std::mt19937_64 rng(0);
  std::uniform_int_distribution<std::uint64_t> dist(2, 1'000'000);
  int checked = 0;
  double worst = 0.0;
  while (checked < 10'000) {
    const auto m = dist(rng), n = dist(rng);
    if (gcd(m, n) != 1) continue;
    const double direct = oracle::H(m * n) - oracle::H(m) - oracle::H(n);
    const double formula = gap_identity(factorize(m), factorize(n));
    const double rel = std::fabs(direct - formula) / std::max(1.0, std::fabs(direct));
    worst = std::max(worst, rel);
    v.require(rel <= 1e-12, "m=" + std::to_string(m) + " n=" + std::to_string(n));
    ++checked;
  }
  if (v.pass) v.detail = "10000 pairs, max relative error " + num(worst);
  return v;
}

}  // namespace

int main() {
  SuiteOptions cor_int;
  cor_int.max = 100'000;
  SuiteOptions splitting;
  splitting.max = 10'000;
  SuiteOptions bounds;
  bounds.max = 1'000'000;

  const std::vector<Criterion> criteria = {
      {1, "golden values", 1.0, golden_values},
      {2, "ideal examples", 1.0, ideal_examples},
      {3, "bounds sweep to 1e6", 30.0, [&] { return from_suite("bounds", bounds); }},
      {4, "Hbar additivity", 0.0, [] { return from_suite("hbar-additivity"); }},
      {5, "closed form vs brute force", 0.0, closed_form},
      {6, "limits", 0.0, [] { return from_suite("limits"); }},
      {7, "parametric families", 10.0, [] { return from_suite("families"); }},
      {8, "gap identity", 0.0, gap_identity_check},
      {9, "growth trichotomy, seed 0", 0.0, [] { return from_suite("growth"); }},
      {10, "e-divisor corollary, n <= 1e5", 60.0, [&] { return from_suite("corollary-int", cor_int); }},
      {11, "splitting invariants, p <= 1e4", 0.0, [&] { return from_suite("splitting", splitting); }},
      {12, "e-divisor counting", 0.0, edivisor_counts},
      {13, "Shannon identity", 0.0, [] { return from_suite("shannon"); }},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.body();
    } catch (const std::exception& e) {
      v.pass = false;
      v.detail = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.time_limit > 0 && secs >= c.time_limit) {
      v.pass = false;
      v.detail += " (over time limit " + num(c.time_limit) + " s)";
    }
    failed += !v.pass;
    std::printf("%s criterion %2d: %-34s %8.3f s  %s\n", v.pass ? "PASS" : "FAIL", c.id, c.title,
                secs, v.detail.c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
