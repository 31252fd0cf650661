#include "entropia/suites.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <sstream>

#include "entropia/entropy.hpp"

namespace entropia {

namespace {

using Rng = std::mt19937_64;

std::uint64_t uniform(Rng& rng, std::uint64_t lo, std::uint64_t hi) {
  return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng);
}

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(12);
  os << x;
  return os.str();
}

std::uint64_t bound(const SuiteOptions& o, std::uint64_t fallback,
                    std::uint64_t limit) {
  const auto b = o.max.value_or(fallback);
  if (b > limit) {
    throw std::range_error("--max exceeds the suite limit of " + std::to_string(limit));
  }
  return b;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t n) {
  std::vector<bool> composite(n + 1, false);
  std::vector<std::uint64_t> out;
  for (std::uint64_t i = 2; i <= n; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (std::uint64_t j = i * i; j <= n; j += i) composite[j] = true;
  }
  return out;
}

void suite_bounds(SuiteResult& r, const SuiteOptions& o) {
  r.max = bound(o, 1'000'000, 100'000'000);
  for (std::uint64_t n = 2; n <= r.max; ++n) {
    const auto f = factorize(n);
    const double h = entropy_H(f);
    const double upper = std::log(static_cast<double>(small_omega(f)));
    ++r.checked;
    if (h < -kEqualTolerance || h > upper + kEqualTolerance) {
      r.violation("H(" + std::to_string(n) + ")=" + fmt(h) + " outside [0, " +
                  fmt(upper) + "]");
    }
  }
}

void suite_hbar_additivity(SuiteResult& r, const SuiteOptions& o) {
  r.max = bound(o, 1'000, 1'000'000);
  if (r.max < 3) throw std::range_error("--max must be at least 3");
  Rng rng(o.seed);
  double worst = 0.0;
  while (r.checked < 10'000) {
    const auto m = uniform(rng, 2, r.max);
    const auto n = uniform(rng, 2, r.max);
    if (gcd(m, n) != 1) continue;
    const double err = std::fabs(entropy_Hbar(factorize(m * n), o.cap) -
                                 entropy_Hbar(factorize(m), o.cap) -
                                 entropy_Hbar(factorize(n), o.cap));
    worst = std::max(worst, err);
    ++r.checked;
    if (err > 1e-9) {
      r.violation("Hbar additivity off by " + fmt(err) + " at m=" +
                  std::to_string(m) + " n=" + std::to_string(n));
    }
  }
  r.metrics["max_abs_error"] = worst;
}

void suite_hbar_closed_form(SuiteResult& r, const SuiteOptions& o) {
  r.max = bound(o, 50, 1'000);
  double worst = 0.0;
  std::uint64_t skipped = 0;
  for (auto p : primes_up_to(r.max)) {
    for (std::uint32_t alpha = 1; alpha <= 12; ++alpha) {
      std::uint64_t value;
      try {
        value = checked_pow(p, alpha);
        (void)divisor_sum(factorize(value));
      } catch (const std::range_error&) {
        ++skipped;  // p^alpha or sigma(p^alpha) beyond 64 bits
        continue;
      }
      const double err =
          std::fabs(hbar_prime_power(p, alpha) - entropy_Hbar(factorize(value), o.cap));
      worst = std::max(worst, err);
      ++r.checked;
      if (err > 1e-9) {
        r.violation("closed form off by " + fmt(err) + " at p=" +
                    std::to_string(p) + " alpha=" + std::to_string(alpha));
      }
    }
  }
  r.metrics["max_abs_error"] = worst;
  r.metrics["skipped_beyond_64_bits"] = static_cast<double>(skipped);
}

void suite_limits(SuiteResult& r, const SuiteOptions& o) {
  r.max = bound(o, 1'000'000, 100'000'000);
  const auto primes = primes_up_to(r.max);
  for (std::size_t i = 1; i < primes.size(); ++i) {
    ++r.checked;
    if (!(hbar_limit(primes[i]) < hbar_limit(primes[i - 1]))) {
      r.violation("hbar_limit not decreasing at p=" + std::to_string(primes[i]));
    }
  }
  const double tail = hbar_limit(999'983);
  r.metrics["hbar_limit_999983"] = tail;
  ++r.checked;
  if (!(tail < 2e-5)) r.violation("hbar_limit(999983)=" + fmt(tail) + " not < 2e-5");

  const auto six = factorize(6);
  const double far = entropy_H_appended(six, 5, 1'000'000);
  r.metrics["H_6_5_pow_1e6"] = far;
  ++r.checked;
  if (!(far < 5e-5)) r.violation("H(6*5^1e6)=" + fmt(far) + " not < 5e-5");

  double prev = entropy_H_appended(six, 5, 2);
  for (std::uint64_t alpha = 3; alpha <= 1'000; ++alpha) {
    const double cur = entropy_H_appended(six, 5, alpha);
    ++r.checked;
    if (!(cur < prev)) r.violation("H(6*5^a) not decreasing at a=" + std::to_string(alpha));
    prev = cur;
  }
}

void suite_shannon(SuiteResult& r, const SuiteOptions& o) {
  r.max = bound(o, 100, 10'000'000);
  double worst = 0.0;
  for (auto p : primes_up_to(r.max)) {
    const double inv = 1.0 / static_cast<double>(p);
    const double hs = shannon_entropy(Distribution({inv, 1.0 - inv}));
    const double err = std::fabs(hs - (1.0 - inv) * hbar_limit(p));
    worst = std::max(worst, err);
    ++r.checked;
    if (err > 1e-12) r.violation("Shannon identity off by " + fmt(err) + " at p=" + std::to_string(p));
  }
  r.metrics["max_abs_error"] = worst;
}

template <class F>
void guarded(SuiteResult& r, F&& check) {
  ++r.checked;
  try {
    check();
  } catch (const VerificationFailure& e) {
    r.violation(e.what());
  }
}

void suite_families(SuiteResult& r, const SuiteOptions& o) {
  r.max = bound(o, 10, 10);  // k bound for the p^k q family
  auto tally = [&r](const char* key, std::uint64_t before) {
    r.metrics[key] = static_cast<double>(r.violation_count - before);
  };
  auto before = r.violation_count;
  const auto p10 = first_primes(10);
  for (auto p : p10)
    for (auto q : p10)
      for (auto t : p10) {
        if (p == q || p == t || q == t) continue;
        for (std::uint32_t k = 1; k <= r.max; ++k) {
          guarded(r, [&] { check_family_pkq(p, q, t, k); });
        }
      }
  tally("pkq_violations", before);

  before = r.violation_count;
  const auto p8 = first_primes(8);
  std::uint64_t equal_at_k1 = 0;
  for (auto p1 : p8)
    for (auto p2 : p8)
      for (auto q1 : p8)
        for (auto q2 : p8) {
          const std::vector<std::uint64_t> four{p1, p2, q1, q2};
          auto sorted = four;
          std::sort(sorted.begin(), sorted.end());
          if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) continue;
          for (std::uint32_t k = 1; k <= 8; ++k) {
            guarded(r, [&] {
              const auto g = check_family_two_prime_powers(p1, p2, q1, q2, k);
              if (g.relation == Relation::Equal) ++equal_at_k1;
            });
          }
        }
  r.metrics["two_prime_powers_equal"] = static_cast<double>(equal_at_k1);
  tally("two_prime_powers_violations", before);

  before = r.violation_count;

  Rng rng(o.seed);
  const auto p12 = first_primes(12);
  std::uint64_t drawn = 0;
  while (drawn < 1'000) {
    auto pool = p12;
    std::shuffle(pool.begin(), pool.end(), rng);
    const auto r_m = uniform(rng, 1, 3);
    const auto r_n = uniform(rng, 1, 3);
    std::uint64_t m = 1, n = 1;
    try {
      for (std::uint64_t i = 0; i < r_m + r_n; ++i) {
        const auto e = static_cast<std::uint32_t>(uniform(rng, 3, 6));
        auto& side = i < r_m ? m : n;
        side = checked_mul(side, checked_pow(pool[i], e));
      }
    } catch (const std::range_error&) {
      continue;
    }
    ++drawn;
    guarded(r, [&] { check_family_exponents_ge3(m, n); });
  }
  tally("exponents_ge3_violations", before);
}

void suite_gap_identity(SuiteResult& r, const SuiteOptions& o) {
  r.max = bound(o, 1'000'000, 1'000'000'000);
  if (r.max < 3) throw std::range_error("--max must be at least 3");
  Rng rng(o.seed);
  while (r.checked < 10'000) {
    const auto m = uniform(rng, 2, r.max);
    const auto n = uniform(rng, 2, r.max);
    if (gcd(m, n) != 1) continue;
    guarded(r, [&] { product_entropy_gap(m, n); });
  }
}

void suite_growth(SuiteResult& r, const SuiteOptions& o) {
  r.max = bound(o, 10'000, 1'000'000'000);
  if (r.max < 2) throw std::range_error("--max must be at least 2");
  Rng rng(o.seed);
  const auto primes = first_primes(30);
  std::uint64_t counts[3] = {0, 0, 0};
  while (r.checked < 10'000) {
    const auto n = uniform(rng, 2, r.max);
    const auto p = primes[uniform(rng, 0, primes.size() - 1)];
    if (n % p == 0) continue;
    const auto alpha = uniform(rng, 1, 40);
    const auto beta = uniform(rng, 1, alpha);
    const auto res = evaluate_prop41(n, p, alpha, beta);
    counts[0] += res.case_i;
    counts[1] += res.case_ii;
    counts[2] += res.case_iii;
    ++r.checked;
    if (res.contradiction) {
      r.violation("n=" + std::to_string(n) + " p=" + std::to_string(p) +
                  " alpha=" + std::to_string(alpha) + " beta=" + std::to_string(beta) +
                  " cases " + res.cases() + ": H(n p^alpha)=" + fmt(res.h_alpha) +
                  " H(n p^beta)=" + fmt(res.h_beta) + " T=" + fmt(res.threshold));
    }
  }
  r.metrics["case_i"] = static_cast<double>(counts[0]);
  r.metrics["case_ii"] = static_cast<double>(counts[1]);
  r.metrics["case_iii"] = static_cast<double>(counts[2]);
}

void suite_corollary_int(SuiteResult& r, const SuiteOptions& o) {
  r.max = bound(o, 100'000, 100'000'000);
  std::uint64_t shaped = 0;
  for (std::uint64_t n = 2; n <= r.max; ++n) {
    if (!corollary_int_shape(factorize(n))) continue;
    ++shaped;
    const auto res = evaluate_corollary_int(n);
    r.checked += res.checked;
    for (const auto& [d, h] : res.violations) {
      r.violation("H(" + d + ")=" + fmt(h) + " > H(" + std::to_string(n) + ")=" +
                  fmt(res.h_whole));
    }
  }
  r.metrics["integers_checked"] = static_cast<double>(shaped);
}

std::vector<SplittingPattern> matrix_patterns(std::uint64_t max_p) {
  std::vector<SplittingPattern> out;
  for (const auto& field : field_test_matrix()) {
    for (auto p : primes_up_to(max_p)) out.push_back(split_prime(field, p));
  }
  return out;
}

void suite_corollary_ideal(SuiteResult& r, const SuiteOptions& o) {
  r.max = bound(o, 8, 16);  // largest g among the raw shapes
  auto patterns = corollary_ideal_shapes(r.max);
  for (auto& sp : matrix_patterns(1'000)) {
    if (corollary_ideal_shape(sp)) patterns.push_back(std::move(sp));
  }
  for (const auto& sp : patterns) {
    const auto res = evaluate_corollary_ideal(sp);
    r.checked += res.checked;
    for (const auto& [d, h] : res.violations) {
      r.violation("H(" + d + ")=" + fmt(h) + " > H(" + sp.to_string() + ")=" +
                  fmt(res.h_whole));
    }
  }
  r.metrics["patterns_checked"] = static_cast<double>(patterns.size());
}

void suite_splitting(SuiteResult& r, const SuiteOptions& o) {
  r.max = bound(o, 10'000, 10'000'000);
  for (const auto& field : field_test_matrix()) {
    for (auto p : primes_up_to(r.max)) {
      ++r.checked;
      const auto where = field.to_string() + " p=" + std::to_string(p);
      SplittingPattern sp = [&] {
        try {
          return split_prime(field, p);
        } catch (const std::exception& e) {
          r.violation(where + ": " + e.what());
          return SplittingPattern({{1, 1}});
        }
      }();
      if (!sp.field()) continue;
      std::uint64_t total = 0;
      for (const auto& f : sp.factors()) total += static_cast<std::uint64_t>(f.e) * f.f;
      if (total != field.degree()) r.violation(where + ": sum e_i f_i != degree");
      const double h = ideal_entropy(sp);
      const double log_g = std::log(static_cast<double>(sp.g()));
      if (h < -kEqualTolerance || h > log_g + kEqualTolerance ||
          log_g > std::log(static_cast<double>(field.degree())) + kEqualTolerance) {
        r.violation(where + ": entropy bounds fail");
      }
      if (field.is_galois()) {
        const auto first = sp.factors().front();
        const bool uniform_ef = std::all_of(sp.factors().begin(), sp.factors().end(),
                                            [&](const IdealFactor& x) { return x == first; });
        if (!uniform_ef || first.e * first.f * sp.g() != field.degree()) {
          r.violation(where + ": efg != degree");
        }
        if (std::fabs(h - log_g) > 1e-12) r.violation(where + ": H(pO_K) != log g");
      }
    }
  }
}

void suite_edivisors(SuiteResult& r, const SuiteOptions& o) {
  r.max = bound(o, 100'000, 100'000'000);
  for (std::uint64_t n = 2; n <= r.max; ++n) {
    const auto f = factorize(n);
    const auto ds = exponential_divisors(f, o.cap);
    ++r.checked;
    if (ds.size() != tau_e(f)) {
      r.violation("|e-divisors(" + std::to_string(n) + ")| != tau_e");
    }
    for (const auto& d : ds) {
      if (n % d.value() != 0 || small_omega(d) != small_omega(f)) {
        r.violation("bad e-divisor " + std::to_string(d.value()) + " of " + std::to_string(n));
      }
    }
  }
  auto patterns = matrix_patterns(std::min<std::uint64_t>(r.max, 10'000));
  for (auto& sp : corollary_ideal_shapes(8)) patterns.push_back(std::move(sp));
  for (const auto& sp : patterns) {
    ++r.checked;
    if (ideal_exponential_divisors(sp, o.cap).size() != ideal_tau_e(sp)) {
      r.violation("|ideal e-divisors| != tau_e for " + sp.to_string());
    }
  }
}

void suite_products(SuiteResult& r, const SuiteOptions& o) {
  r.max = bound(o, 200, kDefaultScanLimit);
  auto summary = scan_product_inequality(r.max, r.max);
  r.checked = summary.pairs;
  for (const auto& v : summary.violations) {
    r.violation(v.law + ": m=" + std::to_string(v.m) + " n=" + std::to_string(v.n) +
                " gap=" + fmt(v.gap) + " expected " + to_string(v.expected));
  }
  // The summary tracks its own total beyond the reported sample.
  r.violation_count = summary.violation_count;
  r.scan = std::move(summary);
}

using SuiteFn = std::function<void(SuiteResult&, const SuiteOptions&)>;

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> suites{
      {"bounds", suite_bounds},
      {"hbar-additivity", suite_hbar_additivity},
      {"hbar-closed-form", suite_hbar_closed_form},
      {"limits", suite_limits},
      {"shannon", suite_shannon},
      {"families", suite_families},
      {"gap-identity", suite_gap_identity},
      {"growth", suite_growth},
      {"corollary-int", suite_corollary_int},
      {"corollary-ideal", suite_corollary_ideal},
      {"splitting", suite_splitting},
      {"edivisors", suite_edivisors},
      {"products", suite_products},
  };
  return suites;
}

}  // namespace

void SuiteResult::violation(std::string what) {
  ++violation_count;
  if (violations.size() < kMaxReportedViolations) violations.push_back(std::move(what));
}

std::vector<FieldSpec> field_test_matrix() {
  std::vector<FieldSpec> out;
  for (std::int64_t d : {-1, 2, -2, 3, -3, 5, -5, 13}) out.push_back(FieldSpec::quadratic(d));
  for (std::uint64_t l : {3, 5, 7, 11, 13}) out.push_back(FieldSpec::cyclotomic(l));
  for (std::uint64_t m : {2, 3, 5, 7}) out.push_back(FieldSpec::pure_cubic(m));
  return out;
}

std::vector<SplittingPattern> corollary_ideal_shapes(std::size_t max_g) {
  std::vector<SplittingPattern> out;
  for (std::size_t g = 3; g <= max_g; ++g) {
    // Canonical order makes the pattern depend only on how many e_i are 2.
    for (std::size_t twos = 0; twos <= g; ++twos) {
      std::vector<IdealFactor> factors(g, IdealFactor{1, 1});
      for (std::size_t i = 0; i < twos; ++i) factors[i].e = 2;
      out.emplace_back(std::move(factors));
    }
  }
  return out;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : registry()) out.push_back(name);
    return out;
  }();
  return names;
}

SuiteResult run_suite(std::string_view name, const SuiteOptions& options) {
  for (const auto& [suite, fn] : registry()) {
    if (suite != name) continue;
    SuiteResult r;
    r.name = suite;
    r.seed = options.seed;
    fn(r, options);
    return r;
  }
  throw std::domain_error("unknown suite '" + std::string(name) + "'");
}

}  // namespace entropia
