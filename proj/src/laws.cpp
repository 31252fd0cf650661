#include "entropia/laws.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <sstream>
#include <thread>

#include "entropia/entropy.hpp"

namespace entropia {

namespace {

double sum_a_log_a(const Factorization& f) {
  double s = 0.0;
  for (const auto& e : f.entries()) {
    if (e.exponent > 1) s += e.exponent * std::log(static_cast<double>(e.exponent));
  }
  return s;
}

// Exponents of m * n, merging shared primes.
std::vector<std::uint32_t> product_exponents(const Factorization& m,
                                             const Factorization& n) {
  std::map<std::uint64_t, std::uint32_t> merged;
  for (const auto& e : m.entries()) merged[e.prime] += e.exponent;
  for (const auto& e : n.entries()) merged[e.prime] += e.exponent;
  std::vector<std::uint32_t> out;
  for (const auto& [p, a] : merged) out.push_back(a);
  return out;
}

bool close_relative(double a, double b, double tol) {
  return std::fabs(a - b) <= tol * std::max({1.0, std::fabs(a), std::fabs(b)});
}

void require_distinct_primes(std::initializer_list<std::uint64_t> ps) {
  std::vector<std::uint64_t> v(ps);
  for (auto p : v) {
    if (!is_prime(p)) throw std::domain_error(std::to_string(p) + " is not prime");
  }
  std::sort(v.begin(), v.end());
  if (std::adjacent_find(v.begin(), v.end()) != v.end()) {
    throw std::domain_error("primes must be distinct");
  }
}

std::string describe(const GapReport& r, Relation expected) {
  std::ostringstream os;
  os.precision(12);
  os << "m=" << r.m << " n=" << r.n << ": gap " << r.gap << " is "
     << to_string(r.relation) << ", expected " << to_string(expected);
  return os.str();
}

}  // namespace

const char* to_string(Relation r) {
  switch (r) {
    case Relation::Less: return "LESS";
    case Relation::Equal: return "EQUAL";
    case Relation::Greater: return "GREATER";
  }
  return "?";
}

Relation classify_gap(double gap) {
  if (std::fabs(gap) <= kEqualTolerance) return Relation::Equal;
  return gap < 0 ? Relation::Less : Relation::Greater;
}

GapReport direct_gap(std::uint64_t m, std::uint64_t n) {
  const auto fm = factorize(m);
  const auto fn = factorize(n);
  GapReport r;
  r.m = m;
  r.n = n;
  r.h_m = entropy_H(fm);
  r.h_n = entropy_H(fn);
  r.h_mn = multiplicity_entropy(product_exponents(fm, fn));
  r.gap = r.h_mn - r.h_m - r.h_n;
  r.relation = classify_gap(r.gap);
  return r;
}

double gap_identity(const Factorization& m, const Factorization& n) {
  const double a = static_cast<double>(big_omega(m));
  const double b = static_cast<double>(big_omega(n));
  return b / (a * (a + b)) * sum_a_log_a(m) + a / (b * (a + b)) * sum_a_log_a(n) -
         std::log(a * b / (a + b));
}

double gap_identity_without_normalization(const Factorization& m,
                                          const Factorization& n) {
  const double a = static_cast<double>(big_omega(m));
  const double b = static_cast<double>(big_omega(n));
  return b / (a + b) * sum_a_log_a(m) + a / (a + b) * sum_a_log_a(n) -
         std::log(a * b / (a + b));
}

GapReport product_entropy_gap(std::uint64_t m, std::uint64_t n) {
  if (m < 2 || n < 2) throw std::domain_error("m and n must be >= 2");
  if (gcd(m, n) != 1) throw std::domain_error("m and n must be coprime");
  auto r = direct_gap(m, n);
  const double via_identity = gap_identity(factorize(m), factorize(n));
  if (!close_relative(r.gap, via_identity, 1e-12)) {
    std::ostringstream os;
    os.precision(17);
    os << "gap identity disagrees for m=" << m << " n=" << n << ": direct "
       << r.gap << " vs identity " << via_identity;
    throw VerificationFailure(os.str());
  }
  return r;
}

GapReport check_family_pkq(std::uint64_t p, std::uint64_t q, std::uint64_t t,
                           std::uint32_t k) {
  require_distinct_primes({p, q, t});
  if (k == 0) throw std::domain_error("k must be >= 1");
  const auto pk = checked_pow(p, k);
  // m and n share p^k, so only the direct route applies.
  auto r = direct_gap(checked_mul(pk, q), checked_mul(pk, t));
  if (r.relation != Relation::Less) {
    throw VerificationFailure(describe(r, Relation::Less));
  }
  return r;
}

GapReport check_family_two_prime_powers(std::uint64_t p1, std::uint64_t p2,
                                        std::uint64_t q1, std::uint64_t q2,
                                        std::uint32_t k) {
  require_distinct_primes({p1, p2, q1, q2});
  if (k == 0) throw std::domain_error("k must be >= 1");
  const auto m = checked_mul(checked_pow(p1, k), p2);
  const auto n = checked_mul(checked_pow(q1, k), q2);
  auto r = product_entropy_gap(m, n);
  const auto expected = k == 1 ? Relation::Equal : Relation::Greater;
  if (r.relation != expected) throw VerificationFailure(describe(r, expected));
  return r;
}

GapReport check_family_exponents_ge3(std::uint64_t m, std::uint64_t n) {
  if (m < 2 || n < 2 || gcd(m, n) != 1) {
    throw std::domain_error("m, n must be coprime and >= 2");
  }
  for (auto x : {m, n}) {
    for (const auto& e : factorize(x).entries()) {
      if (e.exponent < 3) throw std::domain_error("every exponent must be >= 3");
    }
  }
  auto r = product_entropy_gap(m, n);
  if (r.relation != Relation::Greater) {
    throw VerificationFailure(describe(r, Relation::Greater));
  }
  return r;
}

std::string Prop41Result::cases() const {
  std::string out;
  auto add = [&](bool on, const char* label) {
    if (!on) return;
    if (!out.empty()) out += ',';
    out += label;
  };
  add(case_i, "i");
  add(case_ii, "ii");
  add(case_iii, "iii");
  return out;
}

Prop41Result evaluate_prop41(std::uint64_t n, std::uint64_t p,
                             std::uint64_t alpha, std::uint64_t beta) {
  if (n < 2) throw std::domain_error("n must be >= 2");
  if (!is_prime(p)) throw std::domain_error(std::to_string(p) + " is not prime");
  if (n % p == 0) throw std::domain_error("p must not divide n");
  if (beta < 1 || alpha < beta) throw std::domain_error("need alpha >= beta >= 1");
  if (alpha > std::numeric_limits<std::uint32_t>::max()) {
    throw std::range_error("alpha too large");
  }
  const auto f = factorize(n);
  auto exps = f.exponents();
  Prop41Result r;
  r.threshold = threshold(f);
  exps.push_back(static_cast<std::uint32_t>(alpha));
  r.h_alpha = multiplicity_entropy(exps);
  exps.back() = static_cast<std::uint32_t>(beta);
  r.h_beta = multiplicity_entropy(exps);

  const double a = static_cast<double>(alpha);
  const double b = static_cast<double>(beta);
  const double t = r.threshold;
  // Boundary cases overlap; all satisfied cases are reported.
  r.case_i = b >= t - kEqualTolerance;
  r.case_ii = a <= t + kEqualTolerance;
  r.case_iii = b <= t + kEqualTolerance && t <= a + kEqualTolerance;

  const bool not_above = r.h_alpha <= r.h_beta + kEqualTolerance;
  const bool not_below = r.h_alpha >= r.h_beta - kEqualTolerance;
  r.contradiction = ((r.case_i || r.case_iii) && !not_above) ||
                    (r.case_ii && !not_below);
  return r;
}

Prop41Result classify_prop41(std::uint64_t n, std::uint64_t p,
                             std::uint64_t alpha, std::uint64_t beta) {
  auto r = evaluate_prop41(n, p, alpha, beta);
  if (r.contradiction) {
    std::ostringstream os;
    os.precision(12);
    os << "n=" << n << " p=" << p << " alpha=" << alpha << " beta=" << beta
       << " (T=" << r.threshold << ", cases " << r.cases() << "): H(n p^alpha)="
       << r.h_alpha << " vs H(n p^beta)=" << r.h_beta;
    throw VerificationFailure(os.str());
  }
  return r;
}

bool corollary_int_shape(const Factorization& f) {
  if (small_omega(f) < 3) return false;
  return std::all_of(f.entries().begin(), f.entries().end(),
                     [](const PrimePower& e) { return e.exponent <= 2; });
}

CorollaryResult evaluate_corollary_int(std::uint64_t n) {
  const auto f = factorize(n);
  if (!corollary_int_shape(f)) {
    throw std::domain_error("need omega(n) >= 3 and exponents in {1, 2}");
  }
  CorollaryResult r;
  r.h_whole = entropy_H(f);
  for (const auto& d : exponential_divisors(f)) {
    ++r.checked;
    const double h = entropy_H(d);
    if (h > r.h_whole + kEqualTolerance) {
      r.violations.emplace_back(std::to_string(d.value()), h);
    }
  }
  return r;
}

std::size_t check_corollary_int(std::uint64_t n) {
  const auto r = evaluate_corollary_int(n);
  if (!r.violations.empty()) {
    std::ostringstream os;
    os.precision(12);
    os << "H(" << r.violations.front().first << ")=" << r.violations.front().second
       << " exceeds H(" << n << ")=" << r.h_whole << " (" << r.violations.size()
       << " offending e-divisors)";
    throw VerificationFailure(os.str());
  }
  return r.checked;
}

bool corollary_ideal_shape(const SplittingPattern& sp) {
  if (sp.g() < 3) return false;
  return std::all_of(sp.factors().begin(), sp.factors().end(),
                     [](const IdealFactor& f) { return f.e <= 2; });
}

CorollaryResult evaluate_corollary_ideal(const SplittingPattern& sp) {
  if (!corollary_ideal_shape(sp)) {
    throw std::domain_error("need g >= 3 and every e_i in {1, 2}");
  }
  CorollaryResult r;
  r.h_whole = ideal_entropy(sp);
  for (const auto& betas : ideal_exponential_divisors(sp)) {
    ++r.checked;
    const auto d = apply_exponents(sp, betas);
    const double h = ideal_entropy(d);
    if (h > r.h_whole + kEqualTolerance) r.violations.emplace_back(d.to_string(), h);
  }
  return r;
}

std::size_t check_corollary_ideal(const SplittingPattern& sp) {
  const auto r = evaluate_corollary_ideal(sp);
  if (!r.violations.empty()) {
    std::ostringstream os;
    os.precision(12);
    os << "H(" << r.violations.front().first << ")=" << r.violations.front().second
       << " exceeds H(" << sp.to_string() << ")=" << r.h_whole;
    throw VerificationFailure(os.str());
  }
  return r.checked;
}

namespace {

struct IntProfile {
  std::uint32_t omega = 0;      // Omega
  std::uint32_t distinct = 0;   // omega
  std::uint32_t min_exp = 0;
  std::uint32_t max_exp = 0;
  double s = 0.0;               // sum a log a
  double h = 0.0;
};

bool better(double gap, std::uint64_t m, std::uint64_t n, const ScanWitness& w,
            bool want_max) {
  if (w.m == 0) return true;
  if (gap != w.gap) return want_max ? gap > w.gap : gap < w.gap;
  return std::pair(m, n) < std::pair(w.m, w.n);
}

void fold_witness(ScanWitness& into, const ScanWitness& w, bool want_max) {
  if (w.m != 0 && better(w.gap, w.m, w.n, into, want_max)) into = w;
}

void scan_rows(const std::vector<IntProfile>& prof, std::uint64_t m_lo,
               std::uint64_t m_hi, std::uint64_t max_n, ScanSummary& out) {
  for (std::uint64_t m = m_lo; m < m_hi; ++m) {
    const auto& pm = prof[m];
    for (std::uint64_t n = 2; n <= max_n; ++n) {
      if (std::gcd(m, n) != 1) continue;
      const auto& pn = prof[n];
      const double total = pm.omega + pn.omega;
      const double h_mn = std::log(total) - (pm.s + pn.s) / total;
      const double gap = h_mn - pm.h - pn.h;
      const auto rel = classify_gap(gap);
      ++out.pairs;
      if (rel == Relation::Less) ++out.less;
      else if (rel == Relation::Equal) ++out.equal;
      else ++out.greater;
      if (better(gap, m, n, out.most_positive, true)) out.most_positive = {m, n, gap};
      if (better(gap, m, n, out.most_negative, false)) out.most_negative = {m, n, gap};

      auto record = [&](const char* law, Relation expected) {
        ++out.shape_checks;
        if (rel == expected) return;
        ++out.violation_count;
        if (out.violations.size() < kMaxReportedViolations) {
          out.violations.push_back({law, m, n, gap, expected});
        }
      };
      // m = p1^k p2, n = q1^k q2 (k = 1 covers both squarefree with two primes).
      if (pm.distinct == 2 && pn.distinct == 2 && pm.min_exp == 1 &&
          pn.min_exp == 1 && pm.max_exp == pn.max_exp) {
        record("two-prime-powers",
               pm.max_exp == 1 ? Relation::Equal : Relation::Greater);
      }
      if (pm.min_exp >= 3 && pn.min_exp >= 3) {
        record("exponents-ge3", Relation::Greater);
      }
    }
  }
}

}  // namespace

ScanSummary scan_product_inequality(std::uint64_t max_m, std::uint64_t max_n,
                                    std::uint64_t limit, unsigned threads) {
  if (max_m > limit || max_n > limit) {
    throw std::range_error("scan range exceeds limit of " + std::to_string(limit));
  }
  ScanSummary summary;
  summary.max_m = max_m;
  summary.max_n = max_n;
  if (max_m < 2 || max_n < 2) return summary;

  const std::uint64_t top = std::max(max_m, max_n);
  std::vector<IntProfile> prof(top + 1);
  for (std::uint64_t x = 2; x <= top; ++x) {
    const auto f = factorize(x);
    auto& p = prof[x];
    p.distinct = static_cast<std::uint32_t>(small_omega(f));
    p.omega = static_cast<std::uint32_t>(big_omega(f));
    p.min_exp = std::numeric_limits<std::uint32_t>::max();
    for (const auto& e : f.entries()) {
      p.min_exp = std::min(p.min_exp, e.exponent);
      p.max_exp = std::max(p.max_exp, e.exponent);
    }
    p.s = sum_a_log_a(f);
    p.h = entropy_H(f);
  }

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  const std::uint64_t rows = max_m - 1;
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, rows));
  std::vector<ScanSummary> parts(threads);
  {
    std::vector<std::jthread> workers;
    for (unsigned i = 0; i < threads; ++i) {
      const std::uint64_t lo = 2 + rows * i / threads;
      const std::uint64_t hi = 2 + rows * (i + 1) / threads;
      workers.emplace_back([&, lo, hi, i] { scan_rows(prof, lo, hi, max_n, parts[i]); });
    }
  }
  // Partitions cover ascending m ranges, so merging in order keeps the
  // reported violations lexicographic.
  for (const auto& part : parts) {
    summary.pairs += part.pairs;
    summary.less += part.less;
    summary.equal += part.equal;
    summary.greater += part.greater;
    summary.shape_checks += part.shape_checks;
    summary.violation_count += part.violation_count;
    fold_witness(summary.most_positive, part.most_positive, true);
    fold_witness(summary.most_negative, part.most_negative, false);
    for (const auto& v : part.violations) {
      if (summary.violations.size() < kMaxReportedViolations) summary.violations.push_back(v);
    }
  }
  return summary;
}

}  // namespace entropia
