#include "entropia/entropy.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace entropia {

namespace {

void require_prime(std::uint64_t p) {
  if (!is_prime(p)) throw std::domain_error(std::to_string(p) + " is not prime");
}

}  // namespace

Distribution::Distribution(std::vector<double> weights)
    : weights_(std::move(weights)) {
  if (weights_.empty()) throw std::domain_error("empty distribution");
  long double total = 0.0L;
  for (double w : weights_) {
    if (!(w > 0.0) || w > 1.0) {
      throw std::domain_error("weights must lie in (0, 1]");
    }
    total += w;
  }
  if (std::fabs(static_cast<double>(total) - 1.0) > 1e-12) {
    throw std::domain_error("weights must sum to 1");
  }
}

double shannon_entropy(const Distribution& d) {
  double h = 0.0;
  for (double w : d.weights()) h -= w * std::log(w);
  return h;
}

double multiplicity_entropy(std::span<const std::uint32_t> multiplicities) {
  std::uint64_t total = 0;
  double weighted = 0.0;
  for (std::uint32_t a : multiplicities) {
    total += a;
    // 1 * log 1 == 0 exactly, keeping squarefree inputs at log r.
    if (a > 1) weighted += a * std::log(static_cast<double>(a));
  }
  if (multiplicities.size() <= 1) return 0.0;
  const double omega = static_cast<double>(total);
  return std::log(omega) - weighted / omega;
}

double entropy_H(const Factorization& f) {
  const auto exps = f.exponents();
  return multiplicity_entropy(exps);
}

double entropy_Hbar(const Factorization& f, std::size_t cap) {
  const auto ds = divisors(f, cap);
  const long double sigma = static_cast<long double>(divisor_sum(f));
  long double weighted = 0.0L;
  for (std::uint64_t d : ds) {
    if (d > 1) weighted += static_cast<long double>(d) * std::log(static_cast<long double>(d));
  }
  return static_cast<double>(std::log(sigma) - weighted / sigma);
}

double hbar_limit(std::uint64_t p) {
  require_prime(p);
  const double pm1 = static_cast<double>(p - 1);
  // p log p/(p-1) - log(p-1) rewritten as log(p/(p-1)) + log p/(p-1).
  return std::log1p(1.0 / pm1) + std::log(static_cast<double>(p)) / pm1;
}

double hbar_prime_power(std::uint64_t p, std::uint32_t alpha) {
  require_prime(p);
  if (alpha == 0) throw std::domain_error("alpha must be >= 1");
  // With x = (alpha+1) log p and q = p^-(alpha+1):
  //   -(alpha+1) log p/(p^(alpha+1)-1) = -x q/(1-q)
  //   log((1-q)/(p-1)) + p log p/(p-1) = log1p(-q) + hbar_limit(p)
  const double x = (alpha + 1.0) * std::log(static_cast<double>(p));
  const double q = std::exp(-x);
  const double one_minus_q = -std::expm1(-x);
  return hbar_limit(p) - x * q / one_minus_q + std::log1p(-q);
}

double entropy_H_appended(const Factorization& f, std::uint64_t p,
                          std::uint64_t alpha) {
  if (f.value() < 2) throw std::domain_error("n must be >= 2");
  require_prime(p);
  if (f.value() % p == 0) throw std::domain_error("p must not divide n");
  if (alpha == 0) throw std::domain_error("alpha must be >= 1");
  const double t = static_cast<double>(big_omega(f));
  const double a = static_cast<double>(alpha);
  const double h = entropy_H(f);
  // t H/(t+a) + log(t+a) - (t log t + a log a)/(t+a), regrouped so that the
  // log(t+a) - a log a/(t+a) cancellation is exact for large a.
  return (t * h + t * std::log1p(a / t) + a * std::log1p(t / a)) / (t + a);
}

double threshold(const Factorization& f) {
  if (f.is_one()) throw std::domain_error("threshold is defined for n >= 2");
  return static_cast<double>(big_omega(f)) * std::exp(-entropy_H(f));
}

EntropyReport entropy_report(std::uint64_t n, std::size_t cap) {
  const auto f = factorize(n);
  EntropyReport r;
  r.n = n;
  r.H = entropy_H(f);
  r.Hbar = entropy_Hbar(f, cap);
  r.big_omega = big_omega(f);
  r.small_omega = small_omega(f);
  r.tau = divisor_count(f);
  r.sigma = divisor_sum(f);
  r.tau_e = tau_e(f);
  r.threshold = f.is_one() ? 0.0 : threshold(f);
  return r;
}

}  // namespace entropia
