#pragma once

// Entropy functionals of natural numbers. All logarithms are natural; every
// value is in nats.

#include <cstdint>
#include <span>
#include <vector>

#include "entropia/arith.hpp"

namespace entropia {

/// Probability weights p_1..p_r; each in (0, 1], summing to 1 within 1e-12.
class Distribution {
 public:
  /// Throws std::domain_error if the weights do not form a distribution.
  explicit Distribution(std::vector<double> weights);

  std::span<const double> weights() const { return weights_; }

 private:
  std::vector<double> weights_;
};

struct EntropyReport {
  std::uint64_t n = 1;
  double H = 0.0;
  double Hbar = 0.0;
  std::uint64_t big_omega = 0;
  std::uint64_t small_omega = 0;
  std::uint64_t tau = 1;
  std::uint64_t sigma = 1;
  std::uint64_t tau_e = 1;
  double threshold = 0.0;
};

/// -sum p_i log p_i.
double shannon_entropy(const Distribution& d);

/// log(sum a) - (1/sum a) * sum a log a over a multiset of positive
/// multiplicities; 0 for the empty multiset. Shared by the integer and the
/// ideal entropies.
double multiplicity_entropy(std::span<const std::uint32_t> multiplicities);

/// H(n) from the exponents of n; H(1) = 0.
double entropy_H(const Factorization& f);

/// Divisor entropy log sigma(n) - (1/sigma(n)) sum_{d|n} d log d.
/// Throws std::range_error if the divisor list exceeds cap.
double entropy_Hbar(const Factorization& f,
                    std::size_t cap = kDefaultEnumerationCap);

/// Closed form of Hbar(p^alpha). Throws std::domain_error if p is not prime
/// or alpha == 0.
double hbar_prime_power(std::uint64_t p, std::uint32_t alpha);

/// lim_{alpha -> inf} Hbar(p^alpha) = p log p / (p - 1) - log(p - 1).
double hbar_limit(std::uint64_t p);

/// H(n p^alpha) from H(n) and Omega(n) alone, valid for huge alpha.
/// Requires n >= 2, p prime, p not dividing n.
double entropy_H_appended(const Factorization& f, std::uint64_t p,
                          std::uint64_t alpha);

/// Omega(n) * exp(-H(n)); the pivot separating growth from decay of
/// H(n p^x) in x. Throws std::domain_error for n == 1.
double threshold(const Factorization& f);

/// Full report; Hbar needs the divisor list to fit under cap.
EntropyReport entropy_report(std::uint64_t n,
                             std::size_t cap = kDefaultEnumerationCap);

}  // namespace entropia
