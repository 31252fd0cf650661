#pragma once

// Checkers for the comparison laws between H(mn) and H(m) + H(n), the
// growth trichotomy of H(n p^x) around the threshold, and the e-divisor
// corollaries for integers and ideals.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "entropia/arith.hpp"
#include "entropia/numfield.hpp"

namespace entropia {

/// Absolute tolerance separating EQUAL from strict relations.
inline constexpr double kEqualTolerance = 1e-12;

/// A checked law did not hold on the given input.
class VerificationFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Relation { Less, Equal, Greater };

const char* to_string(Relation r);

Relation classify_gap(double gap);

struct GapReport {
  std::uint64_t m = 0;
  std::uint64_t n = 0;
  double h_m = 0.0;
  double h_n = 0.0;
  double h_mn = 0.0;
  double gap = 0.0;  // H(mn) - H(m) - H(n), from the definition of H
  Relation relation = Relation::Equal;
};

/// Gap computed from factorize(m * n); no coprimality requirement.
GapReport direct_gap(std::uint64_t m, std::uint64_t n);

/// Closed form of the gap for coprime m, n in terms of Omega and
/// S = sum a log a of each side:
///   B/(A(A+B)) S_m + A/(B(A+B)) S_n - log(AB/(A+B)).
double gap_identity(const Factorization& m, const Factorization& n);

/// The identity with the 1/A and 1/B factors dropped,
///   B/(A+B) S_m + A/(A+B) S_n - log(AB/(A+B)),
/// kept so the discrepancy can be demonstrated.
double gap_identity_without_normalization(const Factorization& m,
                                          const Factorization& n);

/// Coprime m, n >= 2. Computes the gap directly and through gap_identity and
/// throws VerificationFailure if they disagree beyond 1e-12 relative.
GapReport product_entropy_gap(std::uint64_t m, std::uint64_t n);

/// m = p^k q, n = p^k t: expects LESS.
GapReport check_family_pkq(std::uint64_t p, std::uint64_t q, std::uint64_t t,
                           std::uint32_t k);

/// m = p1^k p2, n = q1^k q2: expects EQUAL for k = 1, GREATER for k >= 2.
GapReport check_family_two_prime_powers(std::uint64_t p1, std::uint64_t p2,
                                        std::uint64_t q1, std::uint64_t q2,
                                        std::uint32_t k);

/// Coprime m, n with every exponent >= 3: expects GREATER.
GapReport check_family_exponents_ge3(std::uint64_t m, std::uint64_t n);

struct Prop41Result {
  double threshold = 0.0;
  double h_alpha = 0.0;  // H(n p^alpha)
  double h_beta = 0.0;   // H(n p^beta)
  bool case_i = false;    // beta >= T, claims H(n p^alpha) <= H(n p^beta)
  bool case_ii = false;   // alpha <= T, claims H(n p^alpha) >= H(n p^beta)
  bool case_iii = false;  // beta <= T <= alpha, claims H(n p^alpha) <= H(n p^beta)
  bool contradiction = false;

  std::string cases() const;
};

/// Classifies (n, p, alpha, beta) against the threshold T = Omega(n) e^-H(n)
/// and checks every ordering claimed by a satisfied case, using H evaluated
/// directly from the exponent multiset. Never throws on a contradiction.
Prop41Result evaluate_prop41(std::uint64_t n, std::uint64_t p,
                             std::uint64_t alpha, std::uint64_t beta);

/// As evaluate_prop41, but throws VerificationFailure on a contradiction.
Prop41Result classify_prop41(std::uint64_t n, std::uint64_t p,
                             std::uint64_t alpha, std::uint64_t beta);

struct CorollaryResult {
  std::size_t checked = 0;
  double h_whole = 0.0;
  /// Offending e-divisors with their entropy.
  std::vector<std::pair<std::string, double>> violations;
};

/// omega(n) >= 3 and all exponents in {1, 2}.
bool corollary_int_shape(const Factorization& f);

/// Compares H(d) with H(n) for every e-divisor d. Throws std::domain_error
/// when n does not have the required shape.
CorollaryResult evaluate_corollary_int(std::uint64_t n);

/// Throws VerificationFailure if some e-divisor has H(d) > H(n) + 1e-12;
/// returns the number of e-divisors checked.
std::size_t check_corollary_int(std::uint64_t n);

/// g >= 3 and all e_i in {1, 2}.
bool corollary_ideal_shape(const SplittingPattern& sp);

CorollaryResult evaluate_corollary_ideal(const SplittingPattern& sp);
std::size_t check_corollary_ideal(const SplittingPattern& sp);

struct ScanWitness {
  std::uint64_t m = 0;
  std::uint64_t n = 0;
  double gap = 0.0;
};

struct ScanViolation {
  std::string law;
  std::uint64_t m = 0;
  std::uint64_t n = 0;
  double gap = 0.0;
  Relation expected = Relation::Equal;
};

struct ScanSummary {
  std::uint64_t max_m = 0;
  std::uint64_t max_n = 0;
  std::uint64_t pairs = 0;
  std::uint64_t less = 0;
  std::uint64_t equal = 0;
  std::uint64_t greater = 0;
  ScanWitness most_negative;  // smallest gap, ties to smallest (m, n)
  ScanWitness most_positive;  // largest gap, ties to smallest (m, n)
  std::uint64_t shape_checks = 0;
  std::uint64_t violation_count = 0;
  std::vector<ScanViolation> violations;  // first kMaxReportedViolations
};

inline constexpr std::size_t kMaxReportedViolations = 32;
inline constexpr std::uint64_t kDefaultScanLimit = 10'000;

/// Tallies the relation of every coprime pair 2 <= m <= max_m,
/// 2 <= n <= max_n and checks the two-prime-power and exponents >= 3 laws on
/// pairs of matching shape. Deterministic for any thread count.
ScanSummary scan_product_inequality(std::uint64_t max_m, std::uint64_t max_n,
                                    std::uint64_t limit = kDefaultScanLimit,
                                    unsigned threads = 0);

}  // namespace entropia
