#pragma once

// Splitting of rational primes in quadratic fields, prime cyclotomic fields
// and monogenic pure cubic fields, plus the ideal-level entropy and divisor
// counts of pO_K.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "entropia/arith.hpp"

namespace entropia {

/// Thrown when a (field, prime) pair falls outside the implemented case
/// analysis.
class UnsupportedCase : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Q(sqrt d), d squarefree and not 0 or 1.
struct Quadratic {
  std::int64_t d = 0;
  friend bool operator==(const Quadratic&, const Quadratic&) = default;
};

/// Q(zeta_l), l an odd prime.
struct CyclotomicPrime {
  std::uint64_t l = 0;
  friend bool operator==(const CyclotomicPrime&, const CyclotomicPrime&) = default;
};

/// Q(cbrt m), m >= 2 cubefree with m^2 != 1 mod 9, so that O_K = Z[cbrt m].
struct PureCubic {
  std::uint64_t m = 0;
  friend bool operator==(const PureCubic&, const PureCubic&) = default;
};

class FieldSpec {
 public:
  using Family = std::variant<Quadratic, CyclotomicPrime, PureCubic>;

  // Each factory validates its family invariant and throws std::domain_error.
  static FieldSpec quadratic(std::int64_t d);
  static FieldSpec cyclotomic(std::uint64_t l);
  static FieldSpec pure_cubic(std::uint64_t m);

  /// Parses `quad:<d>`, `cyclo:<l>` or `cubic:<m>`.
  static FieldSpec parse(std::string_view text);

  const Family& family() const { return family_; }
  std::uint32_t degree() const;
  bool is_galois() const;
  std::string to_string() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  explicit FieldSpec(Family f) : family_(f) {}
  Family family_;
};

struct IdealFactor {
  std::uint32_t e = 1;  // ramification index
  std::uint32_t f = 1;  // residue degree
  friend bool operator==(const IdealFactor&, const IdealFactor&) = default;
};

/// Factorization shape of an ideal as a list of (e_i, f_i), one entry per
/// prime ideal, sorted descending by (e, f). When `field` is set the pattern
/// is that of pO_K and sum e_i f_i equals the field degree.
class SplittingPattern {
 public:
  /// Pattern of pO_K; validates the degree constraint (and uniformity for
  /// Galois families). Throws std::domain_error.
  SplittingPattern(std::uint64_t p, FieldSpec field,
                   std::vector<IdealFactor> factors);

  /// A raw ideal shape not tied to a specific field.
  explicit SplittingPattern(std::vector<IdealFactor> factors);

  std::optional<std::uint64_t> prime() const { return prime_; }
  const std::optional<FieldSpec>& field() const { return field_; }
  const std::vector<IdealFactor>& factors() const { return factors_; }
  std::size_t g() const { return factors_.size(); }

  std::vector<std::uint32_t> ramification_indices() const;

  std::string to_string() const;

 private:
  void canonicalize();

  std::optional<std::uint64_t> prime_;
  std::optional<FieldSpec> field_;
  std::vector<IdealFactor> factors_;
};

/// Kronecker symbol (a / n) for n >= 1.
int kronecker(std::int64_t a, std::uint64_t n);

/// Multiplicative order of a modulo prime l, with gcd(a, l) = 1.
std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t l);

SplittingPattern split_prime(const FieldSpec& field, std::uint64_t p);

double ideal_entropy(const SplittingPattern& sp);
std::uint64_t ideal_tau(const SplittingPattern& sp);
std::uint64_t ideal_tau_e(const SplittingPattern& sp);

/// Every (b_1..b_g) with b_i | e_i, lexicographic. Throws std::range_error
/// beyond cap.
std::vector<std::vector<std::uint32_t>> ideal_exponential_divisors(
    const SplittingPattern& sp, std::size_t cap = kDefaultEnumerationCap);

/// The raw pattern P_1^b_1 ... P_g^b_g keeping each residue degree.
SplittingPattern apply_exponents(const SplittingPattern& sp,
                                 const std::vector<std::uint32_t>& betas);

}  // namespace entropia
