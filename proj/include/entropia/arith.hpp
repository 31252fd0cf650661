#pragma once

// Exact 64-bit factorization and the multiplicative functions built on it.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace entropia {

/// Default upper bound on the length of any enumerated divisor list.
inline constexpr std::size_t kDefaultEnumerationCap = 1'000'000;

struct PrimePower {
  std::uint64_t prime = 0;
  std::uint32_t exponent = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Canonical prime factorization n = p_1^a_1 ... p_r^a_r with p_1 < ... < p_r.
/// The empty factorization represents 1.
class Factorization {
 public:
  Factorization() = default;

  /// Validates and builds from prime powers (ascending primes, exponents >= 1,
  /// every base prime, product within 64 bits). Throws std::domain_error or
  /// std::range_error.
  static Factorization from_entries(std::vector<PrimePower> entries);

  std::span<const PrimePower> entries() const { return entries_; }
  std::uint64_t value() const { return value_; }
  std::size_t size() const { return entries_.size(); }
  bool is_one() const { return entries_.empty(); }

  /// Exponent list in prime order.
  std::vector<std::uint32_t> exponents() const;

  std::string to_string() const;

  friend bool operator==(const Factorization&, const Factorization&) = default;

 private:
  Factorization(std::vector<PrimePower> entries, std::uint64_t value)
      : entries_(std::move(entries)), value_(value) {}

  friend Factorization factorize(std::uint64_t n);
  friend std::vector<Factorization> exponential_divisors(const Factorization&,
                                                         std::size_t);

  std::vector<PrimePower> entries_;
  std::uint64_t value_ = 1;
};

bool is_prime(std::uint64_t n);

std::uint64_t gcd(std::uint64_t a, std::uint64_t b);

/// Throws std::domain_error for n == 0.
Factorization factorize(std::uint64_t n);

std::uint64_t big_omega(const Factorization& f);
std::size_t small_omega(const Factorization& f);
std::uint64_t divisor_count(const Factorization& f);

/// sigma(n); throws std::range_error on 64-bit overflow.
std::uint64_t divisor_sum(const Factorization& f);

/// All divisors ascending. Throws std::range_error if tau(n) exceeds cap.
std::vector<std::uint64_t> divisors(const Factorization& f,
                                    std::size_t cap = kDefaultEnumerationCap);

/// Number of divisors of a small positive integer (the tau(alpha) factors).
std::uint32_t tau_small(std::uint32_t k);

/// Positive divisors of k, ascending.
std::vector<std::uint32_t> small_divisors(std::uint32_t k);

/// Number of exponential divisors; tau_e(1) == 1.
std::uint64_t tau_e(const Factorization& f);

/// All d = prod p_i^b_i with b_i | a_i, ascending by value. Rejects n == 1
/// (std::domain_error) and lists longer than cap (std::range_error).
std::vector<Factorization> exponential_divisors(
    const Factorization& f, std::size_t cap = kDefaultEnumerationCap);

/// n == 1 or every exponent equals 1.
bool is_squarefree(const Factorization& f);

/// Checked a * b; throws std::range_error on overflow.
std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b);

/// Checked base^exp; throws std::range_error on overflow.
std::uint64_t checked_pow(std::uint64_t base, std::uint32_t exp);

/// (base^exp) mod m using 128-bit intermediates.
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

/// The first `count` primes.
std::vector<std::uint64_t> first_primes(std::size_t count);

}  // namespace entropia
