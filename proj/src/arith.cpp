#include "entropia/arith.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace entropia {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

constexpr u64 kTrialBound = 10'000;

const std::vector<u64>& small_primes() {
  static const std::vector<u64> primes = [] {
    std::vector<bool> composite(kTrialBound + 1, false);
    std::vector<u64> out;
    for (u64 i = 2; i <= kTrialBound; ++i) {
      if (composite[i]) continue;
      out.push_back(i);
      for (u64 j = i * i; j <= kTrialBound; j += i) composite[j] = true;
    }
    return out;
  }();
  return primes;
}

u64 mul_mod(u64 a, u64 b, u64 m) {
  return static_cast<u64>(static_cast<u128>(a) * b % m);
}

// Deterministic for all 64-bit inputs with this witness set.
bool miller_rabin(u64 n) {
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : {2ULL, 325ULL, 9375ULL, 28178ULL, 450775ULL, 9780504ULL,
                1795265022ULL}) {
    a %= n;
    if (a == 0) continue;
    u64 x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

// Brent's variant; n odd composite with no factor below kTrialBound.
u64 pollard_rho(u64 n) {
  for (u64 c = 1;; ++c) {
    auto f = [&](u64 x) { return (mul_mod(x, x, n) + c) % n; };
    u64 y = 2, x = 2, g = 1, q = 1, ys = 2;
    constexpr u64 kBatch = 128;
    u64 r = 1;
    do {
      x = y;
      for (u64 i = 0; i < r; ++i) y = f(y);
      u64 k = 0;
      do {
        ys = y;
        for (u64 i = 0; i < std::min(kBatch, r - k); ++i) {
          y = f(y);
          q = mul_mod(q, x > y ? x - y : y - x, n);
        }
        g = std::gcd(q, n);
        k += kBatch;
      } while (k < r && g == 1);
      r <<= 1;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        g = std::gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void collect_factors(u64 n, std::vector<u64>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  u64 d = pollard_rho(n);
  collect_factors(d, out);
  collect_factors(n / d, out);
}

}  // namespace

std::vector<std::uint32_t> Factorization::exponents() const {
  std::vector<std::uint32_t> out;
  out.reserve(entries_.size());
  for (const auto& e : entries_) out.push_back(e.exponent);
  return out;
}

std::string Factorization::to_string() const {
  if (entries_.empty()) return "1";
  std::ostringstream os;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) os << " * ";
    os << entries_[i].prime;
    if (entries_[i].exponent > 1) os << '^' << entries_[i].exponent;
  }
  return os.str();
}

Factorization Factorization::from_entries(std::vector<PrimePower> entries) {
  u64 value = 1;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const auto& e = entries[i];
    if (e.exponent == 0) throw std::domain_error("exponent must be >= 1");
    if (!is_prime(e.prime)) {
      throw std::domain_error(std::to_string(e.prime) + " is not prime");
    }
    if (i > 0 && entries[i - 1].prime >= e.prime) {
      throw std::domain_error("primes must be strictly increasing");
    }
    value = checked_mul(value, checked_pow(e.prime, e.exponent));
  }
  return Factorization(std::move(entries), value);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  if (m == 1) return 0;
  u64 result = 1;
  base %= m;
  while (exp) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (u64 p : small_primes()) {
    if (p * p > n) return true;
    if (n % p == 0) return n == p;
  }
  return miller_rabin(n);
}

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

Factorization factorize(std::uint64_t n) {
  if (n == 0) throw std::domain_error("cannot factorize 0");
  const u64 original = n;
  std::vector<PrimePower> entries;
  for (u64 p : small_primes()) {
    if (p * p > n) break;
    if (n % p != 0) continue;
    std::uint32_t k = 0;
    while (n % p == 0) {
      n /= p;
      ++k;
    }
    entries.push_back({p, k});
  }
  if (n > 1) {
    std::vector<u64> large;
    collect_factors(n, large);
    std::sort(large.begin(), large.end());
    for (u64 p : large) {
      if (!entries.empty() && entries.back().prime == p) {
        ++entries.back().exponent;
      } else {
        entries.push_back({p, 1});
      }
    }
  }
  return Factorization(std::move(entries), original);
}

std::uint64_t big_omega(const Factorization& f) {
  u64 total = 0;
  for (const auto& e : f.entries()) total += e.exponent;
  return total;
}

std::size_t small_omega(const Factorization& f) { return f.size(); }

std::uint64_t divisor_count(const Factorization& f) {
  u64 total = 1;
  for (const auto& e : f.entries()) total *= e.exponent + 1;
  return total;
}

std::uint64_t divisor_sum(const Factorization& f) {
  u64 total = 1;
  for (const auto& e : f.entries()) {
    // 1 + p + ... + p^a, accumulated exactly.
    u128 term = 0, power = 1;
    for (std::uint32_t k = 0; k <= e.exponent; ++k) {
      term += power;
      power *= e.prime;
    }
    const u128 product = static_cast<u128>(total) * term;
    if (term > UINT64_MAX || product > UINT64_MAX) {
      throw std::range_error("sigma(n) overflows 64 bits");
    }
    total = static_cast<u64>(product);
  }
  return total;
}

std::vector<std::uint64_t> divisors(const Factorization& f, std::size_t cap) {
  if (divisor_count(f) > cap) {
    throw std::range_error("divisor list exceeds cap of " + std::to_string(cap));
  }
  std::vector<u64> out{1};
  for (const auto& e : f.entries()) {
    const std::size_t base = out.size();
    u64 power = 1;
    for (std::uint32_t k = 1; k <= e.exponent; ++k) {
      power *= e.prime;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * power);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::uint32_t tau_small(std::uint32_t k) {
  std::uint32_t count = 0;
  for (std::uint32_t d = 1; static_cast<u64>(d) * d <= k; ++d) {
    if (k % d == 0) count += (d * d == k) ? 1 : 2;
  }
  return count;
}

std::vector<std::uint32_t> small_divisors(std::uint32_t k) {
  std::vector<std::uint32_t> lo, hi;
  for (std::uint32_t d = 1; static_cast<u64>(d) * d <= k; ++d) {
    if (k % d != 0) continue;
    lo.push_back(d);
    if (d != k / d) hi.push_back(k / d);
  }
  lo.insert(lo.end(), hi.rbegin(), hi.rend());
  return lo;
}

std::uint64_t tau_e(const Factorization& f) {
  u64 total = 1;
  for (const auto& e : f.entries()) total *= tau_small(e.exponent);
  return total;
}

std::vector<Factorization> exponential_divisors(const Factorization& f,
                                                std::size_t cap) {
  if (f.is_one()) {
    throw std::domain_error("exponential divisors are defined for n > 1");
  }
  if (tau_e(f) > cap) {
    throw std::range_error("e-divisor list exceeds cap of " +
                           std::to_string(cap));
  }
  const auto entries = f.entries();
  std::vector<std::vector<std::uint32_t>> choices;
  for (const auto& e : entries) choices.push_back(small_divisors(e.exponent));

  std::vector<Factorization> out;
  std::vector<std::size_t> idx(entries.size(), 0);
  while (true) {
    std::vector<PrimePower> pp;
    u64 value = 1;
    for (std::size_t i = 0; i < entries.size(); ++i) {
      const std::uint32_t beta = choices[i][idx[i]];
      pp.push_back({entries[i].prime, beta});
      value *= checked_pow(entries[i].prime, beta);
    }
    out.push_back(Factorization(std::move(pp), value));

    std::size_t i = 0;
    while (i < idx.size() && ++idx[i] == choices[i].size()) idx[i++] = 0;
    if (i == idx.size()) break;
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.value() < b.value(); });
  return out;
}

bool is_squarefree(const Factorization& f) {
  return std::all_of(f.entries().begin(), f.entries().end(),
                     [](const PrimePower& e) { return e.exponent == 1; });
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  u64 out;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw std::range_error("64-bit overflow");
  }
  return out;
}

std::uint64_t checked_pow(std::uint64_t base, std::uint32_t exp) {
  u64 out = 1;
  for (std::uint32_t i = 0; i < exp; ++i) out = checked_mul(out, base);
  return out;
}

std::vector<std::uint64_t> first_primes(std::size_t count) {
  std::vector<u64> out;
  for (u64 n = 2; out.size() < count; ++n) {
    if (is_prime(n)) out.push_back(n);
  }
  return out;
}

}  // namespace entropia
