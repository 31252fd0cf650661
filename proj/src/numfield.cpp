#include "entropia/numfield.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "entropia/entropy.hpp"

namespace entropia {

namespace {

std::uint64_t mod_signed(std::int64_t a, std::uint64_t m) {
  const auto r = static_cast<std::int64_t>(a % static_cast<std::int64_t>(m));
  return static_cast<std::uint64_t>(r < 0 ? r + static_cast<std::int64_t>(m) : r);
}

bool is_squarefree_int(std::uint64_t n) {
  return is_squarefree(factorize(n));
}

bool is_cubefree(std::uint64_t n) {
  const auto f = factorize(n);
  return std::all_of(f.entries().begin(), f.entries().end(),
                     [](const PrimePower& e) { return e.exponent < 3; });
}

template <class T>
T parse_number(std::string_view text) {
  T value{};
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || text.empty()) {
    throw std::domain_error("malformed number '" + std::string(text) + "'");
  }
  return value;
}

std::vector<IdealFactor> repeat(std::size_t g, IdealFactor f) {
  return std::vector<IdealFactor>(g, f);
}

}  // namespace

FieldSpec FieldSpec::quadratic(std::int64_t d) {
  if (d == 0 || d == 1) throw std::domain_error("quadratic: d must not be 0 or 1");
  if (d == INT64_MIN || !is_squarefree_int(static_cast<std::uint64_t>(d < 0 ? -d : d))) {
    throw std::domain_error("quadratic: d must be squarefree");
  }
  return FieldSpec(Quadratic{d});
}

FieldSpec FieldSpec::cyclotomic(std::uint64_t l) {
  if (l < 3 || !is_prime(l)) {
    throw std::domain_error("cyclotomic: l must be an odd prime");
  }
  return FieldSpec(CyclotomicPrime{l});
}

FieldSpec FieldSpec::pure_cubic(std::uint64_t m) {
  if (m < 2) throw std::domain_error("pure cubic: m must be >= 2");
  if (!is_cubefree(m)) throw std::domain_error("pure cubic: m must be cubefree");
  if (static_cast<unsigned __int128>(m) * m % 9 == 1) {
    throw std::domain_error("pure cubic: m^2 == 1 mod 9 is not monogenic");
  }
  return FieldSpec(PureCubic{m});
}

FieldSpec FieldSpec::parse(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw std::domain_error("field spec must look like quad:<d>, cyclo:<l> or cubic:<m>");
  }
  const auto kind = text.substr(0, colon);
  const auto arg = text.substr(colon + 1);
  if (kind == "quad") return quadratic(parse_number<std::int64_t>(arg));
  if (kind == "cyclo") return cyclotomic(parse_number<std::uint64_t>(arg));
  if (kind == "cubic") return pure_cubic(parse_number<std::uint64_t>(arg));
  throw std::domain_error("unknown field family '" + std::string(kind) + "'");
}

std::uint32_t FieldSpec::degree() const {
  return std::visit(
      [](const auto& f) -> std::uint32_t {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, Quadratic>) return 2;
        else if constexpr (std::is_same_v<T, CyclotomicPrime>) return static_cast<std::uint32_t>(f.l - 1);
        else return 3;
      },
      family_);
}

bool FieldSpec::is_galois() const {
  return !std::holds_alternative<PureCubic>(family_);
}

std::string FieldSpec::to_string() const {
  return std::visit(
      [](const auto& f) -> std::string {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, Quadratic>) return "quad:" + std::to_string(f.d);
        else if constexpr (std::is_same_v<T, CyclotomicPrime>) return "cyclo:" + std::to_string(f.l);
        else return "cubic:" + std::to_string(f.m);
      },
      family_);
}

SplittingPattern::SplittingPattern(std::uint64_t p, FieldSpec field,
                                   std::vector<IdealFactor> factors)
    : prime_(p), field_(field), factors_(std::move(factors)) {
  canonicalize();
  std::uint64_t total = 0;
  for (const auto& f : factors_) total += static_cast<std::uint64_t>(f.e) * f.f;
  if (total != field.degree()) {
    throw std::domain_error("sum of e_i f_i must equal the field degree");
  }
  if (field.is_galois()) {
    const auto first = factors_.front();
    const bool uniform = std::all_of(factors_.begin(), factors_.end(),
                                     [&](const IdealFactor& x) { return x == first; });
    if (!uniform) throw std::domain_error("Galois splitting must be uniform");
  }
}

SplittingPattern::SplittingPattern(std::vector<IdealFactor> factors)
    : factors_(std::move(factors)) {
  canonicalize();
}

void SplittingPattern::canonicalize() {
  if (factors_.empty()) throw std::domain_error("pattern needs at least one prime ideal");
  for (const auto& f : factors_) {
    if (f.e == 0 || f.f == 0) throw std::domain_error("e_i and f_i must be >= 1");
  }
  std::sort(factors_.begin(), factors_.end(), [](const auto& a, const auto& b) {
    return a.e != b.e ? a.e > b.e : a.f > b.f;
  });
}

std::vector<std::uint32_t> SplittingPattern::ramification_indices() const {
  std::vector<std::uint32_t> out;
  for (const auto& f : factors_) out.push_back(f.e);
  return out;
}

std::string SplittingPattern::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i) os << ", ";
    os << "(e=" << factors_[i].e << ", f=" << factors_[i].f << ')';
  }
  os << ']';
  return os.str();
}

int kronecker(std::int64_t a, std::uint64_t n) {
  if (n == 0) throw std::domain_error("kronecker: n must be >= 1");
  int result = 1;
  while ((n & 1) == 0) {
    n >>= 1;
    const auto a8 = mod_signed(a, 8);
    if (a8 % 2 == 0) return 0;
    if (a8 == 3 || a8 == 5) result = -result;
  }
  if (n == 1) return result;
  // Jacobi symbol for odd n via reciprocity.
  std::uint64_t x = mod_signed(a, n);
  while (x != 0) {
    while ((x & 1) == 0) {
      x >>= 1;
      const auto n8 = n % 8;
      if (n8 == 3 || n8 == 5) result = -result;
    }
    std::swap(x, n);
    if (x % 4 == 3 && n % 4 == 3) result = -result;
    x %= n;
  }
  return n == 1 ? result : 0;
}

std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t l) {
  if (a % l == 0) throw std::domain_error("order undefined when l divides a");
  for (std::uint32_t d : small_divisors(static_cast<std::uint32_t>(l - 1))) {
    if (pow_mod(a, d, l) == 1) return d;
  }
  throw UnsupportedCase("order search failed; is l prime?");
}

SplittingPattern split_prime(const FieldSpec& field, std::uint64_t p) {
  if (!is_prime(p)) throw std::domain_error(std::to_string(p) + " is not prime");
  const auto& fam = field.family();

  if (const auto* q = std::get_if<Quadratic>(&fam)) {
    int chi;
    if (p == 2) {
      const auto d8 = mod_signed(q->d, 8);
      chi = d8 == 1 ? 1 : d8 == 5 ? -1 : 0;
    } else {
      // (D/p) for D = d or 4d; the factor (4/p) is 1 for odd p.
      chi = kronecker(q->d, p);
    }
    if (chi == 1) return SplittingPattern(p, field, repeat(2, {1, 1}));
    if (chi == -1) return SplittingPattern(p, field, {{1, 2}});
    return SplittingPattern(p, field, {{2, 1}});
  }

  if (const auto* c = std::get_if<CyclotomicPrime>(&fam)) {
    if (p == c->l) {
      return SplittingPattern(p, field, {{static_cast<std::uint32_t>(c->l - 1), 1}});
    }
    const auto f = static_cast<std::uint32_t>(multiplicative_order(p, c->l));
    return SplittingPattern(p, field, repeat((c->l - 1) / f, {1, f}));
  }

  const auto m = std::get<PureCubic>(fam).m;
  // x^3 - m is x^3 mod p when p | m and (x - m)^3 mod 3 otherwise.
  if (m % p == 0 || p == 3) return SplittingPattern(p, field, {{3, 1}});
  if (p % 3 == 2) return SplittingPattern(p, field, {{1, 1}, {1, 2}});
  if (p % 3 == 1) {
    if (pow_mod(m, (p - 1) / 3, p) == 1) {
      return SplittingPattern(p, field, repeat(3, {1, 1}));
    }
    return SplittingPattern(p, field, {{1, 3}});
  }
  throw UnsupportedCase("no splitting rule for " + field.to_string() +
                        " at p = " + std::to_string(p));
}

double ideal_entropy(const SplittingPattern& sp) {
  const auto e = sp.ramification_indices();
  return multiplicity_entropy(e);
}

std::uint64_t ideal_tau(const SplittingPattern& sp) {
  std::uint64_t total = 1;
  for (const auto& f : sp.factors()) total = checked_mul(total, f.e + 1ULL);
  return total;
}

std::uint64_t ideal_tau_e(const SplittingPattern& sp) {
  std::uint64_t total = 1;
  for (const auto& f : sp.factors()) total = checked_mul(total, tau_small(f.e));
  return total;
}

std::vector<std::vector<std::uint32_t>> ideal_exponential_divisors(
    const SplittingPattern& sp, std::size_t cap) {
  if (ideal_tau_e(sp) > cap) {
    throw std::range_error("ideal e-divisor list exceeds cap of " +
                           std::to_string(cap));
  }
  std::vector<std::vector<std::uint32_t>> out{{}};
  for (const auto& f : sp.factors()) {
    std::vector<std::vector<std::uint32_t>> next;
    for (const auto& prefix : out) {
      for (std::uint32_t b : small_divisors(f.e)) {
        auto v = prefix;
        v.push_back(b);
        next.push_back(std::move(v));
      }
    }
    out = std::move(next);
  }
  return out;
}

SplittingPattern apply_exponents(const SplittingPattern& sp,
                                 const std::vector<std::uint32_t>& betas) {
  if (betas.size() != sp.g()) throw std::domain_error("exponent vector length must equal g");
  std::vector<IdealFactor> factors;
  for (std::size_t i = 0; i < betas.size(); ++i) {
    const auto& f = sp.factors()[i];
    if (betas[i] == 0 || f.e % betas[i] != 0) {
      throw std::domain_error("each exponent must divide its ramification index");
    }
    factors.push_back({betas[i], f.f});
  }
  return SplittingPattern(std::move(factors));
}

}  // namespace entropia
