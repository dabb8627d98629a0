#include "asc/finite_field.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

namespace asc {
namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mul_mod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 pow_mod(u64 a, u64 e, u64 m) {
  u64 r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mul_mod(r, a, m);
    a = mul_mod(a, a, m);
    e >>= 1;
  }
  return r;
}

// Polynomials over GF(p), ascending coefficients, no trailing zeros.
using Poly = std::vector<std::uint32_t>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t inv_mod_p(std::uint32_t a, std::uint32_t p) {
  return static_cast<std::uint32_t>(pow_mod(a, p - 2, p));
}

// Remainder of a divided by b (b nonzero).
Poly poly_mod(Poly a, const Poly& b, std::uint32_t p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  const std::uint32_t lead_inv = inv_mod_p(b.back(), p);
  while (a.size() >= b.size()) {
    const std::size_t shift = a.size() - b.size();
    const std::uint32_t factor = static_cast<std::uint32_t>(u64{a.back()} * lead_inv % p);
    for (std::size_t i = 0; i <= db; ++i) {
      const u64 sub = u64{factor} * b[i] % p;
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
    }
    trim(a);
  }
  return a;
}

// Trial division by every monic polynomial of degree 1..m/2.
bool is_irreducible(const Poly& f, std::uint32_t p) {
  const std::size_t m = f.size() - 1;
  if (m <= 1) return m == 1;
  if (f[0] == 0) return false;
  for (std::size_t d = 1; d <= m / 2; ++d) {
    u64 count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (u64 code = 0; code < count; ++code) {
      Poly g(d + 1, 0);
      u64 c = code;
      for (std::size_t i = 0; i < d; ++i) {
        g[i] = static_cast<std::uint32_t>(c % p);
        c /= p;
      }
      g[d] = 1;
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

std::vector<u64> prime_factors(u64 n) {
  std::vector<u64> out;
  for (u64 d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (u64 sp : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % sp == 0) return n == sp;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These twelve bases make the test exact below 3.3e24.
  for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
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

std::uint64_t largest_prime_below(std::uint64_t bound) {
  for (u64 c = bound; c-- > 2;)
    if (is_prime(c)) return c;
  return 0;
}

std::uint64_t smallest_prime_at_least(std::uint64_t n) {
  u64 c = n < 2 ? 2 : n;
  while (!is_prime(c)) ++c;
  return c;
}

// ---------------------------------------------------------------------------

std::shared_ptr<const FiniteField> FiniteField::make(std::uint32_t p, std::uint32_t m) {
  if (!is_prime(p)) throw InvalidField("characteristic " + std::to_string(p) + " is not prime");
  if (m < 1) throw InvalidField("extension degree must be >= 1");
  u64 q = 1;
  for (std::uint32_t i = 0; i < m; ++i) {
    q *= p;
    if (q > kMaxOrder) throw InvalidField("field order exceeds 2^16");
  }
  return std::shared_ptr<const FiniteField>(new FiniteField(p, m));
}

std::shared_ptr<const FiniteField> FiniteField::of_order(std::uint32_t q) {
  if (q < 2 || q > kMaxOrder) throw InvalidField("field order must lie in [2, 2^16]");
  const auto factors = prime_factors(q);
  if (factors.size() != 1) throw InvalidField(std::to_string(q) + " is not a prime power");
  const auto p = static_cast<std::uint32_t>(factors.front());
  std::uint32_t m = 0;
  for (std::uint32_t r = q; r > 1; r /= p) ++m;
  return make(p, m);
}

FiniteField::FiniteField(std::uint32_t p, std::uint32_t m) : p_(p), m_(m), q_(1) {
  pow_p_.push_back(1);
  for (std::uint32_t i = 0; i < m; ++i) {
    q_ *= p;
    pow_p_.push_back(q_);
  }

  // First monic irreducible polynomial, lower coefficients enumerated in
  // increasing integer encoding.
  for (u64 code = 0; code < q_; ++code) {
    Poly f(m + 1, 0);
    u64 c = code;
    for (std::uint32_t i = 0; i < m; ++i) {
      f[i] = static_cast<std::uint32_t>(c % p);
      c /= p;
    }
    f[m] = 1;
    if (is_irreducible(f, p)) {
      modulus_ = std::move(f);
      break;
    }
  }

  roots_.resize(p);
  for (std::uint32_t r = 0; r < p; ++r) {
    const double angle = 2.0 * std::numbers::pi * r / p;
    roots_[r] = {std::cos(angle), std::sin(angle)};
  }
  roots_[0] = {1.0, 0.0};

  if (q_ <= kTableOrder) build_tables();

  // tr is GF(p)-linear, so tr(x^i) for the basis monomials determines it.
  trace_basis_.resize(m);
  for (std::uint32_t i = 0; i < m; ++i) {
    const Elem xi = pow_p_[i];  // encoding of x^i
    Elem acc = 0;
    Elem term = xi;
    for (std::uint32_t k = 0; k < m; ++k) {
      acc = add(acc, term);
      term = pow(term, p);
    }
    trace_basis_[i] = acc;  // lies in the prime subfield, so acc < p
  }
}

void FiniteField::build_tables() {
  const std::uint32_t group = q_ - 1;
  if (group == 0) return;
  const auto factors = prime_factors(group);
  Elem generator = 0;
  for (Elem g = 1; g < q_; ++g) {
    bool primitive = true;
    for (u64 r : factors) {
      Elem x = 1;
      Elem base = g;
      u64 e = group / r;
      while (e) {
        if (e & 1) x = mul_schoolbook(x, base);
        base = mul_schoolbook(base, base);
        e >>= 1;
      }
      if (x == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      generator = g;
      break;
    }
  }
  antilog_.resize(group);
  log_.assign(q_, 0);
  Elem x = 1;
  for (std::uint32_t i = 0; i < group; ++i) {
    antilog_[i] = x;
    log_[x] = i;
    x = mul_schoolbook(x, generator);
  }
}

std::vector<std::uint32_t> FiniteField::coefficients(Elem a) const {
  std::vector<std::uint32_t> c(m_);
  for (std::uint32_t i = 0; i < m_; ++i) {
    c[i] = a % p_;
    a /= p_;
  }
  return c;
}

FiniteField::Elem FiniteField::from_coefficients(std::span<const std::uint32_t> coeffs) const {
  if (coeffs.size() != m_) throw InvalidArgument("coefficient vector length must equal the extension degree");
  Elem v = 0;
  for (std::uint32_t i = 0; i < m_; ++i) {
    if (coeffs[i] >= p_) throw InvalidArgument("coefficient outside [0, p)");
    v += coeffs[i] * pow_p_[i];
  }
  return v;
}

FiniteField::Elem FiniteField::add(Elem a, Elem b) const noexcept {
  if (m_ == 1) return (a + b) % p_;
  if (p_ == 2) return a ^ b;
  Elem r = 0;
  for (std::uint32_t i = 0; i < m_; ++i) {
    r += ((a % p_ + b % p_) % p_) * pow_p_[i];
    a /= p_;
    b /= p_;
  }
  return r;
}

FiniteField::Elem FiniteField::neg(Elem a) const noexcept {
  if (m_ == 1) return (p_ - a) % p_;
  if (p_ == 2) return a;
  Elem r = 0;
  for (std::uint32_t i = 0; i < m_; ++i) {
    r += ((p_ - a % p_) % p_) * pow_p_[i];
    a /= p_;
  }
  return r;
}

FiniteField::Elem FiniteField::sub(Elem a, Elem b) const noexcept { return add(a, neg(b)); }

FiniteField::Elem FiniteField::mul_schoolbook(Elem a, Elem b) const noexcept {
  if (m_ == 1) return static_cast<Elem>(u64{a} * b % p_);
  std::vector<u64> prod(2 * m_ - 1, 0);
  std::uint32_t ca[32];
  std::uint32_t cb[32];
  for (std::uint32_t i = 0; i < m_; ++i) {
    ca[i] = a % p_;
    cb[i] = b % p_;
    a /= p_;
    b /= p_;
  }
  for (std::uint32_t i = 0; i < m_; ++i) {
    if (!ca[i]) continue;
    for (std::uint32_t j = 0; j < m_; ++j) prod[i + j] = (prod[i + j] + u64{ca[i]} * cb[j]) % p_;
  }
  // Reduce with the monic modulus: x^m = -(c_0 + ... + c_{m-1} x^{m-1}).
  for (std::size_t d = prod.size(); d-- > m_;) {
    const u64 top = prod[d];
    if (!top) continue;
    prod[d] = 0;
    for (std::uint32_t i = 0; i < m_; ++i) {
      const std::size_t idx = d - m_ + i;
      prod[idx] = (prod[idx] + (p_ - top) * modulus_[i]) % p_;
    }
  }
  Elem r = 0;
  for (std::uint32_t i = 0; i < m_; ++i) r += static_cast<Elem>(prod[i]) * pow_p_[i];
  return r;
}

FiniteField::Elem FiniteField::mul(Elem a, Elem b) const noexcept {
  if (a == 0 || b == 0) return 0;
  if (!log_.empty()) {
    const std::uint32_t s = log_[a] + log_[b];
    return antilog_[s >= q_ - 1 ? s - (q_ - 1) : s];
  }
  return mul_schoolbook(a, b);
}

FiniteField::Elem FiniteField::pow(Elem a, std::uint64_t e) const noexcept {
  if (e == 0) return 1;
  if (a == 0) return 0;
  if (!log_.empty()) return antilog_[static_cast<std::uint32_t>(u64{log_[a]} * (e % (q_ - 1)) % (q_ - 1))];
  Elem r = 1;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

FiniteField::Elem FiniteField::inv(Elem a) const {
  if (a == 0) throw DivisionByZero("zero has no multiplicative inverse");
  if (!log_.empty()) return antilog_[(q_ - 1 - log_[a]) % (q_ - 1)];
  return pow(a, q_ - 2);
}

std::uint32_t FiniteField::trace(Elem a) const noexcept {
  u64 t = 0;
  for (std::uint32_t i = 0; i < m_; ++i) {
    t += u64{a % p_} * trace_basis_[i];
    a /= p_;
  }
  return static_cast<std::uint32_t>(t % p_);
}

std::complex<double> FiniteField::character(Elem j, Elem a) const noexcept {
  return roots_[trace(mul(j, a))];
}

// ---------------------------------------------------------------------------

FieldElement::FieldElement(FieldPtr field, FiniteField::Elem value) : field_(std::move(field)), value_(value) {
  if (!field_) throw InvalidArgument("field element needs a field");
  if (value_ >= field_->order()) throw InvalidArgument("field element encoding out of range");
}

FieldElement FieldElement::from_coefficients(FieldPtr field, std::span<const std::uint32_t> coeffs) {
  const auto v = field->from_coefficients(coeffs);
  return FieldElement(std::move(field), v);
}

void FieldElement::check_same_field(const FieldElement& o) const {
  if (field_ != o.field_) throw InvalidArgument("operands belong to different fields");
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  check_same_field(o);
  return {field_, field_->add(value_, o.value_)};
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
  check_same_field(o);
  return {field_, field_->sub(value_, o.value_)};
}

FieldElement FieldElement::operator-() const { return {field_, field_->neg(value_)}; }

FieldElement FieldElement::operator*(const FieldElement& o) const {
  check_same_field(o);
  return {field_, field_->mul(value_, o.value_)};
}

FieldElement FieldElement::inverse() const { return {field_, field_->inv(value_)}; }

FieldElement FieldElement::pow(std::uint64_t e) const { return {field_, field_->pow(value_, e)}; }

bool FieldElement::operator==(const FieldElement& o) const noexcept {
  return field_ == o.field_ && value_ == o.value_;
}

std::uint32_t absolute_trace(const FieldElement& a) { return a.field()->trace(a.value()); }

std::complex<double> additive_character(const FieldElement& j, const FieldElement& a) {
  if (j.field() != a.field()) throw InvalidArgument("operands belong to different fields");
  return j.field()->character(j.value(), a.value());
}

// ---------------------------------------------------------------------------

FieldPolynomial::FieldPolynomial(FieldPtr field, std::vector<FiniteField::Elem> coefficients)
    : field_(std::move(field)), coeffs_(std::move(coefficients)) {
  if (!field_) throw InvalidArgument("polynomial needs a field");
  for (auto c : coeffs_)
    if (c >= field_->order()) throw InvalidArgument("polynomial coefficient out of range");
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

FiniteField::Elem FieldPolynomial::eval(FiniteField::Elem a) const noexcept {
  FiniteField::Elem acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = field_->add(field_->mul(acc, a), *it);
  return acc;
}

FieldElement poly_eval(const FieldPolynomial& f, const FieldElement& a) {
  if (f.field() != a.field()) throw InvalidArgument("operands belong to different fields");
  return {a.field(), f.eval(a.value())};
}

std::complex<double> weil_sum(const FieldPolynomial& f, const FieldElement& chi_index) {
  if (f.field() != chi_index.field()) throw InvalidArgument("operands belong to different fields");
  if (chi_index.is_zero()) throw TrivialCharacter("character index must be nonzero");
  const int d = f.degree();
  const auto& field = *f.field();
  if (d < 1 || std::gcd(static_cast<std::uint32_t>(d), field.order()) != 1)
    throw DegreeConditionViolated("need deg f >= 1 and gcd(deg f, q) = 1");
  std::complex<double> sum{0.0, 0.0};
  for (FiniteField::Elem a = 0; a < field.order(); ++a) sum += field.character(chi_index.value(), f.eval(a));
  return sum;
}

double weil_bound(int degree, std::uint32_t q) { return (degree - 1) * std::sqrt(static_cast<double>(q)); }

}  // namespace asc
