#pragma once

#include <complex>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "asc/errors.hpp"

namespace asc {

/// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime(std::uint64_t n);

/// Largest prime strictly below `bound`; 0 when there is none.
std::uint64_t largest_prime_below(std::uint64_t bound);

/// Smallest prime >= `n`.
std::uint64_t smallest_prime_at_least(std::uint64_t n);

/// GF(p^m) in a polynomial basis.
///
/// Elements are encoded as integers in [0, q): the coefficient vector
/// (c_0, ..., c_{m-1}) of c_0 + c_1 x + ... maps to sum c_i p^i. The
/// modulus is the first monic irreducible polynomial of degree m in that
/// same encoding order of its lower coefficients. Fields up to q = 2^12
/// multiply through log/antilog tables, larger ones by schoolbook
/// reduction. Instances are immutable and shared.
class FiniteField {
 public:
  using Elem = std::uint32_t;

  static constexpr std::uint32_t kMaxOrder = 1u << 16;
  static constexpr std::uint32_t kTableOrder = 1u << 12;

  static std::shared_ptr<const FiniteField> make(std::uint32_t p, std::uint32_t m);
  /// Field of order q; q must be a prime power <= 2^16.
  static std::shared_ptr<const FiniteField> of_order(std::uint32_t q);

  std::uint32_t characteristic() const noexcept { return p_; }
  std::uint32_t degree() const noexcept { return m_; }
  std::uint32_t order() const noexcept { return q_; }
  /// Monic modulus, coefficients c_0..c_m (size m + 1).
  const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }

  std::vector<std::uint32_t> coefficients(Elem a) const;
  Elem from_coefficients(std::span<const std::uint32_t> coeffs) const;

  Elem add(Elem a, Elem b) const noexcept;
  Elem sub(Elem a, Elem b) const noexcept;
  Elem neg(Elem a) const noexcept;
  Elem mul(Elem a, Elem b) const noexcept;
  /// Throws DivisionByZero for a == 0.
  Elem inv(Elem a) const;
  Elem pow(Elem a, std::uint64_t e) const noexcept;

  /// Absolute trace a + a^p + ... + a^{p^{m-1}}, as a residue in [0, p).
  std::uint32_t trace(Elem a) const noexcept;

  /// Additive character chi_j(a) = exp(2 pi i tr(j a) / p).
  std::complex<double> character(Elem j, Elem a) const noexcept;

  /// exp(2 pi i r / p) for a residue r.
  const std::complex<double>& root_of_unity(std::uint32_t r) const noexcept { return roots_[r]; }

  bool uses_tables() const noexcept { return !log_.empty(); }

 private:
  FiniteField(std::uint32_t p, std::uint32_t m);

  Elem mul_schoolbook(Elem a, Elem b) const noexcept;
  void build_tables();

  std::uint32_t p_;
  std::uint32_t m_;
  std::uint32_t q_;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint32_t> pow_p_;          // p^i for i <= m
  std::vector<std::uint32_t> trace_basis_;    // tr(x^i), i < m
  std::vector<std::complex<double>> roots_;   // exp(2 pi i r / p)
  std::vector<std::uint32_t> log_;            // discrete log, q <= kTableOrder
  std::vector<std::uint32_t> antilog_;
};

using FieldPtr = std::shared_ptr<const FiniteField>;

/// Element of a specific field. Arithmetic between elements of different
/// fields throws InvalidArgument.
class FieldElement {
 public:
  FieldElement(FieldPtr field, FiniteField::Elem value);
  static FieldElement from_coefficients(FieldPtr field, std::span<const std::uint32_t> coeffs);

  const FieldPtr& field() const noexcept { return field_; }
  FiniteField::Elem value() const noexcept { return value_; }
  std::vector<std::uint32_t> coefficients() const { return field_->coefficients(value_); }
  bool is_zero() const noexcept { return value_ == 0; }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator-() const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement inverse() const;
  FieldElement pow(std::uint64_t e) const;
  bool operator==(const FieldElement& o) const noexcept;

 private:
  void check_same_field(const FieldElement& o) const;

  FieldPtr field_;
  FiniteField::Elem value_;
};

std::uint32_t absolute_trace(const FieldElement& a);

/// chi_j(a) = e(tr(j a) / p). chi_0 is identically 1.
std::complex<double> additive_character(const FieldElement& j, const FieldElement& a);

/// Polynomial over GF(q); coefficient i multiplies x^i. Trailing zero
/// coefficients are stripped so the leading one is nonzero.
class FieldPolynomial {
 public:
  FieldPolynomial(FieldPtr field, std::vector<FiniteField::Elem> coefficients);

  const FieldPtr& field() const noexcept { return field_; }
  const std::vector<FiniteField::Elem>& coefficients() const noexcept { return coeffs_; }
  /// Degree; -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }

  FiniteField::Elem eval(FiniteField::Elem a) const noexcept;

 private:
  FieldPtr field_;
  std::vector<FiniteField::Elem> coeffs_;
};

/// Horner evaluation f(a).
FieldElement poly_eval(const FieldPolynomial& f, const FieldElement& a);

/// Sum over all a in GF(q) of chi_j(f(a)), by enumeration. Throws
/// TrivialCharacter when j = 0 and DegreeConditionViolated unless
/// deg f >= 1 and gcd(deg f, q) = 1.
std::complex<double> weil_sum(const FieldPolynomial& f, const FieldElement& chi_index);

/// (deg f - 1) sqrt(q).
double weil_bound(int degree, std::uint32_t q);

}  // namespace asc
