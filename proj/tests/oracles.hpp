#pragma once

// Independent reference implementations used as test oracles. Nothing here
// calls into the library's linear algebra or field arithmetic.

#include <complex>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

namespace oracle {

using Matrix = Eigen::MatrixXcd;

// Modified Gram-Schmidt with one reorthogonalization pass; rows whose
// residual falls below tol (relative to the largest input row) are dropped.
inline Matrix gram_schmidt(const Matrix& raw, double tol = 1e-9) {
  double scale = 0.0;
  for (Eigen::Index i = 0; i < raw.rows(); ++i) scale = std::max(scale, raw.row(i).norm());
  std::vector<Eigen::RowVectorXcd> kept;
  for (Eigen::Index i = 0; i < raw.rows(); ++i) {
    Eigen::RowVectorXcd v = raw.row(i);
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& q : kept) {
        std::complex<double> c(0.0, 0.0);
        for (Eigen::Index j = 0; j < v.size(); ++j) c += std::conj(q(j)) * v(j);
        v -= c * q;
      }
    const double nv = v.norm();
    if (nv > tol * std::max(scale, 1e-300)) kept.push_back(v / nv);
  }
  Matrix out(static_cast<Eigen::Index>(kept.size()), raw.cols());
  for (std::size_t i = 0; i < kept.size(); ++i) out.row(static_cast<Eigen::Index>(i)) = kept[i];
  return out;
}

inline Matrix projector(const Matrix& orthonormal_rows) {
  const Eigen::Index n = orthonormal_rows.cols();
  Matrix p = Matrix::Zero(n, n);
  for (Eigen::Index r = 0; r < orthonormal_rows.rows(); ++r)
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = 0; j < n; ++j)
        p(i, j) += std::conj(orthonormal_rows(r, i)) * orthonormal_rows(r, j);
  return p;
}

inline double squared_frobenius(const Matrix& a) {
  double s = 0.0;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) s += std::norm(a(i, j));
  return s;
}

// ----- polynomials over Z_p (coefficient i multiplies x^i) ---------------------

using Poly = std::vector<std::int64_t>;

inline void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

inline Poly poly_mul(const Poly& a, const Poly& b, std::int64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
  trim(c);
  return c;
}

// Remainder of a modulo a monic m, by schoolbook long division.
inline Poly poly_mod(Poly a, const Poly& m, std::int64_t p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  while (a.size() > dm) {
    const std::int64_t lead = a.back();
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) a[shift + i] = ((a[shift + i] - lead * m[i]) % p + p) % p;
    trim(a);
  }
  return a;
}

inline Poly from_int(std::uint32_t v, std::int64_t p, std::uint32_t m) {
  Poly f(m, 0);
  for (std::uint32_t i = 0; i < m; ++i) {
    f[i] = v % p;
    v /= static_cast<std::uint32_t>(p);
  }
  trim(f);
  return f;
}

inline std::uint32_t to_int(const Poly& f, std::int64_t p) {
  std::uint32_t v = 0, w = 1;
  for (auto c : f) {
    v += static_cast<std::uint32_t>(c) * w;
    w *= static_cast<std::uint32_t>(p);
  }
  return v;
}

// True when the monic f of degree m has no monic factor of degree 1..m/2.
inline bool irreducible(const Poly& f, std::int64_t p) {
  const std::size_t m = f.size() - 1;
  for (std::size_t d = 1; d <= m / 2; ++d) {
    std::int64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::int64_t low = 0; low < count; ++low) {
      Poly g(d + 1, 0);
      std::int64_t v = low;
      for (std::size_t i = 0; i < d; ++i) {
        g[i] = v % p;
        v /= p;
      }
      g[d] = 1;
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

}  // namespace oracle
