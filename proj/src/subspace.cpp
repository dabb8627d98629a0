#include "asc/subspace.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace asc {
namespace {

bool has_imaginary_part(const Matrix& m) {
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i)
      if (m(i, j).imag() != 0.0) return true;
  return false;
}

void check_orthonormal(const Matrix& basis) {
  if (basis.rows() == 0) return;
  const Matrix gram = basis * basis.adjoint();
  const Matrix err = gram - Matrix::Identity(basis.rows(), basis.rows());
  if (err.cwiseAbs().maxCoeff() > kTolOrth)
    throw InvalidArgument("basis rows are not orthonormal");
}

void require_same_ambient(const Subspace& u, const Subspace& v) {
  if (u.ambient_dim() != v.ambient_dim())
    throw DimensionMismatch("subspaces live in ambient spaces of different dimension");
}

// Right singular vectors of `a`: the full n x n V, columns ordered by
// descending singular value. Returns the numerical rank through `rank`.
Matrix right_singular_vectors(const Matrix& a, Field field, Index& rank, bool full) {
  const Index n = a.cols();
  if (a.rows() == 0 || n == 0) {
    rank = 0;
    return Matrix::Identity(n, full ? n : 0);
  }
  const unsigned opts = full ? Eigen::ComputeFullV : Eigen::ComputeThinV;
  Eigen::VectorXd sv;
  Matrix v;
  if (field == Field::Real) {
    Eigen::JacobiSVD<RealMatrix> svd(a.real(), opts);
    sv = svd.singularValues();
    v = svd.matrixV().cast<Complex>();
  } else {
    Eigen::JacobiSVD<Matrix> svd(a, opts);
    sv = svd.singularValues();
    v = svd.matrixV();
  }
  rank = 0;
  if (sv.size() > 0 && sv(0) > 0.0) {
    const double cut = kTolRank * sv(0);
    while (rank < sv.size() && sv(rank) > cut) ++rank;
  }
  return v;
}

}  // namespace

Subspace::Subspace(Index ambient_dim, Field field) : basis_(0, ambient_dim), field_(field) {
  if (ambient_dim < 0) throw InvalidArgument("negative ambient dimension");
}

Subspace Subspace::from_orthonormal(Matrix basis, Field field) {
  if (field == Field::Real && has_imaginary_part(basis))
    throw InvalidArgument("real-mode basis has a nonzero imaginary part");
  check_orthonormal(basis);
  return Subspace(std::move(basis), field, true);
}

Subspace Subspace::full(Index ambient_dim, Field field) {
  return Subspace(Matrix::Identity(ambient_dim, ambient_dim), field, true);
}

Field infer_field(const Matrix& m) { return has_imaginary_part(m) ? Field::Complex : Field::Real; }

Subspace orthonormalize(const Matrix& raw, Field field) {
  if (field == Field::Real && has_imaginary_part(raw))
    throw InvalidArgument("real-mode matrix has a nonzero imaginary part");
  Index rank = 0;
  const Matrix v = right_singular_vectors(raw, field, rank, false);
  Matrix basis = v.leftCols(rank).adjoint();
  return Subspace(std::move(basis), field, true);
}

Subspace orthonormalize(const Matrix& raw) { return orthonormalize(raw, infer_field(raw)); }

Subspace unit_line(const Eigen::Ref<const Eigen::VectorXcd>& v, Field field) {
  if (std::abs(v.norm() - 1.0) > kTolOrth) throw InvalidArgument("line generator is not a unit vector");
  Matrix basis = v.transpose();
  if (field == Field::Real && has_imaginary_part(basis))
    throw InvalidArgument("real-mode line has a nonzero imaginary part");
  return Subspace(std::move(basis), field, true);
}

Projection projection_of(const Subspace& u) {
  const Matrix& z = u.basis();
  if (u.is_zero()) return {Matrix::Zero(u.ambient_dim(), u.ambient_dim())};
  return {z.adjoint() * z};
}

double distance(const Subspace& u, const Subspace& v) {
  require_same_ambient(u, v);
  const Matrix diff = projection_of(u).matrix - projection_of(v).matrix;
  return diff.squaredNorm();
}

double distance_via_gram(const Subspace& u, const Subspace& v) {
  require_same_ambient(u, v);
  if (u.dim() != v.dim()) throw DimensionMismatch("gram-form distance needs equal dimensions");
  if (u.is_zero()) return 0.0;
  const double overlap = (u.basis() * v.basis().adjoint()).squaredNorm();
  return std::max(0.0, 2.0 * (static_cast<double>(u.dim()) - overlap));
}

double chordal_distance(const Subspace& u, const Subspace& v) { return std::sqrt(distance(u, v) / 2.0); }

std::vector<double> principal_angles(const Subspace& u, const Subspace& v) {
  require_same_ambient(u, v);
  if (u.dim() != v.dim()) throw DimensionMismatch("principal angles need equal dimensions");
  if (u.is_zero()) throw DimensionMismatch("principal angles need dimension >= 1");
  const Matrix cross = u.basis() * v.basis().adjoint();
  const Eigen::VectorXd sv = Eigen::JacobiSVD<Matrix>(cross).singularValues();
  std::vector<double> angles;
  angles.reserve(static_cast<std::size_t>(sv.size()));
  for (Index i = 0; i < sv.size(); ++i) angles.push_back(std::acos(std::clamp(sv(i), 0.0, 1.0)));
  return angles;
}

Subspace complement(const Subspace& u) {
  const Index n = u.ambient_dim();
  if (u.is_zero()) return Subspace::full(n, u.field());
  Index rank = 0;
  const Matrix v = right_singular_vectors(u.basis(), u.field(), rank, true);
  Matrix basis = v.rightCols(n - rank).adjoint();
  return Subspace(std::move(basis), u.field(), true);
}

Subspace subspace_sum(const Subspace& u, const Subspace& v) {
  require_same_ambient(u, v);
  const Field f = common_field(u.field(), v.field());
  if (u.is_zero()) return v.field() == f ? v : orthonormalize(v.basis(), f);
  if (v.is_zero()) return u.field() == f ? u : orthonormalize(u.basis(), f);
  Matrix stacked(u.dim() + v.dim(), u.ambient_dim());
  stacked << u.basis(), v.basis();
  return orthonormalize(stacked, f);
}

Subspace direct_sum(const Subspace& u, const Subspace& v) {
  Subspace s = subspace_sum(u, v);
  if (s.dim() != u.dim() + v.dim())
    throw NontrivialIntersection("direct sum requires U and V to intersect trivially");
  return s;
}

bool contains(const Subspace& outer, const Subspace& inner, double tol) {
  require_same_ambient(outer, inner);
  if (inner.is_zero()) return true;
  if (outer.is_zero()) return false;
  const Matrix& z = inner.basis();
  const Matrix residual = z - (z * outer.basis().adjoint()) * outer.basis();
  return residual.cwiseAbs().maxCoeff() <= tol;
}

bool same_subspace(const Subspace& u, const Subspace& v) { return distance(u, v) < kTolEqual; }

Subspace transform(const Subspace& u, const Matrix& q) {
  if (q.rows() != u.ambient_dim() || q.cols() != u.ambient_dim())
    throw DimensionMismatch("frame change must be ambient x ambient");
  if (u.is_zero()) return u;
  return orthonormalize(u.basis() * q, common_field(u.field(), infer_field(q)));
}

Matrix gaussian_matrix(Index rows, Index cols, Field field, Rng& rng) {
  Matrix m(rows, cols);
  if (field == Field::Real) {
    for (Index i = 0; i < rows; ++i)
      for (Index j = 0; j < cols; ++j) m(i, j) = Complex(rng.gaussian(), 0.0);
  } else {
    const double s = std::numbers::sqrt2 / 2.0;
    for (Index i = 0; i < rows; ++i)
      for (Index j = 0; j < cols; ++j) {
        const double re = rng.gaussian();
        const double im = rng.gaussian();
        m(i, j) = Complex(s * re, s * im);
      }
  }
  return m;
}

Subspace random_subspace(Index n, Index m, Field field, Rng& rng) {
  if (m < 0 || m > n) throw InvalidArgument("random_subspace needs 0 <= m <= n");
  if (m == 0) return Subspace::zero(n, field);
  // A Gaussian matrix has full row rank almost surely; resample otherwise.
  for (int attempt = 0; attempt < 16; ++attempt) {
    Subspace s = orthonormalize(gaussian_matrix(m, n, field, rng), field);
    if (s.dim() == m) return s;
  }
  throw RetryExhausted("could not draw a full-rank Gaussian matrix");
}

Matrix random_unitary(Index n, Field field, Rng& rng) {
  const Matrix g = gaussian_matrix(n, n, field, rng);
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ() * Matrix::Identity(n, n);
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  // Fix the phase of each column so the distribution is Haar.
  for (Index j = 0; j < n; ++j) {
    const double mag = std::abs(r(j, j));
    if (mag > 0.0) q.col(j) *= r(j, j) / mag;
  }
  if (field == Field::Real) q = q.real().cast<Complex>();
  return q;
}

Eigen::VectorXd singular_values(const Matrix& a) {
  if (a.rows() == 0 || a.cols() == 0) return Eigen::VectorXd(0);
  return Eigen::JacobiSVD<Matrix>(a).singularValues();
}

Index numerical_rank(const Matrix& a) {
  const Eigen::VectorXd sv = singular_values(a);
  if (sv.size() == 0 || sv(0) <= 0.0) return 0;
  const double cut = kTolRank * sv(0);
  Index r = 0;
  while (r < sv.size() && sv(r) > cut) ++r;
  return r;
}

double spectral_norm(const Matrix& a) {
  const Eigen::VectorXd sv = singular_values(a);
  return sv.size() == 0 ? 0.0 : sv(0);
}

double frobenius_norm(const Matrix& a) { return a.norm(); }

}  // namespace asc
