#pragma once

#include <Eigen/Dense>

#include <complex>
#include <vector>

#include "asc/errors.hpp"
#include "asc/rng.hpp"

namespace asc {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using RealMatrix = Eigen::MatrixXd;
using Index = Eigen::Index;

/// Scalar field of the ambient space. The enumerator value is the usual
/// beta parameter (1 for real, 2 for complex).
enum class Field : int { Real = 1, Complex = 2 };

constexpr int beta(Field f) noexcept { return static_cast<int>(f); }

/// The wider of two fields; mixing a real and a complex operand yields complex.
constexpr Field common_field(Field a, Field b) noexcept {
  return (a == Field::Complex || b == Field::Complex) ? Field::Complex : Field::Real;
}

/// Orthonormality tolerance for bases and projection invariants.
inline constexpr double kTolOrth = 1e-10;
/// Singular values below kTolRank * sigma_max count as zero.
inline constexpr double kTolRank = 1e-9;
/// Two subspaces closer than this (squared-projection distance) are equal.
inline constexpr double kTolEqual = 1e-9;

/// A subspace of L^n stored as an orthonormal row basis (dim x n).
///
/// Instances are immutable. The zero subspace has an empty (0 x n) basis.
/// In real mode every basis entry has an exactly-zero imaginary part.
class Subspace {
 public:
  /// The zero subspace of an n-dimensional ambient space.
  explicit Subspace(Index ambient_dim, Field field = Field::Complex);

  /// Wrap an already-orthonormal basis. Throws InvalidArgument when the rows
  /// are not orthonormal within kTolOrth or a real-mode basis has imaginary
  /// parts.
  static Subspace from_orthonormal(Matrix basis, Field field);

  static Subspace zero(Index ambient_dim, Field field) { return Subspace(ambient_dim, field); }
  static Subspace full(Index ambient_dim, Field field);

  Index ambient_dim() const noexcept { return basis_.cols(); }
  Index dim() const noexcept { return basis_.rows(); }
  Field field() const noexcept { return field_; }
  const Matrix& basis() const noexcept { return basis_; }
  bool is_zero() const noexcept { return basis_.rows() == 0; }

 private:
  Subspace(Matrix basis, Field field, bool /*trusted*/) : basis_(std::move(basis)), field_(field) {}

  friend Subspace orthonormalize(const Matrix& raw, Field field);
  friend Subspace complement(const Subspace& u);
  friend Subspace unit_line(const Eigen::Ref<const Eigen::VectorXcd>& v, Field field);

  Matrix basis_;
  Field field_;
};

/// Orthogonal projector P = Z^H Z onto a subspace with orthonormal basis Z.
struct Projection {
  Matrix matrix;
};

/// Real mode when every imaginary part is exactly zero, complex otherwise.
Field infer_field(const Matrix& m);

/// Row space of `raw`. The dimension is the numerical rank (kTolRank).
Subspace orthonormalize(const Matrix& raw, Field field);
Subspace orthonormalize(const Matrix& raw);

/// Line spanned by v; v must already have unit norm (checked to 1e-10).
Subspace unit_line(const Eigen::Ref<const Eigen::VectorXcd>& v, Field field);

Projection projection_of(const Subspace& u);

/// ||P_U - P_V||^2 computed from the two projection matrices.
double distance(const Subspace& u, const Subspace& v);

/// 2 (m - ||Z T^H||^2) for two subspaces of the same dimension m.
double distance_via_gram(const Subspace& u, const Subspace& v);

/// (1/sqrt 2) ||P_U - P_V||.
double chordal_distance(const Subspace& u, const Subspace& v);

/// Principal angles in ascending order (arccos of the descending singular
/// values of Z T^H). Requires dim(u) == dim(v) >= 1.
std::vector<double> principal_angles(const Subspace& u, const Subspace& v);

/// Orthogonal complement with respect to the standard inner product.
Subspace complement(const Subspace& u);

/// U + V, the row space of the stacked bases.
Subspace subspace_sum(const Subspace& u, const Subspace& v);

/// U + V, throwing NontrivialIntersection unless dim(U+V) = dim U + dim V.
Subspace direct_sum(const Subspace& u, const Subspace& v);

/// True when every basis vector of `inner` lies in `outer` (to `tol`).
bool contains(const Subspace& outer, const Subspace& inner, double tol = 1e-9);

/// Same subspace up to kTolEqual.
bool same_subspace(const Subspace& u, const Subspace& v);

/// Row space of basis * q (q unitary/orthogonal), i.e. U expressed in a
/// rotated orthonormal frame.
Subspace transform(const Subspace& u, const Matrix& q);

// Random sampling. Complex entries have independent N(0, 1/2) real and
// imaginary parts; real entries are N(0, 1).
Matrix gaussian_matrix(Index rows, Index cols, Field field, Rng& rng);

/// Row space of an m x n Gaussian matrix: uniform on the Grassmannian.
Subspace random_subspace(Index n, Index m, Field field, Rng& rng);

/// Haar-distributed unitary (complex) or orthogonal (real) n x n matrix.
Matrix random_unitary(Index n, Field field, Rng& rng);

// Dense linear-algebra helpers shared by the other modules.
Eigen::VectorXd singular_values(const Matrix& a);
Index numerical_rank(const Matrix& a);
double spectral_norm(const Matrix& a);
double frobenius_norm(const Matrix& a);

}  // namespace asc
