#pragma once

#include <optional>
#include <vector>

#include "asc/subspace.hpp"

namespace asc {

/// Analog operator channel: keep a random k-dimensional subspace of the
/// input, then add a t-dimensional error subspace.
struct OperatorChannelSpec {
  Index k = 0;
  Index t = 0;
};

/// Noisy operator channel: the operator channel, then a rotation with
/// squared-projection budget `rotation`, then an implicit r_d-dimensional
/// interference.
struct NoisyChannelSpec {
  OperatorChannelSpec base;
  double rotation = 0.0;
  Index r_d = 0;
};

struct ChannelOutput {
  Subspace received;
  Index rho = 0;  // realized erasure dimension (dim U - k)_+
  Index t = 0;
};

struct NoisyChannelOutput {
  Subspace received;
  Index rho = 0;
  Index t = 0;
  double rotation_budget = 0.0;
  double realized_rotation = 0.0;  // d(V1, R(V1))
  Index r_d = 0;
};

/// Random k-dimensional subspace of U (uniform), or U itself if dim U <= k.
Subspace erase(const Subspace& u, Index k, Rng& rng);

/// Uniform t-dimensional subspace of the orthogonal complement of U, so it
/// meets U only in zero. Throws DimensionOverflow if dim U + t > n.
Subspace random_error_subspace(const Subspace& u, Index t, Rng& rng);

ChannelOutput apply_operator_channel(const Subspace& u, const OperatorChannelSpec& spec, Rng& rng);

/// Random subspace V with dim V = dim U and distance(U, V) <= budget.
/// Perturbs the basis by s * G for a Gaussian G and bisects on s so the
/// distance lands in [0.9 budget, budget] whenever that range is reachable.
Subspace rotate(const Subspace& u, double budget, Rng& rng);

NoisyChannelOutput apply_noisy_operator_channel(const Subspace& u, const NoisyChannelSpec& spec, Rng& rng);

// ----- matrix channel ----------------------------------------------------------

/// Y = H X + G E + N with H (l x m), G (l x t), E (t x n) and noise N whose
/// entries are noise_sigma times a standard Gaussian of the given field.
/// Fixed H or G replace the sampled ones (scripted topologies).
struct MatrixChannelSpec {
  Index l = 1;
  Index m = 1;
  Index t = 0;
  double noise_sigma = 0.0;
  Field field = Field::Complex;
  bool identity_transfer = false;
  std::optional<Matrix> fixed_transfer;      // H
  std::optional<Matrix> fixed_interference;  // G
};

struct MatrixChannelOutput {
  Matrix received;  // Y
  Matrix signal;    // A = H X + G E
  Matrix transfer;
  Matrix interference_gain;
  Matrix interference;
  Matrix noise;
};

MatrixChannelOutput apply_matrix_channel(const Matrix& x, const MatrixChannelSpec& spec, Rng& rng);

/// Two-hop relay example: the receiver hears h1 x + g e, then h2 h3 x.
MatrixChannelSpec relay_example_channel(Complex h1, Complex h2, Complex h3, Complex g);

// ----- RQ factorization and perturbation bounds -----------------------------------

struct RQFactors {
  Matrix r;  // l x l upper triangular, positive real diagonal
  Matrix q;  // l x n, orthonormal rows
};

/// A = R Q for a full-row-rank A. Throws RankDeficient otherwise.
RQFactors rq_factorize(const Matrix& a);

/// Moore-Penrose pseudo-inverse via the SVD (kTolRank cut-off).
Matrix pseudo_inverse(const Matrix& a);

/// sigma_max / sigma_min of a full-row-rank matrix.
double condition_number(const Matrix& a);

struct PerturbationBound {
  double epsilon = 0.0;
  double bound = 0.0;  // 2 eps + eps^2
};

/// Bound on d(<A>, <A + N>) for full-row-rank A:
///   eps = ((1 + sqrt 2) kappa(A) / (1 - ||A+||_2 ||N||_2) * ||N||_F / ||A||_2)^2.
/// Throws PreconditionViolated when ||A+||_2 ||N||_2 >= 1.
PerturbationBound perturbation_bound(const Matrix& a, const Matrix& n);

struct GeneralPerturbationBound {
  Index r_d = 0;
  double epsilon = 0.0;
  double delta = 0.0;  // 2 eps + eps^2, computed on the selected rows
  double total = 0.0;  // (sqrt r_d + sqrt delta)^2
  std::vector<Index> selected_rows;
};

/// Rows kept when greedily scanning A top to bottom and keeping each row
/// that increases the numerical rank.
std::vector<Index> independent_rows(const Matrix& a);

/// Bound on d(<A>, <A + N>) for arbitrary A: r_d = l - rank A, and the
/// full-row-rank bound applied to the greedily selected rows with the
/// norms of the full noise matrix.
GeneralPerturbationBound general_perturbation_bound(const Matrix& a, const Matrix& n);

}  // namespace asc
