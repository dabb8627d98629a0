#include "asc/channel.hpp"

#include <cmath>
#include <numbers>

namespace asc {

Subspace erase(const Subspace& u, Index k, Rng& rng) {
  if (k < 0) throw InvalidArgument("erasure operator needs k >= 0");
  if (u.dim() <= k) return u;
  if (k == 0) return Subspace::zero(u.ambient_dim(), u.field());
  const Matrix coeffs = gaussian_matrix(k, u.dim(), u.field(), rng);
  for (int attempt = 0; attempt < 16; ++attempt) {
    Subspace s = orthonormalize((attempt == 0 ? coeffs : gaussian_matrix(k, u.dim(), u.field(), rng)) * u.basis(),
                                u.field());
    if (s.dim() == k) return s;
  }
  throw RetryExhausted("could not draw a full-rank erasure");
}

Subspace random_error_subspace(const Subspace& u, Index t, Rng& rng) {
  if (t < 0) throw InvalidArgument("error dimension must be >= 0");
  if (u.dim() + t > u.ambient_dim())
    throw DimensionOverflow("dim U + t exceeds the ambient dimension");
  if (t == 0) return Subspace::zero(u.ambient_dim(), u.field());
  const Subspace perp = complement(u);
  for (int attempt = 0; attempt < 16; ++attempt) {
    Subspace e = orthonormalize(gaussian_matrix(t, perp.dim(), u.field(), rng) * perp.basis(), u.field());
    if (e.dim() == t) return e;
  }
  throw RetryExhausted("could not draw a full-rank error subspace");
}

ChannelOutput apply_operator_channel(const Subspace& u, const OperatorChannelSpec& spec, Rng& rng) {
  if (spec.k < 0 || spec.t < 0) throw InvalidArgument("channel parameters must be nonnegative");
  const Index kept = std::min(u.dim(), spec.k);
  if (kept + spec.t > u.ambient_dim())
    throw DimensionOverflow("kept dimension plus error dimension exceeds the ambient dimension");
  Subspace h = erase(u, spec.k, rng);
  // Draw E orthogonal to U when there is room, so it also avoids H_k(U).
  const Subspace& avoid = (u.dim() + spec.t <= u.ambient_dim()) ? u : h;
  Subspace e = random_error_subspace(avoid, spec.t, rng);
  Subspace v = direct_sum(h, e);
  return {std::move(v), std::max<Index>(0, u.dim() - spec.k), spec.t};
}

Subspace rotate(const Subspace& u, double budget, Rng& rng) {
  if (budget < 0.0) throw InvalidArgument("rotation budget must be >= 0");
  if (budget == 0.0 || u.is_zero() || u.dim() == u.ambient_dim()) return u;

  const Matrix direction = gaussian_matrix(u.dim(), u.ambient_dim(), u.field(), rng);
  const double lower = 0.9 * budget;

  Subspace best = u;
  double best_d = 0.0;
  // Evaluates the perturbation at scale s; remembers the farthest feasible one.
  auto probe = [&](double s) -> double {
    Subspace cand = orthonormalize(u.basis() + s * direction, u.field());
    if (cand.dim() != u.dim()) return std::numeric_limits<double>::quiet_NaN();
    const double d = distance(u, cand);
    if (d <= budget && d > best_d) {
      best_d = d;
      best = std::move(cand);
    }
    return d;
  };

  double lo = 0.0;
  double hi = 1.0;
  double d_hi = probe(hi);
  while (!(d_hi >= lower) && hi < 1e4) {
    lo = hi;
    hi *= 2.0;
    d_hi = probe(hi);
  }
  if (best_d >= lower) return best;
  for (int iter = 0; iter < 200 && hi - lo > 1e-15 * hi; ++iter) {
    const double mid = 0.5 * (lo + hi);
    const double d = probe(mid);
    if (best_d >= lower) return best;
    if (std::isnan(d) || d > budget) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return best;
}

NoisyChannelOutput apply_noisy_operator_channel(const Subspace& u, const NoisyChannelSpec& spec, Rng& rng) {
  if (spec.rotation < 0.0 || spec.r_d < 0) throw InvalidArgument("noisy channel parameters must be nonnegative");
  const Index kept = std::min(u.dim(), spec.base.k);
  if (kept + spec.base.t + spec.r_d > u.ambient_dim())
    throw DimensionOverflow("output dimension exceeds the ambient dimension");
  ChannelOutput first = apply_operator_channel(u, spec.base, rng);
  Subspace rotated = rotate(first.received, spec.rotation, rng);
  const double realized = distance(first.received, rotated);
  Subspace f = random_error_subspace(rotated, spec.r_d, rng);
  Subspace v = direct_sum(rotated, f);
  return {std::move(v), first.rho, first.t, spec.rotation, realized, spec.r_d};
}

// ----- matrix channel -------------------------------------------------------------------

MatrixChannelOutput apply_matrix_channel(const Matrix& x, const MatrixChannelSpec& spec, Rng& rng) {
  if (spec.l < 1 || spec.m < 1 || spec.t < 0 || spec.noise_sigma < 0.0)
    throw InvalidArgument("matrix channel needs l, m >= 1, t >= 0, sigma >= 0");
  if (x.rows() != spec.m) throw DimensionMismatch("X must have m rows");
  const Index n = x.cols();
  MatrixChannelOutput out;
  if (spec.fixed_transfer) {
    if (spec.fixed_transfer->rows() != spec.l || spec.fixed_transfer->cols() != spec.m)
      throw DimensionMismatch("fixed H must be l x m");
    out.transfer = *spec.fixed_transfer;
  } else if (spec.identity_transfer) {
    if (spec.l != spec.m) throw DimensionMismatch("identity transfer needs l == m");
    out.transfer = Matrix::Identity(spec.l, spec.m);
  } else {
    out.transfer = gaussian_matrix(spec.l, spec.m, spec.field, rng);
  }
  if (spec.fixed_interference) {
    if (spec.fixed_interference->rows() != spec.l || spec.fixed_interference->cols() != spec.t)
      throw DimensionMismatch("fixed G must be l x t");
    out.interference_gain = *spec.fixed_interference;
  } else {
    out.interference_gain = gaussian_matrix(spec.l, spec.t, spec.field, rng);
  }
  out.interference = gaussian_matrix(spec.t, n, spec.field, rng);
  out.noise = spec.noise_sigma > 0.0 ? Matrix(spec.noise_sigma * gaussian_matrix(spec.l, n, spec.field, rng))
                                     : Matrix(Matrix::Zero(spec.l, n));
  out.signal = out.transfer * x;
  if (spec.t > 0) out.signal += out.interference_gain * out.interference;
  out.received = out.signal + out.noise;
  return out;
}

MatrixChannelSpec relay_example_channel(Complex h1, Complex h2, Complex h3, Complex g) {
  MatrixChannelSpec spec;
  spec.l = 2;
  spec.m = 1;
  spec.t = 1;
  Matrix h(2, 1);
  h << h1, h2 * h3;
  Matrix gain(2, 1);
  gain << g, Complex(0.0, 0.0);
  spec.fixed_transfer = h;
  spec.fixed_interference = gain;
  return spec;
}

// ----- RQ factorization and perturbation bounds ---------------------------------------------

RQFactors rq_factorize(const Matrix& a) {
  const Index l = a.rows();
  const Index n = a.cols();
  if (l == 0 || l > n || numerical_rank(a) != l) throw RankDeficient("RQ factorization needs full row rank");
  // QR of (J A)^H gives J A = R1^H Q1^H, hence A = (J R1^H J)(J Q1^H).
  const Matrix flipped = a.colwise().reverse();
  Eigen::HouseholderQR<Matrix> qr(flipped.adjoint());
  const Matrix q1 = qr.householderQ() * Matrix::Identity(n, l);
  const Matrix r1 = qr.matrixQR().topRows(l).triangularView<Eigen::Upper>();
  RQFactors f{r1.adjoint().reverse(), q1.adjoint().colwise().reverse()};
  for (Index i = 0; i < l; ++i) {
    const Complex d = f.r(i, i);
    const double mag = std::abs(d);
    const Complex phase = d / mag;
    f.r.col(i) *= std::conj(phase);
    f.q.row(i) *= phase;
    f.r(i, i) = Complex(mag, 0.0);
  }
  return f;
}

Matrix pseudo_inverse(const Matrix& a) {
  if (a.rows() == 0 || a.cols() == 0) return Matrix::Zero(a.cols(), a.rows());
  Eigen::JacobiSVD<Matrix> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const Eigen::VectorXd& sv = svd.singularValues();
  const double cut = sv.size() ? kTolRank * sv(0) : 0.0;
  Eigen::VectorXd inv(sv.size());
  for (Index i = 0; i < sv.size(); ++i) inv(i) = sv(i) > cut ? 1.0 / sv(i) : 0.0;
  return svd.matrixV() * inv.asDiagonal() * svd.matrixU().adjoint();
}

double condition_number(const Matrix& a) {
  const Eigen::VectorXd sv = singular_values(a);
  if (sv.size() == 0 || numerical_rank(a) != std::min(a.rows(), a.cols()))
    throw RankDeficient("condition number needs full rank");
  return sv(0) / sv(sv.size() - 1);
}

namespace {

PerturbationBound bound_for_full_row_rank(const Matrix& a, const Matrix& n) {
  const Eigen::VectorXd sv = singular_values(a);
  const double sigma_max = sv(0);
  const double sigma_min = sv(a.rows() - 1);
  const double pinv_norm = 1.0 / sigma_min;
  const double noise_spectral = spectral_norm(n);
  const double product = pinv_norm * noise_spectral;
  if (product >= 1.0) throw PreconditionViolated("need ||A+||_2 ||N||_2 < 1");
  const double kappa = sigma_max / sigma_min;
  const double root = (1.0 + std::numbers::sqrt2) * kappa / (1.0 - product) * (n.norm() / sigma_max);
  const double eps = root * root;
  return {eps, 2.0 * eps + eps * eps};
}

}  // namespace

PerturbationBound perturbation_bound(const Matrix& a, const Matrix& n) {
  if (a.rows() != n.rows() || a.cols() != n.cols()) throw DimensionMismatch("A and N must have the same shape");
  if (a.rows() == 0 || numerical_rank(a) != a.rows()) throw RankDeficient("perturbation bound needs full row rank");
  return bound_for_full_row_rank(a, n);
}

std::vector<Index> independent_rows(const Matrix& a) {
  std::vector<Index> rows;
  Matrix stack(0, a.cols());
  for (Index i = 0; i < a.rows(); ++i) {
    Matrix candidate(stack.rows() + 1, a.cols());
    candidate << stack, a.row(i);
    if (numerical_rank(candidate) > static_cast<Index>(rows.size())) {
      rows.push_back(i);
      stack = std::move(candidate);
    }
  }
  return rows;
}

GeneralPerturbationBound general_perturbation_bound(const Matrix& a, const Matrix& n) {
  if (a.rows() != n.rows() || a.cols() != n.cols()) throw DimensionMismatch("A and N must have the same shape");
  GeneralPerturbationBound out;
  out.selected_rows = independent_rows(a);
  const Index r = static_cast<Index>(out.selected_rows.size());
  out.r_d = a.rows() - r;
  if (r > 0) {
    Matrix a1(r, a.cols());
    for (Index i = 0; i < r; ++i) a1.row(i) = a.row(out.selected_rows[static_cast<std::size_t>(i)]);
    const PerturbationBound b = bound_for_full_row_rank(a1, n);
    out.epsilon = b.epsilon;
    out.delta = b.bound;
  }
  const double s = std::sqrt(static_cast<double>(out.r_d)) + std::sqrt(out.delta);
  out.total = s * s;
  return out;
}

}  // namespace asc
