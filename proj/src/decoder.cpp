#include "asc/decoder.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace asc {

namespace {

constexpr double kTieTol = 1e-9;

void require_nonnegative(double v, const char* what) {
  if (!(v >= 0.0)) throw InvalidArgument(std::string(what) + " must be nonnegative");
}

}  // namespace

NearestDecoder::NearestDecoder(const SubspaceCode& code) : ambient_dim_(code.ambient_dim()) {
  if (code.empty()) throw EmptyCode("cannot decode over an empty code");
  projections_.reserve(code.size());
  for (const auto& c : code.codewords()) projections_.push_back(projection_of(c).matrix);
}

DecodeResult NearestDecoder::operator()(const Subspace& received) const {
  if (received.ambient_dim() != ambient_dim_)
    throw DimensionMismatch("received subspace lives in a different ambient space");
  const Matrix pr = projection_of(received).matrix;
  std::vector<double> d(projections_.size());
  for (std::size_t i = 0; i < d.size(); ++i) d[i] = (projections_[i] - pr).squaredNorm();
  const double best = *std::min_element(d.begin(), d.end());
  // Distances within kTieTol of the minimum count as ties; the lowest index wins.
  DecodeResult out;
  while (d[out.codeword_index] > best + kTieTol) ++out.codeword_index;
  out.distance_to_received = d[out.codeword_index];
  out.runner_up_distance = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < d.size(); ++i)
    if (i != out.codeword_index) out.runner_up_distance = std::min(out.runner_up_distance, d[i]);
  out.unique = out.runner_up_distance - out.distance_to_received > kTieTol;
  return out;
}

DecodeResult decode(const SubspaceCode& code, const Subspace& received) { return NearestDecoder(code)(received); }

bool guarantee_noiseless(double d_min, double rho, double t) {
  require_nonnegative(rho, "rho");
  require_nonnegative(t, "t");
  return 2.0 * (rho + t) < d_min;
}

bool guarantee_chordal(double d_min, double rho, double t) {
  require_nonnegative(rho, "rho");
  require_nonnegative(t, "t");
  const double s = std::sqrt(rho) + std::sqrt(t);
  return 4.0 * s * s < d_min;
}

bool guarantee_noisy(double d_min, double rho, double t, double delta, double r_d) {
  require_nonnegative(rho, "rho");
  require_nonnegative(t, "t");
  require_nonnegative(delta, "delta");
  require_nonnegative(r_d, "r_d");
  // (a + b)^2 expanded so that delta = r_d = 0 gives exactly 2 (rho + t).
  const double a2 = rho + t + delta;
  const double b = std::sqrt(delta) + 2.0 * std::sqrt(r_d);
  return rho + t + a2 + b * b + 2.0 * std::sqrt(a2) * b < d_min;
}

}  // namespace asc
