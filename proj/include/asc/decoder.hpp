#pragma once

#include <cstddef>
#include <vector>

#include "asc/codes.hpp"

namespace asc {

struct DecodeResult {
  std::size_t codeword_index = 0;
  double distance_to_received = 0.0;
  // Infinity for a one-codeword code.
  double runner_up_distance = 0.0;
  bool unique = true;
};

/// Exhaustive minimum-distance decoder. Ties go to the lowest index; the
/// result is flagged non-unique when the runner-up is within 1e-9.
DecodeResult decode(const SubspaceCode& code, const Subspace& received);

/// Same decoder with the codeword projections computed once, for repeated
/// decoding over one code.
class NearestDecoder {
 public:
  explicit NearestDecoder(const SubspaceCode& code);
  DecodeResult operator()(const Subspace& received) const;
  std::size_t size() const noexcept { return projections_.size(); }

 private:
  Index ambient_dim_;
  std::vector<Matrix> projections_;
};

/// 2 (rho + t) < d_min
bool guarantee_noiseless(double d_min, double rho, double t);

/// 4 (sqrt rho + sqrt t)^2 < d_min
bool guarantee_chordal(double d_min, double rho, double t);

/// rho + t + (sqrt(rho + t + delta) + sqrt delta + 2 sqrt r_d)^2 < d_min
bool guarantee_noisy(double d_min, double rho, double t, double delta, double r_d);

}  // namespace asc
