#pragma once

#include <string>

namespace asc {

/// One point of a rate/distance trade-off curve. n = 0 marks an asymptotic
/// curve.
struct BoundPoint {
  double delta = 0.0;
  double rate = 0.0;
  std::string label;
  int m = 1;
  int beta = 1;
  long n = 0;
};

// Subspace-code rates are in nats per ambient dimension.

/// -(1/2) beta m ln(delta), 0 < delta <= 1.
double barg_lower(int m, double delta, int beta);

/// -beta m ln(sqrt(1 - sqrt(1 - delta/2))), 0 < delta <= 2.
double barg_upper(int m, double delta, int beta);

/// Lines: delta = sin^2(theta), rate -(1/2) ln(delta).
double shannon_lower(double delta);

/// -(1/4) beta m ln(delta) - eps.
double random_coding_rate(int m, double delta, int beta, double eps);

// Binary-code quantities are in bits.

/// h(x) = -x log2 x - (1-x) log2(1-x), with h(0) = h(1) = 0.
double binary_entropy(double x);

/// The x in [0, 1/2] with h(x) = 1 - rate, by bisection to 1e-12.
double gv_binary_delta(double rate);

/// max over x in [R, 1] of delta_GV(x) (1 - R/x).
double zyablov_delta(double rate);

/// The rate R with zyablov_delta(R) = delta (0 for delta >= 1/2).
double zyablov_rate(double delta);

/// 1 - h(delta) - delta * integral_0^{1-h(delta)} dx / delta_GV(x), clipped
/// at 0. Requires 0 < delta < 1/2.
double blokh_zyablov_rate(double delta);

}  // namespace asc
