#include "asc/bounds.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>
#include <vector>

#include "asc/errors.hpp"

namespace asc {

namespace {

void require_open_unit(double delta, const char* who) {
  if (!(delta > 0.0 && delta <= 1.0)) throw DomainError(std::string(who) + " needs 0 < delta <= 1");
}

double zyablov_objective(double x, double rate) { return gv_binary_delta(x) * (1.0 - rate / x); }

// Golden-section maximization of f on [a, b].
template <typename F>
double golden_max(F&& f, double a, double b, double tol) {
  const double g = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - g * (b - a);
  double d = a + g * (b - a);
  double fc = f(c);
  double fd = f(d);
  while (b - a > tol) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - g * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + g * (b - a);
      fd = f(d);
    }
  }
  return std::max({f(a), f(b), f(0.5 * (a + b))});
}

}  // namespace

double barg_lower(int m, double delta, int beta) {
  require_open_unit(delta, "barg_lower");
  return -0.5 * beta * m * std::log(delta);
}

double barg_upper(int m, double delta, int beta) {
  if (!(delta > 0.0 && delta <= 2.0)) throw DomainError("barg_upper needs 0 < delta <= 2");
  const double inner = 1.0 - std::sqrt(std::max(0.0, 1.0 - delta / 2.0));
  return -static_cast<double>(beta) * m * std::log(std::sqrt(inner));
}

double shannon_lower(double delta) {
  require_open_unit(delta, "shannon_lower");
  return -0.5 * std::log(delta);
}

double random_coding_rate(int m, double delta, int beta, double eps) {
  require_open_unit(delta, "random_coding_rate");
  if (!(eps > 0.0)) throw DomainError("random_coding_rate needs eps > 0");
  return -0.25 * beta * m * std::log(delta) - eps;
}

double binary_entropy(double x) {
  if (!(x >= 0.0 && x <= 1.0)) throw DomainError("binary entropy needs 0 <= x <= 1");
  if (x == 0.0 || x == 1.0) return 0.0;
  return -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x);
}

double gv_binary_delta(double rate) {
  if (!(rate >= 0.0 && rate <= 1.0)) throw DomainError("delta_GV needs 0 <= x <= 1");
  const double target = 1.0 - rate;
  if (target <= 0.0) return 0.0;
  if (target >= 1.0) return 0.5;
  double lo = 0.0;
  double hi = 0.5;
  while (hi - lo > 1e-13) {
    const double mid = 0.5 * (lo + hi);
    if (binary_entropy(mid) < target) lo = mid;
    else hi = mid;
  }
  return 0.5 * (lo + hi);
}

double zyablov_delta(double rate) {
  if (!(rate > 0.0 && rate < 1.0)) throw DomainError("zyablov_delta needs 0 < R < 1");
  auto f = [rate](double x) { return zyablov_objective(x, rate); };

  // Coarse scan to bracket the maximum and to check unimodality.
  constexpr int kCoarse = 256;
  std::vector<double> xs(kCoarse + 1), ys(kCoarse + 1);
  for (int i = 0; i <= kCoarse; ++i) {
    xs[i] = rate + (1.0 - rate) * i / kCoarse;
    ys[i] = f(xs[i]);
  }
  const auto peak = static_cast<int>(std::max_element(ys.begin(), ys.end()) - ys.begin());
  bool unimodal = true;
  for (int i = 1; i <= peak; ++i) unimodal = unimodal && ys[i] >= ys[i - 1] - 1e-15;
  for (int i = peak + 1; i <= kCoarse; ++i) unimodal = unimodal && ys[i] <= ys[i - 1] + 1e-15;

  if (!unimodal) {
    constexpr int kFine = 10'000;
    double best = 0.0;
    int best_i = 0;
    for (int i = 0; i <= kFine; ++i) {
      const double y = f(rate + (1.0 - rate) * i / kFine);
      if (y > best) {
        best = y;
        best_i = i;
      }
    }
    const double step = (1.0 - rate) / kFine;
    const double a = std::max(rate, rate + (best_i - 1) * step);
    const double b = std::min(1.0, rate + (best_i + 1) * step);
    return std::max(best, golden_max(f, a, b, 1e-9));
  }
  const double a = xs[std::max(0, peak - 1)];
  const double b = xs[std::min(kCoarse, peak + 1)];
  return std::max(ys[peak], golden_max(f, a, b, 1e-9));
}

double zyablov_rate(double delta) {
  if (!(delta > 0.0)) throw DomainError("zyablov_rate needs delta > 0");
  if (delta >= 0.5) return 0.0;
  // zyablov_delta decreases from 1/2 (R -> 0) to 0 (R -> 1).
  double lo = 1e-12;
  double hi = 1.0 - 1e-12;
  for (int i = 0; i < 100 && hi - lo > 1e-12; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (zyablov_delta(mid) > delta) lo = mid;
    else hi = mid;
  }
  return 0.5 * (lo + hi);
}

double blokh_zyablov_rate(double delta) {
  if (!(delta > 0.0 && delta < 0.5)) throw DomainError("blokh_zyablov_rate needs 0 < delta < 1/2");
  const double top = 1.0 - binary_entropy(delta);
  auto integrand = [](double x) { return 1.0 / gv_binary_delta(x); };
  const double integral = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(integrand, 0.0, top, 15, 1e-10);
  return std::max(0.0, top - delta * integral);
}

}  // namespace asc
