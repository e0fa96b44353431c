#include <cmath>
#include <numbers>
#include <stdexcept>

#include "symtrig/continuous.hpp"

namespace symtrig {

std::pair<std::vector<double>, std::vector<double>> gauss_legendre(int points, double a, double b) {
  if (points < 1) throw std::invalid_argument("gauss_legendre: points must be >= 1");
  const int p = points;
  std::vector<double> x(p), w(p);
  // Roots of P_p on [-1, 1] by Newton iteration; symmetric, so solve half.
  for (int i = 0; i < (p + 1) / 2; ++i) {
    double t = std::cos(std::numbers::pi * (i + 0.75) / (p + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = t;
      for (int k = 2; k <= p; ++k) {
        const double pk = ((2.0 * k - 1.0) * t * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = pk;
      }
      dp = p * (t * p1 - p0) / (t * t - 1.0);
      const double step = p1 / dp;
      t -= step;
      if (std::fabs(step) < 1e-15) break;
    }
    // Final polish values at the converged node.
    double p0 = 1.0, p1 = t;
    for (int k = 2; k <= p; ++k) {
      const double pk = ((2.0 * k - 1.0) * t * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = pk;
    }
    dp = p * (t * p1 - p0) / (t * t - 1.0);
    const double weight = 2.0 / ((1.0 - t * t) * dp * dp);
    x[i] = -t;
    x[p - 1 - i] = t;
    w[i] = weight;
    w[p - 1 - i] = weight;
  }
  // Affine map [-1,1] -> [a,b].
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  for (int i = 0; i < p; ++i) {
    x[i] = mid + half * x[i];
    w[i] *= half;
  }
  return {std::move(x), std::move(w)};
}

}  // namespace symtrig
