#pragma once

#include <functional>
#include <utility>

#include "symtrig/types.hpp"

namespace symtrig {

// Tensorized Gauss-Legendre quadrature on [0, 1/2] per axis.
struct QuadratureRule {
  int points_per_axis = 32;
};

// Numerical result plus a heuristic flag raised when the rule is too coarse
// for the requested label magnitudes (calibrated so that the defaults are
// warning-free for labels with entries <= 12 at 32 points).
struct QuadResult {
  double value = 0.0;
  bool accuracy_warning = false;
};

// Gauss-Legendre nodes and weights on [a, b] (Newton iteration on the Legendre
// recurrence). Returns {nodes, weights}.
std::pair<std::vector<double>, std::vector<double>> gauss_legendre(int points, double a, double b);

using SampleFn = std::function<double(const Point&)>;

// 2^(2n) * integral over the closed fundamental domain
// {1/2 >= x1 >= ... >= xn >= 0} of f_m * f_m', computed as 2^(2n)/n! times the
// box integral over [0,1/2]^n (the integrand, a product of two like-symmetric
// functions, is invariant under coordinate permutations, and the box covers
// the domain exactly n! times).
//
// Diagonal values for integer dominant labels: 1 for the minus families and
// stabilizer_order(m) for the plus families when all entries are positive.
// Zero entries change the norm: each zero entry doubles the cos-plus norm,
// cos-minus with m_n = 0 has norm 2, and sin-plus with a zero entry is the
// zero function. norm_constant() below returns the true value.
QuadResult inner_product_F(Family f, const IntTuple& m, const IntTuple& mp,
                           const QuadratureRule& rule);

// True squared norm of f_m under the 2^(2n)-scaled inner product (0 when f_m
// is identically zero).
double norm_constant(Family f, const IntTuple& m);

// Integral of the mixed product sin*cos over the union of the fundamental
// domain and its image under the swap of the first two coordinates (box rule
// restricted by the membership indicator). The mixed integrand is odd under
// that swap, so the result is zero up to quadrature error. At n = 1 this
// degenerates to the classical full-period integral over [0, 1].
enum class MixedPair { SinMinusCosPlus, SinPlusCosMinus };
QuadResult cross_orthogonality(MixedPair mix, const IntTuple& m, const IntTuple& mp,
                               const QuadratureRule& rule);

// Series coefficient c_m of a function sampled on the closed box:
// 2^(2n) / norm_constant * integral over the fundamental domain of sample * f_m.
QuadResult series_coefficient(Family f, const SampleFn& sample, const IntTuple& m,
                              const QuadratureRule& rule);

struct SeriesCoefficients {
  Family family = Family::SinMinus;
  std::vector<IntTuple> labels;
  std::vector<double> values;
};

// All coefficients for dominant labels with entries bounded by max_entry
// (strict descent for minus families, weak for plus; identically-zero kernels
// are skipped).
SeriesCoefficients expand(Family f, const SampleFn& sample, int max_entry, int n,
                          const QuadratureRule& rule);

double partial_sum(Family f, const SeriesCoefficients& coeffs, const Point& x);

// | sum_m norm_constant(m) c_m^2  -  2^(2n) * integral_F sample^2 |
double plancherel_defect(Family f, const SeriesCoefficients& coeffs, const SampleFn& sample,
                         const QuadratureRule& rule);

// |Delta_h f_lambda(x) + 4 pi^2 <lambda,lambda> f_lambda(x)| with the
// second-order central-difference Laplacian; O(h^2) in exact arithmetic.
// The warning flags steps outside the truncation-vs-cancellation sweet spot.
QuadResult laplace_eigen_defect(Family f, const Label& lambda, const Point& x, double h = 1e-3);

// Same for the k-th elementary symmetric polynomial of the per-axis second
// differences against the eigenvalue (-4 pi^2)^k * sigma_k(lambda_1^2, ..., lambda_n^2).
// k = 1 is exactly the Laplacian check.
QuadResult sigma_k_eigen_defect(Family f, const Label& lambda, int k, const Point& x,
                                double h = 1e-3);

}  // namespace symtrig
