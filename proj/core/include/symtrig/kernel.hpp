#pragma once

#include "symtrig/types.hpp"

namespace symtrig {

// Dense helpers for the two evaluation strategies. Matrices are row vectors
// of equal length; both functions validate squareness.
double determinant(std::vector<std::vector<double>> a);  // partial-pivot elimination, O(n^3)
double permanent(const std::vector<std::vector<double>>& a);
double permanent_direct(const std::vector<std::vector<double>>& a);  // n! expansion
double permanent_ryser(const std::vector<std::vector<double>>& a);   // inclusion-exclusion, O(2^n n)

// permanent() dispatches: direct expansion below this size, Ryser at and above.
inline constexpr int kRyserThreshold = 6;

// 1-D kernel entry sin/cos((2)pi lambda x) selected by family and convention.
double kernel_entry(Family f, AngularConvention conv, double lambda, double x);

// det (minus families) or permanent (plus families) of the n x n matrix
// [kernel_entry(lambda_i, x_j)].
double evaluate(Family f, AngularConvention conv, const Label& lambda, const Point& x);

// Ground-truth permutation sum: sum over w in S_n of (det w)^e * prod_i
// kernel_entry(lambda_w(i), x_i), e = 1 for minus families, 0 for plus.
// Guarded at n <= 8 (throws std::length_error above).
double evaluate_oracle(Family f, AngularConvention conv, const Label& lambda, const Point& x);

// Distinguished labels: Rho1 = (n, ..., 1), Rho2 = (n-1/2, ..., 1/2),
// Rho3 = (n-1, ..., 0).
enum class SpecialLabel { Rho1, Rho2, Rho3 };
Label special_label(SpecialLabel which, int n);

// Closed product form over pairs i < j of trig(pi(x_i - x_j)) * trig(pi(x_i + x_j))
// times a per-coordinate factor (trig(2 pi x_i) for Rho1, trig(pi x_i) for Rho2,
// nothing for Rho3). The pair factors are sines for the sine family and for
// (Rho3, CosMinus), whose determinant is a Vandermonde in cos(2 pi x_i);
// cosine pair factors otherwise.
//
// The product equals evaluate(family, TwoPi, special_label(which, n), x) exactly
// for three combinations, where the leading constant below is included:
//   (Rho1, SinMinus): constant (-4)^(n(n-1)/2)
//   (Rho2, SinMinus): constant (-4)^(n(n-1)/2)
//   (Rho3, CosMinus): constant (-4)^(n(n-1)/2) * 2^(1-n)
// For (Rho3, SinMinus) the function value is identically zero (the label has a
// zero entry, giving a zero sine row), and for CosPlus no product identity holds
// at any n >= 2 except (Rho3, n = 2) up to a factor 2; those combinations return
// the bare product with constant 1. Counterexamples are pinned in the tests.
double special_product(SpecialLabel which, Family family, const Point& x);

}  // namespace symtrig
