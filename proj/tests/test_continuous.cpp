#include <cmath>
#include <numbers>

#include "doctest.h"
#include "symtrig/continuous.hpp"
#include "symtrig/kernel.hpp"

using namespace symtrig;

namespace {
constexpr double kPi = std::numbers::pi;
const QuadratureRule kRule{32};
}  // namespace

TEST_CASE("gauss-legendre nodes and weights") {
  auto [nodes, weights] = gauss_legendre(8, 0.0, 0.5);
  CHECK(nodes.size() == 8);
  double mass = 0.0, moment2 = 0.0;
  for (size_t i = 0; i < nodes.size(); ++i) {
    mass += weights[i];
    moment2 += weights[i] * nodes[i] * nodes[i];
  }
  CHECK(mass == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(moment2 == doctest::Approx(1.0 / 24.0).epsilon(1e-14));  // int_0^1/2 x^2 dx
  // degree 2p-1 polynomial integrated exactly
  double m15 = 0.0;
  for (size_t i = 0; i < nodes.size(); ++i) m15 += weights[i] * std::pow(nodes[i], 15);
  CHECK(m15 == doctest::Approx(std::pow(0.5, 16) / 16.0).epsilon(1e-12));
  CHECK_THROWS_AS(gauss_legendre(0, 0.0, 1.0), std::invalid_argument);
}

TEST_CASE("orthonormality of the scaled inner product") {
  // minus families: orthonormal on strictly descending labels
  CHECK(inner_product_F(Family::SinMinus, {2, 1}, {2, 1}, kRule).value ==
        doctest::Approx(1.0).epsilon(1e-9));
  CHECK(inner_product_F(Family::SinMinus, {2, 1}, {3, 1}, kRule).value ==
        doctest::Approx(0.0).epsilon(1e-9));
  CHECK(inner_product_F(Family::CosMinus, {2, 1}, {2, 1}, kRule).value ==
        doctest::Approx(1.0).epsilon(1e-9));
  // plus families: diagonal equals the stabilizer order for positive labels
  CHECK(inner_product_F(Family::SinPlus, {1, 1}, {1, 1}, kRule).value ==
        doctest::Approx(2.0).epsilon(1e-9));
  CHECK(inner_product_F(Family::CosPlus, {1, 1}, {1, 1}, kRule).value ==
        doctest::Approx(2.0).epsilon(1e-9));
  CHECK(inner_product_F(Family::CosPlus, {2, 1}, {2, 1}, kRule).value ==
        doctest::Approx(1.0).epsilon(1e-9));
  // zero entries change the norms
  CHECK(inner_product_F(Family::CosPlus, {1, 0}, {1, 0}, kRule).value ==
        doctest::Approx(2.0).epsilon(1e-9));
  CHECK(inner_product_F(Family::CosMinus, {2, 0}, {2, 0}, kRule).value ==
        doctest::Approx(2.0).epsilon(1e-9));
  CHECK(inner_product_F(Family::SinPlus, {1, 0}, {1, 0}, kRule).value ==
        doctest::Approx(0.0).epsilon(1e-12));
  // validation: labels must be dominant for the family
  CHECK_THROWS_AS(inner_product_F(Family::SinMinus, {1, 2}, {2, 1}, kRule),
                  std::invalid_argument);
  CHECK_THROWS_AS(inner_product_F(Family::SinMinus, {2, 0}, {2, 1}, kRule),
                  std::invalid_argument);
}

TEST_CASE("norm constants") {
  CHECK(norm_constant(Family::SinMinus, {3, 1}) == doctest::Approx(1.0));
  CHECK(norm_constant(Family::CosMinus, {3, 1}) == doctest::Approx(1.0));
  CHECK(norm_constant(Family::CosMinus, {3, 0}) == doctest::Approx(2.0));
  CHECK(norm_constant(Family::SinPlus, {2, 2}) == doctest::Approx(2.0));
  CHECK(norm_constant(Family::SinPlus, {2, 0}) == doctest::Approx(0.0));
  CHECK(norm_constant(Family::CosPlus, {2, 2}) == doctest::Approx(2.0));
  CHECK(norm_constant(Family::CosPlus, {1, 0}) == doctest::Approx(2.0));
  CHECK(norm_constant(Family::CosPlus, {0, 0}) == doctest::Approx(8.0));
  CHECK(norm_constant(Family::CosPlus, {0}) == doctest::Approx(2.0));
}

TEST_CASE("accuracy warning heuristic") {
  CHECK_FALSE(inner_product_F(Family::SinMinus, {2, 1}, {2, 1}, kRule).accuracy_warning);
  const QuadratureRule coarse{8};
  CHECK(inner_product_F(Family::SinMinus, {8, 1}, {8, 1}, coarse).accuracy_warning);
}

TEST_CASE("series coefficients and partial sums") {
  const SampleFn g = [](const Point& x) {
    return 2.0 * evaluate(Family::SinMinus, AngularConvention::TwoPi, {2, 1}, x) -
           0.5 * evaluate(Family::SinMinus, AngularConvention::TwoPi, {3, 2}, x);
  };
  CHECK(series_coefficient(Family::SinMinus, g, {2, 1}, kRule).value ==
        doctest::Approx(2.0).epsilon(1e-9));
  CHECK(series_coefficient(Family::SinMinus, g, {3, 2}, kRule).value ==
        doctest::Approx(-0.5).epsilon(1e-9));
  CHECK(series_coefficient(Family::SinMinus, g, {3, 1}, kRule).value ==
        doctest::Approx(0.0).epsilon(1e-9));

  const SeriesCoefficients coeffs = expand(Family::SinMinus, g, 3, 2, kRule);
  CHECK(coeffs.labels.size() == 3);  // (3,2), (3,1), (2,1)
  const Point x = {0.31, 0.12};
  CHECK(partial_sum(Family::SinMinus, coeffs, x) == doctest::Approx(g(x)).epsilon(1e-8));
  CHECK(plancherel_defect(Family::SinMinus, coeffs, g, kRule) <= 1e-8);

  // zero-norm labels are skipped for the symmetric sine family
  const SeriesCoefficients sp = expand(
      Family::SinPlus, [](const Point&) { return 1.0; }, 2, 2, kRule);
  for (const IntTuple& m : sp.labels) CHECK(m.back() >= 1);

  SeriesCoefficients wrong = coeffs;
  CHECK_THROWS_AS(partial_sum(Family::CosPlus, wrong, x), std::invalid_argument);
  SeriesCoefficients empty;
  CHECK_THROWS_AS(plancherel_defect(Family::SinMinus, empty, g, kRule), std::invalid_argument);
}

TEST_CASE("mixed cross orthogonality") {
  CHECK(std::fabs(cross_orthogonality(MixedPair::SinMinusCosPlus, {2}, {1}, kRule).value) <=
        1e-12);
  CHECK(std::fabs(cross_orthogonality(MixedPair::SinMinusCosPlus, {2, 1}, {1, 1}, kRule).value) <=
        1e-7);
  CHECK(std::fabs(cross_orthogonality(MixedPair::SinPlusCosMinus, {2, 1}, {1, 0}, kRule).value) <=
        1e-7);
}

TEST_CASE("laplacian eigen-equation") {
  const Label lam = {2, 1};
  const Point x = {0.23, 0.11};
  const double h = 1e-3;
  for (Family f : {Family::SinMinus, Family::SinPlus, Family::CosMinus, Family::CosPlus}) {
    const double d1 = laplace_eigen_defect(f, lam, x, h).value;
    const double d2 = laplace_eigen_defect(f, lam, x, h / 2).value;
    CHECK(d1 < 1e-2);
    CHECK(d1 / d2 == doctest::Approx(4.0).epsilon(0.15));
  }
  // explicit eigenvalue: -4 pi^2 (lambda . lambda)
  const auto fd_laplacian = [&](const Point& p) {
    double acc = 0.0;
    for (size_t a = 0; a < p.size(); ++a) {
      Point pp = p, pm = p;
      pp[a] += h;
      pm[a] -= h;
      acc += (evaluate(Family::SinMinus, AngularConvention::TwoPi, lam, pp) -
              2 * evaluate(Family::SinMinus, AngularConvention::TwoPi, lam, p) +
              evaluate(Family::SinMinus, AngularConvention::TwoPi, lam, pm)) /
             (h * h);
    }
    return acc;
  };
  const double f0 = evaluate(Family::SinMinus, AngularConvention::TwoPi, lam, x);
  CHECK(fd_laplacian(x) == doctest::Approx(-4 * kPi * kPi * 5.0 * f0).epsilon(1e-3));
}

TEST_CASE("symmetric difference operator eigen-equation") {
  const Label lam = {2, 1};
  const Point x = {0.19, 0.07};
  const double h = 4e-3;
  for (Family f : {Family::SinMinus, Family::CosPlus}) {
    const double d1 = sigma_k_eigen_defect(f, lam, 2, x, h).value;
    const double d2 = sigma_k_eigen_defect(f, lam, 2, x, h / 2).value;
    CHECK(d1 / d2 == doctest::Approx(4.0).epsilon(0.15));
  }
  // sigma_2 eigenvalue at lambda = (2,1): (-4 pi^2)^2 * e_2(4, 1) = 64 pi^4
  // verified against an explicit nested-stencil product
  const auto d2_axis = [&](const Point& p, size_t axis, auto&& fn) {
    Point pp = p, pm = p;
    pp[axis] += h;
    pm[axis] -= h;
    return (fn(pp) - 2 * fn(p) + fn(pm)) / (h * h);
  };
  const auto f = [&](const Point& p) {
    return evaluate(Family::SinMinus, AngularConvention::TwoPi, lam, p);
  };
  const auto d1f = [&](const Point& p) { return d2_axis(p, 0, f); };
  const double composed = d2_axis(x, 1, d1f);
  const double eig = 16 * kPi * kPi * kPi * kPi * 4.0;  // 64 pi^4
  CHECK(composed == doctest::Approx(eig * f(x)).epsilon(1e-3));
  CHECK(sigma_k_eigen_defect(Family::SinMinus, lam, 1, x, 1e-3).value ==
        doctest::Approx(laplace_eigen_defect(Family::SinMinus, lam, x, 1e-3).value));
  CHECK_THROWS_AS(sigma_k_eigen_defect(Family::SinMinus, lam, 3, x, h), std::invalid_argument);
  CHECK_THROWS_AS(sigma_k_eigen_defect(Family::SinMinus, lam, 0, x, h), std::invalid_argument);
}
