#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "symtrig/kernel.hpp"

using namespace symtrig;

namespace {

constexpr double kPi = std::numbers::pi;

std::vector<std::vector<double>> random_matrix(std::mt19937_64& rng, int n) {
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  std::vector<std::vector<double>> a(static_cast<size_t>(n), std::vector<double>(static_cast<size_t>(n)));
  for (auto& row : a)
    for (double& v : row) v = d(rng);
  return a;
}

}  // namespace

TEST_CASE("determinant basics") {
  CHECK(determinant({{1, 2}, {3, 4}}) == doctest::Approx(-2.0));
  CHECK(determinant({{2, 0, 0}, {0, 3, 0}, {0, 0, 4}}) == doctest::Approx(24.0));
  CHECK(determinant({{1, 2}, {2, 4}}) == doctest::Approx(0.0));
  CHECK(determinant({{5}}) == doctest::Approx(5.0));
  CHECK_THROWS_AS(determinant({{1, 2, 3}, {4, 5, 6}}), std::invalid_argument);
}

TEST_CASE("permanent strategies agree") {
  CHECK(permanent_direct({{1, 2}, {3, 4}}) == doctest::Approx(10.0));
  CHECK(permanent_ryser({{1, 2}, {3, 4}}) == doctest::Approx(10.0));
  // permanent of the all-ones matrix is n!
  for (int n = 1; n <= 7; ++n) {
    std::vector<std::vector<double>> ones(static_cast<size_t>(n),
                                          std::vector<double>(static_cast<size_t>(n), 1.0));
    double expect = 1.0;
    for (int i = 2; i <= n; ++i) expect *= i;
    CHECK(permanent(ones) == doctest::Approx(expect));
  }
  std::mt19937_64 rng(7);
  for (int n = 6; n <= 7; ++n) {
    const auto a = random_matrix(rng, n);
    const double direct = permanent_direct(a);
    const double ryser = permanent_ryser(a);
    CHECK(std::fabs(direct - ryser) <= 1e-12 * (1.0 + std::fabs(direct)));
  }
}

TEST_CASE("kernel entries") {
  CHECK(kernel_entry(Family::SinMinus, AngularConvention::TwoPi, 1.0, 0.25) == doctest::Approx(1.0));
  CHECK(kernel_entry(Family::CosPlus, AngularConvention::Pi, 1.0, 0.5) ==
        doctest::Approx(0.0).epsilon(1e-15));
  CHECK(kernel_entry(Family::CosMinus, AngularConvention::TwoPi, 2.0, 0.25) == doctest::Approx(-1.0));
}

TEST_CASE("frozen evaluation values") {
  // permanent of [cos(2 pi * 2 x_j); cos(2 pi * 1 x_j)] at (0.3, 0.1)
  CHECK(evaluate(Family::CosPlus, AngularConvention::TwoPi, {2, 1}, {0.3, 0.1}) ==
        doctest::Approx(-0.75).epsilon(1e-13));
  // two-term permanent, Pi convention: cos(2pi/3)cos(pi/4) + cos(pi/3)cos(pi/2)
  CHECK(evaluate(Family::CosPlus, AngularConvention::Pi, {2, 1}, {1.0 / 3.0, 0.25}) ==
        doctest::Approx(-std::numbers::sqrt2 / 4.0).epsilon(1e-13));
  // symmetric sine permanent with a repeated label collapses to a product
  const double x1 = 0.17, x2 = 0.05;
  CHECK(evaluate(Family::SinPlus, AngularConvention::TwoPi, {1, 1}, {x1, x2}) ==
        doctest::Approx(2.0 * std::sin(2 * kPi * x1) * std::sin(2 * kPi * x2)).epsilon(1e-13));
}

TEST_CASE("oracle agreement and guard") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> dl(-3.0, 3.0), dx(-1.0, 1.0);
  for (Family f : {Family::SinMinus, Family::SinPlus, Family::CosMinus, Family::CosPlus})
    for (int n = 1; n <= 5; ++n) {
      Label l(static_cast<size_t>(n));
      Point x(static_cast<size_t>(n));
      for (double& v : l) v = dl(rng);
      for (double& v : x) v = dx(rng);
      const double a = evaluate(f, AngularConvention::Pi, l, x);
      const double b = evaluate_oracle(f, AngularConvention::Pi, l, x);
      CHECK(std::fabs(a - b) <= 1e-11 * (1.0 + std::fabs(b)));
    }
  Label big(9, 1.0);
  CHECK_THROWS_AS(evaluate_oracle(Family::SinMinus, AngularConvention::TwoPi, big, Point(9, 0.1)),
                  std::length_error);
}

TEST_CASE("argument validation") {
  CHECK_THROWS_AS(evaluate(Family::SinMinus, AngularConvention::TwoPi, {1, 2}, {0.1}),
                  std::invalid_argument);
  CHECK_THROWS_AS(evaluate(Family::SinMinus, AngularConvention::TwoPi, {}, {}),
                  std::invalid_argument);
  CHECK_THROWS_AS(evaluate(Family::SinMinus, AngularConvention::TwoPi, {std::nan("")}, {0.1}),
                  std::invalid_argument);
}

TEST_CASE("distinguished labels") {
  CHECK(special_label(SpecialLabel::Rho1, 3) == Label{3, 2, 1});
  CHECK(special_label(SpecialLabel::Rho2, 3) == Label{2.5, 1.5, 0.5});
  CHECK(special_label(SpecialLabel::Rho3, 3) == Label{2, 1, 0});
  CHECK_THROWS_AS(special_label(SpecialLabel::Rho1, 0), std::invalid_argument);
}

TEST_CASE("closed product forms that hold") {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> dx(-0.9, 0.9);
  for (int n = 2; n <= 4; ++n)
    for (int rep = 0; rep < 25; ++rep) {
      Point x(static_cast<size_t>(n));
      for (double& v : x) v = dx(rng);
      for (SpecialLabel which : {SpecialLabel::Rho1, SpecialLabel::Rho2}) {
        const double lhs = evaluate(Family::SinMinus, AngularConvention::TwoPi,
                                    special_label(which, n), x);
        const double rhs = special_product(which, Family::SinMinus, x);
        CHECK(std::fabs(lhs - rhs) <= 1e-10 * (1.0 + std::fabs(rhs)));
      }
      const double lhs = evaluate(Family::CosMinus, AngularConvention::TwoPi,
                                  special_label(SpecialLabel::Rho3, n), x);
      const double rhs = special_product(SpecialLabel::Rho3, Family::CosMinus, x);
      CHECK(std::fabs(lhs - rhs) <= 1e-10 * (1.0 + std::fabs(rhs)));
    }
}

TEST_CASE("closed product forms that cannot hold") {
  // The zero label entry makes the determinant family vanish identically,
  // while the pair/coordinate product does not.
  const Point x = {0.31, 0.17, 0.05};
  CHECK(evaluate(Family::SinMinus, AngularConvention::TwoPi, special_label(SpecialLabel::Rho3, 3),
                 x) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(std::fabs(special_product(SpecialLabel::Rho3, Family::SinMinus, x)) > 1e-3);

  // cos-plus counterexample: at (0, 1/4) the permanent is -1 but the product
  // vanishes, so no constant relates them.
  const Point cx = {0.0, 0.25};
  CHECK(evaluate(Family::CosPlus, AngularConvention::TwoPi, {2, 1}, cx) == doctest::Approx(-1.0));
  CHECK(special_product(SpecialLabel::Rho1, Family::CosPlus, cx) ==
        doctest::Approx(0.0).epsilon(1e-15));

  // cos-plus with the third label does satisfy a factor-2 identity, but only
  // in two variables.
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> dx(-0.9, 0.9);
  for (int rep = 0; rep < 10; ++rep) {
    Point p = {dx(rng), dx(rng)};
    const double lhs = evaluate(Family::CosPlus, AngularConvention::TwoPi,
                                special_label(SpecialLabel::Rho3, 2), p);
    const double rhs = 2.0 * special_product(SpecialLabel::Rho3, Family::CosPlus, p);
    CHECK(std::fabs(lhs - rhs) <= 1e-12 * (1.0 + std::fabs(rhs)));
  }
  const Point p3 = {0.4, 0.23, 0.11};
  const double lhs3 = evaluate(Family::CosPlus, AngularConvention::TwoPi,
                               special_label(SpecialLabel::Rho3, 3), p3);
  bool matches_some_constant = false;
  for (double c : {1.0, -1.0, 2.0, -2.0, 4.0, -4.0, 6.0, -6.0, 8.0, -8.0})
    if (std::fabs(lhs3 - c * special_product(SpecialLabel::Rho3, Family::CosPlus, p3)) < 1e-6)
      matches_some_constant = true;
  CHECK_FALSE(matches_some_constant);

  CHECK_THROWS_AS(special_product(SpecialLabel::Rho1, Family::SinPlus, {0.1, 0.2}),
                  std::invalid_argument);
}

TEST_CASE("duality and scaling") {
  std::mt19937_64 rng(19);
  std::uniform_real_distribution<double> d(-2.0, 2.0);
  for (Family f : {Family::SinMinus, Family::SinPlus, Family::CosMinus, Family::CosPlus})
    for (int rep = 0; rep < 20; ++rep) {
      Label l = {d(rng), d(rng), d(rng)};
      Point x = {d(rng), d(rng), d(rng)};
      CHECK(evaluate(f, AngularConvention::TwoPi, l, x) ==
            doctest::Approx(evaluate(f, AngularConvention::TwoPi, x, l)).epsilon(1e-11));
      const double c = 1.7;
      Label cl = l;
      Point cx = x;
      for (double& v : cl) v *= c;
      for (double& v : cx) v *= c;
      CHECK(evaluate(f, AngularConvention::TwoPi, cl, x) ==
            doctest::Approx(evaluate(f, AngularConvention::TwoPi, l, cx)).epsilon(1e-11));
      Point x2 = x;
      for (double& v : x2) v *= 2.0;
      CHECK(evaluate(f, AngularConvention::TwoPi, l, x) ==
            doctest::Approx(evaluate(f, AngularConvention::Pi, l, x2)).epsilon(1e-11));
    }
}
