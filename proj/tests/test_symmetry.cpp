#include <cmath>
#include <random>

#include "doctest.h"
#include "symtrig/kernel.hpp"
#include "symtrig/symmetry.hpp"

using namespace symtrig;

TEST_CASE("identity, compose, inverse") {
  const GroupElement id = identity_element(3);
  CHECK(id.perm == std::vector<int>{0, 1, 2});
  CHECK(id.signs == std::vector<int>{1, 1, 1});
  CHECK(id.shifts == std::vector<int>{0, 0, 0});

  GroupElement g;
  g.perm = {1, 0, 2};
  g.signs = {1, -1, 1};
  g.shifts = {2, 0, -1};
  const Point x = {0.1, 0.2, 0.3};
  const Point gx = act(g, x);
  CHECK(gx[0] == doctest::Approx(0.2 + 2));   // +x2 + 2
  CHECK(gx[1] == doctest::Approx(-0.1));      // -x1
  CHECK(gx[2] == doctest::Approx(0.3 - 1));   // +x3 - 1

  const GroupElement ginv = inverse(g);
  const Point back = act(ginv, gx);
  for (size_t i = 0; i < x.size(); ++i) CHECK(back[i] == doctest::Approx(x[i]));

  std::mt19937_64 rng(23);
  std::uniform_int_distribution<int> coin(0, 1), shift(-3, 3);
  for (int rep = 0; rep < 50; ++rep) {
    GroupElement a = identity_element(4), b = identity_element(4);
    std::shuffle(a.perm.begin(), a.perm.end(), rng);
    std::shuffle(b.perm.begin(), b.perm.end(), rng);
    for (int i = 0; i < 4; ++i) {
      a.signs[static_cast<size_t>(i)] = coin(rng) ? 1 : -1;
      b.signs[static_cast<size_t>(i)] = coin(rng) ? 1 : -1;
      a.shifts[static_cast<size_t>(i)] = shift(rng);
      b.shifts[static_cast<size_t>(i)] = shift(rng);
    }
    Point x4 = {0.11, 0.22, 0.33, 0.44};
    const Point lhs = act(compose(a, b), x4);
    const Point rhs = act(a, act(b, x4));
    for (size_t i = 0; i < x4.size(); ++i) CHECK(lhs[i] == doctest::Approx(rhs[i]));
  }

  GroupElement bad;
  bad.perm = {0, 1};
  bad.signs = {1};
  bad.shifts = {0, 0};
  CHECK_THROWS_AS(act(bad, Point{0.1, 0.2}), std::invalid_argument);
  CHECK_THROWS_AS(compose(g, identity_element(2)), std::invalid_argument);
}

TEST_CASE("parities") {
  CHECK(permutation_parity({0, 1, 2}) == 1);
  CHECK(permutation_parity({1, 0, 2}) == -1);
  CHECK(permutation_parity({1, 2, 0}) == 1);
  GroupElement g = identity_element(3);
  g.signs = {1, -1, -1};
  CHECK(parity(g) == 1);
  CHECK(flip_count(g) == 2);
}

TEST_CASE("fold frozen examples") {
  // (1.7, -0.2) -> mod 1 (0.7, 0.8) -> reflect (0.3, 0.2), two flips -> sorted as-is
  const FoldResult a = fold({1.7, -0.2});
  CHECK(a.point[0] == doctest::Approx(0.3));
  CHECK(a.point[1] == doctest::Approx(0.2));
  CHECK(a.perm_sign == 1);
  CHECK(a.flip_parity == 1);

  // single reflection
  const FoldResult b = fold({0.6});
  CHECK(b.point[0] == doctest::Approx(0.4));
  CHECK(b.flip_parity == -1);
  CHECK(b.perm_sign == 1);

  // pure sort with one inversion
  const FoldResult c = fold({0.2, 0.3});
  CHECK(c.point[0] == doctest::Approx(0.3));
  CHECK(c.point[1] == doctest::Approx(0.2));
  CHECK(c.perm_sign == -1);
  CHECK(c.flip_parity == 1);

  // boundary values stay put
  const FoldResult d = fold({0.5, 0.0});
  CHECK(d.point[0] == doctest::Approx(0.5));
  CHECK(d.point[1] == doctest::Approx(0.0));
  CHECK(d.perm_sign == 1);
  CHECK(d.flip_parity == 1);
}

TEST_CASE("fold transformation law") {
  std::mt19937_64 rng(29);
  std::uniform_real_distribution<double> dx(-3.0, 3.0);
  for (int n = 1; n <= 4; ++n)
    for (int rep = 0; rep < 40; ++rep) {
      Point x(static_cast<size_t>(n));
      for (double& v : x) v = dx(rng);
      Label m(static_cast<size_t>(n));
      for (int i = 0; i < n; ++i) m[static_cast<size_t>(i)] = 2 * (n - i);  // strict integers
      const FoldResult fr = fold(x);
      double prev = 0.5;
      for (double v : fr.point) {
        CHECK(v <= prev + 1e-15);
        CHECK(v >= 0.0);
        prev = v;
      }
      const double sm = evaluate(Family::SinMinus, AngularConvention::TwoPi, m, x);
      const double folded = evaluate(Family::SinMinus, AngularConvention::TwoPi, m, fr.point);
      CHECK(sm == doctest::Approx(fr.perm_sign * fr.flip_parity * folded).epsilon(1e-10));
      const double cp = evaluate(Family::CosPlus, AngularConvention::TwoPi, m, x);
      const double cpf = evaluate(Family::CosPlus, AngularConvention::TwoPi, m, fr.point);
      CHECK(cp == doctest::Approx(cpf).epsilon(1e-10));
    }
}

TEST_CASE("stabilizer order") {
  CHECK(stabilizer_order(IntTuple{3, 2, 1}) == 1);
  CHECK(stabilizer_order(IntTuple{2, 2, 1}) == 2);
  CHECK(stabilizer_order(IntTuple{3, 3, 3}) == 6);
  CHECK(stabilizer_order(IntTuple{2, 2, 1, 1, 1}) == 12);
  CHECK(stabilizer_order(IntTuple{7}) == 1);
  CHECK(stabilizer_order(Label{0.5, 0.5, 1.5}) == 2);
}

TEST_CASE("label set enumeration, frozen") {
  using V = std::vector<IntTuple>;
  CHECK(enumerate_labels(LabelSetKind::StrictPositive, 3, 2) == V{{3, 2}, {3, 1}, {2, 1}});
  CHECK(enumerate_labels(LabelSetKind::VariantWeak, 2, 2) == V{{1, 1}, {1, 0}, {0, 0}});
  CHECK(enumerate_labels(LabelSetKind::StrictWithZero, 2, 2) == V{{2, 1}, {2, 0}, {1, 0}});
  CHECK(enumerate_labels(LabelSetKind::SineGrid, 2, 2).empty());
  CHECK(enumerate_labels(LabelSetKind::SineGrid, 4, 2) == V{{3, 2}, {3, 1}, {2, 1}});
  CHECK(enumerate_labels(LabelSetKind::WeakBounded, 1, 2) == V{{1, 1}, {1, 0}, {0, 0}});
  CHECK(enumerate_grid(GridKind::SineInterior, 4, 2) == V{{3, 2}, {3, 1}, {2, 1}});
  CHECK(enumerate_grid(GridKind::CosineClosed, 2, 2) ==
        V{{2, 2}, {2, 1}, {2, 0}, {1, 1}, {1, 0}, {0, 0}});
  CHECK(enumerate_grid(GridKind::VariantHalfOpen, 2, 2) == V{{1, 1}, {1, 0}, {0, 0}});
  CHECK_THROWS_AS(enumerate_labels(LabelSetKind::StrictPositive, 3, 0), std::invalid_argument);
}

TEST_CASE("enumeration counts") {
  for (int N = 1; N <= 9; ++N)
    for (int n = 1; n <= 4; ++n) {
      CHECK(enumerate_labels(LabelSetKind::StrictPositive, N, n).size() == binomial(N, n));
      CHECK(enumerate_labels(LabelSetKind::SineGrid, N, n).size() == binomial(N - 1, n));
      CHECK(enumerate_labels(LabelSetKind::StrictWithZero, N, n).size() == binomial(N + 1, n));
      CHECK(enumerate_labels(LabelSetKind::WeakBounded, N, n).size() == binomial(N + n, n));
    }
  CHECK(binomial(10, 3) == 120);
  CHECK(binomial(3, 5) == 0);
  CHECK(factorial(5) == 120);
  CHECK(factorial(0) == 1);
}
