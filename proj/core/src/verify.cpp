#include "symtrig/verify.hpp"

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <map>
#include <numbers>
#include <random>
#include <sstream>

#include "internal.hpp"
#include "symtrig/continuous.hpp"
#include "symtrig/discrete.hpp"
#include "symtrig/io.hpp"
#include "symtrig/kernel.hpp"
#include "symtrig/symmetry.hpp"

namespace symtrig {

namespace {

constexpr std::array<Family, 4> kFamilies = {Family::SinMinus, Family::SinPlus,
                                             Family::CosMinus, Family::CosPlus};

struct Checker {
  std::vector<CheckResult>& out;
  std::string suite;
  double tol_override;

  void add(const std::string& name, double max_defect, double tol, std::string detail = "") {
    CheckResult r;
    r.suite = suite;
    r.name = name;
    r.tolerance = tol_override > 0.0 ? tol_override : tol;
    r.max_defect = max_defect;
    r.pass = max_defect <= r.tolerance;
    r.detail = std::move(detail);
    out.push_back(std::move(r));
  }
};

double urand(std::mt19937_64& rng, double a, double b) {
  return std::uniform_real_distribution<double>(a, b)(rng);
}

Label rand_label(std::mt19937_64& rng, int n, double a, double b) {
  Label v(static_cast<size_t>(n));
  for (double& e : v) e = urand(rng, a, b);
  return v;
}

Point rand_point(std::mt19937_64& rng, int n, double a, double b) {
  return rand_label(rng, n, a, b);
}

std::vector<int> rand_perm(std::mt19937_64& rng, int n) {
  std::vector<int> p(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) p[static_cast<size_t>(i)] = i;
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

IntTuple rand_int_label(std::mt19937_64& rng, int n, int lo, int hi, bool strict) {
  // descending tuple with entries in [lo, hi]
  std::vector<int> pool;
  for (int v = hi; v >= lo; --v) pool.push_back(v);
  IntTuple m;
  std::uniform_int_distribution<size_t> pick(0, pool.size() - 1);
  while (static_cast<int>(m.size()) < n) {
    int v = pool[pick(rng)];
    m.push_back(v);
  }
  std::sort(m.begin(), m.end(), std::greater<>());
  if (strict) {
    for (size_t i = 0; i + 1 < m.size(); ++i)
      if (m[i] <= m[i + 1]) m[i + 1] = m[i] - 1;  // repair collisions downward
    if (m.back() < lo) {
      for (int i = 0; i < n; ++i) m[static_cast<size_t>(i)] = hi - i;  // fallback
    }
  }
  return m;
}

// ---------------------------------------------------------------- kernel ----

void kernel_suite(Checker& c) {
  // Oracle equivalence across all families and n = 1..5.
  {
    std::mt19937_64 rng(101);
    double worst = 0.0;
    for (Family f : kFamilies)
      for (int n = 1; n <= 5; ++n)
        for (int rep = 0; rep < 100; ++rep) {
          const Label l = rand_label(rng, n, -3.0, 3.0);
          const Point x = rand_point(rng, n, -1.0, 1.0);
          const double a = evaluate(f, AngularConvention::TwoPi, l, x);
          const double b = evaluate_oracle(f, AngularConvention::TwoPi, l, x);
          worst = std::max(worst, std::fabs(a - b) / (1.0 + std::fabs(b)));
        }
    c.add("evaluate matches permutation-sum oracle", worst, 1e-10, "n = 1..5, 100 draws each");
  }

  // Coordinate-permutation sign law.
  {
    std::mt19937_64 rng(102);
    double worst = 0.0;
    for (Family f : kFamilies)
      for (int n = 2; n <= 4; ++n)
        for (int rep = 0; rep < 50; ++rep) {
          const Label l = rand_label(rng, n, -3.0, 3.0);
          const Point x = rand_point(rng, n, -1.0, 1.0);
          const std::vector<int> w = rand_perm(rng, n);
          Point wx(x.size());
          for (int i = 0; i < n; ++i) wx[static_cast<size_t>(i)] = x[static_cast<size_t>(w[static_cast<size_t>(i)])];
          const double sign = is_minus(f) ? permutation_parity(w) : 1;
          worst = std::max(worst, std::fabs(evaluate(f, AngularConvention::TwoPi, l, wx) -
                                            sign * evaluate(f, AngularConvention::TwoPi, l, x)));
        }
    c.add("coordinate permutation sign law", worst, 1e-12);
  }

  // Flipping one coordinate negates the sine families, fixes the cosine ones.
  {
    std::mt19937_64 rng(103);
    double worst = 0.0;
    for (Family f : kFamilies)
      for (int n = 1; n <= 4; ++n)
        for (int rep = 0; rep < 50; ++rep) {
          const Label l = rand_label(rng, n, -3.0, 3.0);
          Point x = rand_point(rng, n, -1.0, 1.0);
          const double before = evaluate(f, AngularConvention::TwoPi, l, x);
          const size_t i = static_cast<size_t>(std::uniform_int_distribution<int>(0, n - 1)(rng));
          x[i] = -x[i];
          const double after = evaluate(f, AngularConvention::TwoPi, l, x);
          const double expect = is_sine(f) ? -before : before;
          worst = std::max(worst, std::fabs(after - expect));
        }
    c.add("single sign flip law", worst, 1e-12);
  }

  // Duality: labels and points are interchangeable.
  {
    std::mt19937_64 rng(104);
    double worst = 0.0;
    for (Family f : kFamilies)
      for (int n = 1; n <= 4; ++n)
        for (int rep = 0; rep < 50; ++rep) {
          const Label l = rand_label(rng, n, -3.0, 3.0);
          const Point x = rand_point(rng, n, -1.0, 1.0);
          worst = std::max(worst, std::fabs(evaluate(f, AngularConvention::TwoPi, l, x) -
                                            evaluate(f, AngularConvention::TwoPi, x, l)));
        }
    c.add("label/point duality", worst, 1e-12);
  }

  // Scaling: c * label against c * point.
  {
    std::mt19937_64 rng(105);
    double worst = 0.0;
    for (Family f : kFamilies)
      for (int n = 1; n <= 4; ++n)
        for (int rep = 0; rep < 50; ++rep) {
          const Label l = rand_label(rng, n, -3.0, 3.0);
          const Point x = rand_point(rng, n, -1.0, 1.0);
          const double s = urand(rng, 0.25, 2.0);
          Label sl = l;
          Point sx = x;
          for (double& v : sl) v *= s;
          for (double& v : sx) v *= s;
          worst = std::max(worst, std::fabs(evaluate(f, AngularConvention::TwoPi, sl, x) -
                                            evaluate(f, AngularConvention::TwoPi, l, sx)));
        }
    c.add("scaling symmetry", worst, 1e-12);
  }

  // Boundary vanishing on domain walls.
  {
    std::mt19937_64 rng(106);
    double worst = 0.0;
    for (int n = 2; n <= 4; ++n)
      for (int rep = 0; rep < 50; ++rep) {
        const Label l = rand_label(rng, n, -3.0, 3.0);
        Point x = rand_point(rng, n, 0.0, 0.5);
        const int i = std::uniform_int_distribution<int>(0, n - 2)(rng);
        x[static_cast<size_t>(i + 1)] = x[static_cast<size_t>(i)];
        worst = std::max(worst, std::fabs(evaluate(Family::SinMinus, AngularConvention::TwoPi, l, x)));
        worst = std::max(worst, std::fabs(evaluate(Family::CosMinus, AngularConvention::TwoPi, l, x)));
        Point y = rand_point(rng, n, 0.0, 0.5);
        y.back() = 0.0;
        worst = std::max(worst, std::fabs(evaluate(Family::SinMinus, AngularConvention::TwoPi, l, y)));
        worst = std::max(worst, std::fabs(evaluate(Family::SinPlus, AngularConvention::TwoPi, l, y)));
      }
    c.add("boundary vanishing (equal coordinates, zero coordinate)", worst, 1e-12);
  }

  // Central normal differences of cos-plus vanish at every wall type.
  {
    std::mt19937_64 rng(107);
    double worst = 0.0;
    const int n = 3;
    for (int rep = 0; rep < 30; ++rep) {
      IntTuple mi = rand_int_label(rng, n, 0, 5, false);
      const Label m(mi.begin(), mi.end());
      for (double h : {1e-3, 5e-4}) {
        Point x = rand_point(rng, n, 0.1, 0.4);
        x.back() = 0.0;  // wall x_n = 0
        Point xp = x, xm = x;
        xp.back() += h;
        xm.back() -= h;
        worst = std::max(worst, std::fabs(evaluate(Family::CosPlus, AngularConvention::TwoPi, m, xp) -
                                          evaluate(Family::CosPlus, AngularConvention::TwoPi, m, xm)) /
                                    (2 * h));
        Point y = rand_point(rng, n, 0.1, 0.4);
        y[1] = y[0];  // wall x_1 = x_2, normal (e_1 - e_2)/sqrt(2)
        Point yp = y, ym = y;
        const double d = h / std::numbers::sqrt2;
        yp[0] += d; yp[1] -= d;
        ym[0] -= d; ym[1] += d;
        worst = std::max(worst, std::fabs(evaluate(Family::CosPlus, AngularConvention::TwoPi, m, yp) -
                                          evaluate(Family::CosPlus, AngularConvention::TwoPi, m, ym)) /
                                    (2 * h));
        Point z = rand_point(rng, n, 0.1, 0.4);
        z[0] = 0.5;  // wall x_1 = 1/2
        Point zp = z, zm = z;
        zp[0] += h;
        zm[0] -= h;
        worst = std::max(worst, std::fabs(evaluate(Family::CosPlus, AngularConvention::TwoPi, m, zp) -
                                          evaluate(Family::CosPlus, AngularConvention::TwoPi, m, zm)) /
                                    (2 * h));
      }
    }
    c.add("cos-plus normal derivative vanishes at walls", worst, 1e-8,
          "central differences at h and h/2; exact value is 0");
  }

  // TwoPi at x equals Pi at 2x.
  {
    std::mt19937_64 rng(108);
    double worst = 0.0;
    for (Family f : kFamilies)
      for (int n = 1; n <= 4; ++n)
        for (int rep = 0; rep < 50; ++rep) {
          const Label l = rand_label(rng, n, -3.0, 3.0);
          const Point x = rand_point(rng, n, -1.0, 1.0);
          Point x2 = x;
          for (double& v : x2) v *= 2.0;
          worst = std::max(worst, std::fabs(evaluate(f, AngularConvention::TwoPi, l, x) -
                                            evaluate(f, AngularConvention::Pi, l, x2)));
        }
    c.add("angular convention bridge", worst, 1e-12);
  }
}

// -------------------------------------------------------------- symmetry ----

GroupElement rand_element(std::mt19937_64& rng, int n) {
  GroupElement g;
  g.perm = rand_perm(rng, n);
  g.signs.resize(static_cast<size_t>(n));
  g.shifts.resize(static_cast<size_t>(n));
  std::uniform_int_distribution<int> coin(0, 1), shift(-3, 3);
  for (int i = 0; i < n; ++i) {
    g.signs[static_cast<size_t>(i)] = coin(rng) ? 1 : -1;
    g.shifts[static_cast<size_t>(i)] = shift(rng);
  }
  return g;
}

void symmetry_suite(Checker& c) {
  // Group axioms and the action homomorphism.
  {
    std::mt19937_64 rng(201);
    double worst = 0.0;
    bool structure_ok = true;
    for (int n = 1; n <= 5; ++n)
      for (int rep = 0; rep < 40; ++rep) {
        const GroupElement a = rand_element(rng, n), b = rand_element(rng, n),
                           g3 = rand_element(rng, n);
        const Point x = rand_point(rng, n, -2.0, 2.0);
        // associativity (integer data: exact comparison)
        const GroupElement ab_c = compose(compose(a, b), g3);
        const GroupElement a_bc = compose(a, compose(b, g3));
        structure_ok &= ab_c.perm == a_bc.perm && ab_c.signs == a_bc.signs && ab_c.shifts == a_bc.shifts;
        // inverse
        const GroupElement e = compose(a, inverse(a));
        const GroupElement id = identity_element(n);
        structure_ok &= e.perm == id.perm && e.signs == id.signs && e.shifts == id.shifts;
        // action homomorphism
        const Point via_composed = act(compose(a, b), x);
        const Point via_stacked = act(a, act(b, x));
        for (size_t i = 0; i < x.size(); ++i)
          worst = std::max(worst, std::fabs(via_composed[i] - via_stacked[i]));
      }
    c.add("group axioms and action homomorphism", structure_ok ? worst : 1.0, 1e-12);
  }

  // Parity is multiplicative.
  {
    std::mt19937_64 rng(202);
    bool ok = true;
    for (int n = 1; n <= 5; ++n)
      for (int rep = 0; rep < 40; ++rep) {
        const GroupElement a = rand_element(rng, n), b = rand_element(rng, n);
        ok &= parity(compose(a, b)) == parity(a) * parity(b);
      }
    c.add("permutation parity multiplicative", ok ? 0.0 : 1.0, 0.0);
  }

  // Conjugating a pure shift gives a pure shift (translations are normal).
  {
    std::mt19937_64 rng(203);
    bool ok = true;
    for (int n = 1; n <= 5; ++n)
      for (int rep = 0; rep < 40; ++rep) {
        GroupElement g = rand_element(rng, n);
        g.shifts.assign(static_cast<size_t>(n), 0);  // pure (perm, signs)
        GroupElement t = identity_element(n);
        std::uniform_int_distribution<int> shift(-3, 3);
        for (int i = 0; i < n; ++i) t.shifts[static_cast<size_t>(i)] = shift(rng);
        const GroupElement conj = compose(compose(g, t), inverse(g));
        const GroupElement id = identity_element(n);
        ok &= conj.perm == id.perm && conj.signs == id.signs;
      }
    c.add("translations form an invariant subgroup", ok ? 0.0 : 1.0, 0.0);
  }

  // fold lands in the closed domain and is idempotent.
  {
    std::mt19937_64 rng(204);
    double worst = 0.0;
    for (int n = 1; n <= 5; ++n)
      for (int rep = 0; rep < 60; ++rep) {
        const Point x = rand_point(rng, n, -4.0, 4.0);
        const FoldResult f1 = fold(x);
        double prev = 0.5;
        for (double v : f1.point) {
          if (v > prev || v < 0.0) worst = std::max(worst, 1.0);
          prev = v;
        }
        const FoldResult f2 = fold(f1.point);
        for (size_t i = 0; i < x.size(); ++i)
          worst = std::max(worst, std::fabs(f2.point[i] - f1.point[i]));
        if (f2.perm_sign != 1 || f2.flip_parity != 1) worst = std::max(worst, 1.0);
      }
    c.add("fold is idempotent into the closed domain", worst, 0.0);
  }

  // Folding preserves function values through the recorded parities.
  {
    std::mt19937_64 rng(205);
    double worst = 0.0;
    for (int n = 1; n <= 4; ++n)
      for (int rep = 0; rep < 60; ++rep) {
        const IntTuple mi = rand_int_label(rng, n, 1, 6, true);
        const Label m(mi.begin(), mi.end());
        const Point x = rand_point(rng, n, -3.0, 3.0);
        const FoldResult fr = fold(x);
        const double sm = evaluate(Family::SinMinus, AngularConvention::TwoPi, m, x);
        const double sm_star = evaluate(Family::SinMinus, AngularConvention::TwoPi, m, fr.point);
        worst = std::max(worst, std::fabs(sm - fr.perm_sign * fr.flip_parity * sm_star));
        const double cp = evaluate(Family::CosPlus, AngularConvention::TwoPi, m, x);
        const double cp_star = evaluate(Family::CosPlus, AngularConvention::TwoPi, m, fr.point);
        worst = std::max(worst, std::fabs(cp - cp_star));
      }
    c.add("fold parities reproduce function values", worst, 1e-12);
  }

  // Equivariance under random extended affine elements.
  {
    std::mt19937_64 rng(206);
    double worst = 0.0;
    for (int n = 1; n <= 4; ++n)
      for (int rep = 0; rep < 50; ++rep) {
        const IntTuple mi = rand_int_label(rng, n, 1, 6, true);
        const Label m(mi.begin(), mi.end());
        const Point x = rand_point(rng, n, -1.0, 1.0);
        const GroupElement g = rand_element(rng, n);
        const Point gx = act(g, x);
        const double sign = parity(g) * ((flip_count(g) % 2 == 0) ? 1 : -1);
        worst = std::max(worst, std::fabs(evaluate(Family::SinMinus, AngularConvention::TwoPi, m, gx) -
                                          sign * evaluate(Family::SinMinus, AngularConvention::TwoPi, m, x)));
        worst = std::max(worst, std::fabs(evaluate(Family::CosPlus, AngularConvention::TwoPi, m, gx) -
                                          evaluate(Family::CosPlus, AngularConvention::TwoPi, m, x)));
      }
    c.add("equivariance (sign law for sine, invariance for cosine)", worst, 1e-12);
  }

  // Stabilizer order against brute-force orbit counting.
  {
    std::mt19937_64 rng(207);
    bool ok = true;
    for (int n = 1; n <= 4; ++n)
      for (int rep = 0; rep < 40; ++rep) {
        const IntTuple m = rand_int_label(rng, n, 0, 2, false);
        std::vector<int> idx(m.size());
        for (size_t i = 0; i < m.size(); ++i) idx[i] = static_cast<int>(i);
        long long fixing = 0;
        std::vector<int> perm = idx;
        std::sort(perm.begin(), perm.end());
        do {
          bool fixes = true;
          for (size_t i = 0; i < m.size(); ++i)
            if (m[static_cast<size_t>(perm[i])] != m[i]) fixes = false;
          if (fixes) ++fixing;
        } while (std::next_permutation(perm.begin(), perm.end()));
        ok &= fixing == stabilizer_order(m);
      }
    c.add("stabilizer order equals brute-force count", ok ? 0.0 : 1.0, 0.0);
  }

  // Enumeration cardinalities match the closed-form counts.
  {
    bool ok = true;
    for (int N = 1; N <= 10; ++N)
      for (int n = 1; n <= 4; ++n) {
        ok &= enumerate_labels(LabelSetKind::StrictPositive, N, n).size() == binomial(N, n);
        ok &= enumerate_labels(LabelSetKind::SineGrid, N, n).size() == binomial(N - 1, n);
        ok &= enumerate_labels(LabelSetKind::StrictWithZero, N, n).size() == binomial(N + 1, n);
        ok &= enumerate_labels(LabelSetKind::WeakBounded, N, n).size() == binomial(N + n, n);
        ok &= enumerate_labels(LabelSetKind::SineGrid, N, n).size() ==
              enumerate_grid(GridKind::SineInterior, N, n).size();
        ok &= enumerate_labels(LabelSetKind::WeakBounded, N, n).size() ==
              enumerate_grid(GridKind::CosineClosed, N, n).size();
      }
    c.add("enumeration cardinalities", ok ? 0.0 : 1.0, 0.0, "N <= 10, n <= 4 against binomial counts");
  }
}

// ------------------------------------------------------------ continuous ----

void continuous_suite(Checker& c, const VerifyOptions& opt) {
  const QuadratureRule rule{opt.quad_points};

  // 1-D sine orthogonality through the quadrature rule.
  {
    auto [nodes, weights] = gauss_legendre(rule.points_per_axis, 0.0, 0.5);
    double worst = 0.0;
    for (int k = 1; k <= 8; ++k)
      for (int kp = 1; kp <= 8; ++kp) {
        internal::Accumulator acc;
        for (size_t i = 0; i < nodes.size(); ++i)
          acc.add(weights[i] * std::sin(2 * std::numbers::pi * k * nodes[i]) *
                  std::sin(2 * std::numbers::pi * kp * nodes[i]));
        const double expect = (k == kp) ? 1.0 : 0.0;
        worst = std::max(worst, std::fabs(4.0 * acc.get() - expect));
      }
    c.add("1-D quadrature self-test", worst, 1e-12, "k, k' <= 8");
  }

  // Gram of the continuous families at n = 2 for positive labels.
  {
    double worst = 0.0;
    for (Family f : kFamilies) {
      std::vector<IntTuple> labels;
      if (is_minus(f)) {
        labels = enumerate_labels(LabelSetKind::StrictPositive, 3, 2);
      } else {
        for (const IntTuple& m : enumerate_labels(LabelSetKind::WeakNonneg, 3, 2))
          if (m.back() >= 1) labels.push_back(m);
      }
      for (const IntTuple& m : labels)
        for (const IntTuple& mp : labels) {
          const double got = inner_product_F(f, m, mp, rule).value;
          double expect = 0.0;
          if (m == mp) expect = is_minus(f) ? 1.0 : static_cast<double>(stabilizer_order(m));
          worst = std::max(worst, std::fabs(got - expect));
        }
    }
    c.add("continuous Gram (identity / stabilizer diagonal)", worst, 1e-7,
          "n = 2, positive labels with entries <= 3");
  }

  // Dirichlet: sin-minus vanishes on the domain walls.
  {
    std::mt19937_64 rng(301);
    double worst = 0.0;
    for (int rep = 0; rep < 100; ++rep) {
      const int n = 2 + (rep % 2);
      const IntTuple mi = rand_int_label(rng, n, 1, 6, true);
      const Label m(mi.begin(), mi.end());
      Point x = rand_point(rng, n, 0.05, 0.45);
      std::sort(x.begin(), x.end(), std::greater<>());
      switch (rep % 3) {
        case 0: x[0] = 0.5; break;
        case 1: x.back() = 0.0; break;
        default: x[static_cast<size_t>(n - 2)] = x[static_cast<size_t>(n - 1)]; break;
      }
      worst = std::max(worst, std::fabs(evaluate(Family::SinMinus, AngularConvention::TwoPi, m, x)));
    }
    c.add("Dirichlet condition on walls", worst, 1e-12, "100 wall points, n = 2, 3");
  }

  // Neumann: cos-plus normal derivative vanishes on the walls.
  {
    std::mt19937_64 rng(302);
    double worst = 0.0;
    for (int rep = 0; rep < 50; ++rep) {
      const int n = 2 + (rep % 2);
      const IntTuple mi = rand_int_label(rng, n, 0, 6, false);
      const Label m(mi.begin(), mi.end());
      for (double h : {1e-3, 5e-4}) {
        Point x = rand_point(rng, n, 0.05, 0.45);
        std::sort(x.begin(), x.end(), std::greater<>());
        Point xp = x, xm = x;
        if (rep % 2 == 0) {
          x.back() = 0.0;
          xp = xm = x;
          xp.back() += h;
          xm.back() -= h;
        } else {
          x[1] = x[0];
          xp = xm = x;
          const double d = h / std::numbers::sqrt2;
          xp[0] += d; xp[1] -= d;
          xm[0] -= d; xm[1] += d;
        }
        worst = std::max(worst, std::fabs(evaluate(Family::CosPlus, AngularConvention::TwoPi, m, xp) -
                                          evaluate(Family::CosPlus, AngularConvention::TwoPi, m, xm)) /
                                    (2 * h));
      }
    }
    c.add("Neumann condition on walls", worst, 1e-8, "central differences at h and h/2");
  }

  // Truncated series reproduce band-limited samples, and their energy matches.
  {
    std::mt19937_64 rng(303);
    double worst_point = 0.0;
    double worst_energy = 0.0;
    for (Family f : kFamilies) {
      std::vector<IntTuple> pick;
      std::vector<double> amp;
      if (f == Family::SinMinus) pick = {{2, 1}, {4, 2}};
      if (f == Family::CosMinus) pick = {{2, 0}, {4, 1}};
      if (f == Family::SinPlus) pick = {{2, 2}, {3, 1}};
      if (f == Family::CosPlus) pick = {{2, 0}, {3, 3}};
      amp = {1.5, -0.75};
      const SampleFn g = [&](const Point& x) {
        double s = 0.0;
        for (size_t i = 0; i < pick.size(); ++i)
          s += amp[i] * evaluate(f, AngularConvention::TwoPi,
                                 Label(pick[i].begin(), pick[i].end()), x);
        return s;
      };
      const SeriesCoefficients coeffs = expand(f, g, 4, 2, rule);
      for (int rep = 0; rep < 25; ++rep) {
        const Point x = rand_point(rng, 2, 0.02, 0.48);
        worst_point = std::max(worst_point, std::fabs(partial_sum(f, coeffs, x) - g(x)));
      }
      worst_energy = std::max(worst_energy, plancherel_defect(f, coeffs, g, rule));
    }
    c.add("series round-trip on band-limited samples", worst_point, 1e-6);
    c.add("series energy identity", worst_energy, 1e-8);
  }

  // Laplacian eigen-defect converges at second order.
  {
    std::mt19937_64 rng(304);
    double worst = 0.0;
    for (int rep = 0; rep < 20; ++rep) {
      const Family f = kFamilies[static_cast<size_t>(rep % 4)];
      const Label l = rand_label(rng, 2, 0.6, 3.0);
      const Point x = rand_point(rng, 2, 0.1, 0.4);
      const double h = 1e-3;
      const double d1 = laplace_eigen_defect(f, l, x, h).value;
      const double d2 = laplace_eigen_defect(f, l, x, h / 2).value;
      worst = std::max(worst, std::fabs(d1 / d2 - 4.0));
    }
    c.add("Laplacian eigen-defect h^2 convergence", worst, 0.4, "ratio within [3.6, 4.4]");
  }

  // sigma_2 eigen-defect converges at second order.
  {
    std::mt19937_64 rng(305);
    double worst = 0.0;
    for (int rep = 0; rep < 20; ++rep) {
      const Family f = kFamilies[static_cast<size_t>(rep % 4)];
      const Label l = rand_label(rng, 2, 0.6, 3.0);
      const Point x = rand_point(rng, 2, 0.1, 0.4);
      const double h = 4e-3;
      const double d1 = sigma_k_eigen_defect(f, l, 2, x, h).value;
      const double d2 = sigma_k_eigen_defect(f, l, 2, x, h / 2).value;
      worst = std::max(worst, std::fabs(d1 / d2 - 4.0));
    }
    c.add("sigma_2 eigen-defect h^2 convergence", worst, 0.4, "ratio within [3.6, 4.4]");
  }

  // The per-axis difference operators commute.
  {
    std::mt19937_64 rng(306);
    double worst = 0.0;
    const double h = 4e-3;
    for (int rep = 0; rep < 20; ++rep) {
      const Family f = kFamilies[static_cast<size_t>(rep % 4)];
      const Label l = rand_label(rng, 2, 0.6, 3.0);
      const Point x = rand_point(rng, 2, 0.1, 0.4);
      const auto fv = [&](double dx, double dy) {
        Point p = x;
        p[0] += dx;
        p[1] += dy;
        return evaluate(f, AngularConvention::TwoPi, l, p);
      };
      const auto d2 = [&](auto&& g, double at) { return g(at + h) - 2.0 * g(at) + g(at - h); };
      // D1 then D2 versus D2 then D1, nested evaluation orders
      double order12 = 0.0, order21 = 0.0, scale = 0.0;
      {
        auto inner = [&](double dx) { return d2([&](double dy) { return fv(dx, dy); }, 0.0); };
        order12 = d2(inner, 0.0) / (h * h * h * h);
      }
      {
        auto inner = [&](double dy) { return d2([&](double dx) { return fv(dx, dy); }, 0.0); };
        order21 = d2(inner, 0.0) / (h * h * h * h);
      }
      scale = std::max({std::fabs(order12), std::fabs(order21), 1.0});
      worst = std::max(worst, std::fabs(order12 - order21) / scale);
    }
    c.add("axis difference operators commute", worst, 1e-9, "relative to the operator scale");
  }

  // Mixed sine/cosine products integrate to zero.
  {
    double worst = 0.0;
    const std::vector<std::pair<IntTuple, IntTuple>> mixed_a = {
        {{2, 1}, {1, 1}}, {{3, 1}, {2, 0}}, {{3, 2}, {2, 2}}, {{2, 1}, {3, 1}}, {{4, 1}, {0, 0}}};
    for (const auto& [m, mp] : mixed_a)
      worst = std::max(worst, std::fabs(cross_orthogonality(MixedPair::SinMinusCosPlus, m, mp, rule).value));
    const std::vector<std::pair<IntTuple, IntTuple>> mixed_b = {
        {{1, 1}, {2, 1}}, {{2, 1}, {1, 0}}, {{2, 2}, {3, 2}}, {{3, 1}, {2, 0}}, {{4, 2}, {3, 1}}};
    for (const auto& [m, mp] : mixed_b)
      worst = std::max(worst, std::fabs(cross_orthogonality(MixedPair::SinPlusCosMinus, m, mp, rule).value));
    worst = std::max(worst, std::fabs(cross_orthogonality(MixedPair::SinMinusCosPlus, {2}, {1}, rule).value));
    c.add("mixed-family cross orthogonality", worst, 1e-7, "n = 2 pairs plus the n = 1 reduction");
  }
}

// -------------------------------------------------------------- discrete ----

void discrete_suite(Checker& c, const VerifyOptions& opt) {
  const int N = std::max(opt.N, 2);
  const int n = std::max(opt.n, 1);

  // Label and grid sets always have the same size.
  {
    bool ok = true;
    for (TransformKind kind : all_transform_kinds()) {
      const int max_n = kind_is_multivariate(kind) ? 4 : 1;
      for (int NN = 1; NN <= 10; ++NN)
        for (int nn = 1; nn <= max_n; ++nn)
          ok &= enumerate_labels(kind_label_set(kind), NN, nn).size() ==
                enumerate_labels(kind_grid_set(kind), NN, nn).size();
    }
    c.add("label and grid sets are square", ok ? 0.0 : 1.0, 0.0, "all kinds, N <= 10, n <= 4");
  }

  // Gram matrices are diagonal with the stated diagonal.
  {
    double worst = 0.0;
    for (TransformKind kind : all_transform_kinds()) {
      const int nn = kind_is_multivariate(kind) ? n : 1;
      const Transform t = make_transform(kind, N, nn);
      const auto gram = gram_matrix(t);
      for (size_t a = 0; a < gram.size(); ++a)
        for (size_t b = 0; b < gram.size(); ++b) {
          const double expect = (a == b) ? t.gram_diag[a] : 0.0;
          worst = std::max(worst, std::fabs(gram[a][b] - expect));
        }
    }
    c.add("Gram diagonality (all kinds)", worst, 1e-10);
  }

  // Forward and inverse are mutually inverse.
  {
    std::mt19937_64 rng(401);
    double worst = 0.0;
    for (TransformKind kind : all_transform_kinds()) {
      const int nn = kind_is_multivariate(kind) ? n : 1;
      const Transform t = make_transform(kind, N, nn);
      for (int rep = 0; rep < 5; ++rep) {
        std::vector<double> data(t.grid.size());
        for (double& v : data) v = urand(rng, -1.0, 1.0);
        const auto back = inverse(t, forward(t, data));
        for (size_t i = 0; i < data.size(); ++i)
          worst = std::max(worst, std::fabs(back[i] - data[i]));
        std::vector<double> coeffs(t.labels.size());
        for (double& v : coeffs) v = urand(rng, -1.0, 1.0);
        const auto there = forward(t, inverse(t, coeffs));
        for (size_t i = 0; i < coeffs.size(); ++i)
          worst = std::max(worst, std::fabs(there[i] - coeffs[i]));
      }
    }
    c.add("transform round-trip (both directions)", worst, 1e-10);
  }

  // Kernels transform correctly under grid permutations and vanish on repeats.
  {
    std::mt19937_64 rng(402);
    double worst = 0.0;
    for (TransformKind kind : all_transform_kinds()) {
      if (!kind_is_multivariate(kind)) continue;
      for (int rep = 0; rep < 30; ++rep) {
        const IntTuple r = rand_int_label(rng, 2, 1, N, true);
        IntTuple k = rand_int_label(rng, 2, 0, N, true);
        IntTuple wk = {k[1], k[0]};
        const double sign = kind_is_antisymmetric(kind) ? -1.0 : 1.0;
        worst = std::max(worst, std::fabs(kernel_value(kind, N, r, wk) -
                                          sign * kernel_value(kind, N, r, k)));
        if (kind_is_antisymmetric(kind)) {
          const IntTuple rep_k = {k[0], k[0]};
          worst = std::max(worst, std::fabs(kernel_value(kind, N, r, rep_k)));
        }
      }
    }
    c.add("kernel symmetry under grid permutation", worst, 1e-12);
  }

  // Multivariate kinds at n = 1 reproduce their 1-D primitives.
  {
    double worst = 0.0;
    const std::vector<std::vector<TransformKind>> groups = {
        {TransformKind::Amdst, TransformKind::Dst1d, TransformKind::Dst1},
        {TransformKind::Smdct, TransformKind::Smdct1, TransformKind::Dct1d, TransformKind::Dct1},
        {TransformKind::Amdct1, TransformKind::Dct1},
        {TransformKind::Amdct2, TransformKind::Smdct2, TransformKind::Dct2},
        {TransformKind::Amdct3, TransformKind::Smdct3, TransformKind::Dct3},
        {TransformKind::Amdct4, TransformKind::Smdct4, TransformKind::Dct4},
    };
    for (const auto& group : groups) {
      const Transform ref = make_transform(group.front(), N, 1);
      for (size_t gi = 1; gi < group.size(); ++gi) {
        const Transform t = make_transform(group[gi], N, 1);
        bool same_sets = t.labels == ref.labels && t.grid == ref.grid;
        if (!same_sets) {
          worst = std::max(worst, 1.0);
          continue;
        }
        for (size_t a = 0; a < t.labels.size(); ++a) {
          worst = std::max(worst, std::fabs(t.gram_diag[a] - ref.gram_diag[a]));
          for (size_t g = 0; g < t.grid.size(); ++g)
            worst = std::max(worst, std::fabs(t.kernel[a][g] - ref.kernel[a][g]));
        }
        for (size_t g = 0; g < t.grid.size(); ++g)
          worst = std::max(worst, std::fabs(t.point_weight[g] - ref.point_weight[g]));
      }
    }
    c.add("1-D reductions coincide", worst, 1e-14,
          "multivariate kinds at n = 1 against the 1-D primitives");
  }

  // Kernel matrix path against the permutation-sum path.
  {
    double worst = 0.0;
    for (TransformKind kind : all_transform_kinds()) {
      if (!kind_is_multivariate(kind)) continue;
      const int nn = std::min(n, 3);
      const Transform t = make_transform(kind, N, nn);
      for (size_t a = 0; a < t.labels.size(); ++a)
        for (size_t g = 0; g < t.grid.size(); ++g)
          worst = std::max(worst, std::fabs(t.kernel[a][g] -
                                            kernel_value_oracle(kind, N, t.labels[a], t.grid[g])));
    }
    c.add("kernel oracle equivalence", worst, 1e-10);
  }

  // The antisymmetric sine transform agrees with an axis-by-axis 1-D path.
  {
    std::mt19937_64 rng(403);
    double worst = 0.0;
    const int nn = std::min(n, 3);
    const Transform t = make_transform(TransformKind::Amdst, N, nn);
    if (!t.grid.empty()) {
      std::map<IntTuple, size_t> strict_index;
      for (size_t g = 0; g < t.grid.size(); ++g) strict_index[t.grid[g]] = g;
      std::vector<double> data(t.grid.size());
      for (double& v : data) v = urand(rng, -1.0, 1.0);
      const std::vector<double> coeffs = forward(t, data);

      const int M = N - 1;  // per-axis points 1..N-1
      size_t total = 1;
      for (int a = 0; a < nn; ++a) total *= static_cast<size_t>(M);
      std::vector<double> tensor(total, 0.0);
      std::vector<int> s(static_cast<size_t>(nn), 1);
      for (size_t flat = 0; flat < total; ++flat) {
        IntTuple sorted(s.begin(), s.end());
        std::vector<int> order(sorted.size());
        for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
        std::sort(order.begin(), order.end(), [&](int a2, int b2) { return s[static_cast<size_t>(a2)] > s[static_cast<size_t>(b2)]; });
        std::sort(sorted.begin(), sorted.end(), std::greater<>());
        bool repeated = false;
        for (size_t i = 0; i + 1 < sorted.size(); ++i)
          if (sorted[i] == sorted[i + 1]) repeated = true;
        if (!repeated) {
          int inv = 0;
          for (size_t i = 0; i < order.size(); ++i)
            for (size_t j = i + 1; j < order.size(); ++j)
              if (order[i] > order[j]) ++inv;
          tensor[flat] = ((inv % 2 == 0) ? 1.0 : -1.0) * data[strict_index.at(sorted)];
        }
        for (int a = nn - 1; a >= 0; --a) {
          if (++s[static_cast<size_t>(a)] <= M) break;
          s[static_cast<size_t>(a)] = 1;
        }
      }

      // Apply the 1-D sine transform along each axis.
      std::vector<double> work = tensor;
      for (int axis = 0; axis < nn; ++axis) {
        std::vector<double> next(total, 0.0);
        size_t stride = 1;
        for (int a = axis + 1; a < nn; ++a) stride *= static_cast<size_t>(M);
        for (size_t base = 0; base < total; ++base) {
          const size_t axis_idx = (base / stride) % static_cast<size_t>(M);
          if (axis_idx != 0) continue;
          for (int mth = 1; mth <= M; ++mth) {
            double acc = 0.0;
            for (int sv = 1; sv <= M; ++sv)
              acc += (2.0 / N) * std::sin(std::numbers::pi * mth * sv / N) *
                     work[base + static_cast<size_t>(sv - 1) * stride];
            next[base + static_cast<size_t>(mth - 1) * stride] = acc;
          }
        }
        work = next;
      }

      const double root = std::sqrt(static_cast<double>(factorial(nn)));
      for (size_t l = 0; l < t.labels.size(); ++l) {
        size_t flat = 0;
        for (int a = 0; a < nn; ++a)
          flat = flat * static_cast<size_t>(M) + static_cast<size_t>(t.labels[l][static_cast<size_t>(a)] - 1);
        worst = std::max(worst, std::fabs(coeffs[l] - root * work[flat]));
      }
    }
    c.add("sine transform separability cross-check", worst, 1e-10,
          "tensor 1-D path on the antisymmetric extension");
  }

  // Plancherel identity, relative form.
  {
    std::mt19937_64 rng(404);
    double worst = 0.0;
    for (TransformKind kind : all_transform_kinds()) {
      const int nn = kind_is_multivariate(kind) ? n : 1;
      const Transform t = make_transform(kind, N, nn);
      if (t.grid.empty()) continue;
      std::vector<double> data(t.grid.size());
      for (double& v : data) v = urand(rng, -1.0, 1.0);
      internal::Accumulator energy;
      for (size_t g = 0; g < t.grid.size(); ++g)
        energy.add(t.point_weight[g] * data[g] * data[g]);
      worst = std::max(worst, plancherel_defect_discrete(t, data) / energy.get());
    }
    c.add("Plancherel identity (relative defect)", worst, 1e-10);
  }
}

// -------------------------------------------------------------------- io ----

void io_suite(Checker& c) {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() /
                       ("symtrig-verify-" +
                        std::to_string(std::chrono::steady_clock::now().time_since_epoch().count()));
  fs::create_directories(dir);

  // Coefficient files round-trip bit-identically.
  {
    std::mt19937_64 rng(501);
    const Transform t = make_transform(TransformKind::Amdst, 5, 2);
    std::vector<double> data(t.grid.size());
    for (double& v : data) v = urand(rng, -1.0, 1.0);
    CoefficientFile file;
    file.kind = t.kind;
    file.N = t.N;
    file.n = t.n;
    file.labels = t.labels;
    file.values = forward(t, data);
    const std::string path = (dir / "coeffs.txt").string();
    write_coefficient_file(path, file);
    const CoefficientFile back = read_coefficient_file(path);
    double worst = 0.0;
    if (back.kind != file.kind || back.N != file.N || back.n != file.n ||
        back.labels != file.labels || back.values.size() != file.values.size()) {
      worst = 1.0;
    } else {
      for (size_t i = 0; i < file.values.size(); ++i)
        if (back.values[i] != file.values[i]) worst = 1.0;  // bit-identical required
    }
    c.add("coefficient file round-trip is bit-identical", worst, 0.0);
  }

  // Data -> file -> transform -> file -> inverse reproduces the data.
  {
    std::mt19937_64 rng(502);
    const Transform t = make_transform(TransformKind::Smdct2, 3, 2);
    std::vector<double> data(t.grid.size());
    for (double& v : data) v = urand(rng, -1.0, 1.0);
    const std::string data_path = (dir / "data.txt").string();
    write_data_file(data_path, t.grid, data, "verification fixture");
    auto [tuples, values] = read_data_file(data_path);
    std::map<IntTuple, double> lookup;
    for (size_t i = 0; i < tuples.size(); ++i) lookup[tuples[i]] = values[i];
    std::vector<double> canonical(t.grid.size());
    for (size_t g = 0; g < t.grid.size(); ++g) canonical[g] = lookup.at(t.grid[g]);
    CoefficientFile file;
    file.kind = t.kind;
    file.N = t.N;
    file.n = t.n;
    file.labels = t.labels;
    file.values = forward(t, canonical);
    const std::string coeff_path = (dir / "coeffs2.txt").string();
    write_coefficient_file(coeff_path, file);
    const CoefficientFile back = read_coefficient_file(coeff_path);
    const std::vector<double> restored = inverse(t, back.values);
    double worst = 0.0;
    for (size_t i = 0; i < data.size(); ++i)
      worst = std::max(worst, std::fabs(restored[i] - data[i]));
    c.add("file-mediated transform round-trip", worst, 1e-10);
  }

  std::error_code ec;
  fs::remove_all(dir, ec);
}

}  // namespace

const std::vector<std::string>& verify_suites() {
  static const std::vector<std::string> suites = {"kernel", "symmetry", "continuous", "discrete", "io"};
  return suites;
}

std::vector<CheckResult> run_suite(const std::string& suite, const VerifyOptions& opt) {
  std::vector<CheckResult> results;
  bool matched = false;
  const auto want = [&](const char* name) {
    if (suite == name || suite == "all") {
      matched = true;
      return true;
    }
    return false;
  };
  if (want("kernel")) {
    Checker c{results, "kernel", opt.tol_override};
    kernel_suite(c);
  }
  if (want("symmetry")) {
    Checker c{results, "symmetry", opt.tol_override};
    symmetry_suite(c);
  }
  if (want("continuous")) {
    Checker c{results, "continuous", opt.tol_override};
    continuous_suite(c, opt);
  }
  if (want("discrete")) {
    Checker c{results, "discrete", opt.tol_override};
    discrete_suite(c, opt);
  }
  if (want("io")) {
    Checker c{results, "io", opt.tol_override};
    io_suite(c);
  }
  if (!matched) throw std::invalid_argument("unknown verify suite: " + suite);
  return results;
}

}  // namespace symtrig
