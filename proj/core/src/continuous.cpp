#include "symtrig/continuous.hpp"

#include <cmath>
#include <numbers>

#include "internal.hpp"
#include "symtrig/kernel.hpp"
#include "symtrig/symmetry.hpp"

namespace symtrig {

namespace {

Label to_label(const IntTuple& m) { return Label(m.begin(), m.end()); }

int max_entry(const IntTuple& m) {
  int v = 0;
  for (int e : m) v = std::max(v, std::abs(e));
  return v;
}

void validate_dominant(Family f, const IntTuple& m, const char* who) {
  if (m.empty()) throw std::invalid_argument(std::string(who) + ": empty label");
  const bool strict = is_minus(f);
  for (size_t i = 0; i + 1 < m.size(); ++i) {
    if (strict ? m[i] <= m[i + 1] : m[i] < m[i + 1])
      throw std::invalid_argument(std::string(who) + ": label must be dominant (descending)");
  }
  const int floor_value = (f == Family::SinMinus) ? 1 : 0;
  if (m.back() < floor_value)
    throw std::invalid_argument(std::string(who) + ": label entries below the family's range");
}

// Tensor Gauss-Legendre integral of fn over [0, 1/2]^n, parallel over the
// first axis with deterministic combination order.
double box_integral(int n, int points, const SampleFn& fn) {
  auto [nodes, weights] = gauss_legendre(points, 0.0, 0.5);
  if (n == 1) {
    return internal::parallel_sum(points, [&](int i) {
      Point x{nodes[static_cast<size_t>(i)]};
      return weights[static_cast<size_t>(i)] * fn(x);
    });
  }
  return internal::parallel_sum(points, [&](int first) {
    internal::Accumulator acc;
    Point x(static_cast<size_t>(n));
    x[0] = nodes[static_cast<size_t>(first)];
    std::vector<int> idx(static_cast<size_t>(n - 1), 0);
    for (;;) {
      double w = weights[static_cast<size_t>(first)];
      for (int a = 1; a < n; ++a) {
        x[static_cast<size_t>(a)] = nodes[static_cast<size_t>(idx[static_cast<size_t>(a - 1)])];
        w *= weights[static_cast<size_t>(idx[static_cast<size_t>(a - 1)])];
      }
      acc.add(w * fn(x));
      int a = n - 2;
      while (a >= 0 && ++idx[static_cast<size_t>(a)] == points) {
        idx[static_cast<size_t>(a)] = 0;
        --a;
      }
      if (a < 0) break;
    }
    return acc.get();
  });
}

bool coarse_rule(int points, int freq_sum) { return points < freq_sum + 8; }

double pow2(int e) { return std::ldexp(1.0, e); }

}  // namespace

double norm_constant(Family f, const IntTuple& m) {
  validate_dominant(f, m, "norm_constant");
  int zeros = 0;
  for (int e : m)
    if (e == 0) ++zeros;
  switch (f) {
    case Family::SinMinus:
      return 1.0;
    case Family::CosMinus:
      return zeros > 0 ? 2.0 : 1.0;
    case Family::SinPlus:
      return zeros > 0 ? 0.0 : static_cast<double>(stabilizer_order(m));
    case Family::CosPlus:
      return static_cast<double>(stabilizer_order(m)) * pow2(zeros);
  }
  return 0.0;
}

QuadResult inner_product_F(Family f, const IntTuple& m, const IntTuple& mp,
                           const QuadratureRule& rule) {
  validate_dominant(f, m, "inner_product_F");
  validate_dominant(f, mp, "inner_product_F");
  if (m.size() != mp.size())
    throw std::invalid_argument("inner_product_F: label dimension mismatch");
  const int n = static_cast<int>(m.size());
  const Label md = to_label(m), mpd = to_label(mp);
  const double integral = box_integral(n, rule.points_per_axis, [&](const Point& x) {
    return evaluate(f, AngularConvention::TwoPi, md, x) *
           evaluate(f, AngularConvention::TwoPi, mpd, x);
  });
  QuadResult r;
  r.value = pow2(2 * n) / static_cast<double>(factorial(n)) * integral;
  r.accuracy_warning = coarse_rule(rule.points_per_axis, max_entry(m) + max_entry(mp));
  return r;
}

QuadResult cross_orthogonality(MixedPair mix, const IntTuple& m, const IntTuple& mp,
                               const QuadratureRule& rule) {
  const Family fa = (mix == MixedPair::SinMinusCosPlus) ? Family::SinMinus : Family::SinPlus;
  const Family fb = (mix == MixedPair::SinMinusCosPlus) ? Family::CosPlus : Family::CosMinus;
  validate_dominant(fa, m, "cross_orthogonality");
  validate_dominant(fb, mp, "cross_orthogonality");
  if (m.size() != mp.size())
    throw std::invalid_argument("cross_orthogonality: label dimension mismatch");
  const int n = static_cast<int>(m.size());
  const Label md = to_label(m), mpd = to_label(mp);
  QuadResult r;
  r.accuracy_warning = coarse_rule(rule.points_per_axis, max_entry(m) + max_entry(mp));

  if (n == 1) {
    // Full-period integral; double the per-axis points to keep node density.
    auto [nodes, weights] = gauss_legendre(2 * rule.points_per_axis, 0.0, 1.0);
    internal::Accumulator acc;
    for (size_t i = 0; i < nodes.size(); ++i) {
      Point x{nodes[i]};
      acc.add(weights[i] * evaluate(fa, AngularConvention::TwoPi, md, x) *
              evaluate(fb, AngularConvention::TwoPi, mpd, x));
    }
    r.value = acc.get();
    return r;
  }

  // Box rule restricted to the union of the fundamental domain and its image
  // under the swap of the first two coordinates.
  r.value = box_integral(n, rule.points_per_axis, [&](const Point& x) {
    bool inside = true;
    double prev = std::min(x[0], x[1]);  // the box already bounds everything by 1/2
    for (size_t i = 2; i < x.size(); ++i) {
      if (x[i] > prev) {
        inside = false;
        break;
      }
      prev = x[i];
    }
    if (!inside) return 0.0;
    return evaluate(fa, AngularConvention::TwoPi, md, x) *
           evaluate(fb, AngularConvention::TwoPi, mpd, x);
  });
  return r;
}

QuadResult series_coefficient(Family f, const SampleFn& sample, const IntTuple& m,
                              const QuadratureRule& rule) {
  validate_dominant(f, m, "series_coefficient");
  const int n = static_cast<int>(m.size());
  const double norm = norm_constant(f, m);
  QuadResult r;
  r.accuracy_warning = coarse_rule(rule.points_per_axis, 2 * max_entry(m));
  if (norm == 0.0) {  // identically-zero kernel (sin-plus with a zero entry)
    r.value = 0.0;
    return r;
  }
  const Label md = to_label(m);
  const double integral = box_integral(n, rule.points_per_axis, [&](const Point& x) {
    return sample(x) * evaluate(f, AngularConvention::TwoPi, md, x);
  });
  r.value = pow2(2 * n) / (static_cast<double>(factorial(n)) * norm) * integral;
  return r;
}

SeriesCoefficients expand(Family f, const SampleFn& sample, int max_entry_bound, int n,
                          const QuadratureRule& rule) {
  if (max_entry_bound < 1) throw std::invalid_argument("expand: max_entry must be >= 1");
  LabelSetKind set;
  switch (f) {
    case Family::SinMinus: set = LabelSetKind::StrictPositive; break;
    case Family::CosMinus: set = LabelSetKind::StrictWithZero; break;
    case Family::SinPlus:
    case Family::CosPlus: set = LabelSetKind::WeakNonneg; break;
  }
  SeriesCoefficients out;
  out.family = f;
  for (const IntTuple& m : enumerate_labels(set, max_entry_bound, n)) {
    if (f == Family::SinPlus && m.back() == 0) continue;  // identically zero
    out.labels.push_back(m);
    out.values.push_back(series_coefficient(f, sample, m, rule).value);
  }
  return out;
}

double partial_sum(Family f, const SeriesCoefficients& coeffs, const Point& x) {
  if (coeffs.family != f)
    throw std::invalid_argument("partial_sum: coefficient family mismatch");
  if (coeffs.labels.size() != coeffs.values.size())
    throw std::invalid_argument("partial_sum: ragged coefficients");
  internal::Accumulator acc;
  for (size_t i = 0; i < coeffs.labels.size(); ++i) {
    acc.add(coeffs.values[i] *
            evaluate(f, AngularConvention::TwoPi, to_label(coeffs.labels[i]), x));
  }
  return acc.get();
}

double plancherel_defect(Family f, const SeriesCoefficients& coeffs, const SampleFn& sample,
                         const QuadratureRule& rule) {
  if (coeffs.family != f)
    throw std::invalid_argument("plancherel_defect: coefficient family mismatch");
  if (coeffs.labels.empty())
    throw std::invalid_argument("plancherel_defect: empty coefficients (dimension unknown)");
  const int n = static_cast<int>(coeffs.labels.front().size());
  internal::Accumulator lhs;
  for (size_t i = 0; i < coeffs.labels.size(); ++i)
    lhs.add(norm_constant(f, coeffs.labels[i]) * coeffs.values[i] * coeffs.values[i]);
  const double energy = pow2(2 * n) / static_cast<double>(factorial(n)) *
                        box_integral(n, rule.points_per_axis, [&](const Point& x) {
                          const double v = sample(x);
                          return v * v;
                        });
  return std::fabs(lhs.get() - energy);
}

namespace {

void validate_eigen_args(const Label& lambda, const Point& x, double h, const char* who) {
  if (lambda.empty() || lambda.size() != x.size())
    throw std::invalid_argument(std::string(who) + ": label/point dimension mismatch");
  for (double v : lambda)
    if (!std::isfinite(v)) throw std::invalid_argument(std::string(who) + ": non-finite label");
  for (double v : x)
    if (!std::isfinite(v)) throw std::invalid_argument(std::string(who) + ": non-finite point");
  if (!(h > 0.0) || !std::isfinite(h))
    throw std::invalid_argument(std::string(who) + ": step must be positive");
}

}  // namespace

QuadResult sigma_k_eigen_defect(Family f, const Label& lambda, int k, const Point& x, double h) {
  validate_eigen_args(lambda, x, h, "sigma_k_eigen_defect");
  const int n = static_cast<int>(x.size());
  if (k < 1 || k > n)
    throw std::invalid_argument("sigma_k_eigen_defect: need 1 <= k <= n");

  const auto fval = [&](const Point& p) { return evaluate(f, AngularConvention::TwoPi, lambda, p); };

  // sigma_k of the per-axis central second differences: sum over k-subsets S
  // of prod_{i in S} D_i^2, each composition expanded as a tensor stencil with
  // per-axis weights (1, -2, 1)/h^2.
  internal::Accumulator stencil_sum;
  std::vector<int> subset(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i) subset[static_cast<size_t>(i)] = i;
  const double inv_h2 = 1.0 / (h * h);
  for (;;) {
    std::vector<int> offs(static_cast<size_t>(k), -1);
    internal::Accumulator term;
    for (;;) {
      double w = 1.0;
      Point p = x;
      for (int a = 0; a < k; ++a) {
        const int o = offs[static_cast<size_t>(a)];
        w *= (o == 0 ? -2.0 : 1.0) * inv_h2;
        p[static_cast<size_t>(subset[static_cast<size_t>(a)])] += o * h;
      }
      term.add(w * fval(p));
      int a = k - 1;
      while (a >= 0 && ++offs[static_cast<size_t>(a)] == 2) {
        offs[static_cast<size_t>(a)] = -1;
        --a;
      }
      if (a < 0) break;
    }
    stencil_sum.add(term.get());
    // next k-subset of {0..n-1} in lexicographic order
    int a = k - 1;
    while (a >= 0 && subset[static_cast<size_t>(a)] == n - k + a) --a;
    if (a < 0) break;
    ++subset[static_cast<size_t>(a)];
    for (int b = a + 1; b < k; ++b)
      subset[static_cast<size_t>(b)] = subset[static_cast<size_t>(b - 1)] + 1;
  }

  // Eigenvalue (-4 pi^2)^k * e_k(lambda_1^2, ..., lambda_n^2) via the
  // elementary-symmetric recurrence.
  std::vector<double> e(static_cast<size_t>(k) + 1, 0.0);
  e[0] = 1.0;
  for (int i = 0; i < n; ++i) {
    const double l2 = lambda[static_cast<size_t>(i)] * lambda[static_cast<size_t>(i)];
    for (int j = std::min(k, i + 1); j >= 1; --j)
      e[static_cast<size_t>(j)] += l2 * e[static_cast<size_t>(j - 1)];
  }
  const double four_pi2 = 4.0 * std::numbers::pi * std::numbers::pi;
  double eig = e[static_cast<size_t>(k)];
  for (int i = 0; i < k; ++i) eig *= -four_pi2;

  QuadResult r;
  r.value = std::fabs(stencil_sum.get() - eig * fval(x));
  r.accuracy_warning = (k == 1) ? (h < 1e-5 || h > 0.05) : (h < 1e-4 || h > 0.05);
  return r;
}

QuadResult laplace_eigen_defect(Family f, const Label& lambda, const Point& x, double h) {
  return sigma_k_eigen_defect(f, lambda, 1, x, h);
}

}  // namespace symtrig
