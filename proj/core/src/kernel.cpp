#include "symtrig/kernel.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <numeric>

namespace symtrig {

const char* family_name(Family f) {
  switch (f) {
    case Family::SinMinus: return "sin-minus";
    case Family::SinPlus: return "sin-plus";
    case Family::CosMinus: return "cos-minus";
    case Family::CosPlus: return "cos-plus";
  }
  return "?";
}

const char* convention_name(AngularConvention c) {
  return c == AngularConvention::TwoPi ? "two-pi" : "pi";
}

namespace {

void require_square(const std::vector<std::vector<double>>& a, const char* who) {
  for (const auto& row : a) {
    if (row.size() != a.size())
      throw std::invalid_argument(std::string(who) + ": matrix is not square");
  }
}

void require_pair(const Label& lambda, const Point& x, const char* who) {
  if (lambda.empty() || lambda.size() != x.size())
    throw std::invalid_argument(std::string(who) + ": label and point must have equal dimension n >= 1");
  for (double v : lambda)
    if (!std::isfinite(v)) throw std::invalid_argument(std::string(who) + ": non-finite label entry");
  for (double v : x)
    if (!std::isfinite(v)) throw std::invalid_argument(std::string(who) + ": non-finite point entry");
}

}  // namespace

double determinant(std::vector<std::vector<double>> a) {
  require_square(a, "determinant");
  const int n = static_cast<int>(a.size());
  double det = 1.0;
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    for (int row = col + 1; row < n; ++row)
      if (std::fabs(a[row][col]) > std::fabs(a[pivot][col])) pivot = row;
    if (a[pivot][col] == 0.0) return 0.0;
    if (pivot != col) {
      std::swap(a[pivot], a[col]);
      det = -det;
    }
    det *= a[col][col];
    for (int row = col + 1; row < n; ++row) {
      const double factor = a[row][col] / a[col][col];
      for (int k = col + 1; k < n; ++k) a[row][k] -= factor * a[col][k];
      a[row][col] = 0.0;
    }
  }
  return det;
}

double permanent_direct(const std::vector<std::vector<double>>& a) {
  require_square(a, "permanent_direct");
  const int n = static_cast<int>(a.size());
  if (n == 0) return 1.0;
  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  double sum = 0.0;
  do {
    double prod = 1.0;
    for (int i = 0; i < n; ++i) prod *= a[i][idx[i]];
    sum += prod;
  } while (std::next_permutation(idx.begin(), idx.end()));
  return sum;
}

double permanent_ryser(const std::vector<std::vector<double>>& a) {
  require_square(a, "permanent_ryser");
  const int n = static_cast<int>(a.size());
  if (n == 0) return 1.0;
  if (n > 62) throw std::length_error("permanent_ryser: dimension too large");
  // Gray-code walk over nonempty column subsets S, keeping running row sums.
  // per(A) = (-1)^n * sum_S (-1)^|S| * prod_i (sum_{j in S} a[i][j]).
  std::vector<double> rowsum(n, 0.0);
  double total = 0.0;
  const std::uint64_t limit = std::uint64_t{1} << n;
  std::uint64_t gray = 0;
  for (std::uint64_t k = 1; k < limit; ++k) {
    const std::uint64_t next = k ^ (k >> 1);
    const std::uint64_t diff = gray ^ next;
    const int j = std::countr_zero(diff);
    const double sign = (next & diff) ? 1.0 : -1.0;  // column j added or removed
    for (int i = 0; i < n; ++i) rowsum[i] += sign * a[i][j];
    gray = next;
    double prod = 1.0;
    for (int i = 0; i < n; ++i) prod *= rowsum[i];
    const int popcount = std::popcount(gray);
    total += ((n - popcount) % 2 == 0) ? prod : -prod;
  }
  return total;
}

double permanent(const std::vector<std::vector<double>>& a) {
  return static_cast<int>(a.size()) < kRyserThreshold ? permanent_direct(a)
                                                      : permanent_ryser(a);
}

double kernel_entry(Family f, AngularConvention conv, double lambda, double x) {
  const double factor = (conv == AngularConvention::TwoPi) ? 2.0 * std::numbers::pi
                                                           : std::numbers::pi;
  const double arg = factor * lambda * x;
  return is_sine(f) ? std::sin(arg) : std::cos(arg);
}

double evaluate(Family f, AngularConvention conv, const Label& lambda, const Point& x) {
  require_pair(lambda, x, "evaluate");
  const int n = static_cast<int>(lambda.size());
  std::vector<std::vector<double>> k(n, std::vector<double>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) k[i][j] = kernel_entry(f, conv, lambda[i], x[j]);
  return is_minus(f) ? determinant(std::move(k)) : permanent(k);
}

double evaluate_oracle(Family f, AngularConvention conv, const Label& lambda, const Point& x) {
  require_pair(lambda, x, "evaluate_oracle");
  const int n = static_cast<int>(lambda.size());
  if (n > 8) throw std::length_error("evaluate_oracle: n > 8 (factorial guard)");
  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  const bool signed_sum = is_minus(f);
  double sum = 0.0;
  do {
    double prod = 1.0;
    for (int i = 0; i < n; ++i) prod *= kernel_entry(f, conv, lambda[idx[i]], x[i]);
    if (signed_sum) {
      int inversions = 0;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
          if (idx[i] > idx[j]) ++inversions;
      sum += (inversions % 2 == 0) ? prod : -prod;
    } else {
      sum += prod;
    }
  } while (std::next_permutation(idx.begin(), idx.end()));
  return sum;
}

Label special_label(SpecialLabel which, int n) {
  if (n < 1) throw std::invalid_argument("special_label: n must be >= 1");
  Label m(n);
  for (int i = 0; i < n; ++i) {
    switch (which) {
      case SpecialLabel::Rho1: m[i] = n - i; break;
      case SpecialLabel::Rho2: m[i] = n - i - 0.5; break;
      case SpecialLabel::Rho3: m[i] = n - 1 - i; break;
    }
  }
  return m;
}

double special_product(SpecialLabel which, Family family, const Point& x) {
  if (x.empty()) throw std::invalid_argument("special_product: empty point");
  for (double v : x)
    if (!std::isfinite(v)) throw std::invalid_argument("special_product: non-finite point entry");
  if (family == Family::SinPlus)
    throw std::invalid_argument("special_product: no product form for sin-plus");

  const int n = static_cast<int>(x.size());
  const bool sine = is_sine(family);
  const double pi = std::numbers::pi;

  // Pair factors are sines for the sine family and, notably, also for the
  // alternating cosine at the third label: that determinant is a Vandermonde
  // in cos(2 pi x_i), and cosine differences factor into sine pairs.
  const bool sine_pairs =
      sine || (family == Family::CosMinus && which == SpecialLabel::Rho3);
  double prod = 1.0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const double d = pi * (x[i] - x[j]);
      const double s = pi * (x[i] + x[j]);
      prod *= sine_pairs ? std::sin(d) * std::sin(s) : std::cos(d) * std::cos(s);
    }
  for (int i = 0; i < n; ++i) {
    switch (which) {
      case SpecialLabel::Rho1:
        prod *= sine ? std::sin(2.0 * pi * x[i]) : std::cos(2.0 * pi * x[i]);
        break;
      case SpecialLabel::Rho2:
        prod *= sine ? std::sin(pi * x[i]) : std::cos(pi * x[i]);
        break;
      case SpecialLabel::Rho3:
        break;
    }
  }

  // Exact leading constants for the combinations where the product identity
  // holds (see kernel.hpp); the remaining combinations keep constant 1.
  const int e = n * (n - 1) / 2;
  const double sign = (e % 2 == 0) ? 1.0 : -1.0;
  if (family == Family::SinMinus &&
      (which == SpecialLabel::Rho1 || which == SpecialLabel::Rho2)) {
    prod *= sign * std::ldexp(1.0, n * (n - 1));  // (-4)^(n(n-1)/2)
  } else if (family == Family::CosMinus && which == SpecialLabel::Rho3) {
    prod *= sign * std::ldexp(1.0, (n - 1) * (n - 1));  // (-4)^(n(n-1)/2) * 2^(1-n)
  }
  return prod;
}

}  // namespace symtrig
