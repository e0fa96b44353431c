#include "symtrig/symmetry.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace symtrig {

namespace {

void require_element(const GroupElement& g, const char* who) {
  const size_t n = g.perm.size();
  if (n == 0 || g.signs.size() != n || g.shifts.size() != n)
    throw std::invalid_argument(std::string(who) + ": inconsistent element dimensions");
  std::vector<char> seen(n, 0);
  for (int p : g.perm) {
    if (p < 0 || static_cast<size_t>(p) >= n || seen[p])
      throw std::invalid_argument(std::string(who) + ": perm is not a permutation");
    seen[p] = 1;
  }
  for (int s : g.signs)
    if (s != 1 && s != -1)
      throw std::invalid_argument(std::string(who) + ": signs must be +1 or -1");
}

}  // namespace

GroupElement identity_element(int n) {
  if (n < 1) throw std::invalid_argument("identity_element: n must be >= 1");
  GroupElement g;
  g.perm.resize(n);
  for (int i = 0; i < n; ++i) g.perm[i] = i;
  g.signs.assign(n, 1);
  g.shifts.assign(n, 0);
  return g;
}

GroupElement compose(const GroupElement& a, const GroupElement& b) {
  require_element(a, "compose");
  require_element(b, "compose");
  const size_t n = a.perm.size();
  if (b.perm.size() != n) throw std::invalid_argument("compose: dimension mismatch");
  GroupElement c;
  c.perm.resize(n);
  c.signs.resize(n);
  c.shifts.resize(n);
  for (size_t i = 0; i < n; ++i) {
    c.perm[i] = b.perm[a.perm[i]];
    c.signs[i] = a.signs[i] * b.signs[a.perm[i]];
    c.shifts[i] = a.signs[i] * b.shifts[a.perm[i]] + a.shifts[i];
  }
  return c;
}

GroupElement inverse(const GroupElement& g) {
  require_element(g, "inverse");
  const size_t n = g.perm.size();
  GroupElement inv;
  inv.perm.resize(n);
  inv.signs.resize(n);
  inv.shifts.resize(n);
  for (size_t i = 0; i < n; ++i) {
    const int j = g.perm[i];
    inv.perm[j] = static_cast<int>(i);
    inv.signs[j] = g.signs[i];
    inv.shifts[j] = -g.signs[i] * g.shifts[i];
  }
  return inv;
}

int permutation_parity(const std::vector<int>& perm) {
  int inversions = 0;
  for (size_t i = 0; i < perm.size(); ++i)
    for (size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j]) ++inversions;
  return (inversions % 2 == 0) ? 1 : -1;
}

int parity(const GroupElement& g) { return permutation_parity(g.perm); }

int flip_count(const GroupElement& g) {
  int c = 0;
  for (int s : g.signs)
    if (s == -1) ++c;
  return c;
}

Point act(const GroupElement& g, const Point& x) {
  require_element(g, "act");
  if (x.size() != g.perm.size()) throw std::invalid_argument("act: dimension mismatch");
  Point y(x.size());
  for (size_t i = 0; i < x.size(); ++i)
    y[i] = g.signs[i] * x[g.perm[i]] + g.shifts[i];
  return y;
}

FoldResult fold(const Point& x) {
  if (x.empty()) throw std::invalid_argument("fold: empty point");
  FoldResult r;
  r.point.resize(x.size());
  int flips = 0;
  for (size_t i = 0; i < x.size(); ++i) {
    if (!std::isfinite(x[i])) throw std::invalid_argument("fold: non-finite point entry");
    double t = x[i] - std::floor(x[i]);
    if (t >= 1.0) t = 0.0;  // rounding when x is a tiny negative
    if (t > 0.5) {
      t = 1.0 - t;
      ++flips;
    }
    r.point[i] = t;
  }
  int inversions = 0;
  for (size_t i = 0; i < r.point.size(); ++i)
    for (size_t j = i + 1; j < r.point.size(); ++j)
      if (r.point[i] < r.point[j]) ++inversions;
  std::sort(r.point.begin(), r.point.end(), std::greater<>());
  r.perm_sign = (inversions % 2 == 0) ? 1 : -1;
  r.flip_parity = (flips % 2 == 0) ? 1 : -1;
  return r;
}

namespace {

template <typename T>
long long stabilizer_order_impl(std::vector<T> v) {
  std::sort(v.begin(), v.end());
  long long order = 1;
  long long run = 1;
  for (size_t i = 1; i < v.size(); ++i) {
    if (v[i] == v[i - 1]) {
      ++run;
      order *= run;
    } else {
      run = 1;
    }
  }
  return order;
}

}  // namespace

long long stabilizer_order(const IntTuple& m) { return stabilizer_order_impl(m); }
long long stabilizer_order(const Label& m) { return stabilizer_order_impl(m); }

namespace {

// All tuples hi >= m1 (>|>=) ... (>|>=) mn >= lo in descending lex order.
std::vector<IntTuple> descending_tuples(int hi, int lo, int n, bool strict) {
  std::vector<IntTuple> out;
  IntTuple cur(n);
  std::function<void(int, int)> gen = [&](int depth, int maxv) {
    if (depth == n) {
      out.push_back(cur);
      return;
    }
    for (int v = maxv; v >= lo; --v) {
      cur[depth] = v;
      gen(depth + 1, strict ? v - 1 : v);
    }
  };
  if (hi >= lo) gen(0, hi);
  return out;
}

}  // namespace

std::vector<IntTuple> enumerate_labels(LabelSetKind kind, int N, int n) {
  if (N < 1 || n < 1) throw std::invalid_argument("enumerate_labels: need N >= 1, n >= 1");
  switch (kind) {
    case LabelSetKind::StrictPositive: return descending_tuples(N, 1, n, true);
    case LabelSetKind::WeakNonneg: return descending_tuples(N, 0, n, false);
    case LabelSetKind::SineGrid: return descending_tuples(N - 1, 1, n, true);
    case LabelSetKind::StrictWithZero: return descending_tuples(N, 0, n, true);
    case LabelSetKind::WeakBounded: return descending_tuples(N, 0, n, false);
    case LabelSetKind::VariantStrict: return descending_tuples(N - 1, 0, n, true);
    case LabelSetKind::VariantWeak: return descending_tuples(N - 1, 0, n, false);
  }
  throw std::invalid_argument("enumerate_labels: unknown set kind");
}

std::vector<IntTuple> enumerate_grid(GridKind kind, int N, int n) {
  if (N < 1 || n < 1) throw std::invalid_argument("enumerate_grid: need N >= 1, n >= 1");
  switch (kind) {
    case GridKind::SineInterior: return descending_tuples(N - 1, 1, n, true);
    case GridKind::CosineClosed: return descending_tuples(N, 0, n, false);
    case GridKind::VariantHalfOpen: return descending_tuples(N - 1, 0, n, false);
  }
  throw std::invalid_argument("enumerate_grid: unknown grid kind");
}

unsigned long long binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  unsigned long long r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * static_cast<unsigned long long>(n - k + i) / static_cast<unsigned long long>(i);
  }
  return r;
}

long long factorial(int n) {
  if (n < 0 || n > 20) throw std::invalid_argument("factorial: argument out of range");
  long long r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

}  // namespace symtrig
