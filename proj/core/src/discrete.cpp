#include "symtrig/discrete.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>
#include <numeric>

#include "internal.hpp"
#include "symtrig/kernel.hpp"

namespace symtrig {

namespace {

struct KindTraits {
  const char* name;
  bool multivariate;
  bool sine;     // sin vs cos factor
  bool antisym;  // determinant vs permanent
  double label_off;
  double point_off;
  LabelSetKind label_set;
  LabelSetKind grid_set;
  bool c_half_zero;  // point weight 1/2 at entry == 0
  bool c_half_top;   // point weight 1/2 at entry == N
  bool h_two_zero;   // label weight 2 at entry == 0
  bool h_two_top;    // label weight 2 at entry == N
  bool stabilizers;  // divide point weight by |S_k|, multiply diagonal by |S_r|
};

constexpr LabelSetKind SG = LabelSetKind::SineGrid;
constexpr LabelSetKind SZ = LabelSetKind::StrictWithZero;
constexpr LabelSetKind WB = LabelSetKind::WeakBounded;
constexpr LabelSetKind VS = LabelSetKind::VariantStrict;
constexpr LabelSetKind VW = LabelSetKind::VariantWeak;
constexpr LabelSetKind SP = LabelSetKind::StrictPositive;

// Indexed by TransformKind. Certified by the Gram/round-trip/Plancherel tests
// rather than asserted: every row's stated diagonal is checked numerically.
constexpr KindTraits kTraits[kTransformKindCount] = {
    // name       mv     sine   anti   a    b    labels grid  c0     cN     h0     hN     stab
    {"dst1d",     false, true,  true,  0.0, 0.0, SG,    SG,   false, false, false, false, false},
    {"dct1d",     false, false, false, 0.0, 0.0, SZ,    SZ,   true,  true,  true,  true,  false},
    {"dct-1",     false, false, false, 0.0, 0.0, SZ,    SZ,   true,  true,  true,  true,  false},
    {"dct-2",     false, false, false, 0.5, 0.0, VS,    VS,   true,  false, false, false, false},
    {"dct-3",     false, false, false, 0.0, 0.5, VS,    VS,   false, false, true,  false, false},
    {"dct-4",     false, false, false, 0.5, 0.5, VS,    VS,   false, false, false, false, false},
    {"dst-1",     false, true,  true,  0.0, 0.0, SG,    SG,   false, false, false, false, false},
    {"dst-2",     false, true,  true,  0.5, 0.0, VS,    SP,   false, true,  false, false, false},
    {"dst-3",     false, true,  true,  0.0, 0.5, SP,    VS,   false, false, false, true,  false},
    {"dst-4",     false, true,  true,  0.5, 0.5, VS,    VS,   false, false, false, false, false},
    {"amdst",     true,  true,  true,  0.0, 0.0, SG,    SG,   false, false, false, false, false},
    {"smdct",     true,  false, false, 0.0, 0.0, WB,    WB,   true,  true,  true,  true,  true},
    {"amdct-1",   true,  false, true,  0.0, 0.0, SZ,    SZ,   true,  true,  true,  true,  false},
    {"amdct-2",   true,  false, true,  0.5, 0.0, VS,    VS,   true,  false, false, false, false},
    {"amdct-3",   true,  false, true,  0.0, 0.5, VS,    VS,   false, false, true,  false, false},
    {"amdct-4",   true,  false, true,  0.5, 0.5, VS,    VS,   false, false, false, false, false},
    {"smdct-1",   true,  false, false, 0.0, 0.0, WB,    WB,   true,  true,  true,  true,  true},
    {"smdct-2",   true,  false, false, 0.5, 0.0, VW,    VW,   true,  false, false, false, true},
    {"smdct-3",   true,  false, false, 0.0, 0.5, VW,    VW,   false, false, true,  false, true},
    {"smdct-4",   true,  false, false, 0.5, 0.5, VW,    VW,   false, false, false, false, true},
};

const KindTraits& traits(TransformKind kind) { return kTraits[static_cast<int>(kind)]; }

double factor_1d(const KindTraits& tr, int N, int r, int k) {
  const double arg = std::numbers::pi * (r + tr.label_off) * (k + tr.point_off) / N;
  return tr.sine ? std::sin(arg) : std::cos(arg);
}

void require_tuple_pair(const IntTuple& r, const IntTuple& k, const char* who) {
  if (r.empty() || r.size() != k.size())
    throw std::invalid_argument(std::string(who) + ": label and grid tuple must have equal dimension n >= 1");
}

}  // namespace

const std::vector<TransformKind>& all_transform_kinds() {
  static const std::vector<TransformKind> kinds = [] {
    std::vector<TransformKind> v;
    for (int i = 0; i < kTransformKindCount; ++i) v.push_back(static_cast<TransformKind>(i));
    return v;
  }();
  return kinds;
}

const char* kind_name(TransformKind kind) { return traits(kind).name; }

TransformKind parse_kind(std::string_view name) {
  std::string canon;
  for (char c : name) {
    if (c == '_' || c == '-') continue;
    canon.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  }
  for (int i = 0; i < kTransformKindCount; ++i) {
    std::string t;
    for (const char* p = kTraits[i].name; *p; ++p)
      if (*p != '-') t.push_back(*p);
    if (t == canon) return static_cast<TransformKind>(i);
  }
  throw std::invalid_argument("unknown transform kind: " + std::string(name));
}

bool kind_is_multivariate(TransformKind kind) { return traits(kind).multivariate; }
bool kind_is_antisymmetric(TransformKind kind) { return traits(kind).antisym; }
LabelSetKind kind_label_set(TransformKind kind) { return traits(kind).label_set; }
LabelSetKind kind_grid_set(TransformKind kind) { return traits(kind).grid_set; }

double kernel_value(TransformKind kind, int N, const IntTuple& r, const IntTuple& k) {
  require_tuple_pair(r, k, "kernel_value");
  if (N < 1) throw std::invalid_argument("kernel_value: N must be >= 1");
  const KindTraits& tr = traits(kind);
  const int n = static_cast<int>(r.size());
  if (!tr.multivariate) {
    if (n != 1) throw std::invalid_argument("kernel_value: 1-D kind needs n == 1");
    return factor_1d(tr, N, r[0], k[0]);
  }
  std::vector<std::vector<double>> a(static_cast<size_t>(n), std::vector<double>(static_cast<size_t>(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      a[static_cast<size_t>(i)][static_cast<size_t>(j)] = factor_1d(tr, N, r[static_cast<size_t>(i)], k[static_cast<size_t>(j)]);
  const double body = tr.antisym ? determinant(std::move(a)) : permanent(a);
  return body / std::sqrt(static_cast<double>(factorial(n)));
}

double kernel_value_oracle(TransformKind kind, int N, const IntTuple& r, const IntTuple& k) {
  require_tuple_pair(r, k, "kernel_value_oracle");
  if (N < 1) throw std::invalid_argument("kernel_value_oracle: N must be >= 1");
  const KindTraits& tr = traits(kind);
  const int n = static_cast<int>(r.size());
  if (!tr.multivariate) {
    if (n != 1) throw std::invalid_argument("kernel_value_oracle: 1-D kind needs n == 1");
    return factor_1d(tr, N, r[0], k[0]);
  }
  if (n > 8) throw std::length_error("kernel_value_oracle: n > 8 (factorial guard)");
  std::vector<int> idx(static_cast<size_t>(n));
  std::iota(idx.begin(), idx.end(), 0);
  double sum = 0.0;
  do {
    double prod = 1.0;
    for (int i = 0; i < n; ++i)
      prod *= factor_1d(tr, N, r[static_cast<size_t>(idx[static_cast<size_t>(i)])], k[static_cast<size_t>(i)]);
    if (tr.antisym) {
      int inversions = 0;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
          if (idx[static_cast<size_t>(i)] > idx[static_cast<size_t>(j)]) ++inversions;
      sum += (inversions % 2 == 0) ? prod : -prod;
    } else {
      sum += prod;
    }
  } while (std::next_permutation(idx.begin(), idx.end()));
  return sum / std::sqrt(static_cast<double>(factorial(n)));
}

Transform make_transform(TransformKind kind, int N, int n) {
  if (N < 1) throw std::invalid_argument("make_transform: N must be >= 1");
  if (n < 1) throw std::invalid_argument("make_transform: n must be >= 1");
  const KindTraits& tr = traits(kind);
  if (!tr.multivariate && n != 1)
    throw std::invalid_argument(std::string("make_transform: ") + tr.name + " is 1-D (n must be 1)");

  Transform t;
  t.kind = kind;
  t.N = N;
  t.n = n;
  t.labels = enumerate_labels(tr.label_set, N, n);
  t.grid = enumerate_labels(tr.grid_set, N, n);

  const double nfact = static_cast<double>(factorial(n));
  t.point_weight.resize(t.grid.size());
  for (size_t g = 0; g < t.grid.size(); ++g) {
    double w = nfact;
    for (int v : t.grid[g]) {
      if ((v == 0 && tr.c_half_zero) || (v == N && tr.c_half_top)) w *= 0.5;
    }
    if (tr.stabilizers) w /= static_cast<double>(stabilizer_order(t.grid[g]));
    t.point_weight[g] = w;
  }

  t.gram_diag.resize(t.labels.size());
  for (size_t l = 0; l < t.labels.size(); ++l) {
    double d = std::pow(N / 2.0, n);
    for (int v : t.labels[l]) {
      if ((v == 0 && tr.h_two_zero) || (v == N && tr.h_two_top)) d *= 2.0;
    }
    if (tr.stabilizers) d *= static_cast<double>(stabilizer_order(t.labels[l]));
    t.gram_diag[l] = d;
  }

  t.kernel.assign(t.labels.size(), std::vector<double>(t.grid.size()));
  internal::parallel_for(static_cast<int>(t.labels.size()), [&](int l) {
    for (size_t g = 0; g < t.grid.size(); ++g)
      t.kernel[static_cast<size_t>(l)][g] = kernel_value(kind, N, t.labels[static_cast<size_t>(l)], t.grid[g]);
  });
  return t;
}

std::vector<double> forward(const Transform& t, const std::vector<double>& data) {
  if (data.size() != t.grid.size())
    throw std::invalid_argument("forward: data length does not match the grid");
  std::vector<double> coeffs(t.labels.size());
  internal::parallel_for(static_cast<int>(t.labels.size()), [&](int l) {
    internal::Accumulator acc;
    const auto& row = t.kernel[static_cast<size_t>(l)];
    for (size_t g = 0; g < t.grid.size(); ++g)
      acc.add(t.point_weight[g] * data[g] * row[g]);
    coeffs[static_cast<size_t>(l)] = acc.get() / t.gram_diag[static_cast<size_t>(l)];
  });
  return coeffs;
}

std::vector<double> inverse(const Transform& t, const std::vector<double>& coeffs) {
  if (coeffs.size() != t.labels.size())
    throw std::invalid_argument("inverse: coefficient length does not match the label set");
  std::vector<double> data(t.grid.size());
  internal::parallel_for(static_cast<int>(t.grid.size()), [&](int g) {
    internal::Accumulator acc;
    for (size_t l = 0; l < t.labels.size(); ++l)
      acc.add(coeffs[l] * t.kernel[l][static_cast<size_t>(g)]);
    data[static_cast<size_t>(g)] = acc.get();
  });
  return data;
}

std::vector<std::vector<double>> gram_matrix(const Transform& t) {
  std::vector<std::vector<double>> gram(t.labels.size(), std::vector<double>(t.labels.size()));
  internal::parallel_for(static_cast<int>(t.labels.size()), [&](int a) {
    for (size_t b = 0; b < t.labels.size(); ++b) {
      internal::Accumulator acc;
      for (size_t g = 0; g < t.grid.size(); ++g)
        acc.add(t.point_weight[g] * t.kernel[static_cast<size_t>(a)][g] * t.kernel[b][g]);
      gram[static_cast<size_t>(a)][b] = acc.get();
    }
  });
  return gram;
}

double plancherel_defect_discrete(const Transform& t, const std::vector<double>& data) {
  const std::vector<double> coeffs = forward(t, data);
  internal::Accumulator lhs;
  for (size_t g = 0; g < t.grid.size(); ++g)
    lhs.add(t.point_weight[g] * data[g] * data[g]);
  internal::Accumulator rhs;
  for (size_t l = 0; l < t.labels.size(); ++l)
    rhs.add(t.gram_diag[l] * coeffs[l] * coeffs[l]);
  return std::fabs(lhs.get() - rhs.get());
}

}  // namespace symtrig
