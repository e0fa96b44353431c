#pragma once

#include <string_view>

#include "symtrig/symmetry.hpp"
#include "symtrig/types.hpp"

namespace symtrig {

// The ten 1-D primitives and ten multivariate transforms. Every kind is pure
// data: kernel formula, label set, grid set, per-label and per-point weights,
// and normalization, looked up from one table.
enum class TransformKind {
  Dst1d,
  Dct1d,
  Dct1,
  Dct2,
  Dct3,
  Dct4,
  Dst1,
  Dst2,
  Dst3,
  Dst4,
  Amdst,
  Smdct,
  Amdct1,
  Amdct2,
  Amdct3,
  Amdct4,
  Smdct1,
  Smdct2,
  Smdct3,
  Smdct4,
};

inline constexpr int kTransformKindCount = 20;
const std::vector<TransformKind>& all_transform_kinds();

const char* kind_name(TransformKind kind);          // "amdst", "dct-2", "smdct-3", ...
TransformKind parse_kind(std::string_view name);    // accepts "AMDCT-2", "amdct2", "amdct_2"
bool kind_is_multivariate(TransformKind kind);
bool kind_is_antisymmetric(TransformKind kind);     // determinant-based kernel
LabelSetKind kind_label_set(TransformKind kind);
LabelSetKind kind_grid_set(TransformKind kind);     // grids share the tuple-shape enumerations

// Kernel entry for arbitrary integer tuples (no set-membership restriction, so
// symmetry properties are testable off-grid): the 1-D factor is
// trig(pi (r_i + a)(k_j + b) / N) with the kind's trig and offsets; the
// multivariate kinds take (n!)^{-1/2} times the determinant (antisymmetric) or
// permanent (symmetric) of the factor matrix.
double kernel_value(TransformKind kind, int N, const IntTuple& r, const IntTuple& k);
// Same value through the explicit permutation sum (n <= 8).
double kernel_value_oracle(TransformKind kind, int N, const IntTuple& r, const IntTuple& k);

// Precomputed plan: enumerated label and grid sets (lexicographically
// descending), the kernel matrix, and both weight tables. Immutable after
// construction and safe to share across threads.
struct Transform {
  TransformKind kind;
  int N = 0;
  int n = 0;
  std::vector<IntTuple> labels;
  std::vector<IntTuple> grid;
  std::vector<double> point_weight;  // n! * prod_i c(k_i) / |S_k|  (c = 1/2 at the kind's endpoints)
  std::vector<double> gram_diag;     // (N/2)^n * prod_i h(r_i) * |S_r|  (h = 2 at the kind's endpoints)
  std::vector<std::vector<double>> kernel;  // [label index][grid index]
};

Transform make_transform(TransformKind kind, int N, int n);

// a_r = sum_k point_weight(k) f(k) K_r(k) / gram_diag(r)
std::vector<double> forward(const Transform& t, const std::vector<double>& data);
// f(k) = sum_r a_r K_r(k)
std::vector<double> inverse(const Transform& t, const std::vector<double>& coeffs);
// G[r][r'] = sum_k point_weight(k) K_r(k) K_r'(k); diagonal = gram_diag.
std::vector<std::vector<double>> gram_matrix(const Transform& t);
// | sum_k point_weight(k) f(k)^2 - sum_r gram_diag(r) a_r^2 |
double plancherel_defect_discrete(const Transform& t, const std::vector<double>& data);

}  // namespace symtrig
