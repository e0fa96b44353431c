#pragma once

#include "symtrig/types.hpp"

namespace symtrig {

// Element of the extended affine symmetric group: a permutation, per-coordinate
// sign flips, and integer translations. Action on a point (permute, then flip,
// then shift):
//   act(g, x)[i] = signs[i] * x[perm[i]] + shifts[i]
struct GroupElement {
  std::vector<int> perm;    // 0-based; perm[i] is the source coordinate of slot i
  std::vector<int> signs;   // each +1 or -1
  std::vector<int> shifts;  // integer translations
};

GroupElement identity_element(int n);

// act(compose(a, b), x) == act(a, act(b, x))
GroupElement compose(const GroupElement& a, const GroupElement& b);
GroupElement inverse(const GroupElement& g);

int permutation_parity(const std::vector<int>& perm);  // +1 or -1
int parity(const GroupElement& g);                     // parity of the permutation part
int flip_count(const GroupElement& g);                 // number of -1 signs

Point act(const GroupElement& g, const Point& x);

// Representative of x in the closed fundamental domain
// 1/2 >= x1 >= x2 >= ... >= xn >= 0, found by reducing mod 1, reflecting
// t -> 1 - t where t > 1/2, and sorting descending.
//
// For integer labels m (TwoPi convention): mod-1 shifts leave every family
// unchanged; each reflection negates the sine families and fixes the cosine
// families; sorting multiplies the minus families by the permutation parity.
// Hence e.g. evaluate(SinMinus, TwoPi, m, x)
//        == perm_sign * flip_parity * evaluate(SinMinus, TwoPi, m, point).
struct FoldResult {
  Point point;
  int perm_sign;    // parity of the sorting permutation
  int flip_parity;  // (-1)^(number of reflections applied)
};
FoldResult fold(const Point& x);

// Number of permutations fixing the tuple: the product of factorials of the
// multiplicities of repeated values.
long long stabilizer_order(const IntTuple& m);
long long stabilizer_order(const Label& m);

// Dominant label sets, enumerated in lexicographically descending order.
//   StrictPositive:  N >= m1 >  ... >  mn >= 1
//   WeakNonneg:      N >= m1 >= ... >= mn >= 0   (bounded truncation)
//   SineGrid:        N >  m1 >  ... >  mn >  0   -> C(N-1, n) tuples
//   StrictWithZero:  N >= m1 >  ... >  mn >= 0   -> C(N+1, n) tuples
//   WeakBounded:     N >= m1 >= ... >= mn >= 0   -> C(N+n, n) tuples
//   VariantStrict:   N-1 >= m1 >  ... >  mn >= 0
//   VariantWeak:     N-1 >= m1 >= ... >= mn >= 0
enum class LabelSetKind {
  StrictPositive,
  WeakNonneg,
  SineGrid,
  StrictWithZero,
  WeakBounded,
  VariantStrict,
  VariantWeak,
};
std::vector<IntTuple> enumerate_labels(LabelSetKind kind, int N, int n);

// Grids as integer numerators k of points k/N, same descending order.
//   SineInterior:   strictly descending in {1..N-1}
//   CosineClosed:   weakly descending in {0..N}
//   VariantHalfOpen: weakly descending in {0..N-1} (the antisymmetric variants
//                    use its strictly-descending subset via enumerate_labels)
enum class GridKind { SineInterior, CosineClosed, VariantHalfOpen };
std::vector<IntTuple> enumerate_grid(GridKind kind, int N, int n);

unsigned long long binomial(int n, int k);
long long factorial(int n);

}  // namespace symtrig
