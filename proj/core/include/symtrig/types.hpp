#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace symtrig {

// The four function families: determinant-based ("minus", alternating under
// coordinate or label permutation) and permanent-based ("plus", invariant).
enum class Family { SinMinus, SinPlus, CosMinus, CosPlus };

// Whether the 1-D kernel is sin/cos(2 pi lambda x) or sin/cos(pi lambda x).
// The two are related by TwoPi(lambda, x) == Pi(lambda, 2x).
enum class AngularConvention { TwoPi, Pi };

using Label = std::vector<double>;   // real label (lambda_1, ..., lambda_n)
using Point = std::vector<double>;   // point in R^n
using IntTuple = std::vector<int>;   // integer labels and grid numerators

constexpr bool is_minus(Family f) {
  return f == Family::SinMinus || f == Family::CosMinus;
}
constexpr bool is_sine(Family f) {
  return f == Family::SinMinus || f == Family::SinPlus;
}

const char* family_name(Family f);
const char* convention_name(AngularConvention c);

// File-level failures (open, read, write, malformed document).
// The CLI maps this to exit code 2; validation errors (std::invalid_argument)
// map to exit code 1.
struct io_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace symtrig
