#pragma once

#include <string>
#include <utility>

#include "symtrig/discrete.hpp"
#include "symtrig/types.hpp"

namespace symtrig {

// Self-describing coefficient document:
//   # comments and blank lines anywhere
//   kind <name>
//   N <int>
//   n <int>
//   <label ints...> <coefficient>     (one record per line)
// Values are printed with %.17g so exactly representable coefficients
// round-trip bit-identically.
struct CoefficientFile {
  TransformKind kind = TransformKind::Amdst;
  int N = 0;
  int n = 0;
  std::vector<IntTuple> labels;
  std::vector<double> values;
};

void write_coefficient_file(const std::string& path, const CoefficientFile& file);
CoefficientFile read_coefficient_file(const std::string& path);

// Plain data records: integer grid numerators then the value, one grid point
// per line, # comments. The reader returns records in file order; callers
// reorder against a kind's canonical grid enumeration.
void write_data_file(const std::string& path, const std::vector<IntTuple>& grid,
                     const std::vector<double>& values, const std::string& comment);
std::pair<std::vector<IntTuple>, std::vector<double>> read_data_file(const std::string& path);

// Writes content to a temporary file in the target directory and renames it
// into place, so readers never observe partial output.
void atomic_write_text(const std::string& path, const std::string& content);

std::string format_value(double v);  // %.17g

}  // namespace symtrig
