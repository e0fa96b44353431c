#pragma once

#include <string>

#include "symtrig/types.hpp"

namespace symtrig {

// One invariant check: pass/fail plus the measured worst defect and the
// tolerance it was held against.
struct CheckResult {
  std::string suite;
  std::string name;
  bool pass = false;
  double max_defect = 0.0;
  double tolerance = 0.0;
  std::string detail;
};

struct VerifyOptions {
  int N = 4;            // primary discrete size
  int n = 2;            // primary multivariate dimension
  int quad_points = 32; // Gauss-Legendre points per axis
  double tol_override = 0.0;  // > 0 replaces every check's default tolerance
};

const std::vector<std::string>& verify_suites();  // kernel, symmetry, continuous, discrete, io

// Runs one suite ("all" for every suite) with deterministic seeds.
std::vector<CheckResult> run_suite(const std::string& suite, const VerifyOptions& opt);

}  // namespace symtrig
