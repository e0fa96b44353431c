// Command-line front end: evaluate family members, run the discrete
// transforms against data files, and drive the verification suites.

#include <algorithm>
#include <cstdio>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "symtrig/continuous.hpp"
#include "symtrig/discrete.hpp"
#include "symtrig/io.hpp"
#include "symtrig/kernel.hpp"
#include "symtrig/symmetry.hpp"
#include "symtrig/verify.hpp"

namespace {

using namespace symtrig;

Family parse_family(const std::string& s) {
  if (s == "sin-minus") return Family::SinMinus;
  if (s == "sin-plus") return Family::SinPlus;
  if (s == "cos-minus") return Family::CosMinus;
  if (s == "cos-plus") return Family::CosPlus;
  throw std::invalid_argument("unknown family '" + s +
                              "' (expected sin-minus, sin-plus, cos-minus, cos-plus)");
}

AngularConvention parse_conv(const std::string& s) {
  if (s == "twopi") return AngularConvention::TwoPi;
  if (s == "pi") return AngularConvention::Pi;
  throw std::invalid_argument("unknown convention '" + s + "' (expected twopi or pi)");
}

std::vector<double> parse_reals(const std::string& csv, const char* what) {
  std::vector<double> out;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(tok, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument(std::string(what) + ": cannot parse '" + tok + "'");
    }
    if (used != tok.size())
      throw std::invalid_argument(std::string(what) + ": trailing characters in '" + tok + "'");
    out.push_back(v);
  }
  if (out.empty()) throw std::invalid_argument(std::string(what) + ": empty list");
  return out;
}

std::string tuple_to_string(const IntTuple& t) {
  std::string s;
  for (size_t i = 0; i < t.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(t[i]);
  }
  return s;
}

LabelSetKind parse_label_set(const std::string& s) {
  if (s == "strict-positive") return LabelSetKind::StrictPositive;
  if (s == "weak-nonneg") return LabelSetKind::WeakNonneg;
  if (s == "sine-grid") return LabelSetKind::SineGrid;
  if (s == "strict-with-zero") return LabelSetKind::StrictWithZero;
  if (s == "weak-bounded") return LabelSetKind::WeakBounded;
  if (s == "variant-strict") return LabelSetKind::VariantStrict;
  if (s == "variant-weak") return LabelSetKind::VariantWeak;
  throw std::invalid_argument(
      "unknown label set '" + s +
      "' (strict-positive, weak-nonneg, sine-grid, strict-with-zero, weak-bounded, "
      "variant-strict, variant-weak)");
}

GridKind parse_grid_kind(const std::string& s) {
  if (s == "sine-interior") return GridKind::SineInterior;
  if (s == "cosine-closed") return GridKind::CosineClosed;
  if (s == "variant-half-open") return GridKind::VariantHalfOpen;
  throw std::invalid_argument("unknown grid '" + s +
                              "' (sine-interior, cosine-closed, variant-half-open)");
}

// Reorders file records onto the canonical grid enumeration of the transform.
std::vector<double> canonical_data(const Transform& t, const std::vector<IntTuple>& tuples,
                                   const std::vector<double>& values, const std::string& path) {
  std::map<IntTuple, double> lookup;
  for (size_t i = 0; i < tuples.size(); ++i) {
    if (static_cast<int>(tuples[i].size()) != t.n)
      throw io_error(path + ": record arity " + std::to_string(tuples[i].size()) +
                     " does not match n = " + std::to_string(t.n));
    if (!lookup.emplace(tuples[i], values[i]).second)
      throw io_error(path + ": duplicate grid point " + tuple_to_string(tuples[i]));
  }
  std::vector<double> data(t.grid.size());
  for (size_t g = 0; g < t.grid.size(); ++g) {
    auto it = lookup.find(t.grid[g]);
    if (it == lookup.end())
      throw io_error(path + ": missing grid point " + tuple_to_string(t.grid[g]));
    data[g] = it->second;
  }
  if (lookup.size() != t.grid.size())
    throw io_error(path + ": contains points outside the transform grid");
  return data;
}

int run(int argc, char** argv) {
  CLI::App app{"(anti)symmetric multivariate trigonometric functions and transforms"};
  app.set_version_flag("--version", "symtrig 1.0.0");
  app.require_subcommand(1);
  int exit_code = 0;

  // ---- eval ----
  auto* eval_cmd = app.add_subcommand("eval", "evaluate one family member at a point");
  std::string eval_family, eval_conv = "twopi", eval_label, eval_point;
  bool eval_oracle_flag = false;
  eval_cmd->add_option("--family", eval_family, "sin-minus | sin-plus | cos-minus | cos-plus")
      ->required();
  eval_cmd->add_option("--conv", eval_conv, "twopi | pi (default twopi)");
  eval_cmd->add_option("--label", eval_label, "comma-separated label, e.g. 3,2,1")->required();
  eval_cmd->add_option("--point", eval_point, "comma-separated point, e.g. 0.3,0.2,0.1")
      ->required();
  eval_cmd->add_flag("--oracle", eval_oracle_flag, "use the permutation-sum oracle (n <= 8)");
  eval_cmd->callback([&] {
    const Family f = parse_family(eval_family);
    const AngularConvention conv = parse_conv(eval_conv);
    const Label l = parse_reals(eval_label, "--label");
    const Point x = parse_reals(eval_point, "--point");
    const double v = eval_oracle_flag ? evaluate_oracle(f, conv, l, x) : evaluate(f, conv, l, x);
    std::printf("%s\n", format_value(v).c_str());
  });

  // ---- transform ----
  auto* fwd_cmd = app.add_subcommand("transform", "forward transform of a sampled data file");
  std::string fwd_kind, fwd_in, fwd_out;
  int fwd_N = 0, fwd_n = 0;
  fwd_cmd->add_option("--kind", fwd_kind, "transform kind, e.g. amdst, smdct-2, dct-4")
      ->required();
  fwd_cmd->add_option("--N", fwd_N, "grid size parameter")->required();
  fwd_cmd->add_option("--n", fwd_n, "dimension (default: inferred from the data file)");
  fwd_cmd->add_option("--in", fwd_in, "input data file (grid numerators + value per line)")
      ->required();
  fwd_cmd->add_option("--out", fwd_out, "output coefficient file")->required();
  fwd_cmd->callback([&] {
    const TransformKind kind = parse_kind(fwd_kind);
    auto [tuples, values] = read_data_file(fwd_in);
    if (tuples.empty()) throw io_error(fwd_in + ": no records");
    const int n = fwd_n > 0 ? fwd_n : static_cast<int>(tuples.front().size());
    const Transform t = make_transform(kind, fwd_N, n);
    const std::vector<double> data = canonical_data(t, tuples, values, fwd_in);
    CoefficientFile file;
    file.kind = kind;
    file.N = fwd_N;
    file.n = n;
    file.labels = t.labels;
    file.values = forward(t, data);
    write_coefficient_file(fwd_out, file);
    std::printf("wrote %zu coefficients to %s\n", file.values.size(), fwd_out.c_str());
  });

  // ---- inverse ----
  auto* inv_cmd = app.add_subcommand("inverse", "reconstruct grid data from a coefficient file");
  std::string inv_in, inv_out;
  inv_cmd->add_option("--in", inv_in, "input coefficient file (self-describing)")->required();
  inv_cmd->add_option("--out", inv_out, "output data file")->required();
  inv_cmd->callback([&] {
    const CoefficientFile file = read_coefficient_file(inv_in);
    const Transform t = make_transform(file.kind, file.N, file.n);
    std::map<IntTuple, double> lookup;
    for (size_t i = 0; i < file.labels.size(); ++i) lookup[file.labels[i]] = file.values[i];
    std::vector<double> coeffs(t.labels.size());
    for (size_t i = 0; i < t.labels.size(); ++i) {
      auto it = lookup.find(t.labels[i]);
      if (it == lookup.end())
        throw io_error(inv_in + ": missing label " + tuple_to_string(t.labels[i]));
      coeffs[i] = it->second;
    }
    const std::vector<double> data = inverse(t, coeffs);
    write_data_file(inv_out, t.grid, data,
                    std::string("reconstructed from ") + kind_name(file.kind) +
                        " coefficients, N = " + std::to_string(file.N));
    std::printf("wrote %zu grid values to %s\n", data.size(), inv_out.c_str());
  });

  // ---- gram ----
  auto* gram_cmd = app.add_subcommand("gram", "weighted Gram matrix of a transform's kernel rows");
  std::string gram_kind, gram_out;
  int gram_N = 0, gram_n = 1;
  gram_cmd->add_option("--kind", gram_kind, "transform kind")->required();
  gram_cmd->add_option("--N", gram_N, "grid size parameter")->required();
  gram_cmd->add_option("--n", gram_n, "dimension (default 1)");
  gram_cmd->add_option("--out", gram_out, "write the matrix to a file instead of stdout");
  gram_cmd->callback([&] {
    const Transform t = make_transform(parse_kind(gram_kind), gram_N, gram_n);
    const auto gram = gram_matrix(t);
    double off = 0.0, diag = 0.0;
    std::string body;
    for (size_t a = 0; a < gram.size(); ++a) {
      for (size_t b = 0; b < gram.size(); ++b) {
        if (b) body += ' ';
        body += format_value(gram[a][b]);
        if (a == b)
          diag = std::max(diag, std::abs(gram[a][b] - t.gram_diag[a]));
        else
          off = std::max(off, std::abs(gram[a][b]));
      }
      body += '\n';
    }
    if (gram_out.empty())
      std::fputs(body.c_str(), stdout);
    else
      atomic_write_text(gram_out, body);
    std::printf("max off-diagonal %s\n", format_value(off).c_str());
    std::printf("max diagonal defect %s\n", format_value(diag).c_str());
  });

  // ---- verify ----
  auto* verify_cmd = app.add_subcommand("verify", "run the library's invariant checks");
  VerifyOptions vopt;
  std::string suite = "all";
  verify_cmd->add_option("--suite", suite, "kernel | symmetry | continuous | discrete | io | all");
  verify_cmd->add_option("--N", vopt.N, "discrete size used by the checks (default 4)");
  verify_cmd->add_option("--n", vopt.n, "dimension used by the checks (default 2)");
  verify_cmd->add_option("--quad-points", vopt.quad_points,
                         "Gauss-Legendre points per axis (default 32)");
  verify_cmd->add_option("--tol", vopt.tol_override,
                         "override every check's tolerance (0 keeps the defaults)");
  verify_cmd->callback([&] {
    const std::vector<CheckResult> results = run_suite(suite, vopt);
    size_t passed = 0;
    for (const CheckResult& r : results) {
      if (r.pass) ++passed;
      std::printf("%s %s/%s: defect %.3e (tol %.3e)%s%s\n", r.pass ? "PASS" : "FAIL",
                  r.suite.c_str(), r.name.c_str(), r.max_defect, r.tolerance,
                  r.detail.empty() ? "" : " -- ", r.detail.c_str());
    }
    std::printf("%zu/%zu checks passed\n", passed, results.size());
    if (passed != results.size()) {
      std::fprintf(stderr, "error: verification: %zu check(s) failed\n",
                   results.size() - passed);
      exit_code = 3;
    }
  });

  // ---- enumerate ----
  auto* enum_cmd = app.add_subcommand("enumerate", "list a dominant label set or grid");
  std::string enum_set, enum_grid;
  int enum_N = 0, enum_n = 0;
  enum_cmd->add_option("--set", enum_set, "label set name, e.g. strict-positive");
  enum_cmd->add_option("--grid", enum_grid, "grid name, e.g. sine-interior");
  enum_cmd->add_option("--N", enum_N, "bound parameter")->required();
  enum_cmd->add_option("--n", enum_n, "tuple length")->required();
  enum_cmd->callback([&] {
    if (enum_set.empty() == enum_grid.empty())
      throw std::invalid_argument("enumerate: pass exactly one of --set or --grid");
    const std::vector<IntTuple> tuples =
        enum_set.empty() ? enumerate_grid(parse_grid_kind(enum_grid), enum_N, enum_n)
                         : enumerate_labels(parse_label_set(enum_set), enum_N, enum_n);
    for (const IntTuple& t : tuples) std::printf("%s\n", tuple_to_string(t).c_str());
  });

  // ---- sample ----
  auto* sample_cmd = app.add_subcommand("sample", "CSV samples over the fundamental domain");
  std::string sample_family, sample_conv = "twopi", sample_label, sample_out;
  int mesh = 101;
  sample_cmd->add_option("--family", sample_family, "family name")->required();
  sample_cmd->add_option("--conv", sample_conv, "twopi | pi (default twopi)");
  sample_cmd->add_option("--label", sample_label, "comma-separated label")->required();
  sample_cmd->add_option("--out", sample_out, "output CSV file")->required();
  sample_cmd->add_option("--mesh", mesh, "mesh points per axis (default 101)");
  sample_cmd->callback([&] {
    if (mesh < 2) throw std::invalid_argument("sample: --mesh must be at least 2");
    const Family f = parse_family(sample_family);
    const AngularConvention conv = parse_conv(sample_conv);
    const Label l = parse_reals(sample_label, "--label");
    const int n = static_cast<int>(l.size());
    const double hi = conv == AngularConvention::TwoPi ? 0.5 : 1.0;
    std::string csv;
    for (int i = 1; i <= n; ++i) csv += "x" + std::to_string(i) + ",";
    csv += "value\n";
    std::vector<int> idx(static_cast<size_t>(n), 0);
    Point x(static_cast<size_t>(n));
    size_t rows = 0;
    for (;;) {
      bool descending = true;
      for (int a = 0; a + 1 < n; ++a)
        if (idx[static_cast<size_t>(a)] < idx[static_cast<size_t>(a + 1)]) descending = false;
      if (descending) {
        for (int a = 0; a < n; ++a)
          x[static_cast<size_t>(a)] = hi * idx[static_cast<size_t>(a)] / (mesh - 1);
        for (int a = 0; a < n; ++a) csv += format_value(x[static_cast<size_t>(a)]) + ",";
        csv += format_value(evaluate(f, conv, l, x)) + "\n";
        ++rows;
      }
      int a = n - 1;
      while (a >= 0 && ++idx[static_cast<size_t>(a)] == mesh) {
        idx[static_cast<size_t>(a)] = 0;
        --a;
      }
      if (a < 0) break;
    }
    atomic_write_text(sample_out, csv);
    std::printf("wrote %zu samples to %s\n", rows, sample_out.c_str());
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help / --version
    std::fprintf(stderr, "error: validation: %s\n", e.what());
    return 1;
  }
  return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const symtrig::io_error& e) {
    std::fprintf(stderr, "error: io: %s\n", e.what());
    return 2;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: validation: %s\n", e.what());
    return 1;
  } catch (const std::length_error& e) {
    std::fprintf(stderr, "error: validation: %s\n", e.what());
    return 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: internal: %s\n", e.what());
    return 1;
  }
}
