// End-to-end tests against the installed CLI binary (path injected by CMake).

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include "doctest.h"
#include "symtrig/io.hpp"

namespace fs = std::filesystem;

namespace {

struct CmdResult {
  int code = -1;
  std::string out;
  std::string err;
};

fs::path work_dir() {
  static const fs::path dir = [] {
    const auto stamp = std::chrono::steady_clock::now().time_since_epoch().count();
    fs::path p = fs::temp_directory_path() / ("symtrig-cli-test-" + std::to_string(stamp));
    fs::create_directories(p);
    return p;
  }();
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

CmdResult run_cli(const std::string& args) {
  static int counter = 0;
  const fs::path out = work_dir() / ("out" + std::to_string(counter) + ".txt");
  const fs::path err = work_dir() / ("err" + std::to_string(counter) + ".txt");
  ++counter;
  const std::string cmd = std::string(SYMTRIG_CLI_PATH) + " " + args + " > " + out.string() +
                          " 2> " + err.string();
  const int status = std::system(cmd.c_str());
  CmdResult r;
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(out);
  r.err = slurp(err);
  return r;
}

}  // namespace

TEST_CASE("cli eval") {
  const CmdResult r = run_cli("eval --family cos-plus --label 2,1 --point 0.3,0.1");
  CHECK(r.code == 0);
  CHECK(std::stod(r.out) == doctest::Approx(-0.75).epsilon(1e-13));

  const CmdResult o = run_cli("eval --family sin-minus --label 3,2,1 --point 0.11,0.07,0.02");
  const CmdResult p =
      run_cli("eval --family sin-minus --label 3,2,1 --point 0.11,0.07,0.02 --oracle");
  CHECK(o.code == 0);
  CHECK(std::stod(o.out) == doctest::Approx(std::stod(p.out)).epsilon(1e-11));
}

TEST_CASE("cli validation errors exit 1") {
  const CmdResult bad_family = run_cli("eval --family bogus --label 1 --point 0.5");
  CHECK(bad_family.code == 1);
  CHECK(bad_family.err.find("error: validation:") != std::string::npos);

  const CmdResult bad_flag = run_cli("eval --family sin-minus --label 1");
  CHECK(bad_flag.code == 1);
  CHECK(bad_flag.err.find("error: validation:") != std::string::npos);

  const CmdResult no_sub = run_cli("");
  CHECK(no_sub.code == 1);

  const CmdResult bad_list = run_cli("eval --family sin-minus --label 1,x --point 0.5,0.5");
  CHECK(bad_list.code == 1);
}

TEST_CASE("cli io errors exit 2") {
  const CmdResult r = run_cli("transform --kind amdst --N 4 --in /nonexistent/data.txt --out " +
                              (work_dir() / "x.txt").string());
  CHECK(r.code == 2);
  CHECK(r.err.find("error: io:") != std::string::npos);
}

TEST_CASE("cli help exits 0") {
  CHECK(run_cli("--help").code == 0);
  CHECK(run_cli("--version").out.find("1.0.0") != std::string::npos);
}

TEST_CASE("cli enumerate") {
  const CmdResult r = run_cli("enumerate --set strict-positive --N 3 --n 2");
  CHECK(r.code == 0);
  CHECK(r.out == "3 2\n3 1\n2 1\n");
  const CmdResult g = run_cli("enumerate --grid sine-interior --N 4 --n 2");
  CHECK(g.out == "3 2\n3 1\n2 1\n");
  CHECK(run_cli("enumerate --set strict-positive --grid sine-interior --N 3 --n 2").code == 1);
  CHECK(run_cli("enumerate --N 3 --n 2").code == 1);
}

TEST_CASE("cli transform / inverse round-trip through files") {
  const fs::path data = work_dir() / "data.txt";
  const fs::path coeffs = work_dir() / "coeffs.txt";
  const fs::path back = work_dir() / "back.txt";
  std::ofstream(data) << "# samples\n3 2 0.5\n3 1 -0.25\n2 1 0.125\n";

  const CmdResult fwd = run_cli("transform --kind amdst --N 4 --in " + data.string() + " --out " +
                                coeffs.string());
  CHECK(fwd.code == 0);
  const CmdResult inv = run_cli("inverse --in " + coeffs.string() + " --out " + back.string());
  CHECK(inv.code == 0);

  const auto [tuples, values] = symtrig::read_data_file(back.string());
  REQUIRE(tuples.size() == 3);
  const std::vector<double> expect = {0.5, -0.25, 0.125};
  for (size_t i = 0; i < tuples.size(); ++i)
    CHECK(values[i] == doctest::Approx(expect[i]).epsilon(1e-12));

  // incomplete data file: a grid point is missing
  const fs::path partial = work_dir() / "partial.txt";
  std::ofstream(partial) << "3 2 0.5\n3 1 -0.25\n";
  const CmdResult bad = run_cli("transform --kind amdst --N 4 --in " + partial.string() +
                                " --out " + (work_dir() / "nope.txt").string());
  CHECK(bad.code == 2);
  CHECK(bad.err.find("missing grid point") != std::string::npos);
}

TEST_CASE("cli gram") {
  const CmdResult r = run_cli("gram --kind dct-1 --N 3");
  CHECK(r.code == 0);
  CHECK(r.out.find("max off-diagonal") != std::string::npos);
  CHECK(r.out.find("max diagonal defect") != std::string::npos);
}

TEST_CASE("cli sample") {
  const fs::path csv = work_dir() / "samples.csv";
  const CmdResult r =
      run_cli("sample --family cos-plus --label 2,1 --out " + csv.string() + " --mesh 5");
  CHECK(r.code == 0);
  const std::string body = slurp(csv);
  CHECK(body.substr(0, 12) == "x1,x2,value\n");
  // 5-point mesh on each axis, weakly descending pairs: 5*6/2 = 15 rows
  CHECK(std::count(body.begin(), body.end(), '\n') == 16);
}

TEST_CASE("cli verify fast suites") {
  const CmdResult r = run_cli("verify --suite io");
  CHECK(r.code == 0);
  CHECK(r.out.find("PASS") != std::string::npos);
  CHECK(run_cli("verify --suite nope").code == 1);
}
