#include "symtrig/io.hpp"

#include <cerrno>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>

namespace symtrig {

std::string format_value(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void atomic_write_text(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw io_error("cannot open for writing: " + tmp);
    out << content;
    out.flush();
    if (!out) {
      std::remove(tmp.c_str());
      throw io_error("write failed: " + tmp);
    }
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) {
    const int err = errno;
    std::remove(tmp.c_str());
    throw io_error("rename failed for " + path + ": " + std::strerror(err));
  }
}

namespace {

// Strips comments and whitespace; returns false for blank lines.
bool payload(const std::string& line, std::string& out) {
  const size_t hash = line.find('#');
  out = line.substr(0, hash == std::string::npos ? line.size() : hash);
  const size_t a = out.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return false;
  const size_t b = out.find_last_not_of(" \t\r\n");
  out = out.substr(a, b - a + 1);
  return true;
}

std::vector<std::string> read_payload_lines(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw io_error("cannot open for reading: " + path);
  std::vector<std::string> lines;
  std::string line, body;
  while (std::getline(in, line)) {
    if (payload(line, body)) lines.push_back(body);
  }
  if (in.bad()) throw io_error("read failed: " + path);
  return lines;
}

// Parses "k1 k2 ... kn value" into an n-tuple and a double.
void parse_record(const std::string& body, const std::string& path, IntTuple& tuple, double& value) {
  std::istringstream ss(body);
  std::vector<std::string> tokens;
  std::string tok;
  while (ss >> tok) tokens.push_back(tok);
  if (tokens.size() < 2)
    throw io_error("malformed record in " + path + ": '" + body + "'");
  tuple.clear();
  for (size_t i = 0; i + 1 < tokens.size(); ++i) {
    size_t pos = 0;
    int v = 0;
    try {
      v = std::stoi(tokens[i], &pos);
    } catch (const std::exception&) {
      throw io_error("bad integer '" + tokens[i] + "' in " + path);
    }
    if (pos != tokens[i].size()) throw io_error("bad integer '" + tokens[i] + "' in " + path);
    tuple.push_back(v);
  }
  size_t pos = 0;
  try {
    value = std::stod(tokens.back(), &pos);
  } catch (const std::exception&) {
    throw io_error("bad value '" + tokens.back() + "' in " + path);
  }
  if (pos != tokens.back().size()) throw io_error("bad value '" + tokens.back() + "' in " + path);
}

}  // namespace

void write_coefficient_file(const std::string& path, const CoefficientFile& file) {
  if (file.labels.size() != file.values.size())
    throw std::invalid_argument("write_coefficient_file: ragged label/value lists");
  std::ostringstream out;
  out << "# coefficient file\n";
  out << "kind " << kind_name(file.kind) << "\n";
  out << "N " << file.N << "\n";
  out << "n " << file.n << "\n";
  for (size_t i = 0; i < file.labels.size(); ++i) {
    for (int v : file.labels[i]) out << v << ' ';
    out << format_value(file.values[i]) << "\n";
  }
  atomic_write_text(path, out.str());
}

CoefficientFile read_coefficient_file(const std::string& path) {
  CoefficientFile file;
  bool have_kind = false, have_N = false, have_n = false;
  for (const std::string& body : read_payload_lines(path)) {
    std::istringstream ss(body);
    std::string key;
    ss >> key;
    if (key == "kind") {
      std::string name;
      if (!(ss >> name)) throw io_error("missing kind name in " + path);
      try {
        file.kind = parse_kind(name);
      } catch (const std::invalid_argument& e) {
        throw io_error(std::string(e.what()) + " in " + path);
      }
      have_kind = true;
    } else if (key == "N") {
      if (!(ss >> file.N)) throw io_error("bad N header in " + path);
      have_N = true;
    } else if (key == "n") {
      if (!(ss >> file.n)) throw io_error("bad n header in " + path);
      have_n = true;
    } else {
      if (!have_kind || !have_N || !have_n)
        throw io_error("record before kind/N/n headers in " + path);
      IntTuple tuple;
      double value = 0.0;
      parse_record(body, path, tuple, value);
      if (static_cast<int>(tuple.size()) != file.n)
        throw io_error("label arity mismatch in " + path + ": '" + body + "'");
      file.labels.push_back(std::move(tuple));
      file.values.push_back(value);
    }
  }
  if (!have_kind || !have_N || !have_n)
    throw io_error("missing kind/N/n headers in " + path);
  return file;
}

void write_data_file(const std::string& path, const std::vector<IntTuple>& grid,
                     const std::vector<double>& values, const std::string& comment) {
  if (grid.size() != values.size())
    throw std::invalid_argument("write_data_file: ragged grid/value lists");
  std::ostringstream out;
  if (!comment.empty()) out << "# " << comment << "\n";
  for (size_t i = 0; i < grid.size(); ++i) {
    for (int v : grid[i]) out << v << ' ';
    out << format_value(values[i]) << "\n";
  }
  atomic_write_text(path, out.str());
}

std::pair<std::vector<IntTuple>, std::vector<double>> read_data_file(const std::string& path) {
  std::vector<IntTuple> grid;
  std::vector<double> values;
  for (const std::string& body : read_payload_lines(path)) {
    IntTuple tuple;
    double value = 0.0;
    parse_record(body, path, tuple, value);
    if (!grid.empty() && tuple.size() != grid.front().size())
      throw io_error("inconsistent record arity in " + path + ": '" + body + "'");
    grid.push_back(std::move(tuple));
    values.push_back(value);
  }
  return {std::move(grid), std::move(values)};
}

}  // namespace symtrig
