#include "unruh/sweep.hpp"

#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace unruh {

namespace {

constexpr const char* kHeaderTail = "region,concurrence,fidelity,telp,purity";

// 12 significant digits; negative zero is written as 0.
void put(std::string& line, double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v + 0.0);
  line += buf;
}

double parse_double(const std::string& field, std::size_t line_no) {
  try {
    std::size_t used = 0;
    const double v = std::stod(field, &used);
    if (used != field.size()) throw std::invalid_argument(field);
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument("csv line " + std::to_string(line_no) + ": bad number '" +
                                field + "'");
  }
}

}  // namespace

void emit_csv(std::span<const SweepRow> rows, const std::string& param_name, std::ostream& out) {
  std::string line = "r_a,r_b," + param_name + "," + kHeaderTail + "\n";
  out << line;
  for (const SweepRow& r : rows) {
    line.clear();
    put(line, r.r_a);
    line += ',';
    put(line, r.r_b);
    line += ',';
    put(line, r.param);
    line += ',';
    line += to_string(r.region);
    for (double v : {r.concurrence, r.fidelity, r.telp, r.purity}) {
      line += ',';
      put(line, v);
    }
    line += '\n';
    out << line;
  }
}

void emit_csv(std::span<const SweepRow> rows, const std::string& param_name,
              const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot open '" + path + "' for writing");
  emit_csv(rows, param_name, out);
  if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

CsvTable read_csv(std::istream& in) {
  CsvTable table;
  std::string line;
  if (!std::getline(in, line)) throw std::invalid_argument("csv: empty input");

  const std::string prefix = "r_a,r_b,";
  const std::string suffix = std::string(",") + kHeaderTail;
  if (line.size() <= prefix.size() + suffix.size() || line.rfind(prefix, 0) != 0 ||
      line.compare(line.size() - suffix.size(), suffix.size(), suffix) != 0)
    throw std::invalid_argument("csv: unexpected header '" + line + "'");
  table.param_name = line.substr(prefix.size(), line.size() - prefix.size() - suffix.size());

  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::vector<std::string> f;
    std::stringstream ss(line);
    for (std::string cell; std::getline(ss, cell, ',');) f.push_back(cell);
    if (f.size() != 8)
      throw std::invalid_argument("csv line " + std::to_string(line_no) + ": expected 8 fields");
    SweepRow r;
    r.r_a = parse_double(f[0], line_no);
    r.r_b = parse_double(f[1], line_no);
    r.param = parse_double(f[2], line_no);
    r.region = parse_region(f[3]);
    r.concurrence = parse_double(f[4], line_no);
    r.fidelity = parse_double(f[5], line_no);
    r.telp = parse_double(f[6], line_no);
    r.purity = parse_double(f[7], line_no);
    table.rows.push_back(r);
  }
  return table;
}

}  // namespace unruh
