// unruh: command-line front end.
//
//   unruh state  [family flags] [--ra R --rb R] [--region SEL]... [--measures LIST]
//   unruh sweep  [family flags] [--grid N] [--lock-acc | --stationary WHO] ...
//   unruh report [--grid N] [--samples M] [--seed S] [--out PATH]
//
// Exit codes: 0 success, 2 configuration error, 3 numeric-invariant violation.

#include "unruh/config.hpp"
#include "unruh/figure.hpp"
#include "unruh/report.hpp"
#include "unruh/sweep.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitNumeric = 3;

constexpr const char* kUsage =
    "usage: unruh <state|sweep|report> [options]\n"
    "       unruh <command> --help\n";

// Prints roundoff-level values as 0 rather than -0.000000.
double clean(double v) { return std::abs(v) < 5e-13 ? 0.0 : v; }

void print_matrix(std::ostream& os, const unruh::Matrix4c& m) {
  char buf[64];
  for (int i = 0; i < 4; ++i) {
    os << "  ";
    for (int j = 0; j < 4; ++j) {
      std::snprintf(buf, sizeof buf, " %+.6f%+.6fi", clean(m(i, j).real()), clean(m(i, j).imag()));
      os << buf;
    }
    os << '\n';
  }
}

void print_bloch(std::ostream& os, const unruh::BlochForm& b) {
  char buf[160];
  std::snprintf(buf, sizeof buf, "  s = (%.6f, %.6f, %.6f)\n  t = (%.6f, %.6f, %.6f)\n",
                clean(b.s[0]), clean(b.s[1]), clean(b.s[2]), clean(b.t[0]), clean(b.t[1]),
                clean(b.t[2]));
  os << buf;
  for (int i = 0; i < 3; ++i) {
    std::snprintf(buf, sizeof buf, "  %s [%.6f, %.6f, %.6f]\n", i == 0 ? "C =" : "   ",
                  clean(b.c(i, 0)), clean(b.c(i, 1)), clean(b.c(i, 2)));
    os << buf;
  }
}

void print_measures(std::ostream& os, const unruh::MeasureReport& m,
                    const std::vector<unruh::Measure>& which) {
  char buf[64];
  for (unruh::Measure k : which) {
    switch (k) {
      case unruh::Measure::Concurrence:
        std::snprintf(buf, sizeof buf, "%.12g", m.concurrence);
        break;
      case unruh::Measure::Fidelity:
        std::snprintf(buf, sizeof buf, "%.12g", m.fidelity);
        break;
      case unruh::Measure::Telp:
        std::snprintf(buf, sizeof buf, "%.12g", m.telp);
        break;
      case unruh::Measure::Purity:
        std::snprintf(buf, sizeof buf, "%.12g", m.purity);
        break;
      case unruh::Measure::Separability:
        std::snprintf(buf, sizeof buf, "%s", unruh::to_string(m.separable_verdict).c_str());
        break;
    }
    os << "  " << unruh::to_string(k) << ": " << buf << '\n';
  }
}

int run_state(const std::vector<std::string>& args) {
  const unruh::StateConfig cfg = unruh::parse_state_args(args);
  const unruh::DensityMatrix rho = unruh::make_state(cfg.family);
  std::ostream& os = std::cout;

  os << "family: " << unruh::family_name(cfg.family) << '\n';
  os << "rho:\n";
  print_matrix(os, rho.as4());
  print_bloch(os, unruh::density_to_bloch(rho));
  os << "validation: " << unruh::validate_density(rho).describe() << '\n';

  const unruh::AccelerationPair acc(cfg.r_a, cfg.r_b);
  char buf[96];
  std::snprintf(buf, sizeof buf, "r_a = %.12g, r_b = %.12g\n", cfg.r_a, cfg.r_b);
  os << '\n' << buf;
  for (const unruh::RegionSelector& sel : cfg.regions) {
    const unruh::DensityMatrix out = unruh::channel(rho, acc, sel);
    const unruh::ValidationReport rep = unruh::validate_density(out);
    if (!rep.passed())
      throw unruh::NumericError("region " + unruh::to_string(sel) + ": " + rep.describe());
    os << "\nregion " << unruh::to_string(sel) << ":\n";
    print_matrix(os, out.as4());
    print_measures(os, unruh::measure(out, rho), cfg.measures);
  }
  return kExitOk;
}

int run_sweep(const std::vector<std::string>& args) {
  const unruh::SweepOptions opt = unruh::parse_sweep_args(args);
  const unruh::SweepConfig& cfg = opt.config;
  const std::vector<unruh::SweepRow> rows =
      opt.serial ? unruh::run_sweep_serial(cfg) : unruh::run_sweep(cfg);
  const std::string param = unruh::param_column(cfg);

  if (cfg.format != unruh::OutputFormat::Plot) {
    if (cfg.out_path.empty())
      unruh::emit_csv(rows, param, std::cout);
    else
      unruh::emit_csv(rows, param, cfg.out_path);
  }
  if (cfg.format != unruh::OutputFormat::Csv) {
    std::filesystem::path stem(cfg.out_path);
    stem.replace_extension();
    for (const std::string& f :
         unruh::render_sweep_figures(rows, cfg, cfg.out_path, stem.string()))
      std::cerr << "wrote " << f << '\n';
  }
  return kExitOk;
}

int run_report(const std::vector<std::string>& args) {
  const unruh::ReportConfig cfg = unruh::parse_report_args(args);
  const std::string text = unruh::discrepancy_report(cfg).to_text();
  if (cfg.out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(cfg.out_path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open '" + cfg.out_path + "' for writing");
    out << text;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << kUsage;
    return kExitConfig;
  }
  const std::string cmd = argv[1];
  const std::vector<std::string> args(argv + 2, argv + argc);
  try {
    if (cmd == "state") return run_state(args);
    if (cmd == "sweep") return run_sweep(args);
    if (cmd == "report") return run_report(args);
    if (cmd == "-h" || cmd == "--help") {
      std::cout << kUsage;
      return kExitOk;
    }
    std::cerr << "unruh: unknown command '" << cmd << "'\n" << kUsage;
    return kExitConfig;
  } catch (const unruh::HelpRequested& h) {
    std::cout << h.text;
    return kExitOk;
  } catch (const unruh::NumericError& e) {
    std::cerr << "unruh: numeric invariant violated: " << e.what() << '\n';
    return kExitNumeric;
  } catch (const std::invalid_argument& e) {
    std::cerr << "unruh: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "unruh: " << e.what() << '\n';
    return 1;
  }
}
