#include "unruh/report.hpp"

#include "unruh/channel.hpp"
#include "unruh/measures.hpp"
#include "unruh/sweep.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

namespace unruh {

namespace {

std::string entry_label(int row, int col) {
  return "(" + std::to_string(row + 1) + "," + std::to_string(col + 1) + ")";
}

// Running maxima for one group of compared quantities.
class Group {
 public:
  Group(std::string name, std::vector<std::string> keys, std::set<std::string> expected)
      : name_(std::move(name)), keys_(std::move(keys)), expected_(std::move(expected)),
        dev_(keys_.size(), 0.0) {}

  void update(const std::vector<double>& printed, const std::vector<double>& canonical) {
    for (std::size_t k = 0; k < keys_.size(); ++k)
      dev_[k] = std::max(dev_[k], std::abs(printed[k] - canonical[k]));
  }

  void update(const Matrix4c& printed, const Matrix4c& canonical) {
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        dev_[4 * i + j] = std::max(dev_[4 * i + j], std::abs(printed(i, j) - canonical(i, j)));
  }

  void append_to(std::vector<ReportItem>& out) const {
    for (std::size_t k = 0; k < keys_.size(); ++k)
      out.push_back({name_, keys_[k], dev_[k], expected_.count(keys_[k]) > 0});
  }

 private:
  std::string name_;
  std::vector<std::string> keys_;
  std::set<std::string> expected_;
  std::vector<double> dev_;
};

std::vector<std::string> matrix_keys() {
  std::vector<std::string> keys;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) keys.push_back(entry_label(i, j));
  return keys;
}

std::set<std::string> labels(const std::vector<EntryIndex>& idx) {
  std::set<std::string> out;
  for (const EntryIndex& e : idx) out.insert(entry_label(e.row, e.col));
  return out;
}

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  Matrix4c density() {
    std::normal_distribution<double> n(0.0, 1.0);
    Matrix4c g;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) g(i, j) = cplx(n(rng_), n(rng_));
    Matrix4c r = g * g.adjoint();
    r /= r.trace().real();
    return 0.5 * (r + r.adjoint());
  }

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }

  GeneralizedWerner gwerner() {
    for (;;) {
      const GeneralizedWerner g{uniform(-1, 1), uniform(-1, 1), uniform(-1, 1)};
      if (std::abs(g.cxx - g.cyy) <= 1 + g.czz && std::abs(g.cxx + g.cyy) <= 1 - g.czz) return g;
    }
  }

 private:
  std::mt19937_64 rng_;
};

struct Trig {
  double C1, S1, C2, S2, c2a, c2b;
  Trig(double ra, double rb)
      : C1(std::cos(ra)), S1(std::sin(ra)), C2(std::cos(rb)), S2(std::sin(rb)),
        c2a(std::cos(2 * ra)), c2b(std::cos(2 * rb)) {}
};

Matrix4c region(const Matrix4c& rho, double ra, double rb, const RegionSelector& sel) {
  return project_region(dilate(rho, AccelerationPair(ra, rb)), sel);
}

constexpr RegionSelector kII_II{Wedge::II, Wedge::II};

// Printed density-matrix entries in terms of Bloch data (the (4,4) entry is
// not given).
Matrix4c printed_entries(const BlochForm& b) {
  const double sx = b.s[0], sy = b.s[1], sz = b.s[2];
  const double tx = b.t[0], ty = b.t[1], tz = b.t[2];
  const auto& c = b.c;
  const double cxx = c(0, 0), cxy = c(0, 1), cxz = c(0, 2);
  const double cyx = c(1, 0), cyy = c(1, 1), cyz = c(1, 2);
  const double czx = c(2, 0), czy = c(2, 1), czz = c(2, 2);
  const cplx I(0.0, 1.0);
  Matrix4c m;
  m(0, 0) = 1 + sz + tz + czz;
  m(0, 1) = tx - I * ty + czx + I * czy;
  m(0, 2) = sx - I * sy + cxz - I * cyz;
  m(0, 3) = cxx - I * cxy - I * cyx - cyy;
  m(1, 0) = tx - I * ty + czx + I * czy;
  m(1, 1) = 1 + sz + tz - czz;
  m(1, 2) = cxx + I * cxy - I * cyx + cyy;
  m(1, 3) = sx - I * sy - cxz + I * cyz;
  m(2, 0) = sx + I * sy + cxz + I * cyz;
  m(2, 1) = cxx - I * cxy + I * cyx + cyy;
  m(2, 2) = 1 - sz + tz - czz;
  m(2, 3) = tx - I * ty - czx + I * czy;
  m(3, 0) = cxx - I * cxy + I * cyx - cyy;
  m(3, 1) = sx + I * sy - cxz - I * cyz;
  m(3, 2) = tx + I * ty - czx - I * czy;
  m(3, 3) = 0.0;
  return 0.25 * m;
}

double literal_concurrence(const Matrix4c& rho) {
  Matrix4c y = Matrix4c::Zero();
  y(0, 3) = -1.0;
  y(1, 2) = 1.0;
  y(2, 1) = 1.0;
  y(3, 0) = -1.0;
  const Matrix4c tilde = y * rho.conjugate() * y;
  Eigen::ComplexEigenSolver<Matrix4c> es(rho * tilde, false);
  std::vector<double> l(4);
  for (int i = 0; i < 4; ++i) l[i] = es.eigenvalues()[i].real();
  std::sort(l.begin(), l.end(), std::greater<>());
  return std::max(0.0, l[0] - l[1] - l[2] - l[3]);
}

using Coeffs = std::vector<double>;

Coeffs pick(const BlochForm& b, const std::vector<std::string>& keys) {
  Coeffs out;
  for (const std::string& k : keys) {
    if (k == "sx") out.push_back(b.s[0]);
    else if (k == "sz") out.push_back(b.s[2]);
    else if (k == "tx") out.push_back(b.t[0]);
    else if (k == "tz") out.push_back(b.t[2]);
    else if (k == "cxx") out.push_back(b.c(0, 0));
    else if (k == "cyy") out.push_back(b.c(1, 1));
    else if (k == "czz") out.push_back(b.c(2, 2));
    else if (k == "cxz") out.push_back(b.c(0, 2));
    else if (k == "czx") out.push_back(b.c(2, 0));
    else throw std::logic_error("unknown coefficient " + k);
  }
  return out;
}

}  // namespace

void ReportConfig::validate() const {
  if (grid < 2) throw std::invalid_argument("grid: steps >= 2 required");
  if (samples < 1) throw std::invalid_argument("samples: at least 1 required");
}

std::string to_string(ItemStatus s) {
  switch (s) {
    case ItemStatus::Agrees: return "agrees";
    case ItemStatus::KnownDiscrepancy: return "known discrepancy";
    case ItemStatus::Unexpected: return "UNEXPECTED";
  }
  return "?";
}

ItemStatus ReportItem::status() const {
  const bool agrees = max_deviation <= kReportTolerance;
  if (agrees != expected_discrepant) return agrees ? ItemStatus::Agrees : ItemStatus::KnownDiscrepancy;
  return ItemStatus::Unexpected;
}

const ReportItem* DiscrepancyReport::find(const std::string& group, const std::string& item) const {
  for (const ReportItem& r : items)
    if (r.group == group && r.item == item) return &r;
  return nullptr;
}

std::size_t DiscrepancyReport::count(ItemStatus s) const {
  return static_cast<std::size_t>(
      std::count_if(items.begin(), items.end(), [&](const ReportItem& r) { return r.status() == s; }));
}

std::string DiscrepancyReport::to_text() const {
  std::ostringstream os;
  os << "discrepancy report: grid " << config.grid << "x" << config.grid << ", "
     << config.samples << " samples, seed " << config.seed << "\n";
  char tol[32];
  std::snprintf(tol, sizeof tol, "%.0e", kReportTolerance);
  os << "agreement tolerance " << tol << "\n";
  std::string group;
  for (const ReportItem& r : items) {
    if (r.group != group) {
      group = r.group;
      os << "\n[" << group << "]\n";
    }
    char line[160];
    std::snprintf(line, sizeof line, "  %-8s max |dev| %.3e  %s\n", r.item.c_str(),
                  r.max_deviation, to_string(r.status()).c_str());
    os << line;
  }
  os << "\nsummary: " << items.size() << " items, " << count(ItemStatus::Agrees) << " agree, "
     << count(ItemStatus::KnownDiscrepancy) << " known discrepancies, "
     << count(ItemStatus::Unexpected) << " unexpected\n";
  return os.str();
}

DiscrepancyReport discrepancy_report(const ReportConfig& cfg) {
  cfg.validate();
  DiscrepancyReport report;
  report.config = cfg;
  Sampler rng(cfg.seed);
  const Axis axis{0.0, kQuarterPi, cfg.grid};
  const auto for_grid = [&](const std::function<void(double, double)>& f) {
    for (int i = 0; i < cfg.grid; ++i)
      for (int j = 0; j < cfg.grid; ++j) f(axis.at(i), axis.at(j));
  };

  // Density entries from Bloch data.
  {
    std::vector<std::string> keys = matrix_keys();
    keys.pop_back();
    Group g("density entries", keys, {"(1,2)", "(2,1)", "(2,2)", "(4,1)"});
    for (int s = 0; s < cfg.samples; ++s) {
      const Matrix4c rho = rng.density();
      const Matrix4c printed = printed_entries(density_to_bloch(rho));
      std::vector<double> a, b;
      for (int k = 0; k < 15; ++k) {
        a.push_back(0.0);
        b.push_back(std::abs(printed(k / 4, k % 4) - rho(k / 4, k % 4)));
      }
      g.update(a, b);
    }
    g.append_to(report.items);
  }

  // Family entries.
  {
    Group g("singlet entries", matrix_keys(), {"(1,1)", "(2,2)"});
    Matrix4c printed = Matrix4c::Zero();
    printed(0, 0) = printed(2, 2) = 0.5;
    printed(1, 2) = printed(2, 1) = -0.5;
    g.update(printed, make_state(Bell{}).as4());
    g.append_to(report.items);
  }
  {
    Group g("werner entries", matrix_keys(), {"(1,1)", "(2,2)"});
    for (int s = 0; s < cfg.samples; ++s) {
      const double x = rng.uniform(-1.0 / 3.0, 1.0);
      Matrix4c printed = Matrix4c::Zero();
      printed(0, 0) = printed(2, 2) = (1 + x) / 4;
      printed(1, 1) = printed(3, 3) = (1 - x) / 4;
      printed(1, 2) = printed(2, 1) = x / 2;
      g.update(printed, make_state(Werner{x}).as4());
    }
    g.append_to(report.items);
  }
  {
    Group g("gwerner entries", matrix_keys(), {});
    for (int s = 0; s < cfg.samples; ++s) {
      const GeneralizedWerner w = rng.gwerner();
      Matrix4c printed = Matrix4c::Zero();
      printed(0, 0) = printed(3, 3) = (1 + w.czz) / 4;
      printed(1, 1) = printed(2, 2) = (1 - w.czz) / 4;
      printed(0, 3) = printed(3, 0) = (w.cxx - w.cyy) / 4;
      printed(1, 2) = printed(2, 1) = (w.cxx + w.cyy) / 4;
      g.update(printed, make_state(w).as4());
    }
    g.append_to(report.items);
  }
  {
    // The printed list omits (3,3) and gives two values for (4,4); the
    // first is used.
    const std::vector<std::string> keys{"(1,1)", "(2,2)", "(4,4)", "(1,4)", "(4,1)", "(2,3)",
                                        "(3,2)", "(1,3)", "(2,4)", "(3,1)", "(4,2)", "(1,2)",
                                        "(2,1)", "(3,4)", "(4,3)"};
    Group g("pure entries", keys, {"(1,4)", "(4,1)", "(2,3)", "(3,2)"});
    for (int s = 0; s < cfg.samples; ++s) {
      const double p = rng.uniform(0.0, 1.0);
      const double q = std::sqrt(1 - p * p);
      const Matrix4c rho = make_state(GenericPure{p}).as4();
      const double a = (1 - q) / 4, b = (1 + q) / 4;
      const Coeffs printed{a, b, a, -b, -b, -a, -a, p / 4, p / 4, p / 4, p / 4,
                           -p / 4, -p / 4, -p / 4, -p / 4};
      Coeffs canonical;
      for (const std::string& k : keys) {
        const int i = k[1] - '1', j = k[3] - '1';
        canonical.push_back(rho(i, j).real());
      }
      g.update(printed, canonical);
    }
    g.append_to(report.items);
  }

  // Region matrices, entry by entry.
  for (const RegionSelector& sel : all_regions()) {
    Group g(to_string(sel) + " matrix", matrix_keys(), labels(flagged_entries(sel)));
    for (int s = 0; s < cfg.samples; ++s) {
      const Matrix4c rho = rng.density();
      for_grid([&](double ra, double rb) {
        g.update(printed_region_matrix(rho, AccelerationPair(ra, rb), sel),
                 region(rho, ra, rb, sel));
      });
    }
    g.append_to(report.items);
  }

  // Bloch coefficients of the region states.
  const auto coefficients = [&](const std::string& name, const std::vector<std::string>& keys,
                                const std::set<std::string>& expected,
                                const std::function<StateFamily()>& draw,
                                const RegionSelector& sel,
                                const std::function<Coeffs(const StateFamily&, const Trig&)>& printed) {
    Group g(name, keys, expected);
    for (int s = 0; s < cfg.samples; ++s) {
      const StateFamily f = draw();
      const Matrix4c rho = make_state(f).as4();
      for_grid([&](double ra, double rb) {
        g.update(printed(f, Trig(ra, rb)), pick(density_to_bloch(region(rho, ra, rb, sel)), keys));
      });
    }
    g.append_to(report.items);
  };
  const std::vector<std::string> diag_keys{"sz", "tz", "cxx", "cyy", "czz"};
  const std::vector<std::string> pure_keys{"sx", "sz", "tx", "tz", "cxx",
                                           "cxz", "czx", "cyy", "czz"};
  const RegionSelector kI_I{};

  coefficients("gwerner I-I coefficients", diag_keys, {"sz", "tz", "czz"},
               [&] { return StateFamily(rng.gwerner()); }, kI_I,
               [](const StateFamily& f, const Trig& t) {
                 const auto& w = std::get<GeneralizedWerner>(f);
                 const double S1sq = t.S1 * t.S1, S2sq = t.S2 * t.S2;
                 const double C1sq = t.C1 * t.C1, C2sq = t.C2 * t.C2;
                 return Coeffs{0.0, 0.0, t.C1 * t.C2 * w.cxx, t.C1 * t.C2 * w.cyy,
                               (1 - w.czz) / 4 * (1 + S1sq * S2sq) +
                                   (1 + w.czz) / 4 *
                                       (C1sq * C2sq + S1sq * S1sq - C1sq * S2sq - S1sq)};
               });
  coefficients("gwerner II-II coefficients", diag_keys, {"czz"},
               [&] { return StateFamily(rng.gwerner()); }, kII_II,
               [](const StateFamily& f, const Trig& t) {
                 const auto& w = std::get<GeneralizedWerner>(f);
                 return Coeffs{0.5 * (1 + t.c2a), 0.5 * (1 + t.c2b), w.cxx * t.S1 * t.S2,
                               w.cyy * t.S1 * t.S2,
                               (1 + w.czz) / 4 * (1 + t.C1 * t.c2b) +
                                   (1 - w.czz) / 4 * (t.c2a + t.c2b)};
               });
  coefficients("singlet I-I coefficients", {"cxx", "cyy", "czz"}, {"czz"},
               [] { return StateFamily(Bell{}); }, kI_I,
               [](const StateFamily&, const Trig& t) {
                 return Coeffs{-t.C1 * t.C2, -t.C1 * t.C2, -0.5 * (1 + t.c2a * t.c2b)};
               });
  coefficients("singlet II-II coefficients", {"cxx", "cyy", "czz"}, {},
               [] { return StateFamily(Bell{}); }, kII_II,
               [](const StateFamily&, const Trig& t) {
                 return Coeffs{-t.S1 * t.S2, -t.S1 * t.S2, 0.5 * (t.c2a + t.c2b)};
               });
  coefficients("werner I-I coefficients", diag_keys, {"sz", "tz", "czz"},
               [&] { return StateFamily(Werner{rng.uniform(-1.0 / 3.0, 1.0)}); }, kI_I,
               [](const StateFamily& f, const Trig& t) {
                 const double x = std::get<Werner>(f).x;
                 return Coeffs{0.25 * ((1 + x) * t.c2a - (1 - x) * (1 - t.c2a)),
                               0.25 * ((1 + x) * t.c2b - (1 - x) * (1 - t.c2b)),
                               x * t.C1 * t.C2, x * t.C1 * t.C2,
                               0.5 * ((1 + x) * t.c2a * t.c2b - (1 - x) * (t.c2a + t.c2b))};
               });
  coefficients("werner II-II coefficients", diag_keys, {"czz"},
               [&] { return StateFamily(Werner{rng.uniform(-1.0 / 3.0, 1.0)}); }, kII_II,
               [](const StateFamily& f, const Trig& t) {
                 const double x = std::get<Werner>(f).x;
                 return Coeffs{0.5 * (1 + t.c2a), 0.5 * (1 + t.c2b), x * t.S1 * t.S2,
                               x * t.S1 * t.S2,
                               0.25 * ((1 + x) * (1 + t.c2a * t.c2b) + (1 - x) * (t.c2a + t.c2b))};
               });
  coefficients("pure I-I coefficients", pure_keys, {"czx", "czz"},
               [&] { return StateFamily(GenericPure{rng.uniform(0.0, 1.0)}); }, kI_I,
               [](const StateFamily& f, const Trig& t) {
                 const double p = std::get<GenericPure>(f).p, q = std::sqrt(1 - p * p);
                 return Coeffs{p * t.C1, 0.5 * (t.c2a - 1), -p * t.C2, 0.5 * (t.c2b - 1),
                               -t.C1 * t.C2, -p / 2 * t.C1 * (1 - t.c2b),
                               -p / 2 * t.C2 * (1 - t.c2a), -q * t.C1 * t.C2,
                               -q / 2 * t.c2a + 0.25 * ((1 - q) - (1 + q) * t.c2b)};
               });
  coefficients("pure II-II coefficients", pure_keys, {"cxz", "czx", "czz"},
               [&] { return StateFamily(GenericPure{rng.uniform(0.0, 1.0)}); }, kII_II,
               [](const StateFamily& f, const Trig& t) {
                 const double p = std::get<GenericPure>(f).p, q = std::sqrt(1 - p * p);
                 return Coeffs{p * t.S1, 0.5 * (1 + t.c2a), -p * t.S2, 0.5 * (1 + t.c2b),
                               -t.S1 * t.S2, -p / 2 * t.S1 * (1 + t.c2b),
                               -p / 2 * t.S2 * (1 - t.c2a), -q * t.S1 * t.S2,
                               -(1 - q) / 4 * (1 + t.c2a * t.c2b) + (1 + q) / 4 * (t.c2a + t.c2b)};
               });

  // Fidelities.
  for (const RegionSelector& sel : {kI_I, kII_II}) {
    const bool first = sel == kI_I;
    Group g("self-transposed fidelity " + to_string(sel), {"F"}, {"F"});
    for (int s = 0; s < cfg.samples; ++s) {
      const GeneralizedWerner w = rng.gwerner();
      const DensityMatrix rho = make_state(w);
      const auto p = [&](int i, int j) { return rho.as4()(i - 1, j - 1).real(); };
      for_grid([&](double ra, double rb) {
        const Trig t(ra, rb);
        const double A1 = first ? t.C1 : t.S1, A2 = first ? t.C2 : t.S2;
        double printed = (w.cxx + w.cyy) / 2 * (p(2, 3) + p(3, 2)) * A1 * A2 +
                         (w.cxx - w.cyy) / 4 * (p(1, 4) + p(4, 1)) * A1 * A2;
        if (first) {
          printed += (1 + w.czz) / 4 * (p(1, 1) * t.C1 * t.C1 * t.C2 * t.C2 + p(4, 4)) +
                     (1 - w.czz) / 4 *
                         (t.C1 * t.C1 * (p(2, 2) + p(1, 1) * t.S2 * t.S2) +
                          t.C2 * t.C2 * (p(3, 3) + p(1, 1) * t.S1 * t.S1));
        } else {
          printed += (1 + w.czz) / 4 * (p(1, 1) * t.S1 * t.S1 * t.S2 * t.S2 + p(1, 1)) +
                     (1 - w.czz) / 4 *
                         (t.S2 * t.S2 * (p(3, 3) + p(1, 1) * t.C1 * t.C1) +
                          t.S1 * t.S1 * (p(2, 2) + p(1, 1) * t.C1 * t.C1));
        }
        const DensityMatrix out(region(rho.as4(), ra, rb, sel));
        g.update({printed}, {overlap_fidelity(out, rho)});
      });
    }
    g.append_to(report.items);
  }
  for (const RegionSelector& sel : {kI_I, kII_II}) {
    const bool first = sel == kI_I;
    Group g("pure fidelity " + to_string(sel), {"F"}, {"F"});
    for (int s = 0; s < cfg.samples; ++s) {
      const double p = rng.uniform(0.0, 1.0), q = std::sqrt(1 - p * p);
      const DensityMatrix rho = make_state(GenericPure{p});
      for_grid([&](double ra, double rb) {
        const Trig t(ra, rb);
        const double a = (1 - q) / 4, b = (1 + q) / 4;
        double printed;
        if (first) {
          printed = a * a * (t.C1 * t.C1 * t.C2 + 2 * t.C1 * t.C2 + t.S1 * t.S1 * t.S2 * t.S2 + 1) +
                    b * b * (t.C1 + t.C2) * (t.C1 + t.C2) + (p / 4) * (p / 4) * (4 * t.C2 + 2 * t.C1);
        } else {
          printed = b * b * (1 + 2 * t.S1 * t.S2 + t.C1 * t.C1 * t.C2 * t.C2 +
                             t.S1 * t.S1 * t.S2 * t.S2) +
                    b * b * (t.S1 + t.S2) * (t.S1 + t.S2) + p * p / 4 * (t.S1 + t.S2) +
                    (1 - q * q) / 16 *
                        (t.C1 * t.C1 + t.C2 * t.C2 + t.C1 * t.C1 * t.S2 * t.S2 +
                         t.S1 * t.S1 * t.C2 * t.C2);
        }
        const DensityMatrix out(region(rho.as4(), ra, rb, sel));
        g.update({printed}, {overlap_fidelity(out, rho)});
      });
    }
    g.append_to(report.items);
  }

  // Concurrence from the eigenvalues of rho rho~ without square roots.
  {
    Group g("concurrence without square roots", {"C"}, {"C"});
    const Matrix4c singlet = make_state(Bell{}).as4();
    for_grid([&](double ra, double rb) {
      const DensityMatrix out(region(singlet, ra, rb, kI_I));
      g.update({literal_concurrence(out.as4())}, {concurrence(out)});
    });
    for (int s = 0; s < cfg.samples; ++s) {
      const DensityMatrix rho(rng.density());
      g.update({literal_concurrence(rho.as4())}, {concurrence(rho)});
    }
    g.append_to(report.items);
  }

  // Teleportation criterion as the Euclidean norm of the diagonal.
  {
    Group g("teleportation norm", {"Telp"}, {"Telp"});
    for (int s = 0; s < cfg.samples; ++s) {
      const Matrix4c rho = make_state(rng.gwerner()).as4();
      for_grid([&](double ra, double rb) {
        const BlochForm b = density_to_bloch(region(rho, ra, rb, kI_I));
        g.update({b.c.diagonal().norm()}, {teleportation_criterion(b)});
      });
    }
    g.append_to(report.items);
  }

  return report;
}

}  // namespace unruh
