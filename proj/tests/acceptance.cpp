// Acceptance checks.  Prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails.

#include "oracles.hpp"
#include "unruh/channel.hpp"
#include "unruh/measures.hpp"
#include "unruh/sweep.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

using namespace unruh;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool pass;
  std::string detail;
};

std::string fmt(const char* f, double a) {
  char buf[128];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

Matrix4c reduce(const Matrix4c& rho, double ra, double rb, const RegionSelector& sel) {
  return project_region(dilate(rho, AccelerationPair(ra, rb)), sel);
}

const RegionSelector kI_I{Wedge::I, Wedge::I};
const RegionSelector kII_II{Wedge::II, Wedge::II};

// 1. channel(rho, (0,0), I-I) = rho.
Outcome identity_limit() {
  oracle::Random rng(101);
  std::vector<Matrix4c> states;
  for (int k = 0; k < 1000; ++k) states.push_back(rng.density());
  const auto t0 = Clock::now();
  double dev = 0.0;
  for (const Matrix4c& rho : states)
    dev = std::max(dev, (reduce(rho, 0.0, 0.0, kI_I) - rho).cwiseAbs().maxCoeff());
  const double t = seconds_since(t0);
  return {dev <= 1e-14 && t < 1.0,
          fmt("max dev %.2e", dev) + fmt(", %.3f s", t)};
}

// 2. Closed-form region matrices against dilate + trace.
Outcome oracle_equivalence() {
  oracle::Random rng(102);
  const Axis axis{0.0, kQuarterPi, 16};
  const std::vector<EntryIndex> flagged = flagged_entries(kI_I);
  double unflagged = 0.0, anchor = 0.0, corner = 0.0;
  for (int s = 0; s < 100; ++s) {
    const Matrix4c rho = rng.density();
    for (int i = 0; i < 16; ++i)
      for (int j = 0; j < 16; ++j) {
        const AccelerationPair acc(axis.at(i), axis.at(j));
        const Matrix4c ref = reduce(rho, acc.r_a(), acc.r_b(), kI_I);
        const Matrix4c printed = printed_region_matrix(rho, acc, kI_I);
        const Matrix4c cf = closed_form_region(rho, acc, kI_I).matrix;
        for (int a = 0; a < 4; ++a)
          for (int b = 0; b < 4; ++b) {
            const bool is_flagged =
                std::find(flagged.begin(), flagged.end(), EntryIndex{a, b}) != flagged.end();
            if (!is_flagged) unflagged = std::max(unflagged, std::abs(cf(a, b) - ref(a, b)));
          }
        corner = std::max(corner, std::abs(printed(3, 3) - ref(3, 3)));
        const Matrix4c ref2 = reduce(rho, acc.r_a(), acc.r_b(), kII_II);
        anchor = std::max(anchor, std::abs(closed_form_region(rho, acc, kII_II).matrix(0, 0) -
                                           ref2(0, 0)));
      }
  }
  return {unflagged <= 1e-12 && anchor <= 1e-12 && corner > 0.0,
          fmt("unflagged I-I %.2e", unflagged) + fmt(", II-II (1,1) %.2e", anchor) +
              fmt(", printed I-I (4,4) dev %.3f", corner)};
}

// 3. Singlet region-I coefficients on a locked grid.
Outcome bell_region_one() {
  const Matrix4c singlet = make_state(Bell{}).as4();
  const Axis axis{0.0, kQuarterPi, 64};
  double dxx = 0.0, dyy = 0.0, dzz = 0.0;
  for (int i = 0; i < 64; ++i) {
    const double r = axis.at(i);
    const BlochForm b = density_to_bloch(reduce(singlet, r, r, kI_I));
    const double cc = std::cos(r) * std::cos(r);
    dxx = std::max(dxx, std::abs(b.c(0, 0) + cc));
    dyy = std::max(dyy, std::abs(b.c(1, 1) + cc));
    dzz = std::max(dzz, std::abs(b.c(2, 2) + 0.5 * (1 + std::cos(2 * r) * std::cos(2 * r))));
  }
  return {dxx <= 1e-12 && dyy <= 1e-12 && dzz <= 1e-12,
          fmt("c_xx dev %.2e", dxx) + fmt(", c_yy dev %.2e", dyy) + fmt(", c_zz dev %.3e", dzz)};
}

// 4. Wootters concurrence against (tr|C| - 1)/2 on self-transposed states.
Outcome concurrence_cross_check() {
  oracle::Random rng(104);
  double dev = 0.0;
  for (int k = 0; k < 10000; ++k) {
    BlochForm b;
    b.c.diagonal() = rng.self_transposed_diagonal();
    const double expected = std::max(0.0, (b.c.diagonal().cwiseAbs().sum() - 1.0) / 2.0);
    dev = std::max(dev, std::abs(concurrence(bloch_to_density(b)) - expected));
  }
  return {dev <= 1e-10, fmt("max dev %.2e over 10^4 states", dev)};
}

// 5. Singlet concurrence limits.
Outcome singlet_limits() {
  // Frozen from the Wootters oracle: cos(pi/4).
  constexpr double kGoldenOneStationary = 0.7071067811865476;
  const Matrix4c singlet = make_state(Bell{}).as4();
  const double c0 = concurrence(DensityMatrix(reduce(singlet, 0.0, 0.0, kI_I)));
  const double cinf = concurrence(DensityMatrix(reduce(singlet, kQuarterPi, kQuarterPi, kI_I)));
  const double cstat = concurrence(DensityMatrix(reduce(singlet, kQuarterPi, 0.0, kI_I)));
  const bool ok0 = std::abs(c0 - 1.0) <= 1e-12;
  const bool okinf = cinf <= 1e-9;
  const bool okstat = cstat > 0.3 && std::abs(cstat - kGoldenOneStationary) <= 1e-12;
  return {ok0 && okinf && okstat,
          fmt("C(0)=%.15f", c0) + fmt(", C(pi/4 locked)=%.15f", cinf) + (okinf ? "" : " [>1e-9]") +
              fmt(", C(pi/4, 0)=%.16f", cstat)};
}

// 6. Werner thresholds at rest.
Outcome werner_thresholds() {
  double cdev = 0.0, tdev = 0.0;
  bool crossing = true;
  std::vector<double> xs;
  for (int i = 0; i <= 300; ++i) xs.push_back(-1.0 / 3.0 + (4.0 / 3.0) * i / 300.0);
  xs.push_back(1.0 / 3.0);
  for (double x : xs) {
    const Matrix4c rho = make_state(Werner{x}).as4();
    const DensityMatrix out(reduce(rho, 0.0, 0.0, kI_I));
    const double c = concurrence(out);
    const double expected = x <= 1.0 / 3.0 ? 0.0 : (3 * x - 1) / 2;
    cdev = std::max(cdev, std::abs(c - expected));
    if (x >= 0.0) {
      const double t = teleportation_criterion(out);
      tdev = std::max(tdev, std::abs(t - 3 * x));
      if (x != 1.0 / 3.0 && (t > 1.0) != (x > 1.0 / 3.0)) crossing = false;
    }
  }
  const double t_third = teleportation_criterion(make_state(Werner{1.0 / 3.0}));
  crossing = crossing && std::abs(t_third - 1.0) <= 1e-12;
  return {cdev <= 1e-10 && tdev <= 1e-12 && crossing,
          fmt("concurrence dev %.2e", cdev) + fmt(", Telp dev %.2e", tdev) +
              fmt(", Telp(1/3)=%.15f", t_third)};
}

// 7. Fidelity equals purity at rest.
Outcome fidelity_anchors() {
  std::vector<StateFamily> families{Bell{},
                                    Bell{1, 1, -1},
                                    Werner{-1.0 / 3.0},
                                    Werner{0.2},
                                    Werner{0.6},
                                    Werner{1.0},
                                    GeneralizedWerner{0.7, 0.5, -0.3},
                                    GeneralizedWerner{0.1, -0.2, 0.3},
                                    GenericPure{0.0},
                                    GenericPure{0.5},
                                    GenericPure{1.0}};
  double dev = 0.0;
  for (const StateFamily& f : families) {
    const DensityMatrix rho = make_state(f);
    const DensityMatrix out(reduce(rho.as4(), 0.0, 0.0, kI_I));
    dev = std::max(dev, std::abs(overlap_fidelity(out, rho) - purity(rho)));
  }
  const DensityMatrix p0 = make_state(GenericPure{0.0});
  const double f0 = overlap_fidelity(DensityMatrix(reduce(p0.as4(), 0.0, 0.0, kI_I)), p0);
  return {dev <= 1e-12 && std::abs(f0 - 1.0) <= 1e-12,
          fmt("max |F - purity| %.2e", dev) + fmt(", F(pure p=0)=%.15f", f0)};
}

// 8. Trace, Hermiticity and positivity over the default sweep.
Outcome channel_sanity() {
  const std::vector<StateFamily> families{Bell{}, Werner{0.6}, GeneralizedWerner{0.7, 0.5, -0.3},
                                          GenericPure{0.5}};
  const Axis axis{0.0, kQuarterPi, 64};
  long checked = 0, violations = 0;
  for (const StateFamily& f : families) {
    const Matrix4c rho = make_state(f).as4();
    for (int i = 0; i < 64; ++i)
      for (int j = 0; j < 64; ++j) {
        const Matrix16c d = dilate(rho, AccelerationPair(axis.at(i), axis.at(j)));
        for (const RegionSelector& sel : all_regions()) {
          ++checked;
          try {
            if (!validate_density(DensityMatrix(project_region(d, sel))).passed()) ++violations;
          } catch (const NumericError&) {
            ++violations;
          }
        }
      }
    SweepConfig cfg;
    cfg.family = f;
    cfg.regions = all_regions();
    try {
      run_sweep(cfg);
    } catch (const NumericError&) {
      ++violations;
    }
  }
  return {violations == 0 && checked == 4L * 4 * 64 * 64,
          std::to_string(checked) + " channel outputs, " + std::to_string(violations) +
              " violations"};
}

// 9. Figure presets: byte-identical reruns within 30 s.
Outcome figure_regeneration() {
  const auto t0 = Clock::now();
  std::map<std::string, std::string> first;
  std::string shape;
  bool identical = true;
  for (int pass = 0; pass < 2; ++pass) {
    for (const std::string& name : figure_names()) {
      const SweepConfig cfg = figure_preset(name);
      std::ostringstream os;
      emit_csv(run_sweep(cfg), param_column(cfg), os);
      if (pass == 0) {
        first[name] = os.str();
        shape += " " + name + ":" + std::to_string(sweep_size(cfg));
      } else if (first[name] != os.str()) {
        identical = false;
      }
    }
  }
  const double t = seconds_since(t0);
  // Preset 1 covers four regions of a 64x64 grid; the family presets pair a
  // 64-point family axis with a 64-point locked acceleration axis.
  const bool shapes = sweep_size(figure_preset("1")) == 4u * 64 * 64 &&
                      sweep_size(figure_preset("3")) == 64u * 64 &&
                      sweep_size(figure_preset("5")) == 2u * 64 * 64;
  return {identical && shapes && t < 30.0,
          std::string(identical ? "byte-identical" : "DIFFERENT") + ", rows" + shape +
              fmt(", %.2f s for two runs", t)};
}

// 10. {Telp > 1} is monotone on the locked Werner (x, r) grid.
Outcome teleportation_shape() {
  const SweepConfig cfg = figure_preset("6");
  const auto rows = run_sweep(cfg);
  const int nx = cfg.family_grid->axis.steps, nr = cfg.acc_steps;
  // Rows for I-I come first: x outer, r inner.
  const auto useful = [&](int ix, int ir) { return rows[ix * nr + ir].telp > 1.0; };
  long breaks = 0, useful_count = 0;
  for (int ix = 0; ix < nx; ++ix)
    for (int ir = 0; ir < nr; ++ir) {
      useful_count += useful(ix, ir);
      if (ix > 0 && useful(ix - 1, ir) && !useful(ix, ir)) ++breaks;
      if (ir > 0 && !useful(ix, ir - 1) && useful(ix, ir)) ++breaks;
    }
  return {breaks == 0 && useful_count > 0 && useful_count < nx * nr,
          std::to_string(useful_count) + " of " + std::to_string(nx * nr) +
              " grid points useful, " + std::to_string(breaks) + " monotonicity breaks"};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"identity limit", identity_limit},
      {"closed form vs dilation", oracle_equivalence},
      {"singlet region I-I coefficients", bell_region_one},
      {"concurrence cross-check", concurrence_cross_check},
      {"singlet concurrence limits", singlet_limits},
      {"Werner thresholds", werner_thresholds},
      {"fidelity anchors", fidelity_anchors},
      {"channel sanity", channel_sanity},
      {"figure regeneration", figure_regeneration},
      {"teleportation region shape", teleportation_shape},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("criterion %2zu: %s  %s (%s)\n", i + 1, o.pass ? "PASS" : "FAIL",
                criteria[i].first.c_str(), o.detail.c_str());
    failed += !o.pass;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
