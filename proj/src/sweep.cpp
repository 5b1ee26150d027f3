#include "unruh/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <sstream>

namespace unruh {

namespace {

constexpr double kRangeSlack = 1e-12;

struct GridPoint {
  std::size_t family_index;
  double r_a;
  double r_b;
};

struct Plan {
  std::vector<double> family_values;  // one entry (the fixed value) if not swept
  std::vector<DensityMatrix> initial;
  std::vector<GridPoint> points;
};

std::vector<std::pair<double, double>> acceleration_points(const SweepConfig& cfg) {
  const Axis axis{0.0, kQuarterPi, cfg.acc_steps};
  std::vector<std::pair<double, double>> out;
  switch (cfg.mode) {
    case AccMode::Independent:
      for (int i = 0; i < axis.steps; ++i)
        for (int j = 0; j < axis.steps; ++j) out.emplace_back(axis.at(i), axis.at(j));
      break;
    case AccMode::Locked:
      for (int i = 0; i < axis.steps; ++i) out.emplace_back(axis.at(i), axis.at(i));
      break;
    case AccMode::OneStationary:
      for (int i = 0; i < axis.steps; ++i) {
        if (cfg.stationary == Observer::Rob)
          out.emplace_back(axis.at(i), 0.0);
        else
          out.emplace_back(0.0, axis.at(i));
      }
      break;
  }
  return out;
}

Plan make_plan(const SweepConfig& cfg) {
  cfg.validate();
  Plan plan;
  if (cfg.family_grid) {
    const Axis& a = cfg.family_grid->axis;
    for (int i = 0; i < a.steps; ++i) plan.family_values.push_back(a.at(i));
  } else {
    plan.family_values.push_back(fixed_param_value(cfg.family));
  }
  for (double v : plan.family_values) {
    const StateFamily f =
        cfg.family_grid ? with_param(cfg.family, cfg.family_grid->param, v) : cfg.family;
    plan.initial.push_back(make_state(f));
  }
  const auto acc = acceleration_points(cfg);
  for (std::size_t f = 0; f < plan.family_values.size(); ++f)
    for (const auto& [ra, rb] : acc) plan.points.push_back({f, ra, rb});
  return plan;
}

std::string coords(const GridPoint& p, double param, const RegionSelector* sel) {
  std::ostringstream os;
  os.precision(17);
  os << "at r_a=" << p.r_a << " r_b=" << p.r_b << " param=" << param;
  if (sel) os << " region=" << to_string(*sel);
  return os.str();
}

double checked_unit(double v, const char* name, const std::string& where) {
  if (!std::isfinite(v) || v < -kRangeSlack || v > 1.0 + kRangeSlack) {
    std::ostringstream os;
    os.precision(17);
    os << name << " = " << v << " outside [0, 1] " << where;
    throw NumericError(os.str());
  }
  return std::clamp(v, 0.0, 1.0);
}

// Evaluates every region at one grid point and writes rows[region * stride + index].
void evaluate_point(const SweepConfig& cfg, const Plan& plan, std::size_t index,
                    std::vector<SweepRow>& rows) {
  const GridPoint& p = plan.points[index];
  const double param = plan.family_values[p.family_index];
  const DensityMatrix& initial = plan.initial[p.family_index];
  const Matrix16c dilated = dilate(initial.as4(), AccelerationPair(p.r_a, p.r_b));
  const std::size_t stride = plan.points.size();

  for (std::size_t k = 0; k < cfg.regions.size(); ++k) {
    const RegionSelector& sel = cfg.regions[k];
    const DensityMatrix out(project_region(dilated, sel));
    const ValidationReport rep = validate_density(out);
    if (!rep.passed())
      throw NumericError("channel output invalid (" + rep.describe() + ") " +
                         coords(p, param, &sel));
    const MeasureReport m = measure(out, initial);
    const std::string where = coords(p, param, &sel);

    SweepRow& row = rows[k * stride + index];
    row.r_a = p.r_a;
    row.r_b = p.r_b;
    row.param = param;
    row.region = sel;
    row.concurrence = checked_unit(m.concurrence, "concurrence", where);
    row.fidelity = checked_unit(m.fidelity, "fidelity", where);
    row.purity = checked_unit(m.purity, "purity", where);
    if (!std::isfinite(m.telp) || m.telp < 0.0)
      throw NumericError("telp = " + std::to_string(m.telp) + " " + where);
    row.telp = m.telp;
  }
}

}  // namespace

std::string to_string(Measure m) {
  switch (m) {
    case Measure::Concurrence: return "concurrence";
    case Measure::Fidelity: return "fidelity";
    case Measure::Telp: return "telp";
    case Measure::Purity: return "purity";
    case Measure::Separability: return "separability";
  }
  return "?";
}

std::string to_string(FamilyParam p) {
  switch (p) {
    case FamilyParam::X: return "x";
    case FamilyParam::P: return "p";
    case FamilyParam::Cxx: return "cxx";
    case FamilyParam::Cyy: return "cyy";
    case FamilyParam::Czz: return "czz";
  }
  return "?";
}

std::string to_string(AccMode m) {
  switch (m) {
    case AccMode::Independent: return "independent";
    case AccMode::Locked: return "locked";
    case AccMode::OneStationary: return "one-stationary";
  }
  return "?";
}

double Axis::at(int i) const {
  if (i <= 0) return min;
  if (i >= steps - 1) return max;
  return min + (max - min) * static_cast<double>(i) / static_cast<double>(steps - 1);
}

void SweepConfig::validate() const {
  if (acc_steps < 2) throw std::invalid_argument("grid: steps >= 2 required");
  if (regions.empty()) throw std::invalid_argument("region: at least one region required");
  if (measures.empty()) throw std::invalid_argument("measures: at least one measure required");
  if (family_grid) {
    if (family_grid->axis.steps < 2)
      throw std::invalid_argument(to_string(family_grid->param) + "-range: steps >= 2 required");
    if (mode == AccMode::Independent)
      throw std::invalid_argument(
          "conflicting axes: a family-parameter axis needs --lock-acc or --stationary "
          "(at most two swept axes)");
    // Checks the parameter applies to the family and both ends are in range.
    make_state(with_param(family, family_grid->param, family_grid->axis.min));
    make_state(with_param(family, family_grid->param, family_grid->axis.max));
  } else {
    make_state(family);
  }
}

std::string param_column(const SweepConfig& cfg) {
  if (cfg.family_grid) return to_string(cfg.family_grid->param);
  struct Visitor {
    std::string operator()(const GeneralizedWerner&) const { return "cxx"; }
    std::string operator()(const Bell&) const { return "bell"; }
    std::string operator()(const Werner&) const { return "x"; }
    std::string operator()(const GenericPure&) const { return "p"; }
    std::string operator()(const Explicit&) const { return "param"; }
  };
  return std::visit(Visitor{}, cfg.family);
}

StateFamily with_param(const StateFamily& f, FamilyParam param, double value) {
  const auto mismatch = [&] {
    return std::invalid_argument("conflicting family parameters: " + to_string(param) +
                                 " does not apply to family " + family_name(f));
  };
  if (const auto* w = std::get_if<Werner>(&f)) {
    if (param != FamilyParam::X) throw mismatch();
    Werner out = *w;
    out.x = value;
    return out;
  }
  if (const auto* g = std::get_if<GenericPure>(&f)) {
    if (param != FamilyParam::P) throw mismatch();
    GenericPure out = *g;
    out.p = value;
    return out;
  }
  if (const auto* g = std::get_if<GeneralizedWerner>(&f)) {
    GeneralizedWerner out = *g;
    switch (param) {
      case FamilyParam::Cxx: out.cxx = value; break;
      case FamilyParam::Cyy: out.cyy = value; break;
      case FamilyParam::Czz: out.czz = value; break;
      default: throw mismatch();
    }
    return out;
  }
  throw mismatch();
}

double fixed_param_value(const StateFamily& f) {
  struct Visitor {
    double operator()(const GeneralizedWerner& g) const { return g.cxx; }
    double operator()(const Bell& b) const { return bell_index(b); }
    double operator()(const Werner& w) const { return w.x; }
    double operator()(const GenericPure& g) const { return g.p; }
    double operator()(const Explicit&) const { return 0.0; }
  };
  return std::visit(Visitor{}, f);
}

std::size_t sweep_size(const SweepConfig& cfg) {
  const std::size_t n = static_cast<std::size_t>(cfg.acc_steps);
  const std::size_t acc = cfg.mode == AccMode::Independent ? n * n : n;
  const std::size_t fam = cfg.family_grid ? static_cast<std::size_t>(cfg.family_grid->axis.steps) : 1;
  return acc * fam * cfg.regions.size();
}

std::vector<SweepRow> run_sweep_serial(const SweepConfig& cfg) {
  const Plan plan = make_plan(cfg);
  std::vector<SweepRow> rows(plan.points.size() * cfg.regions.size());
  for (std::size_t i = 0; i < plan.points.size(); ++i) evaluate_point(cfg, plan, i, rows);
  return rows;
}

std::vector<SweepRow> run_sweep(const SweepConfig& cfg) {
  const Plan plan = make_plan(cfg);
  const std::size_t n = plan.points.size();
  std::vector<SweepRow> rows(n * cfg.regions.size());

  // The error reported is the one at the lowest grid index, as in the
  // serial path.
  std::size_t first_error = std::numeric_limits<std::size_t>::max();
  std::exception_ptr error;

#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i) {
    try {
      evaluate_point(cfg, plan, static_cast<std::size_t>(i), rows);
    } catch (...) {
#pragma omp critical(unruh_sweep_error)
      {
        if (static_cast<std::size_t>(i) < first_error) {
          first_error = static_cast<std::size_t>(i);
          error = std::current_exception();
        }
      }
    }
  }
  if (error) std::rethrow_exception(error);
  return rows;
}

SweepConfig figure_preset(const std::string& name) {
  SweepConfig cfg;
  cfg.label = name;
  const Axis unit{0.0, 1.0, 64};
  if (name == "1") {
    cfg.family = Bell{};
    cfg.regions = all_regions();
    cfg.measures = {Measure::Concurrence};
  } else if (name == "2a") {
    cfg.family = Werner{0.6};
    cfg.measures = {Measure::Concurrence};
  } else if (name == "2b") {
    cfg.family = GeneralizedWerner{0.7, 0.5, -0.3};
    cfg.measures = {Measure::Concurrence};
  } else if (name == "3") {
    cfg.family = GenericPure{0.0};
    cfg.family_grid = FamilyAxis{FamilyParam::P, unit};
    cfg.mode = AccMode::Locked;
    cfg.measures = {Measure::Concurrence};
  } else if (name == "4") {
    cfg.family = Werner{0.0};
    cfg.family_grid = FamilyAxis{FamilyParam::X, unit};
    cfg.mode = AccMode::Locked;
    cfg.regions = all_regions();
    cfg.measures = {Measure::Fidelity};
  } else if (name == "5") {
    cfg.family = GenericPure{0.0};
    cfg.family_grid = FamilyAxis{FamilyParam::P, unit};
    cfg.mode = AccMode::Locked;
    cfg.regions = {{Wedge::I, Wedge::I}, {Wedge::II, Wedge::II}};
    cfg.measures = {Measure::Fidelity};
  } else if (name == "6") {
    cfg.family = Werner{0.0};
    cfg.family_grid = FamilyAxis{FamilyParam::X, unit};
    cfg.mode = AccMode::Locked;
    cfg.regions = all_regions();
    cfg.measures = {Measure::Telp};
  } else if (name == "7") {
    cfg.family = GenericPure{0.0};
    cfg.family_grid = FamilyAxis{FamilyParam::P, unit};
    cfg.mode = AccMode::Locked;
    cfg.measures = {Measure::Telp};
  } else {
    throw std::invalid_argument("unknown figure '" + name + "' (expected 1, 2a, 2b, 3, 4, 5, 6, 7)");
  }
  return cfg;
}

const std::vector<std::string>& figure_names() {
  static const std::vector<std::string> names{"1", "2a", "2b", "3", "4", "5", "6", "7"};
  return names;
}

}  // namespace unruh
