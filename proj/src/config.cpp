#include "unruh/config.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>

namespace unruh {

namespace {

// Options shared by `state` and `sweep`.
struct FamilyOptions {
  std::string family;
  std::optional<double> x, p, cxx, cyy, czz;
  std::vector<int> signs;
  std::string x_range, p_range, cxx_range, cyy_range, czz_range;
  std::vector<std::string> regions;
  std::string measures;
};

void add_family_options(CLI::App& app, FamilyOptions& o) {
  app.add_option("--family", o.family, "State family")
      ->check(CLI::IsMember({"bell", "werner", "gwerner", "pure"}));
  app.add_option("--x", o.x, "Werner parameter");
  app.add_option("--p", o.p, "Generic pure state parameter");
  app.add_option("--cxx", o.cxx, "Generalized Werner c_xx");
  app.add_option("--cyy", o.cyy, "Generalized Werner c_yy");
  app.add_option("--czz", o.czz, "Generalized Werner c_zz");
  app.add_option("--signs", o.signs, "Bell sign triple sx,sy,sz (default -1,-1,-1)")
      ->expected(3)
      ->delimiter(',');
  app.add_option("--region", o.regions, "Region I-I, II-II, I-II or II-I (repeatable)")
      ->check(CLI::IsMember({"I-I", "II-II", "I-II", "II-I"}));
  app.add_option("--measures", o.measures,
                 "Comma-separated subset of concurrence,fidelity,telp,purity,separability");
}

void add_range_options(CLI::App& app, FamilyOptions& o) {
  app.add_option("--x-range", o.x_range, "Werner x axis as min:max:steps");
  app.add_option("--p-range", o.p_range, "Pure-state p axis as min:max:steps");
  app.add_option("--cxx-range", o.cxx_range, "c_xx axis as min:max:steps");
  app.add_option("--cyy-range", o.cyy_range, "c_yy axis as min:max:steps");
  app.add_option("--czz-range", o.czz_range, "c_zz axis as min:max:steps");
}

bool family_flags_given(const FamilyOptions& o) {
  return !o.family.empty() || o.x || o.p || o.cxx || o.cyy || o.czz || !o.signs.empty() ||
         !o.x_range.empty() || !o.p_range.empty() || !o.cxx_range.empty() ||
         !o.cyy_range.empty() || !o.czz_range.empty();
}

[[noreturn]] void conflict(const std::string& what) {
  throw ConfigError("conflicting family parameters: " + what);
}

// Builds the family and optional family axis, rejecting parameters that do
// not belong to the chosen family.
std::pair<StateFamily, std::optional<FamilyAxis>> build_family(const FamilyOptions& o) {
  const std::string fam = o.family.empty() ? "bell" : o.family;
  std::optional<FamilyAxis> axis;
  const auto take_range = [&](const std::string& text, FamilyParam param, const char* field) {
    if (text.empty()) return;
    if (axis) conflict("more than one family-parameter range");
    axis = FamilyAxis{param, parse_range(text, field)};
  };
  take_range(o.x_range, FamilyParam::X, "x-range");
  take_range(o.p_range, FamilyParam::P, "p-range");
  take_range(o.cxx_range, FamilyParam::Cxx, "cxx-range");
  take_range(o.cyy_range, FamilyParam::Cyy, "cyy-range");
  take_range(o.czz_range, FamilyParam::Czz, "czz-range");

  const auto reject = [&](bool given, const std::string& flag) {
    if (given) conflict("--" + flag + " does not apply to family " + fam);
  };
  const auto swept = [&](FamilyParam p) { return axis && axis->param == p; };
  const auto value = [&](const std::optional<double>& v, FamilyParam p, const std::string& flag,
                         double fallback, bool required) {
    if (v && swept(p)) conflict("--" + flag + " and --" + flag + "-range both given");
    if (v) return *v;
    if (!swept(p) && required) throw ConfigError(flag + ": required for family " + fam);
    return fallback;
  };

  if (fam != "bell") reject(!o.signs.empty(), "signs");
  if (fam != "werner") reject(o.x.has_value() || swept(FamilyParam::X), "x");
  if (fam != "pure") reject(o.p.has_value() || swept(FamilyParam::P), "p");
  if (fam != "gwerner") {
    reject(o.cxx.has_value() || swept(FamilyParam::Cxx), "cxx");
    reject(o.cyy.has_value() || swept(FamilyParam::Cyy), "cyy");
    reject(o.czz.has_value() || swept(FamilyParam::Czz), "czz");
  }

  StateFamily family;
  if (fam == "bell") {
    Bell b;
    if (!o.signs.empty()) b = Bell{o.signs[0], o.signs[1], o.signs[2]};
    family = b;
  } else if (fam == "werner") {
    family = Werner{value(o.x, FamilyParam::X, "x", 0.0, true)};
  } else if (fam == "pure") {
    family = GenericPure{value(o.p, FamilyParam::P, "p", 0.0, true)};
  } else {
    family = GeneralizedWerner{value(o.cxx, FamilyParam::Cxx, "cxx", 0.0, true),
                               value(o.cyy, FamilyParam::Cyy, "cyy", 0.0, true),
                               value(o.czz, FamilyParam::Czz, "czz", 0.0, true)};
  }
  return {family, axis};
}

std::vector<RegionSelector> build_regions(const std::vector<std::string>& labels,
                                          std::vector<RegionSelector> fallback) {
  if (labels.empty()) return fallback;
  std::vector<RegionSelector> out;
  for (const std::string& l : labels) {
    const RegionSelector sel = parse_region(l);
    if (std::find(out.begin(), out.end(), sel) == out.end()) out.push_back(sel);
  }
  return out;
}

// Turns a JSON object into flag tokens, skipping keys already on the
// command line.
std::vector<std::string> json_tokens(const std::string& path,
                                     const std::vector<std::string>& cli) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config: cannot read '" + path + "'");
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("config: " + std::string(e.what()));
  }
  if (!doc.is_object()) throw ConfigError("config: top level must be an object");

  const auto on_cli = [&](const std::string& flag) {
    return std::any_of(cli.begin(), cli.end(), [&](const std::string& t) {
      return t == flag || t.rfind(flag + "=", 0) == 0;
    });
  };
  const auto scalar = [&](const std::string& key, const nlohmann::json& v) -> std::string {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number()) {
      std::ostringstream os;
      os.precision(17);
      if (v.is_number_integer()) os << v.get<long long>();
      else os << v.get<double>();
      return os.str();
    }
    throw ConfigError("config: bad value for '" + key + "'");
  };

  std::vector<std::string> out;
  for (const auto& [key, v] : doc.items()) {
    const std::string flag = "--" + key;
    if (key == "config") throw ConfigError("config: nested 'config' key");
    if (on_cli(flag)) continue;
    if (v.is_boolean()) {
      if (v.get<bool>()) out.push_back(flag);
    } else if (v.is_array()) {
      if (key == "signs" || key == "measures") {
        std::string joined;
        for (const auto& e : v) joined += (joined.empty() ? "" : ",") + scalar(key, e);
        out.push_back(flag);
        out.push_back(joined);
      } else {
        for (const auto& e : v) {
          out.push_back(flag);
          out.push_back(scalar(key, e));
        }
      }
    } else {
      out.push_back(flag);
      out.push_back(scalar(key, v));
    }
  }
  return out;
}

// Expands `--config FILE` and runs CLI11 over the tokens.
void run_parser(CLI::App& app, std::vector<std::string> args) {
  std::vector<std::string> cli;
  std::string config_path;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config") {
      if (i + 1 >= args.size()) throw ConfigError("config: missing file name");
      config_path = args[++i];
    } else if (args[i].rfind("--config=", 0) == 0) {
      config_path = args[i].substr(9);
    } else {
      cli.push_back(args[i]);
    }
  }
  std::vector<std::string> tokens;
  if (!config_path.empty()) tokens = json_tokens(config_path, cli);
  tokens.insert(tokens.end(), cli.begin(), cli.end());
  std::reverse(tokens.begin(), tokens.end());
  try {
    app.parse(tokens);
  } catch (const CLI::CallForHelp&) {
    throw HelpRequested{app.help()};
  } catch (const CLI::ParseError& e) {
    throw ConfigError(e.what());
  }
}

std::vector<Measure> measures_or(const std::string& text, std::vector<Measure> fallback) {
  return text.empty() ? fallback : parse_measures(text);
}

}  // namespace

Axis parse_range(const std::string& text, const std::string& field) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  for (std::string p; std::getline(ss, p, ':');) parts.push_back(p);
  if (parts.size() != 3) throw ConfigError(field + ": expected min:max:steps, got '" + text + "'");
  Axis a;
  try {
    std::size_t used = 0;
    a.min = std::stod(parts[0], &used);
    if (used != parts[0].size()) throw std::invalid_argument(parts[0]);
    a.max = std::stod(parts[1], &used);
    if (used != parts[1].size()) throw std::invalid_argument(parts[1]);
    a.steps = std::stoi(parts[2], &used);
    if (used != parts[2].size()) throw std::invalid_argument(parts[2]);
  } catch (const std::exception&) {
    throw ConfigError(field + ": cannot parse '" + text + "'");
  }
  if (a.steps < 2) throw ConfigError(field + ": steps >= 2 required");
  if (!(a.min < a.max)) throw ConfigError(field + ": min must be below max");
  return a;
}

std::vector<Measure> parse_measures(const std::string& list) {
  std::vector<Measure> out;
  std::stringstream ss(list);
  for (std::string name; std::getline(ss, name, ',');) {
    Measure m;
    if (name == "concurrence") m = Measure::Concurrence;
    else if (name == "fidelity") m = Measure::Fidelity;
    else if (name == "telp") m = Measure::Telp;
    else if (name == "purity") m = Measure::Purity;
    else if (name == "separability") m = Measure::Separability;
    else throw ConfigError("measures: unknown measure '" + name + "'");
    if (std::find(out.begin(), out.end(), m) == out.end()) out.push_back(m);
  }
  if (out.empty()) throw ConfigError("measures: empty list");
  return out;
}

SweepOptions parse_sweep_args(const std::vector<std::string>& args) {
  CLI::App app("Run a sweep over accelerations and one optional family parameter", "sweep");
  FamilyOptions fo;
  add_family_options(app, fo);
  add_range_options(app, fo);
  std::optional<int> grid;
  bool lock = false;
  std::string stationary, out, format, figure;
  bool serial = false;
  app.add_option("--grid", grid, "Acceleration steps per axis (default 64)");
  app.add_flag("--lock-acc", lock, "Lock r_a = r_b");
  app.add_option("--stationary", stationary, "Keep one observer at r = 0")
      ->check(CLI::IsMember({"alice", "rob"}));
  app.add_option("--out", out, "Output CSV path (stdout if omitted)");
  app.add_option("--format", format, "csv, plot or both")
      ->check(CLI::IsMember({"csv", "plot", "both"}));
  app.add_option("--figure", figure, "Figure preset: 1, 2a, 2b, 3, 4, 5, 6 or 7");
  app.add_flag("--serial", serial, "Use the single-threaded reference kernel");
  app.set_help_flag("-h,--help", "Print this help");
  app.add_option("--config", "JSON file with flag values")->expected(1);
  run_parser(app, args);

  SweepConfig cfg;
  if (!figure.empty()) {
    if (family_flags_given(fo)) conflict("--figure fixes the family; drop the family flags");
    if (lock || !stationary.empty())
      throw ConfigError("conflicting axes: --figure fixes the acceleration mode");
    if (!fo.regions.empty()) throw ConfigError("region: --figure fixes the regions");
    try {
      cfg = figure_preset(figure);
    } catch (const std::invalid_argument& e) {
      throw ConfigError(std::string("figure: ") + e.what());
    }
  } else {
    auto [family, axis] = build_family(fo);
    cfg.family = family;
    cfg.family_grid = axis;
    cfg.regions = build_regions(fo.regions, cfg.regions);
    if (lock && !stationary.empty())
      throw ConfigError("conflicting axes: --lock-acc and --stationary are exclusive");
    if (lock) cfg.mode = AccMode::Locked;
    if (!stationary.empty()) {
      cfg.mode = AccMode::OneStationary;
      cfg.stationary = stationary == "alice" ? Observer::Alice : Observer::Rob;
    }
  }
  cfg.measures = measures_or(fo.measures, cfg.measures);
  if (grid) {
    if (*grid < 2) throw ConfigError("grid: steps >= 2 required");
    cfg.acc_steps = *grid;
  }
  cfg.out_path = out;
  if (format == "plot") cfg.format = OutputFormat::Plot;
  else if (format == "both") cfg.format = OutputFormat::Both;
  if (cfg.format != OutputFormat::Csv && cfg.out_path.empty())
    throw ConfigError("out: plot output needs --out PATH");

  try {
    cfg.validate();
  } catch (const ConfigError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  return {cfg, serial};
}

SweepConfig parse_config(const std::vector<std::string>& args) {
  return parse_sweep_args(args).config;
}

StateConfig parse_state_args(const std::vector<std::string>& args) {
  CLI::App app("Print a state, its region channels and measures", "state");
  FamilyOptions fo;
  add_family_options(app, fo);
  std::optional<double> ra, rb;
  app.add_option("--ra", ra, "Alice's acceleration parameter in [0, pi/4]");
  app.add_option("--rb", rb, "Rob's acceleration parameter in [0, pi/4]");
  app.set_help_flag("-h,--help", "Print this help");
  app.add_option("--config", "JSON file with flag values")->expected(1);
  run_parser(app, args);

  StateConfig cfg;
  cfg.family = build_family(fo).first;
  cfg.regions = build_regions(fo.regions, cfg.regions);
  cfg.measures = measures_or(fo.measures, cfg.measures);
  cfg.r_a = ra.value_or(0.0);
  cfg.r_b = rb.value_or(0.0);
  cfg.has_acceleration = ra.has_value() || rb.has_value();
  try {
    AccelerationPair(cfg.r_a, cfg.r_b);
    make_state(cfg.family);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  return cfg;
}

ReportConfig parse_report_args(const std::vector<std::string>& args) {
  CLI::App app("Compare the closed-form expressions against the numerical pipeline", "report");
  ReportConfig cfg;
  app.add_option("--grid", cfg.grid, "(r_a, r_b) points per axis")->capture_default_str();
  app.add_option("--samples", cfg.samples, "Random states per item")->capture_default_str();
  app.add_option("--seed", cfg.seed, "Random seed")->capture_default_str();
  app.add_option("--out", cfg.out_path, "Output path (stdout if omitted)");
  app.set_help_flag("-h,--help", "Print this help");
  app.add_option("--config", "JSON file with flag values")->expected(1);
  run_parser(app, args);
  try {
    cfg.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  return cfg;
}

}  // namespace unruh
