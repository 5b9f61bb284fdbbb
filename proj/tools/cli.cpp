#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <variant>

#include <fmt/format.h>

#include "CLI11.hpp"
#include "json.hpp"

#include "abkm/analysis.hpp"
#include "abkm/dynamics.hpp"
#include "abkm/errors.hpp"
#include "abkm/model.hpp"
#include "abkm/numeric.hpp"
#include "abkm/wavefunction.hpp"

namespace abkm::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// ---------------------------------------------------------------------------
// Tabular output

struct Fixed {
  double value;
  int decimals;
};
struct Significant {
  double value;
  int digits;
};
struct YesNo {
  bool value;
};

using Cell = std::variant<double, long, bool, YesNo, Fixed, Significant, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

std::string format_number(double x) {
  if (x == 0.0) x = 0.0;  // drop the sign of negative zero
  return fmt::format("{}", x);
}

std::string render_csv_cell(const Cell& c) {
  struct Visitor {
    std::string operator()(double v) const { return format_number(v); }
    std::string operator()(long v) const { return fmt::format("{}", v); }
    std::string operator()(bool v) const { return v ? "true" : "false"; }
    std::string operator()(YesNo v) const { return v.value ? "yes" : "no"; }
    std::string operator()(Fixed v) const { return fmt::format("{:.{}f}", v.value, v.decimals); }
    std::string operator()(Significant v) const {
      return fmt::format("{:.{}g}", v.value, v.digits);
    }
    std::string operator()(const std::string& v) const { return v; }
  };
  return std::visit(Visitor{}, c);
}

ordered_json to_json(const Cell& c) {
  struct Visitor {
    ordered_json operator()(double v) const { return v == 0.0 ? 0.0 : v; }
    ordered_json operator()(long v) const { return v; }
    ordered_json operator()(bool v) const { return v; }
    ordered_json operator()(YesNo v) const { return v.value; }
    ordered_json operator()(Fixed v) const { return v.value; }
    ordered_json operator()(Significant v) const { return v.value; }
    ordered_json operator()(const std::string& v) const { return v; }
  };
  return std::visit(Visitor{}, c);
}

enum class Format { csv, json };
enum class AngleUnit { rad, deg };

struct CommonOptions {
  std::string out_path;
  std::string format = "auto";
  std::string config_path;
  std::string angle_unit = "auto";
  bool no_header = false;
};

struct Output {
  Table table;
  /// key=value pairs for the `#` header line.
  std::vector<std::pair<std::string, std::string>> meta;
  /// Single-row results render as a JSON object rather than an array.
  bool single_object = false;
};

std::string render(const std::string& command, const Output& o, Format fmt_kind, bool header) {
  std::string s;
  if (fmt_kind == Format::json) {
    auto row_object = [&](const std::vector<Cell>& row) {
      ordered_json obj = ordered_json::object();
      for (std::size_t i = 0; i < o.table.columns.size(); ++i) obj[o.table.columns[i]] = to_json(row[i]);
      return obj;
    };
    ordered_json doc;
    if (o.single_object && o.table.rows.size() == 1) {
      doc = row_object(o.table.rows.front());
    } else {
      doc = ordered_json::array();
      for (const auto& row : o.table.rows) doc.push_back(row_object(row));
    }
    s = doc.dump(2);
    s += '\n';
    return s;
  }
  if (header) {
    s += "# abkm " + command;
    for (const auto& [k, v] : o.meta) s += " " + k + "=" + v;
    s += '\n';
  }
  for (std::size_t i = 0; i < o.table.columns.size(); ++i) {
    if (i) s += ',';
    s += o.table.columns[i];
  }
  s += '\n';
  for (const auto& row : o.table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) s += ',';
      s += render_csv_cell(row[i]);
    }
    s += '\n';
  }
  return s;
}

std::string join_numbers(const std::vector<double>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ';';
    s += format_number(v[i]);
  }
  return s;
}

void require_finite(double v, const char* name) {
  if (!std::isfinite(v)) throw ValidationError(fmt::format("--{} must be finite", name));
}

// ---------------------------------------------------------------------------
// Commands

Output cmd_table1() {
  Output o;
  o.table.columns = {"alpha", "n", "element", "ratio", "ab_effect"};
  for (const auto& row : table_one()) {
    o.table.rows.push_back({Significant{row.alpha, 6}, row.n, row.element,
                            Fixed{row.ratio, row.decimals}, YesNo{row.ab_effect}});
  }
  return o;
}

struct ProfileOptions {
  double alpha = -0.5;
  std::vector<double> rk;
  double theta_min_deg = 0.0;
  double theta_max_deg = 179.0;
  double theta_step_deg = 1.0;
};

Output cmd_profile(const ProfileOptions& p, AngleUnit unit) {
  require_finite(p.alpha, "alpha");
  std::vector<double> rk_values = p.rk;
  if (rk_values.empty()) {
    // alpha = -1/3 defaults to the narrow window around its critical radius.
    rk_values = std::abs(p.alpha + 1.0 / 3.0) < 1e-6 ? rcrit_window_rk_values()
                                                     : default_profile_rk_values();
  }
  const auto degrees = degree_grid(p.theta_min_deg, p.theta_max_deg, p.theta_step_deg);
  const auto sweep = profile_sweep(p.alpha, rk_values, to_radians(degrees));

  Output o;
  o.meta = {{"alpha", format_number(p.alpha)},
            {"rk", join_numbers(rk_values)},
            {"theta_deg", fmt::format("{}:{}:{}", format_number(p.theta_min_deg),
                                      format_number(p.theta_max_deg),
                                      format_number(p.theta_step_deg))}};
  o.table.columns = {unit == AngleUnit::deg ? "theta_deg" : "theta_rad", "rk", "ratio"};
  for (std::size_t i = 0; i < sweep.rk_values.size(); ++i) {
    for (std::size_t j = 0; j < sweep.theta_grid.size(); ++j) {
      const double theta = unit == AngleUnit::deg ? degrees[j] : sweep.theta_grid[j];
      o.table.rows.push_back({theta, sweep.rk_values[i], sweep.values[i][j]});
    }
  }
  return o;
}

struct SimulateOptions {
  std::string model = "mirrored";
  double alpha = -0.5;
  double rk = 0.3;
  double theta_dot = 1.0;
  double theta0 = 0.0;
  std::vector<double> theta_dots;
  std::vector<double> theta0s;
  std::vector<double> phases;
  std::optional<double> dt;
  std::optional<double> t_end;
  int record_every = 100;
  double margin = 1e-6;
};

std::vector<Trajectory> build_trajectories(const SimulateOptions& s, Model model) {
  const bool explicit_lists = !s.theta_dots.empty() || !s.theta0s.empty();
  if (model == Model::mirrored || !explicit_lists) {
    if (model == Model::mirrored && explicit_lists) {
      throw ValidationError("mirrored model takes --theta-dot/--theta0, not per-oscillator lists");
    }
    if (s.theta_dot < 0.0) throw ValidationError("--theta-dot must be >= 0 (Path 1 is counter-clockwise)");
    if (s.theta0 < 0.0) throw ValidationError("--theta0 must be >= 0 (Path 1 starts on the upper branch)");
    const auto p1 = Trajectory::path1(s.theta_dot, s.theta0);
    return {p1, Trajectory::mirror_of(p1)};
  }
  std::vector<double> dots = s.theta_dots;
  std::vector<double> starts = s.theta0s;
  if (dots.empty()) dots.assign(starts.size(), s.theta_dot);
  if (starts.empty()) starts.assign(dots.size(), 0.0);
  if (dots.size() != starts.size()) {
    throw ValidationError("--theta-dots and --theta0s must have the same length");
  }
  std::vector<Trajectory> trajs;
  for (std::size_t i = 0; i < dots.size(); ++i) {
    require_finite(dots[i], "theta-dots");
    require_finite(starts[i], "theta0s");
    trajs.push_back(Trajectory{starts[i], dots[i], kPi});
  }
  return trajs;
}

Output cmd_simulate(const SimulateOptions& s, AngleUnit unit) {
  const Model model = parse_model(s.model);
  require_finite(s.alpha, "alpha");
  require_finite(s.theta_dot, "theta-dot");
  const ModelParams params(s.alpha, s.rk);
  const auto trajs = build_trajectories(s, model);

  EnsembleState initial = initial_state(trajs);
  if (!s.phases.empty()) {
    if (s.phases.size() != trajs.size()) {
      throw ValidationError("--phases must give one phase per oscillator");
    }
    initial.phases = s.phases;
  }

  double fastest = 0.0;
  for (const auto& tr : trajs) fastest = std::max(fastest, std::abs(tr.theta_dot));

  IntegratorConfig config;
  config.boundary_margin = s.margin;
  config.record_every = s.record_every;
  config.dt = s.dt.value_or(IntegratorConfig::default_dt(fastest));
  if (s.t_end) {
    config.t_end = *s.t_end;
  } else if (fastest > 0.0) {
    // Run until the first oscillator reaches the edge of its window.
    double t_stop = std::numeric_limits<double>::infinity();
    for (const auto& tr : trajs) {
      if (tr.theta_dot == 0.0) continue;
      const double heading = tr.theta_dot > 0.0 ? tr.theta0 : -tr.theta0;
      t_stop = std::min(t_stop, (tr.theta_max - s.margin - heading) / std::abs(tr.theta_dot));
    }
    config.t_end = t_stop;
  } else {
    config.t_end = 1.0;
  }

  const auto series = integrate(model, params, initial, trajs, config);

  const std::size_t n = trajs.size();
  const bool residual = model == Model::mirrored;
  const double angle_scale = unit == AngleUnit::deg ? 180.0 / kPi : 1.0;

  Output o;
  o.meta = {{"model", to_string(model)},
            {"alpha", format_number(s.alpha)},
            {"rk", format_number(s.rk)},
            {"dt", format_number(config.dt)},
            {"t_end", format_number(config.t_end)},
            {"record_every", std::to_string(config.record_every)},
            {"angle_unit", unit == AngleUnit::deg ? "deg" : "rad"}};
  o.table.columns.push_back("t");
  for (std::size_t i = 0; i < n; ++i) o.table.columns.push_back(fmt::format("theta_{}", i + 1));
  for (std::size_t i = 0; i < n; ++i) o.table.columns.push_back(fmt::format("phase_{}", i + 1));
  o.table.columns.push_back("order_r");
  if (residual) o.table.columns.push_back("phase_diff_residual");

  for (std::size_t k = 0; k < series.samples.size(); ++k) {
    const auto& sample = series.samples[k];
    std::vector<Cell> row;
    row.reserve(o.table.columns.size());
    row.emplace_back(sample.t);
    for (double th : sample.thetas) row.emplace_back(th * angle_scale);
    for (double ph : sample.phases) row.emplace_back(ph * angle_scale);
    row.emplace_back(order_parameter(sample.phases).r);
    if (residual) row.emplace_back(series.diagnostics[k].at("phase_diff_residual"));
    o.table.rows.push_back(std::move(row));
  }
  return o;
}

struct RcritOptions {
  std::optional<double> alpha;
  std::string mode = "both";
  bool closed = false;
  bool scan = false;
  bool both = false;
  double rk_lo = 0.0;
  double rk_hi = 2.0;
  double tol = 1e-10;
};

Output cmd_rcrit(const RcritOptions& r) {
  if (!r.alpha) throw ValidationError("--alpha is required");
  const double alpha = *r.alpha;
  require_finite(alpha, "alpha");
  if (alpha == 0.0) throw ValidationError("alpha must be nonzero");
  if (int(r.closed) + int(r.scan) + int(r.both) > 1) {
    throw ValidationError("choose one of --closed, --scan, --both");
  }
  std::string mode = r.mode;
  if (r.closed) mode = "closed";
  if (r.scan) mode = "scan";
  if (r.both) mode = "both";
  if (mode != "closed" && mode != "scan" && mode != "both") {
    throw ValidationError("mode must be closed, scan or both");
  }
  // Validate alpha against the closed form's domain before a possibly long scan.
  const double closed = critical_rk_closed_form(alpha);

  Output o;
  o.single_object = true;
  o.meta = {{"alpha", format_number(alpha)}, {"mode", mode}};
  if (mode == "closed") {
    o.table.columns = {"alpha", "rk_crit_closed_form"};
    o.table.rows.push_back({alpha, closed});
    return o;
  }
  o.meta.emplace_back("bracket", fmt::format("{}:{}", format_number(r.rk_lo), format_number(r.rk_hi)));
  o.meta.emplace_back("tol", format_number(r.tol));
  const double scanned = critical_rk_scan(alpha, r.rk_lo, r.rk_hi, r.tol);
  if (mode == "scan") {
    o.table.columns = {"alpha", "rk_crit_scan"};
    o.table.rows.push_back({alpha, scanned});
    return o;
  }
  o.table.columns = {"alpha", "rk_crit_closed_form", "rk_crit_scan", "discrepancy"};
  o.table.rows.push_back({alpha, closed, scanned, std::abs(closed - scanned)});
  return o;
}

struct SyncOptions {
  double alpha = -0.5;
  double theta_dot = 1.0;
};

Output cmd_sync(const SyncOptions& s) {
  require_finite(s.alpha, "alpha");
  require_finite(s.theta_dot, "theta-dot");
  const auto report = synchronizes(s.alpha, s.theta_dot);
  Output o;
  o.single_object = true;
  o.meta = {{"alpha", format_number(s.alpha)}, {"theta_dot", format_number(s.theta_dot)}};
  o.table.columns = {"k", "k_critical", "synchronizes", "alpha"};
  o.table.rows.push_back({report.k_value, report.k_critical, report.synchronizes, report.alpha});
  return o;
}

struct WavefunctionOptions {
  double alpha = -0.5;
  double rk = 0.5;
  std::vector<double> theta{0.0};
};

Output cmd_wavefunction(const WavefunctionOptions& w, AngleUnit unit) {
  require_finite(w.alpha, "alpha");
  if (w.theta.empty()) throw ValidationError("--theta needs at least one value");
  const ModelParams params(w.alpha, w.rk);
  Output o;
  o.meta = {{"alpha", format_number(w.alpha)}, {"rk", format_number(w.rk)}};
  o.table.columns = {unit == AngleUnit::deg ? "theta_deg" : "theta_rad",
                     "psi_inc_re", "psi_inc_im", "psi_scatt_re", "psi_scatt_im",
                     "psi_total_re", "psi_total_im", "psi_scatt_abs"};
  for (double theta : w.theta) {
    const auto inc = psi_inc(params, theta);
    const auto scatt = psi_scatt(params, theta);
    const auto total = inc + scatt;
    o.table.rows.push_back({unit == AngleUnit::deg ? rad_to_deg(theta) : theta, inc.real(),
                            inc.imag(), scatt.real(), scatt.imag(), total.real(), total.imag(),
                            std::abs(scatt)});
  }
  return o;
}

// ---------------------------------------------------------------------------
// Argument plumbing

void add_common(CLI::App* sub, CommonOptions& c) {
  sub->add_option("--out,-o", c.out_path, "Write output to this file instead of stdout");
  sub->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"auto", "csv", "json"}));
  sub->add_option("--config", c.config_path, "Flat key=value file; flags override its values");
  sub->add_option("--angle-unit", c.angle_unit, "Angle unit of emitted angles")
      ->check(CLI::IsMember({"auto", "rad", "deg"}));
  sub->add_flag("--no-header", c.no_header, "Omit the leading # metadata line");
}

std::string strip(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::optional<std::string> find_config_path(const std::vector<std::string>& args) {
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) return args[i + 1];
    if (args[i].rfind("--config=", 0) == 0) return args[i].substr(9);
  }
  return std::nullopt;
}

bool parse_bool(const std::string& key, const std::string& v) {
  if (v == "true" || v == "yes" || v == "1" || v == "on") return true;
  if (v == "false" || v == "no" || v == "0" || v == "off") return false;
  throw ValidationError(fmt::format("config key '{}' expects a boolean, got '{}'", key, v));
}

/// Appends config entries the user did not already pass on the command line.
std::vector<std::string> merge_config(const std::vector<std::string>& args, CLI::App* sub,
                                      const std::vector<std::pair<std::string, std::string>>& entries) {
  std::set<std::string> given;
  for (const auto& a : args) {
    if (a.rfind("--", 0) != 0) continue;
    given.insert(a.substr(2, a.find('=') == std::string::npos ? std::string::npos : a.find('=') - 2));
  }
  std::vector<std::string> merged = args;
  for (const auto& [key, value] : entries) {
    if (key == "config") throw ValidationError("config files cannot include other config files");
    if (given.count(key)) continue;
    const CLI::Option* opt = sub->get_option_no_throw("--" + key);
    if (opt == nullptr) throw ValidationError(fmt::format("unknown config key '{}'", key));
    if (opt->get_expected_min() == 0) {
      if (parse_bool(key, value)) merged.push_back("--" + key);
    } else {
      merged.push_back("--" + key + "=" + value);
    }
  }
  return merged;
}

void write_output(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    out.flush();
    if (!out) throw IoError("failed writing to stdout");
    return;
  }
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw IoError("cannot open output file '" + path + "'");
  f << text;
  f.close();
  if (!f) throw IoError("failed writing output file '" + path + "'");
}

}  // namespace

std::vector<std::pair<std::string, std::string>> parse_config(std::istream& in) {
  std::vector<std::pair<std::string, std::string>> entries;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = strip(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument(fmt::format("config line {}: expected key=value", lineno));
    }
    std::string key = strip(line.substr(0, eq));
    std::string value = strip(line.substr(eq + 1));
    if (key.empty()) throw std::invalid_argument(fmt::format("config line {}: empty key", lineno));
    std::replace(key.begin(), key.end(), '_', '-');
    entries.emplace_back(std::move(key), std::move(value));
  }
  return entries;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Coupled phase oscillators for Aharonov-Bohm interference on a ring", "abkm"};
  app.require_subcommand(1);

  CommonOptions common;
  ProfileOptions profile;
  SimulateOptions simulate;
  RcritOptions rcrit;
  SyncOptions sync;
  WavefunctionOptions wave;

  auto* table1_cmd = app.add_subcommand("table1", "Limit ratio and AB detectability for n = 1..12, 118");
  add_common(table1_cmd, common);

  auto* profile_cmd = app.add_subcommand("profile", "Ratio profile Theta_1_dot/theta_dot versus theta");
  add_common(profile_cmd, common);
  profile_cmd->add_option("--alpha", profile.alpha, "Flux parameter");
  profile_cmd->add_option("--rk", profile.rk, "Comma-separated Rk values")->delimiter(',');
  profile_cmd->add_option("--theta-min-deg", profile.theta_min_deg);
  profile_cmd->add_option("--theta-max-deg", profile.theta_max_deg);
  profile_cmd->add_option("--theta-step-deg", profile.theta_step_deg);

  auto* simulate_cmd = app.add_subcommand("simulate", "Integrate the phase-oscillator equations");
  add_common(simulate_cmd, common);
  simulate_cmd->add_option("--model", simulate.model, "mirrored, general, n or half")
      ->check(CLI::IsMember({"mirrored", "general", "n", "half"}));
  simulate_cmd->add_option("--alpha", simulate.alpha);
  simulate_cmd->add_option("--rk", simulate.rk);
  simulate_cmd->add_option("--theta-dot", simulate.theta_dot, "Path 1 angular velocity (mirrored pair)");
  simulate_cmd->add_option("--theta0", simulate.theta0, "Path 1 start angle (mirrored pair)");
  simulate_cmd->add_option("--theta-dots", simulate.theta_dots, "Per-oscillator angular velocities")
      ->delimiter(',');
  simulate_cmd->add_option("--theta0s", simulate.theta0s, "Per-oscillator start angles")->delimiter(',');
  simulate_cmd->add_option("--phases", simulate.phases, "Initial phases (default all zero)")->delimiter(',');
  simulate_cmd->add_option("--dt", simulate.dt, "Step size (default 1e-4 pi / max|theta_dot|)");
  simulate_cmd->add_option("--t-end", simulate.t_end, "End time (default: first oscillator reaches the window edge)");
  simulate_cmd->add_option("--record-every", simulate.record_every, "Sampling stride in steps");
  simulate_cmd->add_option("--margin", simulate.margin, "Stop this far short of |theta| = pi");

  auto* rcrit_cmd = app.add_subcommand("rcrit", "Critical Rk from the closed form and/or a bisection scan");
  add_common(rcrit_cmd, common);
  rcrit_cmd->add_option("--alpha", rcrit.alpha, "Flux parameter, -1 <= alpha < 0");
  rcrit_cmd->add_option("mode,--mode", rcrit.mode, "closed, scan or both");
  rcrit_cmd->add_flag("--closed", rcrit.closed);
  rcrit_cmd->add_flag("--scan", rcrit.scan);
  rcrit_cmd->add_flag("--both", rcrit.both);
  rcrit_cmd->add_option("--rk-lo", rcrit.rk_lo, "Scan bracket lower end");
  rcrit_cmd->add_option("--rk-hi", rcrit.rk_hi, "Scan bracket upper end");
  rcrit_cmd->add_option("--tol", rcrit.tol, "Bisection tolerance");

  auto* sync_cmd = app.add_subcommand("sync", "Synchronization threshold K >= K_critical");
  add_common(sync_cmd, common);
  sync_cmd->add_option("--alpha", sync.alpha);
  sync_cmd->add_option("--theta-dot", sync.theta_dot);

  auto* wave_cmd = app.add_subcommand("wavefunction", "Point evaluation of psi_inc, psi_scatt, psi_total");
  add_common(wave_cmd, common);
  wave_cmd->add_option("--alpha", wave.alpha);
  wave_cmd->add_option("--rk", wave.rk);
  wave_cmd->add_option("--theta", wave.theta, "Comma-separated angles in radians")->delimiter(',');

  std::vector<std::string> effective = args;
  try {
    if (const auto path = find_config_path(args)) {
      std::ifstream f(*path);
      if (!f) {
        err << "abkm: I/O error: cannot read config file '" << *path << "'\n";
        return kIo;
      }
      const auto entries = parse_config(f);
      CLI::App* sub = nullptr;
      for (const auto& a : args) {
        for (auto* candidate : app.get_subcommands({})) {
          if (candidate->get_name() == a) sub = candidate;
        }
        if (sub) break;
      }
      if (sub == nullptr) throw ValidationError("--config needs a subcommand");
      effective = merge_config(args, sub, entries);
    }
  } catch (const std::invalid_argument& e) {
    err << "abkm: " << e.what() << '\n';
    return kValidation;
  }

  try {
    std::vector<std::string> reversed(effective.rbegin(), effective.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kValidation;
  }

  CLI::App* chosen = app.get_subcommands().front();
  const std::string command = chosen->get_name();
  try {
    const bool figure_like = command == "profile";
    const AngleUnit unit = common.angle_unit == "deg"   ? AngleUnit::deg
                           : common.angle_unit == "rad" ? AngleUnit::rad
                           : figure_like                ? AngleUnit::deg
                                                        : AngleUnit::rad;
    const Format format = common.format == "json" ? Format::json
                          : common.format == "csv" ? Format::csv
                          : command == "sync"      ? Format::json
                                                   : Format::csv;

    Output result;
    if (command == "table1") result = cmd_table1();
    else if (command == "profile") result = cmd_profile(profile, unit);
    else if (command == "simulate") result = cmd_simulate(simulate, unit);
    else if (command == "rcrit") result = cmd_rcrit(rcrit);
    else if (command == "sync") result = cmd_sync(sync);
    else result = cmd_wavefunction(wave, unit);

    write_output(render(command, result, format, !common.no_header), common.out_path, out);
    return kOk;
  } catch (const IoError& e) {
    err << "abkm " << command << ": I/O error: " << e.what() << '\n';
    return kIo;
  } catch (const NumericalError& e) {
    err << "abkm " << command << ": numerical failure at t=" << format_number(e.time()) << ": "
        << e.what() << '\n';
    return kNumerical;
  } catch (const SearchError& e) {
    err << "abkm " << command << ": search failed: " << e.what() << '\n';
    return kSearch;
  } catch (const std::domain_error& e) {
    err << "abkm " << command << ": " << e.what() << '\n';
    return kValidation;
  } catch (const std::invalid_argument& e) {
    err << "abkm " << command << ": " << e.what() << '\n';
    return kValidation;
  }
}

}  // namespace abkm::cli
