// Copyright (c) the semistab contributors.
// SPDX-License-Identifier: Apache-2.0
//
// semistab: spectra, stability classification, exact modal simulation and
// resolvent profiles for the damped evolution equation
// u'' + A u + f(A) u' = 0.

#include <complex>
#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "semistab/config.hpp"
#include "semistab/generator.hpp"
#include "semistab/modal.hpp"
#include "semistab/models.hpp"
#include "semistab/report.hpp"
#include "semistab/resolvent.hpp"
#include "semistab/stability.hpp"

namespace {

using namespace semistab;

struct SystemOptions {
  std::string model;
  double theta = 0.0;
  double omega = 1.0;
  double mass = 1.0;
  std::string config_path;
  int budget = 100;
  std::uint64_t seed = 12345;

  bool theta_given = false;
  bool budget_given = false;
  bool seed_given = false;
  nlohmann::json config_doc;  // loaded lazily
};

void add_system_options(CLI::App* cmd, SystemOptions& opt) {
  cmd->add_option("--model", opt.model,
                  "preset: wave | beam | beam-rot | klein-gordon");
  cmd->add_option("--theta", opt.theta, "damping exponent for wave/beam presets")
      ->each([&opt](const std::string&) { opt.theta_given = true; });
  cmd->add_option("--omega", opt.omega, "rotational inertia (beam-rot)");
  cmd->add_option("--mass", opt.mass, "mass (klein-gordon)");
  cmd->add_option("--config", opt.config_path, "JSON config file (preset or raw system)");
  cmd->add_option("--modes", opt.budget, "mode/sampling budget")
      ->each([&opt](const std::string&) { opt.budget_given = true; });
  cmd->add_option("--seed", opt.seed, "seed for random initial data")
      ->each([&opt](const std::string&) { opt.seed_given = true; });
}

SystemConfig resolve_system(SystemOptions& opt) {
  const bool has_model = !opt.model.empty();
  const bool has_config = !opt.config_path.empty();
  if (has_model && has_config)
    throw ConfigError("give either --model or --config, not both");
  if (has_model) {
    if (opt.model == "wave") {
      if (!opt.theta_given) throw ConfigError("wave preset needs --theta");
      const ModelPreset m = wave(opt.theta);
      return {m.spectrum, m.damping, m.name};
    }
    if (opt.model == "beam") {
      if (!opt.theta_given) throw ConfigError("beam preset needs --theta");
      const ModelPreset m = beam(opt.theta);
      return {m.spectrum, m.damping, m.name};
    }
    if (opt.model == "beam-rot") {
      if (!opt.theta_given) throw ConfigError("beam-rot preset needs --theta");
      const ModelPreset m = beam_rotational(opt.theta, opt.omega);
      return {m.spectrum, m.damping, m.name};
    }
    if (opt.model == "klein-gordon") {
      const ModelPreset m = klein_gordon(opt.mass);
      return {m.spectrum, m.damping, m.name};
    }
    throw ConfigError("unknown model '" + opt.model + "'");
  }
  if (!has_config) throw ConfigError("no input source: give --model or --config");
  opt.config_doc = load_config_file(opt.config_path);
  const auto base = std::filesystem::path(opt.config_path).parent_path();
  if (!opt.budget_given && opt.config_doc.contains("budget"))
    opt.budget = opt.config_doc["budget"].get<int>();
  if (!opt.seed_given && opt.config_doc.contains("seed"))
    opt.seed = opt.config_doc["seed"].get<std::uint64_t>();
  return system_from_json(opt.config_doc, base);
}

void emit(const std::filesystem::path& path, const std::string& content) {
  write_file_atomic(path, content);
  std::cout << "wrote " << path.string() << "\n";
}

std::vector<double> log_grid(double lo, double hi, int n) {
  std::vector<double> grid;
  grid.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    grid.push_back(lo * std::pow(hi / lo, static_cast<double>(i) / (n - 1)));
  return grid;
}

int run_spectrum(SystemOptions& opt, const std::string& out_csv, const std::string& out_svg) {
  const SystemConfig sys = resolve_system(opt);
  const GeneratorPortrait port = portrait(sys.damping, sys.spectrum, opt.budget);
  for (const auto& w : port.warnings) std::cout << "warning: " << w << "\n";
  if (!out_csv.empty()) emit(out_csv, portrait_csv(port));
  if (!out_svg.empty()) emit(out_svg, portrait_svg(port));
  if (out_csv.empty() && out_svg.empty()) std::cout << portrait_csv(port);
  return 0;
}

int run_classify(SystemOptions& opt, const std::string& out_json) {
  const SystemConfig sys = resolve_system(opt);
  const StabilityReport report = classify(sys.damping, sys.spectrum);
  const std::string body = stability_json(report).dump(2) + "\n";
  if (out_json.empty())
    std::cout << body;
  else
    emit(out_json, body);
  return 0;
}

int run_simulate(SystemOptions& opt, double t0, double t1, int steps,
                 const std::string& out_csv) {
  const SystemConfig sys = resolve_system(opt);
  if (!(t1 >= t0) || t0 < 0.0) throw ConfigError("need 0 <= t0 <= t1");
  if (steps < 1) throw ConfigError("need at least one step");

  ModalState state = [&] {
    if (opt.config_doc.contains("initial")) {
      const auto& init = opt.config_doc["initial"];
      auto parse_vec = [](const nlohmann::json& arr) {
        std::vector<std::complex<double>> out;
        for (const auto& c : arr) out.emplace_back(c[0].get<double>(), c[1].get<double>());
        return out;
      };
      const auto w = init.contains("w") ? parse_vec(init["w"])
                                        : std::vector<std::complex<double>>{};
      const auto v = init.contains("v") ? parse_vec(init["v"])
                                        : std::vector<std::complex<double>>{};
      return make_state(sys.damping, sys.spectrum, opt.budget, w, v);
    }
    return random_state(sys.damping, sys.spectrum, opt.budget, opt.seed);
  }();

  const bool with_gauge =
      generator_bijective(sys.damping, sys.spectrum) == Tristate::True;
  std::vector<TrajectoryRow> rows;
  rows.reserve(static_cast<std::size_t>(steps) + 1);
  for (int k = 0; k <= steps; ++k) {
    const double t = t0 + (t1 - t0) * static_cast<double>(k) / steps;
    const ModalState z = evolve(state, t);
    TrajectoryRow row;
    row.t = t;
    row.energy = energy(z);
    row.dissipation_rate = dissipation_rate(z);
    if (with_gauge) row.psi = psi_norm(sys.damping, sys.spectrum, t, opt.budget);
    rows.push_back(row);
  }
  const std::string body = trajectory_csv(rows);
  if (out_csv.empty())
    std::cout << body;
  else
    emit(out_csv, body);
  return 0;
}

int run_psi(SystemOptions& opt, double t_min, double t_max, int points,
            const std::string& out_csv, const std::string& out_json,
            const std::string& out_svg) {
  const SystemConfig sys = resolve_system(opt);
  if (!(t_min > 0.0) || !(t_max > t_min)) throw ConfigError("need 0 < t-min < t-max");
  if (points < 2) throw ConfigError("need at least two points");

  std::vector<PsiRow> rows;
  std::vector<double> fit_t, fit_psi;
  for (double t : log_grid(t_min, t_max, points)) {
    const PsiEstimate est = psi_norm(sys.damping, sys.spectrum, t, opt.budget);
    rows.push_back({t, est});
    if (!est.truncated) {
      fit_t.push_back(t);
      fit_psi.push_back(est.value);
    }
  }
  if (!out_csv.empty()) emit(out_csv, psi_csv(rows));

  ordered_json j;
  j["system"] = sys.description;
  j["budget"] = opt.budget;
  j["certified_points"] = fit_t.size();
  if (fit_t.size() >= 10) {
    const LogLogFit fit = fit_loglog(fit_t, fit_psi);
    j["fit"] = fit_json(fit);
  } else {
    j["fit"] = nullptr;
    j["note"] = "certified horizon too short for a slope fit";
  }
  const std::string body = j.dump(2) + "\n";
  if (out_json.empty())
    std::cout << body;
  else
    emit(out_json, body);

  if (!out_svg.empty()) {
    std::vector<double> ts, vals;
    for (const auto& r : rows) {
      ts.push_back(r.t);
      vals.push_back(r.estimate.value);
    }
    emit(out_svg, loglog_curve_svg(ts, vals, "t", "psi"));
  }
  return 0;
}

int run_resolvent(SystemOptions& opt, double lo, double hi, int points,
                  const std::string& out_csv, const std::string& out_json) {
  const SystemConfig sys = resolve_system(opt);
  const ResolventProfile profile =
      resolvent_profile(sys.damping, sys.spectrum, lo, hi, points, opt.budget);
  for (const auto& w : profile.warnings) std::cout << "warning: " << w << "\n";
  if (!out_csv.empty()) emit(out_csv, profile_csv(profile));

  ordered_json j;
  j["system"] = sys.description;
  j["budget"] = opt.budget;
  j["samples"] = profile.samples.size();
  try {
    const LogLogFit fit = growth_exponent(sys.damping, sys.spectrum, lo, hi, points, opt.budget);
    j["fit"] = fit_json(fit);
  } catch (const NotSemiuniform&) {
    j["fit"] = nullptr;
    j["note"] = "growth exponent defined only for semiuniformly stable systems";
  }
  const std::string body = j.dump(2) + "\n";
  if (out_json.empty())
    std::cout << body;
  else
    emit(out_json, body);
  return 0;
}

int run_bt_check(SystemOptions& opt, const std::string& out_json) {
  const SystemConfig sys = resolve_system(opt);
  const BtReport report = bt_consistency(sys.damping, sys.spectrum, opt.budget);
  const std::string body = bt_json(report).dump(2) + "\n";
  if (out_json.empty())
    std::cout << body;
  else
    emit(out_json, body);
  return 0;
}

int run_table(const std::string& family, double theta_min, double theta_max,
              double theta_step, double omega, const std::string& out_csv) {
  if (!(theta_step > 0.0)) throw ConfigError("need theta-step > 0");
  std::vector<double> grid;
  for (double t = theta_min; t <= theta_max + 1e-12; t += theta_step) grid.push_back(t);

  ModelBuilder builder;
  if (family == "wave") {
    builder = [](double t) {
      const ModelPreset m = wave(t);
      return std::make_pair(m.spectrum, m.damping);
    };
  } else if (family == "beam") {
    builder = [](double t) {
      const ModelPreset m = beam(t);
      return std::make_pair(m.spectrum, m.damping);
    };
  } else if (family == "beam-rot") {
    builder = [omega](double t) {
      const ModelPreset m = beam_rotational(t, omega);
      return std::make_pair(m.spectrum, m.damping);
    };
  } else {
    throw ConfigError("unknown family '" + family + "'");
  }

  const auto rows = classification_table(builder, grid);
  const std::string body = classification_csv(rows);
  if (out_csv.empty())
    std::cout << body;
  else
    emit(out_csv, body);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"numerical laboratory for u'' + A u + f(A) u' = 0"};
  app.require_subcommand(1);

  SystemOptions opt;
  std::string out_csv, out_json, out_svg;
  double t0 = 0.0, t1 = 10.0;
  int steps = 100;
  double t_min = 10.0, t_max = 1e3;
  double lambda_min = 10.0, lambda_max = 1e3;
  int points = 120;
  std::string family = "wave";
  double theta_min = -2.0, theta_max = 3.0, theta_step = 0.25, table_omega = 1.0;

  auto* spectrum_cmd = app.add_subcommand("spectrum", "generator spectrum portrait");
  add_system_options(spectrum_cmd, opt);
  spectrum_cmd->add_option("--out-csv", out_csv, "portrait CSV path");
  spectrum_cmd->add_option("--out-svg", out_svg, "portrait SVG path");

  auto* classify_cmd = app.add_subcommand("classify", "stability classification report");
  add_system_options(classify_cmd, opt);
  classify_cmd->add_option("--out-json", out_json, "report path (default: stdout)");

  auto* simulate_cmd = app.add_subcommand("simulate", "exact modal trajectory");
  add_system_options(simulate_cmd, opt);
  simulate_cmd->add_option("--t0", t0, "start time");
  simulate_cmd->add_option("--t1", t1, "end time");
  simulate_cmd->add_option("--steps", steps, "number of output intervals");
  simulate_cmd->add_option("--out-csv", out_csv, "trajectory CSV path");

  auto* psi_cmd = app.add_subcommand("psi", "decay gauge |S(t) A^{-1}| with slope fit");
  add_system_options(psi_cmd, opt);
  psi_cmd->add_option("--t-min", t_min, "first time");
  psi_cmd->add_option("--t-max", t_max, "last time");
  psi_cmd->add_option("--points", points, "log-grid size");
  psi_cmd->add_option("--out-csv", out_csv, "gauge CSV path");
  psi_cmd->add_option("--out-json", out_json, "fit JSON path (default: stdout)");
  psi_cmd->add_option("--out-svg", out_svg, "log-log curve SVG path");

  auto* resolvent_cmd = app.add_subcommand("resolvent", "imaginary-axis resolvent profile");
  add_system_options(resolvent_cmd, opt);
  resolvent_cmd->add_option("--lambda-min", lambda_min, "first frequency");
  resolvent_cmd->add_option("--lambda-max", lambda_max, "last frequency");
  resolvent_cmd->add_option("--points", points, "log-grid size");
  resolvent_cmd->add_option("--out-csv", out_csv, "profile CSV path");
  resolvent_cmd->add_option("--out-json", out_json, "fit JSON path (default: stdout)");

  auto* bt_cmd = app.add_subcommand("bt-check",
                                    "resolvent-growth vs gauge-decay consistency");
  add_system_options(bt_cmd, opt);
  bt_cmd->add_option("--out-json", out_json, "report path (default: stdout)");

  auto* table_cmd = app.add_subcommand("table", "classification table over a theta grid");
  table_cmd->add_option("--family", family, "wave | beam | beam-rot");
  table_cmd->add_option("--theta-min", theta_min, "grid start");
  table_cmd->add_option("--theta-max", theta_max, "grid end");
  table_cmd->add_option("--theta-step", theta_step, "grid step");
  table_cmd->add_option("--omega", table_omega, "rotational inertia (beam-rot)");
  table_cmd->add_option("--out-csv", out_csv, "table CSV path");

  CLI11_PARSE(app, argc, argv);

  try {
    if (spectrum_cmd->parsed()) return run_spectrum(opt, out_csv, out_svg);
    if (classify_cmd->parsed()) return run_classify(opt, out_json);
    if (simulate_cmd->parsed()) return run_simulate(opt, t0, t1, steps, out_csv);
    if (psi_cmd->parsed()) return run_psi(opt, t_min, t_max, points, out_csv, out_json, out_svg);
    if (resolvent_cmd->parsed())
      return run_resolvent(opt, lambda_min, lambda_max, points, out_csv, out_json);
    if (bt_cmd->parsed()) return run_bt_check(opt, out_json);
    if (table_cmd->parsed())
      return run_table(family, theta_min, theta_max, theta_step, table_omega, out_csv);
  } catch (const ConfigError& e) {
    std::cerr << "error (" << e.name() << "): " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    std::cerr << "error (" << e.name() << "): " << e.what() << "\n";
    return 2;
  }
  return 0;
}
