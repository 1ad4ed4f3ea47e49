// Copyright (c) the semistab contributors.
// SPDX-License-Identifier: Apache-2.0
//
// End-to-end acceptance suite. Each criterion prints one PASS/FAIL line;
// the exit code is the number of failures.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "semistab/fit.hpp"
#include "semistab/generator.hpp"
#include "semistab/modal.hpp"
#include "semistab/models.hpp"
#include "semistab/resolvent.hpp"
#include "semistab/stability.hpp"

using namespace semistab;

namespace {

struct Failure {
  std::string detail;
};

using CheckFn = std::function<std::vector<Failure>()>;

std::vector<Failure> check_spectrum_closed_forms() {
  std::vector<Failure> fails;
  const ModelPreset m = wave(0.0);
  const GeneratorPortrait port = portrait(m.damping, m.spectrum, 50);
  int n = 1;
  for (std::size_t i = 0; i + 1 < port.points.size(); i += 2, ++n) {
    const double nn = n;
    const std::complex<double> expected(-0.5, std::sqrt(4.0 * nn * nn - 1.0) / 2.0);
    const double err_plus = std::abs(port.points[i].value - expected);
    const double err_minus = std::abs(port.points[i + 1].value - std::conj(expected));
    if (err_plus > 1e-12 || err_minus > 1e-12)
      fails.push_back({"n=" + std::to_string(n) + " deviates by " +
                       std::to_string(std::max(err_plus, err_minus))});
  }
  if (n <= 50) fails.push_back({"portrait holds fewer than 50 modes"});
  return fails;
}

std::vector<Failure> check_limit_point_and_accumulation() {
  std::vector<Failure> fails;
  const ModelPreset m = wave(1.0);
  const GeneratorPortrait port = portrait(m.damping, m.spectrum, 50);
  bool found = false;
  for (const auto& p : port.points)
    if (p.label == PointLabel::LimitPoint && p.value == std::complex<double>(-1.0, 0.0))
      found = true;
  if (!found) fails.push_back({"limit point -1 missing from the portrait"});

  for (int n = 3; n <= 50; ++n) {
    const double s = static_cast<double>(n) * n;
    const auto pair = xi_pair(s, s);  // f(s) = s for theta = 1
    const double gap = std::abs(pair.plus + 1.0);
    if (gap > 2.0 / s)
      fails.push_back({"n=" + std::to_string(n) + ": |xi+ + 1| = " + std::to_string(gap) +
                       " > 2/n^2"});
  }
  return fails;
}

std::vector<Failure> check_classification_tables() {
  std::vector<Failure> fails;
  std::vector<double> grid;
  for (double t = -2.0; t <= 3.0 + 1e-12; t += 0.25) grid.push_back(t);

  struct FamilyCase {
    std::string name;
    ModelBuilder builder;
    double exp_lo, exp_hi;  // exponential window
  };
  const std::vector<FamilyCase> cases = {
      {"wave",
       [](double t) {
         const ModelPreset m = wave(t);
         return std::make_pair(m.spectrum, m.damping);
       },
       0.0, 1.0},
      {"beam",
       [](double t) {
         const ModelPreset m = beam(t);
         return std::make_pair(m.spectrum, m.damping);
       },
       0.0, 2.0},
      {"beam-rot",
       [](double t) {
         const ModelPreset m = beam_rotational(t, 1.0);
         return std::make_pair(m.spectrum, m.damping);
       },
       1.0, 2.0},
  };

  for (const auto& fc : cases) {
    const auto rows = classification_table(fc.builder, grid);
    for (const auto& row : rows) {
      const double t = row.parameter;
      StabilityVerdict expected;
      if (t >= fc.exp_lo && t <= fc.exp_hi)
        expected = StabilityVerdict::Exponential;
      else if (t <= 2.0 && fc.name != "wave")
        expected = StabilityVerdict::Semiuniform;
      else if (t <= 1.0 && fc.name == "wave")
        expected = StabilityVerdict::Semiuniform;
      else
        expected = StabilityVerdict::StableOnly;
      if (row.report.verdict != expected)
        fails.push_back({fc.name + " theta=" + std::to_string(t) + ": got " +
                         to_string(row.report.verdict) + ", want " + to_string(expected)});
    }
  }
  return fails;
}

std::vector<Failure> check_dissipation_identity() {
  std::vector<Failure> fails;
  for (double theta : {-1.0, 0.0, 1.0}) {
    const ModelPreset m = wave(theta);
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
      const ModalState z0 = random_state(m.damping, m.spectrum, 100, seed);
      double prev = energy(z0);
      for (double t : {0.1, 0.5, 1.0, 2.0, 3.5, 5.0}) {
        const ModalState z = evolve(z0, t);
        const double e = energy(z);
        if (e > prev * (1.0 + 1e-12)) {
          fails.push_back({"energy increased at theta=" + std::to_string(theta) +
                           " seed=" + std::to_string(seed) + " t=" + std::to_string(t)});
          break;
        }
        prev = e;
        const double h = 1e-5;
        const double cd = (energy(evolve(z0, t + h)) - energy(evolve(z0, t - h))) / (2.0 * h);
        const double rate = dissipation_rate(z);
        if (std::abs(cd - rate) > 1e-6 * std::abs(rate)) {
          fails.push_back({"dissipation mismatch theta=" + std::to_string(theta) +
                           " seed=" + std::to_string(seed) + " t=" + std::to_string(t) +
                           " rel=" + std::to_string(std::abs(cd - rate) / std::abs(rate))});
          break;
        }
      }
    }
  }
  return fails;
}

std::vector<Failure> check_constant_energy_witness() {
  std::vector<Failure> fails;
  const SpectrumSpec spec = SpectrumSpec::discrete({1.0, 4.0, 9.0});
  const DampingFunction f = DampingFunction::tabulated({{1.0, 1.0}, {4.0, 0.0}, {9.0, 2.0}});
  const auto witness = constant_energy_witness(f, spec, 100.0, 401);
  if (!witness) {
    fails.push_back({"witness not produced"});
    return fails;
  }
  if (witness->mode_s != 4.0) fails.push_back({"witness picked the wrong mode"});
  if (witness->max_relative_drift > 1e-12)
    fails.push_back({"energy drift " + std::to_string(witness->max_relative_drift)});
  return fails;
}

struct SlopeCase {
  std::string name;
  SpectrumSpec spectrum;
  DampingFunction damping;
  int budget;
  double slope, tol;
};

std::vector<Failure> check_decay_slopes() {
  std::vector<Failure> fails;
  const ModelPreset w1 = wave(-1.0);
  const ModelPreset w2 = wave(-0.5);
  const ModelPreset br = beam_rotational(0.0, 1.0);
  const std::vector<SlopeCase> cases = {
      {"wave(-1)", w1.spectrum, w1.damping, 300, -0.5, 0.05},
      {"wave(-1/2)", w2.spectrum, w2.damping, 1000, -1.0, 0.1},
      {"beam-rot(0,1)", br.spectrum, br.damping, 300, -0.5, 0.05},
  };
  for (const auto& c : cases) {
    std::vector<double> ts, psis;
    for (int i = 0; i < 40; ++i) {
      const double t = 10.0 * std::pow(100.0, i / 39.0);
      const PsiEstimate est = psi_norm(c.damping, c.spectrum, t, c.budget);
      if (est.truncated) continue;  // outside the certified horizon
      ts.push_back(t);
      psis.push_back(est.value);
    }
    if (ts.size() < 10) {
      fails.push_back({c.name + ": certified horizon too short"});
      continue;
    }
    const LogLogFit fit = fit_loglog(ts, psis);
    if (std::abs(fit.slope - c.slope) > c.tol)
      fails.push_back({c.name + ": slope " + std::to_string(fit.slope) + ", want " +
                       std::to_string(c.slope) + " +- " + std::to_string(c.tol)});
  }
  return fails;
}

std::vector<Failure> check_resolvent_growth() {
  std::vector<Failure> fails;
  const ModelPreset m = wave(-1.0);
  const LogLogFit fit = growth_exponent(m.damping, m.spectrum, 10.0, 1e3, 240, 1000);
  if (std::abs(fit.slope - 2.0) > 0.1)
    fails.push_back({"envelope exponent " + std::to_string(fit.slope) + ", want 2.0 +- 0.1"});

  // Lower-bound witness along the resonances: lambda_k^-2 * norm stays
  // above a fixed regression constant (brute-force value ~ 2.0).
  double min_product = 1e300;
  for (int n = 10; n <= 1000; n *= 2) {
    const double lambda = n;  // sqrt(n^2)
    const double norm = resolvent_norm(m.damping, m.spectrum, lambda, 1000);
    min_product = std::min(min_product, norm / (lambda * lambda));
  }
  if (min_product < 1.9)
    fails.push_back({"lower-bound witness " + std::to_string(min_product) + " < 1.9"});
  return fails;
}

std::vector<Failure> check_bt_consistency() {
  std::vector<Failure> fails;
  for (double theta : {-1.0, -0.5}) {
    const ModelPreset m = wave(theta);
    const BtReport report = bt_consistency(m.damping, m.spectrum, 1000);
    if (!report.consistent ||
        std::abs(report.resolvent_exponent - report.psi_exponent) > 0.2)
      fails.push_back({"theta=" + std::to_string(theta) + ": nu_hat=" +
                       std::to_string(report.resolvent_exponent) + " nu_tilde=" +
                       std::to_string(report.psi_exponent)});
  }
  return fails;
}

std::vector<Failure> check_exponential_decay() {
  std::vector<Failure> fails;
  const ModelPreset m = wave(0.0);
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const ModalState z0 = random_state(m.damping, m.spectrum, 100, seed);
    const double norm0 = std::sqrt(2.0 * energy(z0));
    for (double t = 0.0; t <= 20.0 + 1e-9; t += 0.5) {
      const double norm = std::sqrt(2.0 * energy(evolve(z0, t)));
      if (norm > 10.0 * std::exp(-0.49 * t) * norm0) {
        fails.push_back({"seed=" + std::to_string(seed) + " t=" + std::to_string(t) +
                         ": |S(t)z| = " + std::to_string(norm)});
        break;
      }
    }
  }
  return fails;
}

std::vector<Failure> check_gearhart_pruess_boundedness() {
  std::vector<Failure> fails;
  const ModelPreset m = wave(1.0);
  auto scan = [&](int budget) {
    double worst = 0.0;
    for (int i = 0; i <= 120; ++i) {
      const double lambda = 1e-2 * std::pow(1e5, i / 120.0);  // up to 1e3
      worst = std::max(worst, resolvent_norm(m.damping, m.spectrum, lambda, budget));
      worst = std::max(worst, resolvent_norm(m.damping, m.spectrum, -lambda, budget));
    }
    worst = std::max(worst, resolvent_norm(m.damping, m.spectrum, 0.0, budget));
    return worst;
  };
  const double at_100 = scan(100);
  const double at_1000 = scan(1000);
  if (!(std::isfinite(at_100) && std::isfinite(at_1000)))
    fails.push_back({"profile unbounded"});
  if (std::abs(at_100 - at_1000) > 0.01 * at_1000)
    fails.push_back({"budget dependence: " + std::to_string(at_100) + " vs " +
                     std::to_string(at_1000)});
  return fails;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::vector<Failure> check_cli_determinism() {
  std::vector<Failure> fails;
  const std::string cli = SEMISTAB_CLI_PATH;
  const auto dir = std::filesystem::temp_directory_path() / "semistab_acceptance";
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);

  struct Command {
    std::string name;
    std::string args;  // with {out} placeholder for a per-run artifact path
  };
  const std::vector<Command> commands = {
      {"classify", "classify --model wave --theta -1 --out-json {out}.json"},
      {"spectrum", "spectrum --model wave --theta 0 --modes 50 --out-csv {out}.csv "
                   "--out-svg {out}.svg"},
      {"simulate", "simulate --model wave --theta -1 --modes 50 --t0 0 --t1 5 "
                   "--steps 20 --seed 7 --out-csv {out}.csv"},
      {"psi", "psi --model wave --theta -1 --modes 100 --t-min 10 --t-max 100 "
              "--points 12 --out-csv {out}.csv --out-json {out}.json"},
      {"table", "table --family wave --theta-min -1 --theta-max 1.5 --theta-step 0.5 "
                "--out-csv {out}.csv"},
  };

  for (const auto& cmd : commands) {
    std::vector<std::string> stdouts;
    std::vector<std::string> artifacts[2];
    for (int run = 0; run < 2; ++run) {
      const std::string base =
          (dir / (cmd.name + "_run" + std::to_string(run))).string();
      std::string args = cmd.args;
      std::string::size_type pos;
      while ((pos = args.find("{out}")) != std::string::npos) args.replace(pos, 5, base);
      const std::string stdout_path = base + ".stdout";
      const std::string line = "'" + cli + "' " + args + " > '" + stdout_path + "' 2>&1";
      if (std::system(line.c_str()) != 0) {
        fails.push_back({cmd.name + ": nonzero exit"});
        break;
      }
      stdouts.push_back(slurp(stdout_path));
      for (const char* ext : {".json", ".csv", ".svg"}) {
        const std::filesystem::path artifact = base + ext;
        if (std::filesystem::exists(artifact))
          artifacts[run].push_back(slurp(artifact));
      }
    }
    if (stdouts.size() == 2) {
      // The stdout lines mention per-run paths; compare artifacts only.
      if (artifacts[0] != artifacts[1] || artifacts[0].empty())
        fails.push_back({cmd.name + ": artifacts differ between identical runs"});
    }
  }
  std::filesystem::remove_all(dir);
  return fails;
}

}  // namespace

int main() {
  struct Criterion {
    std::string name;
    double budget_seconds;
    CheckFn run;
  };
  const std::vector<Criterion> criteria = {
      {"spectrum closed forms, wave(theta=0), n=1..50", 1.0, check_spectrum_closed_forms},
      {"limit point -1 and root accumulation, wave(theta=1)", 1.0,
       check_limit_point_and_accumulation},
      {"classification tables over theta in [-2,3]", 1.0, check_classification_tables},
      {"dissipation identity, 20 seeded states x 3 dampings", 5.0,
       check_dissipation_identity},
      {"constant-energy witness on a vanishing damping", 1.0,
       check_constant_energy_witness},
      {"semiuniform decay slopes of the psi gauge", 30.0, check_decay_slopes},
      {"resolvent growth exponent and lower-bound witness", 10.0,
       check_resolvent_growth},
      {"resolvent/gauge exponent consistency", 30.0, check_bt_consistency},
      {"exponential decay envelope, wave(theta=0)", 10.0, check_exponential_decay},
      {"imaginary-axis resolvent boundedness, wave(theta=1)", 10.0,
       check_gearhart_pruess_boundedness},
      {"CLI determinism: identical runs, identical bytes", 30.0, check_cli_determinism},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto& c = criteria[i];
    const auto start = std::chrono::steady_clock::now();
    std::vector<Failure> fails;
    try {
      fails = c.run();
    } catch (const std::exception& e) {
      fails.push_back({std::string("exception: ") + e.what()});
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds > c.budget_seconds)
      fails.push_back({"runtime " + std::to_string(seconds) + " s exceeds " +
                       std::to_string(c.budget_seconds) + " s"});
    std::printf("[%2zu/11] %s  %-55s (%.2f s)\n", i + 1, fails.empty() ? "PASS" : "FAIL",
                c.name.c_str(), seconds);
    for (const auto& f : fails) std::printf("         - %s\n", f.detail.c_str());
    if (!fails.empty()) ++failures;
  }
  return failures;
}
