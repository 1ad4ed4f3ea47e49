// Copyright (c) the semistab contributors.
// SPDX-License-Identifier: Apache-2.0

#include "semistab/config.hpp"

#include <fstream>

#include "semistab/models.hpp"
#include "semistab/report.hpp"

namespace semistab {

namespace {

using nlohmann::json;

double require_number(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number())
    throw ConfigError(std::string("missing or non-numeric field '") + key + "'");
  return j[key].get<double>();
}

double number_or(const json& j, const char* key, double fallback) {
  if (!j.contains(key)) return fallback;
  if (!j[key].is_number())
    throw ConfigError(std::string("field '") + key + "' must be a number");
  return j[key].get<double>();
}

TailFormula tail_from_json(const json& j) {
  if (!j.contains("form") || !j["form"].is_string())
    throw ConfigError("spectrum tail needs a 'form' string");
  const std::string form = j["form"].get<std::string>();
  TailFormula tail;
  if (form == "square") {
    tail.form = TailForm::Square;
  } else if (form == "fourth") {
    tail.form = TailForm::Fourth;
  } else if (form == "rotational-quotient") {
    tail.form = TailForm::RotationalQuotient;
    tail.omega = require_number(j, "omega");
  } else if (form == "power-law") {
    tail.form = TailForm::PowerLaw;
    tail.c = require_number(j, "c");
    tail.p = require_number(j, "p");
  } else {
    throw ConfigError("unknown tail form '" + form + "'");
  }
  tail.start_index = static_cast<int>(number_or(j, "start", 1.0));
  return tail;
}

SpectrumSpec spectrum_from_json(const json& j) {
  if (!j.contains("kind") || !j["kind"].is_string())
    throw ConfigError("spectrum needs a 'kind' string");
  const std::string kind = j["kind"].get<std::string>();
  if (kind == "discrete") {
    std::vector<double> eigenvalues;
    if (j.contains("eigenvalues")) {
      if (!j["eigenvalues"].is_array())
        throw ConfigError("'eigenvalues' must be an array of numbers");
      for (const auto& e : j["eigenvalues"]) eigenvalues.push_back(e.get<double>());
    }
    std::optional<TailFormula> tail;
    if (j.contains("tail")) tail = tail_from_json(j["tail"]);
    return SpectrumSpec::discrete(std::move(eigenvalues), tail);
  }
  if (kind == "continuous") {
    if (!j.contains("intervals") || !j["intervals"].is_array())
      throw ConfigError("continuous spectrum needs an 'intervals' array");
    std::vector<Interval> intervals;
    for (const auto& iv : j["intervals"]) {
      if (!iv.is_array() || iv.size() != 2)
        throw ConfigError("each interval must be [lo, hi] with hi = null for unbounded");
      Interval out;
      out.lo = iv[0].get<double>();
      if (iv[1].is_null()) {
        out.unbounded = true;
      } else {
        out.hi = iv[1].get<double>();
      }
      intervals.push_back(out);
    }
    return SpectrumSpec::continuous(std::move(intervals));
  }
  throw ConfigError("unknown spectrum kind '" + kind + "'");
}

DampingFunction damping_from_json(const json& j, const std::filesystem::path& base_dir) {
  if (!j.contains("family") || !j["family"].is_string())
    throw ConfigError("damping needs a 'family' string");
  const std::string family = j["family"].get<std::string>();
  if (family == "zero") return DampingFunction::zero();
  if (family == "constant") return DampingFunction::constant(require_number(j, "c"));
  if (family == "power") return DampingFunction::power(require_number(j, "theta"));
  if (family == "rotational-inertia")
    return DampingFunction::rotational_inertia(require_number(j, "theta"),
                                               require_number(j, "omega"));
  if (family == "tabulated") {
    std::vector<std::pair<double, double>> knots;
    if (j.contains("knots")) {
      if (!j["knots"].is_array()) throw ConfigError("'knots' must be an array of [s, f] pairs");
      for (const auto& k : j["knots"]) {
        if (!k.is_array() || k.size() != 2) throw ConfigError("each knot must be [s, f]");
        knots.emplace_back(k[0].get<double>(), k[1].get<double>());
      }
    } else if (j.contains("knots_csv")) {
      std::filesystem::path p = j["knots_csv"].get<std::string>();
      if (p.is_relative()) p = base_dir / p;
      knots = parse_knots(read_csv_file(p));
    } else {
      throw ConfigError("tabulated damping needs 'knots' or 'knots_csv'");
    }
    std::optional<DampingTail> tail;
    if (j.contains("tail"))
      tail = DampingTail{require_number(j["tail"], "p"), require_number(j["tail"], "c")};
    return DampingFunction::tabulated(std::move(knots), tail);
  }
  throw ConfigError("unknown damping family '" + family + "'");
}

SystemConfig preset_from_json(const json& j) {
  if (!j.contains("name") || !j["name"].is_string())
    throw ConfigError("model block needs a 'name' string");
  const std::string name = j["name"].get<std::string>();
  ModelPreset preset = [&] {
    if (name == "wave") return wave(require_number(j, "theta"));
    if (name == "beam") return beam(require_number(j, "theta"));
    if (name == "beam-rot")
      return beam_rotational(require_number(j, "theta"), require_number(j, "omega"));
    if (name == "klein-gordon") return klein_gordon(require_number(j, "mass"));
    throw ConfigError("unknown model '" + name + "'");
  }();
  return {preset.spectrum, preset.damping, preset.name};
}

}  // namespace

SystemConfig system_from_json(const nlohmann::json& doc,
                              const std::filesystem::path& base_dir) {
  const bool has_model = doc.contains("model");
  const bool has_raw = doc.contains("spectrum") || doc.contains("damping");
  if (has_model && has_raw)
    throw ConfigError("config must provide either 'model' or raw 'spectrum'+'damping', not both");
  if (has_model) return preset_from_json(doc["model"]);
  if (!doc.contains("spectrum") || !doc.contains("damping"))
    throw ConfigError("raw config needs both 'spectrum' and 'damping'");
  SystemConfig out{spectrum_from_json(doc["spectrum"]),
                   damping_from_json(doc["damping"], base_dir), "custom"};
  return out;
}

nlohmann::json load_config_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path.string());
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError(path.string() + ": " + e.what());
  }
}

}  // namespace semistab
