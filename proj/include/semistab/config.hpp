// Copyright (c) the semistab contributors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>
#include <string>

#include "json.hpp"
#include "semistab/damping.hpp"
#include "semistab/spectrum.hpp"

namespace semistab {

/// A fully resolved system: the pair every computation consumes.
struct SystemConfig {
  SpectrumSpec spectrum;
  DampingFunction damping;
  std::string description;
};

/// Parse a config document. Exactly one input source must be present:
/// either a `model` block naming a preset, or a raw `spectrum` + `damping`
/// pair. Relative paths (tabulated knot CSVs) resolve against `base_dir`.
///
/// Schema:
///   {"model": {"name": "wave"|"beam"|"beam-rot"|"klein-gordon",
///              "theta": t, "omega": w, "mass": m}}
///   {"spectrum": {"kind": "discrete", "eigenvalues": [..],
///                 "tail": {"form": "square"|"fourth"|"rotational-quotient"|"power-law",
///                          "start": n, "omega": w, "c": c, "p": p}}
///    | {"kind": "continuous", "intervals": [[lo, hi], [lo, null], ..]},
///    "damping": {"family": "zero"}
///             | {"family": "constant", "c": c}
///             | {"family": "power", "theta": t}
///             | {"family": "rotational-inertia", "theta": t, "omega": w}
///             | {"family": "tabulated", "knots": [[s, f], ..] | "knots_csv": "path",
///                "tail": {"p": p, "c": c}}}
SystemConfig system_from_json(const nlohmann::json& doc,
                              const std::filesystem::path& base_dir);

/// Load and parse a JSON config file, wrapping parse failures in
/// ConfigError with file/position diagnostics.
nlohmann::json load_config_file(const std::filesystem::path& path);

}  // namespace semistab
