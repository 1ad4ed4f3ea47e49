// Copyright (c) the semistab contributors.
// SPDX-License-Identifier: Apache-2.0
//
// Report writers and readers. Conventions shared by every artifact the
// tool emits: CSV with a header row, comma separators, LF line endings and
// 17 significant digits (doubles round-trip exactly); JSON with stable key
// order; SVG 1.1 with 6 significant digits. Files are written atomically
// (temp file + rename).

#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "semistab/generator.hpp"
#include "semistab/modal.hpp"
#include "semistab/resolvent.hpp"
#include "semistab/stability.hpp"

namespace semistab {

using ordered_json = nlohmann::ordered_json;

std::string format_sig(double x, int sig_digits);

void write_file_atomic(const std::filesystem::path& path, const std::string& content);

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  std::string to_string() const;
};

CsvTable parse_csv(const std::string& text);
CsvTable read_csv_file(const std::filesystem::path& path);

/// Two-column numeric table (knot abscissa, damping value); a non-numeric
/// first row is treated as a header.
std::vector<std::pair<double, double>> parse_knots(const CsvTable& table);

std::string portrait_csv(const GeneratorPortrait& portrait);
std::string portrait_svg(const GeneratorPortrait& portrait);

struct TrajectoryRow {
  double t = 0.0;
  double energy = 0.0;
  double dissipation_rate = 0.0;
  std::optional<PsiEstimate> psi;
};

std::string trajectory_csv(const std::vector<TrajectoryRow>& rows);

struct PsiRow {
  double t = 0.0;
  PsiEstimate estimate;
};

std::string psi_csv(const std::vector<PsiRow>& rows);
std::string profile_csv(const ResolventProfile& profile);
std::string classification_csv(const std::vector<ClassificationRow>& rows);

ordered_json stability_json(const StabilityReport& report);
ordered_json fit_json(const LogLogFit& fit);
ordered_json bt_json(const BtReport& report);

/// Log-log polyline of a positive curve (used for the decay gauge).
std::string loglog_curve_svg(const std::vector<double>& x, const std::vector<double>& y,
                             const std::string& x_label, const std::string& y_label);

}  // namespace semistab
