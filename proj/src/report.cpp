// Copyright (c) the semistab contributors.
// SPDX-License-Identifier: Apache-2.0

#include "semistab/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace semistab {

namespace {

constexpr int kCsvDigits = 17;
constexpr int kSvgDigits = 6;

std::string csv_num(double x) { return format_sig(x, kCsvDigits); }
std::string svg_num(double x) { return format_sig(x, kSvgDigits); }

std::string tristate_str(Tristate t) { return std::string(to_string(t)); }

}  // namespace

std::string format_sig(double x, int sig_digits) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", sig_digits, x);
  return buf;
}

void write_file_atomic(const std::filesystem::path& path, const std::string& content) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  const std::filesystem::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw ConfigError("cannot open " + tmp.string() + " for writing");
    out << content;
  }
  std::filesystem::rename(tmp, path);
}

std::string CsvTable::to_string() const {
  std::ostringstream os;
  auto line = [&os](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) os << ',';
      os << cells[i];
    }
    os << '\n';
  };
  line(header);
  for (const auto& row : rows) line(row);
  return os.str();
}

CsvTable parse_csv(const std::string& text) {
  CsvTable table;
  std::istringstream is(text);
  std::string line;
  bool first = true;
  while (std::getline(is, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::size_t start = 0;
    while (true) {
      const std::size_t pos = line.find(',', start);
      cells.push_back(line.substr(start, pos - start));
      if (pos == std::string::npos) break;
      start = pos + 1;
    }
    if (first) {
      table.header = std::move(cells);
      first = false;
    } else {
      table.rows.push_back(std::move(cells));
    }
  }
  return table;
}

CsvTable read_csv_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return parse_csv(os.str());
}

namespace {

bool numeric_cell(const std::string& cell, double& out) {
  char* end = nullptr;
  out = std::strtod(cell.c_str(), &end);
  return end != cell.c_str() && *end == '\0';
}

}  // namespace

std::vector<std::pair<double, double>> parse_knots(const CsvTable& table) {
  std::vector<std::pair<double, double>> knots;
  auto take_row = [&knots](const std::vector<std::string>& row) -> bool {
    if (row.size() < 2) return false;
    double s = 0.0, fs = 0.0;
    if (!numeric_cell(row[0], s) || !numeric_cell(row[1], fs)) return false;
    knots.emplace_back(s, fs);
    return true;
  };
  // The header row of a raw two-column file may itself be numeric.
  take_row(table.header);
  for (const auto& row : table.rows)
    if (!take_row(row)) throw ConfigError("knot CSV row is not a numeric pair");
  if (knots.size() < 2) throw ConfigError("knot CSV needs at least two rows");
  return knots;
}

std::string portrait_csv(const GeneratorPortrait& portrait) {
  CsvTable table;
  table.header = {"s_or_ell", "label", "re", "im", "eigenvalue_flag", "regime"};
  for (const auto& p : portrait.points) {
    const bool xi = p.label == PointLabel::XiPlus || p.label == PointLabel::XiMinus;
    table.rows.push_back({csv_num(p.source), to_string(p.label), csv_num(p.value.real()),
                          csv_num(p.value.imag()), p.eigenvalue ? "1" : "0",
                          xi ? to_string(p.regime) : ""});
  }
  return table.to_string();
}

std::string trajectory_csv(const std::vector<TrajectoryRow>& rows) {
  CsvTable table;
  table.header = {"t", "energy", "dissipation_rate", "psi", "maximizing_mode"};
  for (const auto& r : rows) {
    std::vector<std::string> cells{csv_num(r.t), csv_num(r.energy),
                                   csv_num(r.dissipation_rate), "", ""};
    if (r.psi) {
      cells[3] = csv_num(r.psi->value);
      cells[4] = std::to_string(r.psi->maximizing_index);
    }
    table.rows.push_back(std::move(cells));
  }
  return table.to_string();
}

std::string psi_csv(const std::vector<PsiRow>& rows) {
  CsvTable table;
  table.header = {"t", "psi", "maximizing_mode", "maximizing_s", "certified"};
  for (const auto& r : rows)
    table.rows.push_back({csv_num(r.t), csv_num(r.estimate.value),
                          std::to_string(r.estimate.maximizing_index),
                          csv_num(r.estimate.maximizing_s),
                          r.estimate.truncated ? "0" : "1"});
  return table.to_string();
}

std::string profile_csv(const ResolventProfile& profile) {
  CsvTable table;
  table.header = {"lambda", "norm", "maximizing_s"};
  for (const auto& s : profile.samples)
    table.rows.push_back({csv_num(s.lambda), csv_num(s.norm), csv_num(s.maximizing_s)});
  return table.to_string();
}

std::string classification_csv(const std::vector<ClassificationRow>& rows) {
  CsvTable table;
  table.header = {"parameter", "verdict"};
  for (const auto& r : rows)
    table.rows.push_back({csv_num(r.parameter), to_string(r.report.verdict)});
  return table.to_string();
}

ordered_json stability_json(const StabilityReport& report) {
  ordered_json j;
  j["verdict"] = to_string(report.verdict);
  ordered_json cond;
  cond["inf_f_positive"] = tristate_str(report.conditions.inf_f_positive);
  cond["sup_ratio_finite"] = tristate_str(report.conditions.sup_ratio_finite);
  cond["zero_set_empty"] = tristate_str(report.conditions.zero_set_empty);
  cond["zero_set_countable"] = tristate_str(report.conditions.zero_set_countable);
  cond["zero_set_null_measure"] = tristate_str(report.conditions.zero_set_null_measure);
  j["conditions"] = cond;
  if (report.rates) {
    ordered_json rates;
    if (report.rates->alpha) rates["alpha"] = *report.rates->alpha;
    if (report.rates->beta) rates["beta"] = *report.rates->beta;
    if (auto e = report.rates->lower_exponent()) rates["rate_lower"] = *e;
    if (auto e = report.rates->upper_exponent()) rates["rate_upper"] = *e;
    rates["optimal"] = report.rates->optimal;
    rates["exact"] = report.rates->exact;
    j["rates"] = rates;
  } else {
    j["rates"] = nullptr;
  }
  j["spectral_bound"] = report.spectral_bound;
  j["spectral_bound_exact"] = report.spectral_bound_exact;
  ordered_json reasons = ordered_json::array();
  for (const auto& [condition, criterion] : report.reasons) {
    ordered_json r;
    r["condition"] = condition;
    r["criterion"] = criterion;
    reasons.push_back(r);
  }
  j["reasons"] = reasons;
  return j;
}

ordered_json fit_json(const LogLogFit& fit) {
  ordered_json j;
  j["slope"] = fit.slope;
  j["intercept"] = fit.intercept;
  j["residual_rms"] = fit.residual_rms;
  j["points"] = fit.point_count;
  return j;
}

ordered_json bt_json(const BtReport& report) {
  ordered_json j;
  j["resolvent_exponent"] = report.resolvent_exponent;
  j["psi_exponent"] = report.psi_exponent;
  j["psi_slope"] = report.psi_slope;
  j["consistent"] = report.consistent;
  j["resolvent_fit"] = fit_json(report.resolvent_fit);
  j["psi_fit"] = fit_json(report.psi_fit);
  return j;
}

namespace {

struct SvgFrame {
  double x_min, x_max, y_min, y_max;   // data coordinates
  static constexpr double width = 640.0;
  static constexpr double height = 480.0;
  static constexpr double margin = 48.0;

  double px(double x) const {
    return margin + (x - x_min) / (x_max - x_min) * (width - 2 * margin);
  }
  double py(double y) const {
    return height - margin - (y - y_min) / (y_max - y_min) * (height - 2 * margin);
  }
};

}  // namespace

std::string portrait_svg(const GeneratorPortrait& portrait) {
  // Data extent with a small pad; degenerate extents widened to unit size.
  double x_min = 0.0, x_max = 0.0, y_min = 0.0, y_max = 0.0;
  bool first = true;
  for (const auto& p : portrait.points) {
    const double x = p.value.real(), y = p.value.imag();
    if (first) {
      x_min = x_max = x;
      y_min = y_max = y;
      first = false;
    }
    x_min = std::min(x_min, x);
    x_max = std::max(x_max, x);
    y_min = std::min(y_min, y);
    y_max = std::max(y_max, y);
  }
  auto widen = [](double& lo, double& hi) {
    const double pad = std::max(0.05 * (hi - lo), 0.5);
    lo -= pad;
    hi += pad;
  };
  widen(x_min, x_max);
  widen(y_min, y_max);
  SvgFrame frame{x_min, x_max, y_min, y_max};

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" "
        "width=\"640\" height=\"480\" viewBox=\"0 0 640 480\">\n"
     << "<style>\n"
     << ".axis{stroke:#444;stroke-width:1}\n"
     << ".xi_plus{fill:#1f6fb4}\n"
     << ".xi_minus{fill:#e07a22}\n"
     << ".limit_point{fill:#c32828}\n"
     << ".zero{fill:#2c9440}\n"
     << "</style>\n";

  // Axes through the origin when visible, otherwise frame edges.
  const double ax = (0.0 >= x_min && 0.0 <= x_max) ? frame.px(0.0) : frame.px(x_min);
  const double ay = (0.0 >= y_min && 0.0 <= y_max) ? frame.py(0.0) : frame.py(y_min);
  os << "<line class=\"axis\" x1=\"" << svg_num(frame.px(x_min)) << "\" y1=\""
     << svg_num(ay) << "\" x2=\"" << svg_num(frame.px(x_max)) << "\" y2=\""
     << svg_num(ay) << "\"/>\n";
  os << "<line class=\"axis\" x1=\"" << svg_num(ax) << "\" y1=\""
     << svg_num(frame.py(y_min)) << "\" x2=\"" << svg_num(ax) << "\" y2=\""
     << svg_num(frame.py(y_max)) << "\"/>\n";

  for (const auto& p : portrait.points) {
    os << "<circle class=\"" << to_string(p.label) << "\" cx=\""
       << svg_num(frame.px(p.value.real())) << "\" cy=\""
       << svg_num(frame.py(p.value.imag())) << "\" r=\"2.5\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

std::string loglog_curve_svg(const std::vector<double>& x, const std::vector<double>& y,
                             const std::string& x_label, const std::string& y_label) {
  if (x.empty() || x.size() != y.size())
    throw InvalidParameter("curve needs matching nonempty data");
  std::vector<double> lx(x.size()), ly(y.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!(x[i] > 0.0) || !(y[i] > 0.0))
      throw InvalidParameter("log-log curve needs positive data");
    lx[i] = std::log10(x[i]);
    ly[i] = std::log10(y[i]);
  }
  const auto [x_lo, x_hi] = std::minmax_element(lx.begin(), lx.end());
  const auto [y_lo, y_hi] = std::minmax_element(ly.begin(), ly.end());
  double x_min = *x_lo, x_max = *x_hi, y_min = *y_lo, y_max = *y_hi;
  if (x_max - x_min < 1e-12) x_max = x_min + 1.0;
  if (y_max - y_min < 1e-12) y_max = y_min + 1.0;
  SvgFrame frame{x_min, x_max, y_min, y_max};

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" "
        "width=\"640\" height=\"480\" viewBox=\"0 0 640 480\">\n"
     << "<style>\n.axis{stroke:#444;stroke-width:1}\n"
     << ".curve{fill:none;stroke:#1f6fb4;stroke-width:1.5}\n"
     << ".label{font:12px sans-serif;fill:#222}\n</style>\n";
  os << "<line class=\"axis\" x1=\"48\" y1=\"432\" x2=\"592\" y2=\"432\"/>\n"
     << "<line class=\"axis\" x1=\"48\" y1=\"48\" x2=\"48\" y2=\"432\"/>\n";
  os << "<text class=\"label\" x=\"300\" y=\"470\">" << x_label << " (log10)</text>\n"
     << "<text class=\"label\" x=\"8\" y=\"30\">" << y_label << " (log10)</text>\n";
  os << "<polyline class=\"curve\" points=\"";
  for (std::size_t i = 0; i < lx.size(); ++i) {
    if (i) os << ' ';
    os << svg_num(frame.px(lx[i])) << ',' << svg_num(frame.py(ly[i]));
  }
  os << "\"/>\n</svg>\n";
  return os.str();
}

}  // namespace semistab
