#include "report/table.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

#include "core/errors.hpp"

namespace grunwald {

namespace {

/// 12 significant digits, shortest form ("%.12g" is C-locale '.' as long as
/// the process never calls setlocale, which this library does not).
std::string format_value(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

/// CSV-quote a string field if it contains a comma, quote, or newline.
std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += "\"\"";
    else quoted += c;
  }
  quoted += "\"";
  return quoted;
}

std::string xml_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c",
                                    "#9467bd", "#ff7f0e", "#8c564b",
                                    "#17becf", "#7f7f7f"};

}  // namespace

void ReportTable::add_row(std::vector<double> row) {
  rows.push_back(std::move(row));
}

void ReportTable::add_row(const std::string& label, std::vector<double> row) {
  row_labels.push_back(label);
  rows.push_back(std::move(row));
}

void ReportTable::validate() const {
  if (name.empty()) {
    throw InvalidArgumentError("ReportTable: name must be nonempty");
  }
  if (columns.empty()) {
    throw InvalidArgumentError("ReportTable: need at least one column");
  }
  for (const auto& row : rows) {
    if (row.size() != columns.size()) {
      throw InvalidArgumentError("ReportTable '" + name +
                                 "': row arity does not match column count");
    }
  }
  if (!row_labels.empty() && row_labels.size() != rows.size()) {
    throw InvalidArgumentError("ReportTable '" + name +
                               "': labels must cover every row");
  }
}

std::string csv_string(const ReportTable& table) {
  table.validate();
  std::string out;
  const bool labeled = !table.row_labels.empty();
  if (labeled) out += csv_field(table.label_header) + ",";
  for (size_t c = 0; c < table.columns.size(); ++c) {
    if (c) out += ",";
    std::string header = table.columns[c].header;
    if (!table.columns[c].unit.empty()) {
      header += " [" + table.columns[c].unit + "]";
    }
    out += csv_field(header);
  }
  out += "\n";
  for (size_t r = 0; r < table.rows.size(); ++r) {
    if (labeled) {
      out += csv_field(table.row_labels[r]);
      out += ",";
    }
    for (size_t c = 0; c < table.rows[r].size(); ++c) {
      if (c) out += ",";
      out += format_value(table.rows[r][c]);
    }
    out += "\n";
  }
  return out;
}

void write_csv(const ReportTable& table, const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) {
    throw EvaluationError("write_csv: cannot open '" + path + "' for writing");
  }
  f << csv_string(table);
  if (!f) {
    throw EvaluationError("write_csv: short write to '" + path + "'");
  }
}

std::string svg_string(const ReportTable& table, const SvgOptions& options) {
  table.validate();
  const int n_cols = static_cast<int>(table.columns.size());
  if (options.x_column < 0 || options.x_column >= n_cols) {
    throw InvalidArgumentError("svg_string: x_column out of range");
  }
  std::vector<int> ys = options.y_columns;
  if (ys.empty()) {
    for (int c = 0; c < n_cols; ++c) {
      if (c != options.x_column) ys.push_back(c);
    }
  }
  for (int c : ys) {
    if (c < 0 || c >= n_cols) {
      throw InvalidArgumentError("svg_string: y column out of range");
    }
  }

  const double margin_l = 64, margin_r = 16, margin_t = 34, margin_b = 40;
  const double plot_w = options.width - margin_l - margin_r;
  const double plot_h = options.height - margin_t - margin_b;

  auto y_value = [&](double v) {
    if (!options.log_y) return v;
    return v > 0.0 ? std::log10(v) : std::numeric_limits<double>::quiet_NaN();
  };

  double x_min = std::numeric_limits<double>::infinity(), x_max = -x_min;
  double y_min = x_min, y_max = -x_min;
  for (const auto& row : table.rows) {
    const double x = row[options.x_column];
    x_min = std::min(x_min, x);
    x_max = std::max(x_max, x);
    for (int c : ys) {
      const double y = y_value(row[c]);
      if (std::isfinite(y)) {
        y_min = std::min(y_min, y);
        y_max = std::max(y_max, y);
      }
    }
  }
  if (!std::isfinite(x_min) || !std::isfinite(y_min)) {
    x_min = 0.0; x_max = 1.0; y_min = 0.0; y_max = 1.0;
  }
  if (x_max <= x_min) x_max = x_min + 1.0;
  if (y_max <= y_min) y_max = y_min + 1.0;
  const double y_pad = 0.05 * (y_max - y_min);
  y_min -= y_pad;
  y_max += y_pad;

  auto px = [&](double x) {
    return margin_l + (x - x_min) / (x_max - x_min) * plot_w;
  };
  auto py = [&](double y) {
    return margin_t + (y_max - y) / (y_max - y_min) * plot_h;
  };
  auto num = [&](double v) { return format_value(v); };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << options.width
      << "\" height=\"" << options.height << "\" viewBox=\"0 0 "
      << options.width << " " << options.height << "\">\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg << "<text x=\"" << options.width / 2 << "\" y=\"20\" font-size=\"14\" "
         "font-family=\"sans-serif\" text-anchor=\"middle\">"
      << xml_escape(table.name) << "</text>\n";

  // Axes and tick labels (ends only; the CSV carries the full data).
  svg << "<g stroke=\"#333\" stroke-width=\"1\">"
      << "<line x1=\"" << margin_l << "\" y1=\"" << margin_t + plot_h
      << "\" x2=\"" << margin_l + plot_w << "\" y2=\"" << margin_t + plot_h
      << "\"/>"
      << "<line x1=\"" << margin_l << "\" y1=\"" << margin_t << "\" x2=\""
      << margin_l << "\" y2=\"" << margin_t + plot_h << "\"/></g>\n";
  svg << "<g font-size=\"11\" font-family=\"sans-serif\" fill=\"#333\">";
  svg << "<text x=\"" << px(x_min) << "\" y=\"" << margin_t + plot_h + 16
      << "\" text-anchor=\"middle\">" << num(x_min) << "</text>";
  svg << "<text x=\"" << px(x_max) << "\" y=\"" << margin_t + plot_h + 16
      << "\" text-anchor=\"middle\">" << num(x_max) << "</text>";
  const char* y_prefix = options.log_y ? "1e" : "";
  svg << "<text x=\"" << margin_l - 6 << "\" y=\"" << py(y_min) + 4
      << "\" text-anchor=\"end\">" << y_prefix << num(y_min) << "</text>";
  svg << "<text x=\"" << margin_l - 6 << "\" y=\"" << py(y_max) + 4
      << "\" text-anchor=\"end\">" << y_prefix << num(y_max) << "</text>";
  svg << "<text x=\"" << margin_l + plot_w / 2 << "\" y=\""
      << margin_t + plot_h + 32 << "\" text-anchor=\"middle\">"
      << xml_escape(table.columns[options.x_column].header) << "</text>";
  svg << "</g>\n";

  for (size_t yi = 0; yi < ys.size(); ++yi) {
    const int c = ys[yi];
    const char* color = kPalette[yi % (sizeof(kPalette) / sizeof(*kPalette))];
    svg << "<polyline fill=\"none\" stroke=\"" << color
        << "\" stroke-width=\"1.5\" points=\"";
    bool first = true;
    for (const auto& row : table.rows) {
      const double y = y_value(row[c]);
      if (!std::isfinite(y)) continue;
      if (!first) svg << " ";
      svg << px(row[options.x_column]) << "," << py(y);
      first = false;
    }
    svg << "\"/>\n";
    const double lx = margin_l + plot_w - 8;
    const double ly = margin_t + 14 + 16.0 * yi;
    svg << "<text x=\"" << lx << "\" y=\"" << ly
        << "\" font-size=\"11\" font-family=\"sans-serif\" fill=\"" << color
        << "\" text-anchor=\"end\">" << xml_escape(table.columns[c].header)
        << "</text>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

void write_svg(const ReportTable& table, const SvgOptions& options,
               const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) {
    throw EvaluationError("write_svg: cannot open '" + path + "' for writing");
  }
  f << svg_string(table, options);
  if (!f) {
    throw EvaluationError("write_svg: short write to '" + path + "'");
  }
}

}  // namespace grunwald
