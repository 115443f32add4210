#pragma once

#include <string>
#include <vector>

namespace grunwald {

struct ColumnSpec {
  std::string header;
  std::string unit;  // empty for dimensionless columns
};

/// A rectangular numeric table: named columns (with optional units) and rows
/// of doubles, plus optional per-row labels (used by the check suites).
/// Complex quantities are stored as separate re/im columns.
struct ReportTable {
  std::string name;
  std::vector<ColumnSpec> columns;
  std::string label_header = "label";   // header of the label column
  std::vector<std::string> row_labels;  // empty, or one label per row
  std::vector<std::vector<double>> rows;

  void add_row(std::vector<double> row);
  void add_row(const std::string& label, std::vector<double> row);

  /// Throws InvalidArgumentError unless the name is nonempty, every row has
  /// one value per column, and labels (if present) cover every row.
  void validate() const;
};

/// Deterministic CSV rendering: C-locale formatting at 12 significant digits,
/// '\n' line endings, a label column first when row labels are present
/// (headed by `label_header`), and units appended to headers as
/// "header [unit]".
std::string csv_string(const ReportTable& table);

/// csv_string written to a file (parent directory must exist).
void write_csv(const ReportTable& table, const std::string& path);

struct SvgOptions {
  int width = 760;
  int height = 460;
  bool log_y = false;  // log10 y axis; non-positive values are skipped
  int x_column = 0;
  std::vector<int> y_columns;  // empty = every column except x_column
};

/// Minimal self-contained line chart of the table (polylines + axes + legend).
std::string svg_string(const ReportTable& table, const SvgOptions& options);

void write_svg(const ReportTable& table, const SvgOptions& options,
               const std::string& path);

}  // namespace grunwald
