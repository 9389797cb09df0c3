#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "graphlie/rigidity.hpp"

namespace graphlie {

enum class ReportFormat { Json, Text };

ReportFormat parse_report_format(const std::string& name);  ///< "json" | "text"

/// JSON: a list of rows with sorted keys, one trailing newline; [] when empty.
/// Text: a fixed-width table with a header line.
std::string render_report(const std::vector<SweepRow>& rows, ReportFormat format);

/// Writes render_report to `path`, or to `out` when path is empty.
/// Throws DomainError when the file cannot be written.
void write_report(const std::vector<SweepRow>& rows, const std::string& path, ReportFormat format,
                  std::ostream& out);

}  // namespace graphlie
