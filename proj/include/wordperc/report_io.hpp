#pragma once

// Persistence of estimate reports.
//
// CSV has the fixed columns
//   kind,p,scale,t,trials,successes,p_hat,ci_low,ci_high,seed,elapsed_ms
// with floats at 17 significant digits; lines starting with '#' are comments.
// CSV keeps only those columns; JSON keeps the full spec and the flags. A JSON
// source may be one report, an array, or an object with a "reports" array.

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "wordperc/montecarlo.hpp"

namespace wordperc {

enum class ReportFormat { csv, json };

ReportFormat parse_report_format(const std::string& name);

class ReportParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

extern const char* const kCsvColumns;

std::string format_double(double v);

void write_report(std::ostream& out, const std::vector<EstimateReport>& reports,
                  ReportFormat format);
std::vector<EstimateReport> read_report(std::istream& in, ReportFormat format);

void write_report_file(const std::string& path, const std::vector<EstimateReport>& reports,
                       ReportFormat format);
// Format chosen from the first non-blank character ('[' or '{' means JSON).
std::vector<EstimateReport> read_report_file(const std::string& path);

}  // namespace wordperc
