#include "wordperc/report_io.hpp"

#include <array>
#include <cstdio>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include "wordperc/serialize.hpp"

namespace wordperc {

const char* const kCsvColumns = "kind,p,scale,t,trials,successes,p_hat,ci_low,ci_high,seed,elapsed_ms";

namespace {

constexpr std::array<const char*, 11> kColumns = {"kind",    "p",      "scale",    "t",
                                                  "trials",  "successes", "p_hat", "ci_low",
                                                  "ci_high", "seed",   "elapsed_ms"};

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream s(line);
  while (std::getline(s, cell, ',')) out.push_back(cell);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

std::string trim(std::string s) {
  while (!s.empty() && (s.back() == '\r' || s.back() == ' ')) s.pop_back();
  std::size_t i = 0;
  while (i < s.size() && s[i] == ' ') ++i;
  return s.substr(i);
}

template <class T>
T parse_number(const std::string& cell, const std::string& column, std::size_t line) {
  try {
    std::size_t used = 0;
    T v;
    if constexpr (std::is_same_v<T, double>) {
      v = std::stod(cell, &used);
    } else if constexpr (std::is_signed_v<T>) {
      v = static_cast<T>(std::stoll(cell, &used));
    } else {
      if (!cell.empty() && cell[0] == '-') throw std::invalid_argument("negative");
      v = static_cast<T>(std::stoull(cell, &used));
    }
    if (used != cell.size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw ReportParseError("line " + std::to_string(line) + ": bad value '" + cell +
                           "' in column '" + column + "'");
  }
}

}  // namespace

ReportFormat parse_report_format(const std::string& name) {
  if (name == "csv") return ReportFormat::csv;
  if (name == "json") return ReportFormat::json;
  throw std::invalid_argument("unknown report format '" + name + "' (csv or json)");
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_report(std::ostream& out, const std::vector<EstimateReport>& reports,
                  ReportFormat format) {
  if (format == ReportFormat::json) {
    json arr = json::array();
    for (const auto& r : reports) arr.push_back(to_json(r));
    out << arr.dump(2) << '\n';
    return;
  }
  out << kCsvColumns << '\n';
  for (const auto& r : reports) {
    out << to_string(r.spec.kind) << ',' << format_double(r.spec.p) << ',' << r.spec.scale << ','
        << r.spec.t << ',' << r.trials << ',' << r.successes << ',' << format_double(r.p_hat)
        << ',' << format_double(r.ci_low) << ',' << format_double(r.ci_high) << ',' << r.seed
        << ',' << format_double(r.elapsed_ms) << '\n';
  }
}

std::vector<EstimateReport> read_report(std::istream& in, ReportFormat format) {
  std::vector<EstimateReport> reports;
  if (format == ReportFormat::json) {
    json j;
    try {
      j = json::parse(in);
    } catch (const json::exception& e) {
      throw ReportParseError(std::string("malformed JSON: ") + e.what());
    }
    if (j.is_object() && j.contains("reports")) j = j.at("reports");
    if (j.is_object()) j = json::array({j});
    if (!j.is_array()) throw ReportParseError("expected an array of reports");
    try {
      for (const auto& r : j) reports.push_back(report_from_json(r));
    } catch (const std::exception& e) {
      throw ReportParseError(e.what());
    }
    return reports;
  }

  std::string line;
  std::size_t lineno = 0;
  std::map<std::string, std::size_t> column;
  std::size_t width = 0;
  while (std::getline(in, line)) {
    ++lineno;
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    const auto cells = split(line);
    if (column.empty()) {
      for (std::size_t c = 0; c < cells.size(); ++c) {
        const auto name = trim(cells[c]);
        bool known = false;
        for (const char* k : kColumns) known = known || name == k;
        if (!known) throw ReportParseError("unknown column '" + name + "'");
        if (!column.emplace(name, c).second) {
          throw ReportParseError("duplicate column '" + name + "'");
        }
      }
      for (const char* k : kColumns) {
        if (!column.count(k)) throw ReportParseError(std::string("missing column '") + k + "'");
      }
      width = cells.size();
      continue;
    }
    if (cells.size() != width) {
      throw ReportParseError("line " + std::to_string(lineno) + ": expected " +
                             std::to_string(width) + " fields, got " +
                             std::to_string(cells.size()));
    }
    auto cell = [&](const char* name) { return trim(cells[column.at(name)]); };
    EstimateReport r;
    try {
      r.spec.kind = parse_event_kind(cell("kind"));
    } catch (const InvalidSpec& e) {
      throw ReportParseError("line " + std::to_string(lineno) + ": " + e.what());
    }
    r.spec.p = parse_number<double>(cell("p"), "p", lineno);
    r.spec.scale = parse_number<Coord>(cell("scale"), "scale", lineno);
    r.spec.t = parse_number<Coord>(cell("t"), "t", lineno);
    r.trials = parse_number<std::uint64_t>(cell("trials"), "trials", lineno);
    r.successes = parse_number<std::uint64_t>(cell("successes"), "successes", lineno);
    r.p_hat = parse_number<double>(cell("p_hat"), "p_hat", lineno);
    r.ci_low = parse_number<double>(cell("ci_low"), "ci_low", lineno);
    r.ci_high = parse_number<double>(cell("ci_high"), "ci_high", lineno);
    r.seed = parse_number<std::uint64_t>(cell("seed"), "seed", lineno);
    r.elapsed_ms = parse_number<double>(cell("elapsed_ms"), "elapsed_ms", lineno);
    reports.push_back(std::move(r));
  }
  if (column.empty()) throw ReportParseError("missing CSV header");
  return reports;
}

void write_report_file(const std::string& path, const std::vector<EstimateReport>& reports,
                       ReportFormat format) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  write_report(out, reports, format);
}

std::vector<EstimateReport> read_report_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  char c = 0;
  while (in.get(c) && (c == ' ' || c == '\n' || c == '\r' || c == '\t')) {
  }
  in.clear();
  in.seekg(0);
  return read_report(in, c == '[' || c == '{' ? ReportFormat::json : ReportFormat::csv);
}

}  // namespace wordperc
