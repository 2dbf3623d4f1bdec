#include <cstdio>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "wordperc/report_io.hpp"

using namespace wordperc;

namespace {

std::vector<EstimateReport> sample_reports() {
  EventSpec a;
  a.kind = EventKind::crossing;
  a.p = 0.1 + 0.2;
  a.scale = 8;
  EventSpec b = a;
  b.kind = EventKind::uniqueness;
  b.t = 3;
  b.p = 1.0 / 3;
  std::vector<EstimateReport> out;
  for (const auto& s : {a, b}) {
    EstimateReport r;
    r.spec = s;
    r.trials = 1000;
    r.successes = 123;
    r.p_hat = 0.123;
    r.ci_low = 0.10345678901234567;
    r.ci_high = 0.14567890123456789;
    r.seed = 18446744073709551557ULL;
    r.elapsed_ms = 12.5;
    out.push_back(r);
  }
  out[1].flags = {"trend_violation"};
  return out;
}

void check_same_columns(const EstimateReport& a, const EstimateReport& b) {
  CHECK(a.spec.kind == b.spec.kind);
  CHECK(a.spec.p == b.spec.p);
  CHECK(a.spec.scale == b.spec.scale);
  CHECK(a.spec.t == b.spec.t);
  CHECK(a.trials == b.trials);
  CHECK(a.successes == b.successes);
  CHECK(a.p_hat == b.p_hat);
  CHECK(a.ci_low == b.ci_low);
  CHECK(a.ci_high == b.ci_high);
  CHECK(a.seed == b.seed);
  CHECK(a.elapsed_ms == b.elapsed_ms);
}

std::vector<EstimateReport> read_csv(const std::string& text) {
  std::istringstream in(text);
  return read_report(in, ReportFormat::csv);
}

}  // namespace

TEST_CASE("CSV round trip keeps every column bit for bit") {
  const auto reports = sample_reports();
  std::ostringstream out;
  write_report(out, reports, ReportFormat::csv);
  CHECK(out.str().rfind(std::string(kCsvColumns) + "\n", 0) == 0);
  const auto back = read_csv(out.str());
  REQUIRE(back.size() == 2);
  for (std::size_t k = 0; k < 2; ++k) check_same_columns(reports[k], back[k]);
  CHECK(back[1].flags.empty());
}

TEST_CASE("JSON round trip keeps flags and the spec") {
  const auto reports = sample_reports();
  std::ostringstream out;
  write_report(out, reports, ReportFormat::json);
  std::istringstream in(out.str());
  const auto back = read_report(in, ReportFormat::json);
  REQUIRE(back.size() == 2);
  for (std::size_t k = 0; k < 2; ++k) {
    check_same_columns(reports[k], back[k]);
    CHECK(back[k].spec == reports[k].spec);
    CHECK(back[k].flags == reports[k].flags);
  }
}

TEST_CASE("CSV reader edge cases") {
  CHECK(read_csv(std::string(kCsvColumns) + "\n").empty());
  CHECK(read_csv("# note\n" + std::string(kCsvColumns) + "\n# trailing\n").empty());
  CHECK_THROWS_AS(read_csv(""), ReportParseError);
  CHECK_THROWS_AS(read_csv("# only a comment\n"), ReportParseError);

  // Columns in another order.
  const auto shuffled = read_csv(
      "seed,kind,p,scale,t,trials,successes,p_hat,ci_low,ci_high,elapsed_ms\n"
      "5,crossing,0.5,4,0,10,3,0.29999999999999999,0.1,0.6,0\n");
  REQUIRE(shuffled.size() == 1);
  CHECK(shuffled[0].seed == 5);
  CHECK(shuffled[0].p_hat == 0.3);

  try {
    read_csv(std::string(kCsvColumns) + ",colour\n");
    FAIL("unknown column accepted");
  } catch (const ReportParseError& e) {
    CHECK(std::string(e.what()).find("colour") != std::string::npos);
  }
  CHECK_THROWS_AS(read_csv("kind,p,p\n"), ReportParseError);
  CHECK_THROWS_AS(read_csv("kind,p\ncrossing,0.5\n"), ReportParseError);
  CHECK_THROWS_AS(read_csv(std::string(kCsvColumns) + "\ncrossing,0.5\n"), ReportParseError);
  try {
    read_csv(std::string(kCsvColumns) + "\ncrossing,half,4,0,10,3,0.3,0.1,0.6,5,0\n");
    FAIL("bad value accepted");
  } catch (const ReportParseError& e) {
    CHECK(std::string(e.what()).find("'p'") != std::string::npos);
  }
  CHECK_THROWS(read_csv(std::string(kCsvColumns) + "\nflooding,0.5,4,0,10,3,0.3,0.1,0.6,5,0\n"));
}

TEST_CASE("JSON reader accepts three shapes") {
  const auto reports = sample_reports();
  std::ostringstream one;
  write_report(one, {reports[0]}, ReportFormat::json);
  auto text = one.str();
  const auto first = text.find('{');
  const auto last = text.rfind('}');
  const std::string object = text.substr(first, last - first + 1);
  std::istringstream single(object);
  CHECK(read_report(single, ReportFormat::json).size() == 1);
  std::istringstream wrapped("{\"config\": {}, \"reports\": [" + object + "]}");
  CHECK(read_report(wrapped, ReportFormat::json).size() == 1);
  std::istringstream broken("{\"reports\": 3}");
  CHECK_THROWS(read_report(broken, ReportFormat::json));
}

TEST_CASE("report files detect their format") {
  const auto reports = sample_reports();
  for (auto format : {ReportFormat::csv, ReportFormat::json}) {
    const char* path = "report_io_test.out";
    write_report_file(path, reports, format);
    const auto back = read_report_file(path);
    REQUIRE(back.size() == 2);
    check_same_columns(reports[1], back[1]);
    std::remove(path);
  }
  CHECK_THROWS(read_report_file("no_such_report.csv"));
  CHECK(parse_report_format("json") == ReportFormat::json);
  CHECK_THROWS_AS(parse_report_format("xml"), std::invalid_argument);
  CHECK(format_double(0.1) == "0.10000000000000001");
}
