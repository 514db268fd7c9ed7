#pragma once

#include <map>
#include <string>
#include <vector>

#include "stats.hpp"

namespace approxlab {

// One measurement. Fields that do not apply to a quantity stay at their
// defaults and serialize as empty CSV cells.
struct ReportRow {
  std::string suite;
  std::string fn;
  double p = 0.0;
  int r = 0;
  double alpha = 0.0;
  int k = 0;
  int n = 0;
  double h = 0.0;
  std::string quantity;
  double value = 0.0;
};

struct Verdict {
  std::string name;
  bool pass = false;
  std::string detail;  // the measured numbers behind the call
};

// Assembled output of one verification suite. Rows are appended in
// deterministic order; emission is byte-stable for a fixed build.
struct Report {
  std::string name;
  std::map<std::string, std::string> parameters;
  std::vector<ReportRow> rows;
  std::map<std::string, RateFit> fitted_slopes;
  std::map<std::string, RatioStats> ratio_stats;
  std::vector<Verdict> verdicts;

  void add_row(ReportRow row);
  void add_verdict(const std::string& name, bool pass, const std::string& detail);
  bool passed() const;  // every verdict passed (an empty report counts as pass)

  // header suite,fn,p,r,alpha,k,n,h,quantity,value; doubles printed with %.17g
  std::string csv() const;
  std::string json() const;

  // one line per verdict: "PASS name: detail" / "FAIL name: detail"
  std::string verdict_lines() const;
};

// Writes text to path, creating parent directories. Throws on failure.
void write_file(const std::string& path, const std::string& text);

}  // namespace approxlab
