#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "approxlab/report.hpp"

using namespace approxlab;

namespace {

Report sample_report() {
  Report rep;
  rep.name = "demo";
  rep.parameters["seed"] = "7";
  rep.add_row({"", "cosx", 2.0, 0, 0.0, 1, 8, 0.125, "omega", 0.12468734});
  rep.add_row({"", "square", 0.5, 1, 1.0, 0, 4, 0.0, "en", 0.25});
  rep.add_verdict("bounded", true, "max/median 1.7");
  rep.add_verdict("trend", false, "rho 0.93");
  return rep;
}

}  // namespace

TEST_CASE("csv schema and cell layout") {
  auto rep = sample_report();
  std::string csv = rep.csv();
  auto first_nl = csv.find('\n');
  CHECK(csv.substr(0, first_nl) == "suite,fn,p,r,alpha,k,n,h,quantity,value");
  // row fields: suite stamped from the report name, unset cells empty
  CHECK(csv.find("demo,cosx,2,,,1,8,0.125,omega,0.12468733999999999\n") != std::string::npos);
  CHECK(csv.find("demo,square,0.5,1,1,,4,,en,0.25\n") != std::string::npos);
}

TEST_CASE("emission is byte-stable") {
  CHECK(sample_report().csv() == sample_report().csv());
  CHECK(sample_report().json() == sample_report().json());
}

TEST_CASE("json carries verdicts and summaries round-trip") {
  auto rep = sample_report();
  rep.fitted_slopes["omega"] = {2.0, -0.7, 1e-3};
  rep.ratio_stats["jackson"] = {0.5, 2.0, 1.0, 4.0};
  std::string js = rep.json();
  CHECK(js.find("\"slope\": 2.0") != std::string::npos);
  CHECK(js.find("\"spread\": 4.0") != std::string::npos);
  CHECK(js.find("\"pass\": false") != std::string::npos);
  CHECK(rep.passed() == false);
  rep.verdicts[1].pass = true;
  CHECK(rep.passed() == true);
  CHECK(Report{}.passed());
}

TEST_CASE("verdict lines name the call") {
  std::string lines = sample_report().verdict_lines();
  CHECK(lines == "PASS bounded: max/median 1.7\nFAIL trend: rho 0.93\n");
}

TEST_CASE("write_file creates directories and writes bytes") {
  auto dir = std::filesystem::temp_directory_path() / "approxlab_report_test";
  std::filesystem::remove_all(dir);
  auto path = (dir / "a" / "b.csv").string();
  write_file(path, "x,y\n1,2\n");
  std::ifstream in(path, std::ios::binary);
  std::string got((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  CHECK(got == "x,y\n1,2\n");
  std::filesystem::remove_all(dir);
}
