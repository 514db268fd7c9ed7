#include "approxlab/report.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace approxlab {

namespace {

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// empty cell for an unset numeric field keeps the CSV from inventing zeros
std::string cell(double v) { return v == 0.0 ? std::string() : fmt_double(v); }
std::string cell(int v) { return v == 0 ? std::string() : std::to_string(v); }

}  // namespace

void Report::add_row(ReportRow row) {
  row.suite = name;
  rows.push_back(std::move(row));
}

void Report::add_verdict(const std::string& vname, bool pass, const std::string& detail) {
  verdicts.push_back({vname, pass, detail});
}

bool Report::passed() const {
  for (const auto& v : verdicts)
    if (!v.pass) return false;
  return true;
}

std::string Report::csv() const {
  std::string out = "suite,fn,p,r,alpha,k,n,h,quantity,value\n";
  for (const auto& row : rows) {
    out += row.suite; out += ',';
    out += row.fn; out += ',';
    out += cell(row.p); out += ',';
    out += cell(row.r); out += ',';
    out += cell(row.alpha); out += ',';
    out += cell(row.k); out += ',';
    out += cell(row.n); out += ',';
    out += cell(row.h); out += ',';
    out += row.quantity; out += ',';
    out += fmt_double(row.value); out += '\n';
  }
  return out;
}

std::string Report::json() const {
  nlohmann::ordered_json j;
  j["name"] = name;
  j["parameters"] = parameters;
  auto& jr = j["rows"] = nlohmann::ordered_json::array();
  for (const auto& row : rows) {
    nlohmann::ordered_json o;
    o["fn"] = row.fn;
    if (row.p != 0.0) o["p"] = row.p;
    if (row.r != 0) o["r"] = row.r;
    if (row.alpha != 0.0) o["alpha"] = row.alpha;
    if (row.k != 0) o["k"] = row.k;
    if (row.n != 0) o["n"] = row.n;
    if (row.h != 0.0) o["h"] = row.h;
    o["quantity"] = row.quantity;
    o["value"] = row.value;
    jr.push_back(std::move(o));
  }
  auto& js = j["fitted_slopes"] = nlohmann::ordered_json::object();
  for (const auto& [key, fit] : fitted_slopes)
    js[key] = {{"slope", fit.slope}, {"intercept", fit.intercept}, {"residual", fit.residual}};
  auto& jq = j["ratio_stats"] = nlohmann::ordered_json::object();
  for (const auto& [key, st] : ratio_stats)
    jq[key] = {{"min", st.min}, {"max", st.max}, {"median", st.median}, {"spread", st.spread}};
  auto& jv = j["verdicts"] = nlohmann::ordered_json::array();
  for (const auto& v : verdicts)
    jv.push_back({{"name", v.name}, {"pass", v.pass}, {"detail", v.detail}});
  return j.dump(2) + "\n";
}

std::string Report::verdict_lines() const {
  std::string out;
  for (const auto& v : verdicts) {
    out += v.pass ? "PASS " : "FAIL ";
    out += v.name;
    if (!v.detail.empty()) { out += ": "; out += v.detail; }
    out += '\n';
  }
  return out;
}

void write_file(const std::string& path, const std::string& text) {
  std::filesystem::path p(path);
  if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
  std::ofstream out(p, std::ios::binary);
  if (!out) throw std::runtime_error("write_file: cannot open " + path);
  out << text;
  if (!out) throw std::runtime_error("write_file: short write to " + path);
}

}  // namespace approxlab
