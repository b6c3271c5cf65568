// heatwg: compute and cross-check moments of Brownian motion and Haar
// measure on O(N), Sp(N) and U(N).
#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "heatwg/verify.hpp"

namespace {

using nlohmann::ordered_json;
using namespace heatwg;

struct MomentArgs {
  std::string group = "O";
  int N = 2;
  int n = 1;
  int m = 0;
  std::optional<double> t;
  bool haar = false;
  std::string method = "formula";
  std::vector<std::string> entries;
  std::string format = "json";
  std::string out;
  long paths = 200000;
  double dt = 1.0 / 512;
  std::uint64_t seed = 20240601;
  int threads = 1;
};

struct EntryIndex {
  std::vector<int> row, col;
  std::string text;
};

std::vector<int> parse_tuple(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, '.')) {
    if (item.empty()) throw std::invalid_argument("empty index in '" + s + "'");
    std::size_t used = 0;
    const int v = std::stoi(item, &used);
    if (used != item.size()) throw std::invalid_argument("bad index '" + item + "'");
    out.push_back(v);
  }
  return out;
}

// "i1.i2|j1.j2", 1-based.
EntryIndex parse_entry(const std::string& text, int order) {
  const auto bar = text.find('|');
  if (bar == std::string::npos) throw std::invalid_argument("entry must look like i1.i2|j1.j2: " + text);
  EntryIndex e{parse_tuple(text.substr(0, bar)), parse_tuple(text.substr(bar + 1)), text};
  if (static_cast<int>(e.row.size()) != order || static_cast<int>(e.col.size()) != order)
    throw std::invalid_argument("entry " + text + " does not have " + std::to_string(order) + " indices per side");
  return e;
}

std::string join_tuple(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "." : "") + std::to_string(v[i]);
  return s;
}

std::string decimal(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

struct Record {
  EntryIndex index;
  double value = 0.0;
  std::optional<std::string> exact;
  std::optional<double> stderr_value;
};

int run_moment(const MomentArgs& a) {
  const GroupSpec g = GroupSpec::parse(a.group, a.N);
  const std::string method = a.haar ? "haar" : a.method;
  if (method != "haar" && !a.t) throw std::invalid_argument("give --t or --haar");
  if (a.t && *a.t < 0) throw std::invalid_argument("--t must be non-negative");
  if (a.m != 0 && g.family != Family::Unitary) throw std::invalid_argument("--m only applies to U");
  if (a.n < 0 || a.m < 0 || a.n + a.m < 1) throw std::invalid_argument("need n + m >= 1");
  const int order = a.n + a.m;
  checked_side(g.dim_v(), order);

  std::optional<MomentTensor<Rational>> exact;
  MomentTensor<double> values, errors;
  std::string tag = method;
  if (method == "haar") {
    exact = haar_moment(g, a.n, a.m);
    values = exact->to_double();
  } else if (method == "formula") {
    values = bm_moment_tensor(g, a.n, a.m, *a.t);
  } else if (method == "expm") {
    values = casimir_exponential(g, a.n, a.m, *a.t);
    tag = "expm-oracle";
  } else if (method == "mc") {
    SimConfig cfg;
    cfg.paths = a.paths;
    cfg.step = a.dt;
    cfg.t_end = *a.t;
    cfg.seed = a.seed;
    cfg.threads = a.threads;
    if (*a.t == 0.0) cfg.step = 1.0;
    auto mc = empirical_moment(g, a.n, a.m, cfg);
    values = mc.mean;
    errors = mc.standard_error;
  } else {
    throw std::invalid_argument("unknown method " + method);
  }

  std::vector<EntryIndex> wanted;
  if (a.entries.empty()) {
    for (int r = 0; r < values.side(); ++r)
      for (int c = 0; c < values.side(); ++c) {
        EntryIndex e{values.multi_index(r), values.multi_index(c), {}};
        e.text = join_tuple(e.row) + "|" + join_tuple(e.col);
        wanted.push_back(std::move(e));
      }
  } else {
    for (const auto& s : a.entries) wanted.push_back(parse_entry(s, order));
  }
  std::vector<Record> records;
  for (const auto& e : wanted) {
    Record rec{e, values.entry(e.row, e.col), std::nullopt, std::nullopt};
    if (exact) rec.exact = to_string(exact->entry(e.row, e.col));
    if (method == "mc") rec.stderr_value = errors.entry(e.row, e.col);
    records.push_back(std::move(rec));
  }

  std::ostringstream os;
  if (a.format == "json") {
    ordered_json doc;
    doc["group"] = a.group;
    doc["N"] = a.N;
    doc["n"] = a.n;
    doc["m"] = a.m;
    doc["t"] = a.t ? ordered_json(*a.t) : ordered_json(nullptr);
    doc["method"] = tag;
    if (method == "mc") doc["mc"] = {{"paths", a.paths}, {"dt", a.dt}, {"seed", a.seed}};
    ordered_json list = ordered_json::array();
    for (const auto& r : records) {
      ordered_json item;
      item["index"] = r.index.text;
      item["row"] = r.index.row;
      item["col"] = r.index.col;
      item["value"] = r.value;
      if (r.exact) item["exact"] = *r.exact;
      if (r.stderr_value) item["stderr"] = *r.stderr_value;
      list.push_back(std::move(item));
    }
    doc["entries"] = std::move(list);
    os << doc.dump(2) << "\n";
  } else if (a.format == "csv") {
    os << "group,N,n,m,t,method,index,value,exact,stderr\n";
    for (const auto& r : records) {
      os << a.group << ',' << a.N << ',' << a.n << ',' << a.m << ',' << (a.t ? decimal(*a.t) : "") << ',' << tag << ','
         << r.index.text << ',' << decimal(r.value) << ',' << r.exact.value_or("") << ','
         << (r.stderr_value ? decimal(*r.stderr_value) : "") << "\n";
    }
  } else {
    throw std::invalid_argument("unknown format " + a.format);
  }
  if (a.out.empty()) {
    std::cout << os.str();
  } else {
    std::ofstream file(a.out);
    if (!file) throw std::runtime_error("cannot write " + a.out);
    file << os.str();
  }
  return 0;
}

ordered_json report_json(const verify::SuiteReport& r) {
  ordered_json checks = ordered_json::array();
  for (const auto& c : r.checks) {
    ordered_json item{{"name", c.name}, {"passed", c.passed}, {"deviation", c.deviation}, {"tolerance", c.tolerance}};
    if (!c.note.empty()) item["note"] = c.note;
    checks.push_back(std::move(item));
  }
  return ordered_json{{"suite", r.suite}, {"passed", r.passed()}, {"failures", r.failures()}, {"seconds", r.seconds}, {"checks", checks}};
}

int run_verify(const std::string& suite, const verify::Options& opt, const std::string& format) {
  std::vector<std::string> names = suite == "all" ? verify::suite_names() : std::vector<std::string>{suite};
  bool ok = true;
  ordered_json all = ordered_json::array();
  for (const auto& name : names) {
    const auto report = verify::run_suite(name, opt);
    ok = ok && report.passed();
    if (format == "json") {
      all.push_back(report_json(report));
    } else {
      std::cout << "[" << (report.passed() ? "PASS" : "FAIL") << "] " << report.suite << " (" << report.checks.size() << " checks, "
                << report.failures() << " failing, " << decimal(report.seconds) << " s)\n";
      for (const auto& c : report.checks)
        std::cout << "  " << (c.passed ? "ok  " : "FAIL") << "  " << c.name << "  deviation " << decimal(c.deviation) << " (tol "
                  << decimal(c.tolerance) << ")" << (c.note.empty() ? "" : "  " + c.note) << "\n";
    }
  }
  if (format == "json") std::cout << ordered_json{{"passed", ok}, {"suites", all}}.dump(2) << "\n";
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Moments of Brownian motion and Haar measure on O(N), Sp(N) and U(N)"};
  app.require_subcommand(1);

  MomentArgs ma;
  auto* moment = app.add_subcommand("moment", "Compute E[G^{⊗n} ⊗ Ḡ^{⊗m}] at time t, or the Haar moment");
  moment->add_option("--group", ma.group, "O, Sp or U")->check(CLI::IsMember({"O", "Sp", "U"}));
  moment->add_option("--N", ma.N, "Rank: O(N), Sp(N) acting on C^{2N}, U(N)")->check(CLI::PositiveNumber);
  moment->add_option("--n", ma.n, "Number of G factors");
  moment->add_option("--m", ma.m, "Number of conjugate factors (U only)");
  auto* t_opt = moment->add_option("--t", ma.t, "Time");
  auto* haar_opt = moment->add_flag("--haar", ma.haar, "Haar moment (exact rationals)");
  t_opt->excludes(haar_opt);
  moment->add_option("--method", ma.method, "formula, expm or mc")->check(CLI::IsMember({"formula", "expm", "mc"}));
  moment->add_option("--entry", ma.entries, "Entry i1.i2|j1.j2 (repeatable); default: the full tensor");
  moment->add_option("--format", ma.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  moment->add_option("--out", ma.out, "Output file (default stdout)");
  moment->add_option("--paths", ma.paths, "Monte Carlo paths")->check(CLI::PositiveNumber);
  moment->add_option("--dt", ma.dt, "Monte Carlo time step")->check(CLI::PositiveNumber);
  moment->add_option("--seed", ma.seed, "Monte Carlo seed");
  moment->add_option("--threads", ma.threads, "Worker threads, 0 = all cores; estimates do not depend on it");

  verify::Options vo;
  std::string suite = "all", vformat = "text";
  auto* ver = app.add_subcommand("verify", "Run a cross-check suite; exits 1 if any check fails");
  std::vector<std::string> choices = verify::suite_names();
  choices.push_back("all");
  ver->add_option("--suite", suite, "Suite name or all")->check(CLI::IsMember(choices));
  ver->add_option("--seed", vo.seed, "Monte Carlo seed");
  ver->add_option("--threads", vo.threads, "Worker threads for the Monte Carlo suite");
  ver->add_option("--format", vformat, "text or json")->check(CLI::IsMember({"text", "json"}));
  ver->add_option("--theorem-tol", vo.theorem_tol, "Formula vs expm tolerance");
  ver->add_option("--haar-tol", vo.haar_tol, "Large-time vs Haar tolerance");
  ver->add_option("--haar-t", vo.haar_time, "Time used for the Haar limit");
  ver->add_option("--so-tol", vo.so_tol, "SO correction vs quadrature tolerance");
  ver->add_option("--spectral-slack", vo.spectral_slack, "Slack on spectral floors");
  ver->add_option("--mc-paths", vo.mc_paths, "Monte Carlo paths")->check(CLI::PositiveNumber);
  ver->add_option("--mc-dt", vo.mc_step, "Monte Carlo time step")->check(CLI::PositiveNumber);
  ver->add_option("--mc-sigmas", vo.mc_sigmas, "Allowed standard errors per entry");
  ver->add_option("--mc-abs-tol", vo.mc_abs_tol, "Allowed absolute Monte Carlo deviation");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  try {
    if (*moment) return run_moment(ma);
    return run_verify(suite, vo, vformat);
  } catch (const std::exception& e) {
    std::cerr << "heatwg: " << e.what() << "\n";
    return 2;
  }
}
