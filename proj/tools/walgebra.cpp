// Command-line driver: runs a prefix of the pipeline on a case file and
// prints the matching slice of the report.

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <iostream>
#include <map>
#include <thread>

#include "walgebra/pipeline.hpp"

using namespace walgebra;
using pipeline::Json;

namespace {

struct Common {
  std::string polarization;
  std::string claim, fixed_claim, cache_dir;
  unsigned jobs = 1;
  std::string emit = "text";
  bool timing = false;
};

struct Slice {
  int last_step;
  std::vector<std::string> keys;
  bool claims;
};

const std::map<std::string, Slice>& slices() {
  static const std::map<std::string, Slice> s{
      {"centralizer", {4, {"case", "triple", "polarization", "bases", "centralizer", "gamma"}, false}},
      {"present", {6, {"case", "centralizer", "presentation", "commutators"}, false}},
      {"equations", {7, {"case", "equations", "variety"}, false}},
      {"verify", {7, {"case", "equations", "variety", "decomposition"}, true}},
      {"gamma-fixed", {8, {"case", "centralizer", "gamma", "gamma_fixed"}, true}},
      {"run", {8, {}, true}},
  };
  return s;
}

pipeline::RunOptions options(const Common& c, const Slice& s) {
  pipeline::RunOptions o;
  if (c.polarization == "zero") o.polarization = slodowy::PolarizationMode::zero;
  if (c.polarization == "lagrangian") o.polarization = slodowy::PolarizationMode::lagrangian;
  if (!c.claim.empty()) o.claim = c.claim;
  if (!c.fixed_claim.empty()) o.fixed_claim = c.fixed_claim;
  if (!c.cache_dir.empty()) o.cache_dir = c.cache_dir;
  o.jobs = std::max(1u, c.jobs);
  o.last_step = s.last_step;
  o.check_claims = s.claims;
  o.timing = c.timing;
  return o;
}

Json select(const Json& report, const std::vector<std::string>& keys) {
  if (keys.empty()) return report;
  Json out = Json::object();
  for (const auto& k : keys)
    if (report.contains(k)) out[k] = report[k];
  if (report.contains("timing")) out["timing"] = report["timing"];
  return out;
}

std::string emit(const Json& j, const std::string& how) {
  return how == "json" ? j.dump(2) + "\n" : pipeline::render_text(j);
}

struct CaseResult {
  Json report;
  int code = 0;
};

CaseResult run_one(const std::string& path, const pipeline::RunOptions& o, const Slice& s) {
  CaseResult r;
  try {
    auto outcome = pipeline::run_case_file(path, o);
    r.report = select(outcome.report, s.keys);
    r.code = outcome.verified ? 0 : 1;
  } catch (const pipeline::StepError& e) {
    r.report = {{"case_file", path}, {"error", e.what()}, {"step", e.step()}};
    r.code = e.exit_code();
  }
  return r;
}

int run_cases(const std::vector<std::string>& paths, const Common& c, const Slice& s) {
  auto o = options(c, s);
  std::vector<CaseResult> results(paths.size());
  if (paths.size() == 1) {
    results[0] = run_one(paths[0], o, s);
  } else {
    // Cases run concurrently; each one single-threaded.
    const unsigned workers = std::min<unsigned>(o.jobs, static_cast<unsigned>(paths.size()));
    o.jobs = 1;
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < workers; ++t)
      pool.emplace_back([&] {
        for (std::size_t i; (i = next++) < paths.size();) results[i] = run_one(paths[i], o, s);
      });
    for (auto& th : pool) th.join();
  }
  int code = 0;
  for (const auto& r : results) code = std::max(code, r.code);
  for (std::size_t i = 0; i < results.size(); ++i)
    if (results[i].report.contains("error")) std::cerr << "error: " << paths[i] << ": " << results[i].report["error"].get<std::string>() << "\n";
  if (paths.size() == 1) {
    if (!results[0].report.contains("error")) std::cout << emit(results[0].report, c.emit);
    return code;
  }
  if (c.emit == "json") {
    Json all = Json::array();
    for (std::size_t i = 0; i < results.size(); ++i) all.push_back({{"case_file", paths[i]}, {"report", results[i].report}});
    std::cout << all.dump(2) << "\n";
  } else {
    for (std::size_t i = 0; i < results.size(); ++i)
      std::cout << "== " << paths[i] << " ==\n" << pipeline::render_text(results[i].report);
  }
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Varieties of one-dimensional representations of finite W-algebras"};
  app.require_subcommand(1);

  Common common;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--polarization", common.polarization, "Override the case file's polarization")
        ->check(CLI::IsMember({"zero", "lagrangian"}));
    sub->add_option("--cache-dir", common.cache_dir, "Directory for resumable step caches");
    sub->add_option("--jobs", common.jobs, "Worker threads")->check(CLI::PositiveNumber);
    sub->add_option("--emit", common.emit, "Output format")->check(CLI::IsMember({"json", "text"}));
    sub->add_flag("--timing", common.timing, "Include per-step wall times in the report");
  };

  char type = 'A';
  int rank = 1;
  std::string emit_info = "text";
  auto* info = app.add_subcommand("algebra-info", "Dimension, roots and Cartan matrix of a simple Lie algebra");
  info->add_option("type", type, "Cartan type A-G")->required();
  info->add_option("rank", rank, "Rank")->required();
  info->add_option("--emit", emit_info, "Output format")->check(CLI::IsMember({"json", "text"}));

  std::vector<std::string> cases;
  std::map<CLI::App*, std::string> subs;
  const std::map<std::string, std::string> help{
      {"centralizer", "sl2-triple, polarization and centralizer data (steps 1-4)"},
      {"present", "PBW generators and commutator table (steps 1-6)"},
      {"equations", "Defining equations of E and their Groebner basis (steps 1-7)"},
      {"verify", "Check a component decomposition claim for E (steps 1-7)"},
      {"gamma-fixed", "Component-group action and the fixed locus (steps 1-8)"},
      {"run", "Full pipeline on one or more case files"},
  };
  for (const auto& [name, text] : help) {
    auto* sub = app.add_subcommand(name, text);
    add_common(sub);
    if (name == "verify" || name == "gamma-fixed" || name == "run")
      sub->add_option("--claim", common.claim, "Component claim file for E");
    if (name == "gamma-fixed" || name == "run")
      sub->add_option("--fixed-claim", common.fixed_claim, "Component claim file for the fixed locus");
    if (name == "run")
      sub->add_option("cases", cases, "Case files")->required()->check(CLI::ExistingFile);
    else
      sub->add_option("case", cases, "Case file")->required()->expected(1)->check(CLI::ExistingFile);
    subs[sub] = name;
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (info->parsed()) {
    try {
      std::cout << emit(pipeline::algebra_info(type, rank), emit_info);
      return 0;
    } catch (const pipeline::StepError& e) {
      std::cerr << "error: " << e.what() << "\n";
      return e.exit_code();
    }
  }
  for (const auto& [sub, name] : subs) {
    if (!sub->parsed()) continue;
    if (name == "verify" && common.claim.empty()) {
      // The claim may come from the case file.
      try {
        auto cf = casefile::load_case(cases.at(0));
        if (!cf.claim) {
          std::cerr << "error: verify needs --claim or a 'claim' line in the case file\n";
          return 2;
        }
      } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
      }
    }
    return run_cases(cases, common, slices().at(name));
  }
  return 2;
}
