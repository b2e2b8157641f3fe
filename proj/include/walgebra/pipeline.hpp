#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "walgebra/casefile.hpp"
#include "walgebra/slodowy.hpp"

namespace walgebra::pipeline {

using Json = nlohmann::ordered_json;

enum class ErrorKind { input, consistency };

/// Module error tagged with the algorithm step it surfaced in (0 = input).
class StepError : public std::runtime_error {
 public:
  StepError(int step, ErrorKind kind, const std::string& what);
  int step() const { return step_; }
  ErrorKind kind() const { return kind_; }
  /// 2 for input errors, 3 for consistency failures.
  int exit_code() const { return kind_ == ErrorKind::input ? 2 : 3; }

 private:
  int step_;
  ErrorKind kind_;
};

const char* step_name(int step);

struct RunOptions {
  std::optional<slodowy::PolarizationMode> polarization;
  /// Overrides the claim named in the case file.
  std::optional<std::string> claim;
  std::optional<std::string> fixed_claim;
  std::optional<std::string> cache_dir;
  unsigned jobs = 1;
  /// Steps after this one are skipped.
  int last_step = 8;
  /// When false, claim files are neither loaded nor checked.
  bool check_claims = true;
  bool timing = false;
};

struct Outcome {
  Json report;
  /// False if a claim was checked and refuted.
  bool verified = true;
};

/// Runs steps 1..last_step.  Throws StepError.
Outcome run_case(const casefile::CaseFile& c, const RunOptions& opts);
Outcome run_case_file(const std::string& path, const RunOptions& opts);

/// Dimension, roots and Cartan matrix of a simple Lie algebra.
Json algebra_info(char type, int rank);

/// Human-readable rendering of a report or a slice of one.
std::string render_text(const Json& report);

}  // namespace walgebra::pipeline
