#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "walgebra/gamma.hpp"
#include "walgebra/idealkit.hpp"
#include "walgebra/slodowy.hpp"

namespace walgebra::casefile {

/// One factor of a component-group lift.
struct LiftFactor {
  enum class Kind { weyl, root, torus };
  Kind kind = Kind::weyl;
  rootdata::Root root;
  Rational coef;
  std::vector<Rational> values;
};

/// A lift either as a word (composed left to right: f1 ∘ f2 ∘ ...) or as an
/// explicit matrix whose line j is the image of basis vector j.
struct GammaLift {
  std::string name;
  std::vector<LiftFactor> word;
  std::optional<gamma::Automorphism> matrix;
};

struct CaseFile {
  std::string path;
  std::string text;
  char type = 'A';
  int rank = 1;
  std::vector<std::pair<rootdata::Root, Rational>> e;
  slodowy::PolarizationMode polarization = slodowy::PolarizationMode::zero;
  std::optional<std::string> claim;
  std::optional<std::string> fixed_claim;
  std::vector<GammaLift> lifts;
};

/// Parses the text of a case file; relative paths resolve against base_dir.
CaseFile parse_case(const std::string& text, const std::string& base_dir = ".");
CaseFile load_case(const std::string& path);

rootdata::Element build_e(const rootdata::LieAlgebra& L, const CaseFile& c);
gamma::Automorphism build_lift(const rootdata::LieAlgebra& L, const GammaLift& lift);

idealkit::Claim parse_claim(const std::string& text);
idealkit::Claim load_claim(const std::string& path);

std::string read_file(const std::string& path);
rootdata::Root parse_root(const std::string& text);

}  // namespace walgebra::casefile
