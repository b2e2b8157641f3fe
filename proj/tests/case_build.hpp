#pragma once

// Builds the objects of steps 1-6 for a case file, including the
// component-group averaging, directly from the library modules.

#include <memory>
#include <string>
#include <vector>

#include "walgebra/casefile.hpp"
#include "walgebra/gamma.hpp"
#include "walgebra/walg.hpp"

namespace casebuild {

using namespace walgebra;

struct Built {
  casefile::CaseFile file;
  std::shared_ptr<const rootdata::LieAlgebra> L;
  std::shared_ptr<const slodowy::NilpotentDatum> d;
  std::shared_ptr<const slodowy::Polarization> p;
  std::vector<gamma::Automorphism> lifts, group;
  slodowy::CentralizerBasis c;
  std::unique_ptr<pbw::PbwContext> ctx;
  std::vector<walg::ThetaGenerator> thetas;
  std::unique_ptr<walg::ThetaBasis> basis;
};

inline std::unique_ptr<Built> build(const std::string& path) {
  auto b = std::make_unique<Built>();
  b->file = casefile::load_case(path);
  b->L = std::make_shared<const rootdata::LieAlgebra>(rootdata::build_root_system(b->file.type, b->file.rank));
  b->d = std::make_shared<const slodowy::NilpotentDatum>(
      slodowy::complete_sl2_triple(b->L, casefile::build_e(*b->L, b->file)));
  b->p = std::make_shared<const slodowy::Polarization>(slodowy::choose_polarization(*b->d, b->file.polarization));
  for (const auto& l : b->file.lifts) b->lifts.push_back(casefile::build_lift(*b->L, l));
  b->group = gamma::group_closure(*b->L, b->lifts);
  std::vector<slodowy::TorusElement> torus;
  const auto id = gamma::identity(*b->L);
  for (const auto& g : b->group)
    if (g != id)
      if (auto t = gamma::as_torus(g)) torus.push_back(*t);
  b->c = slodowy::centralizer(*b->d, torus);
  b->ctx = std::make_unique<pbw::PbwContext>(b->d, b->p);
  for (std::size_t i = 0; i < b->c.size(); ++i) b->thetas.push_back(walg::lift_theta(*b->ctx, b->c, i, torus));
  b->thetas = walg::average_over_group(*b->ctx, b->c, b->thetas, b->group);
  b->basis = std::make_unique<walg::ThetaBasis>(*b->ctx, b->c, b->thetas);
  return b;
}

}  // namespace casebuild
