#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <utility>
#include <vector>

#include "walgebra/gamma.hpp"
#include "walgebra/pbw.hpp"
#include "walgebra/slodowy.hpp"

namespace walgebra::walg {

using pbw::Monomial;
using pbw::PbwContext;
using pbw::Terms;

struct ThetaGenerator {
  std::size_t index = 0;
  rootdata::Element z;
  /// Correction terms; the generator is z + tail.
  Terms tail;
  /// z + tail in U(g)/I.
  Terms full;
  int m_deg = 0;
  slodowy::Weight beta;
};

/// Exponent vectors a != 0 with wt(a) = beta_i and either |a|_e <= m_i or
/// (|a|_e = m_i + 2 and |a| > 1), on which each torus element acts by its
/// eigenvalue on z_i.
std::vector<Monomial> ansatz_set(const PbwContext& ctx, const slodowy::CentralizerBasis& c, std::size_t i,
                                 std::span<const slodowy::TorusElement> torus = {});

/// Solves [y, z_i + sum lambda_a x^a] = 0 for the minimal generators y of n,
/// free parameters set to zero.  Throws ConsistencyError if unsolvable.
ThetaGenerator lift_theta(const PbwContext& ctx, const slodowy::CentralizerBasis& c, std::size_t i,
                          std::span<const slodowy::TorusElement> torus = {});

/// Replaces each Theta_i by the group average of g^{-1} Theta(g z_i).  The
/// group must fix e and h.
std::vector<ThetaGenerator> average_over_group(const PbwContext& ctx, const slodowy::CentralizerBasis& c,
                                               const std::vector<ThetaGenerator>& thetas,
                                               const std::vector<gamma::Automorphism>& group);

/// True if [y, Theta] = 0 for every minimal generator y of n.
bool is_invariant(const PbwContext& ctx, const Terms& theta);

/// Row of nu^{i,j}: map from b (an exponent vector over z_1..z_r) to nu_b.
using NuRow = std::map<Monomial, Rational>;

/// Products Theta^b and the descent that expresses elements of U(g,e) in the
/// PBW basis of the Theta_i.  Thread-safe.
class ThetaBasis {
 public:
  ThetaBasis(const PbwContext& ctx, const slodowy::CentralizerBasis& c, std::vector<ThetaGenerator> thetas);

  const std::vector<ThetaGenerator>& thetas() const { return thetas_; }
  std::size_t size() const { return thetas_.size(); }
  /// Theta_1^{b_1} ... Theta_r^{b_r} in U(g)/I.
  Terms power_product(const Monomial& b) const;
  /// z^b in S(pbar).
  Terms symbol(const Monomial& b) const;
  long kazhdan(const Monomial& b) const;

  /// Coordinates of u in the basis Theta^b.  Throws ConsistencyError if u is
  /// not in the span.
  NuRow decompose(Terms u) const;
  Terms reconstruct(const NuRow& row) const;

  Terms commutator(std::size_t i, std::size_t j) const;
  NuRow commutator_in_pbw(std::size_t i, std::size_t j) const;

 private:
  std::vector<Monomial> candidates(std::size_t total, long kazhdan, const slodowy::Weight& wt) const;

  const PbwContext& ctx_;
  const slodowy::CentralizerBasis& c_;
  std::vector<ThetaGenerator> thetas_;
  std::vector<Terms> z_terms_;
  mutable std::mutex mu_;
  mutable std::map<Monomial, std::shared_ptr<const Terms>> products_;
};

struct CommutatorTable {
  std::map<std::pair<std::size_t, std::size_t>, NuRow> entries;
};

/// J = {(i, j) : i < p, beta_j = -beta_i}.
std::vector<std::pair<std::size_t, std::size_t>> pair_set(const slodowy::CentralizerBasis& c);

/// Rows for all pairs in J; (j, i) is filled by antisymmetry when both occur.
CommutatorTable commutator_table(const ThetaBasis& basis, const slodowy::CentralizerBasis& c, unsigned jobs = 1);

/// |b|_e <= m_i + m_j + 2 and wt(b) = beta_i + beta_j for every nonzero entry.
bool satisfies_support_bound(const slodowy::CentralizerBasis& c, std::size_t i, std::size_t j, const NuRow& row);

struct EquationSystem {
  /// Indices i with beta_i = 0.
  std::vector<std::size_t> variables;
  /// Polynomials in theta_{variables[k]}, exponents indexed by k.
  std::vector<Terms> polys;
  /// Pair each polynomial came from.
  std::vector<std::pair<std::size_t, std::size_t>> sources;
};

EquationSystem extract_equations(const CommutatorTable& table, const slodowy::CentralizerBasis& c);

}  // namespace walgebra::walg
