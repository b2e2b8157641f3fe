#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

#include "walgebra/rational.hpp"
#include "walgebra/rootdata.hpp"

namespace walgebra::slodowy {

using rootdata::Element;
using rootdata::LieAlgebra;

/// A t^e-weight, in coordinates over NilpotentDatum::te_basis.
using Weight = RationalVector;

/// Diagonal automorphism of g given by its scalar on each basis vector
/// (1 on the Cartan part).  Used for elements of Gamma lying in the torus.
struct TorusElement {
  std::vector<Rational> scalars;
};

struct NilpotentDatum {
  std::shared_ptr<const LieAlgebra> algebra;
  Element e, h, f;
  /// ad h eigenvalue of each basis vector.
  std::vector<int> grading;
  /// Basis of t^e = t ∩ g^e, each in coordinates over h_1..h_rank.
  std::vector<RationalVector> te_basis;
  /// t^e-weight of each basis vector.
  std::vector<Weight> weights;
  /// chi(b_k) = kappa(e, b_k).
  Element chi;
};

/// Completes e to an sl2-triple with h in the fixed Cartan subalgebra.
/// Throws InputError if e is zero, not nilpotent, not a combination of
/// root vectors, or has no compatible h in t.
NilpotentDatum complete_sl2_triple(std::shared_ptr<const LieAlgebra> algebra, const Element& e);

struct CentralizerBasis {
  std::vector<Element> z;
  std::vector<int> m_deg;
  std::vector<Weight> beta;
  /// z_1..z_p generate g^e as a Lie algebra.
  std::size_t min_gen_count = 0;
  /// torus_chars[i][s]: eigenvalue of the s-th supplied torus element on z_i.
  std::vector<std::vector<Rational>> torus_chars;

  std::size_t size() const { return z.size(); }
};

/// Basis of g^e made of simultaneous eigenvectors for h, t^e and the given
/// torus elements, with a minimal generating set first.
CentralizerBasis centralizer(const NilpotentDatum& datum, std::span<const TorusElement> torus = {});

enum class PolarizationMode { zero, lagrangian };

struct Polarization {
  PolarizationMode mode = PolarizationMode::zero;
  /// Subspaces of g(-1) and of g, as lists of Chevalley basis indices.
  std::vector<std::size_t> l, l_perp, l_prime;
  /// Basis y_1..y_s of m; the first m_gen_count form a minimal generating set.
  std::vector<std::size_t> m_basis;
  std::size_t m_gen_count = 0;
  /// Minimal generating set of n = l_perp + g(<= -2).
  std::vector<std::size_t> n_generators;
  /// x_1..x_m, ordered by (n_i, weight, basis index).
  std::vector<std::size_t> pbar_basis;
  std::vector<int> n_deg;
  std::vector<Weight> alpha;
  /// Basis index -> position in pbar_basis, or -1 for basis vectors of m.
  std::vector<int> pbar_position;
};

Polarization choose_polarization(const NilpotentDatum& datum, PolarizationMode mode);

struct CInvariants {
  std::size_t c_e = 0;
  std::size_t derived_dim = 0;
  /// Indices i such that the z_i span a complement of [g^e, g^e].
  std::vector<std::size_t> complement;
};

CInvariants c_invariants(const LieAlgebra& algebra, const CentralizerBasis& basis);

/// Gram matrix of <x, y> = chi([x, y]) on the given basis vectors.
std::vector<std::vector<Rational>> symplectic_gram(const NilpotentDatum& datum,
                                                   std::span<const std::size_t> basis);

/// Lexicographic order on weights, used for deterministic orderings.
bool weight_less(const Weight& a, const Weight& b);

}  // namespace walgebra::slodowy
