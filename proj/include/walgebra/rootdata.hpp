#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "walgebra/rational.hpp"

namespace walgebra::rootdata {

/// Root in simple-root coordinates.
using Root = std::vector<int>;

struct RootSystem {
  char type_letter = 'A';
  int rank = 0;
  /// Positive roots sorted by (height, lex), then their negatives in the
  /// same order: roots[k + num_positive()] == -roots[k].
  std::vector<Root> roots;
  /// cartan_matrix[i][j] = <alpha_j, alpha_i^vee>.
  std::vector<std::vector<int>> cartan_matrix;
  /// Gram matrix of the simple roots, short roots normalized to length^2 2.
  std::vector<std::vector<int>> gram;

  std::size_t num_positive() const { return roots.size() / 2; }
  std::optional<std::size_t> index_of(const Root& r) const;
  int inner(const Root& a, const Root& b) const;
  /// <a, b^vee> = 2(a,b)/(b,b).
  int pairing(const Root& a, const Root& b) const;
  std::string name() const { return std::string(1, type_letter) + std::to_string(rank); }
};

RootSystem build_root_system(char type_letter, int rank);

/// One term of a basis bracket: coefficient * b_index.
struct Term {
  std::size_t index;
  long coef;
};

using Element = RationalVector;

/// Simple Lie algebra with a Chevalley basis.  Basis order: positive root
/// vectors, negative root vectors (mirroring the positive order), then
/// h_1..h_rank.  Immutable after construction.
class LieAlgebra {
 public:
  explicit LieAlgebra(RootSystem rs);

  const RootSystem& root_system() const { return rs_; }
  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return static_cast<std::size_t>(rs_.rank); }
  std::size_t num_roots() const { return rs_.roots.size(); }

  bool is_root_vector(std::size_t i) const { return i < num_roots(); }
  const Root& root_of(std::size_t i) const { return rs_.roots.at(i); }
  std::size_t root_vector(const Root& r) const;
  std::size_t cartan_index(std::size_t i) const { return num_roots() + i; }
  const std::string& label(std::size_t i) const { return labels_.at(i); }

  const std::vector<Term>& bracket_basis(std::size_t i, std::size_t j) const {
    return table_[i * dim_ + j];
  }
  Element bracket(const Element& x, const Element& y) const;
  /// ad(x) applied to basis vector j.
  Element ad_basis(const Element& x, std::size_t j) const;

  const Rational& killing(std::size_t i, std::size_t j) const { return killing_[i * dim_ + j]; }

  Element basis_vector(std::size_t i) const;
  Element zero() const { return Element(dim_, Rational(0)); }
  /// Signed coefficient N_{a,b} with [e_a, e_b] = N_{a,b} e_{a+b}.
  long structure_constant(const Root& a, const Root& b) const;

 private:
  RootSystem rs_;
  std::size_t dim_;
  std::vector<std::string> labels_;
  std::vector<std::vector<Term>> table_;
  std::vector<Rational> killing_;
};

LieAlgebra build_lie_algebra(const RootSystem& rs);

/// kappa(x, y) for the Killing form.  Throws std::invalid_argument on a
/// dimension mismatch.
Rational killing_pairing(const LieAlgebra& L, const Element& x, const Element& y);

std::string format_element(const LieAlgebra& L, const Element& x);

}  // namespace walgebra::rootdata
