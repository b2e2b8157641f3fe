#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "walgebra/rational.hpp"

namespace walgebra::idealkit {

using Exponents = std::vector<int>;

enum class OrderKind { grevlex, lex, elimination };

/// Monomial order.  `elimination` compares the first `block` variables by
/// grevlex first and breaks ties by grevlex on the rest.
struct MonomialOrder {
  OrderKind kind = OrderKind::grevlex;
  std::size_t block = 0;
};

struct Ring {
  std::vector<std::string> names;
  MonomialOrder order;

  std::size_t nvars() const { return names.size(); }
  /// Negative, zero or positive as a is smaller, equal or larger than b.
  int compare(const Exponents& a, const Exponents& b) const;
};

struct Term {
  Exponents exps;
  Rational coef;
  bool operator==(const Term&) const = default;
};

/// Polynomial with terms sorted decreasingly in the ring order, no zero
/// coefficients.  Operations taking a Ring assume all operands share it.
class Polynomial {
 public:
  Polynomial() = default;
  static Polynomial constant(const Ring& R, const Rational& c);
  static Polynomial variable(const Ring& R, std::size_t k);
  static Polynomial from_terms(const Ring& R, std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  const Term& leading() const { return terms_.front(); }
  int total_degree() const;

  Polynomial add(const Ring& R, const Polynomial& o, const Rational& c = 1) const;
  Polynomial mul(const Ring& R, const Polynomial& o) const;
  Polynomial mul_term(const Ring& R, const Exponents& m, const Rational& c) const;
  Polynomial scaled(const Rational& c) const;
  Polynomial monic() const;
  /// Re-sorts the terms for another order on the same variables.
  Polynomial reorder(const Ring& R) const;
  /// Replaces variable k by images[k], a polynomial in `target`.
  Polynomial substitute(const Ring& target, const std::vector<Polynomial>& images) const;
  /// Embeds into a ring whose variables `offset..offset+nvars` are ours.
  Polynomial embed(const Ring& target, std::size_t offset) const;

  bool operator==(const Polynomial&) const = default;

 private:
  std::vector<Term> terms_;
};

std::string format(const Ring& R, const Polynomial& p);

/// Parses an expression with + - * / ^, parentheses, integer or rational
/// constants and the ring's variable names.  Division only by constants.
Polynomial parse_polynomial(const Ring& R, const std::string& text);

/// Reduced Groebner basis, monic, sorted by increasing leading monomial.
std::vector<Polynomial> groebner(const Ring& R, const std::vector<Polynomial>& gens);
Polynomial normal_form(const Ring& R, const Polynomial& p, const std::vector<Polynomial>& basis);
bool contains(const Ring& R, const std::vector<Polynomial>& basis, const Polynomial& p);
bool contains_all(const Ring& R, const std::vector<Polynomial>& basis, const std::vector<Polynomial>& ps);

/// Krull dimension of R/I from the leading monomials of a Groebner basis;
/// -1 for the unit ideal.
int dimension(const Ring& R, const std::vector<Polynomial>& basis);

/// Ideal of the first `k` variables eliminated, as polynomials in the
/// remaining variables (grevlex Groebner basis in `rest`).
std::vector<Polynomial> eliminate(const Ring& R, const std::vector<Polynomial>& gens, std::size_t k, const Ring& rest);

/// I ∩ J via t I + (1 - t) J.
std::vector<Polynomial> intersect(const Ring& R, const std::vector<Polynomial>& I, const std::vector<Polynomial>& J);
/// p in rad(I), by 1 in I + (1 - y p).
bool radical_contains(const Ring& R, const std::vector<Polynomial>& I, const Polynomial& p);

/// Irreducible closed subset given as a point or as the image of a
/// polynomial map from affine d-space.
struct Component {
  std::string name;
  std::vector<std::string> params;
  /// One polynomial per ambient variable, in the parameter ring.
  std::vector<Polynomial> coords;

  Ring param_ring() const { return Ring{params, {}}; }
};

Component parse_component(const Ring& ambient, const std::string& name, const std::vector<std::string>& params,
                          const std::vector<std::string>& coords);

/// Vanishing ideal of the closure of the image (reduced Groebner basis).
std::vector<Polynomial> component_ideal(const Ring& ambient, const Component& c);

/// True if some d coordinates of the map form an invertible affine-linear
/// function of the parameters, so the image is isomorphic to affine d-space.
bool is_affine_space_chart(const Component& c);

struct ClaimIntersection {
  std::size_t a = 0, b = 0;
  Component expected;
};

struct Claim {
  std::vector<std::string> variables;
  std::vector<Component> components;
  std::vector<ClaimIntersection> intersections;
  bool accept_radical = false;
  /// Expected orbit sizes of the component-group action on components, sorted.
  std::optional<std::vector<std::size_t>> gamma_orbits;
  /// Components expected to be fixed pointwise by every generator.
  std::vector<std::size_t> gamma_pointwise;
};

struct ComponentCheck {
  std::string name;
  bool vanishes = false;
  int dimension = -1;
  int expected_dimension = 0;
  bool affine_chart = false;
};

struct IntersectionCheck {
  std::string a, b;
  bool matches = false;
};

struct DecompositionReport {
  std::vector<ComponentCheck> components;
  /// I contained in the intersection of component ideals.
  bool ideal_in_components = false;
  /// Intersection of component ideals contained in I.
  bool components_in_ideal = false;
  /// Intersection of component ideals contained in rad(I).
  bool components_in_radical = false;
  bool irredundant = false;
  std::vector<IntersectionCheck> intersections;
  bool pass = false;
  std::string verdict;
};

DecompositionReport verify_decomposition(const Ring& R, const std::vector<Polynomial>& gens, const Claim& claim);

/// Linear substitution theta -> A theta with A given by rows.
using LinearMap = std::vector<std::vector<Rational>>;

struct FixedIdealResult {
  std::vector<Polynomial> basis;
  /// Index of a generator that does not stabilize V(I), with a polynomial
  /// of I whose image is not in I.
  std::optional<std::pair<std::size_t, Polynomial>> witness;
};

FixedIdealResult gamma_fixed_ideal(const Ring& R, const std::vector<Polynomial>& gens, const std::vector<LinearMap>& action);

/// perm[k] = index of the claimed component containing A(component k), or
/// -1 if there is none.
std::vector<int> component_permutation(const Ring& R, const Claim& claim, const LinearMap& A);

/// A(c(s)) = c(s) identically in the parameters.
bool fixes_pointwise(const Ring& R, const Component& c, const LinearMap& A);

}  // namespace walgebra::idealkit
