#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <shared_mutex>
#include <unordered_map>
#include <utility>
#include <vector>

#include "walgebra/rational.hpp"
#include "walgebra/slodowy.hpp"

namespace walgebra::pbw {

using rootdata::Element;

/// Exponent vector over the pbar basis, stored as sorted (letter, exponent)
/// pairs with positive exponents.
class Monomial {
 public:
  using Entry = std::pair<std::uint16_t, std::uint16_t>;

  Monomial() = default;
  static Monomial letter(std::size_t k) { return Monomial({{static_cast<std::uint16_t>(k), 1}}); }
  static Monomial from_dense(const std::vector<int>& a);

  const std::vector<Entry>& entries() const { return e_; }
  bool empty() const { return e_.empty(); }
  std::size_t first() const { return e_.front().first; }
  std::size_t exponent(std::size_t k) const;
  std::size_t total() const;

  Monomial times_letter(std::size_t k, int by = 1) const;
  Monomial operator*(const Monomial& o) const;
  std::vector<int> dense(std::size_t n) const;

  bool operator==(const Monomial& o) const { return e_ == o.e_; }
  bool operator<(const Monomial& o) const { return e_ < o.e_; }

  std::size_t hash() const;

 private:
  explicit Monomial(std::vector<Entry> e) : e_(std::move(e)) {}
  std::vector<Entry> e_;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

/// Element of U(g)/I written in the basis x^a + I.  Zero coefficients are
/// never stored.
using Terms = std::map<Monomial, Rational>;

void add_scaled(Terms& acc, const Terms& u, const Rational& c);
Terms scaled(const Terms& u, const Rational& c);
Terms difference(const Terms& u, const Terms& v);
/// Commutative product in S(pbar).
Terms commutative_product(const Terms& u, const Terms& v);

struct DegreeProfile {
  std::size_t total = 0;
  long kazhdan = 0;
  slodowy::Weight weight;

  bool operator==(const DegreeProfile&) const = default;
};

/// Multiplication in U(g)/I for a fixed nilpotent datum and polarization.
/// Thread-safe; straightening results are memoized.
class PbwContext {
 public:
  PbwContext(std::shared_ptr<const slodowy::NilpotentDatum> datum, std::shared_ptr<const slodowy::Polarization> pol);

  const slodowy::NilpotentDatum& datum() const { return *datum_; }
  const slodowy::Polarization& polarization() const { return *pol_; }
  const rootdata::LieAlgebra& algebra() const { return *datum_->algebra; }
  std::size_t num_letters() const { return pol_->pbar_basis.size(); }

  /// Class of b * x^a for a basis vector b of g.
  std::shared_ptr<const Terms> left_basis(std::size_t b, const Monomial& a) const;
  Terms left_multiply(const Element& x, const Terms& u) const;
  Terms product(const Terms& u, const Terms& v) const;
  /// Class of x in U(g)/I.
  Terms from_lie(const Element& x) const;
  /// Class of x u - u x.
  Terms adjoint(const Element& x, const Terms& u) const;

  DegreeProfile degree_profile(const Monomial& a) const;
  long kazhdan_degree(const Monomial& a) const;
  slodowy::Weight weight(const Monomial& a) const;

  /// Image of u under an automorphism of g preserving I, given by the images
  /// of the basis vectors.
  Terms apply_automorphism(const std::vector<Element>& images, const Terms& u) const;

  std::size_t cache_size() const;

 private:
  Terms compute_left(std::size_t b, const Monomial& a) const;

  std::shared_ptr<const slodowy::NilpotentDatum> datum_;
  std::shared_ptr<const slodowy::Polarization> pol_;

  struct Key {
    std::size_t b;
    Monomial a;
    bool operator==(const Key&) const = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const { return k.a.hash() * 1000003u ^ k.b; }
  };
  mutable std::shared_mutex mu_;
  mutable std::unordered_map<Key, std::shared_ptr<const Terms>, KeyHash> cache_;
};

std::string format_terms(const Terms& u, const std::vector<std::string>& letter_names);

}  // namespace walgebra::pbw
