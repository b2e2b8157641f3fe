#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "walgebra/rootdata.hpp"
#include "walgebra/slodowy.hpp"

namespace walgebra::gamma {

using rootdata::Element;
using rootdata::LieAlgebra;
using rootdata::Root;

/// Linear map of g given by the images of the basis vectors.
using Automorphism = std::vector<Element>;

Automorphism identity(const LieAlgebra& L);
/// (a ∘ b)(x) = a(b(x)).
Automorphism compose(const Automorphism& a, const Automorphism& b);
Element apply(const Automorphism& a, const Element& x);

/// exp(ad x) for ad-nilpotent x.
Automorphism exp_ad(const LieAlgebra& L, const Element& x);
/// exp(c ad e_root).
Automorphism root_element(const LieAlgebra& L, const Root& root, const Rational& c);
/// exp(ad e_a) exp(-ad e_{-a}) exp(ad e_a).
Automorphism weyl_element(const LieAlgebra& L, const Root& root);
/// Torus element acting on e_a by prod_i values[i]^{a_i}.
Automorphism torus_element(const LieAlgebra& L, const std::vector<Rational>& values);

bool is_automorphism(const LieAlgebra& L, const Automorphism& a);

/// All products of the generators.  Throws InputError past `limit` elements.
std::vector<Automorphism> group_closure(const LieAlgebra& L, const std::vector<Automorphism>& gens,
                                        std::size_t limit = 512);

Automorphism inverse(const LieAlgebra& L, const Automorphism& a, std::size_t limit = 512);

/// Diagonal automorphisms as torus elements.
std::optional<slodowy::TorusElement> as_torus(const Automorphism& a);

/// Matrix of a on g^e in the basis z: column i holds the coordinates of a(z_i).
std::vector<std::vector<Rational>> action_on_centralizer(const LieAlgebra& L, const Automorphism& a,
                                                         const slodowy::CentralizerBasis& z);

/// dim of the group-fixed part of g^e/[g^e, g^e].  `group` must be closed
/// and preserve g^e.
std::size_t fixed_abelianization_dim(const LieAlgebra& L, const std::vector<Automorphism>& group,
                                     const slodowy::CentralizerBasis& z);

}  // namespace walgebra::gamma
