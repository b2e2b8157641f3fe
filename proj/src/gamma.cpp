#include "walgebra/gamma.hpp"

#include <algorithm>

#include "walgebra/errors.hpp"
#include "walgebra/exactla.hpp"

namespace walgebra::gamma {

Automorphism identity(const LieAlgebra& L) {
  Automorphism a;
  for (std::size_t j = 0; j < L.dim(); ++j) a.push_back(L.basis_vector(j));
  return a;
}

Element apply(const Automorphism& a, const Element& x) {
  Element out(a.size(), Rational(0));
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (x[j] == 0) continue;
    for (std::size_t k = 0; k < out.size(); ++k)
      if (a[j][k] != 0) out[k] += x[j] * a[j][k];
  }
  return out;
}

Automorphism compose(const Automorphism& a, const Automorphism& b) {
  Automorphism out;
  out.reserve(b.size());
  for (const auto& col : b) out.push_back(apply(a, col));
  return out;
}

Automorphism exp_ad(const LieAlgebra& L, const Element& x) {
  Automorphism out;
  for (std::size_t j = 0; j < L.dim(); ++j) {
    Element term = L.basis_vector(j), sum = term;
    for (long k = 1;; ++k) {
      term = L.bracket(x, term);
      if (is_zero(term)) break;
      if (k > static_cast<long>(L.dim())) throw InputError("exp(ad x) requires ad-nilpotent x");
      for (auto& c : term) c /= k;
      for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += term[i];
    }
    out.push_back(std::move(sum));
  }
  return out;
}

Automorphism root_element(const LieAlgebra& L, const Root& root, const Rational& c) {
  Element x = L.zero();
  x[L.root_vector(root)] = c;
  return exp_ad(L, x);
}

Automorphism weyl_element(const LieAlgebra& L, const Root& root) {
  Root neg = root;
  for (auto& v : neg) v = -v;
  auto a = root_element(L, root, Rational(1));
  return compose(a, compose(root_element(L, neg, Rational(-1)), a));
}

Automorphism torus_element(const LieAlgebra& L, const std::vector<Rational>& values) {
  if (values.size() != L.rank()) throw InputError("torus element needs one value per simple root");
  for (const auto& v : values)
    if (v == 0) throw InputError("torus element values must be nonzero");
  Automorphism out = identity(L);
  for (std::size_t i = 0; i < L.num_roots(); ++i) {
    Rational s = 1;
    const auto& r = L.root_of(i);
    for (std::size_t k = 0; k < r.size(); ++k) {
      Rational base = r[k] > 0 ? values[k] : 1 / values[k];
      for (int t = 0; t < std::abs(r[k]); ++t) s *= base;
    }
    out[i][i] = s;
  }
  return out;
}

bool is_automorphism(const LieAlgebra& L, const Automorphism& a) {
  if (a.size() != L.dim()) return false;
  for (const auto& col : a)
    if (col.size() != L.dim()) return false;
  for (std::size_t i = 0; i < L.dim(); ++i)
    for (std::size_t j = i + 1; j < L.dim(); ++j) {
      Element lhs = L.zero();
      for (const auto& t : L.bracket_basis(i, j))
        for (std::size_t k = 0; k < L.dim(); ++k) lhs[k] += t.coef * a[t.index][k];
      if (lhs != L.bracket(a[i], a[j])) return false;
    }
  exactla::IncrementalBasis span(L.dim());
  for (const auto& col : a) span.add(col);
  return span.size() == L.dim();
}

std::vector<Automorphism> group_closure(const LieAlgebra& L, const std::vector<Automorphism>& gens,
                                        std::size_t limit) {
  std::vector<Automorphism> elems{identity(L)};
  for (std::size_t k = 0; k < elems.size(); ++k)
    for (const auto& g : gens) {
      Automorphism p = compose(g, elems[k]);
      if (std::find(elems.begin(), elems.end(), p) != elems.end()) continue;
      if (elems.size() >= limit) throw InputError("component-group lifts generate a group that is too large or infinite");
      elems.push_back(std::move(p));
    }
  return elems;
}

Automorphism inverse(const LieAlgebra& L, const Automorphism& a, std::size_t limit) {
  const Automorphism id = identity(L);
  Automorphism prev = id, cur = a;
  for (std::size_t k = 0; k < limit; ++k) {
    if (cur == id) return prev;
    prev = cur;
    cur = compose(a, cur);
  }
  throw InputError("automorphism does not have finite order");
}

std::optional<slodowy::TorusElement> as_torus(const Automorphism& a) {
  slodowy::TorusElement t;
  for (std::size_t j = 0; j < a.size(); ++j) {
    for (std::size_t k = 0; k < a.size(); ++k)
      if (k != j && a[j][k] != 0) return std::nullopt;
    t.scalars.push_back(a[j][j]);
  }
  return t;
}

std::vector<std::vector<Rational>> action_on_centralizer(const LieAlgebra& L, const Automorphism& a,
                                                         const slodowy::CentralizerBasis& z) {
  const std::size_t r = z.size();
  std::vector<std::vector<Rational>> out(r, std::vector<Rational>(r, Rational(0)));
  for (std::size_t i = 0; i < r; ++i) {
    Element img = apply(a, z.z[i]);
    exactla::SparseSystem sys(r);
    for (std::size_t k = 0; k < L.dim(); ++k) {
      exactla::SparseVector row;
      for (std::size_t c = 0; c < r; ++c)
        if (z.z[c][k] != 0) row.emplace_back(c, z.z[c][k]);
      sys.add_row(row, img[k]);
    }
    auto sol = exactla::solve_affine(sys);
    if (!sol.consistent) throw InputError("automorphism does not preserve the centralizer of e");
    for (std::size_t c = 0; c < r; ++c) out[c][i] = sol.x[c];
  }
  return out;
}

std::size_t fixed_abelianization_dim(const LieAlgebra& L, const std::vector<Automorphism>& group,
                                     const slodowy::CentralizerBasis& z) {
  exactla::IncrementalBasis span(L.dim());
  for (std::size_t i = 0; i < z.size(); ++i)
    for (std::size_t j = i + 1; j < z.size(); ++j) span.add(L.bracket(z.z[i], z.z[j]));
  const std::size_t derived = span.size();
  for (const auto& zi : z.z) {
    Element avg = L.zero();
    for (const auto& g : group) {
      Element gz = apply(g, zi);
      for (std::size_t k = 0; k < avg.size(); ++k) avg[k] += gz[k];
    }
    span.add(avg);
  }
  return span.size() - derived;
}

}  // namespace walgebra::gamma
