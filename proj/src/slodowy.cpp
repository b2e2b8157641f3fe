#include "walgebra/slodowy.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <tuple>

#include "walgebra/errors.hpp"
#include "walgebra/exactla.hpp"

namespace walgebra::slodowy {

namespace {

using exactla::IncrementalBasis;
using exactla::SparseSystem;
using exactla::SparseVector;

bool is_nilpotent(const LieAlgebra& L, const Element& e) {
  const std::size_t n = L.dim();
  for (std::size_t j = 0; j < n; ++j) {
    Element v = L.basis_vector(j);
    std::size_t steps = 0;
    while (!is_zero(v)) {
      if (++steps > n) return false;
      v = L.bracket(e, v);
    }
  }
  return true;
}

// Columns of ad(x) restricted to the given basis indices.
std::vector<Element> ad_columns(const LieAlgebra& L, const Element& x) {
  std::vector<Element> cols;
  cols.reserve(L.dim());
  for (std::size_t j = 0; j < L.dim(); ++j) cols.push_back(L.ad_basis(x, j));
  return cols;
}

// Dimension of the Lie subalgebra generated by `gens`.
std::size_t generated_dim(const LieAlgebra& L, const std::vector<Element>& gens) {
  IncrementalBasis span(L.dim());
  std::vector<Element> vecs;
  for (const auto& g : gens)
    if (span.add(g)) vecs.push_back(g);
  for (std::size_t k = 0; k < vecs.size(); ++k)
    for (const auto& g : gens) {
      Element b = L.bracket(g, vecs[k]);
      if (span.add(b)) vecs.push_back(std::move(b));
    }
  return span.size();
}

// Basis vectors (by index) of the subalgebra spanned by `indices` that are
// not in its derived algebra.  The span must be a root-vector subalgebra.
std::vector<std::size_t> minimal_generators(const LieAlgebra& L, const std::vector<std::size_t>& indices) {
  IncrementalBasis derived(L.dim());
  for (auto i : indices)
    for (auto j : indices)
      if (!L.bracket_basis(i, j).empty()) derived.add(L.bracket(L.basis_vector(i), L.basis_vector(j)));
  std::vector<std::size_t> gens;
  for (auto i : indices)
    if (!derived.contains(L.basis_vector(i))) gens.push_back(i);
  return gens;
}

struct BlockKey {
  int grading;
  Weight weight;
  std::vector<Rational> chars;

  bool operator<(const BlockKey& o) const {
    if (grading != o.grading) return grading < o.grading;
    if (weight != o.weight) return weight_less(weight, o.weight);
    return chars < o.chars;
  }
};

}  // namespace

bool weight_less(const Weight& a, const Weight& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

NilpotentDatum complete_sl2_triple(std::shared_ptr<const LieAlgebra> algebra, const Element& e) {
  const LieAlgebra& L = *algebra;
  const std::size_t dim = L.dim(), rank = L.rank(), nr = L.num_roots();
  if (e.size() != dim) throw InputError("nilpotent element has wrong dimension");
  if (is_zero(e)) throw InputError("nilpotent element must be nonzero");
  for (std::size_t k = nr; k < dim; ++k)
    if (e[k] != 0) throw InputError("nilpotent element must be a combination of root vectors");
  if (!is_nilpotent(L, e)) throw InputError("element is not nilpotent (ad e is not nilpotent)");

  const auto ad_e = ad_columns(L, e);

  // Unknowns: x (dim) and h = sum t_j h_j (rank), with [e, x] = h, [h, e] = 2e.
  SparseSystem hs(dim + rank);
  for (std::size_t k = 0; k < dim; ++k) {
    SparseVector row;
    for (std::size_t j = 0; j < dim; ++j)
      if (ad_e[j][k] != 0) row.emplace_back(j, ad_e[j][k]);
    if (k >= nr) row.emplace_back(dim + (k - nr), Rational(-1));
    hs.add_row(row, Rational(0));
  }
  std::vector<Element> h_on_e(rank);
  for (std::size_t j = 0; j < rank; ++j) h_on_e[j] = L.bracket(L.basis_vector(nr + j), e);
  for (std::size_t k = 0; k < dim; ++k) {
    SparseVector row;
    for (std::size_t j = 0; j < rank; ++j)
      if (h_on_e[j][k] != 0) row.emplace_back(dim + j, h_on_e[j][k]);
    hs.add_row(row, 2 * e[k]);
  }
  auto hsol = exactla::solve_affine(hs);
  if (!hsol.consistent)
    throw InputError("no h in the fixed Cartan subalgebra completes e to an sl2-triple; "
                     "supply a conjugate representative compatible with t");

  NilpotentDatum d;
  d.algebra = algebra;
  d.e = e;
  d.h = L.zero();
  for (std::size_t j = 0; j < rank; ++j) d.h[nr + j] = hsol.x[dim + j];

  // Grading: alpha(h) for each root vector.
  const auto& rs = L.root_system();
  std::vector<rootdata::Root> simple(rank, rootdata::Root(rank, 0));
  for (std::size_t j = 0; j < rank; ++j) simple[j][j] = 1;
  d.grading.assign(dim, 0);
  for (std::size_t i = 0; i < nr; ++i) {
    Rational v = 0;
    for (std::size_t j = 0; j < rank; ++j) v += d.h[nr + j] * rs.pairing(rs.roots[i], simple[j]);
    if (!is_integer(v)) throw InputError("ad h has a non-integral eigenvalue");
    d.grading[i] = static_cast<int>(v.get_num().get_si());
  }

  // f: [e, f] = h and [h, f] = -2f.
  SparseSystem fs(dim);
  for (std::size_t k = 0; k < dim; ++k) {
    SparseVector row;
    for (std::size_t j = 0; j < dim; ++j)
      if (ad_e[j][k] != 0) row.emplace_back(j, ad_e[j][k]);
    fs.add_row(row, d.h[k]);
  }
  for (std::size_t j = 0; j < dim; ++j)
    if (d.grading[j] != -2) fs.add_row({{j, Rational(1)}}, Rational(0));
  auto fsol = exactla::solve_affine(fs);
  if (!fsol.consistent) throw ConsistencyError("Morozov completion failed: no f for (e, h)");
  d.f = fsol.x;

  Element two_e = e, minus_two_f = d.f;
  for (auto& x : two_e) x *= 2;
  for (auto& x : minus_two_f) x *= -2;
  if (L.bracket(d.h, e) != two_e || L.bracket(d.h, d.f) != minus_two_f || L.bracket(e, d.f) != d.h)
    throw ConsistencyError("computed (e, h, f) is not an sl2-triple");

  // t^e = { t in t : alpha(t) = 0 for alpha in supp(e) }.
  SparseSystem ts(rank);
  for (std::size_t i = 0; i < nr; ++i) {
    if (e[i] == 0) continue;
    SparseVector row;
    for (std::size_t j = 0; j < rank; ++j) row.emplace_back(j, Rational(rs.pairing(rs.roots[i], simple[j])));
    ts.add_row(row);
  }
  for (const auto& k : exactla::solve_homogeneous(ts)) {
    RationalVector v = exactla::to_dense(k, rank);
    Integer l = 1;
    for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    for (auto& x : v) x *= l;
    d.te_basis.push_back(std::move(v));
  }

  d.weights.assign(dim, Weight(d.te_basis.size(), Rational(0)));
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t k = 0; k < d.te_basis.size(); ++k) {
      Rational v = 0;
      for (std::size_t j = 0; j < rank; ++j) v += d.te_basis[k][j] * rs.pairing(rs.roots[i], simple[j]);
      d.weights[i][k] = v;
    }

  d.chi = L.zero();
  for (std::size_t k = 0; k < dim; ++k)
    for (std::size_t i = 0; i < nr; ++i)
      if (e[i] != 0) d.chi[k] += e[i] * L.killing(i, k);
  return d;
}

CentralizerBasis centralizer(const NilpotentDatum& datum, std::span<const TorusElement> torus) {
  const LieAlgebra& L = *datum.algebra;
  const std::size_t dim = L.dim();

  std::map<BlockKey, std::vector<std::size_t>> blocks;
  for (std::size_t j = 0; j < dim; ++j) {
    BlockKey key{datum.grading[j], datum.weights[j], {}};
    for (const auto& s : torus) key.chars.push_back(s.scalars.at(j));
    blocks[key].push_back(j);
  }

  struct Candidate {
    Element z;
    const BlockKey* key;
  };
  std::vector<Candidate> cands;
  for (const auto& [key, idx] : blocks) {
    SparseSystem sys(idx.size());
    std::vector<Element> images;
    for (auto j : idx) images.push_back(L.ad_basis(datum.e, j));
    for (std::size_t k = 0; k < dim; ++k) {
      SparseVector row;
      for (std::size_t c = 0; c < idx.size(); ++c)
        if (images[c][k] != 0) row.emplace_back(c, images[c][k]);
      if (!row.empty()) sys.add_row(row);
    }
    for (const auto& kv : exactla::solve_homogeneous(sys)) {
      Element z = L.zero();
      for (const auto& [c, x] : kv) z[idx[c]] = x;
      cands.push_back({std::move(z), &key});
    }
  }

  // Greedy generating set from lowest m upward, then drop redundant ones.
  std::vector<std::size_t> gens;
  {
    IncrementalBasis closure(dim);
    std::vector<Element> chosen;
    for (std::size_t c = 0; c < cands.size(); ++c) {
      if (closure.contains(cands[c].z)) continue;
      gens.push_back(c);
      chosen.push_back(cands[c].z);
      closure = IncrementalBasis(dim);
      std::vector<Element> vecs;
      for (const auto& g : chosen)
        if (closure.add(g)) vecs.push_back(g);
      for (std::size_t k = 0; k < vecs.size(); ++k)
        for (const auto& g : chosen) {
          Element b = L.bracket(g, vecs[k]);
          if (closure.add(b)) vecs.push_back(std::move(b));
        }
    }
    for (std::size_t k = gens.size(); k-- > 0;) {
      std::vector<Element> rest;
      for (std::size_t q = 0; q < gens.size(); ++q)
        if (q != k) rest.push_back(cands[gens[q]].z);
      if (generated_dim(L, rest) == cands.size()) gens.erase(gens.begin() + static_cast<long>(k));
    }
  }

  CentralizerBasis out;
  std::vector<char> used(cands.size(), 0);
  auto push = [&](std::size_t c) {
    used[c] = 1;
    out.z.push_back(cands[c].z);
    out.m_deg.push_back(cands[c].key->grading);
    out.beta.push_back(cands[c].key->weight);
    out.torus_chars.push_back(cands[c].key->chars);
  };
  for (auto c : gens) push(c);
  out.min_gen_count = gens.size();
  for (std::size_t c = 0; c < cands.size(); ++c)
    if (!used[c]) push(c);
  return out;
}

std::vector<std::vector<Rational>> symplectic_gram(const NilpotentDatum& datum,
                                                   std::span<const std::size_t> basis) {
  const LieAlgebra& L = *datum.algebra;
  std::vector<std::vector<Rational>> g(basis.size(), std::vector<Rational>(basis.size(), Rational(0)));
  for (std::size_t a = 0; a < basis.size(); ++a)
    for (std::size_t b = 0; b < basis.size(); ++b)
      for (const auto& t : L.bracket_basis(basis[a], basis[b])) g[a][b] += t.coef * datum.chi[t.index];
  return g;
}

Polarization choose_polarization(const NilpotentDatum& datum, PolarizationMode mode) {
  const LieAlgebra& L = *datum.algebra;
  const std::size_t dim = L.dim();
  Polarization p;
  p.mode = mode;

  std::vector<std::size_t> gm1;
  for (std::size_t j = 0; j < dim; ++j)
    if (datum.grading[j] == -1) gm1.push_back(j);
  const auto gram = symplectic_gram(datum, gm1);

  std::vector<char> in_l(gm1.size(), 0);
  if (mode == PolarizationMode::lagrangian && !gm1.empty()) {
    const std::size_t target = gm1.size() / 2;
    std::vector<std::size_t> pick;
    // Depth-first search for a set of pairwise-orthogonal root vectors of
    // size dim g(-1)/2, trying basis order first.
    std::function<bool(std::size_t)> dfs = [&](std::size_t from) {
      if (pick.size() == target) return true;
      for (std::size_t a = from; a < gm1.size(); ++a) {
        if (gm1.size() - a < target - pick.size()) return false;
        bool ok = true;
        for (auto b : pick)
          if (gram[a][b] != 0) {
            ok = false;
            break;
          }
        if (!ok) continue;
        pick.push_back(a);
        if (dfs(a + 1)) return true;
        pick.pop_back();
      }
      return false;
    };
    if (!dfs(0)) throw InputError("no t-stable Lagrangian subspace of g(-1); use the zero polarization");
    for (auto a : pick) in_l[a] = 1;
  }
  for (std::size_t a = 0; a < gm1.size(); ++a) (in_l[a] ? p.l : p.l_prime).push_back(gm1[a]);
  p.l_perp = (mode == PolarizationMode::lagrangian) ? p.l : gm1;

  std::vector<std::size_t> m_idx = p.l, n_idx = p.l_perp;
  for (std::size_t j = 0; j < dim; ++j)
    if (datum.grading[j] <= -2) {
      m_idx.push_back(j);
      n_idx.push_back(j);
    }
  std::sort(m_idx.begin(), m_idx.end());
  std::sort(n_idx.begin(), n_idx.end());
  auto m_gens = minimal_generators(L, m_idx);
  p.m_basis = m_gens;
  p.m_gen_count = m_gens.size();
  for (auto j : m_idx)
    if (std::find(m_gens.begin(), m_gens.end(), j) == m_gens.end()) p.m_basis.push_back(j);
  p.n_generators = minimal_generators(L, n_idx);

  std::vector<std::size_t> pbar = p.l_prime;
  for (std::size_t j = 0; j < dim; ++j)
    if (datum.grading[j] >= 0) pbar.push_back(j);
  std::sort(pbar.begin(), pbar.end(), [&](std::size_t a, std::size_t b) {
    if (datum.grading[a] != datum.grading[b]) return datum.grading[a] < datum.grading[b];
    if (datum.weights[a] != datum.weights[b]) return weight_less(datum.weights[a], datum.weights[b]);
    return a < b;
  });
  p.pbar_basis = pbar;
  p.pbar_position.assign(dim, -1);
  for (std::size_t k = 0; k < pbar.size(); ++k) {
    p.pbar_position[pbar[k]] = static_cast<int>(k);
    p.n_deg.push_back(datum.grading[pbar[k]]);
    p.alpha.push_back(datum.weights[pbar[k]]);
  }
  return p;
}

CInvariants c_invariants(const LieAlgebra& algebra, const CentralizerBasis& basis) {
  IncrementalBasis derived(algebra.dim());
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j) derived.add(algebra.bracket(basis.z[i], basis.z[j]));
  CInvariants out;
  out.derived_dim = derived.size();
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (derived.add(basis.z[i])) out.complement.push_back(i);
  out.c_e = out.complement.size();
  return out;
}

}  // namespace walgebra::slodowy
