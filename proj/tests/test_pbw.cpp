#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>

#include "walgebra/pbw.hpp"

using namespace walgebra;
using namespace walgebra::pbw;
using slodowy::PolarizationMode;

namespace {

struct Setup {
  std::shared_ptr<const rootdata::LieAlgebra> L;
  std::shared_ptr<const slodowy::NilpotentDatum> d;
  std::shared_ptr<const slodowy::Polarization> p;
  std::unique_ptr<PbwContext> ctx;
};

Setup make(char t, int r, std::vector<rootdata::Root> roots, PolarizationMode mode = PolarizationMode::zero,
           Rational chi_scale = 1) {
  Setup s;
  s.L = std::make_shared<const rootdata::LieAlgebra>(rootdata::build_root_system(t, r));
  Element e = s.L->zero();
  for (const auto& a : roots) e[s.L->root_vector(a)] = 1;
  auto d = slodowy::complete_sl2_triple(s.L, e);
  for (auto& x : d.chi) x *= chi_scale;
  s.d = std::make_shared<const slodowy::NilpotentDatum>(std::move(d));
  s.p = std::make_shared<const slodowy::Polarization>(slodowy::choose_polarization(*s.d, mode));
  s.ctx = std::make_unique<PbwContext>(s.d, s.p);
  return s;
}

// Naive straightener on words of g-basis indices: bubble-sort adjacent pairs
// into (pbar position, then m letters last), replace a trailing m letter by
// chi.  Independent of the memoized left-multiplication recursion.
Terms oracle_straighten(const Setup& s, const std::vector<std::size_t>& word) {
  const auto& pos = s.p->pbar_position;
  auto key = [&](std::size_t b) { return pos[b] >= 0 ? pos[b] : 1 << 20; };
  std::map<std::vector<std::size_t>, Rational> todo{{word, Rational(1)}};
  Terms out;
  while (!todo.empty()) {
    auto node = todo.extract(std::prev(todo.end()));
    const auto w = node.key();
    const Rational c = node.mapped();
    if (c == 0) continue;
    std::size_t k = 0;
    while (k + 1 < w.size() && key(w[k]) <= key(w[k + 1])) ++k;
    if (k + 1 < w.size()) {
      auto swapped = w;
      std::swap(swapped[k], swapped[k + 1]);
      todo[swapped] += c;
      for (const auto& t : s.L->bracket_basis(w[k], w[k + 1])) {
        std::vector<std::size_t> shorter(w.begin(), w.begin() + static_cast<long>(k));
        shorter.push_back(t.index);
        shorter.insert(shorter.end(), w.begin() + static_cast<long>(k) + 2, w.end());
        todo[shorter] += c * t.coef;
      }
      continue;
    }
    if (!w.empty() && pos[w.back()] < 0) {
      auto shorter = w;
      shorter.pop_back();
      todo[shorter] += c * s.d->chi[w.back()];
      continue;
    }
    std::vector<int> a(s.p->pbar_basis.size(), 0);
    for (auto b : w) ++a[static_cast<std::size_t>(pos[b])];
    add_scaled(out, Terms{{Monomial::from_dense(a), Rational(1)}}, c);
  }
  return out;
}

std::vector<std::size_t> word_of(const Setup& s, const Monomial& m) {
  std::vector<std::size_t> w;
  for (const auto& [k, p] : m.entries())
    for (int i = 0; i < p; ++i) w.push_back(s.p->pbar_basis[k]);
  return w;
}

std::vector<Monomial> monomials_up_to(std::size_t n, std::size_t deg) {
  std::vector<Monomial> out{Monomial()};
  for (std::size_t d = 1; d <= deg; ++d) {
    std::vector<Monomial> next;
    for (const auto& m : out)
      if (m.total() == d - 1)
        for (std::size_t k = m.empty() ? 0 : m.entries().back().first; k < n; ++k) next.push_back(m.times_letter(k));
    out.insert(out.end(), next.begin(), next.end());
  }
  return out;
}

Terms mono(const Monomial& m) { return Terms{{m, Rational(1)}}; }

std::size_t letter(const Setup& s, std::size_t basis_index) {
  return static_cast<std::size_t>(s.p->pbar_position[basis_index]);
}

}  // namespace

TEST_CASE("A1: f e = 4e - h with the Killing form") {
  auto s = make('A', 1, {{1}});
  Element f = s.L->basis_vector(1);
  Terms e_cls = s.ctx->from_lie(s.L->basis_vector(0));
  Terms h_cls = s.ctx->from_lie(s.L->basis_vector(2));
  Terms want = scaled(e_cls, 4);
  add_scaled(want, h_cls, -1);
  CHECK(s.ctx->left_multiply(f, e_cls) == want);
  CHECK(s.ctx->from_lie(f) == Terms{{Monomial(), Rational(4)}});
  Terms one{{Monomial(), Rational(1)}};
  CHECK(s.ctx->product(one, e_cls) == e_cls);
  CHECK(s.ctx->adjoint(f, one).empty());
  // h e - e h = 2e
  Terms he = s.ctx->product(h_cls, e_cls), eh = s.ctx->product(e_cls, h_cls);
  CHECK(difference(he, eh) == scaled(e_cls, 2));
}

TEST_CASE("A1: invariant element e - h/2 + h^2/4 at chi(f) = 1") {
  auto s = make('A', 1, {{1}}, PolarizationMode::zero, Rational(1, 4));
  const std::size_t E = letter(s, 0), H = letter(s, 2);
  Terms u{{Monomial::letter(E), Rational(1)},
          {Monomial::letter(H), Rational(-1, 2)},
          {Monomial::letter(H).times_letter(H), Rational(1, 4)}};
  CHECK(s.ctx->adjoint(s.L->basis_vector(1), u).empty());
  auto k = make('A', 1, {{1}});
  Terms v{{Monomial::letter(E), Rational(1)},
          {Monomial::letter(H), Rational(-1, 8)},
          {Monomial::letter(H).times_letter(H), Rational(1, 16)}};
  CHECK(k.ctx->adjoint(k.L->basis_vector(1), v).empty());
}

TEST_CASE("degree profiles") {
  auto s = make('A', 1, {{1}});
  const std::size_t E = letter(s, 0), H = letter(s, 2);
  CHECK(s.ctx->kazhdan_degree(Monomial::letter(E)) == 4);
  auto p = s.ctx->degree_profile(Monomial::letter(H).times_letter(H));
  CHECK(p.kazhdan == 4);
  CHECK(p.total == 2);
  CHECK(s.ctx->degree_profile(Monomial()) == DegreeProfile{0, 0, {}});
}

TEST_CASE("products agree with the naive straightener") {
  for (auto* sp : {new Setup(make('A', 2, {{1, 0}})), new Setup(make('C', 2, {{1, 0}})),
                   new Setup(make('A', 2, {{1, 0}}, PolarizationMode::lagrangian)),
                   new Setup(make('G', 2, {{1, 1}, {2, 1}}))}) {
    std::unique_ptr<Setup> s(sp);
    const auto ms = monomials_up_to(s->ctx->num_letters(), 2);
    std::size_t checked = 0;
    for (const auto& a : ms)
      for (const auto& b : ms) {
        if (a.total() + b.total() > 3) continue;
        auto w = word_of(*s, a), wb = word_of(*s, b);
        w.insert(w.end(), wb.begin(), wb.end());
        CHECK(s->ctx->product(mono(a), mono(b)) == oracle_straighten(*s, w));
        ++checked;
      }
    CHECK(checked > 0);
    // m letters on the left as well
    for (std::size_t y : s->p->m_basis)
      for (const auto& a : ms) {
        if (a.total() > 2) continue;
        auto w = word_of(*s, a);
        w.insert(w.begin(), y);
        CHECK(s->ctx->left_multiply(s->L->basis_vector(y), mono(a)) == oracle_straighten(*s, w));
      }
  }
}

TEST_CASE("associativity on low-degree monomials") {
  auto s = make('C', 2, {{1, 0}});
  const auto ms = monomials_up_to(s.ctx->num_letters(), 1);
  for (const auto& a : ms)
    for (const auto& b : ms)
      for (const auto& c : ms) {
        Terms left = s.ctx->product(s.ctx->product(mono(a), mono(b)), mono(c));
        Terms right = s.ctx->product(mono(a), s.ctx->product(mono(b), mono(c)));
        CHECK(left == right);
      }
}

TEST_CASE("filtration and associated graded") {
  auto s = make('G', 2, {{1, 1}, {2, 1}});
  const auto ms = monomials_up_to(s.ctx->num_letters(), 2);
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const auto& a = ms[rng() % ms.size()];
    const auto& b = ms[rng() % ms.size()];
    Terms prod = s.ctx->product(mono(a), mono(b));
    const long bound = s.ctx->kazhdan_degree(a) + s.ctx->kazhdan_degree(b);
    Terms top;
    for (const auto& [m, c] : prod) {
      CHECK(s.ctx->kazhdan_degree(m) <= bound);
      if (s.ctx->kazhdan_degree(m) == bound) top.emplace(m, c);
    }
    CHECK(top == Terms{{a * b, Rational(1)}});
  }
}

TEST_CASE("Leibniz rule for n acting on U(g)/I") {
  // [x, z v] = [x, z] v + z [x, v] for x in n, z in g, v in U(g)/I.
  for (auto mode : {PolarizationMode::zero, PolarizationMode::lagrangian}) {
    auto s = make('A', 2, {{1, 0}}, mode);
    const auto ms = monomials_up_to(s.ctx->num_letters(), 2);
    for (std::size_t y : s.p->n_generators) {
      Element x = s.L->basis_vector(y);
      for (std::size_t zb = 0; zb < s.L->dim(); ++zb) {
        Element z = s.L->basis_vector(zb);
        for (const auto& a : ms) {
          Terms lhs = s.ctx->adjoint(x, s.ctx->left_multiply(z, mono(a)));
          Terms rhs = s.ctx->left_multiply(s.L->bracket(x, z), mono(a));
          add_scaled(rhs, s.ctx->left_multiply(z, s.ctx->adjoint(x, mono(a))), 1);
          CHECK(lhs == rhs);
        }
      }
    }
  }
}

TEST_CASE("n-invariant elements act on the right") {
  // [f, v u] = [f, v] u when [f, u] = 0.
  auto s = make('A', 1, {{1}}, PolarizationMode::zero, Rational(1, 4));
  const std::size_t E = letter(s, 0), H = letter(s, 2);
  Terms u{{Monomial::letter(E), Rational(1)},
          {Monomial::letter(H), Rational(-1, 2)},
          {Monomial::letter(H).times_letter(H), Rational(1, 4)}};
  Element f = s.L->basis_vector(1);
  for (const auto& a : monomials_up_to(2, 3)) {
    CHECK(s.ctx->adjoint(f, s.ctx->product(mono(a), u)) == s.ctx->product(s.ctx->adjoint(f, mono(a)), u));
  }
}

TEST_CASE("adjoint action is bilinear") {
  auto s = make('C', 2, {{1, 0}});
  const auto ms = monomials_up_to(s.ctx->num_letters(), 2);
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    Element x = s.L->zero(), y = s.L->zero();
    x[rng() % s.L->dim()] = Rational(static_cast<long>(rng() % 5) + 1);
    y[rng() % s.L->dim()] = Rational(-static_cast<long>(rng() % 5) - 1);
    Terms u = mono(ms[rng() % ms.size()]);
    add_scaled(u, mono(ms[rng() % ms.size()]), Rational(2, 3));
    Element xy = x;
    for (std::size_t k = 0; k < xy.size(); ++k) xy[k] += y[k];
    Terms lhs = s.ctx->adjoint(xy, u);
    Terms rhs = s.ctx->adjoint(x, u);
    add_scaled(rhs, s.ctx->adjoint(y, u), 1);
    CHECK(lhs == rhs);
  }
}
