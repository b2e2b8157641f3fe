#include <doctest.h>

#include <algorithm>

#include "fixture_cases.hpp"
#include "walgebra/errors.hpp"

using namespace walgebra;
using namespace walgebra::walg;
using pbw::Terms;

namespace {

Terms bracket(const pbw::PbwContext& ctx, const Terms& a, const Terms& b) {
  return pbw::difference(ctx.product(a, b), ctx.product(b, a));
}

std::size_t letter(const fixture::Pipeline& p, std::size_t basis_index) {
  return static_cast<std::size_t>(p.p->pbar_position[basis_index]);
}

}  // namespace

TEST_CASE("A1 regular: ansatz and lift") {
  auto p = fixture::build(fixture::all_specs()[0]);
  const std::size_t H = letter(*p, 2);
  auto a = ansatz_set(*p->ctx, p->c, 0);
  std::vector<Monomial> want{Monomial::letter(H), Monomial::letter(H).times_letter(H)};
  std::sort(want.begin(), want.end());
  CHECK(a == want);
  Terms tail{{Monomial::letter(H), Rational(-1, 8)}, {Monomial::letter(H).times_letter(H), Rational(1, 16)}};
  CHECK(p->thetas[0].tail == tail);
  CHECK(p->basis->commutator_in_pbw(0, 0).empty());
  CHECK(pair_set(p->c).size() == 1);
  auto eq = extract_equations(commutator_table(*p->basis, p->c), p->c);
  CHECK(eq.polys.empty());
  CHECK(eq.variables.size() == 1);
}

TEST_CASE("ansatz sets obey the weight and degree conditions") {
  auto torus_identity = slodowy::TorusElement{};
  for (const auto& spec : fixture::all_specs()) {
    auto p = fixture::build(spec);
    torus_identity.scalars.assign(p->L->dim(), Rational(1));
    for (std::size_t i = 0; i < p->c.size(); ++i) {
      auto a = ansatz_set(*p->ctx, p->c, i);
      std::vector<slodowy::TorusElement> id{torus_identity};
      CHECK(ansatz_set(*p->ctx, p->c, i, id) == a);
      for (const auto& m : a) {
        const long k = p->ctx->kazhdan_degree(m);
        CHECK(p->ctx->weight(m) == p->c.beta[i]);
        CHECK((k <= p->c.m_deg[i] || (k == p->c.m_deg[i] + 2 && m.total() > 1)));
      }
      for (const auto& [m, v] : p->thetas[i].tail) CHECK(std::binary_search(a.begin(), a.end(), m));
    }
  }
}

TEST_CASE("every lift is n-invariant") {
  for (const auto& spec : fixture::all_specs()) {
    auto p = fixture::build(spec);
    for (const auto& t : p->thetas) {
      CHECK(is_invariant(*p->ctx, t.full));
      for (std::size_t y : p->p->m_basis) CHECK(p->ctx->adjoint(p->L->basis_vector(y), t.full).empty());
    }
  }
}

TEST_CASE("commutator rows: support bound, reconstruction, antisymmetry") {
  for (const auto& spec : fixture::all_specs()) {
    CAPTURE(spec.name);
    auto p = fixture::build(spec);
    auto table = commutator_table(*p->basis, p->c);
    CHECK(table.entries.size() == pair_set(p->c).size());
    for (const auto& [key, row] : table.entries) {
      auto [i, j] = key;
      CHECK(satisfies_support_bound(p->c, i, j, row));
      CHECK(p->basis->reconstruct(row) == p->basis->commutator(i, j));
      if (table.entries.count({j, i})) {
        Terms neg = pbw::scaled(Terms(table.entries.at({j, i}).begin(), table.entries.at({j, i}).end()), -1);
        CHECK(Terms(row.begin(), row.end()) == neg);
      }
    }
  }
}

TEST_CASE("graded top of a commutator matches the Lie bracket") {
  for (const auto& spec : fixture::all_specs()) {
    auto p = fixture::build(spec);
    for (std::size_t i = 0; i < p->c.size(); ++i)
      for (std::size_t j = 0; j < p->c.size(); ++j) {
        auto row = p->basis->commutator_in_pbw(i, j);
        // linear part of nu at Kazhdan degree m_i + m_j + 2 is [z_i, z_j]
        rootdata::Element lin = p->L->zero();
        for (const auto& [b, v] : row)
          if (b.total() == 1 && p->basis->kazhdan(b) == p->c.m_deg[i] + p->c.m_deg[j] + 2)
            for (std::size_t k = 0; k < lin.size(); ++k) lin[k] += v * p->c.z[b.first()][k];
        CHECK(lin == p->L->bracket(p->c.z[i], p->c.z[j]));
      }
  }
}

TEST_CASE("Jacobi identity through the table") {
  for (const auto& spec : fixture::all_specs()) {
    CAPTURE(spec.name);
    auto p = fixture::build(spec);
    const std::size_t r = p->c.size();
    std::size_t triples = 0;
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = i + 1; j < r; ++j)
        for (std::size_t k = j + 1; k < r; ++k) {
          auto X = [&](std::size_t a, std::size_t b) { return p->basis->reconstruct(p->basis->commutator_in_pbw(a, b)); };
          Terms sum = bracket(*p->ctx, p->thetas[i].full, X(j, k));
          pbw::add_scaled(sum, bracket(*p->ctx, p->thetas[j].full, X(k, i)), 1);
          pbw::add_scaled(sum, bracket(*p->ctx, p->thetas[k].full, X(i, j)), 1);
          CHECK(sum.empty());
          ++triples;
        }
    if (r >= 3) CHECK(triples > 0);
  }
}

TEST_CASE("equations: type A and weight bookkeeping") {
  for (const auto& spec : fixture::all_specs()) {
    CAPTURE(spec.name);
    auto p = fixture::build(spec);
    auto table = commutator_table(*p->basis, p->c, 2);
    auto eq = extract_equations(table, p->c);
    for (std::size_t k = 0; k < eq.polys.size(); ++k) {
      auto [i, j] = eq.sources[k];
      if (!is_zero(p->c.beta[i])) CHECK(eq.polys[k].count(Monomial()) == 0);
    }
    if (spec.name == "A1 regular" || spec.name == "A2 (3)") CHECK(eq.polys.empty());
    if (spec.name == "A2 (2,1)") CHECK(eq.polys.size() == 1);
  }
}

TEST_CASE("parallel and serial tables agree") {
  auto p1 = fixture::build(fixture::all_specs()[5]);
  auto p2 = fixture::build(fixture::all_specs()[5]);
  CHECK(commutator_table(*p1->basis, p1->c, 1).entries == commutator_table(*p2->basis, p2->c, 4).entries);
}
