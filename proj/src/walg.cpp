#include "walgebra/walg.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <thread>

#include "walgebra/errors.hpp"
#include "walgebra/exactla.hpp"

namespace walgebra::walg {

namespace {

using exactla::SparseSystem;
using exactla::SparseVector;

Terms mono(const Monomial& a) { return Terms{{a, Rational(1)}}; }

Rational torus_eigenvalue(const slodowy::TorusElement& s, const rootdata::Element& z) {
  std::optional<Rational> c;
  for (std::size_t k = 0; k < z.size(); ++k) {
    if (z[k] == 0) continue;
    if (c && *c != s.scalars.at(k)) throw InputError("torus element does not act diagonally on the centralizer basis");
    c = s.scalars.at(k);
  }
  return c.value_or(Rational(1));
}

// Solves sum_c x_c cols[c] = target over the monomials that occur.
exactla::AffineSolution solve_in_span(const std::vector<Terms>& cols, const Terms& target) {
  std::map<Monomial, SparseVector> rows;
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (const auto& [m, v] : cols[c]) rows[m].emplace_back(c, v);
  for (const auto& [m, v] : target) rows[m];
  SparseSystem sys(cols.size());
  for (auto& [m, row] : rows) {
    auto it = target.find(m);
    sys.add_row(row, it == target.end() ? Rational(0) : it->second);
  }
  return exactla::solve_affine(sys);
}

}  // namespace

std::vector<Monomial> ansatz_set(const PbwContext& ctx, const slodowy::CentralizerBasis& c, std::size_t i,
                                 std::span<const slodowy::TorusElement> torus) {
  const auto& pol = ctx.polarization();
  const long top = c.m_deg[i] + 2;
  const std::size_t n = ctx.num_letters();
  std::vector<Rational> target;
  for (const auto& s : torus) target.push_back(torus_eigenvalue(s, c.z[i]));

  std::vector<Monomial> out;
  std::vector<int> a(n, 0);
  std::function<void(std::size_t, long)> rec = [&](std::size_t k, long deg) {
    if (k == n) {
      Monomial m = Monomial::from_dense(a);
      if (m.empty()) return;
      if (!(deg <= c.m_deg[i] || (deg == top && m.total() > 1))) return;
      if (ctx.weight(m) != c.beta[i]) return;
      for (std::size_t s = 0; s < torus.size(); ++s) {
        Rational v = 1;
        for (const auto& [letter, p] : m.entries())
          for (int q = 0; q < p; ++q) v *= torus[s].scalars.at(pol.pbar_basis[letter]);
        if (v != target[s]) return;
      }
      out.push_back(std::move(m));
      return;
    }
    const long w = pol.n_deg[k] + 2;
    for (a[k] = 0; deg + a[k] * w <= top; ++a[k]) rec(k + 1, deg + a[k] * w);
    a[k] = 0;
  };
  rec(0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

ThetaGenerator lift_theta(const PbwContext& ctx, const slodowy::CentralizerBasis& c, std::size_t i,
                          std::span<const slodowy::TorusElement> torus) {
  const auto& L = ctx.algebra();
  const auto ansatz = ansatz_set(ctx, c, i, torus);
  const Terms z = ctx.from_lie(c.z[i]);

  std::map<std::pair<std::size_t, Monomial>, SparseVector> rows;
  std::map<std::pair<std::size_t, Monomial>, Rational> rhs;
  for (std::size_t y : ctx.polarization().n_generators) {
    const auto Y = L.basis_vector(y);
    for (const auto& [m, v] : ctx.adjoint(Y, z)) rhs[{y, m}] = -v;
    for (std::size_t col = 0; col < ansatz.size(); ++col)
      for (const auto& [m, v] : ctx.adjoint(Y, mono(ansatz[col]))) rows[{y, m}].emplace_back(col, v);
  }
  for (const auto& [key, v] : rhs) rows[key];
  SparseSystem sys(ansatz.size());
  for (auto& [key, row] : rows) {
    auto it = rhs.find(key);
    sys.add_row(row, it == rhs.end() ? Rational(0) : it->second);
  }
  auto sol = exactla::solve_affine(sys);
  if (!sol.consistent)
    throw ConsistencyError("step 5: no lift of z_" + std::to_string(i + 1) + " within the ansatz");

  ThetaGenerator t;
  t.index = i;
  t.z = c.z[i];
  t.m_deg = c.m_deg[i];
  t.beta = c.beta[i];
  for (std::size_t col = 0; col < ansatz.size(); ++col)
    if (sol.x[col] != 0) t.tail.emplace(ansatz[col], sol.x[col]);
  t.full = z;
  pbw::add_scaled(t.full, t.tail, Rational(1));
  return t;
}

std::vector<ThetaGenerator> average_over_group(const PbwContext& ctx, const slodowy::CentralizerBasis& c,
                                               const std::vector<ThetaGenerator>& thetas,
                                               const std::vector<gamma::Automorphism>& group) {
  if (group.size() <= 1) return thetas;
  const auto& L = ctx.algebra();
  const auto& d = ctx.datum();
  std::vector<Terms> sums(thetas.size());
  for (const auto& g : group) {
    if (gamma::apply(g, d.e) != d.e || gamma::apply(g, d.h) != d.h)
      throw InputError("component-group lift does not fix e and h");
    const auto M = gamma::action_on_centralizer(L, g, c);
    const auto ginv = gamma::inverse(L, g);
    for (std::size_t i = 0; i < thetas.size(); ++i) {
      Terms img;
      for (std::size_t j = 0; j < thetas.size(); ++j) pbw::add_scaled(img, thetas[j].full, M[j][i]);
      pbw::add_scaled(sums[i], ctx.apply_automorphism(ginv, img), Rational(1));
    }
  }
  std::vector<ThetaGenerator> out = thetas;
  const Rational scale = frac(1, static_cast<long>(group.size()));
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i].full = pbw::scaled(sums[i], scale);
    out[i].tail = pbw::difference(out[i].full, ctx.from_lie(out[i].z));
  }
  return out;
}

bool is_invariant(const PbwContext& ctx, const Terms& theta) {
  for (std::size_t y : ctx.polarization().n_generators)
    if (!ctx.adjoint(ctx.algebra().basis_vector(y), theta).empty()) return false;
  return true;
}

ThetaBasis::ThetaBasis(const PbwContext& ctx, const slodowy::CentralizerBasis& c, std::vector<ThetaGenerator> thetas)
    : ctx_(ctx), c_(c), thetas_(std::move(thetas)) {
  for (const auto& t : thetas_) z_terms_.push_back(ctx_.from_lie(t.z));
}

long ThetaBasis::kazhdan(const Monomial& b) const {
  long d = 0;
  for (const auto& [k, p] : b.entries()) d += static_cast<long>(p) * (c_.m_deg[k] + 2);
  return d;
}

Terms ThetaBasis::symbol(const Monomial& b) const {
  Terms out{{Monomial(), Rational(1)}};
  for (const auto& [k, p] : b.entries())
    for (int q = 0; q < p; ++q) out = pbw::commutative_product(z_terms_[k], out);
  return out;
}

Terms ThetaBasis::power_product(const Monomial& b) const {
  if (b.empty()) return Terms{{Monomial(), Rational(1)}};
  {
    std::lock_guard lock(mu_);
    auto it = products_.find(b);
    if (it != products_.end()) return *it->second;
  }
  const std::size_t k = b.first();
  auto value = std::make_shared<const Terms>(ctx_.product(thetas_[k].full, power_product(b.times_letter(k, -1))));
  std::lock_guard lock(mu_);
  products_.emplace(b, value);
  return *value;
}

std::vector<Monomial> ThetaBasis::candidates(std::size_t total, long kaz, const slodowy::Weight& wt) const {
  const std::size_t r = thetas_.size();
  std::vector<Monomial> out;
  std::vector<int> b(r, 0);
  std::function<void(std::size_t, std::size_t, long)> rec = [&](std::size_t k, std::size_t left, long kleft) {
    if (k == r) {
      if (left != 0 || kleft != 0) return;
      slodowy::Weight w(wt.size(), Rational(0));
      for (std::size_t q = 0; q < r; ++q)
        for (std::size_t s = 0; s < w.size(); ++s) w[s] += b[q] * c_.beta[q][s];
      if (w == wt) out.push_back(Monomial::from_dense(b));
      return;
    }
    const long w = c_.m_deg[k] + 2;
    for (b[k] = 0; static_cast<std::size_t>(b[k]) <= left && b[k] * w <= kleft; ++b[k])
      rec(k + 1, left - static_cast<std::size_t>(b[k]), kleft - b[k] * w);
    b[k] = 0;
  };
  rec(0, total, kaz);
  return out;
}

NuRow ThetaBasis::decompose(Terms u) const {
  NuRow row;
  long last_r = 0;
  std::size_t last_s = 0;
  bool first = true;
  while (!u.empty()) {
    long R = -1;
    for (const auto& [m, v] : u) R = std::max(R, ctx_.kazhdan_degree(m));
    std::size_t S = SIZE_MAX;
    for (const auto& [m, v] : u)
      if (ctx_.kazhdan_degree(m) == R) S = std::min(S, m.total());
    if (!first && !(R < last_r || (R == last_r && S > last_s)))
      throw ConsistencyError("step 6: descent did not decrease (R, -S)");
    first = false;
    last_r = R;
    last_s = S;

    Terms top;
    for (const auto& [m, v] : u)
      if (ctx_.kazhdan_degree(m) == R && m.total() == S) top.emplace(m, v);
    const auto wt = ctx_.weight(top.begin()->first);
    for (const auto& [m, v] : top)
      if (ctx_.weight(m) != wt) throw ConsistencyError("step 6: top stratum is not weight-homogeneous");

    const auto cands = candidates(S, R, wt);
    std::vector<Terms> cols;
    for (const auto& b : cands) cols.push_back(symbol(b));
    auto sol = solve_in_span(cols, top);
    if (!sol.consistent) throw ConsistencyError("step 6: top stratum is not a combination of z^b");
    for (std::size_t k = 0; k < cands.size(); ++k) {
      if (sol.x[k] == 0) continue;
      pbw::add_scaled(u, power_product(cands[k]), -sol.x[k]);
      row[cands[k]] += sol.x[k];
    }
  }
  std::erase_if(row, [](const auto& e) { return e.second == 0; });
  return row;
}

Terms ThetaBasis::reconstruct(const NuRow& row) const {
  Terms out;
  for (const auto& [b, v] : row) pbw::add_scaled(out, power_product(b), v);
  return out;
}

Terms ThetaBasis::commutator(std::size_t i, std::size_t j) const {
  return pbw::difference(ctx_.product(thetas_[i].full, thetas_[j].full),
                         ctx_.product(thetas_[j].full, thetas_[i].full));
}

NuRow ThetaBasis::commutator_in_pbw(std::size_t i, std::size_t j) const { return decompose(commutator(i, j)); }

std::vector<std::pair<std::size_t, std::size_t>> pair_set(const slodowy::CentralizerBasis& c) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < c.min_gen_count; ++i)
    for (std::size_t j = 0; j < c.size(); ++j) {
      slodowy::Weight s = c.beta[i];
      for (std::size_t k = 0; k < s.size(); ++k) s[k] += c.beta[j][k];
      if (is_zero(s)) out.emplace_back(i, j);
    }
  return out;
}

CommutatorTable commutator_table(const ThetaBasis& basis, const slodowy::CentralizerBasis& c, unsigned jobs) {
  const auto J = pair_set(c);
  std::vector<std::pair<std::size_t, std::size_t>> work;
  for (auto [i, j] : J) {
    const std::pair<std::size_t, std::size_t> key{std::min(i, j), std::max(i, j)};
    if (std::find(work.begin(), work.end(), key) == work.end()) work.push_back(key);
  }
  std::vector<NuRow> rows(work.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex fail_mu;
  auto worker = [&] {
    for (std::size_t k; (k = next++) < work.size();) {
      try {
        rows[k] = basis.commutator_in_pbw(work[k].first, work[k].second);
      } catch (...) {
        std::lock_guard lock(fail_mu);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < std::max(1u, jobs); ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);

  CommutatorTable table;
  for (auto [i, j] : J) {
    const std::pair<std::size_t, std::size_t> key{std::min(i, j), std::max(i, j)};
    const auto& row = rows[static_cast<std::size_t>(std::find(work.begin(), work.end(), key) - work.begin())];
    table.entries[{i, j}] = (i <= j) ? row : NuRow(pbw::scaled(Terms(row.begin(), row.end()), Rational(-1)));
  }
  return table;
}

bool satisfies_support_bound(const slodowy::CentralizerBasis& c, std::size_t i, std::size_t j, const NuRow& row) {
  slodowy::Weight target = c.beta[i];
  for (std::size_t s = 0; s < target.size(); ++s) target[s] += c.beta[j][s];
  for (const auto& [b, v] : row) {
    if (v == 0) continue;
    long kaz = 0;
    slodowy::Weight w(target.size(), Rational(0));
    for (const auto& [k, p] : b.entries()) {
      kaz += static_cast<long>(p) * (c.m_deg[k] + 2);
      for (std::size_t s = 0; s < w.size(); ++s) w[s] += p * c.beta[k][s];
    }
    if (kaz > c.m_deg[i] + c.m_deg[j] + 2 || w != target) return false;
  }
  return true;
}

EquationSystem extract_equations(const CommutatorTable& table, const slodowy::CentralizerBasis& c) {
  EquationSystem sys;
  std::vector<int> position(c.size(), -1);
  for (std::size_t i = 0; i < c.size(); ++i)
    if (is_zero(c.beta[i])) {
      position[i] = static_cast<int>(sys.variables.size());
      sys.variables.push_back(i);
    }
  for (const auto& [key, row] : table.entries) {
    auto [i, j] = key;
    if (j < i && table.entries.count({j, i})) continue;
    Terms poly;
    for (const auto& [b, v] : row) {
      std::vector<int> a(sys.variables.size(), 0);
      bool keep = true;
      for (const auto& [k, p] : b.entries()) {
        if (position[k] < 0) {
          keep = false;
          break;
        }
        a[static_cast<std::size_t>(position[k])] = p;
      }
      if (keep) pbw::add_scaled(poly, Terms{{Monomial::from_dense(a), v}}, Rational(1));
    }
    if (poly.empty()) continue;
    sys.polys.push_back(std::move(poly));
    sys.sources.push_back(key);
  }
  return sys;
}

}  // namespace walgebra::walg
