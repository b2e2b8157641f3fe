#include "walgebra/idealkit.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>

#include "walgebra/errors.hpp"
#include "walgebra/exactla.hpp"

namespace walgebra::idealkit {

namespace {

int sum(const Exponents& a, std::size_t from, std::size_t to) {
  return std::accumulate(a.begin() + static_cast<long>(from), a.begin() + static_cast<long>(to), 0);
}

int grevlex(const Exponents& a, const Exponents& b, std::size_t from, std::size_t to) {
  int da = sum(a, from, to), db = sum(b, from, to);
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t k = to; k-- > from;)
    if (a[k] != b[k]) return a[k] > b[k] ? -1 : 1;
  return 0;
}

bool divides(const Exponents& a, const Exponents& b) {
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k] > b[k]) return false;
  return true;
}

Exponents lcm(const Exponents& a, const Exponents& b) {
  Exponents m(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) m[k] = std::max(a[k], b[k]);
  return m;
}

Exponents minus(const Exponents& a, const Exponents& b) {
  Exponents m(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) m[k] = a[k] - b[k];
  return m;
}

bool coprime(const Exponents& a, const Exponents& b) {
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k] > 0 && b[k] > 0) return false;
  return true;
}

Polynomial s_polynomial(const Ring& R, const Polynomial& f, const Polynomial& g) {
  const Exponents m = lcm(f.leading().exps, g.leading().exps);
  return f.mul_term(R, minus(m, f.leading().exps), 1 / f.leading().coef)
      .add(R, g.mul_term(R, minus(m, g.leading().exps), 1 / g.leading().coef), Rational(-1));
}

// Drops generators whose leading monomial is divisible by another's, then
// reduces each by the rest.
std::vector<Polynomial> reduce_basis(const Ring& R, std::vector<Polynomial> g) {
  for (auto& p : g) p = p.monic();
  std::sort(g.begin(), g.end(), [&](const Polynomial& a, const Polynomial& b) {
    return R.compare(a.leading().exps, b.leading().exps) < 0;
  });
  std::vector<Polynomial> minimal;
  for (const auto& p : g) {
    bool redundant = false;
    for (const auto& q : minimal)
      if (divides(q.leading().exps, p.leading().exps)) redundant = true;
    if (!redundant) minimal.push_back(p);
  }
  std::vector<Polynomial> out;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    out.push_back(normal_form(R, minimal[i], others).monic());
  }
  return out;
}

struct Parser {
  const Ring& R;
  std::string s;
  std::size_t pos = 0;

  void skip() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eat(char c) {
    skip();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& why) const {
    throw InputError("cannot parse polynomial '" + s + "': " + why);
  }
  Integer integer() {
    skip();
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (start == pos) fail("expected a number");
    return Integer(s.substr(start, pos - start));
  }
  Polynomial expr() {
    Polynomial p = term();
    for (;;) {
      if (eat('+'))
        p = p.add(R, term());
      else if (eat('-'))
        p = p.add(R, term(), Rational(-1));
      else
        return p;
    }
  }
  Polynomial term() {
    Polynomial p = unary();
    for (;;) {
      if (eat('*')) {
        p = p.mul(R, unary());
      } else if (eat('/')) {
        Polynomial d = unary();
        if (!d.is_constant() || d.is_zero()) fail("division by a non-constant or zero");
        p = p.scaled(1 / d.leading().coef);
      } else {
        return p;
      }
    }
  }
  Polynomial unary() {
    if (eat('-')) return unary().scaled(Rational(-1));
    if (eat('+')) return unary();
    Polynomial base = atom();
    if (eat('^')) {
      Integer e = integer();
      if (!e.fits_slong_p() || e > 64) fail("exponent too large");
      Polynomial out = Polynomial::constant(R, Rational(1));
      for (long k = 0; k < e.get_si(); ++k) out = out.mul(R, base);
      return out;
    }
    return base;
  }
  Polynomial atom() {
    skip();
    if (eat('(')) {
      Polynomial p = expr();
      if (!eat(')')) fail("missing ')'");
      return p;
    }
    if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
      return Polynomial::constant(R, Rational(integer()));
    std::size_t start = pos;
    while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_')) ++pos;
    if (start == pos) fail("unexpected character");
    const std::string name = s.substr(start, pos - start);
    auto it = std::find(R.names.begin(), R.names.end(), name);
    if (it == R.names.end()) fail("unknown variable '" + name + "'");
    return Polynomial::variable(R, static_cast<std::size_t>(it - R.names.begin()));
  }
};

}  // namespace

int Ring::compare(const Exponents& a, const Exponents& b) const {
  switch (order.kind) {
    case OrderKind::grevlex:
      return grevlex(a, b, 0, a.size());
    case OrderKind::lex:
      for (std::size_t k = 0; k < a.size(); ++k)
        if (a[k] != b[k]) return a[k] < b[k] ? -1 : 1;
      return 0;
    case OrderKind::elimination: {
      int c = grevlex(a, b, 0, order.block);
      return c != 0 ? c : grevlex(a, b, order.block, a.size());
    }
  }
  return 0;
}

Polynomial Polynomial::constant(const Ring& R, const Rational& c) {
  return from_terms(R, {Term{Exponents(R.nvars(), 0), c}});
}

Polynomial Polynomial::variable(const Ring& R, std::size_t k) {
  Exponents e(R.nvars(), 0);
  e.at(k) = 1;
  return from_terms(R, {Term{e, Rational(1)}});
}

Polynomial Polynomial::from_terms(const Ring& R, std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) { return R.compare(a.exps, b.exps) > 0; });
  Polynomial p;
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().exps == t.exps)
      p.terms_.back().coef += t.coef;
    else
      p.terms_.push_back(std::move(t));
  }
  std::erase_if(p.terms_, [](const Term& t) { return t.coef == 0; });
  return p;
}

bool Polynomial::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  for (int e : terms_[0].exps)
    if (e != 0) return false;
  return true;
}

int Polynomial::total_degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, sum(t.exps, 0, t.exps.size()));
  return d;
}

Polynomial Polynomial::add(const Ring& R, const Polynomial& o, const Rational& c) const {
  if (c == 0) return *this;
  Polynomial out;
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    int cmp = i == terms_.size() ? -1 : j == o.terms_.size() ? 1 : R.compare(terms_[i].exps, o.terms_[j].exps);
    if (cmp > 0) {
      out.terms_.push_back(terms_[i++]);
    } else if (cmp < 0) {
      out.terms_.push_back(Term{o.terms_[j].exps, o.terms_[j].coef * c});
      ++j;
    } else {
      Rational v = terms_[i].coef + o.terms_[j].coef * c;
      if (v != 0) out.terms_.push_back(Term{terms_[i].exps, v});
      ++i, ++j;
    }
  }
  return out;
}

Polynomial Polynomial::mul_term(const Ring&, const Exponents& m, const Rational& c) const {
  Polynomial out;
  if (c == 0) return out;
  for (const auto& t : terms_) {
    Exponents e = t.exps;
    for (std::size_t k = 0; k < e.size(); ++k) e[k] += m[k];
    out.terms_.push_back(Term{std::move(e), t.coef * c});
  }
  return out;
}

Polynomial Polynomial::mul(const Ring& R, const Polynomial& o) const {
  std::vector<Term> all;
  for (const auto& a : terms_)
    for (const auto& b : o.terms_) {
      Exponents e = a.exps;
      for (std::size_t k = 0; k < e.size(); ++k) e[k] += b.exps[k];
      all.push_back(Term{std::move(e), a.coef * b.coef});
    }
  return from_terms(R, std::move(all));
}

Polynomial Polynomial::scaled(const Rational& c) const {
  Polynomial out;
  if (c == 0) return out;
  out.terms_ = terms_;
  for (auto& t : out.terms_) t.coef *= c;
  return out;
}

Polynomial Polynomial::monic() const { return is_zero() ? *this : scaled(1 / leading().coef); }

Polynomial Polynomial::reorder(const Ring& R) const { return from_terms(R, terms_); }

Polynomial Polynomial::substitute(const Ring& target, const std::vector<Polynomial>& images) const {
  Polynomial out;
  for (const auto& t : terms_) {
    Polynomial m = constant(target, t.coef);
    for (std::size_t k = 0; k < t.exps.size(); ++k)
      for (int q = 0; q < t.exps[k]; ++q) m = m.mul(target, images.at(k));
    out = out.add(target, m);
  }
  return out;
}

Polynomial Polynomial::embed(const Ring& target, std::size_t offset) const {
  std::vector<Term> ts;
  for (const auto& t : terms_) {
    Exponents e(target.nvars(), 0);
    for (std::size_t k = 0; k < t.exps.size(); ++k) e.at(offset + k) = t.exps[k];
    ts.push_back(Term{std::move(e), t.coef});
  }
  return from_terms(target, std::move(ts));
}

std::string format(const Ring& R, const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : p.terms()) {
    Rational c = t.coef;
    bool unit = true;
    for (int e : t.exps) unit = unit && e == 0;
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    Rational a = abs(c);
    bool wrote = false;
    if (a != 1 || unit) {
      os << to_string(a);
      wrote = true;
    }
    for (std::size_t k = 0; k < t.exps.size(); ++k) {
      if (t.exps[k] == 0) continue;
      os << (wrote ? "*" : "") << R.names[k];
      if (t.exps[k] > 1) os << "^" << t.exps[k];
      wrote = true;
    }
    first = false;
  }
  return os.str();
}

Polynomial parse_polynomial(const Ring& R, const std::string& text) {
  Parser p{R, text};
  Polynomial out = p.expr();
  p.skip();
  if (p.pos != text.size()) p.fail("trailing input");
  return out;
}

Polynomial normal_form(const Ring& R, const Polynomial& p, const std::vector<Polynomial>& basis) {
  Polynomial rest = p;
  std::vector<Term> rem;
  while (!rest.is_zero()) {
    const Term lt = rest.leading();
    const Polynomial* by = nullptr;
    for (const auto& g : basis)
      if (!g.is_zero() && divides(g.leading().exps, lt.exps)) {
        by = &g;
        break;
      }
    if (by) {
      rest = rest.add(R, by->mul_term(R, minus(lt.exps, by->leading().exps), lt.coef / by->leading().coef),
                      Rational(-1));
    } else {
      rem.push_back(lt);
      rest = rest.add(R, Polynomial::from_terms(R, {lt}), Rational(-1));
    }
  }
  return Polynomial::from_terms(R, std::move(rem));
}

std::vector<Polynomial> groebner(const Ring& R, const std::vector<Polynomial>& gens) {
  std::vector<Polynomial> g;
  for (const auto& p : gens)
    if (!p.is_zero()) g.push_back(p.monic());
  if (g.empty()) return {};
  for (const auto& p : g)
    if (p.is_constant()) return {Polynomial::constant(R, Rational(1))};

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t j = 1; j < g.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) pairs.emplace_back(i, j);
  auto lcm_degree = [&](const std::pair<std::size_t, std::size_t>& pr) {
    return sum(lcm(g[pr.first].leading().exps, g[pr.second].leading().exps), 0, R.nvars());
  };
  while (!pairs.empty()) {
    auto best = std::min_element(pairs.begin(), pairs.end(), [&](const auto& a, const auto& b) {
      int da = lcm_degree(a), db = lcm_degree(b);
      return da != db ? da < db : a < b;
    });
    auto [i, j] = *best;
    pairs.erase(best);
    if (coprime(g[i].leading().exps, g[j].leading().exps)) continue;
    // Chain criterion: skip if some k has LM(k) | lcm and both (i,k), (j,k) were already handled.
    const Exponents m = lcm(g[i].leading().exps, g[j].leading().exps);
    bool chain = false;
    for (std::size_t k = 0; k < g.size() && !chain; ++k) {
      if (k == i || k == j || !divides(g[k].leading().exps, m)) continue;
      auto pending = [&](std::size_t a, std::size_t b) {
        auto key = std::make_pair(std::min(a, b), std::max(a, b));
        return std::find(pairs.begin(), pairs.end(), key) != pairs.end();
      };
      chain = !pending(i, k) && !pending(j, k);
    }
    if (chain) continue;
    Polynomial h = normal_form(R, s_polynomial(R, g[i], g[j]), g);
    if (h.is_zero()) continue;
    if (h.is_constant()) return {Polynomial::constant(R, Rational(1))};
    g.push_back(h.monic());
    for (std::size_t k = 0; k + 1 < g.size(); ++k) pairs.emplace_back(k, g.size() - 1);
  }
  return reduce_basis(R, g);
}

bool contains(const Ring& R, const std::vector<Polynomial>& basis, const Polynomial& p) {
  return normal_form(R, p, basis).is_zero();
}

bool contains_all(const Ring& R, const std::vector<Polynomial>& basis, const std::vector<Polynomial>& ps) {
  return std::all_of(ps.begin(), ps.end(), [&](const Polynomial& p) { return contains(R, basis, p); });
}

int dimension(const Ring& R, const std::vector<Polynomial>& basis) {
  for (const auto& g : basis)
    if (g.is_constant() && !g.is_zero()) return -1;
  const std::size_t n = R.nvars();
  int best = 0;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    int size = __builtin_popcountll(mask);
    if (size <= best) continue;
    bool independent = true;
    for (const auto& g : basis) {
      bool inside = true;
      for (std::size_t k = 0; k < n; ++k)
        if (g.leading().exps[k] > 0 && !(mask >> k & 1)) inside = false;
      if (inside) {
        independent = false;
        break;
      }
    }
    if (independent) best = size;
  }
  return best;
}

std::vector<Polynomial> eliminate(const Ring& R, const std::vector<Polynomial>& gens, std::size_t k, const Ring& rest) {
  Ring E{R.names, {OrderKind::elimination, k}};
  std::vector<Polynomial> reordered;
  for (const auto& p : gens) reordered.push_back(p.reorder(E));
  std::vector<Polynomial> kept;
  for (const auto& p : groebner(E, reordered)) {
    bool free = true;
    for (const auto& t : p.terms())
      for (std::size_t v = 0; v < k; ++v) free = free && t.exps[v] == 0;
    if (!free) continue;
    std::vector<Term> ts;
    for (const auto& t : p.terms()) ts.push_back(Term{Exponents(t.exps.begin() + static_cast<long>(k), t.exps.end()), t.coef});
    kept.push_back(Polynomial::from_terms(rest, std::move(ts)));
  }
  return groebner(rest, kept);
}

std::vector<Polynomial> intersect(const Ring& R, const std::vector<Polynomial>& I, const std::vector<Polynomial>& J) {
  Ring big{R.names, {OrderKind::elimination, 1}};
  big.names.insert(big.names.begin(), "_t");
  const Polynomial t = Polynomial::variable(big, 0);
  const Polynomial one_minus_t = Polynomial::constant(big, Rational(1)).add(big, t, Rational(-1));
  std::vector<Polynomial> gens;
  for (const auto& p : I) gens.push_back(t.mul(big, p.embed(big, 1)));
  for (const auto& p : J) gens.push_back(one_minus_t.mul(big, p.embed(big, 1)));
  return eliminate(big, gens, 1, R);
}

bool radical_contains(const Ring& R, const std::vector<Polynomial>& I, const Polynomial& p) {
  Ring big{R.names, {}};
  big.names.push_back("_y");
  std::vector<Polynomial> gens;
  for (const auto& g : I) gens.push_back(g.embed(big, 0));
  const Polynomial y = Polynomial::variable(big, R.nvars());
  gens.push_back(Polynomial::constant(big, Rational(1)).add(big, y.mul(big, p.embed(big, 0)), Rational(-1)));
  auto gb = groebner(big, gens);
  return gb.size() == 1 && gb[0].is_constant();
}

Component parse_component(const Ring& ambient, const std::string& name, const std::vector<std::string>& params,
                          const std::vector<std::string>& coords) {
  if (coords.size() != ambient.nvars())
    throw InputError("component '" + name + "' has " + std::to_string(coords.size()) + " coordinates, expected " +
                     std::to_string(ambient.nvars()));
  Component c{name, params, {}};
  const Ring P = c.param_ring();
  for (const auto& s : coords) c.coords.push_back(parse_polynomial(P, s));
  return c;
}

std::vector<Polynomial> component_ideal(const Ring& ambient, const Component& c) {
  const std::size_t d = c.params.size();
  Ring big{c.params, {OrderKind::elimination, d}};
  big.names.insert(big.names.end(), ambient.names.begin(), ambient.names.end());
  std::vector<Polynomial> gens;
  for (std::size_t k = 0; k < ambient.nvars(); ++k)
    gens.push_back(Polynomial::variable(big, d + k).add(big, c.coords[k].embed(big, 0), Rational(-1)));
  return eliminate(big, gens, d, ambient);
}

bool is_affine_space_chart(const Component& c) {
  const std::size_t d = c.params.size();
  if (d == 0) return true;
  exactla::SparseSystem rows(d);
  for (const auto& p : c.coords) {
    if (p.total_degree() > 1) continue;
    exactla::SparseVector row;
    for (const auto& t : p.terms())
      for (std::size_t k = 0; k < d; ++k)
        if (t.exps[k] == 1) row.emplace_back(k, t.coef);
    rows.add_row(row);
  }
  return exactla::rank(rows) == d;
}

DecompositionReport verify_decomposition(const Ring& R, const std::vector<Polynomial>& gens, const Claim& claim) {
  if (claim.variables != R.names) {
    std::string want;
    for (const auto& n : R.names) want += " " + n;
    throw InputError("claim variables do not match the equation variables:" + want);
  }
  DecompositionReport rep;
  const auto gb = groebner(R, gens);
  std::vector<std::vector<Polynomial>> ideals;
  bool components_ok = true;
  for (const auto& c : claim.components) {
    ComponentCheck chk;
    chk.name = c.name;
    chk.vanishes = std::all_of(gens.begin(), gens.end(),
                               [&](const Polynomial& g) { return g.substitute(c.param_ring(), c.coords).is_zero(); });
    ideals.push_back(component_ideal(R, c));
    chk.dimension = dimension(R, ideals.back());
    chk.expected_dimension = static_cast<int>(c.params.size());
    chk.affine_chart = is_affine_space_chart(c);
    components_ok = components_ok && chk.vanishes && chk.dimension == chk.expected_dimension;
    rep.components.push_back(chk);
  }

  std::vector<Polynomial> J{Polynomial::constant(R, Rational(1))};
  for (const auto& I : ideals) J = intersect(R, J, I);
  rep.ideal_in_components = contains_all(R, J, gens);
  rep.components_in_ideal = contains_all(R, gb, J);
  rep.components_in_radical = rep.components_in_ideal ||
                              std::all_of(J.begin(), J.end(), [&](const Polynomial& p) { return radical_contains(R, gb, p); });

  rep.irredundant = true;
  for (std::size_t a = 0; a < ideals.size(); ++a)
    for (std::size_t b = 0; b < ideals.size(); ++b)
      if (a != b && contains_all(R, ideals[a], ideals[b])) rep.irredundant = false;

  bool inter_ok = true;
  for (const auto& ci : claim.intersections) {
    IntersectionCheck chk{claim.components.at(ci.a).name, claim.components.at(ci.b).name, false};
    std::vector<Polynomial> sum = ideals[ci.a];
    sum.insert(sum.end(), ideals[ci.b].begin(), ideals[ci.b].end());
    const auto K = groebner(R, sum);
    const auto E = component_ideal(R, ci.expected);
    chk.matches = contains_all(R, E, K) &&
                  std::all_of(E.begin(), E.end(), [&](const Polynomial& p) { return radical_contains(R, K, p); });
    inter_ok = inter_ok && chk.matches;
    rep.intersections.push_back(chk);
  }

  const bool equal = rep.ideal_in_components && rep.components_in_ideal;
  const bool up_to_radical = rep.ideal_in_components && rep.components_in_radical;
  rep.pass = components_ok && rep.irredundant && inter_ok && (equal || (claim.accept_radical && up_to_radical));
  if (!components_ok)
    rep.verdict = "refuted: a claimed component is not in the variety or has the wrong dimension";
  else if (!rep.ideal_in_components)
    rep.verdict = "refuted: the claimed components are not contained in the variety";
  else if (!rep.components_in_radical)
    rep.verdict = "refuted: the variety has points outside the claimed components";
  else if (!rep.irredundant)
    rep.verdict = "refuted: one claimed component contains another";
  else if (!inter_ok)
    rep.verdict = "refuted: a claimed intersection does not match";
  else if (equal)
    rep.verdict = "pass: ideal equals the intersection of the component ideals";
  else if (claim.accept_radical)
    rep.verdict = "pass: equal up to radical";
  else
    rep.verdict = "refuted: equal only up to radical";
  return rep;
}

namespace {

std::vector<Polynomial> linear_images(const Ring& R, const LinearMap& A) {
  std::vector<Polynomial> images;
  for (std::size_t i = 0; i < R.nvars(); ++i) {
    Polynomial p;
    for (std::size_t j = 0; j < R.nvars(); ++j)
      if (A.at(i).at(j) != 0) p = p.add(R, Polynomial::variable(R, j), A[i][j]);
    images.push_back(p);
  }
  return images;
}

}  // namespace

FixedIdealResult gamma_fixed_ideal(const Ring& R, const std::vector<Polynomial>& gens, const std::vector<LinearMap>& action) {
  FixedIdealResult out;
  const auto gb = groebner(R, gens);
  std::vector<Polynomial> all = gb;
  for (std::size_t a = 0; a < action.size(); ++a) {
    const auto images = linear_images(R, action[a]);
    for (const auto& g : gb) {
      Polynomial moved = g.substitute(R, images);
      if (!contains(R, gb, moved)) {
        out.witness = std::make_pair(a, g);
        return out;
      }
    }
    for (std::size_t i = 0; i < R.nvars(); ++i) all.push_back(Polynomial::variable(R, i).add(R, images[i], Rational(-1)));
  }
  out.basis = groebner(R, all);
  return out;
}

namespace {

std::vector<Polynomial> moved_coords(const Ring& R, const Component& c, const LinearMap& A) {
  const Ring P = c.param_ring();
  std::vector<Polynomial> moved;
  for (std::size_t i = 0; i < R.nvars(); ++i) {
    Polynomial p;
    for (std::size_t j = 0; j < R.nvars(); ++j)
      if (A.at(i).at(j) != 0) p = p.add(P, c.coords[j], A[i][j]);
    moved.push_back(p);
  }
  return moved;
}

}  // namespace

std::vector<int> component_permutation(const Ring& R, const Claim& claim, const LinearMap& A) {
  std::vector<std::vector<Polynomial>> ideals;
  for (const auto& c : claim.components) ideals.push_back(component_ideal(R, c));
  std::vector<int> perm;
  for (const auto& c : claim.components) {
    const Ring P = c.param_ring();
    const auto moved = moved_coords(R, c, A);
    int target = -1;
    for (std::size_t l = 0; l < ideals.size() && target < 0; ++l) {
      if (claim.components[l].params.size() != c.params.size()) continue;
      bool inside = std::all_of(ideals[l].begin(), ideals[l].end(),
                                [&](const Polynomial& g) { return g.substitute(P, moved).is_zero(); });
      if (inside) target = static_cast<int>(l);
    }
    perm.push_back(target);
  }
  return perm;
}

bool fixes_pointwise(const Ring& R, const Component& c, const LinearMap& A) { return moved_coords(R, c, A) == c.coords; }

}  // namespace walgebra::idealkit
