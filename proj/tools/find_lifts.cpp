// Searches for elements of the centralizer of an sl2-triple among short
// words in Weyl elements and root elements of the Levi subgroup of h,
// corrected by a torus element so that e is fixed.  Prints each hit in
// case-file syntax with its order and its action on the centralizer of e.

#include <CLI11.hpp>

#include <iostream>
#include <set>

#include "walgebra/casefile.hpp"
#include "walgebra/errors.hpp"
#include "walgebra/gamma.hpp"

using namespace walgebra;

namespace {

struct Word {
  std::vector<casefile::LiftFactor> factors;
  gamma::Automorphism map;
};

std::string root_text(const rootdata::Root& r) {
  std::string s;
  for (std::size_t k = 0; k < r.size(); ++k) s += (k ? "," : "") + std::to_string(r[k]);
  return s;
}

// Torus values on simple roots turning g(e) back into e, from a small set.
std::optional<std::vector<Rational>> torus_fix(const rootdata::LieAlgebra& L, const rootdata::Element& e,
                                               const rootdata::Element& ge) {
  for (std::size_t k = 0; k < L.dim(); ++k)
    if ((e[k] == 0) != (ge[k] == 0)) return std::nullopt;
  const std::vector<Rational> pool{1, -1, 2, -2, frac(1, 2), frac(-1, 2), 3, -3, frac(1, 3), frac(-1, 3)};
  std::vector<std::size_t> idx(L.rank(), 0);
  for (;;) {
    std::vector<Rational> v;
    for (auto i : idx) v.push_back(pool[i]);
    auto t = gamma::torus_element(L, v);
    bool ok = true;
    for (std::size_t k = 0; k < L.num_roots() && ok; ++k)
      if (e[k] != 0) ok = t[k][k] * ge[k] == e[k];
    if (ok) return v;
    std::size_t pos = 0;
    while (pos < idx.size() && ++idx[pos] == pool.size()) idx[pos++] = 0;
    if (pos == idx.size()) return std::nullopt;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Search for component-group lifts fixing e and h"};
  std::string path;
  int max_len = 2;
  int max_order = 12;
  app.add_option("case", path, "case file")->required();
  app.add_option("--length", max_len, "maximal word length");
  app.add_option("--max-order", max_order, "maximal element order");
  CLI11_PARSE(app, argc, argv);

  try {
    auto cf = casefile::load_case(path);
    auto L = std::make_shared<const rootdata::LieAlgebra>(rootdata::build_root_system(cf.type, cf.rank));
    auto d = slodowy::complete_sl2_triple(L, casefile::build_e(*L, cf));
    auto z = slodowy::centralizer(d);

    std::vector<Word> letters;
    for (std::size_t i = 0; i < L->root_system().num_positive(); ++i) {
      if (d.grading[i] != 0) continue;
      const auto& r = L->root_of(i);
      casefile::LiftFactor w{casefile::LiftFactor::Kind::weyl, r, {}, {}};
      letters.push_back({{w}, gamma::weyl_element(*L, r)});
      for (int sign : {1, -1}) {
        auto rr = r;
        for (auto& x : rr) x *= sign;
        for (Rational c : {Rational(1), Rational(-1), Rational(2), Rational(-2)}) {
          casefile::LiftFactor f{casefile::LiftFactor::Kind::root, rr, c, {}};
          letters.push_back({{f}, gamma::root_element(*L, rr, c)});
        }
      }
    }
    std::vector<Word> words{{{}, gamma::identity(*L)}};
    for (int len = 1; len <= max_len; ++len) {
      std::vector<Word> next;
      for (const auto& w : words)
        if (static_cast<int>(w.factors.size()) == len - 1)
          for (const auto& l : letters) {
            Word n = w;
            n.factors.insert(n.factors.end(), l.factors.begin(), l.factors.end());
            n.map = gamma::compose(w.map, l.map);
            next.push_back(std::move(n));
          }
      words.insert(words.end(), next.begin(), next.end());
    }

    // Sign-valued torus elements fixing e, tried with every word.
    std::vector<std::vector<Rational>> signs;
    for (std::size_t mask = 0; mask < (std::size_t{1} << L->rank()); ++mask) {
      std::vector<Rational> v;
      for (std::size_t k = 0; k < L->rank(); ++k) v.push_back(mask >> k & 1 ? Rational(-1) : Rational(1));
      if (gamma::apply(gamma::torus_element(*L, v), d.e) == d.e) signs.push_back(v);
    }

    std::set<gamma::Automorphism> seen;
    std::size_t hits = 0;
    for (const auto& w : words) {
      for (const auto& sign : signs) {
        auto fix = torus_fix(*L, d.e, gamma::apply(w.map, d.e));
        if (!fix) continue;
        for (std::size_t k = 0; k < fix->size(); ++k) (*fix)[k] *= sign[k];
        auto g = gamma::compose(gamma::torus_element(*L, *fix), w.map);
        if (gamma::apply(g, d.h) != d.h || !seen.insert(g).second) continue;
        int order = 0;
        auto p = g;
        for (int k = 1; k <= max_order; ++k) {
          if (p == gamma::identity(*L)) {
            order = k;
            break;
          }
          p = gamma::compose(g, p);
        }
        if (order <= 1) continue;
        auto M = gamma::action_on_centralizer(*L, g, z);
        std::cout << "# order " << order << ", action on z:";
        for (std::size_t i = 0; i < M.size(); ++i) {
          std::cout << " [";
          for (std::size_t j = 0; j < M.size(); ++j) std::cout << (j ? " " : "") << to_string(M[i][j]);
          std::cout << "]";
        }
        std::cout << "\ngamma-lift found" << ++hits << "\n";
        std::cout << "  torus";
        for (const auto& v : *fix) std::cout << " " << to_string(v);
        std::cout << "\n";
        for (const auto& f : w.factors) {
          if (f.kind == casefile::LiftFactor::Kind::weyl)
            std::cout << "  weyl " << root_text(f.root) << "\n";
          else
            std::cout << "  root " << root_text(f.root) << " : " << to_string(f.coef) << "\n";
        }
        std::cout << "end\n";
      }
    }
    std::cerr << hits << " candidate lifts\n";
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
