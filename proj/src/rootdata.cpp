#include "walgebra/rootdata.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "walgebra/errors.hpp"

namespace walgebra::rootdata {

namespace {

std::vector<std::vector<int>> gram_matrix(char type, int n) {
  std::vector<std::vector<int>> g(n, std::vector<int>(n, 0));
  auto link = [&](int i, int j, int v) {
    g[i][j] = v;
    g[j][i] = v;
  };
  switch (type) {
    case 'A':
      for (int i = 0; i < n; ++i) g[i][i] = 2;
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1, -1);
      break;
    case 'B':
      for (int i = 0; i < n; ++i) g[i][i] = (i + 1 < n) ? 4 : 2;
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1, -2);
      break;
    case 'C':
      for (int i = 0; i < n; ++i) g[i][i] = (i + 1 < n) ? 2 : 4;
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1, -1);
      link(n - 2, n - 1, -2);
      break;
    case 'D':
      for (int i = 0; i < n; ++i) g[i][i] = 2;
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1, -1);
      link(n - 3, n - 1, -1);
      break;
    case 'E':
      for (int i = 0; i < n; ++i) g[i][i] = 2;
      link(0, 2, -1);
      link(1, 3, -1);
      for (int i = 2; i + 1 < n; ++i) link(i, i + 1, -1);
      break;
    case 'F':
      g[0][0] = g[1][1] = 4;
      g[2][2] = g[3][3] = 2;
      link(0, 1, -2);
      link(1, 2, -2);
      link(2, 3, -1);
      break;
    case 'G':
      g[0][0] = 2;
      g[1][1] = 6;
      link(0, 1, -3);
      break;
    default:
      break;
  }
  return g;
}

bool valid_type(char type, int n) {
  if (n < 1 || n > 8) return false;
  switch (type) {
    case 'A': return true;
    case 'B': return n >= 2;
    case 'C': return n >= 2;
    case 'D': return n >= 4;
    case 'E': return n >= 6;
    case 'F': return n == 4;
    case 'G': return n == 2;
    default: return false;
  }
}

int height(const Root& r) {
  int h = 0;
  for (int c : r) h += c;
  return h;
}

Root add(const Root& a, const Root& b) {
  Root r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Root negate(const Root& a) {
  Root r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

std::string root_text(const Root& r) {
  std::string s = "(";
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(r[i]);
  }
  return s + ")";
}

// Signed Chevalley structure constants, fixed by declaring N = +(p+1) on
// every extraspecial pair of the (height, lex) order.
class StructureConstants {
 public:
  explicit StructureConstants(const RootSystem& rs) : rs_(rs), npos_(rs.num_positive()) {
    extraspecial_.assign(npos_, npos_);
    for (std::size_t xi = 0; xi < npos_; ++xi) {
      for (std::size_t g = 0; g < npos_; ++g) {
        Root d = add(rs_.roots[xi], negate(rs_.roots[g]));
        auto di = rs_.index_of(d);
        if (di && *di < npos_) {
          extraspecial_[xi] = g;
          break;
        }
      }
    }
  }

  long value(std::size_t a, std::size_t b) {
    auto key = std::make_pair(a, b);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    long v = compute(a, b);
    memo_.emplace(key, v);
    return v;
  }

 private:
  bool positive(std::size_t i) const { return i < npos_; }
  std::size_t neg(std::size_t i) const { return i < npos_ ? i + npos_ : i - npos_; }
  const Root& root(std::size_t i) const { return rs_.roots[i]; }
  std::optional<std::size_t> sum(std::size_t a, std::size_t b) const {
    return rs_.index_of(add(root(a), root(b)));
  }
  std::optional<std::size_t> diff(std::size_t a, std::size_t b) const {
    return rs_.index_of(add(root(a), negate(root(b))));
  }
  int norm(std::size_t i) const { return rs_.inner(root(i), root(i)); }

  // Largest p with b - p a a root.
  long string_p(std::size_t a, std::size_t b) const {
    long p = 0;
    Root r = root(b);
    for (;;) {
      r = add(r, negate(root(a)));
      if (!rs_.index_of(r)) break;
      ++p;
    }
    return p;
  }

  static long to_long(const Rational& q) {
    if (!is_integer(q)) throw ConsistencyError("non-integral Chevalley structure constant");
    return q.get_num().get_si();
  }

  long compute(std::size_t a, std::size_t b) {
    auto s = sum(a, b);
    if (!s) return 0;
    if (positive(a) && positive(b)) {
      std::size_t xi = *s;
      std::size_t g = extraspecial_[xi];
      std::size_t d = *diff(xi, g);
      if (a == g && b == d) return string_p(g, d) + 1;
      if (a == d && b == g) return -(string_p(g, d) + 1);
      // Jacobi on (e_a, e_b, e_{-d}) expresses N_{a,b} through lower sums.
      Rational acc = 0;
      if (auto bd = diff(b, d)) acc += Rational(value(b, neg(d))) * value(*bd, a);
      if (auto ad = diff(a, d)) acc += Rational(value(neg(d), a)) * value(*ad, b);
      Rational den = value(xi, neg(d));
      return to_long(-acc / den);
    }
    if (!positive(a) && !positive(b)) return -value(neg(a), neg(b));
    if (!positive(a)) return -value(b, a);
    // a positive, b negative.
    if (positive(*s)) {
      Rational q = frac(norm(*s), norm(a));
      return to_long(-q * value(neg(b), *s));
    }
    std::size_t c = neg(*s);
    Rational q = frac(norm(c), norm(b));
    return to_long(q * value(c, a));
  }

  const RootSystem& rs_;
  std::size_t npos_;
  std::vector<std::size_t> extraspecial_;
  std::map<std::pair<std::size_t, std::size_t>, long> memo_;
};

}  // namespace

std::optional<std::size_t> RootSystem::index_of(const Root& r) const {
  // Roots are few (<= 240); a linear scan keeps the type trivially copyable.
  for (std::size_t i = 0; i < roots.size(); ++i)
    if (roots[i] == r) return i;
  return std::nullopt;
}

int RootSystem::inner(const Root& a, const Root& b) const {
  int s = 0;
  for (int i = 0; i < rank; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < rank; ++j) s += a[i] * b[j] * gram[i][j];
  }
  return s;
}

int RootSystem::pairing(const Root& a, const Root& b) const { return 2 * inner(a, b) / inner(b, b); }

RootSystem build_root_system(char type_letter, int rank) {
  if (!valid_type(type_letter, rank))
    throw InputError("invalid simple type " + std::string(1, type_letter) + std::to_string(rank));
  RootSystem rs;
  rs.type_letter = type_letter;
  rs.rank = rank;
  rs.gram = gram_matrix(type_letter, rank);
  rs.cartan_matrix.assign(rank, std::vector<int>(rank));
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) rs.cartan_matrix[i][j] = 2 * rs.gram[i][j] / rs.gram[i][i];

  std::set<Root> known;
  std::vector<Root> layer;
  for (int i = 0; i < rank; ++i) {
    Root r(rank, 0);
    r[i] = 1;
    layer.push_back(r);
    known.insert(r);
  }
  std::vector<Root> positive = layer;
  auto inner = [&](const Root& a, const Root& b) {
    int s = 0;
    for (int i = 0; i < rank; ++i)
      for (int j = 0; j < rank; ++j) s += a[i] * b[j] * rs.gram[i][j];
    return s;
  };
  while (!layer.empty()) {
    std::set<Root> next;
    for (const Root& beta : layer) {
      for (int i = 0; i < rank; ++i) {
        Root ai(rank, 0);
        ai[i] = 1;
        if (beta == ai) continue;
        int p = 0;
        Root r = beta;
        for (;;) {
          r[i] -= 1;
          if (!known.count(r)) break;
          ++p;
        }
        int q = p - 2 * inner(beta, ai) / rs.gram[i][i];
        if (q > 0) {
          Root up = beta;
          up[i] += 1;
          if (!known.count(up)) next.insert(up);
        }
      }
    }
    layer.assign(next.begin(), next.end());
    for (const auto& r : layer) {
      known.insert(r);
      positive.push_back(r);
    }
  }
  std::sort(positive.begin(), positive.end(), [](const Root& a, const Root& b) {
    int ha = height(a), hb = height(b);
    if (ha != hb) return ha < hb;
    return a > b;
  });
  rs.roots = positive;
  for (const auto& r : positive) rs.roots.push_back(negate(r));
  return rs;
}

LieAlgebra::LieAlgebra(RootSystem rs) : rs_(std::move(rs)) {
  const std::size_t nr = rs_.roots.size();
  const std::size_t npos = rs_.num_positive();
  const std::size_t n = static_cast<std::size_t>(rs_.rank);
  dim_ = nr + n;
  labels_.reserve(dim_);
  for (std::size_t i = 0; i < nr; ++i)
    labels_.push_back((i < npos ? "e" : "f") + root_text(i < npos ? rs_.roots[i] : rs_.roots[i - npos]));
  for (std::size_t k = 0; k < n; ++k) labels_.push_back("h" + std::to_string(k + 1));

  StructureConstants N(rs_);
  table_.assign(dim_ * dim_, {});
  std::vector<Root> simple(n, Root(n, 0));
  for (std::size_t k = 0; k < n; ++k) simple[k][k] = 1;

  for (std::size_t i = 0; i < nr; ++i) {
    const Root& a = rs_.roots[i];
    for (std::size_t j = 0; j < nr; ++j) {
      const Root& b = rs_.roots[j];
      Root s = add(a, b);
      auto& out = table_[i * dim_ + j];
      if (std::all_of(s.begin(), s.end(), [](int c) { return c == 0; })) {
        // [e_a, e_{-a}] = h_a, the coroot in the basis of simple coroots.
        int na = rs_.inner(a, a);
        for (std::size_t k = 0; k < n; ++k) {
          long c = static_cast<long>(a[k]) * rs_.gram[k][k] / na;
          if (c != 0) out.push_back({nr + k, c});
        }
      } else if (auto si = rs_.index_of(s)) {
        out.push_back({*si, N.value(i, j)});
      }
    }
    for (std::size_t k = 0; k < n; ++k) {
      long c = rs_.pairing(a, simple[k]);
      if (c != 0) {
        table_[(nr + k) * dim_ + i].push_back({i, c});
        table_[i * dim_ + nr + k].push_back({i, -c});
      }
    }
  }

  // Trace form of the adjoint representation.  Only pairs of opposite
  // weight can have nonzero trace.
  killing_.assign(dim_ * dim_, Rational(0));
  auto weight_sum_zero = [&](std::size_t i, std::size_t j) {
    bool ci = i >= nr, cj = j >= nr;
    if (ci || cj) return ci && cj;
    Root s = add(rs_.roots[i], rs_.roots[j]);
    return std::all_of(s.begin(), s.end(), [](int c) { return c == 0; });
  };
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) {
      if (!weight_sum_zero(i, j)) continue;
      long tr = 0;
      for (std::size_t k = 0; k < dim_; ++k)
        for (const Term& t : bracket_basis(j, k))
          for (const Term& u : bracket_basis(i, t.index))
            if (u.index == k) tr += t.coef * u.coef;
      killing_[i * dim_ + j] = tr;
    }
  }
}

std::size_t LieAlgebra::root_vector(const Root& r) const {
  auto i = rs_.index_of(r);
  if (!i) throw InputError(root_text(r) + " is not a root of " + rs_.name());
  return *i;
}

Element LieAlgebra::basis_vector(std::size_t i) const {
  Element v = zero();
  v.at(i) = 1;
  return v;
}

long LieAlgebra::structure_constant(const Root& a, const Root& b) const {
  std::size_t i = root_vector(a), j = root_vector(b);
  for (const Term& t : bracket_basis(i, j))
    if (t.index < num_roots()) return t.coef;
  return 0;
}

Element LieAlgebra::bracket(const Element& x, const Element& y) const {
  if (x.size() != dim_ || y.size() != dim_) throw std::invalid_argument("bracket: dimension mismatch");
  Element out = zero();
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (y[j] == 0) continue;
      const auto& terms = bracket_basis(i, j);
      if (terms.empty()) continue;
      Rational c = x[i] * y[j];
      for (const Term& t : terms) out[t.index] += c * t.coef;
    }
  }
  return out;
}

Element LieAlgebra::ad_basis(const Element& x, std::size_t j) const {
  Element out = zero();
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x[i] == 0) continue;
    for (const Term& t : bracket_basis(i, j)) out[t.index] += x[i] * t.coef;
  }
  return out;
}

LieAlgebra build_lie_algebra(const RootSystem& rs) { return LieAlgebra(rs); }

Rational killing_pairing(const LieAlgebra& L, const Element& x, const Element& y) {
  if (x.size() != L.dim() || y.size() != L.dim())
    throw std::invalid_argument("killing_pairing: dimension mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < L.dim(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < L.dim(); ++j)
      if (y[j] != 0 && L.killing(i, j) != 0) s += x[i] * y[j] * L.killing(i, j);
  }
  return s;
}

std::string format_element(const LieAlgebra& L, const Element& x) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (x[i] != 1) os << to_string(x[i]) << "*";
    os << L.label(i);
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace walgebra::rootdata
