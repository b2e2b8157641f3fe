#include "walgebra/pbw.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace walgebra::pbw {

Monomial Monomial::from_dense(const std::vector<int>& a) {
  std::vector<Entry> e;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k] < 0) throw std::invalid_argument("negative exponent");
    if (a[k] > 0) e.emplace_back(static_cast<std::uint16_t>(k), static_cast<std::uint16_t>(a[k]));
  }
  return Monomial(std::move(e));
}

std::size_t Monomial::exponent(std::size_t k) const {
  for (const auto& [i, p] : e_)
    if (i == k) return p;
  return 0;
}

std::size_t Monomial::total() const {
  std::size_t t = 0;
  for (const auto& x : e_) t += x.second;
  return t;
}

Monomial Monomial::times_letter(std::size_t k, int by) const {
  std::vector<Entry> e = e_;
  auto it = std::lower_bound(e.begin(), e.end(), k, [](const Entry& x, std::size_t v) { return x.first < v; });
  if (it != e.end() && it->first == k) {
    int p = it->second + by;
    if (p < 0) throw std::invalid_argument("negative exponent");
    if (p == 0)
      e.erase(it);
    else
      it->second = static_cast<std::uint16_t>(p);
  } else {
    if (by < 0) throw std::invalid_argument("negative exponent");
    if (by > 0) e.insert(it, {static_cast<std::uint16_t>(k), static_cast<std::uint16_t>(by)});
  }
  return Monomial(std::move(e));
}

Monomial Monomial::operator*(const Monomial& o) const {
  std::vector<Entry> e;
  std::size_t i = 0, j = 0;
  while (i < e_.size() || j < o.e_.size()) {
    if (j == o.e_.size() || (i < e_.size() && e_[i].first < o.e_[j].first))
      e.push_back(e_[i++]);
    else if (i == e_.size() || o.e_[j].first < e_[i].first)
      e.push_back(o.e_[j++]);
    else {
      e.emplace_back(e_[i].first, static_cast<std::uint16_t>(e_[i].second + o.e_[j].second));
      ++i, ++j;
    }
  }
  return Monomial(std::move(e));
}

std::vector<int> Monomial::dense(std::size_t n) const {
  std::vector<int> a(n, 0);
  for (const auto& [k, p] : e_) a.at(k) = p;
  return a;
}

std::size_t Monomial::hash() const {
  std::size_t h = 1469598103934665603ull;
  for (const auto& [k, p] : e_) {
    h ^= (static_cast<std::size_t>(k) << 16) | p;
    h *= 1099511628211ull;
  }
  return h;
}

void add_scaled(Terms& acc, const Terms& u, const Rational& c) {
  if (c == 0) return;
  for (const auto& [m, v] : u) {
    auto [it, fresh] = acc.try_emplace(m, v * c);
    if (!fresh) {
      it->second += v * c;
      if (it->second == 0) acc.erase(it);
    }
  }
}

Terms scaled(const Terms& u, const Rational& c) {
  Terms out;
  add_scaled(out, u, c);
  return out;
}

Terms difference(const Terms& u, const Terms& v) {
  Terms out = u;
  add_scaled(out, v, Rational(-1));
  return out;
}

Terms commutative_product(const Terms& u, const Terms& v) {
  Terms out;
  for (const auto& [a, x] : u)
    for (const auto& [b, y] : v) {
      auto [it, fresh] = out.try_emplace(a * b, x * y);
      if (!fresh) {
        it->second += x * y;
        if (it->second == 0) out.erase(it);
      }
    }
  return out;
}

PbwContext::PbwContext(std::shared_ptr<const slodowy::NilpotentDatum> datum,
                       std::shared_ptr<const slodowy::Polarization> pol)
    : datum_(std::move(datum)), pol_(std::move(pol)) {}

std::shared_ptr<const Terms> PbwContext::left_basis(std::size_t b, const Monomial& a) const {
  Key key{b, a};
  {
    std::shared_lock lock(mu_);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
  }
  auto value = std::make_shared<const Terms>(compute_left(b, a));
  std::unique_lock lock(mu_);
  auto [it, fresh] = cache_.try_emplace(std::move(key), value);
  return it->second;
}

Terms PbwContext::compute_left(std::size_t b, const Monomial& a) const {
  const int pos = pol_->pbar_position[b];
  Terms out;
  if (a.empty()) {
    if (pos >= 0)
      out.emplace(Monomial::letter(static_cast<std::size_t>(pos)), Rational(1));
    else if (datum_->chi[b] != 0)
      out.emplace(Monomial(), datum_->chi[b]);
    return out;
  }
  const std::size_t j = a.first();
  if (pos >= 0 && static_cast<std::size_t>(pos) <= j) {
    out.emplace(a.times_letter(static_cast<std::size_t>(pos)), Rational(1));
    return out;
  }
  // b x_j x^{a'} = x_j (b x^{a'}) + [b, x_j] x^{a'}
  const Monomial rest = a.times_letter(j, -1);
  const std::size_t xj = pol_->pbar_basis[j];
  const auto inner = left_basis(b, rest);
  for (const auto& [c, v] : *inner) add_scaled(out, *left_basis(xj, c), v);
  for (const auto& t : algebra().bracket_basis(b, xj)) add_scaled(out, *left_basis(t.index, rest), Rational(t.coef));
  return out;
}

Terms PbwContext::left_multiply(const Element& x, const Terms& u) const {
  Terms out;
  for (std::size_t b = 0; b < x.size(); ++b) {
    if (x[b] == 0) continue;
    for (const auto& [a, v] : u) add_scaled(out, *left_basis(b, a), x[b] * v);
  }
  return out;
}

Terms PbwContext::product(const Terms& u, const Terms& v) const {
  Terms out;
  for (const auto& [a, c] : u) {
    Terms w = v;
    const auto& es = a.entries();
    for (auto it = es.rbegin(); it != es.rend(); ++it) {
      const std::size_t b = pol_->pbar_basis[it->first];
      for (int p = 0; p < it->second; ++p) {
        Terms next;
        for (const auto& [m, x] : w) add_scaled(next, *left_basis(b, m), x);
        w = std::move(next);
      }
    }
    add_scaled(out, w, c);
  }
  return out;
}

Terms PbwContext::from_lie(const Element& x) const {
  Terms one{{Monomial(), Rational(1)}};
  return left_multiply(x, one);
}

Terms PbwContext::adjoint(const Element& x, const Terms& u) const {
  return difference(left_multiply(x, u), product(u, from_lie(x)));
}

long PbwContext::kazhdan_degree(const Monomial& a) const {
  long d = 0;
  for (const auto& [k, p] : a.entries()) d += static_cast<long>(p) * (pol_->n_deg[k] + 2);
  return d;
}

slodowy::Weight PbwContext::weight(const Monomial& a) const {
  slodowy::Weight w(datum_->te_basis.size(), Rational(0));
  for (const auto& [k, p] : a.entries())
    for (std::size_t s = 0; s < w.size(); ++s) w[s] += p * pol_->alpha[k][s];
  return w;
}

DegreeProfile PbwContext::degree_profile(const Monomial& a) const {
  return {a.total(), kazhdan_degree(a), weight(a)};
}

Terms PbwContext::apply_automorphism(const std::vector<Element>& images, const Terms& u) const {
  Terms out;
  for (const auto& [a, c] : u) {
    Terms w{{Monomial(), Rational(1)}};
    const auto& es = a.entries();
    for (auto it = es.rbegin(); it != es.rend(); ++it)
      for (int p = 0; p < it->second; ++p) w = left_multiply(images[pol_->pbar_basis[it->first]], w);
    add_scaled(out, w, c);
  }
  return out;
}

std::size_t PbwContext::cache_size() const {
  std::shared_lock lock(mu_);
  return cache_.size();
}

std::string format_terms(const Terms& u, const std::vector<std::string>& names) {
  if (u.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [a, c] : u) {
    os << (first ? "" : " + ") << to_string(c);
    for (const auto& [k, p] : a.entries()) {
      os << "*" << names.at(k);
      if (p > 1) os << "^" << p;
    }
    first = false;
  }
  return os.str();
}

}  // namespace walgebra::pbw
