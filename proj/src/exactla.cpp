#include "walgebra/exactla.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <stdexcept>

namespace walgebra::exactla {

namespace {

using IntRow = std::vector<std::pair<std::size_t, Integer>>;

Integer row_content(const IntRow& row) {
  Integer g = 0;
  for (const auto& [c, v] : row) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

void make_primitive(IntRow& row) {
  if (row.empty()) return;
  Integer g = row_content(row);
  if (g > 1)
    for (auto& [c, v] : row) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

IntRow to_integer_row(const SparseVector& row, const Rational* rhs, std::size_t rhs_col) {
  Integer l = 1;
  for (const auto& [c, v] : row) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
  if (rhs) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), rhs->get_den_mpz_t());
  IntRow out;
  out.reserve(row.size() + 1);
  for (const auto& [c, v] : row) {
    Integer x = v.get_num() * (l / v.get_den());
    out.emplace_back(c, std::move(x));
  }
  if (rhs && *rhs != 0) out.emplace_back(rhs_col, rhs->get_num() * (l / rhs->get_den()));
  make_primitive(out);
  return out;
}

const Integer* find_entry(const IntRow& row, std::size_t col) {
  auto it = std::lower_bound(row.begin(), row.end(), col,
                             [](const auto& e, std::size_t c) { return e.first < c; });
  if (it == row.end() || it->first != col) return nullptr;
  return &it->second;
}

// target <- (p/g) * target - (a/g) * pivot_row, where a = target[col], p = pivot value.
void eliminate(IntRow& target, const IntRow& pivot_row, std::size_t col, const Integer& p) {
  const Integer* ap = find_entry(target, col);
  if (!ap) return;
  Integer a = *ap;
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t());
  Integer ps = p / g;
  Integer as = a / g;
  IntRow out;
  out.reserve(target.size() + pivot_row.size());
  auto it = target.begin();
  auto jt = pivot_row.begin();
  Integer tmp;
  while (it != target.end() || jt != pivot_row.end()) {
    if (jt == pivot_row.end() || (it != target.end() && it->first < jt->first)) {
      out.emplace_back(it->first, ps * it->second);
      ++it;
    } else if (it == target.end() || jt->first < it->first) {
      out.emplace_back(jt->first, -(as * jt->second));
      ++jt;
    } else {
      tmp = ps * it->second - as * jt->second;
      if (tmp != 0) out.emplace_back(it->first, tmp);
      ++it;
      ++jt;
    }
  }
  make_primitive(out);
  target = std::move(out);
}

struct Reduced {
  // Pivot rows in the order pivots were chosen, with their pivot column.
  std::vector<IntRow> rows;
  std::vector<std::size_t> pivot_cols;
  bool inconsistent = false;
};

// Fraction-free Gauss-Jordan elimination with Markowitz pivot selection.
// Column `ncols` (when with_rhs) holds the right-hand side and is never a pivot.
Reduced reduce(const SparseSystem& system, bool with_rhs) {
  const std::size_t ncols = system.ncols();
  std::vector<IntRow> rows;
  rows.reserve(system.nrows());
  for (std::size_t i = 0; i < system.nrows(); ++i) {
    const Rational* rhs = (with_rhs && system.rhs()) ? &(*system.rhs())[i] : nullptr;
    IntRow r = to_integer_row(system.rows()[i], rhs, ncols);
    if (!r.empty()) rows.push_back(std::move(r));
  }

  Reduced out;
  auto only_rhs = [&](const IntRow& r) { return !r.empty() && r.front().first >= ncols; };
  std::vector<char> pivoted(rows.size(), 0);
  std::vector<std::size_t> pivot_of_row(rows.size(), 0);
  std::vector<std::size_t> col_count(ncols, 0);

  for (;;) {
    std::fill(col_count.begin(), col_count.end(), 0);
    bool any = false;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (pivoted[r]) continue;
      for (const auto& [c, v] : rows[r])
        if (c < ncols) {
          ++col_count[c];
          any = true;
        }
    }
    if (!any) break;

    std::size_t best_r = 0, best_c = 0;
    std::size_t best_cost = std::numeric_limits<std::size_t>::max();
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (pivoted[r]) continue;
      std::size_t len = 0;
      for (const auto& e : rows[r])
        if (e.first < ncols) ++len;
      if (len == 0) continue;
      for (const auto& [c, v] : rows[r]) {
        if (c >= ncols) break;
        std::size_t cost = (len - 1) * (col_count[c] - 1);
        if (cost < best_cost || (cost == best_cost && (c < best_c || (c == best_c && r < best_r)))) {
          best_cost = cost;
          best_r = r;
          best_c = c;
        }
      }
    }

    pivoted[best_r] = 1;
    pivot_of_row[best_r] = best_c;
    const IntRow pivot_row = rows[best_r];
    const Integer p = *find_entry(pivot_row, best_c);
    for (std::size_t r = 0; r < rows.size(); ++r)
      if (r != best_r) eliminate(rows[r], pivot_row, best_c, p);
  }

  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (pivoted[r]) {
      out.rows.push_back(std::move(rows[r]));
      out.pivot_cols.push_back(pivot_of_row[r]);
    } else if (only_rhs(rows[r])) {
      out.inconsistent = true;
    }
  }
  return out;
}

}  // namespace

SparseVector SparseSystem::normalize(SparseVector row, std::size_t ncols) {
  std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseVector out;
  out.reserve(row.size());
  for (auto& [c, v] : row) {
    if (c >= ncols) throw std::out_of_range("SparseSystem: column index out of range");
    if (!out.empty() && out.back().first == c)
      out.back().second += v;
    else
      out.emplace_back(c, std::move(v));
  }
  std::erase_if(out, [](const auto& e) { return e.second == 0; });
  return out;
}

void SparseSystem::add_row(SparseVector row) {
  if (rhs_) rhs_->push_back(0);
  rows_.push_back(normalize(std::move(row), ncols_));
}

void SparseSystem::add_row(SparseVector row, Rational rhs) {
  if (!rhs_) rhs_.emplace(rows_.size(), Rational(0));
  rhs_->push_back(std::move(rhs));
  rows_.push_back(normalize(std::move(row), ncols_));
}

std::vector<SparseVector> solve_homogeneous(const SparseSystem& system) {
  Reduced red = reduce(system, false);
  const std::size_t n = system.ncols();
  std::vector<char> is_pivot(n, 0);
  for (auto c : red.pivot_cols) is_pivot[c] = 1;
  std::map<std::size_t, SparseVector> kernel;
  for (std::size_t c = 0; c < n; ++c)
    if (!is_pivot[c]) kernel[c].emplace_back(c, Rational(1));
  for (std::size_t k = 0; k < red.rows.size(); ++k) {
    const auto pc = red.pivot_cols[k];
    const Integer& p = *find_entry(red.rows[k], pc);
    for (const auto& [c, v] : red.rows[k]) {
      if (c == pc) continue;
      Rational q = frac(-v, p);
      kernel[c].emplace_back(pc, std::move(q));
    }
  }
  std::vector<SparseVector> out;
  out.reserve(kernel.size());
  for (auto& [c, v] : kernel) {
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    out.push_back(std::move(v));
  }
  return out;
}

AffineSolution solve_affine(const SparseSystem& system) {
  const std::size_t n = system.ncols();
  Reduced red = reduce(system, true);
  AffineSolution sol;
  if (red.inconsistent) return sol;
  sol.consistent = true;
  sol.x.assign(n, Rational(0));
  for (std::size_t k = 0; k < red.rows.size(); ++k) {
    const auto pc = red.pivot_cols[k];
    const Integer* b = find_entry(red.rows[k], n);
    if (!b) continue;
    sol.x[pc] = frac(*b, *find_entry(red.rows[k], pc));
  }
  return sol;
}

std::size_t rank(const SparseSystem& system) { return reduce(system, false).rows.size(); }

std::vector<Rational> IncrementalBasis::reduce(std::vector<Rational> v) const {
  if (v.size() != n_) throw std::invalid_argument("IncrementalBasis: dimension mismatch");
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const Rational c = v[pivots_[k]];
    if (c == 0) continue;
    for (std::size_t j = 0; j < n_; ++j)
      if (rows_[k][j] != 0) v[j] -= c * rows_[k][j];
  }
  return v;
}

bool IncrementalBasis::add(const std::vector<Rational>& v) {
  auto r = reduce(v);
  std::size_t p = 0;
  while (p < n_ && r[p] == 0) ++p;
  if (p == n_) return false;
  Rational inv = 1 / r[p];
  for (auto& x : r) x *= inv;
  // Keep existing rows reduced against the new pivot.
  for (auto& row : rows_) {
    const Rational c = row[p];
    if (c == 0) continue;
    for (std::size_t j = 0; j < n_; ++j)
      if (r[j] != 0) row[j] -= c * r[j];
  }
  rows_.push_back(std::move(r));
  pivots_.push_back(p);
  return true;
}

bool IncrementalBasis::contains(const std::vector<Rational>& v) const {
  auto r = reduce(v);
  for (const auto& x : r)
    if (x != 0) return false;
  return true;
}

std::vector<Rational> to_dense(const SparseVector& v, std::size_t n) {
  std::vector<Rational> out(n, Rational(0));
  for (const auto& [c, x] : v) out.at(c) = x;
  return out;
}

}  // namespace walgebra::exactla
