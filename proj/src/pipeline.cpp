#include "walgebra/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <exception>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <regex>
#include <sstream>
#include <thread>

#include "walgebra/errors.hpp"
#include "walgebra/exactla.hpp"
#include "walgebra/gamma.hpp"
#include "walgebra/idealkit.hpp"
#include "walgebra/pbw.hpp"
#include "walgebra/rootdata.hpp"
#include "walgebra/walg.hpp"

namespace walgebra::pipeline {

namespace {

namespace fs = std::filesystem;
using idealkit::Polynomial;
using idealkit::Ring;
using pbw::Monomial;
using pbw::Terms;

constexpr const char* kReportFormat = "walgebra-report 1";
constexpr const char* kCacheFormat = "walgebra-cache 1";

std::string strip_step_prefix(const std::string& msg) {
  static const std::regex prefix(R"(^step [0-9]+: )");
  return std::regex_replace(msg, prefix, "", std::regex_constants::format_first_only);
}

// Runs fn, tagging library errors with the step number.
template <class F>
auto tagged(int step, F&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const InputError& e) {
    throw StepError(step, ErrorKind::input, strip_step_prefix(e.what()));
  } catch (const ConsistencyError& e) {
    throw StepError(step, ErrorKind::consistency, strip_step_prefix(e.what()));
  }
}

void parallel_for(std::size_t n, unsigned jobs, const std::function<void(std::size_t)>& fn) {
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(n)));
  if (jobs <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex mu;
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < jobs; ++t)
    pool.emplace_back([&] {
      for (std::size_t i; (i = next++) < n;) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard lock(mu);
          if (!error) error = std::current_exception();
        }
      }
    });
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

Json rational_list(const std::vector<Rational>& v) {
  Json out = Json::array();
  for (const auto& q : v) out.push_back(to_string(q));
  return out;
}

std::string format_weight(const slodowy::Weight& w) {
  std::string s = "(";
  for (std::size_t k = 0; k < w.size(); ++k) s += (k ? "," : "") + to_string(w[k]);
  return s + ")";
}

std::string plural(std::size_t n, const std::string& word) {
  return std::to_string(n) + " " + word + (n == 1 ? "" : "s");
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  return h;
}

std::string cache_key(const casefile::CaseFile& c, slodowy::PolarizationMode mode) {
  std::ostringstream os;
  os << kCacheFormat << '\n' << c.type << c.rank << '\n';
  for (const auto& [root, coef] : c.e) {
    for (int x : root) os << x << ',';
    os << ':' << to_string(coef) << '\n';
  }
  os << (mode == slodowy::PolarizationMode::zero ? "zero" : "lagrangian") << '\n';
  for (const auto& lift : c.lifts) {
    os << "lift " << lift.name << '\n';
    for (const auto& f : lift.word) {
      os << static_cast<int>(f.kind) << ' ';
      for (int x : f.root) os << x << ',';
      os << ' ' << to_string(f.coef);
      for (const auto& v : f.values) os << ' ' << to_string(v);
      os << '\n';
    }
    if (lift.matrix)
      for (const auto& row : *lift.matrix)
        for (const auto& q : row) os << to_string(q) << ' ';
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a(os.str())));
  return buf;
}

Json terms_to_json(const Terms& u) {
  Json out = Json::array();
  for (const auto& [a, q] : u) {
    Json mono = Json::array();
    for (const auto& [k, p] : a.entries()) mono.push_back({k, p});
    out.push_back({mono, to_string(q)});
  }
  return out;
}

Terms terms_from_json(const Json& j, std::size_t nletters) {
  Terms u;
  for (const auto& item : j) {
    std::vector<int> dense(nletters, 0);
    for (const auto& kp : item.at(0)) {
      auto k = kp.at(0).get<std::size_t>();
      if (k >= nletters) throw InputError("cache: letter out of range");
      dense[k] = kp.at(1).get<int>();
    }
    u[Monomial::from_dense(dense)] = parse_rational(item.at(1).get<std::string>());
  }
  return u;
}

class Cache {
 public:
  Cache(std::optional<std::string> dir, std::string key) : key_(std::move(key)) {
    if (!dir) return;
    path_ = fs::path(*dir) / (key_ + ".json");
    std::ifstream in(*path_);
    if (!in) return;
    try {
      Json j = Json::parse(in);
      if (j.at("format") == kCacheFormat && j.at("key") == key_) data_ = std::move(j);
    } catch (const std::exception&) {
      data_ = Json::object();
    }
  }

  const Json* get(const std::string& section) const {
    auto it = data_.find(section);
    return it == data_.end() ? nullptr : &*it;
  }

  void drop(const std::string& section) { data_.erase(section); }

  void put(const std::string& section, Json value) {
    if (!path_) return;
    data_["format"] = kCacheFormat;
    data_["key"] = key_;
    data_[section] = std::move(value);
    std::error_code ec;
    fs::create_directories(path_->parent_path(), ec);
    fs::path tmp = *path_;
    tmp += ".tmp";
    {
      std::ofstream out(tmp);
      if (!out) return;
      out << data_.dump();
    }
    fs::rename(tmp, *path_, ec);
  }

 private:
  std::string key_;
  std::optional<fs::path> path_;
  Json data_ = Json::object();
};

std::vector<std::string> theta_names(std::size_t r) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < r; ++i) out.push_back("T" + std::to_string(i + 1));
  return out;
}

Polynomial to_polynomial(const Ring& R, const Terms& u) {
  std::vector<idealkit::Term> terms;
  for (const auto& [a, q] : u) terms.push_back({a.dense(R.nvars()), q});
  return Polynomial::from_terms(R, std::move(terms));
}

Json polynomial_list(const Ring& R, const std::vector<Polynomial>& ps) {
  Json out = Json::array();
  for (const auto& p : ps) out.push_back(idealkit::format(R, p));
  return out;
}

Json decomposition_json(const idealkit::DecompositionReport& rep) {
  Json comps = Json::array();
  for (const auto& c : rep.components)
    comps.push_back({{"name", c.name},
                     {"vanishes", c.vanishes},
                     {"dimension", c.dimension},
                     {"expected_dimension", c.expected_dimension},
                     {"affine_space", c.affine_chart}});
  Json inter = Json::array();
  for (const auto& i : rep.intersections) inter.push_back({{"a", i.a}, {"b", i.b}, {"matches", i.matches}});
  return {{"components", comps},
          {"ideal_in_components", rep.ideal_in_components},
          {"components_in_ideal", rep.components_in_ideal},
          {"components_in_radical", rep.components_in_radical},
          {"irredundant", rep.irredundant},
          {"intersections", inter},
          {"pass", rep.pass},
          {"verdict", rep.verdict}};
}

idealkit::Claim load_claim_at(int step, const std::string& path) {
  return tagged(step, [&] { return casefile::load_claim(path); });
}

struct Timer {
  bool enabled;
  Json& sink;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  void lap(int step) {
    if (!enabled) return;
    auto now = std::chrono::steady_clock::now();
    sink["step" + std::to_string(step) + "_ms"] =
        std::chrono::duration_cast<std::chrono::milliseconds>(now - start).count();
    start = now;
  }
};

}  // namespace

StepError::StepError(int step, ErrorKind kind, const std::string& what)
    : std::runtime_error("step " + std::to_string(step) + " (" + step_name(step) + "): " + what),
      step_(step),
      kind_(kind) {}

const char* step_name(int step) {
  switch (step) {
    case 0: return "input";
    case 1: return "sl2-triple";
    case 2: return "isotropic subspace";
    case 3: return "bases of pbar and m";
    case 4: return "centralizer basis";
    case 5: return "PBW generators";
    case 6: return "commutators";
    case 7: return "equations";
    case 8: return "component group";
    default: return "unknown";
  }
}

Json algebra_info(char type, int rank) {
  auto rs = tagged(0, [&] { return rootdata::build_root_system(type, rank); });
  rootdata::LieAlgebra L(rs);
  Json positive = Json::array();
  for (std::size_t k = 0; k < rs.num_positive(); ++k) positive.push_back(L.label(k));
  return {{"algebra",
           {{"name", rs.name()},
            {"dim", L.dim()},
            {"rank", L.rank()},
            {"roots", rs.roots.size()},
            {"positive_roots", positive},
            {"cartan_matrix", rs.cartan_matrix}}}};
}

Outcome run_case_file(const std::string& path, const RunOptions& opts) {
  auto c = tagged(0, [&] { return casefile::load_case(path); });
  return run_case(c, opts);
}

Outcome run_case(const casefile::CaseFile& cf, const RunOptions& opts) {
  Outcome out;
  Json& rep = out.report;
  Json timing = Json::object();
  Timer timer{opts.timing, timing};
  auto finish = [&]() -> Outcome {
    if (opts.timing) rep["timing"] = timing;
    return out;
  };
  const auto mode = opts.polarization.value_or(cf.polarization);
  const std::string mode_name = mode == slodowy::PolarizationMode::zero ? "zero" : "lagrangian";

  rep["format"] = kReportFormat;
  {
    Json e = Json::array();
    for (const auto& [root, coef] : cf.e) e.push_back({{"root", root}, {"coef", to_string(coef)}});
    Json lifts = Json::array();
    for (const auto& l : cf.lifts) lifts.push_back(l.name);
    rep["case"] = {{"algebra", std::string(1, cf.type) + std::to_string(cf.rank)},
                   {"e", e},
                   {"polarization", mode_name},
                   {"gamma_lifts", lifts}};
  }

  // Step 1.
  auto L = tagged(1, [&] {
    return std::make_shared<const rootdata::LieAlgebra>(rootdata::build_root_system(cf.type, cf.rank));
  });
  auto datum = tagged(1, [&] {
    return std::make_shared<const slodowy::NilpotentDatum>(slodowy::complete_sl2_triple(L, casefile::build_e(*L, cf)));
  });
  {
    std::map<int, int> dims;
    for (int g : datum->grading) ++dims[g];
    Json grading = Json::array();
    for (auto [g, n] : dims) grading.push_back({g, n});
    rep["triple"] = {{"dim_g", L->dim()},
                     {"e", rootdata::format_element(*L, datum->e)},
                     {"h", rootdata::format_element(*L, datum->h)},
                     {"f", rootdata::format_element(*L, datum->f)},
                     {"grading_dims", grading},
                     {"te_dim", datum->te_basis.size()}};
  }
  timer.lap(1);
  if (opts.last_step < 2) return finish();

  // Lifts are needed to check that l is stable.
  std::vector<gamma::Automorphism> lifts;
  for (const auto& l : cf.lifts) {
    auto a = tagged(4, [&] { return casefile::build_lift(*L, l); });
    if (!gamma::is_automorphism(*L, a)) throw StepError(4, ErrorKind::input, "lift " + l.name + " is not an automorphism");
    if (gamma::apply(a, datum->e) != datum->e || gamma::apply(a, datum->h) != datum->h)
      throw StepError(4, ErrorKind::input, "lift " + l.name + " does not fix e and h");
    lifts.push_back(std::move(a));
  }

  // Steps 2 and 3.
  auto pol = tagged(2, [&] {
    return std::make_shared<const slodowy::Polarization>(slodowy::choose_polarization(*datum, mode));
  });
  for (std::size_t a = 0; a < lifts.size(); ++a) {
    exactla::IncrementalBasis span(L->dim());
    for (auto k : pol->l) span.add(L->basis_vector(k));
    for (auto k : pol->l)
      if (!span.contains(gamma::apply(lifts[a], L->basis_vector(k))))
        throw StepError(2, ErrorKind::input, "l is not stable under lift " + cf.lifts[a].name);
  }
  {
    Json labels = Json::array(), mlabels = Json::array(), ngens = Json::array();
    for (std::size_t k = 0; k < pol->pbar_basis.size(); ++k)
      labels.push_back({{"x", L->label(pol->pbar_basis[k])}, {"n", pol->n_deg[k]}, {"weight", format_weight(pol->alpha[k])}});
    for (auto k : pol->m_basis) mlabels.push_back(L->label(k));
    for (auto k : pol->n_generators) ngens.push_back(L->label(k));
    Json l = Json::array();
    for (auto k : pol->l) l.push_back(L->label(k));
    rep["polarization"] = {{"mode", mode_name}, {"l", l}, {"dim_l_prime", pol->l_prime.size()}};
    rep["bases"] = {{"pbar_dim", pol->pbar_basis.size()},
                    {"pbar", labels},
                    {"m", mlabels},
                    {"m_generators", pol->m_gen_count},
                    {"n_generators", ngens}};
  }
  timer.lap(3);
  if (opts.last_step < 4) return finish();

  // Step 4.
  std::vector<gamma::Automorphism> group = tagged(4, [&] { return gamma::group_closure(*L, lifts); });
  if (group.empty()) group.push_back(gamma::identity(*L));
  std::vector<slodowy::TorusElement> torus;
  const auto id = gamma::identity(*L);
  for (const auto& g : group)
    if (g != id)
      if (auto t = gamma::as_torus(g)) torus.push_back(*t);
  const auto c = tagged(4, [&] { return slodowy::centralizer(*datum, torus); });
  const auto inv = slodowy::c_invariants(*L, c);
  const std::size_t c_gamma = gamma::fixed_abelianization_dim(*L, group, c);
  {
    Json z = Json::array();
    for (std::size_t i = 0; i < c.size(); ++i)
      z.push_back({{"index", i + 1},
                   {"z", rootdata::format_element(*L, c.z[i])},
                   {"m", c.m_deg[i]},
                   {"beta", format_weight(c.beta[i])}});
    rep["centralizer"] = {{"r", c.size()},
                          {"p", c.min_gen_count},
                          {"m", c.m_deg},
                          {"c_e", inv.c_e},
                          {"c_gamma_e", c_gamma},
                          {"basis", z}};
    Json gl = Json::array();
    for (std::size_t a = 0; a < lifts.size(); ++a)
      gl.push_back({{"name", cf.lifts[a].name}, {"order", gamma::group_closure(*L, {lifts[a]}).size()}});
    rep["gamma"] = {{"lifts", gl}, {"group_order", group.size()}, {"torus_elements", torus.size()}};
  }
  timer.lap(4);
  if (opts.last_step < 5) return finish();

  // Step 5.
  pbw::PbwContext ctx(datum, pol);
  Cache cache(opts.cache_dir, cache_key(cf, mode));
  std::vector<walg::ThetaGenerator> thetas(c.size());
  bool from_cache = false;
  if (const Json* cached = cache.get("thetas"); cached && cached->size() == c.size()) {
    try {
      for (std::size_t i = 0; i < c.size(); ++i) {
        auto& t = thetas[i];
        t.index = i;
        t.z = c.z[i];
        t.m_deg = c.m_deg[i];
        t.beta = c.beta[i];
        t.tail = terms_from_json(cached->at(i), ctx.num_letters());
        t.full = ctx.from_lie(t.z);
        pbw::add_scaled(t.full, t.tail, Rational(1));
      }
      from_cache = true;
    } catch (const std::exception&) {
      from_cache = false;
    }
  }
  const auto names = [&] {
    std::vector<std::string> n;
    for (auto k : pol->pbar_basis) n.push_back(L->label(k));
    return n;
  }();
  std::vector<char> inv_m(c.size()), inv_n(c.size());
  bool all_inv = false, equivariant = false;
  auto check = [&] {
    parallel_for(c.size(), opts.jobs, [&](std::size_t i) {
      bool ok = true;
      for (std::size_t k = 0; k < pol->m_gen_count && ok; ++k)
        ok = ctx.adjoint(L->basis_vector(pol->m_basis[k]), thetas[i].full).empty();
      inv_m[i] = ok;
      inv_n[i] = walg::is_invariant(ctx, thetas[i].full);
    });
    all_inv = std::all_of(inv_m.begin(), inv_m.end(), [](char x) { return x; }) &&
              std::all_of(inv_n.begin(), inv_n.end(), [](char x) { return x; });
    equivariant = true;
    for (const auto& g : lifts) {
      const auto M = gamma::action_on_centralizer(*L, g, c);
      for (std::size_t i = 0; i < c.size() && equivariant; ++i) {
        Terms expect;
        for (std::size_t j = 0; j < c.size(); ++j) pbw::add_scaled(expect, thetas[j].full, M[j][i]);
        equivariant = ctx.apply_automorphism(g, thetas[i].full) == expect;
      }
    }
    return all_inv && equivariant;
  };
  // A cached presentation that fails the checks is discarded along with
  // the commutator table built from it.
  if (from_cache && !check()) from_cache = false;
  if (!from_cache) {
    tagged(5, [&] {
      parallel_for(c.size(), opts.jobs, [&](std::size_t i) { thetas[i] = walg::lift_theta(ctx, c, i, torus); });
      thetas = walg::average_over_group(ctx, c, thetas, group);
    });
    Json j = Json::array();
    for (const auto& t : thetas) j.push_back(terms_to_json(t.tail));
    cache.drop("table");
    cache.put("thetas", j);
    check();
  }
  {
    Json tj = Json::array();
    std::size_t total_terms = 0;
    for (std::size_t i = 0; i < c.size(); ++i) {
      total_terms += thetas[i].tail.size();
      tj.push_back({{"index", i + 1},
                    {"kazhdan", thetas[i].m_deg + 2},
                    {"beta", format_weight(thetas[i].beta)},
                    {"tail_terms", thetas[i].tail.size()},
                    {"tail", pbw::format_terms(thetas[i].tail, names)},
                    {"invariant_m", static_cast<bool>(inv_m[i])},
                    {"invariant_n", static_cast<bool>(inv_n[i])}});
    }
    rep["presentation"] = {{"thetas", tj},
                           {"tail_terms_total", total_terms},
                           {"all_invariant", all_inv},
                           {"gamma_equivariant", equivariant}};
    if (!all_inv) throw StepError(5, ErrorKind::consistency, "a generator fails the invariance check");
    if (!equivariant) throw StepError(5, ErrorKind::consistency, "generators are not equivariant under the lifts");
  }
  timer.lap(5);
  if (opts.last_step < 6) return finish();

  // Step 6.
  walg::ThetaBasis basis(ctx, c, thetas);
  walg::CommutatorTable table;
  bool table_cached = false;
  if (const Json* cached = cache.get("table")) {
    try {
      for (const auto& row : *cached) {
        auto i = row.at(0).get<std::size_t>(), j = row.at(1).get<std::size_t>();
        if (i >= c.size() || j >= c.size()) throw InputError("cache: index out of range");
        table.entries[{i, j}] = terms_from_json(row.at(2), c.size());
      }
      table_cached = true;
    } catch (const std::exception&) {
      table.entries.clear();
    }
  }
  if (!table_cached) {
    table = tagged(6, [&] { return walg::commutator_table(basis, c, opts.jobs); });
    Json j = Json::array();
    for (const auto& [ij, row] : table.entries) j.push_back({ij.first, ij.second, terms_to_json(row)});
    cache.put("table", j);
  }
  {
    const auto names = theta_names(c.size());
    bool bound = true;
    std::size_t nonzero = 0;
    Json rows = Json::array();
    for (const auto& [ij, row] : table.entries) {
      bound = bound && walg::satisfies_support_bound(c, ij.first, ij.second, row);
      nonzero += row.size();
      rows.push_back({{"i", ij.first + 1}, {"j", ij.second + 1}, {"nu", pbw::format_terms(row, names)}});
    }
    rep["commutators"] = {{"pairs", walg::pair_set(c).size()},
                          {"entries", rows},
                          {"nonzero_coefficients", nonzero},
                          {"support_bound", bound}};
    if (!bound) throw StepError(6, ErrorKind::consistency, "a commutator violates the support bound");
  }
  timer.lap(6);
  if (opts.last_step < 7) return finish();

  // Step 7.
  const auto eqs = walg::extract_equations(table, c);
  std::vector<std::string> var_names;
  for (auto v : eqs.variables) var_names.push_back("t" + std::to_string(v + 1));
  const Ring R{var_names, {}};
  std::vector<Polynomial> gens;
  for (const auto& p : eqs.polys) gens.push_back(to_polynomial(R, p));
  const auto gb = idealkit::groebner(R, gens);
  const int dim = idealkit::dimension(R, gb);
  {
    Json sources = Json::array();
    for (auto [i, j] : eqs.sources) sources.push_back({i + 1, j + 1});
    rep["equations"] = {{"summary", plural(gens.size(), "equation") + ", " + plural(var_names.size(), "free variable")},
                        {"variables", var_names},
                        {"polynomials", polynomial_list(R, gens)},
                        {"sources", sources}};
    rep["variety"] = {{"groebner_basis", polynomial_list(R, gb)},
                      {"dimension", dim},
                      {"dimension_equals_c_e", dim == static_cast<int>(inv.c_e)}};
  }
  std::optional<idealkit::Claim> claim;
  if (auto path = opts.claim ? opts.claim : cf.claim; path && opts.check_claims) {
    claim = load_claim_at(7, *path);
    auto d = tagged(7, [&] { return idealkit::verify_decomposition(R, gens, *claim); });
    rep["decomposition"] = decomposition_json(d);
    out.verified = out.verified && d.pass;
  }
  timer.lap(7);
  if (opts.last_step < 8) return finish();

  // Step 8: theta' = N^T theta with N the matrix of g^{-1} on g^e.
  std::vector<idealkit::LinearMap> action;
  Json gens_json = Json::array();
  for (std::size_t a = 0; a < lifts.size(); ++a) {
    const auto N = gamma::action_on_centralizer(*L, tagged(8, [&] { return gamma::inverse(*L, lifts[a]); }), c);
    idealkit::LinearMap A(eqs.variables.size(), std::vector<Rational>(eqs.variables.size(), Rational(0)));
    for (std::size_t x = 0; x < eqs.variables.size(); ++x) {
      for (std::size_t j = 0; j < c.size(); ++j) {
        auto pos = std::find(eqs.variables.begin(), eqs.variables.end(), j);
        if (pos == eqs.variables.end()) {
          if (N[j][eqs.variables[x]] != 0)
            throw StepError(8, ErrorKind::consistency, "lift " + cf.lifts[a].name + " moves a weight-zero vector off weight zero");
          continue;
        }
        A[x][static_cast<std::size_t>(pos - eqs.variables.begin())] = N[j][eqs.variables[x]];
      }
    }
    Json rows = Json::array();
    for (const auto& row : A) rows.push_back(rational_list(row));
    gens_json.push_back({{"name", cf.lifts[a].name}, {"theta_action", rows}});
    action.push_back(std::move(A));
  }
  const auto fixed = tagged(8, [&] { return idealkit::gamma_fixed_ideal(R, gens, action); });
  if (fixed.witness)
    throw StepError(8, ErrorKind::consistency,
                    "lift " + cf.lifts[fixed.witness->first].name + " does not stabilize E: " +
                        idealkit::format(R, fixed.witness->second));
  Json fixed_json = {{"generators", gens_json},
                     {"fixed_ideal", polynomial_list(R, fixed.basis)},
                     {"dimension", idealkit::dimension(R, fixed.basis)}};
  if (auto path = opts.fixed_claim ? opts.fixed_claim : cf.fixed_claim; path && opts.check_claims) {
    auto fc = load_claim_at(8, *path);
    auto d = tagged(8, [&] { return idealkit::verify_decomposition(R, fixed.basis, fc); });
    fixed_json["decomposition"] = decomposition_json(d);
    out.verified = out.verified && d.pass;
  }
  if (claim && !claim->components.empty()) {
    const std::size_t n = claim->components.size();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<std::size_t(std::size_t)> root = [&](std::size_t x) {
      return parent[x] == x ? x : parent[x] = root(parent[x]);
    };
    bool closed = true;
    Json perms = Json::array();
    std::vector<char> pointwise(n, 1);
    for (std::size_t a = 0; a < action.size(); ++a) {
      const auto perm = tagged(8, [&] { return idealkit::component_permutation(R, *claim, action[a]); });
      Json pj = Json::array();
      for (std::size_t k = 0; k < n; ++k) {
        if (perm[k] < 0) {
          closed = false;
          pj.push_back(nullptr);
          continue;
        }
        pj.push_back(claim->components[static_cast<std::size_t>(perm[k])].name);
        parent[root(k)] = root(static_cast<std::size_t>(perm[k]));
        if (!idealkit::fixes_pointwise(R, claim->components[k], action[a])) pointwise[k] = 0;
      }
      perms.push_back({{"name", cf.lifts[a].name}, {"images", pj}});
    }
    std::map<std::size_t, std::vector<std::string>> orbit_map;
    for (std::size_t k = 0; k < n; ++k) orbit_map[root(k)].push_back(claim->components[k].name);
    Json orbits = Json::array();
    std::vector<std::size_t> sizes;
    for (const auto& [r, members] : orbit_map) {
      orbits.push_back(members);
      sizes.push_back(members.size());
    }
    std::sort(sizes.begin(), sizes.end());
    Json fixed_names = Json::array();
    for (std::size_t k = 0; k < n; ++k)
      if (pointwise[k]) fixed_names.push_back(claim->components[k].name);
    bool pass = closed;
    if (claim->gamma_orbits) pass = pass && *claim->gamma_orbits == sizes;
    for (auto k : claim->gamma_pointwise) pass = pass && pointwise[k];
    fixed_json["component_action"] = {{"permutations", perms},
                                      {"orbits", orbits},
                                      {"pointwise_fixed", fixed_names},
                                      {"pass", pass}};
    out.verified = out.verified && pass;
  }
  rep["gamma_fixed"] = fixed_json;
  timer.lap(8);
  return finish();
}

namespace {

bool is_scalar_list(const Json& j) {
  return j.is_array() && std::all_of(j.begin(), j.end(), [](const Json& x) { return x.is_primitive(); });
}

std::string scalar_text(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_null()) return "-";
  return j.dump();
}

void render(std::ostringstream& os, const Json& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (v.is_primitive()) {
        os << pad << k << ": " << scalar_text(v) << '\n';
      } else if (is_scalar_list(v)) {
        os << pad << k << ": [";
        for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << scalar_text(v[i]);
        os << "]\n";
      } else {
        os << pad << k << ":\n";
        render(os, v, indent + 2);
      }
    }
  } else if (j.is_array()) {
    for (const auto& v : j) {
      if (v.is_object()) {
        std::ostringstream item;
        render(item, v, indent + 2);
        std::string s = item.str();
        s.replace(static_cast<std::size_t>(indent), 2, "- ");
        os << s;
      } else if (is_scalar_list(v)) {
        os << pad << "- ";
        for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << scalar_text(v[i]);
        os << '\n';
      } else if (v.is_primitive()) {
        os << pad << "- " << scalar_text(v) << '\n';
      } else {
        os << pad << "-\n";
        render(os, v, indent + 2);
      }
    }
  }
}

}  // namespace

std::string render_text(const Json& report) {
  std::ostringstream os;
  render(os, report, 0);
  return os.str();
}

}  // namespace walgebra::pipeline
