#include "walgebra/casefile.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "walgebra/errors.hpp"

namespace walgebra::casefile {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep)) out.push_back(trim(cur));
  return out;
}

std::vector<std::string> words(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream is(s);
  for (std::string w; is >> w;) out.push_back(w);
  return out;
}

struct Lines {
  std::vector<std::string> lines;
  std::size_t next = 0;
  std::size_t number = 0;

  explicit Lines(const std::string& text) {
    std::istringstream is(text);
    for (std::string l; std::getline(is, l);) lines.push_back(l);
  }
  // Next non-empty line with comments removed.
  std::optional<std::string> get() {
    while (next < lines.size()) {
      number = ++next;
      std::string l = lines[next - 1];
      if (auto h = l.find('#'); h != std::string::npos) l.erase(h);
      l = trim(l);
      if (!l.empty()) return l;
    }
    return std::nullopt;
  }
  [[noreturn]] void fail(const std::string& why) const {
    throw InputError("line " + std::to_string(number) + ": " + why);
  }
};

std::string resolve(const std::string& base, const std::string& p) {
  std::filesystem::path path(p);
  return path.is_absolute() ? p : (std::filesystem::path(base) / path).lexically_normal().string();
}

void expect_header(Lines& in, const std::string& kind) {
  auto h = in.get();
  if (!h || words(*h) != std::vector<std::string>{kind, "1"}) in.fail("expected header '" + kind + " 1'");
}

}  // namespace

rootdata::Root parse_root(const std::string& text) {
  rootdata::Root r;
  for (const auto& part : split(text, ',')) {
    try {
      std::size_t used = 0;
      r.push_back(std::stoi(part, &used));
      if (used != part.size()) throw std::invalid_argument(part);
    } catch (const std::exception&) {
      throw InputError("bad root coordinates '" + text + "'");
    }
  }
  return r;
}

std::string read_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw InputError("cannot read " + path);
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

CaseFile parse_case(const std::string& text, const std::string& base_dir) {
  CaseFile c;
  c.text = text;
  Lines in(text);
  expect_header(in, "walgebra-case");
  bool have_algebra = false;
  while (auto line = in.get()) {
    auto w = words(*line);
    const std::string& key = w[0];
    if (key == "algebra") {
      if (w.size() != 3 || w[1].size() != 1) in.fail("expected 'algebra <type> <rank>'");
      c.type = w[1][0];
      try {
        c.rank = std::stoi(w[2]);
      } catch (const std::exception&) {
        in.fail("bad rank");
      }
      have_algebra = true;
    } else if (key == "e") {
      auto rest = trim(line->substr(1));
      auto parts = split(rest, ':');
      if (parts.size() != 2) in.fail("expected 'e <root> : <coefficient>'");
      c.e.emplace_back(parse_root(parts[0]), parse_rational(parts[1]));
    } else if (key == "polarization") {
      if (w.size() != 2 || (w[1] != "zero" && w[1] != "lagrangian")) in.fail("polarization must be zero or lagrangian");
      c.polarization = w[1] == "zero" ? slodowy::PolarizationMode::zero : slodowy::PolarizationMode::lagrangian;
    } else if (key == "claim" || key == "fixed-claim") {
      if (w.size() != 2) in.fail("expected '" + key + " <file>'");
      (key == "claim" ? c.claim : c.fixed_claim) = resolve(base_dir, w[1]);
    } else if (key == "gamma-lift") {
      GammaLift lift;
      lift.name = w.size() > 1 ? w[1] : "g" + std::to_string(c.lifts.size() + 1);
      for (;;) {
        auto l = in.get();
        if (!l) in.fail("unterminated gamma-lift block");
        auto fw = words(*l);
        if (fw[0] == "end") break;
        LiftFactor f;
        if (fw[0] == "weyl" && fw.size() == 2) {
          f.kind = LiftFactor::Kind::weyl;
          f.root = parse_root(fw[1]);
        } else if (fw[0] == "root") {
          auto parts = split(trim(l->substr(4)), ':');
          if (parts.size() != 2) in.fail("expected 'root <root> : <coefficient>'");
          f.kind = LiftFactor::Kind::root;
          f.root = parse_root(parts[0]);
          f.coef = parse_rational(parts[1]);
        } else if (fw[0] == "torus") {
          f.kind = LiftFactor::Kind::torus;
          for (std::size_t k = 1; k < fw.size(); ++k) f.values.push_back(parse_rational(fw[k]));
        } else {
          in.fail("unknown lift factor '" + fw[0] + "'");
        }
        lift.word.push_back(std::move(f));
      }
      c.lifts.push_back(std::move(lift));
    } else if (key == "gamma-matrix") {
      GammaLift lift;
      lift.name = w.size() > 1 ? w[1] : "g" + std::to_string(c.lifts.size() + 1);
      gamma::Automorphism m;
      for (;;) {
        auto l = in.get();
        if (!l) in.fail("unterminated gamma-matrix block");
        if (*l == "end") break;
        rootdata::Element row;
        for (const auto& x : words(*l)) row.push_back(parse_rational(x));
        m.push_back(std::move(row));
      }
      lift.matrix = std::move(m);
      c.lifts.push_back(std::move(lift));
    } else {
      in.fail("unknown directive '" + key + "'");
    }
  }
  if (!have_algebra) throw InputError("case file has no 'algebra' line");
  if (c.e.empty()) throw InputError("case file has no 'e' lines");
  return c;
}

CaseFile load_case(const std::string& path) {
  auto c = parse_case(read_file(path), std::filesystem::path(path).parent_path().string());
  c.path = path;
  return c;
}

rootdata::Element build_e(const rootdata::LieAlgebra& L, const CaseFile& c) {
  rootdata::Element e = L.zero();
  for (const auto& [r, v] : c.e) {
    if (r.size() != L.rank()) throw InputError("root has wrong number of coordinates");
    e[L.root_vector(r)] += v;
  }
  return e;
}

gamma::Automorphism build_lift(const rootdata::LieAlgebra& L, const GammaLift& lift) {
  if (lift.matrix) {
    if (lift.matrix->size() != L.dim()) throw InputError("gamma-matrix " + lift.name + " must have dim g lines");
    for (const auto& row : *lift.matrix)
      if (row.size() != L.dim()) throw InputError("gamma-matrix " + lift.name + " must be square of size dim g");
    return *lift.matrix;
  }
  gamma::Automorphism g = gamma::identity(L);
  for (const auto& f : lift.word) {
    gamma::Automorphism a;
    switch (f.kind) {
      case LiftFactor::Kind::weyl:
        a = gamma::weyl_element(L, f.root);
        break;
      case LiftFactor::Kind::root:
        a = gamma::root_element(L, f.root, f.coef);
        break;
      case LiftFactor::Kind::torus:
        a = gamma::torus_element(L, f.values);
        break;
    }
    g = gamma::compose(g, a);
  }
  return g;
}

idealkit::Claim parse_claim(const std::string& text) {
  idealkit::Claim claim;
  Lines in(text);
  expect_header(in, "walgebra-claim");
  idealkit::Ring ambient;
  bool have_vars = false;
  auto find = [&](const std::string& name) -> std::size_t {
    for (std::size_t k = 0; k < claim.components.size(); ++k)
      if (claim.components[k].name == name) return k;
    in.fail("unknown component '" + name + "'");
  };
  // "<kind> ... point : c1, c2" or "<kind> ... params s t : f1, f2"
  auto parse_shape = [&](const std::string& name, const std::vector<std::string>& head, std::size_t at,
                         const std::string& coords) {
    std::vector<std::string> params;
    if (at >= head.size()) in.fail("expected 'point' or 'params'");
    if (head[at] == "params") {
      params.assign(head.begin() + static_cast<long>(at) + 1, head.end());
      if (params.empty()) in.fail("'params' needs at least one parameter");
    } else if (head[at] != "point" || at + 1 != head.size()) {
      in.fail("expected 'point' or 'params'");
    }
    return idealkit::parse_component(ambient, name, params, split(coords, ','));
  };
  while (auto line = in.get()) {
    auto colon = line->find(':');
    auto head = words(line->substr(0, colon));
    const std::string coords = colon == std::string::npos ? "" : line->substr(colon + 1);
    if (head[0] == "variables") {
      claim.variables.assign(head.begin() + 1, head.end());
      ambient = idealkit::Ring{claim.variables, {}};
      have_vars = true;
    } else if (head[0] == "radical") {
      if (head.size() != 2 || (head[1] != "accept" && head[1] != "reject")) in.fail("radical must be accept or reject");
      claim.accept_radical = head[1] == "accept";
    } else if (!have_vars) {
      in.fail("'variables' must come first");
    } else if (head[0] == "component") {
      if (head.size() < 3 || colon == std::string::npos) in.fail("expected 'component <name> point|params ... : coords'");
      claim.components.push_back(parse_shape(head[1], head, 2, coords));
    } else if (head[0] == "intersection") {
      if (colon == std::string::npos) in.fail("intersection needs coordinates");
      if (head.size() >= 2 && head[1] == "all-pairs") {
        auto shape = parse_shape("all-pairs", head, 2, coords);
        for (std::size_t a = 0; a < claim.components.size(); ++a)
          for (std::size_t b = a + 1; b < claim.components.size(); ++b) claim.intersections.push_back({a, b, shape});
      } else {
        if (head.size() < 4) in.fail("expected 'intersection <a> <b> point|params ... : coords'");
        claim.intersections.push_back({find(head[1]), find(head[2]), parse_shape(head[1] + "/" + head[2], head, 3, coords)});
      }
    } else if (head[0] == "gamma-orbits") {
      std::vector<std::size_t> sizes;
      for (std::size_t k = 1; k < head.size(); ++k) {
        if (head[k].find_first_not_of("0123456789") != std::string::npos || head[k] == "0")
          in.fail("orbit sizes must be positive integers");
        sizes.push_back(std::stoul(head[k]));
      }
      std::sort(sizes.begin(), sizes.end());
      claim.gamma_orbits = sizes;
    } else if (head[0] == "gamma-pointwise") {
      for (std::size_t k = 1; k < head.size(); ++k) claim.gamma_pointwise.push_back(find(head[k]));
    } else {
      in.fail("unknown directive '" + head[0] + "'");
    }
  }
  if (!have_vars) throw InputError("claim file has no 'variables' line");
  return claim;
}

idealkit::Claim load_claim(const std::string& path) { return parse_claim(read_file(path)); }

}  // namespace walgebra::casefile
