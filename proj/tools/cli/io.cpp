#include "io.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

namespace dk::cli {

std::string fnv1a_hex(const std::string& data) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

namespace {

[[noreturn]] void parse_fail(const std::string& msg) { throw Error(ErrorCode::ParseError, msg); }

std::string trim(std::string s) {
  const auto b = s.find_first_not_of(" \t\n\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\n\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(trim(cur));
  return out;
}

int param_int(const Source& s, std::size_t i) {
  if (i >= s.params.size()) parse_fail("builtin " + s.name + " needs a parameter");
  try {
    std::size_t used = 0;
    int v = std::stoi(s.params[i], &used);
    if (used != s.params[i].size()) throw std::invalid_argument("trailing");
    return v;
  } catch (const std::exception&) {
    parse_fail("builtin " + s.name + ": bad integer parameter '" + s.params[i] + "'");
  }
}

[[noreturn]] void unknown_builtin(const Source& s, const std::string& kind) {
  throw Error(ErrorCode::UnknownBuiltin, "unknown " + kind + " builtin '" + s.spec + "'");
}

// Index of `key` among labels, also accepting a decimal index.
int lookup(const std::vector<std::string>& labels, const std::string& key, const std::string& where) {
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == key) return static_cast<int>(i);
  parse_fail(where + ": unknown label '" + key + "'");
}

std::pair<std::string, std::string> split_pair(const std::string& key, const std::string& where) {
  auto parts = split(key, ',');
  if (parts.size() != 2) parse_fail(where + ": expected a key of the form \"a,b\", got '" + key + "'");
  return {parts[0], parts[1]};
}

const json& require(const json& j, const std::string& key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) parse_fail(where + ": missing field \"" + key + "\"");
  return j.at(key);
}

SparseVector sparse_from(const json& j, const std::vector<std::string>& labels, const std::string& where) {
  SparseVector v;
  if (!j.is_object()) parse_fail(where + ": expected an object of label -> rational");
  for (const auto& [k, val] : j.items()) add_term(v, lookup(labels, k, where), json_rational(val, where));
  return v;
}

Matrix matrix_from(const json& j, const std::string& where) {
  if (!j.is_array()) parse_fail(where + ": expected a matrix (array of rows)");
  std::vector<std::vector<Rational>> rows;
  for (const auto& row : j) {
    if (!row.is_array()) parse_fail(where + ": matrix rows must be arrays");
    std::vector<Rational> r;
    for (const auto& v : row) r.push_back(json_rational(v, where));
    if (!rows.empty() && r.size() != rows[0].size()) parse_fail(where + ": ragged matrix");
    rows.push_back(std::move(r));
  }
  return Matrix::from_rows(rows);
}

}  // namespace

Source resolve(const std::string& spec, bool bare_is_builtin) {
  Source s;
  s.spec = spec;
  std::string body;
  if (spec.rfind("builtin:", 0) == 0) {
    body = spec.substr(8);
  } else if (bare_is_builtin && !std::filesystem::exists(spec)) {
    body = spec;
  } else {
    std::ifstream in(spec, std::ios::binary);
    if (!in) parse_fail("cannot read input file '" + spec + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    s.text = buf.str();
    s.digest = fnv1a_hex(s.text);
    return s;
  }
  s.builtin = true;
  s.digest = fnv1a_hex("builtin:" + body);
  auto open = body.find('(');
  if (open == std::string::npos) {
    s.name = trim(body);
  } else {
    if (body.back() != ')') parse_fail("malformed builtin '" + spec + "'");
    s.name = trim(body.substr(0, open));
    std::string inner = body.substr(open + 1, body.size() - open - 2);
    if (!trim(inner).empty()) s.params = split(inner, ',');
  }
  return s;
}

json parse_json(const Source& s) {
  try {
    return json::parse(s.text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1;
    for (std::size_t i = 0; i < std::min(e.byte, s.text.size()); ++i)
      if (s.text[i] == '\n') ++line;
    parse_fail(s.spec + ":" + std::to_string(line) + ": invalid JSON");
  }
}

Rational json_rational(const json& v, const std::string& where) {
  if (v.is_number_integer()) return Rational(std::to_string(v.get<long long>()));
  if (v.is_string()) {
    try {
      return parse_rational(v.get<std::string>());
    } catch (const Error& e) {
      parse_fail(where + ": " + e.what());
    }
  }
  parse_fail(where + ": expected a rational as a string \"p/q\" or an integer");
}

LieAlgebra load_lie(const Source& s) {
  LieAlgebra l;
  if (s.builtin) {
    if (s.name == "sl2") l = builtin::sl2();
    else if (s.name == "abelian") l = builtin::abelian(param_int(s, 0));
    else if (s.name == "heisenberg3") l = builtin::heisenberg3();
    else if (s.name == "iso21") l = builtin::iso21();
    else unknown_builtin(s, "Lie algebra");
  } else {
    json j = parse_json(s);
    std::vector<std::string> basis;
    for (const auto& b : require(j, "basis", s.spec)) basis.push_back(b.get<std::string>());
    l = LieAlgebra(basis);
    std::map<std::pair<int, int>, SparseVector> given;
    if (j.contains("brackets"))
      for (const auto& [key, val] : j.at("brackets").items()) {
        auto [a, b] = split_pair(key, s.spec + " brackets");
        given[{lookup(basis, a, s.spec), lookup(basis, b, s.spec)}] = sparse_from(val, basis, s.spec + " brackets");
      }
    for (const auto& [ij, v] : given) l.set_bracket(ij.first, ij.second, v);
    for (const auto& [ij, v] : given)
      if (!given.count({ij.second, ij.first}) && ij.first != ij.second)
        l.set_bracket(ij.second, ij.first, scaled(v, -1));
  }
  auto report = validate_lie(l);
  if (!report.ok()) throw ValidationFailure("Lie algebra " + s.spec, report);
  return l;
}

namespace {

GradedAlgebra gca_from_json(const json& j, const std::string& where, bool with_unit) {
  std::vector<GradedAlgebra::BasisElement> basis;
  std::vector<std::string> names;
  for (const auto& b : require(j, "basis", where)) {
    basis.push_back({require(b, "name", where).get<std::string>(), require(b, "degree", where).get<int>()});
    names.push_back(basis.back().name);
  }
  GradedAlgebra a(basis);
  std::map<std::pair<int, int>, SparseVector> given;
  if (j.contains("products"))
    for (const auto& [key, val] : j.at("products").items()) {
      auto [x, y] = split_pair(key, where + " products");
      given[{lookup(names, x, where), lookup(names, y, where)}] = sparse_from(val, names, where + " products");
    }
  std::optional<int> unit;
  if (with_unit) {
    if (j.contains("unit"))
      unit = lookup(names, j.at("unit").get<std::string>(), where);
    else
      for (std::size_t i = 0; i < names.size(); ++i)
        if (names[i] == "1" && basis[i].degree == 0) unit = static_cast<int>(i);
  }
  const int n = static_cast<int>(names.size());
  if (unit) {
    a.set_unit(*unit);
    for (int x = 0; x < n; ++x) {
      given.try_emplace({*unit, x}, SparseVector{{x, 1}});
      given.try_emplace({x, *unit}, SparseVector{{x, 1}});
    }
  }
  for (const auto& [xy, v] : given) a.set_product(xy.first, xy.second, v);
  for (const auto& [xy, v] : given)
    if (!given.count({xy.second, xy.first})) {
      const int sign = (a.degree(xy.first) * a.degree(xy.second)) % 2 ? -1 : 1;
      a.set_product(xy.second, xy.first, scaled(v, sign));
    }
  if (j.contains("differential")) {
    Matrix d(names.size(), names.size());
    for (const auto& [key, val] : j.at("differential").items()) {
      int c = lookup(names, key, where + " differential");
      for (const auto& [r, coef] : sparse_from(val, names, where + " differential"))
        d(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) = coef;
    }
    a.set_differential(d);
  }
  if (j.contains("integration")) {
    Vector f(names.size());
    for (const auto& [r, coef] : sparse_from(j.at("integration"), names, where + " integration"))
      f[static_cast<std::size_t>(r)] = coef;
    a.set_integration(f);
  }
  return a;
}

}  // namespace

GradedAlgebra load_gca(const Source& s) {
  GradedAlgebra a;
  if (s.builtin) {
    if (s.name == "torus_gca") a = builtin::torus_gca(param_int(s, 0));
    else if (s.name == "surface_gca") a = builtin::surface_gca(param_int(s, 0));
    else if (s.name == "interval_forms") a = builtin::interval_forms(param_int(s, 0));
    else unknown_builtin(s, "graded-commutative algebra");
  } else {
    a = gca_from_json(parse_json(s), s.spec, true);
  }
  auto report = validate_gca(a);
  if (!report.ok()) throw ValidationFailure("graded-commutative algebra " + s.spec, report);
  return a;
}

InvariantPairing load_pairing(const Source& s, const LieAlgebra& l) {
  InvariantPairing p;
  if (s.builtin) {
    if (s.name == "iso21" || s.name == "iso21_pairing") p = builtin::iso21_pairing();
    else if (s.name == "sl2_trace") p = builtin::sl2_trace_pairing();
    else unknown_builtin(s, "pairing");
  } else {
    p.gram = matrix_from(require(parse_json(s), "gram", s.spec), s.spec + " gram");
  }
  if (p.gram.rows() != l.dim() || p.gram.cols() != l.dim())
    throw Error(ErrorCode::TypeMismatch, "pairing size does not match the Lie algebra");
  auto report = validate_pairing(l, p);
  if (!report.ok()) {
    auto v = report.violations;
    if (!report.nondegenerate) v.add("degenerate", {});
    throw ValidationFailure("pairing " + s.spec, v);
  }
  return p;
}

ArtinianAlgebra load_artinian(const Source& s) {
  ArtinianAlgebra a;
  if (s.builtin) {
    if (s.name == "dual_numbers") a = builtin::dual_numbers();
    else if (s.name == "truncated_polynomial") a = builtin::truncated_polynomial(param_int(s, 0));
    else if (s.name == "scalars") a = ArtinianAlgebra::scalars();
    else unknown_builtin(s, "Artinian algebra");
  } else {
    json j = parse_json(s);
    json as_gca;
    as_gca["basis"] = json::array();
    std::vector<int> powers;
    for (const auto& b : require(j, "ideal_basis", s.spec)) {
      as_gca["basis"].push_back({{"name", require(b, "name", s.spec)}, {"degree", b.value("degree", 0)}});
      powers.push_back(require(b, "power", s.spec).get<int>());
    }
    if (j.contains("products")) as_gca["products"] = j.at("products");
    if (j.contains("differential")) as_gca["differential"] = j.at("differential");
    a = ArtinianAlgebra(gca_from_json(as_gca, s.spec, false), powers,
                        require(j, "nilpotency_order", s.spec).get<int>());
  }
  auto report = validate_artinian(a);
  if (!report.ok()) throw ValidationFailure("Artinian algebra " + s.spec, report);
  return a;
}

LieModule load_module(const std::string& spec, const LieAlgebra& l) {
  LieModule m;
  if (spec == "trivial") m = trivial_module(l);
  else if (spec == "adjoint") m = adjoint_module(l);
  else if (spec == "coadjoint") m = coadjoint_module(l);
  else if (spec == "defining") {
    if (!(l == builtin::sl2())) throw Error(ErrorCode::TypeMismatch, "defining module is only bundled for sl2");
    m = sl2_defining_module();
  } else {
    Source s = resolve(spec);
    json j = parse_json(s);
    m.dim = require(j, "dim", spec).get<std::size_t>();
    if (j.contains("labels"))
      for (const auto& x : j.at("labels")) m.labels.push_back(x.get<std::string>());
    const auto& action = require(j, "action", spec);
    for (std::size_t i = 0; i < l.dim(); ++i) {
      if (!action.contains(l.label(static_cast<int>(i))))
        parse_fail(spec + ": missing action of " + l.label(static_cast<int>(i)));
      m.action.push_back(matrix_from(action.at(l.label(static_cast<int>(i))), spec + " action"));
    }
  }
  auto report = validate_module(l, m);
  if (!report.ok()) throw ValidationFailure("Lie module " + spec, report);
  return m;
}

FiniteGroup load_group(const Source& s) {
  if (s.builtin) return builtin::group(s.name);
  json j = parse_json(s);
  if (j.contains("permutations")) {
    const int degree = require(j, "degree", s.spec).get<int>();
    std::vector<std::vector<int>> gens;
    for (const auto& g : j.at("permutations")) gens.push_back(g.get<std::vector<int>>());
    bool one_based = true;
    for (const auto& g : gens)
      for (int v : g) one_based = one_based && v >= 1;
    if (one_based)
      for (auto& g : gens)
        for (int& v : g) --v;
    return permutation_group(gens, degree);
  }
  const int order = require(j, "order", s.spec).get<int>();
  auto flat = require(j, "table", s.spec).get<std::vector<int>>();
  if (order < 1 || flat.size() != static_cast<std::size_t>(order) * static_cast<std::size_t>(order))
    parse_fail(s.spec + ": table must have order^2 entries");
  std::vector<std::vector<int>> table(static_cast<std::size_t>(order));
  for (int a = 0; a < order; ++a)
    table[static_cast<std::size_t>(a)].assign(flat.begin() + a * order, flat.begin() + (a + 1) * order);
  std::vector<std::string> labels;
  if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
  else
    for (int a = 0; a < order; ++a) labels.push_back(std::to_string(a));
  return FiniteGroup(labels, table);
}

Site load_site(const Source& s) {
  Site site;
  if (s.builtin) {
    if (s.name == "circle2") site = builtin::circle2();
    else if (s.name == "discrete2") site = builtin::discrete2();
    else unknown_builtin(s, "site");
  } else {
    json j = parse_json(s);
    std::vector<std::string> objects = require(j, "objects", s.spec).get<std::vector<std::string>>();
    for (const auto& o : objects) site.add_object(o);
    for (const auto& m : require(j, "morphisms", s.spec)) {
      int src = lookup(objects, require(m, "src", s.spec).get<std::string>(), s.spec);
      int dst = lookup(objects, require(m, "dst", s.spec).get<std::string>(), s.spec);
      site.add_arrow(require(m, "id", s.spec).get<std::string>(), src, dst);
    }
    for (std::size_t o = 0; o < objects.size(); ++o) {
      auto id = site.find_arrow("id_" + objects[o]);
      if (!id) id = site.add_arrow("id_" + objects[o], static_cast<int>(o), static_cast<int>(o));
      site.set_identity(static_cast<int>(o), *id);
    }
    auto arrow = [&](const std::string& id) {
      auto a = site.find_arrow(id);
      if (!a) parse_fail(s.spec + ": unknown morphism '" + id + "'");
      return *a;
    };
    if (j.contains("composition"))
      for (const auto& [key, val] : j.at("composition").items()) {
        auto [g, f] = split_pair(key, s.spec + " composition");
        site.set_composition(arrow(g), arrow(f), arrow(val.get<std::string>()));
      }
    if (j.contains("covers"))
      for (const auto& [obj, families] : j.at("covers").items())
        for (const auto& fam : families) {
          std::vector<int> ids;
          for (const auto& id : fam) ids.push_back(arrow(id.get<std::string>()));
          site.add_cover(lookup(objects, obj, s.spec), ids);
        }
    for (std::size_t o = 0; o < objects.size(); ++o) {
      bool has_identity_cover = false;
      for (const auto& c : site.covers(static_cast<int>(o)))
        if (c == std::vector<int>{site.identity(static_cast<int>(o))}) has_identity_cover = true;
      if (!has_identity_cover) site.add_cover(static_cast<int>(o), {site.identity(static_cast<int>(o))});
    }
    if (j.contains("pullbacks"))
      for (const auto& [key, val] : j.at("pullbacks").items()) {
        auto [fs, gs] = split_pair(key, s.spec + " pullbacks");
        const int f = arrow(fs), g = arrow(gs);
        std::vector<PullbackComponent> comps;
        auto unique_arrow = [&](int from, int to) {
          auto h = site.hom(from, to);
          if (h.size() != 1) parse_fail(s.spec + ": pullback projection to " + objects[static_cast<std::size_t>(to)] + " is not unique");
          return h[0];
        };
        auto add_component = [&](const json& c) {
          if (c.is_string()) {
            int obj = lookup(objects, c.get<std::string>(), s.spec);
            comps.push_back({obj, unique_arrow(obj, site.arrow(f).src), unique_arrow(obj, site.arrow(g).src)});
          } else {
            comps.push_back({lookup(objects, require(c, "object", s.spec).get<std::string>(), s.spec),
                             arrow(require(c, "left", s.spec).get<std::string>()),
                             arrow(require(c, "right", s.spec).get<std::string>())});
          }
        };
        if (val.is_array())
          for (const auto& c : val) add_component(c);
        else if (!val.is_null())
          add_component(val);
        site.set_pullback(f, g, comps);
      }
    // Pullbacks against identities are forced; fill them in when absent.
    for (std::size_t a = 0; a < site.arrow_count(); ++a) {
      const int f = static_cast<int>(a);
      const int id = site.identity(site.arrow(f).dst);
      const int src = site.arrow(f).src;
      if (!site.has_pullback(f, id)) site.set_pullback(f, id, {{src, site.identity(src), f}});
      if (!site.has_pullback(id, f)) site.set_pullback(id, f, {{src, f, site.identity(src)}});
    }
    if (j.contains("points")) {
      auto points = j.at("points").get<std::map<std::string, std::vector<std::string>>>();
      std::vector<std::string> all;
      for (const auto& [o, pts] : points)
        for (const auto& p : pts)
          if (std::find(all.begin(), all.end(), p) == all.end()) all.push_back(p);
      std::sort(all.begin(), all.end());
      std::vector<std::vector<int>> sets(objects.size());
      for (std::size_t o = 0; o < objects.size(); ++o) {
        if (!points.count(objects[o])) parse_fail(s.spec + ": missing points of " + objects[o]);
        for (const auto& p : points.at(objects[o])) sets[o].push_back(lookup(all, p, s.spec));
        std::sort(sets[o].begin(), sets[o].end());
      }
      site.set_points(all, sets);
    }
  }
  auto report = validate_site(site);
  if (!report.ok()) throw ValidationFailure("site " + s.spec, report);
  return site;
}

namespace {

FiniteGroupoid groupoid_from_json(const json& j, const std::string& where) {
  if (j.contains("group")) {
    FiniteGroup g = load_group(resolve(j.at("group").get<std::string>(), true));
    return delooping(g.labels(), g.table(), g.identity());
  }
  if (j.contains("discrete")) return discrete_groupoid(j.at("discrete").get<std::vector<std::string>>());
  FiniteGroupoid g;
  auto objects = require(j, "objects", where).get<std::vector<std::string>>();
  for (const auto& o : objects) g.add_object(o);
  std::vector<std::string> ids;
  for (const auto& m : require(j, "morphisms", where)) {
    ids.push_back(require(m, "id", where).get<std::string>());
    g.add_morphism(lookup(objects, require(m, "src", where).get<std::string>(), where),
                   lookup(objects, require(m, "dst", where).get<std::string>(), where), ids.back());
  }
  for (const auto& [o, m] : require(j, "identities", where).items())
    g.set_identity(lookup(objects, o, where), lookup(ids, m.get<std::string>(), where));
  for (const auto& [m, inv] : require(j, "inverses", where).items())
    g.set_inverse(lookup(ids, m, where), lookup(ids, inv.get<std::string>(), where));
  for (const auto& [key, val] : require(j, "composition", where).items()) {
    auto [a, b] = split_pair(key, where);
    g.set_composition(lookup(ids, a, where), lookup(ids, b, where), lookup(ids, val.get<std::string>(), where));
  }
  g.finalize();
  return g;
}

}  // namespace

Prestack load_prestack(const std::string& spec, const Site& site) {
  Prestack x;
  auto colon = spec.find(':');
  std::string kind = colon == std::string::npos ? spec : spec.substr(0, colon);
  std::string arg = colon == std::string::npos ? "" : spec.substr(colon + 1);
  if (kind == "builtin") {
    return load_prestack(arg, site);
  } else if (kind == "constantBG") {
    FiniteGroup g = builtin::group(arg);
    x = constant_prestack(site, delooping(g.labels(), g.table(), g.identity()));
  } else if (kind == "functions") {
    Source s;
    s.name = kind;
    s.spec = spec;
    s.params = {arg};
    x = function_prestack(site, param_int(s, 0));
  } else if (kind == "representable") {
    auto o = site.find_object(arg);
    if (!o) throw Error(ErrorCode::InvalidInput, "unknown site object '" + arg + "'");
    x = representable_prestack(site, *o);
  } else if (std::filesystem::exists(spec)) {
    Source s = resolve(spec);
    json j = parse_json(s);
    const auto& values = require(j, "values", spec);
    for (std::size_t o = 0; o < site.object_count(); ++o) {
      const auto& label = site.object_label(static_cast<int>(o));
      if (!values.contains(label)) parse_fail(spec + ": missing value for " + label);
      x.values.push_back(std::make_shared<const FiniteGroupoid>(groupoid_from_json(values.at(label), spec)));
    }
    const json empty = json::object();
    const auto& restr = j.contains("restrictions") ? j.at("restrictions") : empty;
    for (std::size_t a = 0; a < site.arrow_count(); ++a) {
      const auto& arr = site.arrow(static_cast<int>(a));
      const auto& from = *x.values[static_cast<std::size_t>(arr.dst)];
      const auto& to = *x.values[static_cast<std::size_t>(arr.src)];
      if (!restr.contains(arr.id)) {
        if (arr.src == arr.dst && static_cast<int>(a) == site.identity(arr.src)) {
          x.restrictions.push_back(identity_functor(from));
          continue;
        }
        parse_fail(spec + ": missing restriction along " + arr.id);
      }
      const auto& fj = restr.at(arr.id);
      GroupoidFunctor F;
      auto labels_of = [](const FiniteGroupoid& g, bool objects) {
        std::vector<std::string> out;
        const std::size_t n = objects ? g.object_count() : g.morphism_count();
        for (std::size_t i = 0; i < n; ++i)
          out.push_back(objects ? g.object_label(static_cast<int>(i)) : g.morphism(static_cast<int>(i)).label);
        return out;
      };
      auto from_objs = labels_of(from, true), to_objs = labels_of(to, true);
      auto from_mors = labels_of(from, false), to_mors = labels_of(to, false);
      const auto& om = require(fj, "objects", spec);
      for (const auto& o : from_objs) {
        if (!om.contains(o)) parse_fail(spec + ": restriction " + arr.id + " misses object " + o);
        F.object_map.push_back(lookup(to_objs, om.at(o).get<std::string>(), spec));
      }
      const auto& mm = require(fj, "morphisms", spec);
      for (const auto& m : from_mors) {
        if (!mm.contains(m)) parse_fail(spec + ": restriction " + arr.id + " misses morphism " + m);
        F.morphism_map.push_back(lookup(to_mors, mm.at(m).get<std::string>(), spec));
      }
      x.restrictions.push_back(std::move(F));
    }
  } else {
    throw Error(ErrorCode::UnknownBuiltin, "unknown prestack '" + spec + "'");
  }
  auto report = validate_prestack(site, x);
  if (!report.ok()) throw ValidationFailure("prestack " + spec, report);
  return x;
}

PrefactData load_prefact(const Source& s) {
  PrefactData d;
  if (s.builtin) {
    if (s.name == "constant") {
      // Obs(U) = k on two disjoint opens inside V, all maps the identification k (x) k = k.
      d.opens = {"U1", "U2", "V"};
      d.disjoint = {{false, true, false}, {true, false, false}, {false, false, false}};
      d.contained = {{true, false, true}, {false, true, true}, {false, false, true}};
      for (int i = 0; i < 3; ++i) {
        GradedVectorSpace sp;
        sp.set_component(0, {"1"});
        d.obs.emplace_back(sp);
      }
      Matrix one = Matrix::identity(1);
      d.maps[{{0}, 2}] = one;
      d.maps[{{1}, 2}] = one;
      d.maps[{{0, 1}, 2}] = one;
      d.maps[{{1, 0}, 2}] = one;
    } else if (s.name == "sign_flip") {
      // Obs(U_i) = k in degree 1; the (U2,U1) map equals the Koszul-swapped (U1,U2)
      // map up to a sign, breaking invariance.
      d.opens = {"U1", "U2", "V"};
      d.disjoint = {{false, true, false}, {true, false, false}, {false, false, false}};
      d.contained = {{true, false, true}, {false, true, true}, {false, false, true}};
      for (int i = 0; i < 2; ++i) {
        GradedVectorSpace sp;
        sp.set_component(1, {"u" + std::to_string(i + 1)});
        d.obs.emplace_back(sp);
      }
      GradedVectorSpace v;
      v.set_component(1, {"a", "b"});
      v.set_component(2, {"ab"});
      d.obs.emplace_back(v);
      d.maps[{{0}, 2}] = Matrix::from_rows({{1}, {0}, {0}});
      d.maps[{{1}, 2}] = Matrix::from_rows({{0}, {1}, {0}});
      d.maps[{{0, 1}, 2}] = Matrix::from_rows({{0}, {0}, {1}});
      d.maps[{{1, 0}, 2}] = Matrix::from_rows({{0}, {0}, {1}});
    } else {
      unknown_builtin(s, "prefactorization data");
    }
  } else {
    json j = parse_json(s);
    d.opens = require(j, "opens", s.spec).get<std::vector<std::string>>();
    const std::size_t n = d.opens.size();
    d.disjoint.assign(n, std::vector<bool>(n, false));
    d.contained.assign(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) d.contained[i][i] = true;
    auto idx = [&](const json& v) { return static_cast<std::size_t>(lookup(d.opens, v.get<std::string>(), s.spec)); };
    if (j.contains("disjoint"))
      for (const auto& p : j.at("disjoint")) {
        d.disjoint[idx(p.at(0))][idx(p.at(1))] = true;
        d.disjoint[idx(p.at(1))][idx(p.at(0))] = true;
      }
    if (j.contains("contained"))
      for (const auto& p : j.at("contained")) d.contained[idx(p.at(0))][idx(p.at(1))] = true;
    const auto& obs = require(j, "obs", s.spec);
    for (const auto& o : d.opens) {
      const auto& oj = require(obs, o, s.spec + " obs");
      GradedVectorSpace sp;
      for (const auto& [deg, labels] : require(oj, "degrees", s.spec).items())
        sp.set_component(std::stoi(deg), labels.get<std::vector<std::string>>());
      CochainComplex c(sp);
      if (oj.contains("differentials"))
        for (const auto& [deg, m] : oj.at("differentials").items())
          c.set_differential(std::stoi(deg), matrix_from(m, s.spec + " differential"));
      d.obs.push_back(std::move(c));
    }
    for (const auto& m : require(j, "maps", s.spec)) {
      std::vector<int> fam;
      for (const auto& u : require(m, "family", s.spec)) fam.push_back(static_cast<int>(idx(u)));
      d.maps[{fam, static_cast<int>(idx(require(m, "target", s.spec)))}] = matrix_from(require(m, "matrix", s.spec), s.spec);
    }
  }
  auto report = validate_prefact(d);
  if (!report.ok()) throw ValidationFailure("prefactorization data " + s.spec, report);
  return d;
}

ObsModel load_obs_model(const Source& s) {
  ObsModel m;
  json j = parse_json(s);
  for (const auto& p : require(j, "patches", s.spec))
    m.patches.push_back({require(p, "name", s.spec).get<std::string>(), require(p, "dim", s.spec).get<int>()});
  if (j.contains("unions"))
    for (const auto& u : j.at("unions"))
      m.unions.push_back({require(u, "name", s.spec).get<std::string>(),
                          require(u, "patches", s.spec).get<std::vector<std::string>>()});
  m.degree_bound = j.value("degree_bound", 1);
  return m;
}

namespace {

std::vector<std::string> coefficient_names(const TensorContext& ctx) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < ctx.coefficients().dim(); ++i) out.push_back(ctx.coefficients().name(static_cast<int>(i)));
  return out;
}

void add_named_term(Element& e, const TensorContext& ctx, const Rational& value, const std::string& coef,
                    const std::string& form, const std::string& lie, const std::string& where) {
  const auto& g = ctx.dgla();
  auto f = g.forms().index_of(form);
  if (!f) parse_fail(where + ": unknown form '" + form + "'");
  int l = lookup(g.lie().basis(), lie, where);
  int c = 0;
  if (!coef.empty()) c = lookup(coefficient_names(ctx), coef, where);
  else if (!ctx.coefficients().is_scalar()) parse_fail(where + ": term needs a coefficient");
  add_term(e, {g.index(*f, l), c}, value);
}

}  // namespace

Element parse_element(const std::string& text, const TensorContext& ctx) {
  const std::string where = "element '" + text + "'";
  std::string flat;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) flat += c;
  // Split into signed terms at top-level + and -, leaving signs inside
  // parentheses and after '*', '/' or '^' alone.
  std::vector<std::pair<int, std::string>> terms;
  int sign = 1, depth = 0;
  std::string cur;
  bool have_sign = false;
  for (std::size_t i = 0; i < flat.size(); ++i) {
    const char c = flat[i];
    if (c == '(') ++depth;
    if (c == ')') --depth;
    const bool boundary = depth == 0 && (c == '+' || c == '-') &&
                          (cur.empty() || (cur.back() != '*' && cur.back() != '/' && cur.back() != '^'));
    if (!boundary) {
      cur += c;
      continue;
    }
    if (!cur.empty()) {
      terms.emplace_back(sign, cur);
      cur.clear();
      sign = 1;
      have_sign = false;
    } else if (have_sign && !terms.empty()) {
      parse_fail(where + ": repeated operator");
    }
    if (c == '-') sign = -sign;
    have_sign = true;
  }
  if (depth != 0) parse_fail(where + ": unbalanced parentheses");
  if (!cur.empty()) terms.emplace_back(sign, cur);
  else if (have_sign) parse_fail(where + ": dangling operator");

  Element e;
  for (const auto& [term_sign, tok] : terms) {
    if (tok == "0") continue;
    auto x = tok.find("(x)");
    if (x == std::string::npos) parse_fail(where + ": term '" + tok + "' lacks form(x)lie");
    // Form names may contain '*' (interval forms such as t*dt): take the
    // longest '*'-suffix of the prefix that names a form.
    const std::string prefix = tok.substr(0, x);
    std::size_t cut = 0;
    while (cut != std::string::npos && !ctx.dgla().forms().index_of(prefix.substr(cut))) {
      cut = prefix.find('*', cut);
      if (cut != std::string::npos) ++cut;
    }
    if (cut == std::string::npos) cut = prefix.rfind('*') == std::string::npos ? 0 : prefix.rfind('*') + 1;
    std::vector<std::string> parts;
    if (cut > 0) parts = split(prefix.substr(0, cut - 1), '*');
    const std::string last = prefix.substr(cut) + tok.substr(x);
    x = last.find("(x)");
    Rational value = term_sign;
    std::string coef;
    for (const auto& p : parts) {
      if (!p.empty() && p.find_first_not_of("0123456789/-") == std::string::npos)
        value *= parse_rational(p);
      else if (coef.empty())
        coef = p;
      else
        parse_fail(where + ": more than one coefficient in '" + tok + "'");
    }
    if (coef.empty() && ctx.coefficients().is_scalar()) coef = "1";
    add_named_term(e, ctx, value, coef, last.substr(0, x), last.substr(x + 3), where);
  }
  return e;
}

namespace {

Element element_from_json(const json& j, const TensorContext& ctx, const std::string& where) {
  if (j.is_string()) return parse_element(j.get<std::string>(), ctx);
  const json& terms = j.is_object() ? require(j, "terms", where) : j;
  Element e;
  for (const auto& t : terms) {
    std::string coef = t.value("coef", std::string());
    if (coef.empty() && ctx.coefficients().is_scalar()) coef = "1";
    add_named_term(e, ctx, t.contains("value") ? json_rational(t.at("value"), where) : Rational(1), coef,
                   require(t, "form", where).get<std::string>(), require(t, "lie", where).get<std::string>(), where);
  }
  return e;
}

}  // namespace

Element load_element(const std::string& spec, const TensorContext& ctx) {
  if (spec.size() > 5 && spec.substr(spec.size() - 5) == ".json") {
    Source s = resolve(spec);
    return element_from_json(parse_json(s), ctx, spec);
  }
  return parse_element(spec, ctx);
}

PolyPath load_path(const Source& s, const TensorContext& ctx) {
  json j = parse_json(s);
  PolyPath p;
  for (const auto& c : require(j, "a0", s.spec)) p.a0.push_back(element_from_json(c, ctx, s.spec));
  for (const auto& c : require(j, "a1", s.spec)) p.a1.push_back(element_from_json(c, ctx, s.spec));
  return p;
}

json to_json(const ValidationReport& r) {
  json out = json::array();
  for (const auto& v : r.violations) {
    json item{{"kind", v.kind}, {"indices", v.indices}};
    if (!v.detail.empty()) item["detail"] = v.detail;
    out.push_back(item);
  }
  return out;
}

json to_json(const Element& e, const TensorContext& ctx) {
  json out = json::array();
  for (const auto& [k, v] : e)
    out.push_back({{"term", ctx.label(k)}, {"value", to_string(v)}});
  return out;
}

json to_json(const Matrix& m) {
  json out = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_string(m(r, c)));
    out.push_back(row);
  }
  return out;
}

std::string element_string(const Element& e, const TensorContext& ctx) {
  if (e.empty()) return "0";
  std::string s;
  for (const auto& [k, v] : e) {
    Rational a = abs(v);
    if (s.empty())
      s += sgn(v) < 0 ? "-" : "";
    else
      s += sgn(v) < 0 ? " - " : " + ";
    if (a != 1) s += to_string(a) + "*";
    s += ctx.label(k);
  }
  return s;
}

}  // namespace dk::cli
