#include "cli.hpp"

#include <algorithm>
#include <functional>
#include <memory>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "deformkit/ce.hpp"
#include "deformkit/chern_simons.hpp"
#include "deformkit/descent.hpp"
#include "deformkit/holonomy.hpp"
#include "deformkit/simplicial.hpp"
#include "io.hpp"

namespace dk::cli {

namespace {

enum class Status { Ok, Fail, Error };

const char* status_name(Status s) {
  switch (s) {
    case Status::Ok: return "ok";
    case Status::Fail: return "fail";
    case Status::Error: return "error";
  }
  return "error";
}

struct Outcome {
  Status status = Status::Ok;
  json payload = json::object();
};

// Everything a handler can read; one instance per run.
struct Options {
  std::string lie, gca, pairing, artinian, module = "trivial", group, site, prestack, prefact, model;
  std::string element, gauge_x, path, map, rep, object, constant, convention = "standard";
  bool homology = false, dgla = false, list = false;
  int max_degree = -1, max_n = 5, order = 2, target = -1, genus = 1, degree_bound = 8, cover = -1;
  std::uint64_t budget = 100000000ull;
  unsigned threads = 0;
  std::uint64_t seed = 20240601ull;
};

class Session {
 public:
  explicit Session(const Options& o) : opt(o) {}

  const Options& opt;
  json inputs = json::object();

  Source source(const std::string& role, const std::string& spec, bool bare_is_builtin = true) {
    Source s = resolve(spec, bare_is_builtin);
    inputs[role] = {{"spec", spec}, {"digest", s.digest}};
    return s;
  }
  void literal(const std::string& role, const std::string& text) {
    inputs[role] = {{"spec", text}, {"digest", fnv1a_hex(text)}};
  }
};

[[noreturn]] void missing(const std::string& what) {
  throw Error(ErrorCode::InvalidInput, "missing required option --" + what);
}

const std::string& need(const std::string& value, const std::string& name) {
  if (value.empty()) missing(name);
  return value;
}

json dims_json(const std::map<int, std::size_t>& dims) {
  json d = json::object();
  for (const auto& [deg, n] : dims) d[std::to_string(deg)] = n;
  return d;
}

// Shared setup for the deformation verbs.
struct DeformationInputs {
  Dgla dgla;
  ArtinianAlgebra coeffs;
};

DeformationInputs deformation_inputs(Session& s, const std::string& default_lie = {}) {
  const std::string& lie_spec = s.opt.lie.empty() ? default_lie : s.opt.lie;
  LieAlgebra lie = load_lie(s.source("lie", need(lie_spec, "lie")));
  GradedAlgebra forms = load_gca(s.source("gca", need(s.opt.gca, "gca")));
  ArtinianAlgebra a = s.opt.artinian.empty() ? ArtinianAlgebra::scalars()
                                              : load_artinian(s.source("artinian", s.opt.artinian));
  return {build_dgla(std::move(forms), std::move(lie)), std::move(a)};
}

Element element_input(Session& s, const std::string& role, const std::string& spec, const TensorContext& ctx) {
  need(spec, role);
  if (spec.size() > 5 && spec.substr(spec.size() - 5) == ".json")
    s.source(role, spec, false);
  else
    s.literal(role, spec);
  return load_element(spec, ctx);
}

json sparse_json(const SparseVector& v, const Dgla& g) {
  json out = json::array();
  for (const auto& [i, c] : v) out.push_back({{"term", g.label(i)}, {"value", to_string(c)}});
  return out;
}

// ---- check ----------------------------------------------------------------

Outcome cmd_check(Session& s) {
  Outcome out;
  json items = json::array();
  bool any = false;
  auto attempt = [&](const std::string& kind, const std::string& spec, const std::function<json()>& load) {
    if (spec.empty()) return;
    any = true;
    json item{{"kind", kind}, {"input", spec}};
    try {
      item["summary"] = load();
      item["valid"] = true;
    } catch (const ValidationFailure& e) {
      item["valid"] = false;
      item["violations"] = to_json(e.report());
      out.status = Status::Fail;
    }
    items.push_back(item);
  };
  const Options& o = s.opt;
  std::optional<LieAlgebra> lie;
  attempt("lie", o.lie, [&] {
    lie = load_lie(s.source("lie", o.lie));
    return json{{"dim", lie->dim()}};
  });
  std::optional<GradedAlgebra> gca;
  attempt("gca", o.gca, [&] {
    gca = load_gca(s.source("gca", o.gca));
    return json{{"dims", dims_json(gca->component_dims())}};
  });
  if (lie) {
    if (!o.pairing.empty())
      attempt("pairing", o.pairing, [&] {
        load_pairing(s.source("pairing", o.pairing), *lie);
        return json{{"nondegenerate", true}};
      });
    if (o.module != "trivial")
      attempt("module", o.module, [&] {
        return json{{"dim", load_module(o.module, *lie).dim}};
      });
    if (o.dgla && gca)
      attempt("dgla", o.gca + " (x) " + o.lie, [&] {
        Dgla g(*gca, *lie);
        auto report = validate_dgla(g);
        if (!report.ok()) throw ValidationFailure("dgla", report);
        return json{{"dims", dims_json(g.component_dims())}};
      });
  } else if (!o.pairing.empty() || o.dgla) {
    missing("lie");
  }
  attempt("artinian", o.artinian, [&] {
    auto a = load_artinian(s.source("artinian", o.artinian));
    return json{{"dim", a.dim()}, {"nilpotency_order", a.nilpotency_order().value_or(0)}};
  });
  attempt("group", o.group, [&] {
    auto g = load_group(s.source("group", o.group));
    return json{{"order", g.order()}, {"conjugacy_classes", conjugacy_class_count(g)}};
  });
  std::optional<Site> site;
  attempt("site", o.site, [&] {
    site = load_site(s.source("site", o.site));
    return json{{"objects", site->object_count()}, {"arrows", site->arrow_count()}};
  });
  if (!o.prestack.empty()) {
    if (!site) missing("site");
    attempt("prestack", o.prestack, [&] {
      s.literal("prestack", o.prestack);
      auto x = load_prestack(o.prestack, *site);
      return json{{"values", x.values.size()}};
    });
  }
  attempt("prefact", o.prefact, [&] {
    auto d = load_prefact(s.source("prefact", o.prefact));
    return json{{"opens", d.opens.size()}, {"maps", d.maps.size()}};
  });
  if (!any) throw Error(ErrorCode::InvalidInput, "check needs at least one input option");
  out.payload["objects"] = items;
  return out;
}

// ---- ce -------------------------------------------------------------------

Outcome cmd_ce(Session& s) {
  CeSpec spec;
  spec.lie = load_lie(s.source("lie", need(s.opt.lie, "lie")));
  s.literal("coeffs", s.opt.module);
  spec.module = load_module(s.opt.module, spec.lie);
  spec.direction = s.opt.homology ? CeDirection::Homology : CeDirection::Cohomology;
  if (s.opt.max_degree >= 0) spec.max_degree = s.opt.max_degree;
  auto dims = s.opt.homology ? lie_homology(spec) : lie_cohomology(spec);
  Outcome out;
  json list = json::array();
  for (const auto& [deg, n] : dims) list.push_back(n);
  out.payload = {{"direction", s.opt.homology ? "homology" : "cohomology"},
                 {"lie_dim", spec.lie.dim()},
                 {"module_dim", spec.module.dim},
                 {"dims", list},
                 {"by_degree", dims_json(dims)}};
  return out;
}

// ---- mc / cs / cartan ---------------------------------------------------------

Outcome cmd_mc_defect(Session& s) {
  auto in = deformation_inputs(s);
  TensorContext ctx(in.dgla, in.coeffs);
  Element alpha = element_input(s, "element", s.opt.element, ctx);
  Element d = mc_defect(ctx, alpha);
  Outcome out;
  out.payload = {{"element", element_string(alpha, ctx)},
                 {"defect", element_string(d, ctx)},
                 {"defect_terms", to_json(d, ctx)},
                 {"is_mc", d.empty()}};
  return out;
}

Outcome cmd_mc_tangent(Session& s) {
  auto in = deformation_inputs(s);
  auto t = mc_tangent(in.dgla);
  json basis = json::array();
  const auto deg1 = in.dgla.basis_in_degree(1);
  for (const auto& v : t.z1_basis) {
    SparseVector sv;
    for (std::size_t i = 0; i < v.size(); ++i)
      if (!is_zero(v[i])) sv[deg1[i]] = v[i];
    basis.push_back(sparse_json(sv, in.dgla));
  }
  Outcome out;
  out.payload = {{"dim_g1", deg1.size()}, {"dim_z1", t.dim_z1}, {"dim_h1", t.dim_h1}, {"z1_basis", basis}};
  return out;
}

Outcome cmd_mc_lift(Session& s) {
  auto in = deformation_inputs(s);
  TensorContext ctx(in.dgla, in.coeffs);
  Element alpha = element_input(s, "element", s.opt.element, ctx);
  auto r = mc_lift(ctx, alpha, s.opt.order);
  Outcome out;
  out.status = r.obstructed ? Status::Fail : Status::Ok;
  out.payload = {{"order", s.opt.order},
                 {"obstructed", r.obstructed},
                 {"defect", element_string(r.defect, ctx)},
                 {"obstruction", element_string(r.obstruction, ctx)},
                 {"correction", element_string(r.correction, ctx)},
                 {"lifted", element_string(r.lifted, ctx)}};
  return out;
}

Outcome cmd_mc_gauge(Session& s) {
  auto in = deformation_inputs(s);
  TensorContext ctx(in.dgla, in.coeffs);
  Element x = element_input(s, "gauge", s.opt.gauge_x, ctx);
  Element alpha = element_input(s, "element", s.opt.element, ctx);
  Element g = gauge_act(ctx, x, alpha);
  Element before = mc_defect(ctx, alpha);
  Element after = mc_defect(ctx, g);
  Outcome out;
  out.payload = {{"gauged", element_string(g, ctx)},
                 {"gauged_terms", to_json(g, ctx)},
                 {"input_is_mc", before.empty()},
                 {"gauged_is_mc", after.empty()}};
  return out;
}

Outcome cmd_mc_path(Session& s) {
  auto in = deformation_inputs(s);
  TensorContext ctx(in.dgla, in.coeffs);
  PolyPath p = load_path(s.source("path", need(s.opt.path, "path"), false), ctx);
  auto r = gauge_path_check(ctx, p, s.opt.degree_bound);
  auto eq = [&](const PathEquation& e) {
    json j{{"holds", e.holds}, {"residual", element_string(e.residual, ctx)}};
    j["first_failing_power"] = e.first_failing_power ? json(*e.first_failing_power) : json(nullptr);
    return j;
  };
  Outcome out;
  out.status = r.ok() ? Status::Ok : Status::Fail;
  out.payload = {{"flatness", eq(r.flatness)}, {"homotopy", eq(r.homotopy)}};
  return out;
}

CyclicStructure cyclic_inputs(Session& s) {
  LieAlgebra lie = load_lie(s.source("lie", need(s.opt.lie, "lie")));
  InvariantPairing p = load_pairing(s.source("pairing", need(s.opt.pairing, "pairing")), lie);
  GradedAlgebra forms = load_gca(s.source("gca", need(s.opt.gca, "gca")));
  CyclicStructure c{build_dgla(std::move(forms), std::move(lie)), std::move(p)};
  require_cs_model(c);
  return c;
}

Outcome cmd_cs(Session& s, bool gradient) {
  CyclicStructure c = cyclic_inputs(s);
  const ArtinianAlgebra k = ArtinianAlgebra::scalars();
  TensorContext ctx(c.dgla, k);
  Element alpha = element_input(s, "element", s.opt.element, ctx);
  ctx.require_degree(alpha, 1, "Chern-Simons argument");
  SparseVector a = ctx.to_dgla(alpha);
  Outcome out;
  if (!gradient) {
    out.payload = {{"value", to_string(cs_value(c, a))}};
    return out;
  }
  Vector grad = cs_gradient(c, a);
  const auto deg1 = c.dgla.basis_in_degree(1);
  SparseVector gv;
  for (std::size_t i = 0; i < grad.size(); ++i)
    if (!is_zero(grad[i])) gv[deg1[i]] = grad[i];
  out.payload = {{"gradient", sparse_json(gv, c.dgla)},
                 {"critical", gv.empty()},
                 {"is_mc", mc_defect(ctx, alpha).empty()}};
  return out;
}

Outcome cmd_cartan(Session& s) {
  auto in = deformation_inputs(s, "builtin:iso21");
  TensorContext ctx(in.dgla, in.coeffs);
  Element alpha = element_input(s, "element", s.opt.element, ctx);
  auto r = split_cartan(ctx, alpha);
  Outcome out;
  out.status = r.consistent ? Status::Ok : Status::Fail;
  out.payload = {{"omega", element_string(r.omega, ctx)},
                 {"e", element_string(r.e, ctx)},
                 {"curvature", element_string(r.curvature, ctx)},
                 {"torsion", element_string(r.torsion, ctx)},
                 {"consistent", r.consistent}};
  return out;
}

// ---- simplicial ---------------------------------------------------------------

Outcome cmd_simplicial_verify(Session& s) {
  CofaceConvention conv;
  if (s.opt.convention == "standard") conv = CofaceConvention::Standard;
  else if (s.opt.convention == "literal") conv = CofaceConvention::Literal;
  else throw Error(ErrorCode::InvalidInput, "convention must be standard or literal");
  auto r = verify_simplicial_identities(s.opt.max_n, conv);
  json failures = json::array();
  for (const auto& f : r.failures) failures.push_back({{"family", f.family}, {"n", f.n}, {"i", f.i}, {"j", f.j}});
  Outcome out;
  out.status = r.ok() ? Status::Ok : Status::Fail;
  out.payload = {{"header", r.header},
                 {"convention", s.opt.convention},
                 {"max_n", r.max_n},
                 {"checked_per_family", r.checked_per_family},
                 {"total_checked", r.total_checked},
                 {"failures", failures}};
  return out;
}

Outcome cmd_simplicial_factor(Session& s) {
  OrdinalMap f;
  std::stringstream in(need(s.opt.map, "map"));
  std::string tok;
  while (std::getline(in, tok, ',')) {
    try {
      f.values.push_back(std::stoi(tok));
    } catch (const std::exception&) {
      throw Error(ErrorCode::ParseError, "bad ordinal map '" + s.opt.map + "'");
    }
  }
  s.literal("map", s.opt.map);
  if (f.values.empty()) throw Error(ErrorCode::ParseError, "empty ordinal map");
  f.source = static_cast<int>(f.values.size()) - 1;
  f.target = s.opt.target >= 0 ? s.opt.target : f.values.back();
  validate_ordinal_map(f);
  auto em = epi_mono_factor(f);
  json sg = json::array(), cf = json::array();
  for (const auto& g : em.codegeneracies) sg.push_back(to_string(g));
  for (const auto& g : em.cofaces) cf.push_back(to_string(g));
  const bool round_trip = evaluate(em, f.source) == f;
  Outcome out;
  out.status = round_trip ? Status::Ok : Status::Fail;
  out.payload = {{"source", f.source}, {"target", f.target}, {"codegeneracies", sg}, {"cofaces", cf},
                 {"round_trip", round_trip}};
  return out;
}

// ---- stacks ---------------------------------------------------------------------

json verdict_json(const WeakEquivalenceVerdict& v) {
  json j{{"fully_faithful", v.fully_faithful}, {"essentially_surjective", v.essentially_surjective}};
  if (v.hom_witness) j["hom_witness"] = {v.hom_witness->first, v.hom_witness->second};
  if (v.unreachable_object) j["unreachable_object"] = *v.unreachable_object;
  return j;
}

Outcome cmd_stack_check(Session& s) {
  Site site = load_site(s.source("site", need(s.opt.site, "site")));
  s.literal("prestack", need(s.opt.prestack, "prestack"));
  Prestack x = load_prestack(s.opt.prestack, site);
  auto r = descent_check(site, x, s.opt.threads);
  json covers = json::array();
  for (const auto& c : r.covers)
    covers.push_back({{"object", c.object},
                      {"cover", c.cover},
                      {"value_pi0", c.value_pi0},
                      {"holim_objects", c.holim_objects},
                      {"holim_pi0", c.holim_pi0},
                      {"descends", c.verdict.ok()},
                      {"verdict", verdict_json(c.verdict)}});
  Outcome out;
  out.status = r.ok() ? Status::Ok : Status::Fail;
  out.payload = {{"is_stack", r.ok()}, {"covers", covers}};
  return out;
}

json holim_json(const Holim& h) {
  auto p = pi0(h.groupoid);
  return {{"objects", h.groupoid.object_count()},
          {"morphisms", h.groupoid.morphism_count()},
          {"pi0", p.count},
          {"representatives", p.representatives}};
}

Outcome cmd_holim(Session& s) {
  Outcome out;
  if (!s.opt.constant.empty()) {
    FiniteGroup g = load_group(s.source("constant", s.opt.constant));
    FiniteGroupoid value = delooping(g.labels(), g.table(), g.identity());
    Holim h = holim2(constant_diagram(value));
    GroupoidFunctor F;
    for (std::size_t o = 0; o < value.object_count(); ++o)
      F.object_map.push_back(h.object_index.at({{static_cast<int>(o)}, {value.identity(static_cast<int>(o))}}));
    for (std::size_t m = 0; m < value.morphism_count(); ++m) {
      const int src = F.object_map[static_cast<std::size_t>(value.morphism(static_cast<int>(m)).src)];
      F.morphism_map.push_back(h.morphism_index.at({src, {static_cast<int>(m)}}));
    }
    auto v = is_weak_equivalence(F, value, h.groupoid);
    out.status = v.ok() ? Status::Ok : Status::Fail;
    out.payload = holim_json(h);
    out.payload["value_pi0"] = pi0(value).count;
    out.payload["comparison"] = verdict_json(v);
    return out;
  }
  Site site = load_site(s.source("site", need(s.opt.site, "site")));
  s.literal("prestack", need(s.opt.prestack, "prestack"));
  Prestack x = load_prestack(s.opt.prestack, site);
  auto obj = site.find_object(need(s.opt.object, "object"));
  if (!obj) throw Error(ErrorCode::InvalidInput, "unknown site object '" + s.opt.object + "'");
  const auto& covers = site.covers(*obj);
  int which = s.opt.cover;
  if (which < 0) {
    // First cover that is not the identity family.
    which = 0;
    for (std::size_t c = 0; c < covers.size(); ++c)
      if (covers[c] != std::vector<int>{site.identity(*obj)}) {
        which = static_cast<int>(c);
        break;
      }
  }
  if (which >= static_cast<int>(covers.size())) throw Error(ErrorCode::IndexOutOfRange, "cover index out of range");
  const auto& cover = covers[static_cast<std::size_t>(which)];
  CechDiagram cech = cech_diagram(site, *obj, cover, x);
  Holim h = holim2(cech.diagram);
  GroupoidFunctor psi = comparison_functor(cover, x, *obj, cech, h);
  const auto& value = *x.values[static_cast<std::size_t>(*obj)];
  auto v = is_weak_equivalence(psi, value, h.groupoid);
  json members = json::array();
  for (int a : cover) members.push_back(site.object_label(site.arrow(a).src));
  out.status = v.ok() ? Status::Ok : Status::Fail;
  out.payload = holim_json(h);
  out.payload["object"] = s.opt.object;
  out.payload["cover"] = members;
  out.payload["value_pi0"] = pi0(value).count;
  out.payload["comparison"] = verdict_json(v);
  return out;
}

Outcome cmd_prefact_check(Session& s) {
  PrefactData d = load_prefact(s.source("prefact", need(s.opt.prefact, "input")));
  auto r = prefact_check(d);
  Outcome out;
  out.status = r.ok() ? Status::Ok : Status::Fail;
  out.payload = {{"opens", d.opens}, {"maps", d.maps.size()}, {"violations", to_json(r)}};
  return out;
}

Outcome cmd_obs_build(Session& s) {
  ObsModel m = load_obs_model(s.source("model", need(s.opt.model, "model"), false));
  if (s.opt.degree_bound != 8) m.degree_bound = s.opt.degree_bound;
  PrefactData d = obs_assignment(m);
  auto r = prefact_check(d);
  json opens = json::array();
  for (std::size_t i = 0; i < d.opens.size(); ++i)
    opens.push_back({{"name", d.opens[i]}, {"dim", d.obs[i].spaces().total_dim()}});
  Outcome out;
  out.status = r.ok() ? Status::Ok : Status::Fail;
  out.payload = {{"degree_bound", m.degree_bound},
                 {"opens", opens},
                 {"maps", d.maps.size()},
                 {"violations", to_json(r)}};
  return out;
}

// ---- holonomy ---------------------------------------------------------------------

json tuple_labels(const FiniteGroup& g, const std::vector<int>& t) {
  json out = json::array();
  for (int x : t) out.push_back(g.label(x));
  return out;
}

Outcome cmd_holonomy_count(Session& s) {
  FiniteGroup g = load_group(s.source("group", need(s.opt.group, "group")));
  auto r = enumerate_reps(s.opt.genus, g, s.opt.budget, s.opt.list, s.opt.threads);
  Outcome out;
  out.payload = {{"genus", s.opt.genus},
                 {"order", g.order()},
                 {"conjugacy_classes", conjugacy_class_count(g)},
                 {"count", r.count}};
  if (s.opt.list) {
    json reps = json::array();
    for (const auto& t : r.reps) reps.push_back(tuple_labels(g, t));
    out.payload["reps"] = reps;
  }
  return out;
}

Outcome cmd_holonomy_classes(Session& s) {
  FiniteGroup g = load_group(s.source("group", need(s.opt.group, "group")));
  auto r = conj_classes_of_reps(s.opt.genus, g, s.opt.budget, s.opt.threads);
  Outcome out;
  out.payload = {{"genus", s.opt.genus}, {"order", g.order()}, {"total", r.total},
                 {"orbits", r.representatives.size()}};
  if (s.opt.list) {
    json orbits = json::array();
    for (std::size_t i = 0; i < r.representatives.size(); ++i)
      orbits.push_back({{"representative", tuple_labels(g, r.representatives[i])}, {"size", r.orbit_sizes[i]}});
    out.payload["classes"] = orbits;
  }
  return out;
}

Outcome cmd_holonomy_bundle(Session& s) {
  FiniteGroup g = load_group(s.source("group", need(s.opt.group, "group")));
  s.literal("rep", need(s.opt.rep, "rep"));
  SurfaceRep rep;
  std::stringstream in(s.opt.rep);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    auto it = std::find(g.labels().begin(), g.labels().end(), tok);
    if (it == g.labels().end()) throw Error(ErrorCode::ParseError, "unknown group element '" + tok + "'");
    rep.elements.push_back(static_cast<int>(it - g.labels().begin()));
  }
  if (rep.elements.empty() || rep.elements.size() % 2)
    throw Error(ErrorCode::InvalidInput, "a surface representation lists 2g elements");
  rep.genus = static_cast<int>(rep.elements.size() / 2);
  auto b = rep_to_bundle(rep, g);
  Outcome out;
  out.payload = {{"genus", rep.genus},
                 {"image", tuple_labels(g, b.image)},
                 {"objects", b.groupoid.object_count()},
                 {"morphisms", b.groupoid.morphism_count()},
                 {"components", b.components}};
  return out;
}

// ---- rendering ----------------------------------------------------------------

void render_text(std::ostream& os, const json& v, const std::string& key, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  auto scalar = [](const json& x) { return x.is_string() ? x.get<std::string>() : x.dump(); };
  bool flat_array = v.is_array();
  if (flat_array)
    for (const auto& x : v) flat_array = flat_array && !x.is_structured();
  if (v.is_object()) {
    if (!key.empty()) os << pad << key << ":\n";
    for (const auto& [k, x] : v.items()) render_text(os, x, k, key.empty() ? indent : indent + 2);
  } else if (flat_array) {
    os << pad << key << ": [";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << scalar(v[i]);
    os << "]\n";
  } else if (v.is_array()) {
    os << pad << key << ":";
    if (v.empty()) os << " []";
    os << "\n";
    for (std::size_t i = 0; i < v.size(); ++i) render_text(os, v[i], "- [" + std::to_string(i) + "]", indent + 2);
  } else {
    os << pad << key << ": " << scalar(v) << "\n";
  }
}

}  // namespace

RunResult run(const std::vector<std::string>& args) {
  Options o;
  bool as_json = false;
  std::function<Outcome(Session&)> handler;
  std::string command;

  CLI::App app{"Exact deformation-theory and descent computations", "deformkit"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", kVersion);
  app.add_flag("--json", as_json, "Emit the report as a single JSON document");
  app.add_option("--threads", o.threads, "Worker threads (0: DEFORMKIT_THREADS or hardware)");
  app.add_option("--seed", o.seed, "Seed recorded in the report for randomized batteries");

  auto bind = [&](CLI::App* sub, const std::string& name, std::function<Outcome(Session&)> fn) {
    sub->callback([&, name, fn] {
      command = name;
      handler = fn;
    });
  };
  auto lie_opt = [&](CLI::App* a) { a->add_option("--lie", o.lie, "Lie algebra (file or builtin:<name>)"); };
  auto deform_opts = [&](CLI::App* a) {
    lie_opt(a);
    a->add_option("--gca", o.gca, "Graded-commutative algebra");
    a->add_option("--artinian", o.artinian, "Artinian coefficient ring (default: scalars)");
  };

  auto* check = app.add_subcommand("check", "Parse and validate inputs");
  deform_opts(check);
  check->add_option("--pairing", o.pairing);
  check->add_option("--module", o.module);
  check->add_flag("--dgla", o.dgla, "Also validate gca (x) lie as a dgla");
  check->add_option("--group", o.group);
  check->add_option("--site", o.site);
  check->add_option("--prestack", o.prestack);
  check->add_option("--prefact", o.prefact);
  bind(check, "check", cmd_check);

  auto* ce = app.add_subcommand("ce", "Lie algebra (co)homology dimensions");
  lie_opt(ce);
  ce->add_option("--coeffs", o.module, "trivial | adjoint | coadjoint | defining | module file");
  ce->add_flag("--homology", o.homology);
  ce->add_option("--max-degree", o.max_degree);
  bind(ce, "ce", cmd_ce);

  auto* mc = app.add_subcommand("mc", "Maurer-Cartan computations");
  mc->require_subcommand(1);
  auto* mc_defect_cmd = mc->add_subcommand("defect", "d alpha + 1/2 [alpha, alpha]");
  auto* mc_tangent_cmd = mc->add_subcommand("tangent", "Z^1 and H^1 of the dgla");
  auto* mc_lift_cmd = mc->add_subcommand("lift", "One order-by-order lifting step");
  auto* mc_gauge_cmd = mc->add_subcommand("gauge", "Gauge action of a degree-0 element");
  auto* mc_path_cmd = mc->add_subcommand("path", "Check a polynomial gauge path");
  for (auto* a : {mc_defect_cmd, mc_tangent_cmd, mc_lift_cmd, mc_gauge_cmd, mc_path_cmd}) deform_opts(a);
  for (auto* a : {mc_defect_cmd, mc_lift_cmd, mc_gauge_cmd}) a->add_option("--element", o.element);
  mc_lift_cmd->add_option("--order", o.order, "k: alpha is MC modulo m^k");
  mc_gauge_cmd->add_option("--x", o.gauge_x, "Degree-0 gauge element");
  mc_path_cmd->add_option("--path", o.path, "Path file");
  mc_path_cmd->add_option("--degree-bound", o.degree_bound);
  bind(mc_defect_cmd, "mc defect", cmd_mc_defect);
  bind(mc_tangent_cmd, "mc tangent", cmd_mc_tangent);
  bind(mc_lift_cmd, "mc lift", cmd_mc_lift);
  bind(mc_gauge_cmd, "mc gauge", cmd_mc_gauge);
  bind(mc_path_cmd, "mc path", cmd_mc_path);

  auto* cs = app.add_subcommand("cs", "Chern-Simons functional");
  cs->require_subcommand(1);
  auto* cs_value_cmd = cs->add_subcommand("value");
  auto* cs_grad_cmd = cs->add_subcommand("grad");
  for (auto* a : {cs_value_cmd, cs_grad_cmd}) {
    lie_opt(a);
    a->add_option("--gca", o.gca);
    a->add_option("--pairing", o.pairing);
    a->add_option("--element", o.element);
  }
  bind(cs_value_cmd, "cs value", [](Session& s) { return cmd_cs(s, false); });
  bind(cs_grad_cmd, "cs grad", [](Session& s) { return cmd_cs(s, true); });

  auto* cartan = app.add_subcommand("cartan", "Cartan splitting for iso(2,1)");
  cartan->require_subcommand(1);
  auto* cartan_split = cartan->add_subcommand("split");
  deform_opts(cartan_split);
  cartan_split->add_option("--element", o.element);
  bind(cartan_split, "cartan split", cmd_cartan);

  auto* simp = app.add_subcommand("simplicial", "Cosimplicial identities");
  simp->require_subcommand(1);
  auto* simp_verify = simp->add_subcommand("verify");
  simp_verify->add_option("--max-n", o.max_n);
  simp_verify->add_option("--convention", o.convention, "standard | literal");
  bind(simp_verify, "simplicial verify", cmd_simplicial_verify);
  auto* simp_factor = simp->add_subcommand("factor");
  simp_factor->add_option("--map", o.map, "Values f(0),...,f(n), comma separated");
  simp_factor->add_option("--target", o.target);
  bind(simp_factor, "simplicial factor", cmd_simplicial_factor);

  auto* stack = app.add_subcommand("stack", "Descent for prestacks");
  stack->require_subcommand(1);
  auto* stack_check = stack->add_subcommand("check");
  stack_check->add_option("--site", o.site);
  stack_check->add_option("--prestack", o.prestack);
  bind(stack_check, "stack check", cmd_stack_check);

  auto* holim = app.add_subcommand("holim", "Homotopy limit of a truncated cosimplicial groupoid");
  holim->add_option("--constant", o.constant, "Group whose constant diagram BG is used");
  holim->add_option("--site", o.site);
  holim->add_option("--prestack", o.prestack);
  holim->add_option("--object", o.object);
  holim->add_option("--cover", o.cover, "Index into the object's covers");
  bind(holim, "holim", cmd_holim);

  auto* prefact = app.add_subcommand("prefact", "Prefactorization algebras");
  prefact->require_subcommand(1);
  auto* prefact_chk = prefact->add_subcommand("check");
  prefact_chk->add_option("--input", o.prefact);
  bind(prefact_chk, "prefact check", cmd_prefact_check);

  auto* obs = app.add_subcommand("obs", "Observable assignments");
  obs->require_subcommand(1);
  auto* obs_build = obs->add_subcommand("build");
  obs_build->add_option("--model", o.model);
  obs_build->add_option("--degree-bound", o.degree_bound);
  bind(obs_build, "obs build", cmd_obs_build);

  auto* hol = app.add_subcommand("holonomy", "Surface-group representations into finite groups");
  hol->require_subcommand(1);
  auto* hol_count = hol->add_subcommand("count");
  auto* hol_classes = hol->add_subcommand("classes");
  auto* hol_bundle = hol->add_subcommand("bundle");
  for (auto* a : {hol_count, hol_classes, hol_bundle}) a->add_option("--group", o.group);
  for (auto* a : {hol_count, hol_classes}) {
    a->add_option("--genus", o.genus);
    a->add_option("--budget", o.budget);
    a->add_flag("--list", o.list);
  }
  hol_bundle->add_option("--rep", o.rep, "A1,B1,...,Ag,Bg as element labels");
  bind(hol_count, "holonomy count", cmd_holonomy_count);
  bind(hol_classes, "holonomy classes", cmd_holonomy_classes);
  bind(hol_bundle, "holonomy bundle", cmd_holonomy_bundle);

  Outcome outcome;
  Session session(o);
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    outcome = handler(session);
  } catch (const CLI::CallForHelp&) {
    return {0, app.help()};
  } catch (const CLI::CallForAllHelp&) {
    return {0, app.help("", CLI::AppFormatMode::All)};
  } catch (const CLI::CallForVersion&) {
    return {0, std::string(kVersion) + "\n"};
  } catch (const CLI::ParseError& e) {
    outcome.status = Status::Error;
    outcome.payload = {{"code", "PARSE_ERROR"}, {"message", e.what()}};
  } catch (const ValidationFailure& e) {
    outcome.status = Status::Error;
    outcome.payload = {{"code", "VALIDATION_ERROR"}, {"message", e.what()}, {"subject", e.subject()},
                       {"report", to_json(e.report())}};
  } catch (const Error& e) {
    outcome.status = Status::Error;
    outcome.payload = {{"code", std::string(error_code_name(e.code()))}, {"message", e.what()}};
  } catch (const std::exception& e) {
    outcome.status = Status::Error;
    outcome.payload = {{"code", "INTERNAL"}, {"message", e.what()}};
  }

  json report{{"command", command},
              {"status", status_name(outcome.status)},
              {"payload", outcome.payload},
              {"provenance", {{"inputs", session.inputs}, {"version", kVersion}, {"seed", o.seed}}}};
  std::ostringstream os;
  if (as_json) {
    os << report.dump(2) << "\n";
  } else {
    os << (command.empty() ? "deformkit" : command) << ": " << status_name(outcome.status) << "\n";
    render_text(os, outcome.payload, "", 2);
  }
  const int code = outcome.status == Status::Ok ? 0 : outcome.status == Status::Fail ? 1 : 2;
  return {code, os.str()};
}

}  // namespace dk::cli
