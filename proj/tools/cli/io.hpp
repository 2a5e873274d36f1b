#pragma once

#include <string>
#include <vector>

#include "deformkit/artinian.hpp"
#include "deformkit/deformation.hpp"
#include "deformkit/gca.hpp"
#include "deformkit/group.hpp"
#include "deformkit/lie.hpp"
#include "deformkit/prefact.hpp"
#include "deformkit/site.hpp"
#include "json.hpp"

namespace dk::cli {

using json = nlohmann::json;

/// A resolved input: either "builtin:<name>(<params>)" or a file path. The
/// digest is FNV-1a 64 over the builtin spec or the file bytes.
struct Source {
  std::string spec;
  bool builtin = false;
  std::string name;                 // builtin name
  std::vector<std::string> params;  // builtin parameters
  std::string text;                 // file contents
  std::string digest;
};

std::string fnv1a_hex(const std::string& data);

/// Bare names (no "builtin:" prefix) are treated as builtins when
/// `bare_is_builtin` is set and no such file exists.
Source resolve(const std::string& spec, bool bare_is_builtin = false);
/// Parses the file contents; Error(ParseError) names the file and line.
json parse_json(const Source& s);

Rational json_rational(const json& v, const std::string& where);

/// Loaders: each result passes its module validator or ValidationFailure is thrown.
LieAlgebra load_lie(const Source& s);
GradedAlgebra load_gca(const Source& s);
InvariantPairing load_pairing(const Source& s, const LieAlgebra& l);
ArtinianAlgebra load_artinian(const Source& s);
LieModule load_module(const std::string& spec, const LieAlgebra& l);
FiniteGroup load_group(const Source& s);
Site load_site(const Source& s);
Prestack load_prestack(const std::string& spec, const Site& site);
PrefactData load_prefact(const Source& s);
ObsModel load_obs_model(const Source& s);

/// Element syntax: "t*theta1(x)E + 2*t^2*theta2(x)H - 1/2*1(x)F", or a JSON
/// file with {"terms": [{"value", "coef", "form", "lie"}]}. Over the scalar
/// ring the coefficient name may be omitted.
Element parse_element(const std::string& text, const TensorContext& ctx);
Element load_element(const std::string& spec, const TensorContext& ctx);
/// {"a0": [<element>...], "a1": [...]} where each entry is an element string
/// or a term list; index k is the coefficient of t^k.
PolyPath load_path(const Source& s, const TensorContext& ctx);

json to_json(const ValidationReport& r);
json to_json(const Element& e, const TensorContext& ctx);
json to_json(const Matrix& m);
std::string element_string(const Element& e, const TensorContext& ctx);

}  // namespace dk::cli
