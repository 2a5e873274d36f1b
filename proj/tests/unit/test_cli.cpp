#include "doctest.h"

#include <string>
#include <vector>

#include "cli/cli.hpp"
#include "json.hpp"

using nlohmann::json;

namespace {

const std::string kData = DEFORMKIT_TEST_DATA_DIR;

std::string data(const std::string& name) { return kData + "/" + name; }

struct Report {
  int exit_code;
  json doc;
};

Report run_json(std::vector<std::string> args) {
  args.push_back("--json");
  auto r = dk::cli::run(args);
  return {r.exit_code, json::parse(r.output)};
}

}  // namespace

TEST_CASE("ce golden values through the command line") {
  auto r = run_json({"ce", "--lie", "builtin:sl2", "--coeffs", "trivial"});
  CHECK(r.exit_code == 0);
  CHECK(r.doc["status"] == "ok");
  CHECK(r.doc["command"] == "ce");
  CHECK(r.doc["payload"]["dims"] == json::array({1, 0, 0, 1}));
  CHECK(run_json({"ce", "--lie", "builtin:heisenberg3"}).doc["payload"]["dims"] == json::array({1, 2, 2, 1}));
  CHECK(run_json({"ce", "--lie", "sl2", "--coeffs", "adjoint", "--homology"}).doc["payload"]["dims"] ==
        json::array({0, 0, 0, 0}));
}

TEST_CASE("stack check verdicts and exit codes") {
  auto fail = run_json({"stack", "check", "--site", "circle2", "--prestack", "constantBG:S3"});
  CHECK(fail.exit_code == 1);
  CHECK(fail.doc["status"] == "fail");
  auto pass = run_json({"stack", "check", "--site", "discrete2", "--prestack", "functions:2"});
  CHECK(pass.exit_code == 0);
  CHECK(pass.doc["status"] == "ok");
}

TEST_CASE("simplicial verify reports the identity count") {
  auto r = run_json({"simplicial", "verify", "--max-n", "5"});
  CHECK(r.exit_code == 0);
  CHECK(r.doc["payload"]["total_checked"] == 145);
  CHECK(r.doc["payload"]["failures"].empty());
  auto lit = run_json({"simplicial", "verify", "--max-n", "3", "--convention", "literal"});
  CHECK(lit.exit_code == 1);
}

TEST_CASE("text output starts with the command and status") {
  auto r = dk::cli::run({"ce", "--lie", "builtin:sl2"});
  CHECK(r.exit_code == 0);
  CHECK(r.output.rfind("ce: ok\n", 0) == 0);
  CHECK(r.output.find("dims: [1, 0, 0, 1]") != std::string::npos);
}

TEST_CASE("Lie algebra files") {
  auto r = run_json({"check", "--lie", data("iso21.json")});
  CHECK(r.exit_code == 0);
  CHECK(r.doc["payload"]["objects"][0]["summary"]["dim"] == 6);
  // the transcribed file and the builtin have the same cohomology with every coefficient choice
  for (const char* coeffs : {"trivial", "adjoint", "coadjoint"}) {
    auto file = run_json({"ce", "--lie", data("iso21.json"), "--coeffs", coeffs});
    auto builtin = run_json({"ce", "--lie", "builtin:iso21", "--coeffs", coeffs});
    CHECK(file.doc["payload"] == builtin.doc["payload"]);
  }
  auto cs = run_json({"cs", "value", "--gca", "builtin:torus_gca(3)", "--lie", data("iso21.json"), "--pairing",
                      "builtin:iso21", "--element", "theta1(x)J1 + theta2(x)J2 + theta3(x)P3"});
  CHECK(cs.doc["payload"]["value"] == "2");
}

TEST_CASE("malformed input is a parse error with location") {
  auto r = run_json({"check", "--lie", data("bad_rational.json")});
  CHECK(r.exit_code == 2);
  CHECK(r.doc["status"] == "error");
  CHECK(r.doc["payload"]["code"] == "PARSE_ERROR");
  CHECK(r.doc["payload"]["message"].get<std::string>().find("1/0") != std::string::npos);

  auto s = run_json({"ce", "--lie", data("broken_syntax.json")});
  CHECK(s.exit_code == 2);
  CHECK(s.doc["payload"]["code"] == "PARSE_ERROR");
  CHECK(s.doc["payload"]["message"].get<std::string>().find(":7:") != std::string::npos);

  CHECK(run_json({"ce", "--lie", "builtin:sl2", "--bogus"}).doc["payload"]["code"] == "PARSE_ERROR");
  CHECK(run_json({"mc"}).exit_code == 2);
  CHECK(run_json({"ce", "--lie", "builtin:e8"}).doc["payload"]["code"] == "UNKNOWN_BUILTIN");
}

TEST_CASE("Jacobi violation is a validation error carrying the triple") {
  auto r = run_json({"ce", "--lie", data("jacobi_violation.json")});
  CHECK(r.exit_code == 2);
  CHECK(r.doc["payload"]["code"] == "VALIDATION_ERROR");
  const auto& report = r.doc["payload"]["report"];
  REQUIRE(report.size() >= 1);
  CHECK(report[0]["kind"] == "jacobi");
  CHECK(report[0]["indices"] == json::array({0, 1, 2}));

  auto c = run_json({"check", "--lie", data("jacobi_violation.json")});
  CHECK(c.exit_code == 1);
  CHECK(c.doc["payload"]["objects"][0]["valid"] == false);
}

TEST_CASE("graded algebra, group, site and model files") {
  auto file = run_json({"mc", "tangent", "--gca", data("torus2.json"), "--lie", "builtin:sl2"});
  auto builtin = run_json({"mc", "tangent", "--gca", "builtin:torus_gca(2)", "--lie", "builtin:sl2"});
  CHECK(file.exit_code == 0);
  CHECK(file.doc["payload"] == builtin.doc["payload"]);
  CHECK(file.doc["payload"]["dim_h1"] == 6);

  auto perm = run_json({"holonomy", "count", "--group", data("s3_permutations.json"), "--genus", "1"});
  CHECK(perm.doc["payload"]["count"] == 18);
  auto table = run_json({"holonomy", "classes", "--group", data("z3_table.json"), "--genus", "1"});
  CHECK(table.doc["payload"]["orbits"] == 9);

  for (const char* prestack : {"constantBG:S3", "functions:2"}) {
    auto f = run_json({"stack", "check", "--site", data("circle_site.json"), "--prestack", prestack});
    auto b = run_json({"stack", "check", "--site", "circle2", "--prestack", prestack});
    CHECK(f.exit_code == b.exit_code);
  }

  auto obs = run_json({"obs", "build", "--model", data("obs_model.json")});
  CHECK(obs.exit_code == 0);

  auto path = run_json(
      {"mc", "path", "--gca", "builtin:torus_gca(2)", "--lie", "builtin:heisenberg3", "--path", data("heisenberg_path.json")});
  CHECK(path.exit_code == 0);
  CHECK(path.doc["payload"]["homotopy"]["holds"] == true);

  auto flip = run_json({"prefact", "check", "--input", data("sign_flip.json")});
  CHECK(flip.exit_code == 1);
  CHECK(flip.doc["payload"]["violations"][0]["kind"] == "invariance");
  CHECK(flip.doc["payload"]["violations"][0]["indices"] == json::array({0, 1, 1, 0, 2}));
}

TEST_CASE("deformation verbs") {
  const std::vector<std::string> surface = {"--gca", "builtin:surface_gca(1)", "--lie", "builtin:sl2", "--artinian",
                                            "builtin:truncated_polynomial(3)", "--order", "2"};
  auto args = surface;
  args.insert(args.begin(), {"mc", "lift", "--element", "t*a1(x)E + t*b1(x)F"});
  auto obstructed = run_json(args);
  CHECK(obstructed.exit_code == 1);
  CHECK(obstructed.doc["payload"]["obstruction"] == "t^2*omega(x)H");
  args = surface;
  args.insert(args.begin(), {"mc", "lift", "--element", "t*a1(x)E + t*b1(x)E"});
  CHECK(run_json(args).exit_code == 0);

  auto gauge = run_json({"mc", "gauge", "--gca", "builtin:torus_gca(2)", "--lie", "builtin:sl2", "--artinian",
                         "builtin:truncated_polynomial(4)", "--element", "t*theta1(x)E", "--x", "t*1(x)H"});
  CHECK(gauge.doc["payload"]["gauged"] == "t*theta1(x)E + 2*t^2*theta1(x)E + 2*t^3*theta1(x)E");
  CHECK(gauge.doc["payload"]["gauged_is_mc"] == true);

  auto cartan = run_json({"cartan", "split", "--gca", "builtin:torus_gca(2)", "--element", "theta1(x)J1 + theta2(x)P2"});
  CHECK(cartan.exit_code == 0);
  CHECK(cartan.doc["payload"]["torsion"] == "theta1theta2(x)P3");
}

TEST_CASE("holim and holonomy verbs") {
  auto h = run_json({"holim", "--constant", "S3"});
  CHECK(h.exit_code == 0);
  CHECK(h.doc["payload"]["pi0"] == 1);
  auto circle = run_json({"holim", "--site", "circle2", "--prestack", "constantBG:S3", "--object", "S", "--cover", "1"});
  CHECK(circle.doc["payload"]["objects"] == 36);
  CHECK(circle.doc["payload"]["pi0"] == 3);
  CHECK(circle.exit_code == 1);

  CHECK(run_json({"holonomy", "count", "--group", "S3", "--genus", "1"}).doc["payload"]["count"] == 18);
  auto b = run_json({"holonomy", "bundle", "--group", "S3", "--rep", "(12),e"});
  CHECK(b.doc["payload"]["components"] == 3);
  auto budget = run_json({"holonomy", "count", "--group", "S4", "--genus", "3", "--budget", "100"});
  CHECK(budget.exit_code == 2);
  CHECK(budget.doc["payload"]["code"] == "BUDGET_EXCEEDED");
}

TEST_CASE("reports round-trip and are thread independent") {
  const std::vector<std::vector<std::string>> corpus = {
      {"ce", "--lie", "builtin:sl2", "--coeffs", "adjoint"},
      {"stack", "check", "--site", "circle2", "--prestack", "constantBG:S3"},
      {"holonomy", "classes", "--group", "D4", "--genus", "1"},
      {"obs", "build", "--model", data("obs_model.json")},
      {"check", "--lie", data("jacobi_violation.json")},
  };
  for (const auto& cmd : corpus) {
    auto a = cmd;
    a.insert(a.end(), {"--json", "--threads", "1"});
    auto b = cmd;
    b.insert(b.end(), {"--json", "--threads", "4"});
    auto ra = dk::cli::run(a);
    auto rb = dk::cli::run(b);
    CHECK(ra.output == rb.output);
    auto doc = json::parse(ra.output);
    CHECK(json::parse(doc.dump()) == doc);
    CHECK(doc.dump(2) + "\n" == ra.output);
    CHECK(doc["provenance"]["version"] == dk::cli::kVersion);
  }
}

TEST_CASE("provenance records input digests") {
  auto a = run_json({"ce", "--lie", data("iso21.json")});
  auto b = run_json({"ce", "--lie", "builtin:iso21"});
  const auto& da = a.doc["provenance"]["inputs"]["lie"]["digest"];
  const auto& db = b.doc["provenance"]["inputs"]["lie"]["digest"];
  CHECK(da.is_string());
  CHECK(da != db);
  CHECK(run_json({"ce", "--lie", "builtin:iso21", "--seed", "7"}).doc["provenance"]["seed"] == 7);
}
