#include <cstdio>
#include <fstream>
#include <sstream>

#include "doctest.h"

#include "ellclass/cli.hpp"
#include "ellclass/errors.hpp"

using namespace ellclass;

namespace {

struct Run {
  int status;
  std::string text;
  Json json() const { return Json::parse(text); }
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "ellclass");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  const int status = run_cli(static_cast<int>(argv.size()), argv.data(), out);
  return {status, out.str()};
}

double rel(Complex a, Complex b) { return std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1e-300}); }

}  // namespace

TEST_CASE("compute on the minimal (8,2) pattern") {
  const Run r = run({"compute", "8,2:7>1,8>2"});
  REQUIRE(r.status == 0);
  const Json j = r.json();
  CHECK(j["pattern"] == "8,2:7>1,8>2");
  CHECK(j["minimal_word"].empty());
  const Json& nodes = j["expression"]["nodes"];
  int leaves = 0;
  for (const Json& n : nodes) leaves += n["kind"] == "delta";
  CHECK(leaves == 3);
  CHECK(j["sample_values"].size() == 4);
}

TEST_CASE("compute is deterministic for a fixed seed") {
  const Run a = run({"--seed", "0", "compute", "4,2:3>1,4>2"});
  const Run b = run({"--seed", "0", "compute", "4,2:3>1,4>2"});
  const Run c = run({"--seed", "1", "compute", "4,2:3>1,4>2"});
  CHECK(a.status == 0);
  CHECK(a.text == b.text);
  CHECK(a.text != c.text);
}

TEST_CASE("errors come back as JSON objects") {
  Run r = run({"compute", "8,2:7>7"});
  CHECK(r.status == 2);
  Json j = r.json();
  CHECK(j["error"]["kind"] == "DistinctnessError");
  CHECK(j["error"]["offset"] == 6);

  r = run({"verify", "no_such_suite"});
  CHECK(r.status == 2);
  CHECK(r.json()["error"]["kind"] == "InvalidArgument");

  r = run({"bogus"});
  CHECK(r.status == 2);
  CHECK(r.json()["error"]["kind"] == "UsageError");

  r = run({"--tau-im", "0.1", "compute", "4,2:3>1,4>2"});
  CHECK(r.status == 2);
  CHECK(r.json()["error"]["kind"] == "InvalidArgument");

  r = run({"orbits", "7", "2"});
  CHECK(r.status == 2);

  r = run({"restrict", "5,2:4>1,3>2", "12"});
  CHECK(r.status == 2);
}

TEST_CASE("verify reports and exit status") {
  const Run r = run({"--samples", "8", "verify", "fourterm"});
  CHECK(r.status == 0);
  const Json j = r.json();
  REQUIRE(j.is_array());
  CHECK(j.size() == 2);
  CHECK(j[0]["name"] == "fourterm");
  CHECK(j[0]["passed"] == true);
  CHECK(reports_passed(j));
  Json bad = j;
  bad[1]["passed"] = false;
  CHECK_FALSE(reports_passed(bad));
  // An absurd tolerance turns the same run into a failure.
  CHECK(run({"--samples", "8", "--tol", "1e-30", "verify", "fourterm"}).status == 1);
}

TEST_CASE("orbits dump") {
  const Json j = run({"orbits", "4", "2"}).json();
  CHECK(j["size"] == 12);
  CHECK(j["patterns"].size() == 12);
  CHECK(j["patterns"][0]["distance"] == 0);
}

TEST_CASE("restrict, weights and multiplicities") {
  Json j = run({"restrict", "4,2:3>1,4>2", "12"}).json();
  CHECK(j["is_one"] == true);
  j = run({"restrict", "4,2:3>1,4>2", "2,1"}).json();
  CHECK(j["is_zero"] == true);
  j = run({"restrict", "5,2:4>1,5>2", "213"}).json();
  CHECK(j["setting"] == "weight_function");
  CHECK(j["is_zero"] == true);

  j = run({"weights", "--rtv", "5,2:4>1,5>2"}).json();
  CHECK(j["n"] == 3);
  CHECK(j["rtv_substitution"] == true);

  j = run({"multiplicities", "3,1:1>2", "1/2"}).json();
  CHECK(j["minimal_word"] == Json::array({1, 2}));
  CHECK(j["alpha"] == Json::array({"2", "3/2"}));
  CHECK(run({"multiplicities", "4,2:1>3,2>4", "1"}).status == 2);
}

TEST_CASE("--out writes the document to a file") {
  const std::string path = "test_cli_out.json";
  const Run r = run({"--out", path, "orbits", "3", "1"});
  CHECK(r.status == 0);
  CHECK(r.text.empty());
  std::ifstream in(path);
  const Json j = Json::parse(in);
  CHECK(j["size"] == 6);
  std::remove(path.c_str());
}

TEST_CASE("serialization round trips") {
  CHECK(to_json(LinearForm::mu(1) - Rational(1, 2) * LinearForm::h()).dump() == R"({"h":"-1/2","mu1":"1"})");
  const QForm q = QForm::product(LinearForm::x(1), LinearForm::mu(1)) + QForm::half_square(LinearForm::h());
  CHECK(qform_from_json(to_json(q)) == q);
  CHECK(to_json(q).dump() == R"([["x1","mu1","1/2"],["h","h","1/2"]])");

  const Complex z(0.1, -1.0 / 3.0);
  CHECK(complex_from_json(to_json(z)) == z);
  CHECK(format_double(0.1) == "0.10000000000000001");

  const EFun f = EFun::x_permuted(Permutation::simple(2),
                                  ell_class(LinkPattern::parse("4,2:1>3,2>4")));
  const Json jf = to_json(f);
  const EFun g = efun_from_json(jf);
  CHECK(to_json(g) == jf);
  CHECK(g.type() == f.type());
  CHECK(node_count(g) == node_count(f));
  PointAssignment pt;
  for (Symbol s : symbols_of(f)) pt.set(s, Complex(0.05 * (s.index + 1), 0.11 * static_cast<int>(s.kind) - 0.13));
  CHECK(rel(evaluate(f, pt), evaluate(g, pt)) < 1e-14);

  Json broken = jf;
  broken["nodes"][0]["type"] = Json::array();
  CHECK_THROWS_AS(efun_from_json(broken), Error);
  CHECK_THROWS_AS(efun_from_json(Json::object()), Error);
}

TEST_CASE("error objects carry offsets and paths") {
  Json j = error_json(ParseError(ErrorKind::ParseError, 3, "m"));
  CHECK(j["error"]["offset"] == 3);
  j = error_json(PoleError("root/0:delta.a", "m"));
  CHECK(j["error"]["path"] == "root/0:delta.a");
  CHECK(j["error"]["kind"] == "PoleProximity");
}

TEST_CASE("sigma parsing") {
  CHECK(parse_sigma("231") == Permutation({2, 3, 1}));
  CHECK(parse_sigma("2,3,1") == Permutation({2, 3, 1}));
  CHECK_THROWS_AS(parse_sigma("2,x"), Error);
  CHECK_THROWS_AS(parse_sigma("22"), Error);
}
