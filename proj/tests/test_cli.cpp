#include <cstdio>
#include <fstream>

#include "doctest.h"
#include "ncgeom/cli.hpp"
#include "ncgeom/connection.hpp"
#include "ncgeom/errors.hpp"

using namespace ncgeom;
using namespace ncgeom::cli;

namespace {

const std::string kData = NCGEOM_TEST_DATA;

JobSpec job(const std::string& command) {
  JobSpec s;
  s.command = command;
  return s;
}

}  // namespace

TEST_CASE("rational parsing") {
  CHECK(parse_rational("0") == 0);
  CHECK(parse_rational("-1/3") == mpq_class(-1, 3));
  CHECK(parse_rational("4/6") == mpq_class(2, 3));
  CHECK(parse_rational("+7") == 7);
  for (const char* bad : {"", "1/", "/2", "1/0", "x", "1.5", "1/-2"}) CHECK_THROWS_AS(parse_rational(bad), UsageError);
}

TEST_CASE("exact values in JSON") {
  const auto third = exact_json(Cyclotomic::rational(-2, 3));
  CHECK(third.dump() == R"({"num":-2,"den":3,"zeta_order":1,"coeffs":[-2],"decimal":"-0.666667"})");
  const auto z = exact_json(Cyclotomic::zeta(6, 1));
  CHECK(z["num"].is_null());
  CHECK(z["zeta_order"] == 6);
  CHECK(z["decimal"] == "0.5+0.866025i");
  CHECK(decimal_string(Cyclotomic::rational(1, 2)) == "0.5");
  CHECK(decimal_string(Cyclotomic::rational(-1, 3000000)) == "0");
  CHECK(decimal_string(Cyclotomic::rational(1, 2000000)) == "0.000001");
  CHECK(decimal_string(Cyclotomic::zeta(4, 1)) == "1i");
  CHECK(decimal_string(Cyclotomic::zeta(3, 1)) == "-0.5+0.866025i");

  // den * value = Σ coeffs[i] ζ^i
  const Cyclotomic v = Cyclotomic::rational(1, 2) + Cyclotomic::rational(2, 3) * Cyclotomic::zeta(6, 1);
  const auto j = exact_json(v);
  Cyclotomic rebuilt(0);
  for (std::size_t i = 0; i < j["coeffs"].size(); ++i)
    rebuilt += Cyclotomic(j["coeffs"][i].get<long>()) * Cyclotomic::zeta(j["zeta_order"].get<int>(), static_cast<long>(i));
  CHECK(rebuilt == Cyclotomic(j["den"].get<long>()) * v);
}

TEST_CASE("Cayley round trip") {
  const auto d6 = dihedral(6);
  const std::string path = "cayley_roundtrip_d6.json";
  {
    std::ofstream out(path);
    out << export_cayley(d6);
  }
  const auto back = load_cayley(path);
  CHECK(back == d6);
  CHECK(back.table() == d6.table());
  CHECK(export_cayley(back) == export_cayley(d6));
  std::remove(path.c_str());

  CHECK_THROWS_WITH_AS(load_cayley(kData + "/broken_associativity.json"),
                       doctest::Contains("associativity fails for (a, a, b)"), ValidationError);
  CHECK_THROWS_AS(load_cayley(kData + "/missing.json"), ValidationError);
  CHECK_THROWS_AS(parse_cayley("{\"names\": [\"e\"]}"), ValidationError);
  CHECK_THROWS_AS(parse_cayley("[1, 2"), ValidationError);
  CHECK_THROWS_AS(parse_cayley(R"({"names": ["e", "a"], "table": [[0, 1], [1, 1]]})"), ValidationError);
}

TEST_CASE("S3 from a Cayley file") {
  const auto s3 = load_cayley(kData + "/s3_cayley.json");
  const auto cls = conjugacy_class(s3, s3.find("u"));
  std::vector<std::string> names;
  for (const int m : cls.members()) names.push_back(s3.name(m));
  CHECK(names == std::vector<std::string>{"u", "v", "uvu"});
  CHECK(matches_product_pattern(cls));
  const Calculus calc(cls);
  const auto lc = levi_civita(calc, 0);
  const auto third = calc.scale(calc.constant(Cyclotomic::rational(1, 3)), calc.theta());
  for (int a = 0; a < 3; ++a) CHECK(lc.components[static_cast<std::size_t>(a)] == calc.e(a) - third);

  JobSpec s = job("dirac");
  s.cayley = kData + "/s3_cayley.json";
  s.class_label = "u";
  const auto res = run(s);
  REQUIRE(res.exit_code == kOk);
  const auto report = Json::parse(res.report);
  CHECK(report["dirac"]["spectrum"]["multiplicities"] == Json::parse(R"({"-3":4,"0":4,"3":4})"));
}

TEST_CASE("run") {
  const auto dirac = run(job("dirac"));
  REQUIRE(dirac.exit_code == kOk);
  const auto d = Json::parse(dirac.report)["dirac"];
  CHECK(d["spectrum"]["multiplicities"] == Json::parse(R"({"-3":8,"0":8,"3":8})"));
  CHECK(d["block_form_matches"] == true);
  CHECK(d["hermitian"] == true);
  CHECK(d["cube_equals_9D"] == true);
  CHECK(d["chirality"]["anticommutes"] == true);
  CHECK(d["chirality"]["unique"] == false);

  const auto calc = Json::parse(run(job("calculus")).report)["calculus"];
  CHECK(calc["relation_dimension"] == 5);
  CHECK(calc["two_form_dimension"] == 4);
  CHECK(calc["discrepancies"][0]["stated"] == 6);
  CHECK(calc["class"]["members"] == Json::parse(R"(["sr","sr3","sr5"])"));

  const auto wave = Json::parse(run(job("wave")).report)["wave"];
  CHECK(wave["spectrum"]["multiplicities"] == Json::parse(R"({"-12":2,"-6":8,"0":2})"));
  CHECK(wave["equals_2D0_minus_6"] == true);

  JobSpec sa = job("spectral-action");
  sa.poly = "0,1";
  CHECK(Json::parse(run(sa).report)["spectral_action"]["value"]["num"] == 144);

  JobSpec bad = job("calculus");
  bad.class_label = "r";
  CHECK(run(bad).exit_code == kPrecondition);
  bad.class_label = "e";
  CHECK(run(bad).exit_code == kPrecondition);
  bad.class_label = "nope";
  CHECK(run(bad).exit_code == kValidation);
  JobSpec singular = job("dirac");
  singular.mu = "-1/3";
  CHECK(run(singular).exit_code == kPrecondition);
  JobSpec usage = job("dirac");
  usage.group = "cyclic:4";
  CHECK(run(usage).exit_code == kUsage);
  usage = job("bogus");
  CHECK(run(usage).exit_code == kUsage);
}

TEST_CASE("report determinism") {
  JobSpec s = job("report-all");
  s.pretty = true;
  const auto a = run(s);
  const auto b = run(s);
  REQUIRE(a.exit_code == kOk);
  CHECK(a.report == b.report);
  const auto r = Json::parse(a.report);
  std::vector<std::string> keys;
  for (const auto& [k, v] : r.items()) keys.push_back(k);
  CHECK(keys == std::vector<std::string>{"input", "calculus", "connection", "curvature", "ricci", "dirac", "wave",
                                         "spectral_action"});
}
