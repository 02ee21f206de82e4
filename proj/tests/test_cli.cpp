#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include "weylhull/absorption.hpp"
#include "weylhull/arrangement.hpp"
#include "weylhull/asymptotics.hpp"
#include "weylhull/cli.hpp"
#include "weylhull/cones.hpp"
#include "weylhull/serialize.hpp"

using namespace weylhull;

namespace {

struct Run {
  int code = 0;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  Run r;
  r.code = dispatch(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

std::vector<std::string> split(const std::string& s, char sep = ',') {
  std::vector<std::string> out;
  std::stringstream in(s);
  for (std::string f; std::getline(in, f, sep);) out.push_back(f);
  return out;
}

const std::string kData = WEYLHULL_TEST_DATA_DIR;

}  // namespace

TEST_CASE("exact: json output round-trips") {
  const auto r = run({"exact", "--family", "walk-B", "--steps", "10", "--dim", "2", "--format", "json"});
  REQUIRE(r.code == kExitOk);
  const auto j = Json::parse(r.out);
  const auto expected = absorption_probability(WalkFamily::walk_b(10, 2));
  CHECK(j.at("absorb").at("num").get<std::string>() == expected.absorb.get_num().get_str());
  CHECK(j.at("absorb").at("float").get<double>() == doctest::Approx(to_double(expected.absorb)));
  CHECK(j.at("non_absorb").at("den").get<std::string>() == expected.non_absorb.get_den().get_str());
  CHECK(j.get<AbsorptionResult>() == expected);
  CHECK(j.at("config").at("family") == "walk-B");
}

TEST_CASE("exact: plain and float modes") {
  const auto r = run({"exact", "--family", "bridge-A", "--steps", "3", "--dim", "1"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("absorb: 1/3") != std::string::npos);
  const auto f = run({"exact", "--family", "walk-B", "--steps", "1000000", "--dim", "7", "--mode", "float"});
  CHECK(f.code == kExitOk);
  const auto j = run({"exact", "--family", "joint-B", "--steps", "1,1,1", "--dim", "2", "--format", "json"});
  CHECK(Json::parse(j.out).at("non_absorb").at("num") == "3");
}

TEST_CASE("simulate: csv row with seed and z-score") {
  const std::vector<std::string> args{"simulate", "--model", "gaussian", "--family", "walk-B", "--steps", "3",
                                      "--dim",    "1",       "--samples", "100000", "--seed", "42"};
  const auto r = run(args);
  REQUIRE(r.code == kExitOk);
  const auto ls = lines(r.out);
  REQUIRE(ls.size() == 3);
  CHECK(ls[0].find("seed=42") != std::string::npos);
  CHECK(ls[1] == "family,n,d,model,samples,seed,p_hat,stderr,ci_lo,ci_hi,exact,z_score,ambiguous_fraction");
  const auto f = split(ls[2]);
  REQUIRE(f.size() == 13);
  CHECK(f[5] == "42");
  const double p = std::stod(f[6]), se = std::stod(f[7]);
  CHECK(std::abs(p - 0.375) <= 4 * se);
  CHECK(std::stod(f[10]) == 0.375);
  CHECK(std::stod(f[11]) == doctest::Approx((p - 0.375) / se));

  // Byte-identical on rerun and across thread counts.
  CHECK(run(args).out == r.out);
  auto threaded = args;
  threaded.insert(threaded.end(), {"--threads", "3"});
  CHECK(run(threaded).out == r.out);
  setenv("WEYLHULL_THREADS", "2", 1);
  CHECK(run(args).out == r.out);
  unsetenv("WEYLHULL_THREADS");
}

TEST_CASE("simulate: default and random seeds are echoed") {
  const auto r = run({"simulate", "--family", "walk-B", "--steps", "4", "--dim", "2", "--samples", "2000"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("seed=" + std::to_string(kDefaultSeed)) != std::string::npos);
  const auto j = run({"simulate", "--family", "walk-B", "--steps", "4", "--dim", "2", "--samples", "2000", "--seed",
                      "random", "--format", "json"});
  REQUIRE(j.code == kExitOk);
  const auto doc = Json::parse(j.out);
  CHECK(doc.at("config").at("seed") == doc.at("absorb").at("seed"));
  const auto est = doc.at("absorb").get<MCEstimate>();
  CHECK(Json(est) == doc.at("absorb"));
}

TEST_CASE("simulate: user matrix model") {
  const auto r = run({"simulate", "--model", "user-matrix", "--matrix", kData + "/steps2d.txt", "--family", "walk-B",
                      "--steps", "6", "--dim", "2", "--samples", "2000"});
  CHECK(r.code == kExitOk);
  CHECK(run({"simulate", "--model", "user-matrix", "--family", "walk-B", "--steps", "6", "--dim", "2"}).code ==
        kExitUsage);
}

TEST_CASE("arrangement charpoly from a file") {
  const auto r = run({"arrangement", "charpoly", "--file", kData + "/b3.arr"});
  REQUIRE(r.code == kExitOk);
  CHECK(lines(r.out).back() == "a: [15, 23, 9, 1]");
  const auto j = run({"arrangement", "charpoly", "--type", "B", "--n", "3", "--format", "json"});
  const auto chi = Json::parse(j.out).get<CharacteristicPolynomial>();
  CHECK(chi == reflection_characteristic_polynomial(ReflectionType::B, 3));
}

TEST_CASE("arrangement regions and intersect") {
  const auto r = run({"arrangement", "regions", "--type", "B", "--n", "2", "--enumerate", "--format", "json"});
  REQUIRE(r.code == kExitOk);
  const auto j = Json::parse(r.out);
  CHECK(j.at("regions") == "8");
  CHECK(j.at("sign_vectors").size() == 8);

  const auto i = run({"arrangement", "intersect", "--type", "B", "--n", "3", "--codim", "1", "--random", "--seed",
                      "5", "--format", "json"});
  REQUIRE(i.code == kExitOk);
  const auto ij = Json::parse(i.out);
  CHECK(ij.at("predicted") == "18");
  CHECK(ij.at("observed") == 18);

  const auto s = run({"arrangement", "intersect", "--type", "B", "--n", "2", "--subspace", kData + "/diagonal.sub",
                      "--mode", "closed"});
  REQUIRE(s.code == kExitOk);
  CHECK(s.out.find("observed: 4") != std::string::npos);
  CHECK(run({"arrangement", "intersect", "--type", "B", "--n", "3", "--codim", "3"}).code == kExitUsage);
}

TEST_CASE("cone subcommands") {
  const auto v = run({"cone", "volumes", "--type", "B", "--n", "2", "--format", "json"});
  REQUIRE(v.code == kExitOk);
  CHECK(Json::parse(v.out).get<IntrinsicVolumeVector>() == weyl_intrinsic_volumes(ReflectionType::B, 2));

  const auto c = run({"cone", "crofton", "--type", "B", "--n", "3", "--codim", "1", "--samples", "20000", "--seed",
                      "3", "--format", "json"});
  REQUIRE(c.code == kExitOk);
  const auto cj = Json::parse(c.out);
  const auto est = cj.at("estimate").get<MCEstimate>();
  CHECK(est.seed == 3);
  CHECK(est.samples == 20000);
  CHECK(std::abs(est.p_hat - 3.0 / 16.0) <= 4 * est.stderr_);

  const auto s = run({"cone", "steiner", "--type", "A", "--n", "3", "--samples", "20000", "--format", "csv"});
  REQUIRE(s.code == kExitOk);
  CHECK(std::stod(split(lines(s.out)[2])[0]) < 0.02);
}

TEST_CASE("coeffs") {
  const auto r = run({"coeffs", "--row", "product", "--steps", "2,1"});
  REQUIRE(r.code == kExitOk);
  CHECK(Json::parse(r.out).at("coefficients") == Json::array({"3", "7", "5", "1"}));
  const auto b = run({"coeffs", "--row", "B", "--n", "10", "--format", "csv"});
  CHECK(lines(b.out)[2] == "0,654729075");
}

TEST_CASE("asympt tables") {
  const auto r = run({"asympt", "--regime", "fixed-d", "--type", "B", "--param", "2", "--n", "1000,10000"});
  REQUIRE(r.code == kExitOk);
  const auto ls = lines(r.out);
  REQUIRE(ls.size() == 4);
  CHECK(ls[1] == "n,d,exact_float,asymptotic,ratio");
  CHECK(split(ls[2])[0] == "1000");
  const auto j = run({"asympt", "--regime", "ld", "--param", "2", "--n", "10000", "--format", "json"});
  REQUIRE(j.code == kExitOk);
  const auto row = Json::parse(j.out).at("rows").at(0).get<AsymptoticRow>();
  CHECK(row.n == 10000);
  CHECK(row.ratio == doctest::Approx(row.exact_float / row.asymptotic));
  CHECK(run({"asympt", "--regime", "ld", "--param", "1", "--n", "22026"}).code == kExitUsage);
}

TEST_CASE("verify") {
  const auto r = run({"verify", "combinatorics"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("PASS") != std::string::npos);
  CHECK(r.out.find("FAIL") == std::string::npos);
  CHECK(run({"verify", "combinatorics"}).out == r.out);
  CHECK(run({"verify", "topology"}).code == kExitUsage);
}

TEST_CASE("usage errors") {
  const auto unknown = run({"exact", "--family", "walk-B", "--steps", "3", "--dim", "1", "--colour", "red"});
  CHECK(unknown.code == kExitUsage);
  CHECK(unknown.err.find("--colour") != std::string::npos);
  CHECK(unknown.err.find("Usage") != std::string::npos);
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"exact", "--family", "walk-Q", "--steps", "3", "--dim", "1"}).code == kExitUsage);
  CHECK(run({"exact", "--family", "walk-B", "--steps", "3"}).code == kExitUsage);
  CHECK(run({"simulate", "--family", "walk-B", "--steps", "3", "--dim", "1", "--seed", "x"}).code == kExitUsage);
  CHECK(run({"exact", "--family", "walk-B", "--steps", "3", "--dim", "1", "--format", "xml"}).code == kExitUsage);
  CHECK(run({"arrangement", "charpoly", "--file", kData + "/missing.arr"}).code == kExitUsage);
  const auto help = run({"--help"});
  CHECK(help.code == kExitOk);
  CHECK(help.out.find("simulate") != std::string::npos);
}
