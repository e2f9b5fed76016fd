#include <doctest.h>

#include <cstdlib>
#include <sstream>

#include "cli.hpp"
#include "fillcurve/io.hpp"
#include "support.hpp"

using namespace testing;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = fillcurve::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

bool throws_code(Errc code, const auto& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code() == code;
  }
  return false;
}

template <class Doc, class From>
void check_round_trip(const Doc& d, From from) {
  const Json j = to_json(d);
  const Doc back = from(j);
  CHECK(back == d);
  CHECK(dump(to_json(back)) == dump(j));
  CHECK(from(Json::parse(dump(j))) == d);
}

}  // namespace

TEST_CASE("element and form syntax") {
  const Field F3 = canonical_field(3);
  CHECK(parse_element(F3, "2") == el(F3, 2));
  CHECK(parse_element(F3, "-1") == el(F3, 2));
  CHECK(parse_element(F3, " 4 ") == el(F3, 1));
  const Field F9 = canonical_field(9);
  const Fel t = Fel::generator(F9);
  CHECK(parse_element(F9, "0,1") == t);
  CHECK(parse_element(F9, "2") == el(F9, 2));
  CHECK(parse_form(F3, "1,0,2,0,1") == form(3, {1, 0, -1, 0, 1}));
  CHECK(parse_form(F9, "[1,0],[0,1],2") == BinForm(F9, {el(F9, 1), t, el(F9, 2)}));
  CHECK(parse_poly(F3, "1,0,1") == poly(F3, {1, 0, 1}));

  // nested tower: F_16 over F_4
  const Field F4 = canonical_field(4);
  const Field F16 = extend(smallest_irreducible(F4, 2));
  Rng rng(3);
  for (int i = 0; i < 20; ++i) {
    const Fel a = random_element(F16, rng);
    CHECK(parse_element(F16, a.to_string()) == a);
    const BinForm f = random_form(F16, 3, rng);
    CHECK(parse_form(F16, f.to_string()) == f);
  }
  for (int i = 0; i < 20; ++i) {
    const BinForm f = random_form(F9, 10, rng);
    CHECK(parse_form(F9, f.to_string()) == f);
  }

  for (const char* bad : {"", "x", "1,,2", "1.5", "[1,2]"})
    CHECK(throws_code(Errc::parse, [&] { parse_form(F3, bad); }));
  for (const char* bad : {"1,2,3", "[1,0", "a,b", "1,0]"})
    CHECK(throws_code(Errc::parse, [&] { parse_element(F9, bad); }));
  CHECK(parse_form(F9, "0,1,1,0") == BinForm(F9, {el(F9, 0), el(F9, 1), el(F9, 1), el(F9, 0)}));
  CHECK(throws_code(Errc::parse, [&] { parse_form(F3, "1"); }));
}

TEST_CASE("documents round-trip through JSON") {
  Rng rng(1);
  const BinForm o22 = form(3, {1, 0, -1, 0, 1});
  const BinForm o2p2 = form(3, {1, 0, 0, 0, 1});
  check_round_trip(make_report_doc(o22, o22, check_smoothness(o22, o22, rng)), report_from_json);
  check_round_trip(make_report_doc(o2p2, o22, check_smoothness(o2p2, o22, rng)), report_from_json);
  check_round_trip(make_report_doc(o22, o22, check_smoothness_by_scan(o22, o22)), report_from_json);
  const CensusResult c = census(3);
  check_round_trip(make_census_doc(c), census_from_json);
  check_round_trip(make_orbits_doc(c.table), orbits_from_json);
  check_round_trip(make_sample_doc(sample_stats(3, 50, 4)), sample_from_json);
  check_round_trip(make_construct_doc(o22, construct_partner(o22, rng)), construct_from_json);
  const BinForm f7 = symmetric_form(7, 0, 0);
  check_round_trip(make_construct_doc(f7, construct_partner(f7, rng)), construct_from_json);
  check_round_trip(make_symmetric_doc(9, 1, 2, symmetric_form(9, 1, 2)), symmetric_from_json);

  Json j = to_json(make_sample_doc(sample_stats(3, 5, 4)));
  CHECK(j["schema_version"] == 1);
  CHECK(j.contains("library_version"));
  j["schema_version"] = 99;
  CHECK(throws_code(Errc::parse, [&] { sample_from_json(j); }));
  CHECK(throws_code(Errc::parse, [&] { census_from_json(to_json(make_sample_doc(sample_stats(3, 5, 4)))); }));
}

TEST_CASE("golden census fixtures") {
  for (int q : {2, 3}) {
    const std::string name = "census_q" + std::to_string(q) + ".json";
    const std::string golden = fixture(name);
    CHECK(dump(to_json(make_census_doc(census(q)))) == golden);
    const Run r = run({"census", "--q", std::to_string(q)});
    CHECK(r.code == 0);
    CHECK(r.out == golden);
    CHECK(dump(to_json(census_from_json(Json::parse(golden)))) == golden);
  }
  const CensusDoc d3 = census_from_json(Json::parse(fixture("census_q3.json")));
  CHECK(d3.total_smooth_pairs == 1584);
  CHECK(d3.orbits.size() == 7);
  CHECK(census_from_json(Json::parse(fixture("census_q2.json"))).total_smooth_pairs == 0);
}

TEST_CASE("check command") {
  Run r = run({"check", "--q", "3", "--f", "1,0,2,0,1", "--g", "1,0,2,0,1"});
  CHECK(r.code == 0);
  const ReportDoc d = report_from_json(Json::parse(r.out));
  CHECK_FALSE(d.smooth);
  REQUIRE(d.witness);
  CHECK(d.space_filling);

  r = run({"check", "--q", "3", "--f", "1,0,0,0,1", "--g", "1,0,2,0,1"});
  CHECK(r.code == 0);
  CHECK(report_from_json(Json::parse(r.out)).smooth);

  r = run({"check", "--q", "3", "--f", "1,0,0,0,0", "--g", "1,0,2,0,1"});
  CHECK(r.code == 2);
  CHECK(r.err.find("V(f)") != std::string::npos);
  CHECK(r.err.find("(0:1)") != std::string::npos);

  r = run({"check", "--q", "3", "--f", "1,0,0,0,1", "--g", "1,2,0,0,0"});
  CHECK(r.code == 2);
  CHECK(r.err.find("V(g)") != std::string::npos);

  CHECK(run({"check", "--q", "3", "--f", "1,0,x", "--g", "1,0,2,0,1"}).code == 1);
  CHECK(run({"check", "--q", "3", "--f", "1,0,1", "--g", "1,0,2,0,1"}).code == 1);
  CHECK(run({"check", "--q", "12", "--f", "1,0,1", "--g", "1,0,2,0,1"}).code == 1);
  CHECK(run({"check", "--q", "3"}).code != 0);
  CHECK(run({"bogus"}).code != 0);

  r = run({"check", "--q", "3", "--f", "1,0,0,0,1", "--g", "1,0,2,0,1", "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(r.out == "q,f,g,space_filling,smooth,method,compositum_degree\n3,\"1,0,0,0,1\",\"1,0,2,0,1\",1,1,factor_gcd,\n");
}

TEST_CASE("symmetric, construct, orbits and sample commands") {
  Run r = run({"symmetric", "--q", "3", "--variant", "0", "--index", "0"});
  CHECK(r.code == 0);
  CHECK(symmetric_from_json(Json::parse(r.out)).f == std::vector<std::string>{"1", "0", "0", "1", "2"});
  CHECK(run({"symmetric", "--q", "3", "--index", "1"}).code == 2);
  CHECK(run({"symmetric", "--q", "4"}).code == 2);

  r = run({"construct", "--q", "7", "--f", "1,0,0,0,0,0,0,1,3"});
  CHECK(r.code == 0);
  const ConstructDoc cd = construct_from_json(Json::parse(r.out));
  CHECK(cd.trace.method == "galois_avoidance");
  const Field F7 = canonical_field(7);
  Rng rng(0);
  CHECK_FALSE(singular_witness(parse_form(F7, "1,0,0,0,0,0,0,1,3"), BinForm(F7, [&] {
                                 std::vector<Fel> cs;
                                 for (const auto& s : cd.g) cs.push_back(parse_element(F7, s));
                                 return cs;
                               }()),
                               rng));
  CHECK(run({"construct", "--q", "4", "--f", "1,1,0,0,1"}).code == 2);

  r = run({"orbits", "--q", "3"});
  CHECK(r.code == 0);
  CHECK(orbits_from_json(Json::parse(r.out)).orbits.size() == 7);
  CHECK(run({"orbits", "--q", "7"}).code == 3);

  r = run({"sample", "--q", "3", "--n", "1000", "--seed", "42"});
  CHECK(r.code == 0);
  const SampleDoc sd = sample_from_json(Json::parse(r.out));
  CHECK(sd.smooth >= 644);
  CHECK(sd.smooth <= 731);
  CHECK(run({"sample", "--q", "3", "--n", "1000", "--seed", "42", "--jobs", "3"}).out == r.out);
  CHECK(run({"sample", "--q", "3", "--n", "1000", "--seed", "42", "--format", "csv"}).out ==
        "q,n,seed,smooth\n3,1000,42," + std::to_string(sd.smooth) + "\n");
}

TEST_CASE("outputs are byte-identical across runs and worker counts") {
  const Run a = run({"census", "--q", "3", "--jobs", "1"});
  const Run b = run({"census", "--q", "3", "--jobs", "4"});
  const Run c = run({"census", "--q", "3"});
  CHECK(a.out == b.out);
  CHECK(a.out == c.out);
  CHECK(run({"census", "--q", "3", "--format", "csv"}).out == run({"census", "--q", "3", "--format", "csv", "--jobs", "2"}).out);
}

TEST_CASE("guards and the override") {
  CHECK(run({"census", "--q", "7"}).code == 3);
  CHECK(run({"orbits", "--q", "29"}).code == 3);
  ::unsetenv("FILLCURVE_GUARD_OVERRIDE");
  CHECK_FALSE(fillcurve::cli::env_override());
  ::setenv("FILLCURVE_GUARD_OVERRIDE", "", 1);
  CHECK_FALSE(fillcurve::cli::env_override());
  ::setenv("FILLCURVE_GUARD_OVERRIDE", "0", 1);
  CHECK_FALSE(fillcurve::cli::env_override());
  ::setenv("FILLCURVE_GUARD_OVERRIDE", "1", 1);
  CHECK(fillcurve::cli::env_override());
  // cheap command still works under the override
  const Run r = run({"census", "--q", "2"});
  ::unsetenv("FILLCURVE_GUARD_OVERRIDE");
  CHECK(r.code == 0);
  CHECK(r.out == fixture("census_q2.json"));
}

TEST_CASE("artifact files and summaries") {
  const std::string path = "test_io_cli_sample.json";
  const Run r = run({"sample", "--q", "3", "--n", "100", "--seed", "7", "--out", path});
  CHECK(r.code == 0);
  const SampleDoc d = sample_from_json(Json::parse(read_file(path)));
  CHECK(r.out == std::to_string(d.smooth) + "/100\n");
  std::remove(path.c_str());
  CHECK(run({"sample", "--q", "3", "--n", "1", "--out", "/nonexistent-dir/x.json"}).code == 4);
}
