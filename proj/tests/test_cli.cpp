#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "ppfast/abstract.hpp"
#include "ppfast/fixtures.hpp"
#include "support/support.hpp"

using namespace ppfast;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& text) {
  auto path = std::filesystem::temp_directory_path() / ("ppfast_" + name);
  std::ofstream(path) << text;
  return path.string();
}

}  // namespace

TEST_CASE("exit codes") {
  CHECK(run({"check", "fixture:F 2"}).code == 0);
  CHECK(run({"check", "fixture:slow-F2"}).code == 1);
  CHECK(run({"check", "fixture:infinite-bump"}).code == 1);
  CHECK(run({"identity", "fixture:F 2", "h0 h1 h0^-1 h1^-1"}).code == 1);
  CHECK(run({"identity", "fixture:F 2", "h0 h0^-1"}).code == 0);
  CHECK(run({"iso", "fixture:F 2", "fixture:F2-powers"}).code == 0);
  CHECK(run({"iso", "fixture:F 2", "fixture:brin-navas"}).code == 1);
  CHECK(run({"excise", "fixture:excision"}).code == 0);
  CHECK(run({"excise", "fixture:F 2"}).code == 1);
  CHECK(run({"blueprint", "faithful", "fixture:psl2"}).code == 0);
  CHECK(run({"blueprint", "faithful", "fixture:psl2-squares"}).code == 1);
  CHECK(run({"blueprint", "free", "fixture:psl2"}).code == 0);
  CHECK(run({"blueprint", "free", "fixture:F 2", "--maxlen", "12"}).code == 1);
  CHECK(run({"blueprint", "iso", "fixture:psl2", "fixture:psl2-squares"}).code ==
        1);
  CHECK(run({"translate", "fixture:F 2", "fixture:F2-powers", "h0 h1^-1"})
            .code == 0);
}

TEST_CASE("input errors exit with 2") {
  auto r = run({"check", "/nonexistent/file.json"});
  CHECK(r.code == 2);
  CHECK(r.err.rfind("error: ", 0) == 0);
  CHECK(run({"check", "fixture:no-such"}).code == 2);
  CHECK(run({"check", "fixture:psl2"}).code == 2);
  CHECK(run({"identity", "fixture:F 2", "h7"}).code == 2);
  CHECK(run({"reduce", "fixture:F 2", "h0 h1"}).code == 2);
  CHECK(run({"nonsense"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"blueprint", "classify", "fixture:F 2", "--bound", "3"}).code ==
        2);
  CHECK(run({"realize", "fixture:chain-decomp", "--terminal"}).code == 2);
  std::string bad = write_temp("bad.json", "{ not json");
  CHECK(run({"check", bad}).code == 2);
  std::string wrong = write_temp("wrong.json", "[{\"name\": \"a\"}]");
  CHECK(run({"check", wrong}).code == 2);
}

TEST_CASE("json output matches the library") {
  Family h = thompson_h_family(2);
  CHECK(run({"--json", "check", "fixture:F 2"}).out ==
        cli::fastness_json(h).dump(2) + "\n");
  CHECK(run({"--json", "mark", "fixture:F 2"}).out ==
        Json{{"marking", cli::marking_json(h)}, {"feet_disjoint", true}}
                .dump(2) +
            "\n");
  auto bn = fixture("brin-navas").families.at("bn");
  CHECK(run({"--json", "diagram", "fixture:brin-navas"}).out ==
        to_json(diagram_of(bn)).dump(2) + "\n");
  auto d = *fixture("geo-fast").diagram;
  std::string dpath = write_temp("geo.json", to_json(d).dump());
  CHECK(run({"--json", "realize", dpath, "--terminal"}).out ==
        to_json(realize_terminal(d)).dump(2) + "\n");
  CHECK(run({"--json", "realize", dpath, "--dyadic"}).out ==
        to_json(realize_dyadic(d)).dump(2) + "\n");
  CHECK(run({"render", dpath}).out == render(d));
  auto iso = run({"--json", "iso", "fixture:F 2", "fixture:F2-powers"});
  CHECK(iso.out ==
        to_json(*are_isomorphic(diagram_of(h),
                                diagram_of(fixture("F2-powers").families.at("h"))))
                .dump(2) +
            "\n");
  auto ex = fixture("excision").families.at("x");
  FastSystem sys(ex);
  CHECK(run({"--json", "excise", "fixture:excision"}).out ==
        Json::array({to_json(find_extraneous(ex)[0], sys)}).dump(2) + "\n");
  CHECK(run({"--json", "excise", "fixture:excision", "--apply", "0"}).out ==
        to_json(excise(ex, find_extraneous(ex)[0])).dump(2) + "\n");
  CHECK(run({"--json", "fixtures", "psl2"}).out ==
        to_json(fixture("psl2")).dump(2) + "\n");
}

TEST_CASE("text output") {
  auto r = run({"reduce", "fixture:F 2", "~h0 h0 h1"});
  CHECK(r.out == "~h0 h0 h1 = 2 (input in Lambda)\n");
  CHECK(run({"reduce", "fixture:F 2", "~h0 h1"}).out == "~h0 = 1\n");
  auto orbit = run({"orbit", "fixture:F 2", "--depth", "2"});
  CHECK(orbit.code == 0);
  CHECK(orbit.out.find("~h0 h0 h1 = 2\n") != std::string::npos);
  CHECK(run({"translate", "fixture:F 2", "fixture:F2-powers", "h0 h1^-1"}).out ==
        "h0 h1^-1\n");
  auto cls = run({"blueprint", "classify", "fixture:psl2"});
  CHECK(cls.code == 0);
  CHECK(cls.out.rfind("cyclically orderable (T)", 0) == 0);
  auto f4 = run({"blueprint", "classify", "fixture:F 4"});
  CHECK(f4.out.rfind("orderable (F)", 0) == 0);
  auto list = run({"fixtures"});
  for (const auto& n : fixture_names()) {
    CHECK(list.out.find(n + "\n") != std::string::npos);
  }
}

TEST_CASE("fixtures round-trip through files") {
  for (const auto& name : fixture_names()) {
    CAPTURE(name);
    auto emitted = run({"fixtures", name});
    REQUIRE(emitted.code == 0);
    std::string path = write_temp("fx.json", emitted.out);
    Fixture f = fixture(name);
    Json j = read_json_file(path);
    for (const auto& [key, fam] : f.families) {
      Family back = family_from_json(j, key);
      REQUIRE(back.size() == fam.size());
      for (std::size_t i = 0; i < fam.size(); ++i) {
        CHECK(back[i].name == fam[i].name);
        CHECK(back[i].map == fam[i].map);
      }
    }
    if (f.diagram) CHECK(diagram_from_json(j) == *f.diagram);
    if (f.witness) {
      auto b1 = blueprint_of(*f.witness);
      auto b2 = blueprint_of(witness_from_json(j));
      CHECK(b1.names() == b2.names());
      CHECK(b1.relation() == b2.relation());
    }
  }
}

TEST_CASE("property: random families agree with the library") {
  auto r = support::rng(61);
  for (int it = 0; it < 60; ++it) {
    auto bumps = support::random_proper_bumps(r);
    std::vector<PLMap> maps;
    for (const auto& b : bumps) maps.push_back(b.map());
    Family x = Family::unnamed(maps);
    std::string path = write_temp("rand.json", to_json(x).dump());
    auto res = run({"--json", "check", path});
    bool fast = is_geometrically_fast(x).fast;
    CHECK(res.code == (fast ? 0 : 1));
    CHECK(res.out == cli::fastness_json(x).dump(2) + "\n");
    Blueprint bp;
    if (fast) {
      bp = blueprint_of(FastSystem(x));
      std::string bpath = write_temp("bp.json", to_json(bp).dump());
      Blueprint back = blueprint_from_json(read_json_file(bpath));
      CHECK(back.names() == bp.names());
      CHECK(back.relation() == bp.relation());
      CHECK(back.inverse_map() == bp.inverse_map());
      CHECK(run({"blueprint", "validate", bpath}).code == 0);
    }
  }
}
