#include <doctest.h>

#include "ppfast/error.hpp"
#include "ppfast/fixtures.hpp"
#include "support/support.hpp"

using namespace ppfast;

namespace {

Rational q(const char* s) { return parse_rational(s); }

DynamicalDiagram chain2() {
  return DynamicalDiagram(4, {{0, 2, "b0"}, {1, 3, "b1"}});
}

bool all_dyadic(const Family& x) {
  for (const auto& g : x) {
    for (const auto& p : g.map.breakpoints()) {
      if (!is_dyadic(p.x) || !is_dyadic(p.y)) return false;
    }
    const auto& pts = g.map.breakpoints();
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
      Rational s = (pts[i + 1].y - pts[i].y) / (pts[i + 1].x - pts[i].x);
      if (!is_power_of_two(s)) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("diagram validation") {
  CHECK_THROWS_AS(DynamicalDiagram(3, {{0, 1, "a"}}), PreconditionError);
  CHECK_THROWS_AS(DynamicalDiagram(2, {{0, 0, "a"}}), PreconditionError);
  CHECK_THROWS_AS(DynamicalDiagram(4, {{0, 2, "a"}, {2, 3, "b"}}),
                  PreconditionError);
  CHECK_THROWS_AS(DynamicalDiagram(4, {{0, 2, "a"}, {1, 3, "a"}}),
                  PreconditionError);
  CHECK_NOTHROW(DynamicalDiagram(4, {{0, 1, "a"}, {2, 3, "a"}}));
}

TEST_CASE("diagram of a family") {
  Bump b(PLMap::from_breakpoints({{0, 0}, {q("1/2"), q("3/4")}, {1, 1}}));
  auto d1 = diagram_of(Family({{"a", b.map()}}));
  CHECK(d1.feet() == 2);
  REQUIRE(d1.edges().size() == 1);
  CHECK(d1.edges()[0] == Edge{0, 1, "a"});

  FastSystem f2(thompson_h_family(2));
  CHECK(f2.vertex_intervals() ==
        std::vector<Interval>{Interval::open(0, 1), Interval::open(1, q("3/2")),
                              Interval::closed_open(q("3/2"), 2),
                              Interval::closed_open(2, XRational::pos_inf())});
  CHECK(f2.diagram().edges() ==
        std::vector<Edge>{{0, 2, "h0"}, {1, 3, "h1"}});

  auto bn = diagram_of(fixture("brin-navas").families.at("bn"));
  CHECK(bn.feet() == 6);
  CHECK(bn.edges() ==
        std::vector<Edge>{{2, 0, "f"}, {4, 1, "g"}, {3, 5, "f"}});

  CHECK_THROWS_AS(diagram_of(fixture("slow-F2").families.at("x")),
                  NotFastError);
}

TEST_CASE("render uses the contraction convention") {
  auto bn = diagram_of(fixture("brin-navas").families.at("bn"));
  std::string text = render(bn);
  std::string header = text.substr(0, text.find('\n'));
  CHECK(std::count(header.begin(), header.end(), '*') == 5);
  CHECK(header.back() == '*');
  CHECK(text ==
        "   *     *     *     *     *\n"
        "f  <-----------+\n"
        "g        <-----------+\n"
        "f              +----------->\n");
  auto cd = *fixture("chain-decomp").diagram;
  std::string t2 = render(cd);
  std::string h2 = t2.substr(0, t2.find('\n'));
  CHECK(std::count(h2.begin(), h2.end(), '*') == 10);
}

TEST_CASE("isomorphism") {
  auto d = diagram_of(thompson_h_family(2));
  auto self = are_isomorphic(d, d);
  REQUIRE(self);
  CHECK(self->vertex_map == std::vector<std::size_t>{0, 1, 2, 3});
  CHECK(self->labels == std::map<std::string, std::string>{{"h0", "h0"},
                                                           {"h1", "h1"}});
  auto pw = diagram_of(fixture("F2-powers").families.at("h"));
  CHECK(are_isomorphic(d, pw));
  Family h = thompson_h_family(2);
  auto cubed = diagram_of(Family({{"h0", power(h[0].map, 3)},
                                  {"h1", power(h[1].map, 2)}}));
  CHECK(are_isomorphic(d, cubed));
  DynamicalDiagram rev(4, {{2, 0, "h0"}, {1, 3, "h1"}});
  CHECK_FALSE(are_isomorphic(d, rev));
  DynamicalDiagram merged(4, {{0, 2, "x"}, {1, 3, "y"}});
  auto relabel = are_isomorphic(d, merged);
  REQUIRE(relabel);
  CHECK(relabel->labels.at("h0") == "x");
  DynamicalDiagram split(4, {{0, 1, "x"}, {2, 3, "x"}});
  DynamicalDiagram split2(4, {{0, 1, "x"}, {2, 3, "y"}});
  CHECK_FALSE(are_isomorphic(split, split2));
}

TEST_CASE("eliminate isolated edges") {
  auto d = chain2();
  CHECK(eliminate_isolated(d) == d);
  DynamicalDiagram one(2, {{0, 1, "a"}});
  auto e = eliminate_isolated(one);
  CHECK(e.feet() == 6);
  CHECK(e.edges() == std::vector<Edge>{{0, 5, "a"}, {1, 3, "a~0"},
                                       {2, 4, "a~1"}});
  CHECK_FALSE(e.has_isolated());

  auto cd = *fixture("chain-decomp").diagram;
  auto ce = eliminate_isolated(cd);
  CHECK(ce.feet() == cd.feet() + 4);
  CHECK_FALSE(ce.has_isolated());
  // a4 ran 5 -> 6; its feet are now 5 and 10 with the new feet between.
  for (const auto& edge : ce.edges()) {
    if (edge.label == "a4") {
      CHECK(edge.src == 5);
      CHECK(edge.dst == 10);
    }
  }
  // Dropping the inserted feet gives back the original.
  std::vector<Edge> kept;
  for (const auto& edge : ce.edges()) {
    if (edge.label.find('~') != std::string::npos) continue;
    auto back = [](std::size_t v) { return v > 5 ? v - 4 : v; };
    kept.push_back({back(edge.src), back(edge.dst), edge.label});
  }
  CHECK(DynamicalDiagram(cd.feet(), kept) == cd);
}

TEST_CASE("terminal realization") {
  Family t = realize_terminal(chain2());
  REQUIRE(t.size() == 2);
  CHECK(t[0].map.breakpoints() ==
        std::vector<Breakpoint>{{0, 0}, {q("1/4"), q("1/2")}, {q("3/4"), q("3/4")}});
  CHECK(t[1].map.breakpoints() ==
        std::vector<Breakpoint>{{q("1/4"), q("1/4")}, {q("1/2"), q("3/4")}, {1, 1}});

  auto one = eliminate_isolated(DynamicalDiagram(2, {{0, 1, "a"}}));
  Family three = realize_terminal(one);
  CHECK(three.size() == 3);
  auto m = canonical_marking(BumpFamily::of(three));
  CHECK(feet_disjoint(m.feet));
  CHECK(are_isomorphic(diagram_of(three), one));

  CHECK_THROWS_AS(realize_terminal(DynamicalDiagram(2, {{0, 1, "a"}})),
                  PreconditionError);
  CHECK_THROWS_AS(realize_terminal(*fixture("chain-decomp").diagram),
                  PreconditionError);
}

TEST_CASE("dyadic realization") {
  Family one = realize_dyadic(DynamicalDiagram(2, {{0, 1, "a"}}));
  REQUIRE(one.size() == 1);
  CHECK(all_dyadic(one));
  CHECK(are_isomorphic(diagram_of(one), DynamicalDiagram(2, {{0, 1, "a"}})));
  Family two = realize_dyadic(chain2());
  CHECK(all_dyadic(two));
  CHECK(are_isomorphic(diagram_of(two), chain2()));
  CHECK(realize_dyadic(DynamicalDiagram(0, {})).empty());
  auto pieces = dyadic_pieces(0, 1, q("1/4"), q("3/4"));
  CHECK(pieces.front() == Breakpoint{0, q("1/4")});
  CHECK(pieces.back() == Breakpoint{1, q("3/4")});
}

TEST_CASE("property: realizations round-trip through diagram_of") {
  auto r = support::rng(21);
  for (int it = 0; it < 150; ++it) {
    auto d = support::random_diagram(r, 4, false);
    Family t = realize_terminal(d);
    auto back = are_isomorphic(diagram_of(t), d);
    CHECK(back);
    for (std::size_t i = 0; i < t.size(); ++i) {
      for (const auto& sb : signed_bumps(t[i].map)) {
        const PLMap& b = sb.bump.map();
        Rational x = sb.bump.left().value();
        Rational y = sb.bump.right().value();
        CHECK(b.slope_after(x) >= 2);
        CHECK(invert(b).slope_before(y) >= 2);
      }
    }
  }
  for (int it = 0; it < 150; ++it) {
    auto d = support::random_diagram(r, 4, true);
    Family y = realize_dyadic(d);
    CHECK(all_dyadic(y));
    CHECK(are_isomorphic(diagram_of(y), d));
    auto e = eliminate_isolated(d);
    CHECK_FALSE(e.has_isolated());
    CHECK(are_isomorphic(diagram_of(realize_terminal(e)), e));
  }
}

TEST_CASE("property: the isomorphism is the order-forced one") {
  auto r = support::rng(22);
  for (int it = 0; it < 300; ++it) {
    auto a = support::random_diagram(r, 3, true);
    auto b = support::random_diagram(r, 3, true);
    auto iso = are_isomorphic(a, b);
    auto naive = support::naive_label_map(a, b);
    CHECK(iso.has_value() == naive.has_value());
    if (iso && naive) {
      CHECK(iso->labels == *naive);
      for (std::size_t v = 0; v < iso->vertex_map.size(); ++v) {
        CHECK(iso->vertex_map[v] == v);
      }
    }
  }
}

TEST_CASE("property: powers keep the diagram") {
  auto r = support::rng(23);
  int tested = 0;
  for (int it = 0; it < 200 && tested < 100; ++it) {
    auto bumps = support::random_proper_bumps(r);
    std::vector<Generator> gens;
    for (std::size_t i = 0; i < bumps.size(); ++i) {
      gens.push_back({"x" + std::to_string(i), bumps[i].map()});
    }
    Family x(gens);
    if (!is_geometrically_fast(x).fast) continue;
    ++tested;
    std::vector<Generator> pw;
    for (const auto& g : x) {
      pw.push_back({g.name, power(g.map, support::uniform(r, 1, 4))});
    }
    CHECK(are_isomorphic(diagram_of(x), diagram_of(Family(pw))));
  }
  CHECK(tested > 20);
}
