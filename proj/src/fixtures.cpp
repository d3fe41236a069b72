#include "ppfast/fixtures.hpp"

#include <regex>

#include "ppfast/error.hpp"

namespace ppfast {

PLMap thompson_g(long i, long n) {
  return PLMap::from_breakpoints({{Rational(i), Rational(i)},
                                  {Rational(i + 1), Rational(i + n)}},
                                 1, 1);
}

Family thompson_g_family(long n) {
  std::vector<Generator> gens;
  for (long i = 0; i < n; ++i) {
    gens.push_back({"g" + std::to_string(i), thompson_g(i, n)});
  }
  return Family(std::move(gens));
}

Family thompson_h_family(long n) {
  std::vector<Generator> gens;
  for (long i = 0; i + 1 < n; ++i) {
    gens.push_back({"h" + std::to_string(i),
                    compose(thompson_g(i, n), invert(thompson_g(i + 1, n)))});
  }
  gens.push_back({"h" + std::to_string(n - 1), thompson_g(n - 1, n)});
  return Family(std::move(gens));
}

namespace {

PLMap small_bump(const Rational& x) {
  return PLMap::from_breakpoints(
      {{x, x}, {x + Rational(1, 2), x + Rational(3, 4)}, {x + 1, x + 1}});
}

PPoint pt(const char* s) { return parse_ppoint(s); }

PingPongWitness psl2(long k) {
  // alpha^k: t -> t + k; beta^k: t -> t / (1 - k t).
  PingPongWitness w;
  w.generators = {{"alpha", Mobius{1, k, 0, 1}},
                  {"beta", Mobius{1, 0, -k, 1}}};
  if (k == 4) {
    w.dest["alpha"] = {{pt("2"), pt("inf")}};
    w.dest["alpha^-1"] = {{pt("inf"), pt("-2")}};
    w.dest["beta"] = {{pt("-1/2"), pt("0")}};
    w.dest["beta^-1"] = {{pt("0"), pt("1/2")}};
  } else {
    w.dest["alpha"] = {{pt("1"), pt("inf")}};
    w.dest["alpha^-1"] = {{pt("inf"), pt("-1")}};
    w.dest["beta"] = {{pt("-1"), pt("0")}};
    w.dest["beta^-1"] = {{pt("0"), pt("1")}};
  }
  return w;
}

}  // namespace

std::vector<std::string> fixture_names() {
  return {"F 2",         "Fn 3",          "F2-powers",   "brin-navas",
          "chain-decomp", "geo-fast",     "infinite-bump", "slow-F2",
          "excision",    "psl2",          "psl2-squares"};
}

Fixture fixture(const std::string& name) {
  Fixture f;
  f.name = name;
  static const std::regex fn(R"(Fn? *(\d+))");
  std::smatch m;
  if (std::regex_match(name, m, fn)) {
    long n = std::stol(m[1]);
    if (n < 2 || n > 32) {
      throw PreconditionError("F n needs 2 <= n <= 32");
    }
    f.note = "generators g_i and the chain h_i of F_" + std::to_string(n);
    f.families["g"] = thompson_g_family(n);
    f.families["h"] = thompson_h_family(n);
    f.default_family = "h";
    return f;
  }
  if (name == "F2-powers") {
    Family h = thompson_h_family(2);
    f.note = "h0^3 and h1^2 of the F_2 chain";
    f.families["h"] = Family({{"h0", power(h[0].map, 3)},
                              {"h1", power(h[1].map, 2)}});
    f.default_family = "h";
    return f;
  }
  if (name == "brin-navas") {
    Family a = thompson_h_family(3);
    f.note = "f = a0^-1 a2 and g = a1^-1 over a three-bump chain";
    f.families["bn"] =
        Family({{"f", compose(invert(a[0].map), a[2].map)},
                {"g", invert(a[1].map)}});
    f.families["chain"] = Family({{"a0", a[0].map},
                                  {"a1", a[1].map},
                                  {"a2", a[2].map}});
    f.default_family = "bn";
    return f;
  }
  if (name == "chain-decomp") {
    f.note = "twelve feet, chains {a0,a2}, {a1,a5}, {a3}; a4 isolated";
    f.diagram = DynamicalDiagram(12, {{0, 3, "a0"},
                                      {1, 8, "a1"},
                                      {2, 11, "a2"},
                                      {4, 9, "a3"},
                                      {5, 6, "a4"},
                                      {7, 10, "a5"}});
    f.families["dyadic"] = realize_dyadic(*f.diagram);
    f.default_family = "dyadic";
    return f;
  }
  if (name == "geo-fast") {
    f.note = "two-bump chain, feet (p,q), [r,s) and (q,r), [s,t)";
    f.diagram = DynamicalDiagram(4, {{0, 2, "a0"}, {1, 3, "a1"}});
    f.families["terminal"] = realize_terminal(*f.diagram);
    f.default_family = "terminal";
    return f;
  }
  if (name == "infinite-bump") {
    f.note = "two maps with right tail t+1; +inf is a right transition "
             "point of both";
    f.families["x"] = Family(
        {{"alpha", PLMap::from_breakpoints(
                       {{0, 0}, {Rational(1, 2), Rational(3, 2)}}, 1, 1)},
         {"beta", PLMap::from_breakpoints(
                      {{1, 1}, {Rational(3, 2), Rational(5, 2)}}, 1, 1)}});
    f.default_family = "x";
    return f;
  }
  if (name == "slow-F2") {
    Family h = thompson_h_family(2);
    f.note = "a slower first bump on the F_2 supports; proper, not fast";
    f.families["x"] = Family(
        {{"h0", PLMap::from_breakpoints({{0, 0},
                                         {Rational(1, 2), 1},
                                         {1, Rational(5, 4)},
                                         {2, 2}})},
         {"h1", h[1].map}});
    f.default_family = "x";
    return f;
  }
  if (name == "excision") {
    Family h = thompson_h_family(2);
    f.note = "f = h0 e1 e2 with isolated bumps e1, e2 left of 0; g = h1";
    PLMap fm = compose(compose(h[0].map, small_bump(-2)), small_bump(-4));
    f.families["x"] = Family({{"f", fm}, {"g", h[1].map}});
    f.families["quotient"] = Family({{"f", h[0].map}, {"g", h[1].map}});
    f.default_family = "x";
    return f;
  }
  if (name == "psl2") {
    f.note = "alpha^4, beta^4 on the irrationals; one marker";
    f.witness = psl2(4);
    return f;
  }
  if (name == "psl2-squares") {
    f.note = "alpha^2, beta^2 on the irrationals; no marker";
    f.witness = psl2(2);
    return f;
  }
  throw PreconditionError("unknown fixture '" + name + "'");
}

Json to_json(const Fixture& f) {
  Json out{{"name", f.name}, {"note", f.note}};
  if (!f.families.empty()) {
    out["default"] = f.default_family;
    Json fams = Json::object();
    for (const auto& [k, v] : f.families) {
      fams[k] = to_json(v);
    }
    out["families"] = fams;
  }
  if (f.diagram) {
    out["diagram"] = to_json(*f.diagram);
  }
  if (f.witness) {
    out["witness"] = to_json(*f.witness);
    out["blueprint"] = to_json(blueprint_of(*f.witness));
  }
  return out;
}

}  // namespace ppfast
