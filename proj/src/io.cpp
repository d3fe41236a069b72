#include "ppfast/io.hpp"

#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "ppfast/error.hpp"

namespace ppfast {

namespace {

[[noreturn]] void bad(const std::string& where, const std::string& what) {
  throw ParseError(where + ": " + what);
}

const Json& field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) {
    bad(where, std::string("missing \"") + key + "\"");
  }
  return j.at(key);
}

std::string str(const Json& j, const std::string& where) {
  if (!j.is_string()) {
    bad(where, "expected a string");
  }
  return j.get<std::string>();
}

Rational rat(const Json& j, const std::string& where) {
  if (j.is_number_integer()) {
    return Rational(j.get<long>());
  }
  try {
    return parse_rational(str(j, where));
  } catch (const ParseError& e) {
    bad(where, e.what());
  }
}

std::size_t index(const Json& j, const std::string& where) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long>() >= 0)) {
    bad(where, "expected a nonnegative integer");
  }
  return j.get<std::size_t>();
}

Affine affine_from(const Json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2) {
    bad(where, "expected [slope, intercept]");
  }
  return Affine{rat(j[0], where + "[0]"), rat(j[1], where + "[1]")};
}

Json affine_to(const Affine& a) {
  return Json::array({to_string(a.slope), to_string(a.intercept)});
}

bool is_fixture(const Json& j) {
  return j.is_object() && (j.contains("families") || j.contains("diagram") ||
                           j.contains("witness") || j.contains("blueprint")) &&
         j.contains("name");
}

}  // namespace

Json to_json(const PLMap& f) {
  Json pts = Json::array();
  for (const auto& p : f.breakpoints()) {
    pts.push_back(Json::array({to_string(p.x), to_string(p.y)}));
  }
  return Json{{"breakpoints", pts},
              {"left_tail", affine_to(f.left_tail())},
              {"right_tail", affine_to(f.right_tail())}};
}

PLMap plmap_from_json(const Json& j) {
  const std::string w = "map";
  std::vector<Breakpoint> pts;
  const Json& bp = field(j, "breakpoints", w);
  if (!bp.is_array()) {
    bad(w, "\"breakpoints\" must be a list");
  }
  for (std::size_t i = 0; i < bp.size(); ++i) {
    std::string wi = w + ".breakpoints[" + std::to_string(i) + "]";
    if (!bp[i].is_array() || bp[i].size() != 2) {
      bad(wi, "expected [x, y]");
    }
    pts.push_back({rat(bp[i][0], wi), rat(bp[i][1], wi)});
  }
  Affine left = j.contains("left_tail")
                    ? affine_from(j.at("left_tail"), w + ".left_tail")
                    : Affine{};
  Affine right = j.contains("right_tail")
                     ? affine_from(j.at("right_tail"), w + ".right_tail")
                     : Affine{};
  try {
    return PLMap::from_parts(std::move(pts), left, right);
  } catch (const PreconditionError& e) {
    bad(w, e.what());
  }
}

Json to_json(const Family& x) {
  Json out = Json::array();
  for (const auto& g : x) {
    Json m{{"name", g.name}};
    m.update(to_json(g.map));
    out.push_back(std::move(m));
  }
  return out;
}

Family family_from_json(const Json& j, const std::string& which) {
  if (is_fixture(j)) {
    if (!j.contains("families")) {
      if (j.contains("diagram")) {
        return realize_dyadic(diagram_from_json(j.at("diagram")));
      }
      bad("fixture", "no families");
    }
    std::string key = which;
    if (key.empty()) {
      key = j.value("default", std::string());
    }
    const Json& fams = j.at("families");
    if (key.empty() || !fams.contains(key)) {
      bad("fixture", "no family named '" + key + "'");
    }
    return family_from_json(fams.at(key));
  }
  if (!j.is_array()) {
    bad("family", "expected a list of maps");
  }
  std::vector<Generator> gens;
  bool any_named = false;
  for (std::size_t i = 0; i < j.size(); ++i) {
    std::string name;
    if (j[i].is_object() && j[i].contains("name")) {
      name = str(j[i].at("name"), "family[" + std::to_string(i) + "].name");
      any_named = true;
    }
    PLMap m;
    try {
      m = plmap_from_json(j[i]);
    } catch (const ParseError& e) {
      bad("family[" + std::to_string(i) + "]", e.what());
    }
    gens.push_back({name, std::move(m)});
  }
  if (!any_named) {
    std::vector<PLMap> maps;
    for (auto& g : gens) {
      maps.push_back(std::move(g.map));
    }
    return Family::unnamed(std::move(maps));
  }
  try {
    return Family(std::move(gens));
  } catch (const PreconditionError& e) {
    bad("family", e.what());
  }
}

Json to_json(const DynamicalDiagram& d) {
  Json edges = Json::array();
  for (const auto& e : d.edges()) {
    edges.push_back(Json{{"src", e.src}, {"dst", e.dst}, {"label", e.label}});
  }
  return Json{{"feet", d.feet()}, {"edges", edges}};
}

DynamicalDiagram diagram_from_json(const Json& j) {
  if (is_fixture(j)) {
    if (j.contains("diagram")) {
      return diagram_from_json(j.at("diagram"));
    }
    return diagram_of(family_from_json(j));
  }
  if (j.is_array()) {
    return diagram_of(family_from_json(j));
  }
  const std::string w = "diagram";
  std::size_t feet = index(field(j, "feet", w), w + ".feet");
  const Json& es = field(j, "edges", w);
  if (!es.is_array()) {
    bad(w, "\"edges\" must be a list");
  }
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < es.size(); ++i) {
    std::string wi = w + ".edges[" + std::to_string(i) + "]";
    edges.push_back({index(field(es[i], "src", wi), wi + ".src"),
                     index(field(es[i], "dst", wi), wi + ".dst"),
                     str(field(es[i], "label", wi), wi + ".label")});
  }
  try {
    return DynamicalDiagram(feet, std::move(edges));
  } catch (const PreconditionError& e) {
    bad(w, e.what());
  }
}

Json to_json(const Blueprint& b) {
  Json supt = Json::array();
  for (const auto& [a, c] : b.relation()) {
    supt.push_back(Json::array({a, c}));
  }
  Json markers = Json::array();
  for (auto m : b.markers()) {
    markers.push_back(b.name(m));
  }
  Json inverse = Json::object();
  for (std::size_t a = 0; a < b.size(); ++a) {
    if (auto i = b.inverse(a)) {
      inverse[b.name(a)] = b.name(*i);
    }
  }
  return Json{{"symbols", b.names()},
              {"inverse", inverse},
              {"supt", supt},
              {"markers", markers}};
}

Blueprint blueprint_from_json(const Json& j) {
  if (is_fixture(j)) {
    if (j.contains("blueprint")) {
      return blueprint_from_json(j.at("blueprint"));
    }
    if (j.contains("witness")) {
      try {
        return blueprint_of(witness_from_json(j.at("witness")));
      } catch (const PreconditionError& e) {
        bad("witness", e.what());
      }
    }
    return blueprint_of(FastSystem(family_from_json(j)));
  }
  if (j.is_array()) {
    return blueprint_of(FastSystem(family_from_json(j)));
  }
  const std::string w = "blueprint";
  std::vector<std::string> symbols;
  const Json& syms = field(j, "symbols", w);
  if (!syms.is_array()) {
    bad(w, "\"symbols\" must be a list");
  }
  for (std::size_t i = 0; i < syms.size(); ++i) {
    symbols.push_back(str(syms[i], w + ".symbols[" + std::to_string(i) + "]"));
  }
  std::map<std::string, std::string> inverse;
  if (j.contains("inverse")) {
    const Json& inv = j.at("inverse");
    if (!inv.is_object()) {
      bad(w, "\"inverse\" must be an object");
    }
    for (auto it = inv.begin(); it != inv.end(); ++it) {
      inverse[it.key()] = str(it.value(), w + ".inverse." + it.key());
    }
  }
  std::vector<std::pair<std::string, std::string>> supt;
  const Json& rel = field(j, "supt", w);
  if (!rel.is_array()) {
    bad(w, "\"supt\" must be a list");
  }
  for (std::size_t i = 0; i < rel.size(); ++i) {
    std::string wi = w + ".supt[" + std::to_string(i) + "]";
    if (!rel[i].is_array() || rel[i].size() != 2) {
      bad(wi, "expected [a, b]");
    }
    supt.emplace_back(str(rel[i][0], wi), str(rel[i][1], wi));
  }
  std::vector<std::string> markers;
  if (j.contains("markers")) {
    for (const auto& m : j.at("markers")) {
      markers.push_back(str(m, w + ".markers"));
    }
  }
  try {
    return Blueprint(std::move(symbols), supt, inverse, markers);
  } catch (const PreconditionError& e) {
    bad(w, e.what());
  }
}

Json to_json(const PingPongWitness& w) {
  Json gens = Json::array();
  for (const auto& g : w.generators) {
    gens.push_back(Json{
        {"name", g.name},
        {"matrix", Json::array({Json::array({to_string(g.map.a),
                                             to_string(g.map.b)}),
                                Json::array({to_string(g.map.c),
                                             to_string(g.map.d)})})}});
  }
  Json dest = Json::object();
  for (const auto& [k, arcs] : w.dest) {
    Json a = Json::array();
    for (const auto& arc : arcs) {
      a.push_back(Json::array({to_string(arc.from), to_string(arc.to)}));
    }
    dest[k] = a;
  }
  return Json{{"domain", "irrational"}, {"generators", gens}, {"dest", dest}};
}

PingPongWitness witness_from_json(const Json& j) {
  if (is_fixture(j) && j.contains("witness")) {
    return witness_from_json(j.at("witness"));
  }
  const std::string w = "witness";
  if (j.contains("domain") && j.at("domain") != "irrational") {
    bad(w, "only the irrational domain is supported");
  }
  PingPongWitness out;
  const Json& gens = field(j, "generators", w);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    std::string wi = w + ".generators[" + std::to_string(i) + "]";
    const Json& m = field(gens[i], "matrix", wi);
    if (!m.is_array() || m.size() != 2 || !m[0].is_array() ||
        !m[1].is_array() || m[0].size() != 2 || m[1].size() != 2) {
      bad(wi, "matrix must be 2x2");
    }
    out.generators.push_back(
        {str(field(gens[i], "name", wi), wi),
         Mobius{rat(m[0][0], wi), rat(m[0][1], wi), rat(m[1][0], wi),
                rat(m[1][1], wi)}});
  }
  const Json& dest = field(j, "dest", w);
  if (!dest.is_object()) {
    bad(w, "\"dest\" must be an object");
  }
  for (auto it = dest.begin(); it != dest.end(); ++it) {
    std::vector<Arc> arcs;
    for (const auto& a : it.value()) {
      std::string wi = w + ".dest." + it.key();
      if (!a.is_array() || a.size() != 2) {
        bad(wi, "expected [from, to]");
      }
      try {
        arcs.push_back({parse_ppoint(str(a[0], wi)), parse_ppoint(str(a[1], wi))});
      } catch (const ParseError& e) {
        bad(wi, e.what());
      }
    }
    out.dest[it.key()] = std::move(arcs);
  }
  return out;
}

Json to_json(const Interval& i) {
  return Json::array({i.lo_closed ? "[" : "(", to_string(i.lo),
                      to_string(i.hi), i.hi_closed ? "]" : ")"});
}

Json to_json(const DiagramIso& iso) {
  Json labels = Json::object();
  for (const auto& [a, b] : iso.labels) {
    labels[a] = b;
  }
  return Json{{"vertex_map", iso.vertex_map}, {"labels", labels}};
}

Json to_json(const ExtraneousCertificate& c, const FastSystem& sys) {
  Json e = Json::array();
  for (auto i : c.e) {
    e.push_back(sys.bumps()[i].name);
  }
  return Json{{"f", sys.family()[c.f].name}, {"E", e}, {"J", to_json(c.j)}};
}

Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::stringstream ss;
  if (path == "-") {
    ss << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) {
      throw ParseError("cannot read '" + path + "'");
    }
    ss << in.rdbuf();
  }
  return parse_json_text(ss.str());
}

}  // namespace ppfast
