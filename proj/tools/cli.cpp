#include "cli.hpp"

#include <algorithm>
#include <ostream>

#include <CLI11.hpp>

#include "ppfast/abstract.hpp"
#include "ppfast/error.hpp"
#include "ppfast/excision.hpp"
#include "ppfast/fixtures.hpp"
#include "ppfast/symbolic.hpp"

namespace ppfast::cli {

Json load_input(const std::string& spec) {
  const std::string prefix = "fixture:";
  if (spec.rfind(prefix, 0) == 0) {
    return to_json(fixture(spec.substr(prefix.size())));
  }
  return read_json_file(spec);
}

namespace {

std::string sign_of(Sign s) { return s == Sign::positive ? "+" : "-"; }

std::string joined(const std::vector<std::string>& v,
                   const std::string& sep = " ") {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    out += (i ? sep : "") + v[i];
  }
  return out;
}

std::string interval_text(const Interval& i) { return to_string(i); }

std::string local_text(const FastSystem& sys, const MarkerOrbitPoint& p) {
  return format_local_word(sys, p.word) + " = " + to_string(p.value);
}

Json point_json(const FastSystem& sys, const MarkerOrbitPoint& p) {
  return Json{{"word", format_local_word(sys, p.word)},
              {"value", to_string(p.value)}};
}

std::string cross_name(CrossCheck c) {
  switch (c) {
    case CrossCheck::agrees:
      return "agrees";
    case CrossCheck::inconclusive:
      return "inconclusive";
    default:
      return "not_fast";
  }
}

std::string symbols_text(const Blueprint& b,
                         const std::vector<std::size_t>& s) {
  std::vector<std::string> names;
  for (auto i : s) {
    names.push_back(b.name(i));
  }
  return joined(names);
}

Json symbols_json(const Blueprint& b, const std::vector<std::size_t>& s) {
  Json out = Json::array();
  for (auto i : s) {
    out.push_back(b.name(i));
  }
  return out;
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

}  // namespace

Json fastness_json(const Family& x) {
  auto rep = is_geometrically_fast(x);
  auto bumps = used_bumps(x);
  Json out = Json::object();
  out["proper"] = rep.proper.proper;
  if (rep.proper.witness) {
    const auto& w = *rep.proper.witness;
    out["witness"] = Json{{"point", to_string(w.point)},
                          {"side", w.left ? "left" : "right"},
                          {"generators",
                           Json::array({x[w.first].name, x[w.second].name})}};
  }
  Json chains = Json::array();
  for (const auto& c : rep.chains) {
    Json names = Json::array();
    for (auto i : c.chain.members) {
      names.push_back(bumps[i].name);
    }
    chains.push_back(Json{{"bumps", names},
                          {"c_min", to_string(c.chain.c_min)},
                          {"c_max", to_string(c.chain.c_max)},
                          {"image", to_string(c.image)},
                          {"satisfied", c.satisfied}});
  }
  out["chains"] = chains;
  Json iso = Json::array();
  for (auto i : rep.isolated) {
    iso.push_back(bumps[i].name);
  }
  out["isolated"] = iso;
  out["fast"] = rep.fast;
  if (rep.proper.proper) {
    out["marking"] = marking_json(x);
  }
  return out;
}

Json marking_json(const Family& x) {
  auto bumps = used_bumps(x);
  std::vector<Bump> bs;
  for (const auto& b : bumps) {
    bs.push_back(b.bump);
  }
  BumpFamily a(bs);
  Json out = Json::array();
  CanonicalMarking m;
  try {
    m = canonical_marking(a);
  } catch (const PreconditionError&) {
    return out;
  }
  for (std::size_t i = 0; i < bumps.size(); ++i) {
    out.push_back(Json{{"bump", bumps[i].name},
                       {"generator", x[bumps[i].generator].name},
                       {"sign", sign_of(bumps[i].sign)},
                       {"support", to_json(bumps[i].bump.support())},
                       {"marker", to_string(m.markers[i])},
                       {"initial", static_cast<bool>(m.initial[i])},
                       {"src", to_json(m.feet.src[i])},
                       {"dest", to_json(m.feet.dest[i])}});
  }
  return out;
}

namespace {

struct Context {
  std::ostream& out;
  bool json = false;
};

int cmd_check(Context& c, const Family& x) {
  Json rep = fastness_json(x);
  bool fast = rep["fast"];
  if (c.json) {
    emit(c.out, rep);
    return fast ? 0 : 1;
  }
  c.out << "family: " << joined(names_of(x), ", ") << "\n";
  if (rep["proper"]) {
    c.out << "proper: yes\n";
  } else {
    const Json& w = rep["witness"];
    c.out << "proper: no (" << w["point"].get<std::string>() << " is a "
          << w["side"].get<std::string>() << " transition point of "
          << w["generators"][0].get<std::string>() << " and "
          << w["generators"][1].get<std::string>() << ")\n";
  }
  for (const auto& ch : rep["chains"]) {
    std::vector<std::string> names = ch["bumps"];
    c.out << "chain " << joined(names) << ": C_min = "
          << ch["c_min"].get<std::string>()
          << ", C_max = " << ch["c_max"].get<std::string>()
          << ", C_min*prod(C) = " << ch["image"].get<std::string>() << ", "
          << ch["c_max"].get<std::string>()
          << (ch["satisfied"] ? " <= " : " > ")
          << ch["image"].get<std::string>() << "\n";
  }
  std::vector<std::string> iso = rep["isolated"];
  c.out << "isolated: " << (iso.empty() ? "none" : joined(iso)) << "\n";
  if (rep.contains("marking")) {
    for (const auto& m : rep["marking"]) {
      c.out << "marker " << m["bump"].get<std::string>() << ": "
            << m["marker"].get<std::string>()
            << (m["initial"] ? " initial" : "") << ", src "
            << m["src"][0].get<std::string>() << m["src"][1].get<std::string>()
            << ", " << m["src"][2].get<std::string>()
            << m["src"][3].get<std::string>() << ", dest "
            << m["dest"][0].get<std::string>()
            << m["dest"][1].get<std::string>() << ", "
            << m["dest"][2].get<std::string>()
            << m["dest"][3].get<std::string>() << "\n";
    }
  }
  c.out << "verdict: " << (fast ? "fast" : "not fast") << "\n";
  return fast ? 0 : 1;
}

int cmd_mark(Context& c, const Family& x) {
  auto bumps = used_bumps(x);
  std::vector<Bump> bs;
  for (const auto& b : bumps) {
    bs.push_back(b.bump);
  }
  BumpFamily a(bs);
  if (!a.proper()) {
    throw PreconditionError("marking needs a proper family");
  }
  CanonicalMarking m = canonical_marking(a);
  bool disjoint = feet_disjoint(m.feet);
  if (c.json) {
    emit(c.out, Json{{"marking", marking_json(x)}, {"feet_disjoint", disjoint}});
  } else {
    for (std::size_t i = 0; i < bumps.size(); ++i) {
      c.out << bumps[i].name << " (" << sign_of(bumps[i].sign) << ") t = "
            << to_string(m.markers[i]) << (m.initial[i] ? " initial" : "")
            << ", src " << interval_text(m.feet.src[i]) << ", dest "
            << interval_text(m.feet.dest[i]) << "\n";
    }
    c.out << "feet " << (disjoint ? "pairwise disjoint" : "overlap") << "\n";
  }
  return disjoint ? 0 : 1;
}

int cmd_iso(Context& c, const DynamicalDiagram& d1,
            const DynamicalDiagram& d2) {
  auto iso = are_isomorphic(d1, d2);
  if (c.json) {
    emit(c.out, iso ? to_json(*iso) : Json(nullptr));
  } else if (!iso) {
    c.out << "none\n";
  } else {
    c.out << "vertices:";
    for (std::size_t v = 0; v < iso->vertex_map.size(); ++v) {
      c.out << " " << v << "->" << iso->vertex_map[v];
    }
    c.out << "\nlabels:";
    for (const auto& [a, b] : iso->labels) {
      c.out << " " << a << "->" << b;
    }
    c.out << "\n";
  }
  return iso ? 0 : 1;
}

int cmd_reduce(Context& c, const Family& x, const std::string& text) {
  FastSystem sys(x);
  LocalWord lw = parse_local_word(sys, text);
  LocalWord red = local_reduce(sys, lw);
  Rational v = evaluate_local(sys, red);
  bool in = in_lambda(sys, lw);
  if (c.json) {
    emit(c.out, Json{{"input", format_local_word(sys, lw)},
                     {"in_lambda", in},
                     {"reduced", format_local_word(sys, red)},
                     {"value", to_string(v)}});
  } else {
    c.out << format_local_word(sys, red) << " = " << to_string(v)
          << (in ? " (input in Lambda)" : "") << "\n";
  }
  return 0;
}

int cmd_translate(Context& c, const Family& x, const Family& y,
                  const std::string& text) {
  FastSystem sx(x), sy(y);
  auto iso = are_isomorphic(sx.diagram(), sy.diagram());
  if (!iso) {
    if (c.json) {
      emit(c.out, Json(nullptr));
    } else {
      c.out << "diagrams are not isomorphic\n";
    }
    return 1;
  }
  Word w = parse_word(text, names_of(x));
  Word t = translate_word(*iso, w, x, y);
  std::string s = format_word(t, names_of(y));
  if (c.json) {
    emit(c.out, Json{{"word", format_word(w, names_of(x))}, {"image", s}});
  } else {
    c.out << s << "\n";
  }
  return 0;
}

int cmd_identity(Context& c, const Family& x, const std::string& text,
                 std::optional<std::size_t> depth) {
  Word w = parse_word(text, names_of(x));
  IdentityVerdict v = word_is_identity(w, x, depth);
  if (c.json) {
    Json j{{"word", format_word(w, names_of(x))},
           {"identity", v.identity},
           {"cross_check", cross_name(v.cross_check)}};
    if (v.witness) {
      j["witness"] = point_json(FastSystem(x), *v.witness);
    }
    emit(c.out, j);
  } else {
    c.out << (v.identity ? "identity" : "not identity");
    if (v.witness) {
      FastSystem sys(x);
      c.out << "; moves " << local_text(sys, *v.witness);
    }
    c.out << " (symbolic check: " << cross_name(v.cross_check) << ")\n";
  }
  return v.identity ? 0 : 1;
}

int cmd_orbit(Context& c, const Family& x, std::size_t depth) {
  FastSystem sys(x);
  auto pts = enumerate_orbit(sys, depth);
  if (c.json) {
    Json a = Json::array();
    for (const auto& p : pts) {
      a.push_back(point_json(sys, p));
    }
    emit(c.out, a);
  } else {
    for (const auto& p : pts) {
      c.out << local_text(sys, p) << "\n";
    }
  }
  return 0;
}

int cmd_excise(Context& c, const Family& x, std::optional<std::size_t> apply) {
  FastSystem sys(x);
  auto certs = find_extraneous(x);
  if (apply) {
    if (*apply >= certs.size()) {
      throw PreconditionError("no certificate " + std::to_string(*apply));
    }
    emit(c.out, to_json(excise(x, certs[*apply])));
    return 0;
  }
  if (c.json) {
    Json a = Json::array();
    for (const auto& k : certs) {
      a.push_back(to_json(k, sys));
    }
    emit(c.out, a);
  } else if (certs.empty()) {
    c.out << "no extraneous bumps\n";
  } else {
    for (std::size_t i = 0; i < certs.size(); ++i) {
      std::vector<std::string> e;
      for (auto k : certs[i].e) {
        e.push_back(sys.bumps()[k].name);
      }
      c.out << i << ": f = " << x[certs[i].f].name << ", E = {"
            << joined(e, ", ") << "}, J = " << interval_text(certs[i].j)
            << "\n";
    }
  }
  return certs.empty() ? 1 : 0;
}

int cmd_blueprint(Context& c, const std::string& action, const Blueprint& b,
                  const std::optional<Blueprint>& other, std::size_t depth,
                  std::size_t maxlen, std::optional<std::size_t> hdepth,
                  std::size_t bound) {
  if (action == "validate") {
    auto r = validate_blueprint(b);
    if (c.json) {
      emit(c.out, Json{{"valid", r.valid}, {"violations", r.violations}});
    } else {
      c.out << (r.valid ? "valid" : "invalid") << "\n";
      for (const auto& v : r.violations) {
        c.out << "  " << v << "\n";
      }
    }
    return r.valid ? 0 : 1;
  }
  if (action == "faithful") {
    auto v = is_faithful(b, depth);
    if (c.json) {
      Json j{{"faithful", v.faithful}, {"depth", v.depth}, {"closed", v.closed}};
      if (v.witness) {
        j["witness"] = symbols_json(b, *v.witness);
      }
      emit(c.out, j);
    } else if (v.faithful) {
      c.out << (v.closed ? "faithful" : "faithful to depth " +
                                            std::to_string(v.depth))
            << "\n";
    } else {
      c.out << "not faithful: no finite history contains "
            << symbols_text(b, *v.witness) << "\n";
    }
    return v.faithful ? 0 : 1;
  }
  if (action == "classify") {
    auto r = classify_orderability(b, bound);
    std::string kind = r.kind == Orderability::orderable
                           ? "orderable"
                           : r.kind == Orderability::cyclically_orderable
                                 ? "cyclically orderable"
                                 : "neither";
    if (c.json) {
      emit(c.out, Json{{"class", kind},
                       {"embeds_into", embeds_into(r.kind)},
                       {"order", symbols_json(b, r.order)}});
    } else {
      c.out << kind << " (" << embeds_into(r.kind) << ")";
      if (!r.order.empty()) {
        c.out << ": " << symbols_text(b, r.order);
      }
      c.out << "\n";
    }
    return 0;
  }
  if (action == "free") {
    auto v = freeness_probe(b, maxlen, hdepth);
    if (c.json) {
      Json j{{"free", v.free},
             {"maxlen", maxlen},
             {"words_checked", v.words_checked},
             {"histories_checked", v.histories_checked}};
      if (v.relator) {
        j["relator"] = symbols_json(b, *v.relator);
      }
      emit(c.out, j);
    } else if (v.free) {
      c.out << "free to length " << maxlen << " (" << v.words_checked
            << " words, " << v.histories_checked << " histories)\n";
    } else {
      c.out << "relator: " << symbols_text(b, *v.relator) << "\n";
    }
    return v.free ? 0 : 1;
  }
  if (action == "iso") {
    if (!other) {
      throw PreconditionError("blueprint iso needs two inputs");
    }
    auto phi = blueprints_isomorphic(b, *other, bound);
    if (c.json) {
      if (!phi) {
        emit(c.out, Json(nullptr));
      } else {
        Json m = Json::object();
        for (std::size_t i = 0; i < phi->size(); ++i) {
          m[b.name(i)] = other->name((*phi)[i]);
        }
        emit(c.out, m);
      }
    } else if (!phi) {
      c.out << "none\n";
    } else {
      for (std::size_t i = 0; i < phi->size(); ++i) {
        c.out << b.name(i) << " -> " << other->name((*phi)[i]) << "\n";
      }
    }
    return phi ? 0 : 1;
  }
  throw PreconditionError("unknown blueprint action '" + action + "'");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Geometrically fast PL systems and ping-pong blueprints",
               "ppfast"};
  app.require_subcommand(1);
  Context ctx{out};
  app.add_flag("--json", ctx.json, "machine-readable output");

  std::string in1, in2, word, which, which2;
  std::size_t depth = 4, maxlen = 8, bound = 14;
  std::optional<std::size_t> opt_depth, apply, hdepth;
  bool terminal = false, dyadic = false;
  std::string action;

  auto family_opts = [&](CLI::App* s) {
    s->add_option("--family", which, "family of a fixture document");
  };

  auto* check = app.add_subcommand("check", "fastness report");
  check->add_option("input", in1)->required();
  family_opts(check);
  auto* mark = app.add_subcommand("mark", "canonical marking and feet");
  mark->add_option("input", in1)->required();
  family_opts(mark);
  auto* diag = app.add_subcommand("diagram", "dynamical diagram JSON");
  diag->add_option("input", in1)->required();
  family_opts(diag);
  auto* iso = app.add_subcommand("iso", "diagram isomorphism");
  iso->add_option("first", in1)->required();
  iso->add_option("second", in2)->required();
  auto* real = app.add_subcommand("realize", "diagram to PL maps");
  real->add_option("diagram", in1)->required();
  real->add_flag("--terminal", terminal);
  real->add_flag("--dyadic", dyadic);
  auto* rend = app.add_subcommand("render", "text art of a diagram");
  rend->add_option("diagram", in1)->required();
  auto* red = app.add_subcommand("reduce", "local reduction of a local word");
  red->add_option("input", in1)->required();
  red->add_option("word", word)->required();
  family_opts(red);
  auto* tr = app.add_subcommand("translate", "carry a word across diagrams");
  tr->add_option("from", in1)->required();
  tr->add_option("to", in2)->required();
  tr->add_option("word", word)->required();
  tr->add_option("--family", which);
  tr->add_option("--to-family", which2);
  auto* id = app.add_subcommand("identity", "word problem");
  id->add_option("input", in1)->required();
  id->add_option("word", word)->required();
  id->add_option("--depth", opt_depth, "symbolic search depth");
  family_opts(id);
  auto* orb = app.add_subcommand("orbit", "marker orbit points");
  orb->add_option("input", in1)->required();
  orb->add_option("--depth", depth);
  family_opts(orb);
  auto* exc = app.add_subcommand("excise", "extraneous bump certificates");
  exc->add_option("input", in1)->required();
  exc->add_option("--apply", apply, "emit the quotient for certificate k");
  family_opts(exc);
  auto* bp = app.add_subcommand("blueprint", "abstract ping-pong blueprints");
  bp->add_option("action", action)
      ->required()
      ->check(CLI::IsMember({"validate", "faithful", "classify", "free", "iso"}));
  bp->add_option("input", in1)->required();
  bp->add_option("other", in2);
  bp->add_option("--depth", depth);
  bp->add_option("--maxlen", maxlen);
  bp->add_option("--history-depth", hdepth);
  bp->add_option("--bound", bound, "symbol bound for exhaustive searches");
  auto* fx = app.add_subcommand("fixtures", "list or emit fixtures");
  fx->add_option("name", in1);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    auto family = [&](const std::string& spec, const std::string& w) {
      return family_from_json(load_input(spec), w);
    };
    if (*check) return cmd_check(ctx, family(in1, which));
    if (*mark) return cmd_mark(ctx, family(in1, which));
    if (*diag) {
      emit(out, to_json(diagram_of(family(in1, which))));
      return 0;
    }
    if (*iso) {
      return cmd_iso(ctx, diagram_from_json(load_input(in1)),
                     diagram_from_json(load_input(in2)));
    }
    if (*real) {
      if (terminal && dyadic) {
        throw PreconditionError("choose one of --terminal and --dyadic");
      }
      auto d = diagram_from_json(load_input(in1));
      emit(out, to_json(dyadic ? realize_dyadic(d) : realize_terminal(d)));
      return 0;
    }
    if (*rend) {
      out << render(diagram_from_json(load_input(in1)));
      return 0;
    }
    if (*red) return cmd_reduce(ctx, family(in1, which), word);
    if (*tr) {
      return cmd_translate(ctx, family(in1, which), family(in2, which2), word);
    }
    if (*id) return cmd_identity(ctx, family(in1, which), word, opt_depth);
    if (*orb) return cmd_orbit(ctx, family(in1, which), depth);
    if (*exc) return cmd_excise(ctx, family(in1, which), apply);
    if (*bp) {
      Blueprint b = blueprint_from_json(load_input(in1));
      std::optional<Blueprint> b2;
      if (!in2.empty()) {
        b2 = blueprint_from_json(load_input(in2));
      }
      return cmd_blueprint(ctx, action, b, b2, depth, maxlen, hdepth, bound);
    }
    if (*fx) {
      if (in1.empty()) {
        for (const auto& n : fixture_names()) {
          out << n << "\n";
        }
        return 0;
      }
      emit(out, to_json(fixture(in1)));
      return 0;
    }
  } catch (const NotFastError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace ppfast::cli
