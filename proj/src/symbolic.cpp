#include "ppfast/symbolic.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>

namespace ppfast {

long dest_position(const FastSystem& sys, BumpSymbol s) {
  std::size_t v = s.inverse ? sys.src_vertex(s.bump) : sys.dest_vertex(s.bump);
  return 2 * static_cast<long>(v);
}

long marker_position(const FastSystem& sys, std::size_t marker) {
  return 2 * static_cast<long>(sys.src_vertex(marker)) + 1;
}

bool allowed_after(const FastSystem& sys, long prev, BumpSymbol b) {
  long from = dest_position(sys, b.inverted());
  long to = dest_position(sys, b);
  return from < to ? (from < prev && prev <= to) : (to <= prev && prev < from);
}

PLMap symbol_map(const FastSystem& sys, BumpSymbol s) {
  const PLMap& m = sys.bump_family()[s.bump].map();
  return s.inverse ? invert(m) : m;
}

Interval dest_interval(const FastSystem& sys, BumpSymbol s) {
  const Feet& f = sys.marking().feet;
  return s.inverse ? f.src[s.bump] : f.dest[s.bump];
}

Interval src_interval(const FastSystem& sys, BumpSymbol s) {
  return dest_interval(sys, s.inverted());
}

namespace {

void check_marker(const FastSystem& sys, std::size_t marker) {
  const auto& init = sys.initial_bumps();
  if (std::find(init.begin(), init.end(), marker) == init.end()) {
    throw PreconditionError("local word marker is not an initial marker");
  }
}

}  // namespace

bool in_lambda(const FastSystem& sys, const LocalWord& lw) {
  check_marker(sys, lw.marker);
  long prev = marker_position(sys, lw.marker);
  for (const auto& s : lw.word) {
    if (!allowed_after(sys, prev, s)) {
      return false;
    }
    prev = dest_position(sys, s);
  }
  return true;
}

LocalWord local_reduce(const FastSystem& sys, const LocalWord& lw) {
  check_marker(sys, lw.marker);
  LocalWord out{lw.marker, {}};
  for (const auto& b : lw.word) {
    if (!out.word.empty() && out.word.back() == b.inverted()) {
      out.word.pop_back();
      continue;
    }
    long prev = out.word.empty() ? marker_position(sys, lw.marker)
                                 : dest_position(sys, out.word.back());
    if (allowed_after(sys, prev, b)) {
      out.word.push_back(b);
    }
  }
  return out;
}

Rational evaluate_local(const FastSystem& sys, const LocalWord& lw) {
  check_marker(sys, lw.marker);
  Rational t = sys.marking().markers[lw.marker];
  for (const auto& s : lw.word) {
    const PLMap& m = sys.bump_family()[s.bump].map();
    t = s.inverse ? m.preimage(t) : m(t);
  }
  return t;
}

std::strong_ordering revlex_compare(const FastSystem& sys, const LocalWord& u,
                                    const LocalWord& v) {
  if (!in_lambda(sys, u) || !in_lambda(sys, v)) {
    throw PreconditionError("revlex_compare needs words in Lambda");
  }
  // Element 0 is the marker, element k > 0 is word[k - 1].
  auto key = [&](const LocalWord& w, std::size_t k) {
    return k == 0 ? marker_position(sys, w.marker)
                  : dest_position(sys, w.word[k - 1]);
  };
  auto same = [&](std::size_t i, std::size_t j) {
    if ((i == 0) != (j == 0)) {
      return false;
    }
    return i == 0 ? u.marker == v.marker : u.word[i - 1] == v.word[j - 1];
  };
  std::size_t i = u.word.size(), j = v.word.size();
  while (same(i, j)) {
    if (i == 0) {
      return std::strong_ordering::equal;
    }
    --i;
    --j;
  }
  return key(u, i) <=> key(v, j);
}

MarkerOrbitPoint orbit_point(const FastSystem& sys, const LocalWord& lw) {
  LocalWord r = local_reduce(sys, lw);
  Rational v = evaluate_local(sys, r);
  return {std::move(r), std::move(v)};
}

std::vector<BumpSymbol> expand_word(const FastSystem& sys, const Word& w) {
  std::vector<BumpSymbol> out;
  for (const auto& l : w) {
    for (std::size_t i = 0; i < sys.bumps().size(); ++i) {
      const auto& u = sys.bumps()[i];
      if (u.generator == l.gen) {
        bool inv = (u.sign == Sign::negative) != l.inverse;
        out.push_back({i, inv});
      }
    }
  }
  return out;
}

namespace {

std::vector<BumpSymbol> parse_symbols(const FastSystem& sys,
                                      const std::string& tok) {
  std::string name = tok;
  long k = 1;
  auto caret = tok.find('^');
  if (caret != std::string::npos) {
    name = tok.substr(0, caret);
    std::string e = tok.substr(caret + 1);
    std::size_t used = 0;
    try {
      k = std::stol(e, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != e.size() || k == 0) {
      throw ParseError("bad exponent in token '" + tok + "'");
    }
  }
  std::vector<BumpSymbol> one;
  if (auto b = sys.find_bump(name)) {
    one.push_back({*b, false});
  } else if (auto g = sys.family().find(name)) {
    one = expand_word(sys, Word{Letter{*g, false}});
  } else {
    throw ParseError("unbound name '" + name + "'");
  }
  std::vector<BumpSymbol> out;
  for (long i = 0; i < (k < 0 ? -k : k); ++i) {
    for (const auto& s : one) {
      out.push_back(k < 0 ? s.inverted() : s);
    }
  }
  return out;
}

}  // namespace

LocalWord parse_local_word(const FastSystem& sys, std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string tok;
  if (!(in >> tok) || tok.size() < 2 || tok.front() != '~') {
    throw ParseError("a local word starts with a marker token ~name");
  }
  auto m = sys.find_bump(tok.substr(1));
  if (!m) {
    throw ParseError("unbound marker '" + tok + "'");
  }
  const auto& init = sys.initial_bumps();
  if (std::find(init.begin(), init.end(), *m) == init.end()) {
    throw ParseError("'" + tok + "' is not an initial marker");
  }
  LocalWord lw{*m, {}};
  while (in >> tok) {
    auto syms = parse_symbols(sys, tok);
    lw.word.insert(lw.word.end(), syms.begin(), syms.end());
  }
  return lw;
}

std::string format_local_word(const FastSystem& sys, const LocalWord& lw) {
  std::string out = "~" + sys.bumps()[lw.marker].name;
  const auto& w = lw.word;
  for (std::size_t i = 0; i < w.size();) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) {
      ++j;
    }
    out += ' ' + sys.bumps()[w[i].bump].name;
    long k = static_cast<long>(j - i);
    if (w[i].inverse) {
      out += "^-" + std::to_string(k);
    } else if (k != 1) {
      out += "^" + std::to_string(k);
    }
    i = j;
  }
  return out;
}

namespace {

std::vector<std::size_t> bump_correspondence(const FastSystem& x,
                                             const FastSystem& y,
                                             const DiagramIso& iso) {
  std::map<std::size_t, std::size_t> by_src;
  for (std::size_t j = 0; j < y.bumps().size(); ++j) {
    by_src[y.src_vertex(j)] = j;
  }
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < x.bumps().size(); ++i) {
    auto it = by_src.find(iso.vertex_map.at(x.src_vertex(i)));
    if (it == by_src.end()) {
      throw PreconditionError("diagram isomorphism does not match the systems");
    }
    out.push_back(it->second);
  }
  return out;
}

}  // namespace

MarkerOrbitPoint transport(const FastSystem& x, const FastSystem& y,
                           const DiagramIso& iso, const MarkerOrbitPoint& p) {
  if (!are_isomorphic(x.diagram(), y.diagram())) {
    throw PreconditionError("transport needs isomorphic diagrams");
  }
  auto mu = bump_correspondence(x, y, iso);
  LocalWord lw{mu[p.word.marker], {}};
  for (const auto& s : p.word.word) {
    lw.word.push_back({mu[s.bump], s.inverse});
  }
  Rational v = evaluate_local(y, lw);
  return {std::move(lw), std::move(v)};
}

Word translate_word(const DiagramIso& iso, const Word& w, const Family& x,
                    const Family& y) {
  Word out;
  for (const auto& l : w) {
    auto it = iso.labels.find(x[l.gen].name);
    if (it == iso.labels.end()) {
      throw PreconditionError("generator '" + x[l.gen].name +
                              "' has no image under the isomorphism");
    }
    auto g = y.find(it->second);
    if (!g) {
      throw PreconditionError("label '" + it->second + "' is not a generator");
    }
    out.push_back({*g, l.inverse});
  }
  return out;
}

std::vector<MarkerOrbitPoint> enumerate_orbit(const FastSystem& sys,
                                              std::size_t max_len) {
  std::vector<MarkerOrbitPoint> out;
  std::vector<BumpSymbol> symbols;
  std::vector<PLMap> maps;
  for (std::size_t i = 0; i < sys.bumps().size(); ++i) {
    for (bool inv : {false, true}) {
      symbols.push_back({i, inv});
      maps.push_back(symbol_map(sys, symbols.back()));
    }
  }
  std::vector<MarkerOrbitPoint> level;
  for (auto m : sys.initial_bumps()) {
    level.push_back({LocalWord{m, {}}, sys.marking().markers[m]});
  }
  for (std::size_t len = 0;; ++len) {
    out.insert(out.end(), level.begin(), level.end());
    if (len == max_len) {
      break;
    }
    std::vector<MarkerOrbitPoint> next;
    for (const auto& p : level) {
      long prev = p.word.word.empty()
                      ? marker_position(sys, p.word.marker)
                      : dest_position(sys, p.word.word.back());
      for (std::size_t k = 0; k < symbols.size(); ++k) {
        if (!allowed_after(sys, prev, symbols[k])) {
          continue;
        }
        MarkerOrbitPoint q = p;
        q.word.word.push_back(symbols[k]);
        q.value = maps[k](p.value);
        next.push_back(std::move(q));
      }
    }
    level = std::move(next);
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const MarkerOrbitPoint& a, const MarkerOrbitPoint& b) {
                     return a.value < b.value;
                   });
  return out;
}

std::optional<MarkerOrbitPoint> find_orbit_point_in(const FastSystem& sys,
                                                    const Interval& target,
                                                    std::size_t max_len,
                                                    std::size_t max_nodes) {
  for (auto m : sys.initial_bumps()) {
    if (target.contains(sys.marking().markers[m])) {
      return MarkerOrbitPoint{LocalWord{m, {}}, sys.marking().markers[m]};
    }
  }
  std::vector<BumpSymbol> symbols;
  std::vector<PLMap> maps;
  for (std::size_t i = 0; i < sys.bumps().size(); ++i) {
    for (bool inv : {false, true}) {
      symbols.push_back({i, inv});
      maps.push_back(symbol_map(sys, symbols.back()));
    }
  }
  struct Node {
    std::vector<std::size_t> suffix;  // indices into symbols
  };
  auto push_through = [&](Interval i, const std::vector<std::size_t>& suffix) {
    for (auto k : suffix) {
      i = image(i, maps[k]);
    }
    return i;
  };
  std::deque<Node> frontier;
  for (std::size_t k = 0; k < symbols.size(); ++k) {
    if (dest_interval(sys, symbols[k]).intersects(target)) {
      frontier.push_back({{k}});
    }
  }
  std::size_t visited = 0;
  for (std::size_t len = 1; len <= max_len && !frontier.empty(); ++len) {
    std::deque<Node> next;
    for (const auto& node : frontier) {
      if (++visited > max_nodes) {
        return std::nullopt;
      }
      BumpSymbol first = symbols[node.suffix.front()];
      for (auto m : sys.initial_bumps()) {
        if (!allowed_after(sys, marker_position(sys, m), first)) {
          continue;
        }
        Rational t = sys.marking().markers[m];
        for (auto k : node.suffix) {
          t = maps[k](t);
        }
        if (target.contains(t)) {
          LocalWord lw{m, {}};
          for (auto k : node.suffix) {
            lw.word.push_back(symbols[k]);
          }
          return MarkerOrbitPoint{std::move(lw), std::move(t)};
        }
      }
      if (len == max_len) {
        continue;
      }
      for (std::size_t k = 0; k < symbols.size(); ++k) {
        if (!allowed_after(sys, dest_position(sys, symbols[k]), first)) {
          continue;
        }
        std::vector<std::size_t> suffix{k};
        suffix.insert(suffix.end(), node.suffix.begin(), node.suffix.end());
        if (push_through(dest_interval(sys, symbols[k]), node.suffix)
                .intersects(target)) {
          next.push_back({std::move(suffix)});
        }
      }
    }
    frontier = std::move(next);
  }
  return std::nullopt;
}

IdentityVerdict word_is_identity(const Word& w, const FastSystem& sys,
                                 std::optional<std::size_t> depth) {
  IdentityVerdict v;
  PLMap g = evaluate_word(w, sys.family());
  v.identity = g.is_identity();
  if (v.identity) {
    v.cross_check = CrossCheck::agrees;
    return v;
  }
  std::size_t d = depth.value_or(2 * w.size() + 8);
  for (const auto& o : orbitals(g)) {
    if (auto p = find_orbit_point_in(sys, o.support(), d)) {
      v.witness = std::move(p);
      v.cross_check = CrossCheck::agrees;
      return v;
    }
  }
  v.cross_check = CrossCheck::inconclusive;
  return v;
}

IdentityVerdict word_is_identity(const Word& w, const Family& x,
                                 std::optional<std::size_t> depth) {
  if (is_geometrically_fast(x).fast) {
    std::optional<FastSystem> sys;
    try {
      sys.emplace(x);
    } catch (const PreconditionError&) {
      sys.reset();
    }
    if (sys) {
      return word_is_identity(w, *sys, depth);
    }
  }
  IdentityVerdict v;
  v.identity = evaluate_word(w, x).is_identity();
  return v;
}

}  // namespace ppfast
