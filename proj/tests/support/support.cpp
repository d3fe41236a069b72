#include "support.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <set>

namespace support {

std::uint64_t seed() {
  static const std::uint64_t s = [] {
    std::uint64_t v = 20261016;
    if (const char* env = std::getenv("PPFAST_SEED")) {
      v = std::strtoull(env, nullptr, 10);
    }
    std::cout << "[seed] PPFAST_SEED=" << v << std::endl;
    return v;
  }();
  return s;
}

Rng rng(std::uint64_t salt) { return Rng(seed() * 1000003ULL + salt); }

Rational grid(long k, long den) { return make_rational(k, den); }

long uniform(Rng& r, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(r);
}

PLMap random_plmap(Rng& r, int max_points) {
  int n = static_cast<int>(uniform(r, 0, max_points));
  std::set<long> xs, ys;
  while (static_cast<int>(xs.size()) < n) {
    xs.insert(uniform(r, -40, 40));
  }
  while (static_cast<int>(ys.size()) < n) {
    ys.insert(uniform(r, -40, 40));
  }
  std::vector<Breakpoint> pts;
  auto xi = xs.begin();
  auto yi = ys.begin();
  for (; xi != xs.end(); ++xi, ++yi) {
    pts.push_back({grid(*xi, 8), grid(*yi, 8)});
  }
  Rational ls = make_rational(uniform(r, 1, 6), uniform(r, 1, 4));
  Rational rs = make_rational(uniform(r, 1, 6), uniform(r, 1, 4));
  if (pts.empty()) {
    return PLMap::affine(ls, grid(uniform(r, -16, 16), 8));
  }
  return PLMap::from_breakpoints(pts, ls, rs);
}

std::vector<Bump> random_proper_bumps(Rng& r, int max_bumps) {
  int nb = static_cast<int>(uniform(r, 1, max_bumps));
  std::vector<long> ls, rs;
  std::vector<Bump> bumps;
  int tries = 0;
  while (static_cast<int>(bumps.size()) < nb && tries++ < 1000) {
    long x = uniform(r, 0, 63), y = uniform(r, 0, 64);
    if (y - x < 3) {
      continue;
    }
    if (std::find(ls.begin(), ls.end(), x) != ls.end() ||
        std::find(rs.begin(), rs.end(), y) != rs.end()) {
      continue;
    }
    long p = x + 1 + uniform(r, 0, y - x - 3);
    long lo = p + std::max<long>(1, (y - x + 3) / 4);
    if (lo >= y) {
      continue;
    }
    long q = lo + uniform(r, 0, y - lo - 1);
    ls.push_back(x);
    rs.push_back(y);
    bumps.emplace_back(PLMap::from_breakpoints(
        {{grid(x), grid(x)}, {grid(p), grid(q)}, {grid(y), grid(y)}}));
  }
  return bumps;
}

DynamicalDiagram random_diagram(Rng& r, int max_edges, bool allow_isolated,
                                bool distinct_labels) {
  for (;;) {
    int m = static_cast<int>(uniform(r, 1, max_edges));
    std::vector<std::size_t> perm(2 * m);
    for (std::size_t i = 0; i < perm.size(); ++i) {
      perm[i] = i;
    }
    std::shuffle(perm.begin(), perm.end(), r);
    std::vector<Edge> edges;
    bool ok = true;
    for (int i = 0; i < m; ++i) {
      std::size_t a = perm[2 * i], b = perm[2 * i + 1];
      if (!allow_isolated && (a + 1 == b || b + 1 == a)) {
        ok = false;
        break;
      }
      edges.push_back({a, b, ""});
    }
    if (!ok) {
      continue;
    }
    std::sort(edges.begin(), edges.end(),
              [](const Edge& x, const Edge& y) { return x.left() < y.left(); });
    std::vector<std::string> pool = {"f", "g", "h", "k"};
    std::map<std::string, std::vector<std::pair<std::size_t, std::size_t>>> spans;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if (distinct_labels) {
        edges[i].label = "e" + std::to_string(i);
        continue;
      }
      std::vector<std::string> fits;
      for (const auto& l : pool) {
        bool clash = false;
        for (auto [lo, hi] : spans[l]) {
          if (!(edges[i].right() < lo || hi < edges[i].left())) {
            clash = true;
          }
        }
        if (!clash) {
          fits.push_back(l);
        }
      }
      std::string l = fits.empty() ? "e" + std::to_string(i)
                                   : fits[uniform(r, 0, fits.size() - 1)];
      spans[l].push_back({edges[i].left(), edges[i].right()});
      edges[i].label = l;
    }
    return DynamicalDiagram(2 * m, edges);
  }
}

Word random_word(Rng& r, std::size_t gens, std::size_t max_len) {
  std::size_t len = uniform(r, 0, max_len);
  Word w;
  for (std::size_t i = 0; i < len; ++i) {
    w.push_back({static_cast<std::size_t>(uniform(r, 0, gens - 1)),
                 uniform(r, 0, 1) == 1});
  }
  return w;
}

Rational naive_eval(const PLMap& f, const Rational& t) {
  const auto& pts = f.breakpoints();
  if (pts.empty() || t <= pts.front().x) {
    if (pts.empty()) {
      return f.left_tail().slope * t + f.left_tail().intercept;
    }
    return pts.front().y + f.left_tail().slope * (t - pts.front().x);
  }
  if (t >= pts.back().x) {
    return pts.back().y + f.right_tail().slope * (t - pts.back().x);
  }
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    if (pts[i].x <= t && t <= pts[i + 1].x) {
      Rational s = (pts[i + 1].y - pts[i].y) / (pts[i + 1].x - pts[i].x);
      return pts[i].y + s * (t - pts[i].x);
    }
  }
  return t;
}

namespace {

Interval dest_of(const FastSystem& sys, BumpSymbol s) {
  const auto& f = sys.marking().feet;
  return s.inverse ? f.src[s.bump] : f.dest[s.bump];
}

Interval src_of(const FastSystem& sys, BumpSymbol s) {
  return dest_of(sys, s.inverted());
}

bool may_follow(const FastSystem& sys, const Interval& d, BumpSymbol b) {
  Interval supt = sys.bump_family()[b.bump].support();
  return d.subset_of(supt) && !d.intersects(src_of(sys, b));
}

Interval pred_dest(const FastSystem& sys, const LocalWord& lw, std::size_t i) {
  if (i == 0) {
    return Interval::point(sys.marking().markers[lw.marker]);
  }
  return dest_of(sys, lw.word[i - 1]);
}

}  // namespace

bool lambda_by_intervals(const FastSystem& sys, const LocalWord& lw) {
  for (std::size_t i = 0; i < lw.word.size(); ++i) {
    if (!may_follow(sys, pred_dest(sys, lw, i), lw.word[i])) {
      return false;
    }
  }
  return true;
}

LocalWord naive_local_reduce(const FastSystem& sys, const LocalWord& lw) {
  LocalWord w = lw;
  for (;;) {
    bool changed = false;
    for (std::size_t i = 0; i < w.word.size(); ++i) {
      if (may_follow(sys, pred_dest(sys, w, i), w.word[i])) {
        continue;
      }
      if (i > 0 && w.word[i - 1] == w.word[i].inverted()) {
        w.word.erase(w.word.begin() + (i - 1), w.word.begin() + (i + 1));
      } else {
        w.word.erase(w.word.begin() + i);
      }
      changed = true;
      break;
    }
    if (!changed) {
      return w;
    }
  }
}

bool brute_force_faithful(const Blueprint& b, std::size_t depth) {
  std::size_t n = b.size();
  auto ok_pair = [&](std::size_t x, std::size_t y) {
    return b.active(y) && !b.is_marker(y) && b.in_supt(y, x) &&
           b.inverse(y) != x;
  };
  // Level sets of backward extensions: level k holds the symbols that
  // start a valid string of length k ending in x.
  auto back = [&](std::size_t x, bool& marker, bool& endless) {
    std::vector<bool> level(n, false);
    level[x] = true;
    marker = b.is_marker(x);
    for (std::size_t k = 0; k <= n; ++k) {
      std::vector<bool> next(n, false);
      for (std::size_t y = 0; y < n; ++y) {
        for (std::size_t p = 0; level[y] && p < n; ++p) {
          if (ok_pair(p, y)) {
            next[p] = true;
            marker = marker || b.is_marker(p);
          }
        }
      }
      level = std::move(next);
    }
    endless = std::find(level.begin(), level.end(), true) != level.end();
  };
  std::vector<std::size_t> w;
  bool faithful = true;
  std::function<void()> extend = [&]() {
    if (!faithful) {
      return;
    }
    if (!w.empty()) {
      bool marker = false, endless = false;
      back(w.front(), marker, endless);
      bool realizable = marker || endless;
      if (realizable && !marker) {
        faithful = false;
        return;
      }
    }
    if (w.size() == depth) {
      return;
    }
    for (std::size_t s = 0; s < n; ++s) {
      if (w.empty() || ok_pair(w.back(), s)) {
        w.push_back(s);
        extend();
        w.pop_back();
      }
    }
  };
  extend();
  return faithful;
}

Rational act(const FastSystem& sys, Rational t,
             const std::vector<BumpSymbol>& w) {
  for (const auto& s : w) {
    const PLMap& m = sys.bump_family()[s.bump].map();
    t = s.inverse ? naive_eval(invert(m), t) : naive_eval(m, t);
  }
  return t;
}

std::optional<std::map<std::string, std::string>> naive_label_map(
    const DynamicalDiagram& a, const DynamicalDiagram& b) {
  if (a.feet() != b.feet() || a.edges().size() != b.edges().size()) {
    return std::nullopt;
  }
  std::map<std::string, std::string> fwd, bwd;
  for (std::size_t v = 0; v < a.feet(); ++v) {
    const Edge& x = a.edge_at(v);
    const Edge& y = b.edge_at(v);
    if (x.src != y.src || x.dst != y.dst) {
      return std::nullopt;
    }
    auto [i, new_f] = fwd.emplace(x.label, y.label);
    auto [j, new_b] = bwd.emplace(y.label, x.label);
    if (i->second != y.label || j->second != x.label) {
      return std::nullopt;
    }
  }
  return fwd;
}

}  // namespace support
