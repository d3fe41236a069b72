#include "ppfast/diagram.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace ppfast {

DynamicalDiagram::DynamicalDiagram(std::size_t feet, std::vector<Edge> edges)
    : feet_(feet), edges_(std::move(edges)) {
  if (2 * edges_.size() != feet_) {
    throw PreconditionError("a diagram has exactly two feet per edge");
  }
  constexpr std::size_t none = static_cast<std::size_t>(-1);
  at_.assign(feet_, none);
  std::sort(edges_.begin(), edges_.end(),
            [](const Edge& a, const Edge& b) { return a.left() < b.left(); });
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    if (e.src >= feet_ || e.dst >= feet_ || e.src == e.dst) {
      throw PreconditionError("edge endpoints must be distinct feet");
    }
    if (e.label.empty()) {
      throw PreconditionError("edge labels must be nonempty");
    }
    for (auto v : {e.src, e.dst}) {
      if (at_[v] != none) {
        throw PreconditionError("foot " + std::to_string(v) +
                                " has total degree above 1");
      }
      at_[v] = i;
    }
  }
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    for (std::size_t j = i + 1; j < edges_.size(); ++j) {
      const Edge& a = edges_[i];
      const Edge& b = edges_[j];
      if (a.label == b.label && b.left() < a.right()) {
        throw PreconditionError("edges labelled '" + a.label +
                                "' have overlapping spans");
      }
    }
  }
}

std::vector<std::string> DynamicalDiagram::labels() const {
  std::vector<std::string> out;
  for (const auto& e : edges_) {
    if (std::find(out.begin(), out.end(), e.label) == out.end()) {
      out.push_back(e.label);
    }
  }
  return out;
}

const Edge& DynamicalDiagram::edge_at(std::size_t vertex) const {
  return edges_.at(at_.at(vertex));
}

bool DynamicalDiagram::has_isolated() const {
  return std::any_of(edges_.begin(), edges_.end(),
                     [&](const Edge& e) { return isolated(e); });
}

FastSystem::FastSystem(Family x)
    : family_(std::move(x)), bumps_(used_bumps(family_)) {
  report_ = is_geometrically_fast(family_);
  if (!report_.fast) {
    throw NotFastError("family is not geometrically fast", report_);
  }
  std::vector<Bump> bs;
  for (const auto& u : bumps_) {
    bs.push_back(u.bump);
  }
  bump_family_ = BumpFamily(std::move(bs));
  marking_ = canonical_marking(bump_family_);
  if (!feet_disjoint(marking_.feet)) {
    throw NotFastError("canonical feet overlap", report_);
  }
  std::size_t n = bumps_.size();
  struct Foot {
    const Interval* interval;
    std::size_t bump;
    bool src;
  };
  std::vector<Foot> feet;
  for (std::size_t i = 0; i < n; ++i) {
    feet.push_back({&marking_.feet.src[i], i, true});
    feet.push_back({&marking_.feet.dest[i], i, false});
  }
  std::sort(feet.begin(), feet.end(), [](const Foot& a, const Foot& b) {
    return a.interval->entirely_left_of(*b.interval);
  });
  src_vertex_.assign(n, 0);
  dest_vertex_.assign(n, 0);
  for (std::size_t v = 0; v < feet.size(); ++v) {
    vertices_.push_back(*feet[v].interval);
    (feet[v].src ? src_vertex_ : dest_vertex_)[feet[v].bump] = v;
  }
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& u = bumps_[i];
    const std::string& label = family_[u.generator].name;
    if (u.sign == Sign::positive) {
      edges.push_back({src_vertex_[i], dest_vertex_[i], label});
    } else {
      edges.push_back({dest_vertex_[i], src_vertex_[i], label});
    }
  }
  diagram_ = DynamicalDiagram(2 * n, std::move(edges));
  for (std::size_t i = 0; i < n; ++i) {
    if (marking_.initial[i]) {
      initial_.push_back(i);
    }
  }
}

std::optional<std::size_t> FastSystem::find_bump(std::string_view name) const {
  for (std::size_t i = 0; i < bumps_.size(); ++i) {
    if (bumps_[i].name == name) {
      return i;
    }
  }
  return std::nullopt;
}

std::vector<std::string> FastSystem::bump_names() const {
  std::vector<std::string> out;
  for (const auto& b : bumps_) {
    out.push_back(b.name);
  }
  return out;
}

DynamicalDiagram diagram_of(const Family& x) { return FastSystem(x).diagram(); }

std::optional<DiagramIso> are_isomorphic(const DynamicalDiagram& d1,
                                         const DynamicalDiagram& d2) {
  if (d1.feet() != d2.feet()) {
    return std::nullopt;
  }
  DiagramIso iso;
  iso.vertex_map.resize(d1.feet());
  std::iota(iso.vertex_map.begin(), iso.vertex_map.end(), 0);
  std::map<std::string, std::string> back;
  for (const auto& e : d1.edges()) {
    const Edge& f = d2.edge_at(e.src);
    if (f.src != e.src || f.dst != e.dst) {
      return std::nullopt;
    }
    auto [it, fresh] = iso.labels.emplace(e.label, f.label);
    auto [jt, fresh2] = back.emplace(f.label, e.label);
    if (it->second != f.label || jt->second != e.label) {
      return std::nullopt;
    }
  }
  return iso;
}

namespace {

std::string fresh_label(const std::set<std::string>& used,
                        const std::string& base) {
  std::string s = base;
  for (int k = 1; used.count(s) != 0; ++k) {
    s = base + "_" + std::to_string(k);
  }
  return s;
}

}  // namespace

DynamicalDiagram eliminate_isolated(const DynamicalDiagram& d) {
  std::vector<std::size_t> cuts;  // left feet of isolated edges
  for (const auto& e : d.edges()) {
    if (d.isolated(e)) {
      cuts.push_back(e.left());
    }
  }
  if (cuts.empty()) {
    return d;
  }
  auto moved = [&](std::size_t v) {
    std::size_t shift = 0;
    for (auto c : cuts) {
      if (c < v) {
        shift += 4;
      }
    }
    return v + shift;
  };
  std::set<std::string> used;
  for (const auto& l : d.labels()) {
    used.insert(l);
  }
  std::vector<Edge> edges;
  for (const auto& e : d.edges()) {
    edges.push_back({moved(e.src), moved(e.dst), e.label});
    if (!d.isolated(e)) {
      continue;
    }
    std::size_t base = moved(e.left());
    for (int k = 0; k < 2; ++k) {
      std::string l = fresh_label(used, e.label + "~" + std::to_string(k));
      used.insert(l);
      edges.push_back({base + 1 + k, base + 3 + k, l});
    }
  }
  return DynamicalDiagram(d.feet() + 4 * cuts.size(), std::move(edges));
}

namespace {

Family assemble(const DynamicalDiagram& d,
                const std::vector<PLMap>& positive_bumps) {
  std::vector<Generator> gens;
  for (const auto& label : d.labels()) {
    PLMap g;
    for (std::size_t i = 0; i < d.edges().size(); ++i) {
      const Edge& e = d.edges()[i];
      if (e.label == label) {
        g = compose(g, e.positive() ? positive_bumps[i]
                                    : invert(positive_bumps[i]));
      }
    }
    gens.push_back({label, std::move(g)});
  }
  return Family(std::move(gens));
}

}  // namespace

Family realize_terminal(const DynamicalDiagram& d) {
  if (d.has_isolated()) {
    throw PreconditionError(
        "realize_terminal needs a diagram without isolated edges");
  }
  std::vector<PLMap> bumps;
  if (d.edges().empty()) {
    return Family();
  }
  Rational ell(1, static_cast<unsigned long>(d.feet()));
  ell.canonicalize();
  for (const auto& e : d.edges()) {
    Rational l(static_cast<long>(e.left())), r(static_cast<long>(e.right()));
    Rational x = l * ell, s = (l + 1) * ell, t = r * ell, y = (r + 1) * ell;
    bumps.push_back(PLMap::from_breakpoints({{x, x}, {s, t}, {y, y}}));
  }
  return assemble(d, bumps);
}

namespace {

std::vector<long> binary_exponents(const Rational& len) {
  // len = num / 2^k with num odd or k = 0
  mpz_class num = len.get_num();
  long k = static_cast<long>(mpz_scan1(len.get_den().get_mpz_t(), 0));
  std::vector<long> out;
  for (long bit = static_cast<long>(mpz_sizeinbase(num.get_mpz_t(), 2));
       bit >= 0; --bit) {
    if (mpz_tstbit(num.get_mpz_t(), static_cast<mp_bitcnt_t>(bit)) != 0) {
      out.push_back(bit - k);
    }
  }
  return out;
}

void split_to(std::vector<long>& ex, std::size_t n) {
  while (ex.size() < n) {
    auto it = std::max_element(ex.begin(), ex.end());
    long e = *it - 1;
    *it = e;
    ex.insert(it + 1, e);
  }
}

Rational pow2(long e) {
  mpz_class one = 1;
  mpz_class p = one << static_cast<mp_bitcnt_t>(e < 0 ? -e : e);
  return e < 0 ? Rational(one, p) : Rational(p);
}

}  // namespace

std::vector<Breakpoint> dyadic_pieces(const Rational& a0, const Rational& a1,
                                      const Rational& b0, const Rational& b1) {
  if (!(a0 < a1) || !(b0 < b1) || !is_dyadic(a0) || !is_dyadic(a1) ||
      !is_dyadic(b0) || !is_dyadic(b1)) {
    throw PreconditionError("dyadic_pieces needs increasing dyadic ends");
  }
  auto ea = binary_exponents(a1 - a0);
  auto eb = binary_exponents(b1 - b0);
  split_to(ea, eb.size());
  split_to(eb, ea.size());
  std::vector<Breakpoint> out{{a0, b0}};
  Rational x = a0, y = b0;
  for (std::size_t i = 0; i < ea.size(); ++i) {
    x += pow2(ea[i]);
    y += pow2(eb[i]);
    out.push_back({x, y});
  }
  return out;
}

Family realize_dyadic(const DynamicalDiagram& d) {
  if (d.edges().empty()) {
    return Family();
  }
  long m = 0;
  while ((std::size_t{1} << m) < d.feet()) {
    ++m;
  }
  Rational ell = pow2(-m);
  Rational half = ell / 2;
  std::vector<PLMap> bumps;
  for (const auto& e : d.edges()) {
    Rational l(static_cast<long>(e.left())), r(static_cast<long>(e.right()));
    Rational x = l * ell, s = x + half, t = r * ell + half, y = (r + 1) * ell;
    auto pts = dyadic_pieces(x, s, x, t);
    auto rest = dyadic_pieces(s, y, t, y);
    pts.insert(pts.end(), rest.begin() + 1, rest.end());
    bumps.push_back(PLMap::from_breakpoints(std::move(pts)));
  }
  return assemble(d, bumps);
}

std::string render(const DynamicalDiagram& d) {
  // Contract a foot whose partner lies to its left with an immediately
  // following foot whose partner lies to its right.
  std::size_t n = d.feet();
  std::vector<std::size_t> column(n, 0);
  std::size_t col = 0;
  for (std::size_t v = 0; v < n; ++v) {
    column[v] = col;
    const Edge& e = d.edge_at(v);
    bool partner_left = e.right() == v;
    if (partner_left && v + 1 < n && d.edge_at(v + 1).left() == v + 1) {
      column[v + 1] = col;
      ++v;
    }
    ++col;
  }
  const std::size_t width = 6;
  std::size_t label_width = 0;
  for (const auto& l : d.labels()) {
    label_width = std::max(label_width, l.size());
  }
  std::string out(label_width + 2, ' ');
  for (std::size_t c = 0; c < col; ++c) {
    std::string cell = "*";
    cell.resize(width, ' ');
    out += cell;
  }
  while (!out.empty() && out.back() == ' ') {
    out.pop_back();
  }
  out += '\n';
  for (const auto& e : d.edges()) {
    std::string line = e.label;
    line.resize(label_width + 2, ' ');
    std::string row(col * width, ' ');
    std::size_t a = column[e.left()] * width, b = column[e.right()] * width;
    for (std::size_t i = a; i <= b; ++i) {
      row[i] = '-';
    }
    row[a] = e.positive() ? '+' : '<';
    row[b] = e.positive() ? '>' : '+';
    while (!row.empty() && row.back() == ' ') {
      row.pop_back();
    }
    out += line + row + '\n';
  }
  return out;
}

}  // namespace ppfast
