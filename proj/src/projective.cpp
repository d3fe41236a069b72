#include "ppfast/projective.hpp"

#include <algorithm>
#include <set>

#include "ppfast/error.hpp"

namespace ppfast {

const Rational& PPoint::value() const {
  if (!value_) {
    throw PreconditionError("value() of the point at infinity");
  }
  return *value_;
}

bool cyclic_less(const PPoint& a, const PPoint& b) {
  if (a.is_infinity() || b.is_infinity()) {
    return !a.is_infinity() && b.is_infinity();
  }
  return a.value() < b.value();
}

std::string to_string(const PPoint& p) {
  return p.is_infinity() ? "inf" : to_string(p.value());
}

PPoint parse_ppoint(const std::string& s) {
  if (s == "inf" || s == "+inf" || s == "-inf") {
    return PPoint::infinity();
  }
  return PPoint(parse_rational(s));
}

PPoint Mobius::operator()(const PPoint& t) const {
  if (t.is_infinity()) {
    if (c == 0) {
      return PPoint::infinity();
    }
    return PPoint(Rational(a / c));
  }
  Rational den = c * t.value() + d;
  if (den == 0) {
    return PPoint::infinity();
  }
  return PPoint(Rational((a * t.value() + b) / den));
}

Mobius Mobius::inverse() const { return Mobius{d, -b, -c, a}; }

bool Mobius::is_identity() const { return b == 0 && c == 0 && a == d; }

namespace {

std::optional<Rational> rational_sqrt(const Rational& q) {
  if (q < 0) {
    return std::nullopt;
  }
  mpz_class n = q.get_num(), m = q.get_den();
  mpz_class rn = sqrt(n), rm = sqrt(m);
  if (rn * rn != n || rm * rm != m) {
    return std::nullopt;
  }
  return Rational(rn, rm);
}

}  // namespace

std::optional<std::vector<PPoint>> Mobius::fixed_points() const {
  // c t^2 + (d - a) t - b = 0, with infinity fixed when c = 0.
  std::vector<PPoint> out;
  if (c == 0) {
    out.push_back(PPoint::infinity());
    if (a != d) {
      out.push_back(PPoint(Rational(b / (a - d))));
    }
    return out;
  }
  Rational p = d - a;
  Rational disc = p * p + 4 * c * b;
  auto r = rational_sqrt(disc);
  if (!r) {
    return std::nullopt;
  }
  out.push_back(PPoint(Rational((-p + *r) / (2 * c))));
  if (*r != 0) {
    out.push_back(PPoint(Rational((-p - *r) / (2 * c))));
  }
  std::sort(out.begin(), out.end(), cyclic_less);
  return out;
}

Mobius compose(const Mobius& f, const Mobius& g) {
  // Matrix of g times matrix of f.
  return Mobius{g.a * f.a + g.b * f.c, g.a * f.b + g.b * f.d,
                g.c * f.a + g.d * f.c, g.c * f.b + g.d * f.d};
}

Mobius power(const Mobius& f, long k) {
  Mobius base = k < 0 ? f.inverse() : f;
  Mobius out;
  for (long i = 0; i < (k < 0 ? -k : k); ++i) {
    out = compose(out, base);
  }
  return out;
}

bool Arc::contains(const PPoint& p) const {
  if (p == from || p == to) {
    return false;
  }
  if (from == to) {
    return true;
  }
  if (cyclic_less(from, to)) {
    return cyclic_less(from, p) && cyclic_less(p, to);
  }
  return cyclic_less(from, p) || cyclic_less(p, to);
}

std::string to_string(const Arc& a) {
  return "(" + to_string(a.from) + ", " + to_string(a.to) + ")";
}

namespace {

struct PointLess {
  bool operator()(const PPoint& a, const PPoint& b) const {
    return cyclic_less(a, b);
  }
};

using Cuts = std::set<PPoint, PointLess>;

// One interior rational point per open cell of the cut decomposition.
std::vector<PPoint> cell_samples(const Cuts& cuts) {
  std::vector<PPoint> pts(cuts.begin(), cuts.end());
  std::vector<PPoint> out;
  if (pts.empty()) {
    out.emplace_back(Rational(0));
    return out;
  }
  if (pts.size() == 1) {
    out.push_back(pts[0].is_infinity() ? PPoint(Rational(0))
                                       : PPoint(Rational(pts[0].value() + 1)));
    return out;
  }
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    if (pts[i + 1].is_infinity()) {
      out.emplace_back(Rational(pts[i].value() + 1));
    } else {
      out.emplace_back(midpoint(pts[i].value(), pts[i + 1].value()));
    }
  }
  if (pts.back().is_infinity()) {
    out.emplace_back(Rational(pts.front().value() - 1));
  } else {
    out.emplace_back(Rational(pts.back().value() + 1));
  }
  return out;
}

bool in_set(const std::vector<Arc>& set, const PPoint& p) {
  return std::any_of(set.begin(), set.end(),
                     [&](const Arc& a) { return a.contains(p); });
}

void add_ends(Cuts& cuts, const std::vector<Arc>& set) {
  for (const auto& a : set) {
    cuts.insert(a.from);
    cuts.insert(a.to);
  }
}

struct Symbol {
  std::string name;
  std::string inverse;
  std::string generator;
  Mobius map;
};

std::vector<Symbol> symbols_of(const PingPongWitness& w) {
  std::vector<Symbol> out;
  for (const auto& g : w.generators) {
    out.push_back({g.name, g.name + "^-1", g.name, g.map});
    out.push_back({g.name + "^-1", g.name, g.name, g.map.inverse()});
  }
  return out;
}

}  // namespace

WitnessReport validate_witness(const PingPongWitness& w) {
  WitnessReport r;
  auto fail = [&](std::string s) {
    r.valid = false;
    r.violations.push_back(std::move(s));
  };
  auto syms = symbols_of(w);
  std::set<std::string> names;
  for (const auto& s : syms) {
    if (!names.insert(s.name).second) {
      fail("duplicate symbol '" + s.name + "'");
    }
    if (!w.dest.count(s.name)) {
      fail("no destination for '" + s.name + "'");
    }
  }
  for (const auto& [k, v] : w.dest) {
    if (!names.count(k)) {
      fail("destination given for unknown symbol '" + k + "'");
    }
  }
  Cuts base;
  std::map<std::string, std::vector<PPoint>> fixed;
  for (const auto& s : syms) {
    if (s.map.det() <= 0) {
      fail("'" + s.name + "' does not preserve orientation");
      continue;
    }
    if (s.map.is_identity()) {
      fail("'" + s.name + "' is the identity");
      continue;
    }
    auto fp = s.map.fixed_points();
    if (!fp || fp->empty()) {
      fail("'" + s.name + "' has no rational fixed point");
      continue;
    }
    fixed[s.name] = *fp;
    base.insert(fp->begin(), fp->end());
  }
  if (!r.valid) {
    return r;
  }
  for (const auto& [k, v] : w.dest) {
    add_ends(base, v);
  }
  auto dest = [&](const std::string& n) -> const std::vector<Arc>& {
    return w.dest.at(n);
  };
  // Rational fixed points miss the domain, so every support is the whole
  // domain: dest(a) is in supt(a) and the support condition between
  // destinations and supports holds trivially.
  auto samples = cell_samples(base);
  for (std::size_t i = 0; i < syms.size(); ++i) {
    for (std::size_t j = i + 1; j < syms.size(); ++j) {
      for (const auto& p : samples) {
        if (in_set(dest(syms[i].name), p) && in_set(dest(syms[j].name), p)) {
          fail("dest(" + syms[i].name + ") meets dest(" + syms[j].name +
               ") near " + to_string(p));
          break;
        }
      }
    }
  }
  for (const auto& s : syms) {
    Cuts cuts = base;
    Mobius inv = s.map.inverse();
    for (const auto& a : dest(s.name)) {
      cuts.insert(inv(a.from));
      cuts.insert(inv(a.to));
    }
    const auto& d = dest(s.name);
    const auto& src = dest(s.inverse);
    for (const auto& p : cell_samples(cuts)) {
      if (in_set(d, s.map(p)) == in_set(src, p)) {
        fail("'" + s.name + "' breaks the ping-pong condition near " +
             to_string(p));
        break;
      }
    }
    // Each orbital needs a fundamental arc [x, x s) missing src(s); then
    // every orbit meets dest(s) after at most one more step.
    const auto& fp = fixed.at(s.name);
    for (std::size_t k = 0; k < fp.size(); ++k) {
      Arc orbital{fp[k], fp[(k + 1) % fp.size()]};
      bool ok = false;
      for (const auto& x : cell_samples(cuts)) {
        if (!orbital.contains(x)) {
          continue;
        }
        PPoint y = s.map(x);
        Arc fund{x, y};
        if (std::any_of(fp.begin(), fp.end(),
                        [&](const PPoint& f) { return fund.contains(f); })) {
          fund = Arc{y, x};
        }
        Cuts local = cuts;
        local.insert(x);
        local.insert(y);
        bool clear = true;
        for (const auto& p : cell_samples(local)) {
          if (fund.contains(p) && in_set(src, p)) {
            clear = false;
            break;
          }
        }
        if (clear) {
          ok = true;
          break;
        }
      }
      if (!ok) {
        fail("orbits of '" + s.name + "' on " + to_string(orbital) +
             " are not shown to reach dest(" + s.name + ")");
      }
    }
  }
  std::set<std::vector<std::string>> classes;
  for (const auto& p : samples) {
    bool covered = std::any_of(syms.begin(), syms.end(), [&](const Symbol& s) {
      return in_set(dest(s.name), p);
    });
    if (!covered) {
      std::vector<std::string> cls;
      for (const auto& g : w.generators) {
        cls.push_back(g.name);
      }
      classes.insert(cls);
    }
  }
  r.markers.assign(classes.begin(), classes.end());
  return r;
}

Blueprint blueprint_of(const PingPongWitness& w) {
  auto rep = validate_witness(w);
  if (!rep.valid) {
    throw PreconditionError("invalid ping-pong witness: " +
                            rep.violations.front());
  }
  auto syms = symbols_of(w);
  std::vector<std::string> names;
  std::map<std::string, std::string> inverse;
  std::vector<std::pair<std::string, std::string>> supt;
  for (const auto& s : syms) {
    names.push_back(s.name);
    inverse[s.name] = s.inverse;
    for (const auto& t : syms) {
      supt.emplace_back(s.name, t.name);
    }
  }
  std::vector<std::string> markers;
  for (const auto& cls : rep.markers) {
    std::string m = "~";
    for (std::size_t i = 0; i < cls.size(); ++i) {
      m += (i ? "," : "") + cls[i];
    }
    names.push_back(m);
    markers.push_back(m);
    for (const auto& s : syms) {
      if (std::find(cls.begin(), cls.end(), s.generator) != cls.end()) {
        supt.emplace_back(s.name, m);
      }
    }
  }
  return Blueprint(std::move(names), supt, inverse, markers);
}

}  // namespace ppfast
