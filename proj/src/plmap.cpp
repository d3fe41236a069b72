#include "ppfast/plmap.hpp"

#include <algorithm>
#include <optional>

#include "ppfast/error.hpp"

namespace ppfast {

Affine Affine::inverse() const {
  Rational s = 1 / slope;
  Rational b = -intercept / slope;
  return {s, b};
}

Affine Affine::through(const Rational& x, const Rational& y,
                       const Rational& slope) {
  return {slope, y - slope * x};
}

PLMap PLMap::affine(const Rational& slope, const Rational& intercept) {
  if (slope <= 0) {
    throw PreconditionError("affine map needs a positive slope");
  }
  PLMap f;
  f.left_ = f.right_ = Affine{slope, intercept};
  return f;
}

PLMap PLMap::from_breakpoints(std::vector<Breakpoint> points,
                              const Rational& left_slope,
                              const Rational& right_slope) {
  if (left_slope <= 0 || right_slope <= 0) {
    throw PreconditionError("tail slopes must be positive");
  }
  if (points.empty()) {
    if (left_slope != right_slope) {
      throw PreconditionError("no breakpoints but different tail slopes");
    }
    return affine(left_slope, 0);
  }
  for (auto& p : points) {
    p.x.canonicalize();
    p.y.canonicalize();
  }
  for (std::size_t i = 1; i < points.size(); ++i) {
    if (points[i].x <= points[i - 1].x || points[i].y <= points[i - 1].y) {
      throw PreconditionError(
          "breakpoints must increase strictly in both coordinates");
    }
  }
  std::size_t n = points.size();
  auto seg = [&](std::size_t i) {  // slope between points i and i + 1
    return Rational((points[i + 1].y - points[i].y) /
                    (points[i + 1].x - points[i].x));
  };
  PLMap f;
  for (std::size_t i = 0; i < n; ++i) {
    Rational in = i == 0 ? left_slope : seg(i - 1);
    Rational out = i + 1 == n ? right_slope : seg(i);
    if (in != out) {
      f.points_.push_back(points[i]);
    }
  }
  if (f.points_.empty()) {
    f.left_ = f.right_ = Affine::through(points[0].x, points[0].y, left_slope);
  } else {
    f.left_ = Affine::through(f.points_.front().x, f.points_.front().y,
                              left_slope);
    f.right_ = Affine::through(f.points_.back().x, f.points_.back().y,
                               right_slope);
  }
  return f;
}

PLMap PLMap::from_parts(std::vector<Breakpoint> points, const Affine& left,
                        const Affine& right) {
  if (left.slope <= 0 || right.slope <= 0) {
    throw PreconditionError("tail slopes must be positive");
  }
  if (points.empty()) {
    if (!(left == right)) {
      throw PreconditionError("no breakpoints but different tails");
    }
    return affine(left.slope, left.intercept);
  }
  if (left(points.front().x) != points.front().y ||
      right(points.back().x) != points.back().y) {
    throw PreconditionError("tails inconsistent with extreme breakpoints");
  }
  return from_breakpoints(std::move(points), left.slope, right.slope);
}

Rational PLMap::operator()(const Rational& t) const {
  if (points_.empty() || t <= points_.front().x) {
    return left_(t);
  }
  if (t >= points_.back().x) {
    return right_(t);
  }
  auto it = std::upper_bound(
      points_.begin(), points_.end(), t,
      [](const Rational& v, const Breakpoint& p) { return v < p.x; });
  const Breakpoint& b = *it;
  const Breakpoint& a = *(it - 1);
  return a.y + (t - a.x) * (b.y - a.y) / (b.x - a.x);
}

XRational PLMap::operator()(const XRational& t) const {
  if (!t.is_finite()) {
    return t;
  }
  return XRational((*this)(t.value()));
}

Rational PLMap::preimage(const Rational& y) const {
  if (points_.empty() || y <= points_.front().y) {
    return left_.inverse()(y);
  }
  if (y >= points_.back().y) {
    return right_.inverse()(y);
  }
  auto it = std::upper_bound(
      points_.begin(), points_.end(), y,
      [](const Rational& v, const Breakpoint& p) { return v < p.y; });
  const Breakpoint& b = *it;
  const Breakpoint& a = *(it - 1);
  return a.x + (y - a.y) * (b.x - a.x) / (b.y - a.y);
}

Rational PLMap::slope_after(const Rational& t) const {
  if (points_.empty() || t < points_.front().x) {
    return left_.slope;
  }
  if (t >= points_.back().x) {
    return right_.slope;
  }
  auto it = std::upper_bound(
      points_.begin(), points_.end(), t,
      [](const Rational& v, const Breakpoint& p) { return v < p.x; });
  const Breakpoint& b = *it;
  const Breakpoint& a = *(it - 1);
  return (b.y - a.y) / (b.x - a.x);
}

Rational PLMap::slope_before(const Rational& t) const {
  if (points_.empty() || t <= points_.front().x) {
    return left_.slope;
  }
  if (t > points_.back().x) {
    return right_.slope;
  }
  auto it = std::lower_bound(
      points_.begin(), points_.end(), t,
      [](const Breakpoint& p, const Rational& v) { return p.x < v; });
  const Breakpoint& b = *it;
  const Breakpoint& a = *(it - 1);
  return (b.y - a.y) / (b.x - a.x);
}

bool PLMap::is_identity() const {
  return points_.empty() && left_ == Affine{};
}

XRational evaluate(const PLMap& f, const XRational& t) { return f(t); }

PLMap compose(const PLMap& f, const PLMap& g) {
  std::vector<Rational> xs;
  for (const auto& p : f.breakpoints()) {
    xs.push_back(p.x);
  }
  for (const auto& q : g.breakpoints()) {
    xs.push_back(f.preimage(q.x));
  }
  Rational ls = f.left_tail().slope * g.left_tail().slope;
  Rational rs = f.right_tail().slope * g.right_tail().slope;
  if (xs.empty()) {
    Affine a = f.left_tail(), b = g.left_tail();
    return PLMap::affine(ls, b.slope * a.intercept + b.intercept);
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  std::vector<Breakpoint> pts;
  pts.reserve(xs.size());
  for (auto& x : xs) {
    Rational y = g(f(x));
    pts.push_back({std::move(x), std::move(y)});
  }
  return PLMap::from_breakpoints(std::move(pts), ls, rs);
}

PLMap invert(const PLMap& f) {
  if (f.breakpoints().empty()) {
    Affine a = f.left_tail().inverse();
    return PLMap::affine(a.slope, a.intercept);
  }
  std::vector<Breakpoint> pts;
  for (const auto& p : f.breakpoints()) {
    pts.push_back({p.y, p.x});
  }
  return PLMap::from_breakpoints(std::move(pts), 1 / f.left_tail().slope,
                                 1 / f.right_tail().slope);
}

PLMap power(const PLMap& f, long k) {
  PLMap base = k < 0 ? invert(f) : f;
  unsigned long e = k < 0 ? static_cast<unsigned long>(-(k + 1)) + 1
                          : static_cast<unsigned long>(k);
  PLMap result;
  while (e != 0) {
    if (e & 1U) {
      result = compose(result, base);
    }
    e >>= 1U;
    if (e != 0) {
      base = compose(base, base);
    }
  }
  return result;
}

Interval image(const Interval& i, const PLMap& f) {
  return {f(i.lo), f(i.hi), i.lo_closed, i.hi_closed};
}

namespace {

struct Piece {
  std::optional<Rational> lo;  // nullopt = -inf
  std::optional<Rational> hi;  // nullopt = +inf
  Affine map;
};

std::vector<Piece> pieces(const PLMap& f) {
  const auto& pts = f.breakpoints();
  std::vector<Piece> out;
  if (pts.empty()) {
    out.push_back({std::nullopt, std::nullopt, f.left_tail()});
    return out;
  }
  out.push_back({std::nullopt, pts.front().x, f.left_tail()});
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    Rational m = (pts[i + 1].y - pts[i].y) / (pts[i + 1].x - pts[i].x);
    out.push_back({pts[i].x, pts[i + 1].x, Affine::through(pts[i].x,
                                                             pts[i].y, m)});
  }
  out.push_back({pts.back().x, std::nullopt, f.right_tail()});
  return out;
}

}  // namespace

std::vector<Orbital> orbitals(const PLMap& f) {
  std::vector<Rational> cand;
  for (const auto& p : f.breakpoints()) {
    cand.push_back(p.x);
  }
  for (const auto& pc : pieces(f)) {
    if (pc.map.slope == 1) {
      continue;
    }
    Rational fix = pc.map.intercept / (1 - pc.map.slope);
    if ((!pc.lo || *pc.lo < fix) && (!pc.hi || fix < *pc.hi)) {
      cand.push_back(fix);
    }
  }
  std::sort(cand.begin(), cand.end());
  cand.erase(std::unique(cand.begin(), cand.end()), cand.end());

  // Cells alternate gap, point, gap, ..., gap. Each gap has constant
  // displacement sign.
  auto gap_sign = [&](std::size_t g) -> int {
    Rational sample;
    if (cand.empty()) {
      sample = 0;
    } else if (g == 0) {
      sample = cand.front() - 1;
    } else if (g == cand.size()) {
      sample = cand.back() + 1;
    } else {
      sample = midpoint(cand[g - 1], cand[g]);
    }
    return sgn(f(sample) - sample);
  };

  std::vector<Orbital> out;
  std::optional<XRational> start;
  int sign = 0;
  auto close = [&](XRational end) {
    if (start) {
      out.push_back({*start, std::move(end),
                     sign > 0 ? Sign::positive : Sign::negative});
      start.reset();
    }
  };
  for (std::size_t g = 0; g <= cand.size(); ++g) {
    int s = gap_sign(g);
    if (s != 0 && !start) {
      start = g == 0 ? XRational::neg_inf() : XRational(cand[g - 1]);
      sign = s;
    }
    if (s == 0) {
      // A fixed gap was preceded by a fixed point, so nothing is open here.
      start.reset();
    }
    if (g == cand.size()) {
      close(XRational::pos_inf());
    } else if (f(cand[g]) == cand[g]) {
      close(XRational(cand[g]));
    }
  }
  return out;
}

std::vector<XRational> transition_points(const PLMap& f) {
  std::vector<XRational> out;
  for (const auto& o : orbitals(f)) {
    out.push_back(o.left);
    out.push_back(o.right);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Bump::Bump(PLMap map) : map_(std::move(map)) {
  auto os = orbitals(map_);
  if (os.size() != 1 || os.front().sign != Sign::positive) {
    throw PreconditionError("a bump needs exactly one positive orbital");
  }
  orbital_ = os.front();
}

PLMap SignedBump::as_map() const {
  return sign == Sign::positive ? bump.map() : invert(bump.map());
}

PLMap restrict_to(const PLMap& f, const Orbital& o) {
  std::vector<Breakpoint> pts;
  if (o.left.is_finite()) {
    pts.push_back({o.left.value(), o.left.value()});
  }
  for (const auto& p : f.breakpoints()) {
    if (o.left < XRational(p.x) && XRational(p.x) < o.right) {
      pts.push_back(p);
    }
  }
  if (o.right.is_finite()) {
    pts.push_back({o.right.value(), o.right.value()});
  }
  if (pts.empty()) {
    return f;
  }
  Rational ls = o.left.is_finite() ? Rational(1) : f.left_tail().slope;
  Rational rs = o.right.is_finite() ? Rational(1) : f.right_tail().slope;
  return PLMap::from_breakpoints(std::move(pts), ls, rs);
}

std::vector<SignedBump> signed_bumps(const PLMap& f) {
  std::vector<SignedBump> out;
  for (const auto& o : orbitals(f)) {
    PLMap r = restrict_to(f, o);
    if (o.sign == Sign::negative) {
      r = invert(r);
    }
    out.push_back({Bump(std::move(r)), o.sign});
  }
  return out;
}

std::string to_string(const PLMap& f) {
  std::string s = "{";
  for (const auto& p : f.breakpoints()) {
    s += "(" + to_string(p.x) + "," + to_string(p.y) + ")";
  }
  s += " L:" + to_string(f.left_tail().slope) + "t+" +
       to_string(f.left_tail().intercept);
  s += " R:" + to_string(f.right_tail().slope) + "t+" +
       to_string(f.right_tail().intercept) + "}";
  return s;
}

}  // namespace ppfast
