#pragma once

#include <string>
#include <vector>

#include "ppfast/interval.hpp"
#include "ppfast/rational.hpp"

namespace ppfast {

// t -> slope * t + intercept, slope > 0.
struct Affine {
  Rational slope = 1;
  Rational intercept = 0;

  Rational operator()(const Rational& t) const { return slope * t + intercept; }
  Affine inverse() const;
  // The affine map through (x, y) with the given slope.
  static Affine through(const Rational& x, const Rational& y,
                        const Rational& slope);

  friend bool operator==(const Affine&, const Affine&) = default;
};

struct Breakpoint {
  Rational x;
  Rational y;
  friend bool operator==(const Breakpoint&, const Breakpoint&) = default;
};

// Orientation preserving PL homeomorphism of the extended line with affine
// tails. Always held in canonical form, so == is equality of maps.
class PLMap {
 public:
  PLMap() = default;

  static PLMap affine(const Rational& slope, const Rational& intercept);
  // Points must increase strictly in both coordinates; slopes positive.
  static PLMap from_breakpoints(std::vector<Breakpoint> points,
                                const Rational& left_slope = 1,
                                const Rational& right_slope = 1);
  // As read from a file: tails must pass through the extreme breakpoints.
  static PLMap from_parts(std::vector<Breakpoint> points, const Affine& left,
                          const Affine& right);

  const std::vector<Breakpoint>& breakpoints() const { return points_; }
  const Affine& left_tail() const { return left_; }
  const Affine& right_tail() const { return right_; }

  Rational operator()(const Rational& t) const;
  XRational operator()(const XRational& t) const;
  Rational preimage(const Rational& y) const;

  // Slope on the piece immediately to the right / left of t.
  Rational slope_after(const Rational& t) const;
  Rational slope_before(const Rational& t) const;

  bool is_identity() const;

  friend bool operator==(const PLMap&, const PLMap&) = default;

 private:
  std::vector<Breakpoint> points_;
  Affine left_;
  Affine right_;
};

XRational evaluate(const PLMap& f, const XRational& t);
// t -> (t f) g.
PLMap compose(const PLMap& f, const PLMap& g);
PLMap invert(const PLMap& f);
PLMap power(const PLMap& f, long k);
// Image of an interval under an increasing map.
Interval image(const Interval& i, const PLMap& f);

enum class Sign { positive, negative };

inline Sign flip(Sign s) {
  return s == Sign::positive ? Sign::negative : Sign::positive;
}

struct Orbital {
  XRational left;
  XRational right;
  Sign sign = Sign::positive;

  Interval support() const { return Interval::open(left, right); }
  friend bool operator==(const Orbital&, const Orbital&) = default;
};

std::vector<Orbital> orbitals(const PLMap& f);
std::vector<XRational> transition_points(const PLMap& f);

// A positive one-orbital map.
class Bump {
 public:
  // Throws PreconditionError unless map has one positive orbital.
  explicit Bump(PLMap map);

  const PLMap& map() const { return map_; }
  const Orbital& orbital() const { return orbital_; }
  const XRational& left() const { return orbital_.left; }
  const XRational& right() const { return orbital_.right; }
  Interval support() const { return orbital_.support(); }

  friend bool operator==(const Bump& a, const Bump& b) {
    return a.map_ == b.map_;
  }

 private:
  PLMap map_;
  Orbital orbital_;
};

struct SignedBump {
  Bump bump;
  Sign sign;

  // bump.map() or its inverse according to sign.
  PLMap as_map() const;
};

std::vector<SignedBump> signed_bumps(const PLMap& f);

// f on the closure of the orbital, identity elsewhere.
PLMap restrict_to(const PLMap& f, const Orbital& o);

std::string to_string(const PLMap& f);

}  // namespace ppfast
