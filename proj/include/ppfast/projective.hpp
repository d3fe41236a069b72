#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ppfast/abstract.hpp"
#include "ppfast/rational.hpp"

namespace ppfast {

// A rational point of the projective line, or infinity.
class PPoint {
 public:
  PPoint() = default;
  PPoint(Rational v) : value_(std::move(v)) { value_->canonicalize(); }
  static PPoint infinity() {
    PPoint p;
    p.value_.reset();
    return p;
  }

  bool is_infinity() const { return !value_.has_value(); }
  const Rational& value() const;

  friend bool operator==(const PPoint& a, const PPoint& b) = default;

 private:
  std::optional<Rational> value_ = Rational(0);
};

// Position in the cyclic order cut open at infinity: reals first, then infinity.
bool cyclic_less(const PPoint& a, const PPoint& b);
std::string to_string(const PPoint& p);
PPoint parse_ppoint(const std::string& s);

// t -> (a t + b) / (c t + d) with ad - bc > 0.
struct Mobius {
  Rational a = 1, b = 0, c = 0, d = 1;

  PPoint operator()(const PPoint& t) const;
  Mobius inverse() const;
  Rational det() const { return a * d - b * c; }
  bool is_identity() const;
  // Rational fixed points; nullopt when some fixed point is irrational or
  // the map is elliptic.
  std::optional<std::vector<PPoint>> fixed_points() const;
};

// t (f g) = (t f) g.
Mobius compose(const Mobius& f, const Mobius& g);
Mobius power(const Mobius& f, long k);

// Open arc running in the positive direction from `from` to `to`.
// from == to is the whole line minus that point.
struct Arc {
  PPoint from;
  PPoint to;

  // For points other than the endpoints.
  bool contains(const PPoint& p) const;
};

std::string to_string(const Arc& a);

// A ping-pong system on the irrational points of the projective line. Sets
// are finite unions of open arcs with rational ends; only the irrational
// points of a set matter.
struct PingPongWitness {
  struct Generator {
    std::string name;
    Mobius map;
  };
  std::vector<Generator> generators;
  // Keys "name" and "name^-1".
  std::map<std::string, std::vector<Arc>> dest;
};

struct WitnessReport {
  bool valid = true;
  std::vector<std::string> violations;
  // One entry per marker class; each lists generator names.
  std::vector<std::vector<std::string>> markers;
};

WitnessReport validate_witness(const PingPongWitness& w);

// Symbols "name", "name^-1" and "~" followed by the comma-joined class.
// Throws PreconditionError when the witness is invalid.
Blueprint blueprint_of(const PingPongWitness& w);

}  // namespace ppfast
