#pragma once

#include <string>

#include "ppfast/rational.hpp"

namespace ppfast {

// An interval of the extended line with independently open/closed ends.
// Infinite endpoints are always open.
struct Interval {
  XRational lo;
  XRational hi;
  bool lo_closed = false;
  bool hi_closed = false;

  static Interval open(XRational a, XRational b) {
    return {std::move(a), std::move(b), false, false};
  }
  static Interval closed_open(XRational a, XRational b) {
    return {std::move(a), std::move(b), true, false};
  }
  static Interval point(const Rational& a) { return {a, a, true, true}; }

  bool empty() const;
  bool contains(const XRational& t) const;
  bool subset_of(const Interval& other) const;
  bool intersects(const Interval& other) const;
  // Every point of *this is below every point of other.
  bool entirely_left_of(const Interval& other) const;

  friend bool operator==(const Interval&, const Interval&) = default;
};

std::string to_string(const Interval& i);

}  // namespace ppfast
