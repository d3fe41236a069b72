#include "ppfast/interval.hpp"

namespace ppfast {

bool Interval::empty() const {
  if (lo < hi) {
    return false;
  }
  return !(lo == hi && lo_closed && hi_closed && lo.is_finite());
}

bool Interval::contains(const XRational& t) const {
  if (!t.is_finite()) {
    return false;
  }
  bool above = lo_closed ? lo <= t : lo < t;
  bool below = hi_closed ? t <= hi : t < hi;
  return above && below;
}

namespace {

// Lower endpoint of a is at least that of b (a starts no earlier).
bool lo_not_before(const Interval& a, const Interval& b) {
  if (a.lo != b.lo) {
    return a.lo > b.lo;
  }
  return b.lo_closed || !a.lo_closed;
}

bool hi_not_after(const Interval& a, const Interval& b) {
  if (a.hi != b.hi) {
    return a.hi < b.hi;
  }
  return b.hi_closed || !a.hi_closed;
}

}  // namespace

bool Interval::subset_of(const Interval& other) const {
  if (empty()) {
    return true;
  }
  return lo_not_before(*this, other) && hi_not_after(*this, other);
}

bool Interval::intersects(const Interval& other) const {
  if (empty() || other.empty()) {
    return false;
  }
  Interval meet = *this;
  if (lo_not_before(other, *this)) {
    meet.lo = other.lo;
    meet.lo_closed = other.lo_closed;
  }
  if (hi_not_after(other, *this)) {
    meet.hi = other.hi;
    meet.hi_closed = other.hi_closed;
  }
  return !meet.empty();
}

bool Interval::entirely_left_of(const Interval& other) const {
  if (empty() || other.empty()) {
    return true;
  }
  if (hi != other.lo) {
    return hi < other.lo;
  }
  return !(hi_closed && other.lo_closed);
}

std::string to_string(const Interval& i) {
  return std::string(i.lo_closed ? "[" : "(") + to_string(i.lo) + ", " +
         to_string(i.hi) + (i.hi_closed ? "]" : ")");
}

}  // namespace ppfast
