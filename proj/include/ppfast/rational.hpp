#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace ppfast {

using Rational = mpq_class;

// A rational number or one of the two infinities of the extended line.
class XRational {
 public:
  enum class Kind : std::int8_t { neg_inf = -1, finite = 0, pos_inf = 1 };

  XRational() = default;
  XRational(Rational v) : value_(std::move(v)) { value_.canonicalize(); }
  XRational(long v) : value_(v) {}
  XRational(long num, long den) : value_(num, den) { value_.canonicalize(); }

  static XRational pos_inf() { return XRational(Kind::pos_inf); }
  static XRational neg_inf() { return XRational(Kind::neg_inf); }

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ == Kind::finite; }
  bool is_pos_inf() const { return kind_ == Kind::pos_inf; }
  bool is_neg_inf() const { return kind_ == Kind::neg_inf; }

  // Throws PreconditionError on an infinity.
  const Rational& value() const;

  friend bool operator==(const XRational& a, const XRational& b);
  friend std::strong_ordering operator<=>(const XRational& a,
                                          const XRational& b);

 private:
  explicit XRational(Kind k) : kind_(k) {}

  Kind kind_ = Kind::finite;
  Rational value_ = 0;
};

std::strong_ordering compare(const Rational& a, const Rational& b);

std::string to_string(const Rational& q);
std::string to_string(const XRational& x);

// Accepts "p", "p/q", "-p/q"; the result is in lowest terms.
Rational parse_rational(std::string_view s);
// As parse_rational, plus "+inf", "inf" and "-inf".
XRational parse_xrational(std::string_view s);

// num/den in lowest terms.
Rational make_rational(long num, long den = 1);

Rational midpoint(const Rational& a, const Rational& b);

// True iff q is an integer multiple of a power of two (denominator 2^k).
bool is_dyadic(const Rational& q);
// True iff q = 2^k for some integer k (possibly negative).
bool is_power_of_two(const Rational& q);

std::ostream& operator<<(std::ostream& os, const XRational& x);

}  // namespace ppfast
