#include "ppfast/rational.hpp"

#include <cctype>
#include <ostream>

#include "ppfast/error.hpp"

namespace ppfast {

const Rational& XRational::value() const {
  if (!is_finite()) {
    throw PreconditionError("value() of an infinite XRational");
  }
  return value_;
}

bool operator==(const XRational& a, const XRational& b) {
  if (a.kind_ != b.kind_) {
    return false;
  }
  return !a.is_finite() || a.value_ == b.value_;
}

std::strong_ordering compare(const Rational& a, const Rational& b) {
  int c = cmp(a, b);
  if (c < 0) {
    return std::strong_ordering::less;
  }
  if (c > 0) {
    return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::strong_ordering operator<=>(const XRational& a, const XRational& b) {
  if (a.kind_ != b.kind_) {
    return static_cast<int>(a.kind_) <=> static_cast<int>(b.kind_);
  }
  if (!a.is_finite()) {
    return std::strong_ordering::equal;
  }
  return compare(a.value_, b.value_);
}

std::string to_string(const Rational& q) { return q.get_str(); }

std::string to_string(const XRational& x) {
  switch (x.kind()) {
    case XRational::Kind::neg_inf:
      return "-inf";
    case XRational::Kind::pos_inf:
      return "+inf";
    default:
      return to_string(x.value());
  }
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) {
    return false;
  }
  for (char c : s) {
    if (std::isdigit(static_cast<unsigned char>(c)) == 0) {
      return false;
    }
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view s) {
  std::string_view body = s;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    body.remove_prefix(1);
  }
  auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den =
      slash == std::string_view::npos ? std::string_view("1")
                                      : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw ParseError("malformed rational '" + std::string(s) + "'");
  }
  mpz_class n{std::string(num)};
  mpz_class d{std::string(den)};
  if (d == 0) {
    throw ParseError("zero denominator in '" + std::string(s) + "'");
  }
  if (!s.empty() && s.front() == '-') {
    n = -n;
  }
  Rational q(n, d);
  q.canonicalize();
  return q;
}

XRational parse_xrational(std::string_view s) {
  if (s == "+inf" || s == "inf") {
    return XRational::pos_inf();
  }
  if (s == "-inf") {
    return XRational::neg_inf();
  }
  return XRational(parse_rational(s));
}

Rational make_rational(long num, long den) {
  if (den == 0) {
    throw PreconditionError("zero denominator");
  }
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational midpoint(const Rational& a, const Rational& b) {
  Rational m = (a + b) / 2;
  m.canonicalize();
  return m;
}

bool is_dyadic(const Rational& q) {
  mpz_class d = q.get_den();
  return mpz_popcount(d.get_mpz_t()) == 1;
}

bool is_power_of_two(const Rational& q) {
  if (q <= 0) {
    return false;
  }
  mpz_class n = q.get_num(), d = q.get_den();
  return (n == 1 && mpz_popcount(d.get_mpz_t()) == 1) ||
         (d == 1 && mpz_popcount(n.get_mpz_t()) == 1);
}

std::ostream& operator<<(std::ostream& os, const XRational& x) {
  return os << to_string(x);
}

}  // namespace ppfast
