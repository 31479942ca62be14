#include "qlift/rational.hpp"

#include "qlift/error.hpp"

namespace qlift {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) fail(Errc::division_by_zero, "rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

Rational parse_rational(const std::string& text) {
  Rational r;
  if (r.set_str(text, 10) != 0)
    fail(Errc::parse_error, "invalid rational literal: " + text);
  if (r.get_den() == 0) fail(Errc::division_by_zero, "rational with zero denominator");
  r.canonicalize();
  return r;
}

}  // namespace qlift
