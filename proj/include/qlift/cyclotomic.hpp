#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qlift/rational.hpp"

namespace qlift {

unsigned euler_phi(unsigned n);
std::vector<unsigned> divisors(unsigned n);

// Coefficients of the n-th cyclotomic polynomial, ascending degree, monic.
const std::vector<Integer>& cyclotomic_polynomial(unsigned n);

// Exact element of Q(zeta_N), stored as a coefficient vector of length
// phi(N) reduced modulo the N-th cyclotomic polynomial. Conductors merge
// at the lcm on mixed-conductor arithmetic and are never descended.
class Cyclotomic {
public:
  Cyclotomic() : n_(1), c_(1, Rational(0)) {}
  Cyclotomic(const Rational& r) : n_(1), c_(1, r) {}
  Cyclotomic(long v) : n_(1), c_(1, Rational(v)) {}
  Cyclotomic(int v) : Cyclotomic(static_cast<long>(v)) {}

  // cyclo_new: coeffs of any finite length, exponents taken mod N.
  static Cyclotomic from_coeffs(unsigned n, std::vector<Rational> coeffs);
  static Cyclotomic zeta(unsigned n);

  unsigned conductor() const { return n_; }
  const std::vector<Rational>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_one() const { return *this == Cyclotomic(1); }
  bool is_rational() const;
  std::optional<Rational> as_rational() const;

  Cyclotomic operator-() const;
  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Cyclotomic& o);
  Cyclotomic& operator/=(const Cyclotomic& o);

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  friend Cyclotomic operator/(Cyclotomic a, const Cyclotomic& b) { return a /= b; }

  Cyclotomic inverse() const;
  Cyclotomic pow(long e) const;

  // Re-expresses the value in Q(zeta_m); m must be a multiple of the conductor.
  Cyclotomic embedded(unsigned m) const;

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
  friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

  // Renders as a polynomial in zeta(N), e.g. "1 - 2/3*zeta(9)^2".
  std::string str() const;
  // Parses +,-,*,/,^, parentheses, integer literals and zeta(N) atoms.
  static Cyclotomic parse(const std::string& text);

private:
  unsigned n_;
  std::vector<Rational> c_;
};

// Multiplicative order if the element is a root of unity.
std::optional<unsigned> root_order(const Cyclotomic& a);

// Cached zeta_N^e (e taken mod N). Hot path for character evaluation.
const Cyclotomic& zeta_power(unsigned n, long e);

}  // namespace qlift
