#include "qlift/cyclotomic.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "qlift/error.hpp"

namespace qlift {

unsigned euler_phi(unsigned n) {
  unsigned result = n;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

std::vector<unsigned> divisors(unsigned n) {
  std::vector<unsigned> small, large;
  for (unsigned d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d != n / d) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

namespace {

using ZPoly = std::vector<Integer>;

void ztrim(ZPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Exact division of integer polynomials; remainder must vanish.
ZPoly zpoly_exact_div(const ZPoly& a, const ZPoly& b) {
  ZPoly rem = a;
  ztrim(rem);
  ZPoly quot(rem.size() >= b.size() ? rem.size() - b.size() + 1 : 0, Integer(0));
  while (rem.size() >= b.size()) {
    Integer q = rem.back() / b.back();
    size_t shift = rem.size() - b.size();
    quot[shift] = q;
    for (size_t j = 0; j < b.size(); ++j) rem[shift + j] -= q * b[j];
    ztrim(rem);
  }
  if (!rem.empty()) fail(Errc::bad_input, "inexact polynomial division");
  return quot;
}

std::map<unsigned, ZPoly>& phi_cache() {
  static std::map<unsigned, ZPoly> cache;
  return cache;
}
std::mutex& phi_mutex() {
  static std::mutex m;
  return m;
}

ZPoly compute_cyclotomic(unsigned n);

// recursion stays under the single lock held by phi_poly
const ZPoly& phi_poly_nolock(unsigned n) {
  auto it = phi_cache().find(n);
  if (it != phi_cache().end()) return it->second;
  return phi_cache().emplace(n, compute_cyclotomic(n)).first->second;
}

const ZPoly& phi_poly(unsigned n) {
  std::lock_guard<std::mutex> lock(phi_mutex());
  return phi_poly_nolock(n);
}

ZPoly compute_cyclotomic(unsigned n) {
  if (n == 1) return {Integer(-1), Integer(1)};  // x - 1
  ZPoly p(n + 1, Integer(0));                    // x^n - 1
  p[0] = -1;
  p[n] = 1;
  for (unsigned d : divisors(n))
    if (d < n) p = zpoly_exact_div(p, phi_poly_nolock(d));
  return p;
}

using QPoly = std::vector<Rational>;

void qtrim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Remainder modulo the monic integer polynomial m.
QPoly qpoly_rem(QPoly a, const ZPoly& m) {
  qtrim(a);
  while (a.size() >= m.size()) {
    Rational q = a.back();
    size_t shift = a.size() - m.size();
    for (size_t j = 0; j < m.size(); ++j) a[shift + j] -= q * Rational(m[j]);
    qtrim(a);
  }
  return a;
}

QPoly qpoly_mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly c(a.size() + b.size() - 1, Rational(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  }
  return c;
}

// Division with remainder over Q; divisor need not be monic.
void qpoly_divmod(const QPoly& a, const QPoly& b, QPoly& quot, QPoly& rem) {
  rem = a;
  qtrim(rem);
  quot.assign(rem.size() >= b.size() ? rem.size() - b.size() + 1 : 0, Rational(0));
  while (rem.size() >= b.size() && !rem.empty()) {
    Rational q = rem.back() / b.back();
    size_t shift = rem.size() - b.size();
    quot[shift] = q;
    for (size_t j = 0; j < b.size(); ++j) rem[shift + j] -= q * b[j];
    qtrim(rem);
  }
}

}  // namespace

const std::vector<Integer>& cyclotomic_polynomial(unsigned n) {
  if (n == 0) fail(Errc::zero_conductor, "cyclotomic polynomial of index 0");
  return phi_poly(n);
}

Cyclotomic Cyclotomic::from_coeffs(unsigned n, std::vector<Rational> coeffs) {
  if (n == 0) fail(Errc::zero_conductor, "conductor must be positive");
  // fold exponents mod n, then reduce modulo Phi_n
  QPoly folded(n, Rational(0));
  for (size_t k = 0; k < coeffs.size(); ++k) folded[k % n] += coeffs[k];
  QPoly reduced = qpoly_rem(std::move(folded), cyclotomic_polynomial(n));
  Cyclotomic out;
  out.n_ = n;
  reduced.resize(euler_phi(n), Rational(0));
  out.c_ = std::move(reduced);
  return out;
}

Cyclotomic Cyclotomic::zeta(unsigned n) {
  return from_coeffs(n, {Rational(0), Rational(1)});
}

bool Cyclotomic::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& r) { return r == 0; });
}

bool Cyclotomic::is_rational() const {
  for (size_t k = 1; k < c_.size(); ++k)
    if (c_[k] != 0) return false;
  return true;
}

std::optional<Rational> Cyclotomic::as_rational() const {
  if (!is_rational()) return std::nullopt;
  return c_[0];
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic out = *this;
  for (auto& x : out.c_) x = -x;
  return out;
}

Cyclotomic Cyclotomic::embedded(unsigned m) const {
  if (m == n_) return *this;
  if (m % n_ != 0) fail(Errc::bad_input, "embedding target is not a conductor multiple");
  unsigned stretch = m / n_;
  std::vector<Rational> raw(static_cast<size_t>(c_.size() - 1) * stretch + 1, Rational(0));
  for (size_t k = 0; k < c_.size(); ++k) raw[k * stretch] = c_[k];
  return from_coeffs(m, std::move(raw));
}

namespace {
unsigned lcm_u(unsigned a, unsigned b) { return a / std::gcd(a, b) * b; }
}  // namespace

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  if (n_ != o.n_) {
    unsigned m = lcm_u(n_, o.n_);
    *this = embedded(m);
    return *this += o.embedded(m);
  }
  for (size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) {
  if (n_ != o.n_) {
    unsigned m = lcm_u(n_, o.n_);
    *this = embedded(m);
    return *this -= o.embedded(m);
  }
  for (size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
  return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
  if (n_ != o.n_) {
    unsigned m = lcm_u(n_, o.n_);
    *this = embedded(m);
    return *this *= o.embedded(m);
  }
  QPoly prod = qpoly_mul(c_, o.c_);
  QPoly reduced = qpoly_rem(std::move(prod), cyclotomic_polynomial(n_));
  reduced.resize(euler_phi(n_), Rational(0));
  c_ = std::move(reduced);
  return *this;
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) fail(Errc::division_by_zero, "inverse of zero");
  if (n_ == 1) return Cyclotomic(Rational(1) / c_[0]);
  // extended Euclid in Q[x] against Phi_n (irreducible over Q)
  const ZPoly& phi_z = cyclotomic_polynomial(n_);
  QPoly r0(phi_z.begin(), phi_z.end());
  QPoly r1 = c_;
  qtrim(r1);
  QPoly s0 = {}, s1 = {Rational(1)};  // coefficients of this element
  while (!r1.empty()) {
    QPoly quot, rem;
    qpoly_divmod(r0, r1, quot, rem);
    QPoly s2 = s0;
    QPoly qs1 = qpoly_mul(quot, s1);
    s2.resize(std::max(s2.size(), qs1.size()), Rational(0));
    for (size_t k = 0; k < qs1.size(); ++k) s2[k] -= qs1[k];
    qtrim(s2);
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r0 is a nonzero constant gcd; inverse = s0 / r0
  if (r0.size() != 1) fail(Errc::bad_input, "gcd with cyclotomic polynomial not constant");
  Cyclotomic out;
  out.n_ = n_;
  QPoly inv = qpoly_rem(std::move(s0), phi_z);
  inv.resize(euler_phi(n_), Rational(0));
  for (auto& x : inv) x /= r0[0];
  out.c_ = std::move(inv);
  return out;
}

Cyclotomic& Cyclotomic::operator/=(const Cyclotomic& o) { return *this *= o.inverse(); }

Cyclotomic Cyclotomic::pow(long e) const {
  if (e == 0) return Cyclotomic(1);
  Cyclotomic base = e < 0 ? inverse() : *this;
  unsigned long k = e < 0 ? static_cast<unsigned long>(-(e + 1)) + 1 : static_cast<unsigned long>(e);
  Cyclotomic acc(1);
  while (k) {
    if (k & 1) acc *= base;
    base *= base;
    k >>= 1;
  }
  return acc;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.n_ == b.n_) return a.c_ == b.c_;
  unsigned m = lcm_u(a.n_, b.n_);
  return a.embedded(m).c_ == b.embedded(m).c_;
}

std::string Cyclotomic::str() const {
  if (is_rational()) return to_string(c_[0]);
  std::ostringstream os;
  bool first = true;
  for (size_t k = 0; k < c_.size(); ++k) {
    if (c_[k] == 0) continue;
    Rational coeff = c_[k];
    if (first) {
      if (sgn(coeff) < 0) {
        os << "-";
        coeff = -coeff;
      }
      first = false;
    } else {
      os << (sgn(coeff) < 0 ? " - " : " + ");
      if (sgn(coeff) < 0) coeff = -coeff;
    }
    if (k == 0) {
      os << to_string(coeff);
      continue;
    }
    if (coeff != 1) os << to_string(coeff) << "*";
    os << "zeta(" << n_ << ")";
    if (k > 1) os << "^" << k;
  }
  if (first) return "0";
  return os.str();
}

namespace {

struct Parser {
  const std::string& s;
  size_t pos = 0;

  explicit Parser(const std::string& text) : s(text) {}

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  [[noreturn]] void error(const std::string& what) {
    fail(Errc::parse_error, what + " at position " + std::to_string(pos) + " in \"" + s + "\"");
  }

  Cyclotomic parse_expr() {
    Cyclotomic v = parse_term();
    for (;;) {
      if (eat('+'))
        v += parse_term();
      else if (eat('-'))
        v -= parse_term();
      else
        return v;
    }
  }

  Cyclotomic parse_term() {
    Cyclotomic v = parse_factor();
    for (;;) {
      if (eat('*'))
        v *= parse_factor();
      else if (eat('/'))
        v /= parse_factor();
      else
        return v;
    }
  }

  Cyclotomic parse_factor() {
    skip_ws();
    if (eat('-')) return -parse_factor();
    Cyclotomic base = parse_base();
    skip_ws();
    if (eat('^')) {
      bool neg = eat('-');
      long e = parse_long();
      return base.pow(neg ? -e : e);
    }
    return base;
  }

  long parse_long() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) error("expected integer");
    return std::stol(s.substr(start, pos - start));
  }

  Cyclotomic parse_base() {
    skip_ws();
    if (eat('(')) {
      Cyclotomic v = parse_expr();
      if (!eat(')')) error("expected ')'");
      return v;
    }
    if (pos + 4 <= s.size() && s.compare(pos, 4, "zeta") == 0) {
      pos += 4;
      if (!eat('(')) error("expected '(' after zeta");
      long n = parse_long();
      if (!eat(')')) error("expected ')' after zeta conductor");
      if (n <= 0) error("conductor must be positive");
      return Cyclotomic::zeta(static_cast<unsigned>(n));
    }
    if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      size_t start = pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      return Cyclotomic(Rational(Integer(s.substr(start, pos - start))));
    }
    error("expected number, zeta(N) or parenthesized expression");
  }
};

}  // namespace

Cyclotomic Cyclotomic::parse(const std::string& text) {
  Parser p(text);
  Cyclotomic v = p.parse_expr();
  p.skip_ws();
  if (p.pos != text.size()) p.error("trailing input");
  return v;
}

std::optional<unsigned> root_order(const Cyclotomic& a) {
  if (a.is_zero()) return std::nullopt;
  unsigned n = a.conductor();
  // roots of unity in Q(zeta_n) form a cyclic group of order n (n even) or 2n
  unsigned m = (n % 2 == 0) ? n : 2 * n;
  if (a.pow(m) != Cyclotomic(1)) return std::nullopt;
  unsigned order = m;
  for (unsigned p = 2; p <= order; ++p) {
    if (order % p != 0) continue;
    while (order % p == 0 && a.pow(order / p) == Cyclotomic(1)) order /= p;
  }
  return order;
}

namespace {
std::map<std::pair<unsigned, unsigned>, Cyclotomic>& zp_cache() {
  static std::map<std::pair<unsigned, unsigned>, Cyclotomic> cache;
  return cache;
}
std::mutex& zp_mutex() {
  static std::mutex m;
  return m;
}
}  // namespace

const Cyclotomic& zeta_power(unsigned n, long e) {
  if (n == 0) fail(Errc::zero_conductor, "zeta_power conductor 0");
  long r = e % static_cast<long>(n);
  if (r < 0) r += n;
  std::lock_guard<std::mutex> lock(zp_mutex());
  auto key = std::make_pair(n, static_cast<unsigned>(r));
  auto it = zp_cache().find(key);
  if (it != zp_cache().end()) return it->second;
  std::vector<Rational> coeffs(static_cast<size_t>(r) + 1, Rational(0));
  coeffs[static_cast<size_t>(r)] = 1;
  return zp_cache().emplace(key, Cyclotomic::from_coeffs(n, std::move(coeffs))).first->second;
}

}  // namespace qlift
