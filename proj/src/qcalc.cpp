#include "qlift/qcalc.hpp"

#include <vector>

#include "qlift/error.hpp"

namespace qlift {

Cyclotomic q_int(long n, const Cyclotomic& q) {
  Cyclotomic sum(0);
  Cyclotomic p(1);
  for (long k = 0; k < n; ++k) {
    sum += p;
    p *= q;
  }
  return sum;
}

Cyclotomic q_factorial(long n, const Cyclotomic& q) {
  if (n < 0) fail(Errc::bad_input, "q-factorial of negative index");
  Cyclotomic acc(1);
  for (long k = 2; k <= n; ++k) acc *= q_int(k, q);
  return acc;
}

Cyclotomic q_binomial(long n, long i, const Cyclotomic& q) {
  if (i < 0 || n < 0 || n - i < 0) return Cyclotomic(0);
  // row-by-row q-Pascal: C(r,k) = C(r-1,k-1) + q^k C(r-1,k)
  std::vector<Cyclotomic> row{Cyclotomic(1)};
  std::vector<Cyclotomic> qpow{Cyclotomic(1)};
  for (long k = 1; k <= i; ++k) qpow.push_back(qpow.back() * q);
  for (long r = 1; r <= n; ++r) {
    long top = std::min(r, i);
    std::vector<Cyclotomic> next(static_cast<size_t>(top) + 1, Cyclotomic(0));
    for (long k = 0; k <= top; ++k) {
      Cyclotomic v(0);
      if (k > 0) v += row[static_cast<size_t>(k - 1)];
      if (k < static_cast<long>(row.size()))
        v += qpow[static_cast<size_t>(k)] * row[static_cast<size_t>(k)];
      next[static_cast<size_t>(k)] = v;
    }
    row = std::move(next);
  }
  if (i >= static_cast<long>(row.size())) return Cyclotomic(0);
  return row[static_cast<size_t>(i)];
}

Cyclotomic nu_recursive(long n, const NuParams& p) {
  if (n < 0) fail(Errc::bad_input, "nu of negative index");
  if (n == 0) return Cyclotomic(1);
  Cyclotomic prev2(1);   // nu(0)
  Cyclotomic prev1 = p.b;  // nu(1)
  for (long k = 2; k <= n; ++k) {
    Cyclotomic cur = p.b * prev1 + p.lambda * q_int(k - 1, p.q) * prev2;
    prev2 = std::move(prev1);
    prev1 = std::move(cur);
  }
  return prev1;
}

Cyclotomic nu_closed_roots(long n, const Cyclotomic& alpha, const Cyclotomic& beta,
                           const Cyclotomic& q) {
  if (n < 0) fail(Errc::bad_input, "nu of negative index");
  if (q == Cyclotomic(1)) fail(Errc::q_is_one, "closed root form requires q != 1");
  Cyclotomic sum(0);
  for (long i = 0; i <= n; ++i)
    sum += q_binomial(n, i, q) * beta.pow(i) * alpha.pow(n - i);
  return sum;
}

Cyclotomic nu_q1(long n, const Cyclotomic& b, const Cyclotomic& lambda) {
  if (n < 0) fail(Errc::bad_input, "nu of negative index");
  if (b.is_zero()) return nu_b_zero(n, lambda, Cyclotomic(1));
  const Cyclotomic one(1);
  Cyclotomic sum(0);
  for (long i = 0; 2 * i <= n; ++i) {
    // C(n, 2i) * (2i)! / (2^i i!)  -- the number of perfect matchings factor
    Rational factor(1);
    for (long k = 1; k <= 2 * i; ++k) factor *= k;
    for (long k = 1; k <= i; ++k) factor /= k;
    factor /= Rational(Integer(1) << static_cast<unsigned>(i));
    sum += q_binomial(n, 2 * i, one) * Cyclotomic(factor) * b.pow(n - 2 * i) * lambda.pow(i);
  }
  return sum;
}

Cyclotomic nu_b_zero(long n, const Cyclotomic& lambda, const Cyclotomic& q) {
  if (n < 0) fail(Errc::bad_input, "nu of negative index");
  if (n % 2 == 1) return Cyclotomic(0);
  long m = n / 2;
  Cyclotomic acc = lambda.pow(m);
  for (long k = 2 * m - 1; k >= 1; k -= 2) acc *= q_int(k, q);
  return acc;
}

GqbTable gqb_expand(long n, const NuParams& p) {
  if (n < 0) fail(Errc::bad_input, "expansion of negative power");
  GqbTable t;
  t.n = n;
  std::vector<Cyclotomic> nu(static_cast<size_t>(n) + 1);
  for (long k = 0; k <= n; ++k) nu[static_cast<size_t>(k)] = nu_recursive(k, p);
  for (long i = 0; i <= n; ++i)
    for (long j = 0; j <= i; ++j)
      t.coeff[{i, j}] = q_binomial(n, i, p.q) * q_binomial(i, j, p.q) * nu[static_cast<size_t>(i - j)];
  return t;
}

}  // namespace qlift
