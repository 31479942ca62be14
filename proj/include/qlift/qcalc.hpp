#pragma once

#include <map>
#include <utility>

#include "qlift/cyclotomic.hpp"

namespace qlift {

struct NuParams {
  Cyclotomic b;
  Cyclotomic lambda;
  Cyclotomic q;
};

// (0)_q = 0, (n)_q = q^{n-1} + ... + 1; zero for n <= 0.
Cyclotomic q_int(long n, const Cyclotomic& q);
Cyclotomic q_factorial(long n, const Cyclotomic& q);

// Gaussian binomial via the q-Pascal recursion; zero when i < 0, n < 0 or
// n - i < 0. Well defined at roots of unity (no factorial quotients).
Cyclotomic q_binomial(long n, long i, const Cyclotomic& q);

// nu(0) = 1, nu(1) = b, nu(n) = b*nu(n-1) + lambda*(n-1)_q*nu(n-2).
Cyclotomic nu_recursive(long n, const NuParams& p);

// sum_i C(n,i)_q beta^i alpha^{n-i}; caller supplies the quadratic roots,
// so b = alpha + beta and lambda = (q-1)*alpha*beta. Rejects q = 1.
Cyclotomic nu_closed_roots(long n, const Cyclotomic& alpha, const Cyclotomic& beta,
                           const Cyclotomic& q);

// Closed form at q = 1. b = 0 is routed to the even/odd product form.
Cyclotomic nu_q1(long n, const Cyclotomic& b, const Cyclotomic& lambda);

// nu at b = 0 for arbitrary q: zero at odd n, lambda^m (2m-1)_q (2m-3)_q ... (1)_q at n = 2m.
Cyclotomic nu_b_zero(long n, const Cyclotomic& lambda, const Cyclotomic& q);

// Coefficient of t^j z^{i-j} x^{n-i} in (x + b z + t)^n:
// C(n,i)_q C(i,j)_q nu(i-j), for 0 <= j <= i <= n.
struct GqbTable {
  long n = 0;
  std::map<std::pair<long, long>, Cyclotomic> coeff;  // keyed by (i, j)
};
GqbTable gqb_expand(long n, const NuParams& p);

}  // namespace qlift
