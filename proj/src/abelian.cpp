#include "qlift/abelian.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "qlift/error.hpp"

namespace qlift {

AbelianGroup::AbelianGroup(std::vector<long> invariant_factors)
    : factors_(std::move(invariant_factors)) {
  for (size_t k = 0; k < factors_.size(); ++k) {
    if (factors_[k] < 2) fail(Errc::bad_input, "invariant factor must be >= 2");
    if (k > 0 && factors_[k] % factors_[k - 1] != 0)
      fail(Errc::bad_input, "invariant factors must form a divisibility chain");
  }
  strides_.resize(factors_.size());
  long s = 1;
  for (size_t k = 0; k < factors_.size(); ++k) {
    strides_[k] = s;
    s *= factors_[k];
  }
  order_ = s;
  exponent_ = factors_.empty() ? 1 : factors_.back();
}

AbelianGroup AbelianGroup::from_relation_matrix(std::vector<std::vector<long>> rows,
                                                size_t ngens) {
  // Smith reduction over Z, enough for small presentations.
  for (auto& r : rows)
    if (r.size() != ngens) fail(Errc::bad_input, "relation row of wrong width");
  size_t nrows = rows.size();
  std::vector<std::vector<Integer>> m(nrows, std::vector<Integer>(ngens));
  for (size_t i = 0; i < nrows; ++i)
    for (size_t j = 0; j < ngens; ++j) m[i][j] = rows[i][j];

  std::vector<Integer> diag;
  size_t top = 0;
  while (top < std::min(nrows, ngens)) {
    // locate a nonzero pivot of minimal absolute value
    size_t pi = top, pj = top;
    bool found = false;
    Integer best = 0;
    for (size_t i = top; i < nrows; ++i)
      for (size_t j = top; j < ngens; ++j)
        if (m[i][j] != 0 && (!found || abs(m[i][j]) < abs(best))) {
          best = m[i][j];
          pi = i;
          pj = j;
          found = true;
        }
    if (!found) break;
    std::swap(m[top], m[pi]);
    for (size_t i = 0; i < nrows; ++i) std::swap(m[i][top], m[i][pj]);
    bool clean = true;
    for (size_t i = top + 1; i < nrows; ++i)
      if (m[i][top] != 0) {
        Integer q = m[i][top] / m[top][top];
        for (size_t j = top; j < ngens; ++j) m[i][j] -= q * m[top][j];
        if (m[i][top] != 0) clean = false;
      }
    for (size_t j = top + 1; j < ngens; ++j)
      if (m[top][j] != 0) {
        Integer q = m[top][j] / m[top][top];
        for (size_t i = top; i < nrows; ++i) m[i][j] -= q * m[i][top];
        if (m[top][j] != 0) clean = false;
      }
    if (!clean) continue;  // pivot shrank; repeat at the same corner
    diag.push_back(abs(m[top][top]));
    ++top;
  }
  // enforce the divisibility chain
  for (size_t i = 0; i < diag.size(); ++i)
    for (size_t j = i + 1; j < diag.size(); ++j) {
      Integer g = gcd(diag[i], diag[j]);
      if (g == 0) continue;
      Integer l = diag[i] / g * diag[j];
      diag[i] = g;
      diag[j] = l;
    }
  if (diag.size() < ngens) fail(Errc::bad_input, "relation matrix presents an infinite group");
  std::vector<long> factors;
  for (const Integer& d : diag) {
    if (d == 0) fail(Errc::bad_input, "relation matrix presents an infinite group");
    if (d == 1) continue;
    factors.push_back(static_cast<long>(d.get_si()));
  }
  return AbelianGroup(std::move(factors));
}

AbelianGroup::Elem AbelianGroup::mul(Elem a, Elem b) const {
  Elem out = 0;
  for (size_t k = 0; k < factors_.size(); ++k) {
    long ea = (a / strides_[k]) % factors_[k];
    long eb = (b / strides_[k]) % factors_[k];
    out += ((ea + eb) % factors_[k]) * strides_[k];
  }
  return out;
}

AbelianGroup::Elem AbelianGroup::inv(Elem a) const {
  Elem out = 0;
  for (size_t k = 0; k < factors_.size(); ++k) {
    long ea = (a / strides_[k]) % factors_[k];
    out += ((factors_[k] - ea) % factors_[k]) * strides_[k];
  }
  return out;
}

AbelianGroup::Elem AbelianGroup::pow(Elem a, long e) const {
  Elem out = 0;
  for (size_t k = 0; k < factors_.size(); ++k) {
    long ea = (a / strides_[k]) % factors_[k];
    long v = (ea % factors_[k]) * (e % factors_[k]) % factors_[k];
    if (v < 0) v += factors_[k];
    out += v * strides_[k];
  }
  return out;
}

long AbelianGroup::elem_order(Elem a) const {
  long o = 1;
  for (size_t k = 0; k < factors_.size(); ++k) {
    long ea = (a / strides_[k]) % factors_[k];
    long ok = factors_[k] / std::gcd(factors_[k], ea == 0 ? factors_[k] : ea);
    o = std::lcm(o, ok);
  }
  return o;
}

AbelianGroup::Elem AbelianGroup::from_exponents(const std::vector<long>& e) const {
  if (e.size() != factors_.size()) fail(Errc::group_mismatch, "exponent tuple of wrong rank");
  Elem out = 0;
  for (size_t k = 0; k < factors_.size(); ++k) {
    long v = e[k] % factors_[k];
    if (v < 0) v += factors_[k];
    out += v * strides_[k];
  }
  return out;
}

std::vector<long> AbelianGroup::to_exponents(Elem a) const {
  std::vector<long> e(factors_.size());
  for (size_t k = 0; k < factors_.size(); ++k) e[k] = (a / strides_[k]) % factors_[k];
  return e;
}

std::string AbelianGroup::elem_str(Elem a) const {
  if (a == 0) return "1";
  std::ostringstream os;
  os << "g(";
  auto e = to_exponents(a);
  for (size_t k = 0; k < e.size(); ++k) {
    if (k) os << ",";
    os << e[k];
  }
  os << ")";
  return os.str();
}

Character::Character(AbelianGroup group, std::vector<long> exponents)
    : group_(std::move(group)), exps_(std::move(exponents)) {
  if (exps_.size() != group_.rank()) fail(Errc::group_mismatch, "character of wrong rank");
  for (size_t k = 0; k < exps_.size(); ++k) {
    exps_[k] %= group_.factors()[k];
    if (exps_[k] < 0) exps_[k] += group_.factors()[k];
  }
}

Character Character::trivial(const AbelianGroup& g) {
  return Character(g, std::vector<long>(g.rank(), 0));
}

long Character::eval_exponent(AbelianGroup::Elem a) const {
  long L = group_.exponent();
  auto e = group_.to_exponents(a);
  long acc = 0;
  for (size_t k = 0; k < e.size(); ++k) {
    long dk = group_.factors()[k];
    // c*e*(L/d) mod L depends only on c*e mod d
    acc = (acc + (exps_[k] * e[k]) % dk * (L / dk)) % L;
  }
  return acc;
}

Cyclotomic Character::eval(AbelianGroup::Elem a) const {
  long L = group_.exponent();
  return zeta_power(static_cast<unsigned>(L), eval_exponent(a));
}

Character Character::operator*(const Character& o) const {
  if (!(group_ == o.group_)) fail(Errc::group_mismatch, "characters on different groups");
  std::vector<long> e(exps_.size());
  for (size_t k = 0; k < e.size(); ++k) e[k] = exps_[k] + o.exps_[k];
  return Character(group_, std::move(e));
}

Character Character::pow(long p) const {
  std::vector<long> e(exps_.size());
  for (size_t k = 0; k < e.size(); ++k) {
    long dk = group_.factors()[k];
    long v = exps_[k] % dk * (p % dk) % dk;
    e[k] = v;
  }
  return Character(group_, std::move(e));
}

Character Character::inverse() const { return pow(-1); }

bool Character::is_trivial() const {
  return std::all_of(exps_.begin(), exps_.end(), [](long v) { return v == 0; });
}

std::string to_string(CartanType t) {
  switch (t) {
    case CartanType::A2: return "A2";
    case CartanType::B2: return "B2";
    default: return "other";
  }
}

Cyclotomic YDDatum::b(int i, int j) const {
  const Character& chi = (j == 1) ? chi1 : chi2;
  AbelianGroup::Elem g = (i == 1) ? g1 : g2;
  return chi.eval(g);
}

long YDDatum::b_exponent(int i, int j) const {
  const Character& chi = (j == 1) ? chi1 : chi2;
  AbelianGroup::Elem g = (i == 1) ? g1 : g2;
  return chi.eval_exponent(g);
}

long YDDatum::q_order() const {
  long L = group.exponent();
  long e = b_exponent(2, 2);
  return L / std::gcd(L, e == 0 ? L : e);
}

CartanType cartan_type(const YDDatum& d) {
  long L = d.group.exponent();
  long e11 = d.b_exponent(1, 1), e12 = d.b_exponent(1, 2);
  long e21 = d.b_exponent(2, 1), e22 = d.b_exponent(2, 2);
  long n = d.q_order();
  bool q_odd_primitive = (n % 2 == 1) && n >= 3;
  auto zero = [L](long v) { return v % L == 0; };
  if (q_odd_primitive && zero(e12 + e21 + e11) && zero(e21 + e12 + 2 * e22) &&
      (e11 - 2 * e22) % L == 0)
    return CartanType::B2;
  if (q_odd_primitive && zero(e12 + e21 + e11) && zero(e21 + e12 + e22) && e11 == e22)
    return CartanType::A2;
  return CartanType::Other;
}

bool a2_degenerate(const YDDatum& d) {
  if (cartan_type(d) != CartanType::A2) return false;
  long e22 = d.b_exponent(2, 2);
  return d.b_exponent(1, 2) == e22 && d.b_exponent(2, 1) == e22;
}

std::vector<std::string> admissibility_violations(const LiftingSpec& s) {
  std::vector<std::string> out;
  const YDDatum& d = s.datum;
  CartanType actual = cartan_type(d);
  if (s.type != actual) {
    out.push_back("datum has Cartan type " + to_string(actual) + ", spec declares " +
                  to_string(s.type));
    return out;
  }
  long n = d.q_order();
  const AbelianGroup& G = d.group;

  if (s.mu1 != 0 && s.mu1 != 1) out.push_back("mu1 must lie in {0,1}");
  if (s.mu2 != 0 && s.mu2 != 1) out.push_back("mu2 must lie in {0,1}");

  auto need_zero_mu = [&](int mu, AbelianGroup::Elem g, const Character& chi,
                          const std::string& name) {
    if (mu == 0) return;
    if (G.pow(g, n) == G.identity()) out.push_back(name + " must vanish: g^n = 1");
    if (!chi.pow(n).is_trivial()) out.push_back(name + " must vanish: chi^n is nontrivial");
  };
  need_zero_mu(s.mu1, d.g1, d.chi1, "mu1");
  need_zero_mu(s.mu2, d.g2, d.chi2, "mu2");

  if (!s.lambda.is_zero()) {
    if (G.mul(G.pow(d.g1, n), G.pow(d.g2, n)) == G.identity())
      out.push_back("lambda must vanish: g1^n g2^n = 1");
    if (!(d.chi1 * d.chi2).pow(n).is_trivial())
      out.push_back("lambda must vanish: (chi1 chi2)^n is nontrivial");
  }

  if (s.type == CartanType::B2) {
    if (n == 5) out.push_back("B2 liftings require n != 5");
    if (!s.gamma1.is_zero() || !s.gamma2.is_zero())
      out.push_back("gamma1/gamma2 are A2-only parameters");
    if (!s.gamma.is_zero()) {
      AbelianGroup::Elem g122 = G.mul(d.g1, G.pow(d.g2, 2));
      if (G.pow(g122, n) == G.identity())
        out.push_back("gamma must vanish: (g1 g2^2)^n = 1");
      if (!(d.chi1 * d.chi2.pow(2)).pow(n).is_trivial())
        out.push_back("gamma must vanish: (chi1 chi2^2)^n is nontrivial");
    }
  } else if (s.type == CartanType::A2) {
    if (!s.gamma.is_zero()) out.push_back("gamma is a B2-only parameter");
    bool degenerate3 = (n == 3) && a2_degenerate(d);
    auto need_zero_gamma = [&](const Cyclotomic& g, AbelianGroup::Elem gi, AbelianGroup::Elem gj,
                               const Character& ci, const Character& cj,
                               const std::string& name) {
      if (g.is_zero()) return;
      if (!degenerate3) {
        out.push_back(name + " requires n = 3 with a constant-q braiding matrix");
        return;
      }
      if (G.mul(G.pow(gi, 2), gj) == G.identity()) out.push_back(name + " must vanish: gi^2 gj = 1");
      if (!(ci.pow(2) * cj).is_trivial())
        out.push_back(name + " must vanish: chi_i^2 chi_j is nontrivial");
    };
    need_zero_gamma(s.gamma1, d.g1, d.g2, d.chi1, d.chi2, "gamma1");
    need_zero_gamma(s.gamma2, d.g2, d.g1, d.chi2, d.chi1, "gamma2");
  } else {
    out.push_back("spec type must be A2 or B2");
  }
  return out;
}

std::vector<YDDatum> datum_search(const AbelianGroup& group, CartanType type, long n) {
  std::vector<YDDatum> out;
  if (type == CartanType::Other) return out;
  long N = group.order();
  long L = group.exponent();
  if (n < 3 || n % 2 == 0 || L % n != 0) return out;

  // character exponent tables: chi index -> evaluation exponent on each element
  // characters are indexed exactly like elements (dual group has the same shape)
  std::vector<Character> chars;
  chars.reserve(static_cast<size_t>(N));
  for (long c = 0; c < N; ++c)
    chars.emplace_back(group, group.to_exponents(c));

  std::vector<std::vector<long>> ev(static_cast<size_t>(N), std::vector<long>(static_cast<size_t>(N)));
  for (long c = 0; c < N; ++c)
    for (long g = 0; g < N; ++g) ev[static_cast<size_t>(c)][static_cast<size_t>(g)] =
        chars[static_cast<size_t>(c)].eval_exponent(g);

  auto order_of = [L](long e) { return L / std::gcd(L, e == 0 ? L : e); };

  for (long g1 = 0; g1 < N; ++g1)
    for (long g2 = 0; g2 < N; ++g2)
      for (long c1 = 0; c1 < N; ++c1) {
        long e11 = ev[static_cast<size_t>(c1)][static_cast<size_t>(g1)];
        long e21 = ev[static_cast<size_t>(c1)][static_cast<size_t>(g2)];
        for (long c2 = 0; c2 < N; ++c2) {
          long e12 = ev[static_cast<size_t>(c2)][static_cast<size_t>(g1)];
          long e22 = ev[static_cast<size_t>(c2)][static_cast<size_t>(g2)];
          if (order_of(e22) != n) continue;
          if ((e12 + e21 + e11) % L != 0) continue;
          bool match = false;
          if (type == CartanType::B2)
            match = (e21 + e12 + 2 * e22) % L == 0 && (e11 - 2 * e22) % L == 0;
          else
            match = (e21 + e12 + e22) % L == 0 && e11 == e22;
          if (!match) continue;
          YDDatum d;
          d.group = group;
          d.g1 = g1;
          d.g2 = g2;
          d.chi1 = chars[static_cast<size_t>(c1)];
          d.chi2 = chars[static_cast<size_t>(c2)];
          out.push_back(std::move(d));
        }
      }
  return out;
}

}  // namespace qlift
