#include <sstream>

#include "qlift/error.hpp"
#include "qlift/rewrite.hpp"

namespace qlift {

namespace {

Element mono(const Cyclotomic& c, std::vector<uint8_t> w, long g = 0) {
  Element e;
  e.add_term(Monomial{g, std::move(w)}, c);
  return e;
}

// c * (g - 1) as an element (group combination)
Element group_diff(const Cyclotomic& c, long g) {
  Element e;
  e.add_term(Monomial{g, {}}, c);
  e.add_term(Monomial{0, {}}, -c);
  return e;
}

}  // namespace

std::string to_string(VCoeff v) {
  return v == VCoeff::QSquaredMinusOne ? "(q^2-1)^n" : "(q-1)^n";
}

Presentation appendix_algebra(const Cyclotomic& q, const Cyclotomic& lambda) {
  Presentation p;
  p.name = "appendix";
  p.gens = {"t", "z", "x"};
  const uint8_t T = 0, Z = 1, X = 2;
  p.swaps[{X, Z}] = mono(q, {Z, X});
  p.swaps[{Z, T}] = mono(q, {T, Z});
  p.swaps[{X, T}] = mono(q, {T, X}) + mono(lambda, {Z, Z});
  p.finalize();
  return p;
}

Presentation serban_algebra(const Cyclotomic& q, const Cyclotomic& lambda) {
  Presentation p;
  p.name = "serban";
  p.gens = {"t", "s", "x"};
  const uint8_t T = 0, S = 1, X = 2;
  Cyclotomic q2 = q * q;
  p.swaps[{X, S}] = mono(q2, {S, X});
  p.swaps[{S, T}] = mono(q2, {T, S});
  p.swaps[{X, T}] = mono(q, {T, X}) + mono(lambda, {S});
  p.finalize();
  return p;
}

Presentation step_algebra(const Cyclotomic& alpha, const Cyclotomic& beta) {
  Presentation p;
  p.name = "step";
  p.gens = {"X", "Z", "Y"};
  const uint8_t X = 0, Z = 1, Y = 2;
  p.swaps[{Y, X}] = mono(alpha, {X, Y}) + mono(Cyclotomic(1), {Z});
  p.swaps[{Z, X}] = mono(beta, {X, Z});
  p.swaps[{Y, Z}] = mono(beta, {Z, Y});
  p.finalize();
  return p;
}

namespace {

// B2 swap rules over generators (x2, u, z, x1) = positions (0, 1, 2, 3)
void b2_install_swaps(Presentation& p, const YDDatum& d, bool drop_x1u_tail) {
  const uint8_t X2 = 0, U = 1, Z = 2, X1 = 3;
  Cyclotomic b11 = d.b(1, 1), b12 = d.b(1, 2), b21 = d.b(2, 1), b22 = d.b(2, 2);
  Cyclotomic b21i = b21.inverse();
  // z = x2 x1 - b21 x1 x2  =>  x1 x2 = b21^-1 (x2 x1 - z)
  p.swaps[{X1, X2}] = mono(b21i, {X2, X1}) + mono(-b21i, {Z});
  // x1 u = b21^-1 b12 u x1 + b21^-1 (b22^-1 - 1) z^2
  p.swaps[{X1, U}] = mono(b21i * b12, {U, X1});
  if (!drop_x1u_tail)
    p.swaps[{X1, U}] += mono(b21i * (b22.inverse() - Cyclotomic(1)), {Z, Z});
  // x1 z = b12 z x1
  p.swaps[{X1, Z}] = mono(b12, {Z, X1});
  // u z = b11 b21 z u  =>  z u = (b11 b21)^-1 u z
  p.swaps[{Z, U}] = mono((b11 * b21).inverse(), {U, Z});
  // u = x2 z - b21 b22 z x2  =>  z x2 = (b21 b22)^-1 (x2 z - u)
  Cyclotomic c = (b21 * b22).inverse();
  p.swaps[{Z, X2}] = mono(c, {X2, Z}) + mono(-c, {U});
  // x2 u = b21 b22^2 u x2  =>  u x2 = (b21 b22^2)^-1 x2 u
  p.swaps[{U, X2}] = mono((b21 * b22 * b22).inverse(), {X2, U});
}

}  // namespace

Presentation b2_uplus(const YDDatum& d) {
  if (cartan_type(d) != CartanType::B2) fail(Errc::bad_input, "datum is not of type B2");
  Presentation p;
  p.name = "b2_uplus";
  p.gens = {"x2", "u", "z", "x1"};
  p.datum = d;
  b2_install_swaps(p, d, false);
  p.finalize();
  return p;
}

Presentation b2_uplus_corrupted(const YDDatum& d) {
  if (cartan_type(d) != CartanType::B2) fail(Errc::bad_input, "datum is not of type B2");
  Presentation p;
  p.name = "b2_uplus_corrupted";
  p.gens = {"x2", "u", "z", "x1"};
  p.datum = d;
  b2_install_swaps(p, d, true);
  p.finalize();
  return p;
}

Presentation b2_biproduct(const YDDatum& d) {
  if (cartan_type(d) != CartanType::B2) fail(Errc::bad_input, "datum is not of type B2");
  Presentation p;
  p.name = "b2_biproduct";
  p.gens = {"x2", "u", "z", "x1"};
  p.datum = d;
  p.group = d.group;
  p.chars = {d.chi2, d.chi1 * d.chi2.pow(2), d.chi1 * d.chi2, d.chi1};
  b2_install_swaps(p, d, false);
  const uint8_t X2 = 0, U = 1, Z = 2, X1 = 3;
  Cyclotomic b21 = d.b(2, 1), b22 = d.b(2, 2);
  std::vector<Presentation::CoalgebraEntry> co(4);
  co[X2] = {Presentation::CoalgebraEntry::Kind::Primitive, d.g2, {}};
  co[U] = {Presentation::CoalgebraEntry::Kind::Defined,
           0,
           {{Cyclotomic(1), {X2, Z}}, {-(b21 * b22), {Z, X2}}}};
  co[Z] = {Presentation::CoalgebraEntry::Kind::Defined,
           0,
           {{Cyclotomic(1), {X2, X1}}, {-b21, {X1, X2}}}};
  co[X1] = {Presentation::CoalgebraEntry::Kind::Primitive, d.g1, {}};
  p.coalgebra = std::move(co);
  p.finalize();
  return p;
}

namespace {

void a2_install(Presentation& p, const YDDatum& d, const Cyclotomic& gamma1,
                const Cyclotomic& gamma2, bool z_rules) {
  const uint8_t X1 = 0, Z = 1, X2 = 2;
  const AbelianGroup& G = d.group;
  Cyclotomic b12 = d.b(1, 2), b21 = d.b(2, 1);
  // z = x1 x2 - b12 x2 x1  =>  x2 x1 = b12^-1 (x1 x2 - z)
  Cyclotomic b12i = b12.inverse();
  p.swaps[{X2, X1}] = mono(b12i, {X1, X2}) + mono(-b12i, {Z});
  if (z_rules) {
    // z x1 = b21 x1 z + gamma1 (g1^2 g2 - 1)
    Element r1 = mono(b21, {X1, Z});
    if (!gamma1.is_zero()) r1 += group_diff(gamma1, G.mul(G.pow(d.g1, 2), d.g2));
    p.swaps[{Z, X1}] = std::move(r1);
    // z x2 = b21^-1 x2 z + gamma2 (g2^2 g1 - 1)
    //   =>  x2 z = b21 (z x2 - gamma2 (g2^2 g1 - 1))
    Element r2 = mono(b21, {Z, X2});
    if (!gamma2.is_zero()) r2 -= group_diff(b21 * gamma2, G.mul(G.pow(d.g2, 2), d.g1));
    p.swaps[{X2, Z}] = std::move(r2);
  }
  p.group = d.group;
  p.chars = {d.chi1, d.chi1 * d.chi2, d.chi2};
  std::vector<Presentation::CoalgebraEntry> co(3);
  co[X1] = {Presentation::CoalgebraEntry::Kind::Primitive, d.g1, {}};
  co[Z] = {Presentation::CoalgebraEntry::Kind::Defined,
           0,
           {{Cyclotomic(1), {X1, X2}}, {-b12, {X2, X1}}}};
  co[X2] = {Presentation::CoalgebraEntry::Kind::Primitive, d.g2, {}};
  p.coalgebra = std::move(co);
}

}  // namespace

Presentation a2_biproduct(const YDDatum& d, const Cyclotomic& gamma1, const Cyclotomic& gamma2) {
  if (cartan_type(d) != CartanType::A2) fail(Errc::bad_input, "datum is not of type A2");
  if ((!gamma1.is_zero() || !gamma2.is_zero()) && !a2_degenerate(d))
    fail(Errc::inadmissible_spec, "gamma rules require a constant-q braiding matrix");
  Presentation p;
  p.name = "a2_biproduct";
  p.gens = {"x1", "z", "x2"};
  p.datum = d;
  a2_install(p, d, gamma1, gamma2, true);
  p.finalize();
  return p;
}

Presentation a2_free_biproduct(const YDDatum& d) {
  if (cartan_type(d) != CartanType::A2) fail(Errc::bad_input, "datum is not of type A2");
  Presentation p;
  p.name = "a2_free_biproduct";
  p.gens = {"x1", "z", "x2"};
  p.datum = d;
  a2_install(p, d, Cyclotomic(0), Cyclotomic(0), false);
  p.finalize();
  return p;
}

Presentation b2_lifting(const LiftingSpec& s, VCoeff vc) {
  auto violations = admissibility_violations(s);
  if (!violations.empty())
    fail(Errc::inadmissible_spec, "inadmissible spec: " + violations.front());
  if (s.type != CartanType::B2) fail(Errc::bad_input, "b2_lifting on non-B2 spec");
  const YDDatum& d = s.datum;
  const AbelianGroup& G = d.group;
  long n = d.q_order();
  Presentation p = b2_biproduct(d);
  p.name = "b2_lifting";
  const uint8_t X2 = 0, U = 1, Z = 2, X1 = 3;
  Cyclotomic q = d.q();
  Cyclotomic qm1n = (q - Cyclotomic(1)).pow(n);
  Cyclotomic q2m1n = (q * q - Cyclotomic(1)).pow(n);
  Cyclotomic C = (vc == VCoeff::QSquaredMinusOne) ? q2m1n : qm1n;

  Element x1n_rhs = s.mu1 ? group_diff(Cyclotomic(1), G.pow(d.g1, n)) : Element{};
  Element x2n_rhs = s.mu2 ? group_diff(Cyclotomic(1), G.pow(d.g2, n)) : Element{};
  // v = z^n + mu2 C x1^n - lambda (g1^n g2^n - 1) = 0
  Element zn_rhs;
  if (!s.lambda.is_zero())
    zn_rhs += group_diff(s.lambda, G.mul(G.pow(d.g1, n), G.pow(d.g2, n)));
  if (s.mu2) zn_rhs -= x1n_rhs.scaled(C);
  // w = u^n + 2 (q-1)^n mu2 z^n + (q^2-1)^n (q-1)^n mu2^2 x1^n - gamma ((g1 g2^2)^n - 1) = 0
  Element un_rhs;
  if (!s.gamma.is_zero())
    un_rhs += group_diff(s.gamma, G.pow(G.mul(d.g1, G.pow(d.g2, 2)), n));
  if (s.mu2) {
    un_rhs -= zn_rhs.scaled(qm1n * Cyclotomic(2));
    un_rhs -= x1n_rhs.scaled(q2m1n * qm1n);
  }
  p.powers[X1] = {static_cast<int>(n), x1n_rhs};
  p.powers[X2] = {static_cast<int>(n), x2n_rhs};
  p.powers[Z] = {static_cast<int>(n), zn_rhs};
  p.powers[U] = {static_cast<int>(n), un_rhs};
  p.finalize();
  return p;
}

Presentation a2_lifting(const LiftingSpec& s) {
  auto violations = admissibility_violations(s);
  if (!violations.empty())
    fail(Errc::inadmissible_spec, "inadmissible spec: " + violations.front());
  if (s.type != CartanType::A2) fail(Errc::bad_input, "a2_lifting on non-A2 spec");
  const YDDatum& d = s.datum;
  const AbelianGroup& G = d.group;
  long n = d.q_order();
  Presentation base = a2_biproduct(d, s.gamma1, s.gamma2);
  Cyclotomic q = d.q();
  const uint8_t X1 = 0, Z = 1, X2 = 2;
  Cyclotomic b21 = d.b(2, 1);

  Element x1n_rhs = s.mu1 ? group_diff(Cyclotomic(1), G.pow(d.g1, n)) : Element{};
  Element x2n_rhs = s.mu2 ? group_diff(Cyclotomic(1), G.pow(d.g2, n)) : Element{};
  // z^n + mu1 (q-1)^n x2^n + (1-q) gamma1 (z x2 - b21^-1 x2 z) - lambda (g1^n g2^n - 1) = 0
  Element zn_rhs;
  if (!s.lambda.is_zero())
    zn_rhs += group_diff(s.lambda, G.mul(G.pow(d.g1, n), G.pow(d.g2, n)));
  if (s.mu1) zn_rhs -= x2n_rhs.scaled((q - Cyclotomic(1)).pow(n));
  if (!s.gamma1.is_zero()) {
    Element zx2 = base.mul(base.gen_elem(Z), base.gen_elem(X2));
    Element x2z = base.mul(base.gen_elem(X2), base.gen_elem(Z));
    Element corr = zx2 - x2z.scaled(b21.inverse());
    zn_rhs -= corr.scaled((Cyclotomic(1) - q) * s.gamma1);
  }
  Presentation p = std::move(base);
  p.name = "a2_lifting";
  p.powers[X1] = {static_cast<int>(n), x1n_rhs};
  p.powers[X2] = {static_cast<int>(n), x2n_rhs};
  p.powers[Z] = {static_cast<int>(n), zn_rhs};
  p.finalize();
  return p;
}

Presentation quotient_by_solved(const Presentation& ambient, const std::vector<Element>& gens,
                                const std::string& name) {
  Presentation p = ambient;
  p.name = name;
  for (const Element& e : gens) {
    if (e.is_zero()) fail(Errc::bad_input, "cannot solve a zero ideal generator");
    // leading term: largest word in the graded-lex order
    auto lead = e.terms.begin();
    for (auto it = e.terms.begin(); it != e.terms.end(); ++it) {
      const auto& a = it->first.word;
      const auto& b = lead->first.word;
      if (a.size() > b.size() || (a.size() == b.size() && a > b)) lead = it;
    }
    const Monomial& lm = lead->first;
    if (lm.g != 0) fail(Errc::bad_input, "ideal generator leading term carries a group prefix");
    Element rhs = (e - Element{{{lm, lead->second}}}).scaled(-lead->second.inverse());
    bool pure_power = !lm.word.empty() &&
                      std::all_of(lm.word.begin(), lm.word.end(),
                                  [&](uint8_t y) { return y == lm.word.front(); });
    if (pure_power && lm.word.size() >= 2) {
      GenId gid = lm.word.front();
      if (p.powers.count(gid))
        fail(Errc::bad_input, "generator already power-bounded: " + p.gens[gid]);
      p.powers[gid] = {static_cast<int>(lm.word.size()), std::move(rhs)};
    } else if (lm.word.size() == 2 && lm.word[0] > lm.word[1]) {
      std::pair<GenId, GenId> key{lm.word[0], lm.word[1]};
      if (p.swaps.count(key))
        fail(Errc::bad_input, "swap already present for pair " + p.gens[key.first] + "." +
                                  p.gens[key.second]);
      p.swaps[key] = std::move(rhs);
    } else {
      fail(Errc::bad_input, "ideal generator is not solvable for a leading power or inversion");
    }
  }
  p.finalize();
  return p;
}

B2IdealGens b2_ideal_generators(const Presentation& ambient, const LiftingSpec& s, VCoeff vc) {
  const YDDatum& d = s.datum;
  const AbelianGroup& G = d.group;
  long n = d.q_order();
  const GenId X2 = ambient.gen_id("x2"), U = ambient.gen_id("u"), Z = ambient.gen_id("z"),
              X1 = ambient.gen_id("x1");
  Cyclotomic q = d.q();
  Cyclotomic qm1n = (q - Cyclotomic(1)).pow(n);
  Cyclotomic q2m1n = (q * q - Cyclotomic(1)).pow(n);
  Cyclotomic C = (vc == VCoeff::QSquaredMinusOne) ? q2m1n : qm1n;

  Element x1n = ambient.pow(ambient.gen_elem(X1), n);
  Element x2n = ambient.pow(ambient.gen_elem(X2), n);
  Element zn = ambient.pow(ambient.gen_elem(Z), n);
  Element un = ambient.pow(ambient.gen_elem(U), n);

  B2IdealGens out;
  out.y1 = x1n;
  if (s.mu1) out.y1 -= group_diff(Cyclotomic(1), G.pow(d.g1, n));
  out.y2 = x2n;
  if (s.mu2) out.y2 -= group_diff(Cyclotomic(1), G.pow(d.g2, n));
  out.v = zn;
  if (s.mu2) out.v += x1n.scaled(C);
  if (!s.lambda.is_zero())
    out.v -= group_diff(s.lambda, G.mul(G.pow(d.g1, n), G.pow(d.g2, n)));
  out.w = un;
  if (s.mu2) {
    out.w += zn.scaled(Cyclotomic(2) * qm1n);
    out.w += x1n.scaled(q2m1n * qm1n);
  }
  if (!s.gamma.is_zero())
    out.w -= group_diff(s.gamma, G.pow(G.mul(d.g1, G.pow(d.g2, 2)), n));
  out.Gy1 = G.pow(d.g1, n);
  out.Gy2 = G.pow(d.g2, n);
  out.Gv = G.mul(out.Gy1, out.Gy2);
  out.Gw = G.pow(G.mul(d.g1, G.pow(d.g2, 2)), n);
  return out;
}

A2IdealGens a2_ideal_generators(const Presentation& ambient, const LiftingSpec& s) {
  const YDDatum& d = s.datum;
  const AbelianGroup& G = d.group;
  long n = d.q_order();
  const GenId X1 = ambient.gen_id("x1"), Z = ambient.gen_id("z"), X2 = ambient.gen_id("x2");
  Cyclotomic q = d.q();
  Cyclotomic b21 = d.b(2, 1);

  Element x1n = ambient.pow(ambient.gen_elem(X1), n);
  Element x2n = ambient.pow(ambient.gen_elem(X2), n);
  Element zn = ambient.pow(ambient.gen_elem(Z), n);

  A2IdealGens out;
  out.y1 = x1n;
  if (s.mu1) out.y1 -= group_diff(Cyclotomic(1), G.pow(d.g1, n));
  out.y2 = x2n;
  if (s.mu2) out.y2 -= group_diff(Cyclotomic(1), G.pow(d.g2, n));
  out.v = zn;
  if (s.mu1) out.v += x2n.scaled((q - Cyclotomic(1)).pow(n));
  Element zx2 = ambient.mul(ambient.gen_elem(Z), ambient.gen_elem(X2));
  Element x2z = ambient.mul(ambient.gen_elem(X2), ambient.gen_elem(Z));
  if (!s.gamma1.is_zero())
    out.v += (zx2 - x2z.scaled(b21.inverse())).scaled((Cyclotomic(1) - q) * s.gamma1);
  if (!s.lambda.is_zero())
    out.v -= group_diff(s.lambda, G.mul(G.pow(d.g1, n), G.pow(d.g2, n)));
  if (n == 3 && a2_degenerate(d)) {
    Element zx1 = ambient.mul(ambient.gen_elem(Z), ambient.gen_elem(X1));
    Element x1z = ambient.mul(ambient.gen_elem(X1), ambient.gen_elem(Z));
    Element z1 = zx1 - x1z.scaled(b21);
    if (!s.gamma1.is_zero())
      z1 -= group_diff(s.gamma1, G.mul(G.pow(d.g1, 2), d.g2));
    Element z2 = zx2 - x2z.scaled(b21.inverse());
    if (!s.gamma2.is_zero())
      z2 -= group_diff(s.gamma2, G.mul(G.pow(d.g2, 2), d.g1));
    out.zeta1 = std::move(z1);
    out.zeta2 = std::move(z2);
  }
  out.Gy1 = G.pow(d.g1, n);
  out.Gy2 = G.pow(d.g2, n);
  out.Gv = G.mul(out.Gy1, out.Gy2);
  out.Gz1 = G.mul(G.pow(d.g1, 2), d.g2);
  out.Gz2 = G.mul(G.pow(d.g2, 2), d.g1);
  return out;
}

}  // namespace qlift
