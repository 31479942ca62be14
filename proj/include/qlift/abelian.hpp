#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qlift/cyclotomic.hpp"

namespace qlift {

// Finite abelian group in invariant-factor form d1 | d2 | ... (each >= 2).
// Elements are exponent tuples, handled as mixed-radix indices.
class AbelianGroup {
public:
  using Elem = long;

  AbelianGroup() = default;  // trivial group
  explicit AbelianGroup(std::vector<long> invariant_factors);

  // Normalizes an integer relation matrix (rows = relations among k
  // generators) to invariant factors via Smith reduction.
  static AbelianGroup from_relation_matrix(std::vector<std::vector<long>> rows, size_t ngens);

  const std::vector<long>& factors() const { return factors_; }
  size_t rank() const { return factors_.size(); }
  long order() const { return order_; }
  long exponent() const { return exponent_; }  // 1 for the trivial group

  Elem identity() const { return 0; }
  Elem mul(Elem a, Elem b) const;
  Elem inv(Elem a) const;
  Elem pow(Elem a, long e) const;
  long elem_order(Elem a) const;

  Elem from_exponents(const std::vector<long>& e) const;
  std::vector<long> to_exponents(Elem a) const;

  friend bool operator==(const AbelianGroup& a, const AbelianGroup& b) {
    return a.factors_ == b.factors_;
  }
  friend bool operator!=(const AbelianGroup& a, const AbelianGroup& b) { return !(a == b); }

  std::string elem_str(Elem a) const;  // "g(e1,...,er)" or "1"

private:
  std::vector<long> factors_;
  std::vector<long> strides_;
  long order_ = 1;
  long exponent_ = 1;
};

// Character of a finite abelian group, stored as exponents c_k with
// chi(e_k) = zeta_{d_k}^{c_k}. Values land in Q(zeta_L), L the exponent.
class Character {
public:
  Character() = default;
  Character(AbelianGroup group, std::vector<long> exponents);

  static Character trivial(const AbelianGroup& g);

  const AbelianGroup& group() const { return group_; }
  const std::vector<long>& exponents() const { return exps_; }

  // exponent e with chi(a) = zeta_L^e
  long eval_exponent(AbelianGroup::Elem a) const;
  Cyclotomic eval(AbelianGroup::Elem a) const;

  Character operator*(const Character& o) const;
  Character pow(long e) const;
  Character inverse() const;
  bool is_trivial() const;

  friend bool operator==(const Character& a, const Character& b) {
    return a.group_ == b.group_ && a.exps_ == b.exps_;
  }
  friend bool operator!=(const Character& a, const Character& b) { return !(a == b); }

private:
  AbelianGroup group_;
  std::vector<long> exps_;
};

enum class CartanType { A2, B2, Other };
std::string to_string(CartanType t);

// Two-dimensional Yetter-Drinfeld datum with derived braiding matrix
// b_ij = chi_j(g_i).
struct YDDatum {
  AbelianGroup group;
  AbelianGroup::Elem g1 = 0, g2 = 0;
  Character chi1, chi2;

  Cyclotomic b(int i, int j) const;  // 1-based indices
  long b_exponent(int i, int j) const;
  Cyclotomic q() const { return b(2, 2); }
  // order of b22 as a root of unity
  long q_order() const;

  friend bool operator==(const YDDatum& a, const YDDatum& b) {
    return a.group == b.group && a.g1 == b.g1 && a.g2 == b.g2 && a.chi1 == b.chi1 &&
           a.chi2 == b.chi2;
  }
};

CartanType cartan_type(const YDDatum& d);

// Deformation parameters on a datum. gamma is the B2 parameter; gamma1 and
// gamma2 exist only for A2 with n = 3 and an all-q braiding matrix.
struct LiftingSpec {
  YDDatum datum;
  CartanType type = CartanType::Other;
  int mu1 = 0, mu2 = 0;
  Cyclotomic lambda;
  Cyclotomic gamma;
  Cyclotomic gamma1, gamma2;

  long n() const { return datum.q_order(); }
};

// Empty result means admissible; otherwise one entry per violated condition.
std::vector<std::string> admissibility_violations(const LiftingSpec& s);
inline bool admissible(const LiftingSpec& s) { return admissibility_violations(s).empty(); }

// All (g1, g2, chi1, chi2) of the requested type whose q has order n,
// in lexicographic order of the defining tuples.
std::vector<YDDatum> datum_search(const AbelianGroup& group, CartanType type, long n);

// True for A2 data whose braiding matrix is constant q (the n = 3 case that
// admits gamma parameters).
bool a2_degenerate(const YDDatum& d);

}  // namespace qlift
