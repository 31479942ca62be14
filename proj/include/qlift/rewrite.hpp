#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qlift/abelian.hpp"
#include "qlift/cyclotomic.hpp"

namespace qlift {

using GenId = int;

// Group prefix times an irreducible generator word. For presentations whose
// swap rules cover every out-of-order pair the words are sorted PBW
// monomials; partial rule sets leave genuine words.
struct Monomial {
  long g = 0;
  std::vector<uint8_t> word;

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.g == b.g && a.word == b.word;
  }
  friend bool operator<(const Monomial& a, const Monomial& b) {
    if (a.g != b.g) return a.g < b.g;
    if (a.word.size() != b.word.size()) return a.word.size() < b.word.size();
    return a.word < b.word;
  }
};

struct Element {
  std::map<Monomial, Cyclotomic> terms;

  bool is_zero() const { return terms.empty(); }
  void add_term(const Monomial& m, const Cyclotomic& c);
  Element& operator+=(const Element& o);
  Element& operator-=(const Element& o);
  Element operator-() const;
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  Element scaled(const Cyclotomic& c) const;

  friend bool operator==(const Element& a, const Element& b);
  friend bool operator!=(const Element& a, const Element& b) { return !(a == b); }
};

// Input alphabet symbol: a generator or a group element.
struct Sym {
  bool is_group = false;
  long v = 0;
  static Sym gen(GenId id) { return {false, id}; }
  static Sym grp(long idx) { return {true, idx}; }
};

struct ConfluenceFailure {
  std::string overlap;     // e.g. "x1.z.x2" or "z^3.z"
  std::string detail;
  Element nf_first, nf_second;
};

struct ConfluenceReport {
  bool confluent = true;
  size_t pairs_checked = 0;
  std::vector<ConfluenceFailure> failures;
  std::vector<std::string> notes;
};

struct BasisCount {
  unsigned long long dimension = 0;
};

// Rewriting presentation: ordered generators, optional abelian group part
// with a commutation character per generator, two-letter swap rules
// (word [hi,lo] -> element) and power rules (gen^n -> element of lower
// degree). Immutable after finalize().
class Presentation {
public:
  std::string name;
  std::vector<std::string> gens;
  std::optional<AbelianGroup> group;
  std::vector<Character> chars;  // one per generator when group is present
  std::map<std::pair<GenId, GenId>, Element> swaps;
  std::map<GenId, std::pair<int, Element>> powers;
  std::optional<YDDatum> datum;

  struct CoalgebraEntry {
    enum class Kind { Primitive, Defined };
    Kind kind = Kind::Primitive;
    long grouplike = 0;  // Primitive: delta(x) = g (x) x + x (x) 1
    std::vector<std::pair<Cyclotomic, std::vector<GenId>>> combo;  // Defined
  };
  std::optional<std::vector<CoalgebraEntry>> coalgebra;

  // Validates rule orientation against the graded-lex termination order and
  // freezes the character tables. Must be called before use.
  void finalize();
  bool finalized() const { return finalized_; }

  size_t num_gens() const { return gens.size(); }
  GenId gen_id(const std::string& name) const;
  long group_order() const { return group ? group->order() : 1; }

  Element zero() const { return {}; }
  Element one() const;
  Element gen_elem(GenId id) const;
  Element grouplike(long gidx) const;

  // chi_gen(h) exponent at conductor group->exponent()
  long char_exponent(GenId gen, long gidx) const;

  Element normalize(const std::vector<Sym>& word, const Cyclotomic& coeff = Cyclotomic(1)) const;
  Element normalize_monomial(const Monomial& m, const Cyclotomic& coeff = Cyclotomic(1)) const;
  Element mul(const Element& a, const Element& b) const;
  Element mul(const Element& a, const Element& b, const Element& c) const;
  Element pow(const Element& a, long e) const;
  Element scalar(const Cyclotomic& c) const;

  // commutator convenience: ab - ba
  Element commutator(const Element& a, const Element& b) const;

  ConfluenceReport confluence_check() const;

  bool basis_is_finite() const;  // complete swap cover and bounded powers
  BasisCount enumerate_basis() const;  // throws infinite_dimensional otherwise
  void for_each_basis_monomial(const std::function<void(const Monomial&)>& fn) const;

  std::string monomial_str(const Monomial& m) const;
  std::string element_str(const Element& e) const;

  // word/element text input, e.g. "x1 x2^2 g(1,0)"
  std::vector<Sym> parse_word(const std::string& text) const;
  Element parse_element(const std::string& text) const;

private:
  bool finalized_ = false;
  std::vector<std::vector<long>> charexp_;  // [gen][group elem] -> exponent

  struct Task;
  void run_tasks(std::vector<Task>& stack, Element& out) const;
  friend struct RewriteAccess;
};

// Maps an element between presentations sharing the same generator list and
// group, re-normalizing every monomial in the target.
Element transport(const Element& e, const Presentation& from, const Presentation& to);

// ---- builders ----

Presentation appendix_algebra(const Cyclotomic& q, const Cyclotomic& lambda);
// variant with s = z^2 collapsed to a single generator
Presentation serban_algebra(const Cyclotomic& q, const Cyclotomic& lambda);
// generic three-generator model of YX = alpha XY + Z, ZX = beta XZ
Presentation step_algebra(const Cyclotomic& alpha, const Cyclotomic& beta);

Presentation b2_uplus(const YDDatum& d);
Presentation b2_uplus_corrupted(const YDDatum& d);
Presentation b2_biproduct(const YDDatum& d);

Presentation a2_biproduct(const YDDatum& d, const Cyclotomic& gamma1 = Cyclotomic(0),
                          const Cyclotomic& gamma2 = Cyclotomic(0));
// only the z-defining rule; hosts ideal generators before z-commutation holds
Presentation a2_free_biproduct(const YDDatum& d);

enum class VCoeff { QSquaredMinusOne, QMinusOne };
std::string to_string(VCoeff v);

struct LiftingSpec;  // abelian.hpp
Presentation b2_lifting(const LiftingSpec& s, VCoeff vc = VCoeff::QSquaredMinusOne);
Presentation a2_lifting(const LiftingSpec& s);

// quotient of `ambient` by extra generators, each solved for its orientable
// leading part (a pure power or a two-letter inversion)
Presentation quotient_by_solved(const Presentation& ambient, const std::vector<Element>& gens,
                                const std::string& name);

// ideal generators of the B2 lifting, as elements of the given ambient
struct B2IdealGens {
  Element y1, y2, v, w;
  long Gy1, Gy2, Gv, Gw;  // expected skew-primitive grouplikes
};
B2IdealGens b2_ideal_generators(const Presentation& ambient, const LiftingSpec& s, VCoeff vc);

struct A2IdealGens {
  Element y1, y2, v;
  std::optional<Element> zeta1, zeta2;  // n = 3 z-commutation generators
  long Gy1, Gy2, Gv, Gz1, Gz2;
};
A2IdealGens a2_ideal_generators(const Presentation& ambient, const LiftingSpec& s);

}  // namespace qlift
