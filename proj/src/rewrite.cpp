#include "qlift/rewrite.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "qlift/error.hpp"

namespace qlift {

void Element::add_term(const Monomial& m, const Cyclotomic& c) {
  if (c.is_zero()) return;
  auto it = terms.find(m);
  if (it == terms.end()) {
    terms.emplace(m, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms.erase(it);
}

Element& Element::operator+=(const Element& o) {
  for (const auto& [m, c] : o.terms) add_term(m, c);
  return *this;
}

Element& Element::operator-=(const Element& o) {
  for (const auto& [m, c] : o.terms) add_term(m, -c);
  return *this;
}

Element Element::operator-() const {
  Element out;
  for (const auto& [m, c] : terms) out.terms.emplace(m, -c);
  return out;
}

Element Element::scaled(const Cyclotomic& c) const {
  Element out;
  if (c.is_zero()) return out;
  for (const auto& [m, k] : terms) out.add_term(m, k * c);
  return out;
}

bool operator==(const Element& a, const Element& b) {
  if (a.terms.size() != b.terms.size()) return false;
  auto ia = a.terms.begin(), ib = b.terms.begin();
  for (; ia != a.terms.end(); ++ia, ++ib) {
    if (!(ia->first == ib->first)) return false;
    if (ia->second != ib->second) return false;
  }
  return true;
}

namespace {

// graded, then lexicographic on generator positions
bool word_less(const std::vector<uint8_t>& a, const std::vector<uint8_t>& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

}  // namespace

void Presentation::finalize() {
  if (gens.empty()) fail(Errc::bad_input, "presentation without generators");
  if (gens.size() > 200) fail(Errc::bad_input, "too many generators");
  if (group) {
    if (chars.size() != gens.size())
      fail(Errc::bad_input, "one commutation character per generator required");
    for (const auto& ch : chars)
      if (!(ch.group() == *group)) fail(Errc::group_mismatch, "character on wrong group");
  } else if (!chars.empty()) {
    fail(Errc::bad_input, "characters without a group part");
  }

  auto check_rhs_word = [&](const std::vector<uint8_t>& lhs, const Element& rhs,
                            const std::string& what) {
    for (const auto& [m, c] : rhs.terms) {
      for (uint8_t y : m.word)
        if (y >= gens.size()) fail(Errc::unknown_symbol, what + ": bad generator in rhs");
      if (!word_less(m.word, lhs))
        fail(Errc::bad_input, what + ": rhs term does not decrease the termination order");
      if (m.g != 0 && !group) fail(Errc::bad_input, what + ": group element without group part");
    }
  };

  for (const auto& [key, rhs] : swaps) {
    auto [hi, lo] = key;
    if (hi < 0 || lo < 0 || hi >= static_cast<GenId>(gens.size()) ||
        lo >= static_cast<GenId>(gens.size()))
      fail(Errc::unknown_symbol, "swap rule on unknown generator");
    if (hi <= lo) fail(Errc::bad_input, "swap rule must rewrite an out-of-order pair");
    std::vector<uint8_t> lhs{static_cast<uint8_t>(hi), static_cast<uint8_t>(lo)};
    check_rhs_word(lhs, rhs, "swap " + gens[hi] + "." + gens[lo]);
  }
  for (const auto& [gid, pr] : powers) {
    if (gid < 0 || gid >= static_cast<GenId>(gens.size()))
      fail(Errc::unknown_symbol, "power rule on unknown generator");
    if (pr.first < 2) fail(Errc::bad_input, "power bound must be at least 2");
    std::vector<uint8_t> lhs(static_cast<size_t>(pr.first), static_cast<uint8_t>(gid));
    check_rhs_word(lhs, pr.second, "power " + gens[gid]);
  }

  charexp_.clear();
  if (group) {
    long N = group->order();
    charexp_.assign(gens.size(), std::vector<long>(static_cast<size_t>(N), 0));
    for (size_t i = 0; i < gens.size(); ++i)
      for (long h = 0; h < N; ++h) charexp_[i][static_cast<size_t>(h)] = chars[i].eval_exponent(h);
  }
  finalized_ = true;
}

GenId Presentation::gen_id(const std::string& gname) const {
  for (size_t i = 0; i < gens.size(); ++i)
    if (gens[i] == gname) return static_cast<GenId>(i);
  fail(Errc::unknown_symbol, "unknown generator: " + gname);
}

Element Presentation::one() const { return scalar(Cyclotomic(1)); }

Element Presentation::scalar(const Cyclotomic& c) const {
  Element e;
  e.add_term(Monomial{}, c);
  return e;
}

Element Presentation::gen_elem(GenId id) const {
  if (id < 0 || id >= static_cast<GenId>(gens.size()))
    fail(Errc::unknown_symbol, "bad generator id");
  Element e;
  e.add_term(Monomial{0, {static_cast<uint8_t>(id)}}, Cyclotomic(1));
  return e;
}

Element Presentation::grouplike(long gidx) const {
  if (!group) fail(Errc::bad_input, "presentation has no group part");
  if (gidx < 0 || gidx >= group->order()) fail(Errc::bad_input, "bad group element");
  Element e;
  e.add_term(Monomial{gidx, {}}, Cyclotomic(1));
  return e;
}

long Presentation::char_exponent(GenId gen, long gidx) const {
  if (!group) return 0;
  return charexp_[static_cast<size_t>(gen)][static_cast<size_t>(gidx)];
}

struct Presentation::Task {
  Cyclotomic c;
  long g = 0;
  std::vector<uint8_t> w;
};

void Presentation::run_tasks(std::vector<Task>& stack, Element& out) const {
  const bool has_group = group.has_value();
  const long L = has_group ? group->exponent() : 1;
  while (!stack.empty()) {
    Task t = std::move(stack.back());
    stack.pop_back();
    size_t pos = 0, len = 0;
    const Element* rhs = nullptr;
    for (size_t i = 0; i < t.w.size(); ++i) {
      if (i + 1 < t.w.size()) {
        auto it = swaps.find({static_cast<GenId>(t.w[i]), static_cast<GenId>(t.w[i + 1])});
        if (it != swaps.end()) {
          pos = i;
          len = 2;
          rhs = &it->second;
          break;
        }
      }
      auto ip = powers.find(static_cast<GenId>(t.w[i]));
      if (ip != powers.end()) {
        size_t b = static_cast<size_t>(ip->second.first);
        if (i + b <= t.w.size()) {
          bool run = true;
          for (size_t k = 1; k < b; ++k)
            if (t.w[i + k] != t.w[i]) {
              run = false;
              break;
            }
          if (run) {
            pos = i;
            len = b;
            rhs = &ip->second.second;
            break;
          }
        }
      }
    }
    if (rhs == nullptr) {
      out.add_term(Monomial{t.g, std::move(t.w)}, t.c);
      continue;
    }
    for (const auto& [rm, rc] : rhs->terms) {
      Task nt;
      nt.c = t.c * rc;
      nt.g = t.g;
      if (has_group && rm.g != 0) {
        long e = 0;
        for (size_t k = 0; k < pos; ++k) e += charexp_[t.w[k]][static_cast<size_t>(rm.g)];
        if (e % L != 0) nt.c *= zeta_power(static_cast<unsigned>(L), -e);
        nt.g = group->mul(t.g, rm.g);
      }
      if (nt.c.is_zero()) continue;
      nt.w.reserve(t.w.size() - len + rm.word.size());
      nt.w.insert(nt.w.end(), t.w.begin(), t.w.begin() + static_cast<long>(pos));
      nt.w.insert(nt.w.end(), rm.word.begin(), rm.word.end());
      nt.w.insert(nt.w.end(), t.w.begin() + static_cast<long>(pos + len), t.w.end());
      stack.push_back(std::move(nt));
    }
  }
}

Element Presentation::normalize(const std::vector<Sym>& word, const Cyclotomic& coeff) const {
  if (!finalized_) fail(Errc::bad_input, "presentation not finalized");
  const long L = group ? group->exponent() : 1;
  Task t;
  t.c = coeff;
  for (const Sym& s : word) {
    if (s.is_group) {
      if (!group) fail(Errc::unknown_symbol, "group symbol in a group-free presentation");
      if (s.v < 0 || s.v >= group->order()) fail(Errc::unknown_symbol, "bad group element");
      long e = 0;
      for (uint8_t y : t.w) e += charexp_[y][static_cast<size_t>(s.v)];
      if (e % L != 0) t.c *= zeta_power(static_cast<unsigned>(L), -e);
      t.g = group->mul(t.g, s.v);
    } else {
      if (s.v < 0 || s.v >= static_cast<long>(gens.size()))
        fail(Errc::unknown_symbol, "unknown generator in word");
      t.w.push_back(static_cast<uint8_t>(s.v));
    }
  }
  Element out;
  std::vector<Task> stack{std::move(t)};
  run_tasks(stack, out);
  return out;
}

Element Presentation::normalize_monomial(const Monomial& m, const Cyclotomic& coeff) const {
  Element out;
  std::vector<Task> stack{Task{coeff, m.g, m.word}};
  run_tasks(stack, out);
  return out;
}

Element Presentation::mul(const Element& a, const Element& b) const {
  if (!finalized_) fail(Errc::bad_input, "presentation not finalized");
  const bool has_group = group.has_value();
  const long L = has_group ? group->exponent() : 1;
  Element out;
  std::vector<Task> stack;
  for (const auto& [ma, ca] : a.terms)
    for (const auto& [mb, cb] : b.terms) {
      Task t;
      t.c = ca * cb;
      t.g = ma.g;
      if (has_group && mb.g != 0) {
        long e = 0;
        for (uint8_t y : ma.word) e += charexp_[y][static_cast<size_t>(mb.g)];
        if (e % L != 0) t.c *= zeta_power(static_cast<unsigned>(L), -e);
        t.g = group->mul(ma.g, mb.g);
      }
      if (t.c.is_zero()) continue;
      t.w.reserve(ma.word.size() + mb.word.size());
      t.w.insert(t.w.end(), ma.word.begin(), ma.word.end());
      t.w.insert(t.w.end(), mb.word.begin(), mb.word.end());
      stack.push_back(std::move(t));
    }
  run_tasks(stack, out);
  return out;
}

Element Presentation::mul(const Element& a, const Element& b, const Element& c) const {
  return mul(mul(a, b), c);
}

Element Presentation::pow(const Element& a, long e) const {
  if (e < 0) fail(Errc::bad_input, "negative element power");
  Element acc = one();
  for (long k = 0; k < e; ++k) acc = mul(acc, a);
  return acc;
}

Element Presentation::commutator(const Element& a, const Element& b) const {
  return mul(a, b) - mul(b, a);
}

ConfluenceReport Presentation::confluence_check() const {
  if (!finalized_) fail(Errc::bad_input, "presentation not finalized");
  ConfluenceReport rep;

  // character homogeneity of every rule (group commutation consistency)
  if (group) {
    auto char_of_word = [&](const std::vector<uint8_t>& w) {
      Character acc = Character::trivial(*group);
      for (uint8_t y : w) acc = acc * chars[y];
      return acc;
    };
    auto check_rule = [&](const std::vector<uint8_t>& lhs, const Element& rhs,
                          const std::string& label) {
      Character cl = char_of_word(lhs);
      for (const auto& [m, c] : rhs.terms) {
        if (!(char_of_word(m.word) == cl)) {
          rep.confluent = false;
          rep.failures.push_back(
              {label, "rule is not character-homogeneous", Element{}, Element{}});
          return;
        }
      }
    };
    for (const auto& [key, rhs] : swaps)
      check_rule({static_cast<uint8_t>(key.first), static_cast<uint8_t>(key.second)}, rhs,
                 gens[key.first] + "." + gens[key.second] + " (characters)");
    for (const auto& [gid, pr] : powers)
      check_rule(std::vector<uint8_t>(static_cast<size_t>(pr.first), static_cast<uint8_t>(gid)),
                 pr.second, gens[gid] + "^" + std::to_string(pr.first) + " (characters)");
  }

  auto reduce_first_step = [&](const std::vector<uint8_t>& w, size_t pos, size_t len,
                               const Element& rhs) {
    const bool has_group = group.has_value();
    const long L = has_group ? group->exponent() : 1;
    std::vector<Task> stack;
    for (const auto& [rm, rc] : rhs.terms) {
      Task t;
      t.c = rc;
      t.g = rm.g;
      if (has_group && rm.g != 0) {
        long e = 0;
        for (size_t k = 0; k < pos; ++k) e += charexp_[w[k]][static_cast<size_t>(rm.g)];
        if (e % L != 0) t.c *= zeta_power(static_cast<unsigned>(L), -e);
      }
      t.w.insert(t.w.end(), w.begin(), w.begin() + static_cast<long>(pos));
      t.w.insert(t.w.end(), rm.word.begin(), rm.word.end());
      t.w.insert(t.w.end(), w.begin() + static_cast<long>(pos + len), w.end());
      stack.push_back(std::move(t));
    }
    Element out;
    run_tasks(stack, out);
    return out;
  };

  auto check_overlap = [&](const std::string& label, const std::vector<uint8_t>& w, size_t p1,
                           size_t l1, const Element& r1, size_t p2, size_t l2, const Element& r2) {
    ++rep.pairs_checked;
    Element e1 = reduce_first_step(w, p1, l1, r1);
    Element e2 = reduce_first_step(w, p2, l2, r2);
    if (!(e1 == e2)) {
      rep.confluent = false;
      rep.failures.push_back({label, "critical pair does not resolve", e1, e2});
    }
  };

  // swap-swap overlaps: [a,b] and [b,c]
  for (const auto& [k1, r1] : swaps)
    for (const auto& [k2, r2] : swaps) {
      if (k1.second != k2.first) continue;
      std::vector<uint8_t> w{static_cast<uint8_t>(k1.first), static_cast<uint8_t>(k1.second),
                             static_cast<uint8_t>(k2.second)};
      check_overlap(gens[k1.first] + "." + gens[k1.second] + "." + gens[k2.second], w, 0, 2, r1, 1,
                    2, r2);
    }
  // swap with power of the lower letter: [a, b^m]
  for (const auto& [k, r] : swaps) {
    auto ip = powers.find(k.second);
    if (ip != powers.end()) {
      size_t m = static_cast<size_t>(ip->second.first);
      std::vector<uint8_t> w{static_cast<uint8_t>(k.first)};
      w.insert(w.end(), m, static_cast<uint8_t>(k.second));
      check_overlap(gens[k.first] + "." + gens[k.second] + "^" + std::to_string(m), w, 0, 2, r, 1,
                    m, ip->second.second);
    }
    auto ip2 = powers.find(k.first);
    if (ip2 != powers.end()) {
      size_t m = static_cast<size_t>(ip2->second.first);
      std::vector<uint8_t> w(m, static_cast<uint8_t>(k.first));
      w.push_back(static_cast<uint8_t>(k.second));
      check_overlap(gens[k.first] + "^" + std::to_string(m) + "." + gens[k.second], w, 0, m,
                    ip2->second.second, m - 1, 2, r);
    }
  }
  // power self-overlaps: [b^(m+s)], s = 1..m-1
  for (const auto& [gid, pr] : powers) {
    size_t m = static_cast<size_t>(pr.first);
    for (size_t s = 1; s < m; ++s) {
      std::vector<uint8_t> w(m + s, static_cast<uint8_t>(gid));
      check_overlap(gens[gid] + "^" + std::to_string(m + s), w, 0, m, pr.second, s, m, pr.second);
    }
  }
  return rep;
}

bool Presentation::basis_is_finite() const {
  for (GenId i = 0; i < static_cast<GenId>(gens.size()); ++i)
    if (!powers.count(i)) return false;
  for (GenId hi = 0; hi < static_cast<GenId>(gens.size()); ++hi)
    for (GenId lo = 0; lo < hi; ++lo)
      if (!swaps.count({hi, lo})) return false;
  return true;
}

void Presentation::for_each_basis_monomial(const std::function<void(const Monomial&)>& fn) const {
  if (!basis_is_finite())
    fail(Errc::infinite_dimensional,
         "presentation is infinite-dimensional (missing power rule or swap rule)");
  std::vector<int> bounds(gens.size());
  for (size_t i = 0; i < gens.size(); ++i) bounds[i] = powers.at(static_cast<GenId>(i)).first;
  long N = group_order();
  std::vector<int> exps(gens.size(), 0);
  for (long g = 0; g < N; ++g) {
    for (;;) {
      Monomial m;
      m.g = g;
      for (size_t i = 0; i < gens.size(); ++i)
        m.word.insert(m.word.end(), static_cast<size_t>(exps[i]), static_cast<uint8_t>(i));
      fn(m);
      size_t k = 0;
      while (k < exps.size()) {
        if (++exps[k] < bounds[k]) break;
        exps[k] = 0;
        ++k;
      }
      if (k == exps.size()) break;
    }
  }
}

BasisCount Presentation::enumerate_basis() const {
  BasisCount out;
  for_each_basis_monomial([&](const Monomial&) { ++out.dimension; });
  return out;
}

std::string Presentation::monomial_str(const Monomial& m) const {
  std::ostringstream os;
  bool emitted = false;
  if (m.g != 0 && group) {
    os << group->elem_str(m.g);
    emitted = true;
  }
  size_t i = 0;
  while (i < m.word.size()) {
    size_t j = i;
    while (j < m.word.size() && m.word[j] == m.word[i]) ++j;
    if (emitted) os << " ";
    os << gens[m.word[i]];
    if (j - i > 1) os << "^" << (j - i);
    emitted = true;
    i = j;
  }
  if (!emitted) os << "1";
  return os.str();
}

std::string Presentation::element_str(const Element& e) const {
  if (e.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : e.terms) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ") " << monomial_str(m);
  }
  return os.str();
}

std::vector<Sym> Presentation::parse_word(const std::string& text) const {
  std::vector<Sym> out;
  std::istringstream is(text);
  std::string tok;
  while (is >> tok) {
    if (tok.rfind("g(", 0) == 0) {
      if (!group) fail(Errc::unknown_symbol, "group symbol in a group-free presentation");
      if (tok.back() != ')') fail(Errc::parse_error, "unterminated group element: " + tok);
      std::vector<long> e;
      std::string body = tok.substr(2, tok.size() - 3);
      std::istringstream bs(body);
      std::string part;
      while (std::getline(bs, part, ',')) e.push_back(std::stol(part));
      out.push_back(Sym::grp(group->from_exponents(e)));
      continue;
    }
    size_t caret = tok.find('^');
    std::string base = caret == std::string::npos ? tok : tok.substr(0, caret);
    long rep = caret == std::string::npos ? 1 : std::stol(tok.substr(caret + 1));
    if (rep < 0) fail(Errc::parse_error, "negative power in word");
    GenId id = gen_id(base);
    for (long k = 0; k < rep; ++k) out.push_back(Sym::gen(id));
  }
  return out;
}

Element Presentation::parse_element(const std::string& text) const {
  // sum of terms; term = optional "(scalar)*" followed by a word
  Element out;
  size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  bool first = true;
  while (true) {
    skip_ws();
    if (pos >= text.size()) break;
    Cyclotomic sign(1);
    if (text[pos] == '+' || text[pos] == '-') {
      if (text[pos] == '-') sign = Cyclotomic(-1);
      ++pos;
    } else if (!first) {
      fail(Errc::parse_error, "expected '+' or '-' between terms");
    }
    first = false;
    skip_ws();
    Cyclotomic coeff(1);
    if (pos < text.size() && text[pos] == '(') {
      int depth = 0;
      size_t start = pos;
      while (pos < text.size()) {
        if (text[pos] == '(') ++depth;
        if (text[pos] == ')' && --depth == 0) break;
        ++pos;
      }
      if (pos >= text.size()) fail(Errc::parse_error, "unbalanced parentheses");
      coeff = Cyclotomic::parse(text.substr(start + 1, pos - start - 1));
      ++pos;
      skip_ws();
      if (pos < text.size() && text[pos] == '*') ++pos;
    }
    size_t end = text.find_first_of("+-", pos);
    std::string wordpart = text.substr(pos, end == std::string::npos ? std::string::npos : end - pos);
    pos = end == std::string::npos ? text.size() : end;
    // trim
    while (!wordpart.empty() && std::isspace(static_cast<unsigned char>(wordpart.back())))
      wordpart.pop_back();
    std::vector<Sym> word = wordpart.empty() || wordpart == "1" ? std::vector<Sym>{}
                                                                : parse_word(wordpart);
    out += normalize(word, sign * coeff);
  }
  return out;
}

Element transport(const Element& e, const Presentation& from, const Presentation& to) {
  if (from.gens != to.gens) fail(Errc::presentation_mismatch, "generator lists differ");
  if (from.group.has_value() != to.group.has_value() ||
      (from.group && !(*from.group == *to.group)))
    fail(Errc::presentation_mismatch, "group parts differ");
  Element out;
  for (const auto& [m, c] : e.terms) out += to.normalize_monomial(m, c);
  return out;
}

}  // namespace qlift
