#include "tsyslab/poly_text.hpp"

#include <algorithm>
#include <cctype>
#include <vector>

namespace tsyslab {

namespace {

struct FlatSym {
  int fam; // 0 = Q, 1 = Y, 2 = h
  int index;
  Rat p, q;
  long exp;
};

std::vector<FlatSym> flatten(const Monomial &m) {
  std::vector<FlatSym> v;
  for (const auto &[sym, e] : m.syms)
    v.push_back({sym.family == Family::Q ? 0 : 1, sym.index, sym.shift.p,
                 sym.shift.q, e});
  for (const auto &[idx, e] : m.units)
    v.push_back({2, idx, Rat(0), Rat(0), e});
  return v;
}

// Term order: lexicographic over the symbol sequence, keys ascending and
// exponents descending; a term that is a proper prefix of another sorts
// after it, so constants come last.
bool term_less(const std::vector<FlatSym> &a, const std::vector<FlatSym> &b) {
  for (std::size_t i = 0;; ++i) {
    if (i >= a.size() && i >= b.size())
      return false;
    if (i >= a.size())
      return false; // a is a prefix of b: b first
    if (i >= b.size())
      return true;
    const FlatSym &x = a[i];
    const FlatSym &y = b[i];
    if (x.fam != y.fam)
      return x.fam < y.fam;
    if (x.index != y.index)
      return x.index < y.index;
    if (x.p != y.p)
      return x.p < y.p;
    if (x.q != y.q)
      return x.q < y.q;
    if (x.exp != y.exp)
      return x.exp > y.exp;
  }
}

std::string sym_str(const FlatSym &s) {
  static const char *names[] = {"Q", "Y", "h"};
  std::string out = names[s.fam];
  out += "[" + std::to_string(s.index) + "]";
  if (s.fam != 2)
    out += "(u" + shift_text(Shift(s.p, s.q)) + ")";
  if (s.exp != 1)
    out += "^" + std::to_string(s.exp);
  return out;
}

} // namespace

std::string to_string(const LaurentPoly &p) {
  if (p.is_zero())
    return "0";
  struct Entry {
    std::vector<FlatSym> flat;
    Int coef;
  };
  std::vector<Entry> entries;
  for (const auto &[m, c] : p.terms())
    entries.push_back({flatten(m), c});
  std::sort(entries.begin(), entries.end(),
            [](const Entry &a, const Entry &b) { return term_less(a.flat, b.flat); });

  std::string out;
  bool first = true;
  for (const auto &e : entries) {
    Int mag = e.coef < 0 ? Int(-e.coef) : e.coef;
    if (first) {
      if (e.coef < 0)
        out += "-";
      first = false;
    } else {
      out += e.coef < 0 ? " - " : " + ";
    }
    if (e.flat.empty()) {
      out += mag.str();
      continue;
    }
    if (mag != 1)
      out += mag.str();
    for (std::size_t i = 0; i < e.flat.size(); ++i) {
      if (i > 0)
        out += "*";
      out += sym_str(e.flat[i]);
    }
  }
  return out;
}

namespace {

class Parser {
public:
  explicit Parser(const std::string &text) : text_(text) {}

  LaurentPoly run() {
    LaurentPoly out;
    skip_ws();
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = get() == '-';
      skip_ws();
    }
    parse_term(out, negative);
    skip_ws();
    while (pos_ < text_.size()) {
      char op = peek();
      if (op != '+' && op != '-')
        fail("expected '+', '-' or end of input");
      get();
      skip_ws();
      parse_term(out, op == '-');
      skip_ws();
    }
    return out;
  }

private:
  [[noreturn]] void fail(const std::string &msg) const {
    throw ParseError(static_cast<int>(pos_) + 1, msg);
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  char get() { return pos_ < text_.size() ? text_[pos_++] : '\0'; }
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool digit_ahead() const {
    return std::isdigit(static_cast<unsigned char>(peek()));
  }

  Int parse_uint() {
    if (!digit_ahead())
      fail("expected a digit");
    std::string digits;
    while (digit_ahead())
      digits += get();
    return Int(digits);
  }

  long parse_signed_long() {
    bool neg = false;
    if (peek() == '+' || peek() == '-')
      neg = get() == '-';
    Int v = parse_uint();
    long out = v.convert_to<long>();
    return neg ? -out : out;
  }

  Rat parse_urat() {
    Int num = parse_uint();
    if (peek() == '/') {
      get();
      Int den = parse_uint();
      if (den == 0)
        fail("zero denominator");
      return Rat(num, den);
    }
    return Rat(num);
  }

  void expect(char c) {
    if (peek() != c)
      fail(std::string("expected '") + c + "'");
    get();
  }

  // sym := ('Q'|'Y'|'h') '[' int ']' ('(' 'u' shift ')')?
  void parse_symbol(Monomial &m) {
    char fam = peek();
    if (fam != 'Q' && fam != 'Y' && fam != 'h')
      fail("expected 'Q', 'Y' or 'h'");
    get();
    expect('[');
    Int idx = parse_uint();
    expect(']');
    int index = idx.convert_to<int>();

    Shift s;
    bool has_arg = false;
    if (peek() == '(') {
      if (fam == 'h')
        fail("h symbols take no argument");
      get();
      expect('u');
      Rat p(0), q(0);
      while (peek() == '+' || peek() == '-') {
        bool neg = get() == '-';
        Rat v = parse_urat();
        if (neg)
          v = -v;
        if (peek() == 't') {
          get();
          q += v;
        } else {
          p += v;
        }
      }
      expect(')');
      s = Shift(p, q);
      has_arg = true;
    }
    (void)has_arg;

    long exp = 1;
    if (peek() == '^') {
      get();
      exp = parse_signed_long();
      if (exp == 0)
        fail("zero exponent");
    }

    if (fam == 'h') {
      long &slot = m.units[index];
      slot += exp;
      if (slot == 0)
        m.units.erase(index);
      return;
    }
    Family family = fam == 'Q' ? Family::Q : Family::Y;
    auto canon = canonicalize(family, s);
    FormalSymbol key{family, index, canon.shift};
    long &slot = m.syms[key];
    slot += exp;
    if (slot == 0)
      m.syms.erase(key);
    if (canon.unit_power != 0) {
      long &u = m.units[index];
      u += canon.unit_power * exp;
      if (u == 0)
        m.units.erase(index);
    }
  }

  void parse_term(LaurentPoly &out, bool negative) {
    Int coef(1);
    bool saw_coef = false;
    if (digit_ahead()) {
      coef = parse_uint();
      saw_coef = true;
    }
    Monomial m;
    char c = peek();
    if (c == 'Q' || c == 'Y' || c == 'h') {
      parse_symbol(m);
      while (peek() == '*') {
        get();
        parse_symbol(m);
      }
    } else if (!saw_coef) {
      fail("expected a term");
    }
    if (negative)
      coef = -coef;
    out.add_term(m, coef);
  }

  const std::string &text_;
  std::size_t pos_ = 0;
};

} // namespace

LaurentPoly parse_poly(const std::string &text) { return Parser(text).run(); }

} // namespace tsyslab
