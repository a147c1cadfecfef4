#include "cobord/expr.hpp"

#include <cctype>

#include "cobord/error.hpp"

namespace cobord {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  ClassExpr parse() {
    ClassExpr e;
    skip_space();
    bool negative = false;
    if (peek_sign(negative)) skip_space();
    e.terms.push_back(term(negative));
    while (true) {
      skip_space();
      if (at_end()) break;
      if (!peek_sign(negative)) fail("expected '+' or '-'");
      skip_space();
      e.terms.push_back(term(negative));
    }
    return e;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char cur() const { return at_end() ? '\0' : text_[pos_]; }

  [[noreturn]] void fail(const std::string& message) const {
    int line = 1;
    int col = 1;
    for (std::size_t i = 0; i < pos_ && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        col = 1;
      } else if ((static_cast<unsigned char>(text_[i]) & 0xC0) != 0x80) {
        ++col;
      }
    }
    throw ParseError(line, col, message);
  }

  void advance(std::size_t n = 1) { pos_ += n; }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(cur()))) advance();
  }

  // '+', '-' or U+2212.
  bool peek_sign(bool& negative) {
    if (cur() == '+' || cur() == '-') {
      negative = cur() == '-';
      advance();
      return true;
    }
    if (text_.substr(pos_, 3) == "\xE2\x88\x92") {
      negative = true;
      advance(3);
      return true;
    }
    return false;
  }

  Integer integer() {
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(cur()))) advance();
    if (start == pos_) fail("expected an integer");
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  int small_integer(const char* what) {
    const std::size_t start = pos_;
    const Integer v = integer();
    if (v > kMaxCap * 8) {
      pos_ = start;
      fail(std::string(what) + " too large");
    }
    return static_cast<int>(v.get_si());
  }

  bool factor_ahead() const { return cur() == 'C' || cur() == 'P' || cur() == 'x'; }

  Factor factor() {
    Factor f;
    if (text_.substr(pos_, 2) == "CP") {
      f.kind = Factor::Kind::cp;
      advance(2);
    } else if (cur() == 'P') {
      f.kind = Factor::Kind::p;
      advance();
    } else if (cur() == 'x') {
      f.kind = Factor::Kind::x;
      advance();
    } else {
      fail("expected CP<k>, P<k> or x<k>");
    }
    const std::size_t at = pos_;
    f.index = small_integer("index");
    if (f.index < 1) {
      pos_ = at;
      fail("indices start at 1");
    }
    skip_space();
    if (cur() == '^') {
      advance();
      skip_space();
      f.exponent = small_integer("exponent");
    }
    return f;
  }

  Term term(bool negative) {
    Term t;
    if (std::isdigit(static_cast<unsigned char>(cur()))) {
      const std::size_t at = pos_;
      Integer num = integer();
      Integer den = 1;
      skip_space();
      if (cur() == '/') {
        advance();
        skip_space();
        den = integer();
        if (den == 0) {
          pos_ = at;
          throw DomainError("zero denominator at column " + std::to_string(at + 1));
        }
      }
      t.coefficient = ratio(num, den);
      skip_space();
      if (cur() != '*') {
        if (negative) t.coefficient = -t.coefficient;
        return t;
      }
      advance();
      skip_space();
    }
    if (negative) t.coefficient = -t.coefficient;
    if (!factor_ahead()) fail("expected a factor");
    t.factors.push_back(factor());
    while (true) {
      skip_space();
      if (cur() != '*') break;
      advance();
      skip_space();
      t.factors.push_back(factor());
    }
    return t;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

const char* prefix(Factor::Kind k) {
  switch (k) {
    case Factor::Kind::cp: return "CP";
    case Factor::Kind::p: return "P";
    case Factor::Kind::x: return "x";
  }
  return "?";
}

}  // namespace

bool ClassExpr::uses_w_generators() const {
  for (const auto& t : terms)
    for (const auto& f : t.factors)
      if (f.kind == Factor::Kind::x) return true;
  return false;
}

int ClassExpr::max_index() const {
  int m = 0;
  for (const auto& t : terms)
    for (const auto& f : t.factors) m = std::max(m, f.index);
  return m;
}

ClassExpr parse_class(std::string_view text) { return Parser(text).parse(); }

std::string print(const ClassExpr& e) {
  std::string out;
  for (std::size_t i = 0; i < e.terms.size(); ++i) {
    const Term& t = e.terms[i];
    Rational c = t.coefficient;
    if (c < 0) {
      out += "-";
      c = -c;
    } else if (i > 0) {
      out += "+";
    }
    if (t.factors.empty()) {
      out += to_string(c);
      continue;
    }
    if (c != 1) out += to_string(c) + "*";
    for (std::size_t k = 0; k < t.factors.size(); ++k) {
      const Factor& f = t.factors[k];
      if (k > 0) out += "*";
      out += prefix(f.kind) + std::to_string(f.index);
      if (f.exponent != 1) out += "^" + std::to_string(f.exponent);
    }
  }
  return out.empty() ? "0" : out;
}

GradedPoly evaluate(const ClassExpr& e, int cap) {
  GradedPoly out(cap);
  for (const auto& t : e.terms) {
    GradedPoly term(cap, t.coefficient);
    for (const auto& f : t.factors) {
      if (f.kind == Factor::Kind::x) throw DomainError("x<k> factors need the star product");
      if (f.index > cap) throw RangeError("P" + std::to_string(f.index) + " exceeds the maximum degree");
      term = term * GradedPoly::variable(cap, f.index).pow(f.exponent);
    }
    out += term;
  }
  return out;
}

ClassExpr to_expr(const GradedPoly& p, Factor::Kind kind) {
  ClassExpr e;
  for (const auto& [m, c] : p.terms()) {
    Term t{c, {}};
    for (int i = 1; i <= m.max_index(); ++i)
      if (m.exponent(i) > 0) t.factors.push_back(Factor{kind, i, m.exponent(i)});
    e.terms.push_back(std::move(t));
  }
  return e;
}

}  // namespace cobord
