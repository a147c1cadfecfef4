#include "cobord/rational.hpp"

#include <cctype>

#include "cobord/error.hpp"

namespace cobord {

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_fraction_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace {

Integer parse_integer(std::string_view text, std::size_t offset) {
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
  if (i == text.size()) throw ParseError(1, static_cast<int>(offset + i + 1), "expected digits");
  for (std::size_t k = i; k < text.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(text[k]))) {
      throw ParseError(1, static_cast<int>(offset + k + 1),
                       std::string("unexpected character '") + text[k] + "'");
    }
  }
  std::string s(text);
  if (s[0] == '+') s.erase(0, 1);
  return Integer(s, 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text, 0));
  Integer num = parse_integer(text.substr(0, slash), 0);
  Integer den = parse_integer(text.substr(slash + 1), slash + 1);
  if (den == 0) throw DomainError("zero denominator in '" + std::string(text) + "'");
  return ratio(num, den);
}

Rational ratio(const Integer& num, const Integer& den) {
  if (den == 0) throw DomainError("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

Integer odd_part(Integer n) {
  n = abs(n);
  if (n == 0) return n;
  while (mpz_even_p(n.get_mpz_t())) n /= 2;
  return n;
}

}  // namespace cobord
