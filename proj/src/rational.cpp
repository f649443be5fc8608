#include "tropica/rational.hpp"

#include <cctype>

#include "tropica/error.hpp"

namespace tropica {

namespace {

bool is_integer_literal(const std::string& s) {
  if (s.empty()) return false;
  size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  if (text.empty())
    throw Error(ErrorKind::Parse, "empty rational literal");

  auto slash = text.find('/');
  if (slash != std::string::npos) {
    std::string num = text.substr(0, slash);
    std::string den = text.substr(slash + 1);
    if (!is_integer_literal(num) || !is_integer_literal(den))
      throw Error(ErrorKind::Parse, "malformed rational literal: " + text);
    Rational q;
    if (q.set_str(text, 10) != 0)
      throw Error(ErrorKind::Parse, "malformed rational literal: " + text);
    if (q.get_den() == 0)
      throw Error(ErrorKind::Parse, "zero denominator: " + text);
    q.canonicalize();
    return q;
  }

  auto dot = text.find('.');
  if (dot != std::string::npos) {
    std::string head = text.substr(0, dot);
    std::string frac = text.substr(dot + 1);
    if (head.empty() || head == "-" || head == "+") head += "0";
    if (!is_integer_literal(head) || frac.empty())
      throw Error(ErrorKind::Parse, "malformed decimal literal: " + text);
    for (char c : frac)
      if (!std::isdigit(static_cast<unsigned char>(c)))
        throw Error(ErrorKind::Parse, "malformed decimal literal: " + text);
    mpz_class scaled;
    if (scaled.set_str(head + frac, 10) != 0)  // sign carried by head
      throw Error(ErrorKind::Parse, "malformed decimal literal: " + text);
    mpz_class den = 1;
    for (size_t k = 0; k < frac.size(); ++k) den *= 10;
    Rational q(scaled, den);
    q.canonicalize();
    return q;
  }

  if (!is_integer_literal(text))
    throw Error(ErrorKind::Parse, "malformed rational literal: " + text);
  Rational q;
  if (q.set_str(text, 10) != 0)
    throw Error(ErrorKind::Parse, "malformed rational literal: " + text);
  q.canonicalize();
  return q;
}

std::string rational_to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace tropica
