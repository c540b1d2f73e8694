#include "discert/rational.hpp"

#include <cctype>

namespace discert {

namespace {

bool is_integer_literal(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rational Rational::parse(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) {
    if (!is_integer_literal(text)) {
      throw ParseError("not a rational literal: '" + text +
                       "' (use \"p\" or \"p/q\")");
    }
    return Rational(mpq_class(mpz_class(text)));
  }
  const std::string num = text.substr(0, slash);
  const std::string den = text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) ||
      den.find('-') != std::string::npos || den.find('+') != std::string::npos) {
    throw ParseError("not a rational literal: '" + text +
                     "' (use \"p\" or \"p/q\" with positive q)");
  }
  mpz_class d(den);
  if (d == 0) throw ParseError("rational literal with zero denominator: '" + text + "'");
  mpq_class v(mpz_class(num), d);
  v.canonicalize();
  return Rational(v);
}

std::string Rational::str() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

}  // namespace discert
