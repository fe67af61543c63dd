#include "qmfree/rational.hpp"

#include <cctype>

#include "qmfree/error.hpp"

namespace qmfree {

std::string FormatRational(const Rational& r) {
  const Integer num = boost::multiprecision::numerator(r);
  const Integer den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

namespace {

bool AllDigits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational ParseRational(const std::string& text) {
  std::string body = text;
  bool negative = false;
  if (!body.empty() && (body[0] == '-' || body[0] == '+')) {
    negative = body[0] == '-';
    body.erase(0, 1);
  }
  const auto slash = body.find('/');
  const std::string num = body.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : body.substr(slash + 1);
  if (!AllDigits(num) || !AllDigits(den)) Fail(ErrorKind::kParse, "malformed rational '" + text + "'");
  const Integer d(den);
  if (d == 0) Fail(ErrorKind::kParse, "zero denominator in '" + text + "'");
  Rational r(Integer(num), d);
  return negative ? Rational(-r) : r;
}

}  // namespace qmfree
