#include "hsym/rational.hpp"

#include "hsym/errors.hpp"

#include <cstdio>
#include <stdexcept>

namespace hsym {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("zero denominator");
  return den < 0 ? Rational(Integer(-num), Integer(-den)) : Rational(num, den);
}

Integer numerator_of(const Rational& q) { return Integer(boost::multiprecision::numerator(q)); }

Integer denominator_of(const Rational& q) { return Integer(boost::multiprecision::denominator(q)); }

bool is_integer(const Rational& q) { return denominator_of(q) == 1; }

Integer to_integer(const Rational& q) {
  if (!is_integer(q)) throw std::logic_error("rational " + to_string(q) + " is not an integer");
  return numerator_of(q);
}

std::string to_string(const Integer& z) { return z.str(); }

std::string to_string(const Rational& q) {
  Integer den = denominator_of(q);
  if (den == 1) return numerator_of(q).str();
  return numerator_of(q).str() + "/" + den.str();
}

Integer parse_integer(std::string_view text) {
  std::string_view digits = text;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
  if (digits.empty()) throw InputError("empty integer literal '" + std::string(text) + "'");
  for (char c : digits) {
    if (c < '0' || c > '9') throw InputError("malformed integer literal '" + std::string(text) + "'");
  }
  Integer value{std::string(digits)};
  return text.front() == '-' ? Integer(-value) : value;
}

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  Integer num = parse_integer(text.substr(0, slash));
  Integer den = parse_integer(text.substr(slash + 1));
  if (den == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
  return make_rational(num, den);
}

std::string to_decimal(const Rational& q) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", q.convert_to<double>());
  return buf;
}

}  // namespace hsym
