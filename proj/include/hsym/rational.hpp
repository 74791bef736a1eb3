#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace hsym {

// Expression templates are disabled so that `auto` bindings hold values.
using Integer = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend,
                                               boost::multiprecision::et_off>;

// num / den for any nonzero den (the backend rejects negative denominators).
Rational make_rational(const Integer& num, const Integer& den);

Integer numerator_of(const Rational& q);
Integer denominator_of(const Rational& q);

bool is_integer(const Rational& q);

// Exact conversion; throws std::logic_error when q is not integral.
Integer to_integer(const Rational& q);

// "p/q" in lowest terms with q > 0, or "p" when q == 1.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

// Accepts "p", "-p", "p/q". Throws InputError on malformed text or q == 0.
Rational parse_rational(std::string_view text);
Integer parse_integer(std::string_view text);

// Six significant digits; used only for human-facing approximations.
std::string to_decimal(const Rational& q);

}  // namespace hsym
