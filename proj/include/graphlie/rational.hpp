#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

namespace graphlie {

/// Arbitrary-precision rational, always stored in lowest terms with a
/// positive denominator (GMP canonicalizes after every operation).
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                              boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                             boost::multiprecision::et_off>;

/// Dense vector of rationals.
using Vector = std::vector<Rational>;

/// Serializes as "p/q" with q > 0 and gcd(|p|, q) = 1; zero is "0/1".
std::string to_string(const Rational& r);

/// Accepts "p/q" or a bare integer "p". Throws DomainError otherwise or on q = 0.
Rational parse_rational(std::string_view text);

Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t i);
bool is_zero(const Vector& v);

}  // namespace graphlie
