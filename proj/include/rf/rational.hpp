#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace rf {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Accepts "p/q", integers and finite decimals ("0.25").
Rational parse_rational(std::string_view text);

std::string to_string(const Rational & r);

// ceil(r * x) and floor(r * x), exact.
std::int64_t ceil_mul(const Rational & r, std::int64_t x);
std::int64_t floor_mul(const Rational & r, std::int64_t x);

Rational rpow(const Rational & base, int exponent);

inline BigInt numerator_of(const Rational & r) { return boost::multiprecision::numerator(r); }
inline BigInt denominator_of(const Rational & r) { return boost::multiprecision::denominator(r); }

// Narrowing helpers; throw InputError if the value does not fit.
std::int64_t to_int64(const BigInt & v, const char * what);

} // namespace rf
