#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace qmfree {

// Exact rationals for every evaluation path; there is no floating point in
// the library.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// "p/q" in lowest terms, or "p" when the denominator is one.
std::string FormatRational(const Rational& r);

// Accepts "p", "-p", "p/q". Throws Error(kParse) otherwise.
Rational ParseRational(const std::string& text);

inline Rational Abs(const Rational& r) { return r < 0 ? Rational(-r) : r; }

}  // namespace qmfree
