#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <string>

namespace mforge {

/// Exact arbitrary-precision rational scalar. Always canonical: lowest terms,
/// positive denominator (guaranteed by the backing type).
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

inline Rational rat(long long num, long long den = 1) {
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return Rational(Integer(num), Integer(den));
}

/// Renders as "p/q", or "p" when the denominator is 1.
inline std::string rat_str(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

/// Parses "p", "-p", "p/q". Rejects zero denominators and malformed input.
std::optional<Rational> rat_parse(const std::string& s);

} // namespace mforge
