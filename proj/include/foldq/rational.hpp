#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <sstream>
#include <stdexcept>
#include <string>

namespace foldq {

using i64 = long long;
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt rat_num(const Rational& q) { return numerator(q); }
inline BigInt rat_den(const Rational& q) { return denominator(q); }

/// Renders a rational as "p" or "p/q" (q > 0, fully reduced).
inline std::string rat_str(const Rational& q) {
    std::ostringstream os;
    os << rat_num(q);
    if (rat_den(q) != 1) os << "/" << rat_den(q);
    return os.str();
}

/// Parses "p" or "p/q". Throws on malformed input or zero denominator.
inline Rational rat_parse(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(BigInt(s));
        BigInt p(s.substr(0, slash));
        BigInt q(s.substr(slash + 1));
        if (q == 0) throw std::invalid_argument("zero denominator");
        return Rational(p, q);
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("malformed rational: " + s);
    }
}

inline double rat_double(const Rational& q) { return q.convert_to<double>(); }

inline int rat_sign(const Rational& q) { return q.sign(); }

} // namespace foldq
