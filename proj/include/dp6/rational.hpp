#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace dp6 {

// Exact scalars used throughout: arbitrary-precision integers and rationals.
// No floating point appears anywhere in the library.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int num(const Rat& q) { return boost::multiprecision::numerator(q); }
inline Int den(const Rat& q) { return boost::multiprecision::denominator(q); }

inline bool is_integer(const Rat& q) { return den(q) == 1; }

// "p/q" for non-integers, plain decimal string for integers.
inline std::string rat_to_string(const Rat& q) {
    if (is_integer(q)) return num(q).str();
    return num(q).str() + "/" + den(q).str();
}

inline Rat rat_from_string(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(Int(s));
    Int p(s.substr(0, slash)), q(s.substr(slash + 1));
    if (q == 0) throw std::invalid_argument("rational with zero denominator: " + s);
    return Rat(p, q);
}

// Exact integer division; throws if the quotient is not integral.
inline Int exact_div(const Int& a, const Int& b) {
    if (b == 0 || a % b != 0) throw std::invalid_argument("exact_div: not divisible");
    return a / b;
}

}  // namespace dp6
