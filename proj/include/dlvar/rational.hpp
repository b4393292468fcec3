#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>
#include <stdexcept>
#include <string>

namespace dlv {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::rational<Int>;

// Print as "a/b" in lowest terms, or just "a" for integers.
inline std::string rat_to_string(const Rat &r)
{
    if (r.denominator() == 1) return r.numerator().str();
    return r.numerator().str() + "/" + r.denominator().str();
}

// Parse "a" or "a/b" (lowest-terms normalization handled by boost::rational).
inline Rat parse_rational(const std::string &s)
{
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(Int(s));
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("rational with zero denominator: " + s);
    return Rat(num, den);
}

inline Int int_pow(Int base, unsigned exp)
{
    Int result = 1;
    while (exp--) result *= base;
    return result;
}

} // namespace dlv
