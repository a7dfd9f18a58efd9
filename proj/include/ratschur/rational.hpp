#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <stdexcept>
#include <string>

namespace ratschur {

using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

inline std::string rat_str(const Rat& v) {
    return v.str();
}

/// Parses "num" or "num/den"; throws on malformed input or zero denominator.
inline Rat parse_rat(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(Int(s));
    Int num(s.substr(0, slash)), den(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator in rational: " + s);
    return Rat(num, den);
}

inline Int binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    Int out = 1;
    for (long i = 0; i < k; ++i) {
        out *= (n - i);
        out /= (i + 1);
    }
    return out;
}

}  // namespace ratschur
