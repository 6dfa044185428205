#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace purepairs {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int ipow(Int base, unsigned exp) {
    Int r = 1;
    while (exp) {
        if (exp & 1u) r *= base;
        base *= base;
        exp >>= 1u;
    }
    return r;
}

inline Rat rpow(const Rat& base, int exp) {
    if (exp >= 0) {
        return Rat(ipow(numerator(base), unsigned(exp)),
                   ipow(denominator(base), unsigned(exp)));
    }
    if (base == 0) throw std::domain_error("rpow: zero base, negative exponent");
    return Rat(ipow(denominator(base), unsigned(-exp)),
               ipow(numerator(base), unsigned(-exp)));
}

// Serialized form used in reports: "p/q" (or plain "p" when q == 1).
inline std::string rat_to_string(const Rat& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

inline Rat rat_from_string(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(Int(s));
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("rational with zero denominator: " + s);
    return Rat(num, den);
}

// floor(log2(x)) for x >= 1; the number of bits minus one.
inline long floor_log2(const Int& x) {
    if (x < 1) throw std::domain_error("floor_log2: x < 1");
    return long(boost::multiprecision::msb(x));
}

inline long ceil_log2(const Int& x) {
    long f = floor_log2(x);
    return (Int(1) << unsigned(f)) == x ? f : f + 1;
}

// Rational bounds lo <= log2(x) <= hi for rational x > 0, with denominator `prec`.
// Computed from bit lengths of integer powers; never touches floating point.
struct Log2Bounds {
    Rat lo, hi;
};

inline Log2Bounds log2_bounds(const Rat& x, unsigned prec = 16) {
    if (x <= 0) throw std::domain_error("log2_bounds: x <= 0");
    Int pn = ipow(numerator(x), prec);
    Int pd = ipow(denominator(x), prec);
    // msb gives floor(log2); log2(pn/pd) in [msb(pn)-msb(pd)-1, msb(pn)-msb(pd)+1].
    long ln = floor_log2(pn), ld = floor_log2(pd);
    return {Rat(ln - ld - 1, prec), Rat(ln - ld + 1, prec)};
}

}  // namespace purepairs
