#pragma once
/*
 * Exact integer / rational arithmetic helpers.
 *
 * All counting results are arbitrary-precision integers (Int) and all
 * probabilities are exact rationals (Rat).  Floating point only ever enters
 * through log2 of an already-exact quantity, so every decision path that
 * compares a count against a bound can be carried out exactly; doubles are
 * for reporting and for entropy values (which are irrational anyway).
 */

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace cb {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// floor(log2 x) aware log2 of a big integer, accurate to ~1 ulp of double.
// Works far beyond the range where convert_to<double> would overflow.
inline double log2_int(const Int &x) {
    if (x <= 0) throw std::invalid_argument("log2_int: argument must be positive");
    if (x < (Int(1) << 62)) return std::log2(x.convert_to<double>());
    const unsigned k = boost::multiprecision::msb(x); // floor(log2 x)
    const Int top = x >> (k - 52);                    // keep 53 leading bits
    return double(k - 52) + std::log2(top.convert_to<double>());
}

inline double log2_rat(const Rat &r) {
    if (r <= 0) throw std::invalid_argument("log2_rat: argument must be positive");
    return log2_int(boost::multiprecision::numerator(r)) -
           log2_int(boost::multiprecision::denominator(r));
}

// Rational -> double without intermediate overflow.
inline double rat_to_double(const Rat &r) {
    if (r == 0) return 0.0;
    if (r < 0) {
        Rat m = -r;
        return -std::exp2(log2_rat(m));
    }
    const Int &num = boost::multiprecision::numerator(r);
    const Int &den = boost::multiprecision::denominator(r);
    if (num < (Int(1) << 53) && den < (Int(1) << 53))
        return num.convert_to<double>() / den.convert_to<double>();
    return std::exp2(log2_rat(r));
}

inline Int ipow(Int base, unsigned long long e) {
    Int r = 1;
    while (e) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

inline Int factorial(unsigned n) {
    Int r = 1;
    for (unsigned i = 2; i <= n; ++i) r *= i;
    return r;
}

inline Int binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    Int r = 1;
    for (unsigned i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

// d! / prod(c_i!) for a composition c of d.
inline Int multinomial(unsigned d, const std::vector<int> &parts) {
    Int r = factorial(d);
    unsigned sum = 0;
    for (int p : parts) {
        if (p < 0) throw std::invalid_argument("multinomial: negative part");
        r /= factorial(unsigned(p));
        sum += unsigned(p);
    }
    if (sum != d) throw std::invalid_argument("multinomial: parts do not sum to d");
    return r;
}

// Number of surjections from a d-set onto an a-set (inclusion-exclusion).
inline Int surjections(unsigned d, unsigned a) {
    Int r = 0;
    for (unsigned i = 0; i <= a; ++i) {
        Int term = binomial(a, i) * ipow(Int(a - i), d);
        if (i & 1) r -= term; else r += term;
    }
    return r;
}

// floor(x^(1/q)) for x >= 0, exact (binary search on the answer).
inline Int iroot_floor(const Int &x, unsigned q) {
    if (q == 0) throw std::invalid_argument("iroot_floor: zeroth root");
    if (x < 0) throw std::invalid_argument("iroot_floor: negative radicand");
    if (x < 2 || q == 1) return x;
    const unsigned bits = boost::multiprecision::msb(x) + 1;
    Int lo = 1, hi = Int(1) << (bits / q + 1);
    while (lo < hi) { // invariant: lo^q <= x < hi^q
        Int mid = (lo + hi + 1) / 2;
        if (ipow(mid, q) <= x) lo = mid; else hi = mid - 1;
    }
    return lo;
}

// lcm with an explicit cap so pathological root denominators fail loudly
// instead of producing astronomically large exponents.
inline unsigned long long lcm_checked(unsigned long long a, unsigned long long b,
                                      unsigned long long cap) {
    unsigned long long g = std::gcd(a, b);
    unsigned long long l = a / g;
    if (l > cap / b) throw std::invalid_argument("lcm_checked: exponent cap exceeded");
    l *= b;
    if (l > cap) throw std::invalid_argument("lcm_checked: exponent cap exceeded");
    return l;
}

// FNV-1a, used to give counting results a cheap input-identity fingerprint.
inline std::uint64_t fnv1a(const std::string &s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

} // namespace cb
