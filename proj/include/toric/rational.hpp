#pragma once

#include <gmpxx.h>
#include <cstdint>
#include <string>

namespace toric {

// Exact arithmetic for the series engine. GMP handles the unbounded
// numerators/denominators that show up in the flow integrals.
using BigInt = mpz_class;
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational rat_str(const std::string& num, const std::string& den = "1") {
    Rational q(BigInt(num), BigInt(den));
    q.canonicalize();
    return q;
}

inline double to_double(const Rational& q) { return q.get_d(); }

inline long double to_long_double(const Rational& q) {
    // mpq_get_d rounds to double; split num/den for the extra bits.
    mpf_class f(q, 128);
    long double out = 0.0L;
    mp_exp_t exp;
    std::string digits = f.get_str(exp, 10, 30);
    bool neg = !digits.empty() && digits[0] == '-';
    if (neg) digits.erase(0, 1);
    for (char c : digits) out = out * 10.0L + (c - '0');
    long double scale = powl(10.0L, static_cast<long double>(exp) -
                                        static_cast<long double>(digits.size()));
    out *= scale;
    return neg ? -out : out;
}

inline std::string num_str(const Rational& q) { return q.get_num().get_str(); }
inline std::string den_str(const Rational& q) { return q.get_den().get_str(); }

inline std::string rat_to_string(const Rational& q) {
    if (q.get_den() == 1) return num_str(q);
    return num_str(q) + "/" + den_str(q);
}

}  // namespace toric
