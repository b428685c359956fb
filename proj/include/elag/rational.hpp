#pragma once

// Arbitrary-precision integers and rationals, backed by GMP. Rationals are
// kept in lowest terms with positive denominator (mpq_class canonical form),
// which is exactly the BigRat contract used throughout.

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "elag/errors.hpp"

namespace elag {

using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(Int num, Int den) {
    Rat q(std::move(num), std::move(den));
    q.canonicalize();
    return q;
}

inline int sign(const Rat& q) { return sgn(q); }
inline int sign(const Int& n) { return sgn(n); }

inline std::string to_string(const Int& n) { return n.get_str(); }

inline std::string to_string(const Rat& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

// Parses "p" or "p/q"; q must be nonzero.
inline Rat parse_rat(const std::string& s) {
    const auto slash = s.find('/');
    try {
        // base forced to 10: the gmp string constructor would otherwise read
        // a leading 0 as octal
        if (slash == std::string::npos) return Rat(Int(s, 10));
        Int num(s.substr(0, slash), 10);
        Int den(s.substr(slash + 1), 10);
        if (den == 0) throw ParseError("zero denominator: " + s);
        return make_rat(num, den);
    } catch (const std::invalid_argument&) {
        throw ParseError("not a rational: " + s);
    }
}

// Floor of the integer square root; n must be nonnegative.
inline Int isqrt(const Int& n) {
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

inline bool is_perfect_square(const Int& n) {
    return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

// Lucas-style companion sequences c_k, d_k with c_0=1, d_0=2 and step
// (c,d) -> (5c-d, 9c-2d). They satisfy 9c^2 - 7cd + d^2 = (-1)^(k+1) and
// give the closed form for powers of the digit-2 Moebius matrix times a
// digit-3/4 matrix.
struct LucasCD {
    Int c, d;
};

inline LucasCD lucas_cd(unsigned k) {
    LucasCD v{1, 2};
    for (unsigned i = 0; i < k; ++i) {
        Int c = 5 * v.c - v.d;
        Int d = 9 * v.c - 2 * v.d;
        v.c = std::move(c);
        v.d = std::move(d);
    }
    return v;
}

// U_1=1, U_2=3, U_{n+1} = 3U_n + U_{n-1}; (lambda^n - lambdabar^n)^2 = 13*U_n^2
// for lambda = (3+sqrt(13))/2. Extended to n=0 (U_0=0) for convenience.
inline Int lucas_u(unsigned n) {
    if (n == 0) return 0;
    Int a = 0, b = 1;  // U_0, U_1
    for (unsigned i = 1; i < n; ++i) {
        Int next = 3 * b + a;
        a = std::move(b);
        b = std::move(next);
    }
    return b;
}

}  // namespace elag
