#pragma once

// The real quadratic ring Q(sqrt(3)): values r + s*sqrt(3) with exact
// arithmetic and exact sign determination.

#include <string>

#include "elag/rational.hpp"

namespace elag {

struct SqrtThree {
    Rat r, s;  // value = r + s*sqrt(3)

    SqrtThree() : r(0), s(0) {}
    SqrtThree(Rat r_, Rat s_) : r(std::move(r_)), s(std::move(s_)) {}
    explicit SqrtThree(const Rat& rational) : r(rational), s(0) {}
    explicit SqrtThree(long rational) : r(rational), s(0) {}

    bool is_rational() const { return s == 0; }
    bool is_zero() const { return r == 0 && s == 0; }

    SqrtThree conj() const { return {r, -s}; }  // r - s*sqrt(3)
    Rat field_norm() const { return r * r - 3 * s * s; }
};

inline SqrtThree operator+(const SqrtThree& a, const SqrtThree& b) { return {a.r + b.r, a.s + b.s}; }
inline SqrtThree operator-(const SqrtThree& a, const SqrtThree& b) { return {a.r - b.r, a.s - b.s}; }
inline SqrtThree operator-(const SqrtThree& a) { return {-a.r, -a.s}; }

inline SqrtThree operator*(const SqrtThree& a, const SqrtThree& b) {
    return {a.r * b.r + 3 * a.s * b.s, a.r * b.s + a.s * b.r};
}

inline SqrtThree operator*(const SqrtThree& a, const Rat& q) { return {a.r * q, a.s * q}; }
inline SqrtThree operator*(const Rat& q, const SqrtThree& a) { return a * q; }

inline bool operator==(const SqrtThree& a, const SqrtThree& b) { return a.r == b.r && a.s == b.s; }
inline bool operator!=(const SqrtThree& a, const SqrtThree& b) { return !(a == b); }

// Exact sign of r + s*sqrt(3): when r and s disagree in sign, the larger of
// r^2 and 3s^2 decides.
inline int sign(const SqrtThree& v) {
    const int sr = sign(v.r), ss = sign(v.s);
    if (ss == 0) return sr;
    if (sr == 0) return ss;
    if (sr == ss) return sr;
    const int cmp = sign(Rat(v.r * v.r - 3 * v.s * v.s));
    if (cmp == 0) return 0;  // unreachable: sqrt(3) is irrational
    return cmp > 0 ? sr : ss;
}

inline SqrtThree inverse(const SqrtThree& v) {
    const Rat n = v.field_norm();
    if (n == 0) throw std::domain_error("division by zero in Q(sqrt3)");
    return {v.r / n, -v.s / n};
}

inline SqrtThree operator/(const SqrtThree& a, const SqrtThree& b) { return a * inverse(b); }

inline bool operator<(const SqrtThree& a, const SqrtThree& b) { return sign(a - b) < 0; }
inline bool operator>(const SqrtThree& a, const SqrtThree& b) { return sign(a - b) > 0; }
inline bool operator<=(const SqrtThree& a, const SqrtThree& b) { return sign(a - b) <= 0; }
inline bool operator>=(const SqrtThree& a, const SqrtThree& b) { return sign(a - b) >= 0; }

inline std::string to_string(const SqrtThree& v) {
    if (v.s == 0) return to_string(v.r);
    std::string out;
    if (v.r != 0) out += to_string(v.r);
    if (sign(v.s) >= 0 && !out.empty()) out += "+";
    if (v.s == 1) {
    } else if (v.s == -1) {
        out += "-";
    } else {
        out += to_string(v.s) + "*";
    }
    out += "sqrt(3)";
    return out;
}

}  // namespace elag
