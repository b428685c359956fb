#pragma once

// One square-root layer over Q(sqrt(3)): values x + y*sqrt(delta) with
// x, y in Q(sqrt3) and rational delta >= 0. Everything the curve's norms and
// Lagrange numbers need lives in such a field Q(sqrt3)(sqrt(delta)).
//
// Normalization collapses perfect-square and 3*(perfect-square) radicands
// into Q(sqrt3) itself and extracts small square factors, so e.g.
// sqrt(12) = 2*sqrt(3) and sqrt(52) = 2*sqrt(13) are canonical. Values built
// from one word/orbit always share a single delta tag; sums across different
// tags raise MixedFieldError and callers fall back to interval comparison.

#include <array>
#include <string>
#include <utility>

#include "elag/errors.hpp"
#include "elag/sqrt3.hpp"

namespace elag {

namespace detail {

// Removes the largest easily-found square factor: n = s^2 * n_out.
// Small-prime trial division plus whole-remainder perfect-square checks;
// a huge square factor hiding behind a >313^2 prime square stays put, which
// only costs canonicity across independently built values, never correctness.
inline Int extract_square_part(Int& n) {
    static constexpr std::array<unsigned, 65> kPrimes = {
        2,   3,   5,   7,   11,  13,  17,  19,  23,  29,  31,  37,  41,
        43,  47,  53,  59,  61,  67,  71,  73,  79,  83,  89,  97,  101,
        103, 107, 109, 113, 127, 131, 137, 139, 149, 151, 157, 163, 167,
        173, 179, 181, 191, 193, 197, 199, 211, 223, 227, 229, 233, 239,
        241, 251, 257, 263, 269, 271, 277, 281, 283, 293, 307, 311, 313};
    Int s = 1;
    for (unsigned p : kPrimes) {
        const Int pp = Int(p) * p;
        while (mpz_divisible_p(n.get_mpz_t(), pp.get_mpz_t())) {
            n /= pp;
            s *= p;
        }
        if (n < pp) break;
    }
    if (n > 1 && is_perfect_square(n)) {
        s *= isqrt(n);
        n = 1;
    } else if (n > 3 && mpz_divisible_ui_p(n.get_mpz_t(), 3)) {
        const Int third = n / 3;
        if (is_perfect_square(third)) {
            s *= isqrt(third);
            n = 3;
        }
    }
    return s;
}

}  // namespace detail

struct Surd {
    SqrtThree x, y;  // value = x + y*sqrt(delta)
    Rat delta;       // >= 0; zero iff the value lies in Q(sqrt3)

    Surd() : x(), y(), delta(0) {}
    explicit Surd(SqrtThree v) : x(std::move(v)), y(), delta(0) {}
    explicit Surd(const Rat& q) : x(q), y(), delta(0) {}
    explicit Surd(long n) : x(Rat(n)), y(), delta(0) {}

    Surd(SqrtThree x_, SqrtThree y_, Rat delta_)
        : x(std::move(x_)), y(std::move(y_)), delta(std::move(delta_)) {
        normalize();
    }

    bool in_base_field() const { return y.is_zero() || delta == 0; }
    bool is_rational() const { return in_base_field() && x.is_rational(); }
    bool is_zero() const { return in_base_field() && x.is_zero(); }

    // sqrt(delta)-conjugate: x - y*sqrt(delta).
    Surd conj() const {
        Surd v;
        v.x = x;
        v.y = -y;
        v.delta = delta;
        return v;
    }

  private:
    void normalize() {
        if (sign(delta) < 0) throw std::domain_error("negative radicand in Surd");
        if (y.is_zero() || delta == 0) {
            y = SqrtThree();
            delta = 0;
            return;
        }
        // sqrt(p/q) = sqrt(p*q)/q.
        Int radicand = delta.get_num() * delta.get_den();
        SqrtThree scale(make_rat(1, delta.get_den()));
        const Int square = detail::extract_square_part(radicand);
        if (square != 1) scale = scale * Rat(square);
        if (mpz_divisible_ui_p(radicand.get_mpz_t(), 3)) {
            radicand /= 3;
            scale = scale * SqrtThree(Rat(0), Rat(1));  // fold sqrt(3) into Q(sqrt3)
        }
        y = y * scale;
        if (radicand == 1) {
            x = x + y;
            y = SqrtThree();
            delta = 0;
        } else {
            delta = Rat(radicand);
        }
    }
};

inline Surd sqrt_rat(const Rat& q) { return Surd(SqrtThree(), SqrtThree(Rat(1)), q); }

inline bool same_field(const Surd& a, const Surd& b) {
    return a.delta == 0 || b.delta == 0 || a.delta == b.delta;
}

namespace detail {
inline Rat merged_delta(const Surd& a, const Surd& b) {
    if (!same_field(a, b))
        throw MixedFieldError("Surd fields differ: sqrt(" + to_string(a.delta) + ") vs sqrt(" +
                              to_string(b.delta) + ")");
    return a.delta != 0 ? a.delta : b.delta;
}
}  // namespace detail

inline Surd operator+(const Surd& a, const Surd& b) {
    return Surd(a.x + b.x, a.y + b.y, detail::merged_delta(a, b));
}

inline Surd operator-(const Surd& a, const Surd& b) {
    return Surd(a.x - b.x, a.y - b.y, detail::merged_delta(a, b));
}

inline Surd operator-(const Surd& a) {
    Surd v;
    v.x = -a.x;
    v.y = -a.y;
    v.delta = a.delta;
    return v;
}

inline Surd operator*(const Surd& a, const Surd& b) {
    const Rat delta = detail::merged_delta(a, b);
    return Surd(a.x * b.x + (a.y * b.y) * delta, a.x * b.y + a.y * b.x, delta);
}

inline Surd operator*(const Surd& a, const SqrtThree& c) { return Surd(a.x * c, a.y * c, a.delta); }
inline Surd operator*(const SqrtThree& c, const Surd& a) { return a * c; }
inline Surd operator*(const Surd& a, const Rat& q) { return a * SqrtThree(q); }

// Exact sign via two nested sign tests: when x and y*sqrt(delta) disagree in
// sign, compare x^2 against y^2*delta inside Q(sqrt3).
inline int surd_sign(const Surd& v) {
    if (v.in_base_field()) return sign(v.x);
    const int sx = sign(v.x), sy = sign(v.y);
    if (sx == 0) return sy;
    if (sx == sy) return sx;
    const int cmp = sign(v.x * v.x - (v.y * v.y) * v.delta);
    if (cmp == 0) return 0;  // delta is not a square in Q(sqrt3) after normalization
    return cmp > 0 ? sx : sy;
}

inline int sign(const Surd& v) { return surd_sign(v); }

inline Surd inverse(const Surd& v) {
    if (v.in_base_field()) return Surd(inverse(v.x));
    const SqrtThree denom = v.x * v.x - (v.y * v.y) * v.delta;  // (x+y√Δ)(x−y√Δ)
    const SqrtThree inv_denom = inverse(denom);
    return Surd(v.x * inv_denom, -(v.y * inv_denom), v.delta);
}

inline Surd operator/(const Surd& a, const Surd& b) { return a * inverse(b); }

inline bool operator==(const Surd& a, const Surd& b) {
    if (!same_field(a, b)) return false;
    return a.x == b.x && a.y == b.y && (a.in_base_field() == b.in_base_field());
}
inline bool operator!=(const Surd& a, const Surd& b) { return !(a == b); }

inline bool operator<(const Surd& a, const Surd& b) { return surd_sign(a - b) < 0; }
inline bool operator>(const Surd& a, const Surd& b) { return surd_sign(a - b) > 0; }
inline bool operator<=(const Surd& a, const Surd& b) { return surd_sign(a - b) <= 0; }
inline bool operator>=(const Surd& a, const Surd& b) { return surd_sign(a - b) >= 0; }

inline std::string to_string(const Surd& v) {
    if (v.in_base_field()) return to_string(v.x);
    std::string out;
    if (!v.x.is_zero()) out += to_string(v.x) + " + ";
    out += "(" + to_string(v.y) + ")*sqrt(" + to_string(v.delta) + ")";
    return out;
}

// Non-certified double rendering for reports; exact decisions never use it.
inline double to_double(const Rat& q) { return q.get_d(); }
inline double to_double(const SqrtThree& v) { return v.r.get_d() + v.s.get_d() * 1.7320508075688772935; }
inline double to_double(const Surd& v) {
    double out = to_double(v.x);
    if (!v.in_base_field()) out += to_double(v.y) * std::sqrt(v.delta.get_d());
    return out;
}

// The extended half-line [0, +inf]: norms of curve points, with INFINITY at
// the (1,0) vertex.
struct ExtNorm {
    bool infinite = false;
    Surd value;  // meaningful iff !infinite

    static ExtNorm inf() {
        ExtNorm n;
        n.infinite = true;
        return n;
    }
    static ExtNorm finite(Surd v) {
        ExtNorm n;
        n.value = std::move(v);
        return n;
    }
};

// 1/t with the conventions 1/0 = inf, 1/inf = 0.
inline ExtNorm reciprocal(const ExtNorm& t) {
    if (t.infinite) return ExtNorm::finite(Surd(0L));
    if (t.value.is_zero()) return ExtNorm::inf();
    return ExtNorm::finite(inverse(t.value));
}

inline ExtNorm operator+(const ExtNorm& a, const ExtNorm& b) {
    if (a.infinite || b.infinite) return ExtNorm::inf();
    return ExtNorm::finite(a.value + b.value);
}

inline bool operator==(const ExtNorm& a, const ExtNorm& b) {
    if (a.infinite || b.infinite) return a.infinite == b.infinite;
    return a.value == b.value;
}

inline std::string to_string(const ExtNorm& t) {
    return t.infinite ? "inf" : to_string(t.value);
}

}  // namespace elag
