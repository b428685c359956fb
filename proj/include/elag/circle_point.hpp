#pragma once

// Rational points (a/c, b/c) on the curve x^2 + xy + y^2 = 1, first sextant,
// stored as primitive Eisenstein triples (a, b, c) with a^2+ab+b^2 = c^2.

#include <string>

#include "elag/rational.hpp"
#include "elag/vec_mat.hpp"

namespace elag {

struct CirclePointQ {
    Int a, b, c;

    Vec3Z vec() const { return {a, b, c}; }
    std::string str() const {
        return "(" + a.get_str() + "/" + c.get_str() + ", " + b.get_str() + "/" + c.get_str() + ")";
    }
};

inline bool operator==(const CirclePointQ& p, const CirclePointQ& q) {
    return p.a == q.a && p.b == q.b && p.c == q.c;
}
inline bool operator!=(const CirclePointQ& p, const CirclePointQ& q) { return !(p == q); }

// Orders by height then first coordinate: the canonical emission order.
inline bool operator<(const CirclePointQ& p, const CirclePointQ& q) {
    if (p.c != q.c) return p.c < q.c;
    if (p.a != q.a) return p.a < q.a;
    return p.b < q.b;
}

// Normalizes an integral representative (sign, gcd) and validates the curve
// and sextant constraints.
inline CirclePointQ make_point(Int a, Int b, Int c) {
    if (c < 0) {
        a = -a;
        b = -b;
        c = -c;
    }
    if (c == 0) throw std::invalid_argument("triple with zero height");
    Int g = gcd(gcd(a, b), c);
    if (g > 1) {
        a /= g;
        b /= g;
        c /= g;
    }
    if (a < 0 || b < 0) throw std::invalid_argument("point outside the first sextant");
    if (a * a + a * b + b * b != c * c)
        throw std::invalid_argument("triple not on the curve: (" + a.get_str() + "," + b.get_str() +
                                    "," + c.get_str() + ")");
    return {std::move(a), std::move(b), std::move(c)};
}

inline CirclePointQ point_from_vec(const Vec3Z& v) { return make_point(v.x1, v.x2, v.x3); }

}  // namespace elag
