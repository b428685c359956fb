#pragma once

// The quadratic space Q(x) = x1^2 + x1*x2 + x2^2 - x3^2, its bilinear
// pairing, and the integral matrices driving the Romik system: the
// involution H, the rotations/reflections U_1..U_5 of the hexagonal lattice,
// and the tree/step matrices M_d = H*U_d with their inverses.
//
// The constant entries are literals; an init-time self-check re-derives
// M_d = H*U_d, M_d*M_d^{-1} = I, H*H = I and the determinant signs, so a
// typo cannot survive construction.

#include <array>
#include <cstdlib>

#include "elag/rational.hpp"

namespace elag {

struct Vec3Z {
    Int x1, x2, x3;
};

inline bool operator==(const Vec3Z& a, const Vec3Z& b) {
    return a.x1 == b.x1 && a.x2 == b.x2 && a.x3 == b.x3;
}

struct Mat3Z {
    std::array<Int, 9> m;  // row-major

    static Mat3Z identity() { return {{1, 0, 0, 0, 1, 0, 0, 0, 1}}; }

    const Int& at(int r, int c) const { return m[3 * r + c]; }

    Int det() const {
        return m[0] * (m[4] * m[8] - m[5] * m[7]) - m[1] * (m[3] * m[8] - m[5] * m[6]) +
               m[2] * (m[3] * m[7] - m[4] * m[6]);
    }
};

inline bool operator==(const Mat3Z& a, const Mat3Z& b) { return a.m == b.m; }

inline Mat3Z operator*(const Mat3Z& a, const Mat3Z& b) {
    Mat3Z out;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            Int acc = 0;
            for (int k = 0; k < 3; ++k) acc += a.at(i, k) * b.at(k, j);
            out.m[3 * i + j] = std::move(acc);
        }
    return out;
}

inline Vec3Z operator*(const Mat3Z& a, const Vec3Z& v) {
    return {a.m[0] * v.x1 + a.m[1] * v.x2 + a.m[2] * v.x3,
            a.m[3] * v.x1 + a.m[4] * v.x2 + a.m[5] * v.x3,
            a.m[6] * v.x1 + a.m[7] * v.x2 + a.m[8] * v.x3};
}

inline Int quadratic_form(const Vec3Z& v) {
    return v.x1 * v.x1 + v.x1 * v.x2 + v.x2 * v.x2 - v.x3 * v.x3;
}

// <x,y> = x1*y1 + (x1*y2 + x2*y1)/2 + x2*y2 - x3*y3; integer or half-integer.
inline Rat pairing(const Vec3Z& x, const Vec3Z& y) {
    const Int twice = 2 * x.x1 * y.x1 + x.x1 * y.x2 + x.x2 * y.x1 + 2 * x.x2 * y.x2 - 2 * x.x3 * y.x3;
    return make_rat(twice, 2);
}

// d-hat swaps 1<->5 and fixes 2,3,4; it indexes the inverse step M_d^{-1} = U_{d-hat}*H.
inline int hat_digit(int d) { return d == 1 ? 5 : d == 5 ? 1 : d; }

// d-vee is the reflection digit map d -> 6-d.
inline int vee_digit(int d) { return 6 - d; }

namespace detail {

struct RomikMatrices {
    Mat3Z H;
    std::array<Mat3Z, 6> U, M, Minv;  // index 1..5 used

    RomikMatrices() {
        H = Mat3Z{{-4, -3, 4, -3, -4, 4, -6, -6, 7}};
        U[1] = Mat3Z{{0, -1, 0, 1, 1, 0, 0, 0, 1}};
        U[2] = Mat3Z{{-1, -1, 0, 0, 1, 0, 0, 0, 1}};
        U[3] = Mat3Z{{-1, 0, 0, 0, -1, 0, 0, 0, 1}};
        U[4] = Mat3Z{{1, 0, 0, -1, -1, 0, 0, 0, 1}};
        U[5] = Mat3Z{{1, 1, 0, -1, 0, 0, 0, 0, 1}};
        M[1] = Mat3Z{{-3, 1, 4, -4, -1, 4, -6, 0, 7}};
        M[2] = Mat3Z{{4, 1, 4, 3, -1, 4, 6, 0, 7}};
        M[3] = Mat3Z{{4, 3, 4, 3, 4, 4, 6, 6, 7}};
        M[4] = Mat3Z{{-1, 3, 4, 1, 4, 4, 0, 6, 7}};
        M[5] = Mat3Z{{-1, -4, 4, 1, -3, 4, 0, -6, 7}};
        for (int d = 1; d <= 5; ++d) Minv[d] = U[hat_digit(d)] * H;

        const Mat3Z I = Mat3Z::identity();
        if (!(H * H == I)) fail();
        for (int d = 1; d <= 5; ++d) {
            if (!(M[d] == H * U[d])) fail();
            if (!(M[d] * Minv[d] == I)) fail();
            if (!(U[d] * U[hat_digit(d)] == I)) fail();
            const Int want = (d % 2 == 1) ? 1 : -1;
            if (M[d].det() != want) fail();
        }
    }

    [[noreturn]] static void fail() {
        throw std::logic_error("Romik matrix constants failed self-check");
    }
};

inline const RomikMatrices& romik_matrices() {
    static const RomikMatrices mats;
    return mats;
}

}  // namespace detail

inline const Mat3Z& mat_H() { return detail::romik_matrices().H; }

inline const Mat3Z& mat_U(int d) {
    if (d < 1 || d > 5) throw IndexOutOfRangeError("digit out of range");
    return detail::romik_matrices().U[d];
}

inline const Mat3Z& mat_M(int d) {
    if (d < 1 || d > 5) throw IndexOutOfRangeError("digit out of range");
    return detail::romik_matrices().M[d];
}

inline const Mat3Z& mat_M_inv(int d) {
    if (d < 1 || d > 5) throw IndexOutOfRangeError("digit out of range");
    return detail::romik_matrices().Minv[d];
}

inline const Vec3Z kU10{1, 0, 1};  // the (1,0) vertex triple
inline const Vec3Z kU01{0, 1, 1};  // the (0,1) vertex triple
inline const Vec3Z kVQ{0, 0, 1};   // height functional: Ht(z) = -<z, kVQ>

}  // namespace elag
