#pragma once

// 2x2 matrices over Q(sqrt3) acting on the half-line [0, inf] by Moebius
// transformations: the conjugate picture of the Romik system under the
// stereographic norm. Products of the digit matrices N_1..N_5 always have
// rational-integer diagonal and integer*sqrt(3) off-diagonal entries, with
// determinant +-1.

#include <array>

#include "elag/sqrt3.hpp"

namespace elag {

struct Mat2S {
    SqrtThree a, b, c, d;  // [[a, b], [c, d]]

    static Mat2S identity() {
        return {SqrtThree(Rat(1)), SqrtThree(), SqrtThree(), SqrtThree(Rat(1))};
    }

    SqrtThree trace() const { return a + d; }
    SqrtThree det() const { return a * d - b * c; }
    Mat2S transpose() const { return {a, c, b, d}; }
};

inline bool operator==(const Mat2S& x, const Mat2S& y) {
    return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
}

inline Mat2S operator*(const Mat2S& x, const Mat2S& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
            x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

// N_d for d = 1..5: the Moebius branches inverse to the five-branch line map.
inline const Mat2S& mat_N(int d) {
    static const std::array<Mat2S, 6> n = [] {
        const SqrtThree zero, one(Rat(1)), two(Rat(2)), rt3(Rat(0), Rat(1));
        std::array<Mat2S, 6> out{};
        out[1] = {one, rt3, zero, one};
        out[2] = {two, rt3, rt3, one};
        out[3] = {two, rt3, rt3, two};
        out[4] = {one, rt3, rt3, two};
        out[5] = {one, zero, rt3, one};
        return out;
    }();
    if (d < 1 || d > 5) throw IndexOutOfRangeError("digit out of range");
    return n[d];
}

}  // namespace elag
