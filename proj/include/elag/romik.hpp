#pragma once

// The Romik dynamical system on the curve x^2+xy+y^2=1 (first sextant):
// digit extraction, the inverse-matrix step, rational digit expansions,
// cylinder-set boundaries, Berggren-tree enumeration of Eisenstein triples,
// and the conjugate Moebius system on [0, inf] via the stereographic norm.

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "elag/circle_point.hpp"
#include "elag/mat2.hpp"
#include "elag/surd.hpp"
#include "elag/words.hpp"

namespace elag {

// Romik digit(s) of a point, by exact cross-multiplied comparisons of
// x = a/c against the breakpoints 3/7 < 7/13 < 8/13 < 5/7. Exactly the four
// interior breakpoints yield two digits.
inline std::vector<Digit> digit_of(const CirclePointQ& p) {
    std::vector<Digit> out;
    const Int s7 = 7 * p.a, s13 = 13 * p.a;
    if (s7 >= 5 * p.c) out.push_back(1);
    if (s13 >= 8 * p.c && s7 <= 5 * p.c) out.push_back(2);
    if (s13 >= 7 * p.c && s13 <= 8 * p.c) out.push_back(3);
    if (s7 >= 3 * p.c && s13 <= 7 * p.c) out.push_back(4);
    if (s7 <= 3 * p.c) out.push_back(5);
    return out;
}

// One step of the Romik map along digit d: the point represented by
// M_d^{-1} * (a,b,c), re-normalized to a primitive nonnegative triple.
inline CirclePointQ romik_step(const CirclePointQ& p, Digit d) {
    const auto digits = digit_of(p);
    if (std::find(digits.begin(), digits.end(), d) == digits.end())
        throw std::invalid_argument("digit " + std::to_string(d) + " invalid at " + p.str());
    return point_from_vec(mat_M_inv(d) * p.vec());
}

// Both Romik digit expansions of a rational point. Every rational point
// other than the two vertices reaches one of the four double-expansion
// points, whose two variants are emitted; the vertices give single streams
// [1^inf] and [5^inf].
struct Expansion {
    DigitStream primary;                  // smaller branching digit (canonical)
    std::optional<DigitStream> alternate; // larger branching digit, when present
};

inline Expansion expand_rational(const CirclePointQ& start, unsigned max_steps = 100000) {
    struct Ambiguous {
        CirclePointQ point;
        Digit lo, hi;
        Digit tail;
    };
    static const std::vector<Ambiguous> kAmbiguous = {
        {make_point(5, 3, 7), 1, 2, 5},
        {make_point(8, 7, 13), 2, 3, 1},
        {make_point(7, 8, 13), 3, 4, 5},
        {make_point(3, 5, 7), 4, 5, 1},
    };
    const CirclePointQ vertex10 = make_point(1, 0, 1);
    const CirclePointQ vertex01 = make_point(0, 1, 1);

    Word digits;
    CirclePointQ p = start;
    for (unsigned step = 0; step <= max_steps; ++step) {
        if (p == vertex10) return {DigitStream(digits, {1}), std::nullopt};
        if (p == vertex01) return {DigitStream(digits, {5}), std::nullopt};
        for (const auto& amb : kAmbiguous) {
            if (p == amb.point) {
                Word lo = digits, hi = digits;
                lo.push_back(amb.lo);
                hi.push_back(amb.hi);
                return {DigitStream(lo, {amb.tail}), DigitStream(hi, {amb.tail})};
            }
        }
        const Digit d = digit_of(p).front();
        digits.push_back(d);
        p = romik_step(p, d);
    }
    throw NonTerminationError("expansion did not terminate after " + std::to_string(max_steps) +
                              " steps from " + start.str());
}

// Endpoints of the cylinder set C(d_1..d_k): images of the two vertex
// triples under M_{d_1} ... M_{d_k}.
inline std::pair<CirclePointQ, CirclePointQ> cylinder_boundaries(const Word& w) {
    Mat3Z m = Mat3Z::identity();
    for (Digit d : w) m = m * mat_M(d);
    return {point_from_vec(m * kU10), point_from_vec(m * kU01)};
}

// All primitive Eisenstein triples with height <= max_c: breadth-first
// closure of the four tree roots under left-multiplication by M_1..M_5
// (each triple is reached exactly once), plus the two vertex triples.
// Heights strictly increase along edges, so pruning at max_c is complete.
// Emission is sorted by (c, a).
inline std::vector<CirclePointQ> enumerate_triples(const Int& max_c) {
    if (max_c < 1) throw std::invalid_argument("max_c must be >= 1");
    std::vector<CirclePointQ> out;
    out.push_back(make_point(1, 0, 1));
    out.push_back(make_point(0, 1, 1));
    std::vector<Vec3Z> queue;
    for (const auto& root : {Vec3Z{8, 7, 13}, Vec3Z{3, 5, 7}, Vec3Z{5, 3, 7}, Vec3Z{7, 8, 13}})
        if (root.x3 <= max_c) queue.push_back(root);
    while (!queue.empty()) {
        const Vec3Z v = queue.back();
        queue.pop_back();
        out.push_back(point_from_vec(v));
        for (int d = 1; d <= 5; ++d) {
            Vec3Z child = mat_M(d) * v;
            if (child.x3 <= max_c) queue.push_back(std::move(child));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Stereographic norm sqrt(3)(alpha+beta-1)/(-2alpha-beta+2): order-reversing
// bijection from the arc onto [0, inf], infinite exactly at (1,0).
inline ExtNorm stereo_norm(const CirclePointQ& p) {
    const Int den = -2 * p.a - p.b + 2 * p.c;
    if (den == 0) return ExtNorm::inf();
    return ExtNorm::finite(Surd(SqrtThree(Rat(0), make_rat(p.a + p.b - p.c, den))));
}

// Moebius action of a 2x2 matrix over Q(sqrt3) on the extended half-line.
inline ExtNorm moebius_apply(const Mat2S& m, const ExtNorm& t) {
    if (t.infinite) {
        if (sign(m.c) == 0) return ExtNorm::inf();
        return ExtNorm::finite(Surd(m.a / m.c));
    }
    const Surd num = Surd(m.a) * t.value + Surd(m.b);
    const Surd den = Surd(m.c) * t.value + Surd(m.d);
    if (den.is_zero()) return ExtNorm::inf();
    return ExtNorm::finite(num / den);
}

// The five-branch line map on [0, inf], conjugate to the Romik map under
// stereo_norm. Branch thresholds: sqrt3 > 2/sqrt3 > sqrt3/2 > 1/sqrt3; at a
// threshold the smaller digit's branch is canonical. Each branch is the
// Moebius inverse of the matching N_d.
inline ExtNorm line_step(const ExtNorm& t) {
    if (t.infinite) return ExtNorm::inf();  // fixed point of the digit-1 branch
    const Surd& v = t.value;
    const Surd rt3{SqrtThree(Rat(0), Rat(1))};
    const auto at_least = [&](const Rat& r, const Rat& s) {
        return surd_sign(v - Surd(SqrtThree(r, s))) >= 0;
    };
    if (at_least(Rat(0), Rat(1))) return ExtNorm::finite(v - rt3);  // t - sqrt3
    if (at_least(Rat(0), make_rat(2, 3))) {                         // (-t+sqrt3)/(sqrt3 t-2)
        const Surd num = rt3 - v;
        const Surd den = rt3 * v - Surd(2L);
        if (den.is_zero()) return ExtNorm::inf();
        return ExtNorm::finite(num / den);
    }
    if (at_least(Rat(0), make_rat(1, 2))) {  // (2t-sqrt3)/(-sqrt3 t+2)
        const Surd num = v * Rat(2) - rt3;
        const Surd den = Surd(2L) - rt3 * v;
        return ExtNorm::finite(num / den);
    }
    if (at_least(Rat(0), make_rat(1, 3))) {  // (-2t+sqrt3)/(sqrt3 t-1)
        const Surd num = rt3 - v * Rat(2);
        const Surd den = rt3 * v - Surd(1L);
        if (den.is_zero()) return ExtNorm::inf();
        return ExtNorm::finite(num / den);
    }
    // t/(-sqrt3 t + 1)
    const Surd den = Surd(1L) - rt3 * v;
    if (den.is_zero()) return ExtNorm::inf();
    return ExtNorm::finite(v / den);
}

inline Mat2S word_matrix(const Word& w) {
    Mat2S m = Mat2S::identity();
    for (Digit d : w) {
        if (d < 1 || d > 5) throw IndexOutOfRangeError("digit out of range");
        m = m * mat_N(d);
    }
    return m;
}

// Norm of an eventually periodic stream: the attracting fixed point
// (a-d+sqrt(Tr^2-4det))/(2c) of N_period, pushed through N_preperiod as a
// Moebius map. Purely terminal tails give the vertices: ||1^inf|| = inf,
// ||5^inf|| = 0.
inline ExtNorm norm_of_stream(const DigitStream& s) {
    ExtNorm fixed;
    if (s.per == Word{1}) {
        fixed = ExtNorm::inf();
    } else if (s.per == Word{5}) {
        fixed = ExtNorm::finite(Surd(0L));
    } else {
        const Mat2S n = word_matrix(s.per);
        if (sign(n.c) == 0)
            throw DegenerateWordError("period word acts affinely: " + word_string(s.per));
        const SqrtThree tr = n.trace();
        const Surd disc = sqrt_rat(Rat((tr * tr - n.det() * Rat(4)).r));  // trace and det are rational
        const Surd num = Surd(n.a - n.d) + disc;
        fixed = ExtNorm::finite(num / Surd(n.c * Rat(2)));
    }
    return moebius_apply(word_matrix(s.pre), fixed);
}

enum class Order { Less, Equal, Greater };

// The angular order on the first-sextant arc, with (1,0) first and (0,1)
// last; implemented exactly through the order-reversing stereographic norm.
inline Order order_points(const CirclePointQ& p1, const CirclePointQ& p2) {
    if (p1 == p2) return Order::Equal;
    const ExtNorm n1 = stereo_norm(p1), n2 = stereo_norm(p2);
    if (n1.infinite) return Order::Less;
    if (n2.infinite) return Order::Greater;
    const int s = surd_sign(n1.value - n2.value);
    return s > 0 ? Order::Less : s < 0 ? Order::Greater : Order::Equal;
}

}  // namespace elag
