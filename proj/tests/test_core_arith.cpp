// Exact-arithmetic foundation: rationals, Q(sqrt3), the quadratic extension
// Surd, the integral quadratic space and its constant matrices, Lucas
// sequences, interval comparison, and decimal rendering. Oracles: independent
// closed forms, squaring, brute-force identities, and 200-bit interval
// evaluation.

#include <gtest/gtest.h>

#include <random>

#include "elag/interval.hpp"
#include "elag/mat2.hpp"
#include "elag/romik.hpp"

namespace elag {
namespace {

TEST(Rat, ParseAndRender) {
    EXPECT_EQ(parse_rat("3/4"), make_rat(3, 4));
    EXPECT_EQ(parse_rat("-6/8"), make_rat(-3, 4));
    EXPECT_EQ(parse_rat("42"), Rat(42));
    EXPECT_EQ(to_string(make_rat(25, 133)), "25/133");
    EXPECT_EQ(to_string(Rat(-7)), "-7");
    EXPECT_THROW(parse_rat("1/0"), ParseError);
    EXPECT_THROW(parse_rat("x"), ParseError);
}

TEST(Rat, LeadingZerosAreDecimal) {
    // The GMP string constructor reads base-0 by default, where a leading 0
    // means octal; the parser must force base 10.
    EXPECT_EQ(parse_rat("08"), Rat(8));
    EXPECT_EQ(parse_rat("0470/100"), make_rat(47, 10));
}

TEST(Rat, IsqrtAndPerfectSquare) {
    EXPECT_EQ(isqrt(Int(0)), 0);
    EXPECT_EQ(isqrt(Int(168)), 12);
    EXPECT_EQ(isqrt(Int(169)), 13);
    EXPECT_TRUE(is_perfect_square(Int(169)));
    EXPECT_FALSE(is_perfect_square(Int(168)));
    EXPECT_FALSE(is_perfect_square(Int(-4)));
}

// ---------------------------------------------------------------------------
// Q(sqrt3)
// ---------------------------------------------------------------------------

TEST(SqrtThree, ArithmeticAgainstConjugateOracle) {
    // (r + s*sqrt3)(r - s*sqrt3) = r^2 - 3 s^2, and products commute with
    // conjugation.
    std::mt19937 rng(7);
    std::uniform_int_distribution<long> coeff(-50, 50);
    std::uniform_int_distribution<long> den(1, 9);
    for (int i = 0; i < 200; ++i) {
        const SqrtThree a(make_rat(coeff(rng), den(rng)), make_rat(coeff(rng), den(rng)));
        const SqrtThree b(make_rat(coeff(rng), den(rng)), make_rat(coeff(rng), den(rng)));
        EXPECT_EQ((a * a.conj()).s, Rat(0));
        EXPECT_EQ((a * a.conj()).r, a.field_norm());
        EXPECT_EQ((a * b).conj(), a.conj() * b.conj());
        EXPECT_EQ((a + b).conj(), a.conj() + b.conj());
        if (a.field_norm() != 0) EXPECT_EQ(a * inverse(a), SqrtThree(Rat(1)));
    }
}

TEST(SqrtThree, ExactSign) {
    EXPECT_EQ(sign(SqrtThree(Rat(2), Rat(-1))), 1);   // 2 - sqrt3 > 0
    EXPECT_EQ(sign(SqrtThree(Rat(-2), Rat(1))), -1);  // sqrt3 - 2 < 0
    EXPECT_EQ(sign(SqrtThree(Rat(-1), Rat(1))), 1);   // sqrt3 - 1 > 0
    EXPECT_EQ(sign(SqrtThree(Rat(0), Rat(0))), 0);
    EXPECT_EQ(sign(SqrtThree(Rat(338), Rat(-195))), 1);  // 338 > 195*sqrt3
    EXPECT_EQ(sign(SqrtThree(Rat(337), Rat(-195))), -1);
}

// ---------------------------------------------------------------------------
// Surd = Q(sqrt3)(sqrt delta)
// ---------------------------------------------------------------------------

TEST(Surd, SignExamples) {
    EXPECT_EQ(surd_sign(Surd(SqrtThree(Rat(1)), SqrtThree(), Rat(13))), 1);
    // -3/2 + (1/2) sqrt13 > 0 because 13 > 9.
    EXPECT_EQ(surd_sign(Surd(SqrtThree(make_rat(-3, 2)), SqrtThree(make_rat(1, 2)), Rat(13))), 1);
    EXPECT_EQ(surd_sign(Surd(SqrtThree(make_rat(-7, 2)), SqrtThree(make_rat(1, 2)), Rat(13))), -1);
    EXPECT_EQ(surd_sign(Surd(SqrtThree(Rat(2), Rat(-1)))), 1);
    EXPECT_EQ(surd_sign(Surd(0L)), 0);
}

TEST(Surd, NormalizationCollapsesSquares) {
    EXPECT_EQ(sqrt_rat(Rat(12)), Surd(SqrtThree(Rat(0), Rat(2))));       // 2*sqrt3
    EXPECT_EQ(sqrt_rat(make_rat(9, 4)), Surd(make_rat(3, 2)));           // rational
    EXPECT_EQ(sqrt_rat(make_rat(3, 4)), Surd(SqrtThree(Rat(0), make_rat(1, 2))));
    EXPECT_EQ(sqrt_rat(Rat(0)), Surd(0L));
    const Surd s52 = sqrt_rat(Rat(52));  // 2*sqrt13
    EXPECT_EQ(s52.delta, Rat(13));
    EXPECT_EQ(s52.y, SqrtThree(Rat(2)));
    EXPECT_FALSE(s52.in_base_field());
    EXPECT_EQ(sqrt_rat(Rat(75)), Surd(SqrtThree(Rat(0), Rat(5))));       // 5*sqrt3
}

TEST(Surd, SquaringOracle) {
    // sqrt_rat(q)^2 = q for assorted radicands, including non-squarefree ones.
    for (long q : {2L, 5L, 7L, 13L, 37L, 39L, 52L, 148L, 1596L}) {
        const Surd root = sqrt_rat(Rat(q));
        EXPECT_EQ(root * root, Surd(Rat(q))) << "q = " << q;
        EXPECT_EQ(surd_sign(root), 1);
    }
    const Surd t = Surd(SqrtThree(Rat(0), make_rat(1, 6)), SqrtThree(Rat(0), make_rat(1, 6)),
                        Rat(13));  // (sqrt3 + sqrt39)/6 = (1+sqrt13)/(2 sqrt3)
    const Surd expected_sq(SqrtThree(make_rat(7, 6)), SqrtThree(make_rat(1, 6)), Rat(13));
    EXPECT_EQ(t * t, expected_sq);  // (7 + sqrt13)/6
    EXPECT_EQ(t * inverse(t), Surd(1L));
}

TEST(Surd, MixedFieldArithmeticThrows) {
    EXPECT_THROW(sqrt_rat(Rat(2)) + sqrt_rat(Rat(5)), MixedFieldError);
    EXPECT_THROW(sqrt_rat(Rat(2)) * sqrt_rat(Rat(5)), MixedFieldError);
    EXPECT_NO_THROW(sqrt_rat(Rat(2)) + Surd(Rat(5)));  // rationals join any field
}

TEST(Surd, SignAgreesWithIntervalEvaluation) {
    std::mt19937 rng(20260825);
    std::uniform_int_distribution<long> num(-1000000, 1000000);
    std::uniform_int_distribution<long> den(1, 1000);
    const long deltas[] = {2, 5, 7, 13, 21, 37, 148};
    std::uniform_int_distribution<std::size_t> which(0, std::size(deltas) - 1);
    int checked = 0;
    for (int i = 0; i < 100000; ++i) {
        const Surd v(SqrtThree(make_rat(num(rng), den(rng)), make_rat(num(rng), den(rng))),
                     SqrtThree(make_rat(num(rng), den(rng)), make_rat(num(rng), den(rng))),
                     Rat(deltas[which(rng)]));
        const int float_sign = Interval::eval(v, 200).definite_sign();
        if (float_sign == 0) continue;  // magnitude below the interval width
        ASSERT_EQ(surd_sign(v), float_sign);
        ++checked;
    }
    EXPECT_GT(checked, 90000);
}

TEST(Surd, ExtNormConventions) {
    EXPECT_EQ(reciprocal(ExtNorm::inf()), ExtNorm::finite(Surd(0L)));
    EXPECT_EQ(reciprocal(ExtNorm::finite(Surd(0L))), ExtNorm::inf());
    EXPECT_EQ(reciprocal(ExtNorm::finite(Surd(Rat(4)))), ExtNorm::finite(Surd(make_rat(1, 4))));
    EXPECT_EQ(ExtNorm::inf() + ExtNorm::finite(Surd(1L)), ExtNorm::inf());
    EXPECT_EQ(to_string(ExtNorm::inf()), "inf");
}

// ---------------------------------------------------------------------------
// Quadratic space and constant matrices
// ---------------------------------------------------------------------------

TEST(QuadraticSpace, FormAndPairingExamples) {
    EXPECT_EQ(quadratic_form({1, 0, 1}), 0);
    EXPECT_EQ(quadratic_form({8, 7, 13}), 0);
    EXPECT_EQ(quadratic_form({1, 1, 1}), 2);
    EXPECT_EQ(pairing({1, 0, 1}, {0, 1, 1}), make_rat(-1, 2));
    EXPECT_EQ(pairing({1, 0, 1}, {8, 7, 13}), make_rat(-3, 2));
    EXPECT_EQ(pairing({1, 0, 1}, {1, 0, 1}), Rat(0));
    // Polarization: <x,x> = Q(x).
    EXPECT_EQ(pairing({2, 3, 1}, {2, 3, 1}), Rat(quadratic_form({2, 3, 1})));
}

TEST(Matrices, DefiningIdentities) {
    const Mat3Z I = Mat3Z::identity();
    EXPECT_EQ(mat_H() * mat_H(), I);
    for (int d = 1; d <= 5; ++d) {
        EXPECT_EQ(mat_M(d), mat_H() * mat_U(d));
        EXPECT_EQ(mat_M(d) * mat_M_inv(d), I);
        EXPECT_EQ(mat_M_inv(d) * mat_M(d), I);
        EXPECT_EQ(mat_U(d) * mat_U(hat_digit(d)), I);
        EXPECT_EQ(mat_M(d).det(), (d % 2 == 1) ? 1 : -1);
    }
    EXPECT_THROW(mat_M(0), IndexOutOfRangeError);
    EXPECT_THROW(mat_U(6), IndexOutOfRangeError);
}

TEST(Matrices, PairingOrthogonality) {
    std::mt19937 rng(11);
    std::uniform_int_distribution<long> coord(-40, 40);
    for (int i = 0; i < 300; ++i) {
        const Vec3Z v{coord(rng), coord(rng), coord(rng)};
        const Vec3Z w{coord(rng), coord(rng), coord(rng)};
        for (int d = 1; d <= 5; ++d) {
            EXPECT_EQ(pairing(mat_M(d) * v, mat_M(d) * w), pairing(v, w));
            EXPECT_EQ(pairing(mat_H() * v, mat_H() * w), pairing(v, w));
        }
    }
}

TEST(Matrices, DigitMaps) {
    EXPECT_EQ(hat_digit(1), 5);
    EXPECT_EQ(hat_digit(5), 1);
    EXPECT_EQ(hat_digit(3), 3);
    EXPECT_EQ(vee_digit(2), 4);
    EXPECT_EQ(vee_digit(3), 3);
}

TEST(WordMatrix, PaperProducts) {
    const SqrtThree rt3(Rat(0), Rat(1));
    const Mat2S n23 = word_matrix({2, 3});
    EXPECT_EQ(n23, (Mat2S{SqrtThree(Rat(7)), rt3 * Rat(4), rt3 * Rat(3), SqrtThree(Rat(5))}));
    const Mat2S n22 = word_matrix({2, 2});
    EXPECT_EQ(n22, (Mat2S{SqrtThree(Rat(7)), rt3 * Rat(3), rt3 * Rat(3), SqrtThree(Rat(4))}));
    const Mat2S n224 = word_matrix({2, 2, 4});
    EXPECT_EQ(n224, (Mat2S{SqrtThree(Rat(16)), rt3 * Rat(13), rt3 * Rat(7), SqrtThree(Rat(17))}));
    const Mat2S n24 = word_matrix({2, 4});
    EXPECT_EQ(n24, (Mat2S{SqrtThree(Rat(5)), rt3 * Rat(4), rt3 * Rat(2), SqrtThree(Rat(5))}));
    EXPECT_EQ(word_matrix({}), Mat2S::identity());
}

TEST(WordMatrix, CheckerboardAndUnitDeterminant) {
    std::mt19937 rng(13);
    std::uniform_int_distribution<int> len(1, 20);
    std::uniform_int_distribution<int> digit(1, 5);
    for (int i = 0; i < 10000; ++i) {
        Word w(static_cast<std::size_t>(len(rng)));
        int even_digits = 0;
        for (Digit& d : w) {
            d = digit(rng);
            if (d % 2 == 0) ++even_digits;
        }
        const Mat2S m = word_matrix(w);
        ASSERT_EQ(m.a.s, Rat(0));
        ASSERT_EQ(m.d.s, Rat(0));
        ASSERT_EQ(m.b.r, Rat(0));
        ASSERT_EQ(m.c.r, Rat(0));
        ASSERT_EQ(m.a.r.get_den(), 1);
        ASSERT_EQ(m.b.s.get_den(), 1);
        const SqrtThree det = m.det();
        ASSERT_TRUE(det.is_rational());
        ASSERT_EQ(det.r, (even_digits % 2 == 0) ? Rat(1) : Rat(-1));
    }
}

// ---------------------------------------------------------------------------
// Lucas sequences
// ---------------------------------------------------------------------------

TEST(Lucas, CdSequenceAndQuadraticIdentity) {
    EXPECT_EQ(lucas_cd(0).c, 1);
    EXPECT_EQ(lucas_cd(0).d, 2);
    EXPECT_EQ(lucas_cd(1).c, 3);
    EXPECT_EQ(lucas_cd(1).d, 5);
    EXPECT_EQ(lucas_cd(2).c, 10);
    EXPECT_EQ(lucas_cd(2).d, 17);
    for (unsigned k = 0; k <= 200; ++k) {
        const LucasCD v = lucas_cd(k);
        const Int lhs = 9 * v.c * v.c - 7 * v.c * v.d + v.d * v.d;
        EXPECT_EQ(lhs, (k % 2 == 0) ? -1 : 1) << "k = " << k;
    }
}

TEST(Lucas, CdMatchesWordMatrices) {
    // c_k and d_k package N_2^k N_3 and N_2^k N_4 products: spot-check the two
    // identities quoted for k = 1, 2 against direct matrix products.
    const Mat2S n23 = word_matrix({2, 3});
    EXPECT_EQ(n23.c.s, Rat(lucas_cd(1).c));  // lower-left = 3*sqrt3
    EXPECT_EQ(n23.d.r, Rat(lucas_cd(1).d));  // lower-right = 5
    const Mat2S n224 = word_matrix({2, 2, 4});
    EXPECT_EQ(n224.c.s, Rat(7));
    EXPECT_EQ(n224.d.r, Rat(lucas_cd(2).d));  // 17
}

TEST(Lucas, USequence) {
    const long expected[] = {0, 1, 3, 10, 33, 109, 360, 1189};
    for (unsigned n = 0; n < std::size(expected); ++n) EXPECT_EQ(lucas_u(n), expected[n]);
    for (unsigned n = 2; n <= 60; ++n)
        EXPECT_EQ(lucas_u(n + 1), 3 * lucas_u(n) + lucas_u(n - 1));
    // (lambda^n - lambdabar^n)^2 = 13 U_n^2 with lambda lambdabar = -1,
    // lambda + lambdabar = 3, i.e. U_n^2 checks out through the recurrence's
    // Binet form: verify via the identity U_{n+1} U_{n-1} - U_n^2 = (-1)^n.
    for (unsigned n = 1; n <= 60; ++n) {
        const Int lhs = lucas_u(n + 1) * lucas_u(n - 1) - lucas_u(n) * lucas_u(n);
        EXPECT_EQ(lhs, (n % 2 == 0) ? 1 : -1);
    }
}

// ---------------------------------------------------------------------------
// Interval comparison and decimal rendering
// ---------------------------------------------------------------------------

TEST(Intervals, CrossFieldComparison) {
    EXPECT_EQ(cross_compare(sqrt_rat(Rat(2)), sqrt_rat(Rat(5))), std::optional<int>(-1));
    // sqrt13 vs 1 + sqrt7: 3.6056 < 3.6458
    const Surd lhs = sqrt_rat(Rat(13));
    const Surd rhs = Surd(1L) + sqrt_rat(Rat(7));
    EXPECT_EQ(cross_compare(lhs, rhs), std::optional<int>(-1));
    // Same-field comparisons stay exact.
    EXPECT_EQ(cross_compare(sqrt_rat(Rat(13)), sqrt_rat(Rat(13))), std::optional<int>(0));
    // A 1e-12-ish split across fields still separates.
    EXPECT_EQ(cross_compare(sqrt_rat(Rat(2)), sqrt_rat(make_rat(200000000001, 100000000000))),
              std::optional<int>(-1));
}

TEST(Rendering, ExactRationals) {
    EXPECT_EQ(render_decimal(Surd(make_rat(1, 2)), 10), "0.5000000000");
    EXPECT_EQ(render_decimal(Surd(make_rat(1, 3)), 5), "0.33333");
    EXPECT_EQ(render_decimal(Surd(make_rat(2, 3)), 5), "0.66667");
    EXPECT_EQ(render_decimal(Surd(make_rat(-2, 3)), 5), "-0.66667");
    // Round half away from zero.
    EXPECT_EQ(render_decimal(Surd(make_rat(1, 4)), 1), "0.3");
    EXPECT_EQ(render_decimal(Surd(make_rat(-1, 4)), 1), "-0.3");
    EXPECT_EQ(render_decimal(Surd(Rat(7)), 0), "7");
}

TEST(Rendering, IrrationalsCorrectlyRounded) {
    EXPECT_EQ(render_decimal_sqrt(Surd(Rat(2)), 12), "1.414213562373");
    EXPECT_EQ(render_decimal_sqrt(Surd(make_rat(9, 4)), 3), "1.500");
    EXPECT_EQ(render_decimal(Surd(SqrtThree(Rat(0), Rat(1))), 10), "1.7320508076");
    EXPECT_EQ(render_decimal(sqrt_rat(Rat(13)), 10), "3.6055512755");
    // 4/sqrt3 = 2.30940107675850...
    EXPECT_EQ(render_decimal(Surd(SqrtThree(Rat(0), make_rat(4, 3))), 10), "2.3094010768");
    EXPECT_THROW(render_decimal_sqrt(Surd(Rat(-1)), 4), std::domain_error);
}

}  // namespace
}  // namespace elag
