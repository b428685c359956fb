#pragma once

// Directed-rounding interval arithmetic on MPFR, used for three jobs only:
//   * ordering values from different quadratic fields (adaptive precision),
//   * certifying strict inequalities when exact subtraction is unavailable,
//   * correctly-rounded decimal rendering of surds and their square roots.
// All in-field decisions use exact arithmetic; intervals never decide
// equality, they only separate or give up ("indistinguishable").

#include <mpfr.h>

#include <optional>
#include <string>
#include <utility>

#include "elag/surd.hpp"

namespace elag {

class Interval {
  public:
    explicit Interval(mpfr_prec_t prec) {
        mpfr_init2(lo_, prec);
        mpfr_init2(hi_, prec);
        mpfr_set_zero(lo_, 1);
        mpfr_set_zero(hi_, 1);
    }
    ~Interval() {
        mpfr_clear(lo_);
        mpfr_clear(hi_);
    }
    Interval(const Interval& other) {
        mpfr_init2(lo_, mpfr_get_prec(other.lo_));
        mpfr_init2(hi_, mpfr_get_prec(other.hi_));
        mpfr_set(lo_, other.lo_, MPFR_RNDD);
        mpfr_set(hi_, other.hi_, MPFR_RNDU);
    }
    Interval& operator=(const Interval&) = delete;

    mpfr_prec_t prec() const { return mpfr_get_prec(lo_); }

    static Interval from_rat(const Rat& q, mpfr_prec_t prec) {
        Interval v(prec);
        mpfr_set_q(v.lo_, q.get_mpq_t(), MPFR_RNDD);
        mpfr_set_q(v.hi_, q.get_mpq_t(), MPFR_RNDU);
        return v;
    }

    static Interval sqrt_of_rat(const Rat& q, mpfr_prec_t prec) {
        Interval v = from_rat(q, prec);
        mpfr_sqrt(v.lo_, v.lo_, MPFR_RNDD);
        mpfr_sqrt(v.hi_, v.hi_, MPFR_RNDU);
        return v;
    }

    static Interval eval(const SqrtThree& v, mpfr_prec_t prec) {
        Interval s = sqrt_of_rat(Rat(3), prec);
        Interval out = from_rat(v.s, prec);
        out.mul_inplace(s);
        out.add_inplace(from_rat(v.r, prec));
        return out;
    }

    static Interval eval(const Surd& v, mpfr_prec_t prec) {
        Interval out = eval(v.x, prec);
        if (!v.in_base_field()) {
            Interval tail = eval(v.y, prec);
            tail.mul_inplace(sqrt_of_rat(v.delta, prec));
            out.add_inplace(tail);
        }
        return out;
    }

    void add_inplace(const Interval& o) {
        mpfr_add(lo_, lo_, o.lo_, MPFR_RNDD);
        mpfr_add(hi_, hi_, o.hi_, MPFR_RNDU);
    }

    void sub_inplace(const Interval& o) {
        mpfr_sub(lo_, lo_, o.hi_, MPFR_RNDD);
        mpfr_sub(hi_, hi_, o.lo_, MPFR_RNDU);
    }

    void mul_inplace(const Interval& o) {
        mpfr_t cand, best_lo, best_hi;
        mpfr_init2(cand, prec());
        mpfr_init2(best_lo, prec());
        mpfr_init2(best_hi, prec());
        bool first = true;
        const mpfr_srcptr as[2] = {lo_, hi_};
        const mpfr_srcptr bs[2] = {o.lo_, o.hi_};
        for (auto a : as)
            for (auto b : bs) {
                mpfr_mul(cand, a, b, MPFR_RNDD);
                if (first || mpfr_cmp(cand, best_lo) < 0) mpfr_set(best_lo, cand, MPFR_RNDD);
                mpfr_mul(cand, a, b, MPFR_RNDU);
                if (first || mpfr_cmp(cand, best_hi) > 0) mpfr_set(best_hi, cand, MPFR_RNDU);
                first = false;
            }
        mpfr_set(lo_, best_lo, MPFR_RNDD);
        mpfr_set(hi_, best_hi, MPFR_RNDU);
        mpfr_clears(cand, best_lo, best_hi, (mpfr_ptr) nullptr);
    }

    // Square root of a nonnegative interval (lo clamped at zero).
    void sqrt_inplace() {
        if (mpfr_sgn(lo_) < 0) mpfr_set_zero(lo_, 1);
        mpfr_sqrt(lo_, lo_, MPFR_RNDD);
        mpfr_sqrt(hi_, hi_, MPFR_RNDU);
    }

    bool contains_zero() const { return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0; }
    int definite_sign() const {
        if (mpfr_sgn(lo_) > 0) return 1;
        if (mpfr_sgn(hi_) < 0) return -1;
        return 0;
    }

    double mid_double() const {
        mpfr_t m;
        mpfr_init2(m, 64);
        mpfr_add(m, lo_, hi_, MPFR_RNDN);
        mpfr_div_ui(m, m, 2, MPFR_RNDN);
        const double out = mpfr_get_d(m, MPFR_RNDN);
        mpfr_clear(m);
        return out;
    }

    // Nearest integers to the endpoints; used by the decimal renderer.
    std::pair<Int, Int> rounded_endpoints() const {
        Int lo, hi;
        mpfr_get_z(lo.get_mpz_t(), lo_, MPFR_RNDN);
        mpfr_get_z(hi.get_mpz_t(), hi_, MPFR_RNDN);
        return {lo, hi};
    }

    void scale_pow10(unsigned digits) {
        Int p10 = 1;
        for (unsigned i = 0; i < digits; ++i) p10 *= 10;
        mpfr_mul_z(lo_, lo_, p10.get_mpz_t(), MPFR_RNDD);
        mpfr_mul_z(hi_, hi_, p10.get_mpz_t(), MPFR_RNDU);
    }

  private:
    mpfr_t lo_, hi_;
};

// Adaptive cross-field comparison: exact when the fields match, otherwise
// intervals from 128 bits doubling to beyond 1024; nullopt means the two
// values could not be separated at width 2^-1024 (reported, never guessed).
inline std::optional<int> cross_compare(const Surd& a, const Surd& b) {
    if (same_field(a, b)) return surd_sign(a - b);
    for (mpfr_prec_t prec = 128; prec <= 2048; prec *= 2) {
        Interval ia = Interval::eval(a, prec);
        ia.sub_inplace(Interval::eval(b, prec));
        const int s = ia.definite_sign();
        if (s != 0) return s;
    }
    return std::nullopt;
}

namespace detail {

inline std::string format_scaled_decimal(const Int& scaled, unsigned digits) {
    Int mag = scaled >= 0 ? scaled : Int(-scaled);
    std::string s = mag.get_str();
    if (s.size() <= digits) s.insert(0, digits + 1 - s.size(), '0');
    std::string out;
    if (scaled < 0) out += "-";
    out += s.substr(0, s.size() - digits);
    if (digits > 0) out += "." + s.substr(s.size() - digits);
    return out;
}

template <typename EvalFn>
std::string render_decimal_generic(EvalFn&& eval_at, unsigned digits, mpfr_prec_t start_prec) {
    for (mpfr_prec_t prec = start_prec; prec <= mpfr_prec_t(1) << 20; prec *= 2) {
        Interval v = eval_at(prec);
        v.scale_pow10(digits);
        const auto [lo, hi] = v.rounded_endpoints();
        if (lo == hi) return format_scaled_decimal(lo, digits);
    }
    throw std::runtime_error("decimal rendering did not converge (exact tie?)");
}

}  // namespace detail

// Correctly-rounded decimal string of a Surd. Exact rationals are rendered by
// integer arithmetic (round half away from zero) to sidestep interval ties.
inline std::string render_decimal(const Surd& v, unsigned digits, mpfr_prec_t precision_bits = 256) {
    if (v.is_rational()) {
        const Rat& q = v.x.r;
        Int p10 = 1;
        for (unsigned i = 0; i < digits; ++i) p10 *= 10;
        // Work on |q| so the floor realizes round-half-away-from-zero for
        // either sign, then restore the sign.
        Int num = abs(q.get_num()) * p10 * 2 + q.get_den();
        Int scaled;
        mpz_fdiv_q(scaled.get_mpz_t(), num.get_mpz_t(), Int(2 * q.get_den()).get_mpz_t());
        if (sgn(q) < 0) scaled = -scaled;
        return detail::format_scaled_decimal(scaled, digits);
    }
    return detail::render_decimal_generic(
        [&](mpfr_prec_t p) { return Interval::eval(v, p); }, digits,
        std::max<mpfr_prec_t>(precision_bits, 64));
}

// Correctly-rounded decimal string of sqrt(v) for v >= 0; exact square roots
// of rationals (irrational unless v is a perfect square, which normalization
// would have collapsed) never tie.
inline std::string render_decimal_sqrt(const Surd& v, unsigned digits,
                                       mpfr_prec_t precision_bits = 256) {
    if (surd_sign(v) < 0) throw std::domain_error("negative value under sqrt rendering");
    if (v.is_rational() && is_perfect_square(v.x.r.get_num()) && is_perfect_square(v.x.r.get_den()))
        return render_decimal(Surd(make_rat(isqrt(v.x.r.get_num()), isqrt(v.x.r.get_den()))), digits,
                              precision_bits);
    return detail::render_decimal_generic(
        [&](mpfr_prec_t p) {
            Interval i = Interval::eval(v, p);
            i.sqrt_inplace();
            return i;
        },
        digits, std::max<mpfr_prec_t>(precision_bits, 64));
}

}  // namespace elag
