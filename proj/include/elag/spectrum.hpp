#pragma once

// Doubly infinite digit sequences: the admissibility filter (forbidden
// factors), exact Lagrange numbers of sections and periodic sequences, the
// closed-form minima delta_k, the initial discrete spectrum below 4/sqrt3,
// and a desk-scale necklace sweep that rediscovers the admissible families.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "elag/interval.hpp"
#include "elag/parallel.hpp"
#include "elag/romik.hpp"

namespace elag {

// Exact comparison of two algebraic values, falling back to adaptive
// interval refinement when they live in different quadratic fields.
inline int compare_values(const Surd& a, const Surd& b) {
    if (same_field(a, b)) return surd_sign(a - b);
    const auto c = cross_compare(a, b);
    if (!c) throw std::logic_error("interval comparison could not separate equal-looking values");
    return *c;
}

inline int compare_ext(const ExtNorm& a, const ExtNorm& b) {
    if (a.infinite && b.infinite) return 0;
    if (a.infinite) return 1;
    if (b.infinite) return -1;
    return compare_values(a.value, b.value);
}

// ---------------------------------------------------------------------------
// Admissibility filter: necessary conditions on factors
// ---------------------------------------------------------------------------

struct AdmissibilityReport {
    bool admissible = true;
    std::string violation;  // empty when admissible
};

// Absorb copies of the tail periods sitting at the edges of a spliced core;
// a spliced word whose core empties out with equal tails is periodic.
inline BiWord normalized_biword(const BiWord& t) {
    if (t.kind == BiWord::Kind::Periodic) return t;
    Word core = t.core;
    auto starts_with = [](const Word& w, const Word& p) {
        return w.size() >= p.size() && std::equal(p.begin(), p.end(), w.begin());
    };
    auto ends_with = [](const Word& w, const Word& p) {
        return w.size() >= p.size() && std::equal(p.rbegin(), p.rend(), w.rbegin());
    };
    while (starts_with(core, t.left)) core.erase(core.begin(), core.begin() + t.left.size());
    while (ends_with(core, t.right)) core.resize(core.size() - t.right.size());
    if (core.empty() && t.left == t.right) return BiWord::periodic(t.left);
    BiWord out = t;
    out.core = std::move(core);
    return out;
}

namespace detail {

// Scans consecutive factors of length 2 and 3. `allow_33` is set only for
// the all-threes sequence, the single context where 33 may appear.
inline AdmissibilityReport scan_factors(const Word& text, std::size_t starts, bool allow_33) {
    for (std::size_t i = 0; i < starts; ++i) {
        const Digit a = text[i];
        if (a < 2 || a > 4) return {false, "digit " + std::to_string(a)};
        if (i + 1 >= text.size()) continue;
        const Digit b = text[i + 1];
        if ((a == 2 && b == 4) || (a == 4 && b == 2))
            return {false, "factor " + std::to_string(a) + std::to_string(b)};
        if (a == 3 && b == 3 && !allow_33) return {false, "factor 33"};
        if (i + 2 >= text.size()) continue;
        const Digit c = text[i + 2];
        if ((a == 2 && b == 3 && c == 4) || (a == 4 && b == 3 && c == 2))
            return {false, "factor " + std::to_string(a) + std::to_string(b) + std::to_string(c)};
    }
    return {true, ""};
}

}  // namespace detail

// Necessary filter: digits 1 and 5, the factors 24, 42, 234, 432, and 33
// (outside the all-threes word) never occur in an admissible sequence.
// Passing the filter does not decide admissibility by itself.
inline AdmissibilityReport is_admissible_candidate(const BiWord& t_in) {
    const BiWord t = normalized_biword(t_in);
    if (t.kind == BiWord::Kind::Periodic) {
        if (t.period == Word{3}) return {true, ""};
        Word text;
        for (int rep = 0; rep < 3; ++rep) text.insert(text.end(), t.period.begin(), t.period.end());
        return detail::scan_factors(text, t.period.size(), /*allow_33=*/false);
    }
    Word text;
    for (int rep = 0; rep < 3; ++rep) text.insert(text.end(), t.left.begin(), t.left.end());
    text.insert(text.end(), t.core.begin(), t.core.end());
    for (int rep = 0; rep < 3; ++rep) text.insert(text.end(), t.right.begin(), t.right.end());
    return detail::scan_factors(text, text.size(), /*allow_33=*/false);
}

// ---------------------------------------------------------------------------
// Lagrange numbers
// ---------------------------------------------------------------------------

namespace detail {

// Squared value of the block-boundary section of the periodic word w:
// Delta_w / (3 c^2) where the lower-left entry of N_w is c*sqrt3.
// c = 0 marks an infinite section (only words built from the digit 1).
struct CutSq {
    bool infinite = false;
    Rat value;
};

inline CutSq periodic_cut_sq(const Word& w) {
    const Mat2S n = word_matrix(w);
    if (n.b.r != 0 || n.c.r != 0 || n.a.s != 0 || n.d.s != 0)
        throw std::logic_error("word matrix lost its checkerboard shape");
    const Rat c = n.c.s;
    if (c == 0) return {true, Rat(0)};
    const Rat tr = n.a.r + n.d.r;
    const Rat det = n.a.r * n.d.r - Rat(3) * n.b.s * n.c.s;
    const Rat disc = tr * tr - Rat(4) * det;
    return {false, disc / (Rat(3) * c * c)};
}

}  // namespace detail

// L(section at a block boundary)^2 = Delta_w / (3 c_w^2), an exact rational.
inline Rat lagrange_periodic_sq(const Word& w) {
    if (w.empty()) throw ParseError("empty period");
    if (!is_reduced(w)) throw NotReducedError("period " + word_string(w) + " has digits outside 2..4");
    const auto cut = detail::periodic_cut_sq(w);
    if (cut.infinite) throw DegenerateWordError("infinite section value");
    return cut.value;
}

namespace detail {

inline ExtNorm section_ext(const DigitStream& back, const DigitStream& fwd) {
    return norm_of_stream(vee_stream(hat_stream(back))) + norm_of_stream(fwd);
}

}  // namespace detail

// Value of one section: L(P*|Q) = ||(P-hat)-vee|| + ||Q|| with P read
// backward from the cut and Q forward.
inline Surd lagrange_section(const DigitStream& p, const DigitStream& q) {
    const ExtNorm v = detail::section_ext(p, q);
    if (v.infinite) throw DegenerateWordError("section value is infinite");
    return v.value;
}

namespace detail {

// All section values of the periodic sequence with period w (cuts at the
// |w| residues), as extended norms.
inline std::vector<ExtNorm> periodic_sections(const Word& w) {
    std::vector<ExtNorm> out;
    out.reserve(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) {
        const Word rot = rotated(w, i);
        out.push_back(section_ext(DigitStream({}, reversed_word(rot)), DigitStream({}, rot)));
    }
    return out;
}

struct SplicedFamily {
    Digit tail;  // the spliced shape is ^inf(tail) 3 (tail)^inf with tail in {2,4}
};

inline std::optional<SplicedFamily> match_spliced_family(const BiWord& t) {
    if (t.kind != BiWord::Kind::Spliced) return std::nullopt;
    if (t.core != Word{3} || t.left != t.right) return std::nullopt;
    if (t.left == Word{2}) return SplicedFamily{2};
    if (t.left == Word{4}) return SplicedFamily{4};
    return std::nullopt;
}

// Section values of ^inf(p) 3 (p)^inf cut inside a tail, j digits away from
// the 3, are fp + x_j where x_j is the j-fold Moebius push of ||[3 p^inf]||
// under N_p. The push map has negative determinant, so the x_j oscillate
// around the tail's fixed point; once two consecutive values bracket an
// N_p-invariant interval, every later section stays inside it. This turns
// the supremum over infinitely many sections into a finite window check
// plus an exact invariance certificate.
inline ExtNorm spliced_family_value(Digit p, unsigned window) {
    if (window < 2) throw std::invalid_argument("certificate window must be >= 2");
    const Digit q = vee_digit(p);
    const Surd fp_p = norm_of_stream(DigitStream({}, {p})).value;
    const Surd fp_q = norm_of_stream(DigitStream({}, {q})).value;
    const Surd x0 = norm_of_stream(DigitStream({3}, {p})).value;
    const Surd y0 = norm_of_stream(DigitStream({3}, {q})).value;

    // Cuts adjacent to the 3: backward stream [3 p^inf] maps under hat-vee
    // to [3 q^inf].
    ExtNorm best = ExtNorm::finite(y0 + fp_p);  // cut just after the 3
    auto consider = [&best](const Surd& v) {
        if (compare_values(v, best.value) > 0) best = ExtNorm::finite(v);
    };
    consider(fp_q + x0);  // cut just before the 3

    std::vector<Surd> xs{x0}, ys{y0};
    for (unsigned j = 1; j <= window; ++j) {
        xs.push_back(moebius_apply(mat_N(p), ExtNorm::finite(xs.back())).value);
        ys.push_back(moebius_apply(mat_N(q), ExtNorm::finite(ys.back())).value);
        consider(fp_q + xs.back());  // cut j digits into the left tail
        consider(ys.back() + fp_p);  // cut j digits into the right tail
    }

    // Invariance certificate for everything beyond the window.
    auto certify = [&](Digit push, const Surd& lo_in, const Surd& hi_in) -> std::pair<Surd, Surd> {
        const Surd lo = compare_values(lo_in, hi_in) <= 0 ? lo_in : hi_in;
        const Surd hi = compare_values(lo_in, hi_in) <= 0 ? hi_in : lo_in;
        const Surd img_lo = moebius_apply(mat_N(push), ExtNorm::finite(hi)).value;
        const Surd img_hi = moebius_apply(mat_N(push), ExtNorm::finite(lo)).value;
        if (compare_values(img_lo, lo) < 0 || compare_values(img_hi, hi) > 0)
            throw std::logic_error("section tail bracket is not invariant; enlarge the window");
        return {lo, hi};
    };
    const auto [xlo, xhi] = certify(p, xs[window - 1], xs[window]);
    const auto [ylo, yhi] = certify(q, ys[window - 1], ys[window]);
    (void)xlo;
    (void)ylo;
    if (compare_values(fp_q + xhi, best.value) > 0 || compare_values(yhi + fp_p, best.value) > 0)
        throw std::logic_error("certified tail bound exceeds the window maximum");
    return best;
}

inline ExtNorm lagrange_biinfinite_ext(const BiWord& t_in, unsigned window) {
    const BiWord t = normalized_biword(t_in);
    if (t.kind == BiWord::Kind::Periodic) {
        ExtNorm best;
        bool first = true;
        for (const BiWord& side : {t, t.vee()}) {
            for (const ExtNorm& v : periodic_sections(side.period)) {
                if (first || compare_ext(v, best) > 0) {
                    best = v;
                    first = false;
                }
            }
        }
        return best;
    }
    const auto family = match_spliced_family(t);
    if (!family)
        throw UnsupportedShapeError("spliced word " + biword_string(t) +
                                    " is outside the characterized family");
    // The supremum ranges over sections of T and of T-vee; the vee image of
    // this family is the family member with the opposite tail digit.
    const ExtNorm a = spliced_family_value(family->tail, window);
    const ExtNorm b = spliced_family_value(vee_digit(family->tail), window);
    return compare_ext(a, b) >= 0 ? a : b;
}

}  // namespace detail

// Lagrange number L(T): supremum of section values over all cuts of T and
// T-vee. Exact: finitely many cuts for periodic T, finite window plus an
// invariance certificate for the supported family of spliced words.
inline Surd lagrange_biinfinite(const BiWord& t, unsigned window = 16) {
    const ExtNorm v = detail::lagrange_biinfinite_ext(t, window);
    if (v.infinite) throw DegenerateWordError("Lagrange number is infinite");
    return v.value;
}

// ---------------------------------------------------------------------------
// The initial discrete spectrum
// ---------------------------------------------------------------------------

// delta_k^2, the squared k-th smallest approximation constant:
// 1/4, 3/13, then 3U^2/(4(4U^2-1)) with U = U_{2k-3} from U_{n+1} = 3U_n + U_{n-1}.
inline Rat delta_k_sq(unsigned k) {
    if (k < 1) throw IndexOutOfRangeError("spectrum index must be >= 1");
    if (k == 1) return make_rat(1, 4);
    if (k == 2) return make_rat(3, 13);
    const Int u = lucas_u(2 * k - 3);
    const Int usq = u * u;
    return make_rat(3 * usq, 4 * (4 * usq - 1));
}

struct SpectrumEntry {
    unsigned k = 0;
    Rat L_sq;       // squared Lagrange number, exact
    Rat delta_sq;   // = 1 / L_sq
    BiWord witness;
};

// The first K points of the Lagrange spectrum with witnesses: all-threes,
// all-twos, then the periodic family 3 2^{2(k-2)}. L_sq increases toward
// 16/3, the square of the smallest accumulation point.
inline std::vector<SpectrumEntry> spectrum_below(unsigned K) {
    if (K < 1) throw IndexOutOfRangeError("need K >= 1");
    std::vector<SpectrumEntry> out;
    out.reserve(K);
    for (unsigned k = 1; k <= K; ++k) {
        SpectrumEntry e;
        e.k = k;
        e.delta_sq = delta_k_sq(k);
        e.L_sq = Rat(1) / e.delta_sq;
        if (k == 1)
            e.witness = BiWord::periodic({3});
        else if (k == 2)
            e.witness = BiWord::periodic({2});
        else {
            Word w{3};
            w.insert(w.end(), 2 * (k - 2), 2);
            e.witness = BiWord::periodic(w);
        }
        out.push_back(std::move(e));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Necklace sweep
// ---------------------------------------------------------------------------

namespace detail {

// Lyndon words (primitive, lexicographically minimal rotations) over the
// digit alphabet 1..5, of each length up to max_len.
inline std::vector<Word> lyndon_words(unsigned max_len) {
    std::vector<Word> out;
    for (unsigned n = 1; n <= max_len; ++n) {
        Word a(n + 1, 0);
        // Duval's generator: walk pre-necklaces, keep those of full period.
        std::function<void(unsigned, unsigned)> gen = [&](unsigned t, unsigned p) {
            if (t > n) {
                if (p == n) out.emplace_back(a.begin() + 1, a.end());
                return;
            }
            a[t] = a[t - p];
            gen(t + 1, p);
            for (Digit d = a[t - p] + 1; d <= 5; ++d) {
                a[t] = d;
                gen(t + 1, t);
            }
        };
        a[0] = 0;  // sentinel below every digit
        for (Digit d = 1; d <= 5; ++d) {
            a[1] = d;
            gen(2, 1);
        }
    }
    return out;
}

// Squared Lagrange number of the periodic word w through the rational
// formula: max over the block cuts of all rotations of w and of w-vee.
// Rotations of w-vee contribute the upper-right entries of the rotation
// matrices, since conjugating by the antidiagonal swaps the corners.
struct PeriodicLSq {
    bool infinite = false;
    Rat value;
};

inline PeriodicLSq periodic_l_sq(const Word& w) {
    Rat best;
    bool have = false;
    for (const Word& word : {w, vee_word(w)}) {
        for (std::size_t i = 0; i < word.size(); ++i) {
            const auto cut = periodic_cut_sq(rotated(word, i));
            if (cut.infinite) return {true, Rat(0)};
            if (!have || cut.value > best) {
                best = cut.value;
                have = true;
            }
        }
    }
    return {false, best};
}

}  // namespace detail

struct NecklaceEntry {
    Word period;
    Rat L_sq;
};

// Sweep of every primitive necklace of period <= max_period over digits
// 1..5, reporting the words whose Lagrange number does not exceed 4/sqrt3
// (L^2 <= 16/3, compared exactly). Deterministic under any thread count.
inline std::vector<NecklaceEntry> enumerate_periodic_spectrum(unsigned max_period,
                                                              unsigned threads = 1) {
    if (max_period < 1 || max_period > 12)
        throw std::invalid_argument("necklace sweep supports periods 1..12");
    const std::vector<Word> necklaces = detail::lyndon_words(max_period);
    const Rat bound = make_rat(16, 3);
    std::vector<std::optional<NecklaceEntry>> hits(necklaces.size());
    parallel_for(necklaces.size(), threads, [&](std::size_t i) {
        const auto l = detail::periodic_l_sq(necklaces[i]);
        if (!l.infinite && l.value <= bound) hits[i] = NecklaceEntry{necklaces[i], l.value};
    });
    std::vector<NecklaceEntry> out;
    for (auto& h : hits)
        if (h) out.push_back(std::move(*h));
    std::sort(out.begin(), out.end(), [](const NecklaceEntry& a, const NecklaceEntry& b) {
        if (a.L_sq != b.L_sq) return a.L_sq < b.L_sq;
        if (a.period.size() != b.period.size()) return a.period.size() < b.period.size();
        return a.period < b.period;
    });
    return out;
}

}  // namespace elag
