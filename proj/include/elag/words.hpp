#pragma once

// Romik digit words and streams. A Word is a finite digit sequence over
// {1..5}; a DigitStream is an eventually periodic one-sided sequence
// (preperiod + primitive period), the exact representation of every curve
// point this library can name: rational points end in the terminal tails
// 1^inf / 5^inf, quadratic irrationals are eventually periodic. A BiWord is
// a doubly infinite sequence up to shift, either purely periodic or a splice
// ^inf(left) core (right)^inf.

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "elag/errors.hpp"
#include "elag/vec_mat.hpp"

namespace elag {

using Digit = int;
using Word = std::vector<Digit>;

inline void check_digits(const Word& w) {
    for (Digit d : w)
        if (d < 1 || d > 5) throw ParseError("digit out of range 1..5");
}

inline bool is_reduced(const Word& w) {
    return std::all_of(w.begin(), w.end(), [](Digit d) { return d >= 2 && d <= 4; });
}

inline Word vee_word(Word w) {
    for (Digit& d : w) d = vee_digit(d);
    return w;
}

inline Word hat_word(Word w) {
    for (Digit& d : w) d = hat_digit(d);
    return w;
}

inline Word reversed_word(Word w) {
    std::reverse(w.begin(), w.end());
    return w;
}

inline Word rotated(const Word& w, std::size_t i) {
    Word out(w.begin() + static_cast<std::ptrdiff_t>(i), w.end());
    out.insert(out.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i));
    return out;
}

// Shortest word whose repetition gives w.
inline Word primitive_root(const Word& w) {
    const std::size_t n = w.size();
    for (std::size_t len = 1; len <= n; ++len) {
        if (n % len != 0) continue;
        bool ok = true;
        for (std::size_t i = len; i < n && ok; ++i) ok = (w[i] == w[i - len]);
        if (ok) return Word(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(len));
    }
    return w;
}

inline bool is_primitive(const Word& w) { return primitive_root(w).size() == w.size(); }

inline Word minimal_rotation(const Word& w) {
    Word best = w;
    for (std::size_t i = 1; i < w.size(); ++i) {
        Word cand = rotated(w, i);
        if (cand < best) best = cand;
    }
    return best;
}

inline std::string word_string(const Word& w) {
    std::string s;
    s.reserve(w.size());
    for (Digit d : w) s += static_cast<char>('0' + d);
    return s;
}

// Eventually periodic digit stream, canonicalized: the period is primitive
// and the preperiod is rolled as short as possible (a preperiod ending in
// the period's last digit is absorbed by rotating the period).
struct DigitStream {
    Word pre, per;

    DigitStream() = default;
    DigitStream(Word pre_, Word per_) : pre(std::move(pre_)), per(std::move(per_)) {
        if (per.empty()) throw ParseError("empty period");
        check_digits(pre);
        check_digits(per);
        per = primitive_root(per);
        while (!pre.empty() && pre.back() == per.back()) {
            std::rotate(per.begin(), per.end() - 1, per.end());
            pre.pop_back();
        }
    }

    Digit at(std::size_t i) const {
        if (i < pre.size()) return pre[i];
        return per[(i - pre.size()) % per.size()];
    }

    // Digits d_1..d_k as a finite word.
    Word prefix(std::size_t k) const {
        Word out;
        out.reserve(k);
        for (std::size_t i = 0; i < k; ++i) out.push_back(at(i));
        return out;
    }

    DigitStream shifted(std::size_t k) const {
        if (k <= pre.size()) return DigitStream(Word(pre.begin() + static_cast<std::ptrdiff_t>(k), pre.end()), per);
        const std::size_t r = (k - pre.size()) % per.size();
        return DigitStream({}, rotated(per, r));
    }

    // Rational points are exactly the streams ending in the terminal tails.
    bool is_rational() const { return per == Word{1} || per == Word{5}; }

    bool reduced() const { return is_reduced(pre) && is_reduced(per); }
};

inline bool operator==(const DigitStream& a, const DigitStream& b) {
    return a.pre == b.pre && a.per == b.per;
}

inline DigitStream vee_stream(const DigitStream& s) {
    return DigitStream(vee_word(s.pre), vee_word(s.per));
}

inline DigitStream hat_stream(const DigitStream& s) {
    return DigitStream(hat_word(s.pre), hat_word(s.per));
}

inline std::string stream_string(const DigitStream& s) {
    std::string out = "[";
    for (Digit d : s.pre) out += std::to_string(d) + ",";
    out += "(";
    for (std::size_t i = 0; i < s.per.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(s.per[i]);
    }
    out += ")^inf]";
    return out;
}

// Doubly infinite Romik sequence up to shift.
struct BiWord {
    enum class Kind { Periodic, Spliced };
    Kind kind = Kind::Periodic;
    Word period;              // Periodic: primitive, lexicographically minimal rotation
    Word left, core, right;   // Spliced: ^inf(left) core (right)^inf

    static BiWord periodic(Word w) {
        if (w.empty()) throw ParseError("empty period");
        check_digits(w);
        BiWord t;
        t.kind = Kind::Periodic;
        t.period = minimal_rotation(primitive_root(w));
        return t;
    }

    static BiWord spliced(Word left, Word core, Word right) {
        if (left.empty() || right.empty()) throw ParseError("empty splice tail");
        check_digits(left);
        check_digits(core);
        check_digits(right);
        BiWord t;
        t.kind = Kind::Spliced;
        t.left = primitive_root(left);
        t.core = std::move(core);
        t.right = primitive_root(right);
        return t;
    }

    BiWord vee() const {
        if (kind == Kind::Periodic) return periodic(vee_word(period));
        return spliced(vee_word(left), vee_word(core), vee_word(right));
    }
};

inline bool operator==(const BiWord& a, const BiWord& b) {
    if (a.kind != b.kind) return false;
    if (a.kind == BiWord::Kind::Periodic) return a.period == b.period;
    return a.left == b.left && a.core == b.core && a.right == b.right;
}

inline std::string biword_string(const BiWord& t) {
    if (t.kind == BiWord::Kind::Periodic) return "(" + word_string(t.period) + ")inf";
    return word_string(t.left) + "inf." + word_string(t.core) + "." + word_string(t.right) + "inf";
}

}  // namespace elag
