#pragma once

// Heights, the approximation constant delta(P;Z), Perron's formula for the
// cylinder-boundary values, and the brute-force oracles: exhaustive scans
// over Eisenstein triples and the Euclidean point-to-ray picture in the
// hexagonal lattice, which matches delta through the curve's isometry.

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <utility>
#include <vector>

#include "elag/parallel.hpp"
#include "elag/romik.hpp"

namespace elag {

inline Int height(const CirclePointQ& z) {
    const Rat via_pairing = -pairing(z.vec(), kVQ);
    if (via_pairing != Rat(z.c)) throw std::logic_error("height functional mismatch");
    return z.c;
}

// Exact curve coordinates (alpha, beta) of a stream, recovered from
// t = ||P|| by inverting the stereographic projection: with u = 2t + sqrt3,
//   alpha = (sqrt3(u^2-1) - 2u) / (sqrt3(1+u^2)),  beta = 4u / (sqrt3(1+u^2)).
// The vertex t = inf maps to (1, 0).
struct StereoCoords {
    Surd alpha, beta;
};

inline StereoCoords coords_from_norm(const ExtNorm& t) {
    if (t.infinite) return {Surd(1L), Surd(0L)};
    const Surd rt3{SqrtThree(Rat(0), Rat(1))};
    const Surd u = t.value * Rat(2) + rt3;
    const Surd usq = u * u;
    const Surd den = rt3 * (Surd(1L) + usq);
    const Surd alpha = (rt3 * (usq - Surd(1L)) - u * Rat(2)) / den;
    const Surd beta = (u * Rat(4)) / den;
    return {alpha, beta};
}

inline StereoCoords stream_coords(const DigitStream& p) {
    return coords_from_norm(norm_of_stream(p));
}

// delta^2(P;Z) = -2c<p, z> with p the normalized vector of P.
inline Rat delta_sq(const CirclePointQ& p, const CirclePointQ& z) {
    if (p == z) throw SamePointError("delta_sq at coinciding points " + p.str());
    const Rat inner = pairing(p.vec(), z.vec());
    return Rat(-2) * Rat(z.c) * inner / Rat(p.c);
}

inline Surd delta_sq(const StereoCoords& p, const CirclePointQ& z) {
    // <(alpha,beta,1), (a,b,c)> = alpha*a + (alpha*b + beta*a)/2 + beta*b - c
    const Rat a(z.a), b(z.b), c(z.c);
    const Surd inner =
        p.alpha * a + (p.alpha * b + p.beta * a) * make_rat(1, 2) + p.beta * b - Surd(c);
    return inner * (Rat(-2) * c);
}

inline Surd delta_sq(const DigitStream& p, const CirclePointQ& z) {
    return delta_sq(stream_coords(p), z);
}

// Perron's formula at depth k: delta(P; Z_k^{(1,0)}) = eps_k / (||(P''_k-hat)-vee|| + ||P'_k||)
// with P'_k the k-th shift, P''_k the reversed prefix closed with the 1^inf
// tail, and eps_k^2 = Ht(Z_k) <p,u> / <z_k,u> for u = (1,0,1). Only the
// square lives in the stream's quadratic field; the value itself is reported
// as a float rendering.
struct PerronResult {
    Surd delta_sq;       // exact
    Surd epsilon_sq;     // exact
    ExtNorm norm_back;   // ||(P''_k-hat)-vee||
    ExtNorm norm_fwd;    // ||P'_k||
    CirclePointQ z10;    // the boundary point Z_k^{(1,0)}

    double value() const { return std::sqrt(to_double(delta_sq)); }
};

inline PerronResult perron_delta(const DigitStream& p, int k) {
    if (k < 1) throw IndexOutOfRangeError("perron depth must be >= 1");
    if (p.is_rational()) throw std::invalid_argument("perron formula needs an irrational stream");
    const Word prefix = p.prefix(static_cast<std::size_t>(k));

    PerronResult out;
    out.z10 = cylinder_boundaries(prefix).first;
    const Rat denom_pair = pairing(out.z10.vec(), kU10);
    if (denom_pair == 0)
        throw DegenerateWordError("cylinder boundary degenerates to the vertex (1,0)");

    const StereoCoords coords = stream_coords(p);
    const Surd num_pair =
        coords.alpha + coords.beta * make_rat(1, 2) - Surd(1L);  // <(alpha,beta,1),(1,0,1)>
    out.epsilon_sq = num_pair * (Rat(out.z10.c) / denom_pair);

    out.norm_fwd = norm_of_stream(p.shifted(static_cast<std::size_t>(k)));
    const DigitStream back(hat_word(reversed_word(prefix)), {5});  // (P''_k)-hat
    out.norm_back = reciprocal(norm_of_stream(back));

    const ExtNorm denom = out.norm_back + out.norm_fwd;
    if (denom.infinite) throw DegenerateWordError("perron denominator is infinite");
    out.delta_sq = out.epsilon_sq / (denom.value * denom.value);
    return out;
}

struct ApproxRecord {
    CirclePointQ approximant;
    Int height;
    Surd delta_sq;
    bool is_boundary = false;
    int boundary_k = -1;  // smallest depth at which the approximant is a boundary; -1 otherwise
};

// Cylinder-boundary points of P with height <= max_c, mapped to their depth.
// The sextant vertices (1,0) and (0,1) bound the depth-0 cylinder (the whole
// arc), hence every cylinder of the expansion; they enter at depth 0.
inline std::map<CirclePointQ, int> boundary_points(const DigitStream& p, const Int& max_c,
                                                   unsigned max_depth = 10000) {
    std::map<CirclePointQ, int> out;
    out.emplace(CirclePointQ{Int(1), Int(0), Int(1)}, 0);
    out.emplace(CirclePointQ{Int(0), Int(1), Int(1)}, 0);
    Mat3Z m = Mat3Z::identity();
    for (unsigned k = 1; k <= max_depth; ++k) {
        m = m * mat_M(p.at(k - 1));
        const CirclePointQ z10 = point_from_vec(m * kU10);
        const CirclePointQ z01 = point_from_vec(m * kU01);
        bool any = false;
        for (const auto& z : {z10, z01}) {
            if (z.c <= max_c) {
                any = true;
                out.emplace(z, static_cast<int>(k));  // keeps the smallest k
            }
        }
        if (!any) return out;
    }
    throw NonTerminationError("cylinder boundary heights did not exceed the bound");
}

// delta_sq against every triple of height <= max_c, ascending (exact order);
// records flag which approximants are cylinder boundaries of the target.
inline std::vector<ApproxRecord> best_approx_scan(const DigitStream& p, const Int& max_c,
                                                  unsigned threads = 1) {
    const StereoCoords coords = stream_coords(p);
    const auto boundaries = boundary_points(p, max_c);
    const std::vector<CirclePointQ> triples = enumerate_triples(max_c);
    std::vector<ApproxRecord> records(triples.size());
    parallel_for(triples.size(), threads, [&](std::size_t i) {
        ApproxRecord& r = records[i];
        r.approximant = triples[i];
        r.height = triples[i].c;
        r.delta_sq = delta_sq(coords, triples[i]);
        const auto it = boundaries.find(triples[i]);
        if (it != boundaries.end()) {
            r.is_boundary = true;
            r.boundary_k = it->second;
        }
    });
    std::sort(records.begin(), records.end(), [](const ApproxRecord& a, const ApproxRecord& b) {
        const int s = surd_sign(a.delta_sq - b.delta_sq);
        if (s != 0) return s < 0;
        return a.approximant < b.approximant;
    });
    return records;
}

struct LiminfEstimate {
    double value = 0;
    std::vector<ApproxRecord> witnesses;  // window records, ascending by delta_sq
};

// Window estimator for delta(P) = liminf delta(P;Z): minimum of the boundary
// values with heights in [sqrt(max_c), max_c]. Only boundaries matter for
// the liminf; the window floor keeps shallow preperiodic values out.
inline LiminfEstimate delta_liminf_estimate(const DigitStream& p, const Int& max_c) {
    const auto boundaries = boundary_points(p, max_c);
    const auto deep = std::count_if(boundaries.begin(), boundaries.end(),
                                    [](const auto& e) { return e.second >= 1; });
    if (deep < 3)
        throw InsufficientDepthError("fewer than 3 cylinder boundaries below the height bound");
    const StereoCoords coords = stream_coords(p);
    LiminfEstimate out;
    for (const auto& [z, k] : boundaries) {
        if (z.c * z.c < max_c) continue;  // below the window floor sqrt(max_c)
        ApproxRecord r;
        r.approximant = z;
        r.height = z.c;
        r.delta_sq = delta_sq(coords, z);
        r.is_boundary = true;
        r.boundary_k = k;
        out.witnesses.push_back(std::move(r));
    }
    if (out.witnesses.empty())
        throw InsufficientDepthError("no cylinder boundary inside the tail window");
    std::sort(out.witnesses.begin(), out.witnesses.end(),
              [](const ApproxRecord& a, const ApproxRecord& b) {
                  const int s = surd_sign(a.delta_sq - b.delta_sq);
                  if (s != 0) return s < 0;
                  return a.approximant < b.approximant;
              });
    out.value = std::sqrt(to_double(out.witnesses.front().delta_sq));
    return out;
}

// A half-line target 0 <= arg <= pi/3 through alpha + beta*omega on the unit
// circle, with exact coordinates when constructed from a stream or rational
// point.
struct RayTarget {
    Surd alpha, beta;
    double alpha_d = 0, beta_d = 0;
    bool rational = false;
    CirclePointQ rational_point;

    static RayTarget from(const DigitStream& p) {
        const StereoCoords c = stream_coords(p);
        RayTarget z;
        z.alpha = c.alpha;
        z.beta = c.beta;
        z.alpha_d = to_double(c.alpha);
        z.beta_d = to_double(c.beta);
        return z;
    }

    static RayTarget from(const CirclePointQ& p) {
        RayTarget z;
        z.alpha = Surd(make_rat(p.a, p.c));
        z.beta = Surd(make_rat(p.b, p.c));
        z.alpha_d = to_double(z.alpha);
        z.beta_d = to_double(z.beta);
        z.rational = true;
        z.rational_point = p;
        return z;
    }
};

inline bool is_eisenstein_pair(const Int& a, const Int& b) {
    if (a < 0 || b < 0 || (a == 0 && b == 0)) return false;
    return is_perfect_square(a * a + a * b + b * b);
}

// Shortest Euclidean distance from the lattice point a + b*omega
// (omega = (1+sqrt(-3))/2) to the half-line through alpha + beta*omega.
inline double ray_distance(const RayTarget& z, const Int& a, const Int& b) {
    if (!is_eisenstein_pair(a, b))
        throw NotEisensteinPairError("(" + a.get_str() + "," + b.get_str() +
                                     ") is not an Eisenstein pair");
    static const double kRt3Half = std::sqrt(3.0) / 2.0;
    const double ad = a.get_d(), bd = b.get_d();
    const double wx = ad + bd / 2.0, wy = bd * kRt3Half;
    const double zx = z.alpha_d + z.beta_d / 2.0, zy = z.beta_d * kRt3Half;
    const double proj = wx * zx + wy * zy;
    const double norm_sq = wx * wx + wy * wy;
    if (proj < 0) return std::sqrt(norm_sq);
    const double dist_sq = norm_sq - proj * proj;
    return dist_sq > 0 ? std::sqrt(dist_sq) : 0.0;
}

struct PairScanResult {
    double value = std::numeric_limits<double>::infinity();
    Int best_a = 0, best_b = 0;
    bool rational_target = false;  // the scan line passes through lattice points
};

// min of delta'(z,(a,b)) over Eisenstein pairs with norm in the tail window
// [sqrt(max_norm), max_norm]: pairs are the primitive triples and their
// integer multiples (reflected pairs are already in the tree). Since the
// half-line passes through the origin, |a+b*omega| * dist(normalized point,
// line) is exactly the point-to-ray distance, so delta' is ray_distance
// itself. Agrees with delta_liminf_estimate through the lattice isometry at
// matched heights (chord-vs-arc discrepancy O(delta^3/c^2)).
inline PairScanResult pair_scan(const RayTarget& z, const Int& max_norm, unsigned threads = 1) {
    PairScanResult out;
    if (z.rational) {
        out.rational_target = true;
        out.value = 0.0;
        out.best_a = z.rational_point.a;
        out.best_b = z.rational_point.b;
        return out;
    }
    const std::vector<CirclePointQ> triples = enumerate_triples(max_norm);
    struct Local {
        double value = std::numeric_limits<double>::infinity();
        Int a = 0, b = 0;
    };
    std::vector<Local> locals(triples.size());
    parallel_for(triples.size(), threads, [&](std::size_t i) {
        const CirclePointQ& t = triples[i];
        Local& loc = locals[i];
        for (Int mul = 1; mul * t.c <= max_norm; ++mul) {
            const Int norm = mul * t.c;
            if (norm * norm < max_norm) continue;  // below the window floor
            const Int a = mul * t.a, b = mul * t.b;
            const double d = ray_distance(z, a, b);
            if (d < loc.value) {
                loc.value = d;
                loc.a = a;
                loc.b = b;
            }
        }
    });
    for (const Local& loc : locals) {
        if (loc.value < out.value) {
            out.value = loc.value;
            out.best_a = loc.a;
            out.best_b = loc.b;
        }
    }
    return out;
}

}  // namespace elag
