#pragma once

// Input parsing for the command-line surface (digit words, periodic and
// spliced sequences, rational points) and deterministic output emitters:
// CSV with RFC-4180 quoting, JSON with stable key order, and SVG 1.1.

#include <json.hpp>

#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include "elag/approx.hpp"
#include "elag/spectrum.hpp"

namespace elag {

using Json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Parsing
// ---------------------------------------------------------------------------

inline Word parse_word_digits(const std::string& s) {
    if (s.empty()) throw ParseError("empty digit word");
    Word w;
    for (char ch : s) {
        if (ch < '1' || ch > '5') throw ParseError("bad digit '" + std::string(1, ch) + "'");
        w.push_back(ch - '0');
    }
    return w;
}

// Stream syntax: "PERinf" (purely periodic), "PRE(PER)inf", "(PER)inf".
inline DigitStream parse_stream(const std::string& s) {
    const std::string suffix = "inf";
    if (s.size() <= suffix.size() || s.substr(s.size() - suffix.size()) != suffix)
        throw ParseError("stream must end in 'inf': " + s);
    std::string body = s.substr(0, s.size() - suffix.size());
    const auto open = body.find('(');
    if (open == std::string::npos) return DigitStream({}, parse_word_digits(body));
    if (body.back() != ')') throw ParseError("unbalanced parentheses in " + s);
    const std::string pre = body.substr(0, open);
    const std::string per = body.substr(open + 1, body.size() - open - 2);
    return DigitStream(pre.empty() ? Word{} : parse_word_digits(pre), parse_word_digits(per));
}

// Doubly infinite syntax: "PERinf"/"(PER)inf" for periodic words, and
// "Linf.CORE.Rinf" for spliced words (empty CORE allowed: "2inf..2inf").
inline BiWord parse_biword(const std::string& s) {
    const auto dot = s.find('.');
    if (dot == std::string::npos) {
        const DigitStream stream = parse_stream(s);
        if (!stream.pre.empty())
            throw ParseError("a doubly infinite word has no preperiod: " + s);
        return BiWord::periodic(stream.per);
    }
    const auto dot2 = s.find('.', dot + 1);
    if (dot2 == std::string::npos) throw ParseError("spliced word needs two dots: " + s);
    const std::string left = s.substr(0, dot);
    const std::string core = s.substr(dot + 1, dot2 - dot - 1);
    const std::string right = s.substr(dot2 + 1);
    const auto strip_inf = [](const std::string& part) {
        if (part.size() <= 3 || part.substr(part.size() - 3) != "inf")
            throw ParseError("splice tail must end in 'inf': " + part);
        return part.substr(0, part.size() - 3);
    };
    return BiWord::spliced(parse_word_digits(strip_inf(left)),
                           core.empty() ? Word{} : parse_word_digits(core),
                           parse_word_digits(strip_inf(right)));
}

// Rational point "a/c,b/c" (comma or whitespace separated).
inline CirclePointQ parse_point(const std::string& s) {
    std::string norm = s;
    for (char& ch : norm)
        if (ch == ',' || ch == '\t') ch = ' ';
    const auto sp = norm.find(' ');
    if (sp == std::string::npos) throw ParseError("point needs two coordinates: " + s);
    const Rat x = parse_rat(norm.substr(0, sp));
    std::string rest = norm.substr(sp + 1);
    while (!rest.empty() && rest.front() == ' ') rest.erase(rest.begin());
    const Rat y = parse_rat(rest);
    if (x.get_den() != y.get_den()) {
        // bring to the common denominator; make_point re-reduces
        const Int den = x.get_den() * y.get_den() / gcd(Int(x.get_den()), Int(y.get_den()));
        return make_point(x.get_num() * (den / x.get_den()), y.get_num() * (den / y.get_den()),
                          den);
    }
    return make_point(x.get_num(), y.get_num(), x.get_den());
}

// A scan/plot target: either an exact stream or a rational point.
using Target = std::variant<DigitStream, CirclePointQ>;

inline Target parse_target(const std::string& s) {
    if (s.find("inf") != std::string::npos) return parse_stream(s);
    return parse_point(s);
}

inline RayTarget ray_target_of(const Target& t) {
    if (std::holds_alternative<DigitStream>(t)) return RayTarget::from(std::get<DigitStream>(t));
    return RayTarget::from(std::get<CirclePointQ>(t));
}

// ---------------------------------------------------------------------------
// CSV (RFC 4180)
// ---------------------------------------------------------------------------

inline std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    out += '"';
    return out;
}

inline void csv_row(std::ostream& os, const std::vector<std::string>& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) os << ',';
        os << csv_field(fields[i]);
    }
    os << "\r\n";
}

// ---------------------------------------------------------------------------
// Emitters
// ---------------------------------------------------------------------------

enum class Format { Text, Csv, JsonFmt };

inline Format parse_format(const std::string& s) {
    if (s == "text") return Format::Text;
    if (s == "csv") return Format::Csv;
    if (s == "json") return Format::JsonFmt;
    throw ParseError("unknown format '" + s + "' (expected text|csv|json)");
}

inline void emit_triples(std::ostream& os, const std::vector<CirclePointQ>& triples, Format fmt) {
    switch (fmt) {
        case Format::Csv:
            csv_row(os, {"a", "b", "c"});
            for (const auto& t : triples)
                csv_row(os, {t.a.get_str(), t.b.get_str(), t.c.get_str()});
            break;
        case Format::JsonFmt: {
            Json arr = Json::array();
            for (const auto& t : triples)
                arr.push_back(Json{{"a", t.a.get_str()}, {"b", t.b.get_str()}, {"c", t.c.get_str()}});
            os << arr.dump(2) << "\n";
            break;
        }
        case Format::Text:
            for (const auto& t : triples) os << t.str() << "\n";
            os << "# " << triples.size() << " triples\n";
            break;
    }
}

inline Json approx_record_json(const ApproxRecord& r, unsigned digits, mpfr_prec_t prec) {
    return Json{{"a", r.approximant.a.get_str()},
                {"b", r.approximant.b.get_str()},
                {"c", r.approximant.c.get_str()},
                {"height", r.height.get_str()},
                {"delta_sq", to_string(r.delta_sq)},
                {"delta", render_decimal_sqrt(r.delta_sq, digits, prec)},
                {"is_boundary", r.is_boundary},
                {"boundary_k", r.boundary_k}};
}

inline void emit_records(std::ostream& os, const std::vector<ApproxRecord>& records, Format fmt,
                         unsigned digits, mpfr_prec_t prec) {
    switch (fmt) {
        case Format::Csv:
            csv_row(os, {"a", "b", "c", "height", "delta_sq", "delta", "is_boundary",
                         "boundary_k"});
            for (const auto& r : records)
                csv_row(os, {r.approximant.a.get_str(), r.approximant.b.get_str(),
                             r.approximant.c.get_str(), r.height.get_str(), to_string(r.delta_sq),
                             render_decimal_sqrt(r.delta_sq, digits, prec),
                             r.is_boundary ? "true" : "false", std::to_string(r.boundary_k)});
            break;
        case Format::JsonFmt: {
            Json arr = Json::array();
            for (const auto& r : records) arr.push_back(approx_record_json(r, digits, prec));
            os << arr.dump(2) << "\n";
            break;
        }
        case Format::Text:
            for (const auto& r : records) {
                os << r.approximant.str() << "  delta=" << render_decimal_sqrt(r.delta_sq, digits, prec)
                   << "  delta_sq=" << to_string(r.delta_sq);
                if (r.is_boundary) os << "  [boundary k=" << r.boundary_k << "]";
                os << "\n";
            }
            break;
    }
}

inline void emit_spectrum(std::ostream& os, const std::vector<SpectrumEntry>& entries, Format fmt,
                          unsigned digits, mpfr_prec_t prec) {
    switch (fmt) {
        case Format::Csv:
            csv_row(os, {"k", "delta_sq", "delta", "L_sq", "witness"});
            for (const auto& e : entries)
                csv_row(os, {std::to_string(e.k), to_string(e.delta_sq),
                             render_decimal_sqrt(Surd(e.delta_sq), digits, prec), to_string(e.L_sq),
                             biword_string(e.witness)});
            break;
        case Format::JsonFmt: {
            Json arr = Json::array();
            for (const auto& e : entries)
                arr.push_back(Json{{"k", e.k},
                                   {"delta_sq", to_string(e.delta_sq)},
                                   {"delta", render_decimal_sqrt(Surd(e.delta_sq), digits, prec)},
                                   {"L_sq", to_string(e.L_sq)},
                                   {"witness", biword_string(e.witness)}});
            os << arr.dump(2) << "\n";
            break;
        }
        case Format::Text:
            for (const auto& e : entries)
                os << "k=" << e.k << "  delta=" << render_decimal_sqrt(Surd(e.delta_sq), digits, prec)
                   << "  delta_sq=" << to_string(e.delta_sq) << "  L_sq=" << to_string(e.L_sq)
                   << "  witness=" << biword_string(e.witness) << "\n";
            break;
    }
}

inline void emit_necklaces(std::ostream& os, const std::vector<NecklaceEntry>& entries, Format fmt,
                           unsigned digits, mpfr_prec_t prec) {
    switch (fmt) {
        case Format::Csv:
            csv_row(os, {"period", "L_sq", "L"});
            for (const auto& e : entries)
                csv_row(os, {word_string(e.period), to_string(e.L_sq),
                             render_decimal_sqrt(Surd(e.L_sq), digits, prec)});
            break;
        case Format::JsonFmt: {
            Json arr = Json::array();
            for (const auto& e : entries)
                arr.push_back(Json{{"period", word_string(e.period)},
                                   {"L_sq", to_string(e.L_sq)},
                                   {"L", render_decimal_sqrt(Surd(e.L_sq), digits, prec)}});
            os << arr.dump(2) << "\n";
            break;
        }
        case Format::Text:
            for (const auto& e : entries)
                os << "(" << word_string(e.period)
                   << ")inf  L=" << render_decimal_sqrt(Surd(e.L_sq), digits, prec)
                   << "  L_sq=" << to_string(e.L_sq) << "\n";
            break;
    }
}

// ---------------------------------------------------------------------------
// SVG plot: lattice pairs a+b*omega in the first sextant, the unit arc, and
// the target half-line.
// ---------------------------------------------------------------------------

struct PlotPoint {
    Int a, b;
    double x, y;  // Euclidean embedding: x = a + b/2, y = b*sqrt(3)/2
};

inline std::vector<PlotPoint> plot_points(const Int& max_norm) {
    static const double kRt3Half = std::sqrt(3.0) / 2.0;
    std::vector<PlotPoint> out;
    for (const CirclePointQ& t : enumerate_triples(max_norm)) {
        for (Int mul = 1; mul * t.c <= max_norm; ++mul) {
            const Int a = mul * t.a, b = mul * t.b;
            out.push_back({a, b, a.get_d() + b.get_d() / 2.0, b.get_d() * kRt3Half});
        }
    }
    std::sort(out.begin(), out.end(), [](const PlotPoint& p, const PlotPoint& q) {
        if (p.a != q.a) return p.a < q.a;
        return p.b < q.b;
    });
    return out;
}

inline void emit_plot_svg(std::ostream& os, const RayTarget& z, const std::vector<PlotPoint>& pts,
                          const Int& max_norm) {
    const double n = max_norm.get_d();
    const double margin = 40.0;
    const double span = 640.0;
    const double s = span / n;
    const double width = margin * 2 + span;
    const double height = margin * 2 + span * std::sqrt(3.0) / 2.0;
    auto sx = [&](double x) { return margin + x * s; };
    auto sy = [&](double y) { return height - margin - y * s; };
    char buf[256];
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    std::snprintf(buf, sizeof buf,
                  "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"%.0f\" "
                  "height=\"%.0f\" viewBox=\"0 0 %.0f %.0f\">\n",
                  width, height, width, height);
    os << buf;
    // sextant edges
    std::snprintf(buf, sizeof buf,
                  "  <line x1=\"%.2f\" y1=\"%.2f\" x2=\"%.2f\" y2=\"%.2f\" stroke=\"#999\"/>\n",
                  sx(0), sy(0), sx(n), sy(0));
    os << buf;
    std::snprintf(buf, sizeof buf,
                  "  <line x1=\"%.2f\" y1=\"%.2f\" x2=\"%.2f\" y2=\"%.2f\" stroke=\"#999\"/>\n",
                  sx(0), sy(0), sx(n / 2), sy(n * std::sqrt(3.0) / 2.0));
    os << buf;
    // unit arc from angle 0 to pi/3
    std::snprintf(buf, sizeof buf,
                  "  <path d=\"M %.3f %.3f A %.3f %.3f 0 0 0 %.3f %.3f\" fill=\"none\" "
                  "stroke=\"#2a6\" stroke-width=\"1.5\"/>\n",
                  sx(1), sy(0), s, s, sx(0.5), sy(std::sqrt(3.0) / 2.0));
    os << buf;
    // the half-line through (alpha, beta), clipped at the sextant radius
    const double zx = z.alpha_d + z.beta_d / 2.0, zy = z.beta_d * std::sqrt(3.0) / 2.0;
    std::snprintf(buf, sizeof buf,
                  "  <line x1=\"%.2f\" y1=\"%.2f\" x2=\"%.2f\" y2=\"%.2f\" stroke=\"#c33\" "
                  "stroke-width=\"1.5\"/>\n",
                  sx(0), sy(0), sx(zx * n), sy(zy * n));
    os << buf;
    for (const PlotPoint& p : pts) {
        std::snprintf(buf, sizeof buf, "  <circle cx=\"%.2f\" cy=\"%.2f\" r=\"3\" fill=\"#237\"/>\n",
                      sx(p.x), sy(p.y));
        os << buf;
    }
    os << "</svg>\n";
}

inline void emit_plot_csv(std::ostream& os, const std::vector<PlotPoint>& pts) {
    csv_row(os, {"a", "b", "x", "y"});
    char buf[64];
    for (const PlotPoint& p : pts) {
        std::snprintf(buf, sizeof buf, "%.12g", p.x);
        std::string xs = buf;
        std::snprintf(buf, sizeof buf, "%.12g", p.y);
        csv_row(os, {p.a.get_str(), p.b.get_str(), xs, std::string(buf)});
    }
}

}  // namespace elag
