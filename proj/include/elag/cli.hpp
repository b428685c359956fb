#pragma once

// Command implementations behind the CLI: each takes a validated RunConfig
// and writes to a stream (or files, for the plot), so tests can drive them
// without a process boundary.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "elag/acceptance.hpp"
#include "elag/emit.hpp"

namespace elag {

struct RunConfig {
    std::string command;
    Int max_c = 1000;
    Int max_norm = 10000;
    unsigned K = 5;
    unsigned max_period = 6;
    int depth_k = 0;            // perron depth for `delta` (0 = direct evaluation)
    std::string target;         // word or point, command-dependent
    std::string z_point;        // second argument of `delta`
    std::string format = "text";
    std::string output_path;    // empty = stdout
    unsigned threads = 0;       // 0 = hardware
    unsigned precision_bits = 256;
    unsigned digits = 12;       // decimal digits in renderings
    bool deep = false;

    void validate() const {
        if (max_c < 1 || max_norm < 1 || K < 1 || max_period < 1)
            throw std::invalid_argument("bounds must be positive");
        if (precision_bits < 64) throw std::invalid_argument("precision_bits must be >= 64");
    }
};

// EL_THREADS overrides the flag; 0 still means "ask the hardware".
inline unsigned effective_threads(const RunConfig& cfg) {
    if (const char* env = std::getenv("EL_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && v >= 0) return resolve_threads(static_cast<unsigned>(v));
    }
    return resolve_threads(cfg.threads);
}

inline void cmd_triples(const RunConfig& cfg, std::ostream& os) {
    emit_triples(os, enumerate_triples(cfg.max_c), parse_format(cfg.format));
}

inline void cmd_expand(const RunConfig& cfg, std::ostream& os) {
    const CirclePointQ pt = parse_point(cfg.target);
    const Expansion e = expand_rational(pt);
    const Format fmt = parse_format(cfg.format);
    if (fmt == Format::JsonFmt) {
        Json j{{"point", pt.str()}, {"expansion", stream_string(e.primary)}};
        if (e.alternate) j["alternate"] = stream_string(*e.alternate);
        os << j.dump(2) << "\n";
        return;
    }
    os << stream_string(e.primary);
    if (e.alternate) os << " | " << stream_string(*e.alternate);
    os << "\n";
}

inline void cmd_delta(const RunConfig& cfg, std::ostream& os) {
    const Target target = parse_target(cfg.target);
    const CirclePointQ z = parse_point(cfg.z_point);
    const Format fmt = parse_format(cfg.format);
    Surd dsq;
    if (std::holds_alternative<DigitStream>(target)) {
        const DigitStream& p = std::get<DigitStream>(target);
        dsq = cfg.depth_k > 0 ? perron_delta(p, cfg.depth_k).delta_sq : delta_sq(p, z);
    } else {
        dsq = Surd(delta_sq(std::get<CirclePointQ>(target), z));
    }
    const std::string delta = render_decimal_sqrt(dsq, cfg.digits, cfg.precision_bits);
    if (fmt == Format::JsonFmt) {
        os << Json{{"target", cfg.target},
                   {"z", z.str()},
                   {"delta_sq", to_string(dsq)},
                   {"delta", delta}}
                  .dump(2)
           << "\n";
        return;
    }
    os << "delta_sq = " << to_string(dsq) << "\ndelta = " << delta << "\n";
}

inline void cmd_scan(const RunConfig& cfg, std::ostream& os) {
    const DigitStream p = parse_stream(cfg.target);
    const unsigned threads = effective_threads(cfg);
    const auto records = best_approx_scan(p, cfg.max_c, threads);
    const Format fmt = parse_format(cfg.format);
    if (fmt == Format::JsonFmt) {
        Json j;
        j["target"] = stream_string(p);
        j["max_c"] = cfg.max_c.get_str();
        Json arr = Json::array();
        for (const auto& r : records) arr.push_back(approx_record_json(r, cfg.digits, cfg.precision_bits));
        j["records"] = arr;
        try {
            const LiminfEstimate est = delta_liminf_estimate(p, cfg.max_c);
            j["liminf_estimate"] = est.value;
        } catch (const InsufficientDepthError&) {
            j["liminf_estimate"] = nullptr;
        }
        os << j.dump(2) << "\n";
        return;
    }
    emit_records(os, records, fmt, cfg.digits, cfg.precision_bits);
    if (fmt == Format::Text) {
        try {
            const LiminfEstimate est = delta_liminf_estimate(p, cfg.max_c);
            os << "# window estimate of delta(P): " << est.value << "\n";
        } catch (const InsufficientDepthError& e) {
            os << "# window estimate unavailable: " << e.what() << "\n";
        }
    }
}

inline void cmd_lagrange(const RunConfig& cfg, std::ostream& os) {
    const BiWord t = parse_biword(cfg.target);
    const AdmissibilityReport adm = is_admissible_candidate(t);
    const Surd L = lagrange_biinfinite(t);
    const Surd L_sq = L * L;
    const Format fmt = parse_format(cfg.format);
    const std::string l_dec = render_decimal(L, cfg.digits, cfg.precision_bits);
    if (fmt == Format::JsonFmt) {
        os << Json{{"word", biword_string(t)},
                   {"admissible_candidate", adm.admissible},
                   {"violation", adm.violation},
                   {"L", l_dec},
                   {"L_exact", to_string(L)},
                   {"L_sq", to_string(L_sq)}}
                  .dump(2)
           << "\n";
        return;
    }
    os << "word = " << biword_string(t) << "\n";
    os << "admissible candidate: " << (adm.admissible ? "yes" : ("no (" + adm.violation + ")"))
       << "\n";
    os << "L = " << l_dec << "  exact " << to_string(L) << "  L^2 = " << to_string(L_sq) << "\n";
}

inline void cmd_spectrum(const RunConfig& cfg, std::ostream& os) {
    emit_spectrum(os, spectrum_below(cfg.K), parse_format(cfg.format), cfg.digits,
                  cfg.precision_bits);
}

inline void cmd_necklaces(const RunConfig& cfg, std::ostream& os) {
    emit_necklaces(os, enumerate_periodic_spectrum(cfg.max_period, effective_threads(cfg)),
                   parse_format(cfg.format), cfg.digits, cfg.precision_bits);
}

inline void cmd_plot(const RunConfig& cfg, std::ostream& os) {
    const std::string svg_path = cfg.output_path.empty() ? "elag_plot.svg" : cfg.output_path;
    std::string csv_path = svg_path;
    if (csv_path.size() > 4 && csv_path.substr(csv_path.size() - 4) == ".svg")
        csv_path.resize(csv_path.size() - 4);
    csv_path += ".csv";

    RayTarget z = RayTarget::from(CirclePointQ{1, 0, 1});
    if (!cfg.target.empty()) z = ray_target_of(parse_target(cfg.target));
    const auto pts = plot_points(cfg.max_norm);

    std::ofstream svg(svg_path, std::ios::binary);
    if (!svg) throw std::runtime_error("cannot open " + svg_path + " for writing");
    emit_plot_svg(svg, z, pts, cfg.max_norm);
    if (!svg.good()) throw std::runtime_error("write failed for " + svg_path);
    std::ofstream csv(csv_path, std::ios::binary);
    if (!csv) throw std::runtime_error("cannot open " + csv_path + " for writing");
    emit_plot_csv(csv, pts);
    if (!csv.good()) throw std::runtime_error("write failed for " + csv_path);
    os << "wrote " << svg_path << " and " << csv_path << " (" << pts.size() << " points)\n";
}

// Verification: the acceptance criteria (fast set by default, all with
// --deep) plus the spectrum table.
inline int cmd_verify(const RunConfig& cfg, std::ostream& os) {
    os << "spectrum minima (exact | decimal):\n";
    for (const SpectrumEntry& e : spectrum_below(5))
        os << "  delta_" << e.k << " = sqrt(" << to_string(e.delta_sq) << ") = "
           << render_decimal_sqrt(Surd(e.delta_sq), 12, cfg.precision_bits)
           << "   witness " << biword_string(e.witness) << "\n";
    bool all = true;
    for (const CriterionResult& r : run_acceptance(effective_threads(cfg), cfg.deep)) {
        os << (r.pass ? "PASS" : "FAIL") << "  " << r.id << "  " << r.name << " — " << r.detail
           << "\n";
        all = all && r.pass;
    }
    os << (all ? "verify: all checks passed\n" : "verify: FAILURES above\n");
    return all ? 0 : 1;
}

// Dispatch; returns the process exit code.
inline int run_command(const RunConfig& cfg, std::ostream& os) {
    cfg.validate();
    if (cfg.command == "verify") return cmd_verify(cfg, os);
    if (cfg.command == "triples") cmd_triples(cfg, os);
    else if (cfg.command == "expand") cmd_expand(cfg, os);
    else if (cfg.command == "delta") cmd_delta(cfg, os);
    else if (cfg.command == "scan") cmd_scan(cfg, os);
    else if (cfg.command == "lagrange") cmd_lagrange(cfg, os);
    else if (cfg.command == "spectrum") cmd_spectrum(cfg, os);
    else if (cfg.command == "necklaces") cmd_necklaces(cfg, os);
    else if (cfg.command == "plot") cmd_plot(cfg, os);
    else throw std::invalid_argument("unknown command " + cfg.command);
    return 0;
}

// Convenience for tests and file output.
inline int run_to_output(const RunConfig& cfg) {
    if (cfg.output_path.empty() || cfg.command == "plot") return run_command(cfg, std::cout);
    std::ofstream out(cfg.output_path, std::ios::binary);
    if (!out) {
        std::cerr << "cannot open " << cfg.output_path << " for writing\n";
        return 2;
    }
    const int rc = run_command(cfg, out);
    if (!out.good()) {
        std::cerr << "write failed for " << cfg.output_path << "\n";
        return 2;
    }
    return rc;
}

}  // namespace elag
