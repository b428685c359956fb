// Command-line front end: exact arithmetic for Eisenstein triples, the
// digit dynamical system on x^2+xy+y^2=1, approximation constants, and the
// Lagrange spectrum of the curve.

#include <CLI11.hpp>

#include "elag/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{
        "Exact Eisenstein-triple trees, digit expansions on x^2+xy+y^2=1,\n"
        "approximation constants, and the Lagrange spectrum below 4/sqrt(3)."};
    app.require_subcommand(1);

    elag::RunConfig cfg;
    std::string max_c = "1000", max_norm = "10000";
    std::string arg_a, arg_b;

    const auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", cfg.format, "output format: text|csv|json");
        sub->add_option("-o,--output", cfg.output_path, "write to a file instead of stdout");
        sub->add_option("--threads", cfg.threads,
                        "worker threads, 0 = hardware (env EL_THREADS overrides)");
        sub->add_option("--precision-bits", cfg.precision_bits,
                        "working precision for decimal rendering (>= 64)");
        sub->add_option("--digits", cfg.digits, "decimal digits in renderings");
    };

    auto* triples = app.add_subcommand("triples", "enumerate coprime triples a^2+ab+b^2=c^2");
    triples->add_option("--max-c", max_c, "height bound (inclusive)");
    add_common(triples);

    auto* expand = app.add_subcommand("expand", "digit expansion(s) of a rational curve point");
    expand->add_option("x", arg_a, "first coordinate a/c")->required();
    expand->add_option("y", arg_b, "second coordinate b/c")->required();
    add_common(expand);

    auto* delta = app.add_subcommand("delta", "exact delta^2(P;Z) and its square root");
    delta->add_option("target", cfg.target, "stream (e.g. 3inf, 2(34)inf) or point a/c,b/c")
        ->required();
    delta->add_option("z", cfg.z_point, "rational curve point a/c,b/c")->required();
    delta->add_option("--perron-k", cfg.depth_k,
                      "evaluate via the depth-k boundary formula instead of the pairing");
    add_common(delta);

    auto* scan = app.add_subcommand("scan", "delta^2 against every triple up to a height bound");
    scan->add_option("target", cfg.target, "digit stream")->required();
    scan->add_option("--max-c", max_c, "height bound");
    add_common(scan);

    auto* lagrange = app.add_subcommand("lagrange",
                                        "Lagrange number of a doubly infinite word "
                                        "((223)inf or 2inf.3.2inf)");
    lagrange->add_option("word", cfg.target, "periodic or spliced word")->required();
    add_common(lagrange);

    auto* spectrum = app.add_subcommand("spectrum", "first K spectrum minima with witnesses");
    spectrum->add_option("-k,--k", cfg.K, "number of entries");
    add_common(spectrum);

    auto* necklaces =
        app.add_subcommand("necklaces", "sweep periodic words for L <= 4/sqrt(3)");
    necklaces->add_option("--max-period", cfg.max_period, "period bound (<= 12)");
    add_common(necklaces);

    auto* plot = app.add_subcommand("plot", "SVG of lattice pairs, unit arc, and target ray");
    plot->add_option("--target", cfg.target, "stream or rational point for the ray");
    plot->add_option("--max-norm", max_norm, "pair norm bound");
    add_common(plot);

    auto* verify = app.add_subcommand("verify", "run the verification suite");
    verify->add_flag("--deep", cfg.deep, "include the slow brute-force criteria");
    add_common(verify);

    CLI11_PARSE(app, argc, argv);

    try {
        cfg.command = app.get_subcommands().front()->get_name();
        cfg.max_c = elag::Int(max_c, 10);
        cfg.max_norm = elag::Int(max_norm, 10);
        if (cfg.command == "expand") cfg.target = arg_a + "," + arg_b;
        return elag::run_to_output(cfg);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
