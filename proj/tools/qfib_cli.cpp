#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <string>

#include "qfib/grid.hpp"
#include "qfib/parallel.hpp"
#include "qfib/polymatrix.hpp"

namespace {

using namespace qfib;

ShiftConvention parse_mode(const std::string& text) {
    if (text == "flat") return ShiftConvention::flat;
    if (text == "staircase") return ShiftConvention::staircase;
    throw CLI::ValidationError("--mode", "expected 'flat' or 'staircase'");
}

struct GenOptions {
    std::string family;
    std::string n_range;
    long shift = 0;
    long k = 0;
    long j = 0;
    long ell = 1;
    long m = 1;
    std::string mode = "flat";
    bool k_set = false;
    bool j_set = false;
};

int run_gen(Sequences& seq, const GenOptions& opt) {
    const std::vector<long> ns = parse_range(opt.n_range);
    for (long n : ns) {
        if (opt.family == "classical") {
            std::cout << to_canonical_text(seq.classical_fib(n)) << '\n';
        } else if (opt.family == "qfib") {
            std::cout << to_canonical_text(seq.qfib(n, opt.shift)) << '\n';
        } else if (opt.family == "qbinomial") {
            if (n < 0) throw CLI::ValidationError("gen", "qbinomial needs n >= 0");
            std::cout << to_canonical_text(seq.qbinomial(n, opt.k)) << '\n';
        } else if (opt.family == "fibonomial") {
            if (n < 0) throw CLI::ValidationError("gen", "fibonomial needs n >= 0");
            std::cout << to_canonical_text(seq.fibonomial(n, opt.k)) << '\n';
        } else if (opt.family == "qfibonomial") {
            const PolyFraction f =
                seq.qfibonomial(n, opt.j, opt.ell, parse_mode(opt.mode));
            if (f.exact()) {
                std::cout << to_canonical_text(f.num) << '\n';
            } else {
                std::cout << '(' << to_canonical_text(f.num) << ") / ("
                          << to_canonical_text(f.den) << ")\n";
            }
        } else if (opt.family == "fac") {
            if (n < 0) throw CLI::ValidationError("gen", "fac needs k >= 0");
            std::cout << to_canonical_text(seq.fac(n, opt.shift, opt.m)) << '\n';
        } else {
            throw CLI::ValidationError("--family", "unknown family '" + opt.family + "'");
        }
    }
    return 0;
}

int run_table(Sequences& seq, const std::string& kind, long rows) {
    for (long n = 0; n < rows; ++n) {
        for (long k = 0; k <= n; ++k) {
            if (k > 0) std::cout << ", ";
            if (kind == "qbinomial") {
                std::cout << to_canonical_text(seq.qbinomial(n, k));
            } else if (kind == "fibonomial") {
                std::cout << to_canonical_text(seq.fibonomial(n, k));
            } else {
                throw CLI::ValidationError("--kind", "expected 'qbinomial' or 'fibonomial'");
            }
        }
        std::cout << '\n';
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    using namespace qfib;
    CLI::App app{"Exact verification of recurrence identities for powers of "
                 "(q-)Fibonacci polynomials over Z[x][s^(+-1), q^(+-1)]"};
    app.set_version_flag("--version", std::string(kToolName) + " " + kToolVersion);
    set_max_workers(workers_from_env());

    Sequences seq;

    // gen
    GenOptions gen;
    auto* cmd_gen = app.add_subcommand("gen", "Print one canonical polynomial per index");
    cmd_gen->add_option("--family", gen.family,
                        "classical|qfib|qbinomial|fibonomial|qfibonomial|fac")
        ->required();
    cmd_gen->add_option("--n", gen.n_range, "index range, e.g. 0..5 or -3..-1 or 1,4,9")
        ->required();
    cmd_gen->add_option("--shift", gen.shift, "s -> q^shift s (qfib, fac)");
    auto* gk = cmd_gen->add_option("--k", gen.k, "column (qbinomial, fibonomial)");
    auto* gj = cmd_gen->add_option("--j", gen.j, "column (qfibonomial)");
    cmd_gen->add_option("--ell", gen.ell, "step (qfibonomial)");
    cmd_gen->add_option("--m", gen.m, "stride (fac)");
    cmd_gen->add_option("--mode", gen.mode, "flat|staircase (qfibonomial)");

    // verify
    std::string v_identity, v_n, v_k, v_m, v_ell, v_j;
    std::string v_mode = "flat";
    std::string v_format = "text";
    auto* cmd_verify = app.add_subcommand("verify", "Run an identity over a parameter grid");
    cmd_verify->add_option("--identity", v_identity, "identity id (see README)")->required();
    cmd_verify->add_option("--n", v_n, "range for n");
    cmd_verify->add_option("--k", v_k, "range for k");
    cmd_verify->add_option("--m", v_m, "range for m");
    cmd_verify->add_option("--ell", v_ell, "range for ell");
    cmd_verify->add_option("--j", v_j, "range for j");
    cmd_verify->add_option("--mode", v_mode, "flat|staircase (theorem1/3, corollary1)");
    cmd_verify->add_option("--format", v_format, "text|json");

    // det
    long d_n = 0, d_m = 1, d_ell = 1, d_k = 1, d_dim = 1;
    auto* cmd_det = app.add_subcommand("det", "Determinant of the power matrix");
    cmd_det->add_option("--n", d_n)->required();
    cmd_det->add_option("--m", d_m)->required();
    cmd_det->add_option("--ell", d_ell)->required();
    cmd_det->add_option("--k", d_k)->required();
    cmd_det->add_option("--dim", d_dim)->required();

    // table
    std::string t_kind;
    long t_rows = 0;
    auto* cmd_table = app.add_subcommand("table", "Coefficient triangle export");
    cmd_table->add_option("--kind", t_kind, "qbinomial|fibonomial")->required();
    cmd_table->add_option("--rows", t_rows, "number of rows")->required();

    app.require_subcommand(1);
    CLI11_PARSE(app, argc, argv);

    try {
        if (*cmd_gen) {
            gen.k_set = gk->count() > 0;
            gen.j_set = gj->count() > 0;
            if ((gen.family == "qbinomial" || gen.family == "fibonomial") && !gen.k_set) {
                throw CLI::ValidationError("gen", "--k is required for " + gen.family);
            }
            return run_gen(seq, gen);
        }
        if (*cmd_verify) {
            GridSpec spec;
            spec.identity = identity_from_string(v_identity);
            spec.mode = parse_mode(v_mode);
            ParamBlock block;
            if (!v_n.empty()) block["n"] = parse_range(v_n);
            if (!v_k.empty()) block["k"] = parse_range(v_k);
            if (!v_m.empty()) block["m"] = parse_range(v_m);
            if (!v_ell.empty()) block["ell"] = parse_range(v_ell);
            if (!v_j.empty()) block["j"] = parse_range(v_j);
            spec.blocks = {block};
            const RunReport report = run_grid(seq, spec, max_workers());
            if (v_format == "json") {
                std::cout << to_json(report).dump(2) << '\n';
            } else if (v_format == "text") {
                std::cout << to_text(report);
            } else {
                throw CLI::ValidationError("--format", "expected 'text' or 'json'");
            }
            return report.all_zero() ? 0 : 1;
        }
        if (*cmd_det) {
            if (d_dim < 1) throw CLI::ValidationError("--dim", "dim must be >= 1");
            if (d_k < 1) throw CLI::ValidationError("--k", "k must be >= 1");
            const PolyMatrix m = power_matrix(seq, d_n, d_m, d_ell,
                                              static_cast<int>(d_k), static_cast<int>(d_dim));
            std::cout << to_canonical_text(det(m)) << '\n';
            return 0;
        }
        if (*cmd_table) {
            if (t_rows < 1) throw CLI::ValidationError("--rows", "rows must be >= 1");
            return run_table(seq, t_kind, t_rows);
        }
    } catch (const CLI::Error& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "qfib: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
