// Command-line front end: single-state reports, distillation advice,
// the two CSV parameter sweeps, and the unitary-search lower bound.
//
// Exit codes: 0 success, 2 parse/usage error, 3 state-validation error,
// 4 I/O error.

#include <cstdint>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "fef/distill.hpp"
#include "fef/fef.hpp"
#include "fef/oracle.hpp"
#include "fef/sampling.hpp"
#include "fef/state_io.hpp"
#include "fef/sweeps.hpp"

namespace {

constexpr int kExitParse = 2;
constexpr int kExitValidation = 3;
constexpr int kExitIo = 4;

void print_value(const char* key, double value) {
    std::printf("%s: %s\n", key, fef::format_g17(value).c_str());
}

fef::GeneratorBasis basis_for(int d, std::optional<std::uint64_t> basis_seed) {
    fef::GeneratorBasis basis = fef::build_generator_basis(d);
    if (basis_seed) {
        auto rng = fef::seeded_rng(*basis_seed);
        const fef::RealMatrix o = fef::random_orthogonal(d * d - 1, rng);
        basis = fef::rotate_basis(basis, o);
    }
    return basis;
}

struct OracleFlags {
    int restarts = 32;
    int iters = 500;
    std::uint64_t seed = 1;
};

void add_oracle_flags(CLI::App* cmd, OracleFlags& flags) {
    cmd->add_option("--restarts", flags.restarts,
                    "random restarts for the unitary search");
    cmd->add_option("--iters", flags.iters, "ascent sweeps per restart");
    cmd->add_option("--seed", flags.seed, "seed for the restart streams");
}

int run_report(const std::string& path, bool with_oracle,
               const OracleFlags& flags,
               std::optional<std::uint64_t> basis_seed) {
    const fef::DensityMatrix rho = fef::load_state(path);
    std::printf("dim_a: %d\n", rho.dim_a);
    std::printf("dim_b: %d\n", rho.dim_b);

    if (rho.dim_a != rho.dim_b) {
        // Fidelity/bound need equal local dims; report what exists.
        std::printf("note: unequal local dims, no report quantities defined\n");
        return 0;
    }

    const fef::GeneratorBasis basis = basis_for(rho.dim_a, basis_seed);
    fef::FefReport report = fef::compute_report(rho, basis);
    if (with_oracle) {
        fef::OracleConfig cfg;
        cfg.seed = flags.seed;
        cfg.restarts = flags.restarts;
        cfg.max_iters = flags.iters;
        report.oracle_lower = fef::oracle_fef(rho, cfg).best_value;
    }

    print_value("fidelity", report.fidelity);
    print_value("threshold_1_over_d", 1.0 / rho.dim_a);
    print_value("upper_bound", report.upper_bound);
    if (report.exact_two_qubit)
        print_value("exact_two_qubit", *report.exact_two_qubit);
    if (report.bell_cross_check)
        print_value("bell_cross_check", *report.bell_cross_check);
    if (report.normalized) print_value("normalized_fef", *report.normalized);
    if (report.oracle_lower) print_value("oracle_lower", *report.oracle_lower);
    if (basis_seed) std::printf("basis_rotation_seed: %llu\n",
                                (unsigned long long)*basis_seed);
    return 0;
}

int run_advise(const std::string& path) {
    const fef::DensityMatrix rho = fef::load_state(path);
    const fef::GeneratorBasis basis = fef::build_generator_basis(rho.dim_a);
    const fef::DistillAdvice advice = fef::advise(rho, basis);

    std::printf("verdict: %s\n", fef::to_string(advice.verdict));
    std::printf("violates_reduction: %s\n",
                advice.violates_reduction ? "true" : "false");
    print_value("min_reduction_eigenvalue", advice.min_reduction_eigenvalue);
    print_value("min_reduction_eigenvalue_a", advice.min_a_side);
    print_value("min_reduction_eigenvalue_b", advice.min_b_side);
    print_value("fidelity", advice.fidelity);
    print_value("upper_bound", advice.upper_bound);
    print_value("threshold_1_over_d", 1.0 / rho.dim_a);
    return 0;
}

int emit_csv(const std::string& csv, const std::string& out_path) {
    if (out_path.empty()) {
        std::fputs(csv.c_str(), stdout);
    } else {
        fef::write_text_file(out_path, csv);
    }
    return 0;
}

int run_sweep_thresholds(int steps, const std::string& out_path) {
    const fef::ThresholdSweep sweep = fef::sweep_thresholds(steps);
    emit_csv(fef::threshold_csv(sweep), out_path);
    for (const fef::ThresholdCrossing& crossing : sweep.crossings) {
        std::fprintf(stderr, "%s sign change near x = %.4f\n",
                     crossing.curve.c_str(), crossing.x);
    }
    return 0;
}

int run_sweep_w(int steps, const std::string& out_path) {
    return emit_csv(fef::w_tradeoff_csv(fef::sweep_w_tradeoff(steps)),
                    out_path);
}

int run_oracle(const std::string& path, const OracleFlags& flags) {
    const fef::DensityMatrix rho = fef::load_state(path);
    fef::OracleConfig cfg;
    cfg.seed = flags.seed;
    cfg.restarts = flags.restarts;
    cfg.max_iters = flags.iters;
    const fef::OracleResult result = fef::oracle_fef(rho, cfg);
    const fef::GeneratorBasis basis = fef::build_generator_basis(rho.dim_a);
    const double bound = fef::fef_upper_bound(rho, basis);

    print_value("oracle_best", result.best_value);
    print_value("upper_bound", bound);
    print_value("gap_to_bound", bound - result.best_value);
    std::printf("best_restart: %d\n", result.best_restart);
    std::printf("restarts: %d\n", flags.restarts);
    std::printf("seed: %llu\n", (unsigned long long)flags.seed);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Fully-entangled-fraction toolkit: fidelity bounds, "
                 "distillation advice, and figure sweeps"};
    app.require_subcommand(1);

    std::string state_path;
    std::string out_path;
    int steps = 1000;
    bool with_oracle = false;
    OracleFlags oracle_flags;
    std::optional<std::uint64_t> basis_seed;

    CLI::App* report = app.add_subcommand(
        "report", "fidelity, FEF upper bound and exact two-qubit values");
    report->add_option("state", state_path, "state file (JSON)")->required();
    report->add_flag("--oracle", with_oracle,
                     "also run the unitary-search lower bound");
    add_oracle_flags(report, oracle_flags);
    std::uint64_t basis_seed_value = 0;
    CLI::Option* basis_opt = report->add_option(
        "--basis-seed", basis_seed_value,
        "audit invariance: evaluate in a randomly rotated generator basis");

    CLI::App* advise = app.add_subcommand(
        "advise", "reduction criterion and filtering-vs-direct advice");
    advise->add_option("state", state_path, "state file (JSON)")->required();

    CLI::App* fig1 = app.add_subcommand(
        "sweep-fig1",
        "qutrit noise family: fidelity and bound vs the 1/3 threshold (CSV)");
    fig1->add_option("--steps", steps, "grid resolution (rows = steps+1)")
        ->check(CLI::Range(2, 100000000));
    fig1->add_option("--out", out_path, "CSV path (stdout if omitted)");

    CLI::App* fig2 = app.add_subcommand(
        "sweep-fig2",
        "W family: normalized FEF vs the concurrence tradeoff bound (CSV)");
    fig2->add_option("--steps", steps, "grid resolution (rows = steps+1)")
        ->check(CLI::Range(2, 100000000));
    fig2->add_option("--out", out_path, "CSV path (stdout if omitted)");

    CLI::App* oracle = app.add_subcommand(
        "oracle", "derivative-free unitary search (FEF lower bound)");
    oracle->add_option("state", state_path, "state file (JSON)")->required();
    add_oracle_flags(oracle, oracle_flags);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            return app.exit(e);  // --help / --version
        }
        std::cerr << "error: " << e.what() << "\n\n" << app.help();
        return kExitParse;
    }

    if (basis_opt->count() > 0) basis_seed = basis_seed_value;

    try {
        if (report->parsed())
            return run_report(state_path, with_oracle, oracle_flags,
                              basis_seed);
        if (advise->parsed()) return run_advise(state_path);
        if (fig1->parsed()) return run_sweep_thresholds(steps, out_path);
        if (fig2->parsed()) return run_sweep_w(steps, out_path);
        if (oracle->parsed()) return run_oracle(state_path, oracle_flags);
    } catch (const fef::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const fef::IoError& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return kExitIo;
    } catch (const fef::Error& e) {
        std::cerr << "validation error: " << to_string(e.kind()) << ": "
                  << e.what() << "\n";
        return kExitValidation;
    }
    return 0;
}
