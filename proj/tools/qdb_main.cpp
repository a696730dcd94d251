// qdb: command-line front end for the two-register search simulator.
// Subcommands: search, trace-example, sweep, oracle-check, nmr-freqs.
// Exit codes (also in README): 0 success/verified, 1 check failed or search
// not verified, 2 invalid input, 3 no solution (g = 0), 4 resource cap,
// 5 trace mismatch.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "qdb/dense_oracle.hpp"
#include "qdb/errors.hpp"
#include "qdb/function_table.hpp"
#include "qdb/grover.hpp"
#include "qdb/nmr.hpp"
#include "qdb/prng.hpp"
#include "qdb/rotation_model.hpp"
#include "qdb/state.hpp"
#include "qdb/worked_example.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitInvalidInput = 2;
constexpr int kExitNoSolution = 3;
constexpr int kExitResource = 4;
constexpr int kExitTraceMismatch = 5;

std::string fmt(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

qdb::FunctionTable resolve_table(const std::string& path, const std::string& builtin) {
    if (!path.empty() && !builtin.empty()) {
        throw qdb::ConfigError("give exactly one of --table and --builtin");
    }
    if (!path.empty()) return qdb::FunctionTable::load(path);
    if (builtin == "paper-example") return qdb::worked_example_table();
    if (builtin.empty()) throw qdb::ConfigError("a table is required: --table FILE or --builtin NAME");
    throw qdb::ConfigError("unknown builtin table \"" + builtin + "\" (available: paper-example)");
}

// ---------------------------------------------------------------- trace ----

int run_trace(const std::string& format) {
    const auto states = qdb::worked_example_states();
    const auto& labels = qdb::worked_example_labels();
    const auto divergence = qdb::first_trace_divergence(states);

    if (format == "json") {
        json out;
        out["states"] = json::array();
        for (std::size_t s = 0; s < states.size(); ++s) {
            json rec;
            rec["step"] = s;
            rec["label"] = labels[s];
            rec["amplitudes"] = json::array();
            for (const qdb::Complex& a : states[s].amplitudes()) {
                rec["amplitudes"].push_back({a.real(), a.imag()});
            }
            out["states"].push_back(std::move(rec));
        }
        out["match"] = !divergence.has_value();
        if (!divergence) out["final_state"] = "-|1>x|2>";
        std::cout << out.dump(2) << '\n';
    } else if (format == "csv") {
        std::cout << "step,label,index,re,im\n";
        for (std::size_t s = 0; s < states.size(); ++s) {
            const auto amps = states[s].amplitudes();
            for (std::size_t j = 0; j < amps.size(); ++j) {
                std::cout << s << ',' << labels[s] << ',' << j << ',' << fmt(amps[j].real())
                          << ',' << fmt(amps[j].imag()) << '\n';
            }
        }
    } else {
        for (std::size_t s = 0; s < states.size(); ++s) {
            std::cout << "# " << labels[s] << '\n';
            states[s].write_amplitudes(std::cout);
        }
    }

    if (divergence) {
        std::cerr << "trace mismatch at step " << divergence->step << " ("
                  << labels[divergence->step] << "), index " << divergence->index << ": got ("
                  << fmt(divergence->actual.real()) << ", " << fmt(divergence->actual.imag())
                  << "), expected " << fmt(divergence->expected) << '\n';
        return kExitTraceMismatch;
    }
    if (format == "plain") {
        std::cout << "final state: -|1>x|2>  (all 8 states match within 1e-12)\n";
    }
    return kExitOk;
}

// --------------------------------------------------------------- search ----

struct SearchCmd {
    std::string table_path;
    std::string builtin;
    std::uint64_t f0 = 0;
    std::optional<int> iterations;
    std::uint64_t seed = 1;
    std::size_t samples = 1;
    bool oblivious = false;
    std::string format = "plain";
};

int run_search(const SearchCmd& cmd) {
    const qdb::FunctionTable table = resolve_table(cmd.table_path, cmd.builtin);

    qdb::SearchOptions options;
    options.iterations = cmd.iterations;
    options.oblivious = cmd.oblivious;
    const qdb::SearchOutcome outcome = qdb::search(table, cmd.f0, cmd.seed, options);

    // Empirical frequencies replay extra measurements from the same final state.
    std::vector<std::size_t> counts;
    if (cmd.samples > 1) {
        qdb::TwoRegisterState state = qdb::prepare_initial(table);
        for (int k = 0; k < outcome.iterations; ++k) qdb::grover_step(state, table, cmd.f0);
        counts.assign(table.domain_size(), 0);
        for (const qdb::MeasureResult& r : state.measure_many(cmd.seed, cmd.samples)) {
            ++counts[r.control];
        }
    }

    if (cmd.format == "json") {
        json out;
        out["measured_i"] = outcome.measured_control;
        out["measured_f"] = outcome.measured_target;
        out["verified"] = outcome.verified;
        out["iterations"] = outcome.iterations;
        out["success_probability"] = outcome.success_probability;
        out["global_sign"] = outcome.global_sign;
        if (!counts.empty()) {
            out["samples"] = cmd.samples;
            out["control_frequencies"] = json::array();
            for (std::size_t i = 0; i < counts.size(); ++i) {
                out["control_frequencies"].push_back(
                    {{"i", i},
                     {"count", counts[i]},
                     {"frequency", static_cast<double>(counts[i]) / cmd.samples}});
            }
        }
        std::cout << out.dump(2) << '\n';
    } else if (cmd.format == "csv") {
        std::cout << "measured_i,measured_f,verified,iterations,success_probability,global_sign\n"
                  << outcome.measured_control << ',' << outcome.measured_target << ','
                  << (outcome.verified ? 1 : 0) << ',' << outcome.iterations << ','
                  << fmt(outcome.success_probability) << ',' << outcome.global_sign << '\n';
        if (!counts.empty()) {
            std::cout << "i,count,frequency\n";
            for (std::size_t i = 0; i < counts.size(); ++i) {
                std::cout << i << ',' << counts[i] << ','
                          << fmt(static_cast<double>(counts[i]) / cmd.samples) << '\n';
            }
        }
    } else {
        std::cout << "I=" << outcome.measured_control << " F=" << outcome.measured_target << ' '
                  << (outcome.verified ? "verified" : "not-verified")
                  << " iterations=" << outcome.iterations
                  << " success_probability=" << fmt(outcome.success_probability)
                  << " global_sign=" << outcome.global_sign << '\n';
        for (std::size_t i = 0; i < counts.size(); ++i) {
            std::cout << "I=" << i << " count=" << counts[i]
                      << " frequency=" << fmt(static_cast<double>(counts[i]) / cmd.samples) << '\n';
        }
    }
    return outcome.verified ? kExitOk : kExitCheckFailed;
}

// ---------------------------------------------------------------- sweep ----

struct SweepCmd {
    std::string table_path;
    std::string builtin;
    std::uint64_t f0 = 0;
    int k_max = 0;
    std::string format = "csv";
};

int run_sweep(const SweepCmd& cmd) {
    const qdb::FunctionTable table = resolve_table(cmd.table_path, cmd.builtin);
    const std::size_t g = table.multiplicity(cmd.f0).count();
    if (g == 0) {
        throw qdb::NoSolutionError("searched value " + std::to_string(cmd.f0) +
                                   " has no preimage (g = 0)");
    }

    struct Row {
        int iter;
        double p_sim;
        double p_model;
        double diff;
    };
    std::vector<Row> rows;
    qdb::TwoRegisterState state = qdb::prepare_initial(table);
    for (int k = 0; k <= cmd.k_max; ++k) {
        if (k > 0) qdb::grover_step(state, table, cmd.f0);
        const double p_sim = qdb::solution_weight(state, table, cmd.f0);
        const double p_model = qdb::predicted_success(table.control_bits(), g, k);
        rows.push_back({k, p_sim, p_model, std::abs(p_sim - p_model)});
    }

    if (cmd.format == "json") {
        json out = json::array();
        for (const Row& r : rows) {
            out.push_back({{"iter", r.iter},
                           {"p_full_sim", r.p_sim},
                           {"p_analytic", r.p_model},
                           {"abs_diff", r.diff}});
        }
        std::cout << out.dump(2) << '\n';
    } else if (cmd.format == "plain") {
        for (const Row& r : rows) {
            std::cout << "iter=" << r.iter << " p_full_sim=" << fmt(r.p_sim)
                      << " p_analytic=" << fmt(r.p_model) << " abs_diff=" << fmt(r.diff) << '\n';
        }
    } else {
        std::cout << "iter,p_full_sim,p_analytic,abs_diff\n";
        for (const Row& r : rows) {
            std::cout << r.iter << ',' << fmt(r.p_sim) << ',' << fmt(r.p_model) << ','
                      << fmt(r.diff) << '\n';
        }
    }
    return kExitOk;
}

// --------------------------------------------------------- oracle-check ----

struct OracleCheckCmd {
    std::string table_path;
    std::string builtin;
    int control_bits = 0;
    int target_bits = 0;
    int tables = 1;
    std::size_t samples = 100;
    std::uint64_t seed = 1;
    std::string format = "plain";
};

qdb::TwoRegisterState random_state(int lc, int lt, std::mt19937_64& rng) {
    qdb::TwoRegisterState state(lc, lt);
    auto amps = state.amplitudes();
    double total = 0.0;
    for (qdb::Complex& a : amps) {
        // Box-Muller pair; normal components make the direction uniform.
        const double u1 = qdb::canonical_double(rng);
        const double u2 = qdb::canonical_double(rng);
        const double r = std::sqrt(-2.0 * std::log(1.0 - u1));
        a = qdb::Complex{r * std::cos(2.0 * M_PI * u2), r * std::sin(2.0 * M_PI * u2)};
        total += std::norm(a);
    }
    const double scale = 1.0 / std::sqrt(total);
    for (qdb::Complex& a : amps) a *= scale;
    return state;
}

qdb::FunctionTable random_table(int lc, int lt, std::mt19937_64& rng) {
    if (lc == lt) return qdb::FunctionTable::random_permutation(lc, rng());
    std::vector<std::uint64_t> values(std::size_t{1} << lc);
    for (std::uint64_t& v : values) v = qdb::uniform_below(rng, std::uint64_t{1} << lt);
    return qdb::FunctionTable::from_values(lc, lt, std::move(values));
}

double max_difference(std::span<const qdb::Complex> a, std::span<const qdb::Complex> b) {
    double worst = 0.0;
    for (std::size_t j = 0; j < a.size(); ++j) worst = std::max(worst, std::abs(a[j] - b[j]));
    return worst;
}

int run_oracle_check(const OracleCheckCmd& cmd) {
    std::vector<qdb::FunctionTable> tables;
    if (!cmd.table_path.empty() || !cmd.builtin.empty()) {
        tables.push_back(resolve_table(cmd.table_path, cmd.builtin));
    } else {
        if (cmd.control_bits == 0) {
            throw qdb::ConfigError("give --table, --builtin, or --control-bits");
        }
        const int lt = cmd.target_bits > 0 ? cmd.target_bits : cmd.control_bits;
        std::mt19937_64 rng(cmd.seed);
        for (int t = 0; t < cmd.tables; ++t) {
            tables.push_back(random_table(cmd.control_bits, lt, rng));
        }
    }

    double worst = 0.0;
    std::string worst_op = "none";
    std::mt19937_64 rng(cmd.seed + 1);
    for (const qdb::FunctionTable& table : tables) {
        const int lc = table.control_bits();
        const int lt = table.target_bits();
        if (lc + lt > qdb::kDenseOracleMaxBits) {
            throw qdb::ResourceError("dense oracle capped at " +
                                     std::to_string(qdb::kDenseOracleMaxBits) +
                                     " total qubits, got " + std::to_string(lc + lt));
        }
        const std::uint64_t f0 = qdb::uniform_below(rng, std::uint64_t{1} << lt);
        const std::uint64_t i0 = qdb::uniform_below(rng, std::uint64_t{1} << lc);

        struct Op {
            const char* name;
            qdb::DenseMatrix matrix;
            void (*fast)(qdb::TwoRegisterState&, const qdb::FunctionTable&, std::uint64_t);
            std::uint64_t arg;
        };
        std::vector<Op> ops;
        ops.push_back({"hadamard_control", qdb::dense_hadamard_control(lc, lt),
                       [](qdb::TwoRegisterState& s, const qdb::FunctionTable&, std::uint64_t) {
                           s.hadamard_control();
                       },
                       0});
        ops.push_back({"xor_function", qdb::dense_function_xor(table),
                       [](qdb::TwoRegisterState& s, const qdb::FunctionTable& t, std::uint64_t) {
                           s.xor_function(t);
                       },
                       0});
        ops.push_back({"phase_flip_control", qdb::dense_phase_flip_control(lc, lt, i0),
                       [](qdb::TwoRegisterState& s, const qdb::FunctionTable&, std::uint64_t v) {
                           s.phase_flip_control(v);
                       },
                       i0});
        ops.push_back({"phase_flip_target", qdb::dense_phase_flip_target(lc, lt, f0),
                       [](qdb::TwoRegisterState& s, const qdb::FunctionTable&, std::uint64_t v) {
                           s.phase_flip_target(v);
                       },
                       f0});
        ops.push_back({"grover_step", qdb::dense_grover_step(table, f0),
                       [](qdb::TwoRegisterState& s, const qdb::FunctionTable& t, std::uint64_t v) {
                           qdb::grover_step(s, t, v);
                       },
                       f0});

        for (const Op& op : ops) {
            for (std::size_t n = 0; n < cmd.samples; ++n) {
                qdb::TwoRegisterState state = random_state(lc, lt, rng);
                const std::vector<qdb::Complex> dense = op.matrix.apply(state.amplitudes());
                op.fast(state, table, op.arg);
                const double dev = max_difference(state.amplitudes(), dense);
                if (dev > worst) {
                    worst = dev;
                    worst_op = op.name;
                }
            }
        }
    }

    const bool ok = worst <= 1e-12;
    if (cmd.format == "json") {
        json out;
        out["tables"] = tables.size();
        out["samples_per_operator"] = cmd.samples;
        out["max_deviation"] = worst;
        out["worst_operator"] = worst_op;
        out["ok"] = ok;
        std::cout << out.dump(2) << '\n';
    } else if (cmd.format == "csv") {
        std::cout << "tables,samples_per_operator,max_deviation,worst_operator,ok\n"
                  << tables.size() << ',' << cmd.samples << ',' << fmt(worst) << ',' << worst_op
                  << ',' << (ok ? 1 : 0) << '\n';
    } else {
        std::cout << "checked " << tables.size() << " table(s), " << cmd.samples
                  << " random states per operator\n"
                  << "max deviation " << fmt(worst) << " (worst operator: " << worst_op << ")\n"
                  << (ok ? "OK: within 1e-12\n" : "FAIL: exceeds 1e-12\n");
    }
    return ok ? kExitOk : kExitCheckFailed;
}

// ------------------------------------------------------------ nmr-freqs ----

struct NmrCmd {
    int target_bits = 2;
    double larmor = 10.0;
    std::vector<double> lambdas;
    std::string format = "csv";
};

int run_nmr_freqs(const NmrCmd& cmd) {
    qdb::NmrParams params;
    if (cmd.lambdas.empty()) {
        params = qdb::NmrParams::with_default_couplings(cmd.target_bits, cmd.larmor);
    } else {
        params.larmor = cmd.larmor;
        params.target_bits = cmd.target_bits;
        params.couplings = cmd.lambdas;
    }
    const qdb::FrequencyTable table = qdb::frequency_table(params);

    if (cmd.format == "json") {
        json out;
        out["frequencies"] = table.frequencies;
        out["min_gap"] = table.min_gap;
        std::cout << out.dump(2) << '\n';
    } else if (cmd.format == "plain") {
        for (std::size_t f = 0; f < table.frequencies.size(); ++f) {
            std::cout << "F=" << f << " omega_res=" << fmt(table.frequencies[f]) << '\n';
        }
        std::cout << "min_gap=" << fmt(table.min_gap) << '\n';
    } else {
        std::cout << "F,omega_res,min_gap\n";
        for (std::size_t f = 0; f < table.frequencies.size(); ++f) {
            std::cout << f << ',' << fmt(table.frequencies[f]) << ',' << fmt(table.min_gap)
                      << '\n';
        }
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"two-register state-vector simulator for amplitude-amplified database search"};
    app.require_subcommand(1);

    const std::vector<std::string> formats = {"plain", "csv", "json"};

    CLI::App* trace = app.add_subcommand("trace-example",
                                         "replay the built-in 2-qubit worked example and check "
                                         "every intermediate state");
    std::string trace_format = "plain";
    trace->add_option("--format", trace_format)->check(CLI::IsMember(formats));

    SearchCmd search_cmd;
    CLI::App* search = app.add_subcommand("search", "run one seeded search");
    search->add_option("--table", search_cmd.table_path, "table file");
    search->add_option("--builtin", search_cmd.builtin, "builtin table name (paper-example)");
    search->add_option("--f0", search_cmd.f0, "target value to search for")->required();
    int search_iterations = -1;
    search->add_option("--iterations", search_iterations, "override the iteration count");
    search->add_option("--seed", search_cmd.seed);
    search->add_option("--samples", search_cmd.samples,
                       "extra measurements replayed for empirical frequencies");
    search->add_flag("--oblivious", search_cmd.oblivious,
                     "run even when f0 has no preimage (g treated as 1)");
    search->add_option("--format", search_cmd.format)->check(CLI::IsMember(formats));

    SweepCmd sweep_cmd;
    CLI::App* sweep = app.add_subcommand("sweep",
                                         "success probability vs iteration count, simulator "
                                         "against the closed-form model");
    sweep->add_option("--table", sweep_cmd.table_path);
    sweep->add_option("--builtin", sweep_cmd.builtin);
    sweep->add_option("--f0", sweep_cmd.f0)->required();
    sweep->add_option("--k-max", sweep_cmd.k_max, "last iteration count")->required();
    sweep->add_option("--format", sweep_cmd.format)->check(CLI::IsMember(formats));

    OracleCheckCmd oracle_cmd;
    CLI::App* oracle = app.add_subcommand("oracle-check",
                                          "compare fast kernels against dense matrices on "
                                          "random states");
    oracle->add_option("--table", oracle_cmd.table_path);
    oracle->add_option("--builtin", oracle_cmd.builtin);
    oracle->add_option("--control-bits", oracle_cmd.control_bits);
    oracle->add_option("--target-bits", oracle_cmd.target_bits);
    oracle->add_option("--tables", oracle_cmd.tables, "number of random tables");
    oracle->add_option("--samples", oracle_cmd.samples, "random states per operator");
    oracle->add_option("--seed", oracle_cmd.seed);
    oracle->add_option("--format", oracle_cmd.format)->check(CLI::IsMember(formats));

    NmrCmd nmr_cmd;
    CLI::App* nmr = app.add_subcommand("nmr-freqs",
                                       "auxiliary-spin resonance frequency table");
    nmr->add_option("--target-bits", nmr_cmd.target_bits);
    nmr->add_option("--larmor", nmr_cmd.larmor, "Larmor term mu*B");
    nmr->add_option("--lambda", nmr_cmd.lambdas,
                    "coupling per target bit, repeatable (default 2^(l-1))");
    nmr->add_option("--format", nmr_cmd.format)->check(CLI::IsMember(formats));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInvalidInput;
    }

    try {
        if (app.got_subcommand(trace)) return run_trace(trace_format);
        if (app.got_subcommand(search)) {
            if (search_iterations >= 0) search_cmd.iterations = search_iterations;
            return run_search(search_cmd);
        }
        if (app.got_subcommand(sweep)) return run_sweep(sweep_cmd);
        if (app.got_subcommand(oracle)) return run_oracle_check(oracle_cmd);
        if (app.got_subcommand(nmr)) return run_nmr_freqs(nmr_cmd);
    } catch (const qdb::NoSolutionError& e) {
        std::cerr << "no solution: " << e.what() << '\n';
        return kExitNoSolution;
    } catch (const qdb::ResourceError& e) {
        std::cerr << "resource error: " << e.what() << '\n';
        return kExitResource;
    } catch (const qdb::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInvalidInput;
    }
    return kExitInvalidInput;
}
