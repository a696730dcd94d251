#include "qdb/grover.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace qdb {

TwoRegisterState prepare_initial(const FunctionTable& table) {
    TwoRegisterState state(table.control_bits(), table.target_bits());
    state.hadamard_control();
    state.xor_function(table);
    return state;
}

void grover_step(TwoRegisterState& state, const FunctionTable& table,
                 std::uint64_t target_value) {
    state.phase_flip_target(target_value);
    state.xor_function(table);
    state.hadamard_control();
    state.phase_flip_control(0);
    state.hadamard_control();
    state.xor_function(table);
}

IterationCount iteration_count(int control_bits, std::size_t solution_count) {
    if (solution_count == 0) {
        throw NoSolutionError("searched value has no preimage (g = 0)");
    }
    const double beta = beta_of(control_bits, solution_count);
    const double nu = std::numbers::pi / (4.0 * beta) - 0.5;
    // lround rounds halfway cases away from zero; nu >= 0 for any valid g.
    const long n = std::max(0L, std::lround(nu));
    return {static_cast<int>(n), nu};
}

double solution_weight(const TwoRegisterState& state, const FunctionTable& table,
                       std::uint64_t target_value) {
    double weight = 0.0;
    for (std::size_t i = 0; i < table.domain_size(); ++i) {
        if (table.value(i) == target_value) {
            weight += std::norm(state.amplitude(i, target_value));
        }
    }
    return weight;
}

SearchOutcome search(const FunctionTable& table, std::uint64_t target_value,
                     std::uint64_t seed, const SearchOptions& options) {
    if (target_value >= table.codomain_size()) {
        throw DomainError("target value " + std::to_string(target_value) + " out of range");
    }
    std::size_t g = table.multiplicity(target_value).count();
    if (g == 0) {
        if (!options.oblivious) {
            throw NoSolutionError("searched value " + std::to_string(target_value) +
                                  " has no preimage (g = 0)");
        }
        g = 1; // run anyway; the check measurement will expose the error
    }

    const int n = options.iterations ? *options.iterations
                                     : iteration_count(table.control_bits(), g).n;

    TwoRegisterState state = prepare_initial(table);
    for (int k = 0; k < n; ++k) {
        grover_step(state, table, target_value);
    }

    SearchOutcome outcome;
    outcome.iterations = n;
    outcome.global_sign = (n % 2 == 0) ? 1 : -1;
    outcome.success_probability = solution_weight(state, table, target_value);
    const MeasureResult r = state.measure(seed);
    outcome.measured_control = r.control;
    outcome.measured_target = r.target;
    outcome.verified = table.value(r.control) == target_value;
    return outcome;
}

SubspaceCoords project_subspace(const TwoRegisterState& state, const FunctionTable& table,
                                std::uint64_t target_value) {
    const MultiplicityInfo info = table.multiplicity(target_value);
    const std::size_t g = info.count();
    if (g == 0) {
        throw NoSolutionError("searched value " + std::to_string(target_value) +
                              " has no preimage (g = 0)");
    }

    Complex on_solution{};
    for (std::uint64_t i : info.preimages) {
        on_solution += state.amplitude(i, target_value);
    }
    on_solution /= std::sqrt(static_cast<double>(g));

    const std::size_t rest = table.domain_size() - g;
    Complex on_rest{};
    if (rest > 0) {
        for (std::size_t i = 0; i < table.domain_size(); ++i) {
            if (table.value(i) != target_value) {
                on_rest += state.amplitude(i, table.value(i));
            }
        }
        on_rest /= std::sqrt(static_cast<double>(rest));
    }

    SubspaceCoords coords;
    coords.on_solution = on_solution;
    coords.on_rest = on_rest;
    coords.beta = beta_of(table.control_bits(), g);

    // Residual as the norm of the explicit out-of-plane component; the
    // norm-difference shortcut would square-root cancellation noise into ~1e-8.
    const double solution_coeff = 1.0 / std::sqrt(static_cast<double>(g));
    const double rest_coeff = rest > 0 ? 1.0 / std::sqrt(static_cast<double>(rest)) : 0.0;
    const auto amps = state.amplitudes();
    double outside = 0.0;
    for (std::size_t i = 0; i < table.domain_size(); ++i) {
        const std::uint64_t fi = table.value(i);
        const std::size_t pair = (i << table.target_bits()) | fi;
        const Complex expected = (fi == target_value) ? on_solution * solution_coeff
                                                      : on_rest * rest_coeff;
        for (std::size_t k = 0; k < table.codomain_size(); ++k) {
            const std::size_t j = (i << table.target_bits()) | k;
            outside += std::norm(amps[j] - (j == pair ? expected : Complex{}));
        }
    }
    coords.residual = std::sqrt(outside);
    return coords;
}

} // namespace qdb
