#include "qdb/worked_example.hpp"

#include <cmath>

namespace qdb {

FunctionTable worked_example_table() {
    return FunctionTable::from_values(2, 2, {3, 2, 1, 0});
}

const std::array<std::string, 8>& worked_example_labels() {
    static const std::array<std::string, 8> labels = {
        "psi0", "psi1", "psi2", "psi3", "psi4", "psi5", "psi6", "psi7"};
    return labels;
}

const std::array<std::array<double, 16>, 8>& worked_example_amplitudes() {
    // Basis index (I << 2) | K. Every amplitude is 0, +-1/2 or -1.
    static const std::array<std::array<double, 16>, 8> amps = {{
        // psi0 = 1/2 (|0>+|1>+|2>+|3>) x |0>
        {0.5, 0, 0, 0, 0.5, 0, 0, 0, 0.5, 0, 0, 0, 0.5, 0, 0, 0},
        // psi1 = 1/2 (|0>|3> + |1>|2> + |2>|1> + |3>|0>)
        {0, 0, 0, 0.5, 0, 0, 0.5, 0, 0, 0.5, 0, 0, 0.5, 0, 0, 0},
        // psi2: sign of |1>|2> flipped
        {0, 0, 0, 0.5, 0, 0, -0.5, 0, 0, 0.5, 0, 0, 0.5, 0, 0, 0},
        // psi3 = 1/2 (|0> - |1> + |2> + |3>) x |0>
        {0.5, 0, 0, 0, -0.5, 0, 0, 0, 0.5, 0, 0, 0, 0.5, 0, 0, 0},
        // psi4 = 1/2 (|0> + |1> - |2> + |3>) x |0>
        {0.5, 0, 0, 0, 0.5, 0, 0, 0, -0.5, 0, 0, 0, 0.5, 0, 0, 0},
        // psi5 = 1/2 (-|0> + |1> - |2> + |3>) x |0>
        {-0.5, 0, 0, 0, 0.5, 0, 0, 0, -0.5, 0, 0, 0, 0.5, 0, 0, 0},
        // psi6 = -|1>|0>
        {0, 0, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
        // psi7 = -|1>|2>
        {0, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    }};
    return amps;
}

std::vector<TwoRegisterState> worked_example_states() {
    const FunctionTable table = worked_example_table();
    std::vector<TwoRegisterState> states;
    states.reserve(8);

    TwoRegisterState state(2, 2);
    state.hadamard_control();
    states.push_back(state); // psi0
    state.xor_function(table);
    states.push_back(state); // psi1
    state.phase_flip_target(kWorkedExampleTarget);
    states.push_back(state); // psi2
    state.xor_function(table);
    states.push_back(state); // psi3
    state.hadamard_control();
    states.push_back(state); // psi4
    state.phase_flip_control(0);
    states.push_back(state); // psi5
    state.hadamard_control();
    states.push_back(state); // psi6
    state.xor_function(table);
    states.push_back(state); // psi7
    return states;
}

std::optional<TraceDivergence>
first_trace_divergence(const std::vector<TwoRegisterState>& states, double tol) {
    const auto& expected = worked_example_amplitudes();
    for (std::size_t step = 0; step < expected.size() && step < states.size(); ++step) {
        const auto amps = states[step].amplitudes();
        for (std::size_t j = 0; j < expected[step].size(); ++j) {
            if (std::abs(amps[j] - Complex{expected[step][j], 0.0}) > tol) {
                return TraceDivergence{static_cast<int>(step), j, amps[j], expected[step][j]};
            }
        }
    }
    return std::nullopt;
}

} // namespace qdb
