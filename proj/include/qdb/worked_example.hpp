// worked_example.hpp
// The two-qubit reference run: f(I) = 3 - I, searched value 2. The eight
// intermediate states are frozen here with their exact signed amplitudes and
// serve as the bit-level regression test for every kernel (CLI subcommand
// `trace-example` replays them).

#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "qdb/function_table.hpp"
#include "qdb/state.hpp"

namespace qdb {

inline constexpr std::uint64_t kWorkedExampleTarget = 2;

// lc = lt = 2, values {3, 2, 1, 0}.
FunctionTable worked_example_table();

// Labels "psi0" ... "psi7".
const std::array<std::string, 8>& worked_example_labels();

// Expected amplitudes, 8 states x 16 basis indices, all real.
const std::array<std::array<double, 16>, 8>& worked_example_amplitudes();

// Runs the kernels through the eight steps and returns every intermediate
// state (psi0 after the control Hadamard through psi7 after the final XOR).
std::vector<TwoRegisterState> worked_example_states();

struct TraceDivergence {
    int step = 0;           // first state that differs
    std::size_t index = 0;  // first differing basis index
    Complex actual;
    double expected = 0.0;
};

// Compares computed states against the frozen amplitudes; nullopt when all
// eight match within tol.
std::optional<TraceDivergence>
first_trace_divergence(const std::vector<TwoRegisterState>& states, double tol = 1e-12);

} // namespace qdb
