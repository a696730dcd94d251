// grover.hpp
// The search engine: prepares the initial database superposition, composes
// the search step, picks the iteration count, runs the loop, and projects
// states onto the 2D analysis plane.

#pragma once

#include <complex>
#include <cstdint>
#include <optional>

#include "qdb/function_table.hpp"
#include "qdb/rotation_model.hpp"
#include "qdb/state.hpp"

namespace qdb {

struct IterationCount {
    int n = 0;       // nearest integer to nu, half away from zero, >= 0
    double nu = 0.0; // pi / (4 asin(sqrt(g / 2^lc))) - 1/2
};

struct SearchOptions {
    std::optional<int> iterations; // override the computed count
    // Run even when the target value has no preimage, treating g as 1; the
    // outcome then reports verified = false. Default is to fail fast.
    bool oblivious = false;
};

struct SearchOutcome {
    std::uint64_t measured_control = 0;
    std::uint64_t measured_target = 0;
    bool verified = false;            // f(measured_control) == searched value
    int iterations = 0;
    double success_probability = 0.0; // pre-measurement weight on solutions
    int global_sign = 1;              // (-1)^iterations phase bookkeeping
};

// Coordinates of a state in the plane spanned by the solution superposition
// and the equal superposition of the remaining database pairs.
struct SubspaceCoords {
    Complex on_solution;  // overlap with (1/sqrt g) sum_r |I_r>x|F0>
    Complex on_rest;      // overlap with the normalized rest superposition
    double residual = 0.0; // norm of the component outside the plane
    double beta = 0.0;
};

// U_f H^(c) |0>x|0> = (1/sqrt 2^lc) sum_I |I>x|f(I)>.
TwoRegisterState prepare_initial(const FunctionTable& table);

// One full search step: target phase flip, function XOR, control Hadamard,
// zero phase flip, control Hadamard, function XOR.
void grover_step(TwoRegisterState& state, const FunctionTable& table, std::uint64_t target_value);

// Throws NoSolutionError when solution_count is 0.
IterationCount iteration_count(int control_bits, std::size_t solution_count);

SearchOutcome search(const FunctionTable& table, std::uint64_t target_value,
                     std::uint64_t seed, const SearchOptions& options = {});

// Requires at least one preimage. When every input is a solution the rest
// superposition is empty and on_rest is 0 by convention.
SubspaceCoords project_subspace(const TwoRegisterState& state, const FunctionTable& table,
                                std::uint64_t target_value);

// Total weight sum |amplitude(I, F0)|^2 over the preimages I of F0.
double solution_weight(const TwoRegisterState& state, const FunctionTable& table,
                       std::uint64_t target_value);

} // namespace qdb
