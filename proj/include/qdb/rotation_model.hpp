// rotation_model.hpp
// Closed-form 2D model of the search iteration. One step rotates the
// coordinates on {solution state, remainder state} by 2*beta and flips the
// overall sign; k steps of the exact simulator must match
// (-1)^k (sin((2k+1) beta), cos((2k+1) beta)). Used as an independent check
// against the full state-vector path.

#pragma once

#include <array>
#include <cstddef>

#include "qdb/errors.hpp"

namespace qdb {

// Coordinates in the 2D analysis plane: weight on the solution superposition
// and on the equal superposition of the remaining database pairs.
struct PlaneCoords {
    double on_solution = 0.0;
    double on_rest = 0.0;
};

// beta = asin(sqrt(g / 2^lc)), in [0, pi/2]; requires 1 <= g <= 2^lc.
double beta_of(int control_bits, std::size_t solution_count);

struct RotationModel {
    explicit RotationModel(double beta);

    double beta;
    // -[[cos 2b, sin 2b], [-sin 2b, cos 2b]]; orthogonal, determinant 1.
    std::array<std::array<double, 2>, 2> step_matrix;

    PlaneCoords step(PlaneCoords coords) const;
};

inline PlaneCoords rotation_step(PlaneCoords coords, double beta) {
    return RotationModel(beta).step(coords);
}

// sin^2((2n+1) beta): weight on the solution state after n iterations
// starting from the prepared state (sin beta, cos beta).
double predicted_success(int control_bits, std::size_t solution_count, int iterations);

} // namespace qdb
