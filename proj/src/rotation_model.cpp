#include "qdb/rotation_model.hpp"

#include <cmath>
#include <string>

namespace qdb {

double beta_of(int control_bits, std::size_t solution_count) {
    const std::size_t domain = std::size_t{1} << control_bits;
    if (solution_count < 1 || solution_count > domain) {
        throw DomainError("solution count " + std::to_string(solution_count) +
                          " out of range [1, " + std::to_string(domain) + "]");
    }
    return std::asin(std::sqrt(static_cast<double>(solution_count) / static_cast<double>(domain)));
}

RotationModel::RotationModel(double beta) : beta(beta) {
    const double c = std::cos(2.0 * beta);
    const double s = std::sin(2.0 * beta);
    step_matrix = {{{-c, -s}, {s, -c}}};
}

PlaneCoords RotationModel::step(PlaneCoords coords) const {
    return {step_matrix[0][0] * coords.on_solution + step_matrix[0][1] * coords.on_rest,
            step_matrix[1][0] * coords.on_solution + step_matrix[1][1] * coords.on_rest};
}

double predicted_success(int control_bits, std::size_t solution_count, int iterations) {
    const double beta = beta_of(control_bits, solution_count);
    const double s = std::sin((2.0 * iterations + 1.0) * beta);
    return s * s;
}

} // namespace qdb
