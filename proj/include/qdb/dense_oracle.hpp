// dense_oracle.hpp
// Brute-force dense matrices for every operator the fast kernels implement,
// plus their product in search-step order. Deliberately naive: this module
// exists to cross-check the kernels on small systems, capped at 10 total
// qubits so tests stay in seconds.

#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "qdb/errors.hpp"
#include "qdb/function_table.hpp"

namespace qdb {

using Complex = std::complex<double>;

class DenseMatrix {
public:
    DenseMatrix() = default;
    explicit DenseMatrix(std::size_t dim) : dim_(dim), a_(dim * dim) {}

    std::size_t dim() const { return dim_; }
    Complex& at(std::size_t row, std::size_t col) { return a_[row * dim_ + col]; }
    const Complex& at(std::size_t row, std::size_t col) const { return a_[row * dim_ + col]; }

    std::vector<Complex> apply(std::span<const Complex> vec) const;
    DenseMatrix multiply(const DenseMatrix& rhs) const;
    DenseMatrix conjugate_transpose() const;

    // max |entry - identity entry|
    double max_deviation_from_identity() const;

private:
    std::size_t dim_ = 0;
    std::vector<Complex> a_;
};

inline constexpr int kDenseOracleMaxBits = 10;

// Hadamard on every control qubit, identity on the target register.
// Entry ((I,K),(J,K')) = delta_{K,K'} (-1)^popcount(I & J) / sqrt(2^lc).
DenseMatrix dense_hadamard_control(int control_bits, int target_bits);

// Permutation matrix of |I>x|K> -> |I>x|K xor f(I)>.
DenseMatrix dense_function_xor(const FunctionTable& table);

// Diagonal reflections: -1 where the register equals the marked value.
DenseMatrix dense_phase_flip_control(int control_bits, int target_bits, std::uint64_t control_value);
DenseMatrix dense_phase_flip_target(int control_bits, int target_bits, std::uint64_t target_value);

// Product U_f H S_0 H U_f S_t (rightmost factor applied first), built by
// explicit matrix multiplication of the five matrices above.
DenseMatrix dense_grover_step(const FunctionTable& table, std::uint64_t target_value);

} // namespace qdb
