#include "qdb/dense_oracle.hpp"

#include <bit>
#include <cmath>
#include <string>

namespace qdb {

namespace {

void check_size(int control_bits, int target_bits) {
    if (control_bits + target_bits > kDenseOracleMaxBits) {
        throw ResourceError("dense oracle capped at " + std::to_string(kDenseOracleMaxBits) +
                            " total qubits, got " + std::to_string(control_bits + target_bits));
    }
}

} // namespace

std::vector<Complex> DenseMatrix::apply(std::span<const Complex> vec) const {
    if (vec.size() != dim_) {
        throw ConfigError("matrix dimension " + std::to_string(dim_) +
                          " does not match vector length " + std::to_string(vec.size()));
    }
    std::vector<Complex> out(dim_);
    for (std::size_t r = 0; r < dim_; ++r) {
        Complex acc{};
        const Complex* row = a_.data() + r * dim_;
        for (std::size_t c = 0; c < dim_; ++c) acc += row[c] * vec[c];
        out[r] = acc;
    }
    return out;
}

DenseMatrix DenseMatrix::multiply(const DenseMatrix& rhs) const {
    if (rhs.dim_ != dim_) {
        throw ConfigError("matrix dimensions do not match: " + std::to_string(dim_) + " vs " +
                          std::to_string(rhs.dim_));
    }
    DenseMatrix out(dim_);
    // i-k-j order keeps both inner operands streaming row-major.
    for (std::size_t i = 0; i < dim_; ++i) {
        const Complex* lhs_row = a_.data() + i * dim_;
        Complex* out_row = out.a_.data() + i * dim_;
        for (std::size_t k = 0; k < dim_; ++k) {
            const Complex scale = lhs_row[k];
            if (scale == Complex{}) continue;
            const Complex* rhs_row = rhs.a_.data() + k * dim_;
            for (std::size_t j = 0; j < dim_; ++j) out_row[j] += scale * rhs_row[j];
        }
    }
    return out;
}

DenseMatrix DenseMatrix::conjugate_transpose() const {
    DenseMatrix out(dim_);
    for (std::size_t r = 0; r < dim_; ++r) {
        for (std::size_t c = 0; c < dim_; ++c) {
            out.at(c, r) = std::conj(at(r, c));
        }
    }
    return out;
}

double DenseMatrix::max_deviation_from_identity() const {
    double worst = 0.0;
    for (std::size_t r = 0; r < dim_; ++r) {
        for (std::size_t c = 0; c < dim_; ++c) {
            const Complex want = (r == c) ? Complex{1.0, 0.0} : Complex{};
            worst = std::max(worst, std::abs(at(r, c) - want));
        }
    }
    return worst;
}

DenseMatrix dense_hadamard_control(int control_bits, int target_bits) {
    check_size(control_bits, target_bits);
    const std::size_t control_dim = std::size_t{1} << control_bits;
    const std::size_t target_dim = std::size_t{1} << target_bits;
    const double scale = 1.0 / std::sqrt(static_cast<double>(control_dim));
    DenseMatrix m(control_dim * target_dim);
    for (std::size_t i = 0; i < control_dim; ++i) {
        for (std::size_t j = 0; j < control_dim; ++j) {
            const double sign = (std::popcount(i & j) & 1) ? -scale : scale;
            for (std::size_t k = 0; k < target_dim; ++k) {
                m.at((i << target_bits) | k, (j << target_bits) | k) = sign;
            }
        }
    }
    return m;
}

DenseMatrix dense_function_xor(const FunctionTable& table) {
    check_size(table.control_bits(), table.target_bits());
    const std::size_t target_dim = table.codomain_size();
    DenseMatrix m(table.domain_size() * target_dim);
    for (std::size_t i = 0; i < table.domain_size(); ++i) {
        const std::size_t base = i * target_dim;
        for (std::size_t k = 0; k < target_dim; ++k) {
            m.at(base + (k ^ table.value(i)), base + k) = Complex{1.0, 0.0};
        }
    }
    return m;
}

DenseMatrix dense_phase_flip_control(int control_bits, int target_bits,
                                     std::uint64_t control_value) {
    check_size(control_bits, target_bits);
    const std::size_t dim = std::size_t{1} << (control_bits + target_bits);
    if (control_value >= (std::uint64_t{1} << control_bits)) {
        throw DomainError("control value " + std::to_string(control_value) + " out of range");
    }
    DenseMatrix m(dim);
    for (std::size_t j = 0; j < dim; ++j) {
        const bool marked = (j >> target_bits) == control_value;
        m.at(j, j) = marked ? Complex{-1.0, 0.0} : Complex{1.0, 0.0};
    }
    return m;
}

DenseMatrix dense_phase_flip_target(int control_bits, int target_bits,
                                    std::uint64_t target_value) {
    check_size(control_bits, target_bits);
    const std::size_t dim = std::size_t{1} << (control_bits + target_bits);
    if (target_value >= (std::uint64_t{1} << target_bits)) {
        throw DomainError("target value " + std::to_string(target_value) + " out of range");
    }
    const std::size_t mask = (std::size_t{1} << target_bits) - 1;
    DenseMatrix m(dim);
    for (std::size_t j = 0; j < dim; ++j) {
        const bool marked = (j & mask) == target_value;
        m.at(j, j) = marked ? Complex{-1.0, 0.0} : Complex{1.0, 0.0};
    }
    return m;
}

DenseMatrix dense_grover_step(const FunctionTable& table, std::uint64_t target_value) {
    const int lc = table.control_bits();
    const int lt = table.target_bits();
    const DenseMatrix uf = dense_function_xor(table);
    const DenseMatrix h = dense_hadamard_control(lc, lt);
    const DenseMatrix s0 = dense_phase_flip_control(lc, lt, 0);
    const DenseMatrix st = dense_phase_flip_target(lc, lt, target_value);
    return uf.multiply(h).multiply(s0).multiply(h).multiply(uf).multiply(st);
}

} // namespace qdb
