// state.hpp
// Two-register state vector and the elementary operators acting on it.
//
// Basis layout: the amplitude of |I>x|K> lives at index (I << lt) | K, so the
// control value occupies the high bits and each control value I owns one
// contiguous fiber of 2^lt target amplitudes. That makes the function XOR a
// per-fiber shuffle and the control Hadamard a set of coarse-stride
// butterflies. The layout is fixed; dump files and tests depend on it.

#pragma once

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <random>
#include <span>
#include <vector>

#include "qdb/errors.hpp"
#include "qdb/function_table.hpp"

namespace qdb {

using Complex = std::complex<double>;

struct MeasureResult {
    std::uint64_t control = 0;
    std::uint64_t target = 0;
};

class TwoRegisterState {
public:
    static constexpr int kMaxRegisterBits = 14;
    static constexpr int kMaxTotalBits = 27; // 2^27 amplitudes ~ 2 GiB

    // |0>x|0>: amplitude 1 at index 0.
    TwoRegisterState(int control_bits, int target_bits);

    int control_bits() const { return control_bits_; }
    int target_bits() const { return target_bits_; }
    std::size_t dim() const { return amps_.size(); }
    std::size_t control_dim() const { return std::size_t{1} << control_bits_; }
    std::size_t target_dim() const { return std::size_t{1} << target_bits_; }

    std::size_t pack_index(std::uint64_t control, std::uint64_t target) const {
        return (static_cast<std::size_t>(control) << target_bits_) | target;
    }

    Complex amplitude(std::uint64_t control, std::uint64_t target) const;

    std::span<const Complex> amplitudes() const { return amps_; }
    std::span<Complex> amplitudes() { return amps_; } // for tests and oracles

    // Single-qubit Hadamard on every control qubit; in-place butterflies over
    // strides 2^lt ... 2^(lt+lc-1). Never materializes a matrix.
    void hadamard_control();

    // |I>x|K> -> |I>x|K xor f(I)>; a pure in-place permutation, self-inverse.
    void xor_function(const FunctionTable& table);

    // Negate every amplitude whose control (target) value equals the mark.
    void phase_flip_control(std::uint64_t control_value);
    void phase_flip_target(std::uint64_t target_value);

    // Sum of |amplitude|^2 (squared 2-norm); 1 for any properly evolved state.
    double norm() const;

    // Born-rule sample of both registers. Non-destructive: the state is left
    // untouched, so many measurements can be replayed from one preparation.
    MeasureResult measure(std::uint64_t seed) const;
    std::vector<MeasureResult> measure_many(std::uint64_t seed, std::size_t count) const;

    // Collapse variant: zeroes every other amplitude and renormalizes the
    // surviving one (phase kept).
    MeasureResult measure_collapse(std::uint64_t seed);

    // Text dump, one line "index re im" per amplitude in basis-index order.
    void write_amplitudes(std::ostream& out) const;

private:
    std::size_t sample_index(std::mt19937_64& rng) const;

    int control_bits_ = 0;
    int target_bits_ = 0;
    std::vector<Complex> amps_;
};

} // namespace qdb
