#include "qdb/state.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>
#include <utility>

#include "qdb/prng.hpp"

namespace qdb {

TwoRegisterState::TwoRegisterState(int control_bits, int target_bits)
    : control_bits_(control_bits), target_bits_(target_bits) {
    if (control_bits < 1 || control_bits > kMaxRegisterBits || target_bits < 1 ||
        target_bits > kMaxRegisterBits || control_bits + target_bits > kMaxTotalBits) {
        throw ConfigError("register widths out of bounds: lc=" + std::to_string(control_bits) +
                          " lt=" + std::to_string(target_bits));
    }
    amps_.assign(std::size_t{1} << (control_bits + target_bits), Complex{});
    amps_[0] = Complex{1.0, 0.0};
}

Complex TwoRegisterState::amplitude(std::uint64_t control, std::uint64_t target) const {
    if (control >= control_dim() || target >= target_dim()) {
        throw DomainError("basis value out of range: I=" + std::to_string(control) +
                          " K=" + std::to_string(target));
    }
    return amps_[pack_index(control, target)];
}

void TwoRegisterState::hadamard_control() {
    // Butterflies over the control strides. Pairs of qubits are fused into
    // radix-4 passes: half the sweeps over the array, and the combined scale
    // of 1/2 is exact in binary.
    int q = 0;
    if (control_bits_ % 2 == 1) {
        const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
        const std::size_t half = std::size_t{1} << target_bits_;
        for (std::size_t base = 0; base < amps_.size(); base += 2 * half) {
            for (std::size_t off = 0; off < half; ++off) {
                const Complex a = amps_[base + off];
                const Complex b = amps_[base + off + half];
                amps_[base + off] = (a + b) * inv_sqrt2;
                amps_[base + off + half] = (a - b) * inv_sqrt2;
            }
        }
        q = 1;
    }
    for (; q < control_bits_; q += 2) {
        const std::size_t s = std::size_t{1} << (target_bits_ + q);
        for (std::size_t base = 0; base < amps_.size(); base += 4 * s) {
            for (std::size_t off = 0; off < s; ++off) {
                const Complex a = amps_[base + off];
                const Complex b = amps_[base + off + s];
                const Complex c = amps_[base + off + 2 * s];
                const Complex d = amps_[base + off + 3 * s];
                const Complex ab = a + b;
                const Complex amb = a - b;
                const Complex cd = c + d;
                const Complex cmd = c - d;
                amps_[base + off] = (ab + cd) * 0.5;
                amps_[base + off + s] = (amb + cmd) * 0.5;
                amps_[base + off + 2 * s] = (ab - cd) * 0.5;
                amps_[base + off + 3 * s] = (amb - cmd) * 0.5;
            }
        }
    }
}

void TwoRegisterState::xor_function(const FunctionTable& table) {
    if (table.control_bits() != control_bits_ || table.target_bits() != target_bits_) {
        throw ConfigError("table widths (" + std::to_string(table.control_bits()) + "," +
                          std::to_string(table.target_bits()) + ") do not match state widths (" +
                          std::to_string(control_bits_) + "," + std::to_string(target_bits_) + ")");
    }
    const std::size_t fiber = target_dim();
    for (std::size_t i = 0; i < control_dim(); ++i) {
        const std::uint64_t shift = table.value(i);
        if (shift == 0) continue;
        const std::size_t base = i << target_bits_;
        for (std::size_t k = 0; k < fiber; ++k) {
            const std::size_t j = k ^ shift;
            if (k < j) std::swap(amps_[base + k], amps_[base + j]);
        }
    }
}

void TwoRegisterState::phase_flip_control(std::uint64_t control_value) {
    if (control_value >= control_dim()) {
        throw DomainError("control value " + std::to_string(control_value) + " out of range");
    }
    const std::size_t base = control_value << target_bits_;
    for (std::size_t k = 0; k < target_dim(); ++k) {
        amps_[base + k] = -amps_[base + k];
    }
}

void TwoRegisterState::phase_flip_target(std::uint64_t target_value) {
    if (target_value >= target_dim()) {
        throw DomainError("target value " + std::to_string(target_value) + " out of range");
    }
    for (std::size_t base = target_value; base < amps_.size(); base += target_dim()) {
        amps_[base] = -amps_[base];
    }
}

double TwoRegisterState::norm() const {
    double total = 0.0;
    for (const Complex& a : amps_) total += std::norm(a);
    return total;
}

std::size_t TwoRegisterState::sample_index(std::mt19937_64& rng) const {
    const double u = canonical_double(rng);
    double cumulative = 0.0;
    std::size_t last_supported = 0;
    for (std::size_t j = 0; j < amps_.size(); ++j) {
        const double p = std::norm(amps_[j]);
        if (p == 0.0) continue;
        cumulative += p;
        last_supported = j;
        if (u < cumulative) return j;
    }
    return last_supported; // u landed in rounding slack past the last bin
}

MeasureResult TwoRegisterState::measure(std::uint64_t seed) const {
    std::mt19937_64 rng(seed);
    if (std::abs(norm() - 1.0) > 1e-6) {
        throw StateCorruptionError("state norm " + std::to_string(norm()) +
                                   " too far from 1 to measure");
    }
    const std::size_t j = sample_index(rng);
    return {j >> target_bits_, j & (target_dim() - 1)};
}

std::vector<MeasureResult> TwoRegisterState::measure_many(std::uint64_t seed,
                                                          std::size_t count) const {
    std::mt19937_64 rng(seed);
    if (std::abs(norm() - 1.0) > 1e-6) {
        throw StateCorruptionError("state norm " + std::to_string(norm()) +
                                   " too far from 1 to measure");
    }
    std::vector<MeasureResult> results;
    results.reserve(count);
    for (std::size_t n = 0; n < count; ++n) {
        const std::size_t j = sample_index(rng);
        results.push_back({j >> target_bits_, j & (target_dim() - 1)});
    }
    return results;
}

MeasureResult TwoRegisterState::measure_collapse(std::uint64_t seed) {
    const MeasureResult r = measure(seed);
    const std::size_t keep = pack_index(r.control, r.target);
    const Complex survivor = amps_[keep];
    amps_.assign(amps_.size(), Complex{});
    amps_[keep] = survivor / std::abs(survivor);
    return r;
}

void TwoRegisterState::write_amplitudes(std::ostream& out) const {
    char buf[64];
    for (std::size_t j = 0; j < amps_.size(); ++j) {
        std::snprintf(buf, sizeof buf, "%zu %.17g %.17g", j, amps_[j].real(), amps_[j].imag());
        out << buf << '\n';
    }
}

} // namespace qdb
