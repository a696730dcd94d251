#include "qdb/nmr.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace qdb {

namespace {

void check_target(std::uint64_t f_value, const NmrParams& params) {
    if (params.target_bits < 1 || params.target_bits > TwoRegisterState::kMaxRegisterBits) {
        throw ConfigError("target width out of bounds: lt=" + std::to_string(params.target_bits));
    }
    if (params.couplings.size() != static_cast<std::size_t>(params.target_bits)) {
        throw ConfigError("expected " + std::to_string(params.target_bits) + " couplings, got " +
                          std::to_string(params.couplings.size()));
    }
    if (f_value >= (std::uint64_t{1} << params.target_bits)) {
        throw DomainError("target value " + std::to_string(f_value) + " out of range");
    }
}

// Signed coupling sum: sum_l lambda_l * (-1)^bit_l of F.
double signed_coupling_sum(std::uint64_t f_value, const NmrParams& params) {
    double sum = 0.0;
    for (int l = 0; l < params.target_bits; ++l) {
        const bool bit = (f_value >> l) & 1;
        sum += bit ? -params.couplings[l] : params.couplings[l];
    }
    return sum;
}

} // namespace

NmrParams NmrParams::with_default_couplings(int target_bits, double larmor) {
    NmrParams params;
    params.larmor = larmor;
    params.target_bits = target_bits;
    params.couplings.resize(target_bits);
    for (int l = 0; l < target_bits; ++l) {
        params.couplings[l] = static_cast<double>(std::uint64_t{1} << l);
    }
    return params;
}

double hamiltonian_energy(int aux_level, std::uint64_t f_value, const NmrParams& params) {
    check_target(f_value, params);
    if (aux_level != 0 && aux_level != 1) {
        throw DomainError("auxiliary level must be 0 or 1, got " + std::to_string(aux_level));
    }
    const double zeeman = params.larmor * (aux_level - 0.5);
    const double sign = (aux_level == 0) ? 0.5 : -0.5;
    return zeeman + sign * signed_coupling_sum(f_value, params);
}

double resonance_frequency(std::uint64_t f_value, const NmrParams& params) {
    check_target(f_value, params);
    return params.larmor - signed_coupling_sum(f_value, params);
}

FrequencyTable frequency_table(const NmrParams& params) {
    check_target(0, params);
    FrequencyTable table;
    const std::size_t count = std::size_t{1} << params.target_bits;
    table.frequencies.resize(count);
    for (std::size_t f = 0; f < count; ++f) {
        table.frequencies[f] = resonance_frequency(f, params);
    }
    // min pairwise distance = min adjacent gap in sorted order
    table.min_gap = std::numeric_limits<double>::infinity();
    std::vector<double> sorted = table.frequencies;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t f = 1; f < count; ++f) {
        table.min_gap = std::min(table.min_gap, sorted[f] - sorted[f - 1]);
    }
    return table;
}

void selective_pi_pulse(TwoRegisterState& state, std::uint64_t target_value,
                        const NmrParams& params) {
    check_target(target_value, params);
    if (params.target_bits != state.target_bits()) {
        throw ConfigError("params target width " + std::to_string(params.target_bits) +
                          " does not match state width " + std::to_string(state.target_bits()));
    }
    const double pulse_freq = resonance_frequency(target_value, params);
    for (std::uint64_t f = 0; f < state.target_dim(); ++f) {
        if (f != target_value && resonance_frequency(f, params) == pulse_freq) {
            throw UnresolvablePulseError(
                "resonance collision: target values " + std::to_string(target_value) + " and " +
                std::to_string(f) + " share frequency " + std::to_string(pulse_freq));
        }
    }

    // Auxiliary qubit (low bit of the extended index) starts in (|0>-|1>)/sqrt 2.
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    const std::size_t dim = state.dim();
    std::vector<Complex> extended(2 * dim);
    std::span<Complex> amps = state.amplitudes();
    for (std::size_t j = 0; j < dim; ++j) {
        extended[2 * j] = amps[j] * inv_sqrt2;
        extended[2 * j + 1] = -amps[j] * inv_sqrt2;
    }

    // The resonant pulse flips the auxiliary spin exactly where the target
    // register holds target_value.
    const std::size_t target_mask = state.target_dim() - 1;
    for (std::size_t j = 0; j < dim; ++j) {
        if ((j & target_mask) == target_value) {
            std::swap(extended[2 * j], extended[2 * j + 1]);
        }
    }

    // Factor the auxiliary back out. The component along (|0>+|1>)/sqrt 2
    // measures entanglement with the auxiliary; the ideal pulse leaves none.
    double stray = 0.0;
    for (std::size_t j = 0; j < dim; ++j) {
        amps[j] = (extended[2 * j] - extended[2 * j + 1]) * inv_sqrt2;
        stray += std::norm((extended[2 * j] + extended[2 * j + 1]) * inv_sqrt2);
    }
    if (stray > 1e-24) {
        throw StateCorruptionError("auxiliary qubit left entangled, stray weight " +
                                   std::to_string(stray));
    }
}

} // namespace qdb
