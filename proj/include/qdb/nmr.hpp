// nmr.hpp
// Spin-resonance model of the target phase flip: an auxiliary spin whose
// flip frequency depends on the target register value, driven by an ideal
// selective 180-degree pulse. Energies and frequencies share one arbitrary
// unit (hbar = 1).
//
// Convention: couplings[l-1] is the full frequency shift contributed by
// target bit l, so the level shift is +/- couplings[l-1] / 2 and the
// transition energy equals resonance_frequency exactly.

#pragma once

#include <cstdint>
#include <vector>

#include "qdb/errors.hpp"
#include "qdb/state.hpp"

namespace qdb {

struct NmrParams {
    double larmor = 0.0;            // mu * B
    std::vector<double> couplings;  // lambda_1 ... lambda_lt
    int target_bits = 0;

    // lambda_l = 2^(l-1): the smallest integer family whose signed sums are
    // all distinct, so every target value gets its own frequency.
    static NmrParams with_default_couplings(int target_bits, double larmor);
};

// Energy of the auxiliary spin in level i (0 or 1) with the target register
// holding f_value: larmor*(i - 1/2) + sum_l (couplings[l-1]/2) * (-1)^(i + bit_l).
double hamiltonian_energy(int aux_level, std::uint64_t f_value, const NmrParams& params);

// Spin-flip resonance frequency: larmor - sum_l couplings[l-1] * (-1)^bit_l.
// Equals hamiltonian_energy(1, F) - hamiltonian_energy(0, F).
double resonance_frequency(std::uint64_t f_value, const NmrParams& params);

struct FrequencyTable {
    std::vector<double> frequencies; // indexed by target value
    double min_gap = 0.0;            // minimum pairwise distance; 0 on collision
};

FrequencyTable frequency_table(const NmrParams& params);

// Idealized pulse: extend the system by an auxiliary qubit in
// (|0> - |1>)/sqrt 2, flip it where the target register equals target_value,
// factor it back out. Net effect is exactly phase_flip_target(target_value).
// Throws UnresolvablePulseError when another target value shares the
// resonance frequency.
void selective_pi_pulse(TwoRegisterState& state, std::uint64_t target_value,
                        const NmrParams& params);

} // namespace qdb
