// function_table.hpp
// The database: an explicit table for f mapping [0, 2^lc) into [0, 2^lt).
// Tables are immutable after construction and freely shareable.

#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "qdb/errors.hpp"

namespace qdb {

// Preimage set of one target value: every I with f(I) = target_value.
// An empty preimage set (g = 0) is a valid answer, not an error.
struct MultiplicityInfo {
    std::uint64_t target_value = 0;
    std::vector<std::uint64_t> preimages;

    std::size_t count() const { return preimages.size(); } // g
};

class FunctionTable {
public:
    // Validates length (exactly 2^lc entries) and range (every entry < 2^lt).
    static FunctionTable from_values(int control_bits, int target_bits,
                                     std::vector<std::uint64_t> values);

    // Text format, see README: header "lc lt", then one "I F" line per I,
    // each I exactly once, any order.
    static FunctionTable load(const std::filesystem::path& path);
    void save(const std::filesystem::path& path) const;

    // Uniformly random bijection on [0, 2^lc), target width = control width.
    static FunctionTable random_permutation(int control_bits, std::uint64_t seed);

    int control_bits() const { return control_bits_; }
    int target_bits() const { return target_bits_; }
    std::size_t domain_size() const { return values_.size(); }   // 2^lc
    std::size_t codomain_size() const { return std::size_t{1} << target_bits_; }

    std::uint64_t value(std::uint64_t input) const { return values_[input]; }
    std::span<const std::uint64_t> values() const { return values_; }

    MultiplicityInfo multiplicity(std::uint64_t target_value) const;
    bool is_bijection() const;

    bool operator==(const FunctionTable&) const = default;

private:
    FunctionTable(int control_bits, int target_bits, std::vector<std::uint64_t> values)
        : control_bits_(control_bits), target_bits_(target_bits), values_(std::move(values)) {}

    int control_bits_ = 0;
    int target_bits_ = 0;
    std::vector<std::uint64_t> values_;
};

} // namespace qdb
