#include "qdb/function_table.hpp"

#include <fstream>
#include <numeric>
#include <sstream>
#include <string>

#include "qdb/prng.hpp"

namespace qdb {

namespace {

void check_widths(int control_bits, int target_bits) {
    if (control_bits < 1 || control_bits > 14 || target_bits < 1 || target_bits > 14 ||
        control_bits + target_bits > 27) {
        throw ConfigError("register widths out of bounds: lc=" + std::to_string(control_bits) +
                          " lt=" + std::to_string(target_bits));
    }
}

} // namespace

FunctionTable FunctionTable::from_values(int control_bits, int target_bits,
                                         std::vector<std::uint64_t> values) {
    check_widths(control_bits, target_bits);
    const std::size_t domain = std::size_t{1} << control_bits;
    const std::uint64_t codomain = std::uint64_t{1} << target_bits;
    if (values.size() != domain) {
        throw ValidationError("table has " + std::to_string(values.size()) + " entries, expected " +
                              std::to_string(domain));
    }
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (values[i] >= codomain) {
            throw ValidationError("table entry at I=" + std::to_string(i) + " is " +
                                  std::to_string(values[i]) + ", must be < " +
                                  std::to_string(codomain));
        }
    }
    return FunctionTable(control_bits, target_bits, std::move(values));
}

FunctionTable FunctionTable::load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open table file: " + path.string());
    }

    auto fail = [&](int line, const std::string& what) {
        throw ParseError(path.string() + ":" + std::to_string(line) + ": " + what);
    };

    std::string line;
    int line_no = 0;

    int control_bits = 0;
    int target_bits = 0;
    for (;;) {
        if (!std::getline(in, line)) fail(line_no, "missing header line \"lc lt\"");
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::istringstream header(line);
        std::string extra;
        if (!(header >> control_bits >> target_bits) || (header >> extra)) {
            fail(line_no, "malformed header, expected \"lc lt\"");
        }
        break;
    }
    check_widths(control_bits, target_bits);

    const std::size_t domain = std::size_t{1} << control_bits;
    const std::uint64_t codomain = std::uint64_t{1} << target_bits;
    std::vector<std::uint64_t> values(domain, 0);
    std::vector<bool> seen(domain, false);
    std::size_t filled = 0;

    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::istringstream row(line);
        std::uint64_t input = 0;
        std::uint64_t output = 0;
        std::string extra;
        if (!(row >> input >> output) || (row >> extra)) {
            fail(line_no, "malformed row, expected \"I F\"");
        }
        if (input >= domain) fail(line_no, "I=" + std::to_string(input) + " out of range");
        if (output >= codomain) fail(line_no, "F=" + std::to_string(output) + " out of range");
        if (seen[input]) fail(line_no, "duplicate entry for I=" + std::to_string(input));
        seen[input] = true;
        values[input] = output;
        ++filled;
    }

    if (filled != domain) {
        for (std::size_t i = 0; i < domain; ++i) {
            if (!seen[i]) fail(line_no, "table incomplete, no entry for I=" + std::to_string(i));
        }
    }
    return FunctionTable(control_bits, target_bits, std::move(values));
}

void FunctionTable::save(const std::filesystem::path& path) const {
    std::ofstream out(path);
    if (!out) {
        throw ParseError("cannot open table file for writing: " + path.string());
    }
    out << control_bits_ << ' ' << target_bits_ << '\n';
    for (std::size_t i = 0; i < values_.size(); ++i) {
        out << i << ' ' << values_[i] << '\n';
    }
}

FunctionTable FunctionTable::random_permutation(int control_bits, std::uint64_t seed) {
    check_widths(control_bits, control_bits);
    std::vector<std::uint64_t> values(std::size_t{1} << control_bits);
    std::iota(values.begin(), values.end(), std::uint64_t{0});
    std::mt19937_64 rng(seed);
    seeded_shuffle(values, rng);
    return FunctionTable(control_bits, control_bits, std::move(values));
}

MultiplicityInfo FunctionTable::multiplicity(std::uint64_t target_value) const {
    if (target_value >= codomain_size()) {
        throw DomainError("target value " + std::to_string(target_value) + " out of range");
    }
    MultiplicityInfo info;
    info.target_value = target_value;
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (values_[i] == target_value) info.preimages.push_back(i);
    }
    return info;
}

bool FunctionTable::is_bijection() const {
    if (control_bits_ != target_bits_) return false;
    std::vector<bool> hit(values_.size(), false);
    for (std::uint64_t v : values_) {
        if (hit[v]) return false;
        hit[v] = true;
    }
    return true;
}

} // namespace qdb
