#include "doctest.h"

#include <cmath>
#include <numbers>
#include <numeric>

#include "qdb/grover.hpp"
#include "qdb/worked_example.hpp"
#include "test_util.hpp"

using namespace qdb;

namespace {

const FunctionTable& example_table() {
    static const FunctionTable t = worked_example_table();
    return t;
}

// Weight of the state outside the span of valid pairs |I>x|f(I)>.
double weight_outside_database_subspace(const TwoRegisterState& s, const FunctionTable& t) {
    double inside = 0.0;
    for (std::size_t i = 0; i < t.domain_size(); ++i) {
        inside += std::norm(s.amplitude(i, t.value(i)));
    }
    return s.norm() - inside;
}

} // namespace

TEST_CASE("prepare_initial builds the database superposition") {
    const TwoRegisterState psi1 = prepare_initial(example_table());
    const auto& golden = worked_example_amplitudes()[1];
    for (std::size_t j = 0; j < psi1.dim(); ++j) {
        REQUIRE(std::abs(psi1.amplitudes()[j] - Complex{golden[j], 0.0}) <= 1e-12);
    }

    const TwoRegisterState pairs = prepare_initial(FunctionTable::from_values(1, 1, {0, 1}));
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    CHECK(std::abs(pairs.amplitude(0, 0) - Complex{inv_sqrt2, 0.0}) <= 1e-12);
    CHECK(std::abs(pairs.amplitude(1, 1) - Complex{inv_sqrt2, 0.0}) <= 1e-12);
    CHECK(std::abs(pairs.amplitude(0, 1)) <= 1e-15);
    CHECK(std::abs(pairs.amplitude(1, 0)) <= 1e-15);
}

TEST_CASE("prepare_initial puts weight 1/sqrt(2^lc) on each solution state") {
    std::mt19937_64 rng(31);
    for (int lc = 2; lc <= 6; ++lc) {
        const FunctionTable t = FunctionTable::random_permutation(lc, rng());
        const TwoRegisterState prepared = prepare_initial(t);
        const std::uint64_t f0 = uniform_below(rng, t.codomain_size());
        const SubspaceCoords coords = project_subspace(prepared, t, f0);
        const double want = 1.0 / std::sqrt(static_cast<double>(t.domain_size()));
        REQUIRE(std::abs(coords.on_solution - Complex{want, 0.0}) <= 1e-12);
        REQUIRE(std::abs(coords.on_solution.real() - std::sin(coords.beta)) <= 1e-12);
    }
}

TEST_CASE("grover_step fuses the worked example steps 3 through 8") {
    TwoRegisterState state = prepare_initial(example_table());
    grover_step(state, example_table(), kWorkedExampleTarget);
    for (std::size_t j = 0; j < state.dim(); ++j) {
        const Complex want = (j == 6) ? Complex{-1.0, 0.0} : Complex{};
        REQUIRE(std::abs(state.amplitudes()[j] - want) <= 1e-12);
    }
}

TEST_CASE("grover_step only flips the sign when f0 is outside the image") {
    // lt > lc, so 7 has no preimage under the identity embedding
    const FunctionTable t = FunctionTable::from_values(2, 3, {0, 1, 2, 3});
    const TwoRegisterState psi1 = prepare_initial(t);
    TwoRegisterState state = psi1;
    for (int k = 1; k <= 5; ++k) {
        grover_step(state, t, 7);
        const double sign = (k % 2 == 0) ? 1.0 : -1.0;
        double worst = 0.0;
        for (std::size_t j = 0; j < state.dim(); ++j) {
            worst = std::max(worst,
                             std::abs(state.amplitudes()[j] - sign * psi1.amplitudes()[j]));
        }
        REQUIRE(worst <= 1e-12);
    }
}

TEST_CASE("grover_step keeps database-subspace states in the subspace") {
    std::mt19937_64 rng(32);
    for (int trial = 0; trial < 10; ++trial) {
        const FunctionTable t = test::random_table(4, 4, rng);
        const std::uint64_t f0 = uniform_below(rng, t.codomain_size());
        TwoRegisterState state = prepare_initial(t);
        for (int k = 0; k < 4; ++k) {
            grover_step(state, t, f0);
            REQUIRE(weight_outside_database_subspace(state, t) <= 1e-12);
        }
    }
}

TEST_CASE("iteration_count is exact at lc = 2") {
    const IterationCount c = iteration_count(2, 1);
    CHECK(std::abs(c.nu - 1.0) <= 1e-14);
    CHECK(c.n == 1);
}

TEST_CASE("iteration_count is 0 when everything is a solution") {
    const IterationCount c = iteration_count(2, 4);
    CHECK(c.nu == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(c.n == 0);
}

TEST_CASE("iteration_count at lc = 3 takes two passes") {
    const IterationCount c = iteration_count(3, 1);
    CHECK(c.nu == doctest::Approx(1.673).epsilon(1e-3));
    CHECK(c.n == 2);
    // Independent check: N = 2 maximizes the success probability.
    const double best = predicted_success(3, 1, c.n);
    for (int n : {1, 2, 3}) {
        CHECK(predicted_success(3, 1, n) <= best + 1e-15);
    }
}

TEST_CASE("iteration_count rejects g = 0") {
    CHECK_THROWS_AS(iteration_count(4, 0), NoSolutionError);
}

TEST_CASE("the lc = 1 rounding tie is observably irrelevant") {
    const IterationCount c = iteration_count(1, 1);
    CHECK(std::abs(c.nu - 0.5) <= 1e-14);
    CHECK((c.n == 0 || c.n == 1));
    // both candidate counts succeed with probability exactly 1/2
    CHECK(predicted_success(1, 1, 0) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(predicted_success(1, 1, 1) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("search solves the worked example in one pass") {
    const SearchOutcome outcome = search(example_table(), 2, /*seed=*/5);
    CHECK(outcome.measured_control == 1);
    CHECK(outcome.measured_target == 2);
    CHECK(outcome.verified);
    CHECK(outcome.iterations == 1);
    CHECK(outcome.global_sign == -1);
    CHECK(outcome.success_probability == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("search needs zero iterations when every entry matches") {
    const FunctionTable t = FunctionTable::from_values(2, 3, {5, 5, 5, 5});
    const SearchOutcome outcome = search(t, 5, 17);
    CHECK(outcome.iterations == 0);
    CHECK(outcome.verified);
    CHECK(outcome.measured_target == 5);
    CHECK(outcome.global_sign == 1);
    CHECK(outcome.success_probability == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("search matches the closed-form success probability at lc = 8") {
    const FunctionTable t = FunctionTable::random_permutation(8, 41);
    const std::uint64_t f0 = 200;
    std::size_t verified = 0;
    const std::size_t runs = 50;
    for (std::uint64_t seed = 0; seed < runs; ++seed) {
        const SearchOutcome outcome = search(t, f0, seed);
        if (outcome.verified) ++verified;
        REQUIRE(outcome.success_probability ==
                doctest::Approx(predicted_success(8, 1, outcome.iterations)).epsilon(1e-10));
    }
    // failure probability is 5.3e-5; these seeds all succeed
    CHECK(static_cast<double>(verified) / runs >= 1.0 - 1.0 / 256.0);
}

TEST_CASE("search honors the iteration override") {
    SearchOptions options;
    options.iterations = 0;
    const SearchOutcome outcome = search(example_table(), 2, 1, options);
    CHECK(outcome.iterations == 0);
    CHECK(outcome.success_probability == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(outcome.global_sign == 1);
}

TEST_CASE("search fails fast on g = 0 unless oblivious") {
    const FunctionTable t = FunctionTable::from_values(2, 3, {0, 1, 2, 3});
    CHECK_THROWS_AS(search(t, 7, 1), NoSolutionError);
    CHECK_THROWS_AS(search(t, 9, 1), DomainError); // out of range entirely

    SearchOptions options;
    options.oblivious = true;
    const SearchOutcome outcome = search(t, 7, 1, options);
    CHECK_FALSE(outcome.verified);
    CHECK(outcome.measured_target != 7); // the persistent check error
    CHECK(outcome.success_probability == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(outcome.iterations == iteration_count(2, 1).n);
}

TEST_CASE("the oblivious no-solution state keeps a uniform control marginal") {
    const FunctionTable t = FunctionTable::from_values(3, 4, {0, 1, 2, 3, 4, 5, 6, 7});
    TwoRegisterState state = prepare_initial(t);
    for (int k = 0; k < iteration_count(3, 1).n; ++k) grover_step(state, t, 15);
    for (std::size_t i = 0; i < t.domain_size(); ++i) {
        double marginal = 0.0;
        for (std::size_t f = 0; f < t.codomain_size(); ++f) {
            marginal += std::norm(state.amplitude(i, f));
        }
        REQUIRE(marginal == doctest::Approx(1.0 / 8.0).epsilon(1e-12));
    }

    // sampling agrees with the amplitude marginal
    std::array<std::size_t, 8> counts{};
    const std::size_t samples = 20000;
    for (const MeasureResult& r : state.measure_many(606, samples)) ++counts[r.control];
    for (std::size_t i = 0; i < counts.size(); ++i) {
        REQUIRE(std::abs(counts[i] / static_cast<double>(samples) - 0.125) < 0.02);
    }
}

TEST_CASE("project_subspace reproduces the worked example coordinates") {
    const TwoRegisterState psi1 = prepare_initial(example_table());
    const SubspaceCoords coords = project_subspace(psi1, example_table(), 2);
    CHECK(std::abs(coords.on_solution - Complex{0.5, 0.0}) <= 1e-12);
    CHECK(std::abs(coords.on_rest - Complex{std::sqrt(3.0) / 2.0, 0.0}) <= 1e-12);
    CHECK(coords.residual <= 1e-10);
    CHECK(coords.beta == doctest::Approx(std::numbers::pi / 6).epsilon(1e-14));

    TwoRegisterState psi7 = psi1;
    grover_step(psi7, example_table(), 2);
    const SubspaceCoords end = project_subspace(psi7, example_table(), 2);
    CHECK(std::abs(end.on_solution - Complex{-1.0, 0.0}) <= 1e-12);
    CHECK(std::abs(end.on_rest) <= 1e-12);
    CHECK(end.residual <= 1e-10);
}

TEST_CASE("project_subspace handles the everything-matches edge case") {
    const FunctionTable t = FunctionTable::from_values(2, 3, {5, 5, 5, 5});
    const SubspaceCoords coords = project_subspace(prepare_initial(t), t, 5);
    CHECK(std::abs(coords.on_solution - Complex{1.0, 0.0}) <= 1e-12);
    CHECK(coords.on_rest == Complex{});
    CHECK(coords.residual <= 1e-10);
}

TEST_CASE("project_subspace rejects g = 0") {
    const FunctionTable t = FunctionTable::from_values(2, 3, {0, 1, 2, 3});
    CHECK_THROWS_AS(project_subspace(prepare_initial(t), t, 7), NoSolutionError);
}

TEST_CASE("subspace coordinates satisfy the completeness identity") {
    std::mt19937_64 rng(33);
    for (int trial = 0; trial < 10; ++trial) {
        const FunctionTable t = test::random_table(4, 4, rng);
        const std::uint64_t f0 = t.value(uniform_below(rng, t.domain_size()));
        TwoRegisterState state = prepare_initial(t);
        for (int k = 0; k < 3; ++k) {
            grover_step(state, t, f0);
            const SubspaceCoords c = project_subspace(state, t, f0);
            const double total =
                std::norm(c.on_solution) + std::norm(c.on_rest) + c.residual * c.residual;
            REQUIRE(total == doctest::Approx(1.0).epsilon(1e-10));
        }
    }
}

TEST_CASE("the simulator trajectory follows the rotation law") {
    std::mt19937_64 rng(34);
    for (int lc : {2, 3, 5}) {
        const FunctionTable t = FunctionTable::random_permutation(lc, rng());
        const std::uint64_t f0 = uniform_below(rng, t.codomain_size());
        const double beta = beta_of(lc, 1);
        const RotationModel model(beta);
        const int n = iteration_count(lc, 1).n;
        TwoRegisterState state = prepare_initial(t);
        PlaneCoords plane{std::sin(beta), std::cos(beta)};
        for (int k = 0; k <= 4 * n; ++k) {
            if (k > 0) {
                grover_step(state, t, f0);
                plane = model.step(plane);
            }
            const SubspaceCoords c = project_subspace(state, t, f0);
            const double sign = (k % 2 == 0) ? 1.0 : -1.0;
            REQUIRE(std::abs(c.on_solution - Complex{sign * std::sin((2 * k + 1) * beta), 0.0}) <=
                    1e-10);
            REQUIRE(std::abs(c.on_rest - Complex{sign * std::cos((2 * k + 1) * beta), 0.0}) <=
                    1e-10);
            REQUIRE(std::abs(c.on_solution - Complex{plane.on_solution, 0.0}) <= 1e-10);
            REQUIRE(std::abs(c.on_rest - Complex{plane.on_rest, 0.0}) <= 1e-10);
            REQUIRE(c.residual <= 1e-10);
        }
    }
}

TEST_CASE("the rotation law holds for degenerate and non-bijective tables") {
    std::mt19937_64 rng(35);
    for (int lc : {3, 5, 8}) {
        for (std::size_t g : {1u, 2u, 4u}) {
            // random table with exactly g preimages of f0
            const std::size_t domain = std::size_t{1} << lc;
            const std::uint64_t f0 = uniform_below(rng, domain);
            std::vector<std::uint64_t> positions(domain);
            std::iota(positions.begin(), positions.end(), 0);
            seeded_shuffle(positions, rng);
            std::vector<std::uint64_t> values(domain);
            for (std::size_t i = 0; i < domain; ++i) {
                if (i < g) {
                    values[positions[i]] = f0;
                } else {
                    std::uint64_t v;
                    do {
                        v = uniform_below(rng, domain);
                    } while (v == f0);
                    values[positions[i]] = v;
                }
            }
            const FunctionTable t = FunctionTable::from_values(lc, lc, std::move(values));
            REQUIRE(t.multiplicity(f0).count() == g);

            const RotationModel model(beta_of(lc, g));
            const int n = iteration_count(lc, g).n;
            TwoRegisterState state = prepare_initial(t);
            PlaneCoords plane{std::sin(model.beta), std::cos(model.beta)};
            for (int k = 0; k <= 2 * n; ++k) {
                if (k > 0) {
                    grover_step(state, t, f0);
                    plane = model.step(plane);
                }
                const SubspaceCoords c = project_subspace(state, t, f0);
                REQUIRE(std::abs(c.on_solution - Complex{plane.on_solution, 0.0}) <= 1e-10);
                REQUIRE(std::abs(c.on_rest - Complex{plane.on_rest, 0.0}) <= 1e-10);
                REQUIRE(c.residual <= 1e-10);
            }
        }
    }
}

TEST_CASE("degenerate solutions are amplified with equal weights") {
    const int lc = 6;
    for (std::size_t g : {2u, 4u, 8u}) {
        std::vector<std::uint64_t> values(64);
        for (std::size_t i = 0; i < 64; ++i) values[i] = (i < g) ? 0 : i;
        const FunctionTable t = FunctionTable::from_values(lc, 6, std::move(values));

        const int n = iteration_count(lc, g).n;
        TwoRegisterState state = prepare_initial(t);
        for (int k = 0; k < n; ++k) grover_step(state, t, 0);

        const Complex first = state.amplitude(0, 0);
        for (std::size_t r = 1; r < g; ++r) {
            REQUIRE(std::abs(state.amplitude(r, 0) - first) <= 1e-10);
        }
        const double total = solution_weight(state, t, 0);
        CHECK(total == doctest::Approx(predicted_success(lc, g, n)).epsilon(1e-10));
        CHECK(total >= 1.0 - 2.0 * static_cast<double>(g) / 64.0);
    }
}

TEST_CASE("solution_weight sums exactly the marked amplitudes") {
    const TwoRegisterState psi1 = prepare_initial(example_table());
    CHECK(solution_weight(psi1, example_table(), 2) == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(solution_weight(psi1, example_table(), 0) == doctest::Approx(0.25).epsilon(1e-12));
}
