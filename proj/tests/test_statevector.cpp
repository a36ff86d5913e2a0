#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "qdc/gates.hpp"
#include "qdc/statevector.hpp"
#include "test_helpers.hpp"

using namespace qdc;
using helpers::max_amp_diff;

namespace {
constexpr double kInvSqrt2 = std::numbers::sqrt2 / 2.0;
}

TEST_CASE("init_state places the data qubit on index bit 0") {
    SUBCASE("|0> on one qubit") {
        QuantumState s = init_state(1, {1, 0}, {0, 0});
        CHECK(s.amps[0] == cplx{1, 0});
        CHECK(s.amps[1] == cplx{0, 0});
    }
    SUBCASE("|1> on three qubits lands on basis index 1") {
        QuantumState s = init_state(3, {0, 0}, {1, 0});
        for (std::size_t i = 0; i < s.dim(); ++i) {
            CHECK(s.amps[i] == (i == 1 ? cplx{1, 0} : cplx{0, 0}));
        }
    }
    SUBCASE("superposition data tensor |0>") {
        QuantumState s = init_state(2, {kInvSqrt2, 0}, {kInvSqrt2, 0});
        CHECK(std::abs(s.amps[0] - cplx{kInvSqrt2, 0}) < 1e-15);
        CHECK(std::abs(s.amps[1] - cplx{kInvSqrt2, 0}) < 1e-15);
        CHECK(s.amps[2] == cplx{0, 0});
        CHECK(s.amps[3] == cplx{0, 0});
    }
    SUBCASE("rejects a non-normalized pair") {
        CHECK_THROWS_AS(init_state(2, {1, 0}, {0.5, 0}), std::invalid_argument);
    }
    SUBCASE("rejects zero qubits") {
        CHECK_THROWS_AS(init_state(0, {1, 0}, {0, 0}), std::invalid_argument);
    }
    SUBCASE("enforces the qubit cap") {
        CHECK_THROWS_AS(init_state(3, {1, 0}, {0, 0}, 2), CapacityError);
        CHECK_NOTHROW(init_state(3, {1, 0}, {0, 0}, 3));
    }
}

TEST_CASE("apply_single") {
    SUBCASE("dephase kicks only the |1> component") {
        const double phi = 0.8371;
        QuantumState s = init_state(1, {0.6, 0}, {0.8, 0});
        apply_single(s, dephase_gate(0.0, phi), 0);
        CHECK(std::abs(s.amps[0] - cplx{0.6, 0}) < 1e-15);
        CHECK(std::abs(s.amps[1] - 0.8 * std::polar(1.0, phi)) < 1e-15);
    }
    SUBCASE("identity leaves the state alone") {
        std::mt19937_64 rng(7);
        QuantumState s{3, helpers::random_state_vector(3, rng)};
        const auto before = s.amps;
        apply_single(s, Mat2::identity(), 1);
        CHECK(max_amp_diff(before, s.amps) == 0.0);
    }
    SUBCASE("a unitary followed by its adjoint restores the state") {
        std::mt19937_64 rng(8);
        for (int rep = 0; rep < 20; ++rep) {
            QuantumState s{3, helpers::random_state_vector(3, rng)};
            const auto before = s.amps;
            const Mat2 u = helpers::random_unitary(rng);
            REQUIRE(u.is_unitary());
            const int target = rep % 3;
            apply_single(s, u, target);
            apply_single(s, u.adjoint(), target);
            CHECK(max_amp_diff(before, s.amps) < 1e-12);
        }
    }
    SUBCASE("matches the dense-matrix oracle on every target") {
        std::mt19937_64 rng(9);
        for (int target = 0; target < 4; ++target) {
            QuantumState s{4, helpers::random_state_vector(4, rng)};
            const Mat2 u = helpers::random_unitary(rng);
            const auto expected =
                helpers::mat_vec(helpers::embed_single(4, target, u), s.amps);
            apply_single(s, u, target);
            CHECK(max_amp_diff(expected, s.amps) < 1e-13);
        }
    }
    SUBCASE("rejects an out-of-range target") {
        QuantumState s = init_state(2, {1, 0}, {0, 0});
        CHECK_THROWS_AS(apply_single(s, Mat2::identity(), 2), std::out_of_range);
        CHECK_THROWS_AS(apply_single(s, Mat2::identity(), -1), std::out_of_range);
    }
}

TEST_CASE("apply_controlled_not") {
    SUBCASE("CNOT truth table") {
        QuantumState s = init_state(2, {0, 0}, {1, 0});  // q0=1, q1=0
        const int controls[] = {0};
        apply_controlled_not(s, controls, 1);
        CHECK(s.amps[3] == cplx{1, 0});
    }
    SUBCASE("double-controlled NOT fires only on 11 controls") {
        QuantumState s = init_state(3, {1, 0}, {0, 0});
        s.amps[0] = 0;
        s.amps[6] = 1;  // q1 = q2 = 1, q0 = 0
        const int controls[] = {1, 2};
        apply_controlled_not(s, controls, 0);
        CHECK(s.amps[7] == cplx{1, 0});
        CHECK(s.amps[6] == cplx{0, 0});
    }
    SUBCASE("no controls is a plain NOT") {
        QuantumState s = init_state(1, {0.6, 0}, {0, 0.8});
        apply_controlled_not(s, {}, 0);
        CHECK(s.amps[0] == cplx{0, 0.8});
        CHECK(s.amps[1] == cplx{0.6, 0});
    }
    SUBCASE("rejects overlapping or duplicate operands") {
        QuantumState s = init_state(2, {1, 0}, {0, 0});
        const int overlap[] = {1};
        CHECK_THROWS_AS(apply_controlled_not(s, overlap, 1), std::invalid_argument);
        const int dup[] = {0, 0};
        CHECK_THROWS_AS(apply_controlled_not(s, dup, 1), std::invalid_argument);
    }
    SUBCASE("self-inverse, bit-exactly") {
        std::mt19937_64 rng(10);
        QuantumState s{4, helpers::random_state_vector(4, rng)};
        const auto before = s.amps;
        const int controls[] = {0, 3};
        apply_controlled_not(s, controls, 2);
        apply_controlled_not(s, controls, 2);
        CHECK(before == s.amps);
    }
    SUBCASE("matches a naive permutation oracle") {
        std::mt19937_64 rng(11);
        QuantumState s{4, helpers::random_state_vector(4, rng)};
        const int controls[] = {1, 3};
        const int target = 0;
        std::vector<cplx> expected(s.dim());
        for (std::size_t i = 0; i < s.dim(); ++i) {
            bool fire = ((i >> 1) & 1) && ((i >> 3) & 1);
            expected[fire ? (i ^ 1u) : i] = s.amps[i];
        }
        apply_controlled_not(s, controls, target);
        CHECK(max_amp_diff(expected, s.amps) == 0.0);
    }
}

TEST_CASE("apply_majority_not") {
    SUBCASE("three of four controls flips the target") {
        QuantumState s = init_state(5, {1, 0}, {0, 0});
        s.amps[0] = 0;
        s.amps[0b01110] = 1;  // controls 1,2,3 set, control 4 clear
        const int controls[] = {1, 2, 3, 4};
        apply_majority_not(s, controls, 0);
        CHECK(s.amps[0b01111] == cplx{1, 0});
    }
    SUBCASE("a tie does not flip") {
        QuantumState s = init_state(5, {1, 0}, {0, 0});
        s.amps[0] = 0;
        s.amps[0b00110] = 1;  // exactly 2 of 4 controls
        const int controls[] = {1, 2, 3, 4};
        apply_majority_not(s, controls, 0);
        CHECK(s.amps[0b00110] == cplx{1, 0});
    }
    SUBCASE("one control degenerates to CNOT") {
        std::mt19937_64 rng(12);
        QuantumState a{3, helpers::random_state_vector(3, rng)};
        QuantumState b = a;
        const int controls[] = {2};
        apply_majority_not(a, controls, 0);
        apply_controlled_not(b, controls, 0);
        CHECK(a.amps == b.amps);
    }
    SUBCASE("exhaustive against a naive bit-count oracle") {
        const int controls[] = {1, 2, 3, 4};
        for (std::size_t basis = 0; basis < 32; ++basis) {
            QuantumState s = init_state(5, {1, 0}, {0, 0});
            s.amps[0] = 0;
            s.amps[basis] = 1;
            apply_majority_not(s, controls, 0);
            int ones = 0;
            for (int c : controls) ones += (basis >> c) & 1;
            const std::size_t expected = 2 * ones > 4 ? (basis ^ 1u) : basis;
            CHECK(s.amps[expected] == cplx{1, 0});
        }
    }
    SUBCASE("needs at least one control and a disjoint target") {
        QuantumState s = init_state(3, {1, 0}, {0, 0});
        CHECK_THROWS_AS(apply_majority_not(s, {}, 0), std::invalid_argument);
        const int controls[] = {0, 1};
        CHECK_THROWS_AS(apply_majority_not(s, controls, 1), std::invalid_argument);
    }
    SUBCASE("self-inverse, bit-exactly") {
        std::mt19937_64 rng(13);
        QuantumState s{5, helpers::random_state_vector(5, rng)};
        const auto before = s.amps;
        const int controls[] = {1, 2, 3, 4};
        apply_majority_not(s, controls, 0);
        apply_majority_not(s, controls, 0);
        CHECK(before == s.amps);
    }
}

TEST_CASE("apply_controlled_phase") {
    SUBCASE("phases only the 11 component") {
        std::mt19937_64 rng(14);
        QuantumState s{2, helpers::random_state_vector(2, rng)};
        const auto before = s.amps;
        const double phi = 1.234;
        apply_controlled_phase(s, 0, 1, phi);
        CHECK(s.amps[0] == before[0]);
        CHECK(s.amps[1] == before[1]);
        CHECK(s.amps[2] == before[2]);
        CHECK(std::abs(s.amps[3] - before[3] * std::polar(1.0, phi)) < 1e-15);
    }
    SUBCASE("operand checks") {
        QuantumState s = init_state(2, {1, 0}, {0, 0});
        CHECK_THROWS_AS(apply_controlled_phase(s, 1, 1, 0.1), std::invalid_argument);
        CHECK_THROWS_AS(apply_controlled_phase(s, 0, 2, 0.1), std::out_of_range);
    }
}

TEST_CASE("reduced_density") {
    SUBCASE("pure product state reduces to its outer product") {
        std::mt19937_64 rng(15);
        auto [alpha, beta] = helpers::random_pair(rng);
        QuantumState s = init_state(3, alpha, beta);
        const Mat2 rho = reduced_density(s, 0);
        const Mat2 expected{std::norm(alpha), alpha * std::conj(beta),
                            std::conj(alpha) * beta, std::norm(beta)};
        CHECK(helpers::max_entry_diff(rho, expected) < 1e-12);
        CHECK(purity(rho) == doctest::Approx(1.0).epsilon(1e-12));
    }
    SUBCASE("Bell pair reduces to the maximally mixed state") {
        QuantumState s = init_state(2, {1, 0}, {0, 0});
        s.amps = {kInvSqrt2, 0, 0, kInvSqrt2};
        const Mat2 rho = reduced_density(s, 0);
        CHECK(helpers::max_entry_diff(rho, {0.5, 0, 0, 0.5}) < 1e-15);
        CHECK(purity(rho) == doctest::Approx(0.5).epsilon(1e-12));
    }
    SUBCASE("Hermitian, unit trace, physical eigenvalues") {
        std::mt19937_64 rng(16);
        for (int rep = 0; rep < 10; ++rep) {
            QuantumState s{4, helpers::random_state_vector(4, rng)};
            const Mat2 rho = reduced_density(s, rep % 4);
            CHECK(std::abs(rho.m01 - std::conj(rho.m10)) < 1e-12);
            CHECK(rho.m00.real() + rho.m11.real() == doctest::Approx(1.0).epsilon(1e-12));
            const double tr = rho.m00.real() + rho.m11.real();
            const double det = (rho.m00 * rho.m11 - rho.m01 * rho.m10).real();
            const double disc = std::sqrt(std::max(tr * tr - 4 * det, 0.0));
            const double lo = (tr - disc) / 2, hi = (tr + disc) / 2;
            CHECK(lo > -1e-12);
            CHECK(hi < 1.0 + 1e-12);
        }
    }
    SUBCASE("matches the brute-force partial trace") {
        std::mt19937_64 rng(17);
        for (int n : {2, 3, 4}) {
            QuantumState s{n, helpers::random_state_vector(n, rng)};
            for (int keep = 0; keep < n; ++keep) {
                CHECK(helpers::max_entry_diff(reduced_density(s, keep),
                                              helpers::brute_force_reduced(s, keep)) < 1e-13);
            }
        }
    }
    SUBCASE("index checks") {
        QuantumState s = init_state(2, {1, 0}, {0, 0});
        CHECK_THROWS_AS(reduced_density(s, 2), std::out_of_range);
    }
}

TEST_CASE("fidelity") {
    SUBCASE("identical pure state scores 1") {
        std::mt19937_64 rng(18);
        auto [alpha, beta] = helpers::random_pair(rng);
        QuantumState s = init_state(2, alpha, beta);
        CHECK(fidelity_with(s, alpha, beta) == doctest::Approx(1.0).epsilon(1e-12));
    }
    SUBCASE("dephased |+> scores cos^2(phi/2)") {
        for (double phi : {0.3, 1.1, 2.2, 3.14159}) {
            QuantumState s = init_state(1, {kInvSqrt2, 0}, {kInvSqrt2, 0});
            apply_single(s, dephase_gate(0.0, phi), 0);
            const double expected = std::cos(phi / 2) * std::cos(phi / 2);
            CHECK(fidelity_with(s, {kInvSqrt2, 0}, {kInvSqrt2, 0}) ==
                  doctest::Approx(expected).epsilon(1e-12));
        }
    }
    SUBCASE("orthogonal states score 0") {
        QuantumState s = init_state(1, {1, 0}, {0, 0});
        CHECK(fidelity_with(s, {0, 0}, {1, 0}) == doctest::Approx(0.0).epsilon(1e-12));
    }
    SUBCASE("rejects a non-normalized reference") {
        QuantumState s = init_state(1, {1, 0}, {0, 0});
        CHECK_THROWS_AS(fidelity_with(s, {1, 0}, {1, 0}), std::invalid_argument);
        CHECK_THROWS_AS(fidelity_with(Mat2::identity(), {1, 0}, {1, 0}),
                        std::invalid_argument);
    }
    SUBCASE("density overload agrees with the state overload") {
        std::mt19937_64 rng(19);
        QuantumState s{3, helpers::random_state_vector(3, rng)};
        auto [alpha, beta] = helpers::random_pair(rng);
        CHECK(fidelity_with(s, alpha, beta) ==
              doctest::Approx(fidelity_with(reduced_density(s, 0), alpha, beta))
                  .epsilon(1e-12));
    }
}

TEST_CASE("logical_fidelity on multi-qubit subsets") {
    SUBCASE("Bell register against the Bell reference") {
        QuantumState s = init_state(3, {1, 0}, {0, 0});
        s.amps.assign(8, cplx{0, 0});
        s.amps[0b000] = kInvSqrt2;  // qubits 0,1 in (|00>+|11>)/sqrt2, qubit 2 |0>
        s.amps[0b011] = kInvSqrt2;
        const int keep[] = {0, 1};
        const cplx bell[] = {{kInvSqrt2, 0}, {0, 0}, {0, 0}, {kInvSqrt2, 0}};
        CHECK(logical_fidelity(s, keep, bell) == doctest::Approx(1.0).epsilon(1e-12));
        // Tracing out the entangled middle qubit leaves an even mixture of
        // |00> and |10| on the crossed pair: <Bell|rho|Bell> = 1/4.
        const int crossed[] = {0, 2};
        CHECK(logical_fidelity(s, crossed, bell) == doctest::Approx(0.25).epsilon(1e-12));
    }
    SUBCASE("argument checks") {
        QuantumState s = init_state(2, {1, 0}, {0, 0});
        const int keep[] = {0};
        const cplx bad_dim[] = {{1, 0}, {0, 0}, {0, 0}, {0, 0}};
        CHECK_THROWS_AS(logical_fidelity(s, keep, bad_dim), std::invalid_argument);
        const int dup[] = {0, 0};
        const cplx ref[] = {{1, 0}, {0, 0}, {0, 0}, {0, 0}};
        CHECK_THROWS_AS(logical_fidelity(s, dup, ref), std::invalid_argument);
    }
}

TEST_CASE("norm is preserved across long random op sequences") {
    std::mt19937_64 rng(20);
    QuantumState s{4, helpers::random_state_vector(4, rng)};
    const int op_count = 200;
    std::uniform_int_distribution<int> pick(0, 3);
    std::uniform_int_distribution<int> qubit(0, 3);
    std::uniform_real_distribution<double> phase(0.0, 6.28);
    for (int i = 0; i < op_count; ++i) {
        const int target = qubit(rng);
        switch (pick(rng)) {
            case 0: apply_single(s, helpers::random_unitary(rng), target); break;
            case 1: {
                int control = qubit(rng);
                if (control == target) break;
                const int controls[] = {control};
                apply_controlled_not(s, controls, target);
                break;
            }
            case 2: apply_single(s, dephase_gate(phase(rng), phase(rng)), target); break;
            default: {
                int other = (target + 1) % 4;
                apply_controlled_phase(s, target, other, phase(rng));
                break;
            }
        }
    }
    CHECK(std::abs(squared_norm(s) - 1.0) < 1e-12 * op_count);
}
