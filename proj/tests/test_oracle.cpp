#include "qrw/oracle.hpp"

#include "qrw/angle.hpp"
#include "qrw/generator.hpp"
#include "qrw/matcher.hpp"
#include "qrw/rule_library.hpp"
#include "test_helpers.hpp"

#include <doctest.h>

using namespace qrw;

TEST_CASE("H twice is the identity") {
    Circuit c(1);
    c.append(Instruction(GateId::H, {0}));
    c.append(Instruction(GateId::H, {0}));
    Unitary u = circuit_unitary(c);
    Unitary id = Unitary::identity(1);
    CHECK(equiv_up_to_phase(u, id, 1e-12));
}

TEST_CASE("X then Y equals Z up to phase") {
    Circuit xy(1);
    xy.append(Instruction(GateId::X, {0}));
    xy.append(Instruction(GateId::Y, {0}));
    Circuit z(1);
    z.append(Instruction(GateId::Z, {0}));
    CHECK(circuits_equivalent(xy, z, 1e-12));
}

TEST_CASE("CCZ equals its 13-gate ladder") {
    Circuit ccz(3);
    ccz.append(Instruction(GateId::Ccz, {0, 1, 2}));
    RuleSet surf = builtin_surface17();
    const RuleSpec* ladder = nullptr;
    for (const auto& r : surf.rules) {
        if (r.name == "ccz_to_t_ladder") {
            ladder = &r;
        }
    }
    REQUIRE(ladder != nullptr);
    REQUIRE(ladder->substitution.size() == 13);
    Circuit expansion = instantiate_templates(ladder->substitution, 3, {});
    CHECK(circuits_equivalent(ccz, expansion, 1e-9));
}

TEST_CASE("equiv_up_to_phase basics") {
    Unitary id = Unitary::identity(2);
    Unitary scaled = id;
    for (auto& e : scaled.entries) {
        e *= std::complex<double>(0.0, 1.0);
    }
    CHECK(equiv_up_to_phase(id, scaled, 1e-12));

    Circuit x0(2);
    x0.append(Instruction(GateId::X, {0}));
    CHECK_FALSE(equiv_up_to_phase(id, circuit_unitary(x0), 1e-9));

    Circuit cx(2);
    cx.append(Instruction(GateId::Cx, {0, 1}));
    Circuit cz_form(2);
    cz_form.append(Instruction(GateId::Ry, {1}, {-kPi / 2.0}));
    cz_form.append(Instruction(GateId::Cz, {0, 1}));
    cz_form.append(Instruction(GateId::Ry, {1}, {kPi / 2.0}));
    CHECK(circuits_equivalent(cx, cz_form, 1e-12));

    Unitary one = Unitary::identity(1);
    CHECK_THROWS_AS((void)equiv_up_to_phase(id, one, 1e-9), std::invalid_argument);
}

TEST_CASE("unitarity of random circuit unitaries") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        Circuit c = qrw::test::random_clifford_t_circuit(4, 6, seed, true);
        CHECK(circuit_unitary(c).is_unitary(1e-9));
    }
}

TEST_CASE("capacity cap at ten qubits") {
    Circuit big(11);
    big.append(Instruction(GateId::H, {0}));
    CHECK_THROWS_AS((void)circuit_unitary(big), CapacityError);
}

TEST_CASE("equivalence relation sanity") {
    Circuit a = qrw::test::random_clifford_t_circuit(3, 4, 11, true);
    Circuit b = qrw::test::random_clifford_t_circuit(3, 4, 12, true);
    Unitary ua = circuit_unitary(a);
    Unitary ub = circuit_unitary(b);
    CHECK(equiv_up_to_phase(ua, ua, 1e-12));
    CHECK(equiv_up_to_phase(ua, ub, 1e-9) == equiv_up_to_phase(ub, ua, 1e-9));
}

TEST_CASE("brute_subsequences") {
    auto got = brute_subsequences("xxcccxx", "cc", kDeltaUnlimited);
    std::vector<std::vector<std::size_t>> want = {{2, 3}, {2, 4}, {3, 4}};
    CHECK(got == want);

    CHECK_THROWS_AS((void)brute_subsequences("abc", "", kDeltaUnlimited), std::invalid_argument);

    auto spanned = brute_subsequences("aaa", "aa", 2);
    std::vector<std::vector<std::size_t>> want2 = {{0, 1}, {1, 2}};
    CHECK(spanned == want2);

    CHECK_THROWS_AS((void)brute_subsequences(std::string(21, 'a'), "a", kDeltaUnlimited),
                    CapacityError);
}

TEST_CASE("gen_circuit densities and determinism") {
    GenOptions opts;
    opts.num_qubits = 16;
    opts.layers = 20;
    opts.d1 = 0.0;
    opts.d2 = 0.1;
    opts.seed = 7;
    Circuit c = gen_circuit(opts);
    auto m = c.metrics();
    CHECK(m.d1 <= 0.05);
    CHECK(std::fabs(m.d2 - 0.1) <= 0.1);
    CHECK(m.depth == 20);

    GenOptions empty_opts;
    empty_opts.d1 = 0.0;
    empty_opts.d2 = 0.0;
    CHECK(gen_circuit(empty_opts).empty());

    Circuit again = gen_circuit(opts);
    CHECK(c.equals(again));

    GenOptions infeasible;
    infeasible.num_qubits = 2;
    infeasible.d1 = 1.0;
    infeasible.d2 = 1.0;
    CHECK_THROWS_AS((void)gen_circuit(infeasible), std::invalid_argument);
}

TEST_CASE("gen_circuit realized densities track requests") {
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
        GenOptions opts;
        opts.num_qubits = 20;
        opts.layers = 12;
        opts.d1 = 0.35;
        opts.d2 = 0.3;
        opts.seed = seed;
        Circuit c = gen_circuit(opts);
        auto m = c.metrics();
        CHECK(std::fabs(m.d1 - opts.d1) <= 0.1);
        CHECK(std::fabs(m.d2 - opts.d2) <= 0.1);
    }
}

TEST_CASE("u1/u2/u3 oracle semantics agree with their rz/ry forms") {
    // u-gates only enter circuits when a translating rule set is loaded;
    // their matrices still must match the translations they get.
    RuleSet ibm = builtin_ibm_u();
    ValidationReport rep = validate(ibm);
    CHECK(rep.all_passed());
}
