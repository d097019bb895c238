#include "qrw/circuit.hpp"

#include "qrw/angle.hpp"
#include "qrw/generator.hpp"
#include "test_helpers.hpp"

#include <doctest.h>

#include <cmath>
#include <set>

using namespace qrw;

TEST_CASE("gate registry carries the aliased table plus SWAP") {
    // 16 aliased kinds, SWAP for rule authoring, u1/u2/u3 for IBM inputs.
    CHECK(gate_registry().size() == 20);

    const std::string table_aliases = "IhxyztTsSXYZcCEF";
    for (char a : table_aliases) {
        auto id = gate_from_alias(a);
        REQUIRE(id.has_value());
    }
    CHECK(gate_from_alias('w') == GateId::Swap);

    // alias uniqueness
    std::set<char> seen;
    for (const auto& k : gate_registry()) {
        CHECK(seen.insert(k.alias).second);
    }

    // every qubit slot of a non-identity gate carries at least one role
    for (const auto& k : gate_registry()) {
        if (k.is_identity()) {
            CHECK(k.control_slots == 0);
            CHECK(k.target_slots == 0);
            continue;
        }
        for (std::size_t slot = 0; slot < k.arity; ++slot) {
            CHECK((k.slot_is_control(slot) || k.slot_is_target(slot)));
        }
    }

    SUBCASE("role table spot checks") {
        CHECK(gate_kind(GateId::Cx).slot_is_control(0));
        CHECK_FALSE(gate_kind(GateId::Cx).slot_is_target(0));
        CHECK(gate_kind(GateId::Cx).slot_is_target(1));
        CHECK(gate_kind(GateId::Cz).slot_is_control(1));
        CHECK_FALSE(gate_kind(GateId::Cz).slot_is_target(1));
        CHECK(gate_kind(GateId::Ccx).slot_is_target(2));
        CHECK(gate_kind(GateId::H).slot_is_control(0));
        CHECK(gate_kind(GateId::H).slot_is_target(0));
        CHECK(gate_kind(GateId::X).slot_is_target(0));
        CHECK_FALSE(gate_kind(GateId::X).slot_is_control(0));
        CHECK(gate_kind(GateId::T).slot_is_control(0));
        CHECK_FALSE(gate_kind(GateId::T).slot_is_target(0));
    }
}

TEST_CASE("instruction validation") {
    CHECK_THROWS_AS(Instruction(GateId::Cx, {1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(Instruction(GateId::H, {0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(Instruction(GateId::Rx, {0}, {}), std::invalid_argument);
    CHECK_THROWS_AS(Instruction(GateId::Rx, {0}, {std::nan("")}), std::invalid_argument);

    // angles canonicalize into (-pi, pi]
    Instruction r(GateId::Rz, {0}, {3.0 * kPi});
    CHECK(r.angles[0] == doctest::Approx(kPi));
    Instruction r2(GateId::Rz, {0}, {-kPi});
    CHECK(r2.angles[0] == doctest::Approx(kPi));
}

static Circuit fig3a() {
    return qrw::test::load_benchmark("fig3a.qasm");
}

TEST_CASE("gate_sequence projects aliases") {
    CHECK(fig3a().gate_sequence() == "xxcccxx");
    CHECK(Circuit(2).gate_sequence() == "");
    CHECK(qrw::test::load_benchmark("toff_nc3.qasm").gate_sequence() == "hEhhEhhEh");
}

TEST_CASE("depth is ASAP layering") {
    Circuit b(3);
    b.append(Instruction(GateId::Cx, {0, 2}));
    b.append(Instruction(GateId::X, {0}));
    b.append(Instruction(GateId::X, {2}));
    CHECK(b.depth() == 2);

    Circuit c(3);
    c.append(Instruction(GateId::X, {2}));
    c.append(Instruction(GateId::Cx, {0, 2}));
    c.append(Instruction(GateId::X, {0}));
    CHECK(c.depth() == 3);

    Circuit single(1);
    single.append(Instruction(GateId::H, {0}));
    CHECK(single.depth() == 1);
}

TEST_CASE("depth ignores identity gates") {
    Circuit c(2);
    c.append(Instruction(GateId::H, {0}));
    c.append(Instruction(GateId::Cx, {0, 1}));
    std::size_t base = c.depth();

    Circuit with_ids(2);
    with_ids.append(Instruction(GateId::I, {0}));
    with_ids.append(Instruction(GateId::H, {0}));
    with_ids.append(Instruction(GateId::I, {1}));
    with_ids.append(Instruction(GateId::Cx, {0, 1}));
    with_ids.append(Instruction(GateId::I, {0}));
    CHECK(with_ids.depth() == base);
}

TEST_CASE("depth bounds for 1-qubit-only circuits") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        GenOptions opts;
        opts.num_qubits = 4;
        opts.layers = 12;
        opts.d1 = 0.5;
        opts.d2 = 0.0;
        opts.seed = seed;
        Circuit c = gen_circuit(opts);
        if (c.empty()) {
            continue;
        }
        std::size_t d = c.depth();
        CHECK(d <= c.size());
        CHECK(d >= (c.size() + c.num_qubits() - 1) / c.num_qubits());
    }
}

TEST_CASE("metrics of the Toff-NC3 circuit") {
    auto m = qrw::test::load_benchmark("toff_nc3.qasm").metrics();
    CHECK(m.n == 5);
    CHECK(m.total == 9);
    CHECK(m.depth == 7);
    CHECK(m.m1 == 6);
    CHECK(m.m2 == 3);
    CHECK(m.m3 == 3);
}

TEST_CASE("metrics of the empty circuit") {
    auto m = Circuit(4).metrics();
    CHECK(m.total == 0);
    CHECK(m.depth == 0);
    CHECK(m.d1 == 0.0);
    CHECK(m.d2 == 0.0);
}

TEST_CASE("metrics match an independent recount on random circuits") {
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
        GenOptions opts;
        opts.num_qubits = 3 + static_cast<std::uint32_t>(seed % 4);
        opts.layers = 1 + seed % 9;
        opts.d1 = 0.3;
        opts.d2 = 0.4;
        opts.seed = seed;
        Circuit c = gen_circuit(opts);
        auto m = c.metrics();

        std::size_t m1 = 0, m2 = 0, m3 = 0, total = 0;
        for (const auto& instr : c.instructions()) {
            if (instr.kind().is_identity()) {
                continue;
            }
            ++total;
            std::size_t arity = instr.qubits.size();
            if (arity == 1) {
                ++m1;
            } else {
                ++m2;
                if (arity == 3) {
                    ++m3;
                }
            }
        }
        REQUIRE(m.total == total);
        REQUIRE(m.m1 + m.m2 == m.total);
        REQUIRE(m.m1 == m1);
        REQUIRE(m.m2 == m2);
        REQUIRE(m.m3 == m3);
        if (total > 0) {
            double nl = double(m.n) * double(m.depth);
            REQUIRE(m.d1 == double(m1) / nl);
            REQUIRE(m.d2 == 2.0 * double(m2) / nl);
        }
    }
}

TEST_CASE("remove_identities") {
    Circuit c(2);
    c.append(Instruction(GateId::I, {0}));
    c.append(Instruction(GateId::X, {1}));
    c.append(Instruction(GateId::I, {1}));
    Circuit out = c.remove_identities();
    REQUIRE(out.size() == 1);
    CHECK(out[0].gate == GateId::X);
    CHECK(out[0].qubits[0] == 1);

    Circuit no_ids(2);
    no_ids.append(Instruction(GateId::H, {0}));
    CHECK(no_ids.remove_identities().equals(no_ids));
}

TEST_CASE("angle helpers") {
    CHECK(canonical_angle(2.0 * kPi) == doctest::Approx(0.0));
    CHECK(canonical_angle(-kPi) == doctest::Approx(kPi));
    CHECK(angles_close(kPi, -kPi));
    CHECK(angles_close(0.0, 2.0 * kPi));
    CHECK_FALSE(angles_close(0.0, 1e-6));
    CHECK(angle_distance(kPi - 0.1, -kPi + 0.1) == doctest::Approx(0.2));
}
