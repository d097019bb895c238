#include "qrw/rule_library.hpp"

#include "qrw/oracle.hpp"
#include "qrw/rewriter.hpp"
#include "test_helpers.hpp"

#include <doctest.h>

using namespace qrw;

TEST_CASE("internal library content") {
    RuleSet rs = builtin_internal();
    CHECK(rs.kind == RuleSet::Kind::Internal);
    CHECK(rs.size() >= 30);

    auto has = [&](const std::string& name) {
        for (const auto& r : rs.rules) {
            if (r.name == name) {
                return true;
            }
        }
        return false;
    };
    CHECK(has("tt_to_s"));
    CHECK(has("xx_cancel"));
    CHECK(has("cx_cancel"));
    CHECK(has("rx_inverse"));
    CHECK(has("rz_merge"));
    CHECK(has("hth_to_rx"));
    CHECK(has("swap_to_cx"));
    CHECK(has("st_commute"));
    CHECK(has("rz_cx_rz_slide"));

    // tt -> s carries the documented shape
    for (const auto& r : rs.rules) {
        if (r.name == "tt_to_s") {
            CHECK(r.pattern_sequence() == "tt");
            REQUIRE(r.substitution.size() == 1);
            CHECK(r.substitution[0].gate == GateId::S);
        }
    }
}

TEST_CASE("every built-in rule is unitary-equivalent at 1e-9") {
    for (const char* name : {"fig4", "internal", "surface17", "ibm_u"}) {
        RuleSet rs = *builtin_by_name(name);
        ValidationReport report = validate(rs);
        REQUIRE(report.results.size() == rs.size());
        for (const auto& r : report.results) {
            INFO(name, "/", r.rule_name, ": ", r.detail);
            CHECK(r.passed);
        }
    }
}

TEST_CASE("validate flags corrupted rules") {
    RuleSpec bad;
    bad.name = "cc_to_one_i";
    InstrTemplate cx;
    cx.gate = GateId::Cx;
    cx.qubits = {0, 1};
    InstrTemplate id0;
    id0.gate = GateId::I;
    id0.qubits = {0};
    bad.pattern = {cx, cx};
    bad.substitution = {id0}; // drops a wire's worth of structure: harmless
    bad.check();
    // an actually wrong rule: cc -> x on the control
    RuleSpec wrong;
    wrong.name = "cc_to_x";
    InstrTemplate x0;
    x0.gate = GateId::X;
    x0.qubits = {0};
    wrong.pattern = {cx, cx};
    wrong.substitution = {x0};
    wrong.check();

    RuleSet rs;
    rs.name = "test";
    rs.rules = {bad, wrong};
    ValidationReport report = validate(rs);
    CHECK(report.results[0].passed);  // II and I-on-one-qubit agree as unitaries
    CHECK_FALSE(report.results[1].passed);
    CHECK_FALSE(report.all_passed());
}

TEST_CASE("validate rejects oversized rules") {
    RuleSpec wide;
    wide.name = "wide";
    for (std::uint32_t q = 0; q + 1 < 12; q += 2) {
        InstrTemplate t;
        t.gate = GateId::Cx;
        t.qubits = {q, q + 1};
        wide.pattern.push_back(t);
        wide.substitution.push_back(t);
    }
    wide.check();
    RuleSet rs;
    rs.rules = {wide};
    CHECK_THROWS_AS((void)validate(rs), CapacityError);
}

TEST_CASE("surface17 decomposition set") {
    RuleSet rs = builtin_surface17();

    const RuleSpec* ccz = nullptr;
    for (const auto& r : rs.rules) {
        if (r.name == "ccz_to_t_ladder") {
            ccz = &r;
        }
    }
    REQUIRE(ccz != nullptr);
    CHECK(ccz->substitution.size() == 13);

    // one CCZ rewrites to the 13-gate ladder in one pass
    Circuit e(3);
    e.append(Instruction(GateId::Ccz, {0, 1, 2}));
    RuleSet ccz_only;
    ccz_only.rules = {*ccz};
    auto [expanded, picks] = rewrite_once(e, ccz_only, Policy::greedy());
    CHECK(picks == 1);
    CHECK(expanded.size() == 13);
    CHECK(circuits_equivalent(e, expanded, 1e-9));
}

TEST_CASE("Toff-NC3 after CCZ decomposition has 45 gates") {
    Circuit c = qrw::test::load_benchmark("toff_nc3.qasm");
    RuleSet ccz_only;
    ccz_only.name = "ccz";
    for (const auto& r : builtin_surface17().rules) {
        if (r.name == "ccz_to_t_ladder" || r.name == "ccx_to_h_ccz_h") {
            ccz_only.rules.push_back(r);
        }
    }
    RuleSet none;
    auto result = optimize(c, none, ccz_only, Policy::greedy(), 5);
    CHECK(result.circuit.size() == 45);
    CHECK(circuits_equivalent(c, result.circuit, 1e-9));
}

TEST_CASE("shipped rule files equal the built-in sets") {
    for (const char* name : {"internal", "surface17", "fig4", "ibm_u"}) {
        RuleSet builtin = *builtin_by_name(name);
        auto from_file = parse_rules(
            qrw::test::read_file(qrw::test::repo_path(std::string("rules/") + name + ".rules.json")));
        REQUIRE(from_file.size() == builtin.size());
        for (std::size_t i = 0; i < from_file.size(); ++i) {
            INFO(name, " rule ", i, " (", builtin.rules[i].name, ")");
            CHECK(from_file[i] == builtin.rules[i]);
        }
    }
}

TEST_CASE("rule order is stable") {
    RuleSet a = builtin_internal();
    RuleSet b = builtin_internal();
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a.rules[i].name == b.rules[i].name);
    }
}

TEST_CASE("rules_translate_u23") {
    CHECK(rules_translate_u23(builtin_ibm_u()));
    CHECK_FALSE(rules_translate_u23(builtin_internal()));
    CHECK_FALSE(rules_translate_u23(builtin_surface17()));
}
