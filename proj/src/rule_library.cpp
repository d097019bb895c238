#include "qrw/rule_library.hpp"

#include "qrw/oracle.hpp"

#include <set>

namespace qrw {

bool ValidationReport::all_passed() const {
    for (const auto& r : results) {
        if (!r.passed) {
            return false;
        }
    }
    return true;
}

namespace {

// Compact template notation for the rule tables below.
InstrTemplate g(GateId id, std::initializer_list<std::uint32_t> qubits,
                std::initializer_list<AngleExpr> angles = {}) {
    InstrTemplate t;
    t.gate = id;
    t.qubits = qubits;
    t.angles = angles;
    return t;
}

AngleExpr var(const char* name) {
    return AngleExpr::variable(name);
}

AngleExpr neg(const char* name) {
    return AngleExpr::variable(name, Rational(-1));
}

AngleExpr pi_over(long long num, long long den) {
    return AngleExpr::pi_multiple(Rational(num, den));
}

RuleSpec rule(const char* name, std::vector<InstrTemplate> pattern,
              std::vector<InstrTemplate> substitution) {
    RuleSpec r;
    r.name = name;
    r.pattern = std::move(pattern);
    r.substitution = std::move(substitution);
    r.check();
    return r;
}

std::vector<RuleSpec> fig4_rules() {
    using enum GateId;
    return {
        rule("xx_cancel", {g(X, {0}), g(X, {0})}, {g(I, {0})}),
        rule("cx_cancel", {g(Cx, {0, 1}), g(Cx, {0, 1})}, {g(I, {0}), g(I, {1})}),
        rule("cx_reassoc", {g(Cx, {0, 1}), g(Cx, {1, 2}), g(Cx, {0, 1})},
             {g(Cx, {0, 2}), g(Cx, {1, 2})}),
        rule("xcx_absorb", {g(X, {1}), g(Cx, {0, 1}), g(X, {1})}, {g(Cx, {0, 1})}),
    };
}

// The 7-T / 6-CX phase-polynomial ladder for CCZ.
std::vector<InstrTemplate> ccz_ladder() {
    using enum GateId;
    return {
        g(T, {0}),      g(T, {1}),      g(Cx, {2, 0}), g(Cx, {1, 2}), g(Tdg, {0}),
        g(Tdg, {2}),    g(Cx, {1, 0}),  g(Cx, {1, 2}), g(T, {0}),     g(Cx, {2, 0}),
        g(Tdg, {0}),    g(T, {2}),      g(Cx, {1, 0}),
    };
}

} // namespace

RuleSet builtin_fig4() {
    RuleSet rs;
    rs.name = "fig4";
    rs.kind = RuleSet::Kind::Internal;
    rs.rules = fig4_rules();
    return rs;
}

RuleSet builtin_internal() {
    using enum GateId;
    RuleSet rs;
    rs.name = "internal";
    rs.kind = RuleSet::Kind::Internal;

    auto& r = rs.rules;
    for (auto& f : fig4_rules()) {
        r.push_back(std::move(f));
    }

    // Rotation cancellation and merging. The inverse form is registered
    // first so exact inverse pairs drop to I instead of a zero-angle gate.
    r.push_back(rule("rx_inverse", {g(Rx, {0}, {neg("a")}), g(Rx, {0}, {var("a")})}, {g(I, {0})}));
    r.push_back(rule("rx_merge", {g(Rx, {0}, {var("a")}), g(Rx, {0}, {var("b")})},
                     {g(Rx, {0}, {var("a") + var("b")})}));
    r.push_back(rule("ry_inverse", {g(Ry, {0}, {neg("a")}), g(Ry, {0}, {var("a")})}, {g(I, {0})}));
    r.push_back(rule("ry_merge", {g(Ry, {0}, {var("a")}), g(Ry, {0}, {var("b")})},
                     {g(Ry, {0}, {var("a") + var("b")})}));
    r.push_back(rule("rz_inverse", {g(Rz, {0}, {neg("a")}), g(Rz, {0}, {var("a")})}, {g(I, {0})}));
    r.push_back(rule("rz_merge", {g(Rz, {0}, {var("a")}), g(Rz, {0}, {var("b")})},
                     {g(Rz, {0}, {var("a") + var("b")})}));

    // Zero rotations collapse to the identity wire.
    r.push_back(rule("rx_zero", {g(Rx, {0}, {AngleExpr()})}, {g(I, {0})}));
    r.push_back(rule("ry_zero", {g(Ry, {0}, {AngleExpr()})}, {g(I, {0})}));
    r.push_back(rule("rz_zero", {g(Rz, {0}, {AngleExpr()})}, {g(I, {0})}));

    // Fixed 1-qubit identities.
    r.push_back(rule("hh_cancel", {g(H, {0}), g(H, {0})}, {g(I, {0})}));
    r.push_back(rule("yy_cancel", {g(Y, {0}), g(Y, {0})}, {g(I, {0})}));
    r.push_back(rule("zz_cancel", {g(Z, {0}), g(Z, {0})}, {g(I, {0})}));
    r.push_back(rule("t_tdg_cancel", {g(T, {0}), g(Tdg, {0})}, {g(I, {0})}));
    r.push_back(rule("tdg_t_cancel", {g(Tdg, {0}), g(T, {0})}, {g(I, {0})}));
    r.push_back(rule("s_sdg_cancel", {g(S, {0}), g(Sdg, {0})}, {g(I, {0})}));
    r.push_back(rule("sdg_s_cancel", {g(Sdg, {0}), g(S, {0})}, {g(I, {0})}));
    r.push_back(rule("ss_to_z", {g(S, {0}), g(S, {0})}, {g(Z, {0})}));
    r.push_back(rule("tt_to_s", {g(T, {0}), g(T, {0})}, {g(S, {0})}));
    r.push_back(rule("hxh_to_z", {g(H, {0}), g(X, {0}), g(H, {0})}, {g(Z, {0})}));
    r.push_back(rule("hyh_to_y", {g(H, {0}), g(Y, {0}), g(H, {0})}, {g(Y, {0})}));
    r.push_back(rule("hzh_to_x", {g(H, {0}), g(Z, {0}), g(H, {0})}, {g(X, {0})}));
    r.push_back(rule("hth_to_rx", {g(H, {0}), g(T, {0}), g(H, {0})}, {g(Rx, {0}, {pi_over(1, 4)})}));
    r.push_back(rule("hsh", {g(H, {0}), g(S, {0}), g(H, {0})},
                     {g(Sdg, {0}), g(H, {0}), g(Sdg, {0})}));
    r.push_back(rule("hsdgh", {g(H, {0}), g(Sdg, {0}), g(H, {0})},
                     {g(S, {0}), g(H, {0}), g(S, {0})}));
    // Pi-rotation conjugation flips the orthogonal rotation axis.
    r.push_back(rule("ry_pi_rx_ry_pi",
                     {g(Ry, {0}, {pi_over(1, 1)}), g(Rx, {0}, {var("a")}),
                      g(Ry, {0}, {pi_over(1, 1)})},
                     {g(Rx, {0}, {neg("a")})}));
    r.push_back(rule("rx_pi_ry_rx_pi",
                     {g(Rx, {0}, {pi_over(1, 1)}), g(Ry, {0}, {var("a")}),
                      g(Rx, {0}, {pi_over(1, 1)})},
                     {g(Ry, {0}, {neg("a")})}));

    // 2-qubit identities: CZ/CX cancellation, CX target conjugation, SWAP
    // elimination, reversal.
    r.push_back(rule("cz_cancel", {g(Cz, {0, 1}), g(Cz, {0, 1})}, {g(I, {0}), g(I, {1})}));
    r.push_back(rule("cz_cancel_rev", {g(Cz, {0, 1}), g(Cz, {1, 0})}, {g(I, {0}), g(I, {1})}));
    r.push_back(rule("cx_target_conj_s",
                     {g(H, {1}), g(S, {1}), g(Cx, {0, 1}), g(Sdg, {1}), g(H, {1})},
                     {g(Sdg, {1}), g(Cx, {0, 1}), g(S, {1})}));
    r.push_back(rule("cx_target_conj_sdg",
                     {g(H, {1}), g(Sdg, {1}), g(Cx, {0, 1}), g(S, {1}), g(H, {1})},
                     {g(S, {1}), g(Cx, {0, 1}), g(Sdg, {1})}));
    r.push_back(rule("swap_to_cx", {g(Swap, {0, 1})},
                     {g(Cx, {0, 1}), g(Cx, {1, 0}), g(Cx, {0, 1})}));
    r.push_back(rule("cx_swap_absorb", {g(Cx, {1, 0}), g(Swap, {0, 1})},
                     {g(Cx, {0, 1}), g(Cx, {1, 0})}));
    r.push_back(rule("cx_reverse_h",
                     {g(H, {0}), g(H, {1}), g(Cx, {0, 1}), g(H, {0}), g(H, {1})},
                     {g(Cx, {1, 0})}));
    r.push_back(rule("cx_chain_left", {g(Cx, {1, 2}), g(Cx, {0, 1}), g(Cx, {1, 2})},
                     {g(Cx, {0, 1}), g(Cx, {0, 2})}));
    r.push_back(rule("cx_chain_right", {g(Cx, {1, 2}), g(Cx, {0, 2}), g(Cx, {0, 1})},
                     {g(Cx, {0, 1}), g(Cx, {1, 2})}));

    // Commutation rules (directed left form -> right form).
    r.push_back(rule("st_commute", {g(S, {0}), g(T, {0})}, {g(T, {0}), g(S, {0})}));
    r.push_back(rule("sdg_t_commute", {g(Sdg, {0}), g(T, {0})}, {g(T, {0}), g(Sdg, {0})}));
    r.push_back(rule("tdg_s_commute", {g(Tdg, {0}), g(S, {0})}, {g(S, {0}), g(Tdg, {0})}));
    r.push_back(rule("tdg_sdg_commute", {g(Tdg, {0}), g(Sdg, {0})}, {g(Sdg, {0}), g(Tdg, {0})}));
    r.push_back(rule("rz_hxh_slide", {g(Rz, {1}, {var("a")}), g(H, {1}), g(Cx, {0, 1}), g(H, {1})},
                     {g(H, {1}), g(Cx, {0, 1}), g(H, {1}), g(Rz, {1}, {var("a")})}));
    r.push_back(rule("rz_cx_rz_slide",
                     {g(Rz, {1}, {var("a")}), g(Cx, {0, 1}), g(Rz, {1}, {var("b")}),
                      g(Cx, {0, 1})},
                     {g(Cx, {0, 1}), g(Rz, {1}, {var("b")}), g(Cx, {0, 1}),
                      g(Rz, {1}, {var("a")})}));
    r.push_back(rule("rx_target_commute", {g(Rx, {1}, {var("a")}), g(Cx, {0, 1})},
                     {g(Cx, {0, 1}), g(Rx, {1}, {var("a")})}));
    r.push_back(rule("rz_control_commute", {g(Rz, {0}, {var("a")}), g(Cx, {0, 1})},
                     {g(Cx, {0, 1}), g(Rz, {0}, {var("a")})}));
    r.push_back(rule("cx_shared_target_commute", {g(Cx, {0, 2}), g(Cx, {1, 2})},
                     {g(Cx, {1, 2}), g(Cx, {0, 2})}));
    r.push_back(rule("cx_shared_control_commute", {g(Cx, {0, 2}), g(Cx, {0, 1})},
                     {g(Cx, {0, 1}), g(Cx, {0, 2})}));
    r.push_back(rule("cx_hcxh_commute", {g(Cx, {0, 1}), g(H, {1}), g(Cx, {1, 2}), g(H, {1})},
                     {g(H, {1}), g(Cx, {1, 2}), g(H, {1}), g(Cx, {0, 1})}));

    return rs;
}

RuleSet builtin_surface17() {
    using enum GateId;
    RuleSet rs;
    rs.name = "surface17";
    rs.kind = RuleSet::Kind::External;
    auto& r = rs.rules;

    r.push_back(rule("z_to_xy", {g(Z, {0})}, {g(X, {0}), g(Y, {0})}));

    // The first H variant is the one the deterministic pipeline applies;
    // the other two are listed after it.
    r.push_back(rule("h_to_ry_z", {g(H, {0})}, {g(Ry, {0}, {pi_over(-1, 2)}), g(Z, {0})}));
    r.push_back(rule("h_to_z_ry", {g(H, {0})}, {g(Z, {0}), g(Ry, {0}, {pi_over(1, 2)})}));
    r.push_back(rule("h_to_x_ry", {g(H, {0})}, {g(X, {0}), g(Ry, {0}, {pi_over(-1, 2)})}));

    r.push_back(rule("t_to_ry_rx", {g(T, {0})},
                     {g(Ry, {0}, {pi_over(1, 2)}), g(Rx, {0}, {pi_over(1, 4)}),
                      g(Ry, {0}, {pi_over(-1, 2)})}));
    r.push_back(rule("t_to_h_rx", {g(T, {0})},
                     {g(H, {0}), g(Rx, {0}, {pi_over(1, 4)}), g(H, {0})}));
    r.push_back(rule("tdg_to_ry_rx", {g(Tdg, {0})},
                     {g(Ry, {0}, {pi_over(1, 2)}), g(Rx, {0}, {pi_over(-1, 4)}),
                      g(Ry, {0}, {pi_over(-1, 2)})}));
    r.push_back(rule("tdg_to_h_rx", {g(Tdg, {0})},
                     {g(H, {0}), g(Rx, {0}, {pi_over(-1, 4)}), g(H, {0})}));
    r.push_back(rule("s_to_ry_rx", {g(S, {0})},
                     {g(Ry, {0}, {pi_over(1, 2)}), g(Rx, {0}, {pi_over(1, 2)}),
                      g(Ry, {0}, {pi_over(-1, 2)})}));
    r.push_back(rule("s_to_h_rx", {g(S, {0})},
                     {g(H, {0}), g(Rx, {0}, {pi_over(1, 2)}), g(H, {0})}));
    r.push_back(rule("sdg_to_ry_rx", {g(Sdg, {0})},
                     {g(Ry, {0}, {pi_over(1, 2)}), g(Rx, {0}, {pi_over(-1, 2)}),
                      g(Ry, {0}, {pi_over(-1, 2)})}));
    r.push_back(rule("sdg_to_h_rx", {g(Sdg, {0})},
                     {g(H, {0}), g(Rx, {0}, {pi_over(-1, 2)}), g(H, {0})}));

    r.push_back(rule("cx_to_cz", {g(Cx, {0, 1})},
                     {g(Ry, {1}, {pi_over(-1, 2)}), g(Cz, {0, 1}), g(Ry, {1}, {pi_over(1, 2)})}));
    r.push_back(rule("swap_to_cz", {g(Swap, {0, 1})},
                     {g(Ry, {1}, {pi_over(-1, 2)}), g(Cz, {0, 1}), g(Ry, {0}, {pi_over(-1, 2)}),
                      g(Ry, {1}, {pi_over(1, 2)}), g(Cz, {0, 1}), g(Ry, {0}, {pi_over(1, 2)}),
                      g(Ry, {1}, {pi_over(-1, 2)}), g(Cz, {0, 1}), g(Ry, {1}, {pi_over(1, 2)})}));

    r.push_back(rule("ccz_to_t_ladder", {g(Ccz, {0, 1, 2})}, ccz_ladder()));
    {
        std::vector<InstrTemplate> ccx_sub;
        ccx_sub.push_back(g(H, {2}));
        for (auto& t : ccz_ladder()) {
            ccx_sub.push_back(t);
        }
        ccx_sub.push_back(g(H, {2}));
        r.push_back(rule("ccx_to_h_ccz_h", {g(Ccx, {0, 1, 2})}, std::move(ccx_sub)));
    }

    return rs;
}

RuleSet builtin_ibm_u() {
    using enum GateId;
    RuleSet rs;
    rs.name = "ibm_u";
    rs.kind = RuleSet::Kind::External;
    auto& r = rs.rules;
    // u1(l) = rz(l) up to phase; u2(p,l) = rz(p) ry(pi/2) rz(l) up to phase;
    // u3(t,p,l) = rz(p) ry(t) rz(l) up to phase. rz then feeds the rotation
    // route rz(a) = ry(pi/2) rx(a) ry(-pi/2).
    r.push_back(rule("u1_to_rz", {g(U1, {0}, {var("a")})}, {g(Rz, {0}, {var("a")})}));
    r.push_back(rule("u2_to_rz_ry_rz", {g(U2, {0}, {var("p"), var("l")})},
                     {g(Rz, {0}, {var("l")}), g(Ry, {0}, {pi_over(1, 2)}), g(Rz, {0}, {var("p")})}));
    r.push_back(rule("u3_to_rz_ry_rz", {g(U3, {0}, {var("t"), var("p"), var("l")})},
                     {g(Rz, {0}, {var("l")}), g(Ry, {0}, {var("t")}), g(Rz, {0}, {var("p")})}));
    r.push_back(rule("rz_to_ry_rx", {g(Rz, {0}, {var("a")})},
                     {g(Ry, {0}, {pi_over(1, 2)}), g(Rx, {0}, {var("a")}),
                      g(Ry, {0}, {pi_over(-1, 2)})}));
    return rs;
}

std::optional<RuleSet> builtin_by_name(const std::string& name) {
    if (name == "internal") {
        return builtin_internal();
    }
    if (name == "surface17") {
        return builtin_surface17();
    }
    if (name == "fig4") {
        return builtin_fig4();
    }
    if (name == "ibm_u") {
        return builtin_ibm_u();
    }
    return std::nullopt;
}

Circuit instantiate_templates(const std::vector<InstrTemplate>& templates,
                              std::uint32_t num_qubits,
                              const std::map<std::string, double>& bindings) {
    Circuit c(num_qubits);
    for (const auto& t : templates) {
        std::vector<double> angles;
        angles.reserve(t.angles.size());
        for (const auto& a : t.angles) {
            angles.push_back(a.evaluate(bindings));
        }
        c.append(Instruction(t.gate, t.qubits, std::move(angles)));
    }
    return c;
}

ValidationReport validate(const RuleSet& rs) {
    static const double kSamples[] = {kPi / 3.0, -kPi / 7.0, 1.0};
    ValidationReport report;
    for (const auto& r : rs.rules) {
        std::size_t k = r.pattern_qubit_count();
        if (k > 10) {
            throw CapacityError("oracle capacity exceeded: rule '" + r.name + "' touches " +
                                std::to_string(k) + " qubits");
        }
        std::set<std::string> vars;
        for (const auto& t : r.pattern) {
            for (const auto& a : t.angles) {
                for (const auto& [v, coeff] : a.var_terms) {
                    (void)coeff;
                    vars.insert(v);
                }
            }
        }
        RuleValidation rv{r.name, true, ""};
        // Every variable sweeps the sample values jointly; with distinct
        // offsets per variable position so coincidental equalities at a
        // single point cannot mask a bad rule.
        for (std::size_t si = 0; si < std::size(kSamples) && rv.passed; ++si) {
            std::map<std::string, double> bindings;
            std::size_t vi = 0;
            for (const auto& v : vars) {
                bindings[v] = kSamples[(si + vi) % std::size(kSamples)] + 0.1 * static_cast<double>(vi);
                ++vi;
            }
            Circuit lhs = instantiate_templates(r.pattern, static_cast<std::uint32_t>(k), bindings);
            Circuit rhs =
                instantiate_templates(r.substitution, static_cast<std::uint32_t>(k), bindings);
            if (!circuits_equivalent(lhs, rhs, 1e-9)) {
                rv.passed = false;
                rv.detail = "pattern and substitution differ at sample " + std::to_string(si);
            }
        }
        report.results.push_back(std::move(rv));
    }
    return report;
}

bool rules_translate_u23(const RuleSet& rs) {
    for (const auto& r : rs.rules) {
        for (const auto& t : r.pattern) {
            if (t.gate == GateId::U2 || t.gate == GateId::U3) {
                return true;
            }
        }
    }
    return false;
}

} // namespace qrw
