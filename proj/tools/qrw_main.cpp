#include "qrw/generator.hpp"
#include "qrw/oracle.hpp"
#include "qrw/qasm.hpp"
#include "qrw/rewriter.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using nlohmann::json;
using namespace qrw;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitParse = 2;
constexpr int kExitVerifyFailed = 3;
constexpr int kExitCapacity = 4;

std::string read_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) {
        throw std::invalid_argument("cannot open '" + path + "'");
    }
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

RuleSet load_rules(const std::string& spec) {
    if (auto builtin = builtin_by_name(spec)) {
        return *builtin;
    }
    RuleSet rs;
    rs.name = spec;
    rs.rules = parse_rules(read_file(spec));
    return rs;
}

Circuit load_circuit(const std::string& path, const RuleSet* rules) {
    QasmOptions opts;
    opts.allow_u23 = rules != nullptr && rules_translate_u23(*rules);
    return parse_qasm(read_file(path), opts);
}

// --delta 0 means unlimited; absent means the per-rule default.
std::size_t delta_from_flag(long long flag, bool present) {
    if (!present) {
        return kDeltaAuto;
    }
    return flag == 0 ? kDeltaUnlimited : static_cast<std::size_t>(flag);
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        throw std::runtime_error("cannot write '" + path + "'");
    }
    f << content;
}

json metrics_json(const CircuitMetrics& m) {
    json j;
    j["schema"] = 1;
    j["n"] = m.n;
    j["gates"] = m.total;
    j["m1"] = m.m1;
    j["m2"] = m.m2;
    j["m3"] = m.m3;
    j["depth"] = m.depth;
    j["l"] = m.l;
    j["d1"] = m.d1;
    j["d2"] = m.d2;
    return j;
}

int run_match(const std::string& circuit_path, const std::string& rules_spec, long long delta,
              bool delta_set) {
    RuleSet rules = load_rules(rules_spec);
    Circuit circuit = load_circuit(circuit_path, &rules);
    std::vector<MatchCandidate> cands =
        pattern_matching(circuit, rules, delta_from_flag(delta, delta_set));
    find_conflicts(cands);
    json out;
    out["schema"] = 1;
    out["rules"] = rules.name;
    out["candidates"] = json::array();
    for (const auto& c : cands) {
        json jc;
        jc["rule"] = c.rule.name;
        jc["indices"] = c.indices;
        json mapping = json::object();
        for (std::size_t pq = 0; pq < c.mapping.map.size(); ++pq) {
            mapping[std::to_string(pq)] = c.mapping.map[pq];
        }
        jc["mapping"] = mapping;
        if (!c.bindings.empty()) {
            jc["bindings"] = c.bindings;
        }
        jc["conflict"] = c.conflict;
        out["candidates"].push_back(std::move(jc));
    }
    std::cout << out.dump(2) << "\n";
    return kExitOk;
}

struct RewriteArgs {
    std::string circuit_path;
    std::string rules_spec;
    std::string policy_name = "greedy";
    std::uint64_t seed = 0;
    std::size_t tries = 5;
    long long delta = 0;
    bool delta_set = false;
    std::size_t rounds = 5;
    bool no_internal = false;
    std::string output;
};

int run_rewrite(const RewriteArgs& args) {
    RuleSet external = load_rules(args.rules_spec);
    Circuit circuit = load_circuit(args.circuit_path, &external);
    RuleSet internal;
    internal.name = "none";
    if (!args.no_internal) {
        internal = builtin_internal();
    }
    std::size_t delta = delta_from_flag(args.delta, args.delta_set);

    Policy policy = Policy::greedy();
    if (args.policy_name == "precise") {
        policy = Policy::precise();
    } else if (args.policy_name == "stochastic") {
        policy = Policy::stochastic(args.seed);
    } else if (args.policy_name != "greedy") {
        throw CLI::ValidationError("--policy", "must be precise, greedy, or stochastic");
    }

    OptimizeResult best;
    std::size_t best_try = 0;
    std::size_t tries =
        policy.kind == Policy::Kind::Stochastic ? std::max<std::size_t>(args.tries, 1) : 1;
    for (std::size_t t = 0; t < tries; ++t) {
        Policy p = policy;
        if (policy.kind == Policy::Kind::Stochastic) {
            p.seed = args.seed + t;
        }
        OptimizeResult r = optimize(circuit, internal, external, p, args.rounds, delta);
        if (t == 0 || r.circuit.depth() < best.circuit.depth() ||
            (r.circuit.depth() == best.circuit.depth() &&
             r.circuit.size() < best.circuit.size())) {
            best = std::move(r);
            best_try = t;
        }
    }

    for (const auto& round : best.rounds) {
        json jr;
        jr["schema"] = 1;
        jr["round"] = round.round;
        jr["phase"] = round.phase;
        jr["gates"] = round.gates;
        jr["depth"] = round.depth;
        jr["picks"] = round.picks;
        std::cout << jr.dump() << "\n";
    }
    json summary;
    summary["schema"] = 1;
    summary["final"] = metrics_json(best.circuit.metrics());
    if (policy.kind == Policy::Kind::Stochastic) {
        summary["best_try"] = best_try;
    }
    std::cout << summary.dump() << "\n";

    write_output(args.output, serialize_qasm(best.circuit));
    return kExitOk;
}

int run_stats(const std::string& circuit_path) {
    Circuit circuit = load_circuit(circuit_path, nullptr);
    std::cout << metrics_json(circuit.metrics()).dump(2) << "\n";
    return kExitOk;
}

int run_verify(const std::string& a_path, const std::string& b_path, double tol) {
    Circuit a = load_circuit(a_path, nullptr);
    Circuit b = load_circuit(b_path, nullptr);
    bool equivalent = circuits_equivalent(a, b, tol);
    json out;
    out["schema"] = 1;
    out["equivalent"] = equivalent;
    out["tolerance"] = tol;
    std::cout << out.dump() << "\n";
    return equivalent ? kExitOk : kExitVerifyFailed;
}

int run_gen(std::uint32_t qubits, std::size_t layers, double d1, double d2, std::uint64_t seed,
            const std::string& output) {
    GenOptions opts;
    opts.num_qubits = qubits;
    opts.layers = layers;
    opts.d1 = d1;
    opts.d2 = d2;
    opts.seed = seed;
    Circuit c = gen_circuit(opts);
    write_output(output, serialize_qasm(c));
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"qrw: pattern-matching quantum circuit rewriting"};
    app.require_subcommand(1);

    std::string circuit_path;
    std::string rules_spec;
    long long delta = 0;

    auto* match = app.add_subcommand("match", "List replacement candidates");
    match->add_option("circuit", circuit_path, "QASM circuit file")->required();
    match->add_option("--rules", rules_spec, "Built-in set name or rule file")->required();
    auto* match_delta = match->add_option("--delta", delta, "Match span bound (0 = unlimited)");

    RewriteArgs rw;
    auto* rewrite = app.add_subcommand("rewrite", "Rewrite a circuit with a rule set");
    rewrite->add_option("circuit", rw.circuit_path, "QASM circuit file")->required();
    rewrite->add_option("--rules", rw.rules_spec, "Built-in set name or rule file")->required();
    rewrite->add_option("--policy", rw.policy_name, "precise | greedy | stochastic");
    rewrite->add_option("--seed", rw.seed, "Stochastic seed");
    rewrite->add_option("--tries", rw.tries, "Stochastic restarts, best kept");
    auto* rewrite_delta =
        rewrite->add_option("--delta", rw.delta, "Match span bound (0 = unlimited)");
    rewrite->add_option("--rounds", rw.rounds, "Round bound");
    rewrite->add_flag("--no-internal", rw.no_internal, "Disable the internal library");
    rewrite->add_option("-o,--output", rw.output, "Output QASM path (default stdout)");

    RewriteArgs op;
    auto* optimize_cmd =
        app.add_subcommand("optimize", "Rewrite with the internal library enabled");
    optimize_cmd->add_option("circuit", op.circuit_path, "QASM circuit file")->required();
    optimize_cmd->add_option("--rules", op.rules_spec, "Built-in set name or rule file")->required();
    optimize_cmd->add_option("--policy", op.policy_name, "precise | greedy | stochastic");
    optimize_cmd->add_option("--seed", op.seed, "Stochastic seed");
    optimize_cmd->add_option("--tries", op.tries, "Stochastic restarts, best kept");
    auto* optimize_delta =
        optimize_cmd->add_option("--delta", op.delta, "Match span bound (0 = unlimited)");
    optimize_cmd->add_option("--rounds", op.rounds, "Round bound");
    optimize_cmd->add_option("-o,--output", op.output, "Output QASM path (default stdout)");

    std::string stats_path;
    auto* stats = app.add_subcommand("stats", "Circuit metrics as JSON");
    stats->add_option("circuit", stats_path, "QASM circuit file")->required();

    std::string verify_a, verify_b;
    double verify_tol = 1e-9;
    auto* verify = app.add_subcommand("verify", "Check global-phase equivalence (n <= 10)");
    verify->add_option("a", verify_a, "First QASM file")->required();
    verify->add_option("b", verify_b, "Second QASM file")->required();
    verify->add_option("--tol", verify_tol, "Frobenius tolerance");

    std::uint32_t gen_qubits = 4;
    std::size_t gen_layers = 10;
    double gen_d1 = 0.3, gen_d2 = 0.2;
    std::uint64_t gen_seed = 0;
    std::string gen_output;
    auto* gen = app.add_subcommand("gen", "Generate a density-parameterized random circuit");
    gen->add_option("--qubits", gen_qubits, "Register size")->required();
    gen->add_option("--layers", gen_layers, "Layer count")->required();
    gen->add_option("--d1", gen_d1, "1-qubit gate density")->required();
    gen->add_option("--d2", gen_d2, "2-qubit gate density")->required();
    gen->add_option("--seed", gen_seed, "Generator seed");
    gen->add_option("-o,--output", gen_output, "Output QASM path (default stdout)");

    try {
        app.parse(argc, argv);
        if (match->parsed()) {
            return run_match(circuit_path, rules_spec, delta, !match_delta->empty());
        }
        if (rewrite->parsed()) {
            rw.delta_set = !rewrite_delta->empty();
            return run_rewrite(rw);
        }
        if (optimize_cmd->parsed()) {
            op.delta_set = !optimize_delta->empty();
            op.no_internal = false;
            return run_rewrite(op);
        }
        if (stats->parsed()) {
            return run_stats(stats_path);
        }
        if (verify->parsed()) {
            return run_verify(verify_a, verify_b, verify_tol);
        }
        if (gen->parsed()) {
            return run_gen(gen_qubits, gen_layers, gen_d1, gen_d2, gen_seed, gen_output);
        }
        return kExitUsage;
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitUsage;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const CapacityError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCapacity;
    } catch (const QueueCapacityError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCapacity;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
