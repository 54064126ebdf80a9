#pragma once

// Command-line front end. Exit codes: 0 success, 1 domain error or failed check,
// 2 usage error, 3 search budget exceeded.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "vnum/vnum.hpp"

namespace vnum::cli {

using json = nlohmann::ordered_json;

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitBudget = 3;

inline const std::vector<std::string> kVerbs = {"v",           "ass",    "v-at-prime", "v-primary", "v-graph",
                                                "closed-form", "powers", "reg",        "check"};
inline const std::vector<std::string> kSuites = {"alpha-class", "pure-power-class", "edge-power-bounds",
                                                 "reg-gap",     "v-le-reg",         "linear-bound",
                                                 "power-lower", "colon-decomposition"};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// --help was requested; what() holds the help text.
class HelpRequested : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Options {
    bool json = false;
    std::uint64_t max_n = 3;
    bool max_n_given = false;
    std::uint64_t budget = kDefaultBudget;
    bool verify_oracle = false;
    bool witness_all = false;
    std::optional<std::string> prime;
    std::optional<std::string> vars;
    std::optional<std::string> colon_by;
};

struct Command {
    std::string verb;
    std::string target;
    std::string suite;  // only for `check`
    Options options;
};

inline Command parse_args(const std::vector<std::string>& args) {
    Command cmd;
    std::vector<std::string> positional;
    CLI::App app{"Exact v-numbers of monomial ideals and graph edge ideals", "vnum"};
    app.add_option("verb", cmd.verb, "One of: v, ass, v-at-prime, v-primary, v-graph, closed-form, powers, reg, check")
        ->required()
        ->check(CLI::IsMember(kVerbs));
    app.add_option("args", positional, "Target expression (for `check`: suite name, then target)")->required();
    app.add_flag("--json", cmd.options.json, "Emit JSON");
    app.add_option("--max-n", cmd.options.max_n, "Largest power / window size")->check(CLI::PositiveNumber);
    app.add_option("--budget", cmd.options.budget, "Maximum grid points per search")->check(CLI::PositiveNumber);
    app.add_flag("--verify-oracle", cmd.options.verify_oracle, "Cross-check fast paths against the grid oracle");
    app.add_flag("--witness-all", cmd.options.witness_all, "List every minimum-degree witness");
    app.add_option("--prime", cmd.options.prime, "Prime for v-at-prime, as a variable list, e.g. \"x,y\"");
    app.add_option("--vars", cmd.options.vars, "Explicit variable list fixing the ambient ring, e.g. \"x,y,z\"");
    app.add_option("--colon-by", cmd.options.colon_by, "Generator f for the linear-bound check");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        throw HelpRequested(app.help());
    } catch (const CLI::ParseError& e) {
        throw UsageError(e.what());
    }
    cmd.options.max_n_given = app.count("--max-n") > 0;

    if (cmd.verb == "check") {
        if (positional.size() != 2) throw UsageError("check expects a suite name and one target expression");
        cmd.suite = positional[0];
        if (std::find(kSuites.begin(), kSuites.end(), cmd.suite) == kSuites.end())
            throw UsageError("unknown check suite '" + cmd.suite + "'");
        cmd.target = positional[1];
    } else {
        if (positional.size() != 1) throw UsageError("expected exactly one target expression");
        cmd.target = positional[0];
    }
    if (cmd.verb == "v-at-prime" && !cmd.options.prime) throw UsageError("v-at-prime requires --prime");
    return cmd;
}

inline Command parse_args(int argc, const char* const* argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return parse_args(args);
}

namespace detail {

struct LoadedIdeal {
    MonomialIdeal ideal;
    VarNames names;
};

inline bool looks_like_graph(const std::string& target) { return target.find('(') != std::string::npos; }

inline std::optional<VarNames> explicit_vars(const Options& o) {
    if (!o.vars) return std::nullopt;
    VarNames names;
    std::stringstream ss(*o.vars);
    for (std::string item; std::getline(ss, item, ',');) {
        item.erase(0, item.find_first_not_of(" \t"));
        item.erase(item.find_last_not_of(" \t") + 1);
        if (item.empty()) throw UsageError("empty name in --vars");
        names.push_back(item);
    }
    return names;
}

/// An ideal expression, or a graph expression standing for its edge ideal.
inline LoadedIdeal load_ideal(const Command& cmd) {
    if (looks_like_graph(cmd.target)) {
        Graph g = parse_graph(cmd.target);
        return {edge_ideal(g), g.labels()};
    }
    auto p = parse_ideal(cmd.target, explicit_vars(cmd.options));
    return {std::move(p.ideal), std::move(p.names)};
}

inline json names_of(const MonomialPrime& P, const VarNames& names) {
    json a = json::array();
    for (std::size_t i : P.support()) a.push_back(names.at(i));
    return a;
}

inline json witness_json(const VWitness& w, const VarNames& names) {
    return json{{"value", w.value}, {"witness", format(w.witness, names)}, {"prime", names_of(w.prime, names)}};
}

inline json bounds_json(const MonomialIdeal& I) {
    auto b = v_bounds(I);
    return json{{"lower", b.lower}, {"upper", b.upper ? json(*b.upper) : json(nullptr)}};
}

inline json vertex_labels(const Graph& g, const VertexSet& s) {
    json a = json::array();
    for (Vertex v : s) a.push_back(g.labels().at(v - 1));
    return a;
}

inline json rows_json(const std::vector<PowerCheckRow>& rows) {
    json a = json::array();
    for (const auto& r : rows)
        a.push_back(json{{"n", r.n},
                         {"power", r.n + 1},
                         {"value", r.v},
                         {"lower", r.lower},
                         {"upper", r.upper ? json(*r.upper) : json(nullptr)},
                         {"expected", r.expected ? json(*r.expected) : json(nullptr)},
                         {"ok", r.ok}});
    return a;
}

inline json report_json(const PowerCheckReport& r) {
    return json{{"check", r.check},
                {"base_value", r.base_v},
                {"alpha", r.alpha},
                {"rows", rows_json(r.rows)},
                {"cutoff", r.cutoff ? json(*r.cutoff) : json(nullptr)},
                {"holds", r.holds}};
}

/// Parses "a=5,5; u=1; n=2".
inline RegGapResult run_reg_gap(const std::string& target, std::uint64_t budget) {
    std::vector<Exponent> a;
    std::optional<Exponent> u, n;
    std::stringstream ss(target);
    for (std::string item; std::getline(ss, item, ';');) {
        const auto eq = item.find('=');
        if (eq == std::string::npos) throw UsageError("reg-gap target expects key=value items, got '" + item + "'");
        std::string key = item.substr(0, eq);
        key.erase(0, key.find_first_not_of(" \t"));
        key.erase(key.find_last_not_of(" \t") + 1);
        const std::string value = item.substr(eq + 1);
        try {
            if (key == "a") {
                std::stringstream vs(value);
                for (std::string x; std::getline(vs, x, ',');) a.push_back(std::stoull(x));
            } else if (key == "u") {
                u = std::stoull(value);
            } else if (key == "n") {
                n = std::stoull(value);
            } else {
                throw UsageError("unknown reg-gap key '" + key + "'");
            }
        } catch (const std::logic_error&) {
            throw UsageError("malformed reg-gap value for '" + key + "'");
        }
    }
    if (a.empty() || !u || !n) throw UsageError("reg-gap target needs a=..., u=..., n=...");
    return reg_gap_family(a, *u, *n, budget);
}

/// Renders a flat JSON object as "key: value" lines.
inline std::string human(const json& j) {
    std::ostringstream os;
    for (auto it = j.begin(); it != j.end(); ++it) {
        if (it.key() == "schema") continue;
        os << it.key() << ": ";
        if (it->is_string())
            os << it->get<std::string>();
        else
            os << it->dump();
        os << '\n';
    }
    return os.str();
}

inline json run_check(const Command& cmd, int& exit_code) {
    const auto& o = cmd.options;
    json j{{"suite", cmd.suite}};
    bool holds = true;
    if (cmd.suite == "reg-gap") {
        auto r = run_reg_gap(cmd.target, o.budget);
        j["ideal"] = format(r.ideal, indexed_names(r.ideal.ambient()));
        j["value"] = r.v;
        j["reg"] = r.reg;
        j["expected_value"] = r.expected_v;
        j["expected_reg"] = r.expected_reg;
        j["gap"] = r.reg - r.v;
        holds = r.holds;
    } else if (cmd.suite == "edge-power-bounds") {
        Graph g = parse_graph(cmd.target);
        auto r = check_edge_power_bounds(g, o.max_n, o.budget);
        j.update(report_json(r));
        holds = r.holds;
        if (r.cutoff) exit_code = kExitBudget;
    } else {
        auto [I, names] = load_ideal(cmd);
        j["ideal"] = format(I, names);
        if (cmd.suite == "alpha-class" || cmd.suite == "pure-power-class") {
            auto r = cmd.suite == "alpha-class" ? check_alpha_equality_class(I, o.max_n, o.budget)
                                                : check_pure_power_class(I, o.max_n, o.budget);
            j.update(report_json(r));
            holds = r.holds;
            if (r.cutoff) exit_code = kExitBudget;
        } else if (cmd.suite == "v-le-reg") {
            auto r = check_v_le_reg(I, o.budget);
            j["value"] = r.v;
            j["reg"] = r.reg;
            holds = r.holds;
        } else if (cmd.suite == "linear-bound") {
            Monomial f = o.colon_by ? parse_monomial(*o.colon_by, names) : default_bound_generator(I);
            auto c = linear_bound_certificate(I, f, o.max_n, 8, o.budget);
            j["f"] = format(c.f, names);
            j["n0"] = c.n0;
            j["d"] = c.d;
            j["stable_colon"] = format(c.stable_colon, names);
            j["rows"] = rows_json(c.rows);
            holds = c.holds;
        } else if (cmd.suite == "power-lower") {
            auto r = check_power_lower_vs_base(I, o.max_n, o.budget);
            j["base_value"] = r.base_v;
            j["threshold_s"] = r.threshold_s;
            j["first_holding_s"] = r.first_holding_s ? json(*r.first_holding_s) : json(nullptr);
            json vals = json::array();
            for (auto [s, v] : r.values) vals.push_back(json{{"s", s}, {"value", v}});
            j["values"] = vals;
            holds = r.holds;
        } else if (cmd.suite == "colon-decomposition") {
            const std::uint64_t n = o.max_n_given ? o.max_n : 1;
            auto r = v_colon_decomposition(I, n, o.budget);
            j["power"] = n;
            j["value"] = r.power_witness.value;
            j["witness"] = format(r.power_witness.witness, names);
            j["divisors_checked"] = r.divisors_checked;
            j["first_failure"] = r.first_failure ? json(format(*r.first_failure, names)) : json(nullptr);
            holds = r.holds;
        }
    }
    j["holds"] = holds;
    if (!holds && exit_code == kExitOk) exit_code = kExitDomain;
    return j;
}

inline json run_closed_form(const Command& cmd) {
    const GraphExpr e = parse_graph_expr(cmd.target);
    using K = GraphExpr::Kind;
    json j{{"graph", cmd.target}};
    switch (e.kind) {
        case K::Path:
            j["value"] = v_path_closed(e.size);
            j["method"] = "path-formula";
            return j;
        case K::Cycle:
            j["value"] = v_cycle_closed(e.size);
            j["method"] = "cycle-formula";
            return j;
        case K::Join:
            j["value"] = v_join_closed(build_graph(e.operands[0]), build_graph(e.operands[1]), cmd.options.budget);
            j["method"] = "join-min";
            return j;
        case K::CliqueSum: {
            const auto& a = e.operands[0];
            const auto& b = e.operands[1];
            if (a.kind != K::Cycle || (b.kind != K::Path && b.kind != K::Cycle) || e.glue_first != 1 ||
                e.glue_second != 1)
                throw DomainError("closed form only covers cliquesum(cycle(n), path(m)) and cliquesum(cycle(n), cycle(m))");
            auto kind = b.kind == K::Path ? CliqueSumKind::CyclePath : CliqueSumKind::CycleCycle;
            auto r = clique_sum_analysis(kind, a.size, b.size);
            j["lower"] = r.lower;
            j["upper"] = r.upper;
            j["value"] = r.exact ? json(*r.exact) : json(nullptr);
            j["method"] = kind == CliqueSumKind::CyclePath ? "cycle-path-bracket" : "cycle-cycle-formula";
            return j;
        }
        case K::Edges: break;
    }
    throw DomainError("no closed form for an explicit edge list; use v-graph");
}

inline json dispatch(const Command& cmd, int& exit_code) {
    const auto& o = cmd.options;
    json j{{"schema", 1}, {"verb", cmd.verb}};
    if (cmd.verb == "check") {
        j.update(run_check(cmd, exit_code));
        return j;
    }
    if (cmd.verb == "closed-form") {
        j.update(run_closed_form(cmd));
        return j;
    }
    if (cmd.verb == "v-graph") {
        Graph g = parse_graph(cmd.target);
        auto w = v_graph(g, o.budget);
        j["graph"] = cmd.target;
        j["value"] = w.value;
        j["stable_set"] = vertex_labels(g, w.stable_set);
        j["method"] = "stable-set";
        if (o.witness_all) {
            json all = json::array();
            for (const auto& s : minimum_stable_witnesses(g, o.budget)) all.push_back(vertex_labels(g, s.stable_set));
            j["all_witnesses"] = all;
        }
        if (o.verify_oracle) j["oracle_confirmed"] = v_oracle(edge_ideal(g), o.budget).value == w.value;
        return j;
    }

    auto [I, names] = load_ideal(cmd);
    j["ideal"] = format(I, names);

    if (cmd.verb == "v" || cmd.verb == "v-primary") {
        const bool matrix = cmd.verb == "v-primary" || is_m_primary(I);
        std::optional<MatrixSolution> solved;
        if (matrix) solved = solve_primary_matrix(I);
        const VWitness w = matrix ? solved->result : v_oracle(I, o.budget);
        j.update(witness_json(w, names));
        j["method"] = matrix ? "matrix" : "oracle";
        j["bounds"] = bounds_json(I);
        if (solved) {
            json rows = json::array();
            for (std::size_t r : solved->candidate.rows) rows.push_back(format(I.generators()[r], names));
            j["matrix_rows"] = rows;
        }
        if (o.verify_oracle) j["oracle_confirmed"] = !matrix || v_oracle(I, o.budget).value == w.value;
        if (o.witness_all) {
            json all = json::array();
            for (const auto& m : minimum_witnesses(I, o.budget)) all.push_back(witness_json(m, names));
            j["all_witnesses"] = all;
        }
    } else if (cmd.verb == "ass") {
        json primes = json::array();
        for (const auto& P : associated_primes(I, o.budget)) primes.push_back(names_of(P, names));
        j["primes"] = primes;
    } else if (cmd.verb == "v-at-prime") {
        const MonomialPrime P = parse_prime(*o.prime, names);
        j.update(witness_json(v_at_prime(I, P, o.budget), names));
        j["method"] = "oracle";
    } else if (cmd.verb == "reg") {
        auto c = check_v_le_reg(I, o.budget);
        j["reg"] = c.reg;
        j["value"] = c.v;
        j["v_le_reg"] = c.holds;
    } else if (cmd.verb == "powers") {
        auto seq = power_sequence(I, o.max_n, o.budget);
        const auto base_bounds = v_bounds(I);
        json vals = json::array();
        for (const auto& e : seq.values) {
            json row = witness_json(e.v, names);
            row["power"] = e.power;
            row["alpha"] = e.alpha;
            // alpha(I^k) = k alpha(I); sum of pure-power exponents scales by k as well.
            row["bounds"] = json{{"lower", e.power * seq.alpha - 1},
                                 {"upper", base_bounds.upper
                                               ? json(e.power * (*base_bounds.upper + I.ambient()) - I.ambient())
                                               : json(nullptr)}};
            vals.push_back(row);
        }
        j["alpha"] = seq.alpha;
        j["values"] = vals;
        j["cutoff"] = seq.cutoff ? json(*seq.cutoff) : json(nullptr);
        if (seq.cutoff) exit_code = kExitBudget;
    }
    return j;
}

}  // namespace detail

/// Executes a parsed command, writing the rendered result to `out` in one piece.
inline int run(const Command& cmd, std::ostream& out, std::ostream& err) {
    int code = kExitOk;
    try {
        const json j = detail::dispatch(cmd, code);
        out << (cmd.options.json ? j.dump(2) + "\n" : detail::human(j));
    } catch (const BudgetExceeded& e) {
        err << "vnum: " << e.what() << '\n';
        return kExitBudget;
    } catch (const UsageError& e) {
        err << "vnum: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ParseError& e) {
        err << "vnum: " << e.what() << '\n';
        return kExitUsage;
    } catch (const DomainError& e) {
        err << "vnum: " << e.what() << '\n';
        return kExitDomain;
    }
    return code;
}

/// Full entry point: argument parsing plus dispatch.
inline int main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Command cmd;
    try {
        cmd = parse_args(args);
    } catch (const HelpRequested& h) {
        out << h.what();
        return kExitOk;
    } catch (const UsageError& e) {
        err << "vnum: " << e.what() << '\n';
        return kExitUsage;
    }
    return run(cmd, out, err);
}

}  // namespace vnum::cli
