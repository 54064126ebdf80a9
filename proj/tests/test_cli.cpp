#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "vnum/cli.hpp"

using namespace vnum;
using nlohmann::json;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run_cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::main(args, out, err);
    return {code, out.str(), err.str()};
}

json run_json(std::vector<std::string> args) {
    args.push_back("--json");
    auto r = run_cli(args);
    INFO(r.err);
    REQUIRE(r.code == 0);
    return json::parse(r.out);
}

}  // namespace

TEST_CASE("argument parsing", "[cli]") {
    auto a = cli::parse_args({"v", "x^2, y^3"});
    REQUIRE(a.verb == "v");
    REQUIRE(a.target == "x^2, y^3");
    REQUIRE_FALSE(a.options.json);

    REQUIRE(cli::parse_args({"v-graph", "cycle(5)"}).verb == "v-graph");

    auto p = cli::parse_args({"powers", "x^2, y^3", "--max-n", "3", "--json"});
    REQUIRE(p.verb == "powers");
    REQUIRE(p.options.max_n == 3);
    REQUIRE(p.options.max_n_given);
    REQUIRE(p.options.json);

    auto c = cli::parse_args({"check", "reg-gap", "a=5,5;u=1;n=2"});
    REQUIRE(c.suite == "reg-gap");
    REQUIRE(c.target == "a=5,5;u=1;n=2");
}

TEST_CASE("usage errors", "[cli]") {
    REQUIRE_THROWS_AS(cli::parse_args({"frobnicate", "x"}), cli::UsageError);
    REQUIRE_THROWS_AS(cli::parse_args({"v"}), cli::UsageError);
    REQUIRE_THROWS_AS(cli::parse_args({"v", "x", "y"}), cli::UsageError);
    REQUIRE_THROWS_AS(cli::parse_args({"check", "x^2"}), cli::UsageError);
    REQUIRE_THROWS_AS(cli::parse_args({"check", "nope", "x^2"}), cli::UsageError);
    REQUIRE_THROWS_AS(cli::parse_args({"v-at-prime", "x^2, y"}), cli::UsageError);
    REQUIRE_THROWS_AS(cli::parse_args({"powers", "x", "--max-n", "0"}), cli::UsageError);

    auto r = run_cli({"frobnicate", "x"});
    REQUIRE(r.code == cli::kExitUsage);
    REQUIRE_FALSE(r.err.empty());
    REQUIRE(r.out.empty());
    REQUIRE(run_cli({"--help"}).code == cli::kExitOk);
}

TEST_CASE("exit codes", "[cli]") {
    auto parse = run_cli({"v", "x^2, y^"});
    REQUIRE(parse.code == cli::kExitUsage);
    REQUIRE(parse.err.find("position 7") != std::string::npos);

    REQUIRE(run_cli({"v-graph", "edges(3; )"}).code == cli::kExitDomain);
    REQUIRE(run_cli({"reg", "x*y"}).code == cli::kExitDomain);
    REQUIRE(run_cli({"v", "x^10,y^11,z^12", "--budget", "5", "--witness-all"}).code == cli::kExitBudget);
    REQUIRE(run_cli({"powers", "x^10,y^11,z^12,x*y^4*z", "--budget", "300"}).code == cli::kExitBudget);
    REQUIRE(run_cli({"check", "alpha-class", "x^10,y^11,z^12,x*y^4*z,x*y^2*z^3,x^3*y*z^5"}).code ==
            cli::kExitDomain);
}

TEST_CASE("documented invocations", "[cli]") {
    auto j = run_json({"v", "x^10,y^11,z^12,x*y^4*z,x*y^2*z^3,x^3*y*z^5"});
    REQUIRE(j["schema"] == 1);
    REQUIRE(j["value"] == 14);
    REQUIRE(j["method"] == "matrix");
    REQUIRE(j["witness"] == "x^2*y*z^11");
    REQUIRE(j["prime"] == json::array({"x", "y", "z"}));
    REQUIRE(j["bounds"]["lower"] == 5);
    REQUIRE(j["bounds"]["upper"] == 30);

    REQUIRE(run_json({"closed-form", "path(10)"})["value"] == 3);
    REQUIRE(run_json({"v-graph", "join(cycle(5),path(4))"})["value"] == 1);

    auto human = run_cli({"closed-form", "path(10)"});
    REQUIRE(human.code == 0);
    REQUIRE(human.out.find("value: 3\n") != std::string::npos);
}

TEST_CASE("json witness round trip", "[cli][property]") {
    for (const std::string target : {"x^10,y^11,z^12,x*y^4*z,x*y^2*z^3,x^3*y*z^5", "x^2*y, x*y^3, z^2",
                                     "a*b, b*c, c*d, d*e, a*e", "x1*x2, x2*x3, x3*x4"}) {
        auto j = run_json({"v", target});
        const auto parsed = parse_ideal(target);
        const auto f = parse_monomial(j["witness"].get<std::string>(), parsed.names);
        VarNames prime_vars = j["prime"].get<VarNames>();
        std::string prime_text;
        for (const auto& n : prime_vars) prime_text += (prime_text.empty() ? "" : ",") + n;
        REQUIRE(colon(parsed.ideal, f) == MonomialIdeal::from_prime(parse_prime(prime_text, parsed.names)));
        REQUIRE(f.degree() == j["value"].get<Exponent>());
    }
}

TEST_CASE("--verify-oracle only adds a confirmation", "[cli]") {
    for (const std::string target : {"x^5, y^5, x^3*y^2, x^2*y^3", "x^2*y, x*y^3", "cycle(6)"}) {
        auto plain = run_json({"v", target});
        auto checked = run_json({"v", target, "--verify-oracle"});
        REQUIRE(checked["oracle_confirmed"] == true);
        checked.erase("oracle_confirmed");
        REQUIRE(plain == checked);
    }
}

TEST_CASE("other verbs", "[cli]") {
    auto ass = run_json({"ass", "x1*x2, x2*x3, x3*x4"});
    REQUIRE(ass["primes"] == json::parse(R"([["x1","x3"],["x2","x3"],["x2","x4"]])"));

    auto vp = run_json({"v-at-prime", "x1*x2, x2*x3, x3*x4", "--prime", "x1,x3"});
    REQUIRE(vp["value"] == 1);
    REQUIRE(run_cli({"v-at-prime", "x*y", "--prime", "x,y"}).code == cli::kExitDomain);

    auto reg = run_json({"reg", "x^5, y^5, x^4*y^2"});
    REQUIRE(reg["reg"] == 7);
    REQUIRE(reg["value"] == 5);

    auto pw = run_json({"powers", "x^2, y^3", "--max-n", "3"});
    REQUIRE(pw["values"].size() == 3);
    REQUIRE(pw["values"][1]["value"] == 5);
    REQUIRE(pw["values"][1]["bounds"]["upper"] == 8);
    REQUIRE(pw["cutoff"].is_null());

    auto all = run_json({"v-graph", "path(4)", "--witness-all"});
    REQUIRE(all["all_witnesses"] == json::parse(R"([["x2"],["x3"]])"));

    auto gap = run_json({"check", "reg-gap", "a=5,5; u=1; n=2"});
    REQUIRE(gap["gap"] == 2);
    REQUIRE(gap["holds"] == true);

    auto lin = run_json({"check", "linear-bound", "a*b, b*c, c*d, d*e, a*e", "--colon-by", "a*b"});
    REQUIRE(lin["d"] == 1);
    REQUIRE(lin["n0"] == 1);

    auto cs = run_json({"closed-form", "cliquesum(cycle(7),path(8))"});
    REQUIRE(cs["value"].is_null());
    REQUIRE(cs["lower"] == 3);
    REQUIRE(cs["upper"] == 4);

    REQUIRE(run_json({"check", "edge-power-bounds", "cycle(5)", "--max-n", "2"})["holds"] == true);
    REQUIRE(run_json({"check", "colon-decomposition", "x^5, y^5, x^4*y^2"})["holds"] == true);
    REQUIRE(run_json({"check", "power-lower", "x^2, y^3"})["threshold_s"] == 1);
    REQUIRE(run_json({"v", "x^2, y^3", "--vars", "x,y,z"})["method"] == "oracle");
}
