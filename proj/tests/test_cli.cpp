#include <catch_amalgamated.hpp>

#include <sstream>

#include <boundperm/cli.hpp>

using namespace boundperm;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result invoke(std::vector<std::string> args, const std::string& stdin_text = "") {
    std::ostringstream out, err;
    std::istringstream in(stdin_text);
    const int code = cli::run(args, out, err, in);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("map subcommand") {
    CHECK(invoke({"map", "--via", "gamma", "571492638"}).out == "5 7 3 2 9 1 4 8 6\n");
    CHECK(invoke({"map", "--via", "gamma-inv", "573291486"}).out == "5 7 1 4 9 2 6 3 8\n");
    CHECK(invoke({"map", "--via", "acode", "5,7,1,4,9,2,6,3,8"}).out == "1 2 3 2 1 5 2 8 5\n");
    CHECK(invoke({"map", "--via", "bdecode", "123215285"}).out == "5 7 3 2 9 1 4 8 6\n");
    CHECK(invoke({"map", "--via", "lehmer", "34152"}).out == "1 2 1 4 2\n");
    CHECK(invoke({"map", "--via", "alpha", "--k", "7", "83475612"}).out == "+-+++-++----++-\n");
    CHECK(invoke({"map", "--via", "beta-inv", "+-+++-++----++-"}).out == "3 1 4 5 2 7 6 9 8\n");
    CHECK(invoke({"map", "--via", "delta", "--k", "7", "83475612"}).out == "3 1 4 5 2 7 6 9 8\n");
}

TEST_CASE("map reads stdin lines when no input is given") {
    const auto r = invoke({"map", "--via", "gamma-inv"}, "5 7 3 2 9 1 4 8 6\n\n21\n");
    CHECK(r.code == cli::kExitOk);
    CHECK(r.out == "5 7 1 4 9 2 6 3 8\n2 1\n");
}

TEST_CASE("stats subcommand") {
    const auto r = invoke({"stats", "573291486"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["inv"] == 17);
    CHECK(j["sor"] == 16);
    CHECK(j["Cyc"] == std::vector<int>{1, 2, 3, 8});
    CHECK(j["cycles"] == std::vector<std::vector<int>>{{1, 5, 9, 6}, {2, 7, 4}, {3}, {8}});
    CHECK(j["Lmap"] == std::vector<int>{1, 2, 5});
}

TEST_CASE("enum output pipes into stats") {
    const auto listed = invoke({"enum", "--family", "A", "--n", "4", "--k", "1", "--avoid", "213"});
    REQUIRE(listed.code == 0);
    CHECK(std::count(listed.out.begin(), listed.out.end(), '\n') == 4);
    const auto stats = invoke({"stats"}, listed.out);
    REQUIRE(stats.code == 0);
    CHECK(std::count(stats.out.begin(), stats.out.end(), '\n') == 4);
    CHECK(invoke({"enum", "--family", "ballot", "--n", "2", "--k", "1"}).out == "++-\n+-+\n");
}

TEST_CASE("dist and gf subcommands") {
    CHECK(invoke({"dist", "--family", "A", "--n", "2", "--k", "1", "--stats", "inv,lmax"}).out ==
          "inv,lmax,count\n0,2,1\n1,1,1\n");
    CHECK(invoke({"gf", "--formula", "theorem1", "--n", "2", "--k", "1"}).out == "t^2 + q*t\n");
    CHECK(invoke({"gf", "--formula", "inv", "--n", "3", "--k", "3"}).out == "q^3 + 2*q^2 + 2*q + 1\n");
    CHECK(invoke({"gf", "--formula", "G", "--n", "1"}).out == "q*z + z + 1\n");
}

TEST_CASE("verify subcommand") {
    const auto r = invoke({"verify", "--check", "counts", "--max-n", "5"});
    CHECK(r.code == cli::kExitOk);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["check"] == "counts");
    CHECK(j["status"] == "pass");
    CHECK(j["range"]["max_n"] == 5);
    CHECK(invoke({"verify", "--max-n", "9"}).code == cli::kExitUsage);
}

TEST_CASE("usage and domain errors exit with 2") {
    CHECK(invoke({}).code == cli::kExitUsage);
    CHECK(invoke({"frobnicate"}).code == cli::kExitUsage);
    CHECK(invoke({"map", "--via", "nope", "12"}).code == cli::kExitUsage);
    CHECK(invoke({"stats", "112"}).code == cli::kExitUsage);
    CHECK(invoke({"map", "--via", "alpha", "--k", "1", "213"}).code == cli::kExitUsage);
    CHECK(invoke({"enum", "--family", "A", "--n", "3"}).code == cli::kExitUsage);
    CHECK(invoke({"gf", "--formula", "inv", "--n", "3"}).code == cli::kExitUsage);
    const auto r = invoke({"stats", "1,1"});
    CHECK(r.out.empty());
    CHECK(r.err.rfind("error: ", 0) == 0);
    const auto help = invoke({"--help"});
    CHECK(help.code == cli::kExitOk);
    CHECK(help.out.find("verify") != std::string::npos);
}

TEST_CASE("command specs round trip through their argument form") {
    const std::vector<std::vector<std::string>> commands{
        {"map", "--via", "alpha", "--k", "7", "83475612"},
        {"enum", "--family", "A", "--n", "5", "--k", "2", "--avoid", "213", "--adj", "2"},
        {"dist", "--family", "S", "--n", "4", "--k", "1", "--stats", "inv,rmin", "--format", "json"},
        {"gf", "--formula", "G", "--n", "3", "--order", "5"},
        {"verify", "--check", "gamma", "--max-n", "9", "--allow-large"},
        {"stats", "--", "3", "1", "2"},
    };
    for (const auto& args : commands) {
        const auto spec = cli::parse_command(args);
        CHECK(cli::parse_command(spec.to_args()) == spec);
    }
}

TEST_CASE("output is deterministic") {
    const std::vector<std::string> args{"dist", "--family", "A", "--n", "5", "--k", "2", "--stats", "des,cyc",
                                        "--format", "json"};
    CHECK(invoke(args).out == invoke(args).out);
}
