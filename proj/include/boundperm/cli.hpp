#pragma once

/**
 * @file cli.hpp
 * @brief Command-line surface: argument parsing into a CommandSpec and dispatch.
 *
 *   stats  [PERM]                       statistics of a permutation as JSON
 *   map    --via MAP [--k K] [INPUT]    apply a code or bijection
 *   enum   --family F --n N [--k K] [--avoid P [--adj I,J]]
 *   dist   --family F --n N [--k K] --stats s1,s2 [--format csv|json]
 *   gf     --formula theorem1|inv|G --n N [--k K] [--order M]
 *   verify [--check ID|all] [--max-n N] [--allow-large]
 *
 * stats and map read one input per line from stdin when no input is given.
 * Exit codes: 0 success, 1 verification failure, 2 usage or domain error.
 */

#include <algorithm>
#include <cstddef>
#include <iostream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ballot.hpp"
#include "codes.hpp"
#include "distribution.hpp"
#include "enumerate.hpp"
#include "error.hpp"
#include "generating.hpp"
#include "pattern.hpp"
#include "permutation.hpp"
#include "text.hpp"
#include "verify.hpp"

namespace boundperm::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

struct CommandSpec {
    std::string subcommand;
    std::string via;
    std::optional<std::size_t> k;
    std::string family;
    std::size_t n = 0;
    std::string avoid;
    std::vector<int> adj;
    std::vector<std::string> stats;
    std::string format = "csv";
    std::string formula;
    std::optional<std::size_t> order;
    std::string check = "all";
    std::size_t max_n = kDefaultMaxN;
    bool allow_large = false;
    std::vector<std::string> input;

    bool operator==(const CommandSpec&) const = default;

    // Canonical argument list; parse_command(to_args()) reproduces *this.
    std::vector<std::string> to_args() const {
        std::vector<std::string> a{subcommand};
        auto opt = [&](const char* name, const std::string& value) {
            a.emplace_back(name);
            a.push_back(value);
        };
        auto join = [](const auto& items) {
            std::string s;
            for (std::size_t i = 0; i < items.size(); ++i) {
                if (i) s += ',';
                if constexpr (std::is_same_v<std::decay_t<decltype(items[i])>, std::string>) s += items[i];
                else s += std::to_string(items[i]);
            }
            return s;
        };
        if (subcommand == "map") opt("--via", via);
        if (subcommand == "enum" || subcommand == "dist") {
            opt("--family", family);
            opt("--n", std::to_string(n));
        }
        if (subcommand == "gf") {
            opt("--formula", formula);
            opt("--n", std::to_string(n));
        }
        if (k) opt("--k", std::to_string(*k));
        if (!avoid.empty()) opt("--avoid", avoid);
        if (!adj.empty()) opt("--adj", join(adj));
        if (subcommand == "dist") {
            opt("--stats", join(stats));
            opt("--format", format);
        }
        if (order) opt("--order", std::to_string(*order));
        if (subcommand == "verify") {
            opt("--check", check);
            opt("--max-n", std::to_string(max_n));
            if (allow_large) a.emplace_back("--allow-large");
        }
        if (!input.empty()) {
            a.emplace_back("--");
            a.insert(a.end(), input.begin(), input.end());
        }
        return a;
    }
};

// Carries the rendered help text out of parse_command.
class HelpRequested : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline const std::vector<std::string>& map_names() {
    static const std::vector<std::string> names{"gamma", "gamma-inv", "acode",     "bcode",    "bdecode",
                                                "lehmer", "lehmer-inv", "alpha",   "alpha-inv", "beta",
                                                "beta-inv", "delta"};
    return names;
}

/// Parses argv-style arguments (without the program name). Throws
/// CLI::ParseError on malformed arguments and HelpRequested for --help.
inline CommandSpec parse_command(const std::vector<std::string>& args) {
    CommandSpec spec;
    CLI::App app{"Statistics, bijections and generating functions for permutations with bounded drop size",
                 "boundperm"};
    app.require_subcommand(1);

    auto* stats = app.add_subcommand("stats", "print every statistic of a permutation as JSON");
    stats->add_option("input", spec.input, "permutation, e.g. 571492638 or 3,4,1,5,2");

    auto* map = app.add_subcommand("map", "apply a code or bijection");
    map->add_option("--via", spec.via, "map to apply")->required()->check(CLI::IsMember(map_names()));
    map->add_option("--k", spec.k, "bound k for alpha, beta, delta");
    map->add_option("input", spec.input, "permutation, code or ballot sequence");

    auto family_check = CLI::IsMember({"all", "A", "S", "s321", "ballot"});
    auto* enumerate_cmd = app.add_subcommand("enum", "list the members of a family, one per line");
    auto* dist = app.add_subcommand("dist", "joint distribution of statistics over a family");
    for (auto* sub : {enumerate_cmd, dist}) {
        sub->add_option("--family", spec.family, "all, A, S, s321 or ballot")->required()->check(family_check);
        sub->add_option("--n", spec.n, "size parameter")->required();
        sub->add_option("--k", spec.k, "bound parameter");
        auto* avoid = sub->add_option("--avoid", spec.avoid, "pattern to avoid, e.g. 213 or 2_13_");
        sub->add_option("--adj", spec.adj, "adjacent pattern letters i,i+1 (by index i)")
            ->delimiter(',')
            ->needs(avoid);
    }
    dist->add_option("--stats", spec.stats, "comma separated statistics")->required()->delimiter(',');
    dist->add_option("--format", spec.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

    auto* gf = app.add_subcommand("gf", "print a generating function");
    gf->add_option("--formula", spec.formula, "theorem1, inv or G")
        ->required()
        ->check(CLI::IsMember({"theorem1", "inv", "G"}));
    gf->add_option("--n", spec.n, "size parameter")->required();
    gf->add_option("--k", spec.k, "bound parameter");
    gf->add_option("--order", spec.order, "truncation order for G (defaults to n)");

    auto* verify = app.add_subcommand("verify", "run the exhaustive checks and print a JSON report");
    std::vector<std::string> checks{"all"};
    checks.insert(checks.end(), kCheckIds.begin(), kCheckIds.end());
    verify->add_option("--check", spec.check, "check id or all")->check(CLI::IsMember(checks));
    verify->add_option("--max-n", spec.max_n, "largest n to enumerate");
    verify->add_flag("--allow-large", spec.allow_large, "allow max-n up to 10");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        std::ostringstream help, ignored;
        app.exit(e, help, ignored);
        throw HelpRequested(help.str());
    }
    for (auto* sub : app.get_subcommands()) spec.subcommand = sub->get_name();
    return spec;
}

namespace detail {

inline std::string join_input(const std::vector<std::string>& parts) {
    std::string s;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) s += ' ';
        s += parts[i];
    }
    return s;
}

// Applies `fn` to the joined positional input, or to each nonblank stdin line.
template <class Fn>
void for_each_input(const CommandSpec& spec, std::istream& in, Fn&& fn) {
    if (!spec.input.empty()) {
        fn(join_input(spec.input));
        return;
    }
    std::string line;
    while (std::getline(in, line))
        if (line.find_first_not_of(" \t\r") != std::string::npos) fn(line);
}

inline nlohmann::ordered_json stats_json(const Permutation& p) {
    const auto m = marker_sets(p);
    const auto c = cycle_decomposition(p);
    nlohmann::ordered_json j;
    j["n"] = p.size();
    j["word"] = std::vector<int>(p.begin(), p.end());
    j["inv"] = inv_count(p);
    j["des"] = des_count(p);
    j["maxdrop"] = maxdrop(p);
    j["maxlift"] = maxlift(p);
    j["lmax"] = m.lmax();
    j["rmin"] = m.rmin();
    j["rmax"] = m.rmax();
    j["Lmal"] = m.lmal;
    j["Lmap"] = m.lmap;
    j["Rmil"] = m.rmil;
    j["Rmip"] = m.rmip;
    j["Rmal"] = m.rmal;
    j["cycles"] = c.cycles;
    j["Cyc"] = c.minima;
    j["cyc"] = c.count();
    j["sor"] = sorting_index(p);
    j["dis"] = dis(p);
    j["vnw"] = p.empty() ? nlohmann::ordered_json(nullptr) : nlohmann::ordered_json(vnw(p));
    return j;
}

inline std::string apply_map(const std::string& via, const std::string& text, std::optional<std::size_t> k) {
    if (via == "gamma") return gamma(parse_permutation(text)).to_string();
    if (via == "gamma-inv") return gamma_inverse(parse_permutation(text)).to_string();
    if (via == "acode") return a_code(parse_permutation(text)).to_string();
    if (via == "bcode") return b_code(parse_permutation(text)).to_string();
    if (via == "lehmer") return lehmer_code(parse_permutation(text)).to_string();
    if (via == "bdecode") return b_decode(parse_code(text)).to_string();
    if (via == "lehmer-inv") return lehmer_decode(parse_code(text)).to_string();
    if (via == "alpha") return alpha(parse_permutation(text), k).to_string();
    if (via == "alpha-inv") return alpha_inverse(parse_ballot(text)).to_string();
    if (via == "beta") return beta(parse_permutation(text), k).to_string();
    if (via == "beta-inv") return beta_inverse(parse_ballot(text)).to_string();
    if (via == "delta") return delta(parse_permutation(text), k).to_string();
    boundperm::detail::fail("unknown map '" + via + "'");
}

inline SetSpec set_spec(const CommandSpec& spec) {
    SetSpec s;
    s.family = parse_family(spec.family);
    s.n = spec.n;
    if (s.family != Family::all) {
        boundperm::detail::require(spec.k.has_value(), "--k is required for family " + spec.family);
        s.k = *spec.k;
    }
    if (!spec.avoid.empty()) s.avoid = parse_pattern(spec.avoid, spec.adj);
    s.validate();
    return s;
}

inline int run_enum(const CommandSpec& spec, std::ostream& out) {
    const auto s = set_spec(spec);
    if (s.family == Family::ballot) {
        for_each_ballot(s.n, s.k, [&](const BallotSequence& a) { out << a.to_string() << '\n'; });
    } else {
        for (const auto& p : enumerate(s)) out << p.to_string() << '\n';
    }
    return kExitOk;
}

inline int run_dist(const CommandSpec& spec, std::ostream& out) {
    std::vector<Statistic> stats;
    for (const auto& name : spec.stats) stats.push_back(parse_statistic(name));
    const auto d = distribution(set_spec(spec), stats);
    if (spec.format == "json") out << d.to_json().dump() << '\n';
    else out << d.to_csv();
    return kExitOk;
}

inline int run_gf(const CommandSpec& spec, std::ostream& out) {
    if (spec.formula == "G") {
        out << g_series(spec.order.value_or(spec.n)).to_string() << '\n';
        return kExitOk;
    }
    boundperm::detail::require(spec.k.has_value(), "--k is required for formula " + spec.formula);
    const auto n = static_cast<int>(spec.n), k = static_cast<int>(*spec.k);
    out << to_string(spec.formula == "theorem1" ? joint_gf_product(n, k) : inv_gf(n, k)) << '\n';
    return kExitOk;
}

inline int run_verify(const CommandSpec& spec, std::ostream& out) {
    nlohmann::ordered_json j;
    bool pass = true;
    if (spec.check == "all") {
        const auto reports = run_all_checks(spec.max_n, spec.allow_large);
        auto list = nlohmann::ordered_json::array();
        for (const auto& r : reports) {
            pass = pass && r.pass;
            list.push_back(r.to_json());
        }
        j["check"] = "all";
        j["range"] = {{"min_n", 0}, {"max_n", spec.max_n}};
        j["status"] = pass ? "pass" : "fail";
        j["reports"] = list;
    } else {
        const auto r = run_check(spec.check, spec.max_n, spec.allow_large);
        pass = r.pass;
        j = r.to_json();
    }
    out << j.dump(2) << '\n';
    return pass ? kExitOk : kExitCheckFailed;
}

}  // namespace detail

/// Executes a parsed command. Output is written to `out` only on success;
/// domain errors surface as boundperm::invalid_input.
inline int dispatch(const CommandSpec& spec, std::ostream& out, std::istream& in) {
    std::ostringstream buffer;
    int code = kExitOk;
    if (spec.subcommand == "stats") {
        detail::for_each_input(spec, in, [&](const std::string& text) {
            buffer << detail::stats_json(parse_permutation(text)).dump() << '\n';
        });
    } else if (spec.subcommand == "map") {
        detail::for_each_input(spec, in, [&](const std::string& text) {
            buffer << detail::apply_map(spec.via, text, spec.k) << '\n';
        });
    } else if (spec.subcommand == "enum") {
        code = detail::run_enum(spec, buffer);
    } else if (spec.subcommand == "dist") {
        code = detail::run_dist(spec, buffer);
    } else if (spec.subcommand == "gf") {
        code = detail::run_gf(spec, buffer);
    } else if (spec.subcommand == "verify") {
        code = detail::run_verify(spec, buffer);
    } else {
        boundperm::detail::fail("unknown subcommand '" + spec.subcommand + "'");
    }
    out << buffer.str();
    return code;
}

/// Full program: parse, dispatch, map errors to exit codes.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in) {
    CommandSpec spec;
    try {
        spec = parse_command(args);
    } catch (const HelpRequested& e) {
        out << e.what();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\nrun with --help for usage\n";
        return kExitUsage;
    }
    try {
        return dispatch(spec, out, in);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}

}  // namespace boundperm::cli
