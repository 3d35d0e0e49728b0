#pragma once

// Exact joint distributions of named statistics over an enumerated family.

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "ballot.hpp"
#include "enumerate.hpp"
#include "error.hpp"
#include "permutation.hpp"
#include "polynomial.hpp"

namespace boundperm {

enum class Statistic { inv, des, maxdrop, maxlift, lmax, rmin, rmax, cyc, sor, dis, vnw, vpk };

inline constexpr std::array kAllStatistics = {Statistic::inv,  Statistic::des,  Statistic::maxdrop,
                                              Statistic::maxlift, Statistic::lmax, Statistic::rmin,
                                              Statistic::rmax, Statistic::cyc,  Statistic::sor,
                                              Statistic::dis,  Statistic::vnw,  Statistic::vpk};

inline std::string_view statistic_name(Statistic s) {
    switch (s) {
        case Statistic::inv: return "inv";
        case Statistic::des: return "des";
        case Statistic::maxdrop: return "maxdrop";
        case Statistic::maxlift: return "maxlift";
        case Statistic::lmax: return "lmax";
        case Statistic::rmin: return "rmin";
        case Statistic::rmax: return "rmax";
        case Statistic::cyc: return "cyc";
        case Statistic::sor: return "sor";
        case Statistic::dis: return "dis";
        case Statistic::vnw: return "vnw";
        case Statistic::vpk: return "vpk";
    }
    return "?";
}

inline Statistic parse_statistic(std::string_view name) {
    for (auto s : kAllStatistics)
        if (statistic_name(s) == name) return s;
    detail::fail("unknown statistic '" + std::string(name) + "'");
}

inline std::int64_t evaluate(Statistic s, const Permutation& p) {
    switch (s) {
        case Statistic::inv: return inv_count(p);
        case Statistic::des: return des_count(p);
        case Statistic::maxdrop: return maxdrop(p);
        case Statistic::maxlift: return maxlift(p);
        case Statistic::lmax: return static_cast<std::int64_t>(marker_sets(p).lmax());
        case Statistic::rmin: return static_cast<std::int64_t>(marker_sets(p).rmin());
        case Statistic::rmax: return static_cast<std::int64_t>(marker_sets(p).rmax());
        case Statistic::cyc: return static_cast<std::int64_t>(cyc_count(p));
        case Statistic::sor: return sorting_index(p);
        case Statistic::dis: return dis(p);
        case Statistic::vnw: return vnw(p);
        case Statistic::vpk: break;
    }
    detail::fail("statistic vpk applies only to ballot sequences");
}

struct Distribution {
    using Key = std::vector<std::int64_t>;

    std::vector<Statistic> keys;
    std::map<Key, std::uint64_t> table;
    std::uint64_t total = 0;

    void record(Key key) {
        ++table[std::move(key)];
        ++total;
    }

    bool same_counts(const Distribution& o) const { return table == o.table && total == o.total; }

    // Header `stat1,...,count`; rows ordered by key tuple.
    std::string to_csv() const {
        std::ostringstream out;
        for (auto s : keys) out << statistic_name(s) << ',';
        out << "count\n";
        for (const auto& [key, c] : table) {
            for (auto v : key) out << v << ',';
            out << c << '\n';
        }
        return out.str();
    }

    nlohmann::ordered_json to_json() const {
        nlohmann::ordered_json j;
        auto names = nlohmann::ordered_json::array();
        for (auto s : keys) names.push_back(statistic_name(s));
        j["stats"] = names;
        j["total"] = total;
        auto rows = nlohmann::ordered_json::array();
        for (const auto& [key, c] : table) rows.push_back({{"key", key}, {"count", c}});
        j["table"] = rows;
        return j;
    }

    // Two-statistic distribution as sum of q^first t^second.
    BivariatePolynomial to_bivariate() const {
        detail::require(keys.size() == 2, "to_bivariate needs exactly two statistics");
        BivariatePolynomial out;
        for (const auto& [key, c] : table)
            out.add_term({static_cast<int>(key[0]), static_cast<int>(key[1])}, static_cast<std::int64_t>(c));
        return out;
    }
};

inline Distribution distribution(const SetSpec& spec, const std::vector<Statistic>& stats) {
    detail::require(!stats.empty(), "at least one statistic is required");
    Distribution d;
    d.keys = stats;
    if (spec.family == Family::ballot) {
        for (auto s : stats)
            detail::require(s == Statistic::vpk, "statistic " + std::string(statistic_name(s)) +
                                                     " does not apply to ballot sequences");
        spec.validate();
        for_each_ballot(spec.n, spec.k, [&](const BallotSequence& a) {
            d.record(Distribution::Key(stats.size(), vpk(a)));
        });
        return d;
    }
    for (auto s : stats)
        detail::require(s != Statistic::vpk, "statistic vpk applies only to the ballot family");
    for (const auto& p : enumerate(spec)) {
        Distribution::Key key;
        key.reserve(stats.size());
        for (auto s : stats) key.push_back(evaluate(s, p));
        d.record(std::move(key));
    }
    return d;
}

}  // namespace boundperm
