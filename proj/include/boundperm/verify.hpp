#pragma once

/**
 * @file verify.hpp
 * @brief Exhaustive checks of every identity the library implements.
 *
 * Each check enumerates all instances with n <= max_n and stops at the first
 * failure in canonical enumeration order; that instance becomes the witness.
 *
 *   counts      set sizes vs ballot numbers and the reference table, ballot
 *               recurrences, maxdrop = n - w_n on 213-avoiders
 *   codes       Lmal = Rmip(A-code) = Rmip(B-code); code round trips
 *   gamma       (inv, Rmil, Lmap, maxlift) -> (sor, Cyc, Lmap, maxlift); bijectivity
 *   theorem1    (inv, lmax) and (DIS, cyc) over A(n,k) vs the product formula,
 *               plus the S(n,k) mirror and the inv-only specialisation
 *   bijections  alpha, beta, delta round trips and pointwise statistics
 *   theorem2    des over A_{n,k}(213) = vpk over Gamma_{n,k} = vnw over S^k_{n+1}(321)
 *   theorem3    g_series coefficients vs brute-force (n, k, des) counts
 *   genre       the two functional equations linking F^u, F^d and F_0
 */

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "ballot.hpp"
#include "codes.hpp"
#include "distribution.hpp"
#include "enumerate.hpp"
#include "generating.hpp"
#include "pattern.hpp"
#include "permutation.hpp"
#include "series.hpp"

namespace boundperm {

inline constexpr std::size_t kDefaultMaxN = 8;
inline constexpr std::size_t kLargeMaxN = 10;

// C_{n,k} for 0 <= k <= n <= 7, as tabulated in the literature.
inline constexpr std::array<std::array<std::int64_t, 8>, 8> kBallotTable{{
    {1, 0, 0, 0, 0, 0, 0, 0},
    {1, 1, 0, 0, 0, 0, 0, 0},
    {1, 2, 2, 0, 0, 0, 0, 0},
    {1, 3, 5, 5, 0, 0, 0, 0},
    {1, 4, 9, 14, 14, 0, 0, 0},
    {1, 5, 14, 28, 42, 42, 0, 0},
    {1, 6, 20, 48, 90, 132, 132, 0},
    {1, 7, 27, 75, 165, 297, 429, 429},
}};

struct Witness {
    std::string property;
    std::optional<std::size_t> n;
    std::optional<std::size_t> k;
    std::string object;
    std::string expected;
    std::string actual;
};

struct Report {
    std::string check;
    std::size_t max_n = 0;
    bool pass = true;
    std::uint64_t instances = 0;
    std::optional<Witness> witness;

    nlohmann::ordered_json to_json() const {
        nlohmann::ordered_json j;
        j["check"] = check;
        j["range"] = {{"min_n", 0}, {"max_n", max_n}};
        j["status"] = pass ? "pass" : "fail";
        j["instances"] = instances;
        if (witness) {
            nlohmann::ordered_json w;
            w["property"] = witness->property;
            w["n"] = witness->n ? nlohmann::ordered_json(*witness->n) : nlohmann::ordered_json(nullptr);
            w["k"] = witness->k ? nlohmann::ordered_json(*witness->k) : nlohmann::ordered_json(nullptr);
            w["object"] = witness->object;
            w["expected"] = witness->expected;
            w["actual"] = witness->actual;
            j["witness"] = w;
        }
        return j;
    }
};

namespace detail {

class Tally {
public:
    explicit Tally(Report& report) : report_(report) {}

    // Records one instance; on the first failure stores the witness.
    bool expect(bool ok, const std::function<Witness()>& witness) {
        if (!report_.pass) return false;
        ++report_.instances;
        if (!ok) {
            report_.pass = false;
            report_.witness = witness();
        }
        return ok;
    }

    template <class T>
    bool expect_eq(const T& expected, const T& actual, std::string property, std::optional<std::size_t> n,
                   std::optional<std::size_t> k, std::string object) {
        return expect(expected == actual, [&] {
            return Witness{std::move(property), n, k, std::move(object), render(expected), render(actual)};
        });
    }

    bool failed() const { return !report_.pass; }

private:
    static std::string render(const std::string& s) { return s; }
    static std::string render(std::int64_t v) { return std::to_string(v); }
    static std::string render(std::uint64_t v) { return std::to_string(v); }
    static std::string render(bool v) { return v ? "true" : "false"; }
    static std::string render(const BivariatePolynomial& p) { return to_string(p); }
    static std::string render(const Polynomial<1>& p) { return format<1>(p, {"p"}, {0}); }
    static std::string render(const Permutation& p) { return p.to_string(); }
    static std::string render(const SubexcedentSequence& c) { return c.to_string(); }
    static std::string render(const BallotSequence& a) { return a.to_string(); }
    static std::string render(const std::vector<int>& v) {
        std::string out = "{";
        for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
        return out + "}";
    }
    static std::string render(const Distribution& d) { return d.to_json().dump(); }

    Report& report_;
};

inline std::string cell(std::string_view family, std::size_t n, std::size_t k) {
    return std::string(family) + "(" + std::to_string(n) + "," + std::to_string(k) + ")";
}

inline SetSpec spec_of(Family f, std::size_t n, std::size_t k, std::optional<PatternSpec> avoid = std::nullopt) {
    return SetSpec{f, n, k, std::move(avoid)};
}

inline const PatternSpec& pattern_132() {
    static const PatternSpec p = PatternSpec::classical(Permutation{1, 3, 2});
    return p;
}

inline std::vector<SubexcedentSequence> all_subexcedent(std::size_t n) {
    std::vector<SubexcedentSequence> out;
    std::vector<int> a(n, 1);
    while (true) {
        out.emplace_back(a);
        std::size_t i = n;
        while (i > 0 && a[i - 1] == static_cast<int>(i)) a[--i] = 1;
        if (i == 0) break;
        ++a[i - 1];
    }
    return out;
}

inline BivariatePolynomial sum_over(const std::vector<Permutation>& perms,
                                    const std::function<std::int64_t(const Permutation&)>& q_stat,
                                    const std::function<std::int64_t(const Permutation&)>& t_stat) {
    BivariatePolynomial out;
    for (const auto& p : perms) out.add_term({static_cast<int>(q_stat(p)), static_cast<int>(t_stat(p))}, 1);
    return out;
}

inline std::int64_t factorial(std::int64_t n) { return n <= 1 ? 1 : n * factorial(n - 1); }

inline std::int64_t ipow(std::int64_t b, std::int64_t e) {
    std::int64_t r = 1;
    while (e-- > 0) r = checked_mul(r, b);
    return r;
}

inline std::int64_t lmax_of(const Permutation& p) { return static_cast<std::int64_t>(marker_sets(p).lmax()); }
inline std::int64_t rmin_of(const Permutation& p) { return static_cast<std::int64_t>(marker_sets(p).rmin()); }
inline std::int64_t cyc_of(const Permutation& p) { return static_cast<std::int64_t>(cyc_count(p)); }

// ---------------------------------------------------------------------------

inline void check_counts(std::size_t max_n, Tally& t) {
    for (std::size_t n = 0; n <= max_n; ++n) {
        for (std::size_t k = 0; k <= n; ++k) {
            const auto expected = ballot_number(static_cast<std::int64_t>(n), static_cast<std::int64_t>(k));
            if (n < kBallotTable.size() &&
                !t.expect_eq(kBallotTable[n][k], expected, "ballot_number vs reference table", n, k, "C(n,k)"))
                return;
            const std::array<std::pair<std::string, SetSpec>, 6> sets{{
                {"A_{n,k}(213)", spec_of(Family::bounded_drop, n, k, pattern_213())},
                {"A_{n,k}(132)", spec_of(Family::bounded_drop, n, k, pattern_132())},
                {"A_{n,k}(2_13_)", spec_of(Family::bounded_drop, n, k, parse_pattern("2_13_"))},
                {"A_{n,k}(_13_2)", spec_of(Family::bounded_drop, n, k, parse_pattern("_13_2"))},
                {"S^k_{n+1}(321)", spec_of(Family::ending_in, n, k)},
                {"Gamma_{n,k}", spec_of(Family::ballot, n, k)},
            }};
            for (const auto& [name, spec] : sets) {
                const auto size = static_cast<std::int64_t>(count(spec));
                if (!t.expect_eq(expected, size, "cardinality equals C(n,k)", n, k, name)) return;
            }
            // |A_{n,k}(213)| = sum_{i<=k} |A_{n-1,i}(213)|
            if (n >= 1) {
                std::int64_t sum = 0;
                for (std::size_t i = 0; i <= std::min(k, n - 1); ++i)
                    sum += static_cast<std::int64_t>(count(spec_of(Family::bounded_drop, n - 1, i, pattern_213())));
                if (!t.expect_eq(expected, sum, "cardinality recurrence over the last letter", n, k, "A_{n,k}(213)"))
                    return;
            }
        }
        // maxdrop(w) = n - w_n for every 213-avoider
        if (n >= 1) {
            for (const auto& p : enumerate(spec_of(Family::all, n, 0, pattern_213()))) {
                if (!t.expect_eq(static_cast<std::int64_t>(n) - p(n), maxdrop(p), "maxdrop equals n - last letter",
                                 n, std::nullopt, p.to_string()))
                    return;
            }
        }
    }
    // Ballot number recurrences through n = 20.
    auto c = [](std::int64_t n, std::int64_t k) { return k < 0 || k > n ? 0 : ballot_number(n, k); };
    for (std::int64_t n = 1; n <= 20; ++n)
        for (std::int64_t k = 0; k <= n; ++k) {
            std::int64_t tail = 0;
            for (std::int64_t i = 0; i <= k; ++i) tail += c(n - 1, i);
            const auto un = static_cast<std::size_t>(n), uk = static_cast<std::size_t>(k);
            if (!t.expect_eq(c(n, k), c(n - 1, k) + c(n, k - 1), "C(n,k) = C(n-1,k) + C(n,k-1)", un, uk, "C(n,k)"))
                return;
            if (!t.expect_eq(c(n, k), tail, "C(n,k) = sum_{i<=k} C(n-1,i)", un, uk, "C(n,k)")) return;
        }
}

inline void check_codes(std::size_t max_n, Tally& t) {
    for (std::size_t n = 0; n <= max_n; ++n) {
        std::set<SubexcedentSequence> a_images, b_images;
        for (const auto& p : enumerate(spec_of(Family::all, n, 0))) {
            const auto s = p.to_string();
            const auto a = a_code(p);
            const auto b = b_code(p);
            const auto lmal = marker_sets(p).lmal;
            if (!t.expect_eq(lmal, marker_sets(a.entries()).rmip, "Lmal(w) = Rmip(A-code(w))", n, std::nullopt, s))
                return;
            if (!t.expect_eq(lmal, marker_sets(b.entries()).rmip, "Lmal(w) = Rmip(B-code(w))", n, std::nullopt, s))
                return;
            if (!t.expect_eq(p, lehmer_decode(lehmer_code(p)), "lehmer_decode o lehmer_code = id", n, std::nullopt, s))
                return;
            if (!t.expect_eq(p, b_decode(b), "b_decode o b_code = id", n, std::nullopt, s)) return;
            if (!t.expect_eq(p, a_decode(a), "a_decode o a_code = id", n, std::nullopt, s)) return;
            a_images.insert(a);
            b_images.insert(b);
        }
        const auto fact = static_cast<std::uint64_t>(factorial(static_cast<std::int64_t>(n)));
        if (!t.expect_eq(fact, static_cast<std::uint64_t>(a_images.size()), "A-code injective", n, std::nullopt, "S_n"))
            return;
        if (!t.expect_eq(fact, static_cast<std::uint64_t>(b_images.size()), "B-code injective", n, std::nullopt, "S_n"))
            return;
        const auto codes = all_subexcedent(n);
        if (!t.expect_eq(fact, static_cast<std::uint64_t>(codes.size()), "|SE_n| = n!", n, std::nullopt, "SE_n"))
            return;
        for (const auto& c : codes) {
            if (!t.expect_eq(c, b_code(b_decode(c)), "b_code o b_decode = id", n, std::nullopt, c.to_string()))
                return;
            if (!t.expect_eq(c, lehmer_code(lehmer_decode(c)), "lehmer_code o lehmer_decode = id", n, std::nullopt,
                             c.to_string()))
                return;
        }
    }
}

inline void check_gamma(std::size_t max_n, Tally& t) {
    const Permutation sigma{5, 7, 1, 4, 9, 2, 6, 3, 8};
    const Permutation image{5, 7, 3, 2, 9, 1, 4, 8, 6};
    if (!t.expect_eq(SubexcedentSequence{1, 2, 3, 2, 1, 5, 2, 8, 5}, a_code(sigma), "worked example A-code",
                     std::size_t{9}, std::nullopt, sigma.to_string()))
        return;
    if (!t.expect_eq(image, gamma(sigma), "worked example gamma", std::size_t{9}, std::nullopt, sigma.to_string()))
        return;
    for (const auto& w : {sigma, image}) {
        const auto m = marker_sets(w);
        if (!t.expect_eq(std::vector<int>{5, 7, 9}, m.lmal, "worked example Lmal", 9, std::nullopt, w.to_string()) ||
            !t.expect_eq(std::vector<int>{1, 2, 5}, m.lmap, "worked example Lmap", 9, std::nullopt, w.to_string()) ||
            !t.expect_eq(std::int64_t{5}, maxlift(w), "worked example max(w_i - i)", 9, std::nullopt, w.to_string()))
            return;
    }

    for (std::size_t n = 0; n <= max_n; ++n) {
        std::set<Permutation> images;
        for (const auto& p : enumerate(spec_of(Family::all, n, 0))) {
            const auto g = gamma(p);
            const auto s = p.to_string();
            const auto mp = marker_sets(p);
            const auto mg = marker_sets(g);
            if (!t.expect_eq(inv_count(p), sorting_index(g), "inv(w) = sor(gamma(w))", n, std::nullopt, s) ||
                !t.expect_eq(mp.rmil, cycle_decomposition(g).minima, "Rmil(w) = Cyc(gamma(w))", n, std::nullopt, s) ||
                !t.expect_eq(mp.lmap, mg.lmap, "Lmap(w) = Lmap(gamma(w))", n, std::nullopt, s) ||
                !t.expect_eq(mp.lmal, mg.lmal, "Lmal(w) = Lmal(gamma(w))", n, std::nullopt, s) ||
                !t.expect_eq(maxlift(p), maxlift(g), "max(w_i - i) preserved by gamma", n, std::nullopt, s) ||
                !t.expect_eq(p, gamma_inverse(g), "gamma_inverse o gamma = id", n, std::nullopt, s))
                return;
            images.insert(g);
        }
        const auto fact = static_cast<std::uint64_t>(factorial(static_cast<std::int64_t>(n)));
        if (!t.expect_eq(fact, static_cast<std::uint64_t>(images.size()), "gamma injective", n, std::nullopt, "S_n"))
            return;
        // gamma restricts to a bijection of every S(n,k)
        for (std::size_t k = 0; k <= n; ++k) {
            const auto members = enumerate(spec_of(Family::bounded_lift, n, k));
            std::set<Permutation> mapped;
            for (const auto& p : members) mapped.insert(gamma(p));
            const std::set<Permutation> original(members.begin(), members.end());
            if (!t.expect(mapped == original, [&] {
                    return Witness{"gamma maps S(n,k) onto S(n,k)", n, k, cell("S", n, k),
                                   std::to_string(original.size()), std::to_string(mapped.size())};
                }))
                return;
        }
    }
}

inline void check_theorem1(std::size_t max_n, Tally& t) {
    for (std::size_t n = 0; n <= max_n; ++n)
        for (std::size_t k = 0; k <= n; ++k) {
            const auto ni = static_cast<int>(n), ki = static_cast<int>(k);
            const auto expected = joint_gf_product(ni, ki);
            const auto bounded = enumerate(spec_of(Family::bounded_drop, n, k));
            const auto mirror = enumerate(spec_of(Family::bounded_lift, n, k));
            if (!t.expect_eq(expected, sum_over(bounded, inv_count, lmax_of), "sum q^inv t^lmax = product formula",
                             n, k, cell("A", n, k)) ||
                !t.expect_eq(expected, sum_over(bounded, dis, cyc_of), "sum q^DIS t^cyc = product formula", n, k,
                             cell("A", n, k)) ||
                !t.expect_eq(expected, sum_over(mirror, inv_count, rmin_of), "sum q^inv t^rmin = product formula", n,
                             k, cell("S", n, k)) ||
                !t.expect_eq(expected, sum_over(mirror, sorting_index, cyc_of), "sum q^sor t^cyc = product formula",
                             n, k, cell("S", n, k)))
                return;
            BivariatePolynomial inv_only;
            for (const auto& p : bounded) inv_only.add_term({static_cast<int>(inv_count(p)), 0}, 1);
            if (!t.expect_eq(inv_gf(ni, ki), inv_only, "sum q^inv = [k+1]_q^(n-k) [k]_q!", n, k, cell("A", n, k)) ||
                !t.expect_eq(expected.substitute(var::t, 1), inv_only, "product formula at t = 1", n, k,
                             cell("A", n, k)))
                return;
            const auto cardinality =
                detail::checked_mul(ipow(ki + 1, ni - ki), factorial(ki));
            if (!t.expect_eq(cardinality, static_cast<std::int64_t>(bounded.size()), "|A(n,k)| = (k+1)^(n-k) k!", n, k,
                             cell("A", n, k)))
                return;
        }
}

inline void check_bijections(std::size_t max_n, Tally& t) {
    const Permutation pi{8, 3, 4, 7, 5, 6, 1, 2};
    const Permutation sigma{3, 1, 4, 5, 2, 7, 6, 9, 8};
    const auto example = parse_ballot("+-+++-++----++-");
    if (!t.expect_eq(example, alpha(pi, 7), "worked example alpha", 8, 7, pi.to_string()) ||
        !t.expect_eq(pi, alpha_inverse(example), "worked example alpha^-1", 8, 7, example.to_string()) ||
        !t.expect_eq(example, beta(sigma, 7), "worked example beta", 8, 7, sigma.to_string()) ||
        !t.expect_eq(sigma, beta_inverse(example), "worked example beta^-1", 8, 7, example.to_string()) ||
        !t.expect_eq(sigma, delta(pi, 7), "worked example delta", 8, 7, pi.to_string()))
        return;

    for (std::size_t n = 0; n <= max_n; ++n)
        for (std::size_t k = 0; k <= n; ++k) {
            const auto c = static_cast<std::uint64_t>(ballot_number(static_cast<std::int64_t>(n),
                                                                    static_cast<std::int64_t>(k)));
            std::set<BallotSequence> alpha_images, beta_images;
            for (const auto& p : enumerate(spec_of(Family::bounded_drop, n, k, pattern_213()))) {
                const auto s = p.to_string();
                const auto a = alpha(p, k);
                const auto d = delta(p, k);
                if (!t.expect_eq(std::uint64_t{n}, std::uint64_t{a.ups()}, "alpha(w) has n up-steps", n, k, s) ||
                    !t.expect_eq(std::uint64_t{k}, std::uint64_t{a.downs()}, "alpha(w) has k down-steps", n, k, s) ||
                    !t.expect_eq(des_count(p), vpk(a), "des(w) = vpk(alpha(w))", n, k, s) ||
                    !t.expect_eq(p, alpha_inverse(a), "alpha^-1 o alpha = id", n, k, s) ||
                    !t.expect_eq(beta_inverse(a), d, "delta = beta^-1 o alpha", n, k, s) ||
                    !t.expect_eq(des_count(p), vnw(d), "des(w) = vnw(delta(w))", n, k, s))
                    return;
                if (n >= 1 && !t.expect_eq(des_count(p), static_cast<std::int64_t>(marker_sets(p).rmax()) - 1,
                                           "des(w) = rmax(w) - 1", n, k, s))
                    return;
                alpha_images.insert(a);
            }
            if (!t.expect_eq(c, static_cast<std::uint64_t>(alpha_images.size()), "alpha injective onto Gamma_{n,k}",
                             n, k, cell("A(213)", n, k)))
                return;
            for (const auto& p : enumerate(spec_of(Family::ending_in, n, k))) {
                const auto s = p.to_string();
                const auto b = beta(p, k);
                if (!t.expect_eq(vnw(p), vpk(b), "vnw(w) = vpk(beta(w))", n, k, s) ||
                    !t.expect_eq(p, beta_inverse(b), "beta^-1 o beta = id", n, k, s))
                    return;
                beta_images.insert(b);
            }
            if (!t.expect_eq(c, static_cast<std::uint64_t>(beta_images.size()), "beta injective onto Gamma_{n,k}", n,
                             k, cell("S321", n, k)))
                return;
            bool ok = true;
            for_each_ballot(n, k, [&](const BallotSequence& a) {
                if (!ok) return;
                const auto s = a.to_string();
                ok = t.expect_eq(a, alpha(alpha_inverse(a), k), "alpha o alpha^-1 = id", n, k, s) &&
                     t.expect_eq(a, beta(beta_inverse(a), k), "beta o beta^-1 = id", n, k, s);
            });
            if (!ok) return;
        }
}

inline void check_theorem2(std::size_t max_n, Tally& t) {
    for (std::size_t n = 0; n <= max_n; ++n)
        for (std::size_t k = 0; k <= n; ++k) {
            auto des_dist = distribution(spec_of(Family::bounded_drop, n, k, pattern_213()), {Statistic::des});
            auto vpk_dist = distribution(spec_of(Family::ballot, n, k), {Statistic::vpk});
            auto vnw_dist = distribution(spec_of(Family::ending_in, n, k), {Statistic::vnw});
            // compare counts only; the statistic labels differ by design
            vpk_dist.keys = des_dist.keys;
            vnw_dist.keys = des_dist.keys;
            if (!t.expect(des_dist.same_counts(vpk_dist), [&] {
                    return Witness{"des over A_{n,k}(213) ~ vpk over Gamma_{n,k}", n, k, cell("A(213)", n, k),
                                   vpk_dist.to_json().dump(), des_dist.to_json().dump()};
                }))
                return;
            if (!t.expect(des_dist.same_counts(vnw_dist), [&] {
                    return Witness{"des over A_{n,k}(213) ~ vnw over S^k_{n+1}(321)", n, k, cell("A(213)", n, k),
                                   vnw_dist.to_json().dump(), des_dist.to_json().dump()};
                }))
                return;
        }
}

inline constexpr std::size_t kNumericOrder = 20;
inline constexpr double kNumericTolerance = 1e-6;

inline void check_theorem3(std::size_t max_n, Tally& t) {
    const auto g = g_series(max_n);
    const auto n_max = static_cast<int>(max_n);
    for (std::size_t n = 0; n <= max_n; ++n) {
        std::vector<std::vector<std::int64_t>> expected(n_max + 1, std::vector<std::int64_t>(n_max + 1, 0));
        for (std::size_t k = 0; k <= n; ++k)
            for (const auto& p : enumerate(spec_of(Family::bounded_drop, n, k, pattern_213())))
                ++expected[static_cast<std::size_t>(des_count(p))][k];
        for (int k = 0; k <= n_max; ++k)
            for (int d = 0; d <= n_max; ++d) {
                const auto actual = g.coefficient(d, k, static_cast<int>(n));
                const auto want = expected[d][k];
                if (!t.expect(actual == want, [&] {
                        return Witness{"[p^d q^k z^n] G = #{w in A_{n,k}(213) : des(w) = d}", n,
                                       static_cast<std::size_t>(k), "d = " + std::to_string(d), std::to_string(want),
                                       std::to_string(actual)};
                    }))
                    return;
            }
    }
    const auto at_one = g.at_p_one();
    for (std::size_t n = 0; n <= max_n; ++n)
        for (std::size_t k = 0; k <= n; ++k) {
            const auto want = ballot_number(static_cast<std::int64_t>(n), static_cast<std::int64_t>(k));
            if (!t.expect_eq(want, at_one.coefficient(0, static_cast<int>(k), static_cast<int>(n)),
                             "[q^k z^n] G(1,q,z) = C(n,k)", n, k, "G at p = 1"))
                return;
        }
    // Narayana marginal over S_n(213) = A_{n,n}(213)
    for (std::size_t n = 1; n <= max_n; ++n) {
        Polynomial<1> brute, closed;
        for (const auto& p : enumerate(spec_of(Family::all, n, 0, pattern_213())))
            brute.add_term({static_cast<int>(des_count(p))}, 1);
        for (std::size_t m = 1; m <= n; ++m)
            closed.add_term({static_cast<int>(m - 1)},
                            narayana(static_cast<std::int64_t>(n), static_cast<std::int64_t>(m)));
        if (!t.expect_eq(closed, brute, "sum p^des over S_n(213) = sum N(n,m) p^(m-1)", n,
                         std::nullopt, "S_n(213)"))
            return;
    }
    // Radical form of F0~ vs its Narayana expansion.
    const double p = 0.5, q = 1.0 / 3.0, z = 0.2;
    const double closed = f0_tilde_closed_form(p, q, z);
    const double series = f0_tilde_series(kNumericOrder).evaluate(p, q, z);
    t.expect(std::abs(closed - series) <= kNumericTolerance, [&] {
        return Witness{"F0~ radical form vs truncated series at (1/2,1/3,1/5)", kNumericOrder, std::nullopt,
                       "F0~", std::to_string(closed), std::to_string(series)};
    });
}

inline void check_genre(std::size_t max_n, Tally& t) {
    TruncatedSeries up(max_n), down(max_n), f0(max_n), all(max_n);
    for (std::size_t n = 0; n <= max_n; ++n)
        for (std::size_t k = 0; k <= n; ++k)
            for_each_ballot(n, k, [&](const BallotSequence& a) {
                const auto d = static_cast<int>(vpk(a));
                const auto dq = static_cast<int>(n - k), dz = static_cast<int>(n);
                all.add(d, dq, dz, 1);
                if (a.size() == 0) return;
                (a.steps().back() == 1 ? up : down).add(d, dq, dz, 1);
                if (n == k) f0.add(d, 0, dz, 1);
            });
    auto m = [max_n](int dp, int dq, int dz) { return TruncatedSeries::monomial(max_n, dp, dq, dz); };
    const auto qz = m(0, 1, 1), pqz = m(1, 1, 1), q = m(0, 1, 0);
    auto compare = [&](const TruncatedSeries& lhs, const TruncatedSeries& rhs, const char* property) {
        return t.expect(lhs == rhs, [&] {
            return Witness{property, max_n, std::nullopt, "series through z^max_n", lhs.to_string(),
                           rhs.to_string()};
        });
    };
    if (!compare(up - qz, qz * up + pqz * down, "F^u - qz = qz F^u + pqz F^d")) return;
    if (!compare(q * down, up + down - f0, "q F^d = F^u + F^d - F_0")) return;
    if (!compare(all, TruncatedSeries::constant(max_n, 1) + up + down, "F = 1 + F^u + F^d")) return;
    TruncatedSeries narayana_f0(max_n);
    for (std::size_t n = 1; n <= max_n; ++n)
        for (std::size_t mm = 1; mm <= n; ++mm)
            narayana_f0.add(static_cast<int>(mm - 1), 0, static_cast<int>(n),
                            narayana(static_cast<std::int64_t>(n), static_cast<std::int64_t>(mm)));
    compare(f0, narayana_f0, "F_0 = sum N(n,m) z^n p^(m-1)");
}

}  // namespace detail

inline constexpr std::array<std::string_view, 8> kCheckIds = {"counts",     "codes",    "gamma",    "theorem1",
                                                              "bijections", "theorem2", "theorem3", "genre"};

/// Runs one named check over 0 <= n <= max_n. max_n above kDefaultMaxN needs
/// allow_large; nothing above kLargeMaxN is accepted.
inline Report run_check(std::string_view id, std::size_t max_n, bool allow_large = false) {
    detail::require(max_n <= kLargeMaxN, "max_n " + std::to_string(max_n) + " exceeds the hard cap " +
                                             std::to_string(kLargeMaxN));
    detail::require(max_n <= kDefaultMaxN || allow_large,
                    "max_n " + std::to_string(max_n) + " exceeds the default budget " + std::to_string(kDefaultMaxN) +
                        " (pass allow_large to raise it)");
    Report report;
    report.check = std::string(id);
    report.max_n = max_n;
    detail::Tally tally(report);
    if (id == "counts") detail::check_counts(max_n, tally);
    else if (id == "codes") detail::check_codes(max_n, tally);
    else if (id == "gamma") detail::check_gamma(max_n, tally);
    else if (id == "theorem1") detail::check_theorem1(max_n, tally);
    else if (id == "bijections") detail::check_bijections(max_n, tally);
    else if (id == "theorem2") detail::check_theorem2(max_n, tally);
    else if (id == "theorem3") detail::check_theorem3(max_n, tally);
    else if (id == "genre") detail::check_genre(max_n, tally);
    else detail::fail("unknown check '" + std::string(id) + "'");
    return report;
}

inline std::vector<Report> run_all_checks(std::size_t max_n, bool allow_large = false) {
    std::vector<Report> out;
    for (auto id : kCheckIds) out.push_back(run_check(id, max_n, allow_large));
    return out;
}

}  // namespace boundperm
