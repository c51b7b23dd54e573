#ifndef THETACOL_SUITE_HPP
#define THETACOL_SUITE_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "classifier.hpp"
#include "cycle_engine.hpp"
#include "json_io.hpp"
#include "lemma_lab.hpp"
#include "oracle.hpp"
#include "pair_search.hpp"
#include "path_engine.hpp"
#include "rng.hpp"
#include "theta_solver.hpp"

// The eleven acceptance criteria. Each is a pure function of the config, so
// the same seed gives byte-identical reports.

namespace thetacol
{

struct SuiteConfig
{
    bool quick = false;
    std::uint64_t seed = 42;
    int lemma_lmax = 12;
};

struct CriterionResult
{
    int id = 0;
    std::string title;
    bool passed = false;
    std::string summary;
    Json details;
};

namespace suite_detail
{

inline std::uint64_t seed_for(const SuiteConfig& cfg, int id) { return cfg.seed * 1000003ULL + static_cast<std::uint64_t>(id); }

inline ListAssignment random_lists(Rng& rng, std::size_t n, int palette, int size)
{
    ListAssignment l;
    for (std::size_t i = 0; i < n; ++i)
        l.push_back(rng.subset(palette, size));
    return l;
}

inline ColourSet random_subset(Rng& rng, const ColourSet& from)
{
    std::vector<Colour> out;
    for (auto c : from)
        if (rng.coin())
            out.push_back(c);
    return ColourSet(std::move(out));
}

inline std::string shape_name(const std::vector<int>& lengths)
{
    std::string s = "theta(";
    for (std::size_t i = 0; i < lengths.size(); ++i)
        s += (i ? "," : "") + std::to_string(lengths[i]);
    return s + ")";
}

} // namespace suite_detail

/// Path criterion against the exact oracle.
inline CriterionResult criterion_path_criterion(const SuiteConfig& cfg)
{
    CriterionResult r{1, "path criterion S_L(P) >= nm matches exact colourability", false, "", Json::object()};
    const int palette = cfg.quick ? 6 : 8;
    std::uint64_t checked = 0, disagreements = 0, bad_colourings = 0, colourable = 0;
    Json first = nullptr;

    auto check = [&](const std::vector<ColourSet>& lists, int m) {
        ++checked;
        const Graph g = path_graph(lists.size());
        const bool criterion = path_colorable(lists, m);
        const bool exact = find_Lb_coloring(g, lists, m).has_value();
        colourable += exact;
        if (criterion != exact) {
            if (disagreements++ == 0) {
                Json ls = Json::array();
                for (const auto& l : lists)
                    ls.push_back(to_json(l));
                first = Json{{"m", m}, {"lists", ls}, {"criterion", criterion}, {"oracle", exact}};
            }
        }
        if (criterion) {
            auto phi = color_path(lists, m);
            if (!phi || !verify_coloring(g, lists, m, *phi).ok())
                ++bad_colourings;
        }
    };

    for (int n : {1, 3})
        for (int m : {1, 2}) {
            std::vector<int> lo(static_cast<std::size_t>(n)), hi(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i) {
                const bool end = i == 0 || i == n - 1;
                lo[static_cast<std::size_t>(i)] = end ? m : 2 * m;
                hi[static_cast<std::size_t>(i)] = std::min(2 * m + 2, palette);
            }
            for_each_canonical_assignment(static_cast<std::size_t>(n), palette, lo, hi,
                                          [&](const ListAssignment& lists, bool) {
                                              check(lists, m);
                                              return true;
                                          });
        }
    const std::uint64_t exhaustive = checked;

    Rng rng(suite_detail::seed_for(cfg, 1));
    const int samples = cfg.quick ? 100 : 500;
    for (int s = 0; s < samples; ++s) {
        const int m = rng.between(1, 2);
        const int pal = rng.between(2 * m + 1, 9);
        std::vector<ColourSet> lists;
        for (int i = 0; i < 5; ++i) {
            const bool end = i == 0 || i == 4;
            const int size = rng.between(end ? m : 2 * m, std::min(2 * m + 2, pal));
            lists.push_back(rng.subset(pal, size));
        }
        check(lists, m);
    }

    r.passed = disagreements == 0 && bad_colourings == 0;
    r.summary = std::to_string(exhaustive) + " canonical assignments (n<=3, palette " + std::to_string(palette) +
                ") + " + std::to_string(samples) + " random n=5; " + std::to_string(disagreements) +
                " disagreements";
    r.details = Json{{"palette", palette},      {"exhaustive", exhaustive},         {"random", samples},
                     {"colourable", colourable}, {"disagreements", disagreements}, {"bad_colourings", bad_colourings}};
    if (!first.is_null())
        r.details["first_disagreement"] = first;
    return r;
}

/// Definitional damage against the closed form, and the reduced S_L identity.
inline CriterionResult criterion_damage(const SuiteConfig& cfg)
{
    CriterionResult r{2, "damage closed form and reduced S_L identity", false, "", Json::object()};
    Rng rng(suite_detail::seed_for(cfg, 2));
    const int samples = cfg.quick ? 200 : 1000;
    std::uint64_t closed_fail = 0, identity_fail = 0;
    for (int s = 0; s < samples; ++s) {
        const int n = 2 * rng.between(0, 3) + 1;
        const int pal = rng.between(2, 8);
        std::vector<ColourSet> lists;
        for (int i = 0; i < n; ++i)
            lists.push_back(rng.subset(pal, rng.between(1, std::min(5, pal))));
        const ColourSet S = suite_detail::random_subset(rng, lists.front());
        const ColourSet T = suite_detail::random_subset(rng, lists.back());
        const auto prof = hat_sets(lists);
        if (damage_definitional(lists, S, T) != damage_closed_form(prof, S, T))
            ++closed_fail;
        if (reduced_slp_identity(prof, S, T) != slp(reduce_lists(lists, S, T)))
            ++identity_fail;
    }
    r.passed = closed_fail == 0 && identity_fail == 0;
    r.summary = std::to_string(samples) + " odd paths; " + std::to_string(closed_fail) + " closed-form and " +
                std::to_string(identity_fail) + " identity mismatches";
    r.details = Json{{"samples", samples}, {"closed_form_mismatches", closed_fail}, {"identity_mismatches", identity_fail}};
    return r;
}

/// The S_L equality and lower bounds on paths with |L(v_1)| = l1 and the
/// other lists of size l2.
inline CriterionResult criterion_slp_identities(const SuiteConfig& cfg)
{
    CriterionResult r{3, "S_L equality and lower bounds", false, "", Json::object()};
    Rng rng(suite_detail::seed_for(cfg, 3));
    const int samples = cfg.quick ? 200 : 1000;
    std::map<std::string, std::uint64_t> violations;
    std::uint64_t printed_equal_l = 0, printed_equal_fail = 0, printed_unequal_fail = 0, unequal = 0;
    for (int s = 0; s < samples; ++s) {
        const int n = 2 * rng.between(1, 3) + 1;
        const int l1 = rng.between(1, 6);
        const int l2 = rng.between(1, 6);
        const int pal = rng.between(std::max(l1, l2), std::max(l1, l2) + 4);
        std::vector<ColourSet> lists{rng.subset(pal, l1)};
        for (int i = 1; i < n; ++i)
            lists.push_back(rng.subset(pal, l2));
        const auto rep = slp_identity_check(lists);
        if (!rep.hypotheses_ok)
            ++violations["hypotheses"];
        for (const auto& c : rep.checks)
            if (!c.holds)
                ++violations[c.name];
        if (l1 == l2) {
            ++printed_equal_l;
            printed_equal_fail += !rep.printed_equality.holds;
        }
        else {
            ++unequal;
            printed_unequal_fail += !rep.printed_equality.holds;
        }
    }
    std::uint64_t total = printed_equal_fail;
    for (const auto& [k, v] : violations)
        total += v;
    r.passed = total == 0;
    r.summary = std::to_string(samples) + " paths; " + std::to_string(total) + " violations";
    r.details = Json{{"samples", samples},
                     {"violations", violations},
                     {"printed_form_l1_eq_l2", {{"cases", printed_equal_l}, {"failures", printed_equal_fail}}},
                     {"printed_form_l1_ne_l2_diagnostic", {{"cases", unequal}, {"failures", printed_unequal_fail}}}};
    return r;
}

inline CriterionResult criterion_main_lemma(const SuiteConfig& cfg)
{
    CriterionResult r{4, "2F(x,y) <= binom(l,k) sweep with equality characterisation", false, "", Json::object()};
    const int lmax = cfg.quick ? std::min(cfg.lemma_lmax, 8) : cfg.lemma_lmax;
    const auto main = verify_main_lemma(lmax, Floor::k_plus_1);
    const auto strict = verify_main_lemma(lmax, Floor::k_plus_2);
    std::uint64_t expected_equalities = 0;
    for (int ell = 2; ell <= lmax; ell += 2)
        expected_equalities += static_cast<std::uint64_t>(ell / 2);
    r.passed = main.all_hold() && strict.all_hold() && main.equality_cases.size() == expected_equalities;
    r.summary = "l <= " + std::to_string(lmax) + ": " + std::to_string(main.cells) + " cells, " +
                std::to_string(main.violations.size()) + " violations, " + std::to_string(main.equality_cases.size()) +
                " equality cells (expected " + std::to_string(expected_equalities) + "), " +
                std::to_string(strict.violations.size()) + " non-strict cells at floor k+2";
    r.details = Json{{"lmax", lmax},
                     {"cells", main.cells},
                     {"violations", main.violations.size()},
                     {"equality_cells", main.equality_cases.size()},
                     {"equality_set_exact", main.equality_set_exact},
                     {"floor_k_plus_2_non_strict", strict.violations.size()}};
    return r;
}

inline CriterionResult criterion_identities(const SuiteConfig& cfg)
{
    CriterionResult r{5, "C(t,x) identities and closed form of F(x,l-2x)", false, "", Json::object()};
    const int lmax = cfg.quick ? std::min(cfg.lemma_lmax, 8) : cfg.lemma_lmax;
    const auto rep = verify_section5_identities(lmax);
    const std::int64_t twice = 2 * F_value({4, 1, 2, 0});
    const std::int64_t printed = binom(4, 2) - C_value(1, 2, 4, 1);
    const bool anchor_refuted = twice != printed;
    r.passed = rep.all_hold() && rep.printed_variant_refutations > 0 && anchor_refuted;
    std::uint64_t exceptions = 0;
    Json ids = Json::object();
    for (const auto& i : rep.identities) {
        exceptions += i.exceptions;
        ids[i.name] = {{"checked", i.checked}, {"exceptions", i.exceptions}};
    }
    r.summary = "l <= " + std::to_string(lmax) + ": " + std::to_string(exceptions) +
                " exceptions over 7 identity families; binom(l,2k) reading refuted in " +
                std::to_string(rep.printed_variant_refutations) + " cells";
    r.details = Json{{"lmax", lmax},
                     {"identities", ids},
                     {"printed_variant_refuted_cells", rep.printed_variant_refutations},
                     {"anchor_l4_k1_x2", {{"two_F", twice}, {"printed_rhs", printed}, {"refuted", anchor_refuted}}}};
    if (rep.printed_variant_first)
        r.details["printed_variant_first"] = to_json(*rep.printed_variant_first);
    return r;
}

/// The colour-by-colour odd-cycle construction at a = ceil((2+1/k) b).
inline CriterionResult criterion_odd_cycle(const SuiteConfig& cfg)
{
    CriterionResult r{6, "odd-cycle construction at a/b >= 2+1/k", false, "", Json::object()};
    Rng rng(suite_detail::seed_for(cfg, 6));
    const int samples = cfg.quick ? 100 : 500;
    std::uint64_t runs = 0, failures = 0;
    Json cells = Json::array();
    for (int k = 1; k <= 3; ++k)
        for (int b = 1; b <= 3; ++b) {
            const int a = ((2 * k + 1) * b + k - 1) / k;
            const Graph g = cycle_graph(static_cast<std::size_t>(2 * k + 1));
            std::uint64_t bad = 0;
            for (int s = 0; s < samples; ++s) {
                const int pal = rng.between(a, 2 * a + 2);
                CycleInstance inst{k, a, b, suite_detail::random_lists(rng, g.size(), pal, a)};
                ++runs;
                try {
                    if (!verify_coloring(g, inst.lists, b, color_odd_cycle(inst)).ok())
                        ++bad;
                }
                catch (const std::exception&) {
                    ++bad;
                }
            }
            failures += bad;
            cells.push_back({{"k", k}, {"b", b}, {"a", a}, {"failures", bad}});
        }
    r.passed = failures == 0;
    r.summary = std::to_string(runs) + " cycles over k,b in {1,2,3}; " + std::to_string(failures) + " failures";
    r.details = Json{{"samples_per_cell", samples}, {"cells", cells}, {"failures", failures}};
    return r;
}

/// One (2m+1)-list instance on a theta from the desk-scale families.
struct ThetaInstance
{
    std::vector<int> lengths;
    int m = 1;
    std::string kind; ///< random | all-equal | disjoint | hub-focused
    ListAssignment lists;
};

inline std::vector<ThetaInstance> desk_scale_instances(const SuiteConfig& cfg)
{
    const std::vector<std::vector<int>> shapes{{4, 4, 4}, {4, 4, 6}, {3, 3, 3}, {5, 3, 3}, {2, 2, 2, 2}, {2, 2, 2, 4}};
    Rng rng(suite_detail::seed_for(cfg, 7));
    const int random_count = cfg.quick ? 40 : 200;
    const int focused_count = cfg.quick ? 6 : 20;
    std::vector<ThetaInstance> out;
    for (const auto& shape : shapes)
        for (int m = 1; m <= 2; ++m) {
            const ThetaGraph theta(shape);
            const std::size_t n = theta.graph().size();
            const int a = 2 * m + 1;
            for (int s = 0; s < random_count; ++s)
                out.push_back({shape, m, "random", suite_detail::random_lists(rng, n, rng.between(a, 3 * a), a)});
            out.push_back({shape, m, "all-equal", ListAssignment(n, ColourSet::range(0, a))});
            ListAssignment disjoint;
            for (std::size_t w = 0; w < n; ++w)
                disjoint.push_back(ColourSet::range(static_cast<Colour>(w) * a, static_cast<Colour>(w + 1) * a));
            out.push_back({shape, m, "disjoint", disjoint});
            // the hubs overlap in j colours; their neighbours draw 2m colours
            // from the hub lists and one from a small spare pool
            for (int s = 0; s < focused_count; ++s) {
                const int j = s % (a + 1);
                const ColourSet lu = ColourSet::range(0, a);
                const ColourSet lv = ColourSet::range(a - j, 2 * a - j);
                const ColourSet hubs = lu | lv;
                const int spare_lo = 2 * a;
                ListAssignment lists(n);
                lists[ThetaGraph::hub_u] = lu;
                lists[ThetaGraph::hub_v] = lv;
                for (std::size_t i = 0; i < theta.path_count(); ++i) {
                    const auto& p = theta.path(i);
                    for (std::size_t q = 0; q < p.size(); ++q) {
                        const bool next_to_hub = q == 0 || q + 1 == p.size();
                        if (next_to_hub) {
                            ColourSet l = rng.subset_of(hubs, 2 * m);
                            l.insert(spare_lo + static_cast<Colour>(rng.below(2)));
                            lists[p[q]] = l;
                        }
                        else {
                            const ColourSet pool = hubs | ColourSet::range(spare_lo, spare_lo + 2);
                            lists[p[q]] = rng.subset_of(pool, a);
                        }
                    }
                }
                out.push_back({shape, m, "hub-focused", lists});
            }
        }
    return out;
}

inline CriterionResult criterion_theta_families(const SuiteConfig& cfg)
{
    CriterionResult r{7, "theta families are (2m+1,m)-colourable from every sampled assignment", false, "",
                      Json::object()};
    const auto instances = desk_scale_instances(cfg);
    std::map<std::string, std::map<std::string, std::uint64_t>> per_shape;
    std::uint64_t failures = 0, falsified = 0, oracle_used = 0, full_trim = 0;
    Json first = nullptr;
    for (const auto& inst : instances) {
        const ThetaGraph theta(inst.lengths);
        const auto key = suite_detail::shape_name(inst.lengths) + " m=" + std::to_string(inst.m);
        auto& tally = per_shape[key];
        ++tally["instances"];
        std::string error;
        try {
            const auto res = solve(theta, inst.lists, inst.m);
            if (res.certificate == Certificate::oracle)
                ++oracle_used;
            full_trim += res.full_trim;
            if (!res.coloring || !verify_coloring(theta.graph(), inst.lists, inst.m, *res.coloring).ok())
                error = "no valid colouring";
        }
        catch (const TheoremFalsified& e) {
            ++falsified;
            error = std::string("theorem falsified: ") + e.what();
        }
        catch (const std::exception& e) {
            error = e.what();
        }
        if (!error.empty()) {
            ++failures;
            ++tally["failures"];
            if (first.is_null())
                first = Json{{"shape", key}, {"kind", inst.kind}, {"error", error}};
        }
    }
    r.passed = failures == 0 && falsified == 0 && oracle_used == 0;
    r.summary = std::to_string(instances.size()) + " instances over 6 shapes x m in {1,2}; " +
                std::to_string(failures) + " failures, " + std::to_string(falsified) + " falsified";
    r.details = Json{{"instances", instances.size()}, {"failures", failures},     {"theorem_falsified", falsified},
                     {"oracle_fallbacks", oracle_used}, {"full_trims", full_trim}, {"per_shape", per_shape}};
    if (!first.is_null())
        r.details["first_failure"] = first;
    return r;
}

namespace suite_detail
{

// Lists and theta the pair search runs on for a desk-scale instance, with
// the hub lists trimmed to l colours (odd thetas are split first).
struct PairSetting
{
    ThetaGraph theta;
    ListAssignment lists;
    int ell;
    bool four_paths;
};

inline PairSetting pair_setting(const ThetaInstance& inst)
{
    const ThetaGraph theta(inst.lengths);
    const int m = inst.m;
    if (theta.path_count() == 4) {
        ListAssignment l = inst.lists;
        l[0] = l[0].smallest(static_cast<std::size_t>(2 * m + 1));
        l[1] = l[1].smallest(static_cast<std::size_t>(2 * m + 1));
        return {theta, l, 2 * m + 1, true};
    }
    ListAssignment l = inst.lists;
    l[0] = l[0].smallest(static_cast<std::size_t>(2 * m));
    l[1] = l[1].smallest(static_cast<std::size_t>(2 * m));
    if (inst.lengths[0] % 2 == 1) {
        auto split = split_odd_theta(theta, l, m);
        return {split.theta, split.lists, 2 * m, false};
    }
    return {theta, l, 2 * m, false};
}

} // namespace suite_detail

/// Pair existence wherever C1-C5 or T1-T5 validate, plus instances with
/// tau > 0 built to satisfy them.
inline CriterionResult criterion_pair_existence(const SuiteConfig& cfg)
{
    CriterionResult r{8, "a pair exists whenever the C or T conditions hold", false, "", Json::object()};
    std::uint64_t validated = 0, desk_failures = 0, not_validated = 0;
    for (const auto& inst : desk_scale_instances(cfg)) {
        const auto set = suite_detail::pair_setting(inst);
        const auto rep = set.four_paths ? check_conditions_T(set.theta, set.lists, set.ell, 0, inst.m)
                                        : check_conditions_C(set.theta, set.lists, set.ell, 0, inst.m);
        if (!rep.all_ok()) {
            ++not_validated;
            continue;
        }
        ++validated;
        ThetaPaths paths(set.theta, set.lists);
        if (!find_pair(paths, inst.m, paths.budgets(inst.m)))
            ++desk_failures;
    }

    Rng rng(suite_detail::seed_for(cfg, 8));
    const int wanted = cfg.quick ? 30 : 100;
    std::uint64_t tau_found = 0, tau_failures = 0, attempts = 0, gave_up = 0;
    std::map<std::string, std::uint64_t> tau_kinds;
    for (int s = 0; s < wanted; ++s) {
        const bool four = s % 2 == 1;
        bool done = false;
        for (int tries = 0; tries < 20000 && !done; ++tries) {
            ++attempts;
            int m, tau, ell;
            std::vector<int> shape;
            if (four) {
                m = rng.between(1, 3);
                tau = rng.between(1, m);
                ell = rng.between(std::max(0, m - tau), m + 1);
                shape = {2, 2, 2, 2 * rng.between(1, 2)};
            }
            else {
                m = rng.between(2, 3);
                tau = 2;
                ell = 2 * rng.between(std::max(1, (m - tau + 1) / 2), 2);
                shape = {4, 4, 2 * rng.between(2, 3)};
            }
            const ThetaGraph theta(shape);
            const int pal = rng.between(2 * m + 2, 2 * m + 6);
            ListAssignment lists(theta.graph().size());
            lists[0] = rng.subset(pal, ell);
            lists[1] = rng.subset(pal, ell);
            const std::size_t longest = four ? long_path_index(theta) : 0;
            for (std::size_t i = 0; i < theta.path_count(); ++i) {
                const auto& p = theta.path(i);
                for (std::size_t q = 0; q < p.size(); ++q) {
                    int need = 2 * m + 1;
                    if (four) {
                        if (q == 0 || (i == longest && p.size() >= 3 && q + 1 == p.size()))
                            need = 2 * m + 1 - tau;
                    }
                    else if (q == 0)
                        need = 2 * m - tau;
                    else if (q + 1 == p.size())
                        need = 2 * m + 1 - tau;
                    lists[p[q]] = rng.subset(pal, std::min(pal, need + static_cast<int>(rng.below(2))));
                }
            }
            const auto rep = four ? check_conditions_T(theta, lists, ell, tau, m)
                                  : check_conditions_C(theta, lists, ell, tau, m);
            if (!rep.all_ok())
                continue;
            done = true;
            ++tau_found;
            ++tau_kinds[std::string(four ? "T" : "C") + " m=" + std::to_string(m) + " tau=" + std::to_string(tau)];
            ThetaPaths paths(theta, lists);
            if (!find_pair(paths, m - tau, paths.budgets(m)))
                ++tau_failures;
        }
        if (!done)
            ++gave_up;
    }
    r.passed = desk_failures == 0 && tau_failures == 0 && gave_up == 0 && validated > 0;
    r.summary = std::to_string(validated) + " desk-scale instances validated, " + std::to_string(desk_failures) +
                " without a pair; " + std::to_string(tau_found) + " tau>0 instances, " + std::to_string(tau_failures) +
                " without a pair";
    r.details = Json{{"desk_validated", validated},
                     {"desk_not_validated", not_validated},
                     {"desk_failures", desk_failures},
                     {"tau_instances", tau_found},
                     {"tau_failures", tau_failures},
                     {"tau_generation_attempts", attempts},
                     {"tau_gave_up", gave_up},
                     {"tau_kinds", tau_kinds}};
    return r;
}

/// Split, solve the even theta, pull back; the split copies must carry the
/// forced complement L(u) - φ'(u').
inline CriterionResult criterion_splitting(const SuiteConfig& cfg)
{
    CriterionResult r{9, "hub splitting round trip on odd thetas", false, "", Json::object()};
    const std::vector<std::vector<int>> shapes{{3, 3, 3}, {5, 3, 3}, {3, 5, 3}, {5, 5, 3}, {3, 3, 7}, {5, 5, 5}};
    Rng rng(suite_detail::seed_for(cfg, 9));
    const int samples = cfg.quick ? 30 : 100;
    std::uint64_t failures = 0, complement_failures = 0;
    Json first = nullptr;
    for (int s = 0; s < samples; ++s) {
        const auto& shape = shapes[static_cast<std::size_t>(s) % shapes.size()];
        const int m = rng.between(1, 3);
        const ThetaGraph theta(shape);
        const int a = 2 * m + 1;
        auto lists = suite_detail::random_lists(rng, theta.graph().size(), rng.between(a, 3 * a), a);
        lists[0] = rng.subset(3 * a, a + static_cast<int>(rng.below(3)));
        std::string error;
        try {
            ListAssignment trimmed = lists;
            trimmed[0] = lists[0].smallest(static_cast<std::size_t>(2 * m));
            const auto split = split_odd_theta(theta, trimmed, m);
            const auto inner = solve_even_theta(split.theta, split.lists, m);
            const ColourSet forced = trimmed[0] - inner.assignment[split.map.new_hub];
            for (auto c : split.map.split_copies)
                if (inner.assignment[c] != forced)
                    ++complement_failures;
            const auto phi = pull_back_coloring(inner, split.map);
            if (!verify_coloring(theta.graph(), lists, m, phi).ok())
                error = "pulled-back colouring invalid";
        }
        catch (const std::exception& e) {
            error = e.what();
        }
        if (!error.empty() && failures++ == 0)
            first = Json{{"shape", suite_detail::shape_name(shape)}, {"m", m}, {"error", error}};
    }
    r.passed = failures == 0 && complement_failures == 0;
    r.summary = std::to_string(samples) + " odd thetas; " + std::to_string(failures) + " failures, " +
                std::to_string(complement_failures) + " forced-complement violations";
    r.details = Json{{"samples", samples}, {"failures", failures}, {"complement_failures", complement_failures}};
    if (!first.is_null())
        r.details["first_failure"] = first;
    return r;
}

namespace suite_detail
{

// Adjacency bit string minimised over all vertex permutations; two graphs
// on up to 8 vertices are isomorphic iff their keys match.
inline std::string isomorphism_key(const Graph& g)
{
    const std::size_t n = g.size();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::string best;
    do {
        std::string key(n * (n - 1) / 2, '0');
        std::size_t pos = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                key[pos++] = g.has_edge(perm[i], perm[j]) ? '1' : '0';
        if (best.empty() || key > best)
            best = key;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return std::to_string(n) + ":" + best;
}

inline Graph random_connected_with_cycle(Rng& rng, int max_vertices)
{
    const int n = rng.between(3, max_vertices);
    Graph g;
    for (int i = 0; i < n; ++i)
        g.add_vertex("g" + std::to_string(i));
    for (int i = 1; i < n; ++i)
        g.add_edge(static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(i))), static_cast<Vertex>(i));
    std::vector<std::pair<Vertex, Vertex>> free;
    for (Vertex a = 0; a < g.size(); ++a)
        for (Vertex b = a + 1; b < g.size(); ++b)
            if (!g.has_edge(a, b))
                free.emplace_back(a, b);
    const int extra = std::min<int>(rng.between(1, 3), static_cast<int>(free.size()));
    for (int e = 0; e < extra; ++e) {
        const auto idx = static_cast<std::size_t>(rng.below(free.size()));
        g.add_edge(free[idx].first, free[idx].second);
        free.erase(free.begin() + static_cast<std::ptrdiff_t>(idx));
    }
    return g;
}

} // namespace suite_detail

/// Classifier against the exhaustive 2-choosability oracle.
inline CriterionResult criterion_classification(const SuiteConfig& cfg)
{
    CriterionResult r{10, "2-choosability and critical-family classification agree with the oracle", false, "",
                      Json::object()};
    Rng rng(suite_detail::seed_for(cfg, 10));
    const int samples = cfg.quick ? 100 : 500;
    const int palette_cap = cfg.quick ? 6 : 8;
    std::map<std::string, bool> verdicts;
    std::uint64_t disagreements = 0, choosable = 0;
    Json first = nullptr;
    for (int s = 0; s < samples; ++s) {
        const Graph g = suite_detail::random_connected_with_cycle(rng, 7);
        const auto key = suite_detail::isomorphism_key(g);
        auto it = verdicts.find(key);
        if (it == verdicts.end()) {
            SamplerConfig sc;
            sc.palette_size = std::min(static_cast<int>(2 * g.size()), palette_cap);
            it = verdicts.emplace(key, check_choosable(g, 2, 1, sc).choosable()).first;
        }
        const bool predicted = is_2_choosable(g);
        choosable += it->second;
        if (predicted != it->second && disagreements++ == 0)
            first = Json{{"graph", to_json(g)}, {"classifier", predicted}, {"oracle", it->second}};
    }

    const int max_member = cfg.quick ? 9 : 12;
    std::uint64_t members = 0, member_failures = 0;
    Json member_rows = Json::array();
    for (const auto& fm : critical_family_members(max_member)) {
        ++members;
        const auto cls = is_3_choice_critical(fm.graph);
        int witness_palette = 0;
        for (int pal = 3; pal <= 6 && !witness_palette; ++pal) {
            SamplerConfig sc;
            sc.palette_size = pal;
            if (!check_choosable(fm.graph, 2, 1, sc).choosable())
                witness_palette = pal;
        }
        const bool ok = cls.three_choice_critical && cls.family == fm.family && !cls.two_choosable && witness_palette;
        member_failures += !ok;
        member_rows.push_back({{"graph", fm.label},
                               {"family", to_string(cls.family)},
                               {"witness_palette", witness_palette},
                               {"ok", ok}});
    }
    r.passed = disagreements == 0 && member_failures == 0;
    r.summary = std::to_string(samples) + " random graphs (" + std::to_string(verdicts.size()) +
                " isomorphism classes, " + std::to_string(disagreements) + " disagreements); " +
                std::to_string(members) + " family members, " + std::to_string(member_failures) + " failures";
    r.details = Json{{"samples", samples},
                     {"isomorphism_classes", verdicts.size()},
                     {"palette_cap", palette_cap},
                     {"choosable_samples", choosable},
                     {"disagreements", disagreements},
                     {"members", member_rows}};
    if (!first.is_null())
        r.details["first_disagreement"] = first;
    return r;
}

namespace suite_detail
{

// Θ_{4,4,4} whose first path sees x heavy, y light and l-x-y safe couples.
// Couples are (j, 100+j); the middle list holds only a spare colour, so the
// common-colour set of that path is empty.
inline ListAssignment labelled_instance(const ThetaGraph& theta, Rng& rng, int ell, int x, int y)
{
    std::vector<int> labels(static_cast<std::size_t>(ell), 0);
    for (int j = 0; j < x; ++j)
        labels[static_cast<std::size_t>(j)] = 2;
    for (int j = x; j < x + y; ++j)
        labels[static_cast<std::size_t>(j)] = 1;
    for (std::size_t j = labels.size(); j > 1; --j)
        std::swap(labels[j - 1], labels[rng.below(j)]);
    ListAssignment lists(theta.graph().size(), ColourSet{900});
    std::vector<Colour> lu, lv, first{500}, last{501};
    for (int j = 0; j < ell; ++j) {
        lu.push_back(j);
        lv.push_back(100 + j);
        const int lab = labels[static_cast<std::size_t>(j)];
        if (lab >= 1)
            first.push_back(j);
        if (lab == 2)
            last.push_back(100 + j);
    }
    lists[ThetaGraph::hub_u] = ColourSet(lu);
    lists[ThetaGraph::hub_v] = ColourSet(lv);
    const auto& p = theta.path(0);
    lists[p[0]] = ColourSet(first);
    lists[p[1]] = ColourSet{999};
    lists[p[2]] = ColourSet(last);
    return lists;
}

} // namespace suite_detail

/// F(x,y) against a direct count of coupled pairs of size k with damage at
/// least max{2x+y+k+1-l, k+1} on a path realising the classification.
inline CriterionResult criterion_count_equivalence(const SuiteConfig& cfg)
{
    CriterionResult r{11, "F(x,y) equals the enumerated count of heavy-weighted pairs", false, "", Json::object()};
    Rng rng(suite_detail::seed_for(cfg, 11));
    const int samples = cfg.quick ? 50 : 200;
    const ThetaGraph theta({4, 4, 4});
    std::uint64_t disagreements = 0, misclassified = 0, not_simple = 0;
    Json first = nullptr;
    for (int s = 0; s < samples; ++s) {
        const int ell = rng.between(2, 10);
        const int k = rng.between(1, ell - 1);
        const int x = rng.between(0, ell);
        const int y = rng.between(0, ell - x);
        const auto lists = suite_detail::labelled_instance(theta, rng, ell, x, y);
        ThetaPaths paths(theta, lists);
        const auto index = consistent_indexing(paths.hub_u_list(), paths.hub_v_list());
        const auto cls = classify_couples(paths, index);
        if (cls.paths[0].heavy != x || cls.paths[0].light != y)
            ++misclassified;
        const int threshold = std::max(2 * x + y + k + 1 - ell, k + 1);
        std::uint64_t counted = 0;
        for_each_combination(index.size(), static_cast<std::size_t>(k), [&](const std::vector<std::size_t>& idx) {
            std::vector<Colour> S, T;
            for (auto j : idx) {
                S.push_back(index.couples[j].at_u);
                T.push_back(index.couples[j].at_v);
            }
            const ColourSet s_set(S), t_set(T);
            if (!paths.simple(s_set, t_set))
                ++not_simple;
            if (paths.damage(0, s_set, t_set) >= threshold)
                ++counted;
            return true;
        });
        const auto f = static_cast<std::uint64_t>(F_value({ell, k, x, y}));
        const auto counted_again = count_pairs_with_damage_at_least(paths, 0, k, threshold);
        if ((counted != f || counted_again != f) && disagreements++ == 0)
            first = Json{{"ell", ell}, {"k", k}, {"x", x}, {"y", y}, {"F", f}, {"enumerated", counted}};
    }
    r.passed = disagreements == 0 && misclassified == 0 && not_simple == 0;
    r.summary = std::to_string(samples) + " parameter sets; " + std::to_string(disagreements) + " disagreements";
    r.details = Json{{"samples", samples},
                     {"disagreements", disagreements},
                     {"misclassified", misclassified},
                     {"non_simple_pairs", not_simple}};
    if (!first.is_null())
        r.details["first_disagreement"] = first;
    return r;
}

using CriterionFn = CriterionResult (*)(const SuiteConfig&);

inline const std::vector<CriterionFn>& criteria()
{
    static const std::vector<CriterionFn> all{
        criterion_path_criterion, criterion_damage,          criterion_slp_identities, criterion_main_lemma,
        criterion_identities,       criterion_odd_cycle,       criterion_theta_families, criterion_pair_existence,
        criterion_splitting,      criterion_classification, criterion_count_equivalence};
    return all;
}

inline Json to_json(const CriterionResult& c)
{
    return Json{{"id", c.id}, {"title", c.title}, {"passed", c.passed}, {"summary", c.summary}, {"details", c.details}};
}

} // namespace thetacol

#endif // THETACOL_SUITE_HPP
