#ifndef THETACOL_THETA_SOLVER_HPP
#define THETACOL_THETA_SOLVER_HPP

#include <algorithm>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "coloring.hpp"
#include "oracle.hpp"
#include "pair_search.hpp"
#include "path_engine.hpp"
#include "theta.hpp"

// (2m+1, m)-list-colouring of Θ_{2r,2s,2t}, Θ_{2r+1,2s+1,2t+1} and
// Θ_{2,2,2,2p}: choose colours for the hubs by a pair search, then extend
// along each internal path.

namespace thetacol
{

enum class Certificate
{
    theorem_even,
    theorem_odd_split,
    theorem_theta4,
    oracle
};

inline const char* to_string(Certificate c)
{
    switch (c) {
    case Certificate::theorem_even:
        return "theorem-even";
    case Certificate::theorem_odd_split:
        return "theorem-odd-split";
    case Certificate::theorem_theta4:
        return "theorem-theta4";
    case Certificate::oracle:
        return "oracle";
    }
    return "?";
}

struct SolveResult
{
    std::optional<FoldColoring> coloring;
    Certificate certificate = Certificate::oracle;
    std::optional<ConditionReport> conditions; ///< on the lists the pair search ran against
    std::optional<PairCandidate> pair;
    bool full_trim = false; ///< hub-only trimming failed validation; every list was trimmed
};

namespace detail
{

inline void require_min_size(const ThetaGraph& theta, const ListAssignment& lists, Vertex w, int need)
{
    if (lists[w].count() < need)
        throw InputError("list of " + theta.graph().name(w) + " has " + std::to_string(lists[w].size()) +
                         " colours, need " + std::to_string(need));
}

inline ColourSet trim(const ColourSet& s, int keep)
{
    return s.smallest(static_cast<std::size_t>(std::max(keep, 0)));
}

inline void require_verified(const Graph& g, const ListAssignment& lists, int m, const FoldColoring& phi,
                             const std::string& stage)
{
    const auto report = verify_coloring(g, lists, m, phi);
    if (!report.ok())
        throw InternalError(stage + " produced an invalid colouring: " + report.violations.front().detail);
}

// Hubs get S and T; every internal path is coloured on L ⊖ (S,T).
inline FoldColoring extend_from_pair(const ThetaGraph& theta, const ListAssignment& lists, const PairCandidate& pair,
                                     int m)
{
    FoldColoring phi{m, std::vector<ColourSet>(theta.graph().size())};
    phi.assignment[ThetaGraph::hub_u] = pair.S;
    phi.assignment[ThetaGraph::hub_v] = pair.T;
    for (std::size_t i = 0; i < theta.path_count(); ++i) {
        const auto& verts = theta.path(i);
        std::vector<ColourSet> pl;
        for (auto w : verts)
            pl.push_back(lists[w]);
        const auto reduced = reduce_lists(pl, pair.S, pair.T);
        std::optional<FoldColoring> part;
        if (verts.size() == 1)
            part = FoldColoring{m, {reduced[0].smallest(static_cast<std::size_t>(m))}};
        else
            part = color_path(reduced, m);
        if (!part || part->assignment.back().count() != m)
            throw InternalError("pair fits the budget of path " + std::to_string(i) + " but the path is not colourable");
        for (std::size_t j = 0; j < verts.size(); ++j)
            phi.assignment[verts[j]] = part->assignment[j];
    }
    return phi;
}

inline bool even_shape(const ThetaGraph& theta)
{
    if (theta.path_count() != 3)
        return false;
    for (int k : theta.lengths())
        if (k < 4 || k % 2 != 0)
            return false;
    return true;
}

inline bool odd_shape(const ThetaGraph& theta)
{
    if (theta.path_count() != 3)
        return false;
    for (int k : theta.lengths())
        if (k < 3 || k % 2 != 1)
            return false;
    return true;
}

inline bool theta4_shape(const ThetaGraph& theta)
{
    if (theta.path_count() != 4)
        return false;
    auto ls = theta.lengths();
    std::sort(ls.begin(), ls.end());
    return ls[0] == 2 && ls[1] == 2 && ls[2] == 2 && ls[3] % 2 == 0;
}

} // namespace detail

/// Θ_{2r,2s,2t} with r,s,t >= 2. Hubs need >= 2m colours, N(u) >= 2m, every
/// other list >= 2m+1. Hub lists are cut to 2m by dropping the largest
/// colours; if C1-C5 then fail, N(u) is cut to 2m and the rest to 2m+1.
inline SolveResult solve_even_theta_detailed(const ThetaGraph& theta, const ListAssignment& lists, int m)
{
    if (m < 1)
        throw InputError("fold must be positive");
    if (!detail::even_shape(theta))
        throw InputError("expected a theta with three even paths of length >= 4");
    if (lists.size() != theta.graph().size())
        throw InputError("list assignment does not cover the theta graph");
    detail::require_min_size(theta, lists, ThetaGraph::hub_u, 2 * m);
    detail::require_min_size(theta, lists, ThetaGraph::hub_v, 2 * m);
    for (std::size_t i = 0; i < 3; ++i) {
        const auto& p = theta.path(i);
        for (std::size_t j = 0; j < p.size(); ++j)
            detail::require_min_size(theta, lists, p[j], j == 0 ? 2 * m : 2 * m + 1);
    }

    SolveResult result;
    result.certificate = Certificate::theorem_even;
    ListAssignment work = lists;
    work[ThetaGraph::hub_u] = detail::trim(lists[ThetaGraph::hub_u], 2 * m);
    work[ThetaGraph::hub_v] = detail::trim(lists[ThetaGraph::hub_v], 2 * m);
    auto report = check_conditions_C(theta, work, 2 * m, 0, m);
    if (!report.all_ok()) {
        result.full_trim = true;
        for (std::size_t i = 0; i < 3; ++i) {
            const auto& p = theta.path(i);
            for (std::size_t j = 0; j < p.size(); ++j)
                work[p[j]] = detail::trim(lists[p[j]], j == 0 ? 2 * m : 2 * m + 1);
        }
        report = check_conditions_C(theta, work, 2 * m, 0, m);
        if (!report.all_ok())
            throw TheoremFalsified("C1-C5 fail on lists meeting the even-theta hypotheses");
    }
    ThetaPaths paths(theta, work);
    result.conditions = report;
    result.pair = find_pair(paths, m, paths.budgets(m), true);
    result.coloring = detail::extend_from_pair(theta, work, *result.pair, m);
    detail::require_verified(theta.graph(), lists, m, *result.coloring, "even-theta solver");
    return result;
}

inline FoldColoring solve_even_theta(const ThetaGraph& theta, const ListAssignment& lists, int m)
{
    return *solve_even_theta_detailed(theta, lists, m).coloring;
}

/// Record of the hub split: theta' vertex w came from original vertex
/// `original[w]`, except u' and the three split copies of u.
struct SplitMap
{
    static constexpr Vertex none = std::numeric_limits<Vertex>::max();
    std::vector<int> lengths_before;
    std::vector<int> lengths_after;
    std::vector<Vertex> original;    ///< indexed by theta' vertex
    std::vector<Vertex> split_copies; ///< u_1, u_2, u_3 in theta'
    Vertex new_hub = ThetaGraph::hub_u;
    ColourSet hub_list; ///< L(u)
    std::size_t original_size = 0;
};

struct SplitInstance
{
    ThetaGraph theta;
    ListAssignment lists;
    SplitMap map;
};

/// Θ_{2r+1,2s+1,2t+1} -> Θ_{2r+2,2s+2,2t+2}: u becomes u_1, u_2, u_3 (one per
/// path) and a new hub u' adjacent to all three; all four carry L(u).
inline SplitInstance split_odd_theta(const ThetaGraph& theta, const ListAssignment& lists, int m)
{
    if (!detail::odd_shape(theta))
        throw InputError("expected a theta with three odd paths of length >= 3");
    if (lists.size() != theta.graph().size())
        throw InputError("list assignment does not cover the theta graph");
    if (lists[ThetaGraph::hub_u].count() != 2 * m)
        throw InputError("hub list must be trimmed to exactly 2m colours before splitting");
    std::vector<int> after;
    for (int k : theta.lengths())
        after.push_back(k + 1);
    SplitInstance out{ThetaGraph(after), {}, {}};
    auto& map = out.map;
    map.lengths_before = theta.lengths();
    map.lengths_after = after;
    map.hub_list = lists[ThetaGraph::hub_u];
    map.original_size = theta.graph().size();
    map.original.assign(out.theta.graph().size(), SplitMap::none);
    map.original[ThetaGraph::hub_v] = ThetaGraph::hub_v;
    out.lists.assign(out.theta.graph().size(), ColourSet{});
    out.lists[ThetaGraph::hub_u] = map.hub_list;
    out.lists[ThetaGraph::hub_v] = lists[ThetaGraph::hub_v];
    for (std::size_t i = 0; i < 3; ++i) {
        const auto& np = out.theta.path(i);
        const auto& op = theta.path(i);
        map.split_copies.push_back(np[0]);
        out.lists[np[0]] = map.hub_list;
        for (std::size_t j = 0; j < op.size(); ++j) {
            map.original[np[j + 1]] = op[j];
            out.lists[np[j + 1]] = lists[op[j]];
        }
    }
    return out;
}

/// φ(u) = φ'(u_1), φ = φ' on the other original vertices. The three copies
/// must carry the same set, namely L(u) - φ'(u').
inline FoldColoring pull_back_coloring(const FoldColoring& split_phi, const SplitMap& map)
{
    if (split_phi.assignment.size() != map.original.size())
        throw InputError("colouring does not match the split graph");
    const ColourSet forced = map.hub_list - split_phi.assignment[map.new_hub];
    for (auto c : map.split_copies)
        if (split_phi.assignment[c] != forced)
            throw InternalError("split copy carries " + to_string(split_phi.assignment[c]) + ", expected " +
                                to_string(forced));
    FoldColoring phi{split_phi.fold, std::vector<ColourSet>(map.original_size)};
    phi.assignment[ThetaGraph::hub_u] = split_phi.assignment[map.split_copies[0]];
    for (Vertex w = 0; w < map.original.size(); ++w)
        if (map.original[w] != SplitMap::none)
            phi.assignment[map.original[w]] = split_phi.assignment[w];
    return phi;
}

/// Odd theta with lists of size >= 2m+1 (hubs >= 2m): trim L(u), split,
/// solve the even theta, pull back.
inline SolveResult solve_odd_theta_detailed(const ThetaGraph& theta, const ListAssignment& lists, int m)
{
    if (m < 1)
        throw InputError("fold must be positive");
    if (!detail::odd_shape(theta))
        throw InputError("expected a theta with three odd paths of length >= 3");
    if (lists.size() != theta.graph().size())
        throw InputError("list assignment does not cover the theta graph");
    for (Vertex w = 0; w < theta.graph().size(); ++w)
        detail::require_min_size(theta, lists, w, w <= ThetaGraph::hub_v ? 2 * m : 2 * m + 1);
    ListAssignment trimmed = lists;
    trimmed[ThetaGraph::hub_u] = detail::trim(lists[ThetaGraph::hub_u], 2 * m);
    const auto split = split_odd_theta(theta, trimmed, m);
    SolveResult result = solve_even_theta_detailed(split.theta, split.lists, m);
    result.certificate = Certificate::theorem_odd_split;
    result.coloring = pull_back_coloring(*result.coloring, split.map);
    detail::require_verified(theta.graph(), lists, m, *result.coloring, "odd-theta solver");
    return result;
}

/// Θ_{2,2,2,2p} with every list of size >= 2m+1.
inline SolveResult solve_generalized_theta4_detailed(const ThetaGraph& theta, const ListAssignment& lists, int m)
{
    if (m < 1)
        throw InputError("fold must be positive");
    if (!detail::theta4_shape(theta))
        throw InputError("expected Θ_{2,2,2,2p}");
    if (lists.size() != theta.graph().size())
        throw InputError("list assignment does not cover the theta graph");
    for (Vertex w = 0; w < theta.graph().size(); ++w)
        detail::require_min_size(theta, lists, w, 2 * m + 1);

    SolveResult result;
    result.certificate = Certificate::theorem_theta4;
    ListAssignment work = lists;
    work[ThetaGraph::hub_u] = detail::trim(lists[ThetaGraph::hub_u], 2 * m + 1);
    work[ThetaGraph::hub_v] = detail::trim(lists[ThetaGraph::hub_v], 2 * m + 1);
    auto report = check_conditions_T(theta, work, 2 * m + 1, 0, m);
    if (!report.all_ok()) {
        result.full_trim = true;
        for (auto& l : work)
            l = detail::trim(l, 2 * m + 1);
        report = check_conditions_T(theta, work, 2 * m + 1, 0, m);
        if (!report.all_ok())
            throw TheoremFalsified("T1-T5 fail on (2m+1)-lists of Θ_{2,2,2,2p}");
    }
    ThetaPaths paths(theta, work);
    result.conditions = report;
    result.pair = find_pair(paths, m, paths.budgets(m), true);
    result.coloring = detail::extend_from_pair(theta, work, *result.pair, m);
    detail::require_verified(theta.graph(), lists, m, *result.coloring, "theta4 solver");
    return result;
}

inline FoldColoring solve_generalized_theta4(const ThetaGraph& theta, const ListAssignment& lists, int m)
{
    return *solve_generalized_theta4_detailed(theta, lists, m).coloring;
}

/// Dispatches by shape; shapes outside the three families, or lists too
/// small for their hypotheses, go to the exact oracle.
inline SolveResult solve(const ThetaGraph& theta, const ListAssignment& lists, int m,
                         std::uint64_t node_budget = default_node_budget)
{
    if (m < 1)
        throw InputError("fold must be positive");
    if (lists.size() != theta.graph().size())
        throw InputError("list assignment does not cover the theta graph");
    const auto& g = theta.graph();
    auto fits = [&](auto&& need) {
        for (Vertex w = 0; w < g.size(); ++w)
            if (lists[w].count() < need(w))
                return false;
        return true;
    };
    const auto first_of_path = [&](Vertex w) {
        for (std::size_t i = 0; i < theta.path_count(); ++i)
            if (theta.path(i).front() == w)
                return true;
        return false;
    };
    if (detail::even_shape(theta) && fits([&](Vertex w) { return w <= 1 || first_of_path(w) ? 2 * m : 2 * m + 1; }))
        return solve_even_theta_detailed(theta, lists, m);
    if (detail::odd_shape(theta) && fits([&](Vertex w) { return w <= 1 ? 2 * m : 2 * m + 1; }))
        return solve_odd_theta_detailed(theta, lists, m);
    if (detail::theta4_shape(theta) && fits([&](Vertex) { return 2 * m + 1; }))
        return solve_generalized_theta4_detailed(theta, lists, m);

    SolveResult result;
    result.certificate = Certificate::oracle;
    result.coloring = find_Lb_coloring(g, lists, m, node_budget);
    if (result.coloring)
        detail::require_verified(g, lists, m, *result.coloring, "oracle");
    return result;
}

/// Graph-level entry: the graph must be a theta graph.
inline SolveResult solve(const Graph& g, const ListAssignment& lists, int m,
                         std::uint64_t node_budget = default_node_budget)
{
    if (lists.size() != g.size())
        throw InputError("list assignment does not cover the graph");
    auto emb = recognize_theta(g);
    if (!emb)
        throw InputError("graph is not a theta graph");
    ListAssignment tl(g.size());
    for (Vertex w = 0; w < g.size(); ++w)
        tl[w] = lists[emb->to_graph[w]];
    SolveResult r = solve(emb->theta, tl, m, node_budget);
    if (r.coloring) {
        FoldColoring back{m, std::vector<ColourSet>(g.size())};
        for (Vertex w = 0; w < g.size(); ++w)
            back.assignment[emb->to_graph[w]] = r.coloring->assignment[w];
        r.coloring = std::move(back);
        detail::require_verified(g, lists, m, *r.coloring, "theta solver");
    }
    return r;
}

} // namespace thetacol

#endif // THETACOL_THETA_SOLVER_HPP
