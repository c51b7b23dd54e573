#ifndef THETACOL_PATH_ENGINE_HPP
#define THETACOL_PATH_ENGINE_HPP

#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "coloring.hpp"
#include "combinations.hpp"
#include "errors.hpp"

// Path calculus for a path v_1 ... v_n whose head v_1 sits next to hub u and
// whose tail v_n sits next to hub v. Every function takes the lists in path
// order.

namespace thetacol
{

using PathLists = std::span<const ColourSet>;

/// Residual sequence X_1 = L(v_1), X_i = L(v_i) - X_{i-1} and its total size,
/// plus the common-colour set and parity-filtered end sets (odd n only).
struct PathProfile
{
    std::vector<ColourSet> residuals;
    int slp = 0;
    ColourSet lambda;
    ColourSet hat_first;
    ColourSet hat_last;
};

inline PathProfile residual_sequence(PathLists lists)
{
    if (lists.empty())
        throw InputError("path must have at least one vertex");
    PathProfile p;
    p.residuals.reserve(lists.size());
    p.residuals.push_back(lists[0]);
    for (std::size_t i = 1; i < lists.size(); ++i)
        p.residuals.push_back(lists[i] - p.residuals.back());
    for (const auto& x : p.residuals)
        p.slp += x.count();
    return p;
}

inline int slp(PathLists lists) { return residual_sequence(lists).slp; }

/// Fills lambda / hat_first / hat_last. A colour of L(v_1) outside lambda
/// belongs to hat_first when the first list missing it has an even (1-based)
/// index; hat_last mirrors this from the tail. For n = 1, lambda = L(v_1)
/// and both hat sets are empty.
inline PathProfile hat_sets(PathLists lists)
{
    if (lists.empty())
        throw InputError("path must have at least one vertex");
    const std::size_t n = lists.size();
    if (n % 2 == 0)
        throw InputError("hat sets are defined for odd paths only, got n=" + std::to_string(n));
    PathProfile p = residual_sequence(lists);
    p.lambda = lists[0];
    for (std::size_t i = 1; i < n; ++i)
        p.lambda = p.lambda & lists[i];
    std::vector<Colour> first, last;
    for (auto c : lists[0] - p.lambda) {
        std::size_t i = 0;
        while (lists[i].contains(c))
            ++i;
        if ((i + 1) % 2 == 0)
            first.push_back(c);
    }
    for (auto c : lists[n - 1] - p.lambda) {
        std::size_t i = n - 1;
        while (lists[i].contains(c))
            --i;
        if ((i + 1) % 2 == 0)
            last.push_back(c);
    }
    p.hat_first = ColourSet(std::move(first));
    p.hat_last = ColourSet(std::move(last));
    return p;
}

/// L with S removed from the head list and T from the tail list.
inline std::vector<ColourSet> reduce_lists(PathLists lists, const ColourSet& S, const ColourSet& T)
{
    std::vector<ColourSet> out(lists.begin(), lists.end());
    if (out.empty())
        return out;
    out.front() = out.front() - S;
    out.back() = out.back() - T;
    return out;
}

inline int damage_definitional(PathLists lists, const ColourSet& S, const ColourSet& T)
{
    auto reduced = reduce_lists(lists, S, T);
    return slp(lists) - slp(reduced);
}

inline int damage_closed_form(const PathProfile& hats, const ColourSet& S, const ColourSet& T)
{
    return (hats.hat_first & S).count() + (hats.hat_last & T).count() + (hats.lambda & (S | T)).count();
}

/// S_{L-(S,T)}(P) via the inclusion-exclusion identity.
inline int reduced_slp_identity(const PathProfile& hats, const ColourSet& S, const ColourSet& T)
{
    return hats.slp - ((hats.lambda | hats.hat_first) & S).count() - ((hats.lambda | hats.hat_last) & T).count() +
           (hats.lambda & S & T).count();
}

/// Damage of (S,T) on an odd path; both routes are evaluated and must agree.
inline int damage(PathLists lists, const ColourSet& S, const ColourSet& T)
{
    const auto hats = hat_sets(lists);
    const int closed = damage_closed_form(hats, S, T);
    const int direct = damage_definitional(lists, S, T);
    if (closed != direct)
        throw InternalError("damage mismatch: closed form " + std::to_string(closed) + " vs definition " +
                            std::to_string(direct));
    return closed;
}

struct IdentityCheck
{
    std::string name;
    bool holds = false;
    long lhs = 0;
    long rhs = 0;
};

struct SlpIdentityReport
{
    bool hypotheses_ok = false;
    std::string hypothesis_violation;
    int l1 = 0;
    int l2 = 0;
    std::vector<IdentityCheck> checks; ///< the statements that must hold
    IdentityCheck printed_equality;    ///< l_1 + (n-3)/2 l_2 form; holds iff l_1 == l_2 or by accident

    bool all_hold() const
    {
        if (!hypotheses_ok)
            return false;
        for (const auto& c : checks)
            if (!c.holds)
                return false;
        return true;
    }
};

/// Checks the S_L(P) identity and both lower bounds for an odd path with
/// |L(v_1)| = l_1 and |L(v_i)| = l_2 (i >= 2):
///   S_L(P)  = (n-1)/2 l_2 + sum_{k even, k<n} |X_{k-1} - L(v_k)| + |X_n|
///   S_L(P) >= (n-1)/2 l_2 + |hat X_1| + |hat X_n| + |Lambda|
///   S_L(P) >= l_1 + (n-3)/2 l_2 + |hat X_1| + |hat X_n| + |Lambda|   (checked when l_1 <= l_2)
///   S_L(P) >= l_1 + (n-1)/2 l_2
inline SlpIdentityReport slp_identity_check(PathLists lists)
{
    SlpIdentityReport r;
    const std::size_t n = lists.size();
    if (n < 3 || n % 2 == 0) {
        r.hypothesis_violation = "need an odd path with n >= 3, got n=" + std::to_string(n);
        return r;
    }
    r.l1 = lists[0].count();
    r.l2 = lists[1].count();
    for (std::size_t i = 2; i < n; ++i)
        if (lists[i].count() != r.l2) {
            r.hypothesis_violation = "list " + std::to_string(i + 1) + " has size " +
                                     std::to_string(lists[i].count()) + ", expected l2=" + std::to_string(r.l2);
            return r;
        }
    r.hypotheses_ok = true;

    const auto p = hat_sets(lists);
    const long half = static_cast<long>((n - 1) / 2);
    long tail_sum = 0;
    for (std::size_t k = 2; k < n; k += 2) // 1-based even k
        tail_sum += (p.residuals[k - 2] - lists[k - 1]).count();
    const long last = p.residuals.back().count();
    const long hats = p.hat_first.count() + p.hat_last.count() + p.lambda.count();

    const long eq_rhs = half * r.l2 + tail_sum + last;
    r.checks.push_back({"slp_equality", p.slp == eq_rhs, p.slp, eq_rhs});
    const long hat_bound = half * r.l2 + hats;
    r.checks.push_back({"hat_lower_bound", p.slp >= hat_bound, p.slp, hat_bound});
    if (r.l1 <= r.l2) {
        const long printed_bound = r.l1 + (half - 1) * r.l2 + hats;
        r.checks.push_back({"hat_lower_bound_l1", p.slp >= printed_bound, p.slp, printed_bound});
    }
    const long pair_bound = r.l1 + half * r.l2;
    r.checks.push_back({"pair_lower_bound", p.slp >= pair_bound, p.slp, pair_bound});

    const long printed_rhs = r.l1 + (half - 1) * r.l2 + tail_sum + last;
    r.printed_equality = {"slp_equality_l1_form", p.slp == printed_rhs, p.slp, printed_rhs};
    return r;
}

/// Throws unless |L(v_1)|, |L(v_n)| >= m and interior lists have >= 2m colours.
inline void require_path_criterion_hypotheses(PathLists lists, int m)
{
    if (lists.empty())
        throw InputError("path must have at least one vertex");
    if (m < 1)
        throw InputError("fold must be positive");
    const std::size_t n = lists.size();
    if (lists[0].count() < m || lists[n - 1].count() < m)
        throw InputError("end lists need at least m=" + std::to_string(m) + " colours");
    for (std::size_t i = 1; i + 1 < n; ++i)
        if (lists[i].count() < 2 * m)
            throw InputError("interior list " + std::to_string(i + 1) + " has " + std::to_string(lists[i].count()) +
                             " < 2m colours");
}

/// P is (L,m)-colourable iff S_L(P) >= n m (under the size hypotheses).
inline bool path_colorable(PathLists lists, int m)
{
    require_path_criterion_hypotheses(lists, m);
    return slp(lists) >= static_cast<int>(lists.size()) * m;
}

namespace detail
{

inline std::optional<std::vector<ColourSet>> greedy_path(PathLists lists, int m)
{
    std::vector<ColourSet> out;
    ColourSet prev;
    for (std::size_t i = 0; i < lists.size(); ++i) {
        const ColourSet cand = lists[i] - prev;
        if (cand.count() < m)
            return std::nullopt;
        ColourSet pick;
        if (i + 1 < lists.size()) {
            const ColourSet free = cand - lists[i + 1];
            pick = free.smallest(static_cast<std::size_t>(m));
            if (pick.count() < m)
                pick = pick | (cand & lists[i + 1]).smallest(static_cast<std::size_t>(m - pick.count()));
        }
        else {
            pick = cand.smallest(static_cast<std::size_t>(m));
        }
        out.push_back(pick);
        prev = pick;
    }
    return out;
}

inline bool backtrack_path(PathLists lists, int m, std::size_t i, const ColourSet& prev, std::vector<ColourSet>& out,
                           std::set<std::pair<std::size_t, ColourSet>>& dead)
{
    if (i == lists.size())
        return true;
    if (dead.count({i, prev}))
        return false;
    bool ok = false;
    for_each_subset(lists[i] - prev, static_cast<std::size_t>(m), [&](const ColourSet& pick) {
        out[i] = pick;
        if (backtrack_path(lists, m, i + 1, pick, out, dead)) {
            ok = true;
            return false;
        }
        return true;
    });
    if (!ok)
        dead.insert({i, prev});
    return ok;
}

} // namespace detail

/// m-fold colouring of the path from its lists, or nullopt iff the path
/// criterion fails. Greedy left to right (colours missing from the next list
/// first), exact backtracking if greedy gets stuck.
inline std::optional<FoldColoring> color_path(PathLists lists, int m)
{
    if (!path_colorable(lists, m))
        return std::nullopt;
    if (auto g = detail::greedy_path(lists, m))
        return FoldColoring{m, std::move(*g)};
    std::vector<ColourSet> out(lists.size());
    std::set<std::pair<std::size_t, ColourSet>> dead;
    if (detail::backtrack_path(lists, m, 0, ColourSet{}, out, dead))
        return FoldColoring{m, std::move(out)};
    throw InternalError("path criterion holds but no colouring was found");
}

} // namespace thetacol

#endif // THETACOL_PATH_ENGINE_HPP
