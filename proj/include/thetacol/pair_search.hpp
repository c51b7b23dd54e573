#ifndef THETACOL_PAIR_SEARCH_HPP
#define THETACOL_PAIR_SEARCH_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "coloring.hpp"
#include "combinations.hpp"
#include "path_engine.hpp"
#include "theta.hpp"

namespace thetacol
{

/// (c_j, c'_j) with c_j in L(u) and c'_j in L(v).
struct Couple
{
    Colour at_u;
    Colour at_v;
    friend bool operator==(const Couple&, const Couple&) = default;
};

/// A consistent indexing: shared colours are coupled with themselves, and
/// distinct couples never share a colour.
struct CoupleIndex
{
    std::vector<Couple> couples;
    std::size_t size() const noexcept { return couples.size(); }
};

/// Shared colours first (ascending, paired with themselves), then the
/// remaining colours of L(u) and L(v) paired ascending-to-ascending.
inline CoupleIndex consistent_indexing(const ColourSet& lu, const ColourSet& lv)
{
    if (lu.size() != lv.size())
        throw InputError("hub lists differ in size: " + std::to_string(lu.size()) + " vs " + std::to_string(lv.size()));
    CoupleIndex index;
    const ColourSet shared = lu & lv;
    for (auto c : shared)
        index.couples.push_back({c, c});
    const ColourSet only_u = lu - shared;
    const ColourSet only_v = lv - shared;
    for (std::size_t i = 0; i < only_u.size(); ++i)
        index.couples.push_back({only_u[i], only_v[i]});
    return index;
}

/// Per-path lists and hat sets of a theta whose internal paths all have odd
/// vertex count; the shared input of classification, conditions and search.
class ThetaPaths
{
  public:
    ThetaPaths(const ThetaGraph& theta, const ListAssignment& lists)
        : theta_(theta)
        , lu_(lists.at(ThetaGraph::hub_u))
        , lv_(lists.at(ThetaGraph::hub_v))
    {
        if (lists.size() != theta.graph().size())
            throw InputError("list assignment does not cover the theta graph");
        for (std::size_t i = 0; i < theta.path_count(); ++i) {
            const auto& verts = theta.path(i);
            if (verts.empty())
                throw InputError("path " + std::to_string(i) + " has no internal vertex");
            if (verts.size() % 2 == 0)
                throw InputError("path " + std::to_string(i) + " has an even number of internal vertices");
            std::vector<ColourSet> pl;
            for (auto w : verts)
                pl.push_back(lists[w]);
            profiles_.push_back(hat_sets(pl));
            lists_.push_back(std::move(pl));
        }
    }

    std::size_t count() const noexcept { return lists_.size(); }
    const ThetaGraph& theta() const noexcept { return theta_; }
    const ColourSet& hub_u_list() const noexcept { return lu_; }
    const ColourSet& hub_v_list() const noexcept { return lv_; }
    const std::vector<ColourSet>& lists(std::size_t i) const { return lists_.at(i); }
    const PathProfile& profile(std::size_t i) const { return profiles_.at(i); }
    int n(std::size_t i) const { return static_cast<int>(lists_.at(i).size()); }

    int damage(std::size_t i, const ColourSet& S, const ColourSet& T) const
    {
        return damage_closed_form(profiles_.at(i), S, T);
    }

    /// S ∩ (L(v)-T) ∩ Λ^i and T ∩ (L(u)-S) ∩ Λ^i both empty.
    bool simple_for(std::size_t i, const ColourSet& S, const ColourSet& T) const
    {
        const auto& lambda = profiles_.at(i).lambda;
        return (S & (lv_ - T) & lambda).empty() && (T & (lu_ - S) & lambda).empty();
    }

    bool simple(const ColourSet& S, const ColourSet& T) const
    {
        for (std::size_t i = 0; i < count(); ++i)
            if (!simple_for(i, S, T))
                return false;
        return true;
    }

    /// S_L(P^i) - n_i m for every path.
    std::vector<int> budgets(int m) const
    {
        std::vector<int> out;
        for (std::size_t i = 0; i < count(); ++i)
            out.push_back(profiles_[i].slp - n(i) * m);
        return out;
    }

  private:
    const ThetaGraph& theta_;
    ColourSet lu_;
    ColourSet lv_;
    std::vector<std::vector<ColourSet>> lists_;
    std::vector<PathProfile> profiles_;
};

enum class CoupleLabel
{
    heavy,
    light,
    safe
};

inline const char* to_string(CoupleLabel l)
{
    switch (l) {
    case CoupleLabel::heavy:
        return "heavy";
    case CoupleLabel::light:
        return "light";
    case CoupleLabel::safe:
        return "safe";
    }
    return "?";
}

struct PathClassification
{
    std::vector<CoupleLabel> labels; ///< one per couple
    std::vector<int> damages;        ///< dam(c_j, c'_j) per couple
    int heavy = 0;
    int light = 0;
    int safe = 0;
    int hub_damage = 0; ///< dam(L(u), L(v))
};

struct CoupleClassification
{
    CoupleIndex index;
    std::vector<PathClassification> paths;
};

inline CoupleClassification classify_couples(const ThetaPaths& paths, const CoupleIndex& index)
{
    CoupleClassification out;
    out.index = index;
    for (std::size_t i = 0; i < paths.count(); ++i) {
        PathClassification pc;
        for (const auto& cp : index.couples) {
            const int d = paths.damage(i, ColourSet{cp.at_u}, ColourSet{cp.at_v});
            pc.damages.push_back(d);
            switch (d) {
            case 2:
                pc.labels.push_back(CoupleLabel::heavy);
                ++pc.heavy;
                break;
            case 1:
                pc.labels.push_back(CoupleLabel::light);
                ++pc.light;
                break;
            case 0:
                pc.labels.push_back(CoupleLabel::safe);
                ++pc.safe;
                break;
            default:
                throw InternalError("couple damage " + std::to_string(d) + " outside {0,1,2}");
            }
        }
        pc.hub_damage = paths.damage(i, paths.hub_u_list(), paths.hub_v_list());
        out.paths.push_back(std::move(pc));
    }
    return out;
}

inline CoupleClassification classify_couples(const ThetaGraph& theta, const ListAssignment& lists,
                                             const CoupleIndex& index)
{
    ThetaPaths paths(theta, lists);
    return classify_couples(paths, index);
}

struct ConditionCheck
{
    std::string name;
    bool ok = false;
    std::string detail;
};

struct ConditionReport
{
    std::string family; ///< "C" or "T"
    std::vector<ConditionCheck> checks;

    bool all_ok() const
    {
        for (const auto& c : checks)
            if (!c.ok)
                return false;
        return !checks.empty();
    }
};

namespace detail
{

inline int floor_half(int m) { return m / 2; }
inline int ceil_half(int m) { return (m + 1) / 2; }

inline bool is_path_end(const ThetaGraph& theta, Vertex w)
{
    for (std::size_t i = 0; i < theta.path_count(); ++i) {
        const auto& p = theta.path(i);
        if (!p.empty() && (p.front() == w || p.back() == w))
            return true;
    }
    return false;
}

inline ConditionCheck interior_sizes(const ThetaGraph& theta, const ListAssignment& lists, int m,
                                     const std::string& name)
{
    ConditionCheck c{name, true, "all interior lists have >= 2m+1 colours"};
    for (Vertex w = 2; w < theta.graph().size(); ++w)
        if (!is_path_end(theta, w) && lists[w].count() < 2 * m + 1) {
            c.ok = false;
            c.detail = theta.graph().name(w) + " has " + std::to_string(lists[w].count()) + " < 2m+1 colours";
            break;
        }
    return c;
}

} // namespace detail

/// Hypotheses of the three-path pair theorem for Θ_{2r,2s,2t} (all n_i odd >= 3).
inline ConditionReport check_conditions_C(const ThetaGraph& theta, const ListAssignment& lists, int ell, int tau,
                                          int m)
{
    if (theta.path_count() != 3)
        throw InputError("C-conditions need a theta with three paths");
    for (std::size_t i = 0; i < 3; ++i)
        if (theta.internal_size(i) < 3 || theta.internal_size(i) % 2 == 0)
            throw InputError("C-conditions need odd internal paths with at least 3 vertices");
    ThetaPaths paths(theta, lists);
    ConditionReport r;
    r.family = "C";

    {
        const bool parity = ell >= 0 && tau >= 0 && ell % 2 == 0 && tau % 2 == 0;
        const bool lo = tau <= 2 * detail::floor_half(m);
        const bool hi = ell + tau >= 2 * detail::ceil_half(m);
        std::string d = "ell=" + std::to_string(ell) + " tau=" + std::to_string(tau);
        if (!parity)
            d += "; ell and tau must be non-negative even integers";
        if (!lo)
            d += "; tau > 2*floor(m/2)";
        if (!hi)
            d += "; ell+tau < 2*ceil(m/2)";
        r.checks.push_back({"C1", parity && lo && hi, d});
    }
    {
        const bool ok = paths.hub_u_list().count() == ell && paths.hub_v_list().count() == ell;
        r.checks.push_back({"C2", ok,
                            "|L(u)|=" + std::to_string(paths.hub_u_list().size()) +
                                " |L(v)|=" + std::to_string(paths.hub_v_list().size())});
    }
    {
        ConditionCheck c{"C3", true, "end lists large enough"};
        for (std::size_t i = 0; i < 3 && c.ok; ++i) {
            const auto& pl = paths.lists(i);
            if (pl.front().count() < 2 * m - tau) {
                c.ok = false;
                c.detail = "|L(v^" + std::to_string(i) + "_1)| < 2m-tau";
            }
            else if (pl.back().count() < 2 * m + 1 - tau) {
                c.ok = false;
                c.detail = "|L(v^" + std::to_string(i) + "_n)| < 2m+1-tau";
            }
        }
        r.checks.push_back(c);
    }
    r.checks.push_back(detail::interior_sizes(theta, lists, m, "C4"));
    {
        ConditionCheck c{"C5", true, ""};
        const auto budgets = paths.budgets(m);
        for (std::size_t i = 0; i < 3; ++i) {
            const int n = paths.n(i);
            const int dam = paths.damage(i, paths.hub_u_list(), paths.hub_v_list());
            const int need = std::max(m + (n - 3) / 2 + dam - ell - tau, m + (n - 1) / 2 - tau);
            c.detail += (i ? "; " : "") + std::string("P") + std::to_string(i) + ": " + std::to_string(budgets[i]) +
                        ">=" + std::to_string(need);
            if (budgets[i] < need)
                c.ok = false;
        }
        r.checks.push_back(c);
    }
    return r;
}

/// Index of the path playing the role of P^3 in Θ_{2,2,2,2p}: the one with
/// more than one internal vertex, or the last path when all are single.
inline std::size_t long_path_index(const ThetaGraph& theta)
{
    if (theta.path_count() != 4)
        throw InputError("T-shape needs a theta with four paths");
    std::size_t singles = 0;
    std::size_t other = 3;
    for (std::size_t i = 0; i < 4; ++i) {
        if (theta.internal_size(i) == 1)
            ++singles;
        else
            other = i;
    }
    if (singles < 3 || theta.internal_size(other) % 2 == 0)
        throw InputError("T-shape needs three single-vertex paths and one odd path");
    return other;
}

/// Hypotheses of the four-path pair theorem for Θ_{2,2,2,2p}.
inline ConditionReport check_conditions_T(const ThetaGraph& theta, const ListAssignment& lists, int ell, int tau,
                                          int m)
{
    const std::size_t longest = long_path_index(theta);
    ThetaPaths paths(theta, lists);
    ConditionReport r;
    r.family = "T";
    {
        const bool ok = ell >= 0 && tau >= 0 && tau <= m && ell + tau >= m;
        r.checks.push_back({"T1", ok, "ell=" + std::to_string(ell) + " tau=" + std::to_string(tau)});
    }
    {
        const bool ok = paths.hub_u_list().count() == ell && paths.hub_v_list().count() == ell;
        r.checks.push_back({"T2", ok,
                            "|L(u)|=" + std::to_string(paths.hub_u_list().size()) +
                                " |L(v)|=" + std::to_string(paths.hub_v_list().size())});
    }
    {
        ConditionCheck c{"T3", true, "end lists large enough"};
        for (std::size_t i = 0; i < 4 && c.ok; ++i) {
            const auto& pl = paths.lists(i);
            if (pl.front().count() < 2 * m + 1 - tau) {
                c.ok = false;
                c.detail = "|L(v^" + std::to_string(i) + "_1)| < 2m+1-tau";
            }
            if (i == longest && pl.size() >= 3 && pl.back().count() < 2 * m + 1 - tau) {
                c.ok = false;
                c.detail = "|L(v^" + std::to_string(i) + "_n)| < 2m+1-tau";
            }
        }
        r.checks.push_back(c);
    }
    r.checks.push_back(detail::interior_sizes(theta, lists, m, "T4"));
    {
        ConditionCheck c{"T5", true, ""};
        const auto budgets = paths.budgets(m);
        for (std::size_t i = 0; i < 4; ++i) {
            const int n = paths.n(i);
            const int dam = paths.damage(i, paths.hub_u_list(), paths.hub_v_list());
            const int need = std::max((n + 1) / 2 + m - ell - tau + dam, (n + 1) / 2 + m - tau);
            c.detail += (i ? "; " : "") + std::string("P") + std::to_string(i) + ": " + std::to_string(budgets[i]) +
                        ">=" + std::to_string(need);
            if (budgets[i] < need)
                c.ok = false;
        }
        r.checks.push_back(c);
    }
    return r;
}

struct PairCandidate
{
    enum class Kind
    {
        coupled, ///< T = {c'_j : c_j in S}
        cross,   ///< other simple pairs
        general  ///< not simple
    };
    ColourSet S;
    ColourSet T;
    std::vector<int> damages;
    bool simple = true;
    Kind kind = Kind::coupled;
};

inline const char* to_string(PairCandidate::Kind k)
{
    switch (k) {
    case PairCandidate::Kind::coupled:
        return "coupled";
    case PairCandidate::Kind::cross:
        return "cross";
    case PairCandidate::Kind::general:
        return "general";
    }
    return "?";
}

namespace detail
{

inline ColourSet pick_couples(const CoupleIndex& index, const std::vector<std::size_t>& idx, bool at_u)
{
    std::vector<Colour> out;
    for (auto j : idx)
        out.push_back(at_u ? index.couples[j].at_u : index.couples[j].at_v);
    return ColourSet(std::move(out));
}

// Evaluates damages through the closed form and cross-checks one evaluation
// in every hundred against the definitional difference.
class DamageMeter
{
  public:
    explicit DamageMeter(const ThetaPaths& paths)
        : paths_(paths)
    {
    }

    std::vector<int> damages(const ColourSet& S, const ColourSet& T)
    {
        std::vector<int> out;
        for (std::size_t i = 0; i < paths_.count(); ++i) {
            const int d = paths_.damage(i, S, T);
            if (++evaluations_ % 100 == 1) {
                const int direct = damage_definitional(paths_.lists(i), S, T);
                if (direct != d)
                    throw InternalError("closed-form damage " + std::to_string(d) + " != definitional " +
                                        std::to_string(direct));
            }
            out.push_back(d);
        }
        return out;
    }

    std::uint64_t evaluations() const noexcept { return evaluations_; }

  private:
    const ThetaPaths& paths_;
    std::uint64_t evaluations_ = 0;
};

inline bool within(const std::vector<int>& damages, const std::vector<int>& budgets)
{
    for (std::size_t i = 0; i < damages.size(); ++i)
        if (damages[i] > budgets[i])
            return false;
    return true;
}

} // namespace detail

/// First pair (S,T), |S| = |T| = size, with dam_{L,P^i}(S,T) <= budgets[i]
/// on every path. Coupled pairs are tried first (lexicographic in the couple
/// index), then the remaining simple pairs, then all pairs. When
/// `guaranteed` is set and nothing is found, TheoremFalsified is thrown.
inline std::optional<PairCandidate> find_pair(const ThetaPaths& paths, int size, const std::vector<int>& budgets,
                                              bool guaranteed = false)
{
    if (size < 0)
        throw InputError("pair size must be non-negative");
    if (budgets.size() != paths.count())
        throw InputError("need one budget per internal path");
    const auto& lu = paths.hub_u_list();
    const auto& lv = paths.hub_v_list();
    const auto s = static_cast<std::size_t>(size);
    detail::DamageMeter meter(paths);
    std::optional<PairCandidate> hit;

    auto attempt = [&](const ColourSet& S, const ColourSet& T, PairCandidate::Kind kind) {
        auto d = meter.damages(S, T);
        if (!detail::within(d, budgets))
            return true;
        hit = PairCandidate{S, T, std::move(d), kind != PairCandidate::Kind::general, kind};
        return false;
    };

    if (lu.size() == lv.size() && s <= lu.size()) {
        const CoupleIndex index = consistent_indexing(lu, lv);
        for_each_combination(index.size(), s, [&](const std::vector<std::size_t>& idx) {
            return attempt(detail::pick_couples(index, idx, true), detail::pick_couples(index, idx, false),
                           PairCandidate::Kind::coupled);
        });
        if (!hit)
            for_each_combination(index.size(), s, [&](const std::vector<std::size_t>& js) {
                const ColourSet S = detail::pick_couples(index, js, true);
                return for_each_combination(index.size(), s, [&](const std::vector<std::size_t>& ks) {
                    if (ks == js)
                        return true;
                    const ColourSet T = detail::pick_couples(index, ks, false);
                    if (!paths.simple(S, T))
                        return true;
                    return attempt(S, T, PairCandidate::Kind::cross);
                });
            });
    }
    if (!hit)
        for_each_subset(lu, s, [&](const ColourSet& S) {
            return for_each_subset(lv, s, [&](const ColourSet& T) {
                const bool simple = paths.simple(S, T);
                if (simple && lu.size() == lv.size())
                    return true; // covered above
                return attempt(S, T, simple ? PairCandidate::Kind::cross : PairCandidate::Kind::general);
            });
        });

    if (!hit && guaranteed)
        throw TheoremFalsified("hypotheses validated but no pair of size " + std::to_string(size) +
                               " fits the damage budgets");
    return hit;
}

inline std::optional<PairCandidate> find_pair(const ThetaGraph& theta, const ListAssignment& lists, int size,
                                              const std::vector<int>& budgets, bool guaranteed = false)
{
    ThetaPaths paths(theta, lists);
    return find_pair(paths, size, budgets, guaranteed);
}

/// Number of coupled pairs of the given size that are bad for each path,
/// i.e. whose damage exceeds that path's budget.
inline std::vector<std::uint64_t> count_bad_pairs(const ThetaPaths& paths, int size, const std::vector<int>& budgets)
{
    std::vector<std::uint64_t> bad(paths.count(), 0);
    const CoupleIndex index = consistent_indexing(paths.hub_u_list(), paths.hub_v_list());
    for_each_combination(index.size(), static_cast<std::size_t>(size), [&](const std::vector<std::size_t>& idx) {
        const ColourSet S = detail::pick_couples(index, idx, true);
        const ColourSet T = detail::pick_couples(index, idx, false);
        for (std::size_t i = 0; i < paths.count(); ++i)
            if (paths.damage(i, S, T) > budgets[i])
                ++bad[i];
        return true;
    });
    return bad;
}

inline std::vector<std::uint64_t> count_bad_pairs(const ThetaGraph& theta, const ListAssignment& lists, int size,
                                                  const std::vector<int>& budgets)
{
    ThetaPaths paths(theta, lists);
    return count_bad_pairs(paths, size, budgets);
}

/// Coupled pairs of size k whose damage on path i is at least `threshold`.
inline std::uint64_t count_pairs_with_damage_at_least(const ThetaPaths& paths, std::size_t i, int k, int threshold)
{
    const CoupleIndex index = consistent_indexing(paths.hub_u_list(), paths.hub_v_list());
    std::uint64_t total = 0;
    for_each_combination(index.size(), static_cast<std::size_t>(k), [&](const std::vector<std::size_t>& idx) {
        if (paths.damage(i, detail::pick_couples(index, idx, true), detail::pick_couples(index, idx, false)) >=
            threshold)
            ++total;
        return true;
    });
    return total;
}

} // namespace thetacol

#endif // THETACOL_PAIR_SEARCH_HPP
