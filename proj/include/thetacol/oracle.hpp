#ifndef THETACOL_ORACLE_HPP
#define THETACOL_ORACLE_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "coloring.hpp"
#include "combinations.hpp"
#include "errors.hpp"
#include "rng.hpp"

namespace thetacol
{

inline constexpr std::uint64_t default_node_budget = 50'000'000;

namespace detail
{

// Backtracking over b-subsets with forward checking. Only vertices
// 0..active-1 take part, which lets callers test prefixes of a vertex order
// without building induced subgraphs.
class FoldSearch
{
  public:
    FoldSearch(const Graph& g, std::span<const ColourSet> lists, int b, std::size_t active, std::uint64_t budget)
        : g_(g)
        , lists_(lists)
        , b_(b)
        , active_(active)
        , budget_(budget)
        , chosen_(active)
        , coloured_(active, false)
    {
        order_.resize(active);
        std::iota(order_.begin(), order_.end(), Vertex{0});
        std::vector<std::size_t> deg(active, 0);
        for (Vertex v = 0; v < active; ++v)
            for (auto w : g.neighbours(v))
                if (w < active)
                    ++deg[v];
        std::stable_sort(order_.begin(), order_.end(), [&](Vertex a, Vertex c) { return deg[a] > deg[c]; });
    }

    std::optional<std::vector<ColourSet>> run()
    {
        for (Vertex v = 0; v < active_; ++v)
            if (lists_[v].count() < b_)
                return std::nullopt;
        if (recurse(0))
            return chosen_;
        return std::nullopt;
    }

    std::uint64_t nodes() const noexcept { return nodes_; }

  private:
    ColourSet available(Vertex v) const
    {
        ColourSet avail = lists_[v];
        for (auto w : g_.neighbours(v))
            if (w < active_ && coloured_[w])
                avail = avail - chosen_[w];
        return avail;
    }

    bool recurse(std::size_t depth)
    {
        if (depth == order_.size())
            return true;
        const Vertex v = order_[depth];
        const ColourSet avail = available(v);
        if (avail.count() < b_)
            return false;
        bool found = false;
        for_each_subset(avail, static_cast<std::size_t>(b_), [&](const ColourSet& pick) {
            if (++nodes_ > budget_)
                throw BudgetExceeded("colouring search exceeded " + std::to_string(budget_) + " nodes");
            chosen_[v] = pick;
            coloured_[v] = true;
            bool viable = true;
            for (auto w : g_.neighbours(v))
                if (w < active_ && !coloured_[w] && available(w).count() < b_) {
                    viable = false;
                    break;
                }
            if (viable && recurse(depth + 1)) {
                found = true;
                return false;
            }
            coloured_[v] = false;
            return true;
        });
        return found;
    }

    const Graph& g_;
    std::span<const ColourSet> lists_;
    int b_;
    std::size_t active_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    std::vector<Vertex> order_;
    std::vector<ColourSet> chosen_;
    std::vector<bool> coloured_;
};

} // namespace detail

/// Complete search for an (L,b)-colouring. Returns nullopt only when none
/// exists; throws BudgetExceeded when the node budget runs out first.
inline std::optional<FoldColoring> find_Lb_coloring(const Graph& g, const ListAssignment& lists, int b,
                                                    std::uint64_t node_budget = default_node_budget)
{
    if (b < 1)
        throw InputError("fold must be positive");
    if (lists.size() != g.size())
        throw InputError("list assignment does not cover the graph");
    detail::FoldSearch search(g, lists, b, g.size(), node_budget);
    auto sets = search.run();
    if (!sets)
        return std::nullopt;
    return FoldColoring{b, std::move(*sets)};
}

/// Is the subgraph induced by vertices 0..active-1 (L,b)-colourable?
inline bool prefix_colourable(const Graph& g, std::span<const ColourSet> lists, int b, std::size_t active,
                              std::uint64_t node_budget = default_node_budget)
{
    detail::FoldSearch search(g, lists, b, active, node_budget);
    return search.run().has_value();
}

/// Visits every list assignment on n vertices over colours {0..palette-1}
/// with |L(v)| in [min_size[v], max_size[v]], exactly once per class under
/// colour renaming (the canonical representative). Assignments are built
/// vertex by vertex in restricted-growth form: a list may only introduce the
/// next unused colours. `prefix_dead(depth, lists)` is consulted after each
/// vertex; once it returns true the whole subtree is reported with dead=true,
/// and its leaves skip the canonical filter.
/// `leaf(lists, dead)` returns false to stop. Returns false iff stopped.
template <typename Leaf, typename PrefixDead>
bool for_each_canonical_assignment(std::size_t n, int palette, const std::vector<int>& min_size,
                                   const std::vector<int>& max_size, Leaf&& leaf, PrefixDead&& prefix_dead)
{
    ListAssignment lists(n);
    auto rec = [&](auto&& self, std::size_t v, int used, bool dead) -> bool {
        if (v == n) {
            if (!dead && canonicalize_assignment(std::span<const ColourSet>(lists)) != lists)
                return true;
            return leaf(static_cast<const ListAssignment&>(lists), dead);
        }
        for (int s = min_size[v]; s <= max_size[v]; ++s)
            for (int fresh = 0; fresh <= s; ++fresh) {
                if (used + fresh > palette || s - fresh > used)
                    continue;
                const bool keep_going = for_each_combination(
                    static_cast<std::size_t>(used), static_cast<std::size_t>(s - fresh),
                    [&](const std::vector<std::size_t>& old) {
                        std::vector<Colour> cols;
                        for (auto c : old)
                            cols.push_back(static_cast<Colour>(c));
                        for (int f = 0; f < fresh; ++f)
                            cols.push_back(used + f);
                        lists[v] = ColourSet(std::move(cols));
                        bool d = dead || prefix_dead(v + 1, static_cast<const ListAssignment&>(lists));
                        return self(self, v + 1, used + fresh, d);
                    });
                if (!keep_going)
                    return false;
            }
        return true;
    };
    return rec(rec, 0, 0, false);
}

template <typename Leaf>
bool for_each_canonical_assignment(std::size_t n, int palette, const std::vector<int>& min_size,
                                   const std::vector<int>& max_size, Leaf&& leaf)
{
    return for_each_canonical_assignment(n, palette, min_size, max_size, std::forward<Leaf>(leaf),
                                         [](std::size_t, const ListAssignment&) { return false; });
}

enum class SamplerMode
{
    exhaustive,
    random
};

struct SamplerConfig
{
    SamplerMode mode = SamplerMode::exhaustive;
    int palette_size = 0; ///< 0: default min(|V|*a, palette_cap)
    std::uint64_t sample_count = 1000;
    std::uint64_t seed = 42;
    int palette_cap = 12;
    int size_cap = 30; ///< exhaustive mode requires |V|*a <= size_cap
    std::uint64_t node_budget = default_node_budget;
};

struct ChoosabilityReport
{
    SamplerMode mode = SamplerMode::exhaustive;
    int a = 0;
    int b = 0;
    int palette_size = 0;
    std::uint64_t seed = 0;
    std::uint64_t assignments_checked = 0;
    std::optional<ListAssignment> witness; ///< an a-list assignment with no (L,b)-colouring
    std::string caveat;

    bool choosable() const noexcept { return !witness.has_value(); }
};

/// Searches for an a-list assignment admitting no (L,b)-colouring.
inline ChoosabilityReport check_choosable(const Graph& g, int a, int b, const SamplerConfig& cfg)
{
    if (a < 1 || b < 1)
        throw InputError("a and b must be positive");
    const int n = static_cast<int>(g.size());
    ChoosabilityReport report;
    report.mode = cfg.mode;
    report.a = a;
    report.b = b;
    report.seed = cfg.seed;
    report.palette_size = cfg.palette_size > 0 ? cfg.palette_size : std::min(n * a, cfg.palette_cap);
    if (report.palette_size < a)
        throw InputError("palette of " + std::to_string(report.palette_size) + " colours cannot hold " +
                         std::to_string(a) + "-lists");

    if (cfg.mode == SamplerMode::exhaustive) {
        if (report.palette_size > cfg.palette_cap)
            throw InputError("exhaustive palette " + std::to_string(report.palette_size) + " exceeds cap " +
                             std::to_string(cfg.palette_cap));
        if (n * a > cfg.size_cap)
            throw InputError("exhaustive mode needs |V|*a <= " + std::to_string(cfg.size_cap));
        if (report.palette_size < n * a)
            report.caveat = "choosable over a palette of " + std::to_string(report.palette_size) +
                            " colours only; a full certificate needs " + std::to_string(n * a);
        std::vector<int> sizes(g.size(), a);
        for_each_canonical_assignment(
            g.size(), report.palette_size, sizes, sizes,
            [&](const ListAssignment& lists, bool dead) {
                ++report.assignments_checked;
                if (dead || !find_Lb_coloring(g, lists, b, cfg.node_budget)) {
                    report.witness = lists;
                    return false;
                }
                return true;
            },
            [&](std::size_t depth, const ListAssignment& lists) {
                // an uncolourable prefix stays uncolourable in every completion
                return depth < g.size() && !prefix_colourable(g, lists, b, depth, cfg.node_budget);
            });
        return report;
    }

    Rng rng(cfg.seed);
    for (std::uint64_t s = 0; s < cfg.sample_count; ++s) {
        ListAssignment lists;
        lists.reserve(g.size());
        for (std::size_t v = 0; v < g.size(); ++v)
            lists.push_back(rng.subset(report.palette_size, a));
        ++report.assignments_checked;
        if (!find_Lb_coloring(g, lists, b, cfg.node_budget)) {
            report.witness = std::move(lists);
            break;
        }
    }
    if (!report.witness)
        report.caveat = "no counterexample in " + std::to_string(cfg.sample_count) + " random samples";
    return report;
}

} // namespace thetacol

#endif // THETACOL_ORACLE_HPP
