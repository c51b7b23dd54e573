#ifndef THETACOL_CLASSIFIER_HPP
#define THETACOL_CLASSIFIER_HPP

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "graph.hpp"
#include "theta.hpp"

namespace thetacol
{

/// Repeatedly deletes the lowest-index vertex of degree 1, then drops
/// isolated vertices. A forest collapses to a single vertex, its first
/// surviving one.
inline Graph core_of(const Graph& g)
{
    std::vector<std::size_t> deg(g.size());
    std::vector<bool> alive(g.size(), true);
    for (Vertex w = 0; w < g.size(); ++w)
        deg[w] = g.degree(w);
    for (bool changed = true; changed;) {
        changed = false;
        for (Vertex w = 0; w < g.size(); ++w)
            if (alive[w] && deg[w] == 1) {
                alive[w] = false;
                for (auto x : g.neighbours(w))
                    if (alive[x])
                        --deg[x];
                changed = true;
                break;
            }
    }
    std::vector<Vertex> keep;
    for (Vertex w = 0; w < g.size(); ++w)
        if (alive[w] && deg[w] > 0)
            keep.push_back(w);
    if (keep.empty())
        for (Vertex w = 0; w < g.size(); ++w)
            if (alive[w]) {
                keep.push_back(w);
                break;
            }
    return g.induced(keep);
}

enum class CriticalFamily
{
    none,
    odd_cycle,
    two_cycles_path,
    two_cycles_vertex,
    theta_even,
    theta_odd,
    theta_2222t
};

inline const char* to_string(CriticalFamily f)
{
    switch (f) {
    case CriticalFamily::none:
        return "None";
    case CriticalFamily::odd_cycle:
        return "OddCycle";
    case CriticalFamily::two_cycles_path:
        return "TwoCyclesPath";
    case CriticalFamily::two_cycles_vertex:
        return "TwoCyclesVertex";
    case CriticalFamily::theta_even:
        return "ThetaEven";
    case CriticalFamily::theta_odd:
        return "ThetaOdd";
    case CriticalFamily::theta_2222t:
        return "Theta2222t";
    }
    return "?";
}

namespace detail
{

inline bool all_degree(const Graph& g, std::size_t d)
{
    for (Vertex w = 0; w < g.size(); ++w)
        if (g.degree(w) != d)
            return false;
    return true;
}

inline std::vector<int> sorted_theta_lengths(const Graph& g)
{
    auto emb = recognize_theta(g);
    if (!emb)
        return {};
    auto ls = emb->theta.lengths();
    std::sort(ls.begin(), ls.end());
    return ls;
}

// Walks from `from` through `first` along degree-2 vertices until a vertex
// of another degree; returns (end vertex, number of edges walked).
inline std::pair<Vertex, int> walk(const Graph& g, Vertex from, Vertex first)
{
    Vertex prev = from;
    Vertex cur = first;
    int length = 1;
    while (g.degree(cur) == 2) {
        const auto& nb = g.neighbours(cur);
        const Vertex next = nb[0] == prev ? nb[1] : nb[0];
        prev = cur;
        cur = next;
        ++length;
    }
    return {cur, length};
}

// A connected graph with core of this shape is 2-choosable.
inline bool core_component_2_choosable(const Graph& c)
{
    if (c.size() == 1)
        return true;
    if (all_degree(c, 2))
        return c.size() % 2 == 0;
    const auto ls = sorted_theta_lengths(c);
    return ls.size() == 3 && ls[0] == 2 && ls[1] == 2 && ls[2] % 2 == 0;
}

} // namespace detail

/// Every component's core is K_1, an even cycle or Θ_{2,2,2p}.
inline bool is_2_choosable(const Graph& g)
{
    for (const auto& comp : g.components()) {
        const Graph core = core_of(g.induced(comp));
        if (!core.connected() || !detail::core_component_2_choosable(core))
            return false;
    }
    return true;
}

struct Classification
{
    Graph core;
    bool two_choosable = false;
    bool three_choice_critical = false;
    CriticalFamily family = CriticalFamily::none;
};

/// Matches g against the five families of 3-choice-critical graphs.
/// Dispatch is by cycle rank and degree pattern before the exact check.
inline CriticalFamily critical_family(const Graph& g)
{
    if (g.size() < 3 || !g.connected())
        return CriticalFamily::none;
    std::size_t deg3 = 0, deg4 = 0, other = 0;
    for (Vertex w = 0; w < g.size(); ++w) {
        const auto d = g.degree(w);
        if (d < 2)
            return CriticalFamily::none;
        d == 2 ? void() : d == 3 ? void(++deg3) : d == 4 ? void(++deg4) : void(++other);
    }
    const long rank = static_cast<long>(g.edge_count()) - static_cast<long>(g.size()) + 1;

    if (rank == 1)
        return g.size() % 2 == 1 ? CriticalFamily::odd_cycle : CriticalFamily::none;

    if (rank == 2 && deg4 == 1 && deg3 == 0 && other == 0) {
        Vertex hub = 0;
        while (g.degree(hub) != 4)
            ++hub;
        std::vector<int> loops;
        for (auto w : g.neighbours(hub)) {
            auto [end, len] = detail::walk(g, hub, w);
            if (end != hub)
                return CriticalFamily::none;
            loops.push_back(len);
        }
        // each cycle is walked once in each direction
        for (int len : loops)
            if (len % 2 == 1)
                return CriticalFamily::none;
        return CriticalFamily::two_cycles_vertex;
    }

    if (rank == 2 && deg3 == 2 && deg4 == 0 && other == 0) {
        const auto ls = detail::sorted_theta_lengths(g);
        if (!ls.empty()) {
            if (ls[0] % 2 == 0 && ls[1] % 2 == 0 && ls[2] % 2 == 0)
                return ls[1] >= 4 ? CriticalFamily::theta_even : CriticalFamily::none;
            if (ls[0] % 2 == 1 && ls[1] % 2 == 1 && ls[2] % 2 == 1)
                return ls[1] >= 3 ? CriticalFamily::theta_odd : CriticalFamily::none;
            return CriticalFamily::none;
        }
        // two cycles joined by a path: from each branch vertex one walk
        // reaches the other branch vertex, the other two close a cycle
        for (Vertex a = 0; a < g.size(); ++a) {
            if (g.degree(a) != 3)
                continue;
            int bridges = 0;
            for (auto w : g.neighbours(a)) {
                auto [end, len] = detail::walk(g, a, w);
                if (end != a)
                    ++bridges;
                else if (len % 2 == 1)
                    return CriticalFamily::none;
            }
            if (bridges != 1)
                return CriticalFamily::none;
        }
        return CriticalFamily::two_cycles_path;
    }

    if (rank == 3 && deg4 == 2 && deg3 == 0 && other == 0) {
        const auto ls = detail::sorted_theta_lengths(g);
        if (ls.size() == 4 && ls[0] == 2 && ls[1] == 2 && ls[2] == 2 && ls[3] % 2 == 0)
            return CriticalFamily::theta_2222t;
    }
    return CriticalFamily::none;
}

inline Classification is_3_choice_critical(const Graph& g)
{
    Classification c;
    c.core = core_of(g);
    c.two_choosable = is_2_choosable(g);
    c.family = critical_family(g);
    c.three_choice_critical = c.family != CriticalFamily::none;
    return c;
}

/// A named member of one of the critical families.
struct FamilyMember
{
    CriticalFamily family;
    std::string label;
    Graph graph;
};

namespace detail
{

inline void add_cycle_through(Graph& g, Vertex anchor, int length, const std::string& tag)
{
    Vertex prev = anchor;
    for (int i = 1; i < length; ++i) {
        const Vertex w = g.add_vertex(tag + std::to_string(i));
        g.add_edge(prev, w);
        prev = w;
    }
    g.add_edge(prev, anchor);
}

} // namespace detail

/// Even cycles of lengths c1 and c2 joined by a path with `bridge` edges.
inline Graph two_cycles_joined(int c1, int c2, int bridge)
{
    Graph g;
    const Vertex a = g.add_vertex("a");
    detail::add_cycle_through(g, a, c1, "x");
    Vertex prev = a;
    for (int i = 1; i < bridge; ++i) {
        const Vertex w = g.add_vertex("m" + std::to_string(i));
        g.add_edge(prev, w);
        prev = w;
    }
    const Vertex b = g.add_vertex("b");
    g.add_edge(prev, b);
    detail::add_cycle_through(g, b, c2, "y");
    return g;
}

/// Cycles of lengths c1 and c2 sharing exactly one vertex.
inline Graph two_cycles_sharing(int c1, int c2)
{
    Graph g;
    const Vertex a = g.add_vertex("a");
    detail::add_cycle_through(g, a, c1, "x");
    detail::add_cycle_through(g, a, c2, "y");
    return g;
}

/// Every member of the five critical families with at most max_vertices
/// vertices, in a fixed order.
inline std::vector<FamilyMember> critical_family_members(int max_vertices)
{
    std::vector<FamilyMember> out;
    auto label = [](const std::string& head, std::initializer_list<int> xs) {
        std::string s = head + "(";
        bool first = true;
        for (int x : xs) {
            s += (first ? "" : ",") + std::to_string(x);
            first = false;
        }
        return s + ")";
    };
    for (int n = 3; n <= max_vertices; n += 2)
        out.push_back({CriticalFamily::odd_cycle, label("C", {n}), cycle_graph(static_cast<std::size_t>(n))});
    for (int c1 = 4; c1 <= max_vertices; c1 += 2)
        for (int c2 = c1; c1 + c2 <= max_vertices; c2 += 2)
            for (int b = 1; c1 + c2 + b - 1 <= max_vertices; ++b)
                out.push_back({CriticalFamily::two_cycles_path, label("dumbbell", {c1, c2, b}),
                               two_cycles_joined(c1, c2, b)});
    for (int c1 = 4; c1 <= max_vertices; c1 += 2)
        for (int c2 = c1; c1 + c2 - 1 <= max_vertices; c2 += 2)
            out.push_back({CriticalFamily::two_cycles_vertex, label("figure8", {c1, c2}), two_cycles_sharing(c1, c2)});
    // a theta with lengths k has sum(k) - 1 vertices
    for (int a = 2; a <= max_vertices; a += 2)
        for (int b = std::max(a, 4); a + b <= max_vertices; b += 2)
            for (int c = b; a + b + c - 1 <= max_vertices; c += 2)
                out.push_back({CriticalFamily::theta_even, label("theta", {a, b, c}), ThetaGraph({a, b, c}).graph()});
    for (int a = 1; a <= max_vertices; a += 2)
        for (int b = std::max(a, 3); a + b <= max_vertices; b += 2)
            for (int c = b; a + b + c - 1 <= max_vertices; c += 2)
                out.push_back({CriticalFamily::theta_odd, label("theta", {a, b, c}), ThetaGraph({a, b, c}).graph()});
    for (int t = 1; 2 * t + 4 <= max_vertices; ++t)
        out.push_back({CriticalFamily::theta_2222t, label("theta", {2, 2, 2, 2 * t}),
                       ThetaGraph({2, 2, 2, 2 * t}).graph()});
    return out;
}

} // namespace thetacol

#endif // THETACOL_CLASSIFIER_HPP
