#ifndef THETACOL_COLORING_HPP
#define THETACOL_COLORING_HPP

#include <algorithm>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "colour_set.hpp"
#include "graph.hpp"

namespace thetacol
{

/// L(v) for every vertex, indexed like the graph's vertices.
using ListAssignment = std::vector<ColourSet>;

/// phi(v) for every vertex; every set is meant to have exactly `fold` colours.
struct FoldColoring
{
    int fold = 1;
    std::vector<ColourSet> assignment;

    friend bool operator==(const FoldColoring&, const FoldColoring&) = default;
};

struct Violation
{
    enum class Kind
    {
        size,
        containment,
        edge,
        coverage
    };
    Kind kind;
    Vertex a = 0;
    Vertex b = 0;
    std::string detail;
};

inline const char* to_string(Violation::Kind k)
{
    switch (k) {
    case Violation::Kind::size:
        return "size";
    case Violation::Kind::containment:
        return "containment";
    case Violation::Kind::edge:
        return "edge";
    case Violation::Kind::coverage:
        return "coverage";
    }
    return "?";
}

struct VerificationReport
{
    std::vector<Violation> violations;
    bool ok() const noexcept { return violations.empty(); }
};

/// Lists every way in which phi fails to be an (L,b)-colouring of g.
inline VerificationReport verify_coloring(const Graph& g, const ListAssignment& lists, int b, const FoldColoring& phi)
{
    VerificationReport report;
    if (phi.assignment.size() != g.size() || lists.size() != g.size()) {
        report.violations.push_back({Violation::Kind::coverage, 0, 0,
                                     "colouring covers " + std::to_string(phi.assignment.size()) + " vertices, lists " +
                                         std::to_string(lists.size()) + ", graph has " + std::to_string(g.size())});
        return report;
    }
    if (phi.fold != b)
        report.violations.push_back({Violation::Kind::size, 0, 0,
                                     "fold " + std::to_string(phi.fold) + " != requested " + std::to_string(b)});
    for (Vertex v = 0; v < g.size(); ++v) {
        const auto& set = phi.assignment[v];
        if (set.count() != b)
            report.violations.push_back({Violation::Kind::size, v, v,
                                         g.name(v) + " has " + std::to_string(set.size()) + " colours"});
        if (!set.is_subset_of(lists[v]))
            report.violations.push_back({Violation::Kind::containment, v, v,
                                         g.name(v) + ": " + to_string(set) + " not within " + to_string(lists[v])});
    }
    for (const auto& [a, c] : g.edges())
        if (!phi.assignment[a].disjoint(phi.assignment[c]))
            report.violations.push_back({Violation::Kind::edge, a, c,
                                         g.name(a) + "-" + g.name(c) + " share " +
                                             to_string(phi.assignment[a] & phi.assignment[c])});
    return report;
}

/// Canonical representative of L under colour renamings. A colour is
/// characterised by the ascending list of vertices whose lists contain it;
/// colours are renamed 0,1,... in lexicographic order of those lists, so
/// two assignments differing by a colour bijection map to the same result.
inline ListAssignment canonicalize_assignment(std::span<const ColourSet> lists)
{
    std::map<Colour, std::vector<std::size_t>> membership;
    for (std::size_t v = 0; v < lists.size(); ++v)
        for (auto c : lists[v])
            membership[c].push_back(v);
    std::vector<std::vector<std::size_t>> keys;
    keys.reserve(membership.size());
    for (auto& [c, where] : membership)
        keys.push_back(std::move(where));
    std::sort(keys.begin(), keys.end());

    std::vector<std::vector<Colour>> out(lists.size());
    for (std::size_t name = 0; name < keys.size(); ++name)
        for (auto v : keys[name])
            out[v].push_back(static_cast<Colour>(name));
    ListAssignment result;
    result.reserve(lists.size());
    for (auto& o : out)
        result.emplace_back(std::move(o));
    return result;
}

inline ListAssignment canonicalize_assignment(const Graph& g, const ListAssignment& lists)
{
    if (lists.size() != g.size())
        throw InputError("list assignment does not match graph size");
    return canonicalize_assignment(std::span<const ColourSet>(lists));
}

/// All colours that occur in some list.
inline ColourSet palette_of(std::span<const ColourSet> lists)
{
    ColourSet all;
    for (const auto& l : lists)
        all = all | l;
    return all;
}

} // namespace thetacol

#endif // THETACOL_COLORING_HPP
