#ifndef THETACOL_THETA_HPP
#define THETACOL_THETA_HPP

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "graph.hpp"

namespace thetacol
{

/// Generalized theta graph: hubs u, v joined by q >= 3 internally disjoint
/// paths of lengths k_0, ..., k_{q-1}. Vertex names are fixed: "u", "v" and
/// "p{i}_{j}" for the j-th (1-based, counted from u) internal vertex of path i.
class ThetaGraph
{
  public:
    static constexpr Vertex hub_u = 0;
    static constexpr Vertex hub_v = 1;

    explicit ThetaGraph(std::vector<int> lengths)
        : lengths_(std::move(lengths))
    {
        if (lengths_.size() < 3)
            throw InputError("a theta graph needs at least 3 paths");
        if (std::any_of(lengths_.begin(), lengths_.end(), [](int k) { return k < 1; }))
            throw InputError("theta path lengths must be positive");
        if (std::count(lengths_.begin(), lengths_.end(), 1) > 1)
            throw InputError("at most one theta path may have length 1 (parallel edges)");

        graph_.add_vertex("u");
        graph_.add_vertex("v");
        for (std::size_t i = 0; i < lengths_.size(); ++i) {
            std::vector<Vertex> path;
            for (int j = 1; j < lengths_[i]; ++j)
                path.push_back(graph_.add_vertex("p" + std::to_string(i) + "_" + std::to_string(j)));
            Vertex prev = hub_u;
            for (auto w : path) {
                graph_.add_edge(prev, w);
                prev = w;
            }
            graph_.add_edge(prev, hub_v);
            paths_.push_back(std::move(path));
        }
    }

    const std::vector<int>& lengths() const noexcept { return lengths_; }
    const Graph& graph() const noexcept { return graph_; }
    std::size_t path_count() const noexcept { return paths_.size(); }
    /// Internal vertices of path i, ordered from the u side to the v side.
    const std::vector<Vertex>& path(std::size_t i) const { return paths_.at(i); }
    /// n_i, the number of internal vertices of path i.
    int internal_size(std::size_t i) const { return static_cast<int>(paths_.at(i).size()); }

  private:
    std::vector<int> lengths_;
    Graph graph_;
    std::vector<std::vector<Vertex>> paths_;
};

inline ThetaGraph build_theta(std::vector<int> lengths) { return ThetaGraph(std::move(lengths)); }

/// A theta found inside an arbitrary graph: `to_graph[w]` is the graph
/// vertex playing theta vertex w.
struct ThetaEmbedding
{
    ThetaGraph theta;
    std::vector<Vertex> to_graph;
};

/// Recognises g as a theta graph: two hubs of equal degree q >= 3, every
/// other vertex of degree 2, and each walk leaving one hub reaching the
/// other. Paths keep the order of the first hub's adjacency list.
inline std::optional<ThetaEmbedding> recognize_theta(const Graph& g)
{
    if (g.size() < 2 || !g.connected())
        return std::nullopt;
    std::vector<Vertex> hubs;
    for (Vertex w = 0; w < g.size(); ++w)
        if (g.degree(w) != 2)
            hubs.push_back(w);
    if (hubs.size() != 2 || g.degree(hubs[0]) < 3 || g.degree(hubs[0]) != g.degree(hubs[1]))
        return std::nullopt;
    const Vertex u = hubs[0];
    const Vertex v = hubs[1];
    std::vector<int> lengths;
    std::vector<Vertex> order{u, v};
    for (auto first : g.neighbours(u)) {
        Vertex prev = u;
        Vertex cur = first;
        int length = 1;
        while (cur != u && cur != v) {
            order.push_back(cur);
            const auto& nb = g.neighbours(cur);
            const Vertex next = nb[0] == prev ? nb[1] : nb[0];
            prev = cur;
            cur = next;
            ++length;
        }
        if (cur != v)
            return std::nullopt;
        lengths.push_back(length);
    }
    if (std::count(lengths.begin(), lengths.end(), 1) > 1)
        return std::nullopt;
    return ThetaEmbedding{ThetaGraph(std::move(lengths)), std::move(order)};
}

} // namespace thetacol

#endif // THETACOL_THETA_HPP
