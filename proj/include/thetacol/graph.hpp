#ifndef THETACOL_GRAPH_HPP
#define THETACOL_GRAPH_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace thetacol
{

using Vertex = std::size_t;

/// Simple undirected graph with named vertices. Vertices are indexed
/// 0..size()-1 in insertion order; names are only used for I/O.
class Graph
{
  public:
    Graph() = default;

    static Graph from_names(const std::vector<std::string>& vertices,
                            const std::vector<std::pair<std::string, std::string>>& edges)
    {
        Graph g;
        for (const auto& name : vertices)
            g.add_vertex(name);
        for (const auto& [a, b] : edges) {
            auto ia = g.index_of(a);
            auto ib = g.index_of(b);
            if (!ia || !ib)
                throw InputError("edge {" + a + "," + b + "} uses an undeclared vertex");
            g.add_edge(*ia, *ib);
        }
        return g;
    }

    Vertex add_vertex(std::string name)
    {
        if (index_.count(name))
            throw InputError("duplicate vertex '" + name + "'");
        index_.emplace(name, names_.size());
        names_.push_back(std::move(name));
        adjacency_.emplace_back();
        return names_.size() - 1;
    }

    void add_edge(Vertex a, Vertex b)
    {
        if (a >= size() || b >= size())
            throw InputError("edge endpoint out of range");
        if (a == b)
            throw InputError("self-loop at '" + names_[a] + "'");
        if (has_edge(a, b))
            throw InputError("parallel edge {" + names_[a] + "," + names_[b] + "}");
        edges_.emplace_back(std::min(a, b), std::max(a, b));
        adjacency_[a].push_back(b);
        adjacency_[b].push_back(a);
    }

    std::size_t size() const noexcept { return names_.size(); }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    const std::string& name(Vertex v) const { return names_.at(v); }
    const std::vector<std::string>& names() const noexcept { return names_; }
    const std::vector<std::pair<Vertex, Vertex>>& edges() const noexcept { return edges_; }
    const std::vector<Vertex>& neighbours(Vertex v) const { return adjacency_.at(v); }
    std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }

    std::optional<Vertex> index_of(const std::string& name) const
    {
        auto it = index_.find(name);
        if (it == index_.end())
            return std::nullopt;
        return it->second;
    }

    bool has_edge(Vertex a, Vertex b) const
    {
        const auto& na = adjacency_.at(a);
        return std::find(na.begin(), na.end(), b) != na.end();
    }

    /// Subgraph induced by `keep` (in the given order).
    Graph induced(const std::vector<Vertex>& keep) const
    {
        Graph g;
        std::vector<std::optional<Vertex>> remap(size());
        for (auto v : keep)
            remap[v] = g.add_vertex(names_.at(v));
        for (const auto& [a, b] : edges_)
            if (remap[a] && remap[b])
                g.add_edge(*remap[a], *remap[b]);
        return g;
    }

    Graph without_edge(std::size_t edge_index) const
    {
        Graph g;
        for (const auto& n : names_)
            g.add_vertex(n);
        for (std::size_t i = 0; i < edges_.size(); ++i)
            if (i != edge_index)
                g.add_edge(edges_[i].first, edges_[i].second);
        return g;
    }

    /// Connected components as sorted vertex lists.
    std::vector<std::vector<Vertex>> components() const
    {
        std::vector<std::vector<Vertex>> out;
        std::vector<bool> seen(size(), false);
        for (Vertex s = 0; s < size(); ++s) {
            if (seen[s])
                continue;
            std::vector<Vertex> comp{s};
            seen[s] = true;
            for (std::size_t i = 0; i < comp.size(); ++i)
                for (auto w : adjacency_[comp[i]])
                    if (!seen[w]) {
                        seen[w] = true;
                        comp.push_back(w);
                    }
            std::sort(comp.begin(), comp.end());
            out.push_back(std::move(comp));
        }
        return out;
    }

    bool connected() const { return size() <= 1 || components().size() == 1; }

  private:
    std::vector<std::string> names_;
    std::vector<std::pair<Vertex, Vertex>> edges_;
    std::vector<std::vector<Vertex>> adjacency_;
    std::map<std::string, Vertex> index_;
};

inline Graph path_graph(std::size_t n)
{
    Graph g;
    for (std::size_t i = 1; i <= n; ++i)
        g.add_vertex("v" + std::to_string(i));
    for (std::size_t i = 1; i < n; ++i)
        g.add_edge(i - 1, i);
    return g;
}

/// Cycle v0 - v1 - ... - v{n-1} - v0.
inline Graph cycle_graph(std::size_t n)
{
    Graph g;
    for (std::size_t i = 0; i < n; ++i)
        g.add_vertex("v" + std::to_string(i));
    for (std::size_t i = 0; i < n; ++i)
        g.add_edge(i, (i + 1) % n);
    return g;
}

} // namespace thetacol

#endif // THETACOL_GRAPH_HPP
