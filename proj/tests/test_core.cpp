#include <gtest/gtest.h>

#include "thetacol/coloring.hpp"
#include "thetacol/rng.hpp"
#include "thetacol/theta.hpp"

using namespace thetacol;

namespace
{

Graph k2()
{
    Graph g;
    g.add_vertex("a");
    g.add_vertex("b");
    g.add_edge(0, 1);
    return g;
}

// Straight transcription of the three conditions, used to cross-check
// verify_coloring.
bool naive_valid(const Graph& g, const ListAssignment& L, int b, const FoldColoring& phi)
{
    for (Vertex v = 0; v < g.size(); ++v) {
        if (static_cast<int>(phi.assignment[v].size()) != b)
            return false;
        for (auto c : phi.assignment[v])
            if (!L[v].contains(c))
                return false;
    }
    for (Vertex v = 0; v < g.size(); ++v)
        for (auto w : g.neighbours(v))
            for (auto c : phi.assignment[v])
                if (phi.assignment[w].contains(c))
                    return false;
    return true;
}

} // namespace

TEST(ColourSet, SetAlgebra)
{
    const ColourSet a{1, 2, 5};
    const ColourSet b{2, 3};
    EXPECT_EQ(a - b, (ColourSet{1, 5}));
    EXPECT_EQ(a & b, (ColourSet{2}));
    EXPECT_EQ(a | b, (ColourSet{1, 2, 3, 5}));
    EXPECT_TRUE((ColourSet{2}).is_subset_of(a));
    EXPECT_TRUE((ColourSet{1}).disjoint(b));
    EXPECT_EQ(a.smallest(2), (ColourSet{1, 2}));
    EXPECT_EQ(ColourSet::range(0, 3), (ColourSet{0, 1, 2}));
    EXPECT_EQ(to_string(a), "{1,2,5}");
}

TEST(ColourSet, RejectsNegativeColours) { EXPECT_THROW(ColourSet({-1, 2}), InputError); }

TEST(Graph, RejectsLoopsAndParallelEdges)
{
    Graph g = k2();
    EXPECT_THROW(g.add_edge(0, 1), InputError);
    EXPECT_THROW(g.add_edge(1, 1), InputError);
    EXPECT_THROW(g.add_vertex("a"), InputError);
}

TEST(Theta, CountsForSmallShapes)
{
    const ThetaGraph t444({4, 4, 4});
    EXPECT_EQ(t444.graph().size(), 11u);
    EXPECT_EQ(t444.graph().edge_count(), 12u);
    const ThetaGraph t2222({2, 2, 2, 2});
    EXPECT_EQ(t2222.graph().size(), 6u);
    EXPECT_EQ(t2222.graph().edge_count(), 8u);
    EXPECT_THROW(ThetaGraph({1, 1, 3}), InputError);
    EXPECT_THROW(ThetaGraph({4, 4}), InputError);
}

TEST(Theta, CountsMatchFormulaForAllShortLengths)
{
    for (int a = 1; a <= 9; ++a)
        for (int b = std::max(a, 2); b <= 9; ++b)
            for (int c = b; c <= 9; ++c) {
                const ThetaGraph t({a, b, c});
                EXPECT_EQ(t.graph().size(), static_cast<std::size_t>(2 + (a - 1) + (b - 1) + (c - 1)));
                EXPECT_EQ(t.graph().edge_count(), static_cast<std::size_t>(a + b + c));
            }
}

TEST(Theta, NamingAndPathOrder)
{
    const ThetaGraph t({3, 4, 2});
    EXPECT_EQ(t.graph().name(0), "u");
    EXPECT_EQ(t.graph().name(1), "v");
    ASSERT_EQ(t.path(1).size(), 3u);
    EXPECT_EQ(t.graph().name(t.path(1)[0]), "p1_1");
    EXPECT_TRUE(t.graph().has_edge(ThetaGraph::hub_u, t.path(1).front()));
    EXPECT_TRUE(t.graph().has_edge(t.path(1).back(), ThetaGraph::hub_v));
}

TEST(Theta, RecognisesRelabelledTheta)
{
    const ThetaGraph t({2, 3, 5});
    // rebuild with names and insertion order scrambled
    const auto& src = t.graph();
    std::vector<std::string> names;
    for (Vertex w = src.size(); w-- > 0;)
        names.push_back("x" + src.name(w));
    std::vector<std::pair<std::string, std::string>> edges;
    for (const auto& [a, b] : src.edges())
        edges.emplace_back("x" + src.name(b), "x" + src.name(a));
    const Graph g = Graph::from_names(names, edges);
    const auto emb = recognize_theta(g);
    ASSERT_TRUE(emb);
    auto ls = emb->theta.lengths();
    std::sort(ls.begin(), ls.end());
    EXPECT_EQ(ls, (std::vector<int>{2, 3, 5}));
    for (const auto& [a, b] : emb->theta.graph().edges())
        EXPECT_TRUE(g.has_edge(emb->to_graph[a], emb->to_graph[b]));
    EXPECT_FALSE(recognize_theta(cycle_graph(6)));
    EXPECT_FALSE(recognize_theta(path_graph(4)));
}

TEST(Verify, SpecExamples)
{
    const Graph g = k2();
    EXPECT_TRUE(verify_coloring(g, {{1, 2}, {3, 4}}, 1, {1, {{1}, {3}}}).ok());
    const auto bad = verify_coloring(g, {{1, 2}, {1, 2}}, 1, {1, {{1}, {1}}});
    ASSERT_EQ(bad.violations.size(), 1u);
    EXPECT_EQ(bad.violations[0].kind, Violation::Kind::edge);
}

TEST(Verify, FlagsSizeAndContainment)
{
    const Graph g = k2();
    const auto r = verify_coloring(g, {{1, 2}, {3, 4}}, 1, {1, {{1, 2}, {5}}});
    std::vector<Violation::Kind> kinds;
    for (const auto& v : r.violations)
        kinds.push_back(v.kind);
    EXPECT_NE(std::find(kinds.begin(), kinds.end(), Violation::Kind::size), kinds.end());
    EXPECT_NE(std::find(kinds.begin(), kinds.end(), Violation::Kind::containment), kinds.end());
}

TEST(Verify, AgreesWithNaiveCheck)
{
    Rng rng(11);
    for (int s = 0; s < 100; ++s) {
        const Graph g = cycle_graph(static_cast<std::size_t>(rng.between(3, 6)));
        const int b = rng.between(1, 2);
        ListAssignment L;
        FoldColoring phi{b, {}};
        for (Vertex v = 0; v < g.size(); ++v) {
            L.push_back(rng.subset(6, 3));
            phi.assignment.push_back(rng.subset(6, rng.between(b, b + 1)));
        }
        EXPECT_EQ(verify_coloring(g, L, b, phi).ok(), naive_valid(g, L, b, phi));
    }
}

TEST(Canonical, SpecExamples)
{
    const Graph g = k2();
    EXPECT_EQ(canonicalize_assignment(g, {{7, 9}, {9, 3}}), (ListAssignment{{0, 1}, {1, 2}}));
    EXPECT_EQ(canonicalize_assignment(g, {{1, 2}, {1, 2}}), (ListAssignment{{0, 1}, {0, 1}}));
}

TEST(Canonical, InvariantUnderBijectionsAndIdempotent)
{
    Rng rng(5);
    for (int s = 0; s < 200; ++s) {
        const std::size_t n = static_cast<std::size_t>(rng.between(1, 6));
        ListAssignment L;
        for (std::size_t v = 0; v < n; ++v)
            L.push_back(rng.subset(8, rng.between(0, 4)));
        std::vector<Colour> sigma(20);
        std::iota(sigma.begin(), sigma.end(), 0);
        for (std::size_t i = sigma.size(); i > 1; --i)
            std::swap(sigma[i - 1], sigma[rng.below(i)]);
        ListAssignment moved;
        for (const auto& l : L) {
            std::vector<Colour> cs;
            for (auto c : l)
                cs.push_back(sigma[static_cast<std::size_t>(c)] + 3);
            moved.emplace_back(cs);
        }
        const auto c1 = canonicalize_assignment(std::span<const ColourSet>(L));
        EXPECT_EQ(c1, canonicalize_assignment(std::span<const ColourSet>(moved)));
        EXPECT_EQ(c1, canonicalize_assignment(std::span<const ColourSet>(c1)));
    }
}
