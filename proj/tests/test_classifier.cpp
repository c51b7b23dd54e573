#include <gtest/gtest.h>

#include "thetacol/classifier.hpp"
#include "thetacol/oracle.hpp"
#include "thetacol/rng.hpp"

using namespace thetacol;

namespace
{

Graph with_pendant_tree(Graph g, Vertex at, int extra)
{
    Vertex prev = at;
    for (int i = 0; i < extra; ++i) {
        const Vertex w = g.add_vertex("t" + std::to_string(i));
        g.add_edge(prev, w);
        if (i % 2 == 0)
            prev = w;
    }
    return g;
}

Graph without_edge(const Graph& g, std::size_t skip)
{
    std::vector<std::pair<std::string, std::string>> edges;
    for (std::size_t e = 0; e < g.edges().size(); ++e)
        if (e != skip)
            edges.emplace_back(g.name(g.edges()[e].first), g.name(g.edges()[e].second));
    return Graph::from_names(g.names(), edges);
}

bool oracle_2_choosable(const Graph& g, int palette)
{
    SamplerConfig cfg;
    cfg.palette_size = palette;
    cfg.palette_cap = palette;
    return check_choosable(g, 2, 1, cfg).choosable();
}

Graph random_connected(Rng& rng, std::size_t n)
{
    Graph g;
    for (std::size_t i = 0; i < n; ++i)
        g.add_vertex("r" + std::to_string(i));
    for (Vertex w = 1; w < n; ++w)
        g.add_edge(w, rng.below(w));
    const int extra = rng.between(0, 3);
    for (int e = 0; e < extra; ++e) {
        const Vertex a = rng.below(n);
        const Vertex b = rng.below(n);
        if (a != b && !g.has_edge(a, b))
            g.add_edge(a, b);
    }
    return g;
}

} // namespace

TEST(Core, Examples)
{
    const Graph c6p = with_pendant_tree(cycle_graph(6), 0, 1);
    const Graph core = core_of(c6p);
    EXPECT_EQ(core.size(), 6u);
    EXPECT_EQ(core.edge_count(), 6u);

    const Graph tree = with_pendant_tree(path_graph(4), 2, 3);
    EXPECT_EQ(core_of(tree).size(), 1u);
    EXPECT_EQ(core_of(tree).edge_count(), 0u);

    const Graph t224 = ThetaGraph({2, 2, 4}).graph();
    EXPECT_EQ(core_of(t224).size(), t224.size());
    EXPECT_EQ(core_of(t224).edge_count(), t224.edge_count());
}

TEST(TwoChoosable, Examples)
{
    EXPECT_TRUE(is_2_choosable(ThetaGraph({2, 2, 4}).graph()));
    EXPECT_TRUE(is_2_choosable(ThetaGraph({2, 2, 6}).graph()));
    EXPECT_FALSE(is_2_choosable(ThetaGraph({2, 2, 2, 2}).graph()));
    EXPECT_TRUE(is_2_choosable(with_pendant_tree(cycle_graph(8), 3, 4)));
    EXPECT_FALSE(is_2_choosable(cycle_graph(5)));
    EXPECT_FALSE(is_2_choosable(ThetaGraph({2, 4, 4}).graph()));
    EXPECT_TRUE(is_2_choosable(path_graph(5)));
}

TEST(Critical, Examples)
{
    const auto c5 = is_3_choice_critical(cycle_graph(5));
    EXPECT_TRUE(c5.three_choice_critical);
    EXPECT_EQ(c5.family, CriticalFamily::odd_cycle);

    const auto t444 = is_3_choice_critical(ThetaGraph({4, 4, 4}).graph());
    EXPECT_TRUE(t444.three_choice_critical);
    EXPECT_EQ(t444.family, CriticalFamily::theta_even);

    const auto t224 = is_3_choice_critical(ThetaGraph({2, 2, 4}).graph());
    EXPECT_FALSE(t224.three_choice_critical);
    EXPECT_TRUE(t224.two_choosable);

    EXPECT_EQ(critical_family(ThetaGraph({1, 3, 3}).graph()), CriticalFamily::theta_odd);
    EXPECT_EQ(critical_family(ThetaGraph({1, 3, 5}).graph()), CriticalFamily::theta_odd);
    EXPECT_EQ(critical_family(ThetaGraph({3, 3, 4}).graph()), CriticalFamily::none);
    EXPECT_EQ(critical_family(ThetaGraph({2, 2, 2, 4}).graph()), CriticalFamily::theta_2222t);
    EXPECT_EQ(critical_family(ThetaGraph({2, 2, 4, 4}).graph()), CriticalFamily::none);
    EXPECT_EQ(critical_family(two_cycles_joined(4, 6, 2)), CriticalFamily::two_cycles_path);
    EXPECT_EQ(critical_family(two_cycles_joined(4, 5, 2)), CriticalFamily::none);
    EXPECT_EQ(critical_family(two_cycles_sharing(4, 4)), CriticalFamily::two_cycles_vertex);
    EXPECT_EQ(critical_family(two_cycles_sharing(4, 3)), CriticalFamily::none);
    EXPECT_EQ(critical_family(cycle_graph(6)), CriticalFamily::none);
    // a pendant vertex is never part of a critical graph
    EXPECT_EQ(critical_family(with_pendant_tree(cycle_graph(5), 0, 1)), CriticalFamily::none);
}

TEST(Critical, GeneratedMembersClassifyAsTheirFamily)
{
    const auto members = critical_family_members(12);
    EXPECT_EQ(members.size(), 36u);
    for (const auto& fm : members) {
        EXPECT_EQ(critical_family(fm.graph), fm.family) << fm.label;
        EXPECT_FALSE(is_2_choosable(fm.graph)) << fm.label;
    }
}

// Criticality against the exact oracle: each small member has a 2-list
// witness, and deleting any one edge leaves a graph with no witness over a
// small palette.
TEST(Critical, SmallMembersAreMinimal)
{
    for (const auto& fm : critical_family_members(7)) {
        const int palette = fm.family == CriticalFamily::theta_2222t ? 4 : 3;
        EXPECT_FALSE(oracle_2_choosable(fm.graph, palette)) << fm.label;
        for (std::size_t e = 0; e < fm.graph.edge_count(); ++e) {
            const Graph h = without_edge(fm.graph, e);
            EXPECT_TRUE(is_2_choosable(h)) << fm.label << " minus edge " << e;
            EXPECT_TRUE(oracle_2_choosable(h, 4))
                << fm.label << " minus edge " << e;
        }
    }
}

TEST(TwoChoosable, AgreesWithOracleOnSmallGraphs)
{
    Rng rng(83);
    for (int s = 0; s < 40; ++s) {
        const Graph g = random_connected(rng, static_cast<std::size_t>(rng.between(3, 5)));
        EXPECT_EQ(is_2_choosable(g), oracle_2_choosable(g, 2 * static_cast<int>(g.size())));
    }
}
