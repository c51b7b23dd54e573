#include <gtest/gtest.h>

#include "thetacol/json_io.hpp"
#include "thetacol/oracle.hpp"
#include "thetacol/rng.hpp"
#include "thetacol/theta_solver.hpp"

using namespace thetacol;

namespace
{

ListAssignment sized_lists(Rng& rng, const ThetaGraph& theta, int hub, int first, int other, int palette)
{
    ListAssignment L;
    for (Vertex w = 0; w < theta.graph().size(); ++w) {
        bool is_first = false;
        for (std::size_t i = 0; i < theta.path_count(); ++i)
            is_first = is_first || theta.path(i).front() == w;
        L.push_back(rng.subset(palette, w < 2 ? hub : is_first ? first : other));
    }
    return L;
}

void expect_valid(const ThetaGraph& theta, const ListAssignment& L, int m, const FoldColoring& phi)
{
    const auto r = verify_coloring(theta.graph(), L, m, phi);
    EXPECT_TRUE(r.ok()) << r.violations.size() << " violations";
}

} // namespace

TEST(EvenSolver, IdenticalListsOfSize2mPlus1)
{
    for (int m = 1; m <= 3; ++m) {
        const ThetaGraph theta({4, 4, 6});
        const ListAssignment L(theta.graph().size(), ColourSet::range(0, 2 * m + 1));
        const auto r = solve_even_theta_detailed(theta, L, m);
        EXPECT_EQ(r.certificate, Certificate::theorem_even);
        ASSERT_TRUE(r.coloring);
        expect_valid(theta, L, m, *r.coloring);
    }
}

TEST(EvenSolver, FixtureInstance)
{
    const std::string dir = THETACOL_TEST_DATA;
    const ThetaGraph theta = theta_from_json(load_json_file(dir + "/theta444.json"));
    const auto L = lists_from_json(load_json_file(dir + "/theta444_lists.json"), theta.graph());
    ASSERT_TRUE(find_Lb_coloring(theta.graph(), L, 1));
    const auto r = solve_even_theta_detailed(theta, L, 1);
    ASSERT_TRUE(r.pair);
    ASSERT_TRUE(r.conditions);
    EXPECT_TRUE(r.conditions->all_ok());
    expect_valid(theta, L, 1, *r.coloring);
}

TEST(EvenSolver, RejectsShortLists)
{
    const ThetaGraph theta({4, 4, 4});
    ListAssignment L(theta.graph().size(), ColourSet::range(0, 3));
    L[ThetaGraph::hub_u] = {0};
    EXPECT_THROW(solve_even_theta(theta, L, 1), InputError);
    L[ThetaGraph::hub_u] = {0, 1};
    L[theta.path(0)[1]] = {0, 1};
    EXPECT_THROW(solve_even_theta(theta, L, 1), InputError);
    EXPECT_THROW(solve_even_theta(ThetaGraph({2, 4, 4}), ListAssignment(8, ColourSet::range(0, 3)), 1), InputError);
}

TEST(EvenSolver, RandomMinimumSizeLists)
{
    Rng rng(59);
    const std::vector<std::vector<int>> shapes{{4, 4, 4}, {4, 6, 4}, {6, 6, 8}};
    for (int s = 0; s < 150; ++s) {
        const int m = rng.between(1, 2);
        const ThetaGraph theta(shapes[rng.below(shapes.size())]);
        const auto L = sized_lists(rng, theta, 2 * m, 2 * m, 2 * m + 1, 2 * m + 1 + rng.between(0, 4));
        const auto r = solve_even_theta_detailed(theta, L, m);
        expect_valid(theta, L, m, *r.coloring);
    }
}

TEST(Split, ShapesAndMap)
{
    Rng rng(61);
    const ThetaGraph t333({3, 3, 3});
    auto L = sized_lists(rng, t333, 2, 3, 3, 5);
    const auto split = split_odd_theta(t333, L, 1);
    EXPECT_EQ(split.theta.lengths(), (std::vector<int>{4, 4, 4}));
    EXPECT_EQ(split.theta.graph().size(), t333.graph().size() + 3);
    EXPECT_EQ(split.map.split_copies.size(), 3u);
    for (auto c : split.map.split_copies)
        EXPECT_EQ(split.lists[c], L[ThetaGraph::hub_u]);
    for (Vertex w = 0; w < split.map.original.size(); ++w)
        if (split.map.original[w] != SplitMap::none) {
            EXPECT_EQ(split.lists[w], L[split.map.original[w]]);
            EXPECT_EQ(split.theta.graph().name(w) == "v", split.map.original[w] == ThetaGraph::hub_v);
        }

    const ThetaGraph t533({5, 3, 3});
    const auto s2 = split_odd_theta(t533, sized_lists(rng, t533, 2, 3, 3, 5), 1);
    EXPECT_EQ(s2.theta.lengths(), (std::vector<int>{6, 4, 4}));

    EXPECT_THROW(split_odd_theta(ThetaGraph({3, 4, 3}), ListAssignment(9, ColourSet{0, 1}), 1), InputError);
    L[ThetaGraph::hub_u] = {0, 1, 2};
    EXPECT_THROW(split_odd_theta(t333, L, 1), InputError);
}

TEST(Split, PullBackForcesComplement)
{
    Rng rng(67);
    for (int s = 0; s < 60; ++s) {
        const int m = rng.between(1, 2);
        const ThetaGraph theta({3, 5, 3});
        const auto L = sized_lists(rng, theta, 2 * m, 2 * m + 1, 2 * m + 1, 2 * m + 4);
        const auto split = split_odd_theta(theta, L, m);
        const auto phi_split = solve_even_theta(split.theta, split.lists, m);
        const auto M = phi_split.assignment[split.map.new_hub];
        EXPECT_TRUE(M.is_subset_of(L[ThetaGraph::hub_u]));
        for (auto c : split.map.split_copies)
            EXPECT_EQ(phi_split.assignment[c], L[ThetaGraph::hub_u] - M);
        const auto phi = pull_back_coloring(phi_split, split.map);
        expect_valid(theta, L, m, phi);

        auto tampered = phi_split;
        const auto other = *(L[ThetaGraph::hub_u] - tampered.assignment[split.map.split_copies[1]]).begin();
        tampered.assignment[split.map.split_copies[1]] = ColourSet{other};
        EXPECT_THROW(pull_back_coloring(tampered, split.map), InternalError);
    }
}

TEST(OddSolver, AnyThreeListsOnTheta333)
{
    Rng rng(71);
    const ThetaGraph theta({3, 3, 3});
    for (int s = 0; s < 200; ++s) {
        const auto L = sized_lists(rng, theta, 3, 3, 3, rng.between(3, 7));
        const auto r = solve(theta, L, 1);
        EXPECT_EQ(r.certificate, Certificate::theorem_odd_split);
        ASSERT_TRUE(r.coloring);
        expect_valid(theta, L, 1, *r.coloring);
    }
}

TEST(Theta4Solver, Examples)
{
    const ThetaGraph t2222({2, 2, 2, 2});
    const ListAssignment same(t2222.graph().size(), ColourSet{1, 2, 3});
    expect_valid(t2222, same, 1, solve_generalized_theta4(t2222, same, 1));

    Rng rng(73);
    const ThetaGraph t2224({2, 2, 2, 4});
    for (int s = 0; s < 100; ++s) {
        const auto L = sized_lists(rng, t2224, 5, 5, 5, rng.between(5, 9));
        ASSERT_TRUE(find_Lb_coloring(t2224.graph(), L, 2));
        const auto r = solve_generalized_theta4_detailed(t2224, L, 2);
        EXPECT_EQ(r.certificate, Certificate::theorem_theta4);
        expect_valid(t2224, L, 2, *r.coloring);
    }

    ListAssignment short_single(t2224.graph().size(), ColourSet::range(0, 5));
    short_single[t2224.path(0)[0]] = ColourSet::range(0, 4);
    EXPECT_THROW(solve_generalized_theta4(t2224, short_single, 2), InputError);
}

TEST(Dispatch, OracleFallbackAndGraphEntry)
{
    Rng rng(79);
    const ThetaGraph t244({2, 4, 4});
    for (int s = 0; s < 50; ++s) {
        const auto L = sized_lists(rng, t244, 4, 4, 4, 6);
        const auto r = solve(t244, L, 2);
        EXPECT_EQ(r.certificate, Certificate::oracle);
        EXPECT_EQ(r.coloring.has_value(), find_Lb_coloring(t244.graph(), L, 2).has_value());
        if (r.coloring) {
            expect_valid(t244, L, 2, *r.coloring);
        }
    }

    // lists below every theorem's hypotheses still get an exact answer
    const ThetaGraph t444({4, 4, 4});
    EXPECT_FALSE(solve(t444, ListAssignment(t444.graph().size(), ColourSet{1}), 1).coloring);

    const Graph c6 = cycle_graph(6);
    EXPECT_THROW(solve(c6, ListAssignment(6, ColourSet{1, 2, 3}), 1), InputError);

    // the graph entry point maps a relabelled theta back to its own vertices
    const Graph& g = t444.graph();
    std::vector<std::string> names(g.names().rbegin(), g.names().rend());
    std::vector<std::pair<std::string, std::string>> edges;
    for (const auto& [a, b] : g.edges())
        edges.emplace_back(g.name(a), g.name(b));
    const Graph h = Graph::from_names(names, edges);
    const auto L = sized_lists(rng, t444, 3, 3, 3, 6);
    ListAssignment Lh(h.size());
    for (Vertex w = 0; w < h.size(); ++w)
        Lh[w] = L[*g.index_of(h.name(w))];
    const auto r = solve(h, Lh, 1);
    ASSERT_TRUE(r.coloring);
    EXPECT_TRUE(verify_coloring(h, Lh, 1, *r.coloring).ok());
}
