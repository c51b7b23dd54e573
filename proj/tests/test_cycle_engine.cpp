#include <gtest/gtest.h>

#include "thetacol/cycle_engine.hpp"
#include "thetacol/rng.hpp"

using namespace thetacol;

TEST(OddCycle, TriangleSingletons)
{
    const CycleInstance inst{1, 3, 1, ListAssignment(3, ColourSet{1, 2, 3})};
    const auto phi = color_odd_cycle(inst);
    for (const auto& s : phi.assignment)
        EXPECT_EQ(s.size(), 1u);
    EXPECT_TRUE(verify_coloring(cycle_graph(3), inst.lists, 1, phi).ok());
}

TEST(OddCycle, FiveCycleTwoFoldTrace)
{
    const CycleInstance inst{2, 5, 2, ListAssignment(5, ColourSet{1, 2, 3, 4, 5})};
    const auto phi = color_odd_cycle(inst);
    const ListAssignment expected{{3, 5}, {1, 4}, {2, 5}, {1, 3}, {2, 4}};
    EXPECT_EQ(phi.assignment, expected);
    EXPECT_TRUE(verify_coloring(cycle_graph(5), inst.lists, 2, phi).ok());
}

TEST(OddCycle, RejectsRatioBelowThreshold)
{
    EXPECT_THROW(color_odd_cycle({1, 2, 1, ListAssignment(3, ColourSet{1, 2})}), InputError);
    // 7/3 < 2 + 1/2
    EXPECT_THROW(color_odd_cycle({2, 7, 3, ListAssignment(5, ColourSet::range(0, 7))}), InputError);
    EXPECT_THROW(color_odd_cycle({2, 5, 2, ListAssignment(3, ColourSet::range(0, 5))}), InputError);
}

TEST(OddCycle, RandomListsAtTheThreshold)
{
    Rng rng(37);
    for (int s = 0; s < 2000; ++s) {
        const int k = rng.between(1, 4);
        const int b = rng.between(1, 3);
        const int a = (2 * k + 1) * b / k + ((2 * k + 1) * b % k ? 1 : 0) + rng.between(0, 1);
        const int n = 2 * k + 1;
        CycleInstance inst{k, a, b, {}};
        const int palette = a + rng.between(0, 4);
        for (int j = 0; j < n; ++j)
            inst.lists.push_back(rng.subset(palette, a));
        const auto phi = color_odd_cycle(inst);
        ASSERT_TRUE(verify_coloring(cycle_graph(static_cast<std::size_t>(n)), inst.lists, b, phi).ok())
            << "k=" << k << " a=" << a << " b=" << b;
    }
}
