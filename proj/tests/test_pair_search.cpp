#include <gtest/gtest.h>

#include "thetacol/json_io.hpp"
#include "thetacol/pair_search.hpp"
#include "thetacol/rng.hpp"

using namespace thetacol;

namespace
{

struct Fixture
{
    ThetaGraph theta;
    ListAssignment lists;
};

Fixture theta444_fixture()
{
    const std::string dir = THETACOL_TEST_DATA;
    ThetaGraph theta = theta_from_json(load_json_file(dir + "/theta444.json"));
    ListAssignment lists = lists_from_json(load_json_file(dir + "/theta444_lists.json"), theta.graph());
    return {std::move(theta), std::move(lists)};
}

ListAssignment random_theta_lists(Rng& rng, const ThetaGraph& theta, int hub, int other, int palette)
{
    ListAssignment L;
    for (Vertex w = 0; w < theta.graph().size(); ++w)
        L.push_back(rng.subset(palette, w < 2 ? hub : other));
    return L;
}

// Pairs enumerated by bitmask over the couple index, damage taken from the
// definition rather than the closed form.
std::vector<std::uint64_t> bad_pairs_by_mask(const ThetaPaths& paths, int size, const std::vector<int>& budgets)
{
    const auto index = consistent_indexing(paths.hub_u_list(), paths.hub_v_list());
    std::vector<std::uint64_t> bad(paths.count(), 0);
    for (unsigned mask = 0; mask < (1u << index.size()); ++mask) {
        if (std::popcount(mask) != size)
            continue;
        std::vector<Colour> s, t;
        for (std::size_t j = 0; j < index.size(); ++j)
            if (mask >> j & 1u) {
                s.push_back(index.couples[j].at_u);
                t.push_back(index.couples[j].at_v);
            }
        for (std::size_t i = 0; i < paths.count(); ++i)
            if (damage_definitional(paths.lists(i), ColourSet(s), ColourSet(t)) > budgets[i])
                ++bad[i];
    }
    return bad;
}

} // namespace

TEST(Indexing, Examples)
{
    const auto idx = consistent_indexing({1, 2, 3}, {2, 3, 4});
    EXPECT_EQ(idx.couples, (std::vector<Couple>{{2, 2}, {3, 3}, {1, 4}}));

    const auto same = consistent_indexing({4, 7}, {4, 7});
    EXPECT_EQ(same.couples, (std::vector<Couple>{{4, 4}, {7, 7}}));

    const auto apart = consistent_indexing({1, 2}, {3, 4});
    EXPECT_EQ(apart.couples, (std::vector<Couple>{{1, 3}, {2, 4}}));

    EXPECT_THROW(consistent_indexing({1, 2}, {1}), InputError);
}

TEST(Indexing, IsConsistentOnRandomLists)
{
    Rng rng(41);
    for (int s = 0; s < 500; ++s) {
        const int l = rng.between(0, 6);
        const auto lu = rng.subset(9, l);
        const auto lv = rng.subset(9, l);
        const auto idx = consistent_indexing(lu, lv);
        ColourSet us, vs;
        for (const auto& c : idx.couples) {
            EXPECT_TRUE(lu.contains(c.at_u));
            EXPECT_TRUE(lv.contains(c.at_v));
            // a colour in both lists is only ever coupled with itself
            if (lu.contains(c.at_v) || lv.contains(c.at_u)) {
                EXPECT_EQ(c.at_u, c.at_v);
            }
            us = us | ColourSet{c.at_u};
            vs = vs | ColourSet{c.at_v};
        }
        EXPECT_EQ(us, lu);
        EXPECT_EQ(vs, lv);
    }
}

TEST(Classify, LightAndSafeCouples)
{
    // three single-vertex paths
    const ThetaGraph theta({2, 2, 2});
    ListAssignment L(theta.graph().size());
    L[ThetaGraph::hub_u] = {1, 2, 5};
    L[ThetaGraph::hub_v] = {1, 3, 6};
    for (std::size_t i = 0; i < 3; ++i)
        L[theta.path(i)[0]] = {1, 2, 9};
    const auto cls = classify_couples(theta, L, consistent_indexing(L[0], L[1]));
    ASSERT_EQ(cls.index.couples, (std::vector<Couple>{{1, 1}, {2, 3}, {5, 6}}));
    for (const auto& pc : cls.paths) {
        // c = c' in Lambda, then c in Lambda with c' outside, then neither
        EXPECT_EQ(pc.labels, (std::vector<CoupleLabel>{CoupleLabel::light, CoupleLabel::light, CoupleLabel::safe}));
        EXPECT_EQ(pc.hub_damage, 2);
    }
}

TEST(Classify, HeavyNeedsBothEnds)
{
    const ThetaGraph theta({2, 2, 4});
    ListAssignment L(theta.graph().size(), ColourSet{7});
    L[ThetaGraph::hub_u] = {1};
    L[ThetaGraph::hub_v] = {1};
    const auto& p = theta.path(2);
    L[p[0]] = {1};
    L[p[1]] = {2};
    L[p[2]] = {1};
    const auto cls = classify_couples(theta, L, consistent_indexing(L[0], L[1]));
    EXPECT_EQ(cls.paths[2].labels, (std::vector<CoupleLabel>{CoupleLabel::heavy}));
    EXPECT_EQ(cls.paths[0].labels, (std::vector<CoupleLabel>{CoupleLabel::safe}));
}

TEST(Classify, CoupleDamagesSumToHubDamage)
{
    Rng rng(43);
    const ThetaGraph theta({4, 2, 6});
    for (int s = 0; s < 300; ++s) {
        const auto L = random_theta_lists(rng, theta, rng.between(1, 5), rng.between(2, 5), 8);
        const ThetaPaths paths(theta, L);
        const auto cls = classify_couples(paths, consistent_indexing(L[0], L[1]));
        for (const auto& pc : cls.paths) {
            EXPECT_EQ(2 * pc.heavy + pc.light, pc.hub_damage);
            EXPECT_EQ(pc.heavy + pc.light + pc.safe, static_cast<int>(cls.index.size()));
        }
        // damage of any coupled pair is the sum over its couples
        const auto S = ColourSet{cls.index.couples[0].at_u};
        const auto T = ColourSet{cls.index.couples[0].at_v};
        for (std::size_t i = 0; i < paths.count(); ++i)
            EXPECT_EQ(paths.damage(i, S, T), cls.paths[i].damages[0]);
    }
}

TEST(ConditionsC, UniformListsPass)
{
    const ThetaGraph theta({4, 4, 4});
    for (int m = 1; m <= 3; ++m) {
        ListAssignment L(theta.graph().size(), ColourSet::range(1, 2 * m + 2));
        L[ThetaGraph::hub_u] = ColourSet::range(1, 2 * m + 1);
        L[ThetaGraph::hub_v] = ColourSet::range(1, 2 * m + 1);
        for (std::size_t i = 0; i < 3; ++i)
            L[theta.path(i).front()] = ColourSet::range(1, 2 * m + 1);
        const auto r = check_conditions_C(theta, L, 2 * m, 0, m);
        EXPECT_TRUE(r.all_ok()) << "m=" << m;
        EXPECT_EQ(r.family, "C");
        EXPECT_EQ(r.checks.size(), 5u);
    }
}

TEST(ConditionsC, ParityAndBaseCase)
{
    const ThetaGraph theta({4, 4, 4});
    ListAssignment L(theta.graph().size(), ColourSet::range(0, 5));
    const auto odd = check_conditions_C(theta, L, 2, 1, 2);
    EXPECT_FALSE(odd.checks[0].ok);
    EXPECT_FALSE(odd.all_ok());

    L[ThetaGraph::hub_u] = {};
    L[ThetaGraph::hub_v] = {};
    const auto base = check_conditions_C(theta, L, 0, 2, 2);
    EXPECT_TRUE(base.checks[0].ok);
    EXPECT_TRUE(base.checks[1].ok);
    EXPECT_EQ(base.checks[4].name, "C5");
    EXPECT_FALSE(base.checks[4].detail.empty());

    EXPECT_THROW(check_conditions_C(ThetaGraph({3, 4, 4}), ListAssignment(10, ColourSet{1}), 0, 0, 1),
                 InputError);
}

TEST(ConditionsT, Examples)
{
    const ThetaGraph theta({2, 2, 2, 4});
    EXPECT_EQ(long_path_index(theta), 3u);
    for (int m = 1; m <= 2; ++m) {
        const ListAssignment L(theta.graph().size(), ColourSet::range(0, 2 * m + 1));
        EXPECT_TRUE(check_conditions_T(theta, L, 2 * m + 1, 0, m).all_ok()) << "m=" << m;
    }

    ListAssignment L(theta.graph().size(), ColourSet::range(0, 5));
    L[ThetaGraph::hub_u] = {0};
    L[ThetaGraph::hub_v] = {0};
    EXPECT_FALSE(check_conditions_T(theta, L, 1, 0, 2).checks[0].ok);

    ListAssignment short_end(theta.graph().size(), ColourSet::range(0, 5));
    short_end[theta.path(3).back()] = ColourSet::range(0, 4);
    const auto r = check_conditions_T(theta, short_end, 5, 0, 2);
    EXPECT_EQ(r.checks[2].name, "T3");
    EXPECT_FALSE(r.checks[2].ok);

    EXPECT_THROW(long_path_index(ThetaGraph({2, 4, 2, 4})), InputError);
}

TEST(FindPair, SizeZeroIsEmpty)
{
    const auto fx = theta444_fixture();
    const ThetaPaths paths(fx.theta, fx.lists);
    const auto p = find_pair(paths, 0, paths.budgets(1));
    ASSERT_TRUE(p);
    EXPECT_TRUE(p->S.empty());
    EXPECT_TRUE(p->T.empty());
    EXPECT_EQ(p->damages, (std::vector<int>{0, 0, 0}));
    EXPECT_EQ(count_bad_pairs(paths, 0, paths.budgets(1)), (std::vector<std::uint64_t>{0, 0, 0}));
}

TEST(FindPair, FixtureHasSingleCouple)
{
    const auto fx = theta444_fixture();
    const ThetaPaths paths(fx.theta, fx.lists);
    const auto budgets = paths.budgets(1);
    const auto p = find_pair(paths, 1, budgets, true);
    ASSERT_TRUE(p);
    EXPECT_EQ(p->S.size(), 1u);
    EXPECT_EQ(p->T.size(), 1u);
    for (std::size_t i = 0; i < 3; ++i) {
        EXPECT_EQ(p->damages[i], damage_definitional(paths.lists(i), p->S, p->T));
        EXPECT_LE(p->damages[i], budgets[i]);
    }
    EXPECT_EQ(count_bad_pairs(paths, 1, budgets), bad_pairs_by_mask(paths, 1, budgets));
}

TEST(FindPair, AgreesWithExhaustiveEnumeration)
{
    Rng rng(47);
    const ThetaGraph theta({4, 2, 4});
    for (int s = 0; s < 300; ++s) {
        const auto L = random_theta_lists(rng, theta, rng.between(1, 4), rng.between(1, 4), 6);
        const ThetaPaths paths(theta, L);
        std::vector<int> budgets;
        for (std::size_t i = 0; i < 3; ++i)
            budgets.push_back(rng.between(0, 3));
        const int size = rng.between(0, std::min(L[0].count(), L[1].count()));
        bool exists = false;
        for_each_subset(L[0], static_cast<std::size_t>(size), [&](const ColourSet& S) {
            return for_each_subset(L[1], static_cast<std::size_t>(size), [&](const ColourSet& T) {
                bool fits = true;
                for (std::size_t i = 0; i < 3; ++i)
                    fits = fits && damage_definitional(paths.lists(i), S, T) <= budgets[i];
                exists = exists || fits;
                return !exists;
            });
        });
        const auto p = find_pair(paths, size, budgets);
        ASSERT_EQ(p.has_value(), exists);
        if (p) {
            EXPECT_EQ(p->simple, paths.simple(p->S, p->T));
        }
        if (L[0].count() == L[1].count() && L[0].count() <= 4) {
            EXPECT_EQ(count_bad_pairs(paths, size, budgets), bad_pairs_by_mask(paths, size, budgets));
        }
    }
}

TEST(FindPair, GuaranteedSearchReportsFalsification)
{
    const ThetaGraph theta({2, 2, 2});
    ListAssignment L(theta.graph().size(), ColourSet{1});
    const ThetaPaths paths(theta, L);
    EXPECT_FALSE(find_pair(paths, 1, {0, 0, 0}));
    EXPECT_THROW(find_pair(paths, 1, {0, 0, 0}, true), TheoremFalsified);
    EXPECT_THROW(find_pair(paths, 1, {0, 0}), InputError);
}

TEST(CountBadPairs, GenerousBudgetsGiveZero)
{
    Rng rng(53);
    const ThetaGraph theta({4, 4, 6});
    for (int s = 0; s < 50; ++s) {
        const int l = rng.between(1, 5);
        const auto L = random_theta_lists(rng, theta, l, 3, 8);
        const ThetaPaths paths(theta, L);
        const int size = rng.between(0, l);
        EXPECT_EQ(count_bad_pairs(paths, size, std::vector<int>(3, 2 * size)), (std::vector<std::uint64_t>(3, 0)));
    }
}
