#ifndef THETACOL_CYCLE_ENGINE_HPP
#define THETACOL_CYCLE_ENGINE_HPP

#include <string>
#include <vector>

#include "coloring.hpp"
#include "errors.hpp"

namespace thetacol
{

/// Odd cycle C_{2k+1} on v_0, ..., v_{2k} with an a-list assignment and fold b.
struct CycleInstance
{
    int k = 1;
    int a = 3;
    int b = 1;
    ListAssignment lists;
};

/// Colour-by-colour (L,b)-colouring of an odd cycle, valid whenever
/// a/b >= 2 + 1/k.
///
/// Colours common to every list come first (ascending), then the rest
/// (ascending). The i-th common colour (1-based) goes to v_i, v_{i+2}, ...,
/// v_{i+2k-2}; any other colour c is swept around the cycle starting from
/// the least index s whose list misses c, and lands on v_j when c is in
/// L(v_j), v_{j-1} did not just take c, and v_j still holds fewer than b
/// colours. No vertex ever receives more than b colours.
inline FoldColoring color_odd_cycle(const CycleInstance& inst)
{
    const int k = inst.k;
    if (k < 1)
        throw InputError("k must be positive");
    if (inst.a < 1 || inst.b < 1)
        throw InputError("a and b must be positive");
    if (static_cast<long>(inst.a) * k < static_cast<long>(2 * k + 1) * inst.b)
        throw InputError("a/b = " + std::to_string(inst.a) + "/" + std::to_string(inst.b) + " is below 2+1/" +
                         std::to_string(k));
    const int n = 2 * k + 1;
    if (static_cast<int>(inst.lists.size()) != n)
        throw InputError("expected " + std::to_string(n) + " lists for C_" + std::to_string(n));
    for (int j = 0; j < n; ++j)
        if (inst.lists[static_cast<std::size_t>(j)].count() != inst.a)
            throw InputError("list of v" + std::to_string(j) + " does not have exactly a colours");

    ColourSet common = inst.lists[0];
    ColourSet all;
    for (const auto& l : inst.lists) {
        common = common & l;
        all = all | l;
    }
    std::vector<Colour> order(common.begin(), common.end());
    for (auto c : all - common)
        order.push_back(c);
    const int q = common.count();

    auto idx = [n](long j) { return static_cast<std::size_t>(((j % n) + n) % n); };
    std::vector<ColourSet> phi(static_cast<std::size_t>(n));
    for (int i = 1; i <= static_cast<int>(order.size()); ++i) {
        const Colour c = order[static_cast<std::size_t>(i - 1)];
        if (i <= q) {
            for (int step = 0; step < k; ++step) {
                auto& slot = phi[idx(i + 2 * step)];
                if (slot.count() < inst.b)
                    slot.insert(c);
            }
            continue;
        }
        int s = 0;
        while (inst.lists[static_cast<std::size_t>(s)].contains(c))
            ++s;
        bool prev_took = false;
        for (int step = 0; step < n; ++step) {
            const auto j = idx(s + step);
            const bool take = inst.lists[j].contains(c) && !prev_took && phi[j].count() < inst.b;
            if (take)
                phi[j].insert(c);
            prev_took = take;
        }
    }
    return FoldColoring{inst.b, std::move(phi)};
}

} // namespace thetacol

#endif // THETACOL_CYCLE_ENGINE_HPP
