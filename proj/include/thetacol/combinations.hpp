#ifndef THETACOL_COMBINATIONS_HPP
#define THETACOL_COMBINATIONS_HPP

#include <cstddef>
#include <vector>

#include "colour_set.hpp"

namespace thetacol
{

/// Visits every k-subset of {0..n-1} as an ascending index vector, in
/// lexicographic order. The visitor returns false to stop early; the
/// function returns false iff it was stopped.
template <typename Visitor>
bool for_each_combination(std::size_t n, std::size_t k, Visitor&& visit)
{
    if (k > n)
        return true;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i)
        idx[i] = i;
    while (true) {
        if (!visit(static_cast<const std::vector<std::size_t>&>(idx)))
            return false;
        // advance
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + (i - 1))
            --i;
        if (i == 0)
            return true;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j)
            idx[j] = idx[j - 1] + 1;
    }
}

/// Lexicographic k-subsets of a colour set.
template <typename Visitor>
bool for_each_subset(const ColourSet& from, std::size_t k, Visitor&& visit)
{
    return for_each_combination(from.size(), k, [&](const std::vector<std::size_t>& idx) {
        std::vector<Colour> picked;
        picked.reserve(idx.size());
        for (auto i : idx)
            picked.push_back(from[i]);
        return visit(ColourSet(std::move(picked)));
    });
}

} // namespace thetacol

#endif // THETACOL_COMBINATIONS_HPP
