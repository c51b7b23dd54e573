#ifndef THETACOL_RNG_HPP
#define THETACOL_RNG_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "colour_set.hpp"

namespace thetacol
{

/// Seeded generator with portable bounded draws. The standard distributions
/// are implementation-defined, which would make reports differ between
/// standard libraries; the engine itself is fully specified.
class Rng
{
  public:
    explicit Rng(std::uint64_t seed)
        : engine_(seed)
    {
    }

    /// Uniform in [0, n).
    std::uint64_t below(std::uint64_t n)
    {
        if (n <= 1)
            return 0;
        const std::uint64_t limit = std::mt19937_64::max() - std::mt19937_64::max() % n;
        std::uint64_t r;
        do {
            r = engine_();
        } while (r >= limit);
        return r % n;
    }

    /// Uniform in [lo, hi].
    int between(int lo, int hi) { return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1))); }

    bool coin() { return below(2) == 1; }

    /// Uniform k-subset of {0, ..., palette-1}.
    ColourSet subset(int palette, int k)
    {
        std::vector<Colour> pool(static_cast<std::size_t>(palette));
        for (int i = 0; i < palette; ++i)
            pool[static_cast<std::size_t>(i)] = i;
        for (int i = 0; i < k; ++i) {
            auto j = static_cast<std::size_t>(i) + below(static_cast<std::uint64_t>(palette - i));
            std::swap(pool[static_cast<std::size_t>(i)], pool[j]);
        }
        pool.resize(static_cast<std::size_t>(k));
        return ColourSet(std::move(pool));
    }

    /// Uniform k-subset of an arbitrary set.
    ColourSet subset_of(const ColourSet& from, int k)
    {
        auto picks = subset(from.count(), k);
        std::vector<Colour> out;
        for (auto i : picks)
            out.push_back(from[static_cast<std::size_t>(i)]);
        return ColourSet(std::move(out));
    }

  private:
    std::mt19937_64 engine_;
};

} // namespace thetacol

#endif // THETACOL_RNG_HPP
