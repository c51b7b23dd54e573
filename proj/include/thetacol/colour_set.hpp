#ifndef THETACOL_COLOUR_SET_HPP
#define THETACOL_COLOUR_SET_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <iterator>
#include <string>
#include <vector>

#include "errors.hpp"

namespace thetacol
{

using Colour = int;

/// Finite set of non-negative colours, stored sorted so that iteration order
/// (and hence every search built on top of it) is deterministic.
class ColourSet
{
  public:
    using const_iterator = std::vector<Colour>::const_iterator;

    ColourSet() = default;
    ColourSet(std::initializer_list<Colour> colours)
        : ColourSet(std::vector<Colour>(colours))
    {
    }
    explicit ColourSet(std::vector<Colour> colours)
        : values_(std::move(colours))
    {
        std::sort(values_.begin(), values_.end());
        values_.erase(std::unique(values_.begin(), values_.end()), values_.end());
        if (!values_.empty() && values_.front() < 0)
            throw InputError("colours must be non-negative, got " + std::to_string(values_.front()));
    }

    /// {lo, lo+1, ..., hi-1}
    static ColourSet range(Colour lo, Colour hi)
    {
        ColourSet s;
        for (Colour c = lo; c < hi; ++c)
            s.values_.push_back(c);
        return s;
    }

    std::size_t size() const noexcept { return values_.size(); }
    int count() const noexcept { return static_cast<int>(values_.size()); }
    bool empty() const noexcept { return values_.empty(); }
    const_iterator begin() const noexcept { return values_.begin(); }
    const_iterator end() const noexcept { return values_.end(); }
    Colour operator[](std::size_t i) const { return values_[i]; }
    const std::vector<Colour>& values() const noexcept { return values_; }

    bool contains(Colour c) const { return std::binary_search(values_.begin(), values_.end(), c); }

    bool is_subset_of(const ColourSet& other) const
    {
        return std::includes(other.values_.begin(), other.values_.end(), values_.begin(), values_.end());
    }

    bool disjoint(const ColourSet& other) const
    {
        auto a = values_.begin();
        auto b = other.values_.begin();
        while (a != values_.end() && b != other.values_.end()) {
            if (*a == *b)
                return false;
            if (*a < *b)
                ++a;
            else
                ++b;
        }
        return true;
    }

    /// Inserts keeping order; used by constructions that grow a set colour by colour.
    void insert(Colour c)
    {
        auto it = std::lower_bound(values_.begin(), values_.end(), c);
        if (it == values_.end() || *it != c)
            values_.insert(it, c);
    }

    /// The first `n` colours in ascending order.
    ColourSet smallest(std::size_t n) const
    {
        ColourSet s;
        s.values_.assign(values_.begin(), values_.begin() + static_cast<std::ptrdiff_t>(std::min(n, size())));
        return s;
    }

    friend ColourSet operator-(const ColourSet& a, const ColourSet& b)
    {
        ColourSet r;
        std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r.values_));
        return r;
    }
    friend ColourSet operator&(const ColourSet& a, const ColourSet& b)
    {
        ColourSet r;
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r.values_));
        return r;
    }
    friend ColourSet operator|(const ColourSet& a, const ColourSet& b)
    {
        ColourSet r;
        std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r.values_));
        return r;
    }

    friend bool operator==(const ColourSet&, const ColourSet&) = default;
    friend auto operator<=>(const ColourSet& a, const ColourSet& b) { return a.values_ <=> b.values_; }

  private:
    std::vector<Colour> values_;
};

inline std::string to_string(const ColourSet& s)
{
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(s[i]);
    }
    return out + "}";
}

} // namespace thetacol

#endif // THETACOL_COLOUR_SET_HPP
