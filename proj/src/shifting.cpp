#include "extremal/shifting.hpp"

#include <algorithm>

namespace extremal {

namespace {

/// S_ij without argument checks; `moved` reports whether any member changed.
SetFamily apply_shift(const SetFamily & family, int i, int j, bool & moved)
{
    const Mask bi = Mask{1} << (i - 1), bj = Mask{1} << (j - 1);
    std::vector<KSet> out;
    out.reserve(family.size());
    moved = false;
    for (KSet s : family) {
        if ((s.bits() & bj) && ! (s.bits() & bi)) {
            KSet target((s.bits() & ~bj) | bi);
            if (! family.contains(target)) {
                out.push_back(target);
                moved = true;
                continue;
            }
        }
        out.push_back(s);
    }
    if (! moved) return family;
    std::sort(out.begin(), out.end());
    return SetFamily::from_sorted(family.ground_size(), family.uniformity(), std::move(out));
}

int common_ground(std::span<const SetFamily> families)
{
    int n = families.empty() ? 0 : families.front().ground_size();
    for (const SetFamily & f : families)
        if (f.ground_size() != n)
            throw std::invalid_argument("shifting a tuple needs a common ground set");
    return n;
}

std::vector<std::int64_t> weights_of(std::span<const SetFamily> families)
{
    std::vector<std::int64_t> w;
    for (const SetFamily & f : families) w.push_back(weight(f));
    return w;
}

/// S_ij on every slot; returns the indices of the slots that moved.
std::vector<int> shift_all(std::span<const SetFamily> families, int i, int j, std::vector<SetFamily> & out)
{
    std::vector<int> moved_slots;
    out.clear();
    for (std::size_t s = 0; s < families.size(); ++s) {
        bool moved = false;
        out.push_back(apply_shift(families[s], i, j, moved));
        if (moved) moved_slots.push_back(static_cast<int>(s));
    }
    return moved_slots;
}

} // namespace

SetFamily shift(const SetFamily & family, int i, int j)
{
    if (i < 1 || i >= j || j > family.ground_size())
        throw std::invalid_argument("shift needs 1 <= i < j <= n");
    bool moved = false;
    return apply_shift(family, i, j, moved);
}

std::int64_t weight(const SetFamily & family)
{
    std::int64_t w = 0;
    for (KSet s : family)
        for (Mask m = s.bits(); m; m &= m - 1) w += std::countr_zero(m) + 1;
    return w;
}

bool is_shifted(const SetFamily & family)
{
    return is_initial_on(family, family.ground_size());
}

bool is_initial_on(const SetFamily & family, int m)
{
    if (m > family.ground_size())
        throw std::invalid_argument("is_initial_on needs m <= n");
    for (int j = 2; j <= m; ++j)
        for (int i = 1; i < j; ++i) {
            bool moved = false;
            apply_shift(family, i, j, moved);
            if (moved) return false;
        }
    return true;
}

ShiftResult shift_ad_extremis(std::vector<SetFamily> families, const PropertySpec & property)
{
    const int n = common_ground(families);
    if (! property.holds(families))
        throw std::invalid_argument("shift_ad_extremis: property fails on the input tuple");
    ShiftResult result;
    ShiftTrace & trace = result.trace;
    trace.initial_weights = weights_of(families);
    std::vector<SetFamily> shifted;
    for (bool changed = true; changed;) {
        changed = false;
        ++trace.passes;
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j) {
                if (shift_all(families, i, j, shifted).empty() || ! property.holds(shifted)) continue;
                if (trace.steps.size() < ShiftTrace::verbatim_limit)
                    trace.steps.push_back({i, j, weights_of(families)});
                ++trace.total_steps;
                families.swap(shifted);
                changed = true;
            }
    }
    trace.final_weights = weights_of(families);
    trace.resistant = shift_resistant_pairs(families, property);
    result.families = std::move(families);
    return result;
}

std::vector<ResistantPair> shift_resistant_pairs(std::span<const SetFamily> families, const PropertySpec & property)
{
    const int n = common_ground(families);
    std::vector<ResistantPair> out;
    std::vector<SetFamily> shifted;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            auto moved = shift_all(families, i, j, shifted);
            if (! moved.empty() && ! property.holds(shifted)) out.push_back({i, j, std::move(moved)});
        }
    return out;
}

bool is_shifted_ad_extremis(std::span<const SetFamily> families, const PropertySpec & property)
{
    const int n = common_ground(families);
    std::vector<SetFamily> shifted;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (! shift_all(families, i, j, shifted).empty() && property.holds(shifted)) return false;
    return true;
}

} // namespace extremal
