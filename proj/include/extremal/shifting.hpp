#pragma once

#include "extremal/core.hpp"
#include "extremal/property.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace extremal {

/// S_ij: every member containing j but not i becomes F - j + i unless that
/// set is already a member. Requires 1 <= i < j <= n.
SetFamily shift(const SetFamily & family, int i, int j);

/// Sum of all elements over all members.
std::int64_t weight(const SetFamily & family);

/// Fixed by every S_ij.
bool is_shifted(const SetFamily & family);

/// Fixed by every S_ij with i < j <= m. Requires m <= n.
bool is_initial_on(const SetFamily & family, int m);

struct ShiftStep {
    int i = 0;
    int j = 0;
    std::vector<std::int64_t> weights_before; // one per slot
};

/// A pair whose simultaneous shift moves some slot but breaks the property.
struct ResistantPair {
    int i = 0;
    int j = 0;
    std::vector<int> moved_slots; // slots that S_ij would change
    friend bool operator==(const ResistantPair &, const ResistantPair &) = default;
};

struct ShiftTrace {
    static constexpr std::size_t verbatim_limit = 1'000'000;

    std::vector<ShiftStep> steps;   // the first verbatim_limit steps
    std::uint64_t total_steps = 0;  // including the ones not kept
    std::uint64_t passes = 0;
    std::vector<std::int64_t> initial_weights;
    std::vector<std::int64_t> final_weights;
    std::vector<ResistantPair> resistant;
};

struct ShiftResult {
    std::vector<SetFamily> families;
    ShiftTrace trace;
};

/// Applies S_ij simultaneously to all slots whenever the shifted tuple keeps
/// the property, sweeping all pairs (i, j) in lex order until a full pass
/// changes nothing. All slots must share the ground set; throws
/// std::invalid_argument when the property fails on the input.
ShiftResult shift_ad_extremis(std::vector<SetFamily> families, const PropertySpec & property);

/// Pairs i < j whose simultaneous shift changes some slot and breaks the
/// property. Meaningful on tuples that are shifted ad extremis.
std::vector<ResistantPair> shift_resistant_pairs(std::span<const SetFamily> families, const PropertySpec & property);

/// Every pair either leaves all slots fixed or breaks the property.
bool is_shifted_ad_extremis(std::span<const SetFamily> families, const PropertySpec & property);

} // namespace extremal
