#pragma once

#include "extremal/core.hpp"
#include "extremal/property.hpp"
#include "extremal/rational.hpp"

#include <map>
#include <vector>

namespace extremal {

/// |𝓕(i)|, the number of members containing i.
int degree(const SetFamily & family, int i);

/// degrees[i] = |𝓕(i)| for 1 <= i <= n; degrees[0] is unused.
std::vector<int> degrees(const SetFamily & family);

/// Smallest element of maximum degree; 0 for the empty family.
int max_degree_element(const SetFamily & family);

/// max_i |𝓕(i)| / |𝓕|; 0 for the empty family.
Rational rho(const SetFamily & family);

/// τ_t: minimum |T| with |T ∩ F| >= t for every member. Exact branch and
/// bound. 0 for the empty family; std::invalid_argument unless 1 <= t <= k.
int transversal_number(const SetFamily & family, int t);

/// A minimum t-transversal (empty for the empty family).
KSet min_transversal(const SetFamily & family, int t);

/// ν: maximum number of pairwise disjoint members. Exact.
int matching_number(const SetFamily & family);

/// Every pair of members, a member with itself included, shares >= t
/// elements. The empty family is t-intersecting for every t.
bool is_t_intersecting(const SetFamily & family, int t);

/// |F ∩ G| >= t for all F ∈ 𝓕, G ∈ 𝓖. Ground sets must agree.
bool is_cross_t_intersecting(const SetFamily & f, const SetFamily & g, int t);

/// Every r members (repetition allowed) share >= t elements; r >= 2.
bool is_r_wise_t_intersecting(const SetFamily & family, int r, int t);

/// t_j: min |F_1 ∩ ... ∩ F_j| over j-tuples of members; k for the empty
/// family. Requires j >= 1.
int t_level(const SetFamily & family, int j);

/// Each member F has some 0 <= l <= k - t with |F ∩ [2l + t]| >= l + t.
bool is_pseudo_t_intersecting(const SetFamily & family, int t);

/// Greedy completion: adds k-sets in ascending order while the property
/// keeps holding, repeating passes until none can be added. Throws
/// std::invalid_argument if the property fails on the input.
SetFamily saturate(const SetFamily & family, const PropertySpec & property);

/// No k-set outside the family can be added without breaking the property.
bool is_saturated(const SetFamily & family, const PropertySpec & property);

struct MeasureProfile {
    Rational rho;
    std::map<int, int> tau;      // t -> τ_t, 1 <= t <= k
    int nu = 0;
    std::map<int, int> t_levels; // j -> t_j
    bool initial = false;
    bool empty = true;
};

/// τ_t for t = 1..k, ν, and t_j for j = 2..max_level.
MeasureProfile measure_profile(const SetFamily & family, int max_level = 4);

} // namespace extremal
