#pragma once

#include "extremal/core.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace extremal {

/// {S : [t] ⊆ S}.
SetFamily full_star(int n, int k, int t);

/// {A : |A ∩ [t+2]| >= t+1}; t-intersecting with τ_t = t + 1.
SetFamily frankl_family(int n, int k, int t);

/// {F : |F ∩ [3]| >= 2}.
SetFamily triangle_family(int n, int k);

/// {E : |E ∩ [q]| >= a}.
SetFamily threshold_family(int n, int k, int q, int a);

struct FamilyPair {
    SetFamily first;
    SetFamily second;
};

/// P = sets containing {1,2} or {3,4}; R = sets containing {1,3} or {2,4};
/// S = sets containing {1,4,5} or {2,3,5}.
struct PairedStarParts {
    SetFamily p, r, s;
};
PairedStarParts paired_star_parts(int n, int k);

/// (P ∪ S, R ∪ S), a cross-intersecting pair of equal sizes.
FamilyPair paired_star_cross(int n, int k);

/// (sets containing {1,2} or {3,4}, sets containing one of 13, 14, 23, 24).
FamilyPair pair_matching_cross(int n, int k);

/// Slices by size of {B ⊆ [n] : |B ∩ [r+1]| >= r}; element i has size i.
std::vector<SetFamily> brace_daykin(int n, int r);

/// Lines of the projective plane of order q ∈ {2, 3, 4, 5, 7} on q²+q+1
/// points. Points are the normalized coordinate triples (0,0,1), (0,1,y),
/// (1,x,y) numbered in that order with field elements ascending. Order 8
/// needs 73 points and raises CapacityError. Plane axioms are re-checked.
SetFamily projective_plane(int q);

/// P = l consecutive disjoint k-blocks of [kl]; R = all l-sets meeting
/// every block in one point.
FamilyPair disjoint_blocks(int k, int l);

/// G = C([k+1], k) and F = {F : |F ∩ [k+1]| >= 2}.
FamilyPair simplex_pair(int n, int k);

/// C(k+1, k) + Σ_{2<=i<=k} C(k+1, i) C(n-k-1, k-i), the largest |F| + |G|
/// over initial cross-intersecting pairs when n >= 2k.
std::uint64_t max_initial_cross_sum(int n, int k);

/// A catalog entry: one or more families with closed-form sizes where known.
struct NamedFamily {
    std::string id;
    std::vector<int> params;
    std::vector<SetFamily> families;
    std::vector<std::uint64_t> predicted_sizes; // aligned with families; empty if none
};

/// Known ids: star(n,k,t), frankl(n,k,t), triangle(n,k), threshold(n,k,q,a),
/// paired-star(n,k), pair-matching(n,k), brace-daykin(n,r), plane(q), fano,
/// disjoint-blocks(k,l), simplex-pair(n,k). Throws std::invalid_argument on
/// an unknown id or a wrong parameter count.
NamedFamily construct(const std::string & id, const std::vector<int> & params);

std::vector<std::string> construction_ids();

} // namespace extremal
