#pragma once

#include "extremal/core.hpp"
#include "extremal/rational.hpp"

#include <cstdint>
#include <optional>

namespace extremal {

/// A <_L B: the smallest element of the symmetric difference lies in A.
/// Both throw std::invalid_argument when the sizes differ.
bool lex_less(KSet a, KSet b);
bool lex_leq(KSet a, KSet b);

/// Number of k-subsets of `ground` that precede `a` in lex order.
/// `a` must be a subset of `ground`.
std::uint64_t lex_rank(KSet ground, KSet a);

/// The k-subset of `ground` with the given lex rank.
KSet lex_unrank(KSet ground, int k, std::uint64_t rank);

/// The first m k-subsets of X in lex order.
struct LexSegment {
    KSet ground;
    int k = 0;
    std::uint64_t m = 0;
    SetFamily members; // canonical (ascending mask) order, on [n]
};

/// 𝓛(X, k, m) as a family on [n]. Throws std::invalid_argument unless
/// X ⊆ [n] and 0 <= m <= C(|X|, k).
LexSegment lex_segment(int n, KSet ground, int k, std::uint64_t m);
inline LexSegment lex_segment(int n, int k, std::uint64_t m) { return lex_segment(n, KSet::prefix(n), k, m); }

/// The first m k-subsets of [n] in colex order (ascending mask).
SetFamily colex_segment(int n, int k, std::uint64_t m);

/// ∂^l 𝓕: all (k - l)-sets contained in some member. Requires 0 <= l <= k.
SetFamily shadow(const SetFamily & family, int l = 1);

/// Minimum |∂^l 𝓕| over m-element families in C([n], k), evaluated on the
/// colex initial segment. Requires 0 <= m <= C(n, k) and 0 <= l <= k.
std::uint64_t kk_min_shadow(int n, int k, std::uint64_t m, int l);

/// For cross-intersecting A ⊆ C([n], a), B ⊆ C([n], b) with n >= a + b,
/// whether 𝓛(n, a, |A|) and 𝓛(n, b, |B|) are cross-intersecting.
/// Throws std::invalid_argument when the premises fail.
bool hilton_transfer(const SetFamily & a, const SetFamily & b);

/// C(2k - t, k - l) / C(2k - t, k); requires 1 <= l <= t <= k.
Rational katona_shadow_ratio(int k, int t, int l);

/// |∂^l 𝓕| · C(2k - t, k) >= |𝓕| · C(2k - t, k - l), exactly.
bool katona_shadow_bound_holds(const SetFamily & family, int t, int l);

struct ImprovedShadow {
    bool applicable = false; // |𝓕| >= threshold
    Rational threshold;      // C(2k - t, k) (1 + (t + l) / (k + t + 1 - l))
    Rational ratio;          // C(2k - 2 - t, k - 1 - l) / C(2k - 2 - t, k - 1)
};

/// Size threshold and ratio of the improved shadow bound; requires
/// 1 <= l < t < k.
ImprovedShadow improved_shadow(const SetFamily & family, int t, int l);

/// For nonempty cross t-intersecting A, B with 1 <= l_i < k_i, whether at
/// least one of the two Katona-type shadow bounds holds.
bool cross_shadow_dichotomy(const SetFamily & a, const SetFamily & b, int t, int l1, int l2);

/// Relabeling search for a permutation of [n] mapping one family onto the
/// other. Families must share n and k; nullopt when n > 10.
std::optional<bool> are_isomorphic(const SetFamily & f, const SetFamily & g);

} // namespace extremal
