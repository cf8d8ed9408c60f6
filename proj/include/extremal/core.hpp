#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace extremal {

using Mask = std::uint64_t;

/// Largest supported ground set; one set is one machine word.
inline constexpr int max_ground_size = 63;

/// Raised when a request does not fit into the 63-element word model.
struct CapacityError : std::length_error {
    using std::length_error::length_error;
};

/// Mask of [m] = {1, ..., m}.
constexpr Mask prefix_mask(int m)
{
    if (m <= 0) return 0;
    if (m >= 64) return ~Mask{0};
    return (Mask{1} << m) - 1;
}

/// A subset of [n] stored as a bitmask; element i lives in bit i-1.
///
/// The same type carries both members of a family and the auxiliary
/// subsets (E, P, T, ...) that the operators take as arguments.
class KSet {
public:
    constexpr KSet() = default;
    constexpr explicit KSet(Mask bits) : bits_(bits) {}

    /// Elements are 1-based; throws on elements outside [1, 63].
    static KSet of(std::initializer_list<int> elements);
    static KSet of(std::span<const int> elements);
    /// [from, to], inclusive, 1-based. Empty if from > to.
    static KSet interval(int from, int to);
    static KSet prefix(int m) { return KSet(prefix_mask(m)); }

    constexpr Mask bits() const { return bits_; }
    constexpr int size() const { return std::popcount(bits_); }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr bool contains(int element) const
    {
        return element >= 1 && element <= 64 && ((bits_ >> (element - 1)) & 1u);
    }
    constexpr bool subset_of(KSet other) const { return (bits_ & ~other.bits_) == 0; }
    constexpr bool disjoint_from(KSet other) const { return (bits_ & other.bits_) == 0; }

    /// Smallest / largest element; 0 for the empty set.
    constexpr int min_element() const { return bits_ ? std::countr_zero(bits_) + 1 : 0; }
    constexpr int max_element() const { return bits_ ? 64 - std::countl_zero(bits_) : 0; }

    /// Elements in increasing order.
    std::vector<int> elements() const;

    constexpr KSet with(int element) const { return KSet(bits_ | (Mask{1} << (element - 1))); }
    constexpr KSet without(int element) const { return KSet(bits_ & ~(Mask{1} << (element - 1))); }

    constexpr KSet operator&(KSet o) const { return KSet(bits_ & o.bits_); }
    constexpr KSet operator|(KSet o) const { return KSet(bits_ | o.bits_); }
    constexpr KSet operator^(KSet o) const { return KSet(bits_ ^ o.bits_); }
    constexpr KSet minus(KSet o) const { return KSet(bits_ & ~o.bits_); }

    /// "1,2,5"; the empty set prints as "{}".
    std::string str() const;

    friend constexpr bool operator==(KSet, KSet) = default;
    friend constexpr std::strong_ordering operator<=>(KSet a, KSet b) { return a.bits_ <=> b.bits_; }

private:
    Mask bits_ = 0;
};

constexpr int intersection_size(KSet a, KSet b)
{
    return std::popcount(a.bits() & b.bits());
}

/// A k-uniform family over [n], members kept in ascending bitmask order
/// without duplicates. Immutable after construction.
class SetFamily {
public:
    SetFamily() = default;
    SetFamily(int n, int k);
    /// Sorts and deduplicates; throws std::invalid_argument if a member has
    /// the wrong size or leaves [n], CapacityError if n > 63.
    SetFamily(int n, int k, std::vector<KSet> members);

    /// Trusted constructor for members already sorted, unique and valid.
    static SetFamily from_sorted(int n, int k, std::vector<KSet> members);

    int ground_size() const { return n_; }
    int uniformity() const { return k_; }
    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }

    std::span<const KSet> members() const { return members_; }
    auto begin() const { return members_.begin(); }
    auto end() const { return members_.end(); }
    KSet operator[](std::size_t i) const { return members_[i]; }

    bool contains(KSet s) const;

    /// Intersection of all members; [n] for the empty family.
    KSet common_part() const;
    /// Union of all members.
    KSet support() const;

    SetFamily with_member(KSet s) const;

    friend bool operator==(const SetFamily &, const SetFamily &) = default;

private:
    int n_ = 0;
    int k_ = 0;
    std::vector<KSet> members_;
};

/// Exact binomial coefficient; 0 outside 0 <= k <= n. Throws
/// std::overflow_error when the value exceeds 64 bits (n > 67).
std::uint64_t binomial(int n, int k);

/// All k-subsets of [n] in ascending bitmask order.
std::vector<KSet> enumerate_ksubsets(int n, int k);

/// 𝓕(E) = {F \ E : E ⊆ F ∈ 𝓕}, uniformity k - |E|. Labels are kept, so the
/// result still lives on [n] and simply never uses the elements of E.
SetFamily link(const SetFamily & family, KSet e);

/// 𝓕(Ē) = {F ∈ 𝓕 : F ∩ E = ∅}.
SetFamily avoid(const SetFamily & family, KSet e);

/// 𝓕(E₀, E) = {F \ E : F ∩ E = E₀}; E₀ must be a subset of E.
SetFamily trace(const SetFamily & family, KSet e0, KSet e);

/// 𝓕_P = {F ∈ 𝓕 : F ∩ P ≠ ∅}.
SetFamily meet(const SetFamily & family, KSet p);

/// Shifting partial order: with both sets listed increasingly, the i-th
/// element of p is at most the i-th element of q. Sizes must agree.
bool shift_order_leq(KSet p, KSet q);

/// Downward closed under the shifting partial order.
bool is_initial(const SetFamily & family);

} // namespace extremal
