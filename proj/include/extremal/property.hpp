#pragma once

#include "extremal/core.hpp"
#include "extremal/rational.hpp"

#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace extremal {

/// Marks an atom that applies to every slot of the tuple.
inline constexpr int every_slot = -1;

namespace atom {
    struct TIntersecting { int slot; int t; };
    struct CrossTIntersecting { int slot_a; int slot_b; int t; };
    struct RhoAtMost { int slot; Rational bound; };
    struct MatchingAtMost { int slot; int s; };
    struct NonTrivial { int slot; };
    /// No pairwise disjoint F_1 ∈ 𝓕_{s_1}, ..., F_r ∈ 𝓕_{s_r}. Empty = all slots.
    struct Overlapping { std::vector<int> slots; };
    /// Escape hatch; carries no preservation guarantees.
    struct Custom {
        std::string name;
        std::function<bool(std::span<const SetFamily>)> predicate;
    };
}

using Atom = std::variant<atom::TIntersecting, atom::CrossTIntersecting, atom::RhoAtMost,
      atom::MatchingAtMost, atom::NonTrivial, atom::Overlapping, atom::Custom>;

/// Conjunction of atoms over a tuple of families (slot i = families[i]).
///
/// Nested conjunctions are flattened on construction, so a spec is just
/// its list of atoms; the empty list is the always-true property.
class PropertySpec {
public:
    PropertySpec() = default;

    static PropertySpec t_intersecting(int t, int slot = every_slot);
    static PropertySpec intersecting(int slot = every_slot) { return t_intersecting(1, slot); }
    static PropertySpec cross_t_intersecting(int slot_a, int slot_b, int t);
    static PropertySpec rho_at_most(Rational bound, int slot = every_slot);
    static PropertySpec matching_at_most(int s, int slot = every_slot);
    static PropertySpec non_trivial(int slot = every_slot);
    static PropertySpec overlapping(std::vector<int> slots = {});
    static PropertySpec custom(std::string name, std::function<bool(std::span<const SetFamily>)> predicate);
    static PropertySpec all_of(std::vector<PropertySpec> parts);

    PropertySpec operator&(const PropertySpec & other) const;

    /// Throws std::invalid_argument when an atom names a missing slot.
    bool holds(std::span<const SetFamily> families) const;
    bool holds(const SetFamily & family) const { return holds(std::span<const SetFamily>(&family, 1)); }

    const std::vector<Atom> & atoms() const { return atoms_; }
    bool is_trivially_true() const { return atoms_.empty(); }

    /// Canonical text in the mini-grammar accepted by parse().
    std::string str() const;

    /// Grammar: atoms joined by '&'.
    ///   intersecting | t-intersecting(t) | cross(a,b,t) | cross(a,b,t=1)
    ///   rho<=p/q | nu<=s | nontrivial | overlapping | true
    /// Slot-bearing atoms take an optional "@i" suffix; without it they
    /// apply to every slot.
    static PropertySpec parse(std::string_view text);

private:
    std::vector<Atom> atoms_;
};

} // namespace extremal
