#include "extremal/measures.hpp"

#include <algorithm>
#include <array>
#include <unordered_set>

namespace extremal {

namespace {

std::vector<Mask> masks_of(const SetFamily & family)
{
    std::vector<Mask> out;
    out.reserve(family.size());
    for (KSet s : family) out.push_back(s.bits());
    return out;
}

class TransversalSearch {
public:
    TransversalSearch(std::vector<Mask> sets, int t) : sets_(std::move(sets)), t_(t) {}

    KSet solve()
    {
        best_ = greedy();
        best_size_ = std::popcount(best_);
        branch(0, 0, 0);
        return KSet(best_);
    }

private:
    int deficiency(Mask s, Mask chosen) const { return t_ - std::popcount(s & chosen); }

    Mask greedy() const
    {
        Mask chosen = 0;
        for (;;) {
            std::array<int, 64> hits{};
            bool deficient = false;
            for (Mask s : sets_) {
                if (deficiency(s, chosen) <= 0) continue;
                deficient = true;
                for (Mask m = s & ~chosen; m; m &= m - 1) ++hits[std::countr_zero(m)];
            }
            if (! deficient) return chosen;
            int best = static_cast<int>(std::max_element(hits.begin(), hits.end()) - hits.begin());
            chosen |= Mask{1} << best;
        }
    }

    void branch(Mask chosen, Mask forbidden, int size)
    {
        int worst = 0;
        Mask worst_free = 0;
        for (Mask s : sets_) {
            int d = deficiency(s, chosen);
            if (d <= 0) continue;
            Mask free = s & ~chosen & ~forbidden;
            if (std::popcount(free) < d) return;
            if (d > worst) {
                worst = d;
                worst_free = free;
            }
        }
        if (worst == 0) {
            if (size < best_size_) {
                best_size_ = size;
                best_ = chosen;
            }
            return;
        }
        if (size + worst >= best_size_) return;

        // Members with pairwise disjoint free parts need separate new elements.
        Mask used = 0;
        int packing = 0;
        for (Mask s : sets_) {
            int d = deficiency(s, chosen);
            if (d <= 0) continue;
            Mask free = s & ~chosen & ~forbidden;
            if (free & used) continue;
            used |= free;
            packing += d;
        }
        if (size + packing >= best_size_) return;

        // The i-th branch takes the i-th free element and forbids the earlier ones.
        int remaining = std::popcount(worst_free);
        for (Mask m = worst_free; m && remaining >= worst; m &= m - 1, --remaining) {
            Mask bit = m & -m;
            branch(chosen | bit, forbidden, size + 1);
            forbidden |= bit;
        }
    }

    std::vector<Mask> sets_;
    int t_;
    Mask best_ = 0;
    int best_size_ = 0;
};

class MatchingSearch {
public:
    explicit MatchingSearch(int k) : k_(k) {}

    int solve(std::vector<Mask> sets)
    {
        branch(std::move(sets), 0);
        return best_;
    }

private:
    void branch(std::vector<Mask> sets, int current)
    {
        if (current > best_) best_ = current;
        if (sets.empty()) return;
        Mask ground = 0;
        for (Mask s : sets) ground |= s;
        const int room = std::min<int>(static_cast<int>(sets.size()), std::popcount(ground) / k_);
        if (current + room <= best_) return;

        const Mask x = ground & -ground;
        std::vector<Mask> without_x;
        for (Mask s : sets)
            if (! (s & x)) without_x.push_back(s);
        for (Mask s : sets) {
            if (! (s & x)) continue;
            std::vector<Mask> rest;
            for (Mask r : without_x)
                if (! (r & s)) rest.push_back(r);
            branch(std::move(rest), current + 1);
        }
        branch(std::move(without_x), current);
    }

    int k_;
    int best_ = 0;
};

/// Minimum intersection size over all choices of at most j members, with an
/// early exit once it drops below `stop_below`.
int min_intersection(const SetFamily & family, int j, int stop_below)
{
    std::unordered_set<Mask> seen;
    std::vector<Mask> frontier;
    int best = family.uniformity();
    for (KSet s : family) {
        seen.insert(s.bits());
        frontier.push_back(s.bits());
    }
    for (int level = 2; level <= j && ! frontier.empty(); ++level) {
        std::vector<Mask> next;
        for (Mask a : frontier) {
            for (KSet s : family) {
                Mask m = a & s.bits();
                if (! seen.insert(m).second) continue;
                next.push_back(m);
                best = std::min(best, std::popcount(m));
                if (best < stop_below) return best;
            }
        }
        frontier = std::move(next);
    }
    return best;
}

void check_t(const SetFamily & family, int t)
{
    if (t < 1 || t > family.uniformity())
        throw std::invalid_argument("t = " + std::to_string(t) + " outside [1, k]");
}

} // namespace

int degree(const SetFamily & family, int i)
{
    int d = 0;
    for (KSet s : family) d += s.contains(i);
    return d;
}

std::vector<int> degrees(const SetFamily & family)
{
    std::vector<int> out(family.ground_size() + 1, 0);
    for (KSet s : family)
        for (Mask m = s.bits(); m; m &= m - 1) ++out[std::countr_zero(m) + 1];
    return out;
}

int max_degree_element(const SetFamily & family)
{
    if (family.empty()) return 0;
    auto d = degrees(family);
    return static_cast<int>(std::max_element(d.begin() + 1, d.end()) - d.begin());
}

Rational rho(const SetFamily & family)
{
    if (family.empty()) return Rational(0);
    auto d = degrees(family);
    int top = *std::max_element(d.begin(), d.end());
    return Rational(top, static_cast<std::int64_t>(family.size()));
}

KSet min_transversal(const SetFamily & family, int t)
{
    if (family.empty()) return KSet();
    check_t(family, t);
    return TransversalSearch(masks_of(family), t).solve();
}

int transversal_number(const SetFamily & family, int t)
{
    return min_transversal(family, t).size();
}

int matching_number(const SetFamily & family)
{
    if (family.empty()) return 0;
    if (family.uniformity() == 0) return 1;
    return MatchingSearch(family.uniformity()).solve(masks_of(family));
}

bool is_t_intersecting(const SetFamily & family, int t)
{
    if (family.empty()) return true;
    if (t > family.uniformity()) return false;
    auto members = family.members();
    for (std::size_t a = 0; a < members.size(); ++a)
        for (std::size_t b = a + 1; b < members.size(); ++b)
            if (intersection_size(members[a], members[b]) < t) return false;
    return true;
}

bool is_cross_t_intersecting(const SetFamily & f, const SetFamily & g, int t)
{
    if (f.ground_size() != g.ground_size())
        throw std::invalid_argument("cross intersection needs a common ground set");
    for (KSet a : f)
        for (KSet b : g)
            if (intersection_size(a, b) < t) return false;
    return true;
}

bool is_r_wise_t_intersecting(const SetFamily & family, int r, int t)
{
    if (r < 2) throw std::invalid_argument("r-wise intersection needs r >= 2");
    if (family.empty()) return true;
    return min_intersection(family, r, t) >= t;
}

int t_level(const SetFamily & family, int j)
{
    if (j < 1) throw std::invalid_argument("t_level needs j >= 1");
    return min_intersection(family, j, 0);
}

bool is_pseudo_t_intersecting(const SetFamily & family, int t)
{
    const int k = family.uniformity();
    for (KSet s : family) {
        bool ok = false;
        for (int l = 0; l <= k - t && ! ok; ++l)
            ok = intersection_size(s, KSet::prefix(2 * l + t)) >= l + t;
        if (! ok) return false;
    }
    return true;
}

SetFamily saturate(const SetFamily & family, const PropertySpec & property)
{
    if (! property.holds(family))
        throw std::invalid_argument("saturate: property fails on the input family");
    SetFamily current = family;
    const auto candidates = enumerate_ksubsets(family.ground_size(), family.uniformity());
    for (bool added = true; added;) {
        added = false;
        for (KSet s : candidates) {
            if (current.contains(s)) continue;
            SetFamily grown = current.with_member(s);
            if (property.holds(grown)) {
                current = std::move(grown);
                added = true;
            }
        }
    }
    return current;
}

bool is_saturated(const SetFamily & family, const PropertySpec & property)
{
    for (KSet s : enumerate_ksubsets(family.ground_size(), family.uniformity()))
        if (! family.contains(s) && property.holds(family.with_member(s))) return false;
    return true;
}

MeasureProfile measure_profile(const SetFamily & family, int max_level)
{
    MeasureProfile p;
    p.empty = family.empty();
    p.rho = rho(family);
    p.nu = matching_number(family);
    p.initial = is_initial(family);
    if (! family.empty())
        for (int t = 1; t <= family.uniformity(); ++t) p.tau[t] = transversal_number(family, t);
    for (int j = 2; j <= max_level; ++j) p.t_levels[j] = t_level(family, j);
    return p;
}

} // namespace extremal
