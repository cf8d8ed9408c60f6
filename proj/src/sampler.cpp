#include "extremal/verify.hpp"

#include "extremal/constructions.hpp"
#include "extremal/shifting.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <unordered_set>

namespace extremal {

namespace {

constexpr std::uint64_t universe_limit = 2'000'000;

std::uint64_t splitmix(std::uint64_t x)
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t fnv1a(std::string_view s)
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) h = (h ^ c) * 0x100000001b3ULL;
    return h;
}

/// Integer-only draws so streams do not depend on the standard library's
/// distribution implementations.
struct Rng {
    std::mt19937_64 g;
    explicit Rng(std::uint64_t seed) : g(seed) {}
    std::uint64_t below(std::uint64_t bound) { return bound ? g() % bound : 0; }
    /// True with probability per_mille / 1000.
    bool chance(int per_mille) { return static_cast<int>(below(1000)) < per_mille; }
    template <class T>
    void shuffle(std::vector<T> & v)
    {
        for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
    }
};

int ground_of(const Params & point)
{
    const int n = int_param(point, "n");
    if (n < 1 || n > max_ground_size) throw std::invalid_argument("n must lie in 1.." + std::to_string(max_ground_size));
    return n;
}

/// Candidate members per slot, ascending by mask. Slices share one list of
/// all subsets of [n] held in slot 0.
std::vector<std::vector<Mask>> universes(const Statement & s, const Params & point, int n)
{
    std::vector<std::vector<Mask>> u;
    if (s.shape == Shape::slices) {
        if (n > 20) throw std::invalid_argument(s.id + ": ground set too large for the power set");
        std::vector<Mask> all(std::size_t{1} << n);
        for (Mask m = 0; m < all.size(); ++m) all[m] = m;
        u.push_back(std::move(all));
        return u;
    }
    for (const auto & name : s.uniformities) {
        const int k = int_param(point, name);
        if (k < 0 || k > n) throw std::invalid_argument(s.id + ": uniformity " + name + " outside 0..n");
        if (binomial(n, k) > universe_limit)
            throw std::invalid_argument(s.id + ": C(n," + name + ") too large to generate families");
        std::vector<Mask> sets;
        for (KSet x : enumerate_ksubsets(n, k)) sets.push_back(x.bits());
        u.push_back(std::move(sets));
    }
    return u;
}

/// Every distinct choice of up to r-1 members together with `s` still
/// meets in at least t elements.
bool rwise_fits(const std::vector<Mask> & members, Mask s, int r, int t)
{
    auto dfs = [&](auto && self, std::size_t from, int depth, Mask cur) -> bool {
        if (std::popcount(cur) < t) return false;
        if (depth == r - 1) return true;
        for (std::size_t i = from; i < members.size(); ++i)
            if (! self(self, i + 1, depth + 1, cur & members[i])) return false;
        return true;
    };
    return dfs(dfs, 0, 0, s);
}

/// Families under construction, kept within the guide's hereditary constraints.
struct Growing {
    Guide guide;
    std::vector<std::vector<Mask>> members;

    bool fits(std::size_t slot, Mask s) const
    {
        if (guide.self_t > 0)
            for (Mask m : members[slot])
                if (std::popcount(m & s) < guide.self_t) return false;
        if (guide.cross_t > 0 && members.size() == 2)
            for (Mask m : members[1 - slot])
                if (std::popcount(m & s) < guide.cross_t) return false;
        if (guide.rwise_r >= 2 && slot == 0 && ! rwise_fits(members[0], s, guide.rwise_r, guide.rwise_t)) return false;
        return true;
    }
};

std::vector<SetFamily> to_families(const Statement & s, const Params & point, int n,
                                   const std::vector<std::vector<Mask>> & members)
{
    std::vector<SetFamily> out;
    if (s.shape == Shape::slices) {
        std::vector<std::vector<KSet>> by_size(n + 1);
        for (Mask m : members[0]) by_size[std::popcount(m)].push_back(KSet(m));
        for (int k = 0; k <= n; ++k) out.emplace_back(n, k, std::move(by_size[k]));
        return out;
    }
    for (std::size_t i = 0; i < members.size(); ++i) {
        std::vector<KSet> sets;
        for (Mask m : members[i]) sets.push_back(KSet(m));
        out.emplace_back(n, int_param(point, s.uniformities[i]), std::move(sets));
    }
    return out;
}

/// Applies S_ij to every slot for all i < j <= m until nothing moves.
void shift_until_stable(std::vector<SetFamily> & families, int m)
{
    for (bool moved = true; moved;) {
        moved = false;
        for (int j = 2; j <= m; ++j)
            for (int i = 1; i < j; ++i)
                for (auto & f : families) {
                    SetFamily g = shift(f, i, j);
                    if (! (g == f)) {
                        f = std::move(g);
                        moved = true;
                    }
                }
    }
}

std::vector<std::vector<Mask>> masks_of(const std::vector<SetFamily> & families)
{
    std::vector<std::vector<Mask>> out;
    for (const auto & f : families) {
        std::vector<Mask> v;
        for (KSet s : f) v.push_back(s.bits());
        out.push_back(std::move(v));
    }
    return out;
}

SamplerMode resolve(SamplerMode mode, Rng & rng)
{
    if (mode != SamplerMode::mixed) return mode;
    static constexpr SamplerMode choices[] = {SamplerMode::uniform, SamplerMode::star_perturbation,
                                              SamplerMode::shifted_random};
    return choices[rng.below(3)];
}

std::vector<SetFamily> draw_families(const Statement & s, const Params & point, const Sampler & sampler, Rng & rng)
{
    const int n = ground_of(point);
    const Guide guide = s.guide ? s.guide(point) : Guide{};
    const auto universe = universes(s, point, n);
    const std::size_t slots = universe.size();
    const SamplerMode mode = resolve(sampler.mode, rng);
    const int density = sampler.density >= 0 ? static_cast<int>(sampler.density * 1000) : 20 + static_cast<int>(rng.below(580));

    // Proposed members in insertion order: (slot, mask).
    std::vector<std::pair<std::size_t, Mask>> base;
    if (mode == SamplerMode::star_perturbation) {
        const int keep = 500 + static_cast<int>(rng.below(501));
        if (s.shape == Shape::slices && guide.rwise_r >= 2 && n > guide.rwise_r && rng.chance(500)) {
            for (const auto & slice : brace_daykin(n, guide.rwise_r))
                for (KSet m : slice)
                    if (rng.chance(keep)) base.emplace_back(0, m.bits());
        }
        else if (s.shape != Shape::slices && rng.chance(333)) {
            // Kernel: every member inside one small random set, which gives
            // non-trivial families with large pairwise intersections.
            int smallest = n;
            for (const auto & u : universe)
                if (! u.empty()) smallest = std::min(smallest, std::popcount(u.back()));
            const int size = std::min(n, smallest + 1 + static_cast<int>(rng.below(2)));
            std::vector<int> elements(n);
            for (int i = 0; i < n; ++i) elements[i] = i;
            rng.shuffle(elements);
            Mask kernel = 0;
            for (int i = 0; i < size; ++i) kernel |= Mask{1} << elements[i];
            for (std::size_t slot = 0; slot < slots; ++slot)
                for (Mask m : universe[slot])
                    if ((m & ~kernel) == 0 && rng.chance(keep)) base.emplace_back(slot, m);
        }
        else {
            int smallest = n;
            for (const auto & u : universe)
                if (! u.empty()) smallest = std::min(smallest, std::popcount(u.back()));
            const int core_size = std::clamp(guide.star_core, 0, s.shape == Shape::slices ? n : smallest);
            std::vector<int> elements(n);
            for (int i = 0; i < n; ++i) elements[i] = i;
            rng.shuffle(elements);
            Mask core = 0;
            for (int i = 0; i < core_size; ++i) core |= Mask{1} << elements[i];
            for (std::size_t slot = 0; slot < slots; ++slot)
                for (Mask m : universe[slot])
                    if ((m & core) == core && rng.chance(keep)) base.emplace_back(slot, m);
        }
        const int extra = static_cast<int>(rng.below(4));
        for (int e = 0; e < extra; ++e) {
            const std::size_t slot = rng.below(slots);
            if (! universe[slot].empty()) base.emplace_back(slot, universe[slot][rng.below(universe[slot].size())]);
        }
    }
    else {
        for (std::size_t slot = 0; slot < slots; ++slot)
            for (Mask m : universe[slot])
                if (rng.chance(density)) base.emplace_back(slot, m);
    }
    rng.shuffle(base);

    Growing grow{guide, std::vector<std::vector<Mask>>(slots)};
    std::vector<std::unordered_set<Mask>> present(slots);
    auto offer = [&](std::size_t slot, Mask m) {
        if (present[slot].count(m) || ! grow.fits(slot, m)) return;
        grow.members[slot].push_back(m);
        present[slot].insert(m);
    };
    auto extend = [&] {
        std::vector<std::pair<std::size_t, Mask>> rest;
        for (std::size_t slot = 0; slot < slots; ++slot)
            for (Mask m : universe[slot])
                if (! present[slot].count(m)) rest.emplace_back(slot, m);
        rng.shuffle(rest);
        for (auto [slot, m] : rest) offer(slot, m);
    };
    for (auto [slot, m] : base) offer(slot, m);
    if (guide.saturate || rng.chance(500)) extend();

    int shift_range = 0;
    if (guide.initial) shift_range = n;
    else if (guide.initial_gap >= 0) shift_range = std::max(0, n - guide.initial_gap);
    else if (mode == SamplerMode::shifted_random && s.shape != Shape::slices) shift_range = n;

    auto families = to_families(s, point, n, grow.members);
    if (shift_range > 1) {
        shift_until_stable(families, shift_range);
        if (guide.saturate) {
            grow.members = masks_of(families);
            for (std::size_t slot = 0; slot < slots; ++slot)
                present[slot] = std::unordered_set<Mask>(grow.members[slot].begin(), grow.members[slot].end());
            extend();
            families = to_families(s, point, n, grow.members);
            shift_until_stable(families, shift_range);
        }
    }
    return families;
}

/// Depth-first include/exclude over candidates in ascending mask order.
/// Initial families admit a set only after its immediate predecessors
/// (one element x moved down to x-1 with x <= range).
class Enumerator {
public:
    Enumerator(const Statement & s, const Params & point, const std::function<bool(const Instance &)> & visit)
        : s_(s), point_(point), visit_(visit), n_(ground_of(point)), universe_(universes(s, point, n_)),
          grow_{s.guide ? s.guide(point) : Guide{}, std::vector<std::vector<Mask>>(universe_.size())}
    {
        if (grow_.guide.initial) range_ = n_;
        else if (grow_.guide.initial_gap >= 0) range_ = std::max(0, n_ - grow_.guide.initial_gap);
    }

    std::uint64_t run()
    {
        if (universe_.empty()) emit();
        else dfs(0, 0);
        return visited_;
    }

private:
    bool predecessors_present(std::size_t slot, Mask s) const
    {
        if (range_ < 2) return true;
        const auto & chosen = grow_.members[slot]; // ascending by construction
        Mask movable = s & ~(s << 1) & ~Mask{1} & prefix_mask(range_);
        for (Mask m = movable; m; m &= m - 1) {
            const Mask bit = m & -m;
            const Mask lower = (s & ~bit) | (bit >> 1);
            if (! std::binary_search(chosen.begin(), chosen.end(), lower)) return false;
        }
        return true;
    }

    bool dfs(std::size_t slot, std::size_t index)
    {
        if (index == universe_[slot].size()) {
            if (slot + 1 < universe_.size()) return dfs(slot + 1, 0);
            return emit();
        }
        const Mask s = universe_[slot][index];
        if (! dfs(slot, index + 1)) return false;
        if (grow_.fits(slot, s) && predecessors_present(slot, s)) {
            grow_.members[slot].push_back(s);
            const bool go_on = dfs(slot, index + 1);
            grow_.members[slot].pop_back();
            if (! go_on) return false;
        }
        return true;
    }

    bool emit()
    {
        Instance base{point_, universe_.empty() ? std::vector<SetFamily>{} : to_families(s_, point_, n_, grow_.members)};
        if (! s_.expand) {
            ++visited_;
            return visit_(base);
        }
        for (const Instance & x : s_.expand(base)) {
            ++visited_;
            if (! visit_(x)) return false;
        }
        return true;
    }

    const Statement & s_;
    const Params & point_;
    const std::function<bool(const Instance &)> & visit_;
    int n_;
    std::vector<std::vector<Mask>> universe_;
    Growing grow_;
    int range_ = 0;
    std::uint64_t visited_ = 0;
};

} // namespace

std::string_view sampler_mode_name(SamplerMode mode)
{
    switch (mode) {
    case SamplerMode::uniform: return "uniform";
    case SamplerMode::star_perturbation: return "star_perturbation";
    case SamplerMode::shifted_random: return "shifted_random";
    case SamplerMode::mixed: return "mixed";
    }
    return "?";
}

SamplerMode parse_sampler_mode(std::string_view text)
{
    std::string t(text);
    std::replace(t.begin(), t.end(), '-', '_');
    if (t == "uniform") return SamplerMode::uniform;
    if (t == "star_perturbation" || t == "star") return SamplerMode::star_perturbation;
    if (t == "shifted_random" || t == "shifted") return SamplerMode::shifted_random;
    if (t == "mixed") return SamplerMode::mixed;
    throw std::invalid_argument("unknown sampler '" + std::string(text) + "'");
}

Instance sample_instance(const Statement & statement, const Params & point, const Sampler & sampler,
                         std::uint64_t index)
{
    std::uint64_t h = splitmix(sampler.seed);
    h = splitmix(h ^ fnv1a(statement.id));
    h = splitmix(h ^ fnv1a(params_str(point)));
    h = splitmix(h ^ index);
    Rng rng(h);

    Instance in{point, {}};
    if (statement.shape != Shape::scalars) in.families = draw_families(statement, point, sampler, rng);
    if (statement.complete) statement.complete(in, rng.g());
    return in;
}

std::uint64_t enumerate_instances(const Statement & statement, const Params & point,
                                  const std::function<bool(const Instance &)> & visit)
{
    if (statement.shape == Shape::scalars) {
        std::uint64_t visited = 0;
        Instance base{point, {}};
        if (! statement.expand) return visit(base), 1;
        for (const Instance & x : statement.expand(base)) {
            ++visited;
            if (! visit(x)) break;
        }
        return visited;
    }
    return Enumerator(statement, point, visit).run();
}

std::uint64_t estimate_instances(const Statement & statement, const Params & point)
{
    constexpr std::uint64_t cap = std::uint64_t{1} << 63;
    if (statement.shape == Shape::scalars) return 1;
    const int n = ground_of(point);
    std::uint64_t bits = 0;
    if (statement.shape == Shape::slices) bits = n >= 63 ? 64 : std::uint64_t{1} << n;
    else
        for (const auto & name : statement.uniformities) bits += binomial(n, int_param(point, name));
    if (statement.expand) bits += static_cast<std::uint64_t>(n); // every expansion ranges over at most 2^n choices
    return bits >= 63 ? cap : std::uint64_t{1} << bits;
}

} // namespace extremal
