#include "extremal/order.hpp"

#include "extremal/measures.hpp"

#include <algorithm>
#include <array>

namespace extremal {

namespace {

using Wide = unsigned __int128;

void check_sizes(KSet a, KSet b)
{
    if (a.size() != b.size())
        throw std::invalid_argument("lex order compares sets of equal size only");
}

/// 1-based positions of the elements of `a` inside `ground`.
std::vector<int> positions(KSet ground, KSet a)
{
    std::vector<int> out;
    int pos = 0;
    for (Mask m = ground.bits(); m; m &= m - 1) {
        ++pos;
        if (a.bits() & (m & -m)) out.push_back(pos);
    }
    return out;
}

Mask from_positions(const std::vector<Mask> & ground_bits, const std::vector<int> & pos)
{
    Mask m = 0;
    for (int p : pos) m |= ground_bits[p - 1];
    return m;
}

std::vector<Mask> element_bits(KSet ground)
{
    std::vector<Mask> out;
    for (Mask m = ground.bits(); m; m &= m - 1) out.push_back(m & -m);
    return out;
}

class Relabeling {
public:
    Relabeling(const SetFamily & f, const SetFamily & g)
        : f_(f), g_(g), n_(f.ground_size()), deg_f_(degrees(f)), deg_g_(degrees(g))
    {
        by_max_.resize(n_ + 1);
        for (KSet s : f_) by_max_[s.max_element()].push_back(s);
    }

    bool search() { return assign(1, 0); }

private:
    bool assign(int element, Mask used)
    {
        if (element > n_) return true;
        for (int target = 1; target <= n_; ++target) {
            Mask bit = Mask{1} << (target - 1);
            if ((used & bit) || deg_f_[element] != deg_g_[target]) continue;
            image_[element] = target;
            if (consistent(element) && assign(element + 1, used | bit)) return true;
        }
        return false;
    }

    bool consistent(int element) const
    {
        for (KSet s : by_max_[element]) {
            Mask m = 0;
            for (Mask r = s.bits(); r; r &= r - 1) m |= Mask{1} << (image_[std::countr_zero(r) + 1] - 1);
            if (! g_.contains(KSet(m))) return false;
        }
        return true;
    }

    const SetFamily & f_;
    const SetFamily & g_;
    int n_;
    std::vector<int> deg_f_, deg_g_;
    std::vector<std::vector<KSet>> by_max_;
    std::array<int, 11> image_{};
};

} // namespace

bool lex_less(KSet a, KSet b)
{
    check_sizes(a, b);
    Mask d = a.bits() ^ b.bits();
    return d && (a.bits() & (d & -d));
}

bool lex_leq(KSet a, KSet b)
{
    return a == b || lex_less(a, b);
}

std::uint64_t lex_rank(KSet ground, KSet a)
{
    if (! a.subset_of(ground)) throw std::invalid_argument("lex_rank: set is not inside the ground set");
    const int n = ground.size(), k = a.size();
    std::uint64_t rank = 0;
    int previous = 0, i = 0;
    for (int p : positions(ground, a)) {
        ++i;
        for (int q = previous + 1; q < p; ++q) rank += binomial(n - q, k - i);
        previous = p;
    }
    return rank;
}

KSet lex_unrank(KSet ground, int k, std::uint64_t rank)
{
    const int n = ground.size();
    if (k < 0 || k > n || rank >= binomial(n, k))
        throw std::invalid_argument("lex_unrank: rank out of range");
    std::vector<int> pos;
    int q = 1;
    for (int i = 1; i <= k; ++i, ++q) {
        for (;; ++q) {
            std::uint64_t count = binomial(n - q, k - i);
            if (rank < count) break;
            rank -= count;
        }
        pos.push_back(q);
    }
    return KSet(from_positions(element_bits(ground), pos));
}

LexSegment lex_segment(int n, KSet ground, int k, std::uint64_t m)
{
    if (! ground.subset_of(KSet::prefix(n)))
        throw std::invalid_argument("lex_segment: ground set leaves [n]");
    const int size = ground.size();
    if (k < 0 || k > size || m > binomial(size, k))
        throw std::invalid_argument("lex_segment: m outside [0, C(|X|, k)]");
    LexSegment seg{ground, k, m, SetFamily(n, k)};
    const auto bits = element_bits(ground);
    std::vector<KSet> out;
    out.reserve(m);
    std::vector<int> pos(k);
    for (int i = 0; i < k; ++i) pos[i] = i + 1;
    for (std::uint64_t produced = 0; produced < m; ++produced) {
        out.emplace_back(from_positions(bits, pos));
        // Lex successor: bump the rightmost position that still has room.
        int i = k - 1;
        while (i >= 0 && pos[i] == size - k + i + 1) --i;
        if (i < 0) break;
        ++pos[i];
        for (int j = i + 1; j < k; ++j) pos[j] = pos[j - 1] + 1;
    }
    seg.members = SetFamily(n, k, std::move(out));
    return seg;
}

SetFamily colex_segment(int n, int k, std::uint64_t m)
{
    if (k < 0 || k > n || m > binomial(n, k))
        throw std::invalid_argument("colex_segment: m outside [0, C(n, k)]");
    auto all = enumerate_ksubsets(n, k);
    all.resize(m);
    return SetFamily::from_sorted(n, k, std::move(all));
}

SetFamily shadow(const SetFamily & family, int l)
{
    const int k = family.uniformity();
    if (l < 0 || l > k) throw std::invalid_argument("shadow: l outside [0, k]");
    if (l == 0) return family;
    std::vector<KSet> out;
    for (KSet s : family) {
        // Every (k - l)-subset of s, via its complement inside s.
        for (Mask drop = s.bits();; drop = (drop - 1) & s.bits()) {
            if (std::popcount(drop) == l) out.emplace_back(s.bits() & ~drop);
            if (drop == 0) break;
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return SetFamily::from_sorted(family.ground_size(), k - l, std::move(out));
}

std::uint64_t kk_min_shadow(int n, int k, std::uint64_t m, int l)
{
    return shadow(colex_segment(n, k, m), l).size();
}

bool hilton_transfer(const SetFamily & a, const SetFamily & b)
{
    const int n = a.ground_size();
    if (b.ground_size() != n)
        throw std::invalid_argument("hilton_transfer: families live on different ground sets");
    if (n < a.uniformity() + b.uniformity())
        throw std::invalid_argument("hilton_transfer: needs n >= a + b");
    if (! is_cross_t_intersecting(a, b, 1))
        throw std::invalid_argument("hilton_transfer: families are not cross-intersecting");
    return is_cross_t_intersecting(lex_segment(n, a.uniformity(), a.size()).members,
                                   lex_segment(n, b.uniformity(), b.size()).members, 1);
}

Rational katona_shadow_ratio(int k, int t, int l)
{
    if (! (1 <= l && l <= t && t <= k))
        throw std::invalid_argument("katona_shadow_ratio: needs 1 <= l <= t <= k");
    return Rational(static_cast<std::int64_t>(binomial(2 * k - t, k - l)),
                    static_cast<std::int64_t>(binomial(2 * k - t, k)));
}

bool katona_shadow_bound_holds(const SetFamily & family, int t, int l)
{
    const int k = family.uniformity();
    Wide lhs = Wide(shadow(family, l).size()) * binomial(2 * k - t, k);
    Wide rhs = Wide(family.size()) * binomial(2 * k - t, k - l);
    return lhs >= rhs;
}

ImprovedShadow improved_shadow(const SetFamily & family, int t, int l)
{
    const int k = family.uniformity();
    if (! (1 <= l && l < t && t < k))
        throw std::invalid_argument("improved_shadow: needs 1 <= l < t < k");
    ImprovedShadow out;
    out.threshold = Rational(static_cast<std::int64_t>(binomial(2 * k - t, k)))
                  * (Rational(1) + Rational(t + l, k + t + 1 - l));
    out.ratio = Rational(static_cast<std::int64_t>(binomial(2 * (k - 1) - t, k - 1 - l)),
                         static_cast<std::int64_t>(binomial(2 * (k - 1) - t, k - 1)));
    out.applicable = Rational(static_cast<std::int64_t>(family.size())) >= out.threshold;
    return out;
}

bool cross_shadow_dichotomy(const SetFamily & a, const SetFamily & b, int t, int l1, int l2)
{
    if (a.empty() || b.empty())
        throw std::invalid_argument("cross_shadow_dichotomy: families must be nonempty");
    if (! (1 <= l1 && l1 < a.uniformity() && 1 <= l2 && l2 < b.uniformity()))
        throw std::invalid_argument("cross_shadow_dichotomy: needs 1 <= l_i < k_i");
    if (! is_cross_t_intersecting(a, b, t))
        throw std::invalid_argument("cross_shadow_dichotomy: families are not cross t-intersecting");
    return katona_shadow_bound_holds(a, t, l1) || katona_shadow_bound_holds(b, t, l2);
}

std::optional<bool> are_isomorphic(const SetFamily & f, const SetFamily & g)
{
    if (f.ground_size() != g.ground_size() || f.uniformity() != g.uniformity())
        throw std::invalid_argument("are_isomorphic: families must share n and k");
    if (f.ground_size() > 10) return std::nullopt;
    if (f.size() != g.size()) return false;
    auto df = degrees(f), dg = degrees(g);
    std::sort(df.begin(), df.end());
    std::sort(dg.begin(), dg.end());
    if (df != dg) return false;
    return Relabeling(f, g).search();
}

} // namespace extremal
