#include "extremal/core.hpp"

#include <algorithm>
#include <array>

namespace extremal {

namespace {

void check_ground(int n)
{
    if (n > max_ground_size)
        throw CapacityError("ground set size " + std::to_string(n) + " exceeds " + std::to_string(max_ground_size));
    if (n < 0)
        throw std::invalid_argument("negative ground set size");
}

constexpr int binomial_rows = 68;

using BinomialTable = std::array<std::array<std::uint64_t, binomial_rows>, binomial_rows>;

const BinomialTable & binomial_table()
{
    static const BinomialTable table = [] {
        BinomialTable t{};
        for (int n = 0; n < binomial_rows; ++n) {
            t[n][0] = 1;
            for (int k = 1; k <= n; ++k)
                t[n][k] = t[n - 1][k - 1] + (k < n ? t[n - 1][k] : 0);
        }
        return t;
    }();
    return table;
}

} // namespace

KSet KSet::of(std::initializer_list<int> elements)
{
    return of(std::span<const int>(elements.begin(), elements.size()));
}

KSet KSet::of(std::span<const int> elements)
{
    Mask m = 0;
    for (int e : elements) {
        if (e < 1 || e > max_ground_size)
            throw std::invalid_argument("element " + std::to_string(e) + " outside [1, 63]");
        m |= Mask{1} << (e - 1);
    }
    return KSet(m);
}

KSet KSet::interval(int from, int to)
{
    if (from < 1) from = 1;
    if (to > max_ground_size) to = max_ground_size;
    if (from > to) return KSet();
    return KSet(prefix_mask(to) & ~prefix_mask(from - 1));
}

std::vector<int> KSet::elements() const
{
    std::vector<int> out;
    out.reserve(size());
    for (Mask m = bits_; m; m &= m - 1)
        out.push_back(std::countr_zero(m) + 1);
    return out;
}

std::string KSet::str() const
{
    if (bits_ == 0) return "{}";
    std::string s;
    for (int e : elements()) {
        if (! s.empty()) s += ',';
        s += std::to_string(e);
    }
    return s;
}

SetFamily::SetFamily(int n, int k) : n_(n), k_(k)
{
    check_ground(n);
    if (k < 0 || k > n)
        throw std::invalid_argument("uniformity " + std::to_string(k) + " outside [0, n]");
}

SetFamily::SetFamily(int n, int k, std::vector<KSet> members) : SetFamily(n, k)
{
    const Mask outside = ~prefix_mask(n);
    for (KSet s : members) {
        if (s.size() != k)
            throw std::invalid_argument("member {" + s.str() + "} does not have " + std::to_string(k) + " elements");
        if (s.bits() & outside)
            throw std::invalid_argument("member {" + s.str() + "} leaves [" + std::to_string(n) + "]");
    }
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    members_ = std::move(members);
}

SetFamily SetFamily::from_sorted(int n, int k, std::vector<KSet> members)
{
    SetFamily f(n, k);
    f.members_ = std::move(members);
    return f;
}

bool SetFamily::contains(KSet s) const
{
    return std::binary_search(members_.begin(), members_.end(), s);
}

KSet SetFamily::common_part() const
{
    Mask m = prefix_mask(n_);
    for (KSet s : members_) m &= s.bits();
    return KSet(m);
}

KSet SetFamily::support() const
{
    Mask m = 0;
    for (KSet s : members_) m |= s.bits();
    return KSet(m);
}

SetFamily SetFamily::with_member(KSet s) const
{
    std::vector<KSet> members = members_;
    members.push_back(s);
    return SetFamily(n_, k_, std::move(members));
}

std::uint64_t binomial(int n, int k)
{
    if (n < 0 || k < 0 || k > n) return 0;
    if (n >= binomial_rows)
        throw std::overflow_error("binomial(" + std::to_string(n) + ", k) exceeds 64 bits");
    return binomial_table()[n][k];
}

std::vector<KSet> enumerate_ksubsets(int n, int k)
{
    check_ground(n);
    if (k < 0 || k > n)
        throw std::invalid_argument("k outside [0, n]");
    std::vector<KSet> out;
    out.reserve(binomial(n, k));
    if (k == 0) {
        out.emplace_back(0);
        return out;
    }
    const Mask limit = Mask{1} << n;
    Mask m = prefix_mask(k);
    // Gosper's hack walks masks of fixed popcount in increasing order.
    while (m < limit) {
        out.emplace_back(m);
        Mask c = m & -m;
        Mask r = m + c;
        m = (((r ^ m) >> 2) / c) | r;
    }
    return out;
}

SetFamily link(const SetFamily & family, KSet e)
{
    const int k = family.uniformity() - e.size();
    if (k < 0) return SetFamily(family.ground_size(), 0);
    std::vector<KSet> out;
    for (KSet f : family)
        if (e.subset_of(f)) out.push_back(f.minus(e));
    return SetFamily::from_sorted(family.ground_size(), k, std::move(out));
}

SetFamily avoid(const SetFamily & family, KSet e)
{
    std::vector<KSet> out;
    for (KSet f : family)
        if (f.disjoint_from(e)) out.push_back(f);
    return SetFamily::from_sorted(family.ground_size(), family.uniformity(), std::move(out));
}

SetFamily trace(const SetFamily & family, KSet e0, KSet e)
{
    if (! e0.subset_of(e))
        throw std::invalid_argument("trace: E0 = {" + e0.str() + "} is not a subset of E = {" + e.str() + "}");
    const int k = family.uniformity() - e0.size();
    if (k < 0) return SetFamily(family.ground_size(), 0);
    std::vector<KSet> out;
    for (KSet f : family)
        if ((f & e) == e0) out.push_back(f.minus(e));
    return SetFamily::from_sorted(family.ground_size(), k, std::move(out));
}

SetFamily meet(const SetFamily & family, KSet p)
{
    std::vector<KSet> out;
    for (KSet f : family)
        if (! f.disjoint_from(p)) out.push_back(f);
    return SetFamily::from_sorted(family.ground_size(), family.uniformity(), std::move(out));
}

bool shift_order_leq(KSet p, KSet q)
{
    if (p.size() != q.size())
        throw std::invalid_argument("shift order compares sets of equal size only");
    Mask a = p.bits(), b = q.bits();
    while (a) {
        if (std::countr_zero(a) > std::countr_zero(b)) return false;
        a &= a - 1;
        b &= b - 1;
    }
    return true;
}

bool is_initial(const SetFamily & family)
{
    // ≺ is generated by the moves G -> G - j + (j-1) with j-1 ∉ G, so it is
    // enough to check closure under those.
    for (KSet g : family) {
        Mask movable = g.bits() & ~(g.bits() << 1) & ~Mask{1};
        for (Mask m = movable; m; m &= m - 1) {
            Mask bit = m & -m;
            KSet lower((g.bits() & ~bit) | (bit >> 1));
            if (! family.contains(lower)) return false;
        }
    }
    return true;
}

} // namespace extremal
