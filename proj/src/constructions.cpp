#include "extremal/constructions.hpp"

#include "extremal/measures.hpp"
#include "extremal/order.hpp"

#include <array>
#include <functional>

namespace extremal {

namespace {

SetFamily select(int n, int k, const std::function<bool(KSet)> & keep)
{
    std::vector<KSet> out;
    for (KSet s : enumerate_ksubsets(n, k))
        if (keep(s)) out.push_back(s);
    return SetFamily::from_sorted(n, k, std::move(out));
}

bool has(KSet s, std::initializer_list<int> elements)
{
    return KSet::of(elements).subset_of(s);
}

/// Addition and multiplication tables of GF(q) for q in {2, 3, 4, 5, 7}.
struct SmallField {
    int q;
    std::vector<std::vector<int>> add, mul;

    explicit SmallField(int order) : q(order), add(order, std::vector<int>(order)), mul(order, std::vector<int>(order))
    {
        if (q == 4) {
            // GF(2)[x] / (x² + x + 1): element b1 b0 stands for b1 x + b0.
            for (int a = 0; a < 4; ++a)
                for (int b = 0; b < 4; ++b) {
                    add[a][b] = a ^ b;
                    int p = 0;
                    for (int i = 0; i < 2; ++i)
                        if (b >> i & 1) p ^= a << i;
                    if (p & 4) p ^= 0b111;
                    mul[a][b] = p;
                }
            return;
        }
        for (int a = 0; a < q; ++a)
            for (int b = 0; b < q; ++b) {
                add[a][b] = (a + b) % q;
                mul[a][b] = (a * b) % q;
            }
    }
};

using Triple = std::array<int, 3>;

std::vector<Triple> normalized_triples(int q)
{
    std::vector<Triple> out{{0, 0, 1}};
    for (int y = 0; y < q; ++y) out.push_back({0, 1, y});
    for (int x = 0; x < q; ++x)
        for (int y = 0; y < q; ++y) out.push_back({1, x, y});
    return out;
}

void check_plane(const SetFamily & lines, int q)
{
    const std::uint64_t points = static_cast<std::uint64_t>(q) * q + q + 1;
    bool ok = lines.size() == points;
    for (std::size_t a = 0; ok && a < lines.size(); ++a) {
        ok = lines[a].size() == q + 1;
        for (std::size_t b = a + 1; ok && b < lines.size(); ++b) ok = intersection_size(lines[a], lines[b]) == 1;
    }
    // Lines meet pairwise once and cover C(points, 2) pairs in total, so
    // every pair of points is on exactly one line.
    ok = ok && shadow(lines, q - 1).size() == binomial(static_cast<int>(points), 2);
    if (! ok) throw std::logic_error("projective plane of order " + std::to_string(q) + " failed its axiom check");
}

std::uint64_t ipow(std::uint64_t base, int exp)
{
    std::uint64_t r = 1;
    while (exp-- > 0) r *= base;
    return r;
}

void need(bool ok, const std::string & what)
{
    if (! ok) throw std::invalid_argument(what);
}

} // namespace

SetFamily full_star(int n, int k, int t)
{
    need(0 <= t && t <= k && k <= n, "full_star needs 0 <= t <= k <= n");
    KSet core = KSet::prefix(t);
    return select(n, k, [&](KSet s) { return core.subset_of(s); });
}

SetFamily frankl_family(int n, int k, int t)
{
    need(t >= 0 && t + 2 <= n && k <= n, "frankl_family needs t + 2 <= n and k <= n");
    KSet core = KSet::prefix(t + 2);
    return select(n, k, [&](KSet s) { return intersection_size(s, core) >= t + 1; });
}

SetFamily triangle_family(int n, int k)
{
    need(3 <= n && k <= n, "triangle_family needs 3 <= n and k <= n");
    return threshold_family(n, k, 3, 2);
}

SetFamily threshold_family(int n, int k, int q, int a)
{
    need(0 <= q && q <= n && 0 <= k && k <= n, "threshold_family needs 0 <= q <= n and 0 <= k <= n");
    KSet core = KSet::prefix(q);
    return select(n, k, [&](KSet s) { return intersection_size(s, core) >= a; });
}

PairedStarParts paired_star_parts(int n, int k)
{
    need(5 <= n && 3 <= k && k <= n, "paired_star_parts needs n >= 5 and 3 <= k <= n");
    return {
        select(n, k, [](KSet s) { return has(s, {1, 2}) || has(s, {3, 4}); }),
        select(n, k, [](KSet s) { return has(s, {1, 3}) || has(s, {2, 4}); }),
        select(n, k, [](KSet s) { return has(s, {1, 4, 5}) || has(s, {2, 3, 5}); }),
    };
}

FamilyPair paired_star_cross(int n, int k)
{
    need(5 <= n && 3 <= k && k <= n, "paired_star_cross needs n >= 5 and 3 <= k <= n");
    auto in_s = [](KSet s) { return has(s, {1, 4, 5}) || has(s, {2, 3, 5}); };
    return {
        select(n, k, [&](KSet s) { return has(s, {1, 2}) || has(s, {3, 4}) || in_s(s); }),
        select(n, k, [&](KSet s) { return has(s, {1, 3}) || has(s, {2, 4}) || in_s(s); }),
    };
}

FamilyPair pair_matching_cross(int n, int k)
{
    need(4 <= n && 2 <= k && k <= n, "pair_matching_cross needs n >= 4 and 2 <= k <= n");
    return {
        select(n, k, [](KSet s) { return has(s, {1, 2}) || has(s, {3, 4}); }),
        select(n, k, [](KSet s) {
            return has(s, {1, 3}) || has(s, {1, 4}) || has(s, {2, 3}) || has(s, {2, 4});
        }),
    };
}

std::vector<SetFamily> brace_daykin(int n, int r)
{
    need(1 <= r && r + 1 <= n, "brace_daykin needs 1 <= r and r + 1 <= n");
    std::vector<SetFamily> slices;
    KSet core = KSet::prefix(r + 1);
    for (int k = 0; k <= n; ++k)
        slices.push_back(select(n, k, [&](KSet s) { return intersection_size(s, core) >= r; }));
    return slices;
}

SetFamily projective_plane(int q)
{
    if (q == 8) throw CapacityError("the projective plane of order 8 has 73 points, more than 63");
    need(q == 2 || q == 3 || q == 4 || q == 5 || q == 7, "projective_plane supports q in {2, 3, 4, 5, 7}");
    SmallField field(q);
    const auto triples = normalized_triples(q);
    const int points = static_cast<int>(triples.size());
    std::vector<KSet> lines;
    for (const Triple & line : triples) {
        Mask m = 0;
        for (int p = 0; p < points; ++p) {
            const Triple & pt = triples[p];
            int dot = 0;
            for (int c = 0; c < 3; ++c) dot = field.add[dot][field.mul[line[c]][pt[c]]];
            if (dot == 0) m |= Mask{1} << p;
        }
        lines.emplace_back(m);
    }
    SetFamily out(points, q + 1, std::move(lines));
    check_plane(out, q);
    return out;
}

FamilyPair disjoint_blocks(int k, int l)
{
    need(k >= 1 && l >= 1, "disjoint_blocks needs k, l >= 1");
    if (k * l > max_ground_size || ipow(k, l) > 10'000'000)
        throw CapacityError("disjoint_blocks(" + std::to_string(k) + ", " + std::to_string(l) + ") is too large");
    const int n = k * l;
    std::vector<KSet> blocks;
    for (int b = 0; b < l; ++b) blocks.push_back(KSet::interval(b * k + 1, b * k + k));
    std::vector<KSet> transversals;
    std::vector<int> choice(l, 0);
    for (;;) {
        Mask m = 0;
        for (int b = 0; b < l; ++b) m |= Mask{1} << (b * k + choice[b]);
        transversals.emplace_back(m);
        int b = l - 1;
        while (b >= 0 && ++choice[b] == k) choice[b--] = 0;
        if (b < 0) break;
    }
    return {SetFamily(n, k, std::move(blocks)), SetFamily(n, l, std::move(transversals))};
}

FamilyPair simplex_pair(int n, int k)
{
    need(1 <= k && k + 1 <= n, "simplex_pair needs 1 <= k and k + 1 <= n");
    KSet simplex = KSet::prefix(k + 1);
    return {select(n, k, [&](KSet s) { return s.subset_of(simplex); }),
            threshold_family(n, k, k + 1, 2)};
}

std::uint64_t max_initial_cross_sum(int n, int k)
{
    std::uint64_t g = binomial(k + 1, k);
    for (int i = 2; i <= k; ++i) g += binomial(k + 1, i) * binomial(n - k - 1, k - i);
    return g;
}

NamedFamily construct(const std::string & id, const std::vector<int> & p)
{
    auto arity = [&](std::size_t count) {
        need(p.size() == count, id + " takes " + std::to_string(count) + " parameters");
    };
    auto b = [](int n, int k) { return binomial(n, k); };
    NamedFamily out{id, p, {}, {}};
    if (id == "star") {
        arity(3);
        out.families = {full_star(p[0], p[1], p[2])};
        out.predicted_sizes = {b(p[0] - p[2], p[1] - p[2])};
    }
    else if (id == "frankl") {
        arity(3);
        const int n = p[0], k = p[1], t = p[2];
        out.families = {frankl_family(n, k, t)};
        out.predicted_sizes = {(t + 2) * b(n - t - 2, k - t - 1) + b(n - t - 2, k - t - 2)};
    }
    else if (id == "triangle") {
        arity(2);
        out.families = {triangle_family(p[0], p[1])};
        out.predicted_sizes = {3 * b(p[0] - 3, p[1] - 2) + b(p[0] - 3, p[1] - 3)};
    }
    else if (id == "threshold") {
        arity(4);
        const int n = p[0], k = p[1], q = p[2], a = p[3];
        out.families = {threshold_family(n, k, q, a)};
        std::uint64_t size = 0;
        for (int i = std::max(a, 0); i <= q; ++i) size += b(q, i) * b(n - q, k - i);
        out.predicted_sizes = {size};
    }
    else if (id == "paired-star") {
        arity(2);
        auto pair = paired_star_cross(p[0], p[1]);
        out.families = {pair.first, pair.second};
    }
    else if (id == "pair-matching") {
        arity(2);
        const int n = p[0], k = p[1];
        auto pair = pair_matching_cross(n, k);
        out.families = {pair.first, pair.second};
        out.predicted_sizes = {2 * b(n - 2, k - 2) - b(n - 4, k - 4),
                               4 * b(n - 4, k - 2) + 4 * b(n - 4, k - 3) + b(n - 4, k - 4)};
    }
    else if (id == "brace-daykin") {
        arity(2);
        const int n = p[0], r = p[1];
        out.families = brace_daykin(n, r);
        for (int k = 0; k <= n; ++k) {
            // Sizes k with |B ∩ [r+1]| = r or r + 1.
            out.predicted_sizes.push_back(b(r + 1, r) * b(n - r - 1, k - r) + b(n - r - 1, k - r - 1));
        }
    }
    else if (id == "plane" || id == "fano") {
        arity(id == "fano" ? 0 : 1);
        const int q = id == "fano" ? 2 : p[0];
        out.families = {projective_plane(q)};
        out.predicted_sizes = {static_cast<std::uint64_t>(q * q + q + 1)};
    }
    else if (id == "disjoint-blocks") {
        arity(2);
        auto pair = disjoint_blocks(p[0], p[1]);
        out.families = {pair.first, pair.second};
        out.predicted_sizes = {static_cast<std::uint64_t>(p[1]), ipow(p[0], p[1])};
    }
    else if (id == "simplex-pair") {
        arity(2);
        const int n = p[0], k = p[1];
        auto pair = simplex_pair(n, k);
        out.families = {pair.first, pair.second};
        out.predicted_sizes = {b(k + 1, k), max_initial_cross_sum(n, k) - b(k + 1, k)};
    }
    else {
        throw std::invalid_argument("unknown construction id '" + id + "'");
    }
    return out;
}

std::vector<std::string> construction_ids()
{
    return {"star", "frankl", "triangle", "threshold", "paired-star", "pair-matching",
            "brace-daykin", "plane", "fano", "disjoint-blocks", "simplex-pair"};
}

} // namespace extremal
