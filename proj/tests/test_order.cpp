#include "doctest.h"

#include "extremal/measures.hpp"
#include "extremal/order.hpp"

#include <algorithm>
#include <random>

using namespace extremal;

namespace {

SetFamily fam(int n, int k, std::initializer_list<std::initializer_list<int>> sets)
{
    std::vector<KSet> members;
    for (auto s : sets) members.push_back(KSet::of(s));
    return SetFamily(n, k, members);
}

SetFamily fano()
{
    return fam(7, 3, {{1, 2, 4}, {2, 3, 5}, {3, 4, 6}, {4, 5, 7}, {1, 5, 6}, {2, 6, 7}, {1, 3, 7}});
}

SetFamily subfamily(const std::vector<KSet> & all, int n, int k, std::uint64_t pick)
{
    std::vector<KSet> members;
    for (std::size_t i = 0; i < all.size(); ++i)
        if (pick >> i & 1) members.push_back(all[i]);
    return SetFamily::from_sorted(n, k, std::move(members));
}

// Oracle: lexicographic comparison of the increasing element lists.
bool lex_by_lists(KSet a, KSet b)
{
    auto x = a.elements(), y = b.elements();
    return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
}

// Oracle: Kruskal–Katona via the cascade representation of m.
std::uint64_t cascade_shadow(int k, std::uint64_t m, int l)
{
    std::uint64_t total = 0;
    for (int i = k; i >= 1 && m > 0; --i) {
        int a = i;
        while (binomial(a + 1, i) <= m) ++a;
        m -= binomial(a, i);
        total += binomial(a, i - l);
    }
    return total;
}

} // namespace

TEST_CASE("lex order")
{
    CHECK(lex_leq(KSet::of({1, 2, 9}), KSet::of({1, 3, 4})));
    CHECK_FALSE(lex_leq(KSet::of({2, 3}), KSet::of({1, 9})));
    CHECK(lex_leq(KSet::of({4, 5}), KSet::of({4, 5})));
    CHECK_FALSE(lex_less(KSet::of({4, 5}), KSet::of({4, 5})));
    CHECK_THROWS_AS(lex_leq(KSet::of({1}), KSet::of({1, 2})), std::invalid_argument);
    auto all = enumerate_ksubsets(7, 3);
    for (KSet a : all)
        for (KSet b : all) CHECK(lex_less(a, b) == lex_by_lists(a, b));
}

TEST_CASE("lex ranking")
{
    KSet ground = KSet::of({2, 3, 5, 7, 8, 11});
    std::vector<KSet> subsets;
    for (KSet s : enumerate_ksubsets(11, 3))
        if (s.subset_of(ground)) subsets.push_back(s);
    std::sort(subsets.begin(), subsets.end(), lex_by_lists);
    for (std::size_t r = 0; r < subsets.size(); ++r) {
        CHECK(lex_rank(ground, subsets[r]) == r);
        CHECK(lex_unrank(ground, 3, r) == subsets[r]);
    }
    CHECK_THROWS_AS(lex_unrank(ground, 3, 20), std::invalid_argument);
}

TEST_CASE("lex segments")
{
    CHECK(lex_segment(4, 2, 3).members == fam(4, 2, {{1, 2}, {1, 3}, {1, 4}}));
    CHECK(lex_segment(4, 2, 0).members.empty());
    SetFamily seg = lex_segment(6, 3, 11).members;
    CHECK(seg.size() == 11);
    for (KSet s : seg) CHECK((s.contains(1) || s == KSet::of({2, 3, 4})));
    CHECK_THROWS_AS(lex_segment(6, 3, 21), std::invalid_argument);

    auto all = enumerate_ksubsets(8, 4);
    std::sort(all.begin(), all.end(), lex_by_lists);
    for (std::uint64_t m = 0; m <= all.size(); m += 7) {
        std::vector<KSet> prefix(all.begin(), all.begin() + m);
        CHECK(lex_segment(8, 4, m).members == SetFamily(8, 4, prefix));
    }
    SetFamily inside = lex_segment(9, KSet::of({3, 5, 6, 9}), 2, 4).members;
    CHECK(inside == fam(9, 2, {{3, 5}, {3, 6}, {3, 9}, {5, 6}}));
}

TEST_CASE("shadows")
{
    CHECK(shadow(fam(3, 3, {{1, 2, 3}})) == fam(3, 2, {{1, 2}, {1, 3}, {2, 3}}));
    CHECK(shadow(fam(3, 2, {{1, 2}, {1, 3}, {2, 3}})).size() == 3);
    CHECK(shadow(fano()).size() == 21);
    CHECK(shadow(fano(), 0) == fano());
    CHECK(shadow(fano(), 3).size() == 1);
    CHECK_THROWS_AS(shadow(fano(), 4), std::invalid_argument);

    std::mt19937_64 rng(41);
    auto all = enumerate_ksubsets(8, 4);
    for (int round = 0; round < 50; ++round) {
        SetFamily f = subfamily(all, 8, 4, rng());
        CHECK(shadow(shadow(f, 1), 1) == shadow(f, 2));
    }
}

TEST_CASE("lex segment of four triples has nine pair shadow")
{
    SetFamily seg = lex_segment(6, 3, 4).members;
    CHECK(seg == fam(6, 3, {{1, 2, 3}, {1, 2, 4}, {1, 2, 5}, {1, 2, 6}}));
    CHECK(shadow(seg).size() == 9);
    // The minimum is attained by the colex segment {123,124,134,234}.
    CHECK(kk_min_shadow(6, 3, 4, 1) == 6);
}

TEST_CASE("minimum shadow")
{
    CHECK(kk_min_shadow(6, 3, 20, 1) == binomial(6, 2));
    CHECK(kk_min_shadow(6, 3, 20, 2) == binomial(6, 1));
    CHECK(kk_min_shadow(6, 3, 1, 1) == 3);
    CHECK(kk_min_shadow(7, 4, 1, 2) == 6);
    CHECK(kk_min_shadow(6, 3, 0, 1) == 0);
    CHECK_THROWS_AS(kk_min_shadow(6, 3, 21, 1), std::invalid_argument);

    for (int n = 4; n <= 9; ++n)
        for (int k = 1; k <= std::min(n, 4); ++k)
            for (std::uint64_t m = 1; m <= binomial(n, k); ++m)
                for (int l = 1; l <= k; ++l)
                    CHECK(kk_min_shadow(n, k, m, l) == cascade_shadow(k, m, l));

    // Brute-force minimum over every family at (5, 3) and (6, 2).
    for (auto [n, k] : {std::pair{5, 3}, std::pair{6, 2}}) {
        auto all = enumerate_ksubsets(n, k);
        std::vector<std::uint64_t> best(all.size() + 1, ~std::uint64_t{0});
        for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << all.size()); ++pick) {
            SetFamily f = subfamily(all, n, k, pick);
            best[f.size()] = std::min<std::uint64_t>(best[f.size()], shadow(f).size());
        }
        for (std::uint64_t m = 0; m <= all.size(); ++m) CHECK(best[m] == kk_min_shadow(n, k, m, 1));
    }
}

TEST_CASE("hilton transfer")
{
    CHECK(hilton_transfer(fam(4, 2, {{1, 2}, {1, 3}}), fam(4, 2, {{1, 2}, {1, 4}})));
    CHECK(hilton_transfer(SetFamily(4, 2), SetFamily(4, 2)));
    CHECK_THROWS_AS(hilton_transfer(fam(4, 2, {{1, 2}}), fam(4, 2, {{3, 4}})), std::invalid_argument);
    CHECK_THROWS_AS(hilton_transfer(fam(4, 2, {{1, 2}}), fam(4, 3, {{1, 2, 3}})), std::invalid_argument);

    // Every cross-intersecting pair at n = 5 with a = 1, b = 3 and at n = 4 with a = b = 2.
    for (auto [n, a, b] : {std::tuple{5, 1, 3}, std::tuple{4, 2, 2}, std::tuple{5, 2, 3}}) {
        auto xs = enumerate_ksubsets(n, a), ys = enumerate_ksubsets(n, b);
        int checked = 0;
        for (std::uint64_t p = 0; p < (std::uint64_t{1} << xs.size()); ++p) {
            SetFamily fa = subfamily(xs, n, a, p);
            for (std::uint64_t q = 0; q < (std::uint64_t{1} << ys.size()); ++q) {
                SetFamily fb = subfamily(ys, n, b, q);
                if (! is_cross_t_intersecting(fa, fb, 1)) continue;
                ++checked;
                CHECK(hilton_transfer(fa, fb));
            }
        }
        CHECK(checked > 0);
    }
}

TEST_CASE("katona ratio")
{
    CHECK(katona_shadow_ratio(2, 1, 1) == Rational(1));
    CHECK(katona_shadow_ratio(3, 1, 1) == Rational(1));
    CHECK(katona_shadow_ratio(3, 2, 1) == Rational(3, 2));
    CHECK_THROWS_AS(katona_shadow_ratio(3, 1, 2), std::invalid_argument);
    CHECK_THROWS_AS(katona_shadow_ratio(3, 4, 1), std::invalid_argument);

    SetFamily triangle = fam(5, 2, {{1, 2}, {1, 3}, {2, 3}});
    CHECK(katona_shadow_bound_holds(triangle, 1, 1));
    CHECK(Rational(static_cast<std::int64_t>(shadow(triangle).size()))
          == Rational(static_cast<std::int64_t>(triangle.size())) * katona_shadow_ratio(2, 1, 1));
}

TEST_CASE("improved shadow threshold")
{
    SetFamily f = lex_segment(9, 4, 22).members;
    ImprovedShadow r = improved_shadow(f, 2, 1);
    CHECK(r.ratio == Rational(3, 2));
    CHECK(r.threshold == Rational(45, 2));
    CHECK_FALSE(r.applicable);
    CHECK(improved_shadow(lex_segment(9, 4, 23).members, 2, 1).applicable);
    CHECK_THROWS_AS(improved_shadow(f, 1, 1), std::invalid_argument);
}

TEST_CASE("cross shadow dichotomy")
{
    SetFamily k3 = fam(3, 2, {{1, 2}, {1, 3}, {2, 3}});
    CHECK(cross_shadow_dichotomy(k3, k3, 1, 1, 1));
    SetFamily star2 = fam(6, 3, {{1, 2, 3}, {1, 2, 4}, {1, 2, 5}, {1, 2, 6}});
    CHECK(cross_shadow_dichotomy(star2, star2, 2, 1, 1));
    CHECK_THROWS_AS(cross_shadow_dichotomy(SetFamily(3, 2), k3, 1, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(cross_shadow_dichotomy(k3, k3, 1, 2, 1), std::invalid_argument);

    std::mt19937_64 rng(43);
    auto all = enumerate_ksubsets(7, 3);
    int checked = 0;
    for (int round = 0; round < 4000 && checked < 200; ++round) {
        // Sparse families through element 1 or 2 so that cross pairs are common.
        std::vector<KSet> ma, mb;
        for (KSet s : all) {
            if (s.contains(1) && rng() % 4 == 0) ma.push_back(s);
            if ((s.contains(1) || s.contains(2)) && rng() % 6 == 0) mb.push_back(s);
        }
        SetFamily fa(7, 3, ma), fb(7, 3, mb);
        if (fa.empty() || fb.empty() || ! is_cross_t_intersecting(fa, fb, 1)) continue;
        ++checked;
        CHECK(cross_shadow_dichotomy(fa, fb, 1, 1, 1));
    }
    CHECK(checked > 0);
}

TEST_CASE("isomorphism by relabeling")
{
    SetFamily k3 = fam(5, 2, {{1, 2}, {1, 3}, {2, 3}});
    CHECK(are_isomorphic(k3, fam(5, 2, {{2, 5}, {4, 5}, {2, 4}})).value());
    CHECK_FALSE(are_isomorphic(k3, fam(5, 2, {{1, 2}, {1, 3}, {1, 4}})).value());
    CHECK_FALSE(are_isomorphic(SetFamily(11, 2), SetFamily(11, 2)).has_value());

    // Oracle: a family is a copy of C([3], 2) iff it is every pair of a 3-set.
    auto all = enumerate_ksubsets(5, 2);
    for (std::uint64_t pick = 0; pick < (1u << all.size()); ++pick) {
        SetFamily f = subfamily(all, 5, 2, pick);
        bool complete = f.support().size() == 3 && f.size() == 3;
        CHECK(are_isomorphic(f, k3).value() == complete);
    }
    SetFamily relabeled = fam(7, 3, {{7, 6, 4}, {6, 5, 3}, {5, 4, 2}, {4, 3, 1}, {7, 3, 2}, {6, 2, 1}, {7, 5, 1}});
    CHECK(are_isomorphic(fano(), relabeled).value());
}
