#include "doctest.h"

#include "extremal/constructions.hpp"
#include "extremal/measures.hpp"

#include <cmath>

using namespace extremal;

namespace {

std::uint64_t count_if_subsets(int n, int k, auto keep)
{
    std::uint64_t c = 0;
    for (KSet s : enumerate_ksubsets(n, k)) c += keep(s);
    return c;
}

Rational half_plus(int n, int k)
{
    return Rational(1, 2) + Rational(k - 2, 2 * (n - 2));
}

} // namespace

TEST_CASE("full star")
{
    SetFamily s = full_star(4, 2, 1);
    CHECK(s.size() == 3);
    CHECK(s.contains(KSet::of({1, 2})));
    CHECK(s.contains(KSet::of({1, 4})));
    CHECK(full_star(8, 3, 2).size() == 6);
    CHECK(rho(full_star(7, 3, 1)) == Rational(1));
    CHECK(is_initial(full_star(7, 3, 2)));
}

TEST_CASE("frankl family")
{
    SetFamily a = frankl_family(6, 3, 1);
    CHECK(a.size() == 10);
    CHECK(is_t_intersecting(a, 1));
    CHECK(transversal_number(a, 1) == 2);
    CHECK(rho(a) == Rational(7, 10));
    CHECK(link(a, KSet::of({1})).size() == 7);
    CHECK(frankl_family(8, 3, 1).size() == 16);
    // Larger than the full t-star strictly between 2k - t and (k-t+1)(t+1),
    // equal at (k-t+1)(t+1).
    for (int k = 2; k <= 6; ++k)
        for (int t = 1; t < k; ++t) {
            const int edge = (k - t + 1) * (t + 1);
            if (edge > 20) continue;
            for (int n = 2 * k - t + 1; n < edge; ++n)
                CHECK(frankl_family(n, k, t).size() > binomial(n - t, k - t));
            CHECK(frankl_family(edge, k, t).size() == binomial(edge - t, k - t));
        }
    for (int t = 1; t <= 3; ++t)
        for (int k = t + 1; k <= 5; ++k) {
            SetFamily f = frankl_family(2 * k + 2, k, t);
            CHECK(is_t_intersecting(f, t));
            CHECK(transversal_number(f, t) == t + 1);
            auto named = construct("frankl", {2 * k + 2, k, t});
            CHECK(named.predicted_sizes[0] == f.size());
        }
}

TEST_CASE("triangle family")
{
    CHECK(triangle_family(6, 3).size() == 10);
    CHECK(triangle_family(10, 4).size() == 70);
    CHECK(is_initial(triangle_family(9, 4)));
    for (int n = 6; n <= 14; ++n)
        for (int k = 2; k <= 5 && k <= n; ++k)
            CHECK(construct("triangle", {n, k}).predicted_sizes[0] == triangle_family(n, k).size());
    // Beyond 6k the triangle family outgrows 2C(n-2,k-2) + 4C(n-3,k-3).
    for (int k = 2; k <= 4; ++k)
        for (int n = 6 * k; n <= 6 * k + 12; ++n)
            CHECK(2 * binomial(n - 2, k - 2) + 4 * binomial(n - 3, k - 3) < triangle_family(n, k).size());
    Rational r = rho(triangle_family(30, 3));
    CHECK(r == Rational(55, 82));
    CHECK(r > Rational(2, 3));
}

TEST_CASE("threshold families")
{
    SetFamily e = threshold_family(6, 3, 3, 2);
    CHECK(is_cross_t_intersecting(e, e, 1));
    CHECK(is_initial(e));
    CHECK(threshold_family(6, 3, 3, 4).empty());
    CHECK(threshold_family(6, 3, 3, 0).size() == 20);
    for (int q = 1; q <= 5; ++q)
        for (int a = 0; a <= q + 1; ++a) {
            SetFamily x = threshold_family(9, 3, q, a), y = threshold_family(9, 3, q, q + 1 - a);
            CHECK(is_cross_t_intersecting(x, y, 1));
            CHECK(construct("threshold", {9, 3, q, a}).predicted_sizes[0] == x.size());
        }
}

TEST_CASE("paired star cross families")
{
    auto [f, g] = paired_star_cross(10, 4);
    CHECK(f.size() == g.size());
    CHECK(is_cross_t_intersecting(f, g, 1));
    CHECK(rho(f) < half_plus(10, 4));
    CHECK(rho(g) < half_plus(10, 4));
    auto parts = paired_star_parts(10, 4);
    std::uint64_t in_union = count_if_subsets(10, 4, [&](KSet s) { return parts.p.contains(s) || parts.s.contains(s); });
    CHECK(in_union == f.size());
    for (int n = 8; n <= 14; ++n) {
        auto [a, b] = paired_star_cross(n, 4);
        CHECK(a.size() == b.size());
        CHECK(is_cross_t_intersecting(a, b, 1));
    }
}

TEST_CASE("pair matching cross families")
{
    auto [f, g] = pair_matching_cross(10, 4);
    CHECK(f.size() == 55);
    CHECK(g.size() == 85);
    CHECK(is_cross_t_intersecting(f, g, 1));
    CHECK(rho(f) < half_plus(10, 4));
    CHECK(rho(g) < half_plus(10, 4));
    for (int n = 8; n <= 13; ++n)
        for (int k = 3; k <= 5; ++k) {
            auto named = construct("pair-matching", {n, k});
            CHECK(named.predicted_sizes[0] == named.families[0].size());
            CHECK(named.predicted_sizes[1] == named.families[1].size());
        }
}

TEST_CASE("brace daykin")
{
    auto total = [](const std::vector<SetFamily> & slices) {
        std::uint64_t t = 0;
        for (const auto & s : slices) t += s.size();
        return t;
    };
    CHECK(total(brace_daykin(4, 3)) == 5);
    CHECK(total(brace_daykin(6, 3)) == 20);
    for (int r = 2; r <= 5; ++r)
        for (int n = r + 1; n <= 10; ++n) {
            auto slices = brace_daykin(n, r);
            CHECK(total(slices) == static_cast<std::uint64_t>(r + 2) << (n - r - 1));
            auto named = construct("brace-daykin", {n, r});
            for (int k = 0; k <= n; ++k) CHECK(named.predicted_sizes[k] == slices[k].size());
        }
    // Every r members across all slices share an element; checked on the union.
    auto slices = brace_daykin(6, 3);
    std::vector<Mask> all;
    for (const auto & s : slices)
        for (KSet m : s) all.push_back(m.bits());
    for (Mask a : all)
        for (Mask b : all)
            for (Mask c : all) CHECK((a & b & c) != 0);
    CHECK(is_r_wise_t_intersecting(slices[4], 3, 1));
}

TEST_CASE("projective planes")
{
    SetFamily fano = projective_plane(2);
    CHECK(fano.ground_size() == 7);
    CHECK(fano.size() == 7);
    CHECK(rho(fano) == Rational(3, 7));
    CHECK(avoid(fano, KSet::of({1})).size() == 4);
    CHECK(meet(fano, KSet::of({1, 2})).size() == 5);
    for (int q : {2, 3, 4, 5, 7}) {
        SetFamily plane = projective_plane(q);
        const int points = q * q + q + 1;
        CHECK(plane.size() == static_cast<std::size_t>(points));
        CHECK(rho(plane) == Rational(q + 1, points));
        for (std::size_t a = 0; a < plane.size(); ++a)
            for (std::size_t b = a + 1; b < plane.size(); ++b) CHECK(intersection_size(plane[a], plane[b]) == 1);
        for (int d : degrees(plane)) CHECK((d == 0 || d == q + 1));
    }
    CHECK_THROWS_AS(projective_plane(8), CapacityError);
    CHECK_THROWS_AS(projective_plane(6), std::invalid_argument);
}

TEST_CASE("disjoint blocks")
{
    auto [p, r] = disjoint_blocks(2, 2);
    CHECK(p.size() == 2);
    CHECK(p.contains(KSet::of({1, 2})));
    CHECK(p.contains(KSet::of({3, 4})));
    CHECK(r.size() == 4);
    for (auto s : {KSet::of({1, 3}), KSet::of({1, 4}), KSet::of({2, 3}), KSet::of({2, 4})}) CHECK(r.contains(s));
    CHECK(rho(p) == Rational(1, 2));
    CHECK(rho(r) == Rational(1, 2));
    CHECK(is_cross_t_intersecting(p, r, 1));
    for (int k = 2; k <= 4; ++k)
        for (int l = 2; l <= 4; ++l) {
            auto [bp, br] = disjoint_blocks(k, l);
            CHECK(br.size() == static_cast<std::size_t>(std::pow(k, l)));
            CHECK(rho(bp) == Rational(1, l));
            CHECK(rho(br) == Rational(1, k));
            CHECK(is_cross_t_intersecting(bp, br, 1));
        }
}

TEST_CASE("simplex pair")
{
    auto [g, f] = simplex_pair(6, 2);
    CHECK(g.size() == 3);
    CHECK(f.size() == 3);
    CHECK(max_initial_cross_sum(6, 2) == 6);
    CHECK(is_cross_t_intersecting(g, f, 1));
    CHECK(is_initial(g));
    CHECK(is_initial(f));
    CHECK(rho(g) == Rational(2, 3));
    for (int k = 2; k <= 5; ++k)
        for (int n = 2 * k; n <= 2 * k + 5; ++n) {
            auto [sg, sf] = simplex_pair(n, k);
            CHECK(sg.size() + sf.size() == max_initial_cross_sum(n, k));
            CHECK(rho(sg) == Rational(k, k + 1));
        }
}

TEST_CASE("catalog dispatch")
{
    CHECK(construct("fano", {}).families[0] == projective_plane(2));
    CHECK(construct("star", {4, 2, 1}).families[0].size() == 3);
    CHECK(construct("triangle", {6, 3}).families[0].size() == 10);
    CHECK_THROWS_AS(construct("nope", {}), std::invalid_argument);
    CHECK_THROWS_AS(construct("star", {4, 2}), std::invalid_argument);
    for (const auto & id : construction_ids()) CHECK_FALSE(id.empty());
}
