#include "doctest.h"

#include "extremal/measures.hpp"

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

SetFamily filtered(int n, int k, auto keep)
{
    std::vector<KSet> members;
    for (KSet s : enumerate_ksubsets(n, k))
        if (keep(s)) members.push_back(s);
    return SetFamily(n, k, members);
}

SetFamily random_family(std::mt19937_64 & rng, int n, int k, double density)
{
    std::bernoulli_distribution keep(density);
    return filtered(n, k, [&](KSet) { return keep(rng); });
}

// Oracles by exhaustive enumeration.

int tau_brute(const SetFamily & f, int t)
{
    if (f.empty()) return 0;
    for (int size = 0; size <= f.ground_size(); ++size)
        for (KSet s : enumerate_ksubsets(f.ground_size(), size)) {
            bool ok = true;
            for (KSet m : f) ok = ok && intersection_size(m, s) >= t;
            if (ok) return size;
        }
    return -1;
}

int nu_brute(const SetFamily & f)
{
    int best = 0;
    const std::size_t m = f.size();
    for (std::uint32_t pick = 0; pick < (1u << m); ++pick) {
        Mask used = 0;
        bool ok = true;
        for (std::size_t i = 0; i < m && ok; ++i)
            if (pick >> i & 1) {
                ok = ! (used & f[i].bits());
                used |= f[i].bits();
            }
        if (ok) best = std::max(best, std::popcount(pick));
    }
    return best;
}

int t_level_brute(const SetFamily & f, int j)
{
    int best = f.uniformity();
    std::vector<std::size_t> idx(j, 0);
    if (f.empty()) return best;
    for (;;) {
        Mask m = ~Mask{0};
        for (auto i : idx) m &= f[i].bits();
        best = std::min(best, std::popcount(m));
        int p = j - 1;
        while (p >= 0 && ++idx[p] == f.size()) idx[p--] = 0;
        if (p < 0) return best;
    }
}

} // namespace

TEST_CASE("degree")
{
    CHECK(degree(fano(), 1) == 3);
    SetFamily star = filtered(6, 3, [](KSet s) { return s.contains(1); });
    CHECK(degree(star, 1) == 10);
    CHECK(degree(fam(3, 2, {{1, 2}}), 3) == 0);
    CHECK(max_degree_element(fam(4, 2, {{2, 3}, {3, 4}})) == 3);
}

TEST_CASE("rho")
{
    SetFamily star = filtered(6, 3, [](KSet s) { return s.contains(1); });
    CHECK(rho(star) == Rational(1));
    CHECK(rho(fano()) == Rational(3, 7));
    SetFamily a631 = filtered(6, 3, [](KSet s) { return intersection_size(s, KSet::prefix(3)) >= 2; });
    CHECK(a631.size() == 10);
    CHECK(rho(a631) == Rational(7, 10));
    CHECK(rho(SetFamily(5, 2)) == Rational(0));

    std::mt19937_64 rng(3);
    for (int round = 0; round < 200; ++round) {
        SetFamily f = random_family(rng, 7, 3, 0.1);
        if (f.empty()) continue;
        CHECK((rho(f) == Rational(1)) == ! f.common_part().empty());
    }
}

TEST_CASE("transversal number")
{
    SetFamily a631 = filtered(6, 3, [](KSet s) { return intersection_size(s, KSet::prefix(3)) >= 2; });
    CHECK(transversal_number(a631, 1) == 2);
    SetFamily a841 = filtered(8, 4, [](KSet s) { return intersection_size(s, KSet::prefix(3)) >= 2; });
    CHECK(transversal_number(a841, 1) == 2);
    SetFamily a_t2 = filtered(8, 4, [](KSet s) { return intersection_size(s, KSet::prefix(4)) >= 3; });
    CHECK(transversal_number(a_t2, 2) == 3);
    SetFamily star2 = filtered(7, 3, [](KSet s) { return KSet::prefix(2).subset_of(s); });
    CHECK(transversal_number(star2, 2) == 2);
    CHECK(transversal_number(fano(), 1) == 3);
    CHECK(transversal_number(SetFamily(5, 2), 1) == 0);
    CHECK_THROWS_AS(transversal_number(fano(), 4), std::invalid_argument);
    CHECK_THROWS_AS(transversal_number(fano(), 0), std::invalid_argument);

    std::mt19937_64 rng(17);
    for (int round = 0; round < 150; ++round) {
        const int k = 2 + round % 3;
        SetFamily f = random_family(rng, 8, k, 0.12);
        for (int t = 1; t <= k; ++t) {
            int tau = transversal_number(f, t);
            CHECK(tau == tau_brute(f, t));
            KSet w = min_transversal(f, t);
            for (KSet s : f) CHECK(intersection_size(s, w) >= t);
            if (! f.empty()) CHECK((tau == t) == (f.common_part().size() >= t));
        }
    }
}

TEST_CASE("matching number")
{
    CHECK(matching_number(fam(4, 2, {{1, 2}, {3, 4}})) == 2);
    CHECK(matching_number(fam(6, 2, {{1, 2}, {3, 4}, {5, 6}})) == 3);
    CHECK(matching_number(fano()) == 1);
    CHECK(matching_number(SetFamily(4, 2)) == 0);

    std::mt19937_64 rng(23);
    for (int round = 0; round < 150; ++round) {
        SetFamily f = random_family(rng, 9, 2 + round % 2, 0.2);
        if (f.size() > 18) continue;
        CHECK(matching_number(f) == nu_brute(f));
        if (! f.empty()) CHECK((matching_number(f) == 1) == is_t_intersecting(f, 1));
    }
}

TEST_CASE("intersection predicates")
{
    CHECK(is_t_intersecting(filtered(3, 2, [](KSet) { return true; }), 1));
    CHECK_FALSE(is_t_intersecting(fam(5, 3, {{1, 2, 3}, {1, 4, 5}}), 2));
    SetFamily a631 = filtered(6, 3, [](KSet s) { return intersection_size(s, KSet::prefix(3)) >= 2; });
    CHECK(is_t_intersecting(a631, 1));
    CHECK(is_t_intersecting(SetFamily(5, 2), 7));
    CHECK_FALSE(is_t_intersecting(fam(5, 2, {{1, 2}}), 3));

    CHECK(is_cross_t_intersecting(SetFamily(4, 2), fam(4, 2, {{1, 2}}), 1));
    CHECK_FALSE(is_cross_t_intersecting(fam(4, 2, {{1, 2}}), fam(4, 2, {{3, 4}}), 1));
    CHECK_THROWS_AS(is_cross_t_intersecting(SetFamily(4, 2), SetFamily(5, 2), 1), std::invalid_argument);

    CHECK_FALSE(is_r_wise_t_intersecting(fam(3, 2, {{1, 2}, {1, 3}, {2, 3}}), 3, 1));
    CHECK(is_r_wise_t_intersecting(fam(3, 2, {{1, 2}, {1, 3}, {2, 3}}), 2, 1));
    SetFamily star2 = filtered(7, 3, [](KSet s) { return KSet::prefix(2).subset_of(s); });
    for (int r = 2; r <= 5; ++r) CHECK(is_r_wise_t_intersecting(star2, r, 2));
    CHECK_THROWS_AS(is_r_wise_t_intersecting(star2, 1, 1), std::invalid_argument);
    // Sliced family {B : |B ∩ [4]| >= 3} at uniformity 4 on [6].
    SetFamily slice = filtered(6, 4, [](KSet s) { return intersection_size(s, KSet::prefix(4)) >= 3; });
    CHECK(is_r_wise_t_intersecting(slice, 3, 1));
}

TEST_CASE("t levels")
{
    CHECK(t_level(filtered(3, 2, [](KSet) { return true; }), 2) == 1);
    CHECK(t_level(fano(), 2) == 1);
    CHECK(t_level(fano(), 3) == 0);
    CHECK(t_level(SetFamily(5, 3), 2) == 3);
    SetFamily star = filtered(6, 3, [](KSet s) { return s.contains(1); });
    CHECK(t_level(star, 2) == 1);
    CHECK(t_level(star, 3) == 1);

    std::mt19937_64 rng(29);
    for (int round = 0; round < 100; ++round) {
        SetFamily f = random_family(rng, 7, 3, 0.15);
        for (int j = 1; j <= 4; ++j) {
            CHECK(t_level(f, j) == t_level_brute(f, j));
            CHECK(t_level(f, j) >= t_level(f, j + 1));
        }
        for (int r = 2; r <= 4; ++r)
            for (int t = 0; t <= 3; ++t)
                CHECK(is_r_wise_t_intersecting(f, r, t) == (t_level(f, r) >= t));
    }
}

TEST_CASE("pseudo t-intersecting")
{
    CHECK(is_pseudo_t_intersecting(fam(6, 3, {{1, 5, 6}}), 1));
    CHECK_FALSE(is_pseudo_t_intersecting(fam(6, 3, {{2, 4, 6}}), 1));
    // Initial t-intersecting families are pseudo t-intersecting.
    for (int k = 2; k <= 4; ++k)
        for (int t = 1; t < k; ++t) {
            SetFamily full = filtered(2 * k - t, k, [](KSet) { return true; });
            SetFamily f(2 * k - t + 3, k, {full.members().begin(), full.members().end()});
            CHECK(is_initial(f));
            CHECK(is_t_intersecting(f, t));
            CHECK(is_pseudo_t_intersecting(f, t));
        }
}

TEST_CASE("rho against t over tau")
{
    std::mt19937_64 rng(31);
    int checked = 0;
    for (int round = 0; round < 400; ++round) {
        SetFamily f = random_family(rng, 7, 3, 0.08);
        for (int t = 1; t <= 2; ++t) {
            if (f.empty() || ! is_t_intersecting(f, t)) continue;
            ++checked;
            CHECK(rho(f) >= Rational(t, transversal_number(f, t)));
        }
    }
    CHECK(checked > 0);
}

TEST_CASE("saturation")
{
    PropertySpec intersecting = PropertySpec::intersecting();
    SetFamily start = fam(5, 3, {{1, 2, 3}});
    SetFamily sat = saturate(start, intersecting);
    CHECK(intersecting.holds(sat));
    CHECK(sat.contains(KSet::of({1, 2, 3})));
    CHECK(is_saturated(sat, intersecting));
    CHECK(sat.size() == 10);

    SetFamily star2 = filtered(6, 3, [](KSet s) { return KSet::prefix(2).subset_of(s); });
    CHECK(saturate(star2, PropertySpec::t_intersecting(2)) == star2);
    CHECK(saturate(fano(), intersecting) == fano());
    CHECK_THROWS_AS(saturate(fam(4, 2, {{1, 2}, {3, 4}}), intersecting), std::invalid_argument);
}

TEST_CASE("measure profile")
{
    MeasureProfile p = measure_profile(fano());
    CHECK(p.rho == Rational(3, 7));
    CHECK(p.tau.at(1) == 3);
    CHECK(p.nu == 1);
    CHECK(p.t_levels.at(2) == 1);
    CHECK(p.t_levels.at(3) == 0);
    MeasureProfile e = measure_profile(SetFamily(5, 2));
    CHECK(e.empty);
    CHECK(e.rho == Rational(0));
    CHECK(e.tau.empty());
}

TEST_CASE("property grammar")
{
    PropertySpec p = PropertySpec::parse("intersecting & rho<=2/3");
    CHECK(p.atoms().size() == 2);
    CHECK(p.str() == "t-intersecting(1)&rho<=2/3");
    CHECK(PropertySpec::parse(p.str()).str() == p.str());
    CHECK(PropertySpec::parse("cross(0,1,t=1)").str() == "cross(0,1,1)");
    CHECK(PropertySpec::parse("cross(0,1)").str() == "cross(0,1,1)");
    CHECK(PropertySpec::parse("nu<=2@1&nontrivial@0").str() == "nu<=2@1&nontrivial@0");
    CHECK(PropertySpec::parse("").is_trivially_true());
    CHECK(PropertySpec::parse("true").is_trivially_true());
    CHECK(PropertySpec::parse("overlapping(0,1)").str() == "overlapping(0,1)");
    CHECK_THROWS_AS(PropertySpec::parse("rho<=x"), std::invalid_argument);
    CHECK_THROWS_AS(PropertySpec::parse("bogus"), std::invalid_argument);
    CHECK_THROWS_AS(PropertySpec::parse("intersecting&"), std::invalid_argument);
}

TEST_CASE("property evaluation")
{
    SetFamily triangle = fam(5, 2, {{1, 2}, {1, 3}, {2, 3}});
    CHECK(PropertySpec::parse("intersecting&rho<=2/3").holds(triangle));
    CHECK_FALSE(PropertySpec::parse("rho<=1/2").holds(triangle));
    CHECK(PropertySpec::parse("nontrivial").holds(triangle));
    CHECK_FALSE(PropertySpec::parse("nontrivial").holds(SetFamily(5, 2)));
    CHECK(PropertySpec::parse("nu<=1").holds(triangle));
    CHECK(PropertySpec::parse("overlapping").holds(triangle));
    CHECK_FALSE(PropertySpec::parse("overlapping").holds(fam(5, 2, {{1, 2}, {3, 4}})));

    std::vector<SetFamily> pair{fam(4, 2, {{1, 2}}), fam(4, 2, {{3, 4}})};
    CHECK_FALSE(PropertySpec::parse("cross(0,1)").holds(pair));
    CHECK_FALSE(PropertySpec::parse("overlapping").holds(pair));
    CHECK(PropertySpec::parse("intersecting").holds(pair));
    CHECK_THROWS_AS(PropertySpec::parse("cross(0,2)").holds(pair), std::invalid_argument);

    auto custom = PropertySpec::custom("small", [](std::span<const SetFamily> f) { return f[0].size() < 3; });
    CHECK((custom & PropertySpec::intersecting()).str() == "custom:small&t-intersecting(1)");
    CHECK_FALSE(custom.holds(triangle));
}
