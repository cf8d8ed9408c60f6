#include "doctest.h"

#include "extremal/measures.hpp"
#include "extremal/order.hpp"
#include "extremal/shifting.hpp"

#include <random>
#include <set>

using namespace extremal;

namespace {

SetFamily fam(int n, int k, std::initializer_list<std::initializer_list<int>> sets)
{
    std::vector<KSet> members;
    for (auto s : sets) members.push_back(KSet::of(s));
    return SetFamily(n, k, members);
}

SetFamily subfamily(const std::vector<KSet> & all, int n, int k, std::uint64_t pick)
{
    std::vector<KSet> members;
    for (std::size_t i = 0; i < all.size(); ++i)
        if (pick >> i & 1) members.push_back(all[i]);
    return SetFamily::from_sorted(n, k, std::move(members));
}

SetFamily random_family(std::mt19937_64 & rng, int n, int k, double density)
{
    std::bernoulli_distribution keep(density);
    std::vector<KSet> members;
    for (KSet s : enumerate_ksubsets(n, k))
        if (keep(rng)) members.push_back(s);
    return SetFamily(n, k, members);
}

// Oracle: the compression written over element lists.
SetFamily shift_by_lists(const SetFamily & f, int i, int j)
{
    std::set<std::vector<int>> original;
    for (KSet s : f) original.insert(s.elements());
    std::vector<KSet> out;
    for (const auto & e : original) {
        std::set<int> s(e.begin(), e.end());
        if (s.count(j) && ! s.count(i)) {
            s.erase(j);
            s.insert(i);
            std::vector<int> moved(s.begin(), s.end());
            if (! original.count(moved)) {
                out.push_back(KSet::of(moved));
                continue;
            }
        }
        out.push_back(KSet::of(e));
    }
    return SetFamily(f.ground_size(), f.uniformity(), out);
}

} // namespace

TEST_CASE("single shifts")
{
    CHECK(shift(fam(3, 2, {{2, 3}}), 1, 2) == fam(3, 2, {{1, 3}}));
    CHECK(shift(fam(3, 2, {{1, 3}, {2, 3}}), 1, 2) == fam(3, 2, {{1, 3}, {2, 3}}));
    CHECK(shift(fam(4, 2, {{1, 2}, {3, 4}}), 1, 3) == fam(4, 2, {{1, 2}, {1, 4}}));
    CHECK_THROWS_AS(shift(fam(4, 2, {{1, 2}}), 2, 2), std::invalid_argument);
    CHECK_THROWS_AS(shift(fam(4, 2, {{1, 2}}), 3, 1), std::invalid_argument);
    CHECK_THROWS_AS(shift(fam(4, 2, {{1, 2}}), 1, 5), std::invalid_argument);
}

TEST_CASE("weights")
{
    CHECK(weight(fam(4, 2, {{1, 2}, {3, 4}})) == 10);
    CHECK(weight(SetFamily(4, 2)) == 0);
    CHECK(weight(shift(fam(3, 2, {{2, 3}}), 1, 2)) == 4);
    CHECK(weight(fam(3, 2, {{2, 3}})) == 5);
}

TEST_CASE("shift invariants on random families")
{
    std::mt19937_64 rng(47);
    for (int round = 0; round < 300; ++round) {
        const int n = 5 + round % 4, k = 2 + round % 2;
        SetFamily f = random_family(rng, n, k, 0.3);
        SetFamily g = random_family(rng, n, k, 0.3);
        const bool f_int = is_t_intersecting(f, 1), f_int2 = is_t_intersecting(f, 2);
        const bool cross = is_cross_t_intersecting(f, g, 1);
        const int nu = matching_number(f);
        const std::vector<SetFamily> pair{f, g};
        const bool overlapping = PropertySpec::overlapping().holds(pair);
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j) {
                SetFamily s = shift(f, i, j);
                CHECK(s == shift_by_lists(f, i, j));
                CHECK(s.size() == f.size());
                if (s == f) CHECK(weight(s) == weight(f));
                else CHECK(weight(s) < weight(f));
                if (f_int) CHECK(is_t_intersecting(s, 1));
                if (f_int2) CHECK(is_t_intersecting(s, 2));
                CHECK(matching_number(s) <= nu);
                SetFamily sg = shift(g, i, j);
                if (cross) CHECK(is_cross_t_intersecting(s, sg, 1));
                if (overlapping) CHECK(PropertySpec::overlapping().holds(std::vector<SetFamily>{s, sg}));
            }
    }
}

TEST_CASE("shifted families are initial")
{
    for (auto [n, k] : {std::pair{5, 2}, std::pair{6, 2}, std::pair{5, 3}}) {
        auto all = enumerate_ksubsets(n, k);
        for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << all.size()); ++pick) {
            SetFamily f = subfamily(all, n, k, pick);
            if (is_shifted(f)) CHECK(is_initial(f));
        }
    }
    CHECK(is_shifted(fam(3, 2, {{1, 2}})));
    CHECK_FALSE(is_shifted(fam(3, 2, {{2, 3}})));
}

TEST_CASE("initial on a prefix")
{
    CHECK_FALSE(is_initial_on(fam(4, 2, {{2, 3}, {1, 4}}), 2));
    CHECK(is_initial_on(fam(4, 2, {{1, 2}, {1, 3}}), 4));
    CHECK(is_initial_on(fam(5, 2, {{1, 5}, {2, 5}}), 4));
    CHECK_FALSE(is_initial_on(fam(5, 2, {{1, 5}, {2, 5}}), 5));
    CHECK_THROWS_AS(is_initial_on(fam(4, 2, {{1, 2}}), 5), std::invalid_argument);
}

TEST_CASE("ad extremis without constraints")
{
    ShiftResult r = shift_ad_extremis({fam(3, 2, {{2, 3}})}, PropertySpec());
    CHECK(r.families[0] == fam(3, 2, {{1, 2}}));
    REQUIRE(r.trace.steps.size() == 2);
    CHECK(r.trace.steps[0].weights_before == std::vector<std::int64_t>{5});
    CHECK(r.trace.steps[1].weights_before == std::vector<std::int64_t>{4});
    CHECK(r.trace.final_weights == std::vector<std::int64_t>{3});
    CHECK(r.trace.resistant.empty());

    std::mt19937_64 rng(53);
    for (int round = 0; round < 50; ++round) {
        SetFamily f = random_family(rng, 7, 3, 0.2);
        ShiftResult out = shift_ad_extremis({f}, PropertySpec());
        CHECK(is_shifted(out.families[0]));
        CHECK(out.families[0].size() == f.size());
    }
}

TEST_CASE("ad extremis with a degree cap")
{
    SetFamily f = fam(4, 2, {{1, 2}, {3, 4}});
    PropertySpec cap = PropertySpec::parse("rho<=1/2@0");
    ShiftResult r = shift_ad_extremis({f}, cap);
    CHECK(r.families[0] == f);
    bool found = false;
    for (const auto & p : r.trace.resistant) found = found || (p.i == 1 && p.j == 3);
    CHECK(found);
    CHECK(shift_resistant_pairs(r.families, cap) == r.trace.resistant);
    CHECK_THROWS_AS(shift_ad_extremis({fam(4, 2, {{1, 2}, {1, 3}})}, cap), std::invalid_argument);
}

TEST_CASE("ad extremis on cross-intersecting pairs")
{
    std::mt19937_64 rng(59);
    PropertySpec cross = PropertySpec::parse("cross(0,1,t=1)");
    int runs = 0;
    for (int round = 0; round < 400 && runs < 40; ++round) {
        SetFamily f = random_family(rng, 7, 3, 0.15), g = random_family(rng, 7, 3, 0.15);
        if (! is_cross_t_intersecting(f, g, 1)) continue;
        ++runs;
        ShiftResult r = shift_ad_extremis({f, g}, cross);
        CHECK(cross.holds(r.families));
        CHECK(is_shifted(r.families[0]));
        CHECK(is_shifted(r.families[1]));
        CHECK(r.trace.resistant.empty());
        CHECK(is_shifted_ad_extremis(r.families, cross));
    }
    CHECK(runs > 0);
}

TEST_CASE("resistant pairs under a degree cap carry large merged degree")
{
    // With P = rho <= 1/d, a blocked effective shift S_ij forces
    // |F(i)| + |F(j)| > |F| / d.
    std::mt19937_64 rng(61);
    const int d = 2;
    for (int round = 0; round < 200; ++round) {
        SetFamily f = random_family(rng, 8, 3, 0.25);
        if (f.empty()) continue;
        PropertySpec cap = PropertySpec::rho_at_most(Rational(1, d));
        if (! cap.holds(f)) continue;
        ShiftResult r = shift_ad_extremis({f}, cap);
        const SetFamily & g = r.families[0];
        CHECK(cap.holds(g));
        CHECK(is_shifted_ad_extremis(r.families, cap));
        auto deg = degrees(g);
        for (const auto & p : shift_resistant_pairs(r.families, cap)) {
            // After S_ij, the degree of i is |F(i)| + |F(j) \ F(i)| <= |F(i)| + |F(j)|.
            SetFamily s = shift(g, p.i, p.j);
            CHECK(rho(s) > Rational(1, d));
            CHECK(Rational((deg[p.i] + deg[p.j]) * d) > Rational(static_cast<std::int64_t>(g.size())));
        }
    }
}

TEST_CASE("initial families: shadow of the avoiding part and matching bound")
{
    std::mt19937_64 rng(67);
    for (int round = 0; round < 200; ++round) {
        SetFamily f = shift_ad_extremis({random_family(rng, 7, 3, 0.2)}, PropertySpec()).families[0];
        REQUIRE(is_initial(f));
        SetFamily low = shadow(avoid(f, KSet::of({1})), 1);
        SetFamily up = link(f, KSet::of({1}));
        for (KSet s : low) CHECK(up.contains(s));
        if (! f.empty()) CHECK(rho(f) >= Rational(1, matching_number(f) + 1));
    }
}
