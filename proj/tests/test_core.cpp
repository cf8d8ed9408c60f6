#include "doctest.h"

#include "extremal/core.hpp"
#include "extremal/family_io.hpp"
#include "extremal/rational.hpp"

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

SetFamily random_family(std::mt19937_64 & rng, int n, int k, double density)
{
    std::bernoulli_distribution keep(density);
    std::vector<KSet> members;
    for (KSet s : enumerate_ksubsets(n, k))
        if (keep(rng)) members.push_back(s);
    return SetFamily(n, k, members);
}

// Oracle: compare sorted element lists coordinate by coordinate.
bool leq_by_lists(KSet p, KSet q)
{
    auto a = p.elements(), b = q.elements();
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

// Oracle: every k-set below some member is a member.
bool initial_by_definition(const SetFamily & f)
{
    for (KSet g : f)
        for (KSet s : enumerate_ksubsets(f.ground_size(), f.uniformity()))
            if (leq_by_lists(s, g) && ! f.contains(s)) return false;
    return true;
}

} // namespace

TEST_CASE("rational arithmetic stays in lowest terms")
{
    CHECK(Rational(6, -4).str() == "-3/2");
    CHECK(Rational(0, 5).str() == "0/1");
    CHECK(Rational(3).str() == "3/1");
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(2, 3) * Rational(3, 4) == Rational(1, 2));
    CHECK(Rational(1, 2) / Rational(1, 4) == Rational(2));
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational::parse(" 7/21 ") == Rational(1, 3));
    CHECK(Rational::parse("4") == Rational(4));
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
    CHECK_THROWS(Rational::parse("1/x"));
    const std::int64_t big = std::int64_t{1} << 62;
    CHECK(Rational(big - 1, big) < Rational(big, big + 1));
}

TEST_CASE("kset basics")
{
    KSet s = KSet::of({1, 2, 5});
    CHECK(s.bits() == 0b10011);
    CHECK(s.size() == 3);
    CHECK(s.str() == "1,2,5");
    CHECK(KSet().str() == "{}");
    CHECK(s.min_element() == 1);
    CHECK(s.max_element() == 5);
    CHECK(KSet::interval(3, 5) == KSet::of({3, 4, 5}));
    CHECK(KSet::prefix(3) == KSet::of({1, 2, 3}));
    CHECK_THROWS(KSet::of({0}));
    CHECK_THROWS(KSet::of({64}));
}

TEST_CASE("set family validation and order")
{
    SetFamily f = fam(5, 2, {{3, 4}, {1, 2}, {1, 2}});
    REQUIRE(f.size() == 2);
    CHECK(f[0] == KSet::of({1, 2}));
    CHECK_THROWS_AS(SetFamily(5, 2, {KSet::of({1, 2, 3})}), std::invalid_argument);
    CHECK_THROWS_AS(SetFamily(5, 2, {KSet::of({1, 6})}), std::invalid_argument);
    CHECK_THROWS_AS(SetFamily(64, 2), CapacityError);
    CHECK(SetFamily(6, 3).common_part() == KSet::prefix(6));
}

TEST_CASE("enumerate k-subsets")
{
    auto pairs = enumerate_ksubsets(3, 2);
    REQUIRE(pairs.size() == 3);
    CHECK(pairs[0] == KSet::of({1, 2}));
    CHECK(pairs[1] == KSet::of({1, 3}));
    CHECK(pairs[2] == KSet::of({2, 3}));
    auto empty = enumerate_ksubsets(4, 0);
    REQUIRE(empty.size() == 1);
    CHECK(empty[0].empty());
    auto triples = enumerate_ksubsets(6, 3);
    CHECK(triples.size() == 20);
    CHECK(std::is_sorted(triples.begin(), triples.end()));
    CHECK(std::adjacent_find(triples.begin(), triples.end()) == triples.end());
    CHECK_THROWS_AS(enumerate_ksubsets(64, 2), CapacityError);
    for (int n = 0; n <= 12; ++n)
        for (int k = 0; k <= n; ++k)
            CHECK(enumerate_ksubsets(n, k).size() == binomial(n, k));
}

TEST_CASE("binomial table")
{
    CHECK(binomial(10, 3) == 120);
    CHECK(binomial(5, 7) == 0);
    CHECK(binomial(5, -1) == 0);
    CHECK(binomial(67, 33) == 14226520737620288370ull);
    CHECK_THROWS_AS(binomial(68, 34), std::overflow_error);
}

TEST_CASE("restriction operators")
{
    SetFamily f = fam(5, 3, {{1, 2, 3}, {1, 4, 5}});
    SetFamily l = link(f, KSet::of({1}));
    CHECK(l.uniformity() == 2);
    CHECK(l == fam(5, 2, {{2, 3}, {4, 5}}));
    CHECK(link(fam(5, 3, {{1, 2, 3}}), KSet::of({4})).empty());
    CHECK(link(f, KSet::of({1, 2, 3, 4})).empty());

    CHECK(avoid(fam(4, 2, {{1, 2}, {3, 4}}), KSet::of({1})) == fam(4, 2, {{3, 4}}));
    CHECK(avoid(f, KSet()) == f);

    SetFamily g = fam(4, 3, {{1, 2, 3}, {2, 3, 4}});
    CHECK(trace(g, KSet::of({2}), KSet::of({1, 2})) == fam(4, 2, {{3, 4}}));
    CHECK_THROWS_AS(trace(g, KSet::of({3}), KSet::of({1, 2})), std::invalid_argument);

    CHECK(meet(fam(4, 2, {{1, 2}, {3, 4}}), KSet::of({1, 3})).size() == 2);
    CHECK(meet(fam(4, 2, {{1, 2}}), KSet::of({3, 4})).empty());
}

TEST_CASE("restriction identities on random families")
{
    std::mt19937_64 rng(11);
    for (int round = 0; round < 200; ++round) {
        SetFamily f = random_family(rng, 8, 3, 0.4);
        KSet e(rng() & prefix_mask(8));
        if (e.size() > 4) e = KSet(e.bits() & prefix_mask(4));
        CHECK(trace(f, e, e) == link(f, e));
        CHECK(trace(f, KSet(), e) == avoid(f, e));

        std::size_t without = 0;
        for (KSet s : f) without += ! e.subset_of(s);
        CHECK(link(f, e).size() + without == f.size());

        std::size_t total = 0;
        Mask sub = 0;
        do {
            total += trace(f, KSet(sub), e).size();
            sub = (sub - e.bits()) & e.bits();
        } while (sub != 0);
        CHECK(total == f.size());
    }
}

TEST_CASE("shift order")
{
    CHECK(shift_order_leq(KSet::of({1, 2, 4}), KSet::of({2, 3, 4})));
    CHECK_FALSE(shift_order_leq(KSet::of({1, 5}), KSet::of({2, 3})));
    CHECK(shift_order_leq(KSet::of({3, 6}), KSet::of({3, 6})));
    CHECK_THROWS_AS(shift_order_leq(KSet::of({1}), KSet::of({1, 2})), std::invalid_argument);

    for (int k = 1; k <= 3; ++k) {
        auto all = enumerate_ksubsets(7, k);
        for (KSet a : all)
            for (KSet b : all) {
                CHECK(shift_order_leq(a, b) == leq_by_lists(a, b));
                if (shift_order_leq(a, b) && shift_order_leq(b, a)) CHECK(a == b);
            }
    }
    auto all = enumerate_ksubsets(6, 3);
    for (KSet a : all)
        for (KSet b : all)
            for (KSet c : all)
                if (shift_order_leq(a, b) && shift_order_leq(b, c)) CHECK(shift_order_leq(a, c));
}

TEST_CASE("initial families")
{
    CHECK(is_initial(fam(4, 2, {{1, 2}, {1, 3}})));
    CHECK_FALSE(is_initial(fam(4, 2, {{2, 3}})));
    std::vector<KSet> star;
    for (KSet s : enumerate_ksubsets(6, 3))
        if (s.contains(1)) star.push_back(s);
    CHECK(is_initial(SetFamily(6, 3, star)));

    std::mt19937_64 rng(5);
    for (int round = 0; round < 300; ++round) {
        SetFamily f = random_family(rng, 6, 3, round % 2 ? 0.9 : 0.15);
        CHECK(is_initial(f) == initial_by_definition(f));
        if (is_initial(f)) {
            for (int i = 1; i < 6; ++i)
                CHECK(link(f, KSet::of({i})).size() >= link(f, KSet::of({i + 1})).size());
        }
    }
}

TEST_CASE("family text format round trip")
{
    SetFamily f = fam(7, 3, {{1, 2, 4}, {2, 3, 5}, {1, 6, 7}});
    CHECK(from_text(to_text(f)) == f);
    SetFamily parsed = from_text("# a comment\n\n6 2\n1,2  # first\n3,4\n");
    CHECK(parsed == fam(6, 2, {{1, 2}, {3, 4}}));
    CHECK(from_text("4 0\n{}\n").size() == 1);
    CHECK_THROWS_AS(from_text("6 2\n2,1\n"), std::invalid_argument);
    CHECK_THROWS_AS(from_text("6 2\n1,x\n"), std::invalid_argument);
    CHECK_THROWS_AS(from_text("1,2\n"), std::invalid_argument);
    CHECK_THROWS_AS(from_text(""), std::invalid_argument);
}
