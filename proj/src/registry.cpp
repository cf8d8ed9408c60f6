#include "extremal/verify.hpp"

#include "extremal/constructions.hpp"
#include "extremal/measures.hpp"
#include "extremal/order.hpp"
#include "extremal/shifting.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <chrono>
#include <random>
#include <sstream>

namespace extremal {

namespace {

using Big = boost::multiprecision::cpp_int;

Big C(int n, int k)
{
    if (k < 0 || n < 0 || k > n) return 0;
    k = std::min(k, n - k);
    Big r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

Big size_of(const SetFamily & f) { return Big(f.size()); }

std::string num(const Big & b) { return b.str(); }

Evaluation vacuous(std::string why) { return {Verdict::vacuous, std::move(why), false}; }

Evaluation decide(bool ok, std::string detail, bool equality = false)
{
    return {ok ? Verdict::pass : Verdict::fail, std::move(detail), ok && equality};
}

bool nontrivial(const SetFamily & f) { return ! f.empty() && f.common_part().empty(); }

std::int64_t count_with(const SetFamily & f, KSet inside, KSet outside)
{
    std::int64_t c = 0;
    for (KSet s : f) c += inside.subset_of(s) && s.disjoint_from(outside);
    return c;
}

std::int64_t pair_link(const SetFamily & f, int x, int y) { return count_with(f, KSet::of({x, y}), KSet()); }
std::int64_t pair_avoid(const SetFamily & f, int x, int y) { return count_with(f, KSet(), KSet::of({x, y})); }

/// |𝓕(P)| for every pair P = {x < y}, indexed [x][y].
std::vector<std::vector<std::int64_t>> pair_degrees(const SetFamily & f)
{
    const int n = f.ground_size();
    std::vector<std::vector<std::int64_t>> d(n + 1, std::vector<std::int64_t>(n + 1, 0));
    for (KSet s : f) {
        const auto e = s.elements();
        for (std::size_t a = 0; a < e.size(); ++a)
            for (std::size_t b = a + 1; b < e.size(); ++b) ++d[e[a]][e[b]];
    }
    return d;
}

std::string rho_str(const SetFamily & f) { return rho(f).str(); }

/// Shorthand for parameter access inside evaluators.
struct Args {
    const Instance & in;
    int operator()(const char * name) const { return int_param(in.params, name); }
    Rational q(const char * name) const
    {
        auto it = in.params.find(name);
        if (it == in.params.end()) throw std::invalid_argument(std::string("missing parameter '") + name + "'");
        return it->second;
    }
    const SetFamily & f(std::size_t i) const { return in.families.at(i); }
};

Guide no_guide(const Params &) { return {}; }

Guide self(int t, bool initial = false)
{
    Guide g;
    g.self_t = t;
    g.star_core = std::max(t, 1);
    g.initial = initial;
    return g;
}

Guide cross(int t, bool initial = false)
{
    Guide g;
    g.cross_t = t;
    g.star_core = std::max(t, 1);
    g.initial = initial;
    return g;
}

std::vector<Instance> all_subsets_e(const Instance & base)
{
    std::vector<Instance> out;
    const int n = base.families.at(0).ground_size();
    for (Mask e = 0; e < (Mask{1} << n); ++e) {
        Instance x = base;
        x.params["E"] = Rational(static_cast<std::int64_t>(e));
        out.push_back(std::move(x));
    }
    return out;
}

std::vector<Instance> all_pairs_xy(const Instance & base)
{
    std::vector<Instance> out;
    const int n = base.families.at(0).ground_size();
    for (int x = 1; x <= n; ++x)
        for (int y = x + 1; y <= n; ++y) {
            Instance i = base;
            i.params["x"] = Rational(x);
            i.params["y"] = Rational(y);
            out.push_back(std::move(i));
        }
    return out;
}

std::uint64_t draw(std::mt19937_64 & rng, std::uint64_t bound) { return bound ? rng() % bound : 0; }

/// Pair-link / pair-avoid lemma shared by the two cross-intersecting
/// variants: whenever |𝓕(x,y)| reaches `need`, |𝓖(x̄,ȳ)| <= `cap`, in both
/// orientations of the pair.
Evaluation pair_transfer(const SetFamily & f, const SetFamily & g, const Big & need, const Big & cap)
{
    const int n = f.ground_size();
    int triggered = 0;
    for (int side = 0; side < 2; ++side) {
        const SetFamily & a = side ? g : f;
        const SetFamily & b = side ? f : g;
        auto links = pair_degrees(a);
        for (int x = 1; x <= n; ++x)
            for (int y = x + 1; y <= n; ++y) {
                if (Big(links[x][y]) < need) continue;
                ++triggered;
                const std::int64_t outside = pair_avoid(b, x, y);
                if (Big(outside) > cap) {
                    std::ostringstream os;
                    os << "pair {" << x << "," << y << "} of slot " << side << ": link " << links[x][y]
                       << " >= " << num(need) << " but the other family avoids it " << outside << " times > "
                       << num(cap);
                    return decide(false, os.str());
                }
            }
    }
    if (triggered == 0) return vacuous("no pair reaches the link threshold " + num(need));
    return decide(true, std::to_string(triggered) + " triggering pairs, each within " + num(cap));
}

/// Nonempty initial cross-intersecting pair for the §3 initial statements.
std::string initial_cross_problem(const SetFamily & f, const SetFamily & g, bool need_nonempty)
{
    if (need_nonempty && (f.empty() || g.empty())) return "a family is empty";
    if (! is_initial(f) || ! is_initial(g)) return "not both initial";
    if (! is_cross_t_intersecting(f, g, 1)) return "not cross-intersecting";
    return {};
}

std::vector<Statement> build()
{
    std::vector<Statement> r;
    auto add = [&](Statement s) { r.push_back(std::move(s)); };

    add({"EKR_1_1", "t-intersecting, n >= (k-t+1)(t+1) => |F| <= C(n-t,k-t)", Shape::single, {"n", "k", "t"}, {"k"},
         [](const Params & p) { return self(int_param(p, "t")); },
         [](const Instance & in) {
             Args a{in};
             const int n = a("n"), k = a("k"), t = a("t");
             const SetFamily & f = a.f(0);
             if (! (1 <= t && t <= k)) return vacuous("needs k >= t > 0");
             if (n < (k - t + 1) * (t + 1)) return vacuous("n below (k-t+1)(t+1)");
             if (! is_t_intersecting(f, t)) return vacuous("not t-intersecting");
             const Big bound = C(n - t, k - t);
             return decide(size_of(f) <= bound, std::to_string(f.size()) + " <= " + num(bound), size_of(f) == bound);
         }});

    add({"PROP_1_2", "initial t-intersecting => F(avoid [s]) is (t+s)-intersecting", Shape::single,
         {"n", "k", "t", "s"}, {"k"}, [](const Params & p) { return self(int_param(p, "t"), true); },
         [](const Instance & in) {
             Args a{in};
             const int t = a("t"), s = a("s");
             const SetFamily & f = a.f(0);
             if (t < 1 || s < 1 || s > f.ground_size()) return vacuous("needs t >= 1 and 1 <= s <= n");
             if (! is_initial(f)) return vacuous("not initial");
             if (! is_t_intersecting(f, t)) return vacuous("not t-intersecting");
             const SetFamily rest = avoid(f, KSet::prefix(s));
             return decide(is_t_intersecting(rest, t + s),
                           std::to_string(rest.size()) + " members avoid [s], t_2 = " +
                               std::to_string(t_level(rest, 2)));
         }});

    add({"PROP_1_3", "t-intersecting => rho >= t / tau_t", Shape::single, {"n", "k", "t"}, {"k"},
         [](const Params & p) { return self(int_param(p, "t")); },
         [](const Instance & in) {
             Args a{in};
             const int k = a("k"), t = a("t");
             const SetFamily & f = a.f(0);
             if (! (1 <= t && t <= k)) return vacuous("needs 1 <= t <= k");
             if (f.empty()) return vacuous("empty family");
             if (! is_t_intersecting(f, t)) return vacuous("not t-intersecting");
             const int tau = transversal_number(f, t);
             const Rational lhs = rho(f), rhs(t, tau);
             return decide(lhs >= rhs, "rho " + lhs.str() + " >= " + rhs.str(), lhs == rhs);
         }});

    add({"THM_1_5", "intersecting, |F| >= 2^d d^(2d+1) C(n-d-1,k-d-1), n >= 4(d-1)dk => rho > 1/d", Shape::single,
         {"n", "k", "d"}, {"k"}, [](const Params &) { return self(1); },
         [](const Instance & in) {
             Args a{in};
             const int n = a("n"), k = a("k"), d = a("d");
             const SetFamily & f = a.f(0);
             if (! (k > d && d >= 2)) return vacuous("needs k > d >= 2");
             if (n < 4 * (d - 1) * d * k) return vacuous("n below 4(d-1)dk");
             if (! is_t_intersecting(f, 1)) return vacuous("not intersecting");
             Big need = C(n - d - 1, k - d - 1) * (Big(1) << d);
             for (int i = 0; i < 2 * d + 1; ++i) need *= d;
             if (size_of(f) < need) return vacuous("|F| = " + std::to_string(f.size()) + " below " + num(need));
             return decide(rho(f) > Rational(1, d), "rho " + rho_str(f));
         }});

    auto large_cross = [](const Instance & in, const Big & need, std::string & why) {
        Args a{in};
        const int n = a("n"), k = a("k");
        const SetFamily &f = a.f(0), &g = a.f(1);
        if (k < 2) why = "needs k >= 2";
        else if (n < 39 * k) why = "n below 39k";
        else if (f.empty() || g.empty()) why = "a family is empty";
        else if (! is_cross_t_intersecting(f, g, 1)) why = "not cross-intersecting";
        else if (size_of(f) < need || size_of(g) < need) why = "a family is below " + num(need);
        return why.empty();
    };

    add({"THM_1_6", "cross-intersecting, n >= 39k, both >= 2C(n-2,k-2)+4C(n-3,k-3) => min rho > 1/2+(k-2)/(2(n-2))",
         Shape::pair, {"n", "k"}, {"k", "k"}, [](const Params &) { return cross(1); },
         [large_cross](const Instance & in) {
             Args a{in};
             const int n = a("n"), k = a("k");
             std::string why;
             if (! large_cross(in, C(n - 2, k - 2) * 2 + C(n - 3, k - 3) * 4, why)) return vacuous(why);
             const Rational bound = Rational(1, 2) + Rational(k - 2, 2 * (n - 2));
             const Rational m = std::min(rho(a.f(0)), rho(a.f(1)));
             return decide(m > bound, "min rho " + m.str() + " > " + bound.str());
         }});

    add({"LEM_3_3", "cross-intersecting, n >= 39k, both >= 2C(n-2,k-2)+4C(n-3,k-3) => max rho > 1/2", Shape::pair,
         {"n", "k"}, {"k", "k"}, [](const Params &) { return cross(1); },
         [large_cross](const Instance & in) {
             Args a{in};
             const int n = a("n"), k = a("k");
             std::string why;
             if (! large_cross(in, C(n - 2, k - 2) * 2 + C(n - 3, k - 3) * 4, why)) return vacuous(why);
             const Rational m = std::max(rho(a.f(0)), rho(a.f(1)));
             return decide(m > Rational(1, 2), "max rho " + m.str());
         }});

    add({"THM_1_9", "cross-intersecting, n >= 39k, both >= |T(n,k)| => min rho > (2/3)(1-(k-2)/(n-2))", Shape::pair,
         {"n", "k"}, {"k", "k"}, [](const Params &) { return cross(1); },
         [large_cross](const Instance & in) {
             Args a{in};
             const int n = a("n"), k = a("k");
             std::string why;
             if (! large_cross(in, C(n - 3, k - 2) * 3 + C(n - 3, k - 3), why)) return vacuous(why);
             const Rational bound = Rational(2, 3) * (Rational(1) - Rational(k - 2, n - 2));
             const Rational m = std::min(rho(a.f(0)), rho(a.f(1)));
             return decide(m > bound, "min rho " + m.str() + " > " + bound.str());
         }});

    add({"THM_1_10", "0 < eps <= 1/58, cross-intersecting, both >= C(n-3,k-3)/eps => max rho > 1/2 - eps",
         Shape::pair, {"n", "k", "eps"}, {"k", "k"}, [](const Params &) { return cross(1); },
         [](const Instance & in) {
             Args a{in};
             const int n = a("n"), k = a("k");
             const Rational eps = a.q("eps");
             const SetFamily &f = a.f(0), &g = a.f(1);
             if (! (Rational(0) < eps && eps <= Rational(1, 58))) return vacuous("needs 0 < eps <= 1/58");
             if (k < 3) return vacuous("needs k >= 3");
             if (! is_cross_t_intersecting(f, g, 1)) return vacuous("not cross-intersecting");
             // |F| >= C(n-3,k-3)/eps  <=>  |F| * num(eps) >= C(n-3,k-3) * den(eps)
             const Big base = C(n - 3, k - 3) * eps.denominator();
             if (size_of(f) * eps.numerator() < base || size_of(g) * eps.numerator() < base)
                 return vacuous("a family is below C(n-3,k-3)/eps");
             const Rational m = std::max(rho(f), rho(g));
             return decide(m > Rational(1, 2) - eps, "max rho " + m.str());
         }});

    add({"THM_1_11", "t-intersecting, t >= 2, |F| > (t+1)C(n-1,k-t-1), n >= 2t(t+2)k => rho > t/(t+1)", Shape::single,
         {"n", "k", "t"}, {"k"}, [](const Params & p) { return self(int_param(p, "t")); },
         [](const Instance & in) {
             Args a{in};
             const int n = a("n"), k = a("k"), t = a("t");
             const SetFamily & f = a.f(0);
             if (t < 2) return vacuous("needs t >= 2");
             if (n < 2 * t * (t + 2) * k) return vacuous("n below 2t(t+2)k");
             if (! is_t_intersecting(f, t)) return vacuous("not t-intersecting");
             const Big need = C(n - 1, k - t - 1) * (t + 1);
             if (size_of(f) <= need) return vacuous("|F| not above " + num(need));
             return decide(rho(f) > Rational(t, t + 1), "rho " + rho_str(f));
         }});

    add({"WALK_1_5", "initial pseudo t-intersecting, 0 <= t < k => |F| <= C(n,k-t)", Shape::single, {"n", "k", "t"},
         {"k"}, [](const Params & p) { return self(std::max(int_param(p, "t"), 0), true); },
         [](const Instance & in) {
             Args a{in};
             const int n = a("n"), k = a("k"), t = a("t");
             const SetFamily & f = a.f(0);
             if (! (0 <= t && t < k)) return vacuous("needs 0 <= t < k");
             if (! is_initial(f)) return vacuous("not initial");
             if (! is_pseudo_t_intersecting(f, t)) return vacuous("not pseudo t-intersecting");
             const Big bound = C(n, k - t);
             return decide(size_of(f) <= bound, std::to_string(f.size()) + " <= " + num(bound), size_of(f) == bound);
         }});

    add({"DICHOTOMY", "initial cross t-intersecting => both pseudo t-intersecting or one pseudo (t+1)-intersecting",
         Shape::pair, {"n", "k", "l", "t"}, {"k", "l"}, [](const Params & p) { return cross(int_param(p, "t"), true); },
         [](const Instance & in) {
             Args a{in};
             const int t = a("t");
             const SetFamily &f = a.f(0), &g = a.f(1);
             if (t < 1) return vacuous("needs t >= 1");
             if (! is_initial(f) || ! is_initial(g)) return vacuous("not both initial");
             if (! is_cross_t_intersecting(f, g, t)) return vacuous("not cross t-intersecting");
             const bool both = is_pseudo_t_intersecting(f, t) && is_pseudo_t_intersecting(g, t);
             const bool f1 = is_pseudo_t_intersecting(f, t + 1), g1 = is_pseudo_t_intersecting(g, t + 1);
             std::string detail = both ? "both pseudo t" : f1 ? "first pseudo t+1" : g1 ? "second pseudo t+1" : "neither";
             return decide(both || f1 || g1, detail);
         }});

    add({"COR_1_6_1_7", "cross t-intersecting, |A| <= |B| => |B| <= C(n,k-t) or |A| <= C(n,k-t-1)", Shape::pair,
         {"n", "k", "t"}, {"k", "k"}, [](const Params & p) { return cross(int_param(p, "t")); },
         [](const Instance & in) {
             Args a{in};
             const int n = a("n"), k = a("k"), t = a("t");
             if (t < 1) return vacuous("needs t >= 1");
             if (! is_cross_t_intersecting(a.f(0), a.f(1), t)) return vacuous("not cross t-intersecting");
             const SetFamily & small = a.f(0).size() <= a.f(1).size() ? a.f(0) : a.f(1);
             const SetFamily & large = a.f(0).size() <= a.f(1).size() ? a.f(1) : a.f(0);
             const bool first = size_of(large) <= C(n, k - t), second = size_of(small) <= C(n, k - t - 1);
             return decide(first || second, std::string(first ? "|B| <= C(n,k-t)" : "") +
                                                 (first && second ? ", " : "") + (second ? "|A| <= C(n,k-t-1)" : ""));
         }});

    add({"LEM_FW_1", "cross-intersecting, |F(x,y)| >= C(n-3,k-3)+C(n-4,k-3)+C(n-6,k-4) => |G(~x,~y)| <= C(n-5,k-3)+C(n-6,k-3)",
         Shape::pair, {"n", "k"}, {"k", "k"},
         [](const Params &) {
             Guide g = cross(1);
             g.star_core = 2;
             return g;
         },
         [](const Instance & in) {
             Args a{in};
             const int n = a("n"), k = a("k");
             if (k < 4 || n < 2 * k) return vacuous("needs k >= 4 and n >= 2k");
             if (! is_cross_t_intersecting(a.f(0), a.f(1), 1)) return vacuous("not cross-intersecting");
             return pair_transfer(a.f(0), a.f(1), C(n - 3, k - 3) + C(n - 4, k - 3) + C(n - 6, k - 4),
                                  C(n - 5, k - 3) + C(n - 6, k - 3));
         }});

    add({"LEM_FW_2", "cross-intersecting, |F(x,y)| >= C(n-3,k-3)+C(n-4,k-3)+C(n-5,k-3)+C(n-7,k-4) => |G(~x,~y)| <= C(n-6,k-4)+C(n-7,k-4)",
         Shape::pair, {"n", "k"}, {"k", "k"},
         [](const Params &) {
             Guide g = cross(1);
             g.star_core = 2;
             return g;
         },
         [](const Instance & in) {
             Args a{in};
             const int n = a("n"), k = a("k");
             if (k < 4 || n < 2 * k) return vacuous("needs k >= 4 and n >= 2k");
             if (! is_cross_t_intersecting(a.f(0), a.f(1), 1)) return vacuous("not cross-intersecting");
             return pair_transfer(a.f(0), a.f(1),
                                  C(n - 3, k - 3) + C(n - 4, k - 3) + C(n - 5, k - 3) + C(n - 7, k - 4),
                                  C(n - 6, k - 4) + C(n - 7, k - 4));
         }});

    add({"LEM_3_5", "intersecting, max pair degree <= M, M >= 2C(n-5,k-3) => |F_R & F_Q| <= 3M+C(n-7,k-5)+C(n-8,k-5)",
         Shape::single, {"n", "k"}, {"k"}, [](const Params &) { return self(1); },
         [](const Instance & in) {
             Args a{in};
             const int n = a("n"), k = a("k");
             const SetFamily & f = a.f(0);
             if (n < 2 * k) return vacuous("needs n >= 2k");
             if (f.empty()) return vacuous("empty family");
             if (! is_t_intersecting(f, 1)) return vacuous("not intersecting");
             // The tightest admissible M.
             auto pd = pair_degrees(f);
             Big m = C(n - 5, k - 3) * 2;
             for (int x = 1; x <= n; ++x)
                 for (int y = x + 1; y <= n; ++y) m = std::max(m, Big(pd[x][y]));
             const Big cap = m * 3 + C(n - 7, k - 5) + C(n - 8, k - 5);
             std::int64_t worst = 0;
             for (int r1 = 1; r1 <= n; ++r1)
                 for (int r2 = r1 + 1; r2 <= n; ++r2)
                     for (int q1 = r1 + 1; q1 <= n; ++q1)
                         for (int q2 = q1 + 1; q2 <= n; ++q2) {
                             if (q1 == r2 || q2 == r2) continue;
                             const KSet rr = KSet::of({r1, r2}), qq = KSet::of({q1, q2});
                             std::int64_t c = 0;
                             for (KSet s : f) c += ! s.disjoint_from(rr) && ! s.disjoint_from(qq);
                             worst = std::max(worst, c);
                         }
             return decide(Big(worst) <= cap, "max |F_R & F_Q| " + std::to_string(worst) + " <= " + num(cap) +
                                                  " (M = " + num(m) + ")");
         }});

    add({"SUM_1_15", "nonempty cross-intersecting, n >= 2k, |A| >= |B| >= C(n-2,k-2) => |A|+|B| <= 2C(n-1,k-1)",
         Shape::pair, {"n", "k"}, {"k", "k"},
         [](const Params &) {
             Guide g = cross(1);
             g.saturate = true;
             return g;
         },
         [](const Instance & in) {
             Args a{in};
             const int n = a("n"), k = a("k");
             const SetFamily &f = a.f(0), &g = a.f(1);
             if (n < 2 * k) return vacuous("needs n >= 2k");
             if (f.empty() || g.empty()) return vacuous("a family is empty");
             if (! is_cross_t_intersecting(f, g, 1)) return vacuous("not cross-intersecting");
             if (Big(std::min(f.size(), g.size())) < C(n - 2, k - 2)) return vacuous("smaller family below C(n-2,k-2)");
             const Big sum = size_of(f) + size_of(g), bound = C(n - 1, k - 1) * 2;
             return decide(sum <= bound, num(sum) + " <= " + num(bound), sum == bound);
         }});

    add({"FACT_3_1", "initial cross-intersecting => F(~1), G(~1) cross 2-intersecting", Shape::pair, {"n", "k", "l"},
         {"k", "l"}, [](const Params &) { return cross(1, true); },
         [](const Instance & in) {
             Args a{in};
             const SetFamily &f = a.f(0), &g = a.f(1);
             if (auto why = initial_cross_problem(f, g, false); ! why.empty()) return vacuous(why);
             const SetFamily fa = avoid(f, KSet::of({1})), ga = avoid(g, KSet::of({1}));
             return decide(is_cross_t_intersecting(fa, ga, 2),
                           std::to_string(fa.size()) + " x " + std::to_string(ga.size()) + " members avoid 1");
         }});

    add({"PROP_3_2", "nonempty initial cross-intersecting => max rho >= k/(2k-2) or min rho >= k/(2k-1)", Shape::pair,
         {"n", "k"}, {"k", "k"}, [](const Params &) { return cross(1, true); },
         [](const Instance & in) {
             Args a{in};
             const int k = a("k");
             const SetFamily &f = a.f(0), &g = a.f(1);
             if (k < 2) return vacuous("needs k >= 2");
             if (auto why = initial_cross_problem(f, g, true); ! why.empty()) return vacuous(why);
             const Rational rf = rho(f), rg = rho(g);
             const bool high = std::max(rf, rg) >= Rational(k, 2 * k - 2);
             const bool both = std::min(rf, rg) >= Rational(k, 2 * k - 1);
             return decide(high || both, "rho " + rf.str() + ", " + rg.str());
         }});

    add({"PROP_3_4", "initial cross-intersecting, n >= 3.5k, min size >= |T(n,k)| => both rho > 2/3", Shape::pair,
         {"n", "k"}, {"k", "k"},
         [](const Params &) {
             Guide g = cross(1, true);
             g.saturate = true;
             g.star_core = 2;
             return g;
         },
         [](const Instance & in) {
             Args a{in};
             const int n = a("n"), k = a("k");
             const SetFamily &f = a.f(0), &g = a.f(1);
             if (k < 3) return vacuous("needs k >= 3");
             if (2 * n < 7 * k) return vacuous("n below 3.5k");
             if (auto why = initial_cross_problem(f, g, false); ! why.empty()) return vacuous(why);
             const Big need = C(n - 3, k - 2) * 3 + C(n - 3, k - 3);
             if (Big(std::min(f.size(), g.size())) < need) return vacuous("a family is below |T(n,k)| = " + num(need));
             return decide(rho(f) > Rational(2, 3) && rho(g) > Rational(2, 3), "rho " + rho_str(f) + ", " + rho_str(g));
         }});

    add({"TOKUSHIGE", "cross t-intersecting, k/n < 1 - 2^(-1/t) => |A||B| <= C(n-t,k-t)^2", Shape::pair,
         {"n", "k", "t"}, {"k", "k"}, [](const Params & p) { return cross(int_param(p, "t")); },
         [](const Instance & in) {
             Args a{in};
             const int n = a("n"), k = a("k"), t = a("t");
             if (! (k >= t && t >= 1)) return vacuous("needs k >= t >= 1");
             // k/n < 1 - 2^(-1/t)  <=>  2 (n-k)^t > n^t
             if (! (Big(2) * boost::multiprecision::pow(Big(n - k), t) > boost::multiprecision::pow(Big(n), t)))
                 return vacuous("k/n not below 1 - 2^(-1/t)");
             if (! is_cross_t_intersecting(a.f(0), a.f(1), t)) return vacuous("not cross t-intersecting");
             const Big prod = size_of(a.f(0)) * size_of(a.f(1)), bound = C(n - t, k - t) * C(n - t, k - t);
             return decide(prod <= bound, num(prod) + " <= " + num(bound), prod == bound);
         }});

    auto initial_on_gap = [](const Params &) {
        Guide g = cross(1);
        g.initial_gap = 8;
        g.star_core = 2;
        return g;
    };
    auto gap_setting = [](const Instance & in, std::string & why) {
        Args a{in};
        const int n = a("n");
        const SetFamily &f = a.f(0), &g = a.f(1);
        if (n < 10) why = "not applicable below n = 10";
        else if (! is_cross_t_intersecting(f, g, 1)) why = "not cross-intersecting";
        else if (! is_initial_on(f, n - 8) || ! is_initial_on(g, n - 8)) why = "not both initial on [n-8]";
        return why.empty();
    };

    add({"LEM_3_7", "cross-intersecting, initial on [n-8], |A(~1,~2)| > C(n-10,k-3) => |G(~n-1,~n)| < |G(1,2)| + 6C(n-3,k-3)",
         Shape::pair, {"n", "k"}, {"k", "k"}, initial_on_gap,
         [gap_setting](const Instance & in) {
             Args a{in};
             const int n = a("n"), k = a("k");
             std::string why;
             if (! gap_setting(in, why)) return vacuous(why);
             // A = {A ⊆ [n-8] : A ∪ {n-1} ∈ F or A ∪ {n} ∈ F}, restricted to avoid 1 and 2.
             const KSet tail = KSet::interval(n - 7, n), low = KSet::of({1, 2});
             std::vector<KSet> members;
             for (KSet s : a.f(0)) {
                 const KSet on_tail = s & tail;
                 if (on_tail == KSet::of({n - 1}) || on_tail == KSet::of({n}))
                     if (s.disjoint_from(low)) members.push_back(s.minus(tail));
             }
             std::sort(members.begin(), members.end());
             members.erase(std::unique(members.begin(), members.end()), members.end());
             if (Big(members.size()) <= C(n - 10, k - 3)) return vacuous("|A(~1,~2)| not above C(n-10,k-3)");
             const std::int64_t lhs = pair_avoid(a.f(1), n - 1, n), link12 = pair_link(a.f(1), 1, 2);
             const Big rhs = Big(link12) + C(n - 3, k - 3) * 6;
             return decide(Big(lhs) < rhs, std::to_string(lhs) + " < " + num(rhs));
         }});

    add({"LEM_3_8", "cross-intersecting, initial on [n-8], |A_1(~1,~2)| > C(n-10,k-3) => |B_2| < C(n-3,k-3)",
         Shape::pair, {"n", "k"}, {"k", "k"}, initial_on_gap,
         [gap_setting](const Instance & in) {
             Args a{in};
             const int n = a("n"), k = a("k");
             std::string why;
             if (! gap_setting(in, why)) return vacuous(why);
             const KSet tail = KSet::interval(n - 7, n), low = KSet::of({1, 2});
             std::int64_t a1 = 0, b2 = 0;
             for (KSet s : a.f(0)) a1 += (s & tail) == KSet::of({n}) && s.disjoint_from(low);
             for (KSet s : a.f(1)) b2 += (s & tail) == KSet::of({n - 1});
             if (Big(a1) <= C(n - 10, k - 3)) return vacuous("|A_1(~1,~2)| not above C(n-10,k-3)");
             return decide(Big(b2) < C(n - 3, k - 3), std::to_string(b2) + " < " + num(C(n - 3, k - 3)));
         }});

    add({"G_THEOREM", "initial cross-intersecting, nontrivial, n >= 2k => |F|+|G| <= g(n,k); equality for n > 2k > 6 only at the simplex pair",
         Shape::pair, {"n", "k"}, {"k", "k"}, [](const Params &) { return cross(1, true); },
         [](const Instance & in) {
             Args a{in};
             const int n = a("n"), k = a("k");
             const SetFamily &f = a.f(0), &g = a.f(1);
             if (n < 2 * k) return vacuous("needs n >= 2k");
             if (auto why = initial_cross_problem(f, g, true); ! why.empty()) return vacuous(why);
             if (! nontrivial(f) || ! nontrivial(g)) return vacuous("a family is a star");
             const Big sum = size_of(f) + size_of(g), bound = Big(max_initial_cross_sum(n, k));
             if (sum > bound) return decide(false, num(sum) + " > g(n,k) = " + num(bound));
             if (sum == bound && n > 2 * k && 2 * k > 6 && n <= 10) {
                 auto [small, large] = simplex_pair(n, k);
                 auto same = [](const SetFamily & x, const SetFamily & y) {
                     return x.size() == y.size() && are_isomorphic(x, y).value_or(false);
                 };
                 if (! ((same(f, small) && same(g, large)) || (same(f, large) && same(g, small))))
                     return decide(false, "sum attains g(n,k) but the pair is not the simplex pair");
             }
             return decide(true, num(sum) + " <= " + num(bound), sum == bound);
         }});

    add({"PROP_3_13", "initial cross-intersecting => for all F, G some q has |F&[q]| + |G&[q]| >= q+1", Shape::pair,
         {"n", "k", "l"}, {"k", "l"}, [](const Params &) { return cross(1, true); },
         [](const Instance & in) {
             Args a{in};
             const SetFamily &f = a.f(0), &g = a.f(1);
             if (auto why = initial_cross_problem(f, g, false); ! why.empty()) return vacuous(why);
             if (f.empty() || g.empty()) return vacuous("a family is empty");
             const int n = f.ground_size();
             for (KSet x : f)
                 for (KSet y : g) {
                     bool found = false;
                     for (int q = 1; q <= n && ! found; ++q)
                         found = intersection_size(x, KSet::prefix(q)) + intersection_size(y, KSet::prefix(q)) >= q + 1;
                     if (! found) return decide(false, "no q for " + x.str() + " / " + y.str());
                 }
             return decide(true, std::to_string(f.size() * g.size()) + " pairs");
         }});

    add({"PROP_3_14", "initial cross-intersecting, min size > C(n,k-3) => both rho >= 1/2", Shape::pair, {"n", "k"},
         {"k", "k"},
         [](const Params &) {
             Guide g = cross(1, true);
             g.saturate = true;
             return g;
         },
         [](const Instance & in) {
             Args a{in};
             const int n = a("n"), k = a("k");
             const SetFamily &f = a.f(0), &g = a.f(1);
             if (auto why = initial_cross_problem(f, g, false); ! why.empty()) return vacuous(why);
             if (Big(std::min(f.size(), g.size())) <= C(n, k - 3)) return vacuous("min size not above C(n,k-3)");
             const bool ok = rho(f) >= Rational(1, 2) && rho(g) >= Rational(1, 2);
             return decide(ok, "rho " + rho_str(f) + ", " + rho_str(g));
         }});

    add({"PROP_3_15", "nonempty initial cross-intersecting => rho(F) + rho(G) >= 1", Shape::pair, {"n", "k", "l"},
         {"k", "l"}, [](const Params &) { return cross(1, true); },
         [](const Instance & in) {
             Args a{in};
             const SetFamily &f = a.f(0), &g = a.f(1);
             if (auto why = initial_cross_problem(f, g, true); ! why.empty()) return vacuous(why);
             const Rational sum = rho(f) + rho(g);
             return decide(sum >= Rational(1), "rho sum " + sum.str(), sum == Rational(1));
         }});

    add({"PROP_4_1", "t-intersecting, saturated, n >= 2k, k > t+1, tau_t <= t+1 => rho > (t+1)/(t+2)", Shape::single,
         {"n", "k", "t"}, {"k"},
         [](const Params & p) {
             Guide g = self(int_param(p, "t"));
             g.saturate = true;
             g.star_core = int_param(p, "t") + 1;
             return g;
         },
         [](const Instance & in) {
             Args a{in};
             const int n = a("n"), k = a("k"), t = a("t");
             const SetFamily & f = a.f(0);
             // At k = t+1 the family C([t+2],t+1) meets every other condition
             // with rho exactly (t+1)/(t+2); the strict step needs k > t+1.
             if (! (1 <= t && t + 1 < k)) return vacuous("needs 1 <= t < k-1");
             if (n < 2 * k) return vacuous("needs n >= 2k");
             if (f.empty()) return vacuous("empty family");
             if (! is_t_intersecting(f, t)) return vacuous("not t-intersecting");
             if (transversal_number(f, t) > t + 1) return vacuous("tau_t above t+1");
             if (! is_saturated(f, PropertySpec::t_intersecting(t))) return vacuous("not saturated");
             return decide(rho(f) > Rational(t + 1, t + 2), "rho " + rho_str(f));
         }});

    add({"PROP_4_3", "cross t-intersecting, s > t >= 2, k,l > s, |G| > C(n,l-s) => size bounds on F", Shape::pair,
         {"n", "k", "l", "t", "s"}, {"k", "l"}, [](const Params & p) { return cross(int_param(p, "t")); },
         [](const Instance & in) {
             Args a{in};
             const int n = a("n"), k = a("k"), l = a("l"), t = a("t"), s = a("s");
             const SetFamily &f = a.f(0), &g = a.f(1);
             if (! (s > t && t >= 2 && k > s && l > s)) return vacuous("needs s > t >= 2 and k, l > s");
             if (! is_cross_t_intersecting(f, g, t)) return vacuous("not cross t-intersecting");
             if (size_of(g) <= C(n, l - s)) return vacuous("|G| not above C(n,l-s)");
             const Big first = C(s - 1, t) * C(n - s - 1, k - t) + (Big(1) << s) * C(n - t - 1, k - t - 1);
             if (size_of(f) >= first) return decide(false, "|F| = " + std::to_string(f.size()) + " >= " + num(first));
             if (n >= s * (k - t)) {
                 // Second bound with the rational coefficient cleared by (s-1).
                 const Big coef = C(s, t - 1) * 2 + (C(s - 1, t - 1) + C(s, t + 1) * 2) * (s - 1);
                 const Big second = C(s - 1, t) * C(n - s, k - t) * (s - 1) + coef * C(n - s, k - t - 1);
                 if (size_of(f) * (s - 1) >= second)
                     return decide(false, "|F| = " + std::to_string(f.size()) + " breaks the n >= s(k-t) bound");
             }
             return decide(true, "|F| = " + std::to_string(f.size()) + " < " + num(first));
         }});

    add({"COR_4_4", "t-intersecting, n >= (t+2)(k-t), |F| > (t+1)C(n-1,k-t-1), rho < t/(t+1) => pair degrees bounded",
         Shape::single, {"n", "k", "t"}, {"k"}, [](const Params & p) { return self(int_param(p, "t")); },
         [](const Instance & in) {
             Args a{in};
             const int n = a("n"), k = a("k"), t = a("t");
             const SetFamily & f = a.f(0);
             if (t < 1) return vacuous("needs t >= 1");
             if (n < (t + 2) * (k - t)) return vacuous("n below (t+2)(k-t)");
             if (! is_t_intersecting(f, t)) return vacuous("not t-intersecting");
             if (size_of(f) <= C(n - 1, k - t - 1) * (t + 1)) return vacuous("|F| not above (t+1)C(n-1,k-t-1)");
             if (! (rho(f) < Rational(t, t + 1))) return vacuous("rho not below t/(t+1)");
             // Bound times 6 keeps it integral.
             const Big cap6 = C(n - t - 2, k - t - 2) * (6 * (t + 1)) + C(n - t - 3, k - t - 3) * (5 * t * t + 19 * t + 24);
             auto pd = pair_degrees(f);
             for (int x = 1; x <= n; ++x)
                 for (int y = x + 1; y <= n; ++y)
                     if (Big(pd[x][y]) * 6 > cap6)
                         return decide(false, "pair {" + std::to_string(x) + "," + std::to_string(y) + "} has degree " +
                                                  std::to_string(pd[x][y]));
             return decide(true, "all pair degrees within bound");
         }});

    add({"LEM_4_6", "initial t-intersecting, n >= 2(t+1)(k-t), |F| >= 2t(t+1)(t+2)C(n-t-4,k-t-2) => rho > t/(t+1)",
         Shape::single, {"n", "k", "t"}, {"k"}, [](const Params & p) { return self(int_param(p, "t"), true); },
         [](const Instance & in) {
             Args a{in};
             const int n = a("n"), k = a("k"), t = a("t");
             const SetFamily & f = a.f(0);
             if (t < 1) return vacuous("needs t >= 1");
             if (f.empty()) return vacuous("empty family");
             if (n < 2 * (t + 1) * (k - t)) return vacuous("n below 2(t+1)(k-t)");
             if (! is_initial(f)) return vacuous("not initial");
             if (! is_t_intersecting(f, t)) return vacuous("not t-intersecting");
             const Big need = C(n - t - 4, k - t - 2) * (2 * t * (t + 1) * (t + 2));
             if (size_of(f) < need) return vacuous("|F| below " + num(need));
             return decide(rho(f) > Rational(t, t + 1), "rho " + rho_str(f));
         }});

    add({"BD_5_1", "non-trivial r-wise intersecting F in 2^[n], r >= 3 => |F| <= (r+2) 2^(n-r-1)", Shape::slices,
         {"n", "r"}, {},
         [](const Params & p) {
             Guide g;
             g.rwise_r = int_param(p, "r");
             return g;
         },
         [](const Instance & in) {
             Args a{in};
             const int n = a("n"), r = a("r");
             if (r < 3) return vacuous("needs r >= 3");
             std::vector<Mask> all;
             for (const SetFamily & slice : in.families)
                 for (KSet s : slice) all.push_back(s.bits());
             if (all.empty()) return vacuous("empty family");
             Mask common = ~Mask{0};
             for (Mask m : all) common &= m;
             if (common != 0) return vacuous("trivial (common element)");
             // r-wise intersecting over the whole non-uniform family.
             std::function<bool(std::size_t, int, Mask)> ok = [&](std::size_t from, int depth, Mask cur) {
                 if (cur == 0) return false;
                 if (depth == r) return true;
                 for (std::size_t i = from; i < all.size(); ++i)
                     if (! ok(i, depth + 1, cur & all[i])) return false;
                 return true;
             };
             if (! ok(0, 0, prefix_mask(n))) return vacuous("not r-wise intersecting");
             const Big total(all.size());
             const Big bound = n - r - 1 >= 0 ? Big(r + 2) << (n - r - 1) : Big(0);
             if (n - r - 1 < 0) return decide(total * 2 <= Big(r + 2), "tiny ground set");
             return decide(total <= bound, num(total) + " <= " + num(bound), total == bound);
         }});

    add({"RWISE_5_2", "r-wise intersecting k-uniform, n >= 2k => |F| <= C(n-1,k-1)", Shape::single, {"n", "k", "r"},
         {"k"},
         [](const Params & p) {
             Guide g;
             g.rwise_r = int_param(p, "r");
             return g;
         },
         [](const Instance & in) {
             Args a{in};
             const int n = a("n"), k = a("k"), r = a("r");
             const SetFamily & f = a.f(0);
             if (r < 2) return vacuous("needs r >= 2");
             if (n < 2 * k) return vacuous("needs n >= 2k");
             if (! is_r_wise_t_intersecting(f, r, 1)) return vacuous("not r-wise intersecting");
             const Big bound = C(n - 1, k - 1);
             return decide(size_of(f) <= bound, std::to_string(f.size()) + " <= " + num(bound), size_of(f) == bound);
         }});

    add({"LEM_5_2", "non-trivial r-wise t-intersecting, r >= 3 => t_2 >= t+r-2; equality => tau_(t+r-3) = t+r-2",
         Shape::single, {"n", "k", "r", "t"}, {"k"},
         [](const Params & p) {
             Guide g;
             g.rwise_r = int_param(p, "r");
             g.rwise_t = int_param(p, "t");
             g.star_core = int_param(p, "t") + 1;
             return g;
         },
         [](const Instance & in) {
             Args a{in};
             const int r = a("r"), t = a("t");
             const SetFamily & f = a.f(0);
             if (r < 3 || t < 1) return vacuous("needs r >= 3 and t >= 1");
             if (! nontrivial(f)) return vacuous("trivial or empty");
             if (! is_r_wise_t_intersecting(f, r, t)) return vacuous("not r-wise t-intersecting");
             const int t2 = t_level(f, 2);
             if (t2 < t + r - 2) return decide(false, "t_2 = " + std::to_string(t2));
             if (t2 == t + r - 2) {
                 const int tau = transversal_number(f, t + r - 3);
                 return decide(tau == t + r - 2, "t_2 = " + std::to_string(t2) + ", tau = " + std::to_string(tau), true);
             }
             return decide(true, "t_2 = " + std::to_string(t2));
         }});

    add({"PROP_5_3", "non-trivial saturated r-wise intersecting, n >= rk/(r-1), k > r, tau_(r-1) <= r => rho > r/(r+1)",
         Shape::single, {"n", "k", "r"}, {"k"},
         [](const Params & p) {
             Guide g;
             g.rwise_r = int_param(p, "r");
             g.saturate = true;
             g.star_core = int_param(p, "r");
             return g;
         },
         [](const Instance & in) {
             Args a{in};
             const int n = a("n"), k = a("k"), r = a("r");
             const SetFamily & f = a.f(0);
             // k = r admits C([r+1],r) with rho exactly r/(r+1).
             if (r < 3 || r >= k) return vacuous("needs 3 <= r < k");
             if ((r - 1) * n < r * k) return vacuous("n below rk/(r-1)");
             if (! nontrivial(f)) return vacuous("trivial or empty");
             if (! is_r_wise_t_intersecting(f, r, 1)) return vacuous("not r-wise intersecting");
             if (transversal_number(f, r - 1) > r) return vacuous("tau_(r-1) above r");
             const auto rwise = PropertySpec::custom("r-wise", [r](std::span<const SetFamily> fs) {
                 return is_r_wise_t_intersecting(fs[0], r, 1);
             });
             if (! is_saturated(f, rwise)) return vacuous("not saturated");
             return decide(rho(f) > Rational(r, r + 1), "rho " + rho_str(f));
         }});

    // Checks outside the registry proper: classical tools and identities.
    auto aux = [&](Statement s) {
        s.primary = false;
        add(std::move(s));
    };

    aux({"HILTON", "cross-intersecting A in C([n],a), B in C([n],b), n >= a+b => L(n,a,|A|), L(n,b,|B|) cross-intersecting",
         Shape::pair, {"n", "a", "b"}, {"a", "b"}, [](const Params &) { return cross(1); },
         [](const Instance & in) {
             Args a{in};
             const int n = a("n"), ua = a("a"), ub = a("b");
             const SetFamily &f = a.f(0), &g = a.f(1);
             if (ua < 1 || ub < 1 || n < ua + ub) return vacuous("needs a, b >= 1 and n >= a+b");
             if (! is_cross_t_intersecting(f, g, 1)) return vacuous("not cross-intersecting");
             const SetFamily lf = lex_segment(n, ua, f.size()).members, lg = lex_segment(n, ub, g.size()).members;
             return decide(is_cross_t_intersecting(lf, lg, 1),
                           "sizes " + std::to_string(f.size()) + ", " + std::to_string(g.size()));
         }});

    aux({"KATONA", "t-intersecting nonempty, n >= 2k-t, t >= l >= 1 => |shadow_l| >= |A| C(2k-t,k-l)/C(2k-t,k); equality iff C([2k-t],k)",
         Shape::single, {"n", "k", "t"}, {"k"}, [](const Params & p) { return self(int_param(p, "t")); },
         [](const Instance & in) {
             Args a{in};
             const int n = a("n"), k = a("k"), t = a("t"), l = in.params.count("l") ? a("l") : 1;
             const SetFamily & f = a.f(0);
             if (! (1 <= l && l <= t && t <= k)) return vacuous("needs 1 <= l <= t <= k");
             if (n < 2 * k - t) return vacuous("n below 2k-t");
             if (f.empty()) return vacuous("empty family");
             if (! is_t_intersecting(f, t)) return vacuous("not t-intersecting");
             const Big lhs = Big(shadow(f, l).size()) * C(2 * k - t, k), rhs = size_of(f) * C(2 * k - t, k - l);
             if (lhs < rhs) return decide(false, "shadow too small");
             const bool equality = lhs == rhs;
             if (n <= 10) {
                 const SetFamily model = SetFamily(n, k, enumerate_ksubsets(2 * k - t, k));
                 const bool iso = f.size() == model.size() && are_isomorphic(f, model).value_or(false);
                 if (iso != equality)
                     return decide(false, equality ? "equality without being C([2k-t],k)" : "C([2k-t],k) without equality");
             }
             return decide(true, equality ? "equality" : "strict", equality);
         },
         {}, {}, false});

    aux({"KATONA_PSEUDO", "pseudo t-intersecting nonempty, n >= 2k-t, t >= l >= 1 => Katona shadow bound", Shape::single,
         {"n", "k", "t"}, {"k"}, [](const Params & p) { return self(int_param(p, "t")); },
         [](const Instance & in) {
             Args a{in};
             const int n = a("n"), k = a("k"), t = a("t"), l = in.params.count("l") ? a("l") : 1;
             const SetFamily & f = a.f(0);
             if (! (1 <= l && l <= t && t <= k)) return vacuous("needs 1 <= l <= t <= k");
             if (n < 2 * k - t) return vacuous("n below 2k-t");
             if (f.empty()) return vacuous("empty family");
             if (! is_pseudo_t_intersecting(f, t)) return vacuous("not pseudo t-intersecting");
             const Big lhs = Big(shadow(f, l).size()) * C(2 * k - t, k), rhs = size_of(f) * C(2 * k - t, k - l);
             return decide(lhs >= rhs, lhs == rhs ? "equality" : "strict", lhs == rhs);
         }});

    aux({"CROSS_SHADOW", "nonempty cross t-intersecting, 1 <= l_i < k_i => one of the two Katona shadow bounds holds",
         Shape::pair, {"n", "k1", "k2", "t", "l1", "l2"}, {"k1", "k2"},
         [](const Params & p) { return cross(int_param(p, "t")); },
         [](const Instance & in) {
             Args a{in};
             const int k1 = a("k1"), k2 = a("k2"), t = a("t"), l1 = a("l1"), l2 = a("l2");
             const SetFamily &f = a.f(0), &g = a.f(1);
             if (! (1 <= l1 && l1 < k1 && 1 <= l2 && l2 < k2)) return vacuous("needs 1 <= l_i < k_i");
             if (t < 1) return vacuous("needs t >= 1");
             if (f.empty() || g.empty()) return vacuous("a family is empty");
             if (! is_cross_t_intersecting(f, g, t)) return vacuous("not cross t-intersecting");
             auto holds = [t](const SetFamily & x, int k, int l) {
                 return Big(shadow(x, l).size()) * C(2 * k - t, k) >= size_of(x) * C(2 * k - t, k - l);
             };
             const bool first = holds(f, k1, l1), second = holds(g, k2, l2);
             return decide(first || second, std::string(first ? "first" : "") + (second ? " second" : ""));
         }});

    aux({"KK_SHADOW", "|shadow_l F| >= shadow of the colex segment of size |F|", Shape::single, {"n", "k", "l"}, {"k"},
         no_guide,
         [](const Instance & in) {
             Args a{in};
             const int n = a("n"), k = a("k"), l = a("l");
             const SetFamily & f = a.f(0);
             if (! (1 <= l && l <= k)) return vacuous("needs 1 <= l <= k");
             // The minimum depends only on |F|; memoise per thread.
             thread_local std::map<std::tuple<int, int, int, std::uint64_t>, std::uint64_t> memo;
             auto key = std::make_tuple(n, k, l, static_cast<std::uint64_t>(f.size()));
             auto it = memo.find(key);
             if (it == memo.end()) it = memo.emplace(key, kk_min_shadow(n, k, f.size(), l)).first;
             const std::uint64_t have = shadow(f, l).size();
             return decide(have >= it->second, std::to_string(have) + " >= " + std::to_string(it->second),
                           have == it->second);
         },
         {}, {}, false});

    aux({"IMPROVED_SHADOW", "t-intersecting, 1 <= l < t < k, large => |shadow_l|/|F| >= C(2k-2-t,k-1-l)/C(2k-2-t,k-1)",
         Shape::single, {"n", "k", "t", "l"}, {"k"}, [](const Params & p) { return self(int_param(p, "t")); },
         [](const Instance & in) {
             Args a{in};
             const int k = a("k"), t = a("t"), l = a("l");
             const SetFamily & f = a.f(0);
             if (! (1 <= l && l < t && t < k)) return vacuous("needs 1 <= l < t < k");
             if (! is_t_intersecting(f, t)) return vacuous("not t-intersecting");
             // |F| >= C(2k-t,k) (k+2t+1) / (k+t+1-l)
             if (size_of(f) * (k + t + 1 - l) < C(2 * k - t, k) * (k + 2 * t + 1)) return vacuous("|F| below threshold");
             const Big lhs = Big(shadow(f, l).size()) * C(2 * k - 2 - t, k - 1);
             const Big rhs = size_of(f) * C(2 * k - 2 - t, k - 1 - l);
             return decide(lhs >= rhs, num(lhs) + " >= " + num(rhs), lhs == rhs);
         }});

    aux({"IDENTITY_2_3", "sum of degrees over E equals the trace-weighted count (E given as bit mask)", Shape::single,
         {"n", "k"}, {"k"}, no_guide,
         [](const Instance & in) {
             Args a{in};
             const KSet e(static_cast<Mask>(a.q("E").numerator()));
             return decide(check_identity_2_3(a.f(0), e), "E = " + e.str());
         },
         all_subsets_e,
         [](Instance & in, std::uint64_t seed) {
             std::mt19937_64 rng(seed);
             const int n = in.families.at(0).ground_size();
             in.params["E"] = Rational(static_cast<std::int64_t>(rng() & prefix_mask(n)));
         },
         false});

    aux({"IDENTITY_3_2", "|F(x)|+|F(y)| three ways", Shape::single, {"n", "k"}, {"k"}, no_guide,
         [](const Instance & in) {
             Args a{in};
             return decide(check_identity_3_2(a.f(0), a("x"), a("y")), "");
         },
         all_pairs_xy,
         [](Instance & in, std::uint64_t seed) {
             std::mt19937_64 rng(seed);
             const int n = in.families.at(0).ground_size();
             int x = 1 + static_cast<int>(draw(rng, n)), y = 1 + static_cast<int>(draw(rng, n - 1));
             if (y >= x) ++y;
             in.params["x"] = Rational(std::min(x, y));
             in.params["y"] = Rational(std::max(x, y));
         },
         false});

    aux({"INITIAL_SHADOW", "initial => shadow of F(~1) lies in F(1)", Shape::single, {"n", "k"}, {"k"},
         [](const Params &) { return self(0, true); },
         [](const Instance & in) {
             Args a{in};
             const SetFamily & f = a.f(0);
             if (! is_initial(f)) return vacuous("not initial");
             if (f.uniformity() < 1) return vacuous("needs k >= 1");
             const SetFamily low = shadow(avoid(f, KSet::of({1})), 1), up = link(f, KSet::of({1}));
             for (KSet s : low)
                 if (! up.contains(s)) return decide(false, s.str() + " missing from F(1)");
             return decide(true, std::to_string(low.size()) + " <= " + std::to_string(up.size()));
         },
         {}, {}, false});

    aux({"MATCHING_RHO", "initial nonempty with matching number s => rho >= 1/(s+1)", Shape::single, {"n", "k"}, {"k"},
         [](const Params &) { return self(0, true); },
         [](const Instance & in) {
             Args a{in};
             const SetFamily & f = a.f(0);
             if (f.empty()) return vacuous("empty family");
             if (! is_initial(f)) return vacuous("not initial");
             const int nu = matching_number(f);
             return decide(rho(f) >= Rational(1, nu + 1), "rho " + rho_str(f) + ", nu " + std::to_string(nu),
                           rho(f) == Rational(1, nu + 1));
         },
         {}, {}, false});

    aux({"FACT_3_13", "0 < a <= A, 0 < b <= B => (a+b)/(A+B) >= min(a/A, b/B); sampling draws values up to the grid point",
         Shape::scalars, {"a", "A", "b", "B"}, {}, no_guide,
         [](const Instance & in) {
             Args x{in};
             const Rational a = x.q("a"), A = x.q("A"), b = x.q("b"), B = x.q("B");
             if (! (Rational(0) < a && a <= A && Rational(0) < b && b <= B)) return vacuous("needs 0 < a <= A, 0 < b <= B");
             const Rational lhs = (a + b) / (A + B), rhs = std::min(a / A, b / B);
             return decide(check_fact_3_13(a, A, b, B), lhs.str() + " >= " + rhs.str(), lhs == rhs);
         },
         {},
         [](Instance & in, std::uint64_t seed) {
             std::mt19937_64 rng(seed);
             for (const char * key : {"a", "A", "b", "B"}) {
                 const Rational cap = in.params.at(key);
                 // numerator in [1, 12 cap], denominator in [1, 12]
                 const std::int64_t den = 1 + static_cast<std::int64_t>(draw(rng, 12));
                 const std::int64_t top = std::max<std::int64_t>(1, cap.numerator() * den / cap.denominator());
                 in.params[key] = Rational(1 + static_cast<std::int64_t>(draw(rng, top)), den);
             }
         },
         false});

    aux({"BINOM_1_11", "n > ik => C(n-i,k) >= (n-ik)/n C(n,k); sampling draws values up to the grid point", Shape::scalars,
         {"n", "k", "i"}, {}, no_guide,
         [](const Instance & in) {
             Args a{in};
             auto rep = check_binomials(a("n"), a("k"), a("i"), 0).lower_tail;
             if (! rep.applicable) return vacuous("needs n > ik");
             return decide(rep.holds, rep.lhs + " >= " + rep.rhs, rep.lhs == rep.rhs);
         },
         {},
         [](Instance & in, std::uint64_t seed) {
             std::mt19937_64 rng(seed);
             for (const char * key : {"n", "k", "i"})
                 in.params[key] = Rational(1 + static_cast<std::int64_t>(draw(rng, int_param(in.params, key))));
         },
         false});

    aux({"BINOM_1_13", "n >= 2(t-1)(k-t), k > t >= 2 => C(n-t-2,k-t-2) >= C(n-3,k-t-2)/2; sampling draws values up to the grid point",
         Shape::scalars, {"n", "k", "t"}, {}, no_guide,
         [](const Instance & in) {
             Args a{in};
             auto rep = check_binomials(a("n"), a("k"), 1, a("t")).half_binomial;
             if (! rep.applicable) return vacuous("outside n >= 2(t-1)(k-t), k > t >= 2");
             return decide(rep.holds, rep.lhs + " >= " + rep.rhs, rep.lhs == rep.rhs);
         },
         {},
         [](Instance & in, std::uint64_t seed) {
             std::mt19937_64 rng(seed);
             for (const char * key : {"n", "k", "t"})
                 in.params[key] = Rational(1 + static_cast<std::int64_t>(draw(rng, int_param(in.params, key))));
         },
         false});

    return r;
}

void validate(const Statement & s, const Instance & in)
{
    for (const auto & p : s.params)
        if (! in.params.count(p)) throw std::invalid_argument(s.id + ": missing parameter '" + p + "'");
    auto need_n = [&](const SetFamily & f) {
        if (f.ground_size() != int_param(in.params, "n"))
            throw std::invalid_argument(s.id + ": family ground set differs from n");
    };
    switch (s.shape) {
    case Shape::scalars:
        break;
    case Shape::single:
    case Shape::pair: {
        const std::size_t slots = s.shape == Shape::single ? 1 : 2;
        if (in.families.size() != slots)
            throw std::invalid_argument(s.id + ": expected " + std::to_string(slots) + " families");
        for (std::size_t i = 0; i < slots; ++i) {
            need_n(in.families[i]);
            if (in.families[i].uniformity() != int_param(in.params, s.uniformities[i]))
                throw std::invalid_argument(s.id + ": family " + std::to_string(i) + " has uniformity other than " +
                                            s.uniformities[i]);
        }
        break;
    }
    case Shape::slices: {
        const int n = int_param(in.params, "n");
        if (in.families.size() != static_cast<std::size_t>(n + 1))
            throw std::invalid_argument(s.id + ": expected n+1 slices");
        for (int k = 0; k <= n; ++k) {
            need_n(in.families[k]);
            if (in.families[k].uniformity() != k) throw std::invalid_argument(s.id + ": slice k has the wrong uniformity");
        }
        break;
    }
    }
}

} // namespace

const std::vector<Statement> & statements()
{
    static const std::vector<Statement> all = [] {
        auto v = build();
        std::stable_partition(v.begin(), v.end(), [](const Statement & s) { return s.primary; });
        return v;
    }();
    return all;
}

const Statement & find_statement(const std::string & id)
{
    for (const auto & s : statements())
        if (s.id == id) return s;
    throw std::invalid_argument("unknown statement id '" + id + "'");
}

std::vector<std::string> registry_ids(bool primary_only)
{
    std::vector<std::string> out;
    for (const auto & s : statements())
        if (s.primary || ! primary_only) out.push_back(s.id);
    return out;
}

StatementReport check_statement(const std::string & id, const Instance & instance)
{
    const Statement & s = find_statement(id);
    validate(s, instance);
    const auto start = std::chrono::steady_clock::now();
    Evaluation e = s.evaluate(instance);
    const auto stop = std::chrono::steady_clock::now();
    return {id, instance, e.verdict, std::move(e.detail), e.equality,
            std::chrono::duration<double>(stop - start).count()};
}

} // namespace extremal
