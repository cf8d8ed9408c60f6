#include "extremal/verify.hpp"

#include "extremal/constructions.hpp"
#include "extremal/measures.hpp"

#include <algorithm>
#include <bit>
#include <variant>

namespace extremal {

namespace {

constexpr std::uint64_t vertex_limit = 4096;

struct OutOfNodes {};

/// Fixed-width bitset over vertex indices.
struct Bits {
    std::vector<std::uint64_t> w;
    explicit Bits(std::size_t n = 0) : w((n + 63) / 64, 0) {}
    void set(std::size_t i) { w[i / 64] |= std::uint64_t{1} << (i % 64); }
    bool test(std::size_t i) const { return w[i / 64] >> (i % 64) & 1; }
};

template <class... F>
struct Overloaded : F... {
    using F::operator()...;
};

class Search {
public:
    Search(int n, int k, const PropertySpec & property, std::uint64_t budget)
        : n_(n), k_(k), property_(property), budget_(budget)
    {
        for (KSet s : enumerate_ksubsets(n, k)) vertices_.push_back(s.bits());
        classify();
        const std::size_t v = vertices_.size();
        allowed_.assign(v, true);
        adj_.assign(v, Bits(v));
        for (std::size_t a = 0; a < v; ++a) {
            allowed_[a] = compatible(vertices_[a], vertices_[a]);
            for (std::size_t b = a + 1; b < v; ++b)
                if (compatible(vertices_[a], vertices_[b])) {
                    adj_[a].set(b);
                    adj_[b].set(a);
                }
        }
        degree_.assign(n + 1, 0);
    }

    bool has_custom() const { return custom_; }

    void seed(std::uint64_t size, SetFamily witness, std::string source)
    {
        best_ = size;
        witness_ = std::move(witness);
        source_ = std::move(source);
    }

    SearchResult run()
    {
        SearchResult r;
        try {
            const SetFamily empty(n_, k_, {});
            if (! witness_ && property_.holds(empty)) seed(0, empty, "");

            std::vector<int> pool;
            if (custom_) {
                for (std::size_t i = 0; i < vertices_.size(); ++i)
                    if (allowed_[i]) pool.push_back(static_cast<int>(i));
                expand(pool);
            }
            else if (! vertices_.empty() && allowed_[0] && hereditary_ok(0)) {
                // Every nonempty family is isomorphic to one containing [k]
                // (index 0), and built-in atoms are label-invariant.
                include(0);
                for (std::size_t i = 1; i < vertices_.size(); ++i)
                    if (allowed_[i] && adj_[0].test(i)) pool.push_back(static_cast<int>(i));
                expand(pool);
                exclude(0);
            }
        }
        catch (const OutOfNodes &) {
            r.complete = false;
        }
        r.nodes = nodes_;
        r.max_size = witness_ ? best_ : 0;
        r.witness = witness_ ? *witness_ : SetFamily(n_, k_, {});
        r.catalog_source = source_;
        return r;
    }

private:
    void classify()
    {
        for (const Atom & a : property_.atoms()) {
            std::visit(Overloaded{
                           [&](const atom::TIntersecting & x) {
                               check_slot(x.slot);
                               self_t_ = std::max(self_t_, x.t);
                           },
                           [&](const atom::CrossTIntersecting & x) {
                               check_slot(x.slot_a);
                               check_slot(x.slot_b);
                               self_t_ = std::max(self_t_, x.t);
                           },
                           [&](const atom::RhoAtMost & x) {
                               check_slot(x.slot);
                               rho_caps_.push_back(x.bound);
                           },
                           [&](const atom::MatchingAtMost & x) {
                               check_slot(x.slot);
                               nu_cap_ = nu_cap_ < 0 ? x.s : std::min(nu_cap_, x.s);
                           },
                           [&](const atom::NonTrivial & x) { check_slot(x.slot); },
                           [&](const atom::Overlapping & x) {
                               for (int s : x.slots) check_slot(s);
                               if (x.slots.size() <= 2) overlapping_ = true;
                               else {
                                   const int cap = static_cast<int>(x.slots.size()) - 1;
                                   nu_cap_ = nu_cap_ < 0 ? cap : std::min(nu_cap_, cap);
                               }
                           },
                           [&](const atom::Custom &) { custom_ = true; },
                       },
                       a);
        }
    }

    static void check_slot(int slot)
    {
        if (slot != every_slot && slot != 0)
            throw std::invalid_argument("search_max handles a single family (slot 0)");
    }

    bool compatible(Mask a, Mask b) const
    {
        if (self_t_ > 0 && std::popcount(a & b) < self_t_) return false;
        if (overlapping_ && (a & b) == 0) return false;
        return true;
    }

    std::vector<KSet> current_sets() const
    {
        std::vector<KSet> out;
        for (int i : chosen_) out.push_back(KSet(vertices_[i]));
        std::sort(out.begin(), out.end());
        return out;
    }

    bool hereditary_ok(int v) const
    {
        if (nu_cap_ < 0) return true;
        auto sets = current_sets();
        sets.push_back(KSet(vertices_[v]));
        std::sort(sets.begin(), sets.end());
        return matching_number(SetFamily(n_, k_, std::move(sets))) <= nu_cap_;
    }

    void include(int v)
    {
        chosen_.push_back(v);
        for (Mask m = vertices_[v]; m; m &= m - 1) ++degree_[std::countr_zero(m) + 1];
        max_degree_history_.push_back(std::max(max_degree_history_.empty() ? 0 : max_degree_history_.back(),
                                               current_max_degree()));
    }

    void exclude(int v)
    {
        chosen_.pop_back();
        for (Mask m = vertices_[v]; m; m &= m - 1) --degree_[std::countr_zero(m) + 1];
        max_degree_history_.pop_back();
    }

    int current_max_degree() const { return *std::max_element(degree_.begin(), degree_.end()); }

    /// The degree of some element can only grow, the family can reach at
    /// most `reach` members: rho <= c is out of reach when max_deg > c * reach.
    bool rho_blocked(std::uint64_t reach) const
    {
        const std::int64_t d = max_degree_history_.empty() ? 0 : max_degree_history_.back();
        for (const Rational & c : rho_caps_)
            if (static_cast<__int128>(d) * c.denominator() > static_cast<__int128>(c.numerator()) * static_cast<__int128>(reach))
                return true;
        return false;
    }

    void consider()
    {
        if (witness_ && chosen_.size() <= best_) return;
        SetFamily f(n_, k_, current_sets());
        if (property_.holds(f)) seed(chosen_.size(), std::move(f), "");
    }

    /// Greedy colouring of the pool; returns vertices in colour order with
    /// each vertex's colour number (a clique bound for the prefix).
    void colour(const std::vector<int> & pool, std::vector<int> & order, std::vector<int> & bound) const
    {
        std::vector<std::vector<int>> classes;
        for (int v : pool) {
            bool placed = false;
            for (auto & cls : classes) {
                bool clash = false;
                for (int u : cls)
                    if (adj_[v].test(u)) {
                        clash = true;
                        break;
                    }
                if (! clash) {
                    cls.push_back(v);
                    placed = true;
                    break;
                }
            }
            if (! placed) classes.push_back({v});
        }
        order.clear();
        bound.clear();
        for (std::size_t c = 0; c < classes.size(); ++c)
            for (int v : classes[c]) {
                order.push_back(v);
                bound.push_back(static_cast<int>(c) + 1);
            }
    }

    void expand(std::vector<int> pool)
    {
        if (++nodes_ > budget_) throw OutOfNodes{};
        consider();
        if (pool.empty()) return;
        std::vector<int> order, bound;
        colour(pool, order, bound);
        for (std::size_t i = order.size(); i-- > 0;) {
            const std::uint64_t reach = chosen_.size() + static_cast<std::uint64_t>(bound[i]);
            if (witness_ && reach <= best_) return;
            if (rho_blocked(reach)) return;
            const int v = order[i];
            if (hereditary_ok(v)) {
                std::vector<int> next;
                for (std::size_t j = 0; j < i; ++j)
                    if (adj_[v].test(order[j])) next.push_back(order[j]);
                include(v);
                expand(std::move(next));
                exclude(v);
            }
        }
    }

    int n_, k_;
    const PropertySpec & property_;
    std::uint64_t budget_;
    std::vector<Mask> vertices_;
    std::vector<bool> allowed_;
    std::vector<Bits> adj_;
    int self_t_ = 0;
    bool overlapping_ = false;
    int nu_cap_ = -1;
    bool custom_ = false;
    std::vector<Rational> rho_caps_;

    std::vector<int> chosen_;
    std::vector<int> degree_;
    std::vector<int> max_degree_history_;
    std::uint64_t nodes_ = 0;
    std::uint64_t best_ = 0;
    std::optional<SetFamily> witness_;
    std::string source_;
};

} // namespace

std::vector<std::pair<std::string, SetFamily>> catalog_families(int n, int k)
{
    std::vector<std::pair<std::string, SetFamily>> out;
    auto attempt = [&](const std::string & name, auto make) {
        try {
            SetFamily f = make();
            if (f.ground_size() == n && f.uniformity() == k) out.emplace_back(name, std::move(f));
        }
        catch (const std::exception &) {
        }
    };
    attempt("all", [&] { return SetFamily(n, k, enumerate_ksubsets(n, k)); });
    for (int t = 1; t <= k; ++t) {
        attempt("star(" + std::to_string(t) + ")", [&] { return full_star(n, k, t); });
        if (t < k) attempt("frankl(" + std::to_string(t) + ")", [&] { return frankl_family(n, k, t); });
    }
    attempt("triangle", [&] { return triangle_family(n, k); });
    for (int q = 1; q <= n; ++q)
        for (int a = 0; a <= q + 1; ++a)
            attempt("threshold(" + std::to_string(q) + "," + std::to_string(a) + ")",
                    [&] { return threshold_family(n, k, q, a); });
    for (int q : {2, 3, 4, 5, 7})
        if (q + 1 == k && q * q + q + 1 <= n)
            attempt("plane(" + std::to_string(q) + ")", [&] {
                SetFamily p = projective_plane(q);
                return SetFamily(n, k, std::vector<KSet>(p.begin(), p.end()));
            });
    if (n >= 2 * k)
        attempt("simplex", [&] { return SetFamily(n, k, enumerate_ksubsets(k + 1, k)); });
    return out;
}

SearchResult search_max(int n, int k, const PropertySpec & property, std::uint64_t budget)
{
    if (n < 1 || n > max_ground_size || k < 0 || k > n) throw std::invalid_argument("search_max needs 0 <= k <= n <= 63");
    if (binomial(n, k) > vertex_limit)
        throw std::invalid_argument("search_max: C(n,k) above " + std::to_string(vertex_limit) + " candidate sets");
    Search search(n, k, property, budget);
    std::uint64_t best = 0;
    bool seeded = false;
    for (auto & [name, f] : catalog_families(n, k))
        if ((! seeded || f.size() > best) && property.holds(f)) {
            best = f.size();
            seeded = true;
            search.seed(best, f, name);
        }
    return search.run();
}

} // namespace extremal
