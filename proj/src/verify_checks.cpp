#include "extremal/verify.hpp"

#include "extremal/measures.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstdlib>

namespace extremal {

using Big = boost::multiprecision::cpp_int;

namespace {

Big big_binomial(int n, int k)
{
    if (k < 0 || n < 0 || k > n) return 0;
    k = std::min(k, n - k);
    Big r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

std::string trim(std::string_view s)
{
    while (! s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (! s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return std::string(s);
}

} // namespace

bool check_identity_2_3(const SetFamily & family, KSet e)
{
    if (! e.subset_of(KSet::prefix(family.ground_size())))
        throw std::invalid_argument("check_identity_2_3: E must lie inside [n]");
    std::int64_t lhs = 0;
    for (int x : e.elements()) lhs += degree(family, x);

    // Right side: walk the subsets E0 of E and count members whose trace is E0.
    std::int64_t rhs = 0;
    const Mask full = e.bits();
    for (Mask sub = full;; sub = (sub - 1) & full) {
        if (sub != 0) {
            std::int64_t exact = 0;
            for (KSet f : family) exact += (f.bits() & full) == sub;
            rhs += std::popcount(sub) * exact;
        }
        if (sub == 0) break;
    }
    return lhs == rhs;
}

bool check_identity_3_2(const SetFamily & family, int x, int y)
{
    if (! (1 <= x && x < y && y <= family.ground_size()))
        throw std::invalid_argument("check_identity_3_2 needs 1 <= x < y <= n");
    std::int64_t both = 0, only_x = 0, only_y = 0, neither = 0;
    for (KSet f : family) {
        const bool a = f.contains(x), b = f.contains(y);
        both += a && b;
        only_x += a && ! b;
        only_y += ! a && b;
        neither += ! a && ! b;
    }
    const std::int64_t degrees_sum = degree(family, x) + degree(family, y);
    const std::int64_t split = only_x + only_y + 2 * both;
    const std::int64_t complement = both + static_cast<std::int64_t>(family.size()) - neither;
    return degrees_sum == split && split == complement;
}

bool check_fact_3_13(Rational a, Rational big_a, Rational b, Rational big_b)
{
    if (! (Rational(0) < a && a <= big_a && Rational(0) < b && b <= big_b))
        throw std::invalid_argument("check_fact_3_13 needs 0 < a <= A and 0 < b <= B");
    return (a + b) / (big_a + big_b) >= std::min(a / big_a, b / big_b);
}

BinomialReport check_binomials(int n, int k, int i, int t)
{
    BinomialReport r;
    if (n > 0 && k > 0 && i > 0 && n > i * k) {
        // C(n-i,k) >= (n-ik)/n C(n,k), cleared of the denominator.
        Big lhs = big_binomial(n - i, k) * n;
        Big rhs = big_binomial(n, k) * (n - i * k);
        r.lower_tail = {true, lhs >= rhs, lhs.str(), rhs.str()};
    }
    if (k > t && t >= 2 && n > 0 && n >= 2 * (t - 1) * (k - t)) {
        Big lhs = big_binomial(n - t - 2, k - t - 2) * 2;
        Big rhs = big_binomial(n - 3, k - t - 2);
        r.half_binomial = {true, lhs >= rhs, lhs.str(), rhs.str()};
    }
    return r;
}

std::string_view verdict_name(Verdict v)
{
    switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::vacuous: return "vacuous";
    case Verdict::fail: return "FAIL";
    }
    return "?";
}

int int_param(const Params & params, const std::string & name)
{
    auto it = params.find(name);
    if (it == params.end()) throw std::invalid_argument("missing parameter '" + name + "'");
    if (it->second.denominator() != 1) throw std::invalid_argument("parameter '" + name + "' must be an integer");
    return static_cast<int>(it->second.numerator());
}

std::string params_str(const Params & params)
{
    std::string out;
    for (const auto & [key, value] : params) {
        if (! out.empty()) out += ',';
        out += key + '=';
        out += value.denominator() == 1 ? std::to_string(value.numerator()) : value.str();
    }
    return out;
}

std::vector<Params> parse_grid(std::string_view text)
{
    std::map<std::string, std::vector<Rational>> axes;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string_view::npos) comma = text.size();
        std::string item = trim(text.substr(pos, comma - pos));
        pos = comma + 1;
        if (item.empty()) {
            if (comma == text.size()) break;
            throw std::invalid_argument("empty item in grid '" + std::string(text) + "'");
        }
        const auto eq = item.find('=');
        if (eq == std::string::npos || eq == 0)
            throw std::invalid_argument("grid item '" + item + "' is not key=value");
        const std::string key = trim(std::string_view(item).substr(0, eq));
        const std::string value = trim(std::string_view(item).substr(eq + 1));
        if (axes.count(key)) throw std::invalid_argument("grid key '" + key + "' given twice");
        std::vector<Rational> values;
        if (auto dots = value.find(".."); dots != std::string::npos) {
            const Rational lo = Rational::parse(value.substr(0, dots));
            const Rational hi = Rational::parse(value.substr(dots + 2));
            if (lo.denominator() != 1 || hi.denominator() != 1 || hi < lo)
                throw std::invalid_argument("grid range '" + value + "' needs integers lo <= hi");
            for (std::int64_t v = lo.numerator(); v <= hi.numerator(); ++v) values.emplace_back(v);
        }
        else {
            std::size_t start = 0;
            for (;;) {
                std::size_t bar = value.find('|', start);
                values.push_back(Rational::parse(value.substr(start, bar - start)));
                if (bar == std::string::npos) break;
                start = bar + 1;
            }
        }
        axes[key] = std::move(values);
    }
    std::vector<Params> grid{Params{}};
    for (const auto & [key, values] : axes) {
        std::vector<Params> next;
        for (const Params & p : grid)
            for (const Rational & v : values) {
                Params q = p;
                q[key] = v;
                next.push_back(std::move(q));
            }
        grid = std::move(next);
    }
    return grid;
}

std::uint64_t default_budget()
{
    if (const char * env = std::getenv("EXTREMAL_BUDGET")) {
        char * end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return v;
    }
    return 100'000'000;
}

} // namespace extremal
