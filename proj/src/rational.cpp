#include "extremal/rational.hpp"

#include <charconv>
#include <limits>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace extremal {

namespace {

using Wide = __int128;

std::int64_t narrow(Wide v)
{
    if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
        throw std::overflow_error("rational arithmetic overflow");
    return static_cast<std::int64_t>(v);
}

Wide wide_gcd(Wide a, Wide b)
{
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        Wide r = a % b;
        a = b;
        b = r;
    }
    return a;
}

Rational make_reduced(Wide num, Wide den)
{
    if (den == 0)
        throw std::domain_error("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    Wide g = wide_gcd(num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    return Rational(narrow(num), narrow(den));
}

std::int64_t parse_int(std::string_view s)
{
    while (! s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (! s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    if (! s.empty() && s.front() == '+') s.remove_prefix(1);
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
        throw std::invalid_argument("not an integer: '" + std::string(s) + "'");
    return v;
}

} // namespace

Rational::Rational(std::int64_t numerator, std::int64_t denominator)
{
    if (denominator == 0)
        throw std::domain_error("rational with zero denominator");
    Wide n = numerator, d = denominator;
    if (d < 0) {
        n = -n;
        d = -d;
    }
    Wide g = wide_gcd(n, d);
    if (g > 1) {
        n /= g;
        d /= g;
    }
    num_ = narrow(n);
    den_ = narrow(d);
}

std::string Rational::str() const
{
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(std::string_view text)
{
    auto slash = text.find('/');
    if (slash == std::string_view::npos)
        return Rational(parse_int(text));
    return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

Rational operator+(const Rational & a, const Rational & b)
{
    return make_reduced(Wide(a.num_) * b.den_ + Wide(b.num_) * a.den_, Wide(a.den_) * b.den_);
}

Rational operator-(const Rational & a, const Rational & b)
{
    return make_reduced(Wide(a.num_) * b.den_ - Wide(b.num_) * a.den_, Wide(a.den_) * b.den_);
}

Rational operator*(const Rational & a, const Rational & b)
{
    return make_reduced(Wide(a.num_) * b.num_, Wide(a.den_) * b.den_);
}

Rational operator/(const Rational & a, const Rational & b)
{
    if (b.num_ == 0)
        throw std::domain_error("rational division by zero");
    return make_reduced(Wide(a.num_) * b.den_, Wide(a.den_) * b.num_);
}

std::strong_ordering operator<=>(const Rational & a, const Rational & b)
{
    Wide lhs = Wide(a.num_) * b.den_;
    Wide rhs = Wide(b.num_) * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::ostream & operator<<(std::ostream & os, const Rational & r)
{
    return os << r.str();
}

} // namespace extremal
