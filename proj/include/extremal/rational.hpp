#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace extremal {

/// Exact rational number in lowest terms with a positive denominator.
///
/// Backed by 64-bit integers; products are formed in 128 bits and any
/// result that does not fit back into 64 bits raises std::overflow_error.
/// Comparisons never overflow.
class Rational {
public:
    constexpr Rational() = default;
    Rational(std::int64_t numerator, std::int64_t denominator = 1);

    std::int64_t numerator() const { return num_; }
    std::int64_t denominator() const { return den_; }

    /// Always "p/q", including integers ("1/1", "0/1").
    std::string str() const;

    /// Accepts "p/q", "p" and surrounding whitespace.
    static Rational parse(std::string_view text);

    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    friend Rational operator+(const Rational & a, const Rational & b);
    friend Rational operator-(const Rational & a, const Rational & b);
    friend Rational operator*(const Rational & a, const Rational & b);
    friend Rational operator/(const Rational & a, const Rational & b);
    Rational operator-() const { return Rational(-num_, den_); }

    friend bool operator==(const Rational & a, const Rational & b) = default;
    friend std::strong_ordering operator<=>(const Rational & a, const Rational & b);

private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

std::ostream & operator<<(std::ostream & os, const Rational & r);

} // namespace extremal
