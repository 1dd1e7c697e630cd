#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <string>

namespace gpc {

/// Positive rational kept as an explicit num/den pair. Unreduced pairs are
/// legitimate values (fractional power exponents are not reduced); all
/// comparisons are exact cross-multiplications.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    constexpr Rational() = default;
    constexpr Rational(std::int64_t n, std::int64_t d) : num(n), den(d) {}

    constexpr bool is_reduced() const { return std::gcd(num, den) == 1; }
    constexpr Rational reduced() const {
        auto g = std::gcd(num, den);
        return g == 0 ? *this : Rational(num / g, den / g);
    }

    /// Value comparison: 3/3 == 1/1.
    friend constexpr std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        return (a.num * b.den) <=> (b.num * a.den);
    }
    friend constexpr bool operator==(const Rational& a, const Rational& b) {
        return a.num * b.den == b.num * a.den;
    }

    /// Representation equality: 3/3 and 1/1 differ.
    constexpr bool same_pair(const Rational& o) const { return num == o.num && den == o.den; }

    std::string to_string() const { return std::to_string(num) + "/" + std::to_string(den); }
};

/// Exponent (2r+1)/(2s+1), deliberately not reduced.
struct OddFraction {
    int r = 0;
    int s = 0;

    constexpr std::int64_t numerator() const { return 2 * static_cast<std::int64_t>(r) + 1; }
    constexpr std::int64_t denominator() const { return 2 * static_cast<std::int64_t>(s) + 1; }
    constexpr Rational value() const { return {numerator(), denominator()}; }

    std::string to_string() const { return value().to_string(); }

    friend constexpr bool operator==(const OddFraction&, const OddFraction&) = default;
};

/// floor(a / b) for b > 0.
constexpr std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    auto q = a / b;
    return (a % b != 0 && a < 0) ? q - 1 : q;
}

/// ceil(a / b) for b > 0.
constexpr std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }

}  // namespace gpc
