#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace vmdp {

/**
 * Exact rational scalar.
 *
 * Always stored in lowest terms with a positive denominator. All model
 * probabilities and reward components use this type; nothing in the core
 * touches floating point.
 */
class Rational {
public:
    Rational() = default;
    Rational(std::int64_t value); // NOLINT(google-explicit-constructor)
    Rational(std::int64_t numerator, std::int64_t denominator);

    /// Parses "7", "-3", "3/4", "0.75", "-1.5" exactly. Throws std::invalid_argument.
    static Rational parse(std::string_view text);

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_negative() const { return sgn(value_) < 0; }
    bool is_integer() const { return value_.get_den() == 1; }

    std::string numerator_string() const { return value_.get_num().get_str(); }
    std::string denominator_string() const { return value_.get_den().get_str(); }

    /// "p/q", or "p" for integers.
    std::string to_string() const;

    /// Rounds half away from zero to `places` decimals; the result is exact.
    Rational round_half_away(int places) const;

    /// Fixed-point text with exactly `places` decimals after rounding half away from zero.
    std::string to_decimal(int places) const;

    std::size_t hash() const;

    Rational& operator+=(const Rational& other);
    Rational& operator-=(const Rational& other);
    Rational& operator*=(const Rational& other);
    Rational& operator/=(const Rational& other);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a);

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) == 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    const mpq_class& raw() const { return value_; }

private:
    explicit Rational(mpq_class value);

    mpq_class value_{0};
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

} // namespace vmdp

template <>
struct std::hash<vmdp::Rational> {
    std::size_t operator()(const vmdp::Rational& r) const noexcept { return r.hash(); }
};
