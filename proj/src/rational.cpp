#include "vmdp/rational.hpp"

#include <cctype>
#include <functional>
#include <ostream>
#include <stdexcept>

namespace vmdp {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty())
        return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return false;
    return true;
}

mpz_class pow10(int places) {
    mpz_class result;
    mpz_ui_pow_ui(result.get_mpz_t(), 10, static_cast<unsigned long>(places));
    return result;
}

std::size_t hash_mpz(const mpz_class& z) {
    std::size_t h = static_cast<std::size_t>(mpz_sgn(z.get_mpz_t()) + 1);
    const std::size_t limbs = mpz_size(z.get_mpz_t());
    for (std::size_t i = 0; i < limbs; ++i) {
        h ^= std::hash<mp_limb_t>{}(mpz_getlimbn(z.get_mpz_t(), static_cast<mp_size_t>(i))) +
             0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
}

} // namespace

Rational::Rational(std::int64_t value) : value_(static_cast<long>(value)) {}

Rational::Rational(std::int64_t numerator, std::int64_t denominator) {
    if (denominator == 0)
        throw std::invalid_argument("rational with zero denominator");
    value_ = mpq_class(mpz_class(static_cast<long>(numerator)), mpz_class(static_cast<long>(denominator)));
    value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
    const std::string original(text);
    auto fail = [&original]() -> Rational {
        throw std::invalid_argument("not a rational number: \"" + original + "\"");
    };

    bool negative = false;
    if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
        negative = text.front() == '-';
        text.remove_prefix(1);
    }

    mpq_class value;
    if (const auto slash = text.find('/'); slash != std::string_view::npos) {
        const auto num = text.substr(0, slash);
        const auto den = text.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den))
            return fail();
        mpz_class d(std::string(den), 10);
        if (d == 0)
            throw std::invalid_argument("rational with zero denominator: \"" + original + "\"");
        value = mpq_class(mpz_class(std::string(num), 10), d);
    } else if (const auto dot = text.find('.'); dot != std::string_view::npos) {
        const auto whole = text.substr(0, dot);
        const auto frac = text.substr(dot + 1);
        if ((!whole.empty() && !all_digits(whole)) || !all_digits(frac))
            return fail();
        const std::string digits = std::string(whole) + std::string(frac);
        value = mpq_class(mpz_class(digits, 10), pow10(static_cast<int>(frac.size())));
    } else {
        if (!all_digits(text))
            return fail();
        value = mpq_class(mpz_class(std::string(text), 10));
    }
    if (negative)
        value = -value;
    return Rational(std::move(value));
}

std::string Rational::to_string() const {
    if (is_integer())
        return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational Rational::round_half_away(int places) const {
    if (places < 0)
        throw std::invalid_argument("negative rounding places");
    const mpz_class scale = pow10(places);
    mpz_class num = abs(value_.get_num());
    const mpz_class& den = value_.get_den();
    // floor((2*|n|*10^p + d) / (2*d))
    mpz_class q = (2 * num * scale + den) / (2 * den);
    if (value_ < 0)
        q = -q;
    return Rational(mpq_class(q, scale));
}

std::string Rational::to_decimal(int places) const {
    const Rational rounded = round_half_away(places);
    // rounded * 10^places is an integer
    mpz_class scaled = rounded.value_.get_num() * pow10(places) / rounded.value_.get_den();
    const bool negative = scaled < 0;
    std::string digits = mpz_class(abs(scaled)).get_str();
    if (places > 0) {
        if (digits.size() <= static_cast<std::size_t>(places))
            digits.insert(0, static_cast<std::size_t>(places) + 1 - digits.size(), '0');
        digits.insert(digits.size() - static_cast<std::size_t>(places), ".");
    }
    return negative ? "-" + digits : digits;
}

std::size_t Rational::hash() const {
    const std::size_t h = hash_mpz(value_.get_num());
    return h ^ (hash_mpz(value_.get_den()) * 0x100000001b3ULL);
}

Rational& Rational::operator+=(const Rational& other) {
    value_ += other.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& other) {
    value_ -= other.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& other) {
    value_ *= other.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& other) {
    if (other.is_zero())
        throw std::domain_error("division by zero rational");
    value_ /= other.value_;
    return *this;
}

Rational operator-(const Rational& a) { return Rational(mpq_class(-a.value_)); }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

} // namespace vmdp
