#pragma once

#include "vmdp/rational.hpp"

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

namespace vmdp {

/// An m-dimensional vector of exact rationals. Ordered lexicographically.
class RewardVector {
public:
    RewardVector() = default;
    explicit RewardVector(std::size_t dimension) : components_(dimension) {}
    explicit RewardVector(std::vector<Rational> components) : components_(std::move(components)) {}
    RewardVector(std::initializer_list<Rational> components) : components_(components) {}

    static RewardVector zero(std::size_t dimension) { return RewardVector(dimension); }

    std::size_t size() const { return components_.size(); }
    const Rational& operator[](std::size_t i) const { return components_[i]; }
    Rational& operator[](std::size_t i) { return components_[i]; }

    auto begin() const { return components_.begin(); }
    auto end() const { return components_.end(); }
    const std::vector<Rational>& components() const { return components_; }

    /// Throws std::invalid_argument on dimension mismatch.
    RewardVector& operator+=(const RewardVector& other);
    RewardVector& operator*=(const Rational& scale);

    friend RewardVector operator+(RewardVector a, const RewardVector& b) { return a += b; }
    friend RewardVector operator*(const Rational& p, RewardVector x) { return x *= p; }

    friend bool operator==(const RewardVector&, const RewardVector&) = default;
    friend std::strong_ordering operator<=>(const RewardVector& a, const RewardVector& b) {
        return a.components_ <=> b.components_;
    }

    /// "(p1, p2, ...)" with exact rationals.
    std::string to_string() const;

    /// "(d1, d2, ...)" rounded half away from zero.
    std::string to_decimal_string(int places) const;

    std::size_t hash() const;

private:
    std::vector<Rational> components_;
};

/// Componentwise half-away-from-zero rounding.
RewardVector round_half_away(const RewardVector& x, int places);

std::ostream& operator<<(std::ostream& os, const RewardVector& v);

} // namespace vmdp

template <>
struct std::hash<vmdp::RewardVector> {
    std::size_t operator()(const vmdp::RewardVector& v) const noexcept { return v.hash(); }
};
