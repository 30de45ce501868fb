#pragma once

#include "vmdp/rational.hpp"
#include "vmdp/reward_vector.hpp"

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace vmdp {

/**
 * Finite set of reward vectors in canonical form: deduplicated and sorted
 * lexicographically ascending. Two sets are equal iff their canonical
 * sequences are equal.
 */
class VectorSet {
public:
    VectorSet() = default;
    explicit VectorSet(std::vector<RewardVector> points);
    VectorSet(std::initializer_list<RewardVector> points) : VectorSet(std::vector<RewardVector>(points)) {}

    std::size_t size() const { return points_.size(); }
    bool empty() const { return points_.empty(); }
    /// 0 for the empty set.
    std::size_t dimension() const { return points_.empty() ? 0 : points_.front().size(); }

    auto begin() const { return points_.begin(); }
    auto end() const { return points_.end(); }
    const RewardVector& operator[](std::size_t i) const { return points_[i]; }
    const std::vector<RewardVector>& points() const { return points_; }

    bool contains(const RewardVector& x) const;
    /// True iff every member of this set belongs to `other`.
    bool is_subset_of(const VectorSet& other) const;

    friend bool operator==(const VectorSet&, const VectorSet&) = default;

private:
    std::vector<RewardVector> points_;
};

/// An antichain under componentwise >=, in canonical order. Only efficient_subset builds one.
class ParetoSet {
public:
    ParetoSet() = default;

    static ParetoSet singleton(RewardVector x);

    std::size_t size() const { return set_.size(); }
    bool empty() const { return set_.empty(); }
    std::size_t dimension() const { return set_.dimension(); }
    auto begin() const { return set_.begin(); }
    auto end() const { return set_.end(); }
    const RewardVector& operator[](std::size_t i) const { return set_[i]; }
    bool contains(const RewardVector& x) const { return set_.contains(x); }

    const VectorSet& vectors() const { return set_; }
    operator const VectorSet&() const { return set_; } // NOLINT(google-explicit-constructor)

    friend bool operator==(const ParetoSet&, const ParetoSet&) = default;

private:
    friend ParetoSet efficient_subset(const VectorSet& points);
    explicit ParetoSet(VectorSet set) : set_(std::move(set)) {}

    VectorSet set_;
};

/// x >= y componentwise (reflexive). Throws std::invalid_argument on length mismatch.
bool dominates(const RewardVector& x, const RewardVector& y);

/**
 * Members of `points` not dominated by any distinct member.
 *
 * Scans in descending lexicographic order: anything that dominates x and
 * differs from it is lexicographically larger, so keeping x iff nothing
 * already kept dominates it gives the exact efficient subset for any m.
 * Throws std::invalid_argument on empty input or mixed dimensions.
 */
ParetoSet efficient_subset(const VectorSet& points);
ParetoSet efficient_subset(std::span<const RewardVector> points);

/// {a + b}. Throws std::invalid_argument if either operand is empty.
VectorSet minkowski_sum(const VectorSet& lhs, const VectorSet& rhs);

/// {p * x}. Throws std::invalid_argument for negative p.
VectorSet scale_set(const Rational& p, const VectorSet& points);

inline bool sets_equal(const VectorSet& lhs, const VectorSet& rhs) { return lhs == rhs; }

/// Componentwise half-away-from-zero rounding; keeps the input order and any collisions.
std::vector<RewardVector> round_set(const VectorSet& points, int places);

} // namespace vmdp
