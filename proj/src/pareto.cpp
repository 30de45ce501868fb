#include "vmdp/pareto.hpp"

#include <algorithm>
#include <stdexcept>

namespace vmdp {

VectorSet::VectorSet(std::vector<RewardVector> points) : points_(std::move(points)) {
    std::sort(points_.begin(), points_.end());
    points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
}

bool VectorSet::contains(const RewardVector& x) const {
    return std::binary_search(points_.begin(), points_.end(), x);
}

bool VectorSet::is_subset_of(const VectorSet& other) const {
    return std::includes(other.points_.begin(), other.points_.end(), points_.begin(), points_.end());
}

ParetoSet ParetoSet::singleton(RewardVector x) { return ParetoSet(VectorSet{std::move(x)}); }

bool dominates(const RewardVector& x, const RewardVector& y) {
    if (x.size() != y.size())
        throw std::invalid_argument("dominates: dimension mismatch " + std::to_string(x.size()) + " vs " +
                                    std::to_string(y.size()));
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i] < y[i])
            return false;
    return true;
}

ParetoSet efficient_subset(const VectorSet& points) {
    if (points.empty())
        throw std::invalid_argument("efficient_subset of an empty set");
    const std::size_t m = points.dimension();
    for (const auto& x : points)
        if (x.size() != m)
            throw std::invalid_argument("efficient_subset: mixed dimensions");

    std::vector<RewardVector> kept;
    for (auto it = points.points().rbegin(); it != points.points().rend(); ++it) {
        const bool dominated =
            std::any_of(kept.begin(), kept.end(), [&](const RewardVector& k) { return dominates(k, *it); });
        if (!dominated)
            kept.push_back(*it);
    }
    std::reverse(kept.begin(), kept.end());
    return ParetoSet(VectorSet(std::move(kept)));
}

ParetoSet efficient_subset(std::span<const RewardVector> points) {
    return efficient_subset(VectorSet(std::vector<RewardVector>(points.begin(), points.end())));
}

VectorSet minkowski_sum(const VectorSet& lhs, const VectorSet& rhs) {
    if (lhs.empty() || rhs.empty())
        throw std::invalid_argument("minkowski_sum with an empty operand");
    std::vector<RewardVector> out;
    out.reserve(lhs.size() * rhs.size());
    for (const auto& a : lhs)
        for (const auto& b : rhs)
            out.push_back(a + b);
    return VectorSet(std::move(out));
}

VectorSet scale_set(const Rational& p, const VectorSet& points) {
    if (p.is_negative())
        throw std::invalid_argument("scale_set with negative factor " + p.to_string());
    std::vector<RewardVector> out;
    out.reserve(points.size());
    for (const auto& x : points)
        out.push_back(p * x);
    return VectorSet(std::move(out));
}

std::vector<RewardVector> round_set(const VectorSet& points, int places) {
    std::vector<RewardVector> out;
    out.reserve(points.size());
    for (const auto& x : points)
        out.push_back(round_half_away(x, places));
    return out;
}

} // namespace vmdp
