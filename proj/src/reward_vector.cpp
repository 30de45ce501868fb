#include "vmdp/reward_vector.hpp"

#include <ostream>
#include <stdexcept>

namespace vmdp {

RewardVector& RewardVector::operator+=(const RewardVector& other) {
    if (other.size() != size())
        throw std::invalid_argument("reward vector dimension mismatch: " + std::to_string(size()) +
                                    " vs " + std::to_string(other.size()));
    for (std::size_t i = 0; i < components_.size(); ++i)
        components_[i] += other.components_[i];
    return *this;
}

RewardVector& RewardVector::operator*=(const Rational& scale) {
    for (auto& c : components_)
        c *= scale;
    return *this;
}

std::string RewardVector::to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < components_.size(); ++i) {
        if (i)
            out += ", ";
        out += components_[i].to_string();
    }
    return out + ")";
}

std::string RewardVector::to_decimal_string(int places) const {
    std::string out = "(";
    for (std::size_t i = 0; i < components_.size(); ++i) {
        if (i)
            out += ", ";
        out += components_[i].to_decimal(places);
    }
    return out + ")";
}

std::size_t RewardVector::hash() const {
    std::size_t h = components_.size();
    for (const auto& c : components_)
        h ^= c.hash() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
}

RewardVector round_half_away(const RewardVector& x, int places) {
    RewardVector out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i)
        out[i] = x[i].round_half_away(places);
    return out;
}

std::ostream& operator<<(std::ostream& os, const RewardVector& v) { return os << v.to_string(); }

} // namespace vmdp
