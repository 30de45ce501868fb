#include "vmdp/recursion.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace vmdp {

const Generator* FSet::generator_of(const RewardVector& x) const {
    const auto& pts = vectors.points();
    const auto it = std::lower_bound(pts.begin(), pts.end(), x);
    if (it == pts.end() || *it != x)
        return nullptr;
    return &generators[static_cast<std::size_t>(it - pts.begin())];
}

FSet f_set(const VmdpModel& model, Epoch t, StateIndex s, std::span<const ParetoSet> next) {
    if (t < 1 || t >= model.horizon())
        throw std::invalid_argument("f_set: epoch " + std::to_string(t) + " is not a decision epoch");
    if (next.size() != model.state_count())
        throw std::invalid_argument("f_set: successor sets must be given for every state");
    for (StateIndex j = 0; j < next.size(); ++j)
        if (next[j].empty())
            throw std::invalid_argument("f_set: missing successor set for state " + model.state_name(j));

    struct Partial {
        RewardVector value;
        Generator generator;
    };
    std::vector<Partial> all;

    for (ActionIndex a = 0; a < model.action_count(s); ++a) {
        std::vector<Partial> partial{{model.reward(t, s, a), {a, {}}}};
        const auto& row = model.transition(t, s, a);
        for (StateIndex j = 0; j < row.size(); ++j) {
            if (row[j].is_zero())
                continue;
            std::vector<Partial> extended;
            extended.reserve(partial.size() * next[j].size());
            for (const auto& p : partial) {
                for (const auto& v : next[j]) {
                    Partial q = p;
                    q.value += row[j] * v;
                    q.generator.choices.push_back({j, v});
                    extended.push_back(std::move(q));
                }
            }
            partial = std::move(extended);
        }
        for (auto& p : partial)
            all.push_back(std::move(p));
    }

    // canonical order, keeping the first generator of each distinct vector
    std::vector<std::size_t> order(all.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t i, std::size_t k) { return all[i].value < all[k].value; });

    std::vector<RewardVector> vectors;
    FSet out;
    out.t = t;
    out.s = s;
    for (std::size_t idx : order) {
        if (!vectors.empty() && vectors.back() == all[idx].value)
            continue;
        vectors.push_back(all[idx].value);
        out.generators.push_back(std::move(all[idx].generator));
    }
    out.vectors = VectorSet(std::move(vectors));
    return out;
}

const ParetoSet& ValueTable::at(Epoch t, StateIndex s) const {
    if (t < 1 || t > horizon())
        throw std::out_of_range("value table: epoch " + std::to_string(t) + " out of range");
    return entries_[static_cast<std::size_t>(t - 1)].at(s);
}

const Generator* ValueTable::provenance(Epoch t, StateIndex s, const RewardVector& x) const {
    if (t < 1 || t >= horizon())
        return nullptr;
    const auto& front = at(t, s).vectors().points();
    const auto it = std::lower_bound(front.begin(), front.end(), x);
    if (it == front.end() || *it != x)
        return nullptr;
    return &provenance_[static_cast<std::size_t>(t - 1)][s][static_cast<std::size_t>(it - front.begin())];
}

const FSet* ValueTable::f_set_at(Epoch t, StateIndex s) const {
    if (f_sets_.empty() || t < 1 || t >= horizon())
        return nullptr;
    return &f_sets_[static_cast<std::size_t>(t - 1)].at(s);
}

ValueTable white_recursion(const VmdpModel& model, RecursionOptions options) {
    require_valid(model);
    const int n = model.horizon();
    const std::size_t n_states = model.state_count();

    ValueTable table;
    table.entries_.resize(static_cast<std::size_t>(n));
    table.provenance_.resize(static_cast<std::size_t>(n - 1));
    if (options.keep_f_sets)
        table.f_sets_.resize(static_cast<std::size_t>(n - 1));

    auto& terminal_layer = table.entries_.back();
    for (StateIndex s = 0; s < n_states; ++s)
        terminal_layer.push_back(ParetoSet::singleton(model.terminal(s)));

    for (Epoch t = n - 1; t >= 1; --t) {
        const auto idx = static_cast<std::size_t>(t - 1);
        const auto& next = table.entries_[idx + 1];
        auto& layer = table.entries_[idx];
        auto& prov = table.provenance_[idx];
        for (StateIndex s = 0; s < n_states; ++s) {
            FSet f = f_set(model, t, s, next);
            ParetoSet front = efficient_subset(f.vectors);
            std::vector<Generator> gens;
            gens.reserve(front.size());
            for (const auto& x : front)
                gens.push_back(*f.generator_of(x));
            layer.push_back(std::move(front));
            prov.push_back(std::move(gens));
            if (options.keep_f_sets)
                table.f_sets_[idx].push_back(std::move(f));
        }
    }
    return table;
}

std::vector<std::vector<Rational>> scalar_bellman(const VmdpModel& model) {
    if (model.objectives() != 1)
        throw std::invalid_argument("scalar_bellman requires m = 1, got m = " + std::to_string(model.objectives()));
    require_valid(model);
    const int n = model.horizon();
    const std::size_t n_states = model.state_count();
    std::vector<std::vector<Rational>> u(static_cast<std::size_t>(n), std::vector<Rational>(n_states));
    for (StateIndex s = 0; s < n_states; ++s)
        u.back()[s] = model.terminal(s)[0];
    for (Epoch t = n - 1; t >= 1; --t) {
        const auto& next = u[static_cast<std::size_t>(t)];
        auto& cur = u[static_cast<std::size_t>(t - 1)];
        for (StateIndex s = 0; s < n_states; ++s) {
            std::optional<Rational> best;
            for (ActionIndex a = 0; a < model.action_count(s); ++a) {
                Rational q = model.reward(t, s, a)[0];
                const auto& row = model.transition(t, s, a);
                for (StateIndex j = 0; j < n_states; ++j)
                    q += row[j] * next[j];
                if (!best || q > *best)
                    best = q;
            }
            cur[s] = *best;
        }
    }
    return u;
}

} // namespace vmdp
