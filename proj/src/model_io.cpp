#include "vmdp/model_io.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <array>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace vmdp {

namespace {

using nlohmann::json;

[[noreturn]] void malformed(const std::string& what) { throw ModelFormatError("malformed model: " + what); }

const json& field(const json& doc, const char* name) {
    const auto it = doc.find(name);
    if (it == doc.end())
        malformed(std::string("missing field \"") + name + "\"");
    return *it;
}

Rational scalar_from_json(const json& value, const std::string& context) {
    if (value.is_number_integer())
        return value.is_number_unsigned() ? Rational::parse(std::to_string(value.get<std::uint64_t>()))
                                          : Rational(value.get<std::int64_t>());
    if (value.is_string()) {
        try {
            return Rational::parse(value.get<std::string>());
        } catch (const std::invalid_argument& e) {
            malformed(context + ": " + e.what());
        }
    }
    if (value.is_number_float())
        malformed(context + ": non-integer numbers must be written as strings (\"0.75\" or \"3/4\")");
    malformed(context + ": expected a number");
}

std::vector<Rational> array_from_json(const json& value, const std::string& context) {
    if (!value.is_array())
        malformed(context + ": expected an array");
    std::vector<Rational> out;
    out.reserve(value.size());
    for (std::size_t i = 0; i < value.size(); ++i)
        out.push_back(scalar_from_json(value[i], context + "[" + std::to_string(i) + "]"));
    return out;
}

json scalar_to_json(const Rational& r) { return r.to_string(); }

json array_to_json(const std::vector<Rational>& values) {
    json out = json::array();
    for (const auto& v : values)
        out.push_back(scalar_to_json(v));
    return out;
}

StateIndex lookup_state(const VmdpModel& model, const std::string& name, const std::string& context) {
    const auto s = model.find_state(name);
    if (!s)
        malformed(context + ": unknown state \"" + name + "\"");
    return *s;
}

// Reads a table keyed by epoch-or-"all", state, action and hands each leaf to `assign`.
template <typename Assign>
void read_table(const json& table, const VmdpModel& model, bool stationary, const std::string& name,
                Assign&& assign) {
    if (!table.is_object())
        malformed(name + ": expected an object");

    auto read_epoch = [&](const json& by_state, const std::string& key, auto&& epochs) {
        if (!by_state.is_object())
            malformed(name + "." + key + ": expected an object");
        for (const auto& [state_name, by_action] : by_state.items()) {
            const std::string ctx = name + "." + key + "." + state_name;
            const StateIndex s = lookup_state(model, state_name, ctx);
            if (!by_action.is_object())
                malformed(ctx + ": expected an object");
            for (const auto& [action_name, leaf] : by_action.items()) {
                const auto a = model.find_action(s, action_name);
                if (!a)
                    malformed(ctx + ": unknown action \"" + action_name + "\"");
                auto values = array_from_json(leaf, ctx + "." + action_name);
                for (Epoch t : epochs)
                    assign(t, s, *a, values);
            }
        }
    };

    if (const auto it = table.find("all"); it != table.end()) {
        std::vector<Epoch> all;
        for (Epoch t = 1; t < model.horizon(); ++t)
            all.push_back(t);
        read_epoch(*it, "all", all);
    }
    for (const auto& [key, by_state] : table.items()) {
        if (key == "all")
            continue;
        if (stationary)
            malformed(name + ": stationary models only accept the \"all\" key, found \"" + key + "\"");
        Epoch t = 0;
        try {
            std::size_t used = 0;
            t = std::stoi(key, &used);
            if (used != key.size())
                throw std::invalid_argument(key);
        } catch (const std::exception&) {
            malformed(name + ": table key \"" + key + "\" is neither \"all\" nor an epoch");
        }
        if (t < 1 || t >= model.horizon())
            malformed(name + ": epoch " + key + " is not a decision epoch");
        read_epoch(by_state, key, std::vector<Epoch>{t});
    }
}

bool tables_stationary(const VmdpModel& model) {
    for (Epoch t = 2; t < model.horizon(); ++t)
        for (StateIndex s = 0; s < model.state_count(); ++s)
            for (ActionIndex a = 0; a < model.action_count(s); ++a) {
                if (model.has_reward(t, s, a) != model.has_reward(1, s, a) ||
                    model.has_transition(t, s, a) != model.has_transition(1, s, a))
                    return false;
                if (model.has_reward(t, s, a) && model.reward(t, s, a) != model.reward(1, s, a))
                    return false;
                if (model.has_transition(t, s, a) && model.transition(t, s, a) != model.transition(1, s, a))
                    return false;
            }
    return true;
}

} // namespace

VmdpModel model_from_json(const json& doc) {
    if (!doc.is_object())
        malformed("top level must be an object");

    const json& m = field(doc, "m");
    const json& horizon = field(doc, "horizon");
    if (!m.is_number_integer() || m.get<std::int64_t>() < 0)
        malformed("\"m\" must be a non-negative integer");
    if (!horizon.is_number_integer() || horizon.get<std::int64_t>() < 1)
        malformed("\"horizon\" must be a positive integer");

    const json& states_json = field(doc, "states");
    if (!states_json.is_array())
        malformed("\"states\" must be an array");
    std::vector<std::string> states;
    for (const auto& s : states_json) {
        if (!s.is_string())
            malformed("state identifiers must be strings");
        states.push_back(s.get<std::string>());
    }

    const json& actions_json = field(doc, "actions");
    if (!actions_json.is_object())
        malformed("\"actions\" must be an object mapping state to action list");
    std::vector<std::vector<std::string>> actions(states.size());
    for (const auto& [state_name, list] : actions_json.items()) {
        const auto pos = std::find(states.begin(), states.end(), state_name);
        if (pos == states.end())
            malformed("actions: unknown state \"" + state_name + "\"");
        if (!list.is_array())
            malformed("actions." + state_name + ": expected an array");
        auto& target = actions[static_cast<std::size_t>(pos - states.begin())];
        for (const auto& a : list) {
            if (!a.is_string())
                malformed("actions." + state_name + ": action identifiers must be strings");
            target.push_back(a.get<std::string>());
        }
    }

    bool stationary = false;
    if (const auto it = doc.find("stationary"); it != doc.end()) {
        if (!it->is_boolean())
            malformed("\"stationary\" must be a boolean");
        stationary = it->get<bool>();
    }

    VmdpModel model(static_cast<std::size_t>(m.get<std::int64_t>()), static_cast<int>(horizon.get<std::int64_t>()),
                    std::move(states), std::move(actions));

    read_table(field(doc, "rewards"), model, stationary, "rewards",
               [&model](Epoch t, StateIndex s, ActionIndex a, const std::vector<Rational>& v) {
                   model.set_reward(t, s, a, RewardVector(v));
               });
    read_table(field(doc, "transitions"), model, stationary, "transitions",
               [&model](Epoch t, StateIndex s, ActionIndex a, const std::vector<Rational>& v) {
                   model.set_transition(t, s, a, v);
               });

    const json& terminal = field(doc, "terminal");
    if (!terminal.is_object())
        malformed("\"terminal\" must be an object mapping state to vector");
    for (const auto& [state_name, leaf] : terminal.items()) {
        const StateIndex s = lookup_state(model, state_name, "terminal");
        model.set_terminal(s, RewardVector(array_from_json(leaf, "terminal." + state_name)));
    }
    return model;
}

json model_to_json(const VmdpModel& model) {
    json doc;
    doc["m"] = model.objectives();
    doc["horizon"] = model.horizon();
    doc["states"] = model.states();
    json actions = json::object();
    for (StateIndex s = 0; s < model.state_count(); ++s)
        actions[model.state_name(s)] = model.actions(s);
    doc["actions"] = actions;

    const bool stationary = tables_stationary(model);
    doc["stationary"] = stationary;

    json rewards = json::object();
    json transitions = json::object();
    const Epoch last = stationary ? std::min(1, model.horizon() - 1) : model.horizon() - 1;
    for (Epoch t = 1; t <= last; ++t) {
        const std::string key = stationary ? "all" : std::to_string(t);
        json r_epoch = json::object();
        json p_epoch = json::object();
        for (StateIndex s = 0; s < model.state_count(); ++s) {
            json r_state = json::object();
            json p_state = json::object();
            for (ActionIndex a = 0; a < model.action_count(s); ++a) {
                if (model.has_reward(t, s, a))
                    r_state[model.action_name(s, a)] = array_to_json(model.reward(t, s, a).components());
                if (model.has_transition(t, s, a))
                    p_state[model.action_name(s, a)] = array_to_json(model.transition(t, s, a));
            }
            r_epoch[model.state_name(s)] = r_state;
            p_epoch[model.state_name(s)] = p_state;
        }
        rewards[key] = r_epoch;
        transitions[key] = p_epoch;
    }
    doc["rewards"] = rewards;
    doc["transitions"] = transitions;

    json terminal = json::object();
    for (StateIndex s = 0; s < model.state_count(); ++s)
        if (model.has_terminal(s))
            terminal[model.state_name(s)] = array_to_json(model.terminal(s).components());
    doc["terminal"] = terminal;
    return doc;
}

VmdpModel load_model(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw ModelFormatError("cannot read model file " + path.string());
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ModelFormatError("cannot parse " + path.string() + ": " + e.what());
    }
    return model_from_json(doc);
}

void save_model(const VmdpModel& model, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out)
        throw ModelFormatError("cannot write model file " + path.string());
    out << model_to_json(model).dump(2) << '\n';
}

std::string model_digest(const VmdpModel& model) {
    const std::string text = model_to_json(model).dump();
    std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
    unsigned int length = 0;
    EVP_Digest(text.data(), text.size(), digest.data(), &length, EVP_sha256(), nullptr);
    std::ostringstream hex;
    for (unsigned int i = 0; i < length; ++i)
        hex << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
    return hex.str();
}

} // namespace vmdp
