#include "vmdp/cli/commands.hpp"

#include "vmdp/checks.hpp"
#include "vmdp/cli/fronts_io.hpp"
#include "vmdp/model_io.hpp"
#include "vmdp/oracle.hpp"
#include "vmdp/recursion.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

namespace vmdp::cli {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

constexpr const char* kBuiltinPrefix = "builtin:";

struct Options {
    std::string model;
    int round = 1;
    std::optional<int> compare_round;
    std::uint64_t cap = kDefaultPolicyCap;
    bool keep_f_sets = false;
    std::string out_dir;
    std::string space = "markov";
    std::optional<int> epoch;
    std::optional<std::string> state;
    std::string which;
    std::string left;
    std::string right;
};

/// Operational failure that maps to a usage/IO exit code.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

VmdpModel load_model_ref(const std::string& ref) {
    if (ref.rfind(kBuiltinPrefix, 0) == 0) {
        const std::string name = ref.substr(std::string(kBuiltinPrefix).size());
        if (name == "counterexample")
            return builtin_counterexample();
        if (name == "deterministic")
            return builtin_deterministic_variant();
        throw UsageError("unknown builtin model \"" + name + "\" (expected counterexample or deterministic)");
    }
    return load_model(ref);
}

std::string history_label(const VmdpModel& model, const History& h) {
    std::string out;
    for (std::size_t i = 0; i < h.states.size(); ++i)
        out += (i > 0 ? "," : "") + model.state_name(h.states[i]);
    return out;
}

std::string history_file_component(const VmdpModel& model, const History& h) {
    std::string out;
    for (std::size_t i = 0; i < h.states.size(); ++i)
        out += (i > 0 ? "-" : "") + file_component(model.state_name(h.states[i]));
    return out;
}

std::string show(const RewardVector& x, int places) {
    return x.to_string() + "  ~  " + x.to_decimal_string(places);
}

json exact_strings(const RewardVector& x) {
    json out = json::array();
    for (const auto& c : x)
        out.push_back(c.to_string());
    return out;
}

json exact_strings(const VectorSet& set) {
    json out = json::array();
    for (const auto& x : set)
        out.push_back(exact_strings(x));
    return out;
}

void print_front(std::ostream& out, const std::string& label, const VectorSet& set, int places,
                 const std::vector<std::string>& annotations = {}) {
    out << label << ": " << set.size() << (set.size() == 1 ? " vector\n" : " vectors\n");
    for (std::size_t i = 0; i < set.size(); ++i) {
        out << "  " << show(set[i], places);
        if (i < annotations.size() && !annotations[i].empty())
            out << "  [" << annotations[i] << "]";
        out << '\n';
    }
}

/// Collects result files under --out and writes summary.json and manifest.json.
class ResultSink {
public:
    ResultSink(const Options& opts, std::string command) : opts_(opts), command_(std::move(command)) {
        if (enabled())
            fs::create_directories(opts_.out_dir);
    }

    bool enabled() const { return !opts_.out_dir.empty(); }

    fs::path path(const std::string& name) {
        files_.push_back(name);
        return fs::path(opts_.out_dir) / name;
    }

    void finish(json summary, const std::optional<std::string>& digest,
                std::chrono::steady_clock::duration elapsed) {
        if (!enabled())
            return;
        write_json("summary.json", summary);
        json manifest;
        manifest["command"] = command_;
        manifest["model"] = opts_.model;
        manifest["model_digest"] = digest ? json(*digest) : json(nullptr);
        manifest["flags"] = {{"round", opts_.round},
                             {"keep_f_sets", opts_.keep_f_sets},
                             {"space", opts_.space},
                             {"epoch", opts_.epoch ? json(*opts_.epoch) : json(nullptr)},
                             {"state", opts_.state ? json(*opts_.state) : json(nullptr)},
                             {"which", opts_.which}};
        manifest["caps"] = {{"policy_cap", opts_.cap}};
        manifest["timing"] = {
            {"elapsed_ms", std::chrono::duration<double, std::milli>(elapsed).count()}};
        manifest["result_files"] = files_;
        write_json("manifest.json", manifest);
    }

private:
    void write_json(const std::string& name, const json& doc) {
        std::ofstream out(fs::path(opts_.out_dir) / name, std::ios::binary);
        out << doc.dump(2) << '\n';
        if (!out)
            throw std::runtime_error("cannot write " + (fs::path(opts_.out_dir) / name).string());
        if (name == "summary.json")
            files_.push_back(name);
    }

    const Options& opts_;
    std::string command_;
    std::vector<std::string> files_;
};

std::vector<Epoch> selected_epochs(const VmdpModel& model, const Options& opts) {
    if (opts.epoch) {
        if (*opts.epoch < 1 || *opts.epoch > model.horizon())
            throw UsageError("--epoch " + std::to_string(*opts.epoch) + " is outside 1.." +
                             std::to_string(model.horizon()));
        return {*opts.epoch};
    }
    std::vector<Epoch> out;
    for (Epoch t = 1; t <= model.horizon(); ++t)
        out.push_back(t);
    return out;
}

std::vector<StateIndex> selected_states(const VmdpModel& model, const Options& opts) {
    if (opts.state) {
        const auto s = model.find_state(*opts.state);
        if (!s)
            throw UsageError("--state \"" + *opts.state + "\" is not a state of the model");
        return {*s};
    }
    std::vector<StateIndex> out;
    for (StateIndex s = 0; s < model.state_count(); ++s)
        out.push_back(s);
    return out;
}

/// Prints violations and returns false for an invalid model.
bool report_validity(const VmdpModel& model, std::ostream& out) {
    const ValidationReport report = validate_model(model);
    if (report.ok())
        return true;
    out << "INVALID: " << report.violations.size() << " violation(s)\n";
    for (const auto& v : report.violations)
        out << "  " << v << '\n';
    return false;
}

std::string generator_label(const VmdpModel& model, StateIndex s, const Generator* g) {
    return g ? model.action_name(s, g->action) : "";
}

int cmd_validate(const Options& opts, std::ostream& out) {
    const VmdpModel model = load_model_ref(opts.model);
    if (!report_validity(model, out))
        return kExitCheckFailed;
    const ModelProperties p = analyze_model(model);
    out << "OK: " << opts.model << '\n'
        << "  horizon N = " << model.horizon() << ", objectives m = " << model.objectives()
        << ", states = " << model.state_count() << '\n'
        << "  stationary: " << (p.is_stationary ? "yes" : "no") << '\n'
        << "  deterministic: " << (p.is_deterministic ? "yes" : "no") << '\n'
        << "  Markov policies: " << p.markov_policy_count.to_string() << '\n'
        << "  history-dependent policies: " << p.history_policy_count.to_string() << '\n';
    return kExitOk;
}

int cmd_solve(const Options& opts, const std::string& command, std::ostream& out) {
    const auto start = std::chrono::steady_clock::now();
    const VmdpModel model = load_model_ref(opts.model);
    if (!report_validity(model, out))
        return kExitCheckFailed;
    const auto epochs = selected_epochs(model, opts);
    const auto states = selected_states(model, opts);
    const ValueTable table = white_recursion(model, {.keep_f_sets = opts.keep_f_sets});

    ResultSink sink(opts, command);
    json fronts = json::array();
    for (Epoch t : epochs) {
        for (StateIndex s : states) {
            const ParetoSet& front = table.at(t, s);
            std::vector<std::string> actions;
            for (const auto& x : front)
                actions.push_back(opts.keep_f_sets ? generator_label(model, s, table.provenance(t, s, x)) : "");
            const std::string label = "U_" + std::to_string(t) + "(" + model.state_name(s) + ")";
            print_front(out, label, front, opts.round, actions);

            json entry = {{"t", t}, {"state", model.state_name(s)}, {"size", front.size()},
                          {"vectors", exact_strings(front.vectors())}};
            if (sink.enabled()) {
                const std::string name = "fronts_" + std::to_string(t) + "_" + file_component(model.state_name(s));
                std::vector<FrontRow> rows;
                for (std::size_t i = 0; i < front.size(); ++i)
                    rows.push_back({front[i], actions[i], std::nullopt});
                write_front_csv(sink.path(name + ".csv"), rows, model.objectives(), opts.round);
                entry["file"] = name + ".csv";

                if (opts.keep_f_sets && t < model.horizon()) {
                    const FSet& f = *table.f_set_at(t, s);
                    std::vector<FrontRow> f_rows;
                    for (std::size_t i = 0; i < f.vectors.size(); ++i)
                        f_rows.push_back({f.vectors[i], model.action_name(s, f.generators[i].action),
                                          front.contains(f.vectors[i])});
                    const std::string f_name = "fsets_" + std::to_string(t) + "_" + file_component(model.state_name(s));
                    write_front_csv(sink.path(f_name + ".csv"), f_rows, model.objectives(), opts.round);
                    entry["f_set_file"] = f_name + ".csv";
                    entry["f_set_size"] = f.vectors.size();
                }
            }
            fronts.push_back(std::move(entry));
        }
    }

    json summary = {{"command", "solve"},
                    {"model_digest", model_digest(model)},
                    {"horizon", model.horizon()},
                    {"objectives", model.objectives()},
                    {"round", opts.round},
                    {"fronts", fronts}};
    sink.finish(std::move(summary), model_digest(model), std::chrono::steady_clock::now() - start);
    return kExitOk;
}

int cmd_oracle(const Options& opts, const std::string& command, std::ostream& out) {
    const auto start = std::chrono::steady_clock::now();
    const VmdpModel model = load_model_ref(opts.model);
    if (!report_validity(model, out))
        return kExitCheckFailed;
    if (opts.space != "markov" && opts.space != "history")
        throw UsageError("--space must be markov or history");
    const auto epochs = selected_epochs(model, opts);
    const auto states = selected_states(model, opts);
    const std::size_t n_states = model.state_count();

    ResultSink sink(opts, command);
    json fronts = json::array();
    std::uint64_t policies = 0;
    auto emit = [&](Epoch t, const History& h, const std::string& label, const VectorSet& attainable) {
        const ParetoSet front = efficient_subset(attainable);
        print_front(out, label, front, opts.round);
        json entry = {{"t", t},
                      {"history", history_label(model, h)},
                      {"attainable", attainable.size()},
                      {"size", front.size()},
                      {"vectors", exact_strings(front.vectors())}};
        if (sink.enabled()) {
            const std::string name = "fronts_" + std::to_string(t) + "_" + history_file_component(model, h) + ".csv";
            std::vector<FrontRow> rows;
            for (const auto& x : front)
                rows.push_back({x, "", std::nullopt});
            write_front_csv(sink.path(name), rows, model.objectives(), opts.round);
            entry["file"] = name;
        }
        fronts.push_back(std::move(entry));
    };

    if (opts.space == "markov") {
        const MarkovVSets v = v_sets_markov(model, {.cap = opts.cap});
        policies = v.policies;
        out << "Markov policies enumerated: " << policies << '\n';
        for (Epoch t : epochs)
            for (StateIndex s : states)
                emit(t, History{{s}}, "e(V_" + std::to_string(t) + "(" + model.state_name(s) + "))", v.at(t, s));
    } else {
        const HistoryVSets v = v_sets_history(model, {.cap = opts.cap});
        policies = v.policies;
        out << "history-dependent policies enumerated: " << policies << '\n';
        for (Epoch t : epochs) {
            const std::size_t count = history_count(n_states, t);
            for (std::size_t idx = 0; idx < count; ++idx) {
                if (std::find(states.begin(), states.end(), idx % n_states) == states.end())
                    continue;
                const History h = history_from_index(idx, t, n_states);
                emit(t, h, "e(V'_" + std::to_string(t) + "(" + history_label(model, h) + "))", v.at(t, idx));
            }
        }
    }

    json summary = {{"command", "oracle"},     {"space", opts.space},   {"model_digest", model_digest(model)},
                    {"policies", policies},    {"round", opts.round},   {"fronts", fronts}};
    sink.finish(std::move(summary), model_digest(model), std::chrono::steady_clock::now() - start);
    return kExitOk;
}

json violations_json(const VmdpModel& model, const FeasibilityReport& report) {
    json out = json::array();
    for (const auto& v : report.violations)
        out.push_back({{"t", v.t},
                       {"history", history_label(model, v.where)},
                       {"vector", exact_strings(v.vector)},
                       {"generator_action", model.action_name(v.where.last(), v.generator.action)}});
    return out;
}

json mismatches_json(const VmdpModel& model, const ConsistencyReport& report) {
    json out = json::array();
    for (const auto& m : report.mismatches)
        out.push_back({{"t", m.t},
                       {"history", history_label(model, m.where)},
                       {"expected", exact_strings(m.expected.vectors())},
                       {"actual", exact_strings(m.actual.vectors())}});
    return out;
}

void print_feasibility(std::ostream& out, const VmdpModel& model, const std::string& name,
                       const FeasibilityReport& report, const std::string& space, int places) {
    out << "check " << name << ": " << (report.holds ? "PASS" : "FAIL") << " (" << report.violations.size()
        << " infeasible of " << report.vectors_checked << " vectors, " << report.policies << " " << space
        << " policies)\n";
    for (const auto& v : report.violations)
        out << "  infeasible at t=" << v.t << " h=(" << history_label(model, v.where) << "): " << show(v.vector, places)
            << "  [" << model.action_name(v.where.last(), v.generator.action) << "]\n";
}

void print_consistency(std::ostream& out, const VmdpModel& model, const std::string& name,
                       const ConsistencyReport& report, const std::string& space, int places) {
    out << "check " << name << ": " << (report.holds ? "PASS" : "FAIL") << " (" << report.mismatches.size()
        << " mismatched of " << report.fronts_compared << " fronts, " << report.policies << " " << space
        << " policies)\n";
    for (const auto& m : report.mismatches) {
        out << "  mismatch at t=" << m.t << " h=(" << history_label(model, m.where) << ")\n";
        print_front(out, "    recursion", m.expected, places);
        print_front(out, "    oracle", m.actual, places);
    }
}

int cmd_check(const Options& opts, const std::string& command, std::ostream& out) {
    const auto start = std::chrono::steady_clock::now();
    const VmdpModel model = load_model_ref(opts.model);
    if (!report_validity(model, out))
        return kExitCheckFailed;
    const OracleOptions oracle{.cap = opts.cap};
    json summary = {{"command", "check"}, {"which", opts.which}, {"model_digest", model_digest(model)}};

    if (opts.which == "P" || opts.which == "Pprime") {
        const bool markov = opts.which == "P";
        const FeasibilityReport r = markov ? check_property_P(model, oracle) : check_property_P_prime(model, oracle);
        print_feasibility(out, model, markov ? "(P)" : "(P')", r, markov ? "Markov" : "history-dependent",
                          opts.round);
        summary["holds"] = r.holds;
        summary["policies"] = r.policies;
        summary["vectors_checked"] = r.vectors_checked;
        summary["violations"] = violations_json(model, r);
    } else if (opts.which == "theorem5" || opts.which == "corollary2") {
        const bool history = opts.which == "theorem5";
        if (!history && !analyze_model(model).is_deterministic)
            out << "note: dynamics are not deterministic, so equality is not guaranteed\n";
        const ConsistencyReport r = history ? compare_recursion_with_history_oracle(model, oracle)
                                            : compare_recursion_with_markov_oracle(model, oracle);
        print_consistency(out, model,
                          history ? "theorem5 (U_t(s_t) = e(V'_t(h_t)))" : "corollary2 (U_t(s) = e(V_t(s)))", r,
                          history ? "history-dependent" : "Markov", opts.round);
        summary["holds"] = r.holds;
        summary["policies"] = r.policies;
        summary["fronts_compared"] = r.fronts_compared;
        summary["mismatches"] = mismatches_json(model, r);
    } else {
        throw UsageError("unknown check \"" + opts.which + "\" (expected P, Pprime, theorem5 or corollary2)");
    }

    ResultSink sink(opts, command);
    sink.finish(std::move(summary), model_digest(model), std::chrono::steady_clock::now() - start);
    return kExitOk;
}

int cmd_compare(const Options& opts, const std::string& command, std::ostream& out) {
    const auto start = std::chrono::steady_clock::now();
    const ComparisonReport r =
        compare_fronts(opts.left, read_front_csv(opts.left), opts.right, read_front_csv(opts.right), opts.compare_round);
    out << "compare " << r.left_label << " vs " << r.right_label;
    if (r.rounding_places)
        out << " (rounded to " << *r.rounding_places << " places)";
    out << ": " << (r.match ? "MATCH" : "DIFFER") << '\n';
    for (const auto& x : r.only_left)
        out << "  only in left:  " << x.to_string() << "  ~  " << x.to_decimal_string(opts.compare_round.value_or(opts.round)) << '\n';
    for (const auto& x : r.only_right)
        out << "  only in right: " << x.to_string() << "  ~  " << x.to_decimal_string(opts.compare_round.value_or(opts.round)) << '\n';

    json only_left = json::array();
    for (const auto& x : r.only_left)
        only_left.push_back(exact_strings(x));
    json only_right = json::array();
    for (const auto& x : r.only_right)
        only_right.push_back(exact_strings(x));
    json summary = {{"command", "compare"},
                    {"left_label", r.left_label},
                    {"right_label", r.right_label},
                    {"match", r.match},
                    {"only_left", only_left},
                    {"only_right", only_right},
                    {"rounding_places", r.rounding_places ? json(*r.rounding_places) : json(nullptr)}};
    ResultSink sink(opts, command);
    sink.finish(std::move(summary), std::nullopt, std::chrono::steady_clock::now() - start);
    return r.match ? kExitOk : kExitCheckFailed;
}

std::string verdict(bool ok) { return ok ? "PASS" : "FAIL"; }

int cmd_counterexample(const Options& opts, const std::string& command, std::ostream& out) {
    const auto start = std::chrono::steady_clock::now();
    const OracleOptions oracle{.cap = opts.cap};
    const int d = opts.round;
    const VmdpModel model = builtin_counterexample();
    const StateIndex s1 = 0;

    const ValueTable table = white_recursion(model, {.keep_f_sets = true});
    const ParetoSet& u1 = table.at(1, s1);
    const MarkovVSets markov = v_sets_markov(model, oracle);
    const ParetoSet markov_front = efficient_subset(markov.at(1, s1));
    const HistoryVSets history = v_sets_history(model, oracle);
    const ParetoSet history_front = efficient_subset(history.at(1, s1));
    const FeasibilityReport p = check_property_P(model, oracle);
    const FeasibilityReport p_prime = check_property_P_prime(model, oracle);
    const ConsistencyReport all_histories = compare_recursion_with_history_oracle(model, oracle);

    out << "Counterexample model: N = " << model.horizon() << ", m = " << model.objectives() << ", "
        << model.state_count() << " states, " << markov.policies << " Markov and " << history.policies
        << " history-dependent policies\n\n";
    print_front(out, "U_1(s1) from the recursion", u1, d);
    out << '\n';
    print_front(out, "e(V_1(s1)) over Markov policies", markov_front, d);
    out << '\n';
    print_front(out, "e(V'_1(s1)) over history-dependent policies", history_front, d);
    out << '\n';

    json infeasible = json::array();
    out << "Members of U_1(s1) attained by no Markov policy:\n";
    for (const auto& x : u1) {
        if (markov.at(1, s1).contains(x))
            continue;
        const auto m = find_markov_witness(model, 1, s1, x, {.cap = opts.cap, .round_places = std::nullopt});
        const auto h = find_history_witness(model, History{{s1}}, x, {.cap = opts.cap, .round_places = std::nullopt});
        out << "  " << show(x, d) << "  Markov witness: "
            << (m.policy ? "found" : (m.exhaustive ? "none (exhaustive over " + std::to_string(m.searched) + ")"
                                                   : "none (search incomplete)"))
            << ", history witness: " << (h.policy ? "found" : "none") << '\n';
        infeasible.push_back({{"vector", exact_strings(x)},
                              {"markov_witness", m.policy.has_value()},
                              {"markov_search_exhaustive", m.exhaustive},
                              {"history_witness", h.policy.has_value()}});
    }
    out << '\n';

    const VmdpModel det = builtin_deterministic_variant();
    const ParetoSet det_u = white_recursion(det).at(1, s1);
    const ParetoSet det_markov = efficient_subset(v_sets_markov(det, oracle).at(1, s1));
    const ParetoSet det_history = efficient_subset(v_sets_history(det, oracle).at(1, s1));
    const bool det_p = check_property_P(det, oracle).holds;
    print_front(out, "Deterministic variant U_1(s1)", det_u, d);
    out << '\n';

    const std::vector<std::pair<std::string, bool>> verdicts = {
        {"U_1(s1) != e(V_1(s1))", u1 != markov_front},
        {"U_1(s1) = e(V'_1(s1))", u1 == history_front},
        {"(P) fails on the counterexample", !p.holds},
        {"(P') holds on the counterexample", p_prime.holds},
        {"U_t(s_t) = e(V'_t(h_t)) for every t and h_t", all_histories.holds},
        {"deterministic variant: (P) holds", det_p},
        {"deterministic variant: U_1(s1) = e(V_1(s1)) = e(V'_1(s1))", det_u == det_markov && det_u == det_history},
    };
    out << "Verdicts:\n";
    json verdict_json = json::array();
    for (const auto& [name, ok] : verdicts) {
        out << "  " << verdict(ok) << "  " << name << '\n';
        verdict_json.push_back({{"claim", name}, {"holds", ok}});
    }

    ResultSink sink(opts, command);
    if (sink.enabled()) {
        auto write = [&](const std::string& name, const ParetoSet& front) {
            std::vector<FrontRow> rows;
            for (const auto& x : front)
                rows.push_back({x, "", std::nullopt});
            write_front_csv(sink.path(name), rows, model.objectives(), d);
        };
        write("recursion_fronts_1_s1.csv", u1);
        write("markov_fronts_1_s1.csv", markov_front);
        write("history_fronts_1_s1.csv", history_front);
        write("deterministic_fronts_1_s1.csv", det_u);
    }
    json summary = {{"command", "counterexample"},
                    {"model_digest", model_digest(model)},
                    {"recursion_front", exact_strings(u1.vectors())},
                    {"markov_front", exact_strings(markov_front.vectors())},
                    {"history_front", exact_strings(history_front.vectors())},
                    {"markov_policies", markov.policies},
                    {"history_policies", history.policies},
                    {"infeasible", infeasible},
                    {"p_violations", violations_json(model, p)},
                    {"deterministic_front", exact_strings(det_u.vectors())},
                    {"verdicts", verdict_json}};
    sink.finish(std::move(summary), model_digest(model), std::chrono::steady_clock::now() - start);
    return kExitOk;
}

std::string joined(int argc, const char* const* argv) {
    std::string out;
    for (int i = 0; i < argc; ++i)
        out += (i > 0 ? " " : "") + std::string(argv[i]);
    return out;
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    Options opts;
    CLI::App app{"Set-valued backward induction for finite-horizon vector MDPs, with exhaustive policy oracles"};
    app.require_subcommand(1);

    auto add_model = [&](CLI::App* cmd) {
        cmd->add_option("model", opts.model, "Model JSON file, or builtin:counterexample / builtin:deterministic")
            ->required();
    };
    auto add_round = [&](CLI::App* cmd) {
        cmd->add_option("--round", opts.round, "Decimal places for rounded output")->check(CLI::Range(0, 30));
    };
    auto add_cap = [&](CLI::App* cmd) {
        cmd->add_option("--cap", opts.cap, "Maximum number of policies to enumerate");
    };
    auto add_out = [&](CLI::App* cmd) {
        cmd->add_option("--out", opts.out_dir, "Directory for CSV fronts, summary.json and manifest.json");
    };
    auto add_selection = [&](CLI::App* cmd) {
        cmd->add_option("--epoch", opts.epoch, "Only this epoch t");
        cmd->add_option("--state", opts.state, "Only this state (last state of the history for --space history)");
    };

    auto* validate = app.add_subcommand("validate", "Check a model file for structural and numeric errors");
    add_model(validate);

    auto* solve = app.add_subcommand("solve", "Run the set-valued recursion and write U_t(s) fronts");
    add_model(solve);
    add_round(solve);
    add_out(solve);
    add_selection(solve);
    solve->add_flag("--keep-f-sets", opts.keep_f_sets, "Record generating actions and write F_t(s) sets");

    auto* oracle = app.add_subcommand("oracle", "Enumerate every policy and write the efficient attainable sets");
    add_model(oracle);
    add_round(oracle);
    add_cap(oracle);
    add_out(oracle);
    add_selection(oracle);
    oracle->add_option("--space", opts.space, "Policy space")->check(CLI::IsMember({"markov", "history"}));

    auto* check = app.add_subcommand("check", "Test a property of the recursion against the oracles");
    add_model(check);
    check->add_option("which", opts.which,
                      "P: F_t(s) attainable by Markov policies; Pprime: F'_t(h) attainable by history policies; "
                      "theorem5: U_t(s_t) = e(V'_t(h_t)) for all histories; corollary2: U_t(s) = e(V_t(s))")
        ->required()
        ->check(CLI::IsMember({"P", "Pprime", "theorem5", "corollary2"}));
    add_round(check);
    add_cap(check);
    add_out(check);

    auto* compare = app.add_subcommand("compare", "Compare two front CSV files as sets");
    compare->add_option("left", opts.left, "First front CSV")->required();
    compare->add_option("right", opts.right, "Second front CSV")->required();
    compare->add_option("--round", opts.compare_round, "Compare after rounding both sides to this many places")
        ->check(CLI::Range(0, 30));
    add_out(compare);

    auto* counterexample = app.add_subcommand("counterexample", "Run the full counterexample report");
    add_round(counterexample);
    add_cap(counterexample);
    add_out(counterexample);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitUsageError;
    }

    const std::string command = joined(argc, argv);
    try {
        if (validate->parsed())
            return cmd_validate(opts, out);
        if (solve->parsed())
            return cmd_solve(opts, command, out);
        if (oracle->parsed())
            return cmd_oracle(opts, command, out);
        if (check->parsed())
            return cmd_check(opts, command, out);
        if (compare->parsed())
            return cmd_compare(opts, command, out);
        return cmd_counterexample(opts, command, out);
    } catch (const CapExceeded& e) {
        err << "error: " << e.what() << "; rerun with --cap " << e.required().to_string() << '\n';
        return kExitCapExceeded;
    } catch (const ModelError& e) {
        err << "error: " << e.what() << '\n';
        return kExitCheckFailed;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsageError;
    }
}

} // namespace vmdp::cli
