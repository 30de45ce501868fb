#include "vmdp/cli/fronts_io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

namespace vmdp::cli {

namespace {

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r\"");
    if (first == std::string::npos)
        return "";
    const auto last = s.find_last_not_of(" \t\r\"");
    return s.substr(first, last - first + 1);
}

std::vector<std::string> split(const std::string& line) {
    std::vector<std::string> cells;
    std::stringstream in(line);
    std::string cell;
    while (std::getline(in, cell, ','))
        cells.push_back(trim(cell));
    if (!line.empty() && line.back() == ',')
        cells.emplace_back();
    return cells;
}

} // namespace

void write_front_csv(const std::filesystem::path& path, const std::vector<FrontRow>& rows, std::size_t dimension,
                     int places) {
    const bool with_generator =
        std::any_of(rows.begin(), rows.end(), [](const FrontRow& r) { return !r.generator_action.empty(); });
    const bool with_efficient =
        std::any_of(rows.begin(), rows.end(), [](const FrontRow& r) { return r.efficient.has_value(); });

    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot write " + path.string());
    for (std::size_t k = 1; k <= dimension; ++k)
        out << (k > 1 ? "," : "") << "objective_" << k << "_exact,objective_" << k << "_rounded";
    if (with_generator)
        out << ",generator_action";
    if (with_efficient)
        out << ",efficient";
    out << '\n';
    for (const auto& row : rows) {
        for (std::size_t k = 0; k < dimension; ++k)
            out << (k > 0 ? "," : "") << row.vector[k].to_string() << ',' << row.vector[k].to_decimal(places);
        if (with_generator)
            out << ',' << row.generator_action;
        if (with_efficient)
            out << ',' << (row.efficient.value_or(false) ? "true" : "false");
        out << '\n';
    }
    if (!out)
        throw std::runtime_error("cannot write " + path.string());
}

std::vector<RewardVector> read_front_csv(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw FrontFormatError("cannot read " + path.string());
    std::string line;
    if (!std::getline(in, line))
        throw FrontFormatError(path.string() + ": missing header row");
    const auto header = split(line);
    std::map<std::string, std::size_t> column;
    for (std::size_t i = 0; i < header.size(); ++i)
        column.emplace(header[i], i);

    std::vector<std::size_t> source;
    for (std::size_t k = 1;; ++k) {
        const std::string base = "objective_" + std::to_string(k);
        std::size_t found = header.size();
        for (const auto& name : {base + "_exact", base, base + "_rounded"})
            if (auto it = column.find(name); it != column.end()) {
                found = it->second;
                break;
            }
        if (found == header.size())
            break;
        source.push_back(found);
    }
    if (source.empty())
        throw FrontFormatError(path.string() + ": no objective_1 column in header");

    std::vector<RewardVector> out;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty())
            continue;
        const auto cells = split(line);
        RewardVector x(source.size());
        for (std::size_t k = 0; k < source.size(); ++k) {
            if (source[k] >= cells.size())
                throw FrontFormatError(path.string() + ":" + std::to_string(line_no) + ": too few columns");
            try {
                x[k] = Rational::parse(cells[source[k]]);
            } catch (const std::invalid_argument& e) {
                throw FrontFormatError(path.string() + ":" + std::to_string(line_no) + ": " + e.what());
            }
        }
        out.push_back(std::move(x));
    }
    return out;
}

ComparisonReport compare_fronts(std::string left_label, const std::vector<RewardVector>& left,
                                std::string right_label, const std::vector<RewardVector>& right,
                                std::optional<int> places) {
    auto prepare = [&](const std::vector<RewardVector>& points) {
        std::vector<RewardVector> out;
        out.reserve(points.size());
        for (const auto& x : points)
            out.push_back(places ? round_half_away(x, *places) : x);
        return VectorSet(std::move(out));
    };
    const VectorSet l = prepare(left);
    const VectorSet r = prepare(right);

    ComparisonReport report{std::move(left_label), std::move(right_label), true, {}, {}, places};
    std::set_difference(l.begin(), l.end(), r.begin(), r.end(), std::back_inserter(report.only_left));
    std::set_difference(r.begin(), r.end(), l.begin(), l.end(), std::back_inserter(report.only_right));
    report.match = report.only_left.empty() && report.only_right.empty();
    return report;
}

std::string file_component(const std::string& name) {
    std::string out = name;
    for (char& c : out)
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.'))
            c = '_';
    return out;
}

} // namespace vmdp::cli
