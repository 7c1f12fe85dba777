#pragma once

#include "parknap/greedy.hpp"
#include "parknap/instance.hpp"
#include "parknap/oracle.hpp"

#include <json.hpp>

#include <fstream>
#include <stdexcept>
#include <string>

namespace parknap {
namespace io {

using Json = nlohmann::ordered_json;

// ---- instance file: {"capacity": int, "items": [{"p":..,"a":..,"b":..}, ...]} ----

inline Json to_json(const ParametricInstance& inst) {
    Json j;
    j["capacity"] = inst.capacity();
    j["items"] = Json::array();
    for (const Item& it : inst.items())
        j["items"].push_back({{"p", it.profit}, {"a", it.weight_intercept}, {"b", it.weight_slope}});
    return j;
}

inline ParametricInstance instance_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("capacity") || !j.contains("items"))
        throw std::invalid_argument("instance json: expected {capacity, items}");
    std::vector<Item> items;
    for (const auto& e : j.at("items")) {
        Item it;
        it.profit = e.at("p").get<std::int64_t>();
        it.weight_intercept = e.at("a").get<std::int64_t>();
        it.weight_slope = e.at("b").get<std::int64_t>();
        items.push_back(it);
    }
    return ParametricInstance(std::move(items), j.at("capacity").get<std::int64_t>());
}

// ---- solutions and partitions ----

inline Json solution_to_json(const KnapsackSolution& s) {
    Json j;
    j["items"] = s.selected_indices();
    j["profit"] = s.profit.str();
    j["weight"] = {{"alpha", s.weight.intercept.str()}, {"beta", s.weight.slope.str()}};
    return j;
}

inline KnapsackSolution solution_from_json(const Json& j, const ParametricInstance& inst) {
    std::vector<char> chosen(inst.size(), 0);
    for (const auto& e : j.at("items")) {
        std::size_t idx = e.get<std::size_t>();
        if (idx == 0 || idx > inst.size())
            throw std::invalid_argument("solution json: item index out of range");
        chosen[idx - 1] = 1;
    }
    KnapsackSolution s = make_solution(inst, std::move(chosen));
    if (j.contains("profit") && BigInt(j.at("profit").get<std::string>()) != s.profit)
        throw std::invalid_argument("solution json: stored profit inconsistent");
    if (j.contains("weight")) {
        const auto& w = j.at("weight");
        AffineForm stored(Rational::parse(w.at("alpha").get<std::string>()),
                          Rational::parse(w.at("beta").get<std::string>()));
        if (!(stored == s.weight))
            throw std::invalid_argument("solution json: stored weight inconsistent");
    }
    return s;
}

inline Json partition_to_json(const SolutionPartition& part) {
    Json j;
    j["breakpoints"] = Json::array();
    for (const Rational& b : part.breakpoints) j["breakpoints"].push_back(b.str());
    j["cells"] = Json::array();
    for (const KnapsackSolution& s : part.cells) j["cells"].push_back(solution_to_json(s));
    return j;
}

inline SolutionPartition partition_from_json(const Json& j, const ParametricInstance& inst) {
    SolutionPartition part;
    for (const auto& e : j.at("breakpoints")) part.breakpoints.push_back(Rational::parse(e.get<std::string>()));
    for (const auto& e : j.at("cells")) part.cells.push_back(solution_from_json(e, inst));
    if (part.cells.size() != part.breakpoints.size() + 1)
        throw std::invalid_argument("partition json: cell count mismatch");
    return part;
}

inline Json step_function_to_json(const oracle::ProfitStepFunction& f) {
    Json j;
    j["breakpoints"] = Json::array();
    for (const Rational& b : f.breakpoints) j["breakpoints"].push_back(b.str());
    j["values"] = Json::array();
    for (const BigInt& v : f.values) j["values"].push_back(v.str());
    j["witnesses"] = Json::array();
    for (const KnapsackSolution& w : f.witnesses) j["witnesses"].push_back(solution_to_json(w));
    return j;
}

inline Json greedy_partition_to_json(const GreedyPartition& g) {
    Json j;
    j["breakpoints"] = Json::array();
    for (const Rational& b : g.breakpoints) j["breakpoints"].push_back(b.str());
    j["cells"] = Json::array();
    for (const GreedyCell& c : g.cells) {
        Json e = solution_to_json(c.solution);
        e["p_approx"] = c.approx_profit.str();
        j["cells"].push_back(std::move(e));
    }
    return j;
}

// ---- files ----

inline Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    Json j;
    in >> j;
    return j;
}

inline void write_json_file(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot write file: " + path);
    out << j.dump(2) << "\n";
}

}  // namespace io
}  // namespace parknap
