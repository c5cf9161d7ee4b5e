#pragma once

#include "torlie/report.hpp"
#include "torlie/tensor_field.hpp"

#include <json.hpp>

namespace torlie {

inline nlohmann::json to_json(const IdentityReport& r) {
    nlohmann::json j{{"identity", r.identity},
                     {"paper_anchor", r.anchor},
                     {"instances_checked", r.instances},
                     {"status", r.ok ? "pass" : "fail"}};
    if (!r.witness.empty()) j["witness"] = r.witness;
    return j;
}

inline nlohmann::json to_json(const std::vector<IdentityReport>& rs) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : rs) arr.push_back(to_json(r));
    return arr;
}

inline nlohmann::json scan_to_json(const ModuleParams& p, const ScanReport& r) {
    nlohmann::json weights = nlohmann::json::array();
    for (auto a : p.psi.a) weights.push_back(a);
    nlohmann::json alpha = nlohmann::json::array();
    for (const auto& c : p.alpha.c) alpha.push_back(c.str());
    nlohmann::json dims;
    for (const auto& [m, dim] : r.per_weight_dims) dims[m.str()] = dim;
    nlohmann::json j{
        {"params",
         {{"d", p.d()},
          {"weights", weights},
          {"b", p.psi.b.str()},
          {"alpha", alpha},
          {"dim", p.n()}}},
        {"mode", to_string(r.mode)},
        {"window", r.window},
        {"word_length", r.word_length},
        {"core_l1", r.core_l1},
        {"stabilized", r.stabilized},
        {"per_weight_dims", dims},
        {"proper_submodule", r.proper_submodule},
        {"witness", r.witness}};
    return j;
}

}  // namespace torlie
