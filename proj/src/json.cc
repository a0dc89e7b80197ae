// Copyright 2026 The qdisc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qdisc/json.h"

#include <fstream>

namespace qdisc {

namespace {

template <typename T>
Json optional_value(const std::optional<T> &v) {
    return v ? Json(*v) : Json(nullptr);
}

}  // namespace

Json povm_to_json(const Povm &p) {
    Json elements = Json::array();
    for (const auto &e : p.elements()) {
        elements.push_back({{"mu", e.mu}, {"R", {e.direction.x, e.direction.y, e.direction.z}}});
    }
    return {{"elements", elements}};
}

Povm povm_from_json(const Json &j) {
    if (!j.is_object() || !j.contains("elements") || !j["elements"].is_array()) {
        throw UsageError("POVM JSON must be an object with an \"elements\" array");
    }
    std::vector<PovmElement> elements;
    for (const auto &e : j["elements"]) {
        if (!e.is_object() || !e.contains("mu") || !e.contains("R") || !e["mu"].is_number() ||
            !e["R"].is_array() || e["R"].size() != 3) {
            throw UsageError("each POVM element needs a numeric \"mu\" and a 3-component \"R\"");
        }
        for (const auto &c : e["R"]) {
            if (!c.is_number()) {
                throw UsageError("POVM direction components must be numbers");
            }
        }
        elements.push_back({e["mu"].get<double>(),
                            {e["R"][0].get<double>(), e["R"][1].get<double>(), e["R"][2].get<double>()}});
    }
    return Povm(std::move(elements));
}

Povm read_povm_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw UsageError("cannot open POVM file " + path);
    }
    Json j;
    try {
        j = Json::parse(in);
    } catch (const nlohmann::json::parse_error &e) {
        throw UsageError("cannot parse POVM file " + path + ": " + e.what());
    }
    return povm_from_json(j);
}

Json to_json(const GuessProbabilities &gp) {
    return {{"P_ww", gp.p_ww}, {"P_wp", gp.p_wp}, {"P_wm", optional_value(gp.p_wm)}, {"P_c", gp.p_c}};
}

Json to_json(const InfoReport &rep) {
    return {
        {"I_ww", rep.i_ww},
        {"I_wp", rep.i_wp},
        {"I_wm", optional_value(rep.i_wm)},
        {"I_cross", rep.i_cross},
        {"I_in_out", rep.i_in_out},
        {"holevo", rep.holevo},
        {"residual", rep.residual},
        {"I_cross_indicator", rep.indicator_cross},
        {"via_indicator", rep.via_indicator},
        {"I_ww_from_P", rep.i_ww_from_p},
        {"I_wp_from_P", rep.i_wp_from_p},
        {"I_wm_from_P", optional_value(rep.i_wm_from_p)},
    };
}

Json to_json(const SweepReport &rep) {
    return {
        {"seed", rep.seed},
        {"n_samples", rep.n_samples},
        {"tolerance", rep.tolerance},
        {"max_lhs", rep.max_lhs},
        {"violations", rep.violations},
        {"invalid_samples", rep.invalid_samples},
        {"max_closed_form_gap", rep.max_closed_form_gap},
        {"max_pc_identity_gap", rep.max_pc_identity_gap},
        {"n_controls", rep.n_controls},
        {"max_control_deviation", rep.max_control_deviation},
        {"argmax", povm_to_json(rep.argmax)},
        {"histogram", {{"bin_width", kHistogramBinWidth}, {"range", {0.0, kHistogramMax}}, {"counts", rep.histogram}}},
    };
}

Json to_json(const GameResult &res) {
    Json z = {{"P_ww", res.z_score(InputBit::ww)}, {"P_wp", res.z_score(InputBit::wp)}};
    if (res.analytic.p_wm) {
        z["P_wm"] = res.z_score(InputBit::wm);
    }
    z["P_c"] = res.z_score_joint();
    return {
        {"seed", res.seed},
        {"n_rounds", res.n_rounds},
        {"empirical", to_json(res.empirical)},
        {"standard_error", to_json(res.standard_error)},
        {"analytic", to_json(res.analytic)},
        {"z_score", z},
    };
}

}  // namespace qdisc
