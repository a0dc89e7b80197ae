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

#include "qdisc/discrimination.h"

#include <cmath>
#include <ostream>
#include <string>

#include "qdisc/format.h"

namespace qdisc {

JointDistribution::JointDistribution(EnsembleMode mode, std::size_t num_outcomes, std::vector<double> table)
    : mode_(mode), num_outcomes_(num_outcomes), table_(std::move(table)) {
    if (table_.size() != qdisc::num_inputs(mode_) * num_outcomes_) {
        throw UsageError("joint table size does not match inputs x outcomes");
    }
}

double JointDistribution::outcome_probability(std::size_t outcome) const {
    double total = 0;
    for (std::size_t i = 0; i < num_inputs(); i++) {
        total += at(i, outcome);
    }
    return total;
}

double JointDistribution::bit_outcome_probability(InputBit bit, int sign, std::size_t outcome) const {
    if (static_cast<unsigned>(bit) >= num_bits()) {
        throw UsageError("input bit not present in this mode");
    }
    std::size_t mask = std::size_t{1} << static_cast<unsigned>(bit);
    std::size_t want = sign < 0 ? mask : 0;
    double total = 0;
    for (std::size_t i = 0; i < num_inputs(); i++) {
        if ((i & mask) == want) {
            total += at(i, outcome);
        }
    }
    return total;
}

void JointDistribution::write_csv(std::ostream &out) const {
    out << "b_ww,b_wp";
    if (mode_ == EnsembleMode::mixed) {
        out << ",b_wm";
    }
    out << ",outcome,probability\n";
    for (std::size_t i = 0; i < num_inputs(); i++) {
        auto label = InputLabel::from_index(i, mode_);
        for (std::size_t j = 0; j < num_outcomes_; j++) {
            out << label.b_ww() << ',' << label.b_wp() << ',';
            if (label.b_wm()) {
                out << *label.b_wm() << ',';
            }
            out << j << ',' << format_double(at(i, j)) << '\n';
        }
    }
}

JointDistribution joint_distribution(const EnsembleGeometry &geom, const Povm &p) {
    require_valid(geom);
    require_valid(p);
    auto labels = all_labels(geom.mode);
    double prior = 1.0 / static_cast<double>(labels.size());
    std::vector<double> table;
    table.reserve(labels.size() * p.size());
    for (const auto &label : labels) {
        BlochVector r = input_bloch(geom, label);
        for (const auto &e : p.elements()) {
            table.push_back(prior * e.mu * (1 + r.dot(e.direction)) / 2);
        }
    }
    return JointDistribution(geom.mode, p.size(), std::move(table));
}

double GuessProbabilities::get(InputBit b) const {
    switch (b) {
        case InputBit::ww:
            return p_ww;
        case InputBit::wp:
            return p_wp;
        case InputBit::wm:
            if (!p_wm) {
                throw UsageError("no which-mixedness probability in pure mode");
            }
            return *p_wm;
    }
    return 0;
}

int ml_bit_guess(const JointDistribution &jd, InputBit bit, std::size_t outcome) {
    double plus = jd.bit_outcome_probability(bit, +1, outcome);
    double minus = jd.bit_outcome_probability(bit, -1, outcome);
    return minus > plus ? -1 : +1;
}

std::size_t ml_label_guess(const JointDistribution &jd, std::size_t outcome) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < jd.num_inputs(); i++) {
        if (jd.at(i, outcome) > jd.at(best, outcome)) {
            best = i;
        }
    }
    return best;
}

GuessProbabilities guess_probabilities(const JointDistribution &jd) {
    auto success = [&](InputBit bit) {
        double total = 0;
        for (std::size_t j = 0; j < jd.num_outcomes(); j++) {
            total += jd.bit_outcome_probability(bit, ml_bit_guess(jd, bit, j), j);
        }
        return total;
    };
    GuessProbabilities gp;
    gp.p_ww = success(InputBit::ww);
    gp.p_wp = success(InputBit::wp);
    if (jd.mode() == EnsembleMode::mixed) {
        gp.p_wm = success(InputBit::wm);
    }
    gp.p_c = joint_correct_probability(jd);
    return gp;
}

GuessProbabilities closed_form_probabilities(const EnsembleGeometry &geom, const Povm &p) {
    double sx = 0, sy = 0, sz = 0;
    for (const auto &e : p.elements()) {
        sx += e.mu / 2 * std::abs(e.direction.x);
        sy += e.mu / 2 * std::abs(e.direction.y);
        sz += e.mu / 2 * std::abs(e.direction.z);
    }
    GuessProbabilities gp;
    gp.p_ww = (1 + sz * geom.d_ww) / 2;
    gp.p_wp = (1 + sy * geom.d_wp) / 2;
    if (geom.mode == EnsembleMode::pure) {
        gp.p_c = (gp.p_ww + gp.p_wp - 0.5) / 2;
    } else {
        gp.p_wm = (1 + sx * geom.d_wm) / 2;
        gp.p_c = (gp.p_ww + gp.p_wp + *gp.p_wm - 1) / 4;
    }
    return gp;
}

double frontier_lhs(const GuessProbabilities &gp, const EnsembleGeometry &geom) {
    double lhs = 0;
    for (std::size_t k = 0; k < geom.num_bits(); k++) {
        auto bit = static_cast<InputBit>(k);
        double d = geom.distance(bit);
        if (d == 0) {
            continue;
        }
        double ratio = (2 * gp.get(bit) - 1) / d;
        lhs += ratio * ratio;
    }
    return lhs;
}

double joint_correct_probability(const JointDistribution &jd) {
    double total = 0;
    for (std::size_t j = 0; j < jd.num_outcomes(); j++) {
        total += jd.at(ml_label_guess(jd, j), j);
    }
    return total;
}

}  // namespace qdisc
