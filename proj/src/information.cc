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

#include "qdisc/information.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

namespace qdisc {

namespace {

double plogp(double p) {
    return p > 0 ? p * std::log2(p) : 0.0;
}

// Entropy of a table known to be a distribution up to rounding.
double raw_entropy(std::span<const double> dist) {
    double h = 0;
    for (double p : dist) {
        h -= plogp(p);
    }
    return h;
}

void check_bits(const JointDistribution &jd, BitSet bits) {
    if (bits.mask() >> jd.num_bits()) {
        throw UsageError("bit selection names a bit the ensemble does not have");
    }
}

// Compresses the selected bits of an input index into a dense index.
std::size_t pack(std::size_t input, unsigned mask) {
    std::size_t out = 0;
    std::size_t pos = 0;
    for (unsigned b = 0; b < 3; b++) {
        if ((mask >> b) & 1) {
            out |= ((input >> b) & 1) << pos;
            pos++;
        }
    }
    return out;
}

double max_conditional_deviation(std::span<const double> joint, std::size_t patterns, std::size_t outcomes) {
    std::vector<double> p_out(outcomes, 0.0), p_pattern(patterns, 0.0);
    for (std::size_t k = 0; k < patterns; k++) {
        for (std::size_t j = 0; j < outcomes; j++) {
            p_out[j] += joint[k * outcomes + j];
            p_pattern[k] += joint[k * outcomes + j];
        }
    }
    double worst = 0;
    for (std::size_t j = 0; j < outcomes; j++) {
        if (!(p_out[j] > 0)) {
            continue;
        }
        for (std::size_t k = 0; k < patterns; k++) {
            worst = std::max(worst, std::abs(joint[k * outcomes + j] / p_out[j] - p_pattern[k]));
        }
    }
    return worst;
}

}  // namespace

double binary_entropy(double p) {
    if (!(p >= 0 && p <= 1)) {
        throw DomainError("binary entropy needs p in [0, 1], got " + std::to_string(p));
    }
    return -plogp(p) - plogp(1 - p);
}

double shannon_entropy(std::span<const double> dist, double tol) {
    double total = 0;
    for (std::size_t k = 0; k < dist.size(); k++) {
        if (!(dist[k] >= -tol)) {
            throw DomainError("probability " + std::to_string(k) + " is negative");
        }
        total += dist[k];
    }
    if (std::abs(total - 1) > tol) {
        throw DomainError("probabilities sum to " + std::to_string(total) + ", not 1");
    }
    return raw_entropy(dist);
}

double marginal_entropy(const JointDistribution &jd, BitSet bits, bool with_outcome) {
    check_bits(jd, bits);
    std::size_t patterns = std::size_t{1} << std::popcount(bits.mask());
    std::size_t outs = with_outcome ? jd.num_outcomes() : 1;
    std::vector<double> marginal(patterns * outs, 0.0);
    for (std::size_t i = 0; i < jd.num_inputs(); i++) {
        std::size_t k = pack(i, bits.mask());
        for (std::size_t j = 0; j < jd.num_outcomes(); j++) {
            marginal[k * outs + (with_outcome ? j : 0)] += jd.at(i, j);
        }
    }
    return raw_entropy(marginal);
}

double mutual_information(const JointDistribution &jd, BitSet x_bits, BitSet extra_bits) {
    if (x_bits.empty()) {
        throw UsageError("mutual information needs at least one input bit on the X side");
    }
    if (!(x_bits & extra_bits).empty()) {
        throw UsageError("X and Y bit selections overlap");
    }
    check_bits(jd, x_bits | extra_bits);
    return marginal_entropy(jd, x_bits, false) + marginal_entropy(jd, extra_bits, true) -
           marginal_entropy(jd, x_bits | extra_bits, true);
}

double conditional_mutual_information(const JointDistribution &jd, BitSet a, BitSet b) {
    if (a.empty() || b.empty()) {
        throw UsageError("conditional mutual information needs two nonempty bit selections");
    }
    if (!(a & b).empty()) {
        throw UsageError("bit selections overlap");
    }
    return marginal_entropy(jd, a, true) + marginal_entropy(jd, b, true) - marginal_entropy(jd, a | b, true) -
           marginal_entropy(jd, {}, true);
}

double conditional_total_correlation(const JointDistribution &jd) {
    double h_out = marginal_entropy(jd, {}, true);
    double total = 0;
    for (std::size_t k = 0; k < jd.num_bits(); k++) {
        total += marginal_entropy(jd, BitSet::from_mask(1u << k), true) - h_out;
    }
    return total - (marginal_entropy(jd, BitSet::all(jd.mode()), true) - h_out);
}

double IndicatorDistribution::p_correct() const {
    double total = 0;
    for (double p : correct_) {
        total += p;
    }
    return total;
}

std::optional<double> IndicatorDistribution::p_correct_given(std::size_t outcome) const {
    double p_out = correct_[outcome] + wrong_[outcome];
    if (!(p_out > 0)) {
        return std::nullopt;
    }
    return correct_[outcome] / p_out;
}

double IndicatorDistribution::outcome_dependence() const {
    double marginal = p_correct();
    double worst = 0;
    for (std::size_t j = 0; j < num_outcomes(); j++) {
        if (auto c = p_correct_given(j)) {
            worst = std::max(worst, std::abs(*c - marginal));
        }
    }
    return worst;
}

double IndicatorDistribution::entropy() const {
    return binary_entropy(std::clamp(p_correct(), 0.0, 1.0));
}

IndicatorDistribution indicator_distribution(const JointDistribution &jd, InputBit bit) {
    std::vector<double> correct(jd.num_outcomes()), wrong(jd.num_outcomes());
    for (std::size_t j = 0; j < jd.num_outcomes(); j++) {
        int guess = ml_bit_guess(jd, bit, j);
        correct[j] = jd.bit_outcome_probability(bit, guess, j);
        wrong[j] = jd.bit_outcome_probability(bit, -guess, j);
    }
    return IndicatorDistribution(std::move(correct), std::move(wrong));
}

std::vector<double> indicator_joint(const JointDistribution &jd) {
    std::size_t n = jd.num_outcomes();
    std::vector<double> joint(jd.num_inputs() * n, 0.0);
    for (std::size_t j = 0; j < n; j++) {
        std::size_t guess_bits = 0;
        for (std::size_t k = 0; k < jd.num_bits(); k++) {
            if (ml_bit_guess(jd, static_cast<InputBit>(k), j) < 0) {
                guess_bits |= std::size_t{1} << k;
            }
        }
        std::size_t all = jd.num_inputs() - 1;
        for (std::size_t i = 0; i < jd.num_inputs(); i++) {
            // Bits where the input agrees with the guess are the indicators set to 1.
            std::size_t pattern = ~(i ^ guess_bits) & all;
            joint[pattern * n + j] += jd.at(i, j);
        }
    }
    return joint;
}

double indicator_total_correlation(const JointDistribution &jd) {
    auto joint = indicator_joint(jd);
    std::size_t n = jd.num_outcomes();
    std::size_t patterns = jd.num_inputs();
    std::vector<double> pattern_marginal(patterns, 0.0);
    for (std::size_t k = 0; k < patterns; k++) {
        for (std::size_t j = 0; j < n; j++) {
            pattern_marginal[k] += joint[k * n + j];
        }
    }
    double total = 0;
    for (std::size_t b = 0; b < jd.num_bits(); b++) {
        double p_one = 0;
        for (std::size_t k = 0; k < patterns; k++) {
            if ((k >> b) & 1) {
                p_one += pattern_marginal[k];
            }
        }
        total += binary_entropy(std::clamp(p_one, 0.0, 1.0));
    }
    return total - raw_entropy(pattern_marginal);
}

double indicator_outcome_dependence(const JointDistribution &jd) {
    return max_conditional_deviation(indicator_joint(jd), jd.num_inputs(), jd.num_outcomes());
}

double holevo_bound(const EnsembleGeometry &geom) {
    auto labels = all_labels(geom.mode);
    BlochVector mean;
    double mean_state_entropy = 0;
    for (const auto &label : labels) {
        BlochVector r = input_bloch(geom, label);
        mean = mean + r;
        mean_state_entropy += binary_entropy(std::clamp((1 + r.norm()) / 2, 0.0, 1.0));
    }
    double n = static_cast<double>(labels.size());
    mean = mean * (1 / n);
    return binary_entropy(std::clamp((1 + mean.norm()) / 2, 0.0, 1.0)) - mean_state_entropy / n;
}

InfoReport info_report(const EnsembleGeometry &geom, const Povm &p) {
    auto jd = joint_distribution(geom, p);
    InfoReport rep;
    rep.i_ww = mutual_information(jd, {InputBit::ww});
    rep.i_wp = mutual_information(jd, {InputBit::wp});
    double bit_sum = rep.i_ww + rep.i_wp;
    if (geom.mode == EnsembleMode::mixed) {
        rep.i_wm = mutual_information(jd, {InputBit::wm});
        bit_sum += *rep.i_wm;
    }
    rep.i_cross = conditional_total_correlation(jd);
    rep.i_in_out = mutual_information(jd, BitSet::all(geom.mode));
    rep.holevo = holevo_bound(geom);
    rep.residual = rep.i_in_out - (bit_sum + rep.i_cross);
    rep.indicator_cross = indicator_total_correlation(jd);

    auto gp = guess_probabilities(jd);
    auto from_p = [](double prob) { return 1 - binary_entropy(std::clamp(prob, 0.0, 1.0)); };
    rep.i_ww_from_p = from_p(gp.p_ww);
    rep.i_wp_from_p = from_p(gp.p_wp);
    if (gp.p_wm) {
        rep.i_wm_from_p = from_p(*gp.p_wm);
    }
    rep.via_indicator = indicator_outcome_dependence(jd) <= kIndependenceTolerance;
    if (rep.via_indicator) {
        // Outcome-independent indicators make H(b | out) = H2(P_b) exactly.
        double gap = std::max(std::abs(rep.i_ww - rep.i_ww_from_p), std::abs(rep.i_wp - rep.i_wp_from_p));
        if (rep.i_wm) {
            gap = std::max(gap, std::abs(*rep.i_wm - *rep.i_wm_from_p));
        }
        if (gap > kDefaultTolerance) {
            throw std::logic_error("binary-entropy information form disagrees with the joint table");
        }
    }
    return rep;
}

}  // namespace qdisc
