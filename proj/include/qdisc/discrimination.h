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

#ifndef QDISC_DISCRIMINATION_H
#define QDISC_DISCRIMINATION_H

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "qdisc/bloch.h"
#include "qdisc/povm.h"

namespace qdisc {

/// Joint probabilities p(i, j) of input label i and measurement outcome j,
/// for equiprobable inputs.
class JointDistribution {
   public:
    JointDistribution(EnsembleMode mode, std::size_t num_outcomes, std::vector<double> table);

    EnsembleMode mode() const {
        return mode_;
    }
    std::size_t num_bits() const {
        return qdisc::num_bits(mode_);
    }
    std::size_t num_inputs() const {
        return qdisc::num_inputs(mode_);
    }
    std::size_t num_outcomes() const {
        return num_outcomes_;
    }
    double at(std::size_t input, std::size_t outcome) const {
        return table_[input * num_outcomes_ + outcome];
    }
    /// Row-major over (input index, outcome).
    std::span<const double> table() const {
        return table_;
    }

    double outcome_probability(std::size_t outcome) const;
    /// p(b, j): the joint probability of one input bit taking `sign` together with outcome j.
    double bit_outcome_probability(InputBit bit, int sign, std::size_t outcome) const;

    /// Writes `b_ww,b_wp[,b_wm],outcome,probability` rows.
    void write_csv(std::ostream &out) const;

   private:
    EnsembleMode mode_;
    std::size_t num_outcomes_;
    std::vector<double> table_;
};

/// p(i, j) = p_i mu_j (1 + r_i . R_j) / 2 with p_i = 1/4 (pure) or 1/8 (mixed).
/// Validates both arguments first.
JointDistribution joint_distribution(const EnsembleGeometry &geom, const Povm &p);

struct GuessProbabilities {
    double p_ww = 0;
    double p_wp = 0;
    std::optional<double> p_wm;
    /// Probability of guessing the whole input label.
    double p_c = 0;

    double get(InputBit b) const;
};

/// Maximum-likelihood guess (+1 or -1) of one input bit after outcome j. Ties go to +1.
int ml_bit_guess(const JointDistribution &jd, InputBit bit, std::size_t outcome);
/// Maximum-likelihood guess of the full input label; ties go to the lowest index.
std::size_t ml_label_guess(const JointDistribution &jd, std::size_t outcome);

/// Success probabilities of the maximum-likelihood guesses, summed over the table.
GuessProbabilities guess_probabilities(const JointDistribution &jd);

/// P_b = (1 + sum_j (mu_j / 2) |R_j . e_b| d_b) / 2 evaluated directly from the
/// POVM. Valid for interior elements too, so no refinement is required.
GuessProbabilities closed_form_probabilities(const EnsembleGeometry &geom, const Povm &p);

/// sum_b ((2 P_b - 1) / d_b)^2 over the bits of the geometry. Axes with
/// d_b = 0 are skipped.
double frontier_lhs(const GuessProbabilities &gp, const EnsembleGeometry &geom);

/// sum_j max_i p(i, j).
double joint_correct_probability(const JointDistribution &jd);

}  // namespace qdisc

#endif
