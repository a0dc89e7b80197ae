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

#ifndef QDISC_INFORMATION_H
#define QDISC_INFORMATION_H

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "qdisc/discrimination.h"

namespace qdisc {

/// H(p, 1 - p) in bits. Throws DomainError outside [0, 1].
double binary_entropy(double p);

/// -sum p log2 p in bits, with 0 log 0 = 0. Throws DomainError on negative
/// entries or when the entries do not sum to 1 within tol.
double shannon_entropy(std::span<const double> dist, double tol = kDefaultTolerance);

/// A subset of the input bits.
class BitSet {
   public:
    constexpr BitSet() = default;
    constexpr BitSet(std::initializer_list<InputBit> bits) {
        for (auto b : bits) {
            mask_ |= 1u << static_cast<unsigned>(b);
        }
    }
    static constexpr BitSet from_mask(unsigned mask) {
        BitSet s;
        s.mask_ = mask;
        return s;
    }
    static BitSet all(EnsembleMode mode) {
        return from_mask((1u << qdisc::num_bits(mode)) - 1);
    }

    constexpr unsigned mask() const {
        return mask_;
    }
    constexpr bool empty() const {
        return mask_ == 0;
    }
    constexpr bool contains(InputBit b) const {
        return (mask_ >> static_cast<unsigned>(b)) & 1;
    }
    constexpr BitSet operator|(BitSet o) const {
        return from_mask(mask_ | o.mask_);
    }
    constexpr BitSet operator&(BitSet o) const {
        return from_mask(mask_ & o.mask_);
    }

   private:
    unsigned mask_ = 0;
};

/// Entropy of the marginal of jd over the selected bits, optionally joined with the outcome.
double marginal_entropy(const JointDistribution &jd, BitSet bits, bool with_outcome);

/// I(X : outcome, Y) where X = `x_bits` and Y = `extra_bits` (usually empty).
/// Throws UsageError if X is empty, overlaps Y, or names a bit the mode lacks.
double mutual_information(const JointDistribution &jd, BitSet x_bits, BitSet extra_bits = {});

/// I(A : B | outcome).
double conditional_mutual_information(const JointDistribution &jd, BitSet a, BitSet b);

/// sum_b H(b | outcome) - H(all bits | outcome). Equals I(b_ww : b_wp | outcome) in pure mode.
double conditional_total_correlation(const JointDistribution &jd);

/// Joint table of (indicator, outcome) for one bit. The indicator is 1 when
/// the realised bit equals the maximum-likelihood guess for that outcome.
class IndicatorDistribution {
   public:
    IndicatorDistribution(std::vector<double> correct, std::vector<double> wrong)
        : correct_(std::move(correct)), wrong_(std::move(wrong)) {
    }

    std::size_t num_outcomes() const {
        return correct_.size();
    }
    /// p(indicator = value, outcome = j).
    double at(bool value, std::size_t outcome) const {
        return value ? correct_[outcome] : wrong_[outcome];
    }
    double p_correct() const;
    /// p(indicator = 1 | outcome = j), or nullopt for a zero-probability outcome.
    std::optional<double> p_correct_given(std::size_t outcome) const;
    /// Largest |p(1 | j) - p(1)| over outcomes with nonzero probability.
    double outcome_dependence() const;
    double entropy() const;

   private:
    std::vector<double> correct_;
    std::vector<double> wrong_;
};

IndicatorDistribution indicator_distribution(const JointDistribution &jd, InputBit bit);

/// Joint table of all indicator variables and the outcome, row-major over
/// (indicator pattern, outcome). Bit k of the pattern is set when indicator k is 1.
std::vector<double> indicator_joint(const JointDistribution &jd);

/// Total correlation of the indicator variables: I(WW : WP) in pure mode,
/// C(WW : WP : WM) in mixed mode.
double indicator_total_correlation(const JointDistribution &jd);

/// Largest |p(pattern | j) - p(pattern)| of the joint indicator pattern.
double indicator_outcome_dependence(const JointDistribution &jd);

/// S(sum_i p_i rho_i) - sum_i p_i S(rho_i), evaluated from Bloch-vector norms.
/// For pure geometries this is H2((1 + d0) / 2).
double holevo_bound(const EnsembleGeometry &geom);

/// Indicator patterns independent of the outcome to this tolerance switch on
/// the binary-entropy forms of the per-bit information.
inline constexpr double kIndependenceTolerance = 1e-12;

struct InfoReport {
    double i_ww = 0;
    double i_wp = 0;
    std::optional<double> i_wm;
    /// Conditional total correlation of the input bits given the outcome
    /// (the cross-information I(b_ww : b_wp | out) in pure mode).
    double i_cross = 0;
    double i_in_out = 0;
    double holevo = 0;
    /// i_in_out - (i_ww + i_wp [+ i_wm] + i_cross).
    double residual = 0;
    /// Total correlation of the indicator variables themselves.
    double indicator_cross = 0;
    /// True when the indicator pattern is independent of the outcome. The
    /// binary forms 1 - H2(P_b) below then equal the mutual informations.
    bool via_indicator = false;
    double i_ww_from_p = 0;
    double i_wp_from_p = 0;
    std::optional<double> i_wm_from_p;
};

InfoReport info_report(const EnsembleGeometry &geom, const Povm &p);

}  // namespace qdisc

#endif
