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

#ifndef QDISC_ORACLE_H
#define QDISC_ORACLE_H

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "qdisc/discrimination.h"

namespace qdisc {

using Rng = std::mt19937_64;

/// Child seed for stream `stream` of a master seed (splitmix64 mixing).
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream);

/// Uniform double in [0, 1) from the top 53 bits of one draw.
double uniform01(Rng &rng);

/// A random POVM with `n_outcomes` elements (at least 2).
///
/// Draws n positive operators B_k = mu_k (1 + R_k.sigma) / 2 with mu_k uniform
/// in (0, 1] and R_k uniform in the ball, then maps B_k -> S^{-1/2} B_k S^{-1/2}
/// where S = sum_k B_k, so the set resolves the identity. Numerically singular
/// S is redrawn. Returned in canonical order.
Povm random_povm(Rng &rng, std::size_t n_outcomes);

inline constexpr std::size_t kMinRandomOutcomes = 2;
inline constexpr std::size_t kMaxRandomOutcomes = 8;

/// `count` random POVMs with outcome counts uniform in [2, 8]. Sample k is
/// drawn from shard k * shards / count, each shard seeded by derive_seed(seed,
/// shard), so the batch depends only on (seed, count, shards).
std::vector<Povm> random_povm_batch(std::uint64_t seed, std::size_t count, std::size_t shards = 8);

struct SweepOptions {
    double tolerance = 1e-9;
    std::size_t shards = 8;
    /// Side of the (mu, z0) grid of optimal-family controls.
    std::size_t control_grid = 21;
};

inline constexpr double kHistogramBinWidth = 0.01;
inline constexpr double kHistogramMax = 1.05;
inline constexpr std::size_t kHistogramBins = 105;

struct SweepReport {
    std::uint64_t seed = 0;
    std::size_t n_samples = 0;
    double tolerance = 0;
    /// Largest frontier value over every sample and its refinement.
    double max_lhs = 0;
    Povm argmax;
    /// Samples whose frontier value, or their refinement's, exceeds 1 + tolerance.
    std::size_t violations = 0;
    /// Counts of sample frontier values in bins of width 0.01 over [0, 1.05];
    /// larger values land in the last bin.
    std::vector<std::size_t> histogram = std::vector<std::size_t>(kHistogramBins, 0);
    /// Samples that failed POVM validation (always expected to be zero).
    std::size_t invalid_samples = 0;
    /// Largest |table route - closed form| over all guess probabilities, on
    /// the samples and on their refinements.
    double max_closed_form_gap = 0;
    /// Largest |P_c - (P_ww + P_wp - 1/2) / 2| (pure) or
    /// |P_c - (P_ww + P_wp + P_wm - 1) / 4| (mixed).
    double max_pc_identity_gap = 0;
    std::size_t n_controls = 0;
    /// Largest |lhs - 1| over the Pareto-optimal controls.
    double max_control_deviation = 0;

    bool passed() const {
        return violations == 0 && invalid_samples == 0;
    }
};

/// Brute-force check of the frontier inequality over random POVMs.
SweepReport pareto_sweep(const EnsembleGeometry &geom, std::size_t n_samples, std::uint64_t seed,
                         const SweepOptions &options = {});

struct JointCorrectMaximum {
    Povm povm;
    double p_c = 0;
    double lhs = 0;
    /// Best P_c seen among the random samples alone.
    double random_best = 0;
};

/// Maximises P_c over random POVMs and the optimal family on a (mu, z0) grid
/// of side `grid`, followed by a golden-section polish in z0.
JointCorrectMaximum maximize_joint_correct(const EnsembleGeometry &geom, std::size_t n_samples, std::uint64_t seed,
                                           std::size_t grid = 101);

struct GameResult {
    std::uint64_t seed = 0;
    std::size_t n_rounds = 0;
    GuessProbabilities empirical;
    /// sqrt(p (1 - p) / N) with the empirical p.
    GuessProbabilities standard_error;
    GuessProbabilities analytic;

    /// (empirical - analytic) / sqrt(analytic (1 - analytic) / N) for one bit.
    double z_score(InputBit bit) const;
    double z_score_joint() const;
};

/// Plays n_rounds of the guessing game: Alice draws a label uniformly, the
/// outcome is drawn from p(j | i), Bob applies the maximum-likelihood rules.
/// Rounds are split over `shards` deterministic streams.
GameResult monte_carlo_game(const EnsembleGeometry &geom, const Povm &p, std::size_t n_rounds, std::uint64_t seed,
                            std::size_t shards = 8);

}  // namespace qdisc

#endif
