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

#include "qdisc/oracle.h"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <complex>
#include <future>
#include <numbers>
#include <string>

namespace qdisc {

namespace {

using Matrix2c = Eigen::Matrix2cd;

constexpr int kMaxGramRetries = 64;

Matrix2c to_operator(double mu, const BlochVector &r) {
    using C = std::complex<double>;
    Matrix2c m;
    m << C(1 + r.z, 0), C(r.x, -r.y), C(r.x, r.y), C(1 - r.z, 0);
    return m * (mu / 2);
}

PovmElement from_operator(const Matrix2c &a) {
    double mu = (a(0, 0) + a(1, 1)).real();
    if (!(mu > 0)) {
        return {0, {}};
    }
    return {mu, {2 * a(1, 0).real() / mu, 2 * a(1, 0).imag() / mu, (a(0, 0) - a(1, 1)).real() / mu}};
}

BlochVector random_ball_point(Rng &rng) {
    double cos_theta = 2 * uniform01(rng) - 1;
    double sin_theta = std::sqrt(std::max(0.0, 1 - cos_theta * cos_theta));
    double azimuth = 2 * std::numbers::pi * uniform01(rng);
    double radius = std::cbrt(uniform01(rng));
    return {radius * sin_theta * std::cos(azimuth), radius * sin_theta * std::sin(azimuth), radius * cos_theta};
}

std::size_t shard_begin(std::size_t shard, std::size_t shards, std::size_t count) {
    return shard * count / shards;
}

// Runs fn(shard) for every shard concurrently and returns the results in shard order.
template <typename Fn>
auto run_shards(std::size_t shards, Fn fn) {
    using Result = decltype(fn(std::size_t{0}));
    std::vector<std::future<Result>> pending;
    for (std::size_t s = 0; s < shards; s++) {
        pending.push_back(std::async(std::launch::async, fn, s));
    }
    std::vector<Result> out;
    for (auto &f : pending) {
        out.push_back(f.get());
    }
    return out;
}

double pc_identity(const GuessProbabilities &gp) {
    if (gp.p_wm) {
        return (gp.p_ww + gp.p_wp + *gp.p_wm - 1) / 4;
    }
    return (gp.p_ww + gp.p_wp - 0.5) / 2;
}

double probability_gap(const GuessProbabilities &a, const GuessProbabilities &b) {
    double gap = std::max({std::abs(a.p_ww - b.p_ww), std::abs(a.p_wp - b.p_wp), std::abs(a.p_c - b.p_c)});
    if (a.p_wm && b.p_wm) {
        gap = std::max(gap, std::abs(*a.p_wm - *b.p_wm));
    }
    return gap;
}

std::size_t histogram_bin(double lhs) {
    if (!(lhs > 0)) {
        return 0;
    }
    auto bin = static_cast<std::size_t>(lhs / kHistogramBinWidth);
    return std::min(bin, kHistogramBins - 1);
}

// Frontier value a Pareto-optimal direction should reach once zero-distance
// axes are ignored.
double expected_control_lhs(const EnsembleGeometry &geom, const BlochVector &corner) {
    double lhs = 0;
    if (geom.d_ww != 0) {
        lhs += corner.z * corner.z;
    }
    if (geom.d_wp != 0) {
        lhs += corner.y * corner.y;
    }
    if (geom.mode == EnsembleMode::mixed && geom.d_wm != 0) {
        lhs += corner.x * corner.x;
    }
    return lhs;
}

double grid_point(std::size_t k, std::size_t grid) {
    return grid <= 1 ? 1.0 : static_cast<double>(k) / static_cast<double>(grid - 1);
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) {
    std::uint64_t z = master + 0x9E3779B97F4A7C15ull * (stream + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

double uniform01(Rng &rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

Povm random_povm(Rng &rng, std::size_t n_outcomes) {
    if (n_outcomes < kMinRandomOutcomes) {
        throw UsageError("a random POVM needs at least 2 outcomes");
    }
    for (int attempt = 0; attempt < kMaxGramRetries; attempt++) {
        std::vector<Matrix2c> raw;
        Matrix2c gram = Matrix2c::Zero();
        for (std::size_t k = 0; k < n_outcomes; k++) {
            double mu = 1 - uniform01(rng);
            raw.push_back(to_operator(mu, random_ball_point(rng)));
            gram += raw.back();
        }
        Eigen::SelfAdjointEigenSolver<Matrix2c> eig(gram);
        const auto &lambda = eig.eigenvalues();
        if (!(lambda(0) > 1e-9 * lambda(1))) {
            continue;
        }
        Eigen::Vector2cd inv_sqrt(1 / std::sqrt(lambda(0)), 1 / std::sqrt(lambda(1)));
        Matrix2c whiten = eig.eigenvectors() * inv_sqrt.asDiagonal() * eig.eigenvectors().adjoint();
        std::vector<PovmElement> elements;
        for (const auto &b : raw) {
            Matrix2c a = whiten * b * whiten;
            elements.push_back(from_operator((a + a.adjoint()) / 2.0));
        }
        return canonicalize(std::move(elements));
    }
    throw std::runtime_error("random_povm: Gram sum stayed singular after repeated draws");
}

std::vector<Povm> random_povm_batch(std::uint64_t seed, std::size_t count, std::size_t shards) {
    shards = std::max<std::size_t>(shards, 1);
    auto parts = run_shards(shards, [&](std::size_t s) {
        Rng rng(derive_seed(seed, s));
        std::vector<Povm> out;
        std::size_t n = shard_begin(s + 1, shards, count) - shard_begin(s, shards, count);
        for (std::size_t k = 0; k < n; k++) {
            auto span = kMaxRandomOutcomes - kMinRandomOutcomes + 1;
            auto outcomes = kMinRandomOutcomes + static_cast<std::size_t>(uniform01(rng) * static_cast<double>(span));
            out.push_back(random_povm(rng, outcomes));
        }
        return out;
    });
    std::vector<Povm> all;
    all.reserve(count);
    for (auto &part : parts) {
        std::move(part.begin(), part.end(), std::back_inserter(all));
    }
    return all;
}

SweepReport pareto_sweep(const EnsembleGeometry &geom, std::size_t n_samples, std::uint64_t seed,
                         const SweepOptions &options) {
    require_valid(geom);
    std::size_t shards = std::max<std::size_t>(options.shards, 1);
    auto parts = run_shards(shards, [&](std::size_t s) {
        SweepReport part;
        part.max_lhs = -1;
        Rng rng(derive_seed(seed, s));
        std::size_t n = shard_begin(s + 1, shards, n_samples) - shard_begin(s, shards, n_samples);
        for (std::size_t k = 0; k < n; k++) {
            auto span = kMaxRandomOutcomes - kMinRandomOutcomes + 1;
            auto outcomes = kMinRandomOutcomes + static_cast<std::size_t>(uniform01(rng) * static_cast<double>(span));
            Povm p = random_povm(rng, outcomes);
            part.n_samples++;
            if (validate_povm(p, options.tolerance)) {
                part.invalid_samples++;
                continue;
            }
            Povm refined = refine(p);
            double worst = -1;
            for (const Povm *q : {&p, &refined}) {
                auto table = guess_probabilities(joint_distribution(geom, *q));
                auto closed = closed_form_probabilities(geom, *q);
                part.max_closed_form_gap = std::max(part.max_closed_form_gap, probability_gap(table, closed));
                part.max_pc_identity_gap = std::max(part.max_pc_identity_gap, std::abs(table.p_c - pc_identity(table)));
                double lhs = frontier_lhs(table, geom);
                if (q == &p) {
                    part.histogram[histogram_bin(lhs)]++;
                }
                worst = std::max(worst, lhs);
            }
            if (worst > 1 + options.tolerance) {
                part.violations++;
            }
            if (worst > part.max_lhs) {
                part.max_lhs = worst;
                part.argmax = p;
            }
        }
        return part;
    });

    SweepReport report;
    report.seed = seed;
    report.tolerance = options.tolerance;
    report.max_lhs = -1;
    for (const auto &part : parts) {
        report.n_samples += part.n_samples;
        report.violations += part.violations;
        report.invalid_samples += part.invalid_samples;
        report.max_closed_form_gap = std::max(report.max_closed_form_gap, part.max_closed_form_gap);
        report.max_pc_identity_gap = std::max(report.max_pc_identity_gap, part.max_pc_identity_gap);
        for (std::size_t b = 0; b < kHistogramBins; b++) {
            report.histogram[b] += part.histogram[b];
        }
        if (part.n_samples > 0 && part.max_lhs > report.max_lhs) {
            report.max_lhs = part.max_lhs;
            report.argmax = part.argmax;
        }
    }
    if (report.max_lhs < 0) {
        report.max_lhs = 0;
    }

    std::size_t g = options.control_grid;
    auto add_control = [&](const Povm &p, const BlochVector &corner) {
        auto gp = guess_probabilities(joint_distribution(geom, p));
        double dev = std::abs(frontier_lhs(gp, geom) - expected_control_lhs(geom, corner));
        report.max_control_deviation = std::max(report.max_control_deviation, dev);
        report.n_controls++;
    };
    for (std::size_t a = 0; a < g; a++) {
        double mu = grid_point(a, g);
        for (std::size_t b = 0; b < g; b++) {
            double z0 = grid_point(b, g);
            if (geom.mode == EnsembleMode::pure) {
                add_control(optimal_family(mu, z0), {0, std::sqrt(1 - z0 * z0), z0});
                continue;
            }
            for (std::size_t c = 0; c < g; c++) {
                double e2 = grid_point(c, g);
                BlochVector corner{std::sqrt((1 - z0 * z0) * (1 - e2 * e2)), std::sqrt(1 - z0 * z0) * e2, z0};
                add_control(corner_family(mu, corner), corner);
            }
        }
    }
    return report;
}

JointCorrectMaximum maximize_joint_correct(const EnsembleGeometry &geom, std::size_t n_samples, std::uint64_t seed,
                                           std::size_t grid) {
    require_valid(geom);
    JointCorrectMaximum best;
    best.p_c = -1;
    auto consider = [&](const Povm &p) {
        double pc = joint_correct_probability(joint_distribution(geom, p));
        if (pc > best.p_c) {
            best.p_c = pc;
            best.povm = p;
        }
        return pc;
    };
    for (const auto &p : random_povm_batch(seed, n_samples)) {
        consider(p);
    }
    best.random_best = std::max(best.p_c, 0.0);

    double best_z0 = 0;
    double best_family = -1;
    for (std::size_t a = 0; a < grid; a++) {
        for (std::size_t b = 0; b < grid; b++) {
            double z0 = grid_point(b, grid);
            double pc = consider(optimal_family(grid_point(a, grid), z0));
            if (pc > best_family) {
                best_family = pc;
                best_z0 = z0;
            }
        }
    }
    // P_c along the family is concave in z0; polish around the best grid point.
    double step = grid > 1 ? 1.0 / static_cast<double>(grid - 1) : 1.0;
    double lo = std::max(0.0, best_z0 - step), hi = std::min(1.0, best_z0 + step);
    const double inv_phi = (std::sqrt(5.0) - 1) / 2;
    for (int iter = 0; iter < 80; iter++) {
        double m1 = hi - inv_phi * (hi - lo);
        double m2 = lo + inv_phi * (hi - lo);
        if (consider(optimal_family(0.5, m1)) >= consider(optimal_family(0.5, m2))) {
            hi = m2;
        } else {
            lo = m1;
        }
    }
    consider(optimal_family(0.5, (lo + hi) / 2));
    best.lhs = frontier_lhs(guess_probabilities(joint_distribution(geom, best.povm)), geom);
    return best;
}

double GameResult::z_score(InputBit bit) const {
    double p = analytic.get(bit);
    double sigma = std::sqrt(p * (1 - p) / static_cast<double>(n_rounds));
    double diff = empirical.get(bit) - p;
    return sigma > 0 ? diff / sigma : (diff == 0 ? 0.0 : INFINITY);
}

double GameResult::z_score_joint() const {
    double p = analytic.p_c;
    double sigma = std::sqrt(p * (1 - p) / static_cast<double>(n_rounds));
    double diff = empirical.p_c - p;
    return sigma > 0 ? diff / sigma : (diff == 0 ? 0.0 : INFINITY);
}

GameResult monte_carlo_game(const EnsembleGeometry &geom, const Povm &p, std::size_t n_rounds, std::uint64_t seed,
                            std::size_t shards) {
    if (n_rounds == 0) {
        throw UsageError("a game needs at least one round");
    }
    auto jd = joint_distribution(geom, p);
    std::size_t n_in = jd.num_inputs(), n_out = jd.num_outcomes(), n_bits = jd.num_bits();

    // Per-input cumulative p(j | i).
    std::vector<double> cdf(n_in * n_out);
    for (std::size_t i = 0; i < n_in; i++) {
        double row = 0;
        for (std::size_t j = 0; j < n_out; j++) {
            row += jd.at(i, j);
        }
        double acc = 0;
        for (std::size_t j = 0; j < n_out; j++) {
            acc += jd.at(i, j) / row;
            cdf[i * n_out + j] = acc;
        }
        cdf[i * n_out + n_out - 1] = 1;
    }
    // Guess for each outcome, encoded like an input index.
    std::vector<std::size_t> bit_guess(n_out), label_guess(n_out);
    for (std::size_t j = 0; j < n_out; j++) {
        for (std::size_t k = 0; k < n_bits; k++) {
            if (ml_bit_guess(jd, static_cast<InputBit>(k), j) < 0) {
                bit_guess[j] |= std::size_t{1} << k;
            }
        }
        label_guess[j] = ml_label_guess(jd, j);
    }

    struct Tally {
        std::size_t bits[3] = {0, 0, 0};
        std::size_t label = 0;
    };
    shards = std::max<std::size_t>(shards, 1);
    auto parts = run_shards(shards, [&](std::size_t s) {
        Tally t;
        Rng rng(derive_seed(seed, s));
        std::size_t n = shard_begin(s + 1, shards, n_rounds) - shard_begin(s, shards, n_rounds);
        for (std::size_t r = 0; r < n; r++) {
            auto input = std::min(static_cast<std::size_t>(uniform01(rng) * static_cast<double>(n_in)), n_in - 1);
            double u = uniform01(rng);
            const double *row = &cdf[input * n_out];
            auto outcome = static_cast<std::size_t>(std::upper_bound(row, row + n_out, u) - row);
            outcome = std::min(outcome, n_out - 1);
            std::size_t agree = ~(input ^ bit_guess[outcome]);
            for (std::size_t k = 0; k < n_bits; k++) {
                t.bits[k] += (agree >> k) & 1;
            }
            t.label += input == label_guess[outcome];
        }
        return t;
    });
    Tally total;
    for (const auto &t : parts) {
        for (std::size_t k = 0; k < 3; k++) {
            total.bits[k] += t.bits[k];
        }
        total.label += t.label;
    }

    GameResult result;
    result.seed = seed;
    result.n_rounds = n_rounds;
    result.analytic = guess_probabilities(jd);
    double n = static_cast<double>(n_rounds);
    auto se = [n](double p) { return std::sqrt(p * (1 - p) / n); };
    result.empirical.p_ww = static_cast<double>(total.bits[0]) / n;
    result.empirical.p_wp = static_cast<double>(total.bits[1]) / n;
    result.empirical.p_c = static_cast<double>(total.label) / n;
    result.standard_error.p_ww = se(result.empirical.p_ww);
    result.standard_error.p_wp = se(result.empirical.p_wp);
    result.standard_error.p_c = se(result.empirical.p_c);
    if (n_bits == 3) {
        result.empirical.p_wm = static_cast<double>(total.bits[2]) / n;
        result.standard_error.p_wm = se(*result.empirical.p_wm);
    }
    return result;
}

}  // namespace qdisc
