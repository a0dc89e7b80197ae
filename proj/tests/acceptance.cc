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

// Acceptance suite. Prints one [PASS]/[FAIL] line per criterion and exits
// nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "qdisc/cli.h"
#include "qdisc/discrimination.h"
#include "qdisc/format.h"
#include "qdisc/information.h"
#include "qdisc/oracle.h"
#include "qdisc/povm.h"

using namespace qdisc;

namespace {

constexpr double kExact = 1e-12;
constexpr double kSweepTolerance = 1e-9;
constexpr std::size_t kSweepSamples = 100000;
constexpr std::size_t kInfoSamples = 20000;
constexpr std::size_t kRounds = 1000000;
constexpr std::size_t kSeeds = 20;
constexpr std::uint64_t kSeed = 20260101;

// Reference values evaluated at 30 digits.
constexpr double kCentredOffset = 0.466368952654440752;  // sqrt(1 - 0.65^2 - 0.6^2)
constexpr double kHolevo = 0.836857906836301105;         // H2((1 + d0) / 2)
constexpr double kMaxJointCorrect = 0.471147575161926657;
constexpr double kHolevoGapAtZ1 = 0.505873741892858648;  // kHolevo - (1 - H2(0.825))
constexpr double kMonteCarloTarget = 0.695;

struct Outcome {
    bool pass = true;
    std::string detail;
};

struct Criterion {
    int id;
    const char *name;
    double time_limit;  // seconds, 0 for none
    std::function<Outcome()> run;
};

std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3g", x);
    return buf;
}

EnsembleGeometry pure_geometry() {
    return EnsembleGeometry::pure(0.65, 0.6);
}

EnsembleGeometry mixed_geometry() {
    return EnsembleGeometry::mixed(0.65, 0.6, 0.3);
}

std::vector<std::vector<std::string>> csv_rows(const std::string &text) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(text);
    std::string line;
    std::getline(in, line);
    while (std::getline(in, line)) {
        std::vector<std::string> cells;
        std::istringstream cell_in(line);
        std::string cell;
        while (std::getline(cell_in, cell, ',')) {
            cells.push_back(cell);
        }
        rows.push_back(cells);
    }
    return rows;
}

// Sweeps are shared by criteria 2 to 4.
SweepReport pure_sweep;
SweepReport mixed_sweep;

Outcome frontier_equality() {
    auto g = pure_geometry();
    double worst = 0;
    for (int a = 0; a <= 20; a++) {
        for (int b = 0; b <= 20; b++) {
            auto gp = guess_probabilities(joint_distribution(g, optimal_family(a / 20.0, b / 20.0)));
            worst = std::max(worst, std::abs(frontier_lhs(gp, g) - 1));
        }
    }
    return {worst <= kExact, "441 points, max |lhs - 1| = " + fmt(worst)};
}

Outcome frontier_inequality() {
    SweepOptions opt;
    opt.tolerance = kSweepTolerance;
    pure_sweep = pareto_sweep(pure_geometry(), kSweepSamples, kSeed, opt);
    mixed_sweep = pareto_sweep(mixed_geometry(), kSweepSamples, kSeed + 1, opt);
    bool pass = pure_sweep.passed() && mixed_sweep.passed();
    return {pass, "pure: " + std::to_string(pure_sweep.violations) + " violations, max lhs " +
                      fmt(pure_sweep.max_lhs) + "; mixed: " + std::to_string(mixed_sweep.violations) +
                      " violations, max lhs " + fmt(mixed_sweep.max_lhs) + "; invalid " +
                      std::to_string(pure_sweep.invalid_samples + mixed_sweep.invalid_samples)};
}

Outcome closed_form_agreement() {
    double gap = std::max(pure_sweep.max_closed_form_gap, mixed_sweep.max_closed_form_gap);
    bool ran = pure_sweep.n_samples == kSweepSamples && mixed_sweep.n_samples == kSweepSamples;
    return {ran && gap <= kExact, "max |table - closed form| = " + fmt(gap) + " over 2 x " +
                                      std::to_string(kSweepSamples) + " POVMs and their refinements"};
}

Outcome joint_correct_identity() {
    double gap = std::max(pure_sweep.max_pc_identity_gap, mixed_sweep.max_pc_identity_gap);
    auto best = maximize_joint_correct(pure_geometry(), 20000, kSeed + 2);
    bool pass = gap <= kExact && best.lhs >= 1 - 1e-3;
    return {pass, "max identity gap = " + fmt(gap) + "; max P_c = " + format_double(best.p_c) + " (expected " +
                      format_double(kMaxJointCorrect) + ") at lhs = " + format_double(best.lhs)};
}

Outcome decomposition() {
    double worst = 0;
    for (auto g : {pure_geometry(), mixed_geometry()}) {
        for (const auto &p : random_povm_batch(kSeed + 3, kInfoSamples)) {
            worst = std::max(worst, std::abs(info_report(g, p).residual));
        }
    }
    double sweep = 0;
    for (int k = 0; k <= 10; k++) {
        sweep = std::max(sweep, std::abs(info_report(pure_geometry(), ww_detector_scheme(k / 10.0)).residual));
    }
    // Indicator form on the centred box, chain-rule form off-centre.
    double grid = 0;
    bool independent = true;
    auto centred = EnsembleGeometry::mixed(0.65, 0.6, kCentredOffset);
    for (int a = 0; a <= 4; a++) {
        for (int b = 0; b <= 4; b++) {
            auto p = two_detector_scheme(a / 4.0, b / 4.0);
            auto rep = info_report(centred, p);
            independent = independent && rep.via_indicator;
            grid = std::max(grid, std::abs(rep.i_in_out - (rep.i_ww_from_p + rep.i_wp_from_p + *rep.i_wm_from_p +
                                                           rep.indicator_cross)));
            grid = std::max(grid, std::abs(info_report(mixed_geometry(), p).residual));
        }
    }
    bool pass = worst <= kExact && sweep <= kExact && grid <= kExact && independent;
    return {pass, "random residual " + fmt(worst) + "; E sweep " + fmt(sweep) + "; two-detector grid " + fmt(grid)};
}

Outcome optimal_family_binary_form() {
    auto g = pure_geometry();
    double worst = 0;
    double dependence = 0;
    for (int a = 0; a <= 20; a++) {
        for (int b = 0; b <= 20; b++) {
            auto jd = joint_distribution(g, optimal_family(a / 20.0, b / 20.0));
            double info = mutual_information(jd, {InputBit::ww});
            double from_p = 1 - binary_entropy(guess_probabilities(jd).p_ww);
            worst = std::max(worst, std::abs(info - from_p));
            dependence = std::max(dependence, indicator_distribution(jd, InputBit::ww).outcome_dependence());
        }
    }
    return {worst <= kExact && dependence <= kExact,
            "max |I - (1 - H2(P))| = " + fmt(worst) + "; outcome dependence " + fmt(dependence)};
}

Outcome scheme_formulas() {
    auto g = pure_geometry();
    double ww = 0;
    for (int k = 0; k <= 100; k++) {
        double e = k / 100.0;
        auto gp = guess_probabilities(joint_distribution(g, ww_detector_scheme(e)));
        ww = std::max(ww, std::abs((2 * gp.p_ww - 1) / g.d_ww - e));
    }
    double vn = 0;
    for (int k = 0; k <= 50; k++) {
        double t = 0.5 + k / 100.0;
        for (auto o : {VnOrientation::aligned, VnOrientation::crossed}) {
            for (const auto &e : vn_scheme(t, o).elements()) {
                vn = std::max(vn, std::abs(std::abs(e.direction.z) - std::abs(1 - 2 * t)));
            }
        }
    }
    auto m = mixed_geometry();
    double two = 0;
    for (int a = 0; a <= 20; a++) {
        for (int b = 0; b <= 20; b++) {
            double e1 = a / 20.0;
            double e2 = b / 20.0;
            auto gp = guess_probabilities(joint_distribution(m, two_detector_scheme(e1, e2)));
            two = std::max(two, std::abs((2 * gp.p_ww - 1) / m.d_ww - e1));
            two = std::max(two, std::abs((2 * gp.p_wp - 1) / m.d_wp - std::sqrt(1 - e1 * e1) * e2));
            two = std::max(two,
                           std::abs((2 * *gp.p_wm - 1) / m.d_wm - std::sqrt((1 - e1 * e1) * (1 - e2 * e2))));
            two = std::max(two, std::abs(frontier_lhs(gp, m) - 1));
        }
    }
    return {ww <= kExact && vn <= kExact && two <= kExact,
            "ww " + fmt(ww) + "; vn " + fmt(vn) + "; two-detector " + fmt(two)};
}

Outcome monte_carlo() {
    auto g = pure_geometry();
    auto p = optimal_family(0.5, 0.6);
    auto first = monte_carlo_game(g, p, kRounds, kSeed + 4);
    double sigma = std::sqrt(kMonteCarloTarget * (1 - kMonteCarloTarget) / kRounds);
    double deviation = std::abs(first.empirical.p_ww - kMonteCarloTarget);
    bool pass = deviation <= 4 * sigma && std::abs(first.analytic.p_ww - kMonteCarloTarget) <= kExact;

    std::size_t excursions[3] = {0, 0, 0};
    for (std::size_t s = 0; s < kSeeds; s++) {
        auto res = monte_carlo_game(g, p, kRounds, derive_seed(kSeed + 5, s));
        excursions[0] += std::abs(res.z_score(InputBit::ww)) > 4;
        excursions[1] += std::abs(res.z_score(InputBit::wp)) > 4;
        excursions[2] += std::abs(res.z_score_joint()) > 4;
    }
    pass = pass && excursions[0] <= 1 && excursions[1] <= 1 && excursions[2] <= 1;
    return {pass, "P_ww = " + format_double(first.empirical.p_ww) + ", |dev| " + fmt(deviation) + " vs 4 sigma " +
                      fmt(4 * sigma) + "; excursions over " + std::to_string(kSeeds) + " seeds: " +
                      std::to_string(excursions[0]) + "/" + std::to_string(excursions[1]) + "/" +
                      std::to_string(excursions[2])};
}

Outcome holevo_dominance() {
    auto g = pure_geometry();
    double bound = holevo_bound(g);
    double worst = -1;
    for (const auto &p : random_povm_batch(kSeed + 6, kInfoSamples)) {
        auto rep = info_report(g, p);
        worst = std::max(worst, rep.i_in_out - bound);
    }
    auto top = info_report(g, ww_detector_scheme(1));
    double gap = bound - top.i_ww - top.i_wp;
    bool pass = worst <= kExact && std::abs(bound - kHolevo) <= kExact && gap > 0.4;
    return {pass, "bound " + format_double(bound) + "; max I_in_out - bound = " + fmt(worst) + "; gap at z0 = 1: " +
                      format_double(gap) + " (expected " + format_double(kHolevoGapAtZ1) + ")"};
}

Outcome figure_regression() {
    cli::RunConfig trade;
    trade.command = "tradeoff";
    trade.d_ww = 0.65;
    trade.d_wp = 0.6;
    std::ostringstream a, b, err;
    int code = cli::run_command(trade, a, err) | cli::run_command(trade, b, err);
    bool stable = code == 0 && a.str() == b.str() && !a.str().empty();
    double stacking = 0;
    auto rows = csv_rows(a.str());
    for (const auto &r : rows) {
        stacking = std::max(stacking, std::abs(std::stod(r[1]) + std::stod(r[2]) + std::stod(r[3]) - std::stod(r[4])));
    }

    cli::RunConfig front;
    front.command = "frontier";
    front.d_ww = 0.65;
    front.d_wp = 0.6;
    front.d_wm = 0.5;
    front.grid = 21;
    std::ostringstream f;
    code = cli::run_command(front, f, err);
    auto frows = csv_rows(f.str());
    double lhs = 0;
    for (const auto &r : frows) {
        lhs = std::max(lhs, std::abs(std::stod(r.back()) - 1));
    }
    bool pass = stable && stacking <= kExact && code == 0 && !frows.empty() && lhs <= kExact;
    return {pass, std::string("tradeoff ") + (stable ? "byte-stable" : "UNSTABLE") + ", " +
                      std::to_string(rows.size()) + " rows, stacking " + fmt(stacking) + "; mixed frontier " +
                      std::to_string(frows.size()) + " rows, max |lhs - 1| = " + fmt(lhs)};
}

}  // namespace

int main() {
    std::vector<Criterion> criteria = {
        {1, "frontier_equality", 1, frontier_equality},
        {2, "frontier_inequality", 60, frontier_inequality},
        {3, "closed_form_agreement", 0, closed_form_agreement},
        {4, "joint_correct_identity", 0, joint_correct_identity},
        {5, "information_decomposition", 0, decomposition},
        {6, "optimal_family_binary_form", 0, optimal_family_binary_form},
        {7, "scheme_formulas", 0, scheme_formulas},
        {8, "monte_carlo", 30, monte_carlo},
        {9, "holevo_dominance", 0, holevo_dominance},
        {10, "figure_regression", 0, figure_regression},
    };
    int failed = 0;
    for (const auto &c : criteria) {
        auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception &e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.time_limit > 0 && secs >= c.time_limit) {
            o.pass = false;
            o.detail += "; over time limit of " + fmt(c.time_limit) + " s";
        }
        failed += !o.pass;
        std::printf("[%s] %2d %-28s %s (%.2f s)\n", o.pass ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str(), secs);
        std::fflush(stdout);
    }
    std::printf("%zu criteria, %d failed\n", criteria.size(), failed);
    return failed ? 1 : 0;
}
