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

#include "qdisc/cli.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <ostream>
#include <set>
#include <sstream>
#include <utility>
#include <vector>

#include "qdisc/format.h"
#include "qdisc/information.h"
#include "qdisc/json.h"

namespace qdisc::cli {

namespace {

constexpr double kDefaultDww = 0.65;
constexpr double kDefaultDwp = 0.6;
constexpr double kDefaultMixedDwm = 0.3;
constexpr double kIdentityTolerance = 1e-12;
constexpr double kSigmaBand = 4;

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;

    void write(std::ostream &out, const std::string &format) const {
        if (format == "json") {
            Json arr = Json::array();
            for (const auto &row : rows) {
                Json obj = Json::object();
                for (std::size_t c = 0; c < header.size(); c++) {
                    obj[header[c]] = row[c];
                }
                arr.push_back(obj);
            }
            out << arr.dump(2) << '\n';
            return;
        }
        if (format != "csv") {
            throw UsageError("unknown format '" + format + "' (expected csv or json)");
        }
        for (std::size_t c = 0; c < header.size(); c++) {
            out << (c ? "," : "") << header[c];
        }
        out << '\n';
        for (const auto &row : rows) {
            for (std::size_t c = 0; c < row.size(); c++) {
                out << (c ? "," : "") << format_double(row[c]);
            }
            out << '\n';
        }
    }
};

double grid_point(std::size_t k, std::size_t grid) {
    return grid <= 1 ? 1.0 : static_cast<double>(k) / static_cast<double>(grid - 1);
}

std::size_t grid_or(const RunConfig &cfg, std::size_t fallback) {
    return cfg.grid ? cfg.grid : fallback;
}

EnsembleGeometry require_pure(const RunConfig &cfg) {
    auto geom = geometry_from_config(cfg);
    if (geom.mode != EnsembleMode::pure) {
        throw UsageError(cfg.command + " needs a pure geometry (omit --dwm)");
    }
    return require_valid(geom);
}

// The z0 grid of the pure frontier, or the (E1, E2) grid of the mixed one,
// restricted to directions that put no weight on zero-distance axes.
std::vector<BlochVector> frontier_corners(const EnsembleGeometry &geom, std::size_t grid) {
    auto allowed = [&](const BlochVector &c) {
        return (geom.d_ww != 0 || c.z == 0) && (geom.d_wp != 0 || std::abs(c.y) <= kIdentityTolerance) &&
               (geom.mode == EnsembleMode::pure || geom.d_wm != 0 || std::abs(c.x) <= kIdentityTolerance);
    };
    std::vector<BlochVector> out;
    std::set<std::pair<double, double>> seen;
    for (std::size_t a = 0; a < grid; a++) {
        double z0 = grid_point(a, grid);
        std::size_t inner = geom.mode == EnsembleMode::pure ? 1 : grid;
        for (std::size_t b = 0; b < inner; b++) {
            double e2 = geom.mode == EnsembleMode::pure ? 1.0 : grid_point(b, grid);
            BlochVector c{std::sqrt((1 - z0 * z0) * (1 - e2 * e2)), std::sqrt(1 - z0 * z0) * e2, z0};
            if (!allowed(c) || !seen.insert({c.z, c.y}).second) {
                continue;
            }
            out.push_back(c);
        }
    }
    return out;
}

struct Check {
    std::string name;
    bool passed = true;
    Json detail = Json::object();
};

Check povm_fixture_check(const EnsembleGeometry &geom, const Povm &p) {
    Check c{"povm_fixture"};
    if (auto v = validate_povm(p)) {
        c.passed = false;
        c.detail = {{"constraint", v->constraint}, {"message", v->str()}};
        if (v->index) {
            c.detail["element"] = *v->index;
        }
        return c;
    }
    auto rep = info_report(geom, p);
    double lhs = frontier_lhs(guess_probabilities(joint_distribution(geom, p)), geom);
    c.passed = lhs <= 1 + kDefaultTolerance && std::abs(rep.residual) <= kIdentityTolerance &&
               rep.i_in_out <= rep.holevo + kIdentityTolerance;
    c.detail = {{"lhs", lhs}, {"info", to_json(rep)}};
    return c;
}

Check sweep_check(const std::string &name, const SweepReport &rep) {
    Check c{name};
    c.passed = rep.passed() && rep.max_control_deviation <= kIdentityTolerance;
    c.detail = {{"n_samples", rep.n_samples},
                {"violations", rep.violations},
                {"invalid_samples", rep.invalid_samples},
                {"max_lhs", rep.max_lhs},
                {"n_controls", rep.n_controls},
                {"max_control_deviation", rep.max_control_deviation}};
    return c;
}

}  // namespace

EnsembleGeometry geometry_from_config(const RunConfig &cfg) {
    bool angles = cfg.alpha || cfg.phi;
    if (angles && (cfg.d_ww || cfg.d_wp)) {
        throw UsageError("give either --alpha/--phi or --dww/--dwp, not both");
    }
    if (angles) {
        if (!cfg.alpha || !cfg.phi) {
            throw UsageError("--alpha and --phi must be given together");
        }
        auto g = geometry_from_angles(*cfg.alpha, *cfg.phi);
        return cfg.d_wm ? EnsembleGeometry::mixed(g.d_ww, g.d_wp, *cfg.d_wm) : g;
    }
    double d_ww = cfg.d_ww.value_or(kDefaultDww);
    double d_wp = cfg.d_wp.value_or(kDefaultDwp);
    return cfg.d_wm ? EnsembleGeometry::mixed(d_ww, d_wp, *cfg.d_wm) : EnsembleGeometry::pure(d_ww, d_wp);
}

Povm povm_from_config(const RunConfig &cfg) {
    if (!cfg.povm_path.empty()) {
        if (!cfg.scheme.empty()) {
            throw UsageError("give either --povm or --scheme, not both");
        }
        return read_povm_file(cfg.povm_path);
    }
    auto need = [&](const std::optional<double> &v, const char *flag) {
        if (!v) {
            throw UsageError("scheme '" + cfg.scheme + "' needs " + flag);
        }
        return *v;
    };
    if (cfg.scheme == "ww") {
        return ww_detector_scheme(need(cfg.efficiency, "--E"));
    }
    if (cfg.scheme == "vn") {
        if (cfg.orientation != "aligned" && cfg.orientation != "crossed") {
            throw UsageError("--orientation must be aligned or crossed");
        }
        return vn_scheme(need(cfg.t_out, "--Tout"),
                         cfg.orientation == "aligned" ? VnOrientation::aligned : VnOrientation::crossed);
    }
    if (cfg.scheme == "two") {
        return two_detector_scheme(need(cfg.e1, "--E1"), need(cfg.e2, "--E2"));
    }
    if (cfg.scheme == "family") {
        return optimal_family(need(cfg.mu, "--mu"), need(cfg.z0, "--z0"));
    }
    if (cfg.scheme.empty()) {
        throw UsageError("specify a measurement with --scheme or --povm");
    }
    throw UsageError("unknown scheme '" + cfg.scheme + "' (expected ww, vn, two or family)");
}

int cmd_frontier(const RunConfig &cfg, std::ostream &out, std::ostream &err) {
    auto geom = geometry_from_config(cfg);
    if (auto v = validate_axes(geom)) {
        throw ValidationError(*v);
    }
    if (auto v = validate_geometry(geom)) {
        err << "warning: these distances are not realisable as qubit input states (" << v->str()
            << "); the frontier below depends on the distances only\n";
    }
    bool mixed = geom.mode == EnsembleMode::mixed;
    double mu = cfg.mu.value_or(0.5);
    auto corners = frontier_corners(geom, grid_or(cfg, mixed ? 21 : 51));
    if (corners.empty()) {
        throw UsageError("every distance is zero: there is no Pareto frontier to trace");
    }

    Table table;
    table.header = {"mu", "z0", "y0", "P_ww", "P_wp"};
    if (mixed) {
        table.header.push_back("P_wm");
    }
    table.header.push_back("lhs");
    for (const auto &c : corners) {
        Povm p = mixed ? corner_family(mu, c) : optimal_family(mu, c.z);
        auto gp = closed_form_probabilities(geom, p);
        std::vector<double> row{mu, c.z, c.y, gp.p_ww, gp.p_wp};
        if (mixed) {
            row.push_back(*gp.p_wm);
        }
        row.push_back(frontier_lhs(gp, geom));
        table.rows.push_back(std::move(row));
    }
    table.write(out, cfg.format);
    return kPass;
}

int cmd_tradeoff(const RunConfig &cfg, std::ostream &out, std::ostream &) {
    auto geom = require_pure(cfg);
    Table table;
    table.header = {"E", "I_ww", "I_wp", "I_cross", "I_in_out", "holevo"};
    std::size_t grid = grid_or(cfg, 101);
    for (std::size_t k = 0; k < grid; k++) {
        double e = grid_point(k, grid);
        auto rep = info_report(geom, ww_detector_scheme(e));
        table.rows.push_back({e, rep.i_ww, rep.i_wp, rep.i_cross, rep.i_in_out, rep.holevo});
    }
    table.write(out, cfg.format);
    return kPass;
}

int cmd_holevo_gap(const RunConfig &cfg, std::ostream &out, std::ostream &) {
    auto geom = require_pure(cfg);
    double bound = holevo_bound(geom);
    Table table;
    table.header = {"z0", "I_ww", "I_wp_max_exact", "I_wp_bound"};
    std::size_t grid = grid_or(cfg, 101);
    for (std::size_t k = 0; k < grid; k++) {
        double z0 = grid_point(k, grid);
        // Every optimal-family member at this z0 gives the same probabilities.
        auto gp = closed_form_probabilities(geom, optimal_family(0.5, z0));
        double i_ww = 1 - binary_entropy(gp.p_ww);
        double i_wp = 1 - binary_entropy(gp.p_wp);
        table.rows.push_back({z0, i_ww, i_wp, bound - i_ww});
    }
    table.write(out, cfg.format);
    return kPass;
}

int cmd_simulate(const RunConfig &cfg, std::ostream &out, std::ostream &) {
    if (cfg.rounds == 0) {
        throw UsageError("--rounds must be positive");
    }
    auto geom = require_valid(geometry_from_config(cfg));
    auto p = require_valid(povm_from_config(cfg));
    auto result = monte_carlo_game(geom, p, cfg.rounds, cfg.seed);
    Json j = to_json(result);
    j["povm"] = povm_to_json(p);
    j["sigma_band"] = kSigmaBand;
    bool within = std::abs(result.z_score(InputBit::ww)) <= kSigmaBand &&
                  std::abs(result.z_score(InputBit::wp)) <= kSigmaBand &&
                  std::abs(result.z_score_joint()) <= kSigmaBand;
    if (result.analytic.p_wm) {
        within = within && std::abs(result.z_score(InputBit::wm)) <= kSigmaBand;
    }
    j["within_band"] = within;
    out << j.dump(2) << '\n';
    return kPass;
}

int cmd_verify(const RunConfig &cfg, std::ostream &out, std::ostream &err) {
    auto pure = require_valid(EnsembleGeometry::pure(cfg.d_ww.value_or(kDefaultDww), cfg.d_wp.value_or(kDefaultDwp)));
    auto mixed = require_valid(EnsembleGeometry::mixed(pure.d_ww, pure.d_wp, cfg.d_wm.value_or(kDefaultMixedDwm)));
    std::vector<Check> checks;
    auto started = std::chrono::steady_clock::now();

    if (!cfg.povm_path.empty()) {
        checks.push_back(povm_fixture_check(cfg.d_wm ? mixed : pure, read_povm_file(cfg.povm_path)));
    }

    auto pure_sweep = pareto_sweep(pure, cfg.samples, cfg.seed);
    auto mixed_sweep = pareto_sweep(mixed, cfg.samples, derive_seed(cfg.seed, 1));
    checks.push_back(sweep_check("frontier_sweep_pure", pure_sweep));
    checks.push_back(sweep_check("frontier_sweep_mixed", mixed_sweep));

    {
        Check c{"closed_form_agreement"};
        double gap = std::max(pure_sweep.max_closed_form_gap, mixed_sweep.max_closed_form_gap);
        c.passed = gap <= kIdentityTolerance;
        c.detail = {{"max_gap", gap}};
        checks.push_back(c);
    }
    {
        Check c{"pc_identity"};
        double gap = std::max(pure_sweep.max_pc_identity_gap, mixed_sweep.max_pc_identity_gap);
        auto best = maximize_joint_correct(pure, std::min<std::size_t>(cfg.samples, 10000), derive_seed(cfg.seed, 2));
        c.passed = gap <= kIdentityTolerance && best.lhs >= 1 - 1e-3;
        c.detail = {{"max_gap", gap}, {"max_p_c", best.p_c}, {"lhs_at_max", best.lhs}};
        checks.push_back(c);
    }
    {
        Check decomposition{"decomposition_residual"};
        Check holevo{"holevo_dominance"};
        double worst_residual = 0, worst_excess = -INFINITY;
        auto scan = [&](const EnsembleGeometry &g, const Povm &p) {
            auto rep = info_report(g, p);
            worst_residual = std::max(worst_residual, std::abs(rep.residual));
            worst_excess = std::max(worst_excess, rep.i_in_out - rep.holevo);
        };
        for (const auto &p : random_povm_batch(derive_seed(cfg.seed, 3), cfg.samples)) {
            scan(pure, p);
            scan(mixed, p);
        }
        for (int k = 0; k <= 10; k++) {
            scan(pure, ww_detector_scheme(k / 10.0));
        }
        for (int a = 0; a <= 4; a++) {
            for (int b = 0; b <= 4; b++) {
                scan(mixed, two_detector_scheme(a / 4.0, b / 4.0));
            }
        }
        decomposition.passed = worst_residual <= kIdentityTolerance;
        decomposition.detail = {{"max_abs_residual", worst_residual}};
        holevo.passed = worst_excess <= kIdentityTolerance;
        holevo.detail = {{"max_excess", worst_excess}, {"bound_pure", holevo_bound(pure)}};
        checks.push_back(decomposition);
        checks.push_back(holevo);
    }
    {
        Check c{"optimal_family_binary_form"};
        double worst = 0, worst_dependence = 0;
        for (int a = 0; a <= 20; a++) {
            for (int b = 0; b <= 20; b++) {
                auto p = optimal_family(a / 20.0, b / 20.0);
                auto rep = info_report(pure, p);
                worst = std::max({worst, std::abs(rep.i_ww - rep.i_ww_from_p), std::abs(rep.i_wp - rep.i_wp_from_p)});
                auto jd = joint_distribution(pure, p);
                worst_dependence = std::max({worst_dependence, indicator_distribution(jd, InputBit::ww).outcome_dependence(),
                                             indicator_distribution(jd, InputBit::wp).outcome_dependence()});
            }
        }
        c.passed = worst <= kIdentityTolerance && worst_dependence <= kIdentityTolerance;
        c.detail = {{"max_gap", worst}, {"max_outcome_dependence", worst_dependence}};
        checks.push_back(c);
    }
    {
        // The indicator form holds when the indicators are independent of the
        // outcome, which the eight-corner scheme achieves on a centred box (d0 = 0).
        Check c{"indicator_decomposition_mixed"};
        double centred_dwm = std::sqrt(std::max(0.0, 1 - pure.d_ww * pure.d_ww - pure.d_wp * pure.d_wp));
        auto centred = require_valid(EnsembleGeometry::mixed(pure.d_ww, pure.d_wp, centred_dwm));
        double worst = 0;
        for (int a = 0; a <= 4; a++) {
            for (int b = 0; b <= 4; b++) {
                auto rep = info_report(centred, two_detector_scheme(a / 4.0, b / 4.0));
                double from_p = rep.i_ww_from_p + rep.i_wp_from_p + *rep.i_wm_from_p + rep.indicator_cross;
                worst = std::max({worst, std::abs(rep.i_in_out - from_p), std::abs(rep.i_cross - rep.indicator_cross)});
            }
        }
        c.passed = worst <= kIdentityTolerance;
        c.detail = {{"d_wm", centred_dwm}, {"max_gap", worst}};
        checks.push_back(c);
    }
    {
        Check c{"monte_carlo"};
        auto p = optimal_family(0.5, 0.6);
        std::size_t excursions[3] = {0, 0, 0};
        Json seeds = Json::array();
        for (std::size_t s = 0; s < cfg.seeds; s++) {
            auto res = monte_carlo_game(pure, p, cfg.rounds, derive_seed(cfg.seed, 100 + s));
            double z[3] = {res.z_score(InputBit::ww), res.z_score(InputBit::wp), res.z_score_joint()};
            for (int k = 0; k < 3; k++) {
                excursions[k] += std::abs(z[k]) > kSigmaBand;
            }
            seeds.push_back({{"seed", res.seed}, {"z_ww", z[0]}, {"z_wp", z[1]}, {"z_c", z[2]}});
        }
        c.passed = excursions[0] <= 1 && excursions[1] <= 1 && excursions[2] <= 1;
        c.detail = {{"rounds", cfg.rounds},
                    {"excursions", {{"P_ww", excursions[0]}, {"P_wp", excursions[1]}, {"P_c", excursions[2]}}},
                    {"runs", seeds}};
        checks.push_back(c);
    }

    Json report = Json::object();
    bool all = true;
    Json list = Json::array();
    for (const auto &c : checks) {
        all = all && c.passed;
        list.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
        if (!c.passed) {
            err << "FAILED: " << c.name << '\n';
        }
    }
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    report["passed"] = all;
    report["seed"] = cfg.seed;
    report["samples"] = cfg.samples;
    report["checks"] = list;
    out << report.dump(2) << '\n';
    err << "verify finished in " << seconds << " s\n";
    return all ? kPass : kCheckFailure;
}

int run_command(const RunConfig &cfg, std::ostream &out, std::ostream &err) {
    static const std::vector<std::pair<std::string, std::function<int(const RunConfig &, std::ostream &, std::ostream &)>>>
        commands = {
            {"frontier", cmd_frontier},
            {"tradeoff", cmd_tradeoff},
            {"verify", cmd_verify},
            {"simulate", cmd_simulate},
            {"holevo-gap", cmd_holevo_gap},
        };
    auto hit = std::find_if(commands.begin(), commands.end(), [&](const auto &c) { return c.first == cfg.command; });
    if (hit == commands.end()) {
        err << "error: unknown command '" << cfg.command << "'\n";
        return kUsageError;
    }
    try {
        if (cfg.out.empty()) {
            return hit->second(cfg, out, err);
        }
        std::ostringstream buffer;
        int code = hit->second(cfg, buffer, err);
        std::ofstream file(cfg.out, std::ios::binary);
        if (!file || !(file << buffer.str()) || !file.flush()) {
            err << "error: cannot write " << cfg.out << '\n';
            return kUsageError;
        }
        return code;
    } catch (const ValidationError &e) {
        err << "error: invalid input: " << e.what() << '\n';
    } catch (const DomainError &e) {
        err << "error: " << e.what() << '\n';
    } catch (const UsageError &e) {
        err << "error: " << e.what() << '\n';
    }
    return kUsageError;
}

}  // namespace qdisc::cli
