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

#include <cstdlib>
#include <iostream>

#include "CLI11.hpp"
#include "qdisc/cli.h"

using qdisc::cli::RunConfig;

namespace {

void add_geometry(CLI::App *app, RunConfig &cfg) {
    app->add_option("--dww", cfg.d_ww, "which-way distinguishability d_ww");
    app->add_option("--dwp", cfg.d_wp, "which-phase distinguishability d_wp");
    app->add_option("--dwm", cfg.d_wm, "mixing distance d_wm (selects the 8-state ensemble)");
    app->add_option("--alpha", cfg.alpha, "ensemble angle alpha in [0, pi/2]");
    app->add_option("--phi", cfg.phi, "ensemble phase phi in [0, pi/2]");
}

void add_measurement(CLI::App *app, RunConfig &cfg) {
    app->add_option("--scheme", cfg.scheme, "ww | vn | two | family");
    app->add_option("--E", cfg.efficiency, "which-way detector efficiency");
    app->add_option("--E1", cfg.e1, "first detector efficiency (two-detector scheme)");
    app->add_option("--E2", cfg.e2, "second detector efficiency (two-detector scheme)");
    app->add_option("--Tout", cfg.t_out, "output beam splitter transmissivity in [1/2, 1]");
    app->add_option("--orientation", cfg.orientation, "vn scheme sign pairing: aligned | crossed");
    app->add_option("--mu", cfg.mu, "optimal-family weight parameter");
    app->add_option("--z0", cfg.z0, "optimal-family z component");
    app->add_option("--povm", cfg.povm_path, "POVM JSON file");
}

void add_output(CLI::App *app, RunConfig &cfg) {
    app->add_option("--out", cfg.out, "output file (default stdout)");
    app->add_option("--format", cfg.format, "csv | json");
}

void add_seed(CLI::App *app, RunConfig &cfg) {
    app->add_option("--seed", cfg.seed, "master seed")->envname(qdisc::cli::kSeedEnv);
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Path-phase complementarity of qubit state discrimination"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto *frontier = app.add_subcommand("frontier", "Pareto frontier of the guessing probabilities (CSV)");
    add_geometry(frontier, cfg);
    frontier->add_option("--mu", cfg.mu, "optimal-family weight parameter (default 0.5)");
    frontier->add_option("--grid", cfg.grid, "grid points per axis (default 51 pure, 21 mixed)");
    add_output(frontier, cfg);

    auto *tradeoff = app.add_subcommand("tradeoff", "Information decomposition of the WW-detector scheme (CSV)");
    add_geometry(tradeoff, cfg);
    tradeoff->add_option("--grid", cfg.grid, "number of efficiencies in [0, 1] (default 101)");
    add_output(tradeoff, cfg);

    auto *holevo = app.add_subcommand("holevo-gap", "Exact information frontier against the Holevo bound (CSV)");
    add_geometry(holevo, cfg);
    holevo->add_option("--grid", cfg.grid, "number of z0 values in [0, 1] (default 101)");
    add_output(holevo, cfg);

    auto *simulate = app.add_subcommand("simulate", "Monte Carlo guessing game (JSON)");
    add_geometry(simulate, cfg);
    add_measurement(simulate, cfg);
    simulate->add_option("--rounds", cfg.rounds, "number of rounds (default 1000000)");
    add_seed(simulate, cfg);
    simulate->add_option("--out", cfg.out, "output file (default stdout)");

    auto *verify = app.add_subcommand("verify", "Run every verification check (JSON, exit 1 on failure)");
    verify->add_option("--dww", cfg.d_ww, "which-way distinguishability d_ww");
    verify->add_option("--dwp", cfg.d_wp, "which-phase distinguishability d_wp");
    verify->add_option("--dwm", cfg.d_wm, "mixing distance for the mixed-mode checks (default 0.3)");
    verify->add_option("--samples", cfg.samples, "random POVMs per sweep (default 100000)");
    verify->add_option("--rounds", cfg.rounds, "Monte Carlo rounds per seed (default 1000000)");
    verify->add_option("--seeds", cfg.seeds, "Monte Carlo repetitions (default 20)");
    verify->add_option("--povm", cfg.povm_path, "extra POVM fixture to validate and check");
    add_seed(verify, cfg);
    verify->add_option("--out", cfg.out, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return qdisc::cli::kUsageError;
    }
    cfg.command = app.get_subcommands().front()->get_name();
    return qdisc::cli::run_command(cfg, std::cout, std::cerr);
}
