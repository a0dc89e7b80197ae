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

#ifndef QDISC_CLI_H
#define QDISC_CLI_H

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "qdisc/bloch.h"
#include "qdisc/povm.h"

namespace qdisc::cli {

enum ExitCode : int {
    kPass = 0,
    kCheckFailure = 1,
    kUsageError = 2,
};

/// Environment variable holding the default seed.
inline constexpr const char *kSeedEnv = "QDISC_SEED";
inline constexpr std::uint64_t kFallbackSeed = 1;

struct RunConfig {
    std::string command;

    // Geometry: either distances or angles. Unset distances default to the
    // d_ww = 0.65, d_wp = 0.6 ensemble; setting d_wm selects mixed mode.
    std::optional<double> d_ww;
    std::optional<double> d_wp;
    std::optional<double> d_wm;
    std::optional<double> alpha;
    std::optional<double> phi;

    // Measurement.
    std::string scheme;  // ww | vn | two | family; empty when a POVM file is given
    std::optional<double> efficiency;
    std::optional<double> e1;
    std::optional<double> e2;
    std::optional<double> t_out;
    std::string orientation = "aligned";
    std::optional<double> mu;
    std::optional<double> z0;
    std::string povm_path;

    std::size_t grid = 0;  // 0 picks the command default
    std::size_t samples = 100000;
    std::size_t rounds = 1000000;
    std::size_t seeds = 20;
    std::uint64_t seed = kFallbackSeed;

    std::string out;  // empty writes to stdout
    std::string format = "csv";
};

/// Builds the geometry described by the config (not validated).
EnsembleGeometry geometry_from_config(const RunConfig &cfg);
/// Builds the POVM described by --povm or --scheme (not validated).
Povm povm_from_config(const RunConfig &cfg);

/// Optimal-family samples along the Pareto frontier.
/// CSV header `mu,z0,y0,P_ww,P_wp[,P_wm],lhs`.
int cmd_frontier(const RunConfig &cfg, std::ostream &out, std::ostream &err);
/// Information decomposition of the which-way detector scheme over E in [0, 1].
/// CSV header `E,I_ww,I_wp,I_cross,I_in_out,holevo`.
int cmd_tradeoff(const RunConfig &cfg, std::ostream &out, std::ostream &err);
/// Runs every verification check and writes a JSON report.
int cmd_verify(const RunConfig &cfg, std::ostream &out, std::ostream &err);
/// Monte Carlo game; writes GameResult JSON.
int cmd_simulate(const RunConfig &cfg, std::ostream &out, std::ostream &err);
/// Exact WW/WP information frontier against the Holevo-derived bound.
/// CSV header `z0,I_ww,I_wp_max_exact,I_wp_bound`.
int cmd_holevo_gap(const RunConfig &cfg, std::ostream &out, std::ostream &err);

/// Dispatches on cfg.command, maps exceptions to exit codes and honours cfg.out.
int run_command(const RunConfig &cfg, std::ostream &out, std::ostream &err);

}  // namespace qdisc::cli

#endif
