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

#ifndef QDISC_JSON_H
#define QDISC_JSON_H

#include <string>

#include "json.hpp"
#include "qdisc/information.h"
#include "qdisc/oracle.h"

namespace qdisc {

using Json = nlohmann::ordered_json;

/// {"elements":[{"mu":..., "R":[x, y, z]}, ...]} in the POVM's own element order.
Json povm_to_json(const Povm &p);
/// Parses the format written by povm_to_json. Does not validate or reorder;
/// throws UsageError on malformed input.
Povm povm_from_json(const Json &j);
Povm read_povm_file(const std::string &path);

Json to_json(const GuessProbabilities &gp);
/// Keys I_ww, I_wp, I_wm, I_cross, I_in_out, holevo, residual, then the
/// indicator-based extras.
Json to_json(const InfoReport &rep);
Json to_json(const SweepReport &rep);
Json to_json(const GameResult &res);

}  // namespace qdisc

#endif
