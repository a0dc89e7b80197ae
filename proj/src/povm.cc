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

#include "qdisc/povm.h"

#include <algorithm>
#include <cmath>
#include <string>
#include <tuple>

namespace qdisc {

namespace {

void require_unit_interval(double v, const char *name) {
    if (!(v >= 0 && v <= 1)) {
        throw DomainError(std::string(name) + " must lie in [0, 1], got " + std::to_string(v));
    }
}

double clear_negative_zero(double v) {
    return v == 0 ? 0.0 : v;
}

bool same_direction(const BlochVector &a, const BlochVector &b) {
    return std::abs(a.x - b.x) <= kMergeTolerance && std::abs(a.y - b.y) <= kMergeTolerance &&
           std::abs(a.z - b.z) <= kMergeTolerance;
}

}  // namespace

double Povm::weight_sum() const {
    double total = 0;
    for (const auto &e : elements_) {
        total += e.mu;
    }
    return total;
}

BlochVector Povm::weighted_direction_sum() const {
    BlochVector total;
    for (const auto &e : elements_) {
        total = total + e.direction * e.mu;
    }
    return total;
}

Povm canonicalize(std::vector<PovmElement> elements) {
    std::vector<PovmElement> merged;
    for (const auto &e : elements) {
        if (!(e.mu > 0)) {
            continue;
        }
        auto hit = std::find_if(merged.begin(), merged.end(), [&](const PovmElement &m) {
            return same_direction(m.direction, e.direction);
        });
        if (hit == merged.end()) {
            merged.push_back(e);
        } else {
            hit->mu += e.mu;
        }
    }
    for (auto &e : merged) {
        e.direction = {
            clear_negative_zero(e.direction.x),
            clear_negative_zero(e.direction.y),
            clear_negative_zero(e.direction.z),
        };
    }
    std::sort(merged.begin(), merged.end(), [](const PovmElement &a, const PovmElement &b) {
        return std::tie(a.direction.z, a.direction.y, a.direction.x, a.mu) >
               std::tie(b.direction.z, b.direction.y, b.direction.x, b.mu);
    });
    return Povm(std::move(merged));
}

std::optional<Violation> validate_povm(const Povm &p, double tol) {
    if (p.size() == 0) {
        return Violation{"povm.empty", std::nullopt, 0, "a POVM needs at least one element"};
    }
    for (std::size_t j = 0; j < p.size(); j++) {
        const auto &e = p[j];
        if (!std::isfinite(e.mu) || e.mu < -tol) {
            return Violation{"povm.weight_sign", j, e.mu, "element weight must be nonnegative"};
        }
        if (auto v = validate_bloch(e.direction, tol)) {
            v->constraint = "povm.direction_norm";
            v->index = j;
            return v;
        }
    }
    double total = p.weight_sum();
    if (std::abs(total - 2) > tol) {
        return Violation{"povm.weight_sum", std::nullopt, total, "weights must sum to 2 (resolution of identity)"};
    }
    double drift = p.weighted_direction_sum().norm();
    if (drift > tol) {
        return Violation{"povm.direction_sum", std::nullopt, drift, "weighted directions must sum to zero"};
    }
    return std::nullopt;
}

const Povm &require_valid(const Povm &p, double tol) {
    if (auto v = validate_povm(p, tol)) {
        throw ValidationError(*v);
    }
    return p;
}

Refinement refine_traced(const Povm &p) {
    std::vector<PovmElement> out;
    std::vector<std::size_t> parent;
    for (std::size_t j = 0; j < p.size(); j++) {
        const auto &e = p[j];
        if (!(e.mu > 0)) {
            continue;
        }
        double r = e.direction.norm();
        if (std::abs(r - 1) <= kMergeTolerance) {
            out.push_back(e);
            parent.push_back(j);
            continue;
        }
        BlochVector axis = r > 0 ? e.direction * (1 / r) : BlochVector{0, 0, 1};
        out.push_back({e.mu * (1 + r) / 2, axis});
        out.push_back({e.mu * (1 - r) / 2, -axis});
        parent.push_back(j);
        parent.push_back(j);
    }
    return {Povm(std::move(out)), std::move(parent)};
}

Povm refine(const Povm &p) {
    auto traced = refine_traced(p);
    return canonicalize({traced.povm.elements().begin(), traced.povm.elements().end()});
}

Povm optimal_family(double mu, double z0) {
    require_unit_interval(mu, "mu");
    require_unit_interval(z0, "z0");
    double y0 = std::sqrt(1 - z0 * z0);
    return canonicalize({
        {mu, {0, y0, z0}},
        {mu, {0, -y0, -z0}},
        {1 - mu, {0, y0, -z0}},
        {1 - mu, {0, -y0, z0}},
    });
}

Povm corner_family(double mu, const BlochVector &corner) {
    require_unit_interval(mu, "mu");
    if (std::abs(corner.norm() - 1) > kDefaultTolerance) {
        throw DomainError("corner direction must have unit norm");
    }
    double x0 = std::abs(corner.x), y0 = std::abs(corner.y), z0 = std::abs(corner.z);
    std::vector<PovmElement> elements;
    for (int sx : {1, -1}) {
        for (int sy : {1, -1}) {
            for (int sz : {1, -1}) {
                double w = sy == sz ? mu / 2 : (1 - mu) / 2;
                elements.push_back({w, {sx * x0, sy * y0, sz * z0}});
            }
        }
    }
    return canonicalize(std::move(elements));
}

Povm ww_detector_scheme(double efficiency) {
    require_unit_interval(efficiency, "E");
    return optimal_family(0.5, efficiency);
}

Povm vn_scheme(double t_out, VnOrientation orientation) {
    if (!(t_out >= 0.5 && t_out <= 1)) {
        throw DomainError("T_out must lie in [1/2, 1], got " + std::to_string(t_out));
    }
    double z0 = std::abs(1 - 2 * t_out);
    return optimal_family(orientation == VnOrientation::aligned ? 1.0 : 0.0, z0);
}

Povm two_detector_scheme(double e1, double e2) {
    require_unit_interval(e1, "E1");
    require_unit_interval(e2, "E2");
    double z0 = e1;
    double y0 = std::sqrt(1 - e1 * e1) * e2;
    double x0 = std::sqrt((1 - e1 * e1) * (1 - e2 * e2));
    return corner_family(0.5, {x0, y0, z0});
}

}  // namespace qdisc
