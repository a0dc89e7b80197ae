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

#include "qdisc/bloch.h"

#include <algorithm>
#include <numbers>
#include <sstream>
#include <string>
#include <utility>

namespace qdisc {

std::string Violation::str() const {
    std::ostringstream out;
    out << constraint;
    if (index) {
        out << " [index " << *index << "]";
    }
    out << ": " << detail << " (value " << value << ")";
    return out.str();
}

ValidationError::ValidationError(Violation v) : std::runtime_error(v.str()), violation_(std::move(v)) {
}

namespace {

int checked_sign(int s, const char *name) {
    if (s != 1 && s != -1) {
        throw DomainError(std::string(name) + " must be +1 or -1, got " + std::to_string(s));
    }
    return s;
}

double pure_offset(double d_ww, double d_wp) {
    double rest = 1 - (d_ww * d_ww + d_wp * d_wp);
    return rest > 0 ? std::sqrt(rest) : 0.0;
}

}  // namespace

InputLabel::InputLabel(int b_ww, int b_wp, std::optional<int> b_wm)
    : b_ww_(checked_sign(b_ww, "b_ww")), b_wp_(checked_sign(b_wp, "b_wp")) {
    if (b_wm) {
        b_wm_ = checked_sign(*b_wm, "b_wm");
    }
}

int InputLabel::bit(InputBit b) const {
    switch (b) {
        case InputBit::ww:
            return b_ww_;
        case InputBit::wp:
            return b_wp_;
        case InputBit::wm:
            if (!b_wm_) {
                throw UsageError("pure-mode label has no b_wm bit");
            }
            return *b_wm_;
    }
    return 0;
}

std::size_t InputLabel::index() const {
    std::size_t k = 0;
    if (b_ww_ < 0) {
        k |= 1;
    }
    if (b_wp_ < 0) {
        k |= 2;
    }
    if (b_wm_ && *b_wm_ < 0) {
        k |= 4;
    }
    return k;
}

InputLabel InputLabel::from_index(std::size_t index, EnsembleMode mode) {
    if (index >= num_inputs(mode)) {
        throw UsageError("input index " + std::to_string(index) + " out of range");
    }
    auto sign = [&](unsigned bit) { return (index >> bit) & 1 ? -1 : 1; };
    if (mode == EnsembleMode::pure) {
        return InputLabel(sign(0), sign(1));
    }
    return InputLabel(sign(0), sign(1), sign(2));
}

std::size_t num_bits(EnsembleMode mode) {
    return mode == EnsembleMode::pure ? 2 : 3;
}

std::size_t num_inputs(EnsembleMode mode) {
    return std::size_t{1} << num_bits(mode);
}

EnsembleGeometry EnsembleGeometry::pure(double d_ww, double d_wp) {
    return {pure_offset(d_ww, d_wp), d_ww, d_wp, 0.0, EnsembleMode::pure};
}

EnsembleGeometry EnsembleGeometry::mixed(double d_ww, double d_wp, double d_wm) {
    return {pure_offset(d_ww, d_wp) - d_wm, d_ww, d_wp, d_wm, EnsembleMode::mixed};
}

double EnsembleGeometry::distance(InputBit b) const {
    switch (b) {
        case InputBit::ww:
            return d_ww;
        case InputBit::wp:
            return d_wp;
        case InputBit::wm:
            return d_wm;
    }
    return 0;
}

EnsembleGeometry geometry_from_angles(double alpha, double phi) {
    constexpr double kQuarter = std::numbers::pi / 2;
    if (!(alpha >= 0 && alpha <= kQuarter)) {
        throw DomainError("alpha must lie in [0, pi/2]");
    }
    if (!(phi >= 0 && phi <= kQuarter)) {
        throw DomainError("phi must lie in [0, pi/2]");
    }
    return {std::cos(alpha) * std::cos(phi), std::sin(alpha), std::cos(alpha) * std::sin(phi), 0.0,
            EnsembleMode::pure};
}

BlochVector input_bloch(const EnsembleGeometry &geom, const InputLabel &label) {
    if (label.mode() != geom.mode) {
        throw UsageError(
            geom.mode == EnsembleMode::pure ? "mixed-mode label used with a pure geometry"
                                            : "pure-mode label used with a mixed geometry");
    }
    double x = geom.d0;
    if (geom.mode == EnsembleMode::mixed) {
        x += *label.b_wm() * geom.d_wm;
    }
    return {x, label.b_wp() * geom.d_wp, label.b_ww() * geom.d_ww};
}

std::vector<InputLabel> all_labels(EnsembleMode mode) {
    std::vector<InputLabel> out;
    for (std::size_t k = 0; k < num_inputs(mode); k++) {
        out.push_back(InputLabel::from_index(k, mode));
    }
    return out;
}

double trace_distance(const BlochVector &a, const BlochVector &b) {
    return (a - b).norm() / 2;
}

std::optional<Violation> validate_bloch(const BlochVector &r, double tol) {
    double n = r.norm();
    if (!std::isfinite(n)) {
        return Violation{"bloch.finite", std::nullopt, n, "component is not finite"};
    }
    if (n > 1 + tol) {
        return Violation{"bloch.norm", std::nullopt, n, "Bloch vector lies outside the unit ball"};
    }
    return std::nullopt;
}

std::optional<Violation> validate_axes(const EnsembleGeometry &geom, double tol) {
    const std::pair<const char *, double> axes[] = {
        {"geometry.d_ww_range", geom.d_ww},
        {"geometry.d_wp_range", geom.d_wp},
        {"geometry.d_wm_range", geom.d_wm},
    };
    for (const auto &[name, d] : axes) {
        if (!std::isfinite(d) || d < -tol || d > 1 + tol) {
            return Violation{name, std::nullopt, d, "distance must lie in [0, 1]"};
        }
    }
    if (geom.mode == EnsembleMode::pure && std::abs(geom.d_wm) > tol) {
        return Violation{"geometry.pure_d_wm", std::nullopt, geom.d_wm, "pure geometry must have d_wm = 0"};
    }
    return std::nullopt;
}

std::optional<Violation> validate_geometry(const EnsembleGeometry &geom, double tol) {
    if (auto v = validate_axes(geom, tol)) {
        return v;
    }
    double planar = geom.d_ww * geom.d_ww + geom.d_wp * geom.d_wp;
    if (geom.mode == EnsembleMode::pure) {
        double total = geom.d0 * geom.d0 + planar;
        if (std::abs(total - 1) > tol) {
            return Violation{
                "geometry.pure_normalization", std::nullopt, total, "pure states need d0^2 + d_ww^2 + d_wp^2 = 1"};
        }
        if (geom.d0 < -tol) {
            return Violation{"geometry.d0_sign", std::nullopt, geom.d0, "d0 must be nonnegative"};
        }
    } else {
        double total = planar + geom.d_wm * geom.d_wm;
        if (total > 1 + tol) {
            return Violation{
                "geometry.mixed_radius", std::nullopt, total, "mixed states need d_ww^2 + d_wp^2 + d_wm^2 <= 1"};
        }
        double expected = std::sqrt(std::max(0.0, 1 - planar)) - geom.d_wm;
        if (geom.d0 < -tol) {
            return Violation{"geometry.d0_sign", std::nullopt, geom.d0, "d0 = sqrt(1 - d_ww^2 - d_wp^2) - d_wm is negative"};
        }
        if (std::abs(geom.d0 - expected) > tol) {
            return Violation{
                "geometry.mixed_offset", std::nullopt, geom.d0, "d0 must equal sqrt(1 - d_ww^2 - d_wp^2) - d_wm"};
        }
    }
    for (const auto &label : all_labels(geom.mode)) {
        if (auto v = validate_bloch(input_bloch(geom, label), tol)) {
            v->constraint = "geometry.input_norm";
            v->index = label.index();
            return v;
        }
    }
    return std::nullopt;
}

const EnsembleGeometry &require_valid(const EnsembleGeometry &geom, double tol) {
    if (auto v = validate_geometry(geom, tol)) {
        throw ValidationError(*v);
    }
    return geom;
}

}  // namespace qdisc
