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

#ifndef QDISC_BLOCH_H
#define QDISC_BLOCH_H

#include <cmath>
#include <cstddef>
#include <optional>
#include <vector>

#include "qdisc/errors.h"

namespace qdisc {

/// Default tolerance used when validating geometries and POVMs.
inline constexpr double kDefaultTolerance = 1e-9;

/// A real 3-vector in the Bloch ball. Represents either a qubit state or the
/// direction of a POVM element.
struct BlochVector {
    double x = 0;
    double y = 0;
    double z = 0;

    double dot(const BlochVector &o) const {
        return x * o.x + y * o.y + z * o.z;
    }
    double norm() const {
        return std::sqrt(dot(*this));
    }
    BlochVector operator+(const BlochVector &o) const {
        return {x + o.x, y + o.y, z + o.z};
    }
    BlochVector operator-(const BlochVector &o) const {
        return {x - o.x, y - o.y, z - o.z};
    }
    BlochVector operator-() const {
        return {-x, -y, -z};
    }
    BlochVector operator*(double s) const {
        return {x * s, y * s, z * s};
    }
    bool operator==(const BlochVector &) const = default;
};

/// The three independent bits Alice can encode. The numeric value is the bit
/// position used by input indices.
enum class InputBit : unsigned { ww = 0, wp = 1, wm = 2 };

enum class EnsembleMode { pure, mixed };

/// Alice's choice of input state. Each present field is +1 or -1.
class InputLabel {
   public:
    /// Throws DomainError unless every sign is +1 or -1.
    InputLabel(int b_ww, int b_wp, std::optional<int> b_wm = std::nullopt);

    int b_ww() const {
        return b_ww_;
    }
    int b_wp() const {
        return b_wp_;
    }
    std::optional<int> b_wm() const {
        return b_wm_;
    }
    int bit(InputBit b) const;
    EnsembleMode mode() const {
        return b_wm_ ? EnsembleMode::mixed : EnsembleMode::pure;
    }

    /// Index into joint tables: bit k of the index is set when that input bit is -1.
    std::size_t index() const;
    static InputLabel from_index(std::size_t index, EnsembleMode mode);

    bool operator==(const InputLabel &) const = default;

   private:
    int b_ww_;
    int b_wp_;
    std::optional<int> b_wm_;
};

/// Distances describing the rectangle (pure, 4 states) or box (mixed, 8
/// states) of input Bloch vectors.
///
/// This is a plain value: constructing one does not validate it. Use
/// validate_geometry or require_valid before trusting the invariants.
struct EnsembleGeometry {
    double d0 = 0;
    double d_ww = 0;
    double d_wp = 0;
    double d_wm = 0;
    EnsembleMode mode = EnsembleMode::pure;

    /// Four pure states; d0 = sqrt(1 - d_ww^2 - d_wp^2), or 0 when that is negative.
    static EnsembleGeometry pure(double d_ww, double d_wp);
    /// Eight states; d0 = sqrt(1 - d_ww^2 - d_wp^2) - d_wm (may come out negative).
    static EnsembleGeometry mixed(double d_ww, double d_wp, double d_wm);

    std::size_t num_bits() const {
        return mode == EnsembleMode::pure ? 2 : 3;
    }
    std::size_t num_inputs() const {
        return std::size_t{1} << num_bits();
    }
    double distance(InputBit b) const;
};

std::size_t num_bits(EnsembleMode mode);
std::size_t num_inputs(EnsembleMode mode);

/// Pure geometry with d_ww = sin(alpha), d_wp = cos(alpha) sin(phi), d0 = cos(alpha) cos(phi).
/// Both angles must lie in [0, pi/2].
EnsembleGeometry geometry_from_angles(double alpha, double phi);

/// Bloch vector (d0 + b_wm d_wm, b_wp d_wp, b_ww d_ww) of one input state.
/// Throws UsageError if the label mode differs from the geometry mode.
BlochVector input_bloch(const EnsembleGeometry &geom, const InputLabel &label);

/// All input labels of a mode, ordered by InputLabel::index.
std::vector<InputLabel> all_labels(EnsembleMode mode);

/// Half the Euclidean distance between two Bloch vectors.
double trace_distance(const BlochVector &a, const BlochVector &b);

std::optional<Violation> validate_bloch(const BlochVector &r, double tol = kDefaultTolerance);
std::optional<Violation> validate_geometry(const EnsembleGeometry &geom, double tol = kDefaultTolerance);

/// Checks only that every distance lies in [0, 1]. The closed-form frontier
/// depends on nothing else.
std::optional<Violation> validate_axes(const EnsembleGeometry &geom, double tol = kDefaultTolerance);

/// Returns geom, or throws ValidationError.
const EnsembleGeometry &require_valid(const EnsembleGeometry &geom, double tol = kDefaultTolerance);

}  // namespace qdisc

#endif
