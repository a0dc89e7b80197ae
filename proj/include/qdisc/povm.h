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

#ifndef QDISC_POVM_H
#define QDISC_POVM_H

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "qdisc/bloch.h"

namespace qdisc {

/// One POVM operator A = mu (1 + R.sigma) / 2.
struct PovmElement {
    double mu = 0;
    BlochVector direction;

    bool operator==(const PovmElement &) const = default;
};

/// A qubit POVM written as weighted points of the Bloch ball.
///
/// Element order is the outcome order. Scheme constructors and random_povm
/// return canonical POVMs (see canonicalize); hand-built ones keep the order
/// they were given in.
class Povm {
   public:
    Povm() = default;
    explicit Povm(std::vector<PovmElement> elements) : elements_(std::move(elements)) {
    }

    std::span<const PovmElement> elements() const {
        return elements_;
    }
    std::size_t size() const {
        return elements_.size();
    }
    const PovmElement &operator[](std::size_t j) const {
        return elements_[j];
    }

    double weight_sum() const;
    BlochVector weighted_direction_sum() const;

    bool operator==(const Povm &) const = default;

   private:
    std::vector<PovmElement> elements_;
};

/// Directions closer than this are treated as identical by canonicalize.
inline constexpr double kMergeTolerance = 1e-12;

/// Drops zero-weight elements, merges elements with identical directions by
/// summing weights, clears negative zeros and sorts by (z, y, x, mu) descending.
Povm canonicalize(std::vector<PovmElement> elements);

std::optional<Violation> validate_povm(const Povm &p, double tol = kDefaultTolerance);
const Povm &require_valid(const Povm &p, double tol = kDefaultTolerance);

/// Result of splitting interior elements onto the sphere, keeping track of
/// which input element each output element came from.
struct Refinement {
    Povm povm;
    std::vector<std::size_t> parent;
};

/// Splits every interior element (mu, R) into (mu (1 +- |R|) / 2, +-R/|R|).
/// Elements on the sphere pass through, zero-weight elements are dropped and
/// R = 0 splits along z. Output is neither merged nor reordered.
Refinement refine_traced(const Povm &p);

/// refine_traced followed by canonicalize. Idempotent.
Povm refine(const Povm &p);

/// The Pareto-optimal family: directions (0, +-y0, +-z0) with y0 = sqrt(1 - z0^2),
/// weight mu on (+,+) and (-,-), 1 - mu on (+,-) and (-,+).
Povm optimal_family(double mu, double z0);

/// Eight-corner generalisation used on mixed ensembles: directions
/// (+-x0, +-y0, +-z0) for a unit `corner`, weight mu/2 where sign(y) = sign(z)
/// and (1 - mu)/2 otherwise. Reduces to optimal_family when corner.x = 0.
Povm corner_family(double mu, const BlochVector &corner);

/// Which-way detector of efficiency E: optimal_family(1/2, E).
Povm ww_detector_scheme(double efficiency);

enum class VnOrientation {
    /// Projects on +-(0, y0, z0).
    aligned,
    /// Projects on +-(0, y0, -z0).
    crossed,
};

/// Output beam splitter of transmissivity t_out in [1/2, 1]:
/// a projective measurement in the y-z plane with z0 = |1 - 2 t_out|.
Povm vn_scheme(double t_out, VnOrientation orientation = VnOrientation::aligned);

/// Two inefficient detectors: corner_family(1/2, (x0, y0, z0)) with z0 = E1,
/// y0 = sqrt(1 - E1^2) E2, x0 = sqrt((1 - E1^2)(1 - E2^2)).
Povm two_detector_scheme(double e1, double e2);

}  // namespace qdisc

#endif
