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

#include <cmath>
#include <numbers>

#include "gtest/gtest.h"

using namespace qdisc;

namespace {
constexpr double kPi = std::numbers::pi;
// sqrt(1 - 0.65^2 - 0.6^2), evaluated at 30 digits.
constexpr double kD0 = 0.466368952654440752;
}  // namespace

TEST(bloch, geometry_from_angles_axes) {
    auto ww = geometry_from_angles(kPi / 2, 0);
    EXPECT_NEAR(ww.d0, 0, 1e-15);
    EXPECT_DOUBLE_EQ(ww.d_ww, 1);
    EXPECT_DOUBLE_EQ(ww.d_wp, 0);

    auto wp = geometry_from_angles(0, kPi / 2);
    EXPECT_NEAR(wp.d0, 0, 1e-15);
    EXPECT_DOUBLE_EQ(wp.d_ww, 0);
    EXPECT_DOUBLE_EQ(wp.d_wp, 1);
}

TEST(bloch, geometry_from_angles_figure_parameters) {
    double alpha = std::asin(0.65);
    double phi = std::asin(0.6 / std::cos(alpha));
    auto g = geometry_from_angles(alpha, phi);
    EXPECT_NEAR(g.d_ww, 0.65, 1e-15);
    EXPECT_NEAR(g.d_wp, 0.6, 1e-15);
    EXPECT_NEAR(g.d0, kD0, 1e-12);
    EXPECT_NEAR(g.d0, std::sqrt(1 - 0.65 * 0.65 - 0.6 * 0.6), 1e-12);
    EXPECT_FALSE(validate_geometry(g).has_value());
}

TEST(bloch, geometry_from_angles_rejects_other_quadrants) {
    EXPECT_THROW(geometry_from_angles(-0.1, 0.2), DomainError);
    EXPECT_THROW(geometry_from_angles(0.2, kPi / 2 + 1e-9), DomainError);
    EXPECT_THROW(geometry_from_angles(NAN, 0.2), DomainError);
}

TEST(bloch, angle_grid_stays_on_sphere) {
    for (int a = 0; a <= 40; a++) {
        for (int p = 0; p <= 40; p++) {
            auto g = geometry_from_angles(a * kPi / 80, p * kPi / 80);
            EXPECT_NEAR(g.d0 * g.d0 + g.d_ww * g.d_ww + g.d_wp * g.d_wp, 1, 1e-12);
            for (const auto &label : all_labels(EnsembleMode::pure)) {
                EXPECT_NEAR(input_bloch(g, label).norm(), 1, 1e-12);
            }
        }
    }
}

TEST(bloch, input_bloch_examples) {
    auto ww = EnsembleGeometry::pure(1, 0);
    EXPECT_EQ(input_bloch(ww, InputLabel(+1, +1)), (BlochVector{0, 0, 1}));

    auto g = EnsembleGeometry::pure(0.65, 0.6);
    auto r = input_bloch(g, InputLabel(-1, +1));
    EXPECT_NEAR(r.x, kD0, 1e-15);
    EXPECT_DOUBLE_EQ(r.y, 0.6);
    EXPECT_DOUBLE_EQ(r.z, -0.65);
    EXPECT_NEAR(r.norm(), 1, 1e-12);
}

TEST(bloch, input_bloch_mode_mismatch) {
    auto pure = EnsembleGeometry::pure(0.65, 0.6);
    auto mixed = EnsembleGeometry::mixed(0.65, 0.6, 0.3);
    EXPECT_THROW(input_bloch(pure, InputLabel(1, 1, 1)), UsageError);
    EXPECT_THROW(input_bloch(mixed, InputLabel(1, 1)), UsageError);
}

TEST(bloch, mixed_box_norms) {
    for (double dwm : {0.0, 0.1, 0.3, kD0}) {
        auto g = EnsembleGeometry::mixed(0.65, 0.6, dwm);
        ASSERT_FALSE(validate_geometry(g).has_value()) << dwm;
        for (const auto &label : all_labels(EnsembleMode::mixed)) {
            double n = input_bloch(g, label).norm();
            EXPECT_LE(n, 1 + 1e-12);
            if (*label.b_wm() == 1) {
                EXPECT_NEAR(n, 1, 1e-12);
            }
        }
    }
}

TEST(bloch, mixed_geometry_beyond_ball_rejected) {
    auto g = EnsembleGeometry::mixed(0.65, 0.6, 0.5);
    EXPECT_NEAR(g.d0, kD0 - 0.5, 1e-15);
    auto v = validate_geometry(g);
    ASSERT_TRUE(v.has_value());
    EXPECT_EQ(v->constraint, "geometry.mixed_radius");
    EXPECT_THROW(require_valid(g), ValidationError);
    // Only the distances matter for the closed-form frontier.
    EXPECT_FALSE(validate_axes(g).has_value());
}

TEST(bloch, negative_offset_rejected_even_inside_radius) {
    // Hand-built with a negative offset; the sign check fires before the offset check.
    EnsembleGeometry g{-0.1, 0.3, 0.3, 0.2, EnsembleMode::mixed};
    auto v = validate_geometry(g);
    ASSERT_TRUE(v.has_value());
    EXPECT_EQ(v->constraint, "geometry.d0_sign");
}

TEST(bloch, validate_geometry_examples) {
    EXPECT_FALSE(validate_geometry(EnsembleGeometry::pure(0.65, 0.6)).has_value());

    auto bad = validate_geometry(EnsembleGeometry::pure(0.8, 0.8));
    ASSERT_TRUE(bad.has_value());
    EXPECT_EQ(bad->constraint, "geometry.pure_normalization");

    auto g = EnsembleGeometry::mixed(0.65, 0.6, 0.4);
    EXPECT_FALSE(validate_geometry(g).has_value());
    EXPECT_NEAR(g.d0, 0.0663689526544407523, 1e-12);

    auto out_of_range = validate_geometry(EnsembleGeometry::pure(1.2, 0));
    ASSERT_TRUE(out_of_range.has_value());
    EXPECT_EQ(out_of_range->constraint, "geometry.d_ww_range");

    EnsembleGeometry tampered = EnsembleGeometry::mixed(0.65, 0.6, 0.2);
    tampered.d0 += 0.01;
    auto off = validate_geometry(tampered);
    ASSERT_TRUE(off.has_value());
    EXPECT_EQ(off->constraint, "geometry.mixed_offset");
}

TEST(bloch, validation_tolerance_is_overridable) {
    EnsembleGeometry g = EnsembleGeometry::pure(0.65, 0.6);
    g.d0 += 1e-8;
    EXPECT_TRUE(validate_geometry(g).has_value());
    EXPECT_FALSE(validate_geometry(g, 1e-6).has_value());
}

TEST(bloch, trace_distance_examples) {
    EXPECT_DOUBLE_EQ(trace_distance({0, 0, 1}, {0, 0, -1}), 1);
    BlochVector r{0.1, -0.2, 0.3};
    EXPECT_EQ(trace_distance(r, r), 0);
}

TEST(bloch, trace_distance_between_inputs_is_the_flipped_distance) {
    auto g = EnsembleGeometry::mixed(0.65, 0.6, 0.3);
    for (const auto &label : all_labels(EnsembleMode::mixed)) {
        auto r = input_bloch(g, label);
        EXPECT_NEAR(trace_distance(r, input_bloch(g, InputLabel(-label.b_ww(), label.b_wp(), label.b_wm()))), 0.65,
                    1e-15);
        EXPECT_NEAR(trace_distance(r, input_bloch(g, InputLabel(label.b_ww(), -label.b_wp(), label.b_wm()))), 0.6,
                    1e-15);
        EXPECT_NEAR(trace_distance(r, input_bloch(g, InputLabel(label.b_ww(), label.b_wp(), -*label.b_wm()))), 0.3,
                    1e-15);
    }
}

TEST(bloch, input_label_signs_and_index) {
    EXPECT_THROW(InputLabel(0, 1), DomainError);
    EXPECT_THROW(InputLabel(1, 2), DomainError);
    EXPECT_THROW(InputLabel(1, 1, 3), DomainError);
    for (auto mode : {EnsembleMode::pure, EnsembleMode::mixed}) {
        auto labels = all_labels(mode);
        ASSERT_EQ(labels.size(), num_inputs(mode));
        for (std::size_t k = 0; k < labels.size(); k++) {
            EXPECT_EQ(labels[k].index(), k);
            EXPECT_EQ(InputLabel::from_index(k, mode), labels[k]);
        }
    }
    EXPECT_EQ(InputLabel(1, 1).index(), 0u);
    EXPECT_EQ(InputLabel(-1, 1).index(), 1u);
    EXPECT_EQ(InputLabel(1, -1, -1).index(), 6u);
    EXPECT_THROW(InputLabel(1, 1).bit(InputBit::wm), UsageError);
}
