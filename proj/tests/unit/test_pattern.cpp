// SPDX-License-Identifier: Apache-2.0
//
// beamlab - beamforming analysis for concentric circular and planar arrays
// Copyright (C) 2026 The beamlab authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include <catch2/catch_amalgamated.hpp>

#include "beamlab/errors.hpp"
#include "beamlab/pattern.hpp"
#include "oracles.hpp"

#include <cmath>
#include <numbers>

using namespace beamlab;
using Catch::Approx;

namespace
{
    const SteeringTarget steer{30.0, 60.0};
}

TEST_CASE("array_factor - phases vanish at the steering direction")
{
    const auto ucca = build_ucca({5, 2.0, true});
    const auto f = array_factor(ucca, steer, 30.0, 60.0);
    CHECK(f.real() == 98.0);
    CHECK(f.imag() == 0.0);

    const auto rpa = build_rpa({10, 10, 0.5, 0.5});
    CHECK(std::abs(array_factor(rpa, steer, 30.0, 60.0)) == Approx(100.0).epsilon(1e-12));
}

TEST_CASE("array_factor - single element is isotropic")
{
    const auto one = build_rpa({1, 1, 0.5, 0.5});
    for (double t : {0.0, 17.0, 45.0, 90.0})
        for (double p : {0.0, 33.0, 180.0, 359.0})
        {
            const auto f = array_factor(one, {12.0, 250.0}, t, p);
            CHECK(f.real() == 1.0);
            CHECK(f.imag() == 0.0);
        }
}

TEST_CASE("array_factor - agrees with ring-form concentric factor")
{
    for (double d : {1.0, 2.0, 3.0})
    {
        const auto layout = build_ucca({5, d, true});
        for (double t = 0.0; t <= 90.0; t += 7.5)
            for (double p = 0.0; p < 360.0; p += 11.0)
            {
                const auto ours = array_factor(layout, steer, t, p);
                const auto ref = oracle::ucca_factor(5, d, true, steer.theta_deg, steer.phi_deg, t, p);
                CHECK(std::abs(ours - ref) < 1e-9);
            }
    }
}

TEST_CASE("array_factor - agrees with grid-form planar factor")
{
    const auto layout = build_rpa({10, 8, 0.5, 0.7});
    for (double t = 0.0; t <= 90.0; t += 7.5)
        for (double p = 0.0; p < 360.0; p += 11.0)
        {
            const auto ours = array_factor(layout, {40.0, 300.0}, t, p);
            const auto ref = oracle::rpa_factor(10, 8, 0.5, 0.7, 40.0, 300.0, t, p);
            CHECK(std::abs(ours - ref) < 1e-9);
        }
}

TEST_CASE("ring-form and position-form phases agree on a 1 degree grid")
{
    const UccaSpec spec{5, 3.0, true};
    const auto layout = build_ucca(spec);
    const double u0 = std::sin(oracle::rad(30.0)) * std::cos(oracle::rad(60.0));
    const double v0 = std::sin(oracle::rad(30.0)) * std::sin(oracle::rad(60.0));
    double worst = 0.0;
    for (int t = 0; t <= 90; ++t)
        for (int p = 0; p < 360; ++p)
        {
            const double u = std::sin(oracle::rad(t)) * std::cos(oracle::rad(p));
            const double v = std::sin(oracle::rad(t)) * std::sin(oracle::rad(p));
            std::size_t idx = 1;
            for (unsigned i = 1; i <= spec.rings; ++i)
                for (std::size_t j = 0; j < layout.ring_sizes()[i - 1]; ++j, ++idx)
                {
                    const auto &e = layout.elements()[idx];
                    const double pos = 2.0 * oracle::pi * (e.x_wl * (u - u0) + e.y_wl * (v - v0));
                    const double ring = oracle::ring_phase(i, j, spec.spacing_wl, 30.0, 60.0, t, p);
                    worst = std::max(worst, std::abs(pos - ring));
                }
        }
    CHECK(worst < 1e-10);
}

TEST_CASE("normalized_power - 0 dB at the steering direction")
{
    const ArrayLayout layouts[] = {build_ucca({5, 1.0, true}), build_ucca({5, 3.0, false}), build_ucca({2, 0.5, true}),
                                   build_rpa({10, 10, 0.5, 0.5}), build_rpa({3, 9, 1.0, 0.25}), build_rpa({1, 1, 0.5, 0.5})};
    const SteeringTarget targets[] = {{30.0, 60.0}, {0.0, 0.0}, {89.0, 359.5}, {45.0, 200.0}};
    for (const auto &l : layouts)
        for (const auto &s : targets)
            CHECK(std::abs(normalized_power(l, s, s.theta_deg, s.phi_deg)) < 1e-12);
}

TEST_CASE("normalized_power - two-element endfire null")
{
    // 1 + exp(i pi) vanishes at endfire for broadside steering and half-wave spacing
    const auto pair = build_rpa({2, 1, 0.5, 0.5});
    CHECK(normalized_power(pair, {0.0, 0.0}, 90.0, 0.0) < -250.0);
    CHECK(normalized_power(pair, {0.0, 0.0}, 90.0, 180.0) < -250.0);
    CHECK(normalized_power(pair, {0.0, 0.0}, 90.0, 90.0) == Approx(0.0).margin(1e-12));
}

TEST_CASE("normalized_power - degenerate weighting is a domain error")
{
    const auto pair = build_rpa({2, 1, 0.5, 0.5}).with_weights({1.0, -1.0});
    CHECK_THROWS_AS(normalized_power(pair, {0.0, 0.0}, 10.0, 0.0), DomainError);
    CHECK_THROWS_AS(sample_cut(pair, {0.0, 0.0}, CutPlane::Elevation, {0.0, 90.0}, 1.0), DomainError);
}

TEST_CASE("sample_grid - global maximum at the steering direction")
{
    const ArrayLayout layouts[] = {build_ucca({5, 2.0, true}), build_ucca({5, 3.0, true}), build_rpa({10, 10, 0.5, 0.5})};
    const SteeringTarget targets[] = {{30.0, 60.0}, {15.0, 300.0}, {70.0, 120.0}};
    const auto grid = AngularGrid::uniform({0.0, 90.0}, {0.0, 359.0}, 1.0);
    for (const auto &l : layouts)
        for (const auto &s : targets)
        {
            const auto pg = sample_grid(l, s, grid);
            const auto it = std::max_element(pg.power_db.begin(), pg.power_db.end());
            const std::size_t i = std::size_t(it - pg.power_db.begin());
            CHECK(grid.theta_deg[i / grid.phi_deg.size()] == s.theta_deg);
            CHECK(grid.phi_deg[i % grid.phi_deg.size()] == s.phi_deg);
            CHECK(*it == Approx(0.0).margin(1e-12));
        }
}

TEST_CASE("array_factor - bounded by the weight magnitude sum")
{
    const auto layout = build_ucca({5, 2.0, true});
    for (double t = 0.0; t <= 90.0; t += 1.0)
        for (double p = 0.0; p < 360.0; p += 3.0)
            CHECK(std::abs(array_factor(layout, steer, t, p)) <= 98.0 * (1.0 + 1e-12));
}

TEST_CASE("array_factor - azimuth periodicity")
{
    const auto layout = build_ucca({5, 2.0, true});
    const SteeringTarget broadside{0.0, 0.0};
    for (double p = 0.0; p < 360.0; p += 5.5)
    {
        const double a = normalized_gain(layout, broadside, 40.0, p);
        const double b = normalized_gain(layout, broadside, 40.0, p + 360.0);
        CHECK(b == Approx(a).margin(1e-9));
    }
}

TEST_CASE("SteeredPattern - matches normalized_gain")
{
    const auto layout = build_rpa({10, 10, 0.5, 0.5});
    const SteeredPattern pattern(layout, steer);
    CHECK(pattern.peak_power() == Approx(1e4).epsilon(1e-12));
    for (double t : {0.0, 12.5, 30.0, 75.0})
        for (double p : {0.0, 60.0, 123.0})
            CHECK(pattern.gain(t, p) == normalized_gain(layout, steer, t, p));
}

TEST_CASE("sample_angles - pins the requested angle")
{
    const auto a = sample_angles({0.0, 90.0}, 0.01, 30.0);
    CHECK(a.size() == 9001);
    CHECK(std::find(a.begin(), a.end(), 30.0) != a.end());
    CHECK(std::is_sorted(a.begin(), a.end()));

    const auto b = sample_angles({0.0, 1.0}, 0.3, 0.55);
    CHECK(b == std::vector<double>{0.0, 0.3, 0.55, 0.6, 0.8999999999999999});

    CHECK_THROWS_AS(sample_angles({0.0, 1.0}, 0.0, 0.5), ValidationError);
    CHECK_THROWS_AS(sample_angles({1.0, 0.0}, 0.1, 0.5), ValidationError);
}

TEST_CASE("sample_cut - structure")
{
    const auto layout = build_ucca({5, 3.0, true});
    for (auto plane : {CutPlane::Elevation, CutPlane::Azimuth})
    {
        const AngleRange range = plane == CutPlane::Elevation ? AngleRange{0.0, 90.0} : AngleRange{0.0, 360.0};
        const auto cut = sample_cut(layout, steer, plane, range, 0.05);
        REQUIRE(cut.angles_deg.size() == cut.power_db.size());
        const double pin = plane == CutPlane::Elevation ? 30.0 : 60.0;
        const auto it = std::find(cut.angles_deg.begin(), cut.angles_deg.end(), pin);
        REQUIRE(it != cut.angles_deg.end());
        const auto peak = std::max_element(cut.power_db.begin(), cut.power_db.end());
        CHECK(peak - cut.power_db.begin() == it - cut.angles_deg.begin());
        CHECK(*peak == Approx(0.0).margin(1e-12));
        for (double v : cut.power_db)
            CHECK(v <= 1e-12);
    }
}

TEST_CASE("sample_cut - single element is flat")
{
    const auto cut = sample_cut(build_rpa({1, 1, 0.5, 0.5}), steer, CutPlane::Azimuth, {0.0, 360.0}, 0.5);
    for (double v : cut.power_db)
        CHECK(v == 0.0);
}

TEST_CASE("sample_cut - range must contain the steering angle")
{
    const auto layout = build_rpa({4, 4, 0.5, 0.5});
    CHECK_THROWS_AS(sample_cut(layout, steer, CutPlane::Elevation, {40.0, 90.0}, 0.1), ValidationError);
    CHECK_THROWS_AS(sample_cut(layout, steer, CutPlane::Azimuth, {90.0, 180.0}, 0.1), ValidationError);
    CHECK_THROWS_AS(sample_cut(layout, steer, CutPlane::Azimuth, {0.0, 360.0}, 0.0), ValidationError);
    CHECK_THROWS_AS(sample_cut(layout, {95.0, 0.0}, CutPlane::Elevation, {0.0, 90.0}, 0.1), ValidationError);
    CHECK_THROWS_AS(sample_cut(layout, {30.0, 360.0}, CutPlane::Elevation, {0.0, 90.0}, 0.1), ValidationError);
}

TEST_CASE("AngularGrid - validation")
{
    AngularGrid g;
    g.theta_deg = {0.0, 1.0, 1.0};
    g.phi_deg = {0.0};
    CHECK_THROWS_AS(g.validate(), ValidationError);
    g.theta_deg = {0.0, 1.0};
    g.phi_deg = {};
    CHECK_THROWS_AS(g.validate(), ValidationError);
}
