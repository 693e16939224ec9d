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

#pragma once

#include "beamlab/geometry.hpp"
#include "beamlab/pattern.hpp"

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

namespace beamlab
{
    struct CellGeometry
    {
        double range_m = 50.0;
        double height_m = 10.0;

        void validate() const;
        bool operator==(const CellGeometry &) const = default;
    };

    // Minimum inter-UE distance on the azimuthal plane: 2 R tan(phi_3db / 2)
    double azimuthal_separation(double range_m, double phi_3db_deg);

    // Minimum radial inter-UE distance on the elevation plane: R - h tan(atan(R / h) - theta_3db)
    double elevation_separation(const CellGeometry &cell, double theta_3db_deg);

    // P / (I + N), all linear
    double sinr(double desired_power, double interference, double noise);

    // log2(1 + sinr) in bps/Hz
    double spectral_efficiency(double sinr_linear);

    struct SinrScenario
    {
        unsigned interferers = 10;
        double snr_db = 10.0;
        std::uint64_t trials = 10000;
        std::uint64_t seed = 0x5EEDBEA4ULL;
        CutPlane plane = CutPlane::Azimuth;
        AngleRange angle_range{0.0, 90.0};
        SteeringTarget desired{30.0, 60.0};
        bool keep_series = false;

        void validate() const;
        double noise_power() const; // 10^(-snr/10), so the interference-free SINR equals the SNR
        bool operator==(const SinrScenario &) const = default;
    };

    struct LinkStats
    {
        std::uint64_t trials = 0;
        double mean_sinr_linear = 0.0;
        double mean_sinr_db = 0.0;  // 10 log10(mean_sinr_linear)
        double mean_se = 0.0;       // mean over trials of log2(1 + SINR_t)
        double se_of_mean_sinr = 0.0;
        std::vector<double> sinr_series; // per-trial linear SINR, filled when keep_series is set
        std::vector<double> se_series;
    };

    // Per-trial random stream. The generator for trial t is keyed by (seed, t) alone, so any trial can be
    // replayed without drawing the ones before it.
    class TrialStream
    {
    public:
        TrialStream(std::uint64_t seed, std::uint64_t trial);

        double uniform01(); // [0, 1) with 53 random bits
        double uniform(AngleRange range) { return range.lo_deg + (range.hi_deg - range.lo_deg) * uniform01(); }

        static std::uint64_t stream_key(std::uint64_t seed, std::uint64_t trial);

    private:
        std::mt19937_64 engine_;
    };

    // Normalized linear gain |F(theta, phi)|^2 / |F(theta0, phi0)|^2 at an interferer direction
    using GainFunction = std::function<double(double theta_deg, double phi_deg)>;

    LinkStats monte_carlo_link(const GainFunction &gain, const SinrScenario &scenario);
    LinkStats monte_carlo_link(const ArrayLayout &layout, const SinrScenario &scenario);
}
