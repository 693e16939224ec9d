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

#include "beamlab/link.hpp"
#include "beamlab/errors.hpp"
#include "beamlab/detail/parallel.hpp"

#include <cmath>
#include <numbers>

namespace beamlab
{
    namespace
    {
        constexpr double deg2rad = std::numbers::pi / 180.0;

        std::uint64_t splitmix64(std::uint64_t x)
        {
            x += 0x9E3779B97F4A7C15ULL;
            x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
            x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
            return x ^ (x >> 31);
        }

        double plane_limit(CutPlane plane)
        {
            return plane == CutPlane::Elevation ? 90.0 : 360.0;
        }
    }

    void CellGeometry::validate() const
    {
        if (!(range_m > 0.0) || !std::isfinite(range_m))
            throw ValidationError("cell range must be positive");
        if (!(height_m > 0.0) || !std::isfinite(height_m))
            throw ValidationError("antenna height must be positive");
    }

    double azimuthal_separation(double range_m, double phi_3db_deg)
    {
        if (!(range_m > 0.0))
            throw DomainError("range must be positive");
        if (!(phi_3db_deg > 0.0 && phi_3db_deg < 180.0))
            throw DomainError("azimuthal beamwidth must lie in (0, 180) degrees");
        return 2.0 * range_m * std::tan(0.5 * phi_3db_deg * deg2rad);
    }

    double elevation_separation(const CellGeometry &cell, double theta_3db_deg)
    {
        if (!(cell.range_m > 0.0) || !(cell.height_m > 0.0))
            throw DomainError("range and antenna height must be positive");
        if (!(theta_3db_deg >= 0.0))
            throw DomainError("elevation beamwidth must be non-negative");
        const double arg = std::atan(cell.range_m / cell.height_m) - theta_3db_deg * deg2rad;
        if (!(arg > -0.5 * std::numbers::pi))
            throw DomainError("elevation beamwidth pushes the depression angle to -90 degrees");
        return cell.range_m - cell.height_m * std::tan(arg);
    }

    double sinr(double desired_power, double interference, double noise)
    {
        if (!(desired_power >= 0.0) || !(interference >= 0.0))
            throw DomainError("signal and interference powers must be non-negative");
        if (!(noise > 0.0))
            throw DomainError("noise power must be positive");
        return desired_power / (interference + noise);
    }

    double spectral_efficiency(double sinr_linear)
    {
        if (!(sinr_linear >= 0.0))
            throw DomainError("SINR must be non-negative");
        return std::log2(1.0 + sinr_linear);
    }

    void SinrScenario::validate() const
    {
        if (interferers == 0)
            throw ValidationError("scenario needs at least one interferer");
        if (trials == 0)
            throw ValidationError("scenario needs at least one trial");
        if (!std::isfinite(snr_db))
            throw ValidationError("SNR must be finite");
        if (!(angle_range.hi_deg > angle_range.lo_deg))
            throw ValidationError("interferer angle range is empty");
        if (angle_range.lo_deg < 0.0 || angle_range.hi_deg > plane_limit(plane))
            throw ValidationError(std::string("interferer angle range exceeds the ") + to_string(plane) + " domain");
        desired.validate();
    }

    double SinrScenario::noise_power() const
    {
        return std::pow(10.0, -snr_db / 10.0);
    }

    TrialStream::TrialStream(std::uint64_t seed, std::uint64_t trial) : engine_(stream_key(seed, trial)) {}

    std::uint64_t TrialStream::stream_key(std::uint64_t seed, std::uint64_t trial)
    {
        return splitmix64(splitmix64(seed) ^ trial);
    }

    double TrialStream::uniform01()
    {
        return double(engine_() >> 11) * 0x1.0p-53;
    }

    LinkStats monte_carlo_link(const GainFunction &gain, const SinrScenario &scenario)
    {
        scenario.validate();
        const double noise = scenario.noise_power();
        const auto &desired = scenario.desired;

        std::vector<double> sinr_t(scenario.trials), se_t(scenario.trials);
        detail::parallel_for(scenario.trials, [&](std::size_t t)
                             {
                                 TrialStream stream(scenario.seed, t);
                                 double interference = 0.0;
                                 for (unsigned u = 0; u < scenario.interferers; ++u)
                                 {
                                     const double a = stream.uniform(scenario.angle_range);
                                     interference += scenario.plane == CutPlane::Elevation ? gain(a, desired.phi_deg)
                                                                                           : gain(desired.theta_deg, a);
                                 }
                                 sinr_t[t] = sinr(1.0, interference, noise);
                                 se_t[t] = spectral_efficiency(sinr_t[t]); }, 256);

        LinkStats stats;
        stats.trials = scenario.trials;
        stats.mean_sinr_linear = detail::pairwise_sum(sinr_t.data(), sinr_t.size()) / double(scenario.trials);
        stats.mean_sinr_db = 10.0 * std::log10(stats.mean_sinr_linear);
        stats.mean_se = detail::pairwise_sum(se_t.data(), se_t.size()) / double(scenario.trials);
        stats.se_of_mean_sinr = spectral_efficiency(stats.mean_sinr_linear);
        if (scenario.keep_series)
        {
            stats.sinr_series = std::move(sinr_t);
            stats.se_series = std::move(se_t);
        }
        return stats;
    }

    LinkStats monte_carlo_link(const ArrayLayout &layout, const SinrScenario &scenario)
    {
        scenario.validate();
        const SteeredPattern pattern(layout, scenario.desired);
        return monte_carlo_link([&pattern](double theta, double phi)
                                { return pattern.gain(theta, phi); },
                                scenario);
    }
}
