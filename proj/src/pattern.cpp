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

#include "beamlab/pattern.hpp"
#include "beamlab/errors.hpp"
#include "beamlab/detail/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace beamlab
{
    namespace
    {
        constexpr double deg2rad = std::numbers::pi / 180.0;

        struct DirectionCosines
        {
            double u;
            double v;
        };

        DirectionCosines direction(double theta_deg, double phi_deg)
        {
            const double st = std::sin(theta_deg * deg2rad);
            return {st * std::cos(phi_deg * deg2rad), st * std::sin(phi_deg * deg2rad)};
        }

        std::complex<double> steered_sum(const ArrayLayout &layout, DirectionCosines look, DirectionCosines target)
        {
            const double du = 2.0 * std::numbers::pi * (look.u - target.u);
            const double dv = 2.0 * std::numbers::pi * (look.v - target.v);
            const auto &pos = layout.elements();
            const auto &w = layout.weights();

            double re = 0.0, im = 0.0;
            for (std::size_t e = 0; e < pos.size(); ++e)
            {
                const double phase = pos[e].x_wl * du + pos[e].y_wl * dv;
                const double c = std::cos(phase), s = std::sin(phase);
                re += w[e].real() * c - w[e].imag() * s;
                im += w[e].real() * s + w[e].imag() * c;
            }
            return {re, im};
        }

        double steering_power(const ArrayLayout &layout, DirectionCosines target)
        {
            const double peak = std::norm(steered_sum(layout, target, target));
            if (!(peak > 0.0))
                throw DomainError("array gain towards the steering direction is zero");
            return peak;
        }

        double to_db(double linear)
        {
            return linear > 0.0 ? 10.0 * std::log10(linear) : -std::numeric_limits<double>::infinity();
        }
    }

    void SteeringTarget::validate() const
    {
        if (!(theta_deg >= 0.0 && theta_deg <= 90.0))
            throw ValidationError("steering elevation must lie in [0, 90] degrees");
        if (!(phi_deg >= 0.0 && phi_deg < 360.0))
            throw ValidationError("steering azimuth must lie in [0, 360) degrees");
    }

    const char *to_string(CutPlane plane)
    {
        return plane == CutPlane::Elevation ? "elevation" : "azimuth";
    }

    CutPlane cut_plane_from_string(const std::string &name)
    {
        if (name == "elevation" || name == "theta")
            return CutPlane::Elevation;
        if (name == "azimuth" || name == "phi")
            return CutPlane::Azimuth;
        throw ValidationError("unknown cut plane '" + name + "'");
    }

    AngularGrid AngularGrid::uniform(AngleRange theta, AngleRange phi, double step_deg)
    {
        AngularGrid grid;
        grid.theta_deg = sample_angles(theta, step_deg, theta.lo_deg);
        grid.phi_deg = sample_angles(phi, step_deg, phi.lo_deg);
        return grid;
    }

    void AngularGrid::validate() const
    {
        auto check = [](const std::vector<double> &s, const char *name)
        {
            if (s.empty())
                throw ValidationError(std::string("angular grid has no ") + name + " samples");
            for (std::size_t i = 1; i < s.size(); ++i)
                if (!(s[i] > s[i - 1]))
                    throw ValidationError(std::string("angular grid ") + name + " samples must be strictly increasing");
        };
        check(theta_deg, "theta");
        check(phi_deg, "phi");
    }

    SteeredPattern::SteeredPattern(const ArrayLayout &layout, const SteeringTarget &steering)
        : layout_(&layout), steering_(steering)
    {
        const auto target = direction(steering.theta_deg, steering.phi_deg);
        target_u_ = target.u;
        target_v_ = target.v;
        peak_power_ = steering_power(layout, target);
    }

    double SteeredPattern::gain(double theta_deg, double phi_deg) const
    {
        return std::norm(steered_sum(*layout_, direction(theta_deg, phi_deg), {target_u_, target_v_})) / peak_power_;
    }

    double SteeredPattern::power_db(double theta_deg, double phi_deg) const
    {
        return to_db(gain(theta_deg, phi_deg));
    }

    std::complex<double> array_factor(const ArrayLayout &layout, const SteeringTarget &steering,
                                      double theta_deg, double phi_deg)
    {
        return steered_sum(layout, direction(theta_deg, phi_deg), direction(steering.theta_deg, steering.phi_deg));
    }

    double normalized_gain(const ArrayLayout &layout, const SteeringTarget &steering, double theta_deg, double phi_deg)
    {
        const auto target = direction(steering.theta_deg, steering.phi_deg);
        return std::norm(steered_sum(layout, direction(theta_deg, phi_deg), target)) / steering_power(layout, target);
    }

    double normalized_power(const ArrayLayout &layout, const SteeringTarget &steering, double theta_deg, double phi_deg)
    {
        return to_db(normalized_gain(layout, steering, theta_deg, phi_deg));
    }

    std::vector<double> sample_angles(AngleRange range, double step_deg, double pin_deg)
    {
        if (!(step_deg > 0.0) || !std::isfinite(step_deg))
            throw ValidationError("angular step must be positive");
        if (!(range.hi_deg >= range.lo_deg))
            throw ValidationError("angular range is empty");

        const auto count = static_cast<std::size_t>(std::floor((range.hi_deg - range.lo_deg) / step_deg + 1e-9)) + 1;
        std::vector<double> angles;
        angles.reserve(count + 1);
        for (std::size_t i = 0; i < count; ++i)
            angles.push_back(range.lo_deg + double(i) * step_deg);

        if (range.contains(pin_deg))
        {
            auto it = std::lower_bound(angles.begin(), angles.end(), pin_deg);
            const double tol = 1e-6 * step_deg;
            if (it != angles.end() && std::abs(*it - pin_deg) <= tol)
                *it = pin_deg;
            else if (it != angles.begin() && std::abs(*(it - 1) - pin_deg) <= tol)
                *(it - 1) = pin_deg;
            else
                angles.insert(it, pin_deg);
        }
        return angles;
    }

    PatternCut sample_cut(const ArrayLayout &layout, const SteeringTarget &steering, CutPlane plane,
                          AngleRange range, double step_deg)
    {
        steering.validate();
        const double pin = plane == CutPlane::Elevation ? steering.theta_deg : steering.phi_deg;
        if (!range.contains(pin))
            throw ValidationError(std::string(to_string(plane)) + " cut range must contain the steering angle");

        PatternCut cut;
        cut.plane = plane;
        cut.steering = steering;
        cut.angles_deg = sample_angles(range, step_deg, pin);
        cut.power_db.resize(cut.angles_deg.size());

        const auto target = direction(steering.theta_deg, steering.phi_deg);
        const double peak = steering_power(layout, target);
        detail::parallel_for(cut.angles_deg.size(), [&](std::size_t i)
                     {
                         const double a = cut.angles_deg[i];
                         const auto look = plane == CutPlane::Elevation ? direction(a, steering.phi_deg)
                                                                        : direction(steering.theta_deg, a);
                         cut.power_db[i] = to_db(std::norm(steered_sum(layout, look, target)) / peak); });
        return cut;
    }

    PatternGrid sample_grid(const ArrayLayout &layout, const SteeringTarget &steering, const AngularGrid &grid)
    {
        steering.validate();
        grid.validate();

        PatternGrid out;
        out.grid = grid;
        out.steering = steering;
        const std::size_t n_phi = grid.phi_deg.size();
        out.power_db.resize(grid.theta_deg.size() * n_phi);

        const auto target = direction(steering.theta_deg, steering.phi_deg);
        const double peak = steering_power(layout, target);
        detail::parallel_for(out.power_db.size(), [&](std::size_t i)
                     {
                         const auto look = direction(grid.theta_deg[i / n_phi], grid.phi_deg[i % n_phi]);
                         out.power_db[i] = to_db(std::norm(steered_sum(layout, look, target)) / peak); });
        return out;
    }
}
