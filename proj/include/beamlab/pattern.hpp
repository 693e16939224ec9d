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

#include <complex>
#include <string>
#include <vector>

namespace beamlab
{
    // Desired-signal direction. theta is measured from the array normal, phi from the x axis. Degrees.
    struct SteeringTarget
    {
        double theta_deg = 0.0;
        double phi_deg = 0.0;

        void validate() const;
        bool operator==(const SteeringTarget &) const = default;
    };

    enum class CutPlane
    {
        Elevation, // phi fixed at the steering azimuth, theta varies
        Azimuth    // theta fixed at the steering elevation, phi varies
    };

    const char *to_string(CutPlane plane);
    CutPlane cut_plane_from_string(const std::string &name);

    // Closed angular interval in degrees
    struct AngleRange
    {
        double lo_deg = 0.0;
        double hi_deg = 0.0;

        bool contains(double deg) const { return deg >= lo_deg && deg <= hi_deg; }
        bool operator==(const AngleRange &) const = default;
    };

    struct PatternCut
    {
        CutPlane plane = CutPlane::Elevation;
        SteeringTarget steering;
        std::vector<double> angles_deg;
        std::vector<double> power_db; // normalized to the steering direction
    };

    // Rectangular theta x phi grid; power_db is row-major with one row per theta sample
    struct AngularGrid
    {
        std::vector<double> theta_deg;
        std::vector<double> phi_deg;

        static AngularGrid uniform(AngleRange theta, AngleRange phi, double step_deg);
        void validate() const;
    };

    struct PatternGrid
    {
        AngularGrid grid;
        SteeringTarget steering;
        std::vector<double> power_db;

        double at(std::size_t theta_index, std::size_t phi_index) const
        {
            return power_db[theta_index * grid.phi_deg.size() + phi_index];
        }
    };

    // Steered array factor
    //   F(theta, phi) = sum_e w_e exp(i 2 pi [x_e (u - u0) + y_e (v - v0)])
    // with u = sin(theta) cos(phi), v = sin(theta) sin(phi) and positions in wavelengths.
    std::complex<double> array_factor(const ArrayLayout &layout, const SteeringTarget &steering,
                                      double theta_deg, double phi_deg);

    // |F(theta, phi)|^2 / |F(theta0, phi0)|^2 (linear)
    double normalized_gain(const ArrayLayout &layout, const SteeringTarget &steering, double theta_deg, double phi_deg);

    // Same as normalized_gain, in dB. Throws DomainError if the steering-direction gain vanishes.
    double normalized_power(const ArrayLayout &layout, const SteeringTarget &steering, double theta_deg, double phi_deg);

    // Normalized pattern of a layout with the steering-direction power precomputed. Holds a reference
    // to the layout, which must outlive it.
    class SteeredPattern
    {
    public:
        SteeredPattern(const ArrayLayout &layout, const SteeringTarget &steering);

        double gain(double theta_deg, double phi_deg) const; // linear, 1 at the steering direction
        double power_db(double theta_deg, double phi_deg) const;
        double peak_power() const { return peak_power_; }
        const SteeringTarget &steering() const { return steering_; }

    private:
        const ArrayLayout *layout_;
        SteeringTarget steering_;
        double target_u_ = 0.0;
        double target_v_ = 0.0;
        double peak_power_ = 0.0;
    };

    // Samples of lo, lo + step, ... up to hi (inclusive within rounding). `pin` is inserted as an exact
    // sample, replacing a grid point that lies within a millionth of a step.
    std::vector<double> sample_angles(AngleRange range, double step_deg, double pin_deg);

    PatternCut sample_cut(const ArrayLayout &layout, const SteeringTarget &steering, CutPlane plane,
                          AngleRange range, double step_deg = 0.01);

    PatternGrid sample_grid(const ArrayLayout &layout, const SteeringTarget &steering, const AngularGrid &grid);
}
