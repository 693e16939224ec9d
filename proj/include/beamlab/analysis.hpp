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

#include <vector>

namespace beamlab
{
    inline constexpr double half_power_db = -3.0;

    struct HpbwResult
    {
        double theta_3db_deg = 0.0;
        double phi_3db_deg = 0.0;
    };

    struct SllResult
    {
        double max_sll_theta_db = 0.0;
        double max_sll_phi_db = 0.0;
    };

    struct HpbwSweepPoint
    {
        double spacing_wl = 0.0;
        double theta_3db_deg = 0.0;
        double phi_3db_deg = 0.0;
    };

    // Width between the -3 dB crossings (relative to the cut maximum) nearest the main peak.
    // Crossings are linearly interpolated in dB. Throws DomainError if a crossing lies outside the cut.
    double measure_hpbw(const PatternCut &cut);

    // Highest sample outside the main lobe, relative to the peak. The main lobe spans the peak and
    // extends to the first strict local minimum on each side.
    double measure_max_sll(const PatternCut &cut);

    // (90 / theta_3db) * (360 / phi_3db)
    double beam_packing_gain(double theta_3db_deg, double phi_3db_deg);

    struct CutSettings
    {
        AngleRange theta_range{0.0, 90.0};
        AngleRange phi_range{0.0, 360.0};
        double step_deg = 0.01;

        bool operator==(const CutSettings &) const = default;
    };

    HpbwResult measure_hpbw(const ArrayLayout &layout, const SteeringTarget &steering, const CutSettings &cuts = {});
    SllResult measure_max_sll(const ArrayLayout &layout, const SteeringTarget &steering, const CutSettings &cuts = {});

    // HPBWs of freshly built UCCAs of `family.rings` rings for each spacing (ascending, positive)
    std::vector<HpbwSweepPoint> hpbw_sweep(const UccaSpec &family, const std::vector<double> &spacings_wl,
                                           const SteeringTarget &steering, const CutSettings &cuts = {});
}
