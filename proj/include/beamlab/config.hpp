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

#include "beamlab/analysis.hpp"
#include "beamlab/geometry.hpp"
#include "beamlab/link.hpp"
#include "beamlab/pattern.hpp"

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace beamlab
{
    inline constexpr int config_schema_version = 1;

    struct NamedArray
    {
        std::string name;
        ArraySpec spec;

        bool operator==(const NamedArray &) const = default;
    };

    // start, start + step, ... up to stop (inclusive)
    struct RangeSweep
    {
        double start_m = 10.0;
        double stop_m = 100.0;
        double step_m = 10.0;

        std::vector<double> values() const;
        bool operator==(const RangeSweep &) const = default;
    };

    struct SpacingSweep
    {
        unsigned rings = 5;
        bool include_center = true;
        std::vector<double> spacings_wl{0.5, 1.0, 1.5, 2.0, 2.5, 3.0};

        bool operator==(const SpacingSweep &) const = default;
    };

    struct MonteCarloConfig
    {
        unsigned interferers = 10;
        double snr_db = 10.0;
        std::uint64_t trials = 10000;
        std::uint64_t seed = 20260101;
        AngleRange angle_range{0.0, 90.0};
        std::vector<CutPlane> planes{CutPlane::Elevation, CutPlane::Azimuth};

        SinrScenario scenario(CutPlane plane, const SteeringTarget &desired) const;
        bool operator==(const MonteCarloConfig &) const = default;
    };

    enum class Analysis
    {
        Pattern,    // pattern cut CSVs
        Hpbw,       // hpbw.json
        Sll,        // sll.json
        Packing,    // packing.json
        Separation, // separation.csv
        Sweep,      // hpbw_sweep.csv
        Area,       // area_vs_spacing.csv
        MonteCarlo  // link_stats.json
    };

    const char *to_string(Analysis analysis);
    Analysis analysis_from_string(const std::string &name);
    std::vector<Analysis> all_analyses();

    struct ScenarioConfig
    {
        int schema_version = config_schema_version;
        CarrierSpec carrier;
        std::vector<NamedArray> arrays;
        SteeringTarget steering{30.0, 60.0};
        CutSettings cuts;
        double height_m = 10.0;
        RangeSweep ranges;
        SpacingSweep sweep;
        MonteCarloConfig montecarlo;
        std::string packing_reference; // array name, empty selects the first array
        std::vector<Analysis> analyses = all_analyses();
        std::string output_dir = "out";

        // Checks every module precondition up front. Throws ValidationError.
        void validate() const;
        bool wants(Analysis analysis) const;
        const NamedArray &packing_reference_array() const;
        bool operator==(const ScenarioConfig &) const = default;
    };

    // Parses and validates. Unknown keys are rejected; absent optional keys take the defaults above.
    ScenarioConfig parse_config(const std::string &json_text);
    ScenarioConfig load_config(const std::filesystem::path &path);

    // Canonical JSON (sorted keys, every field present)
    std::string serialize_config(const ScenarioConfig &config);

    // FNV-1a 64 of the canonical serialization, as 16 hex digits
    std::string config_hash(const ScenarioConfig &config);

    // The 28 GHz study: RPA 10x10 at 0.5 lambda and 98-element UCCAs at 2 and 3 lambda, steered to (30, 60)
    ScenarioConfig reference_study_config();
}
