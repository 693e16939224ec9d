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

#include "beamlab/config.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace beamlab
{
    struct ArrayRecord
    {
        std::string name;
        ArrayKind kind = ArrayKind::UCCA;
        std::size_t element_count = 0;
        double aperture_area_m2 = 0.0;
        HpbwResult hpbw;
        SllResult sll;
        double packing_gain = 0.0;
        double packing_ratio = 0.0; // packing_gain relative to the packing reference array
    };

    struct AreaPoint
    {
        double spacing_wl = 0.0;
        double area_m2 = 0.0;
    };

    struct SeparationRow
    {
        double range_m = 0.0;
        std::string array;
        double s_phi_m = 0.0;
        double s_theta_m = 0.0;
    };

    struct LinkRecord
    {
        std::string array;
        CutPlane plane = CutPlane::Azimuth;
        LinkStats stats;
    };

    struct NamedCut
    {
        std::string array;
        PatternCut cut;
    };

    struct Provenance
    {
        std::string config_hash;
        std::uint64_t seed = 0;
        std::string tool_version;
    };

    struct RunReport
    {
        std::vector<ArrayRecord> arrays;
        std::vector<NamedCut> cuts;
        std::vector<HpbwSweepPoint> sweep;
        std::vector<AreaPoint> area;
        std::vector<SeparationRow> separation;
        std::vector<LinkRecord> links;
        std::string packing_reference;
        double height_m = 10.0;
        Provenance provenance;
        std::vector<std::filesystem::path> files; // written outputs, in write order
    };

    // Computes every requested analysis without touching the filesystem
    RunReport analyse(const ScenarioConfig &config);

    // Writes the report's outputs into `out_dir` (created if needed) and records them in report.files.
    // On any failure the files written so far are removed before the exception propagates.
    void write_outputs(RunReport &report, const ScenarioConfig &config, const std::filesystem::path &out_dir);

    // Output directory precedence: explicit override, then $BEAMLAB_OUTPUT_DIR, then config.output_dir
    std::filesystem::path resolve_output_dir(const ScenarioConfig &config,
                                             const std::optional<std::filesystem::path> &override_dir = std::nullopt);

    RunReport run(const ScenarioConfig &config, const std::optional<std::filesystem::path> &override_dir = std::nullopt);
    RunReport run(const std::filesystem::path &config_path,
                  const std::optional<std::filesystem::path> &override_dir = std::nullopt);

    // Runs the built-in 28 GHz study and adds summary.md comparing against the published reference values
    RunReport reproduce_paper(const std::optional<std::filesystem::path> &override_dir = std::nullopt,
                              std::optional<std::uint64_t> seed = std::nullopt);

    // Serializers shared by write_outputs and the tests
    std::string format_number(double value);
    std::string cut_csv(const NamedCut &cut, const Provenance &prov);
    std::string separation_csv(const RunReport &report);
    std::string sweep_csv(const RunReport &report);
    std::string area_csv(const RunReport &report);
    std::string hpbw_json(const RunReport &report);
    std::string sll_json(const RunReport &report);
    std::string packing_json(const RunReport &report);
    std::string link_stats_json(const RunReport &report);
    std::string report_json(const RunReport &report);
    std::string reproduction_summary(const RunReport &report);
}
