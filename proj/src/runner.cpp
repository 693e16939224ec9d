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

#include "beamlab/runner.hpp"
#include "beamlab/errors.hpp"

#include <cstdlib>
#include <fstream>
#include <system_error>

namespace fs = std::filesystem;

namespace beamlab
{
    namespace
    {
        bool needs_cuts(const ScenarioConfig &c)
        {
            return c.wants(Analysis::Pattern) || c.wants(Analysis::Hpbw) || c.wants(Analysis::Sll) ||
                   c.wants(Analysis::Packing) || c.wants(Analysis::Separation);
        }

        class OutputWriter
        {
        public:
            OutputWriter(RunReport &report, fs::path dir) : report_(report), dir_(std::move(dir))
            {
                std::error_code ec;
                if (!fs::exists(dir_, ec))
                {
                    fs::create_directories(dir_, ec);
                    if (ec)
                        throw std::runtime_error("cannot create output directory " + dir_.string() + ": " + ec.message());
                    created_dir_ = true;
                }
            }

            ~OutputWriter()
            {
                if (committed_)
                    return;
                std::error_code ec;
                for (const auto &f : report_.files)
                    fs::remove(f, ec);
                report_.files.clear();
                if (created_dir_ && fs::is_empty(dir_, ec))
                    fs::remove(dir_, ec);
            }

            void write(const std::string &name, const std::string &content)
            {
                const fs::path path = dir_ / name;
                std::ofstream out(path, std::ios::binary | std::ios::trunc);
                if (!out)
                    throw std::runtime_error("cannot write " + path.string());
                report_.files.push_back(path);
                out << content;
                out.close();
                if (!out)
                    throw std::runtime_error("failed writing " + path.string());
            }

            void commit() { committed_ = true; }

        private:
            RunReport &report_;
            fs::path dir_;
            bool created_dir_ = false;
            bool committed_ = false;
        };
    }

    RunReport analyse(const ScenarioConfig &config)
    {
        config.validate();

        RunReport report;
        report.provenance = {config_hash(config), config.montecarlo.seed, BEAMLAB_VERSION};
        report.packing_reference = config.packing_reference_array().name;
        report.height_m = config.height_m;

        std::vector<ArrayLayout> layouts;
        for (const auto &named : config.arrays)
        {
            layouts.push_back(build_layout(named.spec));
            const auto &layout = layouts.back();

            ArrayRecord rec;
            rec.name = named.name;
            rec.kind = layout.kind();
            rec.element_count = layout.element_count();
            rec.aperture_area_m2 = aperture_area(layout, config.carrier);

            if (needs_cuts(config))
            {
                NamedCut el{named.name, sample_cut(layout, config.steering, CutPlane::Elevation, config.cuts.theta_range, config.cuts.step_deg)};
                NamedCut az{named.name, sample_cut(layout, config.steering, CutPlane::Azimuth, config.cuts.phi_range, config.cuts.step_deg)};
                if (config.wants(Analysis::Hpbw) || config.wants(Analysis::Packing) || config.wants(Analysis::Separation))
                {
                    rec.hpbw = {measure_hpbw(el.cut), measure_hpbw(az.cut)};
                    rec.packing_gain = beam_packing_gain(rec.hpbw.theta_3db_deg, rec.hpbw.phi_3db_deg);
                }
                if (config.wants(Analysis::Sll))
                    rec.sll = {measure_max_sll(el.cut), measure_max_sll(az.cut)};
                if (config.wants(Analysis::Pattern))
                {
                    report.cuts.push_back(std::move(el));
                    report.cuts.push_back(std::move(az));
                }
            }
            report.arrays.push_back(std::move(rec));
        }

        if (config.wants(Analysis::Packing))
        {
            double ref_gain = 0.0;
            for (const auto &rec : report.arrays)
                if (rec.name == report.packing_reference)
                    ref_gain = rec.packing_gain;
            for (auto &rec : report.arrays)
                rec.packing_ratio = rec.packing_gain / ref_gain;
        }

        if (config.wants(Analysis::Separation))
        {
            for (double range : config.ranges.values())
                for (const auto &rec : report.arrays)
                    report.separation.push_back({range, rec.name, azimuthal_separation(range, rec.hpbw.phi_3db_deg),
                                                 elevation_separation({range, config.height_m}, rec.hpbw.theta_3db_deg)});
        }

        const UccaSpec family{config.sweep.rings, 1.0, config.sweep.include_center};
        if (config.wants(Analysis::Sweep))
            report.sweep = hpbw_sweep(family, config.sweep.spacings_wl, config.steering, config.cuts);
        if (config.wants(Analysis::Area))
        {
            for (double d : config.sweep.spacings_wl)
            {
                UccaSpec spec = family;
                spec.spacing_wl = d;
                report.area.push_back({d, aperture_area(build_ucca(spec), config.carrier)});
            }
        }

        if (config.wants(Analysis::MonteCarlo))
        {
            for (std::size_t i = 0; i < config.arrays.size(); ++i)
                for (auto plane : config.montecarlo.planes)
                    report.links.push_back({config.arrays[i].name, plane,
                                            monte_carlo_link(layouts[i], config.montecarlo.scenario(plane, config.steering))});
        }
        return report;
    }

    void write_outputs(RunReport &report, const ScenarioConfig &config, const fs::path &out_dir)
    {
        report.files.clear();
        OutputWriter writer(report, out_dir);

        if (config.wants(Analysis::Pattern))
            for (const auto &cut : report.cuts)
                writer.write("pattern_" + cut.array + "_" + to_string(cut.cut.plane) + ".csv", cut_csv(cut, report.provenance));
        if (config.wants(Analysis::Hpbw))
            writer.write("hpbw.json", hpbw_json(report));
        if (config.wants(Analysis::Sll))
            writer.write("sll.json", sll_json(report));
        if (config.wants(Analysis::Packing))
            writer.write("packing.json", packing_json(report));
        if (config.wants(Analysis::Separation))
            writer.write("separation.csv", separation_csv(report));
        if (config.wants(Analysis::Sweep))
            writer.write("hpbw_sweep.csv", sweep_csv(report));
        if (config.wants(Analysis::Area))
            writer.write("area_vs_spacing.csv", area_csv(report));
        if (config.wants(Analysis::MonteCarlo))
            writer.write("link_stats.json", link_stats_json(report));
        writer.write("report.json", report_json(report));
        writer.commit();
    }

    fs::path resolve_output_dir(const ScenarioConfig &config, const std::optional<fs::path> &override_dir)
    {
        if (override_dir && !override_dir->empty())
            return *override_dir;
        if (const char *env = std::getenv("BEAMLAB_OUTPUT_DIR"); env && *env)
            return env;
        return config.output_dir;
    }

    RunReport run(const ScenarioConfig &config, const std::optional<fs::path> &override_dir)
    {
        RunReport report = analyse(config);
        write_outputs(report, config, resolve_output_dir(config, override_dir));
        return report;
    }

    RunReport run(const fs::path &config_path, const std::optional<fs::path> &override_dir)
    {
        return run(load_config(config_path), override_dir);
    }

    RunReport reproduce_paper(const std::optional<fs::path> &override_dir, std::optional<std::uint64_t> seed)
    {
        ScenarioConfig config = reference_study_config();
        if (seed)
            config.montecarlo.seed = *seed;

        RunReport report = analyse(config);
        const fs::path dir = resolve_output_dir(config, override_dir);
        write_outputs(report, config, dir);

        const fs::path summary = dir / "summary.md";
        std::ofstream out(summary, std::ios::binary | std::ios::trunc);
        out << reproduction_summary(report);
        out.close();
        if (!out)
        {
            std::error_code ec;
            for (const auto &f : report.files)
                fs::remove(f, ec);
            fs::remove(summary, ec);
            throw std::runtime_error("failed writing " + summary.string());
        }
        report.files.push_back(summary);
        return report;
    }
}
