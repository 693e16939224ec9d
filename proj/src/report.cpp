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

#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>

using nlohmann::json;

namespace beamlab
{
    namespace
    {
        json provenance_json(const Provenance &p)
        {
            return {{"config_hash", p.config_hash}, {"seed", p.seed}, {"tool_version", p.tool_version}};
        }

        std::string csv_preamble(const Provenance &p)
        {
            return "# beamlab " + p.tool_version + "\n# config_hash " + p.config_hash + "\n# seed " +
                   std::to_string(p.seed) + "\n";
        }

        const char *kind_name(ArrayKind k) { return k == ArrayKind::UCCA ? "ucca" : "rpa"; }

        std::string fixed(double v, int digits)
        {
            char buf[64];
            std::snprintf(buf, sizeof buf, "%.*f", digits, v);
            return buf;
        }

        const ArrayRecord *find_array(const RunReport &r, const std::string &name)
        {
            for (const auto &a : r.arrays)
                if (a.name == name)
                    return &a;
            return nullptr;
        }

        const LinkRecord *find_link(const RunReport &r, const std::string &name, CutPlane plane)
        {
            for (const auto &l : r.links)
                if (l.array == name && l.plane == plane)
                    return &l;
            return nullptr;
        }

        // Published values for the 28 GHz study
        struct ReferenceArray
        {
            const char *name;
            double theta_3db, phi_3db;
            double sll_theta, sll_phi;
            double sinr_el_db, se_el;
            double sinr_az_db, se_az;
        };

        constexpr ReferenceArray reference_arrays[] = {
            {"RPA", 12.0, 20.7, -24.11, -14.64, 6.03, 2.32, -1.37, 0.79},
            {"UCCA_2L", 3.1, 5.4, -18.06, -14.07, 12.09, 4.10, 10.88, 3.73},
            {"UCCA_3L", 2.0, 3.6, -15.64, -11.55, 12.52, 4.24, 12.15, 4.12},
        };

        constexpr double claimed_packing_ratio[] = {1.0, 9.0, 30.0};
        constexpr double claimed_az_separation_ratio[] = {1.0, 3.87, 5.81};
        constexpr double claimed_el_separation_ratio[] = {1.0, 2.42, 3.47};
        constexpr double reference_range_m = 50.0;

        bool hpbw_within(double measured, double reference)
        {
            return std::abs(measured - reference) <= std::max(0.1 * reference, 0.3);
        }
    }

    std::string format_number(double value)
    {
        if (std::isnan(value))
            return "nan";
        if (std::isinf(value))
            return value > 0 ? "inf" : "-inf";
        char buf[64];
        const auto res = std::to_chars(buf, buf + sizeof buf, value);
        return std::string(buf, res.ptr);
    }

    std::string cut_csv(const NamedCut &cut, const Provenance &prov)
    {
        std::string out = csv_preamble(prov);
        out += "# array " + cut.array + "\n# plane " + to_string(cut.cut.plane) + "\n";
        out += "angle_deg,power_db\n";
        for (std::size_t i = 0; i < cut.cut.angles_deg.size(); ++i)
            out += format_number(cut.cut.angles_deg[i]) + "," + format_number(cut.cut.power_db[i]) + "\n";
        return out;
    }

    std::string separation_csv(const RunReport &report)
    {
        std::string out = csv_preamble(report.provenance) + "# height_m " + format_number(report.height_m) + "\n";
        out += "range_m,array,s_phi_m,s_theta_m\n";
        for (const auto &row : report.separation)
            out += format_number(row.range_m) + "," + row.array + "," + format_number(row.s_phi_m) + "," +
                   format_number(row.s_theta_m) + "\n";
        return out;
    }

    std::string sweep_csv(const RunReport &report)
    {
        std::string out = csv_preamble(report.provenance) + "spacing_wl,theta_3db_deg,phi_3db_deg\n";
        for (const auto &p : report.sweep)
            out += format_number(p.spacing_wl) + "," + format_number(p.theta_3db_deg) + "," + format_number(p.phi_3db_deg) + "\n";
        return out;
    }

    std::string area_csv(const RunReport &report)
    {
        std::string out = csv_preamble(report.provenance) + "spacing_wl,area_m2\n";
        for (const auto &p : report.area)
            out += format_number(p.spacing_wl) + "," + format_number(p.area_m2) + "\n";
        return out;
    }

    std::string hpbw_json(const RunReport &report)
    {
        json arrays = json::array();
        for (const auto &a : report.arrays)
            arrays.push_back({{"name", a.name}, {"theta_3db_deg", a.hpbw.theta_3db_deg}, {"phi_3db_deg", a.hpbw.phi_3db_deg}});
        return json{{"arrays", arrays}, {"provenance", provenance_json(report.provenance)}}.dump(2) + "\n";
    }

    std::string sll_json(const RunReport &report)
    {
        json entries = json::array();
        for (const auto &a : report.arrays)
        {
            entries.push_back({{"array", a.name}, {"plane", "elevation"}, {"max_sll_db", a.sll.max_sll_theta_db}});
            entries.push_back({{"array", a.name}, {"plane", "azimuth"}, {"max_sll_db", a.sll.max_sll_phi_db}});
        }
        return json{{"entries", entries}, {"provenance", provenance_json(report.provenance)}}.dump(2) + "\n";
    }

    std::string packing_json(const RunReport &report)
    {
        json arrays = json::array();
        for (const auto &a : report.arrays)
            arrays.push_back({{"name", a.name}, {"packing_gain", a.packing_gain}, {"ratio_to_reference", a.packing_ratio}});
        return json{{"arrays", arrays}, {"reference", report.packing_reference},
                    {"provenance", provenance_json(report.provenance)}}
                   .dump(2) +
               "\n";
    }

    std::string link_stats_json(const RunReport &report)
    {
        json results = json::array();
        for (const auto &l : report.links)
            results.push_back({{"array", l.array},
                               {"plane", to_string(l.plane)},
                               {"trials", l.stats.trials},
                               {"mean_sinr_db", l.stats.mean_sinr_db},
                               {"mean_sinr_linear", l.stats.mean_sinr_linear},
                               {"mean_se_bps_hz", l.stats.mean_se},
                               {"se_of_mean_sinr_bps_hz", l.stats.se_of_mean_sinr}});
        return json{{"results", results}, {"provenance", provenance_json(report.provenance)}}.dump(2) + "\n";
    }

    std::string report_json(const RunReport &report)
    {
        json arrays = json::array();
        for (const auto &a : report.arrays)
            arrays.push_back({{"name", a.name},
                              {"kind", kind_name(a.kind)},
                              {"element_count", a.element_count},
                              {"aperture_area_m2", a.aperture_area_m2},
                              {"theta_3db_deg", a.hpbw.theta_3db_deg},
                              {"phi_3db_deg", a.hpbw.phi_3db_deg},
                              {"max_sll_theta_db", a.sll.max_sll_theta_db},
                              {"max_sll_phi_db", a.sll.max_sll_phi_db},
                              {"packing_gain", a.packing_gain},
                              {"packing_ratio", a.packing_ratio}});
        json sep = json::array();
        for (const auto &s : report.separation)
            sep.push_back({{"range_m", s.range_m}, {"array", s.array}, {"s_phi_m", s.s_phi_m}, {"s_theta_m", s.s_theta_m}});
        json sweep = json::array();
        for (const auto &p : report.sweep)
            sweep.push_back({{"spacing_wl", p.spacing_wl}, {"theta_3db_deg", p.theta_3db_deg}, {"phi_3db_deg", p.phi_3db_deg}});
        json area = json::array();
        for (const auto &p : report.area)
            area.push_back({{"spacing_wl", p.spacing_wl}, {"area_m2", p.area_m2}});
        json links = json::parse(link_stats_json(report))["results"];
        json files = json::array();
        for (const auto &f : report.files)
            files.push_back(f.filename().string());

        return json{{"arrays", arrays},
                    {"packing_reference", report.packing_reference},
                    {"height_m", report.height_m},
                    {"separation", sep},
                    {"hpbw_sweep", sweep},
                    {"area_vs_spacing", area},
                    {"links", links},
                    {"files", files},
                    {"provenance", provenance_json(report.provenance)}}
                   .dump(2) +
               "\n";
    }

    std::string reproduction_summary(const RunReport &report)
    {
        std::ostringstream md;
        md << "# Reproduction summary: 28 GHz UCCA vs RPA study\n\n";
        md << "Config hash `" << report.provenance.config_hash << "`, seed " << report.provenance.seed
           << ", beamlab " << report.provenance.tool_version << ".\n\n";

        md << "## Arrays\n\n| array | elements | aperture (m^2) |\n|---|---|---|\n";
        for (const auto &a : report.arrays)
            md << "| " << a.name << " | " << a.element_count << " | " << fixed(a.aperture_area_m2, 6) << " |\n";

        md << "\n## Half-power beamwidths (deg)\n\n"
           << "Tolerance: +-10% or +-0.3 deg, whichever is larger.\n\n"
           << "| array | theta_3dB | reference | phi_3dB | reference | status |\n|---|---|---|---|---|---|\n";
        for (const auto &ref : reference_arrays)
            if (const auto *a = find_array(report, ref.name))
            {
                const bool ok = hpbw_within(a->hpbw.theta_3db_deg, ref.theta_3db) && hpbw_within(a->hpbw.phi_3db_deg, ref.phi_3db);
                md << "| " << ref.name << " | " << fixed(a->hpbw.theta_3db_deg, 2) << " | " << fixed(ref.theta_3db, 1)
                   << " | " << fixed(a->hpbw.phi_3db_deg, 2) << " | " << fixed(ref.phi_3db, 1) << " | "
                   << (ok ? "OK" : "DEVIATES") << " |\n";
            }

        md << "\n## Maximum side-lobe level (dB)\n\n"
           << "Tolerance: +-1.5 dB.\n\n"
           << "| array | SLL_theta | reference | SLL_phi | reference | status |\n|---|---|---|---|---|---|\n";
        for (const auto &ref : reference_arrays)
            if (const auto *a = find_array(report, ref.name))
            {
                const bool ok = std::abs(a->sll.max_sll_theta_db - ref.sll_theta) <= 1.5 &&
                                std::abs(a->sll.max_sll_phi_db - ref.sll_phi) <= 1.5;
                md << "| " << ref.name << " | " << fixed(a->sll.max_sll_theta_db, 2) << " | " << fixed(ref.sll_theta, 2)
                   << " | " << fixed(a->sll.max_sll_phi_db, 2) << " | " << fixed(ref.sll_phi, 2) << " | "
                   << (ok ? "OK" : "DEVIATES") << " |\n";
            }

        const ReferenceArray &base = reference_arrays[0];
        const double base_gain = beam_packing_gain(base.theta_3db, base.phi_3db);
        const ArrayRecord *base_rec = find_array(report, base.name);

        md << "\n## Beam packing gain relative to RPA\n\n"
           << "G_BP = (90 / theta_3dB) (360 / phi_3dB).\n\n"
           << "| array | from reference HPBWs | from measured HPBWs | published claim | status |\n|---|---|---|---|---|\n";
        for (std::size_t i = 1; i < std::size(reference_arrays); ++i)
        {
            const auto &ref = reference_arrays[i];
            const double from_ref = beam_packing_gain(ref.theta_3db, ref.phi_3db) / base_gain;
            const auto *a = find_array(report, ref.name);
            const bool agrees = std::abs(from_ref - claimed_packing_ratio[i]) <= 0.05 * claimed_packing_ratio[i];
            md << "| " << ref.name << " | " << fixed(from_ref, 2) << " | "
               << (a && base_rec ? fixed(a->packing_gain / base_rec->packing_gain, 2) : std::string("n/a")) << " | "
               << fixed(claimed_packing_ratio[i], 0) << " | "
               << (agrees ? "OK" : "DISCREPANT: not reproducible from G_BP and the published HPBWs") << " |\n";
        }

        md << "\n## Inter-UE separation ratios at R = " << fixed(reference_range_m, 0) << " m, h = "
           << fixed(report.height_m, 1) << " m\n\n"
           << "| array | S_phi ratio (ref HPBW) | S_phi ratio (measured) | published | S_theta ratio (ref HPBW) | S_theta ratio (measured) | published |\n"
           << "|---|---|---|---|---|---|---|\n";
        const CellGeometry cell{reference_range_m, report.height_m};
        for (std::size_t i = 1; i < std::size(reference_arrays); ++i)
        {
            const auto &ref = reference_arrays[i];
            const auto *a = find_array(report, ref.name);
            const double az_ref = azimuthal_separation(reference_range_m, base.phi_3db) / azimuthal_separation(reference_range_m, ref.phi_3db);
            const double el_ref = elevation_separation(cell, base.theta_3db) / elevation_separation(cell, ref.theta_3db);
            std::string az_meas = "n/a", el_meas = "n/a";
            if (a && base_rec)
            {
                az_meas = fixed(azimuthal_separation(reference_range_m, base_rec->hpbw.phi_3db_deg) /
                                    azimuthal_separation(reference_range_m, a->hpbw.phi_3db_deg), 2);
                el_meas = fixed(elevation_separation(cell, base_rec->hpbw.theta_3db_deg) /
                                    elevation_separation(cell, a->hpbw.theta_3db_deg), 2);
            }
            md << "| " << ref.name << " | " << fixed(az_ref, 2) << " | " << az_meas << " | "
               << fixed(claimed_az_separation_ratio[i], 2) << " | " << fixed(el_ref, 2) << " | " << el_meas << " | "
               << fixed(claimed_el_separation_ratio[i], 2) << " |\n";
        }

        md << "\n## Monte Carlo SINR and spectral efficiency\n\n"
           << "Desired power is the normalized main-lobe gain and noise is 10^(-SNR/10), so the interference-free "
              "SINR equals the SNR. The published tables exceed the SNR and rely on a power normalization that is not "
              "stated; absolute values are NOT comparable. Orderings are.\n\n"
           << "| array | plane | mean SINR (dB) | mean SE (bps/Hz) | SE of mean SINR | published SINR | published SE |\n"
           << "|---|---|---|---|---|---|---|\n";
        for (auto plane : {CutPlane::Elevation, CutPlane::Azimuth})
            for (const auto &ref : reference_arrays)
                if (const auto *l = find_link(report, ref.name, plane))
                {
                    const bool el = plane == CutPlane::Elevation;
                    md << "| " << ref.name << " | " << to_string(plane) << " | " << fixed(l->stats.mean_sinr_db, 2)
                       << " | " << fixed(l->stats.mean_se, 3) << " | " << fixed(l->stats.se_of_mean_sinr, 3) << " | "
                       << fixed(el ? ref.sinr_el_db : ref.sinr_az_db, 2) << " | " << fixed(el ? ref.se_el : ref.se_az, 2)
                       << " |\n";
                }

        md << "\n### Ordering checks\n\n";
        auto se = [&](const char *name, CutPlane plane) -> double
        {
            const auto *l = find_link(report, name, plane);
            return l ? l->stats.mean_se : std::nan("");
        };
        const bool az_order = se("UCCA_3L", CutPlane::Azimuth) >= se("UCCA_2L", CutPlane::Azimuth) &&
                              se("UCCA_2L", CutPlane::Azimuth) > se("RPA", CutPlane::Azimuth);
        const bool el_order = se("UCCA_3L", CutPlane::Elevation) > se("RPA", CutPlane::Elevation) &&
                              se("UCCA_2L", CutPlane::Elevation) > se("RPA", CutPlane::Elevation);
        md << "- azimuth: SE(UCCA_3L) >= SE(UCCA_2L) > SE(RPA): " << (az_order ? "holds" : "VIOLATED") << "\n";
        md << "- elevation: SE(UCCA_*) > SE(RPA): " << (el_order ? "holds" : "VIOLATED") << "\n";
        if (se("RPA", CutPlane::Azimuth) > 0.0)
            md << "- azimuth SE ratio over RPA: UCCA_2L " << fixed(se("UCCA_2L", CutPlane::Azimuth) / se("RPA", CutPlane::Azimuth), 2)
               << " (published 4.72), UCCA_3L " << fixed(se("UCCA_3L", CutPlane::Azimuth) / se("RPA", CutPlane::Azimuth), 2)
               << " (published 5.22); normalization-dependent\n";
        if (se("RPA", CutPlane::Elevation) > 0.0)
            md << "- elevation SE ratio over RPA: UCCA_2L " << fixed(se("UCCA_2L", CutPlane::Elevation) / se("RPA", CutPlane::Elevation), 2)
               << " (published 1.77), UCCA_3L " << fixed(se("UCCA_3L", CutPlane::Elevation) / se("RPA", CutPlane::Elevation), 2)
               << " (published 1.83); normalization-dependent\n";
        return md.str();
    }
}
