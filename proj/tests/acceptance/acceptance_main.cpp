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

// Acceptance suite for the 28 GHz UCCA vs RPA study. Prints one PASS/FAIL line per criterion and
// returns nonzero if any criterion fails.

#include "beamlab/analysis.hpp"
#include "beamlab/link.hpp"
#include "beamlab/runner.hpp"
#include "oracles.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace fs = std::filesystem;
using namespace beamlab;

namespace
{
    const SteeringTarget steer{30.0, 60.0};

    struct Outcome
    {
        bool pass = true;
        std::string detail;

        void expect(bool ok, const std::string &what)
        {
            if (!detail.empty())
                detail += "; ";
            detail += (ok ? "" : "FAILED ") + what;
            pass = pass && ok;
        }
    };

    std::string num(double v, int digits = 3)
    {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.*f", digits, v);
        return buf;
    }

    std::string slurp(const fs::path &p)
    {
        std::ifstream in(p, std::ios::binary);
        std::stringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }

    struct Study
    {
        ArrayLayout rpa = build_rpa({10, 10, 0.5, 0.5});
        ArrayLayout u2 = build_ucca({5, 2.0, true});
        ArrayLayout u3 = build_ucca({5, 3.0, true});
        HpbwResult h_rpa, h_u2, h_u3;
        SllResult s_rpa, s_u2, s_u3;
        fs::path dir_a, dir_b;
        RunReport report;

        Study()
        {
            h_rpa = measure_hpbw(rpa, steer);
            h_u2 = measure_hpbw(u2, steer);
            h_u3 = measure_hpbw(u3, steer);
            s_rpa = measure_max_sll(rpa, steer);
            s_u2 = measure_max_sll(u2, steer);
            s_u3 = measure_max_sll(u3, steer);

            std::random_device rd;
            const auto base = fs::temp_directory_path() / ("beamlab_acceptance_" + std::to_string(rd()));
            dir_a = base / "a";
            dir_b = base / "b";
            report = reproduce_paper(dir_a, 20260101);
        }

        ~Study()
        {
            std::error_code ec;
            fs::remove_all(dir_a.parent_path(), ec);
        }
    };

    bool within_hpbw(double measured, double ref) { return std::abs(measured - ref) <= std::max(0.1 * ref, 0.3); }

    Outcome element_counts(Study &s)
    {
        Outcome o;
        o.expect(s.u2.element_count() == 98 && s.u3.element_count() == 98, "UCCA elements " + std::to_string(s.u2.element_count()));
        o.expect(s.u2.ring_sizes() == std::vector<std::size_t>{7, 13, 19, 26, 32}, "rings [7,13,19,26,32]");
        o.expect(s.rpa.element_count() == 100, "RPA elements " + std::to_string(s.rpa.element_count()));
        return o;
    }

    Outcome mainlobe_gain(Study &s)
    {
        Outcome o;
        for (const auto *l : {&s.rpa, &s.u2, &s.u3})
        {
            const double g = std::abs(array_factor(*l, steer, steer.theta_deg, steer.phi_deg));
            const double n = double(l->element_count());
            o.expect(std::abs(g - n) / n <= 1e-9, "|F0| = " + num(g, 9));
        }
        return o;
    }

    Outcome hpbw_reproduction(Study &s)
    {
        Outcome o;
        auto check = [&](const char *name, const HpbwResult &h, double t, double p)
        {
            o.expect(within_hpbw(h.theta_3db_deg, t) && within_hpbw(h.phi_3db_deg, p),
                     std::string(name) + " (" + num(h.theta_3db_deg, 2) + ", " + num(h.phi_3db_deg, 2) + ") vs (" +
                         num(t, 1) + ", " + num(p, 1) + ")");
        };
        check("RPA", s.h_rpa, 12.0, 20.7);
        check("UCCA2", s.h_u2, 3.1, 5.4);
        check("UCCA3", s.h_u3, 2.0, 3.6);
        return o;
    }

    Outcome sll_reproduction(Study &s)
    {
        Outcome o;
        auto check = [&](const char *name, double measured, double ref)
        { o.expect(std::abs(measured - ref) <= 1.5, std::string(name) + " " + num(measured, 2) + " vs " + num(ref, 2)); };
        check("RPA_theta", s.s_rpa.max_sll_theta_db, -24.11);
        check("RPA_phi", s.s_rpa.max_sll_phi_db, -14.64);
        check("UCCA2_theta", s.s_u2.max_sll_theta_db, -18.06);
        check("UCCA2_phi", s.s_u2.max_sll_phi_db, -14.07);
        check("UCCA3_theta", s.s_u3.max_sll_theta_db, -15.64);
        check("UCCA3_phi", s.s_u3.max_sll_phi_db, -11.55);
        o.expect(s.s_rpa.max_sll_theta_db < s.s_u2.max_sll_theta_db && s.s_u2.max_sll_theta_db < s.s_u3.max_sll_theta_db,
                 "theta ordering RPA < UCCA2 < UCCA3");
        o.expect(s.s_rpa.max_sll_phi_db < s.s_u2.max_sll_phi_db && s.s_u2.max_sll_phi_db < s.s_u3.max_sll_phi_db,
                 "phi ordering RPA < UCCA2 < UCCA3");
        return o;
    }

    Outcome separation_ratios(Study &)
    {
        Outcome o;
        const double r = 50.0;
        const CellGeometry cell{r, 10.0};
        const double az2 = azimuthal_separation(r, 20.7) / azimuthal_separation(r, 5.4);
        const double az3 = azimuthal_separation(r, 20.7) / azimuthal_separation(r, 3.6);
        const double el2 = elevation_separation(cell, 12.0) / elevation_separation(cell, 3.1);
        const double el3 = elevation_separation(cell, 12.0) / elevation_separation(cell, 2.0);
        o.expect(std::abs(az2 / 3.87 - 1.0) <= 0.02, "S_phi ratio UCCA2 " + num(az2));
        o.expect(std::abs(az3 / 5.81 - 1.0) <= 0.02, "S_phi ratio UCCA3 " + num(az3));
        o.expect(std::abs(el2 / 2.42 - 1.0) <= 0.03, "S_theta ratio UCCA2 " + num(el2));
        o.expect(std::abs(el3 / 3.47 - 1.0) <= 0.03, "S_theta ratio UCCA3 " + num(el3));
        return o;
    }

    Outcome beam_packing(Study &s)
    {
        Outcome o;
        const double pairs[][2] = {{12.0, 20.7}, {3.1, 5.4}, {2.0, 3.6}, {90.0, 360.0}};
        for (const auto &p : pairs)
        {
            const double direct = (90.0 * 360.0) / (p[0] * p[1]);
            o.expect(std::abs(beam_packing_gain(p[0], p[1]) - direct) <= 1e-12 * direct, "G(" + num(p[0], 1) + ", " + num(p[1], 1) + ")");
        }
        const double r2 = beam_packing_gain(3.1, 5.4) / beam_packing_gain(12.0, 20.7);
        const double r3 = beam_packing_gain(2.0, 3.6) / beam_packing_gain(12.0, 20.7);
        o.expect(std::abs(r2 - 14.84) < 0.005, "ratio UCCA2 " + num(r2, 2));
        o.expect(std::abs(r3 - 34.5) < 0.005, "ratio UCCA3 " + num(r3, 2));

        const std::string summary = slurp(s.dir_a / "summary.md");
        o.expect(summary.find("14.84") != std::string::npos && summary.find("34.50") != std::string::npos,
                 "report prints 14.84 and 34.50");
        std::size_t flagged = 0;
        for (auto pos = summary.find("DISCREPANT"); pos != std::string::npos; pos = summary.find("DISCREPANT", pos + 1))
            ++flagged;
        o.expect(flagged == 2, "report flags both published packing claims (" + std::to_string(flagged) + ")");
        return o;
    }

    Outcome monte_carlo(Study &s)
    {
        Outcome o;
        auto se = [&](const char *name, CutPlane plane)
        {
            for (const auto &l : s.report.links)
                if (l.array == name && l.plane == plane)
                    return l.stats.mean_se;
            return std::nan("");
        };
        const double az_rpa = se("RPA", CutPlane::Azimuth), az_u2 = se("UCCA_2L", CutPlane::Azimuth),
                     az_u3 = se("UCCA_3L", CutPlane::Azimuth);
        const double el_rpa = se("RPA", CutPlane::Elevation), el_u2 = se("UCCA_2L", CutPlane::Elevation),
                     el_u3 = se("UCCA_3L", CutPlane::Elevation);
        o.expect(az_u3 >= az_u2 && az_u2 > az_rpa,
                 "(a) azimuth SE " + num(az_u3) + " >= " + num(az_u2) + " > " + num(az_rpa));
        o.expect(el_u2 > el_rpa && el_u3 > el_rpa,
                 "(a) elevation SE UCCA " + num(el_u2) + ", " + num(el_u3) + " > RPA " + num(el_rpa));

        SinrScenario quiet;
        quiet.trials = 10000;
        const auto free = monte_carlo_link([](double, double) { return 0.0; }, quiet);
        o.expect(std::abs(free.mean_sinr_db - 10.0) <= 1e-12, "(b) interference-free SINR " + num(free.mean_sinr_db, 12) + " dB");

        reproduce_paper(s.dir_b, 20260101);
        o.expect(slurp(s.dir_a / "link_stats.json") == slurp(s.dir_b / "link_stats.json"), "(c) rerun byte-identical");

        const ArrayLayout *layouts[] = {&s.rpa, &s.u2, &s.u3};
        double worst = 0.0;
        for (const auto *l : layouts)
            for (auto plane : {CutPlane::Elevation, CutPlane::Azimuth})
            {
                SinrScenario sc;
                sc.trials = 10000;
                sc.seed = 20260101;
                sc.plane = plane;
                sc.keep_series = true;
                const auto stats = monte_carlo_link(*l, sc);
                double sum = 0.0;
                for (double v : stats.sinr_series)
                    sum += std::log2(1.0 + v);
                worst = std::max(worst, std::abs(stats.mean_se - sum / double(sc.trials)));
            }
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.2e", worst);
        o.expect(worst <= 1e-12, std::string("(d) mean SE vs mean log2(1+SINR_t) max diff ") + buf);
        return o;
    }

    Outcome numerical_hygiene(Study &s)
    {
        Outcome o;
        CutSettings fine;
        fine.step_deg = 0.005;
        double dh = 0.0, ds = 0.0;
        const std::pair<const ArrayLayout *, std::pair<HpbwResult, SllResult>> cases[] = {
            {&s.rpa, {s.h_rpa, s.s_rpa}}, {&s.u2, {s.h_u2, s.s_u2}}, {&s.u3, {s.h_u3, s.s_u3}}};
        for (const auto &[layout, coarse] : cases)
        {
            const auto h = measure_hpbw(*layout, steer, fine);
            const auto l = measure_max_sll(*layout, steer, fine);
            dh = std::max({dh, std::abs(h.theta_3db_deg - coarse.first.theta_3db_deg), std::abs(h.phi_3db_deg - coarse.first.phi_3db_deg)});
            ds = std::max({ds, std::abs(l.max_sll_theta_db - coarse.second.max_sll_theta_db), std::abs(l.max_sll_phi_db - coarse.second.max_sll_phi_db)});
        }
        o.expect(dh < 0.02, "HPBW step change " + num(dh, 5) + " deg");
        o.expect(ds < 0.05, "SLL step change " + num(ds, 5) + " dB");

        double worst = 0.0;
        for (double d : {2.0, 3.0})
        {
            const auto layout = build_ucca({5, d, true});
            const double u0 = std::sin(oracle::rad(30.0)) * std::cos(oracle::rad(60.0));
            const double v0 = std::sin(oracle::rad(30.0)) * std::sin(oracle::rad(60.0));
            for (int t = 0; t <= 90; ++t)
                for (int p = 0; p < 360; ++p)
                {
                    const double u = std::sin(oracle::rad(t)) * std::cos(oracle::rad(p));
                    const double v = std::sin(oracle::rad(t)) * std::sin(oracle::rad(p));
                    std::size_t idx = 1;
                    for (unsigned i = 1; i <= 5; ++i)
                        for (std::size_t j = 0; j < layout.ring_sizes()[i - 1]; ++j, ++idx)
                        {
                            const auto &e = layout.elements()[idx];
                            const double pos = 2.0 * oracle::pi * (e.x_wl * (u - u0) + e.y_wl * (v - v0));
                            worst = std::max(worst, std::abs(pos - oracle::ring_phase(i, j, d, 30.0, 60.0, t, p)));
                        }
                }
        }
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.2e", worst);
        o.expect(worst < 1e-10, std::string("ring vs position phase ") + buf + " rad");
        return o;
    }
}

int main()
{
    Study study;
    const std::pair<const char *, std::function<Outcome(Study &)>> criteria[] = {
        {"AC1 element counts", element_counts},
        {"AC2 mainlobe gain", mainlobe_gain},
        {"AC3 HPBW reproduction", hpbw_reproduction},
        {"AC4 SLL reproduction", sll_reproduction},
        {"AC5 separation ratios", separation_ratios},
        {"AC6 beam packing", beam_packing},
        {"AC7 Monte Carlo properties", monte_carlo},
        {"AC8 numerical hygiene", numerical_hygiene},
    };

    int failures = 0;
    for (const auto &[name, fn] : criteria)
    {
        Outcome o;
        try
        {
            o = fn(study);
        }
        catch (const std::exception &e)
        {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        std::printf("[%s] %s: %s\n", o.pass ? "PASS" : "FAIL", name, o.detail.c_str());
        failures += o.pass ? 0 : 1;
    }
    std::printf("%d/%zu criteria passed\n", int(std::size(criteria)) - failures, std::size(criteria));
    return failures == 0 ? 0 : 1;
}
