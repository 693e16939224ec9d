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

#include "beamlab/config.hpp"
#include "beamlab/errors.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

using nlohmann::json;

namespace beamlab
{
    namespace
    {
        // Reads fields of one JSON object and rejects keys nobody asked for
        class ObjectReader
        {
        public:
            ObjectReader(const json &obj, std::string where) : obj_(obj), where_(std::move(where))
            {
                if (!obj_.is_object())
                    throw ValidationError(where_ + " must be a JSON object");
            }

            bool has(const std::string &key)
            {
                seen_.insert(key);
                return obj_.contains(key);
            }

            template <typename T>
            T get(const std::string &key, const T &fallback)
            {
                return has(key) ? convert<T>(obj_.at(key), key) : fallback;
            }

            template <typename T>
            T require(const std::string &key)
            {
                if (!has(key))
                    throw ValidationError(where_ + "." + key + " is required");
                return convert<T>(obj_.at(key), key);
            }

            const json &raw(const std::string &key)
            {
                if (!has(key))
                    throw ValidationError(where_ + "." + key + " is required");
                return obj_.at(key);
            }

            void finish() const
            {
                for (const auto &[key, value] : obj_.items())
                    if (!seen_.count(key))
                        throw ValidationError("unknown key " + where_ + "." + key);
            }

            std::string path(const std::string &key) const { return where_ + "." + key; }

        private:
            template <typename T>
            T convert(const json &v, const std::string &key) const
            {
                try
                {
                    if constexpr (std::is_same_v<T, double>)
                    {
                        if (!v.is_number())
                            throw ValidationError("");
                    }
                    else if constexpr (std::is_integral_v<T> && !std::is_same_v<T, bool>)
                    {
                        if (!v.is_number_integer() || (std::is_unsigned_v<T> && v.is_number_integer() && !v.is_number_unsigned()))
                            throw ValidationError("");
                    }
                    return v.get<T>();
                }
                catch (const std::exception &)
                {
                    throw ValidationError(where_ + "." + key + " has the wrong type");
                }
            }

            const json &obj_;
            std::string where_;
            std::set<std::string> seen_;
        };

        AngleRange parse_range(const json &v, const std::string &where)
        {
            if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number())
                throw ValidationError(where + " must be a [lo, hi] pair of numbers");
            return {v[0].get<double>(), v[1].get<double>()};
        }

        json range_json(const AngleRange &r) { return json::array({r.lo_deg, r.hi_deg}); }

        NamedArray parse_array(const json &v, const std::string &where)
        {
            ObjectReader r(v, where);
            NamedArray out;
            out.name = r.require<std::string>("name");
            const auto type = r.require<std::string>("type");
            if (type == "ucca")
            {
                UccaSpec s;
                s.rings = r.require<unsigned>("rings");
                s.spacing_wl = r.require<double>("spacing_wl");
                s.include_center = r.get<bool>("include_center", true);
                out.spec = s;
            }
            else if (type == "rpa")
            {
                RpaSpec s;
                s.nx = r.require<unsigned>("nx");
                s.ny = r.require<unsigned>("ny");
                s.dx_wl = r.require<double>("dx_wl");
                s.dy_wl = r.get<double>("dy_wl", s.dx_wl);
                out.spec = s;
            }
            else
                throw ValidationError(where + ".type must be \"ucca\" or \"rpa\"");
            r.finish();
            return out;
        }

        json array_json(const NamedArray &a)
        {
            if (const auto *u = std::get_if<UccaSpec>(&a.spec))
                return {{"name", a.name}, {"type", "ucca"}, {"rings", u->rings}, {"spacing_wl", u->spacing_wl},
                        {"include_center", u->include_center}};
            const auto &p = std::get<RpaSpec>(a.spec);
            return {{"name", a.name}, {"type", "rpa"}, {"nx", p.nx}, {"ny", p.ny}, {"dx_wl", p.dx_wl}, {"dy_wl", p.dy_wl}};
        }

        json to_json(const ScenarioConfig &c)
        {
            json arrays = json::array();
            for (const auto &a : c.arrays)
                arrays.push_back(array_json(a));
            json planes = json::array();
            for (auto p : c.montecarlo.planes)
                planes.push_back(to_string(p));
            json analyses = json::array();
            for (auto a : c.analyses)
                analyses.push_back(to_string(a));

            return {
                {"schema_version", c.schema_version},
                {"carrier", {{"frequency_hz", c.carrier.frequency_hz}}},
                {"arrays", arrays},
                {"steering", {{"theta_deg", c.steering.theta_deg}, {"phi_deg", c.steering.phi_deg}}},
                {"cuts", {{"step_deg", c.cuts.step_deg}, {"theta_range_deg", range_json(c.cuts.theta_range)}, {"phi_range_deg", range_json(c.cuts.phi_range)}}},
                {"cell", {{"height_m", c.height_m}, {"range_m", {{"start", c.ranges.start_m}, {"stop", c.ranges.stop_m}, {"step", c.ranges.step_m}}}}},
                {"sweep", {{"rings", c.sweep.rings}, {"include_center", c.sweep.include_center}, {"spacings_wl", c.sweep.spacings_wl}}},
                {"montecarlo", {{"interferers", c.montecarlo.interferers}, {"snr_db", c.montecarlo.snr_db}, {"trials", c.montecarlo.trials}, {"seed", c.montecarlo.seed}, {"angle_range_deg", range_json(c.montecarlo.angle_range)}, {"planes", planes}}},
                {"packing_reference", c.packing_reference},
                {"analyses", analyses},
                {"output_dir", c.output_dir},
            };
        }

        ScenarioConfig from_json(const json &root)
        {
            ObjectReader r(root, "config");
            ScenarioConfig c;
            c.schema_version = r.require<int>("schema_version");
            if (c.schema_version != config_schema_version)
                throw ValidationError("unsupported schema_version " + std::to_string(c.schema_version));

            if (r.has("carrier"))
            {
                ObjectReader cr(r.raw("carrier"), "config.carrier");
                c.carrier.frequency_hz = cr.require<double>("frequency_hz");
                cr.finish();
            }

            const json &arrays = r.raw("arrays");
            if (!arrays.is_array())
                throw ValidationError("config.arrays must be a list");
            for (std::size_t i = 0; i < arrays.size(); ++i)
                c.arrays.push_back(parse_array(arrays[i], "config.arrays[" + std::to_string(i) + "]"));

            if (r.has("steering"))
            {
                ObjectReader sr(r.raw("steering"), "config.steering");
                c.steering.theta_deg = sr.require<double>("theta_deg");
                c.steering.phi_deg = sr.require<double>("phi_deg");
                sr.finish();
            }

            if (r.has("cuts"))
            {
                ObjectReader cr(r.raw("cuts"), "config.cuts");
                c.cuts.step_deg = cr.get<double>("step_deg", c.cuts.step_deg);
                if (cr.has("theta_range_deg"))
                    c.cuts.theta_range = parse_range(cr.raw("theta_range_deg"), cr.path("theta_range_deg"));
                if (cr.has("phi_range_deg"))
                    c.cuts.phi_range = parse_range(cr.raw("phi_range_deg"), cr.path("phi_range_deg"));
                cr.finish();
            }

            if (r.has("cell"))
            {
                ObjectReader cr(r.raw("cell"), "config.cell");
                c.height_m = cr.get<double>("height_m", c.height_m);
                if (cr.has("range_m"))
                {
                    ObjectReader rr(cr.raw("range_m"), "config.cell.range_m");
                    c.ranges.start_m = rr.require<double>("start");
                    c.ranges.stop_m = rr.require<double>("stop");
                    c.ranges.step_m = rr.require<double>("step");
                    rr.finish();
                }
                cr.finish();
            }

            if (r.has("sweep"))
            {
                ObjectReader sr(r.raw("sweep"), "config.sweep");
                c.sweep.rings = sr.get<unsigned>("rings", c.sweep.rings);
                c.sweep.include_center = sr.get<bool>("include_center", c.sweep.include_center);
                c.sweep.spacings_wl = sr.get<std::vector<double>>("spacings_wl", c.sweep.spacings_wl);
                sr.finish();
            }

            if (r.has("montecarlo"))
            {
                ObjectReader mr(r.raw("montecarlo"), "config.montecarlo");
                auto &m = c.montecarlo;
                m.interferers = mr.get<unsigned>("interferers", m.interferers);
                m.snr_db = mr.get<double>("snr_db", m.snr_db);
                m.trials = mr.get<std::uint64_t>("trials", m.trials);
                m.seed = mr.get<std::uint64_t>("seed", m.seed);
                if (mr.has("angle_range_deg"))
                    m.angle_range = parse_range(mr.raw("angle_range_deg"), mr.path("angle_range_deg"));
                if (mr.has("planes"))
                {
                    m.planes.clear();
                    for (const auto &p : mr.get<std::vector<std::string>>("planes", {}))
                        m.planes.push_back(cut_plane_from_string(p));
                }
                mr.finish();
            }

            c.packing_reference = r.get<std::string>("packing_reference", "");
            if (r.has("analyses"))
            {
                c.analyses.clear();
                for (const auto &a : r.get<std::vector<std::string>>("analyses", {}))
                    c.analyses.push_back(analysis_from_string(a));
            }
            c.output_dir = r.get<std::string>("output_dir", c.output_dir);
            r.finish();
            return c;
        }

        constexpr std::pair<Analysis, const char *> analysis_names[] = {
            {Analysis::Pattern, "pattern"},
            {Analysis::Hpbw, "hpbw"},
            {Analysis::Sll, "sll"},
            {Analysis::Packing, "packing"},
            {Analysis::Separation, "separation"},
            {Analysis::Sweep, "sweep"},
            {Analysis::Area, "area"},
            {Analysis::MonteCarlo, "montecarlo"},
        };
    }

    std::vector<double> RangeSweep::values() const
    {
        if (!(step_m > 0.0) || !(start_m > 0.0) || !(stop_m >= start_m))
            throw ValidationError("range sweep needs 0 < start <= stop and step > 0");
        std::vector<double> out;
        const auto count = static_cast<std::size_t>(std::floor((stop_m - start_m) / step_m + 1e-9)) + 1;
        for (std::size_t i = 0; i < count; ++i)
            out.push_back(start_m + double(i) * step_m);
        return out;
    }

    SinrScenario MonteCarloConfig::scenario(CutPlane plane, const SteeringTarget &desired) const
    {
        SinrScenario s;
        s.interferers = interferers;
        s.snr_db = snr_db;
        s.trials = trials;
        s.seed = seed;
        s.plane = plane;
        s.angle_range = angle_range;
        s.desired = desired;
        return s;
    }

    const char *to_string(Analysis analysis)
    {
        for (const auto &[a, name] : analysis_names)
            if (a == analysis)
                return name;
        return "?";
    }

    Analysis analysis_from_string(const std::string &name)
    {
        for (const auto &[a, n] : analysis_names)
            if (name == n)
                return a;
        throw ValidationError("unknown analysis '" + name + "'");
    }

    std::vector<Analysis> all_analyses()
    {
        std::vector<Analysis> out;
        for (const auto &[a, name] : analysis_names)
            out.push_back(a);
        return out;
    }

    bool ScenarioConfig::wants(Analysis analysis) const
    {
        return std::find(analyses.begin(), analyses.end(), analysis) != analyses.end();
    }

    const NamedArray &ScenarioConfig::packing_reference_array() const
    {
        if (packing_reference.empty())
            return arrays.front();
        for (const auto &a : arrays)
            if (a.name == packing_reference)
                return a;
        throw ValidationError("packing_reference '" + packing_reference + "' names no configured array");
    }

    void ScenarioConfig::validate() const
    {
        if (schema_version != config_schema_version)
            throw ValidationError("unsupported schema_version " + std::to_string(schema_version));
        carrier.validate();
        if (arrays.empty())
            throw ValidationError("config.arrays is empty");

        std::set<std::string> names;
        for (const auto &a : arrays)
        {
            if (a.name.empty())
                throw ValidationError("array names must be non-empty");
            if (a.name.find_first_of("/\\,\"\n") != std::string::npos)
                throw ValidationError("array name '" + a.name + "' contains a reserved character");
            if (!names.insert(a.name).second)
                throw ValidationError("duplicate array name '" + a.name + "'");
            std::visit([](const auto &s) { s.validate(); }, a.spec);
        }

        steering.validate();
        if (!(cuts.step_deg > 0.0))
            throw ValidationError("config.cuts.step_deg must be positive");
        if (!cuts.theta_range.contains(steering.theta_deg) || cuts.theta_range.lo_deg < 0.0 || cuts.theta_range.hi_deg > 90.0)
            throw ValidationError("config.cuts.theta_range_deg must lie in [0, 90] and contain the steering elevation");
        if (!cuts.phi_range.contains(steering.phi_deg) || cuts.phi_range.lo_deg < 0.0 || cuts.phi_range.hi_deg > 360.0)
            throw ValidationError("config.cuts.phi_range_deg must lie in [0, 360] and contain the steering azimuth");

        CellGeometry{ranges.start_m, height_m}.validate();
        ranges.values();

        if (wants(Analysis::Sweep) || wants(Analysis::Area))
        {
            UccaSpec{sweep.rings, 1.0, sweep.include_center}.validate();
            if (sweep.spacings_wl.empty())
                throw ValidationError("config.sweep.spacings_wl is empty");
            for (std::size_t i = 0; i < sweep.spacings_wl.size(); ++i)
                if (!(sweep.spacings_wl[i] > 0.0) || (i > 0 && !(sweep.spacings_wl[i] > sweep.spacings_wl[i - 1])))
                    throw ValidationError("config.sweep.spacings_wl must be positive and ascending");
        }

        if (wants(Analysis::MonteCarlo))
        {
            if (montecarlo.planes.empty())
                throw ValidationError("config.montecarlo.planes is empty");
            for (auto plane : montecarlo.planes)
                montecarlo.scenario(plane, steering).validate();
        }

        packing_reference_array();
        if (analyses.empty())
            throw ValidationError("config.analyses is empty");
    }

    ScenarioConfig parse_config(const std::string &json_text)
    {
        json root;
        try
        {
            root = json::parse(json_text);
        }
        catch (const json::parse_error &e)
        {
            throw ValidationError(std::string("config is not valid JSON: ") + e.what());
        }
        auto config = from_json(root);
        config.validate();
        return config;
    }

    ScenarioConfig load_config(const std::filesystem::path &path)
    {
        std::ifstream in(path);
        if (!in)
            throw ValidationError("cannot open config file " + path.string());
        std::stringstream buffer;
        buffer << in.rdbuf();
        return parse_config(buffer.str());
    }

    std::string serialize_config(const ScenarioConfig &config)
    {
        return to_json(config).dump(2);
    }

    std::string config_hash(const ScenarioConfig &config)
    {
        std::uint64_t h = 0xCBF29CE484222325ULL;
        for (unsigned char ch : to_json(config).dump())
        {
            h ^= ch;
            h *= 0x100000001B3ULL;
        }
        char buf[17];
        std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
        return buf;
    }

    ScenarioConfig reference_study_config()
    {
        ScenarioConfig c;
        c.arrays = {
            {"RPA", RpaSpec{10, 10, 0.5, 0.5}},
            {"UCCA_2L", UccaSpec{5, 2.0, true}},
            {"UCCA_3L", UccaSpec{5, 3.0, true}},
        };
        c.packing_reference = "RPA";
        c.output_dir = "reproduction";
        return c;
    }
}
