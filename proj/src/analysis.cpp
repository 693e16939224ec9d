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

#include "beamlab/analysis.hpp"
#include "beamlab/errors.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>

namespace beamlab
{
    namespace
    {
        // Index view over a cut. An azimuth cut spanning the full circle is treated as periodic: indices
        // outside [0, n) wrap, and their angles are unwrapped by multiples of 360 degrees.
        class CutView
        {
        public:
            explicit CutView(const PatternCut &cut) : cut_(cut)
            {
                if (cut.power_db.empty() || cut.power_db.size() != cut.angles_deg.size())
                    throw ValidationError("pattern cut is empty or malformed");
                n_ = cut.power_db.size();
                const double span = cut.angles_deg.back() - cut.angles_deg.front();
                circular_ = cut.plane == CutPlane::Azimuth && n_ > 2 && span >= 360.0 - 1e-9;
                if (circular_ && span > 360.0 - 1e-9)
                    --n_; // last sample repeats the first
                const auto it = std::max_element(cut.power_db.begin(), cut.power_db.begin() + std::ptrdiff_t(n_));
                if (!std::isfinite(*it))
                    throw DomainError("pattern cut has no finite peak");
                peak_ = std::ptrdiff_t(it - cut.power_db.begin());
            }

            std::ptrdiff_t peak() const { return peak_; }
            std::ptrdiff_t size() const { return std::ptrdiff_t(n_); }
            bool circular() const { return circular_; }

            bool valid(std::ptrdiff_t i) const { return circular_ ? std::abs(i - peak_) < size() : (i >= 0 && i < size()); }

            double power(std::ptrdiff_t i) const { return cut_.power_db[wrap(i)]; }

            double angle(std::ptrdiff_t i) const
            {
                const std::ptrdiff_t k = wrap(i);
                return cut_.angles_deg[k] + 360.0 * double((i - k) / size());
            }

        private:
            std::size_t wrap(std::ptrdiff_t i) const
            {
                const std::ptrdiff_t n = size();
                return std::size_t(((i % n) + n) % n);
            }

            const PatternCut &cut_;
            std::size_t n_ = 0;
            bool circular_ = false;
            std::ptrdiff_t peak_ = 0;
        };

        // Angle where the dB trace crosses `level` between sample `inside` (>= level) and `outside`
        double crossing(const CutView &view, std::ptrdiff_t inside, std::ptrdiff_t outside, double level)
        {
            const double ya = view.power(inside), yb = view.power(outside);
            const double xa = view.angle(inside), xb = view.angle(outside);
            if (!std::isfinite(yb))
                return xb;
            return xa + (level - ya) / (yb - ya) * (xb - xa);
        }

        PatternCut plane_cut(const ArrayLayout &layout, const SteeringTarget &steering, CutPlane plane,
                             const CutSettings &cuts)
        {
            return sample_cut(layout, steering, plane, plane == CutPlane::Elevation ? cuts.theta_range : cuts.phi_range,
                              cuts.step_deg);
        }
    }

    double measure_hpbw(const PatternCut &cut)
    {
        const CutView view(cut);
        const std::ptrdiff_t peak = view.peak();
        const double level = view.power(peak) + half_power_db;

        std::ptrdiff_t left = peak;
        while (view.valid(left) && view.power(left) >= level)
            --left;
        if (!view.valid(left))
            throw DomainError("main lobe exceeds the cut range (no -3 dB crossing below the peak)");

        std::ptrdiff_t right = peak;
        while (view.valid(right) && view.power(right) >= level)
            ++right;
        if (!view.valid(right) || right - left >= view.size())
            throw DomainError("main lobe exceeds the cut range (no -3 dB crossing above the peak)");

        return crossing(view, right - 1, right, level) - crossing(view, left + 1, left, level);
    }

    double measure_max_sll(const PatternCut &cut)
    {
        const CutView view(cut);
        const std::ptrdiff_t peak = view.peak();

        std::ptrdiff_t left = peak;
        while (view.valid(left - 1) && view.power(left - 1) < view.power(left))
            --left;
        std::ptrdiff_t right = peak;
        while (view.valid(right + 1) && right + 1 - left < view.size() && view.power(right + 1) < view.power(right))
            ++right;

        // Samples outside the excised lobe [left, right]
        const std::ptrdiff_t first = right + 1;
        const std::ptrdiff_t last = view.circular() ? left - 1 + view.size() : view.size() - 1;
        double best = -std::numeric_limits<double>::infinity();
        bool any = false;
        auto visit = [&](std::ptrdiff_t i)
        {
            any = true;
            best = std::max(best, view.power(i));
        };
        if (view.circular())
        {
            for (std::ptrdiff_t i = first; i <= last; ++i)
                visit(i);
        }
        else
        {
            for (std::ptrdiff_t i = 0; i < left; ++i)
                visit(i);
            for (std::ptrdiff_t i = first; i <= last; ++i)
                visit(i);
        }
        if (!any)
            throw DomainError("no side-lobe samples remain after excising the main lobe");
        return best - view.power(peak);
    }

    double beam_packing_gain(double theta_3db_deg, double phi_3db_deg)
    {
        if (!(theta_3db_deg > 0.0) || !(phi_3db_deg > 0.0))
            throw DomainError("beamwidths must be positive");
        return (90.0 / theta_3db_deg) * (360.0 / phi_3db_deg);
    }

    HpbwResult measure_hpbw(const ArrayLayout &layout, const SteeringTarget &steering, const CutSettings &cuts)
    {
        return {measure_hpbw(plane_cut(layout, steering, CutPlane::Elevation, cuts)),
                measure_hpbw(plane_cut(layout, steering, CutPlane::Azimuth, cuts))};
    }

    SllResult measure_max_sll(const ArrayLayout &layout, const SteeringTarget &steering, const CutSettings &cuts)
    {
        return {measure_max_sll(plane_cut(layout, steering, CutPlane::Elevation, cuts)),
                measure_max_sll(plane_cut(layout, steering, CutPlane::Azimuth, cuts))};
    }

    std::vector<HpbwSweepPoint> hpbw_sweep(const UccaSpec &family, const std::vector<double> &spacings_wl,
                                           const SteeringTarget &steering, const CutSettings &cuts)
    {
        if (spacings_wl.empty())
            throw ValidationError("HPBW sweep needs at least one spacing");
        for (std::size_t i = 0; i < spacings_wl.size(); ++i)
        {
            if (!(spacings_wl[i] > 0.0))
                throw ValidationError("HPBW sweep spacings must be positive");
            if (i > 0 && !(spacings_wl[i] > spacings_wl[i - 1]))
                throw ValidationError("HPBW sweep spacings must be ascending");
        }

        std::vector<std::future<HpbwSweepPoint>> jobs;
        for (double d : spacings_wl)
        {
            UccaSpec spec = family;
            spec.spacing_wl = d;
            jobs.push_back(std::async(std::launch::async, [spec, steering, cuts]
                                      {
                                          const auto hpbw = measure_hpbw(build_ucca(spec), steering, cuts);
                                          return HpbwSweepPoint{spec.spacing_wl, hpbw.theta_3db_deg, hpbw.phi_3db_deg}; }));
        }

        std::vector<HpbwSweepPoint> out;
        out.reserve(jobs.size());
        for (auto &job : jobs)
            out.push_back(job.get());
        return out;
    }
}
