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

#include "beamlab/geometry.hpp"
#include "beamlab/errors.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <type_traits>

namespace beamlab
{
    double CarrierSpec::wavelength_m() const
    {
        validate();
        return speed_of_light / frequency_hz;
    }

    void CarrierSpec::validate() const
    {
        if (!std::isfinite(frequency_hz) || frequency_hz <= 0.0)
            throw ValidationError("carrier frequency must be positive and finite");
    }

    void UccaSpec::validate() const
    {
        if (rings == 0)
            throw ValidationError("UCCA needs at least one ring");
        if (!std::isfinite(spacing_wl) || spacing_wl <= 0.0)
            throw ValidationError("UCCA spacing must be positive");
    }

    void RpaSpec::validate() const
    {
        if (nx == 0 || ny == 0)
            throw ValidationError("RPA dimensions must be at least 1x1");
        if (!std::isfinite(dx_wl) || !std::isfinite(dy_wl) || dx_wl <= 0.0 || dy_wl <= 0.0)
            throw ValidationError("RPA spacings must be positive");
    }

    ArrayLayout::ArrayLayout(ArraySpec source, std::vector<Position> elements,
                             std::vector<std::complex<double>> weights, std::vector<std::size_t> ring_sizes)
        : source_(std::move(source)), elements_(std::move(elements)), weights_(std::move(weights)),
          ring_sizes_(std::move(ring_sizes))
    {
        if (elements_.empty())
            throw ValidationError("array layout has no elements");
        if (elements_.size() != weights_.size())
            throw ValidationError("array layout needs one weight per element (" + std::to_string(elements_.size()) +
                                  " elements, " + std::to_string(weights_.size()) + " weights)");
    }

    ArrayLayout ArrayLayout::with_weights(std::vector<std::complex<double>> weights) const
    {
        return ArrayLayout(source_, elements_, std::move(weights), ring_sizes_);
    }

    std::size_t ucca_ring_size(unsigned ring)
    {
        // r_i / d = i, so the per-ring count depends only on the ring index
        return static_cast<std::size_t>(std::ceil(2.0 * std::numbers::pi * ring));
    }

    ArrayLayout build_ucca(const UccaSpec &spec)
    {
        spec.validate();

        std::vector<Position> elements;
        std::vector<std::size_t> ring_sizes;
        if (spec.include_center)
            elements.push_back({0.0, 0.0});

        for (unsigned i = 1; i <= spec.rings; ++i)
        {
            const double radius = i * spec.spacing_wl;
            const std::size_t count = ucca_ring_size(i);
            ring_sizes.push_back(count);
            for (std::size_t j = 0; j < count; ++j)
            {
                const double az = 2.0 * std::numbers::pi * double(j) / double(count);
                elements.push_back({radius * std::cos(az), radius * std::sin(az)});
            }
        }

        std::vector<std::complex<double>> weights(elements.size(), {1.0, 0.0});
        return ArrayLayout(spec, std::move(elements), std::move(weights), std::move(ring_sizes));
    }

    ArrayLayout build_rpa(const RpaSpec &spec)
    {
        spec.validate();

        std::vector<Position> elements;
        elements.reserve(std::size_t(spec.nx) * spec.ny);
        for (unsigned m = 0; m < spec.nx; ++m)
            for (unsigned n = 0; n < spec.ny; ++n)
                elements.push_back({m * spec.dx_wl, n * spec.dy_wl});

        std::vector<std::complex<double>> weights(elements.size(), {1.0, 0.0});
        return ArrayLayout(spec, std::move(elements), std::move(weights));
    }

    ArrayLayout build_layout(const ArraySpec &spec)
    {
        return std::visit([](const auto &s)
                          {
                              if constexpr (std::is_same_v<std::decay_t<decltype(s)>, UccaSpec>)
                                  return build_ucca(s);
                              else
                                  return build_rpa(s); },
                          spec);
    }

    double aperture_area(const ArrayLayout &layout, const CarrierSpec &carrier)
    {
        const double lambda = carrier.wavelength_m();
        if (const auto *ucca = std::get_if<UccaSpec>(&layout.source()))
        {
            const double radius = ucca->rings * ucca->spacing_wl * lambda;
            return std::numbers::pi * radius * radius;
        }
        const auto &rpa = std::get<RpaSpec>(layout.source());
        return ((rpa.nx - 1) * rpa.dx_wl * lambda) * ((rpa.ny - 1) * rpa.dy_wl * lambda);
    }
}
