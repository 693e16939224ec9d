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

#include <complex>
#include <cstddef>
#include <variant>
#include <vector>

namespace beamlab
{
    inline constexpr double speed_of_light = 299792458.0; // m/s

    struct CarrierSpec
    {
        double frequency_hz = 28.0e9;

        double wavelength_m() const;
        void validate() const;
        bool operator==(const CarrierSpec &) const = default;
    };

    // Uniform concentric circular array. Ring i (1-based) has radius i * spacing_wl and holds
    // ceil(2 pi i) elements, so the arc spacing never exceeds spacing_wl.
    struct UccaSpec
    {
        unsigned rings = 5;
        double spacing_wl = 1.0;
        bool include_center = true;

        void validate() const;
        bool operator==(const UccaSpec &) const = default;
    };

    // Rectangular planar array, element (m, n) at (m * dx_wl, n * dy_wl)
    struct RpaSpec
    {
        unsigned nx = 10;
        unsigned ny = 10;
        double dx_wl = 0.5;
        double dy_wl = 0.5;

        void validate() const;
        bool operator==(const RpaSpec &) const = default;
    };

    using ArraySpec = std::variant<UccaSpec, RpaSpec>;

    enum class ArrayKind
    {
        UCCA,
        RPA
    };

    // Planar element position in wavelength units
    struct Position
    {
        double x_wl = 0.0;
        double y_wl = 0.0;
    };

    // Explicit element layout with complex beamformer weights. Immutable after construction.
    class ArrayLayout
    {
    public:
        ArrayLayout(ArraySpec source, std::vector<Position> elements, std::vector<std::complex<double>> weights,
                    std::vector<std::size_t> ring_sizes = {});

        ArrayKind kind() const { return std::holds_alternative<UccaSpec>(source_) ? ArrayKind::UCCA : ArrayKind::RPA; }
        const ArraySpec &source() const { return source_; }
        const std::vector<Position> &elements() const { return elements_; }
        const std::vector<std::complex<double>> &weights() const { return weights_; }
        std::size_t element_count() const { return elements_.size(); }

        // Element counts per ring, outermost last (UCCA only; the center element is not included)
        const std::vector<std::size_t> &ring_sizes() const { return ring_sizes_; }

        // Copy of this layout with replaced weights
        ArrayLayout with_weights(std::vector<std::complex<double>> weights) const;

    private:
        ArraySpec source_;
        std::vector<Position> elements_;
        std::vector<std::complex<double>> weights_;
        std::vector<std::size_t> ring_sizes_;
    };

    // Number of elements on ring `ring` (1-based) of a UCCA
    std::size_t ucca_ring_size(unsigned ring);

    ArrayLayout build_ucca(const UccaSpec &spec);
    ArrayLayout build_rpa(const RpaSpec &spec);
    ArrayLayout build_layout(const ArraySpec &spec);

    // Physical aperture in m^2: pi (k d lambda)^2 for a UCCA, (nx-1) dx lambda * (ny-1) dy lambda for an RPA
    double aperture_area(const ArrayLayout &layout, const CarrierSpec &carrier);
}
