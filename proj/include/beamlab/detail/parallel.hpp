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

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace beamlab::detail
{
    // Applies fn(i) for i in [0, n) over a few worker threads. Each index is visited by exactly one
    // worker, so fn may write to slot i of a preallocated output without synchronisation.
    template <typename Fn>
    void parallel_for(std::size_t n, Fn &&fn, std::size_t serial_below = 4096)
    {
        const std::size_t workers = std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, 8);
        if (n < serial_below || workers == 1)
        {
            for (std::size_t i = 0; i < n; ++i)
                fn(i);
            return;
        }
        std::vector<std::jthread> pool;
        const std::size_t chunk = (n + workers - 1) / workers;
        for (std::size_t w = 0; w < workers; ++w)
        {
            const std::size_t begin = w * chunk, end = std::min(n, begin + chunk);
            if (begin >= end)
                break;
            pool.emplace_back([&fn, begin, end]
                              { for (std::size_t i = begin; i < end; ++i) fn(i); });
        }
    }

    // Pairwise summation in a fixed tree order, independent of how the inputs were produced
    inline double pairwise_sum(const double *first, std::size_t n)
    {
        if (n <= 8)
        {
            double s = 0.0;
            for (std::size_t i = 0; i < n; ++i)
                s += first[i];
            return s;
        }
        const std::size_t half = n / 2;
        return pairwise_sum(first, half) + pairwise_sum(first + half, n - half);
    }
}
