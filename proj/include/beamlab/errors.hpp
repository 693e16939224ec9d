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

#include <stdexcept>
#include <string>

namespace beamlab
{
    // Input or configuration violates a precondition (CLI exit code 2)
    class ValidationError : public std::invalid_argument
    {
    public:
        explicit ValidationError(const std::string &what) : std::invalid_argument(what) {}
    };

    // Numerical evaluation left its domain (CLI exit code 3)
    class DomainError : public std::domain_error
    {
    public:
        explicit DomainError(const std::string &what) : std::domain_error(what) {}
    };
}
