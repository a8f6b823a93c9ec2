// SPDX-License-Identifier: Apache-2.0
//
// sekit - spectral efficiency and radio resource utilization toolkit
// Copyright (C) 2026 The sekit authors
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

#ifndef SEKIT_UNITS_HPP
#define SEKIT_UNITS_HPP

#include <cmath>

namespace sekit
{
    inline constexpr double kSpeedOfLight = 2.998e8;       // m/s
    inline constexpr double kThermalNoiseDbmPerHz = -173.6; // kT at room temperature

    // Power-ratio conversions (10·log10 convention throughout).
    inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
    inline double linear_to_db(double ratio) { return 10.0 * std::log10(ratio); }

    // dBm <-> mW use the same base-10 power convention.
    inline double dbm_to_mw(double dbm) { return db_to_linear(dbm); }
    inline double mw_to_dbm(double mw) { return linear_to_db(mw); }
}

#endif
