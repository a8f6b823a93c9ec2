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

#ifndef SEKIT_PROPAGATION_HPP
#define SEKIT_PROPAGATION_HPP

namespace sekit
{
    inline constexpr double kDefaultCarrierHz = 3.5e9;
    inline constexpr double kDefaultPathLossExponent = 3.52;

    // Free-space path loss at the 1 m reference distance, in dB.
    // Throws std::invalid_argument for a non-positive frequency.
    double fspl_1m_db(double carrier_freq_hz);

    // Close-in reference model: PL(d) = FSPL(1 m) + 10 n log10(d / 1 m).
    // There is no shadowing or small-scale fading term.
    class PathLossModel
    {
    public:
        static constexpr double kReferenceDistanceM = 1.0;

        static PathLossModel from_carrier(double carrier_freq_hz, double exponent_n);
        static PathLossModel from_fspl(double fspl_1m_db, double exponent_n);

        double exponent() const { return exponent_n_; }
        double fspl_1m_db() const { return fspl_1m_db_; }

    private:
        PathLossModel(double fspl_1m_db, double exponent_n);

        double fspl_1m_db_;
        double exponent_n_;
    };

    struct NoiseConfig
    {
        double bw_hz = 100e6;
        double nf_db = 5.0;

        void validate() const;
    };

    // Throws std::invalid_argument when d is below the 1 m reference distance.
    double path_loss_db(const PathLossModel &model, double d_m);

    // |h|^2 = 10^(-PL/10).
    double channel_gain_linear(const PathLossModel &model, double d_m);

    // Inverse of the gain conversion, for reporting.
    double path_loss_from_gain_db(double gain_linear);

    double noise_power_dbm(const NoiseConfig &cfg);
}

#endif
