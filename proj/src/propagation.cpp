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

#include "sekit/propagation.hpp"
#include "sekit/units.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace sekit
{
    double fspl_1m_db(double carrier_freq_hz)
    {
        if (!(carrier_freq_hz > 0.0) || !std::isfinite(carrier_freq_hz))
            throw std::invalid_argument("fspl_1m_db: carrier frequency must be positive");
        constexpr double d0 = PathLossModel::kReferenceDistanceM;
        return 20.0 * std::log10(4.0 * std::numbers::pi * carrier_freq_hz * d0 / kSpeedOfLight);
    }

    PathLossModel::PathLossModel(double fspl_1m_db, double exponent_n)
        : fspl_1m_db_(fspl_1m_db), exponent_n_(exponent_n)
    {
        if (!(exponent_n_ > 0.0) || !std::isfinite(exponent_n_))
            throw std::invalid_argument("PathLossModel: exponent must be positive");
        if (!std::isfinite(fspl_1m_db_))
            throw std::invalid_argument("PathLossModel: reference FSPL must be finite");
    }

    PathLossModel PathLossModel::from_carrier(double carrier_freq_hz, double exponent_n)
    {
        return PathLossModel(sekit::fspl_1m_db(carrier_freq_hz), exponent_n);
    }

    PathLossModel PathLossModel::from_fspl(double fspl_1m_db, double exponent_n)
    {
        return PathLossModel(fspl_1m_db, exponent_n);
    }

    void NoiseConfig::validate() const
    {
        if (!(bw_hz > 0.0) || !std::isfinite(bw_hz))
            throw std::invalid_argument("NoiseConfig: bandwidth must be positive");
        if (!(nf_db >= 0.0) || !std::isfinite(nf_db))
            throw std::invalid_argument("NoiseConfig: noise figure must be >= 0 dB");
    }

    double path_loss_db(const PathLossModel &model, double d_m)
    {
        if (!(d_m >= PathLossModel::kReferenceDistanceM))
            throw std::invalid_argument("path_loss_db: distance below the 1 m reference");
        return model.fspl_1m_db() + 10.0 * model.exponent() * std::log10(d_m / PathLossModel::kReferenceDistanceM);
    }

    double channel_gain_linear(const PathLossModel &model, double d_m)
    {
        return db_to_linear(-path_loss_db(model, d_m));
    }

    double path_loss_from_gain_db(double gain_linear)
    {
        return -linear_to_db(gain_linear);
    }

    double noise_power_dbm(const NoiseConfig &cfg)
    {
        cfg.validate();
        return kThermalNoiseDbmPerHz + 10.0 * std::log10(cfg.bw_hz) + cfg.nf_db;
    }
}
