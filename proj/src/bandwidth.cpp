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

#include "sekit/bandwidth.hpp"
#include "sekit/units.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace sekit
{
    double shannon_rate(double s_r_dbm, double bw_hz, double n0_dbm_per_hz)
    {
        if (!(bw_hz > 0.0))
            throw std::invalid_argument("shannon_rate: bandwidth must be positive");
        const double snr = dbm_to_mw(s_r_dbm) / (dbm_to_mw(n0_dbm_per_hz) * bw_hz);
        return bw_hz * std::log2(1.0 + snr);
    }

    double shannon_rate_limit(double s_r_dbm, double n0_dbm_per_hz)
    {
        return dbm_to_mw(s_r_dbm) / (dbm_to_mw(n0_dbm_per_hz) * std::numbers::ln2);
    }

    std::vector<SweepRow> sweep_bw(std::span<const double> distances_m, std::span<const double> bw_list_hz,
                                   const PathLossModel &pathloss, double tx_power_dbm, double nf_db)
    {
        if (!(nf_db >= 0.0))
            throw std::invalid_argument("sweep_bw: noise figure must be >= 0 dB");
        const double n0 = kThermalNoiseDbmPerHz + nf_db;

        std::vector<SweepRow> rows;
        rows.reserve(distances_m.size() * bw_list_hz.size());
        for (double d : distances_m)
        {
            const double s_r = tx_power_dbm - path_loss_db(pathloss, d);
            for (double bw : bw_list_hz)
            {
                SweepRow row{d, bw, 0.0, shannon_rate(s_r, bw, n0), 0.0};
                row.snr_db = s_r - (n0 + 10.0 * std::log10(bw));
                row.se = row.rate_bps / bw;
                rows.push_back(row);
            }
        }
        return rows;
    }

    void NumerologyConfig::validate() const
    {
        if (!(nominal_bw_hz > 0.0) || !(scs_hz > 0.0))
            throw std::invalid_argument("NumerologyConfig: bandwidth and SCS must be positive");
        if (prb_count < 1)
            throw std::invalid_argument("NumerologyConfig: prb_count must be >= 1");
        if (occupied_bw_hz() > nominal_bw_hz)
            throw std::invalid_argument("NumerologyConfig: occupied bandwidth exceeds the nominal bandwidth");
        if (data_symbols_per_slot < 0 || data_symbols_per_slot > 14)
            throw std::invalid_argument("NumerologyConfig: data symbols per slot must lie in [0, 14]");
        if (slots_per_frame < 1 || dl_slots_used < 0 || dl_slots_used > slots_per_frame)
            throw std::invalid_argument("NumerologyConfig: dl_slots_used must lie in [0, slots_per_frame]");
        if (modulation_bits < 1)
            throw std::invalid_argument("NumerologyConfig: modulation_bits must be >= 1");
        if (!(code_rate > 0.0 && code_rate <= 1.0))
            throw std::invalid_argument("NumerologyConfig: code_rate must lie in (0, 1]");
    }

    NumerologyConfig NumerologyConfig::nr_100mhz()
    {
        return NumerologyConfig{};
    }

    NumerologyConfig NumerologyConfig::scaled(double nominal_bw_hz)
    {
        auto num = nr_100mhz();
        const double ratio = nominal_bw_hz / num.nominal_bw_hz;
        num.prb_count = static_cast<int>(std::floor(num.prb_count * ratio));
        num.nominal_bw_hz = nominal_bw_hz;
        num.label = std::to_string(static_cast<long long>(std::llround(nominal_bw_hz / 1e6))) + "MHz";
        num.validate();
        return num;
    }

    CurvePoint peak_cell_rate(const NumerologyConfig &num, int layers)
    {
        num.validate();
        if (layers < 1)
            throw std::invalid_argument("peak_cell_rate: layers must be >= 1");

        const double re_per_second = static_cast<double>(num.prb_count) * NumerologyConfig::kSubcarriersPerPrb *
                                     num.data_symbols_per_slot / num.slot_duration_s();
        const double duty = static_cast<double>(num.dl_slots_used) / num.slots_per_frame;
        const double per_layer = num.modulation_bits * num.code_rate * re_per_second * duty;

        CurvePoint point;
        point.label = num.label;
        point.layers = layers;
        point.carriers = 1;
        point.occupied_bw_hz = num.occupied_bw_hz();
        point.rate_bps = layers * per_layer;
        point.se_bps_per_hz = point.rate_bps / point.occupied_bw_hz;
        return point;
    }

    std::vector<CurvePoint> ca_curve(const NumerologyConfig &num, int per_carrier_layers,
                                     std::span<const int> carrier_counts)
    {
        const auto single = peak_cell_rate(num, per_carrier_layers);
        std::vector<CurvePoint> points;
        points.reserve(carrier_counts.size());
        for (int k : carrier_counts)
        {
            if (k < 1)
                throw std::invalid_argument("ca_curve: carrier counts must be >= 1");
            CurvePoint p = single;
            p.label = num.label + "-CA";
            p.carriers = k;
            p.rate_bps = k * single.rate_bps;
            p.occupied_bw_hz = k * single.occupied_bw_hz;
            points.push_back(p);
        }
        return points;
    }

    double field_trial_se(double rate_mbps, double occupied_bw_mhz)
    {
        if (!(rate_mbps > 0.0) || !(occupied_bw_mhz > 0.0))
            throw std::invalid_argument("field_trial_se: rate and bandwidth must be positive");
        return rate_mbps / occupied_bw_mhz;
    }
}
