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

#ifndef SEKIT_BANDWIDTH_HPP
#define SEKIT_BANDWIDTH_HPP

#include "sekit/propagation.hpp"

#include <span>
#include <string>
#include <vector>

namespace sekit
{
    // R = BW log2(1 + S_r / (N0 BW)) for a received power fixed across bandwidths.
    double shannon_rate(double s_r_dbm, double bw_hz, double n0_dbm_per_hz);

    // Wideband limit of shannon_rate: S_r / (N0 ln 2).
    double shannon_rate_limit(double s_r_dbm, double n0_dbm_per_hz);

    struct SweepRow
    {
        double distance_m = 0.0;
        double bw_hz = 0.0;
        double snr_db = 0.0;
        double rate_bps = 0.0;
        double se = 0.0;
    };

    // Full distances x bandwidths cross product. S_r = tx - PL(d) is held constant
    // across bandwidths; N0 = -173.6 dBm/Hz + nf_db.
    std::vector<SweepRow> sweep_bw(std::span<const double> distances_m, std::span<const double> bw_list_hz,
                                   const PathLossModel &pathloss, double tx_power_dbm, double nf_db);

    // NR-style carrier numerology for peak-rate curves.
    struct NumerologyConfig
    {
        static constexpr int kSubcarriersPerPrb = 12;

        std::string label = "100MHz";
        double nominal_bw_hz = 100e6;
        int prb_count = 273;
        double scs_hz = 30e3;
        int data_symbols_per_slot = 11;
        int slots_per_frame = 40;
        int dl_slots_used = 27;
        int modulation_bits = 8; // Qm
        double code_rate = 948.0 / 1024.0;

        double occupied_bw_hz() const { return prb_count * kSubcarriersPerPrb * scs_hz; }

        // 14 symbols including their cyclic prefixes: 1 ms at 15 kHz, 0.5 ms at 30 kHz.
        double slot_duration_s() const { return 1e-3 * 15e3 / scs_hz; }

        // Throws std::invalid_argument.
        void validate() const;

        // 273 PRB at 30 kHz in a 100 MHz channel, DDDSUUDDDD with 27 of 40 slots carrying data.
        static NumerologyConfig nr_100mhz();

        // nr_100mhz() with the PRB count scaled to nominal_bw_hz at the same SCS.
        static NumerologyConfig scaled(double nominal_bw_hz);
    };

    struct CurvePoint
    {
        std::string label;
        int layers = 1;
        int carriers = 1;
        double occupied_bw_hz = 0.0; // summed over carriers
        double se_bps_per_hz = 0.0;
        double rate_bps = 0.0;
    };

    // layers * Qm * R * (PRB * 12 * data symbols / slot) * (DL slots / slots).
    CurvePoint peak_cell_rate(const NumerologyConfig &num, int layers);

    // Carrier aggregation: rate and occupied bandwidth scale with the carrier count, SE does not.
    std::vector<CurvePoint> ca_curve(const NumerologyConfig &num, int per_carrier_layers,
                                     std::span<const int> carrier_counts);

    double field_trial_se(double rate_mbps, double occupied_bw_mhz);
}

#endif
