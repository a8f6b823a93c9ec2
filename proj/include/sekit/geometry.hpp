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

#ifndef SEKIT_GEOMETRY_HPP
#define SEKIT_GEOMETRY_HPP

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace sekit
{
    struct Point2D
    {
        double x = 0.0; // meters
        double y = 0.0; // meters

        friend bool operator==(const Point2D &, const Point2D &) = default;
    };

    double distance(Point2D p, Point2D q);

    // Positions of the L radio units plus the index of the desired (center) cell.
    class CellLayout
    {
    public:
        // Throws std::invalid_argument on duplicate positions, isd <= 0 or an invalid center index.
        CellLayout(std::vector<Point2D> oru_positions, double isd_m, std::size_t center_index);

        std::span<const Point2D> positions() const { return oru_positions_; }
        std::size_t size() const { return oru_positions_.size(); }
        double isd_m() const { return isd_m_; }
        std::size_t center_index() const { return center_index_; }
        Point2D center() const { return oru_positions_[center_index_]; }

    private:
        std::vector<Point2D> oru_positions_;
        double isd_m_;
        std::size_t center_index_;
    };

    // rows x cols lattice with spacing isd_m, centered on the origin.
    // Positions are ordered x-major (column index outer, row index inner).
    CellLayout build_grid_layout(std::size_t rows, std::size_t cols, double isd_m);

    // Axis-aligned square over which users are dropped.
    struct UserRegion
    {
        Point2D center;
        double side_m = 0.0;
        double exclusion_radius_m = 0.0;

        // Throws std::invalid_argument unless side_m > 2 * exclusion_radius_m >= 0.
        void validate() const;

        // Square Voronoi cell of the layout's center O-RU (side = ISD).
        static UserRegion center_cell(const CellLayout &layout, double exclusion_radius_m);
    };

    // Uniform draw in [0, 1) with 53 bits of resolution.
    inline double uniform_unit(std::mt19937_64 &rng)
    {
        return static_cast<double>(rng() >> 11) * 0x1.0p-53;
    }

    // Uniform position in the region, redrawn while it falls strictly inside the
    // exclusion radius of any O-RU in the layout.
    Point2D sample_user_position(const UserRegion &region, const CellLayout &layout, std::mt19937_64 &rng);

    // Jittered draw in cell `stratum` (row-major) of a strata_per_side^2 grid over
    // the region. A draw that lands in an exclusion zone is replaced by a plain
    // sample_user_position draw; over a full sweep of the strata this keeps the
    // position density uniform over the allowed area.
    Point2D sample_user_position_stratified(const UserRegion &region, const CellLayout &layout,
                                            std::size_t strata_per_side, std::size_t stratum,
                                            std::mt19937_64 &rng);
}

#endif
