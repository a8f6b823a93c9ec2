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

#include "sekit/geometry.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace sekit
{
    double distance(Point2D p, Point2D q)
    {
        return std::hypot(p.x - q.x, p.y - q.y);
    }

    CellLayout::CellLayout(std::vector<Point2D> oru_positions, double isd_m, std::size_t center_index)
        : oru_positions_(std::move(oru_positions)), isd_m_(isd_m), center_index_(center_index)
    {
        if (oru_positions_.empty())
            throw std::invalid_argument("CellLayout: at least one O-RU position is required");
        if (!(isd_m_ > 0.0) || !std::isfinite(isd_m_))
            throw std::invalid_argument("CellLayout: isd_m must be positive and finite");
        if (center_index_ >= oru_positions_.size())
            throw std::invalid_argument("CellLayout: center_index " + std::to_string(center_index_) +
                                        " out of range");

        for (std::size_t i = 0; i < oru_positions_.size(); ++i)
        {
            const auto &p = oru_positions_[i];
            if (!std::isfinite(p.x) || !std::isfinite(p.y))
                throw std::invalid_argument("CellLayout: non-finite O-RU coordinate");
            for (std::size_t j = 0; j < i; ++j)
                if (oru_positions_[j] == p)
                    throw std::invalid_argument("CellLayout: duplicate O-RU position");
        }
    }

    CellLayout build_grid_layout(std::size_t rows, std::size_t cols, double isd_m)
    {
        if (rows == 0 || cols == 0)
            throw std::invalid_argument("build_grid_layout: rows and cols must be >= 1");
        if (!(isd_m > 0.0))
            throw std::invalid_argument("build_grid_layout: isd_m must be positive");

        std::vector<Point2D> positions;
        positions.reserve(rows * cols);

        // (2k - (n-1)) * isd/2 keeps odd grids on exact multiples of isd
        const double half = 0.5 * isd_m;
        const auto offset = [half](std::size_t k, std::size_t n)
        {
            return (2.0 * static_cast<double>(k) - static_cast<double>(n - 1)) * half;
        };

        std::size_t center = 0;
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t c = 0; c < cols; ++c)
            for (std::size_t r = 0; r < rows; ++r)
            {
                const Point2D p{offset(c, cols), offset(r, rows)};
                const double d = std::hypot(p.x, p.y);
                if (d < best)
                {
                    best = d;
                    center = positions.size();
                }
                positions.push_back(p);
            }

        return CellLayout(std::move(positions), isd_m, center);
    }

    void UserRegion::validate() const
    {
        if (!(exclusion_radius_m >= 0.0))
            throw std::invalid_argument("UserRegion: exclusion radius must be >= 0");
        if (!(side_m > 2.0 * exclusion_radius_m))
            throw std::invalid_argument("UserRegion: side must exceed twice the exclusion radius");
    }

    UserRegion UserRegion::center_cell(const CellLayout &layout, double exclusion_radius_m)
    {
        UserRegion region{layout.center(), layout.isd_m(), exclusion_radius_m};
        region.validate();
        return region;
    }

    namespace
    {
        bool excluded(Point2D p, const CellLayout &layout, double r2)
        {
            if (r2 > 0.0)
                for (const auto &oru : layout.positions())
                {
                    const double dx = p.x - oru.x;
                    const double dy = p.y - oru.y;
                    if (dx * dx + dy * dy < r2)
                        return true;
                }
            return false;
        }
    }

    Point2D sample_user_position(const UserRegion &region, const CellLayout &layout, std::mt19937_64 &rng)
    {
        const double r2 = region.exclusion_radius_m * region.exclusion_radius_m;
        for (;;)
        {
            const double ux = uniform_unit(rng);
            const double uy = uniform_unit(rng);
            const Point2D p{region.center.x + (ux - 0.5) * region.side_m,
                            region.center.y + (uy - 0.5) * region.side_m};
            if (!excluded(p, layout, r2))
                return p;
        }
    }

    Point2D sample_user_position_stratified(const UserRegion &region, const CellLayout &layout,
                                            std::size_t strata_per_side, std::size_t stratum,
                                            std::mt19937_64 &rng)
    {
        if (strata_per_side == 0 || stratum >= strata_per_side * strata_per_side)
            throw std::invalid_argument("sample_user_position_stratified: stratum out of range");
        const double m = static_cast<double>(strata_per_side);
        const double row = static_cast<double>(stratum / strata_per_side);
        const double col = static_cast<double>(stratum % strata_per_side);
        const double ux = (col + uniform_unit(rng)) / m;
        const double uy = (row + uniform_unit(rng)) / m;
        const Point2D p{region.center.x + (ux - 0.5) * region.side_m, region.center.y + (uy - 0.5) * region.side_m};
        if (!excluded(p, layout, region.exclusion_radius_m * region.exclusion_radius_m))
            return p;
        return sample_user_position(region, layout, rng);
    }
}
