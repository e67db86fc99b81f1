// Copyright 2026 The Annealed MPC Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef AMPC_LANDSCAPE_PLOT_HPP_
#define AMPC_LANDSCAPE_PLOT_HPP_

// Artifact emitters for the landscape tool. All output is deterministic:
// numbers are printed with fixed printf formats, never via locale-dependent
// stream state, so byte-identical inputs give byte-identical files.

#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "ampc/landscape/grid_density.hpp"

namespace ampc {

// CSV with one row per grid cell: coordinates, density, and (when a score
// field is supplied) one score column per axis. Masked score cells print
// empty fields. Doubles use %.17g so values round-trip exactly.
void write_density_csv(std::ostream& os, const GridDensity& p,
                       const ScoreField* score = nullptr);

// CSV with one row per sigma: sigma, argmax coordinates, drift, tie count.
void write_drift_csv(std::ostream& os, std::span<const DriftPoint> points);

// Standalone SVG line plot: one polyline per series over shared x values.
// Series must all have x.size() points. Labels render as a legend.
void write_line_svg(std::ostream& os, std::span<const double> x,
                    const std::vector<std::vector<double>>& series,
                    const std::vector<std::string>& labels,
                    const std::string& title);

// Standalone SVG heatmap of a 2-D density (1-D input throws). Darker cells
// carry more mass; the density maximum is marked.
void write_heatmap_svg(std::ostream& os, const GridDensity& p,
                       const std::string& title);

}  // namespace ampc

#endif  // AMPC_LANDSCAPE_PLOT_HPP_
