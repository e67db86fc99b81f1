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

#ifndef AMPC_LANDSCAPE_GRID_DENSITY_HPP_
#define AMPC_LANDSCAPE_GRID_DENSITY_HPP_

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace ampc {

// Uniformly spaced sample points including both endpoints.
struct GridAxis {
  double lo = 0.0;
  double hi = 1.0;
  int n = 2;  // >= 2

  double spacing() const { return (hi - lo) / (n - 1); }
  double coord(int i) const { return lo + spacing() * i; }
};

// A density tabulated on a 1-D or 2-D grid. The grid is the ground truth
// for the annealing theory at desk scale: smoothed densities, their modes,
// and their scores all become checkable numbers here.
//
// Values are per-point probability densities; normalization means
// sum(values) * cell_volume() == 1. 2-D storage is row-major with axis 0
// as the slow index: cell (i, j) lives at i * axis(1).n + j.
class GridDensity {
 public:
  // Validates shapes and nonnegativity; does NOT normalize.
  GridDensity(std::vector<GridAxis> axes, std::vector<double> values);

  int dims() const { return static_cast<int>(axes_.size()); }
  const GridAxis& axis(int d) const { return axes_[static_cast<size_t>(d)]; }
  int64_t size() const { return static_cast<int64_t>(values_.size()); }
  double cell_volume() const;

  std::span<const double> values() const { return values_; }
  std::span<double> mutable_values() { return values_; }

  double total_mass() const;
  // Scales values so total_mass() == 1. Throws ValidationError when the
  // current mass is zero or not finite: there is nothing to normalize.
  void normalize();
  bool is_normalized(double tol = 1e-9) const;

  // Flat index of the largest value; exact ties broken by lowest index and
  // counted into *n_ties (>= 1). A fully flat density has no argmax to
  // speak of and throws ValidationError naming the tie count.
  int64_t argmax_cell(int* n_ties = nullptr) const;
  std::vector<double> cell_coords(int64_t cell) const;

 private:
  std::vector<GridAxis> axes_;
  std::vector<double> values_;
};

// Normalized exp(-J / lambda) over the grid, stabilized by subtracting the
// minimum cost before exponentiation. Infinite costs contribute exactly
// zero mass; if every cell is infinite the density has no mass and this
// throws ValidationError.
GridDensity target_density(
    const std::function<double(std::span<const double>)>& cost_fn,
    std::vector<GridAxis> axes, double lambda);

// Gaussian blur with standard deviation sigma in control units, applied
// separably along every axis. The discrete kernel is truncated at 6 sigma
// and renormalized; boundaries are zero-padded and the result renormalized,
// so mass stays exactly 1. sigma = 0 returns the density unchanged.
//
// Discretization error: for densities resolved by the grid the result
// matches the continuous convolution to O(spacing^2) plus the < 2e-9
// relative mass clipped beyond the 6-sigma truncation.
GridDensity convolve_density(const GridDensity& p, double sigma);

// Number of cells strictly greater than every existing neighbor
// (2 neighbors in 1-D, 8 in 2-D; boundary cells compare what they have).
int local_maxima_count(const GridDensity& p);

// Central-difference score field d/dU log p on the grid. Boundary cells,
// nonpositive cells, and cells whose stencil touches a nonpositive value
// are masked out; n_masked counts the interior cells lost that way
// (callers should warn when > 0).
// Component d of cell c lives at c * dims + d.
struct ScoreField {
  std::vector<double> values;
  std::vector<uint8_t> valid;
  int64_t n_masked = 0;
};
ScoreField score_on_grid(const GridDensity& p);

// Mode trajectory under growing kernels: for each sigma, the argmax of
// p0 * N(0, sigma^2 I) and its Euclidean distance to p0's own argmax. The
// distance is the "optimum drift" that makes plain fixed-kernel smoothing
// converge to the wrong place.
struct DriftPoint {
  double sigma = 0.0;
  int64_t argmax_cell = 0;
  std::vector<double> argmax_coords;
  double drift = 0.0;
  int n_ties = 1;
};
std::vector<DriftPoint> optimum_drift(const GridDensity& p0,
                                      std::span<const double> sigmas);

}  // namespace ampc

#endif  // AMPC_LANDSCAPE_GRID_DENSITY_HPP_
