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

#include "ampc/landscape/grid_density.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "ampc/core/errors.hpp"
#include "ampc/kernels/kernels.hpp"

namespace ampc {
namespace {

void check_axes(const std::vector<GridAxis>& axes) {
  if (axes.empty() || axes.size() > 2) {
    throw ValidationError("grid_density: only 1-D and 2-D grids supported");
  }
  int64_t total = 1;
  for (const GridAxis& ax : axes) {
    if (ax.n < 2) throw ValidationError("grid_density: axis needs n >= 2");
    if (!(ax.lo < ax.hi)) {
      throw ValidationError("grid_density: axis needs lo < hi");
    }
    total *= ax.n;
  }
  if (total > (int64_t{1} << 30)) {
    throw ValidationError("grid_density: grid too large");
  }
}

int64_t axes_size(const std::vector<GridAxis>& axes) {
  int64_t total = 1;
  for (const GridAxis& ax : axes) total *= ax.n;
  return total;
}

// Truncated, normalized Gaussian taps for one axis. Empty means identity.
std::vector<double> gaussian_taps(double sigma, double spacing) {
  const int radius = static_cast<int>(std::ceil(6.0 * sigma / spacing));
  if (radius == 0) return {};
  std::vector<double> taps(static_cast<size_t>(2 * radius + 1));
  double sum = 0.0;
  for (int t = -radius; t <= radius; ++t) {
    const double z = t * spacing / sigma;
    taps[static_cast<size_t>(t + radius)] = std::exp(-0.5 * z * z);
    sum += taps[static_cast<size_t>(t + radius)];
  }
  kernels::active().scale(taps.data(), 1.0 / sum,
                          static_cast<int>(taps.size()));
  return taps;
}

// Correlates one line of length n with symmetric taps, zero-padded. src and
// dst must not alias.
void blur_line(const double* src, int n, const std::vector<double>& taps,
               std::vector<double>& padded, double* dst) {
  const int radius = (static_cast<int>(taps.size()) - 1) / 2;
  padded.assign(static_cast<size_t>(n + 2 * radius), 0.0);
  std::copy(src, src + n, padded.begin() + radius);
  kernels::active().correlate_padded(padded.data(), n, taps.data(),
                                     static_cast<int>(taps.size()), dst);
}

}  // namespace

GridDensity::GridDensity(std::vector<GridAxis> axes, std::vector<double> values)
    : axes_(std::move(axes)), values_(std::move(values)) {
  check_axes(axes_);
  if (static_cast<int64_t>(values_.size()) != axes_size(axes_)) {
    throw ValidationError("grid_density: value count does not match grid");
  }
  for (double v : values_) {
    if (!(v >= 0.0) || std::isinf(v)) {
      throw ValidationError("grid_density: values must be finite and >= 0");
    }
  }
}

double GridDensity::cell_volume() const {
  double vol = 1.0;
  for (const GridAxis& ax : axes_) vol *= ax.spacing();
  return vol;
}

double GridDensity::total_mass() const {
  return kernels::active().reduce_sum(values_.data(),
                                      static_cast<int>(size())) *
         cell_volume();
}

void GridDensity::normalize() {
  const double mass = total_mass();
  if (!(mass > 0.0) || std::isinf(mass)) {
    throw ValidationError("grid_density: cannot normalize zero or non-finite "
                          "mass " + std::to_string(mass));
  }
  kernels::active().scale(values_.data(), 1.0 / mass,
                          static_cast<int>(size()));
}

bool GridDensity::is_normalized(double tol) const {
  return std::abs(total_mass() - 1.0) <= tol;
}

int64_t GridDensity::argmax_cell(int* n_ties) const {
  int64_t best = 0;
  for (int64_t c = 1; c < size(); ++c) {
    if (values_[static_cast<size_t>(c)] > values_[static_cast<size_t>(best)]) {
      best = c;
    }
  }
  int ties = 0;
  for (int64_t c = 0; c < size(); ++c) {
    if (values_[static_cast<size_t>(c)] == values_[static_cast<size_t>(best)]) {
      ++ties;
    }
  }
  if (ties == size()) {
    throw ValidationError("grid_density: argmax is ambiguous, all " +
                          std::to_string(ties) + " cells tie");
  }
  if (n_ties != nullptr) *n_ties = ties;
  return best;
}

std::vector<double> GridDensity::cell_coords(int64_t cell) const {
  if (cell < 0 || cell >= size()) {
    throw ValidationError("grid_density: cell index out of range");
  }
  if (dims() == 1) return {axes_[0].coord(static_cast<int>(cell))};
  const int ny = axes_[1].n;
  return {axes_[0].coord(static_cast<int>(cell / ny)),
          axes_[1].coord(static_cast<int>(cell % ny))};
}

GridDensity target_density(
    const std::function<double(std::span<const double>)>& cost_fn,
    std::vector<GridAxis> axes, double lambda) {
  check_axes(axes);
  if (!(lambda > 0.0)) {
    throw ValidationError("target_density: lambda must be > 0");
  }
  const int64_t total = axes_size(axes);
  std::vector<double> costs(static_cast<size_t>(total));
  double min_cost = std::numeric_limits<double>::infinity();
  const int ny = axes.size() == 2 ? axes[1].n : 1;
  std::vector<double> point(axes.size());
  for (int64_t c = 0; c < total; ++c) {
    if (axes.size() == 1) {
      point[0] = axes[0].coord(static_cast<int>(c));
    } else {
      point[0] = axes[0].coord(static_cast<int>(c / ny));
      point[1] = axes[1].coord(static_cast<int>(c % ny));
    }
    const double j = cost_fn(point);
    if (std::isnan(j) || j == -std::numeric_limits<double>::infinity()) {
      throw ValidationError("target_density: cost must be > -inf and not NaN");
    }
    costs[static_cast<size_t>(c)] = j;
    min_cost = std::min(min_cost, j);
  }
  if (std::isinf(min_cost)) {
    throw ValidationError("target_density: every cell has infinite cost, "
                          "the density has no mass");
  }
  std::vector<double> values(static_cast<size_t>(total));
  for (int64_t c = 0; c < total; ++c) {
    const double j = costs[static_cast<size_t>(c)];
    values[static_cast<size_t>(c)] =
        std::isinf(j) ? 0.0 : std::exp(-(j - min_cost) / lambda);
  }
  GridDensity density(std::move(axes), std::move(values));
  density.normalize();
  return density;
}

GridDensity convolve_density(const GridDensity& p, double sigma) {
  if (sigma < 0.0) {
    throw ValidationError("convolve_density: sigma must be >= 0");
  }
  std::vector<GridAxis> axes;
  for (int d = 0; d < p.dims(); ++d) axes.push_back(p.axis(d));
  std::vector<double> values(p.values().begin(), p.values().end());
  if (sigma == 0.0) return GridDensity(std::move(axes), std::move(values));

  std::vector<double> padded;
  std::vector<double> line;
  if (p.dims() == 1) {
    const std::vector<double> taps = gaussian_taps(sigma, axes[0].spacing());
    if (!taps.empty()) {
      line.resize(values.size());
      blur_line(values.data(), static_cast<int>(values.size()), taps, padded,
                line.data());
      values.swap(line);
    }
  } else {
    const int nx = axes[0].n;
    const int ny = axes[1].n;
    // Axis 1: contiguous rows.
    const std::vector<double> taps1 = gaussian_taps(sigma, axes[1].spacing());
    if (!taps1.empty()) {
      line.resize(static_cast<size_t>(ny));
      for (int i = 0; i < nx; ++i) {
        double* row = values.data() + static_cast<int64_t>(i) * ny;
        blur_line(row, ny, taps1, padded, line.data());
        std::copy(line.begin(), line.end(), row);
      }
    }
    // Axis 0: strided columns, gathered into a temporary.
    const std::vector<double> taps0 = gaussian_taps(sigma, axes[0].spacing());
    if (!taps0.empty()) {
      std::vector<double> column(static_cast<size_t>(nx));
      line.resize(static_cast<size_t>(nx));
      for (int j = 0; j < ny; ++j) {
        for (int i = 0; i < nx; ++i) {
          column[static_cast<size_t>(i)] =
              values[static_cast<size_t>(i) * ny + j];
        }
        blur_line(column.data(), nx, taps0, padded, line.data());
        for (int i = 0; i < nx; ++i) {
          values[static_cast<size_t>(i) * ny + j] =
              line[static_cast<size_t>(i)];
        }
      }
    }
  }
  GridDensity result(std::move(axes), std::move(values));
  result.normalize();  // zero-padding clips boundary mass; restore sum to 1
  return result;
}

int local_maxima_count(const GridDensity& p) {
  int count = 0;
  const std::span<const double> v = p.values();
  if (p.dims() == 1) {
    const int n = p.axis(0).n;
    for (int i = 0; i < n; ++i) {
      const double c = v[static_cast<size_t>(i)];
      const bool up = i == 0 || c > v[static_cast<size_t>(i - 1)];
      const bool down = i == n - 1 || c > v[static_cast<size_t>(i + 1)];
      if (up && down) ++count;
    }
    return count;
  }
  const int nx = p.axis(0).n;
  const int ny = p.axis(1).n;
  for (int i = 0; i < nx; ++i) {
    for (int j = 0; j < ny; ++j) {
      const double c = v[static_cast<size_t>(i) * ny + j];
      bool is_max = true;
      for (int di = -1; di <= 1 && is_max; ++di) {
        for (int dj = -1; dj <= 1 && is_max; ++dj) {
          if (di == 0 && dj == 0) continue;
          const int ni = i + di;
          const int nj = j + dj;
          if (ni < 0 || ni >= nx || nj < 0 || nj >= ny) continue;
          if (v[static_cast<size_t>(ni) * ny + nj] >= c) is_max = false;
        }
      }
      if (is_max) ++count;
    }
  }
  return count;
}

ScoreField score_on_grid(const GridDensity& p) {
  const std::span<const double> v = p.values();
  const int dims = p.dims();
  ScoreField field;
  field.values.assign(static_cast<size_t>(p.size()) * dims, 0.0);
  field.valid.assign(static_cast<size_t>(p.size()), 0);

  const int nx = p.axis(0).n;
  const int ny = dims == 2 ? p.axis(1).n : 1;
  const double inv2dx = 1.0 / (2.0 * p.axis(0).spacing());
  const double inv2dy = dims == 2 ? 1.0 / (2.0 * p.axis(1).spacing()) : 0.0;

  for (int64_t c = 0; c < p.size(); ++c) {
    const int i = static_cast<int>(c / ny);
    const int j = static_cast<int>(c % ny);
    const bool interior =
        i > 0 && i < nx - 1 && (dims == 1 || (j > 0 && j < ny - 1));
    if (!interior) continue;
    const double xm = v[static_cast<size_t>(c - ny)];
    const double xp = v[static_cast<size_t>(c + ny)];
    const double ym = dims == 2 ? v[static_cast<size_t>(c - 1)] : 1.0;
    const double yp = dims == 2 ? v[static_cast<size_t>(c + 1)] : 1.0;
    const double center = v[static_cast<size_t>(c)];
    if (!(center > 0.0 && xm > 0.0 && xp > 0.0 && ym > 0.0 && yp > 0.0)) {
      ++field.n_masked;
      continue;
    }
    field.valid[static_cast<size_t>(c)] = 1;
    field.values[static_cast<size_t>(c) * dims] =
        (std::log(xp) - std::log(xm)) * inv2dx;
    if (dims == 2) {
      field.values[static_cast<size_t>(c) * dims + 1] =
          (std::log(yp) - std::log(ym)) * inv2dy;
    }
  }
  return field;
}

std::vector<DriftPoint> optimum_drift(const GridDensity& p0,
                                      std::span<const double> sigmas) {
  if (!p0.is_normalized()) {
    throw ValidationError("optimum_drift: p0 must be normalized");
  }
  const int64_t base_cell = p0.argmax_cell();
  const std::vector<double> base = p0.cell_coords(base_cell);

  std::vector<DriftPoint> out;
  out.reserve(sigmas.size());
  for (double sigma : sigmas) {
    const GridDensity q = convolve_density(p0, sigma);
    DriftPoint pt;
    pt.sigma = sigma;
    pt.argmax_cell = q.argmax_cell(&pt.n_ties);
    pt.argmax_coords = q.cell_coords(pt.argmax_cell);
    double d2 = 0.0;
    for (size_t k = 0; k < base.size(); ++k) {
      const double diff = pt.argmax_coords[k] - base[k];
      d2 += diff * diff;
    }
    pt.drift = std::sqrt(d2);
    out.push_back(std::move(pt));
  }
  return out;
}

}  // namespace ampc
