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

#include "ampc/landscape/plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "ampc/core/errors.hpp"

namespace ampc {
namespace {

std::string fmt(const char* spec, double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), spec, v);
  return buf;
}

std::string num(double v) { return fmt("%.17g", v); }
std::string px(double v) { return fmt("%.2f", v); }

std::string escape_xml(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '&') out += "&amp;";
    else if (c == '<') out += "&lt;";
    else if (c == '>') out += "&gt;";
    else out += c;
  }
  return out;
}

constexpr int kWidth = 640;
constexpr int kHeight = 440;
constexpr int kMarginLeft = 56;
constexpr int kMarginRight = 16;
constexpr int kMarginTop = 36;
constexpr int kMarginBottom = 44;

const char* kPalette[] = {"#1f5fa6", "#c2502a", "#3a8a3f",
                          "#7b4fa0", "#8a6d1f", "#444444"};
constexpr int kPaletteSize = 6;

void svg_header(std::ostream& os, const std::string& title) {
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth
     << "\" height=\"" << kHeight << "\" viewBox=\"0 0 " << kWidth << " "
     << kHeight << "\">\n";
  os << "<rect width=\"" << kWidth << "\" height=\"" << kHeight
     << "\" fill=\"white\"/>\n";
  os << "<text x=\"" << kWidth / 2 << "\" y=\"22\" font-family=\"sans-serif\""
     << " font-size=\"15\" text-anchor=\"middle\">" << escape_xml(title)
     << "</text>\n";
}

}  // namespace

void write_density_csv(std::ostream& os, const GridDensity& p,
                       const ScoreField* score) {
  if (score != nullptr &&
      static_cast<int64_t>(score->valid.size()) != p.size()) {
    throw ValidationError("write_density_csv: score shape mismatch");
  }
  const int dims = p.dims();
  for (int d = 0; d < dims; ++d) os << "u" << d << ",";
  os << "density";
  if (score != nullptr) {
    for (int d = 0; d < dims; ++d) os << ",score" << d;
  }
  os << "\n";
  for (int64_t c = 0; c < p.size(); ++c) {
    const std::vector<double> coords = p.cell_coords(c);
    for (double u : coords) os << num(u) << ",";
    os << num(p.values()[static_cast<size_t>(c)]);
    if (score != nullptr) {
      const bool ok = score->valid[static_cast<size_t>(c)] != 0;
      for (int d = 0; d < dims; ++d) {
        os << ",";
        if (ok) os << num(score->values[static_cast<size_t>(c) * dims + d]);
      }
    }
    os << "\n";
  }
}

void write_drift_csv(std::ostream& os, std::span<const DriftPoint> points) {
  os << "sigma";
  if (!points.empty()) {
    for (size_t d = 0; d < points[0].argmax_coords.size(); ++d) {
      os << ",argmax_u" << d;
    }
  }
  os << ",drift,n_ties\n";
  for (const DriftPoint& pt : points) {
    os << num(pt.sigma);
    for (double u : pt.argmax_coords) os << "," << num(u);
    os << "," << num(pt.drift) << "," << pt.n_ties << "\n";
  }
}

void write_line_svg(std::ostream& os, std::span<const double> x,
                    const std::vector<std::vector<double>>& series,
                    const std::vector<std::string>& labels,
                    const std::string& title) {
  if (x.size() < 2 || series.empty() || labels.size() != series.size()) {
    throw ValidationError("write_line_svg: need >= 2 points and one label "
                          "per series");
  }
  for (const std::vector<double>& s : series) {
    if (s.size() != x.size()) {
      throw ValidationError("write_line_svg: series length mismatch");
    }
  }
  double ymin = std::numeric_limits<double>::infinity();
  double ymax = -ymin;
  for (const std::vector<double>& s : series) {
    for (double v : s) {
      ymin = std::min(ymin, v);
      ymax = std::max(ymax, v);
    }
  }
  if (!(ymax > ymin)) {  // flat data still needs a nonzero span to scale by
    ymax = ymin + 1.0;
    ymin -= 1.0;
  }
  const double xmin = x.front();
  const double xmax = x.back();
  const double plot_w = kWidth - kMarginLeft - kMarginRight;
  const double plot_h = kHeight - kMarginTop - kMarginBottom;
  const auto sx = [&](double u) {
    return kMarginLeft + (u - xmin) / (xmax - xmin) * plot_w;
  };
  const auto sy = [&](double v) {
    return kMarginTop + (ymax - v) / (ymax - ymin) * plot_h;
  };

  svg_header(os, title);
  os << "<rect x=\"" << kMarginLeft << "\" y=\"" << kMarginTop << "\" width=\""
     << px(plot_w) << "\" height=\"" << px(plot_h)
     << "\" fill=\"none\" stroke=\"#999999\"/>\n";
  os << "<text x=\"" << px(kMarginLeft - 6) << "\" y=\""
     << px(sy(ymax) + 4)
     << "\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"end\">"
     << fmt("%.4g", ymax) << "</text>\n";
  os << "<text x=\"" << px(kMarginLeft - 6) << "\" y=\"" << px(sy(ymin) + 4)
     << "\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"end\">"
     << fmt("%.4g", ymin) << "</text>\n";
  os << "<text x=\"" << px(sx(xmin)) << "\" y=\""
     << px(kHeight - kMarginBottom + 16)
     << "\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"middle\">"
     << fmt("%.4g", xmin) << "</text>\n";
  os << "<text x=\"" << px(sx(xmax)) << "\" y=\""
     << px(kHeight - kMarginBottom + 16)
     << "\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"middle\">"
     << fmt("%.4g", xmax) << "</text>\n";

  for (size_t k = 0; k < series.size(); ++k) {
    const char* color = kPalette[k % kPaletteSize];
    os << "<polyline fill=\"none\" stroke=\"" << color
       << "\" stroke-width=\"1.5\" points=\"";
    for (size_t i = 0; i < x.size(); ++i) {
      if (i > 0) os << " ";
      os << px(sx(x[i])) << "," << px(sy(series[k][i]));
    }
    os << "\"/>\n";
    const double ly = kMarginTop + 14.0 + 16.0 * static_cast<double>(k);
    os << "<line x1=\"" << px(kMarginLeft + plot_w - 150) << "\" y1=\""
       << px(ly - 4) << "\" x2=\"" << px(kMarginLeft + plot_w - 130)
       << "\" y2=\"" << px(ly - 4) << "\" stroke=\"" << color
       << "\" stroke-width=\"1.5\"/>\n";
    os << "<text x=\"" << px(kMarginLeft + plot_w - 124) << "\" y=\""
       << px(ly) << "\" font-family=\"sans-serif\" font-size=\"11\">"
       << escape_xml(labels[k]) << "</text>\n";
  }
  os << "</svg>\n";
}

void write_heatmap_svg(std::ostream& os, const GridDensity& p,
                       const std::string& title) {
  if (p.dims() != 2) {
    throw ValidationError("write_heatmap_svg: needs a 2-D density");
  }
  const int nx = p.axis(0).n;
  const int ny = p.axis(1).n;
  double vmax = 0.0;
  for (double v : p.values()) vmax = std::max(vmax, v);
  if (vmax <= 0.0) vmax = 1.0;

  const double plot_w = kWidth - kMarginLeft - kMarginRight;
  const double plot_h = kHeight - kMarginTop - kMarginBottom;
  const double cw = plot_w / nx;
  const double ch = plot_h / ny;

  svg_header(os, title);
  // Axis 0 runs left to right, axis 1 bottom to top.
  for (int i = 0; i < nx; ++i) {
    for (int j = 0; j < ny; ++j) {
      const double v = p.values()[static_cast<size_t>(i) * ny + j];
      const int shade =
          255 - static_cast<int>(std::lround(235.0 * v / vmax));
      char color[8];
      std::snprintf(color, sizeof(color), "#%02x%02x%02x", shade, shade, 255);
      os << "<rect x=\"" << px(kMarginLeft + i * cw) << "\" y=\""
         << px(kMarginTop + plot_h - (j + 1) * ch) << "\" width=\""
         << px(cw + 0.5) << "\" height=\"" << px(ch + 0.5) << "\" fill=\""
         << color << "\"/>\n";
    }
  }
  const int64_t best = p.argmax_cell();
  const int bi = static_cast<int>(best / ny);
  const int bj = static_cast<int>(best % ny);
  os << "<circle cx=\"" << px(kMarginLeft + (bi + 0.5) * cw) << "\" cy=\""
     << px(kMarginTop + plot_h - (bj + 0.5) * ch)
     << "\" r=\"4\" fill=\"none\" stroke=\"#c2502a\" stroke-width=\"2\"/>\n";
  os << "<rect x=\"" << kMarginLeft << "\" y=\"" << kMarginTop << "\" width=\""
     << px(plot_w) << "\" height=\"" << px(plot_h)
     << "\" fill=\"none\" stroke=\"#999999\"/>\n";
  for (int d = 0; d < 2; ++d) {
    const GridAxis& ax = p.axis(d);
    const bool horiz = d == 0;
    os << "<text x=\""
       << px(horiz ? kMarginLeft : kMarginLeft - 6) << "\" y=\""
       << px(horiz ? kHeight - kMarginBottom + 16 : kMarginTop + plot_h)
       << "\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\""
       << (horiz ? "middle" : "end") << "\">" << fmt("%.4g", ax.lo)
       << "</text>\n";
    os << "<text x=\""
       << px(horiz ? kMarginLeft + plot_w : kMarginLeft - 6) << "\" y=\""
       << px(horiz ? kHeight - kMarginBottom + 16 : kMarginTop + 4)
       << "\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\""
       << (horiz ? "middle" : "end") << "\">" << fmt("%.4g", ax.hi)
       << "</text>\n";
  }
  os << "</svg>\n";
}

}  // namespace ampc
