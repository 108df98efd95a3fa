// Copyright 2026 The ugcsat Authors.
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

#include "ugcsat/svg.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ugcsat/csv.hpp"

namespace ugcsat {

namespace {

constexpr double kWidth = 720.0;
constexpr double kHeight = 480.0;
constexpr double kLeft = 70.0;
constexpr double kRight = 20.0;
constexpr double kTop = 40.0;
constexpr double kBottom = 55.0;

std::string escape_xml(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string num(double v) { return format_double(v); }

}  // namespace

void write_svg_plot(const std::filesystem::path& path, const std::string& title,
                    const std::string& x_label, const std::string& y_label,
                    const std::vector<SvgSeries>& series) {
  double min_x = 0.0, max_x = 1.0, min_y = 0.0, max_y = 1.0;
  bool first = true;
  for (const SvgSeries& s : series) {
    for (const auto& [x, y] : s.points) {
      if (first) {
        min_x = max_x = x;
        min_y = max_y = y;
        first = false;
      } else {
        min_x = std::min(min_x, x);
        max_x = std::max(max_x, x);
        min_y = std::min(min_y, y);
        max_y = std::max(max_y, y);
      }
    }
  }
  if (first) throw std::invalid_argument("svg plot has no points");
  if (max_x == min_x) max_x = min_x + 1.0;
  if (max_y == min_y) max_y = min_y + 1.0;

  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kHeight - kTop - kBottom;
  const auto sx = [&](double x) { return kLeft + (x - min_x) / (max_x - min_x) * plot_w; };
  const auto sy = [&](double y) {
    return kTop + plot_h - (y - min_y) / (max_y - min_y) * plot_h;
  };

  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(kWidth) +
         "\" height=\"" + num(kHeight) + "\" viewBox=\"0 0 " + num(kWidth) + " " +
         num(kHeight) + "\">\n";
  out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out += "<text x=\"" + num(kWidth / 2) + "\" y=\"24\" text-anchor=\"middle\" "
         "font-family=\"sans-serif\" font-size=\"16\">" + escape_xml(title) +
         "</text>\n";

  // Frame and ticks.
  out += "<rect x=\"" + num(kLeft) + "\" y=\"" + num(kTop) + "\" width=\"" +
         num(plot_w) + "\" height=\"" + num(plot_h) +
         "\" fill=\"none\" stroke=\"black\"/>\n";
  constexpr int kTicks = 5;
  for (int i = 0; i <= kTicks; ++i) {
    const double fx = min_x + (max_x - min_x) * i / kTicks;
    const double fy = min_y + (max_y - min_y) * i / kTicks;
    const double px = sx(fx);
    const double py = sy(fy);
    out += "<line x1=\"" + num(px) + "\" y1=\"" + num(kTop + plot_h) + "\" x2=\"" +
           num(px) + "\" y2=\"" + num(kTop + plot_h + 5) + "\" stroke=\"black\"/>\n";
    out += "<text x=\"" + num(px) + "\" y=\"" + num(kTop + plot_h + 20) +
           "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">" +
           escape_xml(num(std::round(fx * 1000.0) / 1000.0)) + "</text>\n";
    out += "<line x1=\"" + num(kLeft - 5) + "\" y1=\"" + num(py) + "\" x2=\"" +
           num(kLeft) + "\" y2=\"" + num(py) + "\" stroke=\"black\"/>\n";
    out += "<text x=\"" + num(kLeft - 8) + "\" y=\"" + num(py + 4) +
           "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" +
           escape_xml(num(std::round(fy * 1000.0) / 1000.0)) + "</text>\n";
  }
  out += "<text x=\"" + num(kLeft + plot_w / 2) + "\" y=\"" + num(kHeight - 12) +
         "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">" +
         escape_xml(x_label) + "</text>\n";
  out += "<text x=\"16\" y=\"" + num(kTop + plot_h / 2) +
         "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\" "
         "transform=\"rotate(-90 16 " + num(kTop + plot_h / 2) + ")\">" +
         escape_xml(y_label) + "</text>\n";

  double legend_y = kTop + 14.0;
  for (const SvgSeries& s : series) {
    if (s.line) {
      std::string pts;
      for (const auto& [x, y] : s.points) {
        if (!pts.empty()) pts += ' ';
        pts += num(sx(x)) + ',' + num(sy(y));
      }
      out += "<polyline fill=\"none\" stroke=\"" + s.color +
             "\" stroke-width=\"1.5\" points=\"" + pts + "\"/>\n";
    } else {
      for (const auto& [x, y] : s.points) {
        out += "<circle cx=\"" + num(sx(x)) + "\" cy=\"" + num(sy(y)) +
               "\" r=\"3\" fill=\"" + s.color + "\"/>\n";
      }
    }
    if (!s.label.empty()) {
      out += "<line x1=\"" + num(kLeft + plot_w - 150) + "\" y1=\"" + num(legend_y) +
             "\" x2=\"" + num(kLeft + plot_w - 130) + "\" y2=\"" + num(legend_y) +
             "\" stroke=\"" + s.color + "\" stroke-width=\"3\"/>\n";
      out += "<text x=\"" + num(kLeft + plot_w - 124) + "\" y=\"" + num(legend_y + 4) +
             "\" font-family=\"sans-serif\" font-size=\"12\">" + escape_xml(s.label) +
             "</text>\n";
      legend_y += 18.0;
    }
  }
  out += "</svg>\n";
  write_text_file(path, out);
}

}  // namespace ugcsat
