// SPDX-License-Identifier: Apache-2.0

#include "wmono/csv.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace wmono::cli {

std::string format_double(double value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::general, 12);
  if (res.ec != std::errc{}) {
    throw std::runtime_error("format_double: conversion failed");
  }
  return std::string(buf, res.ptr);
}

void write_curves_csv(std::ostream& out, const std::vector<monogamy::NamedCurve>& curves) {
  out << "param,curve_name,value\n";
  for (const auto& curve : curves) {
    for (const auto& [param, value] : curve.rows) {
      out << format_double(param) << ',' << curve.name << ',' << format_double(value) << '\n';
    }
  }
}

namespace {

constexpr int kWidth = 720;
constexpr int kHeight = 480;
constexpr int kMargin = 64;

const char* kPalette[] = {"#1b6ca8", "#c0392b", "#27855a", "#8e44ad", "#b7742f", "#2c3e50"};

}  // namespace

void write_curves_svg(std::ostream& out, const std::vector<monogamy::NamedCurve>& curves,
                      const std::string& title) {
  double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
  double ymin = xmin, ymax = -xmin;
  for (const auto& c : curves) {
    for (const auto& [p, v] : c.rows) {
      xmin = std::min(xmin, p);
      xmax = std::max(xmax, p);
      ymin = std::min(ymin, v);
      ymax = std::max(ymax, v);
    }
  }
  if (!(xmin <= xmax) || !(ymin <= ymax)) {
    throw std::domain_error("write_curves_svg: nothing to plot");
  }
  if (xmax - xmin < 1e-300) xmax = xmin + 1.0;
  if (ymax - ymin < 1e-300) ymax = ymin + 1.0;

  const auto sx = [&](double p) {
    return kMargin + (p - xmin) / (xmax - xmin) * (kWidth - 2 * kMargin);
  };
  const auto sy = [&](double v) {
    return kHeight - kMargin - (v - ymin) / (ymax - ymin) * (kHeight - 2 * kMargin);
  };

  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\""
      << kHeight << "\" viewBox=\"0 0 " << kWidth << " " << kHeight << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "<text x=\"" << kWidth / 2 << "\" y=\"28\" text-anchor=\"middle\" font-size=\"16\">"
      << title << "</text>\n";
  // frame
  out << "<rect x=\"" << kMargin << "\" y=\"" << kMargin << "\" width=\"" << kWidth - 2 * kMargin
      << "\" height=\"" << kHeight - 2 * kMargin
      << "\" fill=\"none\" stroke=\"#444\" stroke-width=\"1\"/>\n";
  // corner labels
  out << "<text x=\"" << kMargin << "\" y=\"" << kHeight - kMargin + 20
      << "\" font-size=\"12\">" << format_double(xmin) << "</text>\n";
  out << "<text x=\"" << kWidth - kMargin << "\" y=\"" << kHeight - kMargin + 20
      << "\" text-anchor=\"end\" font-size=\"12\">" << format_double(xmax) << "</text>\n";
  out << "<text x=\"" << kMargin - 6 << "\" y=\"" << kHeight - kMargin
      << "\" text-anchor=\"end\" font-size=\"12\">" << format_double(ymin) << "</text>\n";
  out << "<text x=\"" << kMargin - 6 << "\" y=\"" << kMargin + 4
      << "\" text-anchor=\"end\" font-size=\"12\">" << format_double(ymax) << "</text>\n";

  int color = 0;
  int legend_y = kMargin + 16;
  for (const auto& c : curves) {
    const char* stroke = kPalette[color % (sizeof(kPalette) / sizeof(kPalette[0]))];
    ++color;
    if (c.rows.size() == 1) {
      const std::string y = format_double(sy(c.rows.front().second));
      out << "<line x1=\"" << kMargin << "\" y1=\"" << y << "\" x2=\"" << kWidth - kMargin
          << "\" y2=\"" << y << "\" stroke=\"" << stroke
          << "\" stroke-width=\"1.5\" stroke-dasharray=\"6,4\"/>\n";
    } else {
      out << "<polyline fill=\"none\" stroke=\"" << stroke << "\" stroke-width=\"1.5\" points=\"";
      for (const auto& [p, v] : c.rows) {
        out << format_double(sx(p)) << ',' << format_double(sy(v)) << ' ';
      }
      out << "\"/>\n";
    }
    out << "<text x=\"" << kWidth - kMargin - 8 << "\" y=\"" << legend_y
        << "\" text-anchor=\"end\" font-size=\"12\" fill=\"" << stroke << "\">" << c.name
        << "</text>\n";
    legend_y += 16;
  }
  out << "</svg>\n";
}

}  // namespace wmono::cli
