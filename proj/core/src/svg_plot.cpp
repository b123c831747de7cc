// SPDX-License-Identifier: Apache-2.0
//
// dirloss - directional path loss engine for mmWave radio links
// Copyright (C) 2026 the dirloss authors
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

#include "dirloss/svg_plot.hpp"

#include "dirloss/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

namespace dirloss
{

namespace
{

constexpr double canvas_w = 800.0;
constexpr double canvas_h = 500.0;
constexpr double margin_l = 70.0;
constexpr double margin_r = 30.0;
constexpr double margin_t = 30.0;
constexpr double margin_b = 55.0;

constexpr const char* palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                   "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};
constexpr int palette_size = 8;

struct Range
{
    double lo = 0.0;
    double hi = 1.0;
};

// Largest step from {1,2,5}*10^k that yields at most max_ticks intervals.
double nice_step(double span, int max_ticks)
{
    const double raw = span / max_ticks;
    const double mag = std::pow(10.0, std::floor(std::log10(raw)));
    for (const double m : {1.0, 2.0, 5.0, 10.0})
        if (m * mag >= raw)
            return m * mag;
    return 10.0 * mag;
}

std::string fmt(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

std::string tick_label(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
}

std::string escape_xml(const std::string& text)
{
    std::string out;
    out.reserve(text.size());
    for (const char c : text)
    {
        switch (c)
        {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        default: out += c; break;
        }
    }
    return out;
}

} // namespace

std::string render_curves_svg(const std::vector<NamedCurve>& curves)
{
    if (curves.empty())
        throw ValidationError("nothing to plot: no curves given");

    Range x{std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity()};
    Range y = x;
    for (const NamedCurve& nc : curves)
    {
        if (nc.curve.rows.empty())
            throw ValidationError("curve `" + nc.label + "` has no rows");
        for (const PlPoint& p : nc.curve.rows)
        {
            x.lo = std::min(x.lo, p.d_m);
            x.hi = std::max(x.hi, p.d_m);
            y.lo = std::min(y.lo, p.pl_out_db);
            y.hi = std::max(y.hi, p.pl_out_db);
        }
    }
    if (x.hi <= x.lo)
        x.hi = x.lo + 1.0;
    // Pad the value axis so curves never touch the frame.
    const double pad = std::max(0.5, 0.05 * (y.hi - y.lo));
    y.lo -= pad;
    y.hi += pad;

    const double plot_w = canvas_w - margin_l - margin_r;
    const double plot_h = canvas_h - margin_t - margin_b;
    const auto map_x = [&](double v) { return margin_l + (v - x.lo) / (x.hi - x.lo) * plot_w; };
    const auto map_y = [&](double v)
    { return margin_t + plot_h - (v - y.lo) / (y.hi - y.lo) * plot_h; };

    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << (int)canvas_w << "\" height=\""
        << (int)canvas_h << "\" viewBox=\"0 0 " << (int)canvas_w << " " << (int)canvas_h
        << "\">\n";
    out << "<rect width=\"" << (int)canvas_w << "\" height=\"" << (int)canvas_h
        << "\" fill=\"white\"/>\n";

    // Grid and tick labels.
    const double x_step = nice_step(x.hi - x.lo, 10);
    const double y_step = nice_step(y.hi - y.lo, 8);
    out << "<g font-family=\"sans-serif\" font-size=\"12\" fill=\"#333333\">\n";
    for (double t = std::ceil(x.lo / x_step) * x_step; t <= x.hi + 1e-9 * x_step; t += x_step)
    {
        const std::string px = fmt(map_x(t));
        out << "<line x1=\"" << px << "\" y1=\"" << fmt(margin_t) << "\" x2=\"" << px
            << "\" y2=\"" << fmt(margin_t + plot_h) << "\" stroke=\"#dddddd\"/>\n";
        out << "<text x=\"" << px << "\" y=\"" << fmt(margin_t + plot_h + 18.0)
            << "\" text-anchor=\"middle\">" << tick_label(t) << "</text>\n";
    }
    for (double t = std::ceil(y.lo / y_step) * y_step; t <= y.hi + 1e-9 * y_step; t += y_step)
    {
        const std::string py = fmt(map_y(t));
        out << "<line x1=\"" << fmt(margin_l) << "\" y1=\"" << py << "\" x2=\""
            << fmt(margin_l + plot_w) << "\" y2=\"" << py << "\" stroke=\"#dddddd\"/>\n";
        out << "<text x=\"" << fmt(margin_l - 8.0) << "\" y=\"" << fmt(map_y(t) + 4.0)
            << "\" text-anchor=\"end\">" << tick_label(t) << "</text>\n";
    }
    out << "<text x=\"" << fmt(margin_l + plot_w / 2.0) << "\" y=\"" << fmt(canvas_h - 12.0)
        << "\" text-anchor=\"middle\">distance (m)</text>\n";
    out << "<text x=\"18\" y=\"" << fmt(margin_t + plot_h / 2.0)
        << "\" text-anchor=\"middle\" transform=\"rotate(-90 18 " << fmt(margin_t + plot_h / 2.0)
        << ")\">path loss (dB)</text>\n";
    out << "</g>\n";

    out << "<rect x=\"" << fmt(margin_l) << "\" y=\"" << fmt(margin_t) << "\" width=\""
        << fmt(plot_w) << "\" height=\"" << fmt(plot_h)
        << "\" fill=\"none\" stroke=\"#333333\"/>\n";

    for (std::size_t i = 0; i < curves.size(); ++i)
    {
        out << "<polyline fill=\"none\" stroke=\"" << palette[i % palette_size]
            << "\" stroke-width=\"1.8\" points=\"";
        bool first = true;
        for (const PlPoint& p : curves[i].curve.rows)
        {
            if (!first)
                out << " ";
            out << fmt(map_x(p.d_m)) << "," << fmt(map_y(p.pl_out_db));
            first = false;
        }
        out << "\"/>\n";
    }

    // Legend, top-left corner of the plot area.
    out << "<g font-family=\"sans-serif\" font-size=\"12\" fill=\"#333333\">\n";
    for (std::size_t i = 0; i < curves.size(); ++i)
    {
        const double ly = margin_t + 16.0 + 18.0 * static_cast<double>(i);
        out << "<line x1=\"" << fmt(margin_l + 10.0) << "\" y1=\"" << fmt(ly) << "\" x2=\""
            << fmt(margin_l + 34.0) << "\" y2=\"" << fmt(ly) << "\" stroke=\""
            << palette[i % palette_size] << "\" stroke-width=\"1.8\"/>\n";
        out << "<text x=\"" << fmt(margin_l + 40.0) << "\" y=\"" << fmt(ly + 4.0) << "\">"
            << escape_xml(curves[i].label) << "</text>\n";
    }
    out << "</g>\n";
    out << "</svg>\n";
    return out.str();
}

void write_curves_svg(const std::filesystem::path& path, const std::vector<NamedCurve>& curves)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw ValidationError("cannot open output file: " + path.string());
    out << render_curves_svg(curves);
    if (!out)
        throw ValidationError("write failed: " + path.string());
}

} // namespace dirloss
