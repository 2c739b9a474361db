#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

#include "egim/harness.hpp"

namespace egim {

namespace {

const char* kColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e",
                         "#9467bd", "#8c564b", "#17becf", "#7f7f7f"};

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

}  // namespace

void emit_plot(const std::vector<PlotSeries>& series, const std::string& path,
               const std::string& y_label) {
    // drop non-positive rates (log axis) and empty series up front
    std::vector<PlotSeries> usable;
    for (const auto& s : series) {
        PlotSeries c{s.label, {}, s.line};
        for (auto [x, y] : s.points)
            if (y > 0.0) c.points.emplace_back(x, y);
        std::sort(c.points.begin(), c.points.end());
        if (!c.points.empty()) usable.push_back(std::move(c));
    }
    if (usable.empty()) return;

    double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
    for (const auto& s : usable)
        for (auto [x, y] : s.points) {
            xmin = std::min(xmin, x);
            xmax = std::max(xmax, x);
            ymin = std::min(ymin, y);
            ymax = std::max(ymax, y);
        }
    if (xmax == xmin) xmax = xmin + 1.0;
    double lo = std::floor(std::log10(ymin));
    double hi = std::ceil(std::log10(ymax));
    if (hi == lo) hi = lo + 1.0;

    const double W = 920, H = 640, ml = 80, mr = 200, mt = 30, mb = 60;
    const double pw = W - ml - mr, ph = H - mt - mb;
    auto X = [&](double x) { return ml + (x - xmin) / (xmax - xmin) * pw; };
    auto Y = [&](double y) { return mt + (hi - std::log10(y)) / (hi - lo) * ph; };

    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("emit_plot: cannot open '" + path + "' for writing");
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H
        << "\" viewBox=\"0 0 " << W << " " << H << "\">\n"
        << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    // decade gridlines + y tick labels
    for (int d = static_cast<int>(lo); d <= static_cast<int>(hi); ++d) {
        const double y = Y(std::pow(10.0, d));
        out << "<line x1=\"" << fmt(ml) << "\" y1=\"" << fmt(y) << "\" x2=\"" << fmt(ml + pw)
            << "\" y2=\"" << fmt(y) << "\" stroke=\"#dddddd\"/>\n"
            << "<text x=\"" << fmt(ml - 8) << "\" y=\"" << fmt(y + 4)
            << "\" text-anchor=\"end\" font-size=\"12\">1e" << d << "</text>\n";
    }
    // x ticks every 5 dB (or each point when the span is small)
    const double xstep = (xmax - xmin) > 10.0 ? 5.0 : 1.0;
    for (double x = std::ceil(xmin / xstep) * xstep; x <= xmax + 1e-9; x += xstep) {
        out << "<line x1=\"" << fmt(X(x)) << "\" y1=\"" << fmt(mt) << "\" x2=\"" << fmt(X(x))
            << "\" y2=\"" << fmt(mt + ph) << "\" stroke=\"#eeeeee\"/>\n"
            << "<text x=\"" << fmt(X(x)) << "\" y=\"" << fmt(mt + ph + 18)
            << "\" text-anchor=\"middle\" font-size=\"12\">" << fmt(x) << "</text>\n";
    }
    out << "<rect x=\"" << fmt(ml) << "\" y=\"" << fmt(mt) << "\" width=\"" << fmt(pw)
        << "\" height=\"" << fmt(ph) << "\" fill=\"none\" stroke=\"black\"/>\n"
        << "<text x=\"" << fmt(ml + pw / 2) << "\" y=\"" << fmt(H - 14)
        << "\" text-anchor=\"middle\" font-size=\"14\">SNR (dB)</text>\n"
        << "<text x=\"20\" y=\"" << fmt(mt + ph / 2)
        << "\" text-anchor=\"middle\" font-size=\"14\" transform=\"rotate(-90 20 "
        << fmt(mt + ph / 2) << ")\">" << y_label << "</text>\n";

    for (size_t i = 0; i < usable.size(); ++i) {
        const auto& s = usable[i];
        const char* color = kColors[i % (sizeof kColors / sizeof kColors[0])];
        if (s.line) {
            out << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
            for (auto [x, y] : s.points) out << fmt(X(x)) << ',' << fmt(Y(y)) << ' ';
            out << "\"/>\n";
        } else {
            for (auto [x, y] : s.points)
                out << "<circle cx=\"" << fmt(X(x)) << "\" cy=\"" << fmt(Y(y))
                    << "\" r=\"4\" fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\"/>\n";
        }
        const double ly = mt + 20 + 18 * static_cast<double>(i);
        out << "<line x1=\"" << fmt(ml + pw + 10) << "\" y1=\"" << fmt(ly - 4) << "\" x2=\""
            << fmt(ml + pw + 30) << "\" y2=\"" << fmt(ly - 4) << "\" stroke=\"" << color
            << "\" stroke-width=\"2\"/>\n"
            << "<text x=\"" << fmt(ml + pw + 34) << "\" y=\"" << fmt(ly)
            << "\" font-size=\"12\">" << s.label << "</text>\n";
    }
    out << "</svg>\n";
    if (!out) throw std::runtime_error("emit_plot: write failed for '" + path + "'");
}

}  // namespace egim
