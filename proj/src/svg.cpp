#include "scalecast/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>

#include "scalecast/errors.hpp"

namespace scalecast::svg {

namespace {

constexpr double kWidth = 640.0;
constexpr double kHeight = 480.0;
constexpr double kMarginLeft = 70.0;
constexpr double kMarginRight = 20.0;
constexpr double kMarginTop = 40.0;
constexpr double kMarginBottom = 55.0;

struct Range {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();

    void add(double v) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    void pad() {
        if (lo > hi) {  // no data
            lo = 0.0;
            hi = 1.0;
            return;
        }
        if (lo == hi) {
            lo -= 1.0;
            hi += 1.0;
            return;
        }
        const double margin = 0.05 * (hi - lo);
        lo -= margin;
        hi += margin;
    }
};

// Largest 1/2/5 * 10^k step giving at most `max_ticks` intervals.
double nice_step(const Range& r, int max_ticks) {
    const double raw = (r.hi - r.lo) / max_ticks;
    const double mag = std::pow(10.0, std::floor(std::log10(raw)));
    for (double m : {1.0, 2.0, 5.0}) {
        if (m * mag >= raw) return m * mag;
    }
    return 10.0 * mag;
}

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

std::string coord(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

}  // namespace

void Chart::render(std::ostream& out) const {
    Range rx, ry;
    for (const auto& s : series) {
        for (const auto& [x, y] : s.points) {
            if (!std::isfinite(x) || !std::isfinite(y)) {
                throw DataError("svg: non-finite point in series '" + s.label +
                                "'");
            }
            rx.add(x);
            ry.add(y);
        }
    }
    rx.pad();
    ry.pad();

    const double px0 = kMarginLeft, px1 = kWidth - kMarginRight;
    const double py0 = kHeight - kMarginBottom, py1 = kMarginTop;
    const auto sx = [&](double x) {
        return px0 + (x - rx.lo) / (rx.hi - rx.lo) * (px1 - px0);
    };
    const auto sy = [&](double y) {
        return py0 + (y - ry.lo) / (ry.hi - ry.lo) * (py1 - py0);
    };

    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth
        << "\" height=\"" << kHeight << "\" viewBox=\"0 0 " << kWidth << " "
        << kHeight << "\">\n";
    out << "  <rect x=\"0\" y=\"0\" width=\"" << kWidth << "\" height=\""
        << kHeight << "\" fill=\"white\"/>\n";
    out << "  <text x=\"" << kWidth / 2 << "\" y=\"22\" text-anchor=\"middle\""
        << " font-family=\"sans-serif\" font-size=\"15\">" << title
        << "</text>\n";

    // Axis box and grid ticks.
    out << "  <rect x=\"" << coord(px0) << "\" y=\"" << coord(py1)
        << "\" width=\"" << coord(px1 - px0) << "\" height=\""
        << coord(py0 - py1)
        << "\" fill=\"none\" stroke=\"black\" stroke-width=\"1\"/>\n";
    const double xstep = nice_step(rx, 6);
    for (double t = std::ceil(rx.lo / xstep) * xstep; t <= rx.hi + 1e-12 * xstep;
         t += xstep) {
        const double px = sx(t);
        out << "  <line x1=\"" << coord(px) << "\" y1=\"" << coord(py0)
            << "\" x2=\"" << coord(px) << "\" y2=\"" << coord(py0 + 5)
            << "\" stroke=\"black\"/>\n";
        out << "  <text x=\"" << coord(px) << "\" y=\"" << coord(py0 + 19)
            << "\" text-anchor=\"middle\" font-family=\"sans-serif\""
            << " font-size=\"11\">" << num(t) << "</text>\n";
    }
    const double ystep = nice_step(ry, 6);
    for (double t = std::ceil(ry.lo / ystep) * ystep; t <= ry.hi + 1e-12 * ystep;
         t += ystep) {
        const double py = sy(t);
        out << "  <line x1=\"" << coord(px0 - 5) << "\" y1=\"" << coord(py)
            << "\" x2=\"" << coord(px0) << "\" y2=\"" << coord(py)
            << "\" stroke=\"black\"/>\n";
        out << "  <text x=\"" << coord(px0 - 8) << "\" y=\"" << coord(py + 4)
            << "\" text-anchor=\"end\" font-family=\"sans-serif\""
            << " font-size=\"11\">" << num(t) << "</text>\n";
    }
    out << "  <text x=\"" << coord((px0 + px1) / 2) << "\" y=\""
        << coord(kHeight - 12)
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\""
        << " font-size=\"13\">" << x_label << "</text>\n";
    out << "  <text x=\"18\" y=\"" << coord((py0 + py1) / 2)
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\""
        << " font-size=\"13\" transform=\"rotate(-90 18 "
        << coord((py0 + py1) / 2) << ")\">" << y_label << "</text>\n";

    for (const auto& s : series) {
        if (s.style == Series::Style::Line) {
            out << "  <polyline fill=\"none\" stroke=\"" << s.color
                << "\" stroke-width=\"1.5\" points=\"";
            for (std::size_t i = 0; i < s.points.size(); ++i) {
                if (i) out << ' ';
                out << coord(sx(s.points[i].first)) << ','
                    << coord(sy(s.points[i].second));
            }
            out << "\"/>\n";
        } else {
            for (const auto& [x, y] : s.points) {
                out << "  <circle cx=\"" << coord(sx(x)) << "\" cy=\""
                    << coord(sy(y)) << "\" r=\"2\" fill=\"" << s.color
                    << "\" fill-opacity=\"0.6\"/>\n";
            }
        }
    }

    // Legend, top-right inside the axis box.
    double ly = py1 + 16.0;
    for (const auto& s : series) {
        if (s.label.empty()) continue;
        out << "  <rect x=\"" << coord(px1 - 140) << "\" y=\"" << coord(ly - 9)
            << "\" width=\"10\" height=\"10\" fill=\"" << s.color << "\"/>\n";
        out << "  <text x=\"" << coord(px1 - 126) << "\" y=\"" << coord(ly)
            << "\" font-family=\"sans-serif\" font-size=\"12\">" << s.label
            << "</text>\n";
        ly += 16.0;
    }
    out << "</svg>\n";
}

}  // namespace scalecast::svg
