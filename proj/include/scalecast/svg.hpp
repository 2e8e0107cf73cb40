#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace scalecast::svg {

// Self-contained SVG chart writer: scatter dots and polylines over a
// linear axis box with nice-number ticks. Output is deterministic for
// identical inputs, so emitted plots are diffable in tests.
struct Series {
    enum class Style { Dots, Line };

    std::string label;
    Style style = Style::Dots;
    std::string color = "#1f77b4";
    std::vector<std::pair<double, double>> points;
};

struct Chart {
    std::string title;
    std::string x_label;
    std::string y_label;
    std::vector<Series> series;

    void render(std::ostream& out) const;
};

}  // namespace scalecast::svg
