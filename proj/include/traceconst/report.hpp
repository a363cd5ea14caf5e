#pragma once

#include <string>
#include <vector>

#include "traceconst/geom.hpp"

namespace traceconst {

/// Shortest round-trip decimal form of a double, locale-independent,
/// full %.17g-style precision.
std::string format_double(double value);

/// Minimal CSV emitter: one header row, '.' decimal separator, LF line ends.
class CsvWriter {
public:
    explicit CsvWriter(std::vector<std::string> header);
    void add_row(std::vector<std::string> cells);
    const std::string& text() const { return text_; }
    void write_file(const std::string& path) const;

private:
    std::string text_;
    std::size_t columns_ = 0;
};

/// Self-contained single-file SVG line plot with axes and tick labels.
class SvgPlot {
public:
    SvgPlot(std::string title, std::string x_label, std::string y_label);

    void add_series(const std::vector<double>& x, const std::vector<double>& y,
                    const std::string& color, const std::string& label = "");
    void add_points(const std::vector<double>& x, const std::vector<double>& y,
                    const std::string& color, const std::string& label = "");
    void add_vline(double x, const std::string& color, const std::string& label = "");
    void add_hline(double y, const std::string& color, const std::string& label = "");

    std::string render() const;
    void write_file(const std::string& path) const;

private:
    struct Series {
        std::vector<double> x;
        std::vector<double> y;
        std::string color;
        std::string label;
        bool points_only = false;
    };
    struct Rule {
        bool vertical = false;
        double at = 0.0;
        std::string color;
        std::string label;
    };

    std::string title_;
    std::string x_label_;
    std::string y_label_;
    std::vector<Series> series_;
    std::vector<Rule> rules_;
};

}  // namespace traceconst
