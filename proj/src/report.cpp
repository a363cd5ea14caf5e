#include "traceconst/report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

namespace traceconst {

std::string format_double(double value) {
    char buf[40];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value,
                                         std::chars_format::general, 17);
    (void)ec;
    return std::string(buf, ptr);
}

namespace {

std::string csv_escape(const std::string& cell) {
    if (cell.find_first_of(",\"\n") == std::string::npos) {
        return cell;
    }
    std::string quoted = "\"";
    for (char c : cell) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

}  // namespace

CsvWriter::CsvWriter(std::vector<std::string> header) : columns_(header.size()) {
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (i) text_ += ',';
        text_ += csv_escape(header[i]);
    }
    text_ += '\n';
}

void CsvWriter::add_row(std::vector<std::string> cells) {
    if (cells.size() != columns_) {
        throw IoError("CSV row width does not match the header");
    }
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) text_ += ',';
        text_ += csv_escape(cells[i]);
    }
    text_ += '\n';
}

void CsvWriter::write_file(const std::string& path) const {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw IoError("cannot write " + path);
    }
    out << text_;
}

// ---------------------------------------------------------------------------

namespace {

constexpr double kWidth = 720.0;
constexpr double kHeight = 480.0;
constexpr double kMarginLeft = 72.0;
constexpr double kMarginRight = 24.0;
constexpr double kMarginTop = 40.0;
constexpr double kMarginBottom = 56.0;

std::string trim_number(double v) {
    std::ostringstream os;
    os.precision(6);
    os << v;
    return os.str();
}

}  // namespace

SvgPlot::SvgPlot(std::string title, std::string x_label, std::string y_label)
    : title_(std::move(title)), x_label_(std::move(x_label)), y_label_(std::move(y_label)) {}

void SvgPlot::add_series(const std::vector<double>& x, const std::vector<double>& y,
                         const std::string& color, const std::string& label) {
    series_.push_back({x, y, color, label, false});
}

void SvgPlot::add_points(const std::vector<double>& x, const std::vector<double>& y,
                         const std::string& color, const std::string& label) {
    series_.push_back({x, y, color, label, true});
}

void SvgPlot::add_vline(double x, const std::string& color, const std::string& label) {
    rules_.push_back({true, x, color, label});
}

void SvgPlot::add_hline(double y, const std::string& color, const std::string& label) {
    rules_.push_back({false, y, color, label});
}

std::string SvgPlot::render() const {
    double x_min = std::numeric_limits<double>::max();
    double x_max = std::numeric_limits<double>::lowest();
    double y_min = x_min;
    double y_max = x_max;
    for (const auto& s : series_) {
        for (double v : s.x) {
            x_min = std::min(x_min, v);
            x_max = std::max(x_max, v);
        }
        for (double v : s.y) {
            y_min = std::min(y_min, v);
            y_max = std::max(y_max, v);
        }
    }
    for (const auto& r : rules_) {
        if (r.vertical) {
            x_min = std::min(x_min, r.at);
            x_max = std::max(x_max, r.at);
        } else {
            y_min = std::min(y_min, r.at);
            y_max = std::max(y_max, r.at);
        }
    }
    if (!(x_min < x_max)) {
        x_min -= 0.5;
        x_max += 0.5;
    }
    if (!(y_min < y_max)) {
        y_min -= 0.5;
        y_max += 0.5;
    }
    const double y_pad = 0.05 * (y_max - y_min);
    y_min -= y_pad;
    y_max += y_pad;

    const double plot_w = kWidth - kMarginLeft - kMarginRight;
    const double plot_h = kHeight - kMarginTop - kMarginBottom;
    auto px = [&](double x) { return kMarginLeft + (x - x_min) / (x_max - x_min) * plot_w; };
    auto py = [&](double y) { return kMarginTop + (y_max - y) / (y_max - y_min) * plot_h; };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\""
        << kHeight << "\" viewBox=\"0 0 " << kWidth << " " << kHeight << "\">\n";
    svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    svg << "<text x=\"" << kWidth / 2 << "\" y=\"24\" text-anchor=\"middle\" "
        << "font-family=\"sans-serif\" font-size=\"16\">" << title_ << "</text>\n";

    // axes and ticks
    svg << "<g stroke=\"#333\" stroke-width=\"1\" font-family=\"sans-serif\" font-size=\"11\">\n";
    svg << "<line x1=\"" << kMarginLeft << "\" y1=\"" << kMarginTop + plot_h << "\" x2=\""
        << kMarginLeft + plot_w << "\" y2=\"" << kMarginTop + plot_h << "\"/>\n";
    svg << "<line x1=\"" << kMarginLeft << "\" y1=\"" << kMarginTop << "\" x2=\"" << kMarginLeft
        << "\" y2=\"" << kMarginTop + plot_h << "\"/>\n";
    const int ticks = 6;
    for (int i = 0; i <= ticks; ++i) {
        const double tx = x_min + (x_max - x_min) * i / ticks;
        const double ty = y_min + (y_max - y_min) * i / ticks;
        svg << "<line x1=\"" << px(tx) << "\" y1=\"" << kMarginTop + plot_h << "\" x2=\""
            << px(tx) << "\" y2=\"" << kMarginTop + plot_h + 5 << "\"/>\n";
        svg << "<text x=\"" << px(tx) << "\" y=\"" << kMarginTop + plot_h + 18
            << "\" text-anchor=\"middle\" stroke=\"none\" fill=\"#333\">" << trim_number(tx)
            << "</text>\n";
        svg << "<line x1=\"" << kMarginLeft - 5 << "\" y1=\"" << py(ty) << "\" x2=\""
            << kMarginLeft << "\" y2=\"" << py(ty) << "\"/>\n";
        svg << "<text x=\"" << kMarginLeft - 8 << "\" y=\"" << py(ty) + 4
            << "\" text-anchor=\"end\" stroke=\"none\" fill=\"#333\">" << trim_number(ty)
            << "</text>\n";
    }
    svg << "</g>\n";
    svg << "<text x=\"" << kMarginLeft + plot_w / 2 << "\" y=\"" << kHeight - 12
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">" << x_label_
        << "</text>\n";
    svg << "<text x=\"18\" y=\"" << kMarginTop + plot_h / 2
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\" "
        << "transform=\"rotate(-90 18 " << kMarginTop + plot_h / 2 << ")\">" << y_label_
        << "</text>\n";

    for (const auto& r : rules_) {
        if (r.vertical) {
            svg << "<line x1=\"" << px(r.at) << "\" y1=\"" << kMarginTop << "\" x2=\"" << px(r.at)
                << "\" y2=\"" << kMarginTop + plot_h << "\" stroke=\"" << r.color
                << "\" stroke-dasharray=\"4 3\"/>\n";
            if (!r.label.empty()) {
                svg << "<text x=\"" << px(r.at) + 4 << "\" y=\"" << kMarginTop + 14
                    << "\" font-family=\"sans-serif\" font-size=\"11\" fill=\"" << r.color
                    << "\">" << r.label << "</text>\n";
            }
        } else {
            svg << "<line x1=\"" << kMarginLeft << "\" y1=\"" << py(r.at) << "\" x2=\""
                << kMarginLeft + plot_w << "\" y2=\"" << py(r.at) << "\" stroke=\"" << r.color
                << "\" stroke-dasharray=\"4 3\"/>\n";
            if (!r.label.empty()) {
                svg << "<text x=\"" << kMarginLeft + plot_w - 4 << "\" y=\"" << py(r.at) - 5
                    << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\" "
                    << "fill=\"" << r.color << "\">" << r.label << "</text>\n";
            }
        }
    }

    double legend_y = kMarginTop + 14.0;
    for (const auto& s : series_) {
        if (s.points_only) {
            svg << "<g fill=\"" << s.color << "\">\n";
            for (std::size_t i = 0; i < s.x.size(); ++i) {
                svg << "<circle cx=\"" << px(s.x[i]) << "\" cy=\"" << py(s.y[i])
                    << "\" r=\"2.5\"/>\n";
            }
            svg << "</g>\n";
        } else {
            svg << "<polyline fill=\"none\" stroke=\"" << s.color
                << "\" stroke-width=\"1.5\" points=\"";
            for (std::size_t i = 0; i < s.x.size(); ++i) {
                svg << px(s.x[i]) << "," << py(s.y[i]) << " ";
            }
            svg << "\"/>\n";
        }
        if (!s.label.empty()) {
            svg << "<text x=\"" << kMarginLeft + plot_w - 8 << "\" y=\"" << legend_y
                << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"12\" fill=\""
                << s.color << "\">" << s.label << "</text>\n";
            legend_y += 16.0;
        }
    }
    svg << "</svg>\n";
    return svg.str();
}

void SvgPlot::write_file(const std::string& path) const {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw IoError("cannot write " + path);
    }
    out << render();
}

}  // namespace traceconst
