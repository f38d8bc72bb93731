#include "dks/plot.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace dks {

namespace {

constexpr double kWidth = 800.0;
constexpr double kHeight = 500.0;
constexpr double kLeft = 70.0;
constexpr double kRight = 20.0;
constexpr double kTop = 20.0;
constexpr double kBottom = 55.0;

std::string format_number(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%g", v);
    return buf;
}

void append_polyline(std::ostringstream& os, const Trace& trace,
                     double (*value)(const TraceRecord&), double x_max,
                     const char* color) {
    os << "  <polyline fill=\"none\" stroke=\"" << color
       << "\" stroke-width=\"1.2\" points=\"";
    const double plot_w = kWidth - kLeft - kRight;
    const double plot_h = kHeight - kTop - kBottom;
    char buf[64];
    for (const TraceRecord& r : trace.records) {
        const double x = kLeft + plot_w * (static_cast<double>(r.iteration) / x_max);
        const double y = kTop + plot_h * (1.0 - std::clamp(value(r), 0.0, 1.0));
        std::snprintf(buf, sizeof(buf), "%.2f,%.2f ", x, y);
        os << buf;
    }
    os << "\"/>\n";
}

}  // namespace

std::string render_trace_svg(const Trace& trace) {
    const double plot_w = kWidth - kLeft - kRight;
    const double plot_h = kHeight - kTop - kBottom;
    double x_max = 1.0;
    for (const TraceRecord& r : trace.records)
        x_max = std::max(x_max, static_cast<double>(r.iteration));

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth
       << "\" height=\"" << kHeight << "\" viewBox=\"0 0 " << kWidth << ' '
       << kHeight << "\">\n";
    os << "  <rect width=\"" << kWidth << "\" height=\"" << kHeight
       << "\" fill=\"white\"/>\n";

    // Axes with density gridlines every 0.25 and five iteration ticks.
    for (int i = 0; i <= 4; ++i) {
        const double frac = i / 4.0;
        const double y = kTop + plot_h * (1.0 - frac);
        os << "  <line x1=\"" << kLeft << "\" y1=\"" << y << "\" x2=\""
           << kLeft + plot_w << "\" y2=\"" << y
           << "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
        os << "  <text x=\"" << kLeft - 8 << "\" y=\"" << y + 4
           << "\" font-size=\"12\" text-anchor=\"end\">" << format_number(frac)
           << "</text>\n";
        const double x = kLeft + plot_w * frac;
        os << "  <text x=\"" << x << "\" y=\"" << kTop + plot_h + 18
           << "\" font-size=\"12\" text-anchor=\"middle\">"
           << format_number(frac * x_max) << "</text>\n";
    }
    os << "  <line x1=\"" << kLeft << "\" y1=\"" << kTop << "\" x2=\"" << kLeft
       << "\" y2=\"" << kTop + plot_h << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    os << "  <line x1=\"" << kLeft << "\" y1=\"" << kTop + plot_h << "\" x2=\""
       << kLeft + plot_w << "\" y2=\"" << kTop + plot_h
       << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    os << "  <text x=\"" << kLeft + plot_w / 2 << "\" y=\"" << kHeight - 12
       << "\" font-size=\"14\" text-anchor=\"middle\">iteration</text>\n";
    os << "  <text x=\"18\" y=\"" << kTop + plot_h / 2
       << "\" font-size=\"14\" text-anchor=\"middle\" transform=\"rotate(-90 18 "
       << kTop + plot_h / 2 << ")\">edge density</text>\n";

    if (!trace.records.empty()) {
        append_polyline(os, trace, [](const TraceRecord& r) { return r.density; },
                        x_max, "#4878a8");
        append_polyline(os, trace, [](const TraceRecord& r) { return r.best_density; },
                        x_max, "#b2412e");
        os << "  <text x=\"" << kLeft + 10 << "\" y=\"" << kTop + 16
           << "\" font-size=\"12\" fill=\"#4878a8\">density</text>\n";
        os << "  <text x=\"" << kLeft + 10 << "\" y=\"" << kTop + 32
           << "\" font-size=\"12\" fill=\"#b2412e\">best density</text>\n";
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace dks
