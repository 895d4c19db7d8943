#include "ordeval/svg.hpp"

#include <fmt/format.h>

namespace ordeval {

namespace {

constexpr double kWidth = 720.0;
constexpr double kHeight = 480.0;
constexpr double kMarginLeft = 70.0;
constexpr double kMarginRight = 24.0;
constexpr double kMarginTop = 40.0;
constexpr double kMarginBottom = 60.0;
constexpr double kPlotWidth = kWidth - kMarginLeft - kMarginRight;
constexpr double kPlotHeight = kHeight - kMarginTop - kMarginBottom;

double x_pixel(double x) { return kMarginLeft + x * kPlotWidth; }

double y_pixel(double value, std::size_t m) {
    // class M at the top, class 1 at the bottom
    return kMarginTop +
           (static_cast<double>(m) - value) / (static_cast<double>(m) - 1.0) *
               kPlotHeight;
}

std::string step_polyline(const std::vector<Label>& values, std::size_t m,
                          const std::string& id, const std::string& color,
                          const std::string& dash) {
    const std::size_t n = values.size();
    std::string points;
    for (std::size_t i = 0; i < n; ++i) {
        const double y = y_pixel(static_cast<double>(values[i]), m);
        points += fmt::format("{:.3f},{:.3f} {:.3f},{:.3f} ",
                              x_pixel(static_cast<double>(i) / static_cast<double>(n)), y,
                              x_pixel(static_cast<double>(i + 1) / static_cast<double>(n)),
                              y);
    }
    if (!points.empty()) points.pop_back();
    return fmt::format(
        "  <polyline id=\"{}\" fill=\"none\" stroke=\"{}\" stroke-width=\"2\"{} "
        "points=\"{}\"/>\n",
        id, color, dash.empty() ? "" : fmt::format(" stroke-dasharray=\"{}\"", dash),
        points);
}

} // namespace

std::string render_step_function_svg(const SortedClassification& sc) {
    const std::size_t n = sc.n_observations();
    const std::size_t m = sc.n_classes();

    std::string svg = fmt::format(
        "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{}\" height=\"{}\" "
        "viewBox=\"0 0 {} {}\">\n",
        kWidth, kHeight, kWidth, kHeight);
    svg += fmt::format(
        "  <rect x=\"0\" y=\"0\" width=\"{}\" height=\"{}\" fill=\"white\"/>\n", kWidth,
        kHeight);

    // axes
    svg += fmt::format(
        "  <line x1=\"{0:.3f}\" y1=\"{1:.3f}\" x2=\"{0:.3f}\" y2=\"{2:.3f}\" "
        "stroke=\"black\"/>\n",
        kMarginLeft, kMarginTop, kMarginTop + kPlotHeight);
    svg += fmt::format(
        "  <line x1=\"{0:.3f}\" y1=\"{1:.3f}\" x2=\"{2:.3f}\" y2=\"{1:.3f}\" "
        "stroke=\"black\"/>\n",
        kMarginLeft, kMarginTop + kPlotHeight, kMarginLeft + kPlotWidth);

    // x ticks at multiples of 1/N when coarse enough, else at tenths
    const std::size_t tick_every = n <= 20 ? 1 : (n + 9) / 10;
    for (std::size_t i = 0; i <= n; i += tick_every) {
        const double x = x_pixel(static_cast<double>(i) / static_cast<double>(n));
        svg += fmt::format(
            "  <line x1=\"{0:.3f}\" y1=\"{1:.3f}\" x2=\"{0:.3f}\" y2=\"{2:.3f}\" "
            "stroke=\"black\"/>\n",
            x, kMarginTop + kPlotHeight, kMarginTop + kPlotHeight + 5.0);
        svg += fmt::format(
            "  <text x=\"{:.3f}\" y=\"{:.3f}\" font-size=\"12\" "
            "text-anchor=\"middle\">{:.1f}</text>\n",
            x, kMarginTop + kPlotHeight + 20.0,
            static_cast<double>(i) / static_cast<double>(n));
    }
    for (std::size_t v = 1; v <= m; ++v) {
        const double y = y_pixel(static_cast<double>(v), m);
        svg += fmt::format(
            "  <line x1=\"{0:.3f}\" y1=\"{1:.3f}\" x2=\"{2:.3f}\" y2=\"{1:.3f}\" "
            "stroke=\"black\"/>\n",
            kMarginLeft - 5.0, y, kMarginLeft);
        svg += fmt::format(
            "  <text x=\"{:.3f}\" y=\"{:.3f}\" font-size=\"12\" "
            "text-anchor=\"end\">{}</text>\n",
            kMarginLeft - 10.0, y + 4.0, v);
    }
    svg += fmt::format(
        "  <text x=\"{:.3f}\" y=\"{:.3f}\" font-size=\"13\" "
        "text-anchor=\"middle\">x</text>\n",
        kMarginLeft + kPlotWidth / 2.0, kHeight - 16.0);
    svg += fmt::format(
        "  <text x=\"18\" y=\"{:.3f}\" font-size=\"13\" text-anchor=\"middle\" "
        "transform=\"rotate(-90 18 {:.3f})\">class</text>\n",
        kMarginTop + kPlotHeight / 2.0, kMarginTop + kPlotHeight / 2.0);

    svg += step_polyline(sc.sorted_predicted, m, "f-exact", "#d95f02", "6,4");
    svg += step_polyline(sc.sorted_actual, m, "f-mod", "#1f77b4", "");

    // legend
    const double lx = kMarginLeft + kPlotWidth - 180.0;
    svg += fmt::format(
        "  <line x1=\"{0:.3f}\" y1=\"{1}\" x2=\"{2:.3f}\" y2=\"{1}\" "
        "stroke=\"#1f77b4\" stroke-width=\"2\"/>\n"
        "  <text x=\"{3:.3f}\" y=\"{4}\" font-size=\"12\">f_mod (true class)</text>\n",
        lx, 20, lx + 28.0, lx + 34.0, 24);
    svg += fmt::format(
        "  <line x1=\"{0:.3f}\" y1=\"{1}\" x2=\"{2:.3f}\" y2=\"{1}\" "
        "stroke=\"#d95f02\" stroke-width=\"2\" stroke-dasharray=\"6,4\"/>\n"
        "  <text x=\"{3:.3f}\" y=\"{4}\" font-size=\"12\">f_exact (predicted)</text>\n",
        lx, 34, lx + 28.0, lx + 34.0, 38);

    svg += "</svg>\n";
    return svg;
}

} // namespace ordeval
