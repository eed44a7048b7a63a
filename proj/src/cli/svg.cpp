#include "canon/cli/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace canon::cli {

namespace {

constexpr double kPanelWidth = 360;
constexpr double kPanelHeight = 360;
constexpr double kMargin = 30;

std::string num(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

std::string xml_escape(const std::string& s)
{
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        default: out += c; break;
        }
    }
    return out;
}

// Data window: real axis always shows [-1.5, 0.5]; both axes grow to fit roots.
struct Window {
    double x_min = -1.5, x_max = 0.5, y_min = -1.0, y_max = 1.0;
    double ox = 0, oy = 0;  // panel origin in pixels

    double px(double x) const { return ox + kMargin + (x - x_min) / (x_max - x_min) * (kPanelWidth - 2 * kMargin); }
    double py(double y) const { return oy + kMargin + (y_max - y) / (y_max - y_min) * (kPanelHeight - 2 * kMargin); }
};

Window fit(const RootPanel& panel, double ox)
{
    Window w;
    w.ox = ox;
    double extent = 1.0;
    for (const auto& r : panel.roots) {
        w.x_min = std::min(w.x_min, r.value.real() - 0.25);
        w.x_max = std::max(w.x_max, r.value.real() + 0.25);
        extent = std::max(extent, std::fabs(r.value.imag()) * 1.15);
    }
    if (panel.test_line) {
        w.x_min = std::min(w.x_min, *panel.test_line - 0.25);
        w.x_max = std::max(w.x_max, *panel.test_line + 0.25);
    }
    w.y_min = -extent;
    w.y_max = extent;
    return w;
}

void vertical_band(std::ostringstream& os, const Window& w, double x0, double x1, const char* cls, const char* fill)
{
    os << "    <rect class=\"guide " << cls << "\" x=\"" << num(w.px(x0)) << "\" y=\"" << num(w.py(w.y_max))
       << "\" width=\"" << num(w.px(x1) - w.px(x0)) << "\" height=\"" << num(w.py(w.y_min) - w.py(w.y_max))
       << "\" fill=\"" << fill << "\" fill-opacity=\"0.35\"/>\n";
}

} // namespace

std::string render_root_svg(const std::vector<RootPanel>& panels)
{
    const std::size_t n = std::max<std::size_t>(panels.size(), 1);
    const double width = kPanelWidth * static_cast<double>(n);
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(width) << "\" height=\"" << num(kPanelHeight)
       << "\" viewBox=\"0 0 " << num(width) << " " << num(kPanelHeight) << "\">\n";
    os << "  <rect x=\"0\" y=\"0\" width=\"" << num(width) << "\" height=\"" << num(kPanelHeight)
       << "\" fill=\"white\"/>\n";

    for (std::size_t i = 0; i < panels.size(); ++i) {
        const RootPanel& panel = panels[i];
        const Window w = fit(panel, kPanelWidth * static_cast<double>(i));
        const double d1 = 1.0 / (panel.dim + 1);
        os << "  <g class=\"panel\">\n";
        os << "    <text x=\"" << num(w.ox + kMargin) << "\" y=\"" << num(w.oy + 18)
           << "\" font-family=\"sans-serif\" font-size=\"12\">" << xml_escape(panel.title) << "</text>\n";
        vertical_band(os, w, -1.0, 0.0, "cs", "#dde8f7");
        vertical_band(os, w, -1.0 + d1, -d1, "ncs", "#a9c6ee");
        os << "    <line class=\"guide cl\" x1=\"" << num(w.px(-0.5)) << "\" y1=\"" << num(w.py(w.y_max))
           << "\" x2=\"" << num(w.px(-0.5)) << "\" y2=\"" << num(w.py(w.y_min))
           << "\" stroke=\"#c0392b\" stroke-dasharray=\"4 3\"/>\n";
        if (panel.test_line) {
            os << "    <line class=\"test-line\" x1=\"" << num(w.px(*panel.test_line)) << "\" y1=\""
               << num(w.py(w.y_max)) << "\" x2=\"" << num(w.px(*panel.test_line)) << "\" y2=\""
               << num(w.py(w.y_min)) << "\" stroke=\"#27ae60\"/>\n";
        }
        os << "    <line class=\"axis\" x1=\"" << num(w.px(w.x_min)) << "\" y1=\"" << num(w.py(0)) << "\" x2=\""
           << num(w.px(w.x_max)) << "\" y2=\"" << num(w.py(0)) << "\" stroke=\"#555\"/>\n";
        os << "    <line class=\"axis\" x1=\"" << num(w.px(0)) << "\" y1=\"" << num(w.py(w.y_max)) << "\" x2=\""
           << num(w.px(0)) << "\" y2=\"" << num(w.py(w.y_min)) << "\" stroke=\"#555\"/>\n";
        for (const auto& r : panel.roots) {
            os << "    <circle class=\"root\" cx=\"" << num(w.px(r.value.real())) << "\" cy=\""
               << num(w.py(r.value.imag())) << "\" r=\"4\" fill=\"#111\"/>\n";
        }
        os << "  </g>\n";
    }
    os << "</svg>\n";
    return os.str();
}

void write_root_svg(const std::filesystem::path& path, const std::vector<RootPanel>& panels)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write " + path.string());
    out << render_root_svg(panels);
    if (!out) throw IoError("failed writing " + path.string());
}

} // namespace canon::cli
