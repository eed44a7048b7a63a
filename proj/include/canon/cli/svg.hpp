#ifndef CANON_CLI_SVG_HPP
#define CANON_CLI_SVG_HPP

#include "canon/rootloc.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace canon::cli {

/// One scatter of approximate roots in the complex plane.
struct RootPanel {
    std::string title;
    std::vector<ApproxRoot> roots;
    int dim = 1;                       // sets the narrowed strip
    std::optional<double> test_line;   // extra vertical line, e.g. (s-1)/2
};

/// Panels side by side. Every panel draws the canonical strip, the narrowed
/// strip, and the canonical line as elements of class "guide", and every
/// root as a circle of class "root".
std::string render_root_svg(const std::vector<RootPanel>& panels);

/// Throws IoError when the file cannot be written.
void write_root_svg(const std::filesystem::path& path, const std::vector<RootPanel>& panels);

} // namespace canon::cli

#endif
