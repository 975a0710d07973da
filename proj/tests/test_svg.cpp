#include "doctest.h"

#include <string>
#include <vector>

#include "proxinerve/clusters.hpp"
#include "proxinerve/nerve.hpp"
#include "proxinerve/svg.hpp"

using namespace proxinerve;

namespace {

std::size_t count_of(const std::string& text, const std::string& needle) {
    std::size_t n = 0;
    for (auto pos = text.find(needle); pos != std::string::npos;
         pos = text.find(needle, pos + needle.size()))
        ++n;
    return n;
}

std::string render_grid(int side, double spacing) {
    std::vector<Point> sites;
    for (int gy = 0; gy < side; ++gy)
        for (int gx = 0; gx < side; ++gx)
            sites.push_back({(gx + 0.5) * spacing, (gy + 0.5) * spacing});
    const Tessellation t =
        build_tessellation(sites, Rect{0, 0, side * spacing, side * spacing});
    std::vector<Nerve> nerves;
    for (const Cluster& c : maximal_nucleus_clusters(t))
        nerves.push_back(build_nerve(c, t));
    return render_svg(t, nerves);
}

} // namespace

TEST_CASE("three by three grid renders nine cells and four spokes") {
    const std::string svg = render_grid(3, 1.0);
    CHECK(count_of(svg, "<polygon ") == 9);
    CHECK(count_of(svg, "<line ") == 4);
    CHECK(count_of(svg, "<circle ") == 9);
    CHECK(svg.find("viewBox=\"0 0 3 3\"") != std::string::npos);
    CHECK(count_of(svg, "#e9724c") == 1);
    CHECK(count_of(svg, "fill=\"#ffd9a8\"") == 4);
    CHECK(count_of(svg, "fill=\"#f5f4f0\"") == 4);
    CHECK(svg.back() == '\n');
}

TEST_CASE("rendering is byte stable") {
    CHECK(render_grid(3, 1.0) == render_grid(3, 1.0));
    CHECK(render_grid(2, 1.0) == render_grid(2, 1.0));
}

TEST_CASE("single site renders one cell and no spokes") {
    const Tessellation t = build_tessellation({{0.5, 0.5}}, Rect{0, 0, 1, 1});
    std::vector<Nerve> nerves;
    for (const Cluster& c : maximal_nucleus_clusters(t))
        nerves.push_back(build_nerve(c, t));
    const std::string svg = render_svg(t, nerves);
    CHECK(count_of(svg, "<polygon ") == 1);
    CHECK(count_of(svg, "<line ") == 0);
    CHECK(count_of(svg, "fill=\"#e9724c\"") == 1);
}

TEST_CASE("tied clusters tint every member and shade every nucleus") {
    const std::string svg = render_grid(2, 1.0);
    CHECK(count_of(svg, "<polygon ") == 4);
    CHECK(count_of(svg, "fill=\"#e9724c\"") == 4);
    CHECK(count_of(svg, "fill=\"#ffd9a8\"") == 0);
    CHECK(count_of(svg, "<line ") == 8);
}
