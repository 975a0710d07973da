#include "proxinerve/svg.hpp"

#include <algorithm>
#include <sstream>

#include "proxinerve/report.hpp"

namespace proxinerve {

namespace {

constexpr const char* kPlainFill = "#f5f4f0";
constexpr const char* kMemberFill = "#ffd9a8";
constexpr const char* kNucleusFill = "#e9724c";
constexpr const char* kCellStroke = "#3b3b3b";
constexpr const char* kSpokeStroke = "#1d3557";
constexpr const char* kSiteFill = "#222222";

enum CellRole { plain = 0, member = 1, nucleus = 2 };

} // namespace

std::string render_svg(const Tessellation& t, const std::vector<Nerve>& nerves) {
    const Rect& box = t.bbox;
    const double w = box.width();
    const double h = box.height();
    const double diag = box.diagonal();
    const auto mx = [&](Point p) { return p.x - box.x0; };
    const auto my = [&](Point p) { return box.y1 - p.y; };

    std::vector<int> role(t.cells.size(), plain);
    for (const Nerve& nv : nerves) {
        for (int id : nv.cluster.members)
            role[static_cast<std::size_t>(id)] =
                std::max(role[static_cast<std::size_t>(id)],
                         static_cast<int>(member));
        role[static_cast<std::size_t>(nv.cluster.nucleus)] = nucleus;
    }

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 "
        << canonical_number(w) << " " << canonical_number(h)
        << "\" width=\"800\" height=\"" << canonical_number(800.0 * h / w)
        << "\">\n";
    out << "  <rect x=\"0\" y=\"0\" width=\"" << canonical_number(w)
        << "\" height=\"" << canonical_number(h) << "\" fill=\"#ffffff\"/>\n";

    out << "  <g stroke=\"" << kCellStroke << "\" stroke-width=\""
        << canonical_number(0.003 * diag) << "\" stroke-linejoin=\"round\">\n";
    for (const Cell& c : t.cells) {
        out << "    <polygon points=\"";
        const auto& vs = c.polygon.vertices();
        for (std::size_t i = 0; i < vs.size(); ++i) {
            if (i)
                out << " ";
            out << canonical_number(mx(vs[i])) << ","
                << canonical_number(my(vs[i]));
        }
        const char* fill = kPlainFill;
        if (role[static_cast<std::size_t>(c.site)] == nucleus)
            fill = kNucleusFill;
        else if (role[static_cast<std::size_t>(c.site)] == member)
            fill = kMemberFill;
        out << "\" fill=\"" << fill << "\"/>\n";
    }
    out << "  </g>\n";

    out << "  <g stroke=\"" << kSpokeStroke << "\" stroke-width=\""
        << canonical_number(0.005 * diag) << "\" stroke-linecap=\"round\">\n";
    for (const Nerve& nv : nerves) {
        const Point from = t.cell(nv.cluster.nucleus).polygon.centroid();
        for (const Spoke& s : nv.spokes) {
            const Point to = t.cell(s.arm).polygon.centroid();
            out << "    <line x1=\"" << canonical_number(mx(from)) << "\" y1=\""
                << canonical_number(my(from)) << "\" x2=\""
                << canonical_number(mx(to)) << "\" y2=\""
                << canonical_number(my(to)) << "\"/>\n";
        }
    }
    out << "  </g>\n";

    out << "  <g fill=\"" << kSiteFill << "\">\n";
    for (const Site& s : t.sites) {
        out << "    <circle cx=\"" << canonical_number(mx(s.position))
            << "\" cy=\"" << canonical_number(my(s.position)) << "\" r=\""
            << canonical_number(0.006 * diag) << "\"/>\n";
    }
    out << "  </g>\n";
    out << "</svg>\n";
    return out.str();
}

} // namespace proxinerve
