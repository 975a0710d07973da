#ifndef PROXINERVE_SVG_HPP
#define PROXINERVE_SVG_HPP

#include <string>
#include <vector>

#include "proxinerve/nerve.hpp"
#include "proxinerve/voronoi.hpp"

namespace proxinerve {

/**
 * Deterministic SVG picture of one tessellation: every cell as a polygon,
 * cluster member cells tinted, nucleus cells shaded darker, one line per
 * spoke from the nucleus centroid to the arm centroid, and a dot per site.
 * Identical inputs produce identical bytes; all numbers use the canonical
 * 17-significant-digit formatting of the report module.
 */
std::string render_svg(const Tessellation& t, const std::vector<Nerve>& nerves);

} // namespace proxinerve

#endif
