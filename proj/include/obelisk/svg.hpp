#ifndef OBELISK_SVG_HPP
#define OBELISK_SVG_HPP

#include "obelisk/layout.hpp"

#include <string>

namespace obelisk {

/// Deterministic SVG 1.1 drawing of a verified embedding: vertical spine,
/// labeled vertex dots bottom-to-top, spine arcs drawn on the line, page-p
/// arcs as semicircles to the right (even p) or left (odd p), arrowheads
/// showing direction. Throws invalid_embedding when verify() fails.
std::string render_svg(const OrientedGraph &g, const BookEmbedding &emb);

} // namespace obelisk

#endif
