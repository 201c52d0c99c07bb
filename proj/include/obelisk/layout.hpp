#ifndef OBELISK_LAYOUT_HPP
#define OBELISK_LAYOUT_HPP

#include "obelisk/graph.hpp"

#include <map>
#include <string>
#include <vector>

namespace obelisk {

/// Where one arc lives: on the spine (tight) or in the interior of a page.
struct Placement {
    static constexpr int kSpine = -1;
    int page = kSpine;

    bool on_spine() const { return page == kSpine; }
    static Placement spine() { return Placement{kSpine}; }
    static Placement on_page(int p) { return Placement{p}; }
    bool operator==(const Placement &) const = default;
};

/// A book embedding: spine order (bottom to top), a placement per arc and a
/// declared page count. Plain data; verify() is the enforcement point, so
/// ill-formed values (bad spine, missing placements) are representable.
struct BookEmbedding {
    std::vector<VertexId> spine;
    std::map<Arc, Placement> placement;
    int pages = 0;

    bool operator==(const BookEmbedding &) const = default;
};

enum class Rule {
    TightNonConsecutive,
    SpineDirectionClash,
    PageDirectionClash,
    PlanarityViolation,
    BadSpine,
    UnplacedArc,
};

const char *rule_name(Rule r);

struct Violation {
    Rule rule;
    std::vector<Arc> arcs;   // offending arcs, possibly empty (spine trouble)
    std::string detail;
};

struct ValidityReport {
    bool valid = true;
    std::vector<Violation> violations;
    std::string to_text() const; // one line per violation, or "valid"
};

/// Index of v in the spine, bottom = 0. Throws unknown_vertex.
int spine_position(const BookEmbedding &emb, VertexId v);

/// Strict interleaving of endpoint positions; arcs sharing an endpoint never
/// cross. Both arcs' endpoints must be on the spine.
bool arcs_cross(const BookEmbedding &emb, Arc a1, Arc a2);

/// Full validity check. Reports every violation, not just the first:
/// spine is a permutation of the vertices, every arc placed exactly once,
/// spine arcs join consecutive spine vertices and share one direction, each
/// page is one-directional and planar (no two arcs cross).
ValidityReport verify(const OrientedGraph &g, const BookEmbedding &emb);

// ---- file format ----------------------------------------------------------
//
//   spine <id> <id> ...        (bottom to top)
//   pages <k>
//   place <tail> <head> spine
//   place <tail> <head> page <i>

BookEmbedding parse_embedding(const std::string &text);
std::string format_embedding(const BookEmbedding &emb);

} // namespace obelisk

#endif
