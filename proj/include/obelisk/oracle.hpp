#ifndef OBELISK_ORACLE_HPP
#define OBELISK_ORACLE_HPP

#include "obelisk/layout.hpp"

#include <optional>
#include <vector>

namespace obelisk {

struct OracleOptions {
    int max_n = 9; // hard size guard for the spine sweep; raise explicitly to override
    int jobs = 1;  // worker threads for the sweep; results are identical for any value
};

/// Conflict graph over the loose arcs of one spine order: nodes are loose
/// arcs, an edge joins two arcs that cannot share a page (they cross, or they
/// point in opposite directions along the spine).
struct ConflictGraph {
    int nodes = 0;
    std::vector<std::pair<int, int>> edges;
};

struct SpineAnalysis {
    std::vector<Arc> tight; // maximal set: arcs joining consecutive spine vertices in tight_dir
    std::vector<Arc> loose; // everything else, in conflict-graph node order
    ConflictGraph conflicts;
};

/// Tight/loose split for one spine order and one global spine direction
/// (+1 = tight arcs point up, -1 = down), plus the loose-arc conflict graph.
SpineAnalysis analyze_spine(const OrientedGraph &g, const std::vector<VertexId> &order, int tight_dir);

struct ColoringResult {
    int colors = 0;
    std::vector<int> assignment; // node -> color, colors are 0-based
};

/// Exact chromatic number by branch and bound over a greedy clique lower
/// bound. Guarded at 64 nodes.
ColoringResult chromatic_number(const ConflictGraph &cg);

struct MinPagesResult {
    int pages = 0;
    BookEmbedding emb;
};

/// Fewest pages over all placements for a fixed spine order: both global
/// spine directions are tried with their maximal tight sets (dropping a tight
/// arc only adds conflict nodes, so maximal is optimal), ties prefer upward.
MinPagesResult min_pages_for_spine(const OrientedGraph &g, const std::vector<VertexId> &order);

struct ObtResult {
    int thickness = 0;
    BookEmbedding witness;
};

/// Exact oriented book thickness: minimum pages over every spine order,
/// maximum over components. The witness always passes verify() with
/// pages == thickness. Guarded at opts.max_n vertices.
ObtResult obt(const OrientedGraph &g, const OracleOptions &opts = {});

/// Decision form: is there an embedding with at most `budget` pages?
/// Negative budgets answer false. Exact; shares the sweep with obt().
bool obt_at_most(const OrientedGraph &g, int budget, const OracleOptions &opts = {});

/// obt(g) == k and deleting any one arc drops it to exactly k-1.
bool is_k_page_critical(const OrientedGraph &g, int k, const OracleOptions &opts = {});

/// All k-page-critical graphs on at most n_max vertices, one per isomorphism
/// class. Guards: n_max <= 7 for k == 1, n_max <= 6 for k >= 2 (max_n_override
/// raises both, same caveats as the enumeration guard).
std::vector<OrientedGraph> mine_critical(int n_max, int k, int max_n_override = 0,
                                         const OracleOptions &opts = {});

} // namespace obelisk

#endif
