#ifndef OBELISK_RECOGNIZE_HPP
#define OBELISK_RECOGNIZE_HPP

#include "obelisk/graph.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace obelisk {

/// A strictly uni-dicyclic graph taken apart: the directed cycle in arc
/// order (starting at its smallest vertex id) and, per cycle vertex, the
/// oriented tree hanging off it. Each tree contains its root; a trivial tree
/// is just the root itself.
struct DicycleDecomposition {
    std::vector<VertexId> dicycle;
    std::map<VertexId, OrientedGraph> attached;
};

/// Splits g into dicycle plus attached trees, or explains why it cannot be
/// done (no cycle, more than one cycle, or an undirected cycle).
DicycleDecomposition decompose_unidicyclic(const OrientedGraph &g);

/// Cycle vertices whose attached tree has more than one vertex, ascending.
std::vector<VertexId> heavy_vertices(const DicycleDecomposition &d);

enum class Family { SPlus, SMinus, Dicycle, ClassI, ClassT, ClassR };

const char *family_name(Family f);

/// True iff g is one of the one-page-critical graphs: S+, S-, or a directed
/// cycle. Optionally reports which.
bool classify_M1(const OrientedGraph &g, Family *out = nullptr);

/// A subgraph certificate: the named family member realized inside the host
/// graph. Pattern vertices use short names (c1.. for the cycle, p1.. for
/// pendants, a2../t1,t2 for a positive antler, b2../u1,u2 for a negative one).
struct ForbiddenWitness {
    Family family = Family::ClassI;
    std::vector<std::pair<std::string, VertexId>> vertex_map;
    std::vector<Arc> arcs;

    std::string to_text() const;
    /// The mapped arcs as a standalone graph (for isomorphism checks).
    OrientedGraph extract() const;
};

/// A dipath from the root to a branch vertex carrying two extra out-arcs
/// (positive) or two extra in-arcs (negative). j counts dipath vertices; the
/// one-vertex positive antler is S+.
struct AntlerWitness {
    bool positive = true;
    int j = 1;
    std::vector<VertexId> dipath; // from the root; arcs forward if positive, backward if negative
    VertexId branch_vertex = 0;
    std::array<VertexId, 2> tips{0, 0};
};

/// Two heavy vertices not adjacent on the cycle (cyclically), pendant arc
/// each; needs cycle length >= 4.
std::optional<ForbiddenWitness> detect_I(const DicycleDecomposition &d);

/// A 3-dicycle with all three vertices heavy.
std::optional<ForbiddenWitness> detect_T(const DicycleDecomposition &d);

/// A cycle arc (x,y) between heavy vertices where T_x carries a positive
/// antler rooted at x and T_y a negative antler rooted at y.
std::optional<ForbiddenWitness> detect_R(const DicycleDecomposition &d);

} // namespace obelisk

#endif
