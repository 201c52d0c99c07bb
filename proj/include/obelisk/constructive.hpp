#ifndef OBELISK_CONSTRUCTIVE_HPP
#define OBELISK_CONSTRUCTIVE_HPP

#include "obelisk/layout.hpp"
#include "obelisk/recognize.hpp"

#include <map>
#include <string>
#include <variant>
#include <vector>

namespace obelisk {

enum class SpineOrderKind { SinkOrder, SourceOrder, SinkFountainOrder, SourceFountainOrder, OtsoOrder };

const char *spine_order_kind_name(SpineOrderKind k);

/// Names a constructed spine order. Sink and fountain orders list the root
/// first (top of the spine, reading downward); the general tree order lists
/// the spine bottom-to-top.
struct SpineOrderLabel {
    SpineOrderKind kind = SpineOrderKind::OtsoOrder;
    VertexId root = 0;
    std::vector<VertexId> order;
};

enum class FountainKind { Sink, Source };

/// A fountain tree described as data: a dipath (in arc order) whose vertices
/// each carry an attached oriented tree containing that vertex as a sink
/// (source-kind fountains: as a source). Spine vertices missing from
/// `attached` carry the trivial tree.
struct FountainSpec {
    FountainKind kind = FountainKind::Sink;
    std::vector<VertexId> spine_path;
    std::map<VertexId, OrientedGraph> attached;
};

/// One-page embedding of an oriented cycle along its natural order, starting
/// at the smallest vertex id. The arc closing the order goes to page 0; arcs
/// running the same way join it there, opposite arcs become tight.
BookEmbedding embed_oriented_cycle(const OrientedGraph &g);

/// Spine order of the all-loose tree embedding: recursively, a vertex sits
/// above its in-neighbors' blocks and below its out-neighbors' blocks,
/// siblings ascending by root id. No arc covers the root.
SpineOrderLabel otso_spine_order(const OrientedGraph &t, VertexId root);

/// The embedding realizing otso_spine_order: every arc in page 0 pointing
/// up, no tight arcs, root uncovered.
BookEmbedding embed_tree_loose(const OrientedGraph &t, VertexId root);

/// One-page embedding with the sink x topmost: each subtree of x is embedded
/// all-loose under its own root, and the arcs into x nest in page 0.
BookEmbedding embed_tree_sink(const OrientedGraph &t, VertexId x);

/// Dual of embed_tree_sink: the source x sits bottom-most and its arcs
/// leave upward, nested in page 0.
BookEmbedding embed_tree_source(const OrientedGraph &t, VertexId x);

/// The oriented graph a FountainSpec describes: the dipath plus each
/// attached tree identified at its spine vertex. Validates the spec.
OrientedGraph build_fountain_tree(const FountainSpec &spec);

/// One-page fountain embedding: spine reads (top to bottom) x1..xn then the
/// attached blocks in reverse, dipath arcs tight downward, tree arcs in page
/// 0 upward, arc groups into consecutive spine vertices nested.
BookEmbedding embed_fountain(const FountainSpec &spec);

/// Walks unique out-arcs from x. Hitting out-degree >= 2 yields a positive
/// antler rooted at x; otherwise the walk is the fountain dipath and the
/// split components are the attached sink trees.
std::variant<FountainSpec, AntlerWitness> recognize_sink_fountain(const OrientedGraph &t, VertexId x);

/// Converse dual: walks unique in-arcs from x, negative antlers, source trees.
std::variant<FountainSpec, AntlerWitness> recognize_source_fountain(const OrientedGraph &t, VertexId x);

/// One-page embedding of a strictly uni-dicyclic graph with at most one
/// heavy vertex: the attached tree is embedded all-loose, the remaining
/// cycle vertices slide in directly below the heavy root as tight downward
/// arcs, and the cycle's closing arc rides page 0 upward.
BookEmbedding embed_unidicyclic_one_heavy(const OrientedGraph &g, const DicycleDecomposition &d);

/// Full decision procedure for strictly uni-dicyclic graphs: either a
/// one-page embedding or the forbidden substructure that rules one out.
std::variant<BookEmbedding, ForbiddenWitness> embed_unidicyclic(const OrientedGraph &g);

} // namespace obelisk

#endif
