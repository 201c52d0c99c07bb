#ifndef OBELISK_GRAPH_HPP
#define OBELISK_GRAPH_HPP

#include <compare>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace obelisk {

using VertexId = int;

enum class errc {
    syntax_error,
    not_simple,
    unknown_vertex,
    unknown_arc,
    size_guard,
    disconnected,
    not_a_cycle,
    not_a_tree,
    not_a_sink,
    bad_spec,
    wrong_shape,
    no_cycle,
    multiple_cycles,
    cycle_not_directed,
    invalid_embedding,
    bad_argument,
};

const char *errc_name(errc c);

/// Library-wide error: a code (stable across the C API) plus a human message.
class error : public std::runtime_error {
  public:
    error(errc code, const std::string &msg) : std::runtime_error(msg), code_(code) {}
    errc code() const { return code_; }

  private:
    errc code_;
};

/// Directed arc tail -> head. Ordered so arcs can live in sorted containers.
struct Arc {
    VertexId tail = 0;
    VertexId head = 0;
    auto operator<=>(const Arc &) const = default;
};

struct Neighborhoods {
    std::vector<VertexId> in;
    std::vector<VertexId> out;
};

/// Simple oriented graph: no loops, no parallel arcs, and at most one of
/// (u,v) / (v,u) per vertex pair. Mutation is limited to add_vertex/add_arc
/// during construction; all algorithms treat graphs as immutable values.
class OrientedGraph {
  public:
    OrientedGraph() = default;

    void add_vertex(VertexId v);
    void add_arc(VertexId tail, VertexId head); // throws not_simple / unknown_vertex
    void add_arc_implicit(VertexId tail, VertexId head); // declares endpoints as needed

    int vertex_count() const { return static_cast<int>(vertices_.size()); }
    int arc_count() const { return static_cast<int>(arcs_.size()); }
    const std::vector<VertexId> &vertices() const { return vertices_; }
    const std::vector<Arc> &arcs() const { return arcs_; }

    bool has_vertex(VertexId v) const;
    bool has_arc(VertexId tail, VertexId head) const;
    /// The arc between u and v in whichever orientation it exists.
    std::optional<Arc> arc_between(VertexId u, VertexId v) const;

    std::vector<VertexId> out_neighbors(VertexId v) const; // sorted
    std::vector<VertexId> in_neighbors(VertexId v) const;  // sorted
    std::vector<VertexId> neighbors(VertexId v) const;     // in and out merged, sorted
    Neighborhoods neighborhoods(VertexId v) const;
    int degree(VertexId v) const;
    int out_degree(VertexId v) const;
    int in_degree(VertexId v) const;

    bool operator==(const OrientedGraph &) const = default;

  private:
    std::vector<VertexId> vertices_; // sorted, unique
    std::vector<Arc> arcs_;          // sorted, unique
    void require_vertex(VertexId v) const;
};

// ---- file format ----------------------------------------------------------
//
//   # comment
//   v <id> <id> ...
//   a <tail> <head>
//
// Vertex ids are non-negative integers. With implicit_vertices, arc lines may
// name undeclared vertices; otherwise that is an unknown_vertex error.

OrientedGraph parse_graph(const std::string &text, bool implicit_vertices = false);
std::string format_graph(const OrientedGraph &g);

// ---- pure whole-graph operations ------------------------------------------

OrientedGraph delete_arc(const OrientedGraph &g, Arc a);        // throws unknown_arc
OrientedGraph delete_vertex(const OrientedGraph &g, VertexId v); // drops incident arcs
OrientedGraph converse(const OrientedGraph &g);                 // every arc reversed

bool is_connected(const OrientedGraph &g); // vacuously true when empty
std::vector<OrientedGraph> components(const OrientedGraph &g);  // by min vertex id

/// Subgraph on the given vertices with every arc of g joining two of them.
OrientedGraph induced_subgraph(const OrientedGraph &g, const std::vector<VertexId> &verts);

enum class Shape { Dipath, OrientedPath, Dicycle, OrientedCycle, OrientedTree, Other };

const char *shape_name(Shape s);

/// Most specific shape of a connected graph (throws disconnected otherwise).
/// Single vertices count as (trivial) dipaths.
Shape classify_shape(const OrientedGraph &g);

/// Vertices of the unique cycle in traversal order, starting at the lowest
/// cycle vertex id and stepping toward its lower-id cycle neighbor.
/// Requires classify_shape == Dicycle or OrientedCycle.
std::vector<VertexId> cycle_order(const OrientedGraph &g);

// ---- isomorphism -----------------------------------------------------------

/// Canonical byte string: equal keys iff isomorphic. Brute force over
/// degree-class-respecting relabelings; intended for n <= 10.
std::string canonical_key(const OrientedGraph &g);

/// Direction-preserving isomorphism test; optionally fills a vertex mapping
/// g1 -> g2.
bool is_isomorphic(const OrientedGraph &g1, const OrientedGraph &g2,
                   std::map<VertexId, VertexId> *witness = nullptr);

// ---- enumeration -----------------------------------------------------------

/// All connected oriented graphs on exactly n vertices, one per isomorphism
/// class, vertices labeled 1..n, deterministic order. Guarded at n <= 7
/// (max_n raises the guard explicitly).
std::vector<OrientedGraph> enumerate_connected(int n, int max_n = 7);

/// All orientations of a fixed (simple, loop-free) undirected edge list on
/// vertices 1..n, deduplicated up to isomorphism.
std::vector<OrientedGraph> enumerate_orientations(int n, const std::vector<std::pair<VertexId, VertexId>> &edges);

/// All strictly uni-dicyclic graphs on exactly n vertices whose unique cycle
/// is a dicycle of length in [cycle_min, cycle_max], up to isomorphism.
std::vector<OrientedGraph> enumerate_unidicyclic(int n, int cycle_min, int cycle_max);

} // namespace obelisk

#endif
