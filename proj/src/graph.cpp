#include "obelisk/graph.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace obelisk {

const char *errc_name(errc c) {
    switch (c) {
    case errc::syntax_error: return "syntax_error";
    case errc::not_simple: return "not_simple";
    case errc::unknown_vertex: return "unknown_vertex";
    case errc::unknown_arc: return "unknown_arc";
    case errc::size_guard: return "size_guard";
    case errc::disconnected: return "disconnected";
    case errc::not_a_cycle: return "not_a_cycle";
    case errc::not_a_tree: return "not_a_tree";
    case errc::not_a_sink: return "not_a_sink";
    case errc::bad_spec: return "bad_spec";
    case errc::wrong_shape: return "wrong_shape";
    case errc::no_cycle: return "no_cycle";
    case errc::multiple_cycles: return "multiple_cycles";
    case errc::cycle_not_directed: return "cycle_not_directed";
    case errc::invalid_embedding: return "invalid_embedding";
    case errc::bad_argument: return "bad_argument";
    }
    return "unknown";
}

// ---- OrientedGraph ----------------------------------------------------------

void OrientedGraph::require_vertex(VertexId v) const {
    if (!has_vertex(v))
        throw error(errc::unknown_vertex, "unknown vertex " + std::to_string(v));
}

bool OrientedGraph::has_vertex(VertexId v) const {
    return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

bool OrientedGraph::has_arc(VertexId tail, VertexId head) const {
    return std::binary_search(arcs_.begin(), arcs_.end(), Arc{tail, head});
}

std::optional<Arc> OrientedGraph::arc_between(VertexId u, VertexId v) const {
    if (has_arc(u, v)) return Arc{u, v};
    if (has_arc(v, u)) return Arc{v, u};
    return std::nullopt;
}

void OrientedGraph::add_vertex(VertexId v) {
    if (v < 0)
        throw error(errc::bad_argument, "vertex ids must be non-negative");
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
    if (it == vertices_.end() || *it != v) vertices_.insert(it, v);
}

void OrientedGraph::add_arc(VertexId tail, VertexId head) {
    require_vertex(tail);
    require_vertex(head);
    if (tail == head)
        throw error(errc::not_simple, "loop at vertex " + std::to_string(tail));
    if (has_arc(tail, head))
        throw error(errc::not_simple, "duplicate arc " + std::to_string(tail) + " -> " + std::to_string(head));
    if (has_arc(head, tail))
        throw error(errc::not_simple, "anti-parallel pair between " + std::to_string(tail) + " and " + std::to_string(head));
    Arc a{tail, head};
    arcs_.insert(std::lower_bound(arcs_.begin(), arcs_.end(), a), a);
}

void OrientedGraph::add_arc_implicit(VertexId tail, VertexId head) {
    add_vertex(tail);
    add_vertex(head);
    add_arc(tail, head);
}

std::vector<VertexId> OrientedGraph::out_neighbors(VertexId v) const {
    require_vertex(v);
    std::vector<VertexId> out;
    for (const Arc &a : arcs_)
        if (a.tail == v) out.push_back(a.head);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<VertexId> OrientedGraph::in_neighbors(VertexId v) const {
    require_vertex(v);
    std::vector<VertexId> in;
    for (const Arc &a : arcs_)
        if (a.head == v) in.push_back(a.tail);
    std::sort(in.begin(), in.end());
    return in;
}

Neighborhoods OrientedGraph::neighborhoods(VertexId v) const {
    return Neighborhoods{in_neighbors(v), out_neighbors(v)};
}

std::vector<VertexId> OrientedGraph::neighbors(VertexId v) const {
    require_vertex(v);
    std::vector<VertexId> all;
    for (const Arc &a : arcs_) {
        if (a.tail == v) all.push_back(a.head);
        if (a.head == v) all.push_back(a.tail);
    }
    std::sort(all.begin(), all.end());
    return all;
}

int OrientedGraph::degree(VertexId v) const { return in_degree(v) + out_degree(v); }

int OrientedGraph::out_degree(VertexId v) const {
    require_vertex(v);
    int d = 0;
    for (const Arc &a : arcs_) d += (a.tail == v);
    return d;
}

int OrientedGraph::in_degree(VertexId v) const {
    require_vertex(v);
    int d = 0;
    for (const Arc &a : arcs_) d += (a.head == v);
    return d;
}

// ---- file format ------------------------------------------------------------

OrientedGraph parse_graph(const std::string &text, bool implicit_vertices) {
    OrientedGraph g;
    std::vector<Arc> pending;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    auto fail = [&](const std::string &what) {
        throw error(errc::syntax_error, "line " + std::to_string(lineno) + ": " + what);
    };
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string kind;
        if (!(ls >> kind)) continue; // blank
        if (kind[0] == '#') continue;
        if (kind == "v") {
            long long id;
            while (ls >> id) {
                if (id < 0 || id > 1000000000) fail("bad vertex id");
                g.add_vertex(static_cast<VertexId>(id));
            }
            if (!ls.eof()) fail("bad vertex id");
        } else if (kind == "a") {
            long long t, h;
            if (!(ls >> t >> h) || t < 0 || h < 0 || t > 1000000000 || h > 1000000000)
                fail("arc lines are 'a <tail> <head>'");
            std::string extra;
            if (ls >> extra) fail("trailing tokens on arc line");
            pending.push_back(Arc{static_cast<VertexId>(t), static_cast<VertexId>(h)});
        } else {
            fail("unknown record '" + kind + "'");
        }
    }
    for (const Arc &a : pending) {
        if (implicit_vertices) {
            g.add_vertex(a.tail);
            g.add_vertex(a.head);
        }
        g.add_arc(a.tail, a.head); // throws unknown_vertex / not_simple
    }
    return g;
}

std::string format_graph(const OrientedGraph &g) {
    std::ostringstream out;
    if (g.vertex_count() > 0) {
        out << "v";
        for (VertexId v : g.vertices()) out << ' ' << v;
        out << '\n';
    }
    for (const Arc &a : g.arcs()) out << "a " << a.tail << ' ' << a.head << '\n';
    return out.str();
}

// ---- pure operations ---------------------------------------------------------

OrientedGraph delete_arc(const OrientedGraph &g, Arc a) {
    if (!g.has_arc(a.tail, a.head))
        throw error(errc::unknown_arc, "no arc " + std::to_string(a.tail) + " -> " + std::to_string(a.head));
    OrientedGraph out;
    for (VertexId v : g.vertices()) out.add_vertex(v);
    for (const Arc &b : g.arcs())
        if (!(b == a)) out.add_arc(b.tail, b.head);
    return out;
}

OrientedGraph delete_vertex(const OrientedGraph &g, VertexId v) {
    if (!g.has_vertex(v))
        throw error(errc::unknown_vertex, "unknown vertex " + std::to_string(v));
    OrientedGraph out;
    for (VertexId u : g.vertices())
        if (u != v) out.add_vertex(u);
    for (const Arc &a : g.arcs())
        if (a.tail != v && a.head != v) out.add_arc(a.tail, a.head);
    return out;
}

OrientedGraph converse(const OrientedGraph &g) {
    OrientedGraph out;
    for (VertexId v : g.vertices()) out.add_vertex(v);
    for (const Arc &a : g.arcs()) out.add_arc(a.head, a.tail);
    return out;
}

namespace {

// Union-find over vertex indices.
struct Dsu {
    std::vector<int> p;
    explicit Dsu(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
    void unite(int a, int b) { p[find(a)] = find(b); }
};

std::unordered_map<VertexId, int> index_of(const OrientedGraph &g) {
    std::unordered_map<VertexId, int> idx;
    int i = 0;
    for (VertexId v : g.vertices()) idx[v] = i++;
    return idx;
}

} // namespace

bool is_connected(const OrientedGraph &g) {
    int n = g.vertex_count();
    if (n <= 1) return true;
    auto idx = index_of(g);
    Dsu dsu(n);
    for (const Arc &a : g.arcs()) dsu.unite(idx[a.tail], idx[a.head]);
    int root = dsu.find(0);
    for (int i = 1; i < n; ++i)
        if (dsu.find(i) != root) return false;
    return true;
}

std::vector<OrientedGraph> components(const OrientedGraph &g) {
    int n = g.vertex_count();
    auto idx = index_of(g);
    Dsu dsu(n);
    for (const Arc &a : g.arcs()) dsu.unite(idx[a.tail], idx[a.head]);
    // Group vertices by representative; component order follows min vertex id.
    std::map<int, OrientedGraph> by_root;
    for (VertexId v : g.vertices()) by_root[dsu.find(idx[v])].add_vertex(v);
    for (const Arc &a : g.arcs()) by_root[dsu.find(idx[a.tail])].add_arc(a.tail, a.head);
    std::vector<OrientedGraph> out;
    out.reserve(by_root.size());
    for (auto &[root, comp] : by_root) out.push_back(std::move(comp));
    std::sort(out.begin(), out.end(), [](const OrientedGraph &a, const OrientedGraph &b) {
        return a.vertices().front() < b.vertices().front();
    });
    return out;
}

OrientedGraph induced_subgraph(const OrientedGraph &g, const std::vector<VertexId> &verts) {
    OrientedGraph out;
    for (VertexId v : verts) out.add_vertex(v);
    for (const Arc &a : g.arcs())
        if (out.has_vertex(a.tail) && out.has_vertex(a.head)) out.add_arc(a.tail, a.head);
    return out;
}

const char *shape_name(Shape s) {
    switch (s) {
    case Shape::Dipath: return "dipath";
    case Shape::OrientedPath: return "oriented-path";
    case Shape::Dicycle: return "dicycle";
    case Shape::OrientedCycle: return "oriented-cycle";
    case Shape::OrientedTree: return "oriented-tree";
    case Shape::Other: return "other";
    }
    return "unknown";
}

Shape classify_shape(const OrientedGraph &g) {
    if (!is_connected(g))
        throw error(errc::disconnected, "shape classification requires a connected graph");
    int n = g.vertex_count();
    int m = g.arc_count();
    if (n == 0) throw error(errc::bad_argument, "empty graph has no shape");
    if (n == 1) return Shape::Dipath;
    if (m == n - 1) {
        // Tree. Path iff max degree <= 2.
        bool path = true;
        for (VertexId v : g.vertices())
            if (g.degree(v) > 2) { path = false; break; }
        if (!path) return Shape::OrientedTree;
        // Walk from one endpoint; dipath iff every arc points the same way.
        VertexId end = -1;
        for (VertexId v : g.vertices())
            if (g.degree(v) == 1) { end = v; break; }
        VertexId prev = -1, cur = end;
        bool forward = true, backward = true;
        while (true) {
            VertexId next = -1;
            for (VertexId w : g.out_neighbors(cur))
                if (w != prev) next = w;
            for (VertexId w : g.in_neighbors(cur))
                if (w != prev) next = w;
            if (next == -1) break;
            if (g.has_arc(cur, next)) backward = false; else forward = false;
            prev = cur;
            cur = next;
        }
        return (forward || backward) ? Shape::Dipath : Shape::OrientedPath;
    }
    if (m == n && n >= 3) {
        for (VertexId v : g.vertices())
            if (g.degree(v) != 2) return Shape::Other;
        bool directed = true;
        for (VertexId v : g.vertices())
            if (g.out_degree(v) != 1) { directed = false; break; }
        return directed ? Shape::Dicycle : Shape::OrientedCycle;
    }
    return Shape::Other;
}

std::vector<VertexId> cycle_order(const OrientedGraph &g) {
    Shape s = classify_shape(g);
    if (s != Shape::Dicycle && s != Shape::OrientedCycle)
        throw error(errc::not_a_cycle, "graph is not a cycle orientation");
    VertexId start = g.vertices().front();
    Neighborhoods nb = g.neighborhoods(start);
    std::vector<VertexId> both = nb.in;
    both.insert(both.end(), nb.out.begin(), nb.out.end());
    std::sort(both.begin(), both.end());
    std::vector<VertexId> order{start, both.front()};
    while (true) {
        VertexId cur = order.back(), prev = order[order.size() - 2];
        Neighborhoods cn = g.neighborhoods(cur);
        VertexId next = -1;
        for (VertexId w : cn.in)
            if (w != prev) next = w;
        for (VertexId w : cn.out)
            if (w != prev) next = w;
        if (next == start) break;
        order.push_back(next);
    }
    return order;
}

// ---- canonical form ----------------------------------------------------------
//
// Dense digraphs on <= 16 vertices as row bitmasks. The canonical form is the
// lexicographically least incremental adjacency encoding over all relabelings
// that respect refined degree classes; classes are isomorphism-invariant, so
// equal encodings characterize isomorphic graphs.

namespace {

struct Dense {
    int n = 0;
    std::array<uint16_t, 16> row{}; // row[i] bit j <=> arc i -> j

    bool arc(int i, int j) const { return (row[i] >> j) & 1; }
    void set(int i, int j) { row[i] = static_cast<uint16_t>(row[i] | (1u << j)); }
};

Dense to_dense(const OrientedGraph &g, std::vector<VertexId> *labels = nullptr) {
    Dense d;
    d.n = g.vertex_count();
    std::unordered_map<VertexId, int> idx;
    int i = 0;
    for (VertexId v : g.vertices()) idx[v] = i++;
    if (labels) *labels = g.vertices();
    for (const Arc &a : g.arcs()) d.set(idx[a.tail], idx[a.head]);
    return d;
}

OrientedGraph from_dense(const Dense &d) {
    OrientedGraph g;
    for (int i = 0; i < d.n; ++i) g.add_vertex(i + 1);
    for (int i = 0; i < d.n; ++i)
        for (int j = 0; j < d.n; ++j)
            if (d.arc(i, j)) g.add_arc(i + 1, j + 1);
    return g;
}

// Iteratively refined vertex keys; two rounds separate everything we meet at
// this scale, and keys stay isomorphism-invariant by construction.
std::vector<std::string> refined_keys(const Dense &d) {
    int n = d.n;
    std::vector<std::string> key(n);
    for (int v = 0; v < n; ++v) {
        int outd = 0, ind = 0;
        for (int w = 0; w < n; ++w) {
            outd += d.arc(v, w);
            ind += d.arc(w, v);
        }
        key[v] = std::string(1, static_cast<char>('a' + outd)) + static_cast<char>('a' + ind);
    }
    for (int round = 0; round < 2; ++round) {
        std::vector<std::string> next(n);
        for (int v = 0; v < n; ++v) {
            std::vector<std::string> outs, ins;
            for (int w = 0; w < n; ++w) {
                if (d.arc(v, w)) outs.push_back(key[w]);
                if (d.arc(w, v)) ins.push_back(key[w]);
            }
            std::sort(outs.begin(), outs.end());
            std::sort(ins.begin(), ins.end());
            next[v] = key[v] + "|";
            for (auto &s : outs) next[v] += s + ",";
            next[v] += ";";
            for (auto &s : ins) next[v] += s + ",";
        }
        key = std::move(next);
    }
    return key;
}

// Canonical search state. Encoding chunk for position p given an order prefix:
// bits (order[q] -> order[p]), (order[p] -> order[q]) for q = 0..p-1.
struct CanonSearch {
    const Dense *d;
    int n;
    std::vector<int> class_of_pos;           // class index required at each position
    std::vector<std::vector<int>> class_members;
    std::vector<uint32_t> cur, best;
    std::vector<int> order, best_order;
    std::vector<bool> used;

    uint32_t chunk(int p, int v) const {
        uint32_t c = 0;
        for (int q = 0; q < p; ++q) {
            c = (c << 1) | (d->arc(order[q], v) ? 1u : 0u);
            c = (c << 1) | (d->arc(v, order[q]) ? 1u : 0u);
        }
        return c;
    }

    // returns true if best was replaced somewhere in this subtree
    bool walk(int p, bool tied) {
        if (p == n) {
            if (!tied) {
                best = cur;
                best_order = order;
                return true;
            }
            return false;
        }
        bool replaced = false;
        for (int v : class_members[class_of_pos[p]]) {
            if (used[v]) continue;
            uint32_t c = chunk(p, v);
            bool tied2;
            if (tied) {
                if (c > best[p]) continue;
                tied2 = (c == best[p]);
            } else {
                tied2 = false;
            }
            used[v] = true;
            order[p] = v;
            cur[p] = c;
            if (walk(p + 1, tied2)) {
                replaced = true;
                tied = true; // our prefix now equals the new best's prefix
            }
            used[v] = false;
        }
        return replaced;
    }
};

struct CanonResult {
    std::string key;              // serialized canonical encoding
    std::vector<int> order;       // order[pos] = dense vertex index
};

CanonResult canonical_dense(const Dense &d) {
    int n = d.n;
    CanonResult res;
    if (n == 0) {
        res.key = "0:";
        return res;
    }
    auto keys = refined_keys(d);
    std::vector<std::string> unique_keys(keys.begin(), keys.end());
    std::sort(unique_keys.begin(), unique_keys.end());
    unique_keys.erase(std::unique(unique_keys.begin(), unique_keys.end()), unique_keys.end());

    CanonSearch s;
    s.d = &d;
    s.n = n;
    s.class_members.resize(unique_keys.size());
    for (int v = 0; v < n; ++v) {
        int c = static_cast<int>(std::lower_bound(unique_keys.begin(), unique_keys.end(), keys[v]) - unique_keys.begin());
        s.class_members[c].push_back(v);
    }
    for (size_t c = 0; c < s.class_members.size(); ++c)
        for (size_t k = 0; k < s.class_members[c].size(); ++k)
            s.class_of_pos.push_back(static_cast<int>(c));

    s.cur.assign(n, 0);
    s.best.assign(n, 0);
    s.order.assign(n, 0);
    s.used.assign(n, false);

    // Seed best with the first class-respecting order.
    {
        int p = 0;
        for (auto &members : s.class_members)
            for (int v : members) s.order[p++] = v;
        for (int q = 0; q < n; ++q) s.best[q] = s.chunk(q, s.order[q]);
        s.best_order = s.order;
    }
    s.walk(0, true);

    std::ostringstream key;
    key << n << ':';
    for (uint32_t c : s.best) key << c << ',';
    res.key = key.str();
    res.order = s.best_order;
    return res;
}

} // namespace

std::string canonical_key(const OrientedGraph &g) {
    return canonical_dense(to_dense(g)).key;
}

bool is_isomorphic(const OrientedGraph &g1, const OrientedGraph &g2,
                   std::map<VertexId, VertexId> *witness) {
    if (g1.vertex_count() != g2.vertex_count() || g1.arc_count() != g2.arc_count())
        return false;
    std::vector<VertexId> l1, l2;
    Dense d1 = to_dense(g1, &l1), d2 = to_dense(g2, &l2);
    CanonResult c1 = canonical_dense(d1), c2 = canonical_dense(d2);
    if (c1.key != c2.key) return false;
    if (witness) {
        witness->clear();
        for (int pos = 0; pos < d1.n; ++pos)
            (*witness)[l1[c1.order[pos]]] = l2[c2.order[pos]];
    }
    return true;
}

// ---- enumeration -------------------------------------------------------------

namespace {

// All simple undirected graphs on n vertices up to isomorphism, as symmetric
// Dense values, grown one vertex at a time (every graph on n vertices is an
// extension of some graph on n-1).
std::vector<Dense> undirected_graphs(int n) {
    std::vector<Dense> cur;
    Dense single;
    single.n = 1;
    cur.push_back(single);
    for (int k = 2; k <= n; ++k) {
        std::unordered_set<std::string> seen;
        std::vector<Dense> next;
        for (const Dense &g : cur) {
            for (uint32_t nb = 0; nb < (1u << (k - 1)); ++nb) {
                Dense h = g;
                h.n = k;
                for (int j = 0; j < k - 1; ++j)
                    if ((nb >> j) & 1) {
                        h.set(k - 1, j);
                        h.set(j, k - 1);
                    }
                auto key = canonical_dense(h).key;
                if (seen.insert(key).second) next.push_back(h);
            }
        }
        cur = std::move(next);
    }
    return cur;
}

bool dense_connected(const Dense &d) {
    if (d.n == 0) return true;
    uint32_t seen = 1, frontier = 1;
    while (frontier) {
        uint32_t next = 0;
        for (int i = 0; i < d.n; ++i)
            if ((frontier >> i) & 1)
                for (int j = 0; j < d.n; ++j)
                    if ((d.arc(i, j) || d.arc(j, i)) && !((seen >> j) & 1)) next |= 1u << j;
        seen |= next;
        frontier = next;
    }
    return seen == (1u << d.n) - 1;
}

std::vector<std::pair<int, int>> dense_edges(const Dense &d) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < d.n; ++i)
        for (int j = i + 1; j < d.n; ++j)
            if (d.arc(i, j) || d.arc(j, i)) e.emplace_back(i, j);
    return e;
}

// Deduplicate a batch of dense digraphs by canonical key; returns canonically
// relabeled graphs in sorted key order so enumeration output is deterministic.
std::vector<OrientedGraph> dedup_sorted(std::vector<Dense> &batch) {
    std::map<std::string, Dense> by_key;
    for (const Dense &d : batch) by_key.emplace(canonical_dense(d).key, d);
    std::vector<OrientedGraph> out;
    out.reserve(by_key.size());
    for (auto &[key, d] : by_key) {
        CanonResult c = canonical_dense(d);
        Dense relab;
        relab.n = d.n;
        std::vector<int> pos(d.n);
        for (int p = 0; p < d.n; ++p) pos[c.order[p]] = p;
        for (int i = 0; i < d.n; ++i)
            for (int j = 0; j < d.n; ++j)
                if (d.arc(i, j)) relab.set(pos[i], pos[j]);
        out.push_back(from_dense(relab));
    }
    return out;
}

} // namespace

std::vector<OrientedGraph> enumerate_connected(int n, int max_n) {
    if (n < 1)
        throw error(errc::bad_argument, "enumeration needs n >= 1");
    if (n > max_n)
        throw error(errc::size_guard,
                    "enumeration guarded at " + std::to_string(max_n) + " vertices (asked for " + std::to_string(n) + ")");
    std::vector<Dense> all;
    for (const Dense &und : undirected_graphs(n)) {
        if (!dense_connected(und)) continue;
        auto edges = dense_edges(und);
        int m = static_cast<int>(edges.size());
        for (uint32_t mask = 0; mask < (1u << m); ++mask) {
            Dense d;
            d.n = n;
            for (int e = 0; e < m; ++e) {
                auto [i, j] = edges[e];
                if ((mask >> e) & 1) d.set(i, j); else d.set(j, i);
            }
            all.push_back(d);
        }
    }
    return dedup_sorted(all);
}

std::vector<OrientedGraph> enumerate_orientations(int n, const std::vector<std::pair<VertexId, VertexId>> &edges) {
    if (n < 1 || n > 16)
        throw error(errc::bad_argument, "orientation enumeration needs 1 <= n <= 16");
    int m = static_cast<int>(edges.size());
    if (m > 20)
        throw error(errc::size_guard, "orientation enumeration guarded at 20 edges");
    std::vector<Dense> all;
    for (uint32_t mask = 0; mask < (1u << m); ++mask) {
        Dense d;
        d.n = n;
        bool ok = true;
        for (int e = 0; e < m && ok; ++e) {
            int i = edges[e].first - 1, j = edges[e].second - 1;
            if (i < 0 || j < 0 || i >= n || j >= n || i == j) ok = false;
            else if ((mask >> e) & 1) d.set(i, j);
            else d.set(j, i);
        }
        if (ok) all.push_back(d);
    }
    return dedup_sorted(all);
}

std::vector<OrientedGraph> enumerate_unidicyclic(int n, int cycle_min, int cycle_max) {
    if (cycle_min < 3 || cycle_max < cycle_min || n < cycle_min)
        throw error(errc::bad_argument, "bad uni-dicyclic enumeration bounds");
    if (n > 9)
        throw error(errc::size_guard, "uni-dicyclic enumeration guarded at 9 vertices");
    std::vector<OrientedGraph> out;
    for (int c = cycle_min; c <= std::min(cycle_max, n); ++c) {
        // Start from the dicycle and grow pendant vertices; every strictly
        // uni-dicyclic graph peels down to its dicycle by removing leaves.
        Dense cyc;
        cyc.n = c;
        for (int i = 0; i < c; ++i) cyc.set(i, (i + 1) % c);
        std::vector<Dense> level{cyc};
        for (int size = c; size < n; ++size) {
            std::unordered_set<std::string> seen;
            std::vector<Dense> next;
            for (const Dense &g : level) {
                for (int at = 0; at < size; ++at) {
                    for (int dir = 0; dir < 2; ++dir) {
                        Dense h = g;
                        h.n = size + 1;
                        if (dir) h.set(at, size); else h.set(size, at);
                        auto key = canonical_dense(h).key;
                        if (seen.insert(key).second) next.push_back(h);
                    }
                }
            }
            level = std::move(next);
        }
        auto graphs = dedup_sorted(level);
        out.insert(out.end(), graphs.begin(), graphs.end());
    }
    return out;
}

} // namespace obelisk
