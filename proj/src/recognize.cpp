#include "obelisk/recognize.hpp"

#include "obelisk/constructive.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace obelisk {
namespace {

// Smallest-id arc joining a heavy root to its attached tree, in host
// orientation. Pendant-arc directions are free in the pattern families, so
// any incident tree arc certifies heaviness.
Arc pendant_arc(const OrientedGraph &tree, VertexId root) {
    VertexId w = tree.neighbors(root).front();
    return tree.has_arc(root, w) ? Arc{root, w} : Arc{w, root};
}

void map_cycle(ForbiddenWitness &w, const DicycleDecomposition &d) {
    const int n = static_cast<int>(d.dicycle.size());
    for (int i = 0; i < n; ++i)
        w.vertex_map.emplace_back("c" + std::to_string(i + 1), d.dicycle[i]);
    for (int i = 0; i < n; ++i) w.arcs.push_back({d.dicycle[i], d.dicycle[(i + 1) % n]});
}

// Appends a recognized antler's arcs and pattern names. Positive antlers use
// a2..aj for the dipath and t1, t2 for the tips; negative ones b2..bk and
// u1, u2. The dipath root is the cycle vertex, already mapped.
void map_antler(ForbiddenWitness &w, const AntlerWitness &a) {
    const char *path_stem = a.positive ? "a" : "b";
    const char *tip_stem = a.positive ? "t" : "u";
    for (size_t i = 1; i < a.dipath.size(); ++i) {
        w.vertex_map.emplace_back(path_stem + std::to_string(i + 1), a.dipath[i]);
        VertexId prev = a.dipath[i - 1], cur = a.dipath[i];
        w.arcs.push_back(a.positive ? Arc{prev, cur} : Arc{cur, prev});
    }
    for (int t = 0; t < 2; ++t) {
        w.vertex_map.emplace_back(tip_stem + std::to_string(t + 1), a.tips[t]);
        w.arcs.push_back(a.positive ? Arc{a.branch_vertex, a.tips[t]}
                                    : Arc{a.tips[t], a.branch_vertex});
    }
}

} // namespace

DicycleDecomposition decompose_unidicyclic(const OrientedGraph &g) {
    if (!is_connected(g)) throw error(errc::disconnected, "decomposition requires a connected graph");
    const size_t n = g.vertex_count();
    const size_t m = g.arc_count();
    if (m < n) throw error(errc::no_cycle, "the underlying graph has no cycle");
    if (m > n) throw error(errc::multiple_cycles, "the underlying graph has more than one cycle");

    // Connected with m == n: exactly one cycle. Peel leaves until it remains.
    std::map<VertexId, int> deg;
    for (VertexId v : g.vertices()) deg[v] = static_cast<int>(g.degree(v));
    std::set<VertexId> alive(g.vertices().begin(), g.vertices().end());
    std::vector<VertexId> peel;
    for (auto &[v, dv] : deg)
        if (dv == 1) peel.push_back(v);
    while (!peel.empty()) {
        VertexId v = peel.back();
        peel.pop_back();
        alive.erase(v);
        for (VertexId w : g.neighbors(v))
            if (alive.count(w) && --deg[w] == 1) peel.push_back(w);
    }

    // Arcs among cycle vertices are exactly the cycle arcs (a chord would be
    // a second cycle), so in-cycle degrees decide directedness.
    for (VertexId v : alive) {
        int out = 0, in = 0;
        for (VertexId w : g.out_neighbors(v)) out += alive.count(w) ? 1 : 0;
        for (VertexId w : g.in_neighbors(v)) in += alive.count(w) ? 1 : 0;
        if (out != 1 || in != 1)
            throw error(errc::cycle_not_directed, "the unique cycle is not a directed cycle");
    }

    DicycleDecomposition d;
    VertexId cur = *alive.begin();
    do {
        d.dicycle.push_back(cur);
        for (VertexId w : g.out_neighbors(cur))
            if (alive.count(w)) {
                cur = w;
                break;
            }
    } while (cur != d.dicycle.front());

    OrientedGraph pruned = g;
    for (size_t i = 0; i < d.dicycle.size(); ++i)
        pruned = delete_arc(pruned, {d.dicycle[i], d.dicycle[(i + 1) % d.dicycle.size()]});
    for (const OrientedGraph &tree : components(pruned)) {
        for (VertexId root : d.dicycle)
            if (tree.has_vertex(root)) {
                d.attached[root] = tree;
                break;
            }
    }
    return d;
}

std::vector<VertexId> heavy_vertices(const DicycleDecomposition &d) {
    std::vector<VertexId> out;
    for (const auto &[root, tree] : d.attached)
        if (tree.vertex_count() > 1) out.push_back(root);
    return out;
}

const char *family_name(Family f) {
    switch (f) {
    case Family::SPlus: return "SPlus";
    case Family::SMinus: return "SMinus";
    case Family::Dicycle: return "Dicycle";
    case Family::ClassI: return "ClassI";
    case Family::ClassT: return "ClassT";
    case Family::ClassR: return "ClassR";
    }
    return "unknown";
}

bool classify_M1(const OrientedGraph &g, Family *out) {
    if (g.vertex_count() == 0 || !is_connected(g)) return false;
    if (g.vertex_count() == 3 && g.arc_count() == 2) {
        for (VertexId v : g.vertices()) {
            if (g.out_degree(v) == 2) {
                if (out) *out = Family::SPlus;
                return true;
            }
            if (g.in_degree(v) == 2) {
                if (out) *out = Family::SMinus;
                return true;
            }
        }
        return false; // the 3-dipath
    }
    if (classify_shape(g) == Shape::Dicycle) {
        if (out) *out = Family::Dicycle;
        return true;
    }
    return false;
}

std::string ForbiddenWitness::to_text() const {
    std::ostringstream os;
    os << "family " << family_name(family) << "\n";
    for (const auto &[name, host] : vertex_map) os << "pattern " << name << " -> host " << host << "\n";
    for (const Arc &a : arcs) os << "arc " << a.tail << " " << a.head << "\n";
    return os.str();
}

OrientedGraph ForbiddenWitness::extract() const {
    OrientedGraph g;
    for (const auto &[name, host] : vertex_map) g.add_vertex(host);
    for (const Arc &a : arcs) g.add_arc(a.tail, a.head);
    return g;
}

std::optional<ForbiddenWitness> detect_I(const DicycleDecomposition &d) {
    const int n = static_cast<int>(d.dicycle.size());
    if (n < 4) return std::nullopt;
    std::vector<int> heavy_pos;
    for (int i = 0; i < n; ++i)
        if (d.attached.at(d.dicycle[i]).vertex_count() > 1) heavy_pos.push_back(i);
    for (size_t a = 0; a < heavy_pos.size(); ++a)
        for (size_t b = a + 1; b < heavy_pos.size(); ++b) {
            int i = heavy_pos[a], j = heavy_pos[b];
            bool cyclic_adjacent = j - i == 1 || (i == 0 && j == n - 1);
            if (cyclic_adjacent) continue;
            ForbiddenWitness w;
            w.family = Family::ClassI;
            map_cycle(w, d);
            Arc pa = pendant_arc(d.attached.at(d.dicycle[i]), d.dicycle[i]);
            Arc pb = pendant_arc(d.attached.at(d.dicycle[j]), d.dicycle[j]);
            w.vertex_map.emplace_back("p1", pa.tail == d.dicycle[i] ? pa.head : pa.tail);
            w.vertex_map.emplace_back("p2", pb.tail == d.dicycle[j] ? pb.head : pb.tail);
            w.arcs.push_back(pa);
            w.arcs.push_back(pb);
            return w;
        }
    return std::nullopt;
}

std::optional<ForbiddenWitness> detect_T(const DicycleDecomposition &d) {
    if (d.dicycle.size() != 3) return std::nullopt;
    if (heavy_vertices(d).size() != 3) return std::nullopt;
    ForbiddenWitness w;
    w.family = Family::ClassT;
    map_cycle(w, d);
    for (int i = 0; i < 3; ++i) {
        Arc pa = pendant_arc(d.attached.at(d.dicycle[i]), d.dicycle[i]);
        w.vertex_map.emplace_back("p" + std::to_string(i + 1),
                                  pa.tail == d.dicycle[i] ? pa.head : pa.tail);
        w.arcs.push_back(pa);
    }
    return w;
}

std::optional<ForbiddenWitness> detect_R(const DicycleDecomposition &d) {
    const int n = static_cast<int>(d.dicycle.size());
    for (int i = 0; i < n; ++i) {
        VertexId x = d.dicycle[i];
        VertexId y = d.dicycle[(i + 1) % n];
        const OrientedGraph &tx = d.attached.at(x);
        const OrientedGraph &ty = d.attached.at(y);
        if (tx.vertex_count() <= 1 || ty.vertex_count() <= 1) continue;
        auto pos = recognize_sink_fountain(tx, x);
        if (!std::holds_alternative<AntlerWitness>(pos)) continue;
        auto neg = recognize_source_fountain(ty, y);
        if (!std::holds_alternative<AntlerWitness>(neg)) continue;
        ForbiddenWitness w;
        w.family = Family::ClassR;
        map_cycle(w, d);
        map_antler(w, std::get<AntlerWitness>(pos));
        map_antler(w, std::get<AntlerWitness>(neg));
        return w;
    }
    return std::nullopt;
}

} // namespace obelisk
