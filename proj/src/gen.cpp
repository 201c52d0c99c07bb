#include "obelisk/gen.hpp"

#include <algorithm>

namespace obelisk {

OrientedGraph gen_tree(int n, uint64_t seed) {
    if (n < 1) throw error(errc::bad_argument, "tree needs at least one vertex");
    SplitMix64 rng(seed);
    OrientedGraph g;
    for (int v = 1; v <= n; ++v) g.add_vertex(v);
    for (int v = 2; v <= n; ++v) {
        int parent = 1 + static_cast<int>(rng.below(static_cast<uint64_t>(v - 1)));
        if (rng.below(2) == 0)
            g.add_arc(parent, v);
        else
            g.add_arc(v, parent);
    }
    return g;
}

OrientedGraph gen_cycle(int n, uint64_t seed) {
    if (n < 3) throw error(errc::bad_argument, "cycle needs at least three vertices");
    SplitMix64 rng(seed);
    OrientedGraph g;
    for (int v = 1; v <= n; ++v) g.add_vertex(v);
    for (int v = 1; v <= n; ++v) {
        int w = v % n + 1;
        if (rng.below(2) == 0)
            g.add_arc(v, w);
        else
            g.add_arc(w, v);
    }
    return g;
}

OrientedGraph gen_dicycle(int n) {
    if (n < 3) throw error(errc::bad_argument, "dicycle needs at least three vertices");
    OrientedGraph g;
    for (int v = 1; v <= n; ++v) g.add_vertex(v);
    for (int v = 1; v <= n; ++v) g.add_arc(v, v % n + 1);
    return g;
}

OrientedGraph gen_unidicyclic(int n, uint64_t seed, int cycle_min, int cycle_max) {
    if (cycle_min < 3) cycle_min = 3;
    if (n < cycle_min) throw error(errc::bad_argument, "too few vertices for the cycle");
    SplitMix64 rng(seed);
    int hi = std::min(cycle_max, n);
    int c = cycle_min + static_cast<int>(rng.below(static_cast<uint64_t>(hi - cycle_min + 1)));
    OrientedGraph g = gen_dicycle(c);
    for (int v = c + 1; v <= n; ++v) {
        g.add_vertex(v);
        int host = 1 + static_cast<int>(rng.below(static_cast<uint64_t>(v - 1)));
        if (rng.below(2) == 0)
            g.add_arc(host, v);
        else
            g.add_arc(v, host);
    }
    return g;
}

FountainSpec gen_fountain_spec(int spine_len, uint64_t seed, int max_tree) {
    if (spine_len < 1) throw error(errc::bad_argument, "fountain dipath needs a vertex");
    if (max_tree < 1) throw error(errc::bad_argument, "attachment budget must be positive");
    SplitMix64 rng(seed);
    FountainSpec spec;
    spec.kind = FountainKind::Sink;
    for (int v = 1; v <= spine_len; ++v) spec.spine_path.push_back(v);

    std::vector<int> sizes;
    bool any = false;
    for (int i = 0; i < spine_len; ++i) {
        int k = 1 + static_cast<int>(rng.below(static_cast<uint64_t>(max_tree)));
        any = any || k > 1;
        sizes.push_back(k);
    }
    if (!any) sizes.front() = 2; // keep the embedding one page, not zero

    int fresh = spine_len + 1;
    for (int i = 0; i < spine_len; ++i) {
        VertexId root = spec.spine_path[i];
        OrientedGraph tree;
        tree.add_vertex(root);
        std::vector<VertexId> local{root};
        for (int j = 1; j < sizes[i]; ++j) {
            VertexId v = fresh++;
            tree.add_vertex(v);
            VertexId parent = local[rng.below(local.size())];
            // arcs at the root point inward so the root stays a sink
            if (parent == root || rng.below(2) == 0)
                tree.add_arc(v, parent);
            else
                tree.add_arc(parent, v);
            local.push_back(v);
        }
        spec.attached[root] = tree;
    }
    return spec;
}

} // namespace obelisk
