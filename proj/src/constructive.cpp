#include "obelisk/constructive.hpp"

#include <algorithm>

namespace obelisk {
namespace {

bool is_tree(const OrientedGraph &t) {
    return t.vertex_count() >= 1 && t.arc_count() + 1 == t.vertex_count() && is_connected(t);
}

void require_tree(const OrientedGraph &t) {
    if (!is_tree(t)) throw error(errc::not_a_tree, "expected an oriented tree");
}

void require_vertex(const OrientedGraph &g, VertexId v) {
    if (!g.has_vertex(v))
        throw error(errc::unknown_vertex, "vertex " + std::to_string(v) + " is not in the graph");
}

// In-neighbors' blocks below the vertex, out-neighbors' above, siblings by
// ascending id: every arc points up and nothing spans the subtree root.
void otso_rec(const OrientedGraph &t, VertexId v, VertexId parent, std::vector<VertexId> &out) {
    for (VertexId u : t.in_neighbors(v))
        if (u != parent) otso_rec(t, u, v, out);
    out.push_back(v);
    for (VertexId u : t.out_neighbors(v))
        if (u != parent) otso_rec(t, u, v, out);
}

// An embedding of h turned into one of converse(h): reversing the spine
// flips every spine-relative direction back, so validity carries over.
BookEmbedding converse_reverse(const BookEmbedding &e) {
    BookEmbedding out;
    out.pages = e.pages;
    out.spine.assign(e.spine.rbegin(), e.spine.rend());
    for (const auto &[a, pl] : e.placement) out.placement[Arc{a.head, a.tail}] = pl;
    return out;
}

// Splits t at its spine-path arcs and keys each remaining component by the
// path vertex it contains.
std::map<VertexId, OrientedGraph> split_attachments(const OrientedGraph &t,
                                                    const std::vector<VertexId> &path) {
    OrientedGraph pruned = t;
    for (size_t i = 0; i + 1 < path.size(); ++i) pruned = delete_arc(pruned, {path[i], path[i + 1]});
    std::map<VertexId, OrientedGraph> out;
    for (const OrientedGraph &comp : components(pruned))
        for (VertexId x : path)
            if (comp.has_vertex(x)) {
                out[x] = comp;
                break;
            }
    return out;
}

BookEmbedding embed_two_heavy(const OrientedGraph &g, const DicycleDecomposition &d, VertexId x);

} // namespace

const char *spine_order_kind_name(SpineOrderKind k) {
    switch (k) {
    case SpineOrderKind::SinkOrder: return "sink-order";
    case SpineOrderKind::SourceOrder: return "source-order";
    case SpineOrderKind::SinkFountainOrder: return "sink-fountain-order";
    case SpineOrderKind::SourceFountainOrder: return "source-fountain-order";
    case SpineOrderKind::OtsoOrder: return "otso-order";
    }
    return "unknown";
}

BookEmbedding embed_oriented_cycle(const OrientedGraph &g) {
    if (g.vertex_count() == 0 || !is_connected(g))
        throw error(errc::not_a_cycle, "expected an oriented cycle");
    Shape s = classify_shape(g);
    if (s != Shape::Dicycle && s != Shape::OrientedCycle)
        throw error(errc::not_a_cycle, "expected an oriented cycle");
    std::vector<VertexId> order = cycle_order(g);
    const size_t n = order.size();
    BookEmbedding emb;
    emb.spine = order;
    emb.pages = 1;
    // The closing arc joins top and bottom; arcs running its way share page
    // 0 (consecutive spine intervals cannot interleave), the rest lie tight.
    bool closing_up = g.has_arc(order[0], order[n - 1]);
    Arc closing = closing_up ? Arc{order[0], order[n - 1]} : Arc{order[n - 1], order[0]};
    emb.placement[closing] = Placement{0};
    for (size_t i = 0; i + 1 < n; ++i) {
        bool up = g.has_arc(order[i], order[i + 1]);
        Arc a = up ? Arc{order[i], order[i + 1]} : Arc{order[i + 1], order[i]};
        emb.placement[a] = up == closing_up ? Placement{0} : Placement{Placement::kSpine};
    }
    return emb;
}

SpineOrderLabel otso_spine_order(const OrientedGraph &t, VertexId root) {
    require_tree(t);
    require_vertex(t, root);
    SpineOrderLabel label;
    label.kind = SpineOrderKind::OtsoOrder;
    label.root = root;
    otso_rec(t, root, -1, label.order);
    return label;
}

BookEmbedding embed_tree_loose(const OrientedGraph &t, VertexId root) {
    BookEmbedding emb;
    emb.spine = otso_spine_order(t, root).order;
    for (const Arc &a : t.arcs()) emb.placement[a] = Placement{0};
    emb.pages = t.arc_count() > 0 ? 1 : 0;
    return emb;
}

BookEmbedding embed_tree_sink(const OrientedGraph &t, VertexId x) {
    require_tree(t);
    require_vertex(t, x);
    if (t.out_degree(x) != 0)
        throw error(errc::not_a_sink, "vertex " + std::to_string(x) + " is not a sink of the tree");
    BookEmbedding emb;
    if (t.vertex_count() == 1) {
        emb.spine.push_back(x);
        return emb;
    }
    OrientedGraph rest = delete_vertex(t, x);
    for (VertexId v : t.in_neighbors(x)) {
        for (const OrientedGraph &comp : components(rest))
            if (comp.has_vertex(v)) {
                BookEmbedding part = embed_tree_loose(comp, v);
                emb.spine.insert(emb.spine.end(), part.spine.begin(), part.spine.end());
                for (const auto &[a, pl] : part.placement) emb.placement[a] = pl;
                break;
            }
        emb.placement[Arc{v, x}] = Placement{0};
    }
    emb.spine.push_back(x);
    emb.pages = 1;
    return emb;
}

BookEmbedding embed_tree_source(const OrientedGraph &t, VertexId x) {
    require_tree(t);
    require_vertex(t, x);
    if (t.in_degree(x) != 0)
        throw error(errc::not_a_sink, "vertex " + std::to_string(x) + " is not a source of the tree");
    return converse_reverse(embed_tree_sink(converse(t), x));
}

OrientedGraph build_fountain_tree(const FountainSpec &spec) {
    if (spec.spine_path.empty()) throw error(errc::bad_spec, "fountain dipath is empty");
    OrientedGraph g;
    for (VertexId x : spec.spine_path) {
        if (g.has_vertex(x)) throw error(errc::bad_spec, "fountain dipath repeats a vertex");
        g.add_vertex(x);
    }
    for (size_t i = 0; i + 1 < spec.spine_path.size(); ++i)
        g.add_arc(spec.spine_path[i], spec.spine_path[i + 1]);
    for (const auto &[x, tree] : spec.attached) {
        if (std::find(spec.spine_path.begin(), spec.spine_path.end(), x) == spec.spine_path.end())
            throw error(errc::bad_spec, "attachment at a vertex outside the dipath");
        if (!is_tree(tree) || !tree.has_vertex(x))
            throw error(errc::bad_spec, "attachment must be an oriented tree containing its dipath vertex");
        int degree_out = spec.kind == FountainKind::Sink ? tree.out_degree(x) : tree.in_degree(x);
        if (degree_out != 0)
            throw error(errc::bad_spec, spec.kind == FountainKind::Sink
                                            ? "dipath vertex must be a sink of its attachment"
                                            : "dipath vertex must be a source of its attachment");
        for (VertexId v : tree.vertices()) {
            if (v == x) continue;
            if (g.has_vertex(v)) throw error(errc::bad_spec, "attachments share a vertex");
            g.add_vertex(v);
        }
        for (const Arc &a : tree.arcs()) g.add_arc(a.tail, a.head);
    }
    return g;
}

BookEmbedding embed_fountain(const FountainSpec &spec) {
    build_fountain_tree(spec); // full validation
    if (spec.kind == FountainKind::Source) {
        FountainSpec dual;
        dual.kind = FountainKind::Sink;
        dual.spine_path.assign(spec.spine_path.rbegin(), spec.spine_path.rend());
        for (const auto &[x, tree] : spec.attached) dual.attached[x] = converse(tree);
        return converse_reverse(embed_fountain(dual));
    }
    BookEmbedding emb;
    bool any_page = false;
    // Blocks bottom-to-top follow the dipath; the dipath itself sits on top
    // reversed, so arc groups into later vertices nest inside earlier ones.
    for (VertexId x : spec.spine_path) {
        auto it = spec.attached.find(x);
        if (it == spec.attached.end() || it->second.vertex_count() <= 1) continue;
        BookEmbedding part = embed_tree_sink(it->second, x);
        part.spine.pop_back(); // x joins the dipath run instead
        emb.spine.insert(emb.spine.end(), part.spine.begin(), part.spine.end());
        for (const auto &[a, pl] : part.placement) emb.placement[a] = pl;
        any_page = true;
    }
    for (auto it = spec.spine_path.rbegin(); it != spec.spine_path.rend(); ++it)
        emb.spine.push_back(*it);
    for (size_t i = 0; i + 1 < spec.spine_path.size(); ++i)
        emb.placement[Arc{spec.spine_path[i], spec.spine_path[i + 1]}] = Placement{Placement::kSpine};
    emb.pages = any_page ? 1 : 0;
    return emb;
}

std::variant<FountainSpec, AntlerWitness> recognize_sink_fountain(const OrientedGraph &t, VertexId x) {
    require_tree(t);
    require_vertex(t, x);
    std::vector<VertexId> walk{x};
    for (;;) {
        VertexId cur = walk.back();
        auto outs = t.out_neighbors(cur);
        if (outs.size() >= 2) {
            AntlerWitness a;
            a.positive = true;
            a.j = static_cast<int>(walk.size());
            a.dipath = walk;
            a.branch_vertex = cur;
            a.tips = {outs[0], outs[1]};
            return a;
        }
        if (outs.empty()) break;
        walk.push_back(outs[0]);
    }
    FountainSpec spec;
    spec.kind = FountainKind::Sink;
    spec.spine_path = walk;
    spec.attached = split_attachments(t, walk);
    return spec;
}

std::variant<FountainSpec, AntlerWitness> recognize_source_fountain(const OrientedGraph &t, VertexId x) {
    auto res = recognize_sink_fountain(converse(t), x);
    if (auto *a = std::get_if<AntlerWitness>(&res)) {
        a->positive = false;
        return *a;
    }
    const FountainSpec &dual = std::get<FountainSpec>(res);
    FountainSpec spec;
    spec.kind = FountainKind::Source;
    spec.spine_path.assign(dual.spine_path.rbegin(), dual.spine_path.rend());
    for (const auto &[xi, tree] : dual.attached) spec.attached[xi] = converse(tree);
    return spec;
}

BookEmbedding embed_unidicyclic_one_heavy(const OrientedGraph &g, const DicycleDecomposition &d) {
    std::vector<VertexId> heavy = heavy_vertices(d);
    if (heavy.size() > 1) throw error(errc::wrong_shape, "more than one heavy vertex");
    if (heavy.empty()) return embed_oriented_cycle(g);

    VertexId y = heavy.front();
    const size_t n = d.dicycle.size();
    size_t h = std::find(d.dicycle.begin(), d.dicycle.end(), y) - d.dicycle.begin();
    std::vector<VertexId> seq;
    for (size_t i = 0; i < n; ++i) seq.push_back(d.dicycle[(h + i) % n]);

    // The attached tree all-loose, then the remaining cycle run slides in
    // directly below its uncovered root: tight downward, closed upward.
    BookEmbedding emb = embed_tree_loose(d.attached.at(y), y);
    auto at = std::find(emb.spine.begin(), emb.spine.end(), y);
    std::vector<VertexId> run(seq.rbegin(), seq.rend() - 1);
    emb.spine.insert(at, run.begin(), run.end());
    for (size_t i = 0; i + 1 < n; ++i) emb.placement[Arc{seq[i], seq[i + 1]}] = Placement{Placement::kSpine};
    emb.placement[Arc{seq[n - 1], seq[0]}] = Placement{0};
    emb.pages = 1;
    return emb;
}

std::variant<BookEmbedding, ForbiddenWitness> embed_unidicyclic(const OrientedGraph &g) {
    DicycleDecomposition d = decompose_unidicyclic(g);
    if (auto w = detect_I(d)) return *w;
    if (auto w = detect_T(d)) return *w;
    if (auto w = detect_R(d)) return *w;
    std::vector<VertexId> heavy = heavy_vertices(d);
    if (heavy.size() <= 1) return embed_unidicyclic_one_heavy(g, d);

    // Exactly two heavy vertices joined by a cycle arc remain possible here.
    const size_t n = d.dicycle.size();
    VertexId x = 0, y = 0;
    for (size_t i = 0; i < n; ++i) {
        VertexId a = d.dicycle[i], b = d.dicycle[(i + 1) % n];
        if (d.attached.at(a).vertex_count() > 1 && d.attached.at(b).vertex_count() > 1) {
            x = a;
            y = b;
            break;
        }
    }
    if (std::holds_alternative<FountainSpec>(recognize_sink_fountain(d.attached.at(x), x)))
        return embed_two_heavy(g, d, x);
    // The tail side has a positive antler, so (detect_R being silent) the
    // head side has no negative one: solve the converse and flip back.
    OrientedGraph gc = converse(g);
    return converse_reverse(embed_two_heavy(gc, decompose_unidicyclic(gc), y));
}

namespace {

// Embeds a two-heavy graph whose tail-side tree T_x is a sink fountain:
// drop T_x, embed the one-heavy remainder with x at the bottom of the cycle
// run, then hang T_x's fountain block directly below x.
BookEmbedding embed_two_heavy(const OrientedGraph &g, const DicycleDecomposition &d, VertexId x) {
    const OrientedGraph &tx = d.attached.at(x);
    std::vector<VertexId> keep;
    for (VertexId v : g.vertices())
        if (v == x || !tx.has_vertex(v)) keep.push_back(v);
    OrientedGraph g1 = induced_subgraph(g, keep);
    BookEmbedding emb = embed_unidicyclic_one_heavy(g1, decompose_unidicyclic(g1));

    BookEmbedding block = embed_fountain(std::get<FountainSpec>(recognize_sink_fountain(tx, x)));
    block.spine.pop_back(); // x already sits in the main spine
    auto at = std::find(emb.spine.begin(), emb.spine.end(), x);
    emb.spine.insert(at, block.spine.begin(), block.spine.end());
    for (const auto &[a, pl] : block.placement) emb.placement[a] = pl;
    emb.pages = 1;
    return emb;
}

} // namespace

} // namespace obelisk
