#include "obelisk.h"

#include "obelisk/constructive.hpp"
#include "obelisk/gen.hpp"
#include "obelisk/graph.hpp"
#include "obelisk/layout.hpp"
#include "obelisk/oracle.hpp"
#include "obelisk/recognize.hpp"
#include "obelisk/svg.hpp"

#include <cstdlib>
#include <cstring>
#include <string>
#include <variant>
#include <vector>

using namespace obelisk;

struct obk_graph {
    OrientedGraph g;
};

struct obk_embedding {
    BookEmbedding e;
};

struct obk_graph_list {
    std::vector<obk_graph> items;
};

namespace {

thread_local std::string t_last_error;

char *copy_string(const std::string &s) {
    char *out = static_cast<char *>(std::malloc(s.size() + 1));
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void set_out(char **slot, const std::string &s) {
    if (slot)
        *slot = copy_string(s);
}

obk_status status_of(errc c) {
    switch (c) {
    case errc::syntax_error: return OBK_SYNTAX_ERROR;
    case errc::not_simple: return OBK_NOT_SIMPLE;
    case errc::unknown_vertex: return OBK_UNKNOWN_VERTEX;
    case errc::unknown_arc: return OBK_UNKNOWN_ARC;
    case errc::size_guard: return OBK_SIZE_GUARD;
    case errc::disconnected: return OBK_DISCONNECTED;
    case errc::not_a_cycle: return OBK_NOT_A_CYCLE;
    case errc::not_a_tree: return OBK_NOT_A_TREE;
    case errc::not_a_sink: return OBK_NOT_A_SINK;
    case errc::bad_spec: return OBK_BAD_SPEC;
    case errc::wrong_shape: return OBK_WRONG_SHAPE;
    case errc::no_cycle: return OBK_NO_CYCLE;
    case errc::multiple_cycles: return OBK_MULTIPLE_CYCLES;
    case errc::cycle_not_directed: return OBK_CYCLE_NOT_DIRECTED;
    case errc::invalid_embedding: return OBK_INVALID_EMBEDDING;
    case errc::bad_argument: return OBK_BAD_ARGUMENT;
    }
    return OBK_INTERNAL;
}

template <typename Fn> obk_status guarded(Fn &&fn) {
    try {
        fn();
        return OBK_OK;
    } catch (const error &e) {
        t_last_error = e.what();
        return status_of(e.code());
    } catch (const std::exception &e) {
        t_last_error = e.what();
        return OBK_INTERNAL;
    }
}

OracleOptions options_from(int max_n_override, int jobs) {
    OracleOptions opts;
    if (max_n_override > 0)
        opts.max_n = max_n_override;
    if (jobs > 1)
        opts.jobs = jobs;
    return opts;
}

} // namespace

const char *obk_status_name(obk_status s) {
    if (s == OBK_OK)
        return "ok";
    if (s == OBK_INTERNAL)
        return "internal";
    return errc_name(static_cast<errc>(s - 1));
}

const char *obk_last_error(void) { return t_last_error.c_str(); }

void obk_string_free(char *s) { std::free(s); }

// ---- graphs -----------------------------------------------------------------

obk_status obk_graph_parse(const char *text, int implicit_vertices, obk_graph **out) {
    return guarded([&] {
        OrientedGraph g = parse_graph(text ? text : "", implicit_vertices != 0);
        *out = new obk_graph{std::move(g)};
    });
}

obk_status obk_graph_format(const obk_graph *g, char **out) {
    return guarded([&] { set_out(out, format_graph(g->g)); });
}

void obk_graph_free(obk_graph *g) { delete g; }

int obk_graph_vertex_count(const obk_graph *g) { return g->g.vertex_count(); }

int obk_graph_arc_count(const obk_graph *g) { return g->g.arc_count(); }

obk_status obk_graph_converse(const obk_graph *g, obk_graph **out) {
    return guarded([&] { *out = new obk_graph{converse(g->g)}; });
}

obk_status obk_graph_isomorphic(const obk_graph *a, const obk_graph *b, int *iso) {
    return guarded([&] { *iso = is_isomorphic(a->g, b->g) ? 1 : 0; });
}

obk_status obk_graph_shape(const obk_graph *g, char **out) {
    return guarded([&] {
        if (!is_connected(g->g)) {
            set_out(out, "disconnected");
            return;
        }
        Shape s = classify_shape(g->g);
        if (s == Shape::Other && g->g.arc_count() == g->g.vertex_count()) {
            // one undirected cycle; call it unidicyclic only if that cycle is directed
            try {
                decompose_unidicyclic(g->g);
                set_out(out, "unidicyclic");
                return;
            } catch (const error &) {
            }
        }
        set_out(out, shape_name(s));
    });
}

// ---- embeddings ---------------------------------------------------------------

obk_status obk_embedding_parse(const char *text, obk_embedding **out) {
    return guarded([&] {
        BookEmbedding e = parse_embedding(text ? text : "");
        *out = new obk_embedding{std::move(e)};
    });
}

obk_status obk_embedding_format(const obk_embedding *e, char **out) {
    return guarded([&] { set_out(out, format_embedding(e->e)); });
}

void obk_embedding_free(obk_embedding *e) { delete e; }

int obk_embedding_pages(const obk_embedding *e) { return e->e.pages; }

// ---- checking and rendering ----------------------------------------------------

obk_status obk_verify(const obk_graph *g, const obk_embedding *e, int *valid, char **report) {
    return guarded([&] {
        ValidityReport r = verify(g->g, e->e);
        if (valid)
            *valid = r.valid ? 1 : 0;
        set_out(report, r.to_text());
    });
}

obk_status obk_render_svg(const obk_graph *g, const obk_embedding *e, char **svg) {
    return guarded([&] { set_out(svg, render_svg(g->g, e->e)); });
}

// ---- exact search ---------------------------------------------------------------

obk_status obk_obt(const obk_graph *g, int max_n_override, int jobs, int *thickness,
                   obk_embedding **witness) {
    return guarded([&] {
        ObtResult r = obt(g->g, options_from(max_n_override, jobs));
        if (thickness)
            *thickness = r.thickness;
        if (witness)
            *witness = new obk_embedding{std::move(r.witness)};
    });
}

// ---- construction ----------------------------------------------------------------

obk_status obk_embed(const obk_graph *g, const char *method, int max_n_override, int jobs,
                     obk_embedding **out, char **method_used, char **witness_report, int *found) {
    return guarded([&] {
        std::string mode = method ? method : "auto";
        if (mode != "auto" && mode != "exact")
            throw error(errc::bad_argument, "embed method must be auto or exact, got '" + mode + "'");

        const OrientedGraph &graph = g->g;
        BookEmbedding emb;
        std::string used;
        std::string report;
        bool have_embedding = false;
        bool have_witness = false;

        if (mode == "auto" && graph.vertex_count() > 0 && is_connected(graph)) {
            Shape s = classify_shape(graph);
            if (s == Shape::Dipath || s == Shape::OrientedPath || s == Shape::OrientedTree) {
                emb = embed_tree_loose(graph, graph.vertices().front());
                used = "constructive-tree";
                have_embedding = true;
            } else if (s == Shape::Dicycle || s == Shape::OrientedCycle) {
                emb = embed_oriented_cycle(graph);
                used = "constructive-cycle";
                have_embedding = true;
            } else if (graph.arc_count() == graph.vertex_count()) {
                try {
                    auto res = embed_unidicyclic(graph);
                    used = "constructive-unidicyclic";
                    if (auto *w = std::get_if<ForbiddenWitness>(&res)) {
                        report = w->to_text();
                        have_witness = true;
                    } else {
                        emb = std::move(std::get<BookEmbedding>(res));
                        have_embedding = true;
                    }
                } catch (const error &e) {
                    // a mixed-orientation cycle has no constructive routine
                    if (e.code() != errc::cycle_not_directed)
                        throw;
                }
            }
        }
        if (!have_embedding && !have_witness) {
            ObtResult r = obt(graph, options_from(max_n_override, jobs));
            emb = std::move(r.witness);
            used = "exact";
            have_embedding = true;
        }

        if (found)
            *found = have_embedding ? 1 : 0;
        set_out(method_used, used);
        if (have_embedding) {
            if (out)
                *out = new obk_embedding{std::move(emb)};
        } else {
            set_out(witness_report, report);
        }
    });
}

// ---- recognition -----------------------------------------------------------------

obk_status obk_classify_m1(const obk_graph *g, int *is_m1, char **family) {
    return guarded([&] {
        Family f;
        bool hit = classify_M1(g->g, &f);
        if (is_m1)
            *is_m1 = hit ? 1 : 0;
        if (hit)
            set_out(family, family_name(f));
    });
}

obk_status obk_recognize(const obk_graph *g, int *found, char **report) {
    return guarded([&] {
        DicycleDecomposition d = decompose_unidicyclic(g->g);
        std::optional<ForbiddenWitness> w = detect_I(d);
        if (!w)
            w = detect_T(d);
        if (!w)
            w = detect_R(d);
        if (found)
            *found = w ? 1 : 0;
        set_out(report, w ? w->to_text() : std::string("none"));
    });
}

// ---- mining and generation ----------------------------------------------------------

obk_status obk_mine_critical(int n_max, int k, int max_n_override, obk_graph_list **out) {
    return guarded([&] {
        std::vector<OrientedGraph> found = mine_critical(n_max, k, max_n_override);
        auto *list = new obk_graph_list;
        list->items.reserve(found.size());
        for (OrientedGraph &g : found)
            list->items.push_back(obk_graph{std::move(g)});
        *out = list;
    });
}

int obk_graph_list_count(const obk_graph_list *l) { return static_cast<int>(l->items.size()); }

const obk_graph *obk_graph_list_get(const obk_graph_list *l, int i) {
    if (i < 0 || i >= static_cast<int>(l->items.size()))
        return nullptr;
    return &l->items[static_cast<size_t>(i)];
}

void obk_graph_list_free(obk_graph_list *l) { delete l; }

obk_status obk_generate(const char *shape, int n, uint64_t seed, obk_graph **out) {
    return guarded([&] {
        std::string kind = shape ? shape : "";
        OrientedGraph g;
        if (kind == "tree")
            g = gen_tree(n, seed);
        else if (kind == "cycle")
            g = gen_cycle(n, seed);
        else if (kind == "dicycle")
            g = gen_dicycle(n);
        else if (kind == "unidicyclic")
            g = gen_unidicyclic(n, seed);
        else if (kind == "fountain")
            g = build_fountain_tree(gen_fountain_spec(n, seed));
        else
            throw error(errc::bad_argument,
                        "unknown shape '" + kind +
                            "' (expected tree, cycle, dicycle, unidicyclic or fountain)");
        *out = new obk_graph{std::move(g)};
    });
}
