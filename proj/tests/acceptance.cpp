// Acceptance gate: ten checks, one PASS/FAIL line each, exit 0 only when
// everything holds. Each check is oracle- or property-based and prints a
// short failure note when it trips.

#include "checks.hpp"
#include "obelisk/constructive.hpp"
#include "obelisk/gen.hpp"
#include "obelisk/graph.hpp"
#include "obelisk/oracle.hpp"
#include "obelisk/recognize.hpp"
#include "test_graphs.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <variant>
#include <vector>

using namespace obelisk;

namespace {

int worker_count() {
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 2;
}

std::string describe(const OrientedGraph &g) {
    std::ostringstream out;
    out << "n=" << g.vertex_count() << " arcs:";
    for (const Arc &a : g.arcs())
        out << ' ' << a.tail << ">" << a.head;
    return out.str();
}

// ---- 1: the one-page-critical census -----------------------------------------

bool criterion_census(std::string &note) {
    std::vector<OrientedGraph> found = mine_critical(6, 1);
    std::vector<OrientedGraph> expected = {make_splus(),    make_sminus(),   make_dicycle(3),
                                           make_dicycle(4), make_dicycle(5), make_dicycle(6)};
    if (found.size() != expected.size()) {
        note = "expected 6 graphs, got " + std::to_string(found.size());
        return false;
    }
    for (const OrientedGraph &want : expected) {
        int hits = 0;
        for (const OrientedGraph &got : found)
            if (is_isomorphic(want, got))
                ++hits;
        if (hits != 1) {
            note = "census misses or duplicates " + describe(want);
            return false;
        }
    }
    return true;
}

// ---- 2: every oriented cycle is a one-page graph -------------------------------

bool criterion_cycles(std::string &note) {
    for (int n = 3; n <= 7; ++n) {
        std::vector<std::pair<VertexId, VertexId>> edges;
        for (int i = 1; i <= n; ++i)
            edges.emplace_back(i, i % n + 1);
        for (const OrientedGraph &g : enumerate_orientations(n, edges)) {
            if (obt(g).thickness != 1) {
                note = "thickness != 1 for " + describe(g);
                return false;
            }
            BookEmbedding emb = embed_oriented_cycle(g);
            if (!verify(g, emb).valid || emb.pages != 1) {
                note = "constructed embedding fails for " + describe(g);
                return false;
            }
        }
    }
    return true;
}

// ---- 3: dicycles embed in one page exactly at their cyclic orders ---------------

std::set<std::vector<VertexId>> natural_orders(int n) {
    std::set<std::vector<VertexId>> out;
    for (int rot = 0; rot < n; ++rot) {
        std::vector<VertexId> seq(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i)
            seq[static_cast<size_t>(i)] = (i + rot) % n + 1;
        out.insert(seq);
        std::vector<VertexId> rev(seq.rbegin(), seq.rend());
        out.insert(rev);
    }
    return out;
}

bool criterion_natural(std::string &note) {
    for (int n = 3; n <= 6; ++n) {
        OrientedGraph g = make_dicycle(n);
        std::set<std::vector<VertexId>> natural = natural_orders(n);

        std::vector<VertexId> order(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i)
            order[static_cast<size_t>(i)] = i + 1;
        do {
            bool one_page = min_pages_for_spine(g, order).pages <= 1;
            if (one_page != (natural.count(order) > 0)) {
                std::ostringstream o;
                o << "n=" << n << " spine";
                for (VertexId v : order)
                    o << ' ' << v;
                note = o.str() + (one_page ? " is one-page off the cyclic orders"
                                           : " needs more pages on a cyclic order");
                return false;
            }
        } while (std::next_permutation(order.begin(), order.end()));

        // on the cyclic orders, every valid one-page embedding keeps exactly
        // one arc loose, and that arc joins the spine's two ends
        const std::vector<Arc> &arcs = g.arcs();
        for (const std::vector<VertexId> &nat : natural) {
            for (unsigned mask = 0; mask < (1u << n); ++mask) {
                BookEmbedding emb;
                emb.spine = nat;
                emb.pages = 1;
                std::vector<Arc> loose;
                for (int i = 0; i < n; ++i) {
                    const Arc &a = arcs[static_cast<size_t>(i)];
                    if (mask >> i & 1u) {
                        emb.placement[a] = Placement::on_page(0);
                        loose.push_back(a);
                    } else {
                        emb.placement[a] = Placement::spine();
                    }
                }
                if (!verify(g, emb).valid)
                    continue;
                bool ends_ok = false;
                if (loose.size() == 1) {
                    int lo = spine_position(emb, loose[0].tail);
                    int hi = spine_position(emb, loose[0].head);
                    if (lo > hi)
                        std::swap(lo, hi);
                    ends_ok = lo == 0 && hi == n - 1;
                }
                if (!ends_ok) {
                    note = "a valid one-page dicycle embedding is not the single-loose shape";
                    return false;
                }
            }
        }
    }
    return true;
}

// ---- 4: the all-loose tree embedding, every tree, every root ---------------------

bool criterion_trees(std::string &note) {
    SplitMix64 seeds(20160828);
    for (int trial = 0; trial < 1000; ++trial) {
        int n = 2 + static_cast<int>(seeds.below(9)); // 2..10 vertices
        OrientedGraph t = gen_tree(n, seeds.next());
        for (VertexId root : t.vertices()) {
            BookEmbedding emb = embed_tree_loose(t, root);
            if (!verify(t, emb).valid || emb.pages != 1 || tight_count(emb) != 0 ||
                !pages_upward(emb) || !uncovered(emb, root)) {
                note = "tree contract broken at root " + std::to_string(root) + " of " +
                       describe(t);
                return false;
            }
        }
    }
    return true;
}

// ---- 5: fountain trees build, embed, nest and round-trip --------------------------

bool criterion_fountains(std::string &note) {
    SplitMix64 seeds(5150);
    for (int trial = 0; trial < 500; ++trial) {
        int len = 1 + static_cast<int>(seeds.below(4)); // spine length 1..4
        FountainSpec spec = gen_fountain_spec(len, seeds.next());
        OrientedGraph tree = build_fountain_tree(spec);
        BookEmbedding emb = embed_fountain(spec);
        if (!verify(tree, emb).valid || emb.pages != 1 || !fountain_nesting(emb, spec)) {
            note = "fountain embedding broken for " + describe(tree);
            return false;
        }
        auto back = recognize_sink_fountain(tree, spec.spine_path.front());
        const FountainSpec *again = std::get_if<FountainSpec>(&back);
        if (!again || !equivalent_specs(*again, spec)) {
            note = "fountain recognition does not round-trip for " + describe(tree);
            return false;
        }
    }
    return true;
}

// ---- 6 and 7: the forbidden families need two pages and are arc-critical -----------

std::vector<OrientedGraph> forbidden_instances() {
    return {make_I(4, true, true),        make_I(4, true, false), make_I(4, false, false),
            make_T(true, true, true),     make_T(true, true, false),
            make_T(true, false, false),   make_T(false, false, false),
            make_R(1, 1),                 make_R(2, 1),           make_R(2, 2)};
}

bool criterion_two_pages(std::string &note) {
    OracleOptions opts;
    opts.jobs = worker_count();
    for (const OrientedGraph &g : forbidden_instances()) {
        if (obt(g, opts).thickness != 2) {
            note = "thickness != 2 for " + describe(g);
            return false;
        }
    }
    return true;
}

bool criterion_criticality(std::string &note) {
    OracleOptions opts;
    opts.jobs = worker_count();
    for (const OrientedGraph &g : forbidden_instances()) {
        if (g.vertex_count() > 8)
            continue;
        for (const Arc &a : g.arcs()) {
            if (!obt_at_most(delete_arc(g, a), 1, opts)) {
                note = "deleting " + std::to_string(a.tail) + ">" + std::to_string(a.head) +
                       " from " + describe(g) + " stays above one page";
                return false;
            }
        }
    }
    return true;
}

// ---- 8: embedder, detectors and oracle agree on uni-dicyclic graphs -----------------

bool agreement(const OrientedGraph &g, const OracleOptions &opts, std::string &note) {
    auto res = embed_unidicyclic(g);
    bool embedded = std::holds_alternative<BookEmbedding>(res);
    if (embedded) {
        const BookEmbedding &emb = std::get<BookEmbedding>(res);
        if (!verify(g, emb).valid || emb.pages > 1) {
            note = "embedder output invalid for " + describe(g);
            return false;
        }
    }
    DicycleDecomposition d = decompose_unidicyclic(g);
    bool fired = detect_I(d).has_value() || detect_T(d).has_value() || detect_R(d).has_value();
    int thickness = obt(g, opts).thickness;
    if (embedded == fired || embedded != (thickness <= 1)) {
        std::ostringstream o;
        o << "disagreement (embedded=" << embedded << " detector=" << fired
          << " thickness=" << thickness << ") on " << describe(g);
        note = o.str();
        return false;
    }
    if (fired && thickness != 2) {
        note = "detector fired but thickness is " + std::to_string(thickness) + " on " +
               describe(g);
        return false;
    }
    return true;
}

bool criterion_equivalence(std::string &note) {
    OracleOptions opts;
    opts.jobs = worker_count();
    for (int n = 3; n <= 7; ++n)
        for (const OrientedGraph &g : enumerate_unidicyclic(n, 3, 6))
            if (!agreement(g, opts, note))
                return false;
    SplitMix64 seeds(88);
    for (int trial = 0; trial < 2000; ++trial)
        if (!agreement(gen_unidicyclic(8, seeds.next()), opts, note))
            return false;
    return true;
}

// ---- 9: each verifier fixture trips exactly its own rule ----------------------------

bool criterion_fixtures(std::string &note) {
    const struct {
        const char *stem;
        Rule rule;
    } cases[] = {
        {"badspine", Rule::BadSpine},
        {"unplaced", Rule::UnplacedArc},
        {"tight", Rule::TightNonConsecutive},
        {"spinedir", Rule::SpineDirectionClash},
        {"pagedir", Rule::PageDirectionClash},
        {"planarity", Rule::PlanarityViolation},
    };
    for (const auto &c : cases) {
        std::string base = std::string(OBELISK_FIXTURE_DIR) + "/" + c.stem;
        std::ifstream gf(base + ".graph"), ef(base + ".emb");
        if (!gf || !ef) {
            note = std::string("fixture files missing for ") + c.stem;
            return false;
        }
        std::ostringstream gs, es;
        gs << gf.rdbuf();
        es << ef.rdbuf();
        ValidityReport rep = verify(parse_graph(gs.str()), parse_embedding(es.str()));
        if (rep.valid || rep.violations.size() != 1 || rep.violations[0].rule != c.rule) {
            note = std::string(c.stem) + " did not trigger exactly " +
                   rule_name(c.rule);
            return false;
        }
    }
    return true;
}

// ---- 10: thickness is converse-invariant ---------------------------------------------

bool criterion_converse(std::string &note) {
    for (int n = 1; n <= 5; ++n)
        for (const OrientedGraph &g : enumerate_connected(n)) {
            ObtResult fwd = obt(g);
            OrientedGraph rev = converse(g);
            ObtResult bwd = obt(rev);
            if (fwd.thickness != bwd.thickness) {
                note = "thickness changes under converse for " + describe(g);
                return false;
            }
            if (!verify(g, fwd.witness).valid || fwd.witness.pages != fwd.thickness ||
                !verify(rev, bwd.witness).valid || bwd.witness.pages != bwd.thickness) {
                note = "witness invalid for " + describe(g);
                return false;
            }
        }
    return true;
}

} // namespace

int main() {
    const struct {
        int id;
        const char *what;
        bool (*fn)(std::string &);
    } criteria[] = {
        {1, "one-page-critical census on <= 6 vertices", criterion_census},
        {2, "oriented cycles up to 7 vertices embed in one page", criterion_cycles},
        {3, "dicycle spines: one page exactly at cyclic orders", criterion_natural},
        {4, "random trees embed all-loose with the root uncovered", criterion_trees},
        {5, "fountain trees build, embed, nest and round-trip", criterion_fountains},
        {6, "forbidden families need two pages", criterion_two_pages},
        {7, "forbidden instances are arc-critical", criterion_criticality},
        {8, "uni-dicyclic embedder, detectors and oracle agree", criterion_equivalence},
        {9, "verifier fixtures trip exactly their own rule", criterion_fixtures},
        {10, "thickness is converse-invariant up to 5 vertices", criterion_converse},
    };

    int failures = 0;
    for (const auto &c : criteria) {
        auto start = std::chrono::steady_clock::now();
        std::string note;
        bool ok = c.fn(note);
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("criterion %2d: %s  %s  [%.1fs]%s%s\n", c.id, ok ? "PASS" : "FAIL", c.what,
                    secs, note.empty() ? "" : "  ", note.c_str());
        std::fflush(stdout);
        if (!ok)
            ++failures;
    }
    if (failures)
        std::printf("%d of 10 criteria failed\n", failures);
    else
        std::printf("all 10 criteria passed\n");
    return failures ? 1 : 0;
}
