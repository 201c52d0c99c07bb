#include "obelisk/oracle.hpp"

#include <algorithm>
#include <climits>
#include <cstdint>
#include <mutex>
#include <numeric>
#include <thread>

namespace obelisk {
namespace {

// ---------------------------------------------------------------------------
// Exact graph coloring on adjacency bitsets (used for the loose-arc conflict
// graph, so node counts stay tiny: at most one node per arc).

constexpr int kMaxColorNodes = 64;

// Greedy clique around the highest-degree nodes; any clique size lower-bounds
// the chromatic number.
int clique_lower_bound(const std::vector<uint64_t> &adj) {
    const int n = static_cast<int>(adj.size());
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        int da = std::popcount(adj[a]), db = std::popcount(adj[b]);
        return da != db ? da > db : a < b;
    });
    int best = n > 0 ? 1 : 0;
    for (int start : order) {
        uint64_t cand = adj[start];
        int size = 1;
        uint64_t mask = cand;
        while (mask != 0) {
            int v = std::countr_zero(mask);
            mask &= mask - 1;
            if ((cand >> v) & 1) {
                ++size;
                cand &= adj[v];
            }
        }
        best = std::max(best, size);
    }
    return best;
}

bool color_rec(const std::vector<uint64_t> &adj, const std::vector<int> &order, int k,
               int pos, int used, std::vector<int> &color) {
    if (pos == static_cast<int>(order.size())) return true;
    int v = order[pos];
    uint64_t blocked = 0;
    uint64_t mask = adj[v];
    while (mask != 0) {
        int u = std::countr_zero(mask);
        mask &= mask - 1;
        if (color[u] >= 0) blocked |= uint64_t{1} << color[u];
    }
    // Unused colors are interchangeable, so try at most one fresh color.
    int limit = std::min(k, used + 1);
    for (int c = 0; c < limit; ++c) {
        if ((blocked >> c) & 1) continue;
        color[v] = c;
        if (color_rec(adj, order, k, pos + 1, std::max(used, c + 1), color)) return true;
        color[v] = -1;
    }
    return false;
}

// Smallest proper coloring with at most `cutoff` colors, or nullopt.
std::optional<ColoringResult> color_upto(const std::vector<uint64_t> &adj, int cutoff) {
    const int n = static_cast<int>(adj.size());
    if (n == 0) return ColoringResult{0, {}};
    if (cutoff <= 0) return std::nullopt;
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        int da = std::popcount(adj[a]), db = std::popcount(adj[b]);
        return da != db ? da > db : a < b;
    });
    int lb = clique_lower_bound(adj);
    if (lb > cutoff) return std::nullopt;
    for (int k = lb; k <= cutoff; ++k) {
        std::vector<int> color(n, -1);
        if (color_rec(adj, order, k, 0, 0, color)) return ColoringResult{k, std::move(color)};
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Per-order evaluation context. Vertices and arcs are flattened to indices so
// the permutation loop touches no maps.

struct SweepContext {
    std::vector<VertexId> verts;            // index -> id, ascending
    std::vector<std::pair<int, int>> arcs;  // (tail index, head index)
};

SweepContext make_context(const OrientedGraph &g) {
    SweepContext ctx;
    ctx.verts = g.vertices();
    for (const Arc &a : g.arcs()) {
        int ti = static_cast<int>(std::lower_bound(ctx.verts.begin(), ctx.verts.end(), a.tail) -
                                  ctx.verts.begin());
        int hi = static_cast<int>(std::lower_bound(ctx.verts.begin(), ctx.verts.end(), a.head) -
                                  ctx.verts.begin());
        ctx.arcs.emplace_back(ti, hi);
    }
    return ctx;
}

// Loose arcs clash when they strictly interleave or point opposite ways.
void conflict_rows(const std::vector<std::pair<int, int>> &spans, std::vector<uint64_t> &rows) {
    const int m = static_cast<int>(spans.size());
    rows.assign(m, 0);
    for (int i = 0; i < m; ++i) {
        auto [ti, hi] = spans[i];
        int lo1 = std::min(ti, hi), hi1 = std::max(ti, hi);
        bool up1 = hi > ti;
        for (int j = i + 1; j < m; ++j) {
            auto [tj, hj] = spans[j];
            bool clash = (hj > tj) != up1;
            if (!clash) {
                int lo2 = std::min(tj, hj), hi2 = std::max(tj, hj);
                bool shared = lo1 == lo2 || lo1 == hi2 || hi1 == lo2 || hi1 == hi2;
                clash = !shared && ((lo1 < lo2 && lo2 < hi1 && hi1 < hi2) ||
                                    (lo2 < lo1 && lo1 < hi2 && hi2 < hi1));
            }
            if (clash) {
                rows[i] |= uint64_t{1} << j;
                rows[j] |= uint64_t{1} << i;
            }
        }
    }
}

struct OrderEval {
    int pages = 0;
    int dir = +1;
    std::vector<int> page_of;  // per loose arc (context arc order)
    std::vector<bool> is_tight;
};

// Best placement for one spine order under one tight direction, if it fits in
// `cutoff` pages. position[vertex index] = spine position.
std::optional<OrderEval> eval_direction(const SweepContext &ctx, const std::vector<int> &position,
                                        int dir, int cutoff) {
    if (cutoff < 0) return std::nullopt;
    OrderEval ev;
    ev.dir = dir;
    ev.is_tight.assign(ctx.arcs.size(), false);
    std::vector<std::pair<int, int>> spans;
    for (size_t i = 0; i < ctx.arcs.size(); ++i) {
        int tp = position[ctx.arcs[i].first];
        int hp = position[ctx.arcs[i].second];
        if (hp - tp == dir)
            ev.is_tight[i] = true;
        else
            spans.emplace_back(tp, hp);
    }
    if (spans.empty()) return ev;
    std::vector<uint64_t> rows;
    conflict_rows(spans, rows);
    auto colored = color_upto(rows, cutoff);
    if (!colored) return std::nullopt;
    ev.pages = colored->colors;
    ev.page_of = std::move(colored->assignment);
    return ev;
}

BookEmbedding realize(const SweepContext &ctx, const std::vector<int> &order_idx,
                      const OrderEval &ev) {
    BookEmbedding emb;
    emb.pages = ev.pages;
    for (int idx : order_idx) emb.spine.push_back(ctx.verts[idx]);
    int loose_at = 0;
    for (size_t i = 0; i < ctx.arcs.size(); ++i) {
        Arc a{ctx.verts[ctx.arcs[i].first], ctx.verts[ctx.arcs[i].second]};
        if (ev.is_tight[i])
            emb.placement[a] = Placement{Placement::kSpine};
        else
            emb.placement[a] = Placement{ev.page_of[loose_at++]};
    }
    return emb;
}

// ---------------------------------------------------------------------------
// The sweep itself: every spine order (lexicographic over ascending vertex
// indices), both directions. Orders are ranked so the winning witness is the
// same for any thread count: key = (pages, permutation rank, direction with
// up preferred). A permutation lex-greater than its own reversal is skipped,
// its reversal reaches the same page count with flipped directions.

uint64_t factorial(int n) {
    uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<uint64_t>(i);
    return f;
}

std::vector<int> unrank_permutation(uint64_t rank, int n) {
    std::vector<int> pool(n);
    std::iota(pool.begin(), pool.end(), 0);
    std::vector<int> out;
    out.reserve(n);
    for (int i = n; i >= 1; --i) {
        uint64_t f = factorial(i - 1);
        int pick = static_cast<int>(rank / f);
        rank %= f;
        out.push_back(pool[pick]);
        pool.erase(pool.begin() + pick);
    }
    return out;
}

struct SweepBest {
    bool found = false;
    int pages = 0;
    uint64_t rank = 0;
    int dir = +1;
    BookEmbedding emb;
};

struct SweepResult {
    int pages = 0;
    BookEmbedding emb;
};

// Smallest page count <= cap over all spine orders, with the deterministic
// witness. stop_threshold lets callers bail once the answer is good enough
// (the proven lower bound for exact mode, the budget for decision mode).
std::optional<SweepResult> spine_sweep(const OrientedGraph &g, int cap, int stop_threshold,
                                       const OracleOptions &opts) {
    SweepContext ctx = make_context(g);
    const int n = static_cast<int>(ctx.verts.size());
    if (n == 0) {
        if (cap < 0) return std::nullopt;
        return SweepResult{0, BookEmbedding{}};
    }
    cap = std::min(cap, static_cast<int>(ctx.arcs.size()));
    if (cap < 0) return std::nullopt;

    const uint64_t total = factorial(n);
    SweepBest best;
    std::mutex mu;

    auto worker = [&](uint64_t lo, uint64_t hi) {
        if (lo >= hi) return;
        std::vector<int> order = unrank_permutation(lo, n);
        std::vector<int> position(n);
        for (uint64_t rank = lo; rank < hi;
             ++rank, std::next_permutation(order.begin(), order.end())) {
            int local_cap;
            {
                std::lock_guard<std::mutex> lock(mu);
                if (best.found && best.pages <= stop_threshold && best.rank < rank) break;
                local_cap = cap;
                if (best.found) local_cap = std::min(local_cap, rank < best.rank ? best.pages : best.pages - 1);
            }
            if (local_cap < 0) continue;
            // The reversal yields the same count; keep the lex-smaller twin.
            bool skip = false;
            for (int i = 0; i < n; ++i) {
                int d = order[i] - order[n - 1 - i];
                if (d != 0) {
                    skip = d > 0;
                    break;
                }
            }
            if (skip) continue;
            for (int i = 0; i < n; ++i) position[order[i]] = i;
            auto up = eval_direction(ctx, position, +1, local_cap);
            int down_cap = up ? std::min(local_cap, up->pages - 1) : local_cap;
            auto down = eval_direction(ctx, position, -1, down_cap);
            const OrderEval *pick = down ? &*down : (up ? &*up : nullptr);
            if (!pick) continue;
            std::lock_guard<std::mutex> lock(mu);
            bool better = !best.found || pick->pages < best.pages ||
                          (pick->pages == best.pages && rank < best.rank);
            if (better) {
                best.found = true;
                best.pages = pick->pages;
                best.rank = rank;
                best.dir = pick->dir;
                best.emb = realize(ctx, order, *pick);
                if (best.pages == 0) return; // nothing can beat an all-tight order
            }
        }
    };

    int jobs = std::max(1, opts.jobs);
    jobs = static_cast<int>(std::min<uint64_t>(jobs, total));
    if (jobs == 1) {
        worker(0, total);
    } else {
        std::vector<std::thread> pool;
        uint64_t chunk = (total + jobs - 1) / jobs;
        for (int t = 0; t < jobs; ++t) {
            uint64_t lo = chunk * t;
            uint64_t hi = std::min(total, lo + chunk);
            pool.emplace_back(worker, lo, hi);
        }
        for (auto &th : pool) th.join();
    }

    if (!best.found) return std::nullopt;
    return SweepResult{best.pages, std::move(best.emb)};
}

// Cheap sound lower bound per component: a non-dipath needs a page, and a
// graph whose underlying simple graph has more than 2n-3 edges is not
// outerplanar, so one page cannot hold it.
int lower_bound_connected(const OrientedGraph &comp) {
    if (classify_shape(comp) == Shape::Dipath) return 0;
    int n = static_cast<int>(comp.vertex_count());
    int m = static_cast<int>(comp.arc_count());
    return m > 2 * n - 3 ? 2 : 1;
}

int lower_bound(const std::vector<OrientedGraph> &comps) {
    int lb = 0;
    for (const auto &c : comps) lb = std::max(lb, lower_bound_connected(c));
    return lb;
}

void check_guard(const OrientedGraph &g, const OracleOptions &opts) {
    if (static_cast<int>(g.vertex_count()) > opts.max_n)
        throw error(errc::size_guard, "graph has " + std::to_string(g.vertex_count()) +
                                          " vertices, sweep guard is " + std::to_string(opts.max_n) +
                                          " (raise max_n to override)");
}

// ---------------------------------------------------------------------------
// Component merge. Component embeddings are stacked along the spine; pages
// can be shared only when their arc directions agree, so each embedding is
// normalized (flipping = reversing its spine) and its pages are packed into
// a global pool of upward slots followed by downward slots.

void flip(BookEmbedding &emb) { std::reverse(emb.spine.begin(), emb.spine.end()); }

struct CompProfile {
    int up = 0, down = 0;        // pages carrying arcs of each direction
    std::vector<int> page_dir;   // +1 up, -1 down, 0 empty
    int tight_dir = 0;           // 0 when no arc is tight
};

CompProfile profile(const BookEmbedding &emb) {
    CompProfile p;
    p.page_dir.assign(static_cast<size_t>(emb.pages), 0);
    for (const auto &[arc, pl] : emb.placement) {
        int tp = spine_position(emb, arc.tail);
        int hp = spine_position(emb, arc.head);
        int dir = hp > tp ? +1 : -1;
        if (pl.on_spine())
            p.tight_dir = dir;
        else if (pl.page >= 0 && pl.page < emb.pages && p.page_dir[pl.page] == 0)
            p.page_dir[pl.page] = dir;
    }
    for (int d : p.page_dir) {
        if (d > 0) ++p.up;
        if (d < 0) ++p.down;
    }
    return p;
}

std::optional<BookEmbedding> merge_embeddings(std::vector<BookEmbedding> parts, int target_pages) {
    // Normalize every tight-locked part so its tight arcs point up; parts
    // with no tight arc keep a free flip bit.
    std::vector<int> free_idx;
    std::vector<CompProfile> profs(parts.size());
    for (size_t i = 0; i < parts.size(); ++i) {
        profs[i] = profile(parts[i]);
        if (profs[i].tight_dir < 0) {
            flip(parts[i]);
            profs[i] = profile(parts[i]);
        } else if (profs[i].tight_dir == 0) {
            free_idx.push_back(static_cast<int>(i));
        }
    }
    // Pick flips for the free parts minimizing total up+down slots.
    int best_mask = -1, best_slots = INT_MAX;
    for (int mask = 0; mask < (1 << free_idx.size()); ++mask) {
        int up = 0, down = 0;
        for (size_t i = 0; i < parts.size(); ++i) {
            int u = profs[i].up, d = profs[i].down;
            auto it = std::find(free_idx.begin(), free_idx.end(), static_cast<int>(i));
            if (it != free_idx.end() && ((mask >> (it - free_idx.begin())) & 1)) std::swap(u, d);
            up = std::max(up, u);
            down = std::max(down, d);
        }
        if (up + down < best_slots) {
            best_slots = up + down;
            best_mask = mask;
        }
    }
    if (best_slots > target_pages) return std::nullopt;
    for (size_t j = 0; j < free_idx.size(); ++j)
        if ((best_mask >> j) & 1) {
            flip(parts[free_idx[j]]);
            profs[free_idx[j]] = profile(parts[free_idx[j]]);
        }
    int up_slots = 0;
    for (const auto &p : profs) up_slots = std::max(up_slots, p.up);

    BookEmbedding merged;
    merged.pages = target_pages;
    for (size_t i = 0; i < parts.size(); ++i) {
        // Up pages map onto slots 0..up-1, down pages onto up_slots..; empty
        // pages carry no placements and need no slot.
        std::vector<int> remap(profs[i].page_dir.size(), 0);
        int next_up = 0, next_down = up_slots;
        for (size_t pg = 0; pg < profs[i].page_dir.size(); ++pg) {
            if (profs[i].page_dir[pg] > 0) remap[pg] = next_up++;
            if (profs[i].page_dir[pg] < 0) remap[pg] = next_down++;
        }
        for (VertexId v : parts[i].spine) merged.spine.push_back(v);
        for (const auto &[arc, pl] : parts[i].placement)
            merged.placement[arc] = pl.on_spine() ? pl : Placement{remap[pl.page]};
    }
    return merged;
}

} // namespace

SpineAnalysis analyze_spine(const OrientedGraph &g, const std::vector<VertexId> &order,
                            int tight_dir) {
    if (tight_dir != 1 && tight_dir != -1)
        throw error(errc::bad_argument, "tight direction must be +1 or -1");
    std::vector<VertexId> sorted = order;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != g.vertices())
        throw error(errc::bad_argument, "spine order is not a permutation of the vertices");
    std::map<VertexId, int> position;
    for (int i = 0; i < static_cast<int>(order.size()); ++i)
        position[order[i]] = i;
    SpineAnalysis an;
    std::vector<std::pair<int, int>> spans;
    for (const Arc &a : g.arcs()) {
        int tp = position.at(a.tail);
        int hp = position.at(a.head);
        if (hp - tp == tight_dir) {
            an.tight.push_back(a);
        } else {
            an.loose.push_back(a);
            spans.emplace_back(tp, hp);
        }
    }
    an.conflicts.nodes = static_cast<int>(an.loose.size());
    std::vector<uint64_t> rows;
    if (an.conflicts.nodes > kMaxColorNodes)
        throw error(errc::size_guard, "conflict graph exceeds 64 nodes");
    conflict_rows(spans, rows);
    for (int i = 0; i < an.conflicts.nodes; ++i)
        for (int j = i + 1; j < an.conflicts.nodes; ++j)
            if ((rows[i] >> j) & 1) an.conflicts.edges.emplace_back(i, j);
    return an;
}

ColoringResult chromatic_number(const ConflictGraph &cg) {
    if (cg.nodes > kMaxColorNodes)
        throw error(errc::size_guard, "coloring guard is 64 nodes");
    std::vector<uint64_t> adj(static_cast<size_t>(cg.nodes), 0);
    for (auto [a, b] : cg.edges) {
        if (a < 0 || b < 0 || a >= cg.nodes || b >= cg.nodes || a == b)
            throw error(errc::bad_argument, "conflict edge out of range");
        adj[a] |= uint64_t{1} << b;
        adj[b] |= uint64_t{1} << a;
    }
    auto res = color_upto(adj, cg.nodes);
    return *res; // n colors always suffice
}

MinPagesResult min_pages_for_spine(const OrientedGraph &g, const std::vector<VertexId> &order) {
    SweepContext ctx = make_context(g);
    const int n = static_cast<int>(ctx.verts.size());
    std::vector<VertexId> sorted = order;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != g.vertices())
        throw error(errc::bad_argument, "spine order is not a permutation of the vertices");
    std::vector<int> position(n);
    for (int i = 0; i < n; ++i) {
        int idx = static_cast<int>(std::lower_bound(ctx.verts.begin(), ctx.verts.end(), order[i]) -
                                   ctx.verts.begin());
        position[idx] = i;
    }
    int cap = static_cast<int>(ctx.arcs.size());
    auto up = eval_direction(ctx, position, +1, cap);
    int down_cap = up ? up->pages - 1 : cap;
    auto down = eval_direction(ctx, position, -1, down_cap);
    const OrderEval *pick = down ? &*down : &*up;
    std::vector<int> order_idx(n);
    for (int idx = 0; idx < n; ++idx) order_idx[position[idx]] = idx;
    MinPagesResult out;
    out.pages = pick->pages;
    out.emb = realize(ctx, order_idx, *pick);
    return out;
}

ObtResult obt(const OrientedGraph &g, const OracleOptions &opts) {
    check_guard(g, opts);
    auto comps = components(g);
    if (comps.size() <= 1) {
        int lb = lower_bound(comps);
        auto res = spine_sweep(g, INT_MAX, lb, opts);
        return ObtResult{res->pages, std::move(res->emb)};
    }
    std::vector<BookEmbedding> parts;
    int max_pages = 0;
    for (const auto &comp : comps) {
        auto res = spine_sweep(comp, INT_MAX, lower_bound_connected(comp), opts);
        max_pages = std::max(max_pages, res->pages);
        parts.push_back(std::move(res->emb));
    }
    if (auto merged = merge_embeddings(std::move(parts), max_pages)) {
        if (verify(g, *merged).valid) return ObtResult{max_pages, std::move(*merged)};
    }
    // Rare fall-back: the component witnesses would not share pages, so sweep
    // the whole graph (ground truth by definition).
    auto res = spine_sweep(g, INT_MAX, lower_bound(comps), opts);
    return ObtResult{res->pages, std::move(res->emb)};
}

bool obt_at_most(const OrientedGraph &g, int budget, const OracleOptions &opts) {
    if (budget < 0) return false;
    check_guard(g, opts);
    auto comps = components(g);
    if (lower_bound(comps) > budget) return false;
    if (budget == 0) {
        for (const auto &c : comps)
            if (classify_shape(c) != Shape::Dipath) return false;
        return true;
    }
    if (comps.size() <= 1) return spine_sweep(g, budget, budget, opts).has_value();
    std::vector<BookEmbedding> parts;
    for (const auto &comp : comps) {
        auto res = spine_sweep(comp, budget, lower_bound_connected(comp), opts);
        if (!res) return false;
        parts.push_back(std::move(res->emb));
    }
    if (auto merged = merge_embeddings(std::move(parts), budget)) {
        if (verify(g, *merged).valid) return true;
    }
    return spine_sweep(g, budget, budget, opts).has_value();
}

bool is_k_page_critical(const OrientedGraph &g, int k, const OracleOptions &opts) {
    if (k < 0) throw error(errc::bad_argument, "page count must be non-negative");
    check_guard(g, opts);
    auto comps = components(g);
    if (lower_bound(comps) > k) return false;
    // Deletions first: the structural zero-page test makes these cheap, and
    // most candidates fail here long before a sweep is needed.
    for (const Arc &a : g.arcs()) {
        OrientedGraph del = delete_arc(g, a);
        if (obt_at_most(del, k - 2, opts)) return false;
        if (!obt_at_most(del, k - 1, opts)) return false;
    }
    if (!obt_at_most(g, k, opts)) return false;
    if (obt_at_most(g, k - 1, opts)) return false;
    return true;
}

std::vector<OrientedGraph> mine_critical(int n_max, int k, int max_n_override,
                                         const OracleOptions &opts) {
    if (k < 1) throw error(errc::bad_argument, "mining needs k >= 1");
    if (n_max < 1) throw error(errc::bad_argument, "mining needs n_max >= 1");
    int guard = k == 1 ? 7 : 6;
    if (max_n_override > 0) guard = max_n_override;
    if (n_max > guard)
        throw error(errc::size_guard, "mining guard for k=" + std::to_string(k) + " is " +
                                          std::to_string(guard) + " vertices (override to raise)");
    OracleOptions sweep_opts = opts;
    sweep_opts.max_n = std::max(sweep_opts.max_n, n_max);
    std::vector<OrientedGraph> found;
    for (int n = 1; n <= n_max; ++n)
        for (const auto &g : enumerate_connected(n, std::max(n, 7)))
            if (is_k_page_critical(g, k, sweep_opts)) found.push_back(g);
    return found;
}

} // namespace obelisk
