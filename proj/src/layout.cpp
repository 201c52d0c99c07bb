#include "obelisk/layout.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

namespace obelisk {

const char *rule_name(Rule r) {
    switch (r) {
    case Rule::TightNonConsecutive: return "TightNonConsecutive";
    case Rule::SpineDirectionClash: return "SpineDirectionClash";
    case Rule::PageDirectionClash: return "PageDirectionClash";
    case Rule::PlanarityViolation: return "PlanarityViolation";
    case Rule::BadSpine: return "BadSpine";
    case Rule::UnplacedArc: return "UnplacedArc";
    }
    return "unknown";
}

std::string ValidityReport::to_text() const {
    if (valid) return "valid\n";
    std::ostringstream out;
    for (const Violation &v : violations) {
        out << rule_name(v.rule);
        for (const Arc &a : v.arcs) out << ' ' << a.tail << "->" << a.head;
        if (!v.detail.empty()) out << ": " << v.detail;
        out << '\n';
    }
    return out.str();
}

int spine_position(const BookEmbedding &emb, VertexId v) {
    for (size_t i = 0; i < emb.spine.size(); ++i)
        if (emb.spine[i] == v) return static_cast<int>(i);
    throw error(errc::unknown_vertex, "vertex " + std::to_string(v) + " is not on the spine");
}

bool arcs_cross(const BookEmbedding &emb, Arc a1, Arc a2) {
    if (a1.tail == a2.tail || a1.tail == a2.head || a1.head == a2.tail || a1.head == a2.head)
        return false;
    int lo1 = spine_position(emb, a1.tail), hi1 = spine_position(emb, a1.head);
    int lo2 = spine_position(emb, a2.tail), hi2 = spine_position(emb, a2.head);
    if (lo1 > hi1) std::swap(lo1, hi1);
    if (lo2 > hi2) std::swap(lo2, hi2);
    return (lo1 < lo2 && lo2 < hi1 && hi1 < hi2) || (lo2 < lo1 && lo1 < hi2 && hi2 < hi1);
}

ValidityReport verify(const OrientedGraph &g, const BookEmbedding &emb) {
    ValidityReport rep;
    auto flag = [&](Rule r, std::vector<Arc> arcs, std::string detail) {
        rep.valid = false;
        rep.violations.push_back(Violation{r, std::move(arcs), std::move(detail)});
    };

    // Spine must be a permutation of the vertex set.
    std::unordered_map<VertexId, int> pos;
    bool spine_ok = true;
    for (size_t i = 0; i < emb.spine.size(); ++i) {
        VertexId v = emb.spine[i];
        if (pos.count(v)) {
            flag(Rule::BadSpine, {}, "vertex " + std::to_string(v) + " appears twice on the spine");
            spine_ok = false;
        } else {
            pos[v] = static_cast<int>(i);
        }
        if (!g.has_vertex(v)) {
            flag(Rule::BadSpine, {}, "spine vertex " + std::to_string(v) + " is not in the graph");
            spine_ok = false;
        }
    }
    for (VertexId v : g.vertices())
        if (!pos.count(v)) {
            flag(Rule::BadSpine, {}, "vertex " + std::to_string(v) + " is missing from the spine");
            spine_ok = false;
        }
    (void)spine_ok;

    // Placement bookkeeping. Page indices out of range and placements for
    // arcs the graph does not have are both reported as UnplacedArc: the arc
    // set and the placement map fail to line up.
    std::vector<std::pair<Arc, int>> spine_arcs; // arc, direction (+1 up, -1 down)
    std::map<int, std::vector<Arc>> page_arcs;
    for (const auto &[arc, pl] : emb.placement) {
        if (!g.has_arc(arc.tail, arc.head)) {
            flag(Rule::UnplacedArc, {arc}, "placement for an arc that is not in the graph");
            continue;
        }
        if (!pl.on_spine() && (pl.page < 0 || pl.page >= emb.pages)) {
            flag(Rule::UnplacedArc, {arc},
                 "page " + std::to_string(pl.page) + " out of range (pages = " + std::to_string(emb.pages) + ")");
            continue;
        }
        auto t = pos.find(arc.tail), h = pos.find(arc.head);
        if (t == pos.end() || h == pos.end()) continue; // already flagged as BadSpine
        if (pl.on_spine())
            spine_arcs.emplace_back(arc, h->second > t->second ? +1 : -1);
        else
            page_arcs[pl.page].push_back(arc);
    }
    for (const Arc &a : g.arcs())
        if (!emb.placement.count(a))
            flag(Rule::UnplacedArc, {a}, "arc has no placement");

    // Spine-placed arcs must join consecutive spine vertices...
    for (const auto &[arc, dir] : spine_arcs) {
        int t = pos[arc.tail], h = pos[arc.head];
        if (std::abs(t - h) != 1)
            flag(Rule::TightNonConsecutive, {arc},
                 "spine positions " + std::to_string(t) + " and " + std::to_string(h));
    }
    // ...and all point the same way along the spine.
    for (size_t i = 1; i < spine_arcs.size(); ++i)
        if (spine_arcs[i].second != spine_arcs[0].second) {
            flag(Rule::SpineDirectionClash, {spine_arcs[0].first, spine_arcs[i].first}, "");
            break;
        }

    // Per page: one direction, no crossings.
    for (const auto &[page, arcs] : page_arcs) {
        for (size_t i = 1; i < arcs.size(); ++i) {
            int d0 = pos[arcs[0].head] > pos[arcs[0].tail] ? +1 : -1;
            int di = pos[arcs[i].head] > pos[arcs[i].tail] ? +1 : -1;
            if (d0 != di) {
                flag(Rule::PageDirectionClash, {arcs[0], arcs[i]}, "page " + std::to_string(page));
                break;
            }
        }
        for (size_t i = 0; i < arcs.size(); ++i)
            for (size_t j = i + 1; j < arcs.size(); ++j)
                if (arcs_cross(emb, arcs[i], arcs[j]))
                    flag(Rule::PlanarityViolation, {arcs[i], arcs[j]}, "page " + std::to_string(page));
    }

    return rep;
}

// ---- file format ------------------------------------------------------------

BookEmbedding parse_embedding(const std::string &text) {
    BookEmbedding emb;
    bool have_spine = false, have_pages = false;
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
        if (!(ls >> kind)) continue;
        if (kind[0] == '#') continue;
        if (kind == "spine") {
            if (have_spine) fail("duplicate spine line");
            have_spine = true;
            long long id;
            while (ls >> id) {
                if (id < 0) fail("bad vertex id");
                emb.spine.push_back(static_cast<VertexId>(id));
            }
            if (!ls.eof()) fail("bad vertex id");
        } else if (kind == "pages") {
            if (have_pages) fail("duplicate pages line");
            have_pages = true;
            if (!(ls >> emb.pages) || emb.pages < 0) fail("pages line needs a count");
        } else if (kind == "place") {
            long long t, h;
            std::string where;
            if (!(ls >> t >> h >> where) || t < 0 || h < 0) fail("place lines are 'place <tail> <head> spine|page <i>'");
            Arc a{static_cast<VertexId>(t), static_cast<VertexId>(h)};
            if (emb.placement.count(a)) fail("arc placed twice");
            if (where == "spine") {
                emb.placement[a] = Placement::spine();
            } else if (where == "page") {
                int p;
                if (!(ls >> p) || p < 0) fail("page placement needs an index");
                emb.placement[a] = Placement::on_page(p);
            } else {
                fail("placement must be 'spine' or 'page <i>'");
            }
        } else {
            fail("unknown record '" + kind + "'");
        }
    }
    if (!have_spine) throw error(errc::syntax_error, "missing spine line");
    if (!have_pages) throw error(errc::syntax_error, "missing pages line");
    return emb;
}

std::string format_embedding(const BookEmbedding &emb) {
    std::ostringstream out;
    out << "spine";
    for (VertexId v : emb.spine) out << ' ' << v;
    out << "\npages " << emb.pages << '\n';
    for (const auto &[arc, pl] : emb.placement) {
        out << "place " << arc.tail << ' ' << arc.head << ' ';
        if (pl.on_spine()) out << "spine";
        else out << "page " << pl.page;
        out << '\n';
    }
    return out.str();
}

} // namespace obelisk
