#include "doctest.h"

#include "obelisk/oracle.hpp"
#include "test_graphs.hpp"

#include <algorithm>
#include <set>
#include <vector>

using namespace obelisk;

namespace {

// Independent coloring oracle: try every assignment of k colors to the
// nodes, smallest k that properly colors the edges wins.
int brute_chromatic(const ConflictGraph &cg) {
    if (cg.nodes == 0)
        return 0;
    for (int k = 1; k <= cg.nodes; ++k) {
        std::vector<int> color(static_cast<size_t>(cg.nodes), 0);
        while (true) {
            bool proper = true;
            for (auto [a, b] : cg.edges)
                if (color[static_cast<size_t>(a)] == color[static_cast<size_t>(b)]) {
                    proper = false;
                    break;
                }
            if (proper)
                return k;
            int i = 0;
            while (i < cg.nodes && ++color[static_cast<size_t>(i)] == k)
                color[static_cast<size_t>(i++)] = 0;
            if (i == cg.nodes)
                break;
        }
    }
    return cg.nodes;
}

ConflictGraph ring(int n) {
    ConflictGraph cg;
    cg.nodes = n;
    for (int i = 0; i < n; ++i)
        cg.edges.emplace_back(i, (i + 1) % n);
    return cg;
}

bool witness_ok(const OrientedGraph &g, const ObtResult &r) {
    return verify(g, r.witness).valid && r.witness.pages == r.thickness;
}

} // namespace

TEST_CASE("spine analysis splits tight from loose") {
    OrientedGraph g = make_dicycle(3);
    SpineAnalysis up = analyze_spine(g, {1, 2, 3}, +1);
    CHECK(up.tight == std::vector<Arc>{{1, 2}, {2, 3}});
    CHECK(up.loose == std::vector<Arc>{{3, 1}});
    CHECK(up.conflicts.nodes == 1);
    CHECK(up.conflicts.edges.empty());

    // downward: nothing is tight, and the two upward arcs each clash with
    // the downward closing arc
    SpineAnalysis down = analyze_spine(g, {1, 2, 3}, -1);
    CHECK(down.tight.empty());
    CHECK(down.loose.size() == 3);
    CHECK(down.conflicts.edges.size() == 2);

    CHECK_THROWS_AS(analyze_spine(g, {1, 2, 3}, 0), error);
    CHECK_THROWS_AS(analyze_spine(g, {1, 2}, 1), error);
    CHECK_THROWS_AS(analyze_spine(g, {1, 2, 2}, 1), error);
}

TEST_CASE("chromatic number agrees with the brute-force oracle") {
    CHECK(chromatic_number(ConflictGraph{}).colors == 0);
    CHECK(chromatic_number(ConflictGraph{3, {}}).colors == 1);
    CHECK(chromatic_number(ring(4)).colors == 2);
    CHECK(chromatic_number(ring(5)).colors == 3); // odd cycle

    ConflictGraph k4;
    k4.nodes = 4;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            k4.edges.emplace_back(i, j);
    CHECK(chromatic_number(k4).colors == 4);

    for (int n = 3; n <= 7; ++n) {
        CAPTURE(n);
        ConflictGraph cg = ring(n);
        ColoringResult r = chromatic_number(cg);
        CHECK(r.colors == brute_chromatic(cg));
        REQUIRE(r.assignment.size() == static_cast<size_t>(n));
        for (auto [a, b] : cg.edges)
            CHECK(r.assignment[static_cast<size_t>(a)] != r.assignment[static_cast<size_t>(b)]);
        for (int c : r.assignment)
            CHECK(c < r.colors);
    }

    CHECK_THROWS_AS(chromatic_number(ConflictGraph{2, {{0, 5}}}), error);
    CHECK_THROWS_AS(chromatic_number(ConflictGraph{100, {}}), error); // node guard
}

TEST_CASE("min pages for a fixed spine") {
    OrientedGraph d3 = make_dicycle(3);
    MinPagesResult natural = min_pages_for_spine(d3, {1, 2, 3});
    CHECK(natural.pages == 1);
    CHECK(verify(d3, natural.emb).valid);
    // the closing arc is the one loose arc, joining top and bottom
    CHECK(natural.emb.placement.at(Arc{3, 1}) == Placement::on_page(0));

    // a scrambled spine of the 4-dicycle needs three pages: whichever global
    // direction is chosen, the loose arcs pairwise conflict in a triangle
    OrientedGraph d4 = make_dicycle(4);
    CHECK(min_pages_for_spine(d4, {1, 3, 2, 4}).pages == 3);
    CHECK(min_pages_for_spine(d4, {1, 2, 3, 4}).pages == 1);

    // dipaths are fully tight on their natural order, loose otherwise
    OrientedGraph p4 = make_dipath(4);
    CHECK(min_pages_for_spine(p4, {1, 2, 3, 4}).pages == 0);
    CHECK(min_pages_for_spine(p4, {4, 3, 2, 1}).pages == 0); // tights point down
    CHECK(min_pages_for_spine(p4, {2, 1, 3, 4}).pages == 1);

    CHECK_THROWS_AS(min_pages_for_spine(d3, {1, 2}), error);
}

TEST_CASE("min pages result is always a valid embedding") {
    // every spine order of the 4-dicycle and of S+
    std::vector<VertexId> order = {1, 2, 3, 4};
    OrientedGraph d4 = make_dicycle(4);
    do {
        MinPagesResult r = min_pages_for_spine(d4, order);
        CAPTURE(order[0]);
        CAPTURE(order[1]);
        CAPTURE(order[2]);
        CAPTURE(order[3]);
        CHECK(verify(d4, r.emb).valid);
        CHECK(r.emb.pages == r.pages);
        CHECK(r.emb.spine == order);
    } while (std::next_permutation(order.begin(), order.end()));
}

TEST_CASE("oriented book thickness on the anchor family") {
    CHECK(obt(make_dipath(5)).thickness == 0);
    CHECK(obt(make_dipath(1)).thickness == 0);
    CHECK(obt(OrientedGraph{}).thickness == 0);
    CHECK(obt(make_splus()).thickness == 1);
    CHECK(obt(make_sminus()).thickness == 1);
    for (int n = 3; n <= 6; ++n) {
        CAPTURE(n);
        ObtResult r = obt(make_dicycle(n));
        CHECK(r.thickness == 1);
        CHECK(witness_ok(make_dicycle(n), r));
    }
}

TEST_CASE("oriented book thickness is two on the forbidden families") {
    OrientedGraph i_member = make_I(4, true, true);
    ObtResult ri = obt(i_member);
    CHECK(ri.thickness == 2);
    CHECK(witness_ok(i_member, ri));

    OrientedGraph t_member = make_T(true, true, true);
    ObtResult rt = obt(t_member);
    CHECK(rt.thickness == 2);
    CHECK(witness_ok(t_member, rt));

    OrientedGraph r_member = make_R(1, 1);
    ObtResult rr = obt(r_member);
    CHECK(rr.thickness == 2);
    CHECK(witness_ok(r_member, rr));
}

TEST_CASE("obt of a disconnected graph is the component maximum") {
    // D3 plus a far-away dipath: thickness 1, witness must still verify
    OrientedGraph g = parse_graph("v 1 2 3 10 11 12\na 1 2\na 2 3\na 3 1\na 10 11\na 11 12\n");
    ObtResult r = obt(g);
    CHECK(r.thickness == 1);
    CHECK(witness_ok(g, r));

    OrientedGraph paths = parse_graph("v 1 2 5 6\na 1 2\na 5 6\n");
    ObtResult rp = obt(paths);
    CHECK(rp.thickness == 0);
    CHECK(witness_ok(paths, rp));

    // two triangles, opposite senses: both need one page each
    OrientedGraph two = parse_graph("v 1 2 3 4 5 6\na 1 2\na 2 3\na 3 1\na 5 4\na 6 5\na 4 6\n");
    ObtResult r2 = obt(two);
    CHECK(r2.thickness == 1);
    CHECK(witness_ok(two, r2));
}

TEST_CASE("obt decision form") {
    OrientedGraph d4 = make_dicycle(4);
    CHECK_FALSE(obt_at_most(d4, -1));
    CHECK_FALSE(obt_at_most(d4, 0));
    CHECK(obt_at_most(d4, 1));
    CHECK(obt_at_most(d4, 5));

    OrientedGraph t_member = make_T(false, true, false);
    CHECK_FALSE(obt_at_most(t_member, 1));
    CHECK(obt_at_most(t_member, 2));

    CHECK(obt_at_most(make_dipath(4), 0));
    CHECK(obt_at_most(OrientedGraph{}, 0));
}

TEST_CASE("size guard and override") {
    OracleOptions tight_guard;
    tight_guard.max_n = 3;
    CHECK_THROWS_AS(obt(make_dicycle(4), tight_guard), error);
    try {
        obt(make_dicycle(4), tight_guard);
    } catch (const error &e) {
        CHECK(e.code() == errc::size_guard);
    }
    tight_guard.max_n = 4;
    CHECK(obt(make_dicycle(4), tight_guard).thickness == 1);
}

TEST_CASE("parallel sweep returns the single-thread answer") {
    OrientedGraph cases[] = {make_dicycle(5), make_I(4, false, true), make_splus(),
                             parse_graph("v 1 2 3 4 5\na 1 2\na 1 3\na 1 4\na 5 1\n")};
    for (const OrientedGraph &g : cases) {
        ObtResult base = obt(g);
        for (int jobs : {2, 4, 7}) {
            OracleOptions opts;
            opts.jobs = jobs;
            ObtResult par = obt(g, opts);
            CHECK(par.thickness == base.thickness);
            CHECK(par.witness == base.witness); // bit-identical, not merely valid
        }
    }
}

TEST_CASE("obt is deterministic") {
    OrientedGraph g = make_I(4, true, false);
    ObtResult a = obt(g);
    ObtResult b = obt(g);
    CHECK(a.thickness == b.thickness);
    CHECK(a.witness == b.witness);
}

TEST_CASE("one-page criticality") {
    CHECK(is_k_page_critical(make_splus(), 1));
    CHECK(is_k_page_critical(make_sminus(), 1));
    CHECK(is_k_page_critical(make_dicycle(3), 1));
    CHECK(is_k_page_critical(make_dicycle(4), 1));

    // a dicycle with a pendant arc is 1-page but not critical: deleting the
    // pendant leaves the dicycle at one page
    OrientedGraph pendant = parse_graph("v 1 2 3 4\na 1 2\na 2 3\na 3 1\na 1 4\n");
    CHECK(obt(pendant).thickness == 1);
    CHECK_FALSE(is_k_page_critical(pendant, 1));

    CHECK_FALSE(is_k_page_critical(make_dipath(3), 1)); // thickness 0
    CHECK_FALSE(is_k_page_critical(make_dipath(3), 0)); // can't drop below 0

    CHECK(is_k_page_critical(make_T(true, true, true), 2));
    CHECK_FALSE(is_k_page_critical(make_dicycle(4), 2));

    CHECK_THROWS_AS(is_k_page_critical(make_splus(), -1), error);
}

TEST_CASE("mining one-page-critical graphs") {
    std::vector<OrientedGraph> four = mine_critical(4, 1);
    REQUIRE(four.size() == 4);
    OrientedGraph expected4[] = {make_splus(), make_sminus(), make_dicycle(3), make_dicycle(4)};
    for (const OrientedGraph &want : expected4) {
        bool hit = false;
        for (const OrientedGraph &got : four)
            hit = hit || is_isomorphic(want, got);
        CHECK(hit);
    }

    std::vector<OrientedGraph> five = mine_critical(5, 1);
    CHECK(five.size() == 5);

    CHECK(mine_critical(3, 2).empty());
    CHECK_THROWS_AS(mine_critical(5, 0), error);
    CHECK_THROWS_AS(mine_critical(0, 1), error);
    CHECK_THROWS_AS(mine_critical(9, 1), error); // guard without override
}
