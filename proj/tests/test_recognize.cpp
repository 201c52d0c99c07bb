#include "doctest.h"

#include "obelisk/oracle.hpp"
#include "obelisk/recognize.hpp"
#include "test_graphs.hpp"

#include <optional>
#include <set>
#include <string>
#include <vector>

using namespace obelisk;

namespace {

// A witness is sound when it maps distinct pattern names to distinct host
// vertices, every listed arc really is in the host, and the extracted
// subgraph needs two pages on its own.
void check_witness_sound(const OrientedGraph &host, const ForbiddenWitness &w) {
    std::set<std::string> names;
    std::set<VertexId> hosts;
    for (const auto &[name, v] : w.vertex_map) {
        CHECK(names.insert(name).second);
        CHECK(hosts.insert(v).second);
        CHECK(host.has_vertex(v));
    }
    for (const Arc &a : w.arcs)
        CHECK(host.has_arc(a.tail, a.head));
    OrientedGraph sub = w.extract();
    CHECK(obt(sub).thickness == 2);
}

} // namespace

TEST_CASE("decomposing a strictly uni-dicyclic graph") {
    OrientedGraph g = parse_graph("v 1 2 3 4 5 6\na 2 4\na 4 6\na 6 2\na 1 4\na 6 3\na 5 3\n");
    DicycleDecomposition d = decompose_unidicyclic(g);
    CHECK(d.dicycle == std::vector<VertexId>{2, 4, 6});
    REQUIRE(d.attached.size() == 3);
    CHECK(d.attached.at(2).vertex_count() == 1);
    CHECK(d.attached.at(4).vertex_count() == 2); // 4 with the pendant 1
    CHECK(d.attached.at(4).has_arc(1, 4));
    CHECK(d.attached.at(6).vertex_count() == 3); // 6 -> 3 <- 5
    CHECK(heavy_vertices(d) == std::vector<VertexId>{4, 6});

    DicycleDecomposition bare = decompose_unidicyclic(make_dicycle(4));
    CHECK(bare.dicycle == std::vector<VertexId>{1, 2, 3, 4});
    CHECK(heavy_vertices(bare).empty());
}

TEST_CASE("decomposition failures carry precise codes") {
    auto code_of = [](const OrientedGraph &g) -> std::optional<errc> {
        try {
            decompose_unidicyclic(g);
            return std::nullopt;
        } catch (const error &e) {
            return e.code();
        }
    };
    CHECK(code_of(make_splus()) == errc::no_cycle);
    CHECK(code_of(make_dipath(4)) == errc::no_cycle);
    // theta-ish: two triangles sharing an arc
    CHECK(code_of(parse_graph("v 1 2 3 4\na 1 2\na 2 3\na 3 1\na 2 4\na 4 3\n")) ==
          errc::multiple_cycles);
    // the unique cycle is not directed
    CHECK(code_of(parse_graph("v 1 2 3\na 1 2\na 3 2\na 3 1\n")) == errc::cycle_not_directed);
    CHECK(code_of(parse_graph("v 1 2 3 4 5 6\na 1 2\na 2 3\na 3 1\na 4 5\na 5 6\na 6 4\n")) ==
          errc::disconnected);
    CHECK(code_of(make_dicycle(3)) == std::nullopt);
}

TEST_CASE("one-page-critical classification") {
    Family f;
    CHECK(classify_M1(make_splus(), &f));
    CHECK(f == Family::SPlus);
    CHECK(classify_M1(make_sminus(), &f));
    CHECK(f == Family::SMinus);
    for (int n = 3; n <= 7; ++n) {
        CHECK(classify_M1(make_dicycle(n), &f));
        CHECK(f == Family::Dicycle);
    }
    // relabeling does not matter
    CHECK(classify_M1(parse_graph("v 5 8 9\na 8 5\na 8 9\n")));

    CHECK_FALSE(classify_M1(make_dipath(3)));
    CHECK_FALSE(classify_M1(make_dipath(1)));
    CHECK_FALSE(classify_M1(OrientedGraph{}));
    CHECK_FALSE(classify_M1(make_I(4, true, true)));
    CHECK_FALSE(classify_M1(parse_graph("v 1 2 3\na 1 2\na 3 2\na 3 1\n"))); // mixed cycle
    // S+ with one extra pendant is not critical
    CHECK_FALSE(classify_M1(parse_graph("v 1 2 3 4\na 1 2\na 1 3\na 1 4\n")));
}

TEST_CASE("detector I needs two heavy vertices apart on the cycle") {
    for (bool d1 : {false, true})
        for (bool d2 : {false, true}) {
            CAPTURE(d1);
            CAPTURE(d2);
            OrientedGraph g = make_I(4, d1, d2);
            auto w = detect_I(decompose_unidicyclic(g));
            REQUIRE(w.has_value());
            CHECK(w->family == Family::ClassI);
            check_witness_sound(g, *w);
        }

    // longer ambient cycle still works
    OrientedGraph long_cycle = make_I(6, true, false);
    auto w6 = detect_I(decompose_unidicyclic(long_cycle));
    REQUIRE(w6.has_value());
    check_witness_sound(long_cycle, *w6);

    // adjacent heavy vertices do not qualify
    OrientedGraph adjacent = parse_graph("v 1 2 3 4 5 6\na 1 2\na 2 3\na 3 4\na 4 1\na 1 5\na 2 6\n");
    CHECK_FALSE(detect_I(decompose_unidicyclic(adjacent)).has_value());
    // a 3-cycle has no non-adjacent pair
    CHECK_FALSE(detect_I(decompose_unidicyclic(make_T(true, true, true))).has_value());
    CHECK_FALSE(detect_I(decompose_unidicyclic(make_dicycle(5))).has_value());
}

TEST_CASE("detector T needs a fully heavy triangle") {
    for (int mask = 0; mask < 8; ++mask) {
        OrientedGraph g = make_T(mask & 1, mask & 2, mask & 4);
        CAPTURE(mask);
        auto w = detect_T(decompose_unidicyclic(g));
        REQUIRE(w.has_value());
        CHECK(w->family == Family::ClassT);
        check_witness_sound(g, *w);
    }

    // two heavy out of three: no T
    OrientedGraph two = parse_graph("v 1 2 3 4 5\na 1 2\na 2 3\na 3 1\na 1 4\na 2 5\n");
    CHECK_FALSE(detect_T(decompose_unidicyclic(two)).has_value());
    // heavy square: I territory, not T
    OrientedGraph square = parse_graph(
        "v 1 2 3 4 5 6 7 8\na 1 2\na 2 3\na 3 4\na 4 1\na 1 5\na 2 6\na 3 7\na 4 8\n");
    CHECK_FALSE(detect_T(decompose_unidicyclic(square)).has_value());
}

TEST_CASE("detector R needs opposing antlers across one cycle arc") {
    for (int j : {1, 2})
        for (int k : {1, 2}) {
            CAPTURE(j);
            CAPTURE(k);
            OrientedGraph g = make_R(j, k);
            auto w = detect_R(decompose_unidicyclic(g));
            REQUIRE(w.has_value());
            CHECK(w->family == Family::ClassR);
            check_witness_sound(g, *w);
        }

    // positive antler at 1 but only a sink fountain at 2: no R
    OrientedGraph half = parse_graph("v 1 2 3 4 5 6\na 1 2\na 2 3\na 3 1\na 1 4\na 1 5\na 2 6\n");
    CHECK_FALSE(detect_R(decompose_unidicyclic(half)).has_value());
    // two positive antlers point the same way: no R either
    OrientedGraph same = parse_graph(
        "v 1 2 3 4 5 6 7\na 1 2\na 2 3\na 3 1\na 1 4\na 1 5\na 2 6\na 2 7\n");
    CHECK_FALSE(detect_R(decompose_unidicyclic(same)).has_value());
    CHECK_FALSE(detect_R(decompose_unidicyclic(make_dicycle(3))).has_value());
}

TEST_CASE("witness text is stable and parseable") {
    OrientedGraph g = make_T(true, true, true);
    auto w = detect_T(decompose_unidicyclic(g));
    REQUIRE(w.has_value());
    CHECK(w->to_text() == "family ClassT\n"
                          "pattern c1 -> host 1\n"
                          "pattern c2 -> host 2\n"
                          "pattern c3 -> host 3\n"
                          "pattern p1 -> host 4\n"
                          "pattern p2 -> host 5\n"
                          "pattern p3 -> host 6\n"
                          "arc 1 2\narc 2 3\narc 3 1\narc 1 4\narc 2 5\narc 3 6\n");

    OrientedGraph sub = w->extract();
    CHECK(sub.vertex_count() == 6);
    CHECK(sub.arc_count() == 6);
    CHECK(is_isomorphic(sub, g));
}

TEST_CASE("detectors cover exactly the two-page uni-dicyclic graphs") {
    // exhaustive at small sizes; the acceptance suite pushes this further
    for (int n = 4; n <= 6; ++n)
        for (const OrientedGraph &g : enumerate_unidicyclic(n, 3, 6)) {
            CAPTURE(n);
            DicycleDecomposition d = decompose_unidicyclic(g);
            bool fired = detect_I(d).has_value() || detect_T(d).has_value() ||
                         detect_R(d).has_value();
            CHECK(fired == (obt(g).thickness == 2));
        }
}
