#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fixtures.hpp"

using namespace dichroma;
using namespace fixtures;

namespace {

// brute-force extension oracle: does some valid total colouring extend the
// given triangle precolouring?
bool extension_exists_bruteforce(const Digraph& d, const TrianglePrecolouring& pre) {
    const int n = d.vertex_count();
    REQUIRE(n <= 20);
    for (uint32_t mask = 0; mask < (1u << n); ++mask) {
        Colouring c(n);
        for (VertexId v = 0; v < n; ++v) c.set(v, (mask >> v) & 1 ? 2 : 1);
        bool match = true;
        for (int i = 0; i < 3; ++i)
            if (c.get(pre.triangle[i]) != pre.colours[i]) match = false;
        if (match && colouring_valid_bruteforce(d, c)) return true;
    }
    return false;
}

TrianglePrecolouring outer_pre(const PlaneEmbedding& e, std::array<int, 3> cols) {
    TrianglePrecolouring pre;
    const Face& f = e.faces[e.outer_face];
    for (int i = 0; i < 3; ++i) {
        pre.triangle[i] = f.boundary[i];
        pre.colours[i] = cols[i];
    }
    return pre;
}

void check_two_colours_partition(const Digraph& d, const Colouring& c) {
    REQUIRE(c.size() == d.vertex_count());
    CHECK(c.total());
    for (VertexId v = 0; v < c.size(); ++v) CHECK((c.get(v) == 1 || c.get(v) == 2));
}

// Two octahedra sharing the facial triangle {0,1,2}; the shared triangle is
// the unique separating triangle. Optionally it is redirected into the
// directed 3-cycle 0->1->2->0.
Digraph glued_octahedra(bool directed_triangle_on_shared) {
    Digraph base = octahedron_digraph();
    std::vector<Arc> arcs = base.arcs();
    // second bipyramid over the 4-cycle (1,2,6,7) with poles 0 and 8
    for (Arc a : {Arc{1, 2}, Arc{2, 6}, Arc{6, 7}, Arc{7, 1},
                  Arc{0, 1}, Arc{0, 2}, Arc{0, 6}, Arc{0, 7},
                  Arc{1, 8}, Arc{2, 8}, Arc{6, 8}, Arc{7, 8}}) {
        bool dup = false;
        for (const Arc& b : arcs)
            if ((b.tail == a.tail && b.head == a.head) ||
                (b.tail == a.head && b.head == a.tail))
                dup = true;
        if (!dup) arcs.push_back(a);
    }
    Digraph d(9, arcs);
    if (!directed_triangle_on_shared) return d;
    std::vector<Arc> out;
    for (const Arc& a : d.arcs()) {
        if (a.tail <= 2 && a.head <= 2) continue;
        out.push_back(a);
    }
    out.push_back({0, 1});
    out.push_back({1, 2});
    out.push_back({2, 0});
    return Digraph(9, out);
}

} // namespace

TEST_CASE("combine_colourings: identity merge") {
    Digraph d = octahedron_digraph();
    Colouring c(6);
    for (VertexId v = 0; v < 6; ++v) c.set(v, v % 2 + 1);
    REQUIRE(verify_colouring(d, c).valid);
    auto merged = combine_colourings(d, c, d, c, {0, 1});
    CHECK(merged == c);
}

TEST_CASE("combine_colourings: two digraphs sharing one arc") {
    Digraph d1(5, {{0, 1}, {1, 2}, {2, 0}});
    Digraph d2(5, {{1, 2}, {2, 3}, {3, 4}, {4, 1}});
    Colouring c1(5), c2(5);
    c1.set(0, 2);
    c1.set(1, 1);
    c1.set(2, 1);
    c2.set(1, 1);
    c2.set(2, 1);
    c2.set(3, 2);
    c2.set(4, 2);
    auto merged = combine_colourings(d1, c1, d2, c2, {1, 2});
    CHECK(merged.get(0) == 2);
    CHECK(merged.get(3) == 2);
    CHECK(merged.assigned_count() == 5);
}

TEST_CASE("combine_colourings error paths") {
    Digraph d1(4, {{0, 1}, {1, 2}, {2, 0}});
    Digraph d2(4, {{0, 1}, {1, 3}, {3, 0}});
    Colouring c1(4), c2(4);
    c1.set(0, 1);
    c1.set(1, 2);
    c1.set(2, 1);
    c2.set(0, 1);
    c2.set(1, 2);
    c2.set(3, 1);
    SUBCASE("valid baseline") {
        auto m = combine_colourings(d1, c1, d2, c2, {0, 1});
        CHECK(m.assigned_count() == 4);
    }
    SUBCASE("overlap must be a tournament in both") {
        CHECK_THROWS_WITH_AS(combine_colourings(d1, c1, d2, c2, {0, 3}),
                             doctest::Contains("OverlapNotTournament"), Error);
        Digraph d2_flipped(4, {{1, 0}, {1, 3}, {3, 0}});
        CHECK_THROWS_WITH_AS(combine_colourings(d1, c1, d2_flipped, c2, {0, 1}),
                             doctest::Contains("OverlapNotTournament"), Error);
    }
    SUBCASE("colourings must agree on the overlap") {
        Colouring c2bad = c2;
        c2bad.set(1, 1);
        CHECK_THROWS_AS(combine_colourings(d1, c1, d2, c2bad, {0, 1}), Error);
    }
    SUBCASE("colourings must cover their digraphs") {
        Colouring partial(4);
        partial.set(0, 1);
        CHECK_THROWS_AS(combine_colourings(d1, partial, d2, c2, {0}), Error);
    }
}

TEST_CASE("lemma-4 merge on random tournament overlaps never fails") {
    oracle::Rng rng(2024);
    int trials = 0;
    while (trials < 500) {
        const int n1 = 4 + rng.uniform(4), n2 = 4 + rng.uniform(4);
        const int k = 1 + rng.uniform(3); // overlap size
        const int n = n1 + n2 - k;
        std::vector<Arc> tarcs;
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j)
                tarcs.push_back(rng.coin() ? Arc{i, j} : Arc{j, i});
        auto random_oriented = [&](const std::vector<int>& verts) {
            std::vector<Arc> arcs = tarcs;
            for (size_t i = 0; i < verts.size(); ++i)
                for (size_t j = i + 1; j < verts.size(); ++j) {
                    if (verts[i] < k && verts[j] < k) continue;
                    if (rng.uniform(100) < 55)
                        arcs.push_back(rng.coin() ? Arc{verts[i], verts[j]}
                                                  : Arc{verts[j], verts[i]});
                }
            std::sort(arcs.begin(), arcs.end());
            return Digraph(n, arcs);
        };
        std::vector<int> v1, v2;
        for (int i = 0; i < k; ++i) {
            v1.push_back(i);
            v2.push_back(i);
        }
        for (int i = k; i < n1; ++i) v1.push_back(i);
        for (int i = n1; i < n; ++i) v2.push_back(i);
        Digraph d1 = random_oriented(v1), d2 = random_oriented(v2);

        auto c1 = oracle::brute_force_two_colouring(d1);
        if (!c1) continue; // dichromatic number can exceed 2 off the planar world
        std::optional<Colouring> c2;
        for (uint32_t mask = 0; mask < (1u << n) && !c2; ++mask) {
            Colouring c(n);
            for (VertexId v = 0; v < n; ++v) c.set(v, (mask >> v) & 1 ? 2 : 1);
            bool agree = true;
            for (int i = 0; i < k; ++i)
                if (c.get(i) != c1->get(i)) agree = false;
            if (agree && oracle::valid_by_scc(d2, c)) c2 = c;
        }
        if (!c2) continue;
        Colouring r1 = restrict_colouring(*c1, v1), r2 = restrict_colouring(*c2, v2);
        std::vector<VertexId> overlap;
        for (int i = 0; i < k; ++i) overlap.push_back(i);
        auto merged = combine_colourings(d1, r1, d2, r2, overlap);
        std::vector<Arc> arcs = d1.arcs();
        for (const Arc& a : d2.arcs())
            if (!d1.has_arc(a.tail, a.head)) arcs.push_back(a);
        Digraph u(n, arcs);
        Colouring total = merged;
        for (VertexId v = 0; v < n; ++v)
            if (!total.assigned(v)) total.set(v, 1);
        CHECK(oracle::valid_by_scc(u, total));
        ++trials;
    }
    CHECK(trials == 500);
}

TEST_CASE("extend_on_triangle: all 8 precolourings of K4 extend") {
    Digraph d = transitive_tournament(4); // digirth-infinite orientation of K4
    auto e = compute_embedding(d);
    int count = 0;
    for (int mask = 0; mask < 8; ++mask) {
        std::array<int, 3> cols{(mask & 1) + 1, ((mask >> 1) & 1) + 1, ((mask >> 2) & 1) + 1};
        auto pre = outer_pre(e, cols);
        CHECK(extension_exists_bruteforce(d, pre)); // oracle first
        auto c = extend_on_triangle(d, e, pre);
        check_two_colours_partition(d, c);
        CHECK(verify_colouring(d, c).valid);
        for (int i = 0; i < 3; ++i) CHECK(c.get(pre.triangle[i]) == pre.colours[i]);
        ++count;
    }
    CHECK(count == 8);
}

TEST_CASE("extend_on_triangle: octahedron two-colour branch") {
    Digraph d = octahedron_digraph();
    auto e = octahedron_embedding();
    ColourTrace tr;
    ColourOptions opt;
    opt.trace = &tr;
    auto pre = outer_pre(e, {1, 2, 2});
    auto c = extend_on_triangle(d, e, pre, opt);
    CHECK(verify_colouring(d, c).valid);
    CHECK(oracle::valid_by_scc(d, c));
    CHECK(tr.branch_two_colour == 1);
    CHECK(tr.branch_one_colour == 0);
    CHECK(tr.tutte_queries == 1);
}

TEST_CASE("extend_on_triangle: octahedron one-colour branch") {
    Digraph d = octahedron_digraph();
    auto e = octahedron_embedding();
    ColourTrace tr;
    ColourOptions opt;
    opt.trace = &tr;
    auto pre = outer_pre(e, {1, 1, 1});
    auto c = extend_on_triangle(d, e, pre, opt);
    CHECK(verify_colouring(d, c).valid);
    CHECK(tr.branch_one_colour == 1);
    CHECK(tr.branch_two_colour == 0);
    CHECK_FALSE(tr.branch_b_choice.empty());
}

TEST_CASE("extend_on_triangle: every precolouring of 4-connected fixtures") {
    for (auto [l, k] : {std::pair{4, 1}, {5, 1}, {4, 2}}) {
        auto e = oracle::ring_triangulation(l, k);
        oracle::Rng rng(static_cast<uint64_t>(l * 10 + k));
        Digraph d = oracle::orient_with_digirth(oracle::underlying(e), 4, rng);
        for (int mask = 0; mask < 8; ++mask) {
            std::array<int, 3> cols{(mask & 1) + 1, ((mask >> 1) & 1) + 1,
                                    ((mask >> 2) & 1) + 1};
            auto c = extend_on_triangle(d, e, outer_pre(e, cols));
            CHECK(verify_colouring(d, c).valid);
        }
    }
}

TEST_CASE("extend_on_triangle rejects bad inputs") {
    Digraph d = octahedron_digraph();
    auto e = octahedron_embedding();
    SUBCASE("outer face mismatch") {
        TrianglePrecolouring pre;
        pre.triangle = {1, 2, 3};
        pre.colours = {1, 2, 2};
        CHECK_THROWS_AS(extend_on_triangle(d, e, pre), Error);
    }
    SUBCASE("digirth below 4") {
        // same underlying octahedron, one facial triangle directed
        Digraph bad(6, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {0, 4}, {2, 3}, {3, 4}, {4, 1},
                        {1, 5}, {2, 5}, {3, 5}, {4, 5}});
        REQUIRE(digirth(bad) == Digirth::of(3));
        auto pre = outer_pre(e, {1, 2, 2});
        CHECK_THROWS_AS(extend_on_triangle(bad, e, pre), Error);
    }
    SUBCASE("not a triangulation") {
        Digraph c4 = directed_cycle(4);
        auto e4 = compute_embedding(c4);
        TrianglePrecolouring pre;
        pre.triangle = {0, 1, 2};
        pre.colours = {1, 1, 1};
        CHECK_THROWS_AS(extend_on_triangle(c4, e4, pre), Error);
    }
}

TEST_CASE("extend_on_triangle: n=3 base case") {
    Digraph d(3, {{0, 1}, {1, 2}, {0, 2}});
    auto e = compute_embedding(d);
    TrianglePrecolouring pre;
    pre.triangle = {0, 1, 2};
    pre.colours = {1, 1, 1};
    auto c = extend_on_triangle(d, e, pre);
    CHECK(verify_colouring(d, c).valid);
    CHECK(c.get(0) == 1);
}

TEST_CASE("extend_recursive: one separator then the base case") {
    auto e = octahedron_embedding();
    auto st = stellate_faces(e, {e.outer_face == 0 ? 1 : 0});
    Digraph d = oriented_by_id(st.emb);
    ColourTrace tr;
    ColourOptions opt;
    opt.trace = &tr;
    auto pre = outer_pre(st.emb, {2, 1, 2});
    auto c = extend_recursive(d, st.emb, pre, opt);
    CHECK(verify_colouring(d, c).valid);
    CHECK(tr.separators_used == 1);
}

TEST_CASE("extend_recursive: 4-connected input goes straight to the base case") {
    Digraph d = octahedron_digraph();
    auto e = octahedron_embedding();
    ColourTrace tr;
    ColourOptions opt;
    opt.trace = &tr;
    auto c = extend_recursive(d, e, outer_pre(e, {1, 2, 2}), opt);
    CHECK(verify_colouring(d, c).valid);
    CHECK(tr.separators_used == 0);
}

TEST_CASE("extend_recursive: nested separators") {
    auto e = octahedron_embedding();
    auto st1 = stellate_faces(e, {e.outer_face == 0 ? 1 : 0});
    FaceId f2 = -1;
    for (const Face& f : st1.emb.faces)
        if (f.id != st1.emb.outer_face &&
            std::find(f.boundary.begin(), f.boundary.end(), 6) != f.boundary.end()) {
            f2 = f.id;
            break;
        }
    REQUIRE(f2 != -1);
    auto st2 = stellate_faces(st1.emb, {f2});
    Digraph d = oriented_by_id(st2.emb);
    ColourTrace tr;
    ColourOptions opt;
    opt.trace = &tr;
    auto c = extend_recursive(d, st2.emb, outer_pre(st2.emb, {1, 1, 1}), opt);
    CHECK(verify_colouring(d, c).valid);
    CHECK(tr.separators_used >= 2);
}

TEST_CASE("colour_digirth4: directed 4-cycle uses both colours on the cycle") {
    Digraph d = directed_cycle(4);
    auto c = colour_digirth4(d);
    CHECK(verify_colouring(d, c).valid);
    bool has1 = false, has2 = false;
    for (VertexId v = 0; v < 4; ++v) (c.get(v) == 1 ? has1 : has2) = true;
    CHECK(has1);
    CHECK(has2);
}

TEST_CASE("colour_digirth4: acyclic orientations are coloured and verified") {
    Digraph d = transitive_tournament(4);
    auto c = colour_digirth4(d);
    CHECK(verify_colouring(d, c).valid);
    auto e = oracle::ring_triangulation(6, 1);
    Digraph d2 = oriented_by_id(e);
    auto c2 = colour_digirth4(d2);
    CHECK(verify_colouring(d2, c2).valid);
}

TEST_CASE("colour_digirth4: every digirth-4 orientation of the octahedron") {
    auto e = octahedron_embedding();
    int total = 0;
    oracle::for_each_orientation(oracle::underlying(e), 4, [&](const Digraph& d) {
        auto c = colour_digirth4(d);
        REQUIRE(verify_colouring(d, c).valid);
        REQUIRE(oracle::valid_by_scc(d, c));
        ++total;
    });
    CHECK(total > 100);
}

TEST_CASE("colour_digirth4 error paths") {
    CHECK_THROWS_WITH_AS(colour_digirth4(directed_cycle(3)),
                         doctest::Contains("DigirthTooSmall"), Error);
    CHECK_THROWS_WITH_AS(colour_digirth4(Digraph(2, {{0, 1}, {1, 0}})),
                         doctest::Contains("DigirthTooSmall"), Error);
    std::vector<Arc> k5;
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j) k5.push_back({i, j});
    CHECK_THROWS_WITH_AS(colour_digirth4(Digraph(5, k5)), doctest::Contains("NotPlanar"),
                         Error);
}

TEST_CASE("colour_digirth4: blocks, cut vertices and isolated vertices") {
    Digraph d(8, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}, {4, 5}, {6, 0}});
    ColourTrace tr;
    ColourOptions opt;
    opt.trace = &tr;
    auto c = colour_digirth4(d, opt);
    CHECK(verify_colouring(d, c).valid);
    CHECK(c.total());
    CHECK(tr.blocks == 4);
}

TEST_CASE("colour_digirth4: disconnected input") {
    Digraph d(8, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 5}, {5, 6}, {6, 7}, {7, 4}});
    auto c = colour_digirth4(d);
    CHECK(verify_colouring(d, c).valid);
}

TEST_CASE("colour_digirth4 with a supplied rotation system") {
    Digraph d = octahedron_digraph();
    auto e = octahedron_embedding();
    auto c = colour_digirth4_with_embedding(d, e);
    CHECK(verify_colouring(d, c).valid);
    auto wrong = compute_embedding(directed_cycle(6));
    CHECK_THROWS_AS(colour_digirth4_with_embedding(d, wrong), Error);
}

TEST_CASE("colour pipeline is deterministic") {
    oracle::InstanceSpec spec;
    spec.seed = 99;
    spec.n = 25;
    auto inst = oracle::random_instance(spec);
    auto c1 = colour_digirth4(inst.d);
    auto c2 = colour_digirth4(inst.d);
    CHECK(c1 == c2);
}

TEST_CASE("monochromatic facial triangles are never directed (two-colour audit)") {
    for (uint64_t seed : {11ULL, 22ULL, 33ULL}) {
        auto e = oracle::ring_triangulation(5, 1);
        oracle::Rng rng(seed);
        Digraph d = oracle::orient_with_digirth(oracle::underlying(e), 4, rng);
        auto c = extend_on_triangle(d, e, outer_pre(e, {1, 2, 1}));
        for (const Face& f : e.faces) {
            VertexId x = f.boundary[0], y = f.boundary[1], z = f.boundary[2];
            if (c.get(x) == c.get(y) && c.get(y) == c.get(z)) {
                bool fwd = d.has_arc(x, y) && d.has_arc(y, z) && d.has_arc(z, x);
                bool bwd = d.has_arc(y, x) && d.has_arc(z, y) && d.has_arc(x, z);
                CHECK_FALSE(fwd);
                CHECK_FALSE(bwd);
            }
        }
    }
}

TEST_CASE("colour_with_apex: digirth-4 input with arbitrary v0") {
    Digraph d = octahedron_digraph();
    auto c = colour_with_apex({d, 3});
    CHECK(verify_colouring(d, c).valid);
}

TEST_CASE("colour_with_apex: wheel with directed rim and hub apex") {
    std::vector<Arc> arcs;
    for (int i = 1; i <= 5; ++i) arcs.push_back({i, i % 5 + 1});
    for (int i = 1; i <= 5; ++i) arcs.push_back(i % 2 ? Arc{0, i} : Arc{i, 0});
    Digraph d(6, arcs);
    REQUIRE(digirth(d) == Digirth::of(3));
    REQUIRE(!directed_triangles(d).empty());
    for (const auto& t : directed_triangles(d)) CHECK(t[0] == 0);
    ColourTrace tr;
    ColourOptions opt;
    opt.trace = &tr;
    auto c = colour_with_apex({d, 0}, opt);
    CHECK(verify_colouring(d, c).valid);
    CHECK(oracle::valid_by_scc(d, c));
    CHECK_FALSE(tr.fallback_engaged);
}

TEST_CASE("colour_with_apex rejects a directed triangle avoiding v0") {
    Digraph d = glued_octahedra(true);
    CHECK_THROWS_WITH_AS(colour_with_apex({d, 5}), doctest::Contains("avoiding v0"), Error);
}

TEST_CASE("colour_with_apex: v0 on every separating triangle engages the fallback") {
    Digraph d = glued_octahedra(true);
    REQUIRE(digirth(d) == Digirth::of(3));
    for (const auto& t : directed_triangles(d)) CHECK(t[0] == 0);
    ColourTrace tr;
    ColourOptions opt;
    opt.trace = &tr;
    auto c = colour_with_apex({d, 0}, opt);
    CHECK(verify_colouring(d, c).valid);
    CHECK(oracle::valid_by_scc(d, c));
    CHECK(tr.fallback_engaged);
}

TEST_CASE("colour_with_apex: separator avoiding v0 splits without fallback") {
    Digraph base(6, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {0, 4}, {3, 2}, {3, 4}, {4, 1},
                     {1, 5}, {2, 5}, {3, 5}, {4, 5}});
    Digraph d = glue_on_triangle(base, transitive_tournament(4), {3, 4, 5}, {0, 1, 2});
    REQUIRE(d.vertex_count() == 7);
    REQUIRE(!directed_triangles(d).empty());
    for (const auto& t : directed_triangles(d)) REQUIRE(t[0] == 0);
    ColourTrace tr;
    ColourOptions opt;
    opt.trace = &tr;
    auto c = colour_with_apex({d, 0}, opt);
    CHECK(verify_colouring(d, c).valid);
    CHECK_FALSE(tr.fallback_engaged);
    CHECK(tr.separators_used >= 1);
    CHECK(tr.branch_apex >= 1);
}

TEST_CASE("end-to-end soundness over random instances") {
    for (uint64_t seed = 1; seed <= 60; ++seed) {
        oracle::InstanceSpec spec;
        spec.seed = seed * 13;
        spec.n = 5 + static_cast<int>(seed % 26);
        spec.shape = seed % 2 ? oracle::InstanceShape::Triangulation
                              : oracle::InstanceShape::AnyPlanar;
        auto inst = oracle::random_instance(spec);
        auto c = colour_digirth4(inst.d);
        CHECK(verify_colouring(inst.d, c).valid);
        CHECK(oracle::valid_by_scc(inst.d, c));
        check_two_colours_partition(inst.d, c);
    }
}
