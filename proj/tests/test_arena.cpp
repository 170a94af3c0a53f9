#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "fixtures.hpp"
#include "pp/arena.hpp"

using namespace pp;

namespace {

std::vector<int> out_vec(const Arena& d, int t, int u) { return d.out_list(t, u); }

}  // namespace

TEST_CASE("arena neighborhoods transcribe the snapshots") {
    Arena swap2(fixtures::swap2());
    CHECK(out_vec(swap2, 0, 0) == std::vector<int>{1});
    CHECK(out_vec(swap2, 0, 1) == std::vector<int>{0});

    Arena per2(fixtures::per2());
    CHECK(out_vec(per2, 0, 0) == std::vector<int>{1});
    CHECK(out_vec(per2, 0, 1) == std::vector<int>{0});
    CHECK(out_vec(per2, 1, 0) == std::vector<int>{0});
    CHECK(out_vec(per2, 1, 1) == std::vector<int>{1});

    Arena rp3(fixtures::rp3());
    CHECK(out_vec(rp3, 0, 1) == std::vector<int>{0, 1, 2});
    CHECK(rp3.edge_count() == 7);
}

TEST_CASE("in-lists are the exact transpose of out-lists") {
    for (std::uint64_t seed = 0; seed < 15; ++seed) {
        PeriodicGraph g = gen_random(2 + static_cast<int>(seed % 5), 1 + static_cast<int>(seed % 3),
                                     static_cast<int>(seed % 3), 40 + seed);
        Arena d(g);
        const int n = d.vertex_count();
        const int p = d.period();
        for (int t = 0; t < p; ++t) {
            int tp1 = (t + 1) % p;
            for (int u = 0; u < n; ++u)
                for (int v = 0; v < n; ++v) {
                    bool out = d.has_out(t, u, v);
                    bool in = std::binary_search(d.in_list(tp1, v).begin(),
                                                 d.in_list(tp1, v).end(), u);
                    CHECK(out == in);
                    CHECK(out == d.in_bits().test(d.row(tp1, v), static_cast<std::size_t>(u)));
                }
        }
    }
}

TEST_CASE("every out-neighborhood is non-empty") {
    Arena d(fixtures::per_disc());
    for (int t = 0; t < d.period(); ++t)
        for (int u = 0; u < d.vertex_count(); ++u) CHECK_FALSE(d.out_list(t, u).empty());
}

TEST_CASE("plain-arena stars") {
    Arena rp3(fixtures::rp3());
    CHECK(is_star(rp3, {0, 1}));
    CHECK_FALSE(is_star(rp3, {0, 0}));
    Arena swap2(fixtures::swap2());
    CHECK_FALSE(is_star(swap2, {0, 0}));
}

TEST_CASE("anchored set on sourceless fixtures is everything") {
    for (const PeriodicGraph& g : {fixtures::swap2(), fixtures::rp3(), fixtures::rc4()}) {
        Arena d(g);
        CHECK(anchored_set(d).count() ==
              static_cast<std::size_t>(d.period()) * static_cast<std::size_t>(d.vertex_count()));
    }
}

TEST_CASE("anchored set stops at unreachable temporal nodes") {
    // (1,1) has no predecessor in slice 0.
    PeriodicGraph g(2, 2, {{{0, 0}, {1, 0}}, {{0, 0}, {0, 1}, {1, 1}}});
    Arena d(g);
    DynBitset a = anchored_set(d);
    CHECK(a.test(d.row(0, 0)));
    CHECK(a.test(d.row(0, 1)));
    CHECK(a.test(d.row(1, 0)));
    CHECK_FALSE(a.test(d.row(1, 1)));
    CHECK(a.count() == 3);
}

TEST_CASE("anchored set of the single-vertex graph") {
    Arena d(fixtures::single());
    CHECK(anchored_set(d).count() == 1);
}

TEST_CASE("temporal corners of the fixtures") {
    Arena rp3(fixtures::rp3());
    auto corners = temporal_corners(rp3);
    bool found = false;
    for (const auto& [corner, cover] : corners)
        if (corner == TemporalNode{0, 0} && cover == TemporalNode{0, 1}) found = true;
    CHECK(found);

    CHECK(temporal_corners(Arena(fixtures::dicyc3())).empty());
    CHECK(temporal_corners(Arena(fixtures::swap2())).empty());
}

TEST_CASE("returned corner pairs satisfy the containment by direct recheck") {
    for (std::uint64_t seed = 0; seed < 15; ++seed) {
        PeriodicGraph g = gen_random(2 + static_cast<int>(seed % 5), 1 + static_cast<int>(seed % 3),
                                     static_cast<int>(seed % 3), 60 + seed);
        Arena d(g);
        for (const auto& [corner, cover] : temporal_corners(d)) {
            CHECK(corner.v != cover.v);
            CHECK(cover.t == (corner.t + 1) % d.period());
            for (int w : d.out_list(corner.t, corner.v))
                CHECK(d.has_out(cover.t, cover.v, w));
        }
    }
}
