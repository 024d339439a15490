#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cactoidlab/gh.hpp"
#include "cactoidlab/mesh_builders.hpp"
#include "cactoidlab/surface.hpp"

using namespace cactoidlab;

namespace {

TriSurface triangle_disc() {
    return make_surface({"a", "b", "c"},
                        {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}},
                        {{0, 1, 2}});
}

void check_inv(const TriSurface& s, bool orientable, int chi, int b) {
    auto inv = invariants(s);
    CHECK(inv.orientable == orientable);
    CHECK(inv.euler_char == chi);
    CHECK(inv.boundary_count == b);
    CHECK(inv.connectivity == 2 - chi);
    CHECK(inv.reduced_connectivity == 2 - chi - b);
}

}  // namespace

TEST_CASE("builder invariants") {
    check_inv(sphere_mesh(1), true, 2, 0);
    check_inv(triangle_disc(), true, 1, 1);
    check_inv(disc_mesh(1), true, 1, 1);
    check_inv(annulus_mesh(1), true, 0, 2);
    check_inv(mobius_mesh(1), false, 0, 1);
    check_inv(rp2_mesh(1), false, 1, 0);
    check_inv(torus_mesh(1), true, 0, 0);
}

TEST_CASE("validation rejects malformed complexes") {
    // duplicate label
    CHECK_THROWS_AS(make_surface({"a", "a", "c"},
                                 {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}},
                                 {{0, 1, 2}}),
                    ValidationError);
    // non-positive length
    CHECK_THROWS_AS(make_surface({"a", "b", "c"},
                                 {{0, 1, 0}, {1, 2, 1}, {0, 2, 1}},
                                 {{0, 1, 2}}),
                    ValidationError);
    // violated strict triangle inequality
    CHECK_THROWS_AS(make_surface({"a", "b", "c"},
                                 {{0, 1, 3}, {1, 2, 1}, {0, 2, 1}},
                                 {{0, 1, 2}}),
                    ValidationError);
    // edge in no face
    CHECK_THROWS_AS(make_surface({"a", "b", "c", "d"},
                                 {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}, {0, 3, 1}},
                                 {{0, 1, 2}}),
                    ValidationError);
    // face uses a missing edge
    CHECK_THROWS_AS(make_surface({"a", "b", "c"},
                                 {{0, 1, 1}, {1, 2, 1}},
                                 {{0, 1, 2}}),
                    ValidationError);
}

TEST_CASE("subdivision preserves class and halves resolution") {
    for (const TriSurface& s : {sphere_mesh(1), mobius_mesh(1), annulus_mesh(1)}) {
        auto fine = subdivide(s);
        auto a = invariants(s);
        auto b = invariants(fine);
        CHECK(a.orientable == b.orientable);
        CHECK(a.euler_char == b.euler_char);
        CHECK(a.boundary_count == b.boundary_count);
        Rational hmax = 0, fmax = 0;
        for (const auto& e : s.edges) hmax = std::max(hmax, e.length);
        for (const auto& e : fine.edges) fmax = std::max(fmax, e.length);
        CHECK(fmax <= hmax / 2);
    }
}

TEST_CASE("geodesic metric basics") {
    // degenerate single-edge graph, no faces
    TriSurface seg;
    seg.vertices = {"a", "b"};
    seg.edges = {{0, 1, Rational(7, 2)}};
    auto g = geodesic_metric(seg, 0);
    CHECK(g.space.size() == 2);
    CHECK(g.space.dist(0, 1) == Rational(7, 2));

    auto tri = geodesic_metric(triangle_disc(), 0);
    CHECK(tri.space.dist(0, 1) == 1);
    CHECK(tri.space.dist(1, 2) == 1);

    auto sph = geodesic_metric(sphere_mesh(2), 0);
    CHECK(sph.space.diameter() == 2);
    CHECK(FiniteMetricSpace::check_axioms(sph.space.labels(), sph.space.matrix()) ==
          std::nullopt);
}

TEST_CASE("refinement shrinks distances and stays close") {
    auto s = sphere_mesh(1);
    auto g0 = geodesic_metric(s, 0);
    auto g1 = geodesic_metric(s, 1);
    for (int i = 0; i < g0.space.size(); ++i) {
        for (int j = 0; j < g0.space.size(); ++j) {
            int fi = g1.space.index_of(g0.space.label(i));
            int fj = g1.space.index_of(g0.space.label(j));
            CHECK(g1.space.dist(fi, fj) <= g0.space.dist(i, j));
        }
    }
    // inclusion correspondence: coarse label identity, fine extras to the
    // nearest coarse vertex
    Correspondence r;
    std::vector<int> coarse_in_fine;
    for (int i = 0; i < g0.space.size(); ++i) {
        coarse_in_fine.push_back(g1.space.index_of(g0.space.label(i)));
        r.pairs.emplace_back(i, coarse_in_fine.back());
    }
    for (int j = 0; j < g1.space.size(); ++j) {
        int best = 0;
        for (int i = 1; i < g0.space.size(); ++i) {
            if (g1.space.dist(coarse_in_fine[i], j) < g1.space.dist(coarse_in_fine[best], j)) {
                best = i;
            }
        }
        r.pairs.emplace_back(best, j);
    }
    CHECK(gh_upper(g0.space, g1.space, r) <= g0.resolution);
}

TEST_CASE("doubling") {
    auto dd = double_surface(triangle_disc());
    check_inv(dd.surface, true, 2, 0);
    CHECK(dd.tau_plus.at("a") == "a");

    auto da = double_surface(annulus_mesh(1));
    check_inv(da.surface, true, 0, 0);

    auto dm = double_surface(mobius_mesh(1));
    check_inv(dm.surface, false, 0, 0);

    auto dp = double_surface(disc_mesh(1));
    check_inv(dp.surface, true, 2, 0);

    CHECK_THROWS_AS(double_surface(sphere_mesh(1)), ValidationError);

    // pair of pants: subdivided sphere minus three vertex-disjoint faces
    auto sp = subdivide(sphere_mesh(1));
    std::vector<int> drop;
    std::vector<char> used(sp.vertices.size(), 0);
    for (size_t f = 0; f < sp.faces.size() && drop.size() < 3; ++f) {
        const auto& face = sp.faces[f];
        if (used[face.a] || used[face.b] || used[face.c]) continue;
        used[face.a] = used[face.b] = used[face.c] = 1;
        drop.push_back(static_cast<int>(f));
    }
    REQUIRE(drop.size() == 3);
    auto pants = punctured(sp, drop);
    check_inv(pants, true, -1, 3);
    auto dpants = double_surface(pants);
    auto inv = invariants(dpants.surface);
    CHECK(inv.euler_char == -2);
    CHECK(inv.boundary_count == 0);
    CHECK(inv.orientable);
}

TEST_CASE("essential cycle diagnostic") {
    CHECK(essential_cycle_diagnostic(sphere_mesh(1)) == std::nullopt);
    CHECK(essential_cycle_diagnostic(triangle_disc()) == std::nullopt);
    auto t = essential_cycle_diagnostic(torus_mesh(1));
    REQUIRE(t.has_value());
    CHECK(*t == 3);  // shortest grid loop: three unit edges
    auto m = essential_cycle_diagnostic(mobius_mesh(1));
    REQUIRE(m.has_value());
    CHECK(*m > 0);
}

TEST_CASE("scaling and diameter helpers") {
    auto s = sphere_mesh(1);
    CHECK(mesh_diameter(s) == 1);
    CHECK(mesh_diameter(scaled(s, 3)) == 3);
    CHECK(pick_length(1, 2) > 1);
    CHECK(pick_length(1, 2) < 2);
    CHECK_THROWS_AS(pick_length(2, 2), ValidationError);
}
