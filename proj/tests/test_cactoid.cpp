#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <functional>
#include <random>
#include <set>

#include "cactoidlab/cactoid.hpp"

using namespace cactoidlab;

namespace {

SurfaceInvariants make_class(int connectivity, int boundary, bool orientable) {
    SurfaceInvariants s;
    s.connectivity = connectivity;
    s.boundary_count = boundary;
    s.euler_char = 2 - connectivity;
    s.reduced_connectivity = connectivity - boundary;
    s.orientable = orientable;
    return s;
}

const SurfaceInvariants SPHERE = make_class(0, 0, true);
const SurfaceInvariants DISC = make_class(1, 1, true);
const SurfaceInvariants ANNULUS = make_class(2, 2, true);
const SurfaceInvariants MOBIUS = make_class(2, 1, false);
const SurfaceInvariants TORUS = make_class(2, 0, true);

CactoidPiece piece(const std::string& name, const SurfaceInvariants& cls,
                   Rational diam = 1) {
    CactoidPiece p;
    p.name = name;
    p.cls = cls;
    p.diameter = diam;
    return p;
}

AttachmentEnd on_piece(int owner, const std::string& point, int circle = -1) {
    return {false, owner, point, circle};
}

AttachmentEnd on_tree(int owner, const std::string& node) {
    return {true, owner, node, -1};
}

// oracle: two edges lie in the same non-degenerate block iff some simple
// cycle passes through both
bool on_common_cycle(const SimpleGraph& g, int e1, int e2) {
    if (e1 == e2) return false;
    std::vector<std::vector<std::pair<int, int>>> adj(g.n);
    for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
        adj[g.edges[e].first].emplace_back(g.edges[e].second, e);
        adj[g.edges[e].second].emplace_back(g.edges[e].first, e);
    }
    bool found = false;
    std::vector<bool> vis(g.n, false);
    std::vector<int> used_edges;
    int start = g.edges[e1].first;
    std::function<void(int, bool, bool)> dfs = [&](int v, bool got1, bool got2) {
        if (found) return;
        for (auto [w, e] : adj[v]) {
            bool u1 = got1 || e == e1, u2 = got2 || e == e2;
            if (w == start && used_edges.size() >= 2) {
                if (u1 && u2 &&
                    std::find(used_edges.begin(), used_edges.end(), e) == used_edges.end()) {
                    found = true;
                    return;
                }
                continue;
            }
            if (vis[w]) continue;
            vis[w] = true;
            used_edges.push_back(e);
            dfs(w, u1, u2);
            used_edges.pop_back();
            vis[w] = false;
        }
    };
    vis[start] = true;
    dfs(start, false, false);
    return found;
}

}  // namespace

TEST_CASE("block decomposition basics") {
    SimpleGraph cycle{4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}};
    auto d = block_decomposition(cycle);
    CHECK(d.blocks.size() == 1);
    CHECK(d.cut_vertices.empty());

    SimpleGraph bowtie{5, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 2}}};
    auto b = block_decomposition(bowtie);
    CHECK(b.blocks.size() == 2);
    CHECK(b.cut_vertices == std::vector<int>{2});

    SimpleGraph path{4, {{0, 1}, {1, 2}, {2, 3}}};
    auto p = block_decomposition(path);
    CHECK(p.blocks.size() == 3);
    for (const auto& blk : p.blocks) CHECK(blk.size() == 1);

    SimpleGraph split{4, {{0, 1}, {2, 3}}};
    CHECK_THROWS_AS(block_decomposition(split), ValidationError);
}

TEST_CASE("block decomposition matches common-cycle oracle") {
    std::mt19937 rng(41);
    for (int t = 0; t < 40; ++t) {
        std::uniform_int_distribution<int> nd(3, 7);
        int n = nd(rng);
        SimpleGraph g{n, {}};
        // random spanning tree plus extra edges keeps it connected
        for (int v = 1; v < n; ++v) {
            std::uniform_int_distribution<int> pd(0, v - 1);
            g.edges.emplace_back(pd(rng), v);
        }
        std::uniform_int_distribution<int> extra(0, 3);
        std::set<std::pair<int, int>> have(g.edges.begin(), g.edges.end());
        for (int k = extra(rng); k > 0; --k) {
            std::uniform_int_distribution<int> vd(0, n - 1);
            int a = vd(rng), b = vd(rng);
            if (a == b) continue;
            if (a > b) std::swap(a, b);
            if (have.insert({a, b}).second) g.edges.emplace_back(a, b);
        }
        auto dec = block_decomposition(g);
        std::vector<int> block_of(g.edges.size(), -1);
        for (int bi = 0; bi < static_cast<int>(dec.blocks.size()); ++bi) {
            for (int e : dec.blocks[bi]) block_of[e] = bi;
        }
        for (int e1 = 0; e1 < static_cast<int>(g.edges.size()); ++e1) {
            for (int e2 = e1 + 1; e2 < static_cast<int>(g.edges.size()); ++e2) {
                bool same = block_of[e1] == block_of[e2] &&
                            dec.blocks[block_of[e1]].size() > 1;
                CHECK(same == on_common_cycle(g, e1, e2));
            }
        }
    }
}

TEST_CASE("is_one_cactoid") {
    SimpleGraph eight{3, {{0, 1}, {1, 0}, {1, 2}, {2, 1}}};
    CHECK(is_one_cactoid(eight));
    SimpleGraph k4{4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};
    CHECK_FALSE(is_one_cactoid(k4));
    SimpleGraph tree{4, {{0, 1}, {1, 2}, {1, 3}}};
    CHECK(is_one_cactoid(tree));
    SimpleGraph theta{4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}}};
    CHECK_FALSE(is_one_cactoid(theta));
}

TEST_CASE("validate basics") {
    CactoidGraph sphere;
    sphere.pieces.push_back(piece("S", SPHERE));
    CHECK(validate(sphere).ok());
    CHECK(connectivity_number(sphere) == 0);

    CactoidGraph disc;
    disc.pieces.push_back(piece("D", DISC));
    auto rep = validate(disc);
    REQUIRE_FALSE(rep.ok());
    CHECK(rep.violations[0].find("uncovered") != std::string::npos);

    disc.grouping.push_back({"B", {{0, 0}}, {}, {}});
    CHECK(validate(disc).ok());
    CHECK(connectivity_number(disc) == 1);

    // inconsistent class arithmetic
    CactoidGraph bad;
    auto p = piece("P", DISC);
    p.cls.reduced_connectivity = 5;
    bad.pieces.push_back(p);
    CHECK_FALSE(validate(bad).ok());
}

TEST_CASE("two discs wedged at a boundary point share one continuum") {
    CactoidGraph g;
    g.pieces.push_back(piece("D0", DISC));
    g.pieces.push_back(piece("D1", DISC));
    g.attachments.push_back({"w", on_piece(0, "p", 0), on_piece(1, "q", 0)});
    g.grouping.push_back({"B", {{0, 0}, {1, 0}}, {"w"}, {}});
    CHECK(validate(g).ok());
    CHECK(connectivity_number(g) == 1);

    auto mp = minimal_preboundary(g);
    REQUIRE(mp.size() == 1);
    CHECK(mp[0].circles.size() == 2);
    CHECK(is_one_cactoid(continuum_realization(g, mp[0])));

    // splitting the circles is invalid: they share the wedge point
    CactoidGraph split = g;
    split.grouping = {{"B0", {{0, 0}}, {}, {}}, {"B1", {{1, 0}}, {}, {}}};
    CHECK_FALSE(validate(split).ok());
}

TEST_CASE("chain of three discs collapses to one continuum") {
    CactoidGraph g;
    for (int i = 0; i < 3; ++i) g.pieces.push_back(piece("D" + std::to_string(i), DISC));
    g.attachments.push_back({"w01", on_piece(0, "p0", 0), on_piece(1, "p1a", 0)});
    g.attachments.push_back({"w12", on_piece(1, "p1b", 0), on_piece(2, "p2", 0)});
    g.grouping = minimal_preboundary(g);
    REQUIRE(g.grouping.size() == 1);
    CHECK(g.grouping[0].circles.size() == 3);
    CHECK(validate(g).ok());
    CHECK(connectivity_number(g) == 1);
    CHECK(is_one_cactoid(continuum_realization(g, g.grouping[0])));

    // idempotent
    auto again = minimal_preboundary(g);
    CHECK(again.size() == 1);
    CHECK(again[0].circles.size() == 3);
}

TEST_CASE("interior wedge of two annuli forces four continua") {
    CactoidGraph g;
    g.pieces.push_back(piece("A0", ANNULUS));
    g.pieces.push_back(piece("A1", ANNULUS));
    g.attachments.push_back({"w", on_piece(0, "x"), on_piece(1, "y")});
    auto mp = minimal_preboundary(g);
    CHECK(mp.size() == 4);
    g.grouping = mp;
    CHECK(validate(g).ok());
    CHECK(connectivity_number(g) == 0 + 0 + 4);
}

TEST_CASE("tree connector merges two disc circles") {
    CactoidGraph g;
    g.pieces.push_back(piece("D0", DISC));
    g.pieces.push_back(piece("D1", DISC));
    g.trees.push_back({"T", {"n0", "n1"}, {{0, 1, 1}}});
    g.attachments.push_back({"a0", on_tree(0, "n0"), on_piece(0, "p", 0)});
    g.attachments.push_back({"a1", on_tree(0, "n1"), on_piece(1, "q", 0)});
    auto mp = minimal_preboundary(g);
    REQUIRE(mp.size() == 1);
    CHECK(mp[0].circles.size() == 2);
    CHECK(mp[0].trees == std::vector<std::string>{"T"});
    CHECK(is_one_cactoid(continuum_realization(g, mp[0])));
    g.grouping = mp;
    CHECK(connectivity_number(g) == 1);
}

TEST_CASE("mobius wedged with a sphere") {
    CactoidGraph g;
    g.pieces.push_back(piece("M", MOBIUS));
    g.pieces.push_back(piece("S", SPHERE));
    g.attachments.push_back({"w", on_piece(0, "x"), on_piece(1, "y")});
    g.grouping.push_back({"B", {{0, 0}}, {}, {}});
    CHECK(validate(g).ok());
    CHECK(connectivity_number(g) == 2);  // reduced 1 + one continuum
}

TEST_CASE("shrinking disc families") {
    // family attached at interior points of the host: no pre-boundary
    CactoidGraph bad;
    bad.pieces.push_back(piece("D", DISC));
    auto fam = piece("F", DISC, Rational(1, 4));
    fam.shrinking_family = true;
    bad.pieces.push_back(fam);
    bad.attachments.push_back({"w", on_piece(1, "x", 0), on_piece(0, "y")});
    CHECK_FALSE(validate(bad).ok());
    CHECK_THROWS_AS(minimal_preboundary(bad), NoPreBoundary);

    // circle-to-circle attachment is coverable
    CactoidGraph good = bad;
    good.attachments[0].b = on_piece(0, "y", 0);
    good.grouping = minimal_preboundary(good);
    CHECK(good.grouping.size() == 1);
    CHECK(validate(good).ok());
    CHECK(connectivity_number(good) == 1);
}

TEST_CASE("wedge incidence must be a tree") {
    CactoidGraph g;
    g.pieces.push_back(piece("S0", SPHERE));
    g.pieces.push_back(piece("S1", SPHERE));
    g.attachments.push_back({"w0", on_piece(0, "x0"), on_piece(1, "y0")});
    g.attachments.push_back({"w1", on_piece(0, "x1"), on_piece(1, "y1")});
    auto rep = validate(g);
    REQUIRE_FALSE(rep.ok());
    CHECK(rep.violations[0].find("cycle") != std::string::npos);

    // three pieces at one shared point stay a wedge
    CactoidGraph star;
    for (int i = 0; i < 3; ++i) star.pieces.push_back(piece("S" + std::to_string(i), SPHERE));
    star.attachments.push_back({"w0", on_piece(0, "x"), on_piece(1, "y")});
    star.attachments.push_back({"w1", on_piece(1, "y"), on_piece(2, "z")});
    CHECK(validate(star).ok());
}

TEST_CASE("minimal preboundary matches exhaustive search on a mixed example") {
    // disc wedged to one annulus circle; the other annulus circle is alone
    CactoidGraph g;
    g.pieces.push_back(piece("A", ANNULUS));
    g.pieces.push_back(piece("D", DISC));
    g.attachments.push_back({"w", on_piece(0, "x", 0), on_piece(1, "y", 0)});
    auto mp = minimal_preboundary(g);
    CHECK(mp.size() == 2);
    g.grouping = mp;
    CHECK(validate(g).ok());
    for (const auto& c : mp) CHECK(is_one_cactoid(continuum_realization(g, c)));
    // the merged continuum picked up the wedge token (maximal union)
    bool has_wedge = false;
    for (const auto& c : mp) has_wedge = has_wedge || !c.wedges.empty();
    CHECK(has_wedge);
}

TEST_CASE("pi1 signature") {
    CactoidGraph g;
    g.pieces.push_back(piece("S", SPHERE));
    GluingHistory h;
    CHECK(pi1_signature(g, h).surface_factors.empty());
    CHECK(pi1_signature(g, h).free_rank == 0);

    CactoidGraph t;
    t.pieces.push_back(piece("T", TORUS));
    auto sig = pi1_signature(t, h);
    REQUIRE(sig.surface_factors.size() == 1);
    CHECK(sig.surface_factors[0].connectivity == 2);

    h.steps.push_back({GluingStep::Kind::two_point, "", false});
    h.steps.push_back({GluingStep::Kind::two_point, "", false});
    CHECK(pi1_signature(g, h).free_rank == 2);
}

TEST_CASE("certificates") {
    CactoidGraph sphere;
    sphere.pieces.push_back(piece("S", SPHERE));
    GluingHistory h;
    h.steps.push_back({GluingStep::Kind::two_point, "", false});
    auto c1 = certify(2, sphere, h);
    CHECK(c1.c0 == 0);
    CHECK(c1.verdict);  // 0 <= 2 + 0 - 2

    CactoidGraph disc;
    disc.pieces.push_back(piece("D", DISC));
    disc.grouping.push_back({"B", {{0, 0}}, {}, {}});
    GluingHistory hb;
    hb.steps.push_back({GluingStep::Kind::two_point, "", true});
    auto c2 = certify(1, disc, hb);
    CHECK(c2.c0 == 1);
    CHECK_FALSE(c2.verdict);  // 1 <= 1 + 1 - 2 fails

    GluingHistory empty;
    CHECK(certify(1, disc, empty).verdict);
}
