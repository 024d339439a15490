#include "cactoidlab/mesh_builders.hpp"

#include <algorithm>
#include <set>

namespace cactoidlab {

Rational pick_length(const Rational& lo, const Rational& hi) {
    if (lo >= hi) throw ValidationError("empty length interval");
    return (lo + hi) / 2;
}

namespace {

std::vector<std::string> prefixed(const std::string& prefix,
                                  std::initializer_list<const char*> names) {
    std::vector<std::string> out;
    for (const char* n : names) out.push_back(prefix + n);
    return out;
}

}  // namespace

TriSurface sphere_mesh(const Rational& diameter, const std::string& prefix) {
    if (diameter <= 0) throw ValidationError("non-positive diameter");
    Rational e = diameter / 2;
    auto v = prefixed(prefix, {"n", "s", "e0", "e1", "e2", "e3"});
    std::vector<TriSurface::Edge> edges;
    std::vector<TriSurface::Face> faces;
    // 0=n 1=s 2..5 equator
    for (int i = 0; i < 4; ++i) {
        int a = 2 + i, b = 2 + (i + 1) % 4;
        edges.push_back({0, a, e});
        edges.push_back({1, a, e});
        edges.push_back({std::min(a, b), std::max(a, b), e});
        faces.push_back({0, a, b});
        faces.push_back({1, b, a});
    }
    return make_surface(std::move(v), std::move(edges), std::move(faces));
}

TriSurface disc_mesh(const Rational& diameter, const std::string& prefix) {
    if (diameter <= 0) throw ValidationError("non-positive diameter");
    Rational e = diameter / 2;
    auto v = prefixed(prefix, {"c", "r0", "r1", "r2", "r3", "r4", "r5"});
    std::vector<TriSurface::Edge> edges;
    std::vector<TriSurface::Face> faces;
    for (int i = 0; i < 6; ++i) {
        int a = 1 + i, b = 1 + (i + 1) % 6;
        edges.push_back({0, a, e});
        edges.push_back({std::min(a, b), std::max(a, b), e});
        faces.push_back({0, a, b});
    }
    return make_surface(std::move(v), std::move(edges), std::move(faces));
}

TriSurface annulus_mesh(const Rational& edge, const std::string& prefix) {
    if (edge <= 0) throw ValidationError("non-positive edge length");
    Rational diag = edge * 5 / 4;
    auto v = prefixed(prefix, {"t0", "t1", "t2", "t3", "b0", "b1", "b2", "b3"});
    std::vector<TriSurface::Edge> edges;
    std::vector<TriSurface::Face> faces;
    auto add = [&](int a, int b, const Rational& len) {
        if (a > b) std::swap(a, b);
        edges.push_back({a, b, len});
    };
    for (int i = 0; i < 4; ++i) {
        int t = i, tn = (i + 1) % 4;
        int b = 4 + i, bn = 4 + (i + 1) % 4;
        add(t, tn, edge);
        add(b, bn, edge);
        add(t, b, edge);
        add(t, bn, diag);
        faces.push_back({t, tn, bn});
        faces.push_back({t, bn, b});
    }
    return make_surface(std::move(v), std::move(edges), std::move(faces));
}

TriSurface mobius_mesh(const Rational& edge, const std::string& prefix) {
    if (edge <= 0) throw ValidationError("non-positive edge length");
    auto v = prefixed(prefix, {"m0", "m1", "m2", "m3", "m4"});
    std::vector<TriSurface::Face> faces = {
        {0, 1, 2}, {1, 2, 3}, {2, 3, 4}, {3, 4, 0}, {4, 0, 1}};
    std::set<std::pair<int, int>> pairs;
    for (const auto& f : faces) {
        int vs[3] = {f.a, f.b, f.c};
        for (int k = 0; k < 3; ++k) {
            int a = vs[k], b = vs[(k + 1) % 3];
            if (a > b) std::swap(a, b);
            pairs.insert({a, b});
        }
    }
    std::vector<TriSurface::Edge> edges;
    for (auto [a, b] : pairs) edges.push_back({a, b, edge});
    return make_surface(std::move(v), std::move(edges), std::move(faces));
}

TriSurface rp2_mesh(const Rational& edge, const std::string& prefix) {
    if (edge <= 0) throw ValidationError("non-positive edge length");
    auto v = prefixed(prefix, {"p0", "p1", "p2", "p3", "p4", "p5"});
    // antipodal quotient of the icosahedron: apex 0, ring 1..5
    std::vector<TriSurface::Face> faces;
    for (int i = 0; i < 5; ++i) {
        int a = 1 + i, b = 1 + (i + 1) % 5, c = 1 + (i + 3) % 5;
        faces.push_back({0, a, b});
        faces.push_back({a, b, c});
    }
    std::set<std::pair<int, int>> pairs;
    for (const auto& f : faces) {
        int vs[3] = {f.a, f.b, f.c};
        for (int k = 0; k < 3; ++k) {
            int a = vs[k], b = vs[(k + 1) % 3];
            if (a > b) std::swap(a, b);
            pairs.insert({a, b});
        }
    }
    std::vector<TriSurface::Edge> edges;
    for (auto [a, b] : pairs) edges.push_back({a, b, edge});
    return make_surface(std::move(v), std::move(edges), std::move(faces));
}

TriSurface torus_mesh(const Rational& edge, const std::string& prefix) {
    if (edge <= 0) throw ValidationError("non-positive edge length");
    Rational diag = edge * 5 / 4;
    std::vector<std::string> v;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            v.push_back(prefix + "g" + std::to_string(i) + std::to_string(j));
        }
    }
    auto id = [](int i, int j) { return ((i % 3) + 3) % 3 * 3 + ((j % 3) + 3) % 3; };
    std::vector<TriSurface::Edge> edges;
    std::vector<TriSurface::Face> faces;
    auto add = [&](int a, int b, const Rational& len) {
        if (a > b) std::swap(a, b);
        edges.push_back({a, b, len});
    };
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            add(id(i, j), id(i, j + 1), edge);
            add(id(i, j), id(i + 1, j), edge);
            add(id(i, j), id(i + 1, j + 1), diag);
            faces.push_back({id(i, j), id(i, j + 1), id(i + 1, j + 1)});
            faces.push_back({id(i, j), id(i + 1, j + 1), id(i + 1, j)});
        }
    }
    return make_surface(std::move(v), std::move(edges), std::move(faces));
}

TriSurface punctured(const TriSurface& s, const std::vector<int>& faces) {
    std::set<int> drop(faces.begin(), faces.end());
    for (int f : drop) {
        if (f < 0 || f >= static_cast<int>(s.faces.size())) {
            throw ValidationError("face index out of range");
        }
    }
    std::vector<TriSurface::Face> kept;
    for (size_t i = 0; i < s.faces.size(); ++i) {
        if (!drop.count(static_cast<int>(i))) kept.push_back(s.faces[i]);
    }
    return make_surface(s.vertices, s.edges, std::move(kept));
}

TriSurface scaled(const TriSurface& s, const Rational& factor) {
    if (factor <= 0) throw ValidationError("non-positive scale factor");
    TriSurface out = s;
    for (auto& e : out.edges) e.length *= factor;
    return out;
}

TriSurface with_prefix(const TriSurface& s, const std::string& prefix) {
    TriSurface out = s;
    for (auto& v : out.vertices) v = prefix + v;
    return out;
}

TriSurface disjoint_union(const TriSurface& a, const TriSurface& b) {
    TriSurface out = a;
    const int shift = static_cast<int>(a.vertices.size());
    for (const auto& v : b.vertices) {
        if (std::find(out.vertices.begin(), out.vertices.end(), v) != out.vertices.end()) {
            throw ValidationError("label clash in disjoint union: '" + v + "'");
        }
        out.vertices.push_back(v);
    }
    for (const auto& e : b.edges) out.edges.push_back({e.u + shift, e.v + shift, e.length});
    for (const auto& f : b.faces) out.faces.push_back({f.a + shift, f.b + shift, f.c + shift});
    return out;
}

Rational mesh_diameter(const TriSurface& s) {
    Rational best = 0;
    for (int i = 0; i < static_cast<int>(s.vertices.size()); ++i) {
        auto d = mesh_distances(s, i);
        for (const auto& x : d) {
            if (x > best) best = x;
        }
    }
    return best;
}

}  // namespace cactoidlab
