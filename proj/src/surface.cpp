#include "cactoidlab/surface.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <unordered_map>

namespace cactoidlab {

namespace {

Rational pick_length_interval(const Rational& lo, const Rational& hi) {
    if (lo >= hi) throw ValidationError("empty length interval");
    return (lo + hi) / 2;
}

int64_t edge_key(int u, int v, int n) {
    if (u > v) std::swap(u, v);
    return static_cast<int64_t>(u) * n + v;
}

std::unordered_map<int64_t, int> edge_lookup(const TriSurface& s) {
    std::unordered_map<int64_t, int> map;
    map.reserve(s.edges.size() * 2);
    const int n = static_cast<int>(s.vertices.size());
    for (size_t i = 0; i < s.edges.size(); ++i) {
        map[edge_key(s.edges[i].u, s.edges[i].v, n)] = static_cast<int>(i);
    }
    return map;
}

struct ParityUnionFind {
    std::vector<int> parent;
    std::vector<char> parity;  // parity relative to parent chain

    explicit ParityUnionFind(int n) : parent(n), parity(n, 0) {
        std::iota(parent.begin(), parent.end(), 0);
    }

    std::pair<int, char> find(int x) {
        char p = 0;
        while (parent[x] != x) {
            p ^= parity[x];
            x = parent[x];
        }
        return {x, p};
    }

    // returns false on contradiction
    bool merge(int a, int b, char rel) {
        auto [ra, pa] = find(a);
        auto [rb, pb] = find(b);
        if (ra == rb) return static_cast<char>(pa ^ pb) == rel;
        parent[ra] = rb;
        parity[ra] = pa ^ pb ^ rel;
        return true;
    }
};

}  // namespace

int TriSurface::vertex_index(const std::string& label) const {
    auto v = find_vertex(label);
    if (!v) throw ValidationError("unknown vertex label '" + label + "'");
    return *v;
}

std::optional<int> TriSurface::find_vertex(const std::string& label) const {
    for (size_t i = 0; i < vertices.size(); ++i) {
        if (vertices[i] == label) return static_cast<int>(i);
    }
    return std::nullopt;
}

int TriSurface::edge_index(int u, int v) const {
    if (u > v) std::swap(u, v);
    for (size_t i = 0; i < edges.size(); ++i) {
        if (edges[i].u == u && edges[i].v == v) return static_cast<int>(i);
    }
    return -1;
}

TriSurface make_surface(std::vector<std::string> vertices,
                        std::vector<TriSurface::Edge> edges,
                        std::vector<TriSurface::Face> faces) {
    TriSurface s;
    s.vertices = std::move(vertices);
    s.edges = std::move(edges);
    s.faces = std::move(faces);
    const int n = static_cast<int>(s.vertices.size());

    {
        std::vector<std::string> sorted = s.vertices;
        std::sort(sorted.begin(), sorted.end());
        auto dup = std::adjacent_find(sorted.begin(), sorted.end());
        if (dup != sorted.end()) throw ValidationError("duplicate vertex label '" + *dup + "'");
    }

    std::set<std::pair<int, int>> seen;
    for (auto& e : s.edges) {
        if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n) {
            throw ValidationError("edge endpoint out of range");
        }
        if (e.u == e.v) throw ValidationError("degenerate edge at vertex " + s.vertices[e.u]);
        if (e.u > e.v) std::swap(e.u, e.v);
        if (e.length <= 0) {
            throw ValidationError("non-positive length on edge (" + s.vertices[e.u] + "," +
                                  s.vertices[e.v] + ")");
        }
        if (!seen.insert({e.u, e.v}).second) {
            throw ValidationError("duplicate edge (" + s.vertices[e.u] + "," + s.vertices[e.v] +
                                  ")");
        }
    }

    auto lookup = edge_lookup(s);
    std::vector<int> face_count(s.edges.size(), 0);
    for (const auto& f : s.faces) {
        int vs[3] = {f.a, f.b, f.c};
        for (int x : vs) {
            if (x < 0 || x >= n) throw ValidationError("face vertex out of range");
        }
        if (f.a == f.b || f.b == f.c || f.a == f.c) {
            throw ValidationError("face with repeated vertex " + s.vertices[f.a]);
        }
        Rational len[3];
        for (int k = 0; k < 3; ++k) {
            auto it = lookup.find(edge_key(vs[k], vs[(k + 1) % 3], n));
            if (it == lookup.end()) {
                throw ValidationError("face (" + s.vertices[f.a] + "," + s.vertices[f.b] + "," +
                                      s.vertices[f.c] + ") uses a missing edge");
            }
            ++face_count[it->second];
            len[k] = s.edges[it->second].length;
        }
        for (int k = 0; k < 3; ++k) {
            if (len[k] >= len[(k + 1) % 3] + len[(k + 2) % 3]) {
                throw ValidationError("face (" + s.vertices[f.a] + "," + s.vertices[f.b] + "," +
                                      s.vertices[f.c] + ") violates the strict triangle inequality");
            }
        }
    }
    for (size_t i = 0; i < s.edges.size(); ++i) {
        if (face_count[i] < 1 || face_count[i] > 2) {
            throw ValidationError("edge (" + s.vertices[s.edges[i].u] + "," +
                                  s.vertices[s.edges[i].v] + ") lies in " +
                                  std::to_string(face_count[i]) + " faces (want 1 or 2)");
        }
    }

    // connectivity of the edge graph
    if (n > 0) {
        std::vector<std::vector<int>> adj(n);
        for (const auto& e : s.edges) {
            adj[e.u].push_back(e.v);
            adj[e.v].push_back(e.u);
        }
        std::vector<char> vis(n, 0);
        std::vector<int> stack{0};
        vis[0] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : adj[v]) {
                if (!vis[w]) {
                    vis[w] = 1;
                    stack.push_back(w);
                }
            }
        }
        for (int i = 0; i < n; ++i) {
            if (!vis[i]) throw ValidationError("edge graph disconnected at vertex " + s.vertices[i]);
        }
    }

    surface_topology(s);  // throws on malformed boundary fans
    return s;
}

SurfaceTopology surface_topology(const TriSurface& s) {
    SurfaceTopology topo;
    const int n = static_cast<int>(s.vertices.size());
    auto lookup = edge_lookup(s);
    topo.edge_faces.assign(s.edges.size(), {});
    for (size_t fi = 0; fi < s.faces.size(); ++fi) {
        const auto& f = s.faces[fi];
        int vs[3] = {f.a, f.b, f.c};
        for (int k = 0; k < 3; ++k) {
            int ei = lookup.at(edge_key(vs[k], vs[(k + 1) % 3], n));
            topo.edge_faces[ei].push_back(static_cast<int>(fi));
        }
    }
    topo.edge_on_boundary.assign(s.edges.size(), 0);
    for (size_t ei = 0; ei < s.edges.size(); ++ei) {
        topo.edge_on_boundary[ei] = topo.edge_faces[ei].size() == 1;
    }

    // Boundary edge pairing through face fans at each vertex.
    std::vector<std::vector<std::pair<int, int>>> incident(n);  // vertex -> (edge, face fan rep)
    std::vector<std::vector<int>> vertex_faces(n);
    for (size_t fi = 0; fi < s.faces.size(); ++fi) {
        const auto& f = s.faces[fi];
        vertex_faces[f.a].push_back(static_cast<int>(fi));
        vertex_faces[f.b].push_back(static_cast<int>(fi));
        vertex_faces[f.c].push_back(static_cast<int>(fi));
    }

    // partner[ei][side] = paired boundary edge at endpoint side (0: u, 1: v)
    std::vector<std::array<int, 2>> partner(s.edges.size(), {-1, -1});
    for (int v = 0; v < n; ++v) {
        if (vertex_faces[v].empty()) continue;
        // union faces at v sharing an edge through v
        std::map<int, int> face_slot;
        for (int fi : vertex_faces[v]) {
            face_slot[fi] = static_cast<int>(face_slot.size());
        }
        ParityUnionFind uf(static_cast<int>(face_slot.size()));
        for (size_t ei = 0; ei < s.edges.size(); ++ei) {
            const auto& e = s.edges[ei];
            if (e.u != v && e.v != v) continue;
            if (topo.edge_faces[ei].size() == 2) {
                uf.merge(face_slot[topo.edge_faces[ei][0]], face_slot[topo.edge_faces[ei][1]], 0);
            }
        }
        // collect boundary edges at v per fan
        std::map<int, std::vector<int>> fan_boundary;
        for (size_t ei = 0; ei < s.edges.size(); ++ei) {
            const auto& e = s.edges[ei];
            if (e.u != v && e.v != v) continue;
            if (!topo.edge_on_boundary[ei]) continue;
            int rep = uf.find(face_slot[topo.edge_faces[ei][0]]).first;
            fan_boundary[rep].push_back(static_cast<int>(ei));
        }
        for (auto& [rep, list] : fan_boundary) {
            if (list.size() != 2) {
                throw ValidationError("boundary edges do not form disjoint cycles at vertex " +
                                      s.vertices[v]);
            }
            for (int k = 0; k < 2; ++k) {
                int ei = list[k];
                int other = list[1 - k];
                int side = (s.edges[ei].u == v) ? 0 : 1;
                if (partner[ei][side] != -1) {
                    throw ValidationError("boundary edges over-matched at vertex " + s.vertices[v]);
                }
                partner[ei][side] = other;
            }
        }
    }

    // Walk the pairings into cycles.
    std::vector<char> visited(s.edges.size(), 0);
    for (size_t start = 0; start < s.edges.size(); ++start) {
        if (!topo.edge_on_boundary[start] || visited[start]) continue;
        std::vector<int> loop_edges;
        std::vector<int> loop_vertices;
        int ei = static_cast<int>(start);
        int enter_vertex = s.edges[start].u;
        while (true) {
            visited[ei] = 1;
            loop_edges.push_back(ei);
            int exit_vertex = (s.edges[ei].u == enter_vertex) ? s.edges[ei].v : s.edges[ei].u;
            loop_vertices.push_back(enter_vertex);
            int side = (s.edges[ei].u == exit_vertex) ? 0 : 1;
            int next = partner[ei][side];
            if (next < 0) throw ValidationError("open boundary chain at vertex " +
                                                s.vertices[exit_vertex]);
            enter_vertex = exit_vertex;
            ei = next;
            if (ei == static_cast<int>(start) && enter_vertex == s.edges[start].u) break;
            if (visited[ei] && ei != static_cast<int>(start)) {
                throw ValidationError("boundary walk revisits an edge unexpectedly");
            }
            if (ei == static_cast<int>(start)) break;
        }
        topo.boundary_loop_edges.push_back(std::move(loop_edges));
        topo.boundary_loops.push_back(std::move(loop_vertices));
    }
    return topo;
}

SurfaceInvariants invariants(const TriSurface& s) {
    auto topo = surface_topology(s);
    SurfaceInvariants inv;
    inv.euler_char = static_cast<int>(s.vertices.size()) - static_cast<int>(s.edges.size()) +
                     static_cast<int>(s.faces.size());
    inv.boundary_count = static_cast<int>(topo.boundary_loops.size());
    inv.connectivity = 2 - inv.euler_char;
    inv.reduced_connectivity = inv.connectivity - inv.boundary_count;

    // orientation propagation over faces sharing interior edges
    const int n = static_cast<int>(s.vertices.size());
    auto lookup = edge_lookup(s);
    auto traverses_forward = [&](const TriSurface::Face& f, int u, int v) {
        // does the face traverse directed edge u->v?
        int vs[3] = {f.a, f.b, f.c};
        for (int k = 0; k < 3; ++k) {
            if (vs[k] == u && vs[(k + 1) % 3] == v) return true;
        }
        return false;
    };
    ParityUnionFind uf(static_cast<int>(s.faces.size()));
    inv.orientable = true;
    for (size_t ei = 0; ei < s.edges.size(); ++ei) {
        if (topo.edge_faces[ei].size() != 2) continue;
        int f1 = topo.edge_faces[ei][0];
        int f2 = topo.edge_faces[ei][1];
        bool d1 = traverses_forward(s.faces[f1], s.edges[ei].u, s.edges[ei].v);
        bool d2 = traverses_forward(s.faces[f2], s.edges[ei].u, s.edges[ei].v);
        // consistent orientations traverse a shared edge in opposite directions
        char rel = (d1 == d2) ? 1 : 0;
        if (!uf.merge(f1, f2, rel)) {
            inv.orientable = false;
        }
    }
    (void)lookup;
    (void)n;
    return inv;
}

TriSurface subdivide(const TriSurface& s) {
    TriSurface out;
    out.vertices = s.vertices;
    const int n = static_cast<int>(s.vertices.size());
    auto lookup = edge_lookup(s);

    std::vector<int> midpoint(s.edges.size());
    for (size_t ei = 0; ei < s.edges.size(); ++ei) {
        const auto& e = s.edges[ei];
        const std::string& a = s.vertices[e.u];
        const std::string& b = s.vertices[e.v];
        std::string label = (a < b) ? "(" + a + "+" + b + ")" : "(" + b + "+" + a + ")";
        midpoint[ei] = static_cast<int>(out.vertices.size());
        out.vertices.push_back(label);
        out.edges.push_back({e.u, midpoint[ei], e.length / 2});
        out.edges.push_back({e.v, midpoint[ei], e.length / 2});
    }
    for (const auto& f : s.faces) {
        int vs[3] = {f.a, f.b, f.c};
        int mid[3];
        Rational opp[3];
        for (int k = 0; k < 3; ++k) {
            int ei = lookup.at(edge_key(vs[k], vs[(k + 1) % 3], n));
            mid[k] = midpoint[ei];
        }
        for (int k = 0; k < 3; ++k) {
            int ei = lookup.at(edge_key(vs[(k + 1) % 3], vs[(k + 2) % 3], n));
            opp[k] = s.edges[ei].length;  // edge opposite to corner k
        }
        // medial triangle edges: |m_k m_{k+1}| parallel to the side through
        // corner k+2... in the flat model each medial edge is half the side
        // it is parallel to, which is the side avoiding both midpoints.
        // m[0] on (v0,v1), m[1] on (v1,v2): parallel to (v0,v2) = opp[1]
        auto medial_len = [&](int i, int j) -> Rational {
            // side avoiding both: the one through the shared corner
            int shared = (i == 0 && j == 1) ? 1 : (i == 1 && j == 2) ? 2 : 0;
            return opp[(shared + 2) % 3] / 2;
        };
        Rational m01 = medial_len(0, 1), m12 = medial_len(1, 2), m02 = medial_len(0, 2);
        auto add_edge = [&](int u, int v, const Rational& len) {
            if (u > v) std::swap(u, v);
            out.edges.push_back({u, v, len});
        };
        add_edge(mid[0], mid[1], m01);
        add_edge(mid[1], mid[2], m12);
        add_edge(mid[0], mid[2], m02);
        out.faces.push_back({vs[0], mid[0], mid[2]});
        out.faces.push_back({vs[1], mid[1], mid[0]});
        out.faces.push_back({vs[2], mid[2], mid[1]});
        out.faces.push_back({mid[0], mid[1], mid[2]});
    }
    return out;
}

TriSurface split_edge(const TriSurface& s, int edge, const Rational& t, std::string label) {
    if (edge < 0 || edge >= static_cast<int>(s.edges.size())) {
        throw ValidationError("edge index out of range");
    }
    if (t <= 0 || t >= 1) throw ValidationError("split fraction out of (0,1)");
    const auto& e = s.edges[edge];
    if (label.empty()) {
        label = "(" + s.vertices[e.u] + "+" + s.vertices[e.v] + ")";
        while (s.find_vertex(label)) label += "'";
    } else if (s.find_vertex(label)) {
        throw ValidationError("split label '" + label + "' already in use");
    }

    TriSurface out;
    out.vertices = s.vertices;
    const int m = static_cast<int>(out.vertices.size());
    out.vertices.push_back(label);
    Rational lu = e.length * t;
    Rational lv = e.length - lu;
    for (size_t i = 0; i < s.edges.size(); ++i) {
        if (static_cast<int>(i) != edge) out.edges.push_back(s.edges[i]);
    }
    out.edges.push_back({e.u, m, lu});
    out.edges.push_back({e.v, m, lv});

    auto side_len = [&](int a, int b) {
        int ei = s.edge_index(a, b);
        if (ei < 0) throw ValidationError("face uses a missing edge");
        return s.edges[ei].length;
    };
    for (const auto& f : s.faces) {
        int vs[3] = {f.a, f.b, f.c};
        int pos = -1;
        for (int k = 0; k < 3; ++k) {
            int p = vs[k], q = vs[(k + 1) % 3];
            if ((p == e.u && q == e.v) || (p == e.v && q == e.u)) pos = k;
        }
        if (pos < 0) {
            out.faces.push_back(f);
            continue;
        }
        int p = vs[pos], q = vs[(pos + 1) % 3], w = vs[(pos + 2) % 3];
        Rational lp = (p == e.u) ? lu : lv;
        Rational lq = e.length - lp;
        Rational wp = side_len(w, p), wq = side_len(w, q);
        // cevian from w to the split point: admissible in both sub-triangles
        Rational dp = wp - lp;
        if (dp < 0) dp = -dp;
        Rational dq = wq - lq;
        if (dq < 0) dq = -dq;
        Rational lo = dp > dq ? dp : dq;
        Rational hi = wp + lp < wq + lq ? wp + lp : wq + lq;
        Rational cev = pick_length_interval(lo, hi);
        int wm = out.edge_index(std::min(w, m), std::max(w, m));
        if (wm < 0) {
            out.edges.push_back({std::min(w, m), std::max(w, m), cev});
        }
        out.faces.push_back({p, m, w});
        out.faces.push_back({m, q, w});
    }
    return out;
}

std::vector<Rational> mesh_distances(const TriSurface& s, int source) {
    const int n = static_cast<int>(s.vertices.size());
    std::vector<std::vector<std::pair<int, Rational>>> adj(n);
    for (const auto& e : s.edges) {
        adj[e.u].emplace_back(e.v, e.length);
        adj[e.v].emplace_back(e.u, e.length);
    }
    std::vector<Rational> dist(n, Rational(-1));
    using Item = std::pair<Rational, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
    dist[source] = 0;
    heap.push({0, source});
    while (!heap.empty()) {
        auto [d, v] = heap.top();
        heap.pop();
        if (dist[v] != d) continue;
        for (const auto& [w, len] : adj[v]) {
            Rational nd = d + len;
            if (dist[w] < 0 || nd < dist[w]) {
                dist[w] = nd;
                heap.push({nd, w});
            }
        }
    }
    return dist;
}

GeodesicMetric geodesic_metric(const TriSurface& s, int refine) {
    if (refine < 0) throw ValidationError("negative refine level");
    TriSurface mesh = s;
    for (int r = 0; r < refine; ++r) mesh = subdivide(mesh);
    const int n = static_cast<int>(mesh.vertices.size());
    std::vector<std::vector<Rational>> dist(n);
    for (int i = 0; i < n; ++i) {
        dist[i] = mesh_distances(mesh, i);
        for (const auto& d : dist[i]) {
            if (d < 0) throw ValidationError("mesh is disconnected");
        }
    }
    Rational h = 0;
    for (const auto& e : mesh.edges) {
        if (e.length > h) h = e.length;
    }
    auto space = FiniteMetricSpace::create_unchecked(mesh.vertices, std::move(dist));
    return {std::move(space), h, std::move(mesh)};
}

DoubledSurface double_surface(const TriSurface& input) {
    TriSurface s = input;
    auto topo = surface_topology(s);
    if (topo.boundary_loops.empty()) {
        throw ValidationError("double of a closed surface is undefined");
    }
    // An interior edge with both endpoints on the boundary would double
    // into a parallel edge with the same endpoints; split such edges first.
    for (bool again = true; again;) {
        again = false;
        std::vector<char> on_bd(s.vertices.size(), 0);
        for (const auto& loop : topo.boundary_loops) {
            for (int v : loop) on_bd[v] = 1;
        }
        for (size_t ei = 0; ei < s.edges.size(); ++ei) {
            if (topo.edge_on_boundary[ei]) continue;
            if (on_bd[s.edges[ei].u] && on_bd[s.edges[ei].v]) {
                s = split_edge(s, static_cast<int>(ei), Rational(1, 2));
                topo = surface_topology(s);
                again = true;
                break;
            }
        }
    }
    std::vector<char> on_boundary(s.vertices.size(), 0);
    for (const auto& loop : topo.boundary_loops) {
        for (int v : loop) on_boundary[v] = 1;
    }

    DoubledSurface out;
    out.surface.vertices = s.vertices;
    std::set<std::string> used(s.vertices.begin(), s.vertices.end());
    std::vector<int> twin(s.vertices.size());
    for (size_t v = 0; v < s.vertices.size(); ++v) {
        if (on_boundary[v]) {
            twin[v] = static_cast<int>(v);
        } else {
            std::string label = s.vertices[v] + "~";
            while (used.count(label)) label += "~";
            used.insert(label);
            twin[v] = static_cast<int>(out.surface.vertices.size());
            out.surface.vertices.push_back(label);
        }
    }
    out.surface.edges = s.edges;
    for (size_t ei = 0; ei < s.edges.size(); ++ei) {
        if (topo.edge_on_boundary[ei]) continue;
        int u = twin[s.edges[ei].u];
        int v = twin[s.edges[ei].v];
        if (u > v) std::swap(u, v);
        out.surface.edges.push_back({u, v, s.edges[ei].length});
    }
    out.surface.faces = s.faces;
    for (const auto& f : s.faces) {
        out.surface.faces.push_back({twin[f.a], twin[f.c], twin[f.b]});  // reversed copy
    }
    for (size_t v = 0; v < s.vertices.size(); ++v) {
        const std::string& plus = s.vertices[v];
        const std::string& minus = out.surface.vertices[twin[v]];
        out.tau_plus[plus] = plus;
        out.tau_plus[minus] = plus;
        out.tau_minus[plus] = minus;
        out.tau_minus[minus] = minus;
    }
    out.surface = make_surface(std::move(out.surface.vertices), std::move(out.surface.edges),
                               std::move(out.surface.faces));
    return out;
}

namespace {

// Is the edge set `chain` a Z/2 boundary of faces?
bool null_homologous(const TriSurface& s, const SurfaceTopology& topo,
                     const std::vector<char>& chain) {
    const int ground = static_cast<int>(s.faces.size());
    ParityUnionFind uf(ground + 1);
    for (size_t ei = 0; ei < s.edges.size(); ++ei) {
        char c = chain[ei];
        const auto& fs = topo.edge_faces[ei];
        bool ok = true;
        if (fs.size() == 2) {
            ok = uf.merge(fs[0], fs[1], c);
        } else if (fs.size() == 1) {
            ok = uf.merge(fs[0], ground, c);
        } else if (c) {
            return false;
        }
        if (!ok) return false;
    }
    return true;
}

}  // namespace

std::optional<Rational> essential_cycle_diagnostic(const TriSurface& s) {
    auto topo_s = surface_topology(s);
    TriSurface closed = topo_s.boundary_loops.empty() ? s : double_surface(s).surface;
    auto topo = surface_topology(closed);
    const int n = static_cast<int>(closed.vertices.size());
    auto lookup = edge_lookup(closed);

    std::optional<Rational> best;
    std::vector<char> chain(closed.edges.size());
    for (int src = 0; src < n; ++src) {
        auto dist = mesh_distances(closed, src);
        // parent edge of each vertex in a deterministic shortest-path tree
        std::vector<int> parent_edge(n, -1);
        std::vector<int> parent(n, -1);
        for (size_t ei = 0; ei < closed.edges.size(); ++ei) {
            const auto& e = closed.edges[ei];
            auto relax = [&](int child, int par) {
                if (child == src) return;
                if (dist[par] + e.length == dist[child] && parent_edge[child] < 0) {
                    parent_edge[child] = static_cast<int>(ei);
                    parent[child] = par;
                }
            };
            relax(e.u, e.v);
            relax(e.v, e.u);
        }
        for (size_t ei = 0; ei < closed.edges.size(); ++ei) {
            const auto& e = closed.edges[ei];
            if (parent_edge[e.u] == static_cast<int>(ei) ||
                parent_edge[e.v] == static_cast<int>(ei)) {
                continue;  // tree edge
            }
            Rational len = dist[e.u] + dist[e.v] + e.length;
            if (best && len >= *best) continue;
            std::fill(chain.begin(), chain.end(), 0);
            chain[ei] ^= 1;
            for (int v : {e.u, e.v}) {
                int w = v;
                while (w != src) {
                    chain[parent_edge[w]] ^= 1;
                    w = parent[w];
                }
            }
            bool empty = std::all_of(chain.begin(), chain.end(), [](char c) { return !c; });
            if (empty) continue;
            if (!null_homologous(closed, topo, chain)) best = len;
        }
    }
    (void)lookup;
    return best;
}

}  // namespace cactoidlab
