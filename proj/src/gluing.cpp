#include "cactoidlab/gluing.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "cactoidlab/mesh_builders.hpp"

namespace cactoidlab {

int GluingHistory::k() const {
    int count = 0;
    for (const auto& s : steps) {
        if (s.kind == GluingStep::Kind::two_point) ++count;
    }
    return count;
}

int GluingHistory::k0() const {
    int count = 0;
    for (const auto& s : steps) {
        if (s.kind == GluingStep::Kind::two_point && s.boundary_flag) ++count;
    }
    return count;
}

QuotientResult two_point_identification(const FiniteMetricSpace& x, int a, int b) {
    const int n = x.size();
    if (a < 0 || a >= n || b < 0 || b >= n) throw ValidationError("point index out of range");
    if (a == b) throw ValidationError("identification points must be distinct");

    std::vector<std::vector<Rational>> d(n, std::vector<Rational>(n));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            Rational best = x.dist(i, j);
            Rational via1 = x.dist(i, a) + x.dist(b, j);
            Rational via2 = x.dist(i, b) + x.dist(a, j);
            if (via1 < best) best = via1;
            if (via2 < best) best = via2;
            d[i][j] = best;
        }
    }

    // group points at quotient distance zero
    std::vector<int> rep(n);
    std::iota(rep.begin(), rep.end(), 0);
    auto find = [&](int v) {
        while (rep[v] != v) v = rep[v] = rep[rep[v]];
        return v;
    };
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (d[i][j] == 0) rep[std::max(find(i), find(j))] = std::min(find(i), find(j));
        }
    }

    std::vector<int> class_of(n, -1);
    std::vector<int> reps;
    for (int i = 0; i < n; ++i) {
        if (find(i) == i) {
            class_of[i] = static_cast<int>(reps.size());
            reps.push_back(i);
        }
    }
    for (int i = 0; i < n; ++i) class_of[i] = class_of[find(i)];

    QuotientResult out;
    for (int i = 0; i < n; ++i) {
        int c = class_of[i];
        while (static_cast<int>(out.zero_classes.size()) <= c) out.zero_classes.push_back({});
        out.zero_classes[c].push_back(x.label(i));
    }
    for (size_t c = 0; c < out.zero_classes.size(); ++c) {
        if (out.zero_classes[c].size() > 1 && static_cast<int>(c) != class_of[a]) {
            out.extra_collapse = true;
        }
    }
    if (out.zero_classes[class_of[a]].size() > 2) out.extra_collapse = true;

    std::vector<std::string> labels;
    for (int r : reps) labels.push_back(x.label(r));
    const int m = static_cast<int>(reps.size());
    std::vector<std::vector<Rational>> qd(m, std::vector<Rational>(m));
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) qd[i][j] = d[reps[i]][reps[j]];
    }
    out.space = FiniteMetricSpace::create(std::move(labels), std::move(qd));
    auto src = std::make_shared<FiniteMetricSpace>(x);
    auto dst = std::make_shared<FiniteMetricSpace>(out.space);
    out.projection = PointMap{src, dst, class_of};
    return out;
}

WedgeResult wedge_sum(const FiniteMetricSpace& x, int p, const FiniteMetricSpace& y, int q) {
    if (p < 0 || p >= x.size() || q < 0 || q >= y.size()) {
        throw ValidationError("wedge point index out of range");
    }
    std::vector<std::string> labels = x.labels();
    std::set<std::string> used(labels.begin(), labels.end());
    std::vector<int> y_pos(y.size());
    for (int j = 0; j < y.size(); ++j) {
        if (j == q) {
            y_pos[j] = p;
            continue;
        }
        std::string l = y.label(j);
        while (used.count(l)) l += "'";
        used.insert(l);
        y_pos[j] = static_cast<int>(labels.size());
        labels.push_back(l);
    }
    const int m = static_cast<int>(labels.size());
    std::vector<std::vector<Rational>> d(m, std::vector<Rational>(m, 0));
    for (int i = 0; i < x.size(); ++i) {
        for (int j = 0; j < x.size(); ++j) d[i][j] = x.dist(i, j);
    }
    for (int i = 0; i < y.size(); ++i) {
        for (int j = 0; j < y.size(); ++j) d[y_pos[i]][y_pos[j]] = y.dist(i, j);
    }
    for (int i = 0; i < x.size(); ++i) {
        for (int j = 0; j < y.size(); ++j) {
            if (y_pos[j] < x.size()) continue;  // wedge point handled above
            Rational cross = x.dist(i, p) + y.dist(q, j);
            d[i][y_pos[j]] = cross;
            d[y_pos[j]][i] = cross;
        }
    }
    WedgeResult out;
    out.space = FiniteMetricSpace::create(std::move(labels), std::move(d));
    auto xs = std::make_shared<FiniteMetricSpace>(x);
    auto ys = std::make_shared<FiniteMetricSpace>(y);
    auto zs = std::make_shared<FiniteMetricSpace>(out.space);
    std::vector<int> ix(x.size());
    std::iota(ix.begin(), ix.end(), 0);
    out.include_x = PointMap{xs, zs, std::move(ix)};
    out.include_y = PointMap{ys, zs, y_pos};
    return out;
}

namespace {

struct ArcWalk {
    std::vector<int> vertices;   // path
    std::vector<Rational> cum;   // cumulative length from start
};

// Locates arc (vertex label path) in s and returns the walk with cumulative
// lengths; checks each step is a boundary edge.
ArcWalk walk_arc(const TriSurface& s, const std::vector<std::string>& arc) {
    if (arc.size() < 2) throw ValidationError("arc needs at least two vertices");
    auto topo = surface_topology(s);
    ArcWalk w;
    Rational cum = 0;
    for (size_t i = 0; i < arc.size(); ++i) {
        int v = s.vertex_index(arc[i]);
        w.vertices.push_back(v);
        if (i > 0) {
            int ei = s.edge_index(w.vertices[i - 1], v);
            if (ei < 0) throw ValidationError("arc step (" + arc[i - 1] + "," + arc[i] +
                                              ") is not an edge");
            if (!topo.edge_on_boundary[ei]) {
                throw ValidationError("arc edge (" + arc[i - 1] + "," + arc[i] +
                                      ") is not on the boundary");
            }
            cum += s.edges[ei].length;
        }
        w.cum.push_back(cum);
    }
    return w;
}

// Splits edges along the arc so that every target cumulative length lands
// on a vertex; returns the updated surface and the refined label path.
std::pair<TriSurface, std::vector<std::string>> refine_arc(
    TriSurface s, std::vector<std::string> arc, const std::vector<Rational>& targets) {
    for (const Rational& t : targets) {
        auto w = walk_arc(s, arc);
        size_t i = 0;
        while (i < w.cum.size() && w.cum[i] < t) ++i;
        if (i < w.cum.size() && w.cum[i] == t) continue;  // already a vertex
        if (i == 0 || i >= w.cum.size()) throw ValidationError("arc breakpoint out of range");
        int u = w.vertices[i - 1], v = w.vertices[i];
        int ei = s.edge_index(u, v);
        Rational seg = s.edges[ei].length;
        Rational frac = (t - w.cum[i - 1]) / seg;
        if (s.edges[ei].u != std::min(u, v)) throw ValidationError("edge orientation broken");
        // split fraction is measured from the stored u end of the edge
        if (s.edges[ei].u == v) frac = 1 - frac;
        s = split_edge(s, ei, frac);
        std::string mid = s.vertices.back();
        arc.insert(arc.begin() + static_cast<long>(i), mid);
    }
    return {std::move(s), std::move(arc)};
}

}  // namespace

namespace {

// The two boundary neighbours of v, ordered by label; v must occur on
// exactly one boundary loop exactly once.
std::pair<std::string, std::string> boundary_neighbours(const TriSurface& s,
                                                        const SurfaceTopology& topo, int v) {
    std::vector<int> nb;
    for (const auto& loop : topo.boundary_loops) {
        const int L = static_cast<int>(loop.size());
        for (int i = 0; i < L; ++i) {
            if (loop[i] == v) {
                nb.push_back(loop[(i + L - 1) % L]);
                nb.push_back(loop[(i + 1) % L]);
            }
        }
    }
    if (nb.size() != 2) {
        throw ValidationError("vertex '" + s.vertices[v] +
                              "' is not a plain boundary vertex");
    }
    std::string a = s.vertices[nb[0]], b = s.vertices[nb[1]];
    if (b < a) std::swap(a, b);
    return {a, b};
}

}  // namespace

std::pair<TriSurface, std::vector<std::string>> boundary_arc_centered(
    const TriSurface& s, const std::string& vlabel, const Rational& len) {
    if (len <= 0) throw ValidationError("non-positive arc length");
    TriSurface cur = s;
    {
        auto topo = surface_topology(cur);
        int v = cur.vertex_index(vlabel);
        Rational total = -1;
        for (size_t l = 0; l < topo.boundary_loops.size(); ++l) {
            for (int w : topo.boundary_loops[l]) {
                if (w == v) {
                    total = 0;
                    for (int e : topo.boundary_loop_edges[l]) total += cur.edges[e].length;
                }
            }
        }
        if (total < 0) throw ValidationError("vertex '" + vlabel + "' is not on the boundary");
        if (len >= total) throw ValidationError("arc longer than its boundary loop");
    }
    std::vector<std::string> half[2];
    for (int dir = 0; dir < 2; ++dir) {
        std::vector<std::string> path{vlabel};
        std::string prev = "";
        Rational need = len / 2;
        while (need > 0) {
            auto topo = surface_topology(cur);
            int at = cur.vertex_index(path.back());
            auto [n0, n1] = boundary_neighbours(cur, topo, at);
            std::string next;
            if (prev.empty()) {
                next = (dir == 0) ? n0 : n1;
            } else {
                next = (n0 == prev) ? n1 : n0;
            }
            int ei = cur.edge_index(at, cur.vertex_index(next));
            Rational seg = cur.edges[ei].length;
            if (seg <= need) {
                need -= seg;
                prev = path.back();
                path.push_back(next);
                continue;
            }
            Rational frac = need / seg;
            if (cur.edges[ei].u != at) frac = 1 - frac;
            cur = split_edge(cur, ei, frac);
            prev = path.back();
            path.push_back(cur.vertices.back());
            need = 0;
        }
        half[dir] = std::move(path);
    }
    std::vector<std::string> arc(half[1].rbegin(), half[1].rend());
    arc.insert(arc.end(), half[0].begin() + 1, half[0].end());
    return {std::move(cur), std::move(arc)};
}

TriSurface glue_boundary_arcs(const TriSurface& s, const std::vector<std::string>& arc1_in,
                              const std::vector<std::string>& arc2_in) {
    TriSurface cur = s;
    auto w1 = walk_arc(cur, arc1_in);
    auto w2 = walk_arc(cur, arc2_in);
    if (w1.cum.back() != w2.cum.back()) {
        throw ValidationError("arcs have different total lengths");
    }
    // interiors must be disjoint
    std::set<int> i1(w1.vertices.begin() + 1, w1.vertices.end() - 1);
    for (size_t i = 0; i < w2.vertices.size(); ++i) {
        bool interior2 = i > 0 && i + 1 < w2.vertices.size();
        if (i1.count(w2.vertices[i])) {
            throw ValidationError("arcs share an interior vertex");
        }
        if (interior2 &&
            (w2.vertices[i] == w1.vertices.front() || w2.vertices[i] == w1.vertices.back())) {
            throw ValidationError("arcs share an interior vertex");
        }
    }

    // align breakpoints
    std::vector<Rational> targets;
    for (const auto& c : w1.cum) targets.push_back(c);
    for (const auto& c : w2.cum) targets.push_back(c);
    std::sort(targets.begin(), targets.end());
    targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
    auto [s1, arc1] = refine_arc(std::move(cur), arc1_in, targets);
    auto [s2, arc2] = refine_arc(std::move(s1), arc2_in, targets);
    cur = std::move(s2);

    auto f1 = walk_arc(cur, arc1);
    auto f2 = walk_arc(cur, arc2);
    if (f1.vertices.size() != f2.vertices.size()) {
        throw ValidationError("arc refinement mismatch");
    }

    // identify f2[i] with f1[i]
    const int n = static_cast<int>(cur.vertices.size());
    std::vector<int> remap(n);
    std::iota(remap.begin(), remap.end(), 0);
    for (size_t i = 0; i < f1.vertices.size(); ++i) remap[f2.vertices[i]] = f1.vertices[i];

    std::vector<std::string> vertices;
    std::vector<int> newindex(n, -1);
    for (int v = 0; v < n; ++v) {
        if (remap[v] != v) continue;
        newindex[v] = static_cast<int>(vertices.size());
        vertices.push_back(cur.vertices[v]);
    }
    auto target = [&](int v) { return newindex[remap[v]]; };

    std::map<std::pair<int, int>, Rational> edges;
    for (const auto& e : cur.edges) {
        int u = target(e.u), v = target(e.v);
        if (u == v) throw ValidationError("gluing collapses an edge");
        if (u > v) std::swap(u, v);
        auto it = edges.find({u, v});
        if (it == edges.end()) {
            edges[{u, v}] = e.length;
        } else if (it->second != e.length) {
            throw ValidationError("gluing merges edges of different lengths");
        }
    }
    std::vector<TriSurface::Edge> edge_list;
    for (const auto& [key, len] : edges) edge_list.push_back({key.first, key.second, len});
    std::vector<TriSurface::Face> faces;
    for (const auto& f : cur.faces) faces.push_back({target(f.a), target(f.b), target(f.c)});
    return make_surface(std::move(vertices), std::move(edge_list), std::move(faces));
}

std::pair<TriSurface, std::vector<std::string>> truncate_vertex(const TriSurface& s,
                                                                const std::string& vlabel,
                                                                int n) {
    if (n < 1) throw ValidationError("scale index must be positive");
    const int v = s.vertex_index(vlabel);
    auto topo = surface_topology(s);

    // neighbour cycle around v from its faces
    std::map<int, std::vector<int>> adj;  // neighbour -> adjacent neighbours
    int face_count = 0;
    for (const auto& f : s.faces) {
        int vs[3] = {f.a, f.b, f.c};
        if (vs[0] != v && vs[1] != v && vs[2] != v) continue;
        ++face_count;
        int others[2], k = 0;
        for (int x : vs) {
            if (x != v) others[k++] = x;
        }
        adj[others[0]].push_back(others[1]);
        adj[others[1]].push_back(others[0]);
    }
    if (face_count < 3) throw ValidationError("vertex '" + vlabel + "' has too few faces");
    for (const auto& [x, nb] : adj) {
        if (nb.size() != 2) throw ValidationError("vertex '" + vlabel + "' is not interior");
    }
    for (size_t ei = 0; ei < s.edges.size(); ++ei) {
        if ((s.edges[ei].u == v || s.edges[ei].v == v) && topo.edge_faces[ei].size() != 2) {
            throw ValidationError("vertex '" + vlabel + "' is not interior");
        }
    }

    // deterministic cycle: start at smallest-labelled neighbour, head to the
    // smaller of its two companions
    int start = -1;
    for (const auto& [x, nb] : adj) {
        if (start < 0 || s.vertices[x] < s.vertices[start]) start = x;
    }
    std::vector<int> cycle{start};
    int head = (s.vertices[adj[start][0]] < s.vertices[adj[start][1]]) ? adj[start][0]
                                                                       : adj[start][1];
    while (head != start) {
        cycle.push_back(head);
        int prev = cycle[cycle.size() - 2];
        head = (adj[head][0] == prev) ? adj[head][1] : adj[head][0];
    }
    const int m = static_cast<int>(cycle.size());
    if (m != face_count) throw ValidationError("vertex '" + vlabel + "' has a split fan");

    auto spoke_len = [&](int x) { return s.edges[s.edge_index(v, x)].length; };
    auto side_len = [&](int a, int b) { return s.edges[s.edge_index(a, b)].length; };

    // truncation radius: safely below every incident slack, scaled by 1/n
    // so the detour around the hole shrinks with the schedule
    Rational cap = Rational(1, 4);
    for (int i = 0; i < m; ++i) {
        int x = cycle[i], y = cycle[(i + 1) % m];
        Rational lx = spoke_len(x), ly = spoke_len(y), e = side_len(x, y);
        const Rational slacks[] = {lx, ly, Rational(lx + ly - e), Rational(lx + e - ly),
                                   Rational(ly + e - lx)};
        for (const Rational& slack : slacks) {
            if (slack / 4 < cap) cap = slack / 4;
        }
    }
    const Rational rad = cap / n;
    const Rational ring = rad / 2;

    TriSurface out;
    out.vertices = s.vertices;
    std::vector<int> ringv(m);
    std::vector<std::string> ring_labels(m);
    for (int i = 0; i < m; ++i) {
        std::string l = "(" + vlabel + ">" + s.vertices[cycle[i]] + ")";
        while (std::find(out.vertices.begin(), out.vertices.end(), l) != out.vertices.end()) {
            l += "'";
        }
        ringv[i] = static_cast<int>(out.vertices.size());
        out.vertices.push_back(l);
        ring_labels[i] = l;
    }
    for (size_t ei = 0; ei < s.edges.size(); ++ei) {
        const auto& e = s.edges[ei];
        if (e.u == v || e.v == v) continue;
        out.edges.push_back(e);
    }
    auto add_edge = [&](int a, int b, const Rational& len) {
        if (a > b) std::swap(a, b);
        out.edges.push_back({a, b, len});
    };
    std::vector<Rational> diag(m);
    for (int i = 0; i < m; ++i) {
        int x = cycle[i], y = cycle[(i + 1) % m];
        Rational lx = spoke_len(x), ly = spoke_len(y), e = side_len(x, y);
        add_edge(ringv[i], x, lx - rad);
        add_edge(ringv[i], ringv[(i + 1) % m], ring);
        // diagonal ring_i -> y, admissible in both new triangles
        Rational lo1 = e - (lx - rad);
        if (lo1 < 0) lo1 = -lo1;
        Rational hi1 = e + lx - rad;
        Rational lo2 = ly - rad - ring;
        Rational hi2 = ly - rad + ring;
        Rational lo = std::max(lo1, lo2), hi = std::min(hi1, hi2);
        diag[i] = pick_length(lo, hi);
        add_edge(ringv[i], y, diag[i]);
    }
    for (const auto& f : s.faces) {
        int vs[3] = {f.a, f.b, f.c};
        if (vs[0] != v && vs[1] != v && vs[2] != v) out.faces.push_back(f);
    }
    for (int i = 0; i < m; ++i) {
        int x = cycle[i], y = cycle[(i + 1) % m];
        out.faces.push_back({ringv[i], x, y});
        out.faces.push_back({ringv[i], y, ringv[(i + 1) % m]});
    }
    // drop the now-isolated vertex v
    out.vertices.erase(out.vertices.begin() + v);
    auto shift = [&](int& w) {
        if (w > v) --w;
    };
    for (auto& e : out.edges) {
        shift(e.u);
        shift(e.v);
    }
    for (auto& f : out.faces) {
        shift(f.a);
        shift(f.b);
        shift(f.c);
    }
    return {std::move(out), std::move(ring_labels)};
}

TriSurface bridge_rings(const TriSurface& s, const std::vector<std::string>& ring_a,
                        const std::vector<std::string>& ring_b, bool flip) {
    if (ring_a.size() < 3 || ring_b.size() < 3) throw ValidationError("ring too short");
    std::vector<std::string> rb = ring_b;
    if (flip) std::reverse(rb.begin(), rb.end());
    std::vector<int> A, B;
    for (const auto& l : ring_a) A.push_back(s.vertex_index(l));
    for (const auto& l : rb) B.push_back(s.vertex_index(l));
    const int p = static_cast<int>(A.size()), q = static_cast<int>(B.size());

    Rational rung = 0;
    for (int i = 0; i < p; ++i) {
        int ei = s.edge_index(A[i], A[(i + 1) % p]);
        if (ei < 0) throw ValidationError("ring step is not an edge");
        rung = std::max(rung, s.edges[ei].length);
    }
    for (int j = 0; j < q; ++j) {
        int ei = s.edge_index(B[j], B[(j + 1) % q]);
        if (ei < 0) throw ValidationError("ring step is not an edge");
        rung = std::max(rung, s.edges[ei].length);
    }

    TriSurface out = s;
    std::set<std::pair<int, int>> rungs;
    auto add_rung = [&](int a, int b) {
        int u = std::min(a, b), v = std::max(a, b);
        if (rungs.insert({u, v}).second) out.edges.push_back({u, v, rung});
    };
    int i = 0, j = 0;
    while (i < p || j < q) {
        bool advance_a = j == q || (i < p && (i + 1) * q <= (j + 1) * p);
        if (advance_a) {
            out.faces.push_back({A[i % p], A[(i + 1) % p], B[j % q]});
            add_rung(A[i % p], B[j % q]);
            add_rung(A[(i + 1) % p], B[j % q]);
            ++i;
        } else {
            out.faces.push_back({A[i % p], B[(j + 1) % q], B[j % q]});
            add_rung(A[i % p], B[j % q]);
            add_rung(A[i % p], B[(j + 1) % q]);
            ++j;
        }
    }
    return make_surface(std::move(out.vertices), std::move(out.edges), std::move(out.faces));
}

namespace {

TriSurface boundary_strip(const TriSurface& s0, const std::string& la, const std::string& lb,
                          bool flip, int n) {
    auto find_neighbours = [](const TriSurface& s, const SurfaceTopology& topo,
                              int v) -> std::pair<int, int> {
        for (size_t l = 0; l < topo.boundary_loops.size(); ++l) {
            const auto& loop = topo.boundary_loops[l];
            for (size_t i = 0; i < loop.size(); ++i) {
                if (loop[i] == v) {
                    int L = static_cast<int>(loop.size());
                    return {loop[(i + L - 1) % L], loop[(i + 1) % L]};
                }
            }
        }
        throw ValidationError("vertex '" + s.vertices[v] + "' is not on the boundary");
    };

    // shrink the four incident boundary edges to eps ~ 1/n first, so the
    // strip height (the built distance between the identified points)
    // vanishes with the scale index
    TriSurface s = s0;
    {
        auto topo0 = surface_topology(s);
        int a0 = s.vertex_index(la), b0 = s.vertex_index(lb);
        auto [x0, y0] = find_neighbours(s, topo0, a0);
        auto [p0, q0] = find_neighbours(s, topo0, b0);
        auto len0 = [&](int u, int v) { return s.edges[s.edge_index(u, v)].length; };
        Rational eps = std::min({len0(x0, a0), len0(a0, y0), len0(p0, b0), len0(b0, q0),
                                 Rational(1, n)}) /
                       2;
        for (const std::string& center : {la, lb}) {
            for (int side = 0; side < 2; ++side) {
                auto topo = surface_topology(s);
                int c = s.vertex_index(center);
                auto [prev, nxt] = find_neighbours(s, topo, c);
                int other = side == 0 ? prev : nxt;
                int ei = s.edge_index(std::min(c, other), std::max(c, other));
                const auto& e = s.edges[ei];
                if (e.length <= eps) continue;
                Rational t = e.u == c ? Rational(eps / e.length)
                                      : Rational((e.length - eps) / e.length);
                s = split_edge(s, ei, t);
            }
        }
    }

    auto topo = surface_topology(s);
    int a = s.vertex_index(la), b = s.vertex_index(lb);
    auto [x, y] = find_neighbours(s, topo, a);
    auto [pp, qq] = find_neighbours(s, topo, b);
    if (flip) std::swap(pp, qq);
    std::set<int> six{a, b, x, y, pp, qq};
    if (six.size() != 6) throw ValidationError("boundary neighbourhoods overlap");

    auto len = [&](int u, int v) { return s.edges[s.edge_index(u, v)].length; };
    Rational la1 = len(x, a), la2 = len(a, y), lb1 = len(pp, b), lb2 = len(b, qq);
    Rational h = std::max({la1, la2, lb1, lb2, Rational(1, 4 * n)});

    TriSurface out = s;
    auto add_edge = [&](int u, int v, const Rational& l) {
        if (u > v) std::swap(u, v);
        out.edges.push_back({u, v, l});
    };
    Rational d1 = pick_length(std::max(h - la1 < 0 ? la1 - h : h - la1,
                                       h - lb1 < 0 ? lb1 - h : h - lb1),
                              std::min(la1 + h, lb1 + h));
    Rational d2 = pick_length(std::max(h - la2 < 0 ? la2 - h : h - la2,
                                       h - lb2 < 0 ? lb2 - h : h - lb2),
                              std::min(la2 + h, lb2 + h));
    add_edge(a, b, h);
    add_edge(x, pp, h);
    add_edge(y, qq, h);
    add_edge(x, b, d1);
    add_edge(a, qq, d2);
    out.faces.push_back({x, a, b});
    out.faces.push_back({x, b, pp});
    out.faces.push_back({a, y, qq});
    out.faces.push_back({a, qq, b});
    return make_surface(std::move(out.vertices), std::move(out.edges), std::move(out.faces));
}

}  // namespace

TriSurface identification_to_handle(const TriSurface& s, const std::string& a,
                                    const std::string& b, const HandleOptions& opt) {
    if (a == b) throw ValidationError("identification points must be distinct");
    if (opt.n < 1) throw ValidationError("scale index must be positive");
    if (opt.mode == HandleMode::boundary) {
        return boundary_strip(s, a, b, opt.flip, opt.n);
    }
    int ia = s.vertex_index(a), ib = s.vertex_index(b);
    if (s.edge_index(ia, ib) >= 0) {
        throw ValidationError("identification points are adjacent; neighbourhoods overlap");
    }
    auto [s1, ring_a] = truncate_vertex(s, a, opt.n);
    auto [s2, ring_b] = truncate_vertex(s1, b, opt.n);
    return bridge_rings(s2, ring_a, ring_b, opt.flip);
}

}  // namespace cactoidlab
