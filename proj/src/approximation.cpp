#include "cactoidlab/approximation.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <queue>
#include <set>
#include <sstream>

#include "cactoidlab/gluing.hpp"
#include "cactoidlab/mesh_builders.hpp"

namespace cactoidlab {

namespace {

SurfaceInvariants class_of(int connectivity, int boundary, bool orientable) {
    SurfaceInvariants s;
    s.connectivity = connectivity;
    s.boundary_count = boundary;
    s.euler_char = 2 - connectivity;
    s.reduced_connectivity = connectivity - boundary;
    s.orientable = orientable;
    return s;
}

std::string end_key(const AttachmentEnd& e) {
    return (e.is_tree ? "t" : "p") + std::to_string(e.owner) + "\x1f" + e.point;
}

// Splits continua whose token chains broke apart and drops circle-less
// leftovers, so filtered groupings stay admissible after element removal.
void repair_grouping(CactoidGraph& g) {
    // classes of attachment points, for token adjacency
    std::map<std::string, int> class_of_key;
    {
        int next = 0;
        std::vector<int> parent;
        std::function<int(int)> find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        auto id_of = [&](const std::string& k) {
            auto it = class_of_key.find(k);
            if (it != class_of_key.end()) return it->second;
            class_of_key.emplace(k, next);
            parent.push_back(next);
            return next++;
        };
        for (const auto& a : g.attachments) {
            int ia = id_of(end_key(a.a)), ib = id_of(end_key(a.b));
            parent[find(ia)] = find(ib);
        }
        for (auto& [k, v] : class_of_key) v = find(v);
    }
    auto classes_of_circle = [&](int p, int c) {
        std::set<int> out;
        for (const auto& a : g.attachments) {
            for (const auto* e : {&a.a, &a.b}) {
                if (!e->is_tree && e->owner == p && e->circle == c) {
                    out.insert(class_of_key.at(end_key(*e)));
                }
            }
        }
        return out;
    };
    auto classes_of_tree = [&](int t) {
        std::set<int> out;
        for (const auto& a : g.attachments) {
            for (const auto* e : {&a.a, &a.b}) {
                if (e->is_tree && e->owner == t) {
                    out.insert(class_of_key.at(end_key(*e)));
                }
            }
        }
        return out;
    };

    std::vector<Continuum> fixed;
    for (const auto& c : g.grouping) {
        struct Token {
            int kind;  // 0 circle, 1 wedge, 2 tree
            std::pair<int, int> circle;
            std::string name;
            std::set<int> classes;
        };
        std::vector<Token> tokens;
        for (auto [p, ci] : c.circles) tokens.push_back({0, {p, ci}, "", classes_of_circle(p, ci)});
        for (const auto& w : c.wedges) {
            for (const auto& a : g.attachments) {
                if (a.name == w) {
                    tokens.push_back({1, {}, w, {class_of_key.at(end_key(a.a))}});
                }
            }
        }
        for (const auto& tn : c.trees) {
            for (int t = 0; t < static_cast<int>(g.trees.size()); ++t) {
                if (g.trees[t].name == tn) tokens.push_back({2, {}, tn, classes_of_tree(t)});
            }
        }
        int m = static_cast<int>(tokens.size());
        std::vector<int> comp(m);
        for (int i = 0; i < m; ++i) comp[i] = i;
        std::function<int(int)> find = [&](int x) {
            while (comp[x] != x) x = comp[x] = comp[comp[x]];
            return x;
        };
        for (int i = 0; i < m; ++i) {
            for (int j = i + 1; j < m; ++j) {
                for (int cl : tokens[i].classes) {
                    if (tokens[j].classes.count(cl)) {
                        comp[find(i)] = find(j);
                        break;
                    }
                }
            }
        }
        std::map<int, Continuum> parts;
        for (int i = 0; i < m; ++i) {
            auto& part = parts[find(i)];
            switch (tokens[i].kind) {
                case 0: part.circles.push_back(tokens[i].circle); break;
                case 1: part.wedges.push_back(tokens[i].name); break;
                case 2: part.trees.push_back(tokens[i].name); break;
            }
        }
        int serial = 0;
        for (auto& [root, part] : parts) {
            if (part.circles.empty()) continue;  // connectors with no circle drop out
            part.name = c.name + (parts.size() > 1 ? "/" + std::to_string(serial++) : "");
            fixed.push_back(std::move(part));
        }
    }
    g.grouping = std::move(fixed);
}

// Rebuilds the graph keeping only the flagged pieces/trees and the
// attachments whose ends both survive; grouping filtered and repaired.
CactoidGraph filter_graph(const CactoidGraph& g, const std::vector<bool>& keep_piece,
                          const std::vector<bool>& keep_tree) {
    CactoidGraph out;
    std::vector<int> pmap(g.pieces.size(), -1), tmap(g.trees.size(), -1);
    for (int i = 0; i < static_cast<int>(g.pieces.size()); ++i) {
        if (keep_piece[i]) {
            pmap[i] = static_cast<int>(out.pieces.size());
            out.pieces.push_back(g.pieces[i]);
        }
    }
    for (int i = 0; i < static_cast<int>(g.trees.size()); ++i) {
        if (keep_tree[i]) {
            tmap[i] = static_cast<int>(out.trees.size());
            out.trees.push_back(g.trees[i]);
        }
    }
    std::set<std::string> kept_att;
    for (const auto& a : g.attachments) {
        auto remap = [&](AttachmentEnd e) -> std::optional<AttachmentEnd> {
            int m = e.is_tree ? tmap[e.owner] : pmap[e.owner];
            if (m < 0) return std::nullopt;
            e.owner = m;
            return e;
        };
        auto ea = remap(a.a), eb = remap(a.b);
        if (ea && eb) {
            out.attachments.push_back({a.name, *ea, *eb});
            kept_att.insert(a.name);
        }
    }
    for (const auto& c : g.grouping) {
        Continuum nc;
        nc.name = c.name;
        for (auto [p, ci] : c.circles) {
            if (pmap[p] >= 0) nc.circles.push_back({pmap[p], ci});
        }
        for (const auto& w : c.wedges) {
            if (kept_att.count(w)) nc.wedges.push_back(w);
        }
        for (const auto& tn : c.trees) {
            for (int t = 0; t < static_cast<int>(g.trees.size()); ++t) {
                if (g.trees[t].name == tn && tmap[t] >= 0) nc.trees.push_back(tn);
            }
        }
        out.grouping.push_back(std::move(nc));
    }
    repair_grouping(out);
    return out;
}

int attachment_count(const CactoidGraph& g, bool is_tree, int owner) {
    int n = 0;
    for (const auto& a : g.attachments) {
        n += (a.a.is_tree == is_tree && a.a.owner == owner) +
             (a.b.is_tree == is_tree && a.b.owner == owner);
    }
    return n;
}

Rational tree_diameter(const MetricTree& t) {
    // longest path by doubled Dijkstra on the tree
    int n = static_cast<int>(t.nodes.size());
    auto dist_from = [&](int src) {
        std::vector<Rational> d(n, Rational(-1));
        std::vector<int> stack{src};
        d[src] = 0;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (const auto& e : t.edges) {
                int w = e.u == v ? e.v : e.v == v ? e.u : -1;
                if (w >= 0 && d[w] < 0) {
                    d[w] = d[v] + e.length;
                    stack.push_back(w);
                }
            }
        }
        return d;
    };
    auto d0 = dist_from(0);
    int far = 0;
    for (int i = 1; i < n; ++i) {
        if (d0[i] > d0[far]) far = i;
    }
    auto d1 = dist_from(far);
    Rational best = 0;
    for (const auto& x : d1) best = std::max(best, x);
    return best;
}

// ---- mesh-side helpers for realize_surface ----

std::vector<std::string> interior_labels(const TriSurface& s) {
    auto topo = surface_topology(s);
    std::set<int> on_boundary;
    for (const auto& loop : topo.boundary_loops) on_boundary.insert(loop.begin(), loop.end());
    std::vector<std::string> out;
    for (int v = 0; v < static_cast<int>(s.vertices.size()); ++v) {
        if (!on_boundary.count(v)) out.push_back(s.vertices[v]);
    }
    std::sort(out.begin(), out.end());
    return out;
}

// among candidates, the one maximizing the least graph distance to the
// used set (ties to the smaller label); with nothing used, the first
std::string spread_pick(const TriSurface& s, const std::vector<std::string>& candidates,
                        const std::vector<std::string>& used) {
    if (candidates.empty()) throw ValidationError("no candidate vertex available");
    if (used.empty()) return candidates.front();
    std::vector<std::vector<Rational>> rows;
    for (const auto& u : used) rows.push_back(mesh_distances(s, s.vertex_index(u)));
    std::string best;
    Rational best_score = -1;
    for (const auto& c : candidates) {
        if (std::find(used.begin(), used.end(), c) != used.end()) continue;
        int ci = s.vertex_index(c);
        Rational score = rows[0][ci];
        for (const auto& row : rows) score = std::min(score, row[ci]);
        if (score > best_score) {
            best_score = score;
            best = c;
        }
    }
    if (best.empty()) throw ValidationError("all candidate vertices used");
    return best;
}

// far-apart pair from a candidate pool by the doubled farthest sweep
std::pair<std::string, std::string> far_pair(const TriSurface& s,
                                             const std::vector<std::string>& pool) {
    if (pool.size() < 2) throw ValidationError("need two candidate vertices");
    auto far_from = [&](const std::string& v) {
        auto d = mesh_distances(s, s.vertex_index(v));
        std::string best = pool[0];
        Rational bd = -1;
        for (const auto& c : pool) {
            if (c == v) continue;
            const auto& dist = d[s.vertex_index(c)];
            if (dist > bd) {
                bd = dist;
                best = c;
            }
        }
        return best;
    };
    auto a = far_from(pool.front());
    auto b = far_from(a);
    return {std::min(a, b), std::max(a, b)};
}

Rational loop_length(const TriSurface& s, const std::vector<int>& loop) {
    Rational total = 0;
    int m = static_cast<int>(loop.size());
    for (int i = 0; i < m; ++i) {
        int e = s.edge_index(std::min(loop[i], loop[(i + 1) % m]),
                             std::max(loop[i], loop[(i + 1) % m]));
        total += s.edges[e].length;
    }
    return total;
}

const std::vector<int>* loop_of(const SurfaceTopology& topo, int v) {
    for (const auto& loop : topo.boundary_loops) {
        if (std::find(loop.begin(), loop.end(), v) != loop.end()) return &loop;
    }
    return nullptr;
}

struct GlobalGraph {
    std::vector<std::string> labels;
    std::map<std::string, int> index;
    std::vector<std::vector<std::pair<int, Rational>>> adj;

    int node(const std::string& l) {
        auto it = index.find(l);
        if (it != index.end()) return it->second;
        int id = static_cast<int>(labels.size());
        labels.push_back(l);
        index.emplace(l, id);
        adj.emplace_back();
        return id;
    }
    void edge(const std::string& a, const std::string& b, const Rational& w) {
        int ia = node(a), ib = node(b);
        adj[ia].push_back({ib, w});
        adj[ib].push_back({ia, w});
    }
    std::vector<Rational> dijkstra(int src) const {
        int n = static_cast<int>(labels.size());
        std::vector<Rational> d(n, Rational(-1));
        using Item = std::pair<Rational, int>;
        std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
        d[src] = 0;
        pq.push({0, src});
        while (!pq.empty()) {
            auto [dv, v] = pq.top();
            pq.pop();
            if (dv != d[v]) continue;
            for (auto& [w, len] : adj[v]) {
                Rational cand = dv + len;
                if (d[w] < 0 || cand < d[w]) {
                    d[w] = cand;
                    pq.push({cand, w});
                }
            }
        }
        return d;
    }
};

bool want_orientable(bool left, bool right) { return left && right; }

}  // namespace

CactoidGraph truncate(const CactoidGraph& g, int m) {
    if (m < 1) throw ValidationError("truncate needs m >= 1");
    auto report = validate(g);
    if (!report.ok()) throw ValidationError("invalid cactoid: " + report.violations[0]);

    std::vector<int> order(g.pieces.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (g.pieces[a].diameter != g.pieces[b].diameter) {
            return g.pieces[a].diameter > g.pieces[b].diameter;
        }
        return g.pieces[a].name < g.pieces[b].name;
    });
    std::vector<bool> keep_piece(g.pieces.size(), true);
    std::vector<bool> kept_goal(g.pieces.size(), false);
    for (int i = 0; i < std::min<int>(m, static_cast<int>(order.size())); ++i) {
        kept_goal[order[i]] = true;
    }
    std::vector<bool> keep_tree(g.trees.size(), true);
    std::vector<bool> keep_att(g.attachments.size(), true);

    // trim incidence leaves that are not kept pieces, so what survives is
    // exactly the subtree spanning the kept pieces
    bool changed = true;
    while (changed) {
        changed = false;
        auto degree = [&](bool is_tree, int owner) {
            int d = 0;
            for (size_t ai = 0; ai < g.attachments.size(); ++ai) {
                if (!keep_att[ai]) continue;
                const auto& a = g.attachments[ai];
                std::set<std::string> keys;
                for (const auto* e : {&a.a, &a.b}) {
                    if (e->is_tree == is_tree && e->owner == owner) keys.insert(end_key(*e));
                }
                d += static_cast<int>(keys.size()) > 0 ? 1 : 0;
            }
            return d;
        };
        for (int p = 0; p < static_cast<int>(g.pieces.size()); ++p) {
            if (keep_piece[p] && !kept_goal[p] && degree(false, p) <= 1) {
                keep_piece[p] = false;
                changed = true;
            }
        }
        for (int t = 0; t < static_cast<int>(g.trees.size()); ++t) {
            if (keep_tree[t] && degree(true, t) <= 1) {
                keep_tree[t] = false;
                changed = true;
            }
        }
        // unkept pieces also fall away with their attachments
        for (size_t ai = 0; ai < g.attachments.size(); ++ai) {
            if (!keep_att[ai]) continue;
            const auto& a = g.attachments[ai];
            for (const auto* e : {&a.a, &a.b}) {
                bool alive = e->is_tree ? keep_tree[e->owner] : keep_piece[e->owner];
                if (!alive) {
                    keep_att[ai] = false;
                    changed = true;
                }
            }
        }
    }
    return filter_graph(g, keep_piece, keep_tree);
}

CactoidGraph prune_and_finitize(const CactoidGraph& g, int n) {
    if (n < 1) throw ValidationError("scale index must be positive");
    auto report = validate(g);
    if (!report.ok()) throw ValidationError("invalid cactoid: " + report.violations[0]);
    if (g.pieces.empty()) return g;

    Rational eps = g.pieces[0].diameter;
    for (const auto& p : g.pieces) eps = std::min(eps, p.diameter);
    Rational thr = eps / n;

    CactoidGraph out = g;
    for (int t = 0; t < static_cast<int>(out.trees.size()); ++t) {
        auto& tree = out.trees[t];
        std::set<std::string> pinned;
        for (const auto& a : out.attachments) {
            for (const auto* e : {&a.a, &a.b}) {
                if (e->is_tree && e->owner == t) pinned.insert(e->point);
            }
        }
        bool changed = true;
        while (changed && tree.nodes.size() > 1) {
            changed = false;
            for (int v = 0; v < static_cast<int>(tree.nodes.size()); ++v) {
                if (pinned.count(tree.nodes[v])) continue;
                int deg = 0, last_edge = -1;
                for (int e = 0; e < static_cast<int>(tree.edges.size()); ++e) {
                    if (tree.edges[e].u == v || tree.edges[e].v == v) {
                        ++deg;
                        last_edge = e;
                    }
                }
                if (deg != 1 || tree.edges[last_edge].length >= thr) continue;
                tree.edges.erase(tree.edges.begin() + last_edge);
                tree.nodes.erase(tree.nodes.begin() + v);
                for (auto& e : tree.edges) {
                    if (e.u > v) --e.u;
                    if (e.v > v) --e.v;
                }
                changed = true;
                break;
            }
        }
    }
    // drop whole trees below threshold that hang off a single point
    std::vector<bool> keep_tree(out.trees.size(), true);
    for (int t = 0; t < static_cast<int>(out.trees.size()); ++t) {
        if (attachment_count(out, true, t) <= 1 && tree_diameter(out.trees[t]) < thr) {
            keep_tree[t] = false;
        }
    }
    std::vector<bool> keep_piece(out.pieces.size(), true);
    return filter_graph(out, keep_piece, keep_tree);
}

CactoidGraph inflate_to_surfaces(const CactoidGraph& g, int n) {
    if (n < 1) throw ValidationError("scale index must be positive");
    auto report = validate(g);
    if (!report.ok()) throw ValidationError("invalid cactoid: " + report.violations[0]);

    CactoidGraph out;
    out.pieces = g.pieces;
    out.grouping = g.grouping;

    // tree edges become thin pieces; chains share points at the old nodes
    std::map<int, std::map<int, std::pair<int, int>>> node_piece;  // tree -> node -> (piece, circle)
    for (int t = 0; t < static_cast<int>(g.trees.size()); ++t) {
        const auto& tree = g.trees[t];
        bool in_boundary = false;
        std::string continuum_name;
        for (const auto& c : g.grouping) {
            for (const auto& tn : c.trees) {
                if (tn == tree.name) {
                    in_boundary = true;
                    continuum_name = c.name;
                }
            }
        }
        if (tree.edges.empty()) {
            // degenerate connector: the single node is a plain wedge point,
            // realized as a chain of direct attachments later
            continue;
        }
        std::vector<int> edge_piece(tree.edges.size());
        for (int e = 0; e < static_cast<int>(tree.edges.size()); ++e) {
            CactoidPiece p;
            p.name = tree.name + "/" + tree.nodes[tree.edges[e].u] + "-" +
                     tree.nodes[tree.edges[e].v];
            p.cls = in_boundary ? class_of(1, 1, true) : class_of(0, 0, true);
            p.diameter = tree.edges[e].length;
            edge_piece[e] = static_cast<int>(out.pieces.size());
            out.pieces.push_back(std::move(p));
        }
        int circle = in_boundary ? 0 : -1;
        // chain the edge pieces at every shared node
        for (int v = 0; v < static_cast<int>(tree.nodes.size()); ++v) {
            std::vector<int> incident;
            for (int e = 0; e < static_cast<int>(tree.edges.size()); ++e) {
                if (tree.edges[e].u == v || tree.edges[e].v == v) incident.push_back(e);
            }
            node_piece[t][v] = {edge_piece[incident[0]], circle};
            for (size_t i = 0; i + 1 < incident.size(); ++i) {
                Attachment a;
                a.name = tree.name + "@" + tree.nodes[v] + "#" + std::to_string(i);
                a.a = {false, edge_piece[incident[i]], tree.nodes[v], circle};
                a.b = {false, edge_piece[incident[i + 1]], tree.nodes[v], circle};
                out.attachments.push_back(std::move(a));
            }
        }
        if (in_boundary) {
            // the tree token turns into the chain's disc circles
            for (auto& c : out.grouping) {
                auto it = std::find(c.trees.begin(), c.trees.end(), tree.name);
                if (it == c.trees.end()) continue;
                c.trees.erase(it);
                for (int ep : edge_piece) c.circles.push_back({ep, 0});
            }
        }
    }

    // re-target original attachments; tree ends land on their edge piece
    for (const auto& a : g.attachments) {
        auto remap = [&](const AttachmentEnd& e) -> AttachmentEnd {
            if (!e.is_tree) return e;
            const auto& tree = g.trees[e.owner];
            if (tree.edges.empty()) {
                // degenerate tree: marker resolved below
                return {true, e.owner, e.point, -1};
            }
            auto [piece, circle] = node_piece.at(e.owner).at(tree.node_index(e.point));
            return {false, piece, e.point, circle};
        };
        out.attachments.push_back({a.name, remap(a.a), remap(a.b)});
    }
    // degenerate single-node trees: chain their partners directly
    for (int t = 0; t < static_cast<int>(g.trees.size()); ++t) {
        if (!g.trees[t].edges.empty()) continue;
        std::vector<AttachmentEnd> partners;
        std::vector<std::string> names;
        for (auto it = out.attachments.begin(); it != out.attachments.end();) {
            bool hit = false;
            for (auto [mine, other] : {std::pair(&it->a, &it->b), std::pair(&it->b, &it->a)}) {
                if (mine->is_tree && mine->owner == t) {
                    partners.push_back(*other);
                    names.push_back(it->name);
                    hit = true;
                    break;
                }
            }
            it = hit ? out.attachments.erase(it) : it + 1;
        }
        for (size_t i = 0; i + 1 < partners.size(); ++i) {
            out.attachments.push_back({names[i], partners[i], partners[i + 1]});
        }
        for (auto& c : out.grouping) {
            c.trees.erase(std::remove(c.trees.begin(), c.trees.end(), g.trees[t].name),
                          c.trees.end());
            if (!names.empty()) {
                c.wedges.erase(std::remove(c.wedges.begin(), c.wedges.end(), names.back()),
                               c.wedges.end());
            }
        }
    }

    // separator pieces at wedge points shared by three or more endpoints
    bool changed = true;
    while (changed) {
        changed = false;
        std::map<std::string, std::vector<int>> by_key;  // endpoint key -> attachments
        for (int ai = 0; ai < static_cast<int>(out.attachments.size()); ++ai) {
            by_key[end_key(out.attachments[ai].a)].push_back(ai);
            by_key[end_key(out.attachments[ai].b)].push_back(ai);
        }
        for (auto& [key, atts] : by_key) {
            if (atts.size() < 2) continue;  // endpoint in one attachment: degree two
            // gather the class endpoints around this shared point
            std::vector<AttachmentEnd> around;
            std::set<std::string> seen;
            for (int ai : atts) {
                for (const auto* e : {&out.attachments[ai].a, &out.attachments[ai].b}) {
                    if (seen.insert(end_key(*e)).second) around.push_back(*e);
                }
            }
            if (around.size() < 3) continue;
            bool boundaryish = false;
            for (const auto& e : around) boundaryish = boundaryish || e.circle >= 0;
            CactoidPiece sep;
            sep.name = "sep@" + out.attachments[atts[0]].name;
            sep.cls = boundaryish ? class_of(1, 1, true) : class_of(0, 0, true);
            sep.diameter = Rational(1, n);
            int sp = static_cast<int>(out.pieces.size());
            out.pieces.push_back(sep);
            std::set<std::string> dead_names;
            std::set<int> dead(atts.begin(), atts.end());
            for (int ai : atts) dead_names.insert(out.attachments[ai].name);
            std::vector<Attachment> next;
            for (int ai = 0; ai < static_cast<int>(out.attachments.size()); ++ai) {
                if (!dead.count(ai)) next.push_back(out.attachments[ai]);
            }
            for (size_t i = 0; i < around.size(); ++i) {
                Attachment a;
                a.name = sep.name + "#" + std::to_string(i);
                a.a = around[i];
                a.b = {false, sp, "s" + std::to_string(i), boundaryish ? 0 : -1};
                next.push_back(std::move(a));
            }
            out.attachments = std::move(next);
            for (auto& c : out.grouping) {
                bool touched = false;
                for (const auto& w : c.wedges) touched = touched || dead_names.count(w);
                c.wedges.erase(std::remove_if(c.wedges.begin(), c.wedges.end(),
                                              [&](const std::string& w) {
                                                  return dead_names.count(w) > 0;
                                              }),
                               c.wedges.end());
                if (boundaryish && !touched) {
                    // the separator circle joins the continuum holding the
                    // circles this point sits on
                    for (auto [p, ci] : c.circles) {
                        for (const auto& e : around) {
                            if (!e.is_tree && e.owner == p && e.circle == ci) touched = true;
                        }
                    }
                }
                if (boundaryish && touched) c.circles.push_back({sp, 0});
            }
            changed = true;
            break;
        }
    }
    repair_grouping(out);
    return out;
}

TriSurface class_mesh(const SurfaceInvariants& cls, const Rational& diameter,
                      const std::string& prefix) {
    if (cls.reduced_connectivity < 0 || cls.boundary_count < 0 || diameter <= 0) {
        throw ValidationError("bad class");
    }
    int r = cls.reduced_connectivity;
    TriSurface s;
    int handles;
    bool need_twist = false;
    if (cls.orientable) {
        if (r % 2 != 0) throw ValidationError("orientable class needs even reduced connectivity");
        s = subdivide(subdivide(sphere_mesh(diameter, prefix)));
        handles = r / 2;
    } else if (r % 2 == 1) {
        s = subdivide(subdivide(rp2_mesh(diameter / 2, prefix)));
        handles = (r - 1) / 2;
    } else {
        if (r == 0) throw ValidationError("non-orientable class needs reduced connectivity >= 1");
        s = subdivide(subdivide(sphere_mesh(diameter, prefix)));
        handles = r / 2;
        need_twist = true;
    }

    std::vector<std::string> used;
    auto drop_stale = [&] {
        used.erase(std::remove_if(used.begin(), used.end(),
                                  [&](const std::string& u) { return !s.find_vertex(u); }),
                   used.end());
    };
    auto add_handle = [&](bool want_nonorientable) {
        drop_stale();
        auto pool = interior_labels(s);
        for (const auto& u : used) {
            pool.erase(std::remove(pool.begin(), pool.end(), u), pool.end());
        }
        auto [a, b] = far_pair(s, pool);
        HandleOptions opt;
        opt.mode = HandleMode::interior;
        opt.n = 2;
        for (bool flip : {false, true}) {
            opt.flip = flip;
            TriSurface cand;
            try {
                cand = identification_to_handle(s, a, b, opt);
            } catch (const ValidationError&) {
                continue;
            }
            bool ok = invariants(s).orientable
                          ? invariants(cand).orientable != want_nonorientable
                          : true;
            if (ok) {
                s = std::move(cand);
                used.push_back(a);
                used.push_back(b);
                return;
            }
        }
        throw ValidationError("handle construction failed");
    };
    for (int i = 0; i < handles; ++i) add_handle(need_twist && i == 0);

    for (int b = 0; b < cls.boundary_count; ++b) {
        drop_stale();
        auto pool = interior_labels(s);
        for (const auto& u : used) {
            pool.erase(std::remove(pool.begin(), pool.end(), u), pool.end());
        }
        auto v = spread_pick(s, pool, used);
        auto [cut, ring] = truncate_vertex(s, v, 1);
        s = std::move(cut);
        used.insert(used.end(), ring.begin(), ring.end());
    }

    auto inv = invariants(s);
    if (inv.connectivity != cls.connectivity || inv.boundary_count != cls.boundary_count ||
        inv.orientable != cls.orientable) {
        throw ValidationError("class mesh construction missed its class");
    }
    return s;
}

Realization realize_surface(const CactoidGraph& g, const GluingHistory& h, int n,
                            int c_target, const PipelineConfig& cfg) {
    if (n < 1) throw ValidationError("scale index must be positive");
    auto report = validate(g);
    if (!report.ok()) throw ValidationError("invalid cactoid: " + report.violations[0]);
    if (!g.trees.empty()) throw ValidationError("trees present: inflate first");
    for (const auto& p : g.pieces) {
        if (p.shrinking_family) throw ValidationError("shrinking family present: truncate first");
    }
    {
        std::map<std::string, int> mult;
        for (const auto& a : g.attachments) {
            ++mult[end_key(a.a)];
            ++mult[end_key(a.b)];
        }
        for (auto& [k, m] : mult) {
            if (m > 1) throw ValidationError("wedge point shared by three pieces: inflate first");
        }
    }
    auto cert = certify(c_target, g, h);
    if (!cert.verdict) throw ValidationError("main certificate fails for the requested target");

    bool all_orientable = true;
    for (const auto& p : g.pieces) all_orientable = all_orientable && p.cls.orientable;
    if (cfg.target == PipelineConfig::Orientability::orientable && !all_orientable) {
        throw ValidationError("orientable target infeasible: non-orientable piece present");
    }
    if (cfg.target == PipelineConfig::Orientability::non_orientable && all_orientable &&
        h.k() == 0) {
        throw ValidationError("non-orientable target infeasible: all pieces orientable, k = 0");
    }

    // per-piece meshes, scale-independent; only the glue geometry shrinks
    std::vector<TriSurface> meshes;
    for (int i = 0; i < static_cast<int>(g.pieces.size()); ++i) {
        meshes.push_back(class_mesh(g.pieces[i].cls, g.pieces[i].diameter,
                                    "p" + std::to_string(i) + ":"));
    }

    // attachment vertices, spread out per piece for safe neighbourhoods
    struct Assigned {
        std::string a, b;
        bool tube;
    };
    std::map<std::string, Assigned> where;
    {
        std::vector<std::vector<std::string>> used(g.pieces.size());
        std::vector<SurfaceTopology> topos;
        for (const auto& m : meshes) topos.push_back(surface_topology(m));
        std::vector<const Attachment*> order;
        for (const auto& a : g.attachments) order.push_back(&a);
        std::sort(order.begin(), order.end(),
                  [](const Attachment* x, const Attachment* y) { return x->name < y->name; });
        for (const auto* a : order) {
            bool tube = !(a->a.circle >= 0 && a->b.circle >= 0);
            auto assign = [&](const AttachmentEnd& e) {
                int p = e.owner;
                std::vector<std::string> pool;
                if (!tube && e.circle >= 0) {
                    for (int v : topos[p].boundary_loops[e.circle]) {
                        pool.push_back(meshes[p].vertices[v]);
                    }
                    std::sort(pool.begin(), pool.end());
                } else {
                    pool = interior_labels(meshes[p]);
                }
                auto v = spread_pick(meshes[p], pool, used[p]);
                used[p].push_back(v);
                return v;
            };
            where[a->name] = {assign(a->a), assign(a->b), tube};
        }
    }

    // Every gluing destroys or creates vertices inside a region of size
    // ~1/n. Proxies remember, per destroyed label, a stand-in that ended up
    // nearby in the build, and per created label, the original anchor the
    // target still carries; the GH correspondence resolves through them so
    // its distortion shrinks with the glue regions.
    std::map<std::string, std::string> proxy_in_x;  // destroyed -> nearby survivor
    std::map<std::string, std::string> proxy_in_t;  // created -> original anchor
    auto note_op = [&](const std::set<std::string>& before, const TriSurface& after,
                       const std::string& anchor,
                       const std::vector<std::pair<std::string, std::string>>& explicit_map) {
        std::set<std::string> now(after.vertices.begin(), after.vertices.end());
        std::vector<std::string> added;
        for (const auto& v : now) {
            if (!before.count(v)) added.push_back(v);
        }
        for (const auto& [from, to] : explicit_map) proxy_in_x[from] = to;
        for (const auto& v : before) {
            if (!now.count(v) && !proxy_in_x.count(v)) {
                proxy_in_x[v] = added.empty() ? anchor : added.front();
            }
        }
        for (const auto& v : added) proxy_in_t[v] = anchor;
    };

    // fold the wedge tree pairwise along attachments
    std::vector<int> comp_of(g.pieces.size());
    std::vector<TriSurface> comps = meshes;
    std::vector<bool> comp_orientable;
    for (int i = 0; i < static_cast<int>(g.pieces.size()); ++i) {
        comp_of[i] = i;
        comp_orientable.push_back(g.pieces[i].cls.orientable);
    }
    std::function<int(int)> find_comp = [&](int x) {
        while (comp_of[x] != x) x = comp_of[x] = comp_of[comp_of[x]];
        return x;
    };
    std::vector<const Attachment*> order;
    for (const auto& a : g.attachments) order.push_back(&a);
    std::sort(order.begin(), order.end(),
              [](const Attachment* x, const Attachment* y) { return x->name < y->name; });
    for (const auto* a : order) {
        int ca = find_comp(a->a.owner), cb = find_comp(a->b.owner);
        if (ca == cb) throw ValidationError("attachment closes a cycle");
        auto u = disjoint_union(comps[ca], comps[cb]);
        std::set<std::string> before(u.vertices.begin(), u.vertices.end());
        const auto& asg = where.at(a->name);
        bool want = want_orientable(comp_orientable[ca], comp_orientable[cb]);
        TriSurface glued;
        std::vector<std::pair<std::string, std::string>> merged;
        if (!asg.tube) {
            auto topo = surface_topology(u);
            Rational len = Rational(1, n);
            for (const auto& lbl : {asg.a, asg.b}) {
                auto* loop = loop_of(topo, u.vertex_index(lbl));
                if (loop) len = std::min(len, loop_length(u, *loop) / 4);
            }
            auto [s1, arc1] = boundary_arc_centered(u, asg.a, len);
            auto [s2, arc2] = boundary_arc_centered(s1, asg.b, len);
            glued = glue_boundary_arcs(s2, arc1, arc2);
            if (want && !invariants(glued).orientable) {
                std::reverse(arc2.begin(), arc2.end());
                glued = glue_boundary_arcs(s2, arc1, arc2);
            }
            for (size_t i = 0; i < arc1.size(); ++i) merged.emplace_back(arc2[i], arc1[i]);
        } else {
            auto [s1, r1] = truncate_vertex(u, asg.a, n);
            auto [s2, r2] = truncate_vertex(s1, asg.b, n);
            glued = bridge_rings(s2, r1, r2, false);
            if (want && !invariants(glued).orientable) {
                glued = bridge_rings(s2, r1, r2, true);
            }
            merged.emplace_back(asg.a, r1[0]);
            merged.emplace_back(asg.b, r2[0]);
        }
        note_op(before, glued, asg.a, merged);
        if (want && !invariants(glued).orientable) {
            throw ValidationError("gluing lost orientability unexpectedly");
        }
        comp_of[cb] = ca;
        comps[ca] = std::move(glued);
        comp_orientable[ca] = invariants(comps[ca]).orientable;
    }
    TriSurface surface = comps[find_comp(0)];

    // history steps: one handle or strip per 2-point identification, the
    // points drawn from original mesh vertices so the target can mirror them
    std::set<std::string> original;
    for (const auto& m : meshes) original.insert(m.vertices.begin(), m.vertices.end());
    auto surviving = [&](bool boundary_only) {
        auto topo = surface_topology(surface);
        std::set<std::string> on_boundary;
        for (const auto& loop : topo.boundary_loops) {
            for (int v : loop) on_boundary.insert(surface.vertices[v]);
        }
        std::vector<std::string> pool;
        for (const auto& v : surface.vertices) {
            if (!original.count(v)) continue;
            bool ob = on_boundary.count(v) > 0;
            if (ob == boundary_only) pool.push_back(v);
        }
        std::sort(pool.begin(), pool.end());
        return pool;
    };

    std::vector<std::pair<std::string, std::string>> identified;
    bool forced_twist = cfg.target == PipelineConfig::Orientability::non_orientable &&
                        all_orientable;
    for (const auto& step : h.steps) {
        if (step.kind != GluingStep::Kind::two_point) continue;
        std::string a, b;
        auto bar = step.arguments.find('|');
        if (bar != std::string::npos) {
            a = step.arguments.substr(0, bar);
            b = step.arguments.substr(bar + 1);
        } else {
            auto pool = surviving(step.boundary_flag);
            std::tie(a, b) = far_pair(surface, pool);
        }
        HandleOptions opt;
        opt.mode = step.boundary_flag ? HandleMode::boundary : HandleMode::interior;
        opt.n = n;
        bool want_no = forced_twist && invariants(surface).orientable;
        bool want_or = cfg.target == PipelineConfig::Orientability::orientable;
        TriSurface done;
        bool built = false;
        for (bool flip : {false, true}) {
            opt.flip = flip;
            TriSurface cand;
            try {
                cand = identification_to_handle(surface, a, b, opt);
            } catch (const ValidationError&) {
                continue;
            }
            bool orient = invariants(cand).orientable;
            if ((want_no && orient) || (want_or && !orient)) continue;
            done = std::move(cand);
            built = true;
            break;
        }
        if (!built) throw ValidationError("2-point identification step failed");
        std::set<std::string> before(surface.vertices.begin(), surface.vertices.end());
        note_op(before, done, a, {});
        surface = std::move(done);
        identified.emplace_back(a, b);
    }

    if (cfg.target == PipelineConfig::Orientability::orientable &&
        !invariants(surface).orientable) {
        throw ValidationError("orientable target missed");
    }
    if (cfg.target == PipelineConfig::Orientability::non_orientable &&
        invariants(surface).orientable) {
        throw ValidationError("non-orientable target missed");
    }

    // target: geodesic model of the glued limit space, scale independent
    GlobalGraph graph;
    for (const auto& m : meshes) {
        auto refined = geodesic_metric(m, cfg.refine).refined;
        for (const auto& e : refined.edges) {
            graph.edge(refined.vertices[e.u], refined.vertices[e.v], e.length);
        }
    }
    for (const auto& a : g.attachments) {
        graph.edge(where.at(a.name).a, where.at(a.name).b, 0);
    }
    for (const auto& [a, b] : identified) graph.edge(a, b, 0);

    int gn = static_cast<int>(graph.labels.size());
    std::vector<std::vector<Rational>> full(gn);
    for (int i = 0; i < gn; ++i) full[i] = graph.dijkstra(i);
    // collapse zero classes to representatives
    std::map<std::string, std::string> rep;
    std::vector<int> keep;
    for (int i = 0; i < gn; ++i) {
        std::string r = graph.labels[i];
        for (int j = 0; j < gn; ++j) {
            if (full[i][j] == 0 && graph.labels[j] < r) r = graph.labels[j];
        }
        rep[graph.labels[i]] = r;
        if (r == graph.labels[i]) keep.push_back(i);
    }
    std::vector<std::string> tlabels;
    std::vector<std::vector<Rational>> tdist(keep.size(), std::vector<Rational>(keep.size()));
    for (size_t i = 0; i < keep.size(); ++i) tlabels.push_back(graph.labels[keep[i]]);
    for (size_t i = 0; i < keep.size(); ++i) {
        for (size_t j = 0; j < keep.size(); ++j) tdist[i][j] = full[keep[i]][keep[j]];
    }
    auto target = FiniteMetricSpace::create_unchecked(std::move(tlabels), std::move(tdist));

    auto gm = geodesic_metric(surface, cfg.refine).space;

    // correspondence by shared labels, everything else to its nearest
    // shared landmark
    std::vector<int> landmarks_x, landmarks_t;
    for (int i = 0; i < gm.size(); ++i) {
        auto it = rep.find(gm.label(i));
        if (it != rep.end() && it->second == gm.label(i)) {
            landmarks_x.push_back(i);
            landmarks_t.push_back(target.index_of(it->second));
        }
    }
    if (landmarks_x.empty()) throw ValidationError("no shared landmarks");
    Correspondence corr;
    for (int i = 0; i < gm.size(); ++i) {
        // build label -> target point: direct, else via the op anchor
        std::string l = gm.label(i);
        for (int hops = 0; hops < 64 && !rep.count(l); ++hops) {
            auto it = proxy_in_t.find(l);
            if (it == proxy_in_t.end()) break;
            l = it->second;
        }
        if (rep.count(l)) {
            corr.pairs.emplace_back(i, target.index_of(rep.at(l)));
            continue;
        }
        int best = 0;
        for (size_t k = 1; k < landmarks_x.size(); ++k) {
            if (gm.dist(i, landmarks_x[k]) < gm.dist(i, landmarks_x[best])) {
                best = static_cast<int>(k);
            }
        }
        corr.pairs.emplace_back(i, landmarks_t[best]);
    }
    for (int j = 0; j < target.size(); ++j) {
        // target point -> build point: direct, else via the nearby stand-in
        std::string l = target.label(j);
        for (int hops = 0; hops < 64 && !gm.find(l); ++hops) {
            auto it = proxy_in_x.find(l);
            if (it == proxy_in_x.end()) break;
            l = it->second;
        }
        if (auto idx = gm.find(l)) {
            corr.pairs.emplace_back(*idx, j);
            continue;
        }
        int best = 0;
        for (size_t k = 1; k < landmarks_t.size(); ++k) {
            if (target.dist(j, landmarks_t[k]) < target.dist(j, landmarks_t[best])) {
                best = static_cast<int>(k);
            }
        }
        corr.pairs.emplace_back(landmarks_x[best], j);
    }

    CertificateRecord record;
    record.n = n;
    record.inv = invariants(surface);
    if (cfg.sample_size > 0 &&
        (gm.size() > cfg.sample_size || target.size() > cfg.sample_size)) {
        auto nx = net_sample(gm, cfg.sample_size);
        auto nt = net_sample(target, cfg.sample_size);
        record.net_radius_built = nx.net_radius;
        record.net_radius_target = nt.net_radius;
        auto nearest = [](const FiniteMetricSpace& sp, const std::vector<int>& net, int i) {
            int best = 0;
            for (size_t l = 1; l < net.size(); ++l) {
                if (sp.dist(i, net[l]) < sp.dist(i, net[best])) best = static_cast<int>(l);
            }
            return best;
        };
        Correspondence small;
        std::set<std::pair<int, int>> seen;
        for (auto [i, j] : corr.pairs) {
            auto pr = std::pair(nearest(gm, nx.indices, i), nearest(target, nt.indices, j));
            if (seen.insert(pr).second) small.pairs.push_back(pr);
        }
        record.gh_upper_bound =
            gh_upper(gm.restrict(nx.indices), target.restrict(nt.indices), small);
    } else {
        record.gh_upper_bound = gh_upper(gm, target, corr);
    }
    return {std::move(surface), std::move(record), std::move(target)};
}

ConvergenceCertificate run_pipeline(const CactoidGraph& g, const GluingHistory& h,
                                    const std::vector<int>& schedule, int c_target,
                                    const PipelineConfig& cfg) {
    ConvergenceCertificate cert;
    cert.main = certify(c_target, g, h);
    int ordinary = 0;
    for (const auto& p : g.pieces) ordinary += p.shrinking_family ? 0 : 1;
    for (int n : schedule) {
        auto g1 = truncate(g, std::max(1, ordinary));
        auto g2 = prune_and_finitize(g1, n);
        auto g3 = inflate_to_surfaces(g2, n);
        cert.records.push_back(realize_surface(g3, h, n, c_target, cfg).record);
    }
    return cert;
}

std::string certificate_csv(const ConvergenceCertificate& cert) {
    std::ostringstream out;
    out << "n,gh_upper_bound,net_radius_built,net_radius_target,connectivity,"
           "boundary_count,orientable,euler_char\n";
    for (const auto& r : cert.records) {
        out << r.n << ',' << scalar_to_double(r.gh_upper_bound) << ','
            << scalar_to_double(r.net_radius_built) << ','
            << scalar_to_double(r.net_radius_target) << ',' << r.inv.connectivity << ','
            << r.inv.boundary_count << ',' << (r.inv.orientable ? 1 : 0) << ','
            << r.inv.euler_char << '\n';
    }
    return out.str();
}

}  // namespace cactoidlab
