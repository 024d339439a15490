#include "cactoidlab/cactoid.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <tuple>

namespace cactoidlab {

namespace {

struct UnionFind {
    std::vector<int> parent;

    explicit UnionFind(int n) : parent(n) {
        for (int i = 0; i < n; ++i) parent[i] = i;
    }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    // false if already joined
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[b] = a;
        return true;
    }
};

// Registry of attachment endpoints and their identification classes. An
// endpoint is (kind, owner, point); attachments union the two classes.
struct Ends {
    std::vector<AttachmentEnd> list;
    std::map<std::tuple<int, int, std::string>, int> index;
    UnionFind uf{0};

    int add(const AttachmentEnd& e) {
        auto key = std::make_tuple(e.is_tree ? 1 : 0, e.owner, e.point);
        auto it = index.find(key);
        if (it != index.end()) return it->second;
        int id = static_cast<int>(list.size());
        list.push_back(e);
        index.emplace(key, id);
        return id;
    }
};

std::string end_str(const AttachmentEnd& e) {
    return (e.is_tree ? "tree " : "piece ") + std::to_string(e.owner) + " point '" +
           e.point + "'";
}

bool class_eq(const SurfaceInvariants& a, const SurfaceInvariants& b) {
    return a.orientable == b.orientable && a.euler_char == b.euler_char &&
           a.boundary_count == b.boundary_count;
}

void check_pieces(const CactoidGraph& g, std::vector<std::string>& out) {
    std::set<std::string> names;
    for (const auto& p : g.pieces) {
        if (!names.insert(p.name).second) out.push_back("duplicate piece name " + p.name);
        const auto& c = p.cls;
        if (c.connectivity != 2 - c.euler_char) {
            out.push_back("piece " + p.name + ": connectivity != 2 - euler_char");
        }
        if (c.reduced_connectivity != c.connectivity - c.boundary_count) {
            out.push_back("piece " + p.name + ": reduced connectivity mismatch");
        }
        if (c.boundary_count < 0 || c.reduced_connectivity < 0) {
            out.push_back("piece " + p.name + ": negative class numbers");
        }
        if (c.orientable && c.reduced_connectivity % 2 != 0) {
            out.push_back("piece " + p.name + ": orientable class has odd reduced connectivity");
        }
        if (!c.orientable && c.reduced_connectivity == 0) {
            out.push_back("piece " + p.name + ": non-orientable class needs reduced connectivity >= 1");
        }
        if (p.diameter <= 0) out.push_back("piece " + p.name + ": non-positive diameter");
        if (p.realization && !class_eq(invariants(*p.realization), c)) {
            out.push_back("piece " + p.name + ": realization invariants disagree with class");
        }
        bool sphere = c.connectivity == 0 && c.boundary_count == 0;
        bool disc = c.connectivity == 1 && c.boundary_count == 1;
        if (p.shrinking_family && !sphere && !disc) {
            out.push_back("piece " + p.name +
                          ": shrinking family must be sphere or disc class");
        }
    }
}

void check_trees(const CactoidGraph& g, std::vector<std::string>& out) {
    std::set<std::string> names;
    for (const auto& t : g.trees) {
        if (!names.insert(t.name).second) out.push_back("duplicate tree name " + t.name);
        std::set<std::string> nodes(t.nodes.begin(), t.nodes.end());
        if (nodes.size() != t.nodes.size() || t.nodes.empty()) {
            out.push_back("tree " + t.name + ": node labels not unique or empty");
            continue;
        }
        int n = static_cast<int>(t.nodes.size());
        UnionFind uf(n);
        bool bad = false;
        for (const auto& e : t.edges) {
            if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n || e.u == e.v || e.length <= 0) {
                out.push_back("tree " + t.name + ": bad edge");
                bad = true;
                break;
            }
            if (!uf.unite(e.u, e.v)) {
                out.push_back("tree " + t.name + ": contains a cycle");
                bad = true;
                break;
            }
        }
        if (bad) continue;
        if (static_cast<int>(t.edges.size()) != n - 1) {
            out.push_back("tree " + t.name + ": disconnected");
        }
    }
}

int tree_degree(const MetricTree& t, int node) {
    int d = 0;
    for (const auto& e : t.edges) d += (e.u == node) + (e.v == node);
    return d;
}

// Collects endpoints, unions attachment pairs, reports structural faults.
Ends collect_ends(const CactoidGraph& g, std::vector<std::string>& out) {
    Ends ends;
    std::set<std::string> names;
    auto check_end = [&](const Attachment& a, const AttachmentEnd& e) -> bool {
        if (e.is_tree) {
            if (e.owner < 0 || e.owner >= static_cast<int>(g.trees.size())) {
                out.push_back("attachment " + a.name + ": tree index out of range");
                return false;
            }
            const auto& t = g.trees[e.owner];
            auto it = std::find(t.nodes.begin(), t.nodes.end(), e.point);
            if (it == t.nodes.end()) {
                out.push_back("attachment " + a.name + ": unknown tree node " + e.point);
                return false;
            }
            int idx = static_cast<int>(it - t.nodes.begin());
            if (t.nodes.size() > 1 && tree_degree(t, idx) > 1) {
                out.push_back("attachment " + a.name + ": tree end is not a leaf");
                return false;
            }
            return true;
        }
        if (e.owner < 0 || e.owner >= static_cast<int>(g.pieces.size())) {
            out.push_back("attachment " + a.name + ": piece index out of range");
            return false;
        }
        int b = g.pieces[e.owner].cls.boundary_count;
        if (e.circle < -1 || e.circle >= b) {
            out.push_back("attachment " + a.name + ": circle index out of range");
            return false;
        }
        return true;
    };
    for (const auto& a : g.attachments) {
        if (!names.insert(a.name).second) {
            out.push_back("duplicate attachment name " + a.name);
        }
        if (a.a.is_tree && a.b.is_tree) {
            out.push_back("attachment " + a.name + ": joins two trees");
            continue;
        }
        if (!check_end(a, a.a) || !check_end(a, a.b)) continue;
        int ia = ends.add(a.a), ib = ends.add(a.b);
        if (ia == ib) {
            out.push_back("attachment " + a.name + ": both ends are the same point");
            continue;
        }
        // circle annotation must be consistent per endpoint
        if (ends.list[ia].circle != a.a.circle || ends.list[ib].circle != a.b.circle) {
            out.push_back("attachment " + a.name + ": endpoint circle annotation conflict");
        }
    }
    ends.uf = UnionFind(static_cast<int>(ends.list.size()));
    for (const auto& a : g.attachments) {
        auto ka = std::make_tuple(a.a.is_tree ? 1 : 0, a.a.owner, a.a.point);
        auto kb = std::make_tuple(a.b.is_tree ? 1 : 0, a.b.owner, a.b.point);
        auto ia = ends.index.find(ka), ib = ends.index.find(kb);
        if (ia != ends.index.end() && ib != ends.index.end() && ia->second != ib->second) {
            ends.uf.unite(ia->second, ib->second);
        }
    }
    return ends;
}

// The wedge-tree requirement: objects and identification classes form a
// connected acyclic incidence graph, and no class holds two distinct
// points of one object.
void check_incidence(const CactoidGraph& g, Ends& ends, std::vector<std::string>& out) {
    int np = static_cast<int>(g.pieces.size());
    int nt = static_cast<int>(g.trees.size());
    int ne = static_cast<int>(ends.list.size());

    std::map<std::pair<int, int>, std::vector<int>> per_object_class;  // (kind, owner)
    std::set<std::pair<int, int>> incidence;  // (object node, class root)
    for (int i = 0; i < ne; ++i) {
        const auto& e = ends.list[i];
        int obj = e.is_tree ? np + e.owner : e.owner;
        int root = ends.uf.find(i);
        auto& cls = per_object_class[{obj, root}];
        cls.push_back(i);
        if (cls.size() == 2) {
            out.push_back("identification of two points of one object: " +
                          end_str(ends.list[cls[0]]) + " and " + end_str(e));
        }
        incidence.insert({obj, root});
    }

    UnionFind uf(np + nt + ne);
    int used = np + nt;
    std::set<int> roots;
    for (auto [obj, root] : incidence) {
        if (roots.insert(root).second) ++used;
        if (!uf.unite(obj, np + nt + root)) {
            out.push_back("wedge incidence contains a cycle (not a successive wedge sum)");
            return;
        }
    }
    (void)used;
    if (np + nt == 0) return;
    int root0 = uf.find(0);
    for (int o = 1; o < np + nt; ++o) {
        if (uf.find(o) != root0) {
            out.push_back("pieces and trees are not connected by attachments");
            return;
        }
    }
}

// Shrinking disc families must attach circle-to-circle: the family point on
// its own circle, the partner point on a boundary circle of an ordinary
// piece. Otherwise no continuum can cover the family's circles.
void check_families(const CactoidGraph& g, std::vector<std::string>& out) {
    for (int p = 0; p < static_cast<int>(g.pieces.size()); ++p) {
        const auto& piece = g.pieces[p];
        if (!piece.shrinking_family || piece.cls.boundary_count == 0) continue;
        bool found = false;
        for (const auto& a : g.attachments) {
            for (auto [mine, other] : {std::pair(&a.a, &a.b), std::pair(&a.b, &a.a)}) {
                if (mine->is_tree || mine->owner != p) continue;
                found = true;
                bool on_own = mine->circle == 0;
                bool on_host = !other->is_tree && other->circle >= 0 &&
                               !g.pieces[other->owner].shrinking_family;
                if (!on_own || !on_host) {
                    out.push_back("shrinking family " + piece.name +
                                  " not attached boundary-to-boundary: its circles "
                                  "cannot be covered by any continuum");
                }
            }
        }
        if (!found) {
            out.push_back("shrinking family " + piece.name + " has no attachment");
        }
    }
}

struct GroupingView {
    // per continuum: token lists resolved to indices plus point-class roots
    struct Item {
        std::vector<std::pair<int, int>> circles;
        std::vector<int> wedges;  // attachment indices
        std::vector<int> trees;
        std::set<int> classes;
        std::string name;
    };
    std::vector<Item> items;
};

int attachment_index(const CactoidGraph& g, const std::string& name) {
    for (int i = 0; i < static_cast<int>(g.attachments.size()); ++i) {
        if (g.attachments[i].name == name) return i;
    }
    return -1;
}

int tree_index(const CactoidGraph& g, const std::string& name) {
    for (int i = 0; i < static_cast<int>(g.trees.size()); ++i) {
        if (g.trees[i].name == name) return i;
    }
    return -1;
}

std::set<int> circle_classes(const Ends& e, int piece, int circle) {
    std::set<int> out;
    for (int i = 0; i < static_cast<int>(e.list.size()); ++i) {
        const auto& end = e.list[i];
        if (!end.is_tree && end.owner == piece && end.circle == circle) {
            out.insert(const_cast<Ends&>(e).uf.find(i));
        }
    }
    return out;
}

std::set<int> tree_classes(const Ends& e, int tree) {
    std::set<int> out;
    for (int i = 0; i < static_cast<int>(e.list.size()); ++i) {
        if (e.list[i].is_tree && e.list[i].owner == tree) {
            out.insert(const_cast<Ends&>(e).uf.find(i));
        }
    }
    return out;
}

int wedge_class(const CactoidGraph& g, const Ends& e, int att) {
    const auto& end = g.attachments[att].a;
    auto key = std::make_tuple(end.is_tree ? 1 : 0, end.owner, end.point);
    auto it = e.index.find(key);
    return it == e.index.end() ? -1 : const_cast<Ends&>(e).uf.find(it->second);
}

// Full admissibility check of a grouping. Reports into `out` when given,
// otherwise just answers feasibility.
bool check_grouping(const CactoidGraph& g, const Ends& ends,
                    const std::vector<Continuum>& grouping,
                    std::vector<std::string>* out) {
    bool ok = true;
    auto fail = [&](const std::string& msg) {
        ok = false;
        if (out) out->push_back(msg);
    };

    GroupingView view;
    std::set<std::pair<int, int>> seen_circles;
    std::set<int> seen_wedges, seen_trees;
    for (const auto& c : grouping) {
        GroupingView::Item item;
        item.name = c.name;
        for (auto [p, ci] : c.circles) {
            if (p < 0 || p >= static_cast<int>(g.pieces.size()) ||
                g.pieces[p].shrinking_family || ci < 0 ||
                ci >= g.pieces[p].cls.boundary_count) {
                fail("continuum " + c.name + ": bad circle token");
                continue;
            }
            if (!seen_circles.insert({p, ci}).second) {
                fail("continuum " + c.name + ": circle covered twice");
                continue;
            }
            item.circles.emplace_back(p, ci);
            auto cls = circle_classes(ends, p, ci);
            item.classes.insert(cls.begin(), cls.end());
        }
        for (const auto& w : c.wedges) {
            int idx = attachment_index(g, w);
            if (idx < 0) {
                fail("continuum " + c.name + ": unknown wedge token " + w);
                continue;
            }
            if (!seen_wedges.insert(idx).second) {
                fail("continuum " + c.name + ": wedge token used twice");
                continue;
            }
            item.wedges.push_back(idx);
            int root = wedge_class(g, ends, idx);
            if (root >= 0) item.classes.insert(root);
        }
        for (const auto& t : c.trees) {
            int idx = tree_index(g, t);
            if (idx < 0) {
                fail("continuum " + c.name + ": unknown tree token " + t);
                continue;
            }
            if (!seen_trees.insert(idx).second) {
                fail("continuum " + c.name + ": tree token used twice");
                continue;
            }
            item.trees.push_back(idx);
            auto cls = tree_classes(ends, idx);
            item.classes.insert(cls.begin(), cls.end());
        }
        if (item.circles.empty()) {
            fail("continuum " + c.name + ": contains no boundary circle");
        }
        view.items.push_back(std::move(item));
    }

    // exact cover of all ordinary boundary circles
    for (int p = 0; p < static_cast<int>(g.pieces.size()); ++p) {
        if (g.pieces[p].shrinking_family) continue;
        for (int ci = 0; ci < g.pieces[p].cls.boundary_count; ++ci) {
            if (!seen_circles.count({p, ci})) {
                fail("uncovered boundary circle " + std::to_string(ci) + " of piece " +
                     g.pieces[p].name);
            }
        }
    }

    // pairwise disjoint point sets
    for (size_t i = 0; i < view.items.size(); ++i) {
        for (size_t j = i + 1; j < view.items.size(); ++j) {
            for (int cl : view.items[i].classes) {
                if (view.items[j].classes.count(cl)) {
                    fail("continua " + view.items[i].name + " and " + view.items[j].name +
                         " share a point");
                    break;
                }
            }
        }
    }

    for (const auto& item : view.items) {
        // meets each piece in at most one circle or one point
        std::map<int, std::vector<std::pair<int, int>>> piece_circles;
        for (auto [p, ci] : item.circles) piece_circles[p].push_back({p, ci});
        for (auto& [p, cs] : piece_circles) {
            if (cs.size() > 1) {
                fail("continuum " + item.name + " meets piece " + g.pieces[p].name +
                     " in two circles");
            }
        }
        std::map<int, std::set<std::pair<int, int>>> touch;  // piece -> (class, circle)
        for (int cl : item.classes) {
            for (int i = 0; i < static_cast<int>(ends.list.size()); ++i) {
                if (const_cast<Ends&>(ends).uf.find(i) != cl) continue;
                const auto& e = ends.list[i];
                if (!e.is_tree) touch[e.owner].insert({cl, e.circle});
            }
        }
        for (auto& [p, pts] : touch) {
            auto pc = piece_circles.find(p);
            if (pc != piece_circles.end()) {
                int circle = pc->second[0].second;
                for (auto [cl, at] : pts) {
                    if (at != circle) {
                        fail("continuum " + item.name + " meets piece " + g.pieces[p].name +
                             " in a circle and an extra point");
                        break;
                    }
                }
            } else {
                std::set<int> classes;
                for (auto [cl, at] : pts) classes.insert(cl);
                if (classes.size() > 1) {
                    fail("continuum " + item.name + " meets piece " + g.pieces[p].name +
                         " in two points");
                }
            }
        }

        // tokens chain together into one connected set
        int tokens = static_cast<int>(item.circles.size() + item.wedges.size() +
                                      item.trees.size());
        if (tokens <= 1) continue;
        std::vector<std::set<int>> tok_classes;
        for (auto [p, ci] : item.circles) tok_classes.push_back(circle_classes(ends, p, ci));
        for (int w : item.wedges) {
            int root = wedge_class(g, ends, w);
            tok_classes.push_back(root >= 0 ? std::set<int>{root} : std::set<int>{});
        }
        for (int t : item.trees) tok_classes.push_back(tree_classes(ends, t));
        UnionFind uf(tokens);
        for (int i = 0; i < tokens; ++i) {
            for (int j = i + 1; j < tokens; ++j) {
                for (int cl : tok_classes[i]) {
                    if (tok_classes[j].count(cl)) {
                        uf.unite(i, j);
                        break;
                    }
                }
            }
        }
        for (int i = 1; i < tokens; ++i) {
            if (uf.find(i) != uf.find(0)) {
                fail("continuum " + item.name + " is not connected");
                break;
            }
        }
    }
    return ok;
}

std::vector<std::string> structural_violations(const CactoidGraph& g, Ends& ends) {
    std::vector<std::string> out;
    check_pieces(g, out);
    check_trees(g, out);
    {
        std::set<std::string> names;
        for (const auto& c : g.grouping) {
            if (!names.insert(c.name).second) {
                out.push_back("duplicate continuum name " + c.name);
            }
        }
    }
    ends = collect_ends(g, out);
    if (out.empty()) {
        check_incidence(g, ends, out);
        check_families(g, out);
    }
    return out;
}

}  // namespace

int MetricTree::node_index(const std::string& label) const {
    for (int i = 0; i < static_cast<int>(nodes.size()); ++i) {
        if (nodes[i] == label) return i;
    }
    throw ValidationError("unknown tree node " + label);
}

ValidationReport validate(const CactoidGraph& g) {
    Ends ends;
    ValidationReport report;
    report.violations = structural_violations(g, ends);
    if (report.violations.empty()) {
        check_grouping(g, ends, g.grouping, &report.violations);
    }
    return report;
}

int connectivity_number(const CactoidGraph& g) {
    auto report = validate(g);
    if (!report.ok()) throw ValidationError("invalid cactoid: " + report.violations[0]);
    int sum = 0;
    for (const auto& p : g.pieces) sum += p.cls.reduced_connectivity;
    return sum + static_cast<int>(g.grouping.size());
}

std::vector<Continuum> minimal_preboundary(const CactoidGraph& g) {
    Ends ends;
    auto structural = structural_violations(g, ends);
    for (const auto& v : structural) {
        if (v.find("cannot be covered") != std::string::npos) throw NoPreBoundary(v);
    }
    if (!structural.empty()) throw ValidationError("invalid cactoid: " + structural[0]);

    std::vector<std::pair<int, int>> circles;
    for (int p = 0; p < static_cast<int>(g.pieces.size()); ++p) {
        if (g.pieces[p].shrinking_family) continue;
        for (int ci = 0; ci < g.pieces[p].cls.boundary_count; ++ci) circles.push_back({p, ci});
    }
    if (circles.empty()) return {};
    int n = static_cast<int>(circles.size());
    int nc = static_cast<int>(g.attachments.size() + g.trees.size());
    if (n > 6 || nc > 6) {
        throw ValidationError("exhaustive grouping search capped at 6 circles/connectors");
    }

    auto build = [&](const std::vector<int>& part, int blocks,
                     const std::vector<int>& assign) {
        std::vector<Continuum> grouping(blocks);
        for (int b = 0; b < blocks; ++b) grouping[b].name = "C" + std::to_string(b);
        for (int i = 0; i < n; ++i) grouping[part[i]].circles.push_back(circles[i]);
        for (int j = 0; j < nc; ++j) {
            if (assign[j] < 0) continue;
            if (j < static_cast<int>(g.attachments.size())) {
                grouping[assign[j]].wedges.push_back(g.attachments[j].name);
            } else {
                grouping[assign[j]].trees.push_back(
                    g.trees[j - g.attachments.size()].name);
            }
        }
        return grouping;
    };

    // partitions as restricted growth strings, connectors assigned to a
    // block or left out; keep the first feasible grouping of minimal count
    std::optional<std::vector<Continuum>> best;
    int best_blocks = n + 1;
    std::vector<int> part(n, 0);
    std::vector<int> assign(nc, -1);
    auto try_assignments = [&](int blocks) {
        std::function<bool(int)> rec = [&](int j) -> bool {
            if (j == nc) {
                auto grouping = build(part, blocks, assign);
                return check_grouping(g, ends, grouping, nullptr)
                           ? (best = std::move(grouping), true)
                           : false;
            }
            for (int b = -1; b < blocks; ++b) {
                assign[j] = b;
                if (rec(j + 1)) return true;
            }
            assign[j] = -1;
            return false;
        };
        return rec(0);
    };
    std::function<void(int, int)> enumerate = [&](int i, int blocks) {
        if (blocks >= best_blocks) return;
        if (i == n) {
            if (try_assignments(blocks)) best_blocks = blocks;
            return;
        }
        for (int b = 0; b <= blocks; ++b) {
            part[i] = b;
            enumerate(i + 1, std::max(blocks, b + 1));
        }
    };
    enumerate(0, 0);
    if (!best) throw NoPreBoundary("no admissible grouping covers all boundary circles");

    // maximal union: adjoin every connector whose point set meets exactly
    // one continuum, to a fixpoint
    auto grouping = *best;
    std::set<std::string> used_w, used_t;
    for (const auto& c : grouping) {
        used_w.insert(c.wedges.begin(), c.wedges.end());
        used_t.insert(c.trees.begin(), c.trees.end());
    }
    bool changed = true;
    while (changed) {
        changed = false;
        for (int j = 0; j < nc; ++j) {
            bool is_wedge = j < static_cast<int>(g.attachments.size());
            std::string name = is_wedge ? g.attachments[j].name
                                        : g.trees[j - g.attachments.size()].name;
            if (is_wedge ? used_w.count(name) : used_t.count(name)) continue;
            std::set<int> cls = is_wedge
                                    ? [&] {
                                          int r = wedge_class(g, ends, j);
                                          return r >= 0 ? std::set<int>{r} : std::set<int>{};
                                      }()
                                    : tree_classes(ends, j - g.attachments.size());
            int hit = -1, hits = 0;
            for (int b = 0; b < static_cast<int>(grouping.size()); ++b) {
                std::set<int> bc;
                for (auto [p, ci] : grouping[b].circles) {
                    auto cc = circle_classes(ends, p, ci);
                    bc.insert(cc.begin(), cc.end());
                }
                for (const auto& w : grouping[b].wedges) {
                    int r = wedge_class(g, ends, attachment_index(g, w));
                    if (r >= 0) bc.insert(r);
                }
                for (const auto& t : grouping[b].trees) {
                    auto cc = tree_classes(ends, tree_index(g, t));
                    bc.insert(cc.begin(), cc.end());
                }
                for (int cl : cls) {
                    if (bc.count(cl)) {
                        ++hits;
                        hit = b;
                        break;
                    }
                }
            }
            if (hits != 1) continue;
            auto candidate = grouping;
            if (is_wedge) {
                candidate[hit].wedges.push_back(name);
            } else {
                candidate[hit].trees.push_back(name);
            }
            if (check_grouping(g, ends, candidate, nullptr)) {
                grouping = std::move(candidate);
                (is_wedge ? used_w : used_t).insert(name);
                changed = true;
            }
        }
    }
    return grouping;
}

SimpleGraph continuum_realization(const CactoidGraph& g, const Continuum& c) {
    Ends ends;
    auto structural = structural_violations(g, ends);
    if (!structural.empty()) throw ValidationError("invalid cactoid: " + structural[0]);

    SimpleGraph out;
    std::map<int, int> class_vertex;
    auto vertex_of_class = [&](int cl) {
        auto it = class_vertex.find(cl);
        if (it != class_vertex.end()) return it->second;
        int v = out.n++;
        class_vertex.emplace(cl, v);
        return v;
    };

    for (auto [p, ci] : c.circles) {
        std::vector<int> ring;
        for (int cl : circle_classes(ends, p, ci)) ring.push_back(vertex_of_class(cl));
        while (ring.size() < 2) ring.push_back(out.n++);  // pad so the cycle is a graph cycle
        for (size_t i = 0; i < ring.size(); ++i) {
            out.edges.emplace_back(ring[i], ring[(i + 1) % ring.size()]);
        }
    }
    for (const auto& w : c.wedges) {
        int idx = attachment_index(g, w);
        int cl = wedge_class(g, ends, idx);
        if (cl >= 0) vertex_of_class(cl);
    }
    for (const auto& tn : c.trees) {
        int ti = tree_index(g, tn);
        const auto& t = g.trees[ti];
        std::vector<int> node_vertex(t.nodes.size(), -1);
        for (int i = 0; i < static_cast<int>(ends.list.size()); ++i) {
            const auto& e = ends.list[i];
            if (e.is_tree && e.owner == ti) {
                node_vertex[t.node_index(e.point)] = vertex_of_class(ends.uf.find(i));
            }
        }
        for (auto& v : node_vertex) {
            if (v < 0) v = out.n++;
        }
        for (const auto& e : t.edges) {
            out.edges.emplace_back(node_vertex[e.u], node_vertex[e.v]);
        }
    }
    return out;
}

Pi1Signature pi1_signature(const CactoidGraph& g, const GluingHistory& h) {
    auto report = validate(g);
    if (!report.ok()) throw ValidationError("invalid cactoid: " + report.violations[0]);
    Pi1Signature sig;
    for (const auto& p : g.pieces) {
        bool sphere = p.cls.connectivity == 0 && p.cls.boundary_count == 0;
        bool disc = p.cls.connectivity == 1 && p.cls.boundary_count == 1;
        if (!sphere && !disc) sig.surface_factors.push_back(p.cls);
    }
    sig.free_rank = h.k();
    return sig;
}

MainTheoremCertificate certify(int c_target, const CactoidGraph& g,
                               const GluingHistory& h) {
    MainTheoremCertificate cert;
    cert.c_target = c_target;
    cert.c0 = connectivity_number(g);
    cert.k = h.k();
    cert.k0 = h.k0();
    cert.verdict = cert.c0 <= c_target + cert.k0 - 2 * cert.k;
    return cert;
}

}  // namespace cactoidlab
