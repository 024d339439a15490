#include "cactoidlab/graphs.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace cactoidlab {

namespace {

struct DfsState {
    std::vector<std::vector<std::pair<int, int>>> adj;  // (neighbour, edge index)
    std::vector<int> disc, low;
    std::vector<int> edge_stack;
    std::vector<bool> edge_used;
    int timer = 0;
    std::vector<std::vector<int>> blocks;
    std::set<int> cuts;
};

void dfs(DfsState& st, int u, int parent_edge) {
    st.disc[u] = st.low[u] = st.timer++;
    int children = 0;
    for (auto [v, e] : st.adj[u]) {
        if (e == parent_edge) continue;
        if (!st.edge_used[e]) {
            st.edge_used[e] = true;
            st.edge_stack.push_back(e);
        }
        if (st.disc[v] < 0) {
            ++children;
            dfs(st, v, e);
            st.low[u] = std::min(st.low[u], st.low[v]);
            if (st.low[v] >= st.disc[u]) {
                // u closes a block; pop the stack down to e
                std::vector<int> block;
                while (true) {
                    int top = st.edge_stack.back();
                    st.edge_stack.pop_back();
                    block.push_back(top);
                    if (top == e) break;
                }
                std::sort(block.begin(), block.end());
                st.blocks.push_back(std::move(block));
                if (parent_edge >= 0 || children > 1) st.cuts.insert(u);
            }
        } else {
            st.low[u] = std::min(st.low[u], st.disc[v]);
        }
    }
}

}  // namespace

BlockDecomposition block_decomposition(const SimpleGraph& g) {
    if (g.n <= 0) throw ValidationError("empty graph");
    DfsState st;
    st.adj.resize(g.n);
    for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
        auto [u, v] = g.edges[e];
        if (u < 0 || u >= g.n || v < 0 || v >= g.n) {
            throw ValidationError("edge endpoint out of range");
        }
        if (u == v) throw ValidationError("self loop");
        st.adj[u].emplace_back(v, e);
        st.adj[v].emplace_back(u, e);
    }
    st.disc.assign(g.n, -1);
    st.low.assign(g.n, -1);
    st.edge_used.assign(g.edges.size(), false);
    dfs(st, 0, -1);
    for (int v = 0; v < g.n; ++v) {
        if (st.disc[v] < 0) throw ValidationError("disconnected graph");
    }
    std::sort(st.blocks.begin(), st.blocks.end());
    BlockDecomposition out;
    out.blocks = std::move(st.blocks);
    out.cut_vertices.assign(st.cuts.begin(), st.cuts.end());
    return out;
}

std::vector<int> block_vertices(const SimpleGraph& g, const std::vector<int>& block) {
    std::set<int> vs;
    for (int e : block) {
        vs.insert(g.edges[e].first);
        vs.insert(g.edges[e].second);
    }
    return {vs.begin(), vs.end()};
}

bool is_one_cactoid(const SimpleGraph& g) {
    auto dec = block_decomposition(g);
    for (const auto& block : dec.blocks) {
        if (block.size() <= 1) continue;  // degenerate block, an edge
        // simple cycle: as many vertices as edges, all block degrees 2
        auto vs = block_vertices(g, block);
        if (vs.size() != block.size()) return false;
        std::vector<int> deg(g.n, 0);
        for (int e : block) {
            ++deg[g.edges[e].first];
            ++deg[g.edges[e].second];
        }
        for (int v : vs) {
            if (deg[v] != 2) return false;
        }
    }
    return true;
}

}  // namespace cactoidlab
