#pragma once

#include <string>
#include <vector>

#include "cactoidlab/metric_space.hpp"

namespace cactoidlab {

struct SimpleGraph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;
};

struct BlockDecomposition {
    std::vector<std::vector<int>> blocks;  // per block, edge indices
    std::vector<int> cut_vertices;
};

// Standard cut-vertex and biconnected-component decomposition.
// Throws on disconnected input.
BlockDecomposition block_decomposition(const SimpleGraph& g);

// Vertex set of a block.
std::vector<int> block_vertices(const SimpleGraph& g, const std::vector<int>& block);

// True iff every non-degenerate block (more than one edge) is a simple cycle.
bool is_one_cactoid(const SimpleGraph& g);

}  // namespace cactoidlab
