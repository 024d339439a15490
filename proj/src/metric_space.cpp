#include "cactoidlab/metric_space.hpp"

#include <algorithm>

namespace cactoidlab {

std::optional<std::string> FiniteMetricSpace::check_axioms(
    const std::vector<std::string>& labels,
    const std::vector<std::vector<Rational>>& dist, bool positivity) {
    const int n = static_cast<int>(labels.size());
    if (static_cast<int>(dist.size()) != n) return "distance matrix row count != label count";
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(dist[i].size()) != n) {
            return "row " + std::to_string(i) + " has wrong length";
        }
    }
    {
        std::vector<std::string> sorted = labels;
        std::sort(sorted.begin(), sorted.end());
        auto dup = std::adjacent_find(sorted.begin(), sorted.end());
        if (dup != sorted.end()) return "duplicate label '" + *dup + "'";
    }
    for (int i = 0; i < n; ++i) {
        if (dist[i][i] != 0) return "dist[" + std::to_string(i) + "][" + std::to_string(i) + "] != 0";
        for (int j = 0; j < i; ++j) {
            if (dist[i][j] != dist[j][i]) {
                return "asymmetry at (" + labels[i] + "," + labels[j] + ")";
            }
            if (dist[i][j] < 0) {
                return "negative distance at (" + labels[i] + "," + labels[j] + ")";
            }
            if (positivity && dist[i][j] == 0) {
                return "zero distance between distinct points (" + labels[i] + "," + labels[j] + ")";
            }
        }
    }
    for (int k = 0; k < n; ++k) {
        for (int i = 0; i < n; ++i) {
            const Rational& dik = dist[i][k];
            for (int j = 0; j < n; ++j) {
                if (dist[i][j] > dik + dist[k][j]) {
                    return "triangle inequality fails for (" + labels[i] + "," + labels[j] +
                           ") via " + labels[k];
                }
            }
        }
    }
    return std::nullopt;
}

FiniteMetricSpace FiniteMetricSpace::create(std::vector<std::string> labels,
                                            std::vector<std::vector<Rational>> dist) {
    if (auto err = check_axioms(labels, dist)) throw ValidationError(*err);
    return create_unchecked(std::move(labels), std::move(dist));
}

FiniteMetricSpace FiniteMetricSpace::create_unchecked(std::vector<std::string> labels,
                                                      std::vector<std::vector<Rational>> dist) {
    FiniteMetricSpace space;
    space.labels_ = std::move(labels);
    space.dist_ = std::move(dist);
    return space;
}

int FiniteMetricSpace::index_of(const std::string& label) const {
    auto idx = find(label);
    if (!idx) throw ValidationError("unknown point label '" + label + "'");
    return *idx;
}

std::optional<int> FiniteMetricSpace::find(const std::string& label) const {
    for (int i = 0; i < size(); ++i) {
        if (labels_[i] == label) return i;
    }
    return std::nullopt;
}

Rational FiniteMetricSpace::diameter() const {
    Rational best = 0;
    for (int i = 0; i < size(); ++i) {
        for (int j = i + 1; j < size(); ++j) {
            if (dist_[i][j] > best) best = dist_[i][j];
        }
    }
    return best;
}

Rational FiniteMetricSpace::radius() const {
    if (size() == 0) return 0;
    Rational best;
    bool first = true;
    for (int i = 0; i < size(); ++i) {
        Rational ecc = 0;
        for (int j = 0; j < size(); ++j) {
            if (dist_[i][j] > ecc) ecc = dist_[i][j];
        }
        if (first || ecc < best) {
            best = ecc;
            first = false;
        }
    }
    return best;
}

FiniteMetricSpace FiniteMetricSpace::restrict(const std::vector<int>& indices) const {
    std::vector<std::string> labels;
    labels.reserve(indices.size());
    for (int i : indices) labels.push_back(labels_[i]);
    std::vector<std::vector<Rational>> dist(indices.size(),
                                            std::vector<Rational>(indices.size()));
    for (size_t a = 0; a < indices.size(); ++a) {
        for (size_t b = 0; b < indices.size(); ++b) {
            dist[a][b] = dist_[indices[a]][indices[b]];
        }
    }
    return create_unchecked(std::move(labels), std::move(dist));
}

bool Correspondence::covers(int size_x, int size_y) const {
    std::vector<char> cx(size_x, 0), cy(size_y, 0);
    for (const auto& [i, j] : pairs) {
        if (i < 0 || i >= size_x || j < 0 || j >= size_y) return false;
        cx[i] = 1;
        cy[j] = 1;
    }
    return std::all_of(cx.begin(), cx.end(), [](char c) { return c; }) &&
           std::all_of(cy.begin(), cy.end(), [](char c) { return c; });
}

void PointMap::validate() const {
    if (!source || !target) throw ValidationError("point map with missing space reference");
    if (static_cast<int>(assignment.size()) != source->size()) {
        throw ValidationError("point map not total on its source");
    }
    for (int v : assignment) {
        if (v < 0 || v >= target->size()) throw ValidationError("point map value out of range");
    }
}

}  // namespace cactoidlab
