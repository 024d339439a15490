#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cactoidlab/scalar.hpp"

namespace cactoidlab {

struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A labeled point set with an exact symmetric distance matrix. Immutable
// after construction; `create` validates the metric axioms, the unchecked
// variant is for outputs that satisfy them by construction (shortest-path
// closures) where the O(n^3) re-check would dominate.
class FiniteMetricSpace {
  public:
    FiniteMetricSpace() = default;  // empty space placeholder

    static FiniteMetricSpace create(std::vector<std::string> labels,
                                    std::vector<std::vector<Rational>> dist);
    static FiniteMetricSpace create_unchecked(std::vector<std::string> labels,
                                              std::vector<std::vector<Rational>> dist);

    int size() const { return static_cast<int>(labels_.size()); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(int i) const { return labels_[i]; }
    const Rational& dist(int i, int j) const { return dist_[i][j]; }
    const std::vector<std::vector<Rational>>& matrix() const { return dist_; }

    int index_of(const std::string& label) const;  // throws if absent
    std::optional<int> find(const std::string& label) const;

    Rational diameter() const;
    // min over x of max over y of d(x, y)
    Rational radius() const;

    // Restriction to a subset of indices (kept in the given order).
    FiniteMetricSpace restrict(const std::vector<int>& indices) const;

    // Checks the metric axioms, returning the first violation or nullopt.
    // positivity=false allows zero distances off the diagonal (pseudometric).
    static std::optional<std::string> check_axioms(
        const std::vector<std::string>& labels,
        const std::vector<std::vector<Rational>>& dist, bool positivity = true);

  private:
    std::vector<std::string> labels_;
    std::vector<std::vector<Rational>> dist_;
};

using MetricPtr = std::shared_ptr<const FiniteMetricSpace>;

// A relation between the index sets of two spaces covering both sides.
struct Correspondence {
    std::vector<std::pair<int, int>> pairs;

    bool covers(int size_x, int size_y) const;
};

// A total map between two finite metric spaces, by index.
struct PointMap {
    MetricPtr source;
    MetricPtr target;
    std::vector<int> assignment;  // assignment[i] = target index of source point i

    void validate() const;  // totality and range
};

}  // namespace cactoidlab
