#pragma once

#include <vector>

#include "cactoidlab/metric_space.hpp"

namespace cactoidlab {

struct CapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// sup over pairs (x1,x2) of |d_Y(f x1, f x2) - d_X(x1,x2)|
Rational distortion(const PointMap& f);

// dis(f) <= eps and f(X) is an eps-net in Y.
bool is_eps_isometry(const PointMap& f, const Rational& eps);

// Half the distortion of R; an upper bound for the GH distance.
Rational gh_upper(const FiniteMetricSpace& x, const FiniteMetricSpace& y,
                  const Correspondence& r);

// Exact GH distance by deterministic branch-and-bound over correspondences.
// Throws CapExceeded when either space is larger than size_cap.
Rational gh_exact(const FiniteMetricSpace& x, const FiniteMetricSpace& y, int size_cap = 8);

// max(|diam X - diam Y|, |rad X - rad Y|) / 2. Never exceeds gh_exact.
Rational gh_lower(const FiniteMetricSpace& x, const FiniteMetricSpace& y);

// Two-sided Hausdorff distance between index subsets of one ambient space.
Rational hausdorff_in(const FiniteMetricSpace& z, const std::vector<int>& a,
                      const std::vector<int>& b);

struct NetSample {
    std::vector<int> indices;
    Rational net_radius;
};

// Greedy farthest-point sample of size k, seeded at the lexicographically
// first label. Ties in the farthest choice go to the smallest index.
NetSample net_sample(const FiniteMetricSpace& x, int k);

// Brute-force isometry test (label-blind), used as an oracle at desk scale.
bool are_isometric(const FiniteMetricSpace& x, const FiniteMetricSpace& y);

}  // namespace cactoidlab
