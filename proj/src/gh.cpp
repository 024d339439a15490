#include "cactoidlab/gh.hpp"

#include <algorithm>
#include <numeric>

namespace cactoidlab {

Rational distortion(const PointMap& f) {
    f.validate();
    const auto& x = *f.source;
    const auto& y = *f.target;
    Rational worst = 0;
    for (int i = 0; i < x.size(); ++i) {
        for (int j = i + 1; j < x.size(); ++j) {
            Rational dev = y.dist(f.assignment[i], f.assignment[j]) - x.dist(i, j);
            if (dev < 0) dev = -dev;
            if (dev > worst) worst = dev;
        }
    }
    return worst;
}

bool is_eps_isometry(const PointMap& f, const Rational& eps) {
    if (eps < 0) throw ValidationError("negative eps");
    if (distortion(f) > eps) return false;
    const auto& y = *f.target;
    for (int t = 0; t < y.size(); ++t) {
        Rational best = -1;
        for (int i : f.assignment) {
            if (best < 0 || y.dist(t, i) < best) best = y.dist(t, i);
        }
        if (best > eps) return false;
    }
    return true;
}

Rational gh_upper(const FiniteMetricSpace& x, const FiniteMetricSpace& y,
                  const Correspondence& r) {
    if (!r.covers(x.size(), y.size())) {
        throw ValidationError("correspondence does not cover both spaces");
    }
    Rational worst = 0;
    const auto& pairs = r.pairs;
    for (size_t a = 0; a < pairs.size(); ++a) {
        for (size_t b = a + 1; b < pairs.size(); ++b) {
            Rational dev = x.dist(pairs[a].first, pairs[b].first) -
                           y.dist(pairs[a].second, pairs[b].second);
            if (dev < 0) dev = -dev;
            if (dev > worst) worst = dev;
        }
    }
    return worst / 2;
}

namespace {

// Deterministic point order: decreasing eccentricity, ties by label.
std::vector<int> search_order(const FiniteMetricSpace& s) {
    std::vector<Rational> ecc(s.size(), 0);
    for (int i = 0; i < s.size(); ++i) {
        for (int j = 0; j < s.size(); ++j) {
            if (s.dist(i, j) > ecc[i]) ecc[i] = s.dist(i, j);
        }
    }
    std::vector<int> order(s.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (ecc[a] != ecc[b]) return ecc[a] > ecc[b];
        return s.label(a) < s.label(b);
    });
    return order;
}

// The optimum is attained on minimal correspondences, and every minimal
// correspondence is graph(f) together with one pair per f-uncovered point
// of Y. The search assigns f point by point, then covers the remaining
// points of Y, pruning against the best full distortion found so far.
class GhSearch {
  public:
    GhSearch(const FiniteMetricSpace& x, const FiniteMetricSpace& y)
        : x_(x), y_(y), order_x_(search_order(x)), order_y_(search_order(y)) {}

    Rational run() {
        best_ = seed();
        pairs_.clear();
        covered_y_.assign(y_.size(), 0);
        descend_x(0, 0);
        return best_ / 2;
    }

  private:
    Rational seed() {
        // Greedy assignment gives an initial upper bound on the distortion.
        pairs_.clear();
        covered_y_.assign(y_.size(), 0);
        Rational dev = 0;
        for (int xi : order_x_) {
            int pick = -1;
            Rational pick_dev;
            for (int yj = 0; yj < y_.size(); ++yj) {
                Rational d = added_dev(xi, yj);
                if (pick < 0 || d < pick_dev) {
                    pick = yj;
                    pick_dev = d;
                }
            }
            pairs_.emplace_back(xi, pick);
            covered_y_[pick] = 1;
            if (pick_dev > dev) dev = pick_dev;
        }
        for (int yj : order_y_) {
            if (covered_y_[yj]) continue;
            int pick = -1;
            Rational pick_dev;
            for (int xi = 0; xi < x_.size(); ++xi) {
                Rational d = added_dev(xi, yj);
                if (pick < 0 || d < pick_dev) {
                    pick = xi;
                    pick_dev = d;
                }
            }
            pairs_.emplace_back(pick, yj);
            if (pick_dev > dev) dev = pick_dev;
        }
        return dev;
    }

    Rational added_dev(int xi, int yj) const {
        Rational worst = 0;
        for (const auto& [xs, ys] : pairs_) {
            Rational dev = x_.dist(xs, xi) - y_.dist(ys, yj);
            if (dev < 0) dev = -dev;
            if (dev > worst) worst = dev;
        }
        return worst;
    }

    void descend_x(size_t depth, Rational current) {
        if (current >= best_) return;
        if (depth == order_x_.size()) {
            descend_y(0, current);
            return;
        }
        int xi = order_x_[depth];
        for (int yj = 0; yj < y_.size(); ++yj) {
            Rational dev = added_dev(xi, yj);
            if (dev < current) dev = current;
            if (dev >= best_) continue;
            pairs_.emplace_back(xi, yj);
            ++covered_y_[yj];
            descend_x(depth + 1, dev);
            --covered_y_[yj];
            pairs_.pop_back();
        }
    }

    void descend_y(size_t from, Rational current) {
        size_t pos = from;
        while (pos < order_y_.size() && covered_y_[order_y_[pos]]) ++pos;
        if (pos == order_y_.size()) {
            if (current < best_) best_ = current;
            return;
        }
        int yj = order_y_[pos];
        for (int xi = 0; xi < x_.size(); ++xi) {
            Rational dev = added_dev(xi, yj);
            if (dev < current) dev = current;
            if (dev >= best_) continue;
            pairs_.emplace_back(xi, yj);
            ++covered_y_[yj];
            descend_y(pos + 1, dev);
            --covered_y_[yj];
            pairs_.pop_back();
        }
    }

    const FiniteMetricSpace& x_;
    const FiniteMetricSpace& y_;
    std::vector<int> order_x_, order_y_;
    std::vector<std::pair<int, int>> pairs_;
    std::vector<int> covered_y_;
    Rational best_;
};

}  // namespace

Rational gh_exact(const FiniteMetricSpace& x, const FiniteMetricSpace& y, int size_cap) {
    if (x.size() > size_cap || y.size() > size_cap) {
        throw CapExceeded("space exceeds gh_exact cap of " + std::to_string(size_cap) +
                          " points; use bounds instead");
    }
    if (x.size() == 0 || y.size() == 0) {
        throw ValidationError("gh_exact requires non-empty spaces");
    }
    GhSearch search(x, y);
    return search.run();
}

Rational gh_lower(const FiniteMetricSpace& x, const FiniteMetricSpace& y) {
    Rational diam = x.diameter() - y.diameter();
    if (diam < 0) diam = -diam;
    Rational rad = x.radius() - y.radius();
    if (rad < 0) rad = -rad;
    return (diam > rad ? diam : rad) / 2;
}

Rational hausdorff_in(const FiniteMetricSpace& z, const std::vector<int>& a,
                      const std::vector<int>& b) {
    if (a.empty() || b.empty()) throw ValidationError("hausdorff_in with empty subset");
    Rational worst = 0;
    auto one_sided = [&](const std::vector<int>& from, const std::vector<int>& to) {
        for (int p : from) {
            Rational best = -1;
            for (int q : to) {
                if (best < 0 || z.dist(p, q) < best) best = z.dist(p, q);
            }
            if (best > worst) worst = best;
        }
    };
    one_sided(a, b);
    one_sided(b, a);
    return worst;
}

NetSample net_sample(const FiniteMetricSpace& x, int k) {
    if (k < 1 || k > x.size()) throw ValidationError("net_sample size out of range");
    int seed = 0;
    for (int i = 1; i < x.size(); ++i) {
        if (x.label(i) < x.label(seed)) seed = i;
    }
    std::vector<int> chosen{seed};
    std::vector<Rational> dist_to_sample(x.size());
    for (int i = 0; i < x.size(); ++i) dist_to_sample[i] = x.dist(seed, i);
    while (static_cast<int>(chosen.size()) < k) {
        int far = 0;
        for (int i = 1; i < x.size(); ++i) {
            if (dist_to_sample[i] > dist_to_sample[far]) far = i;
        }
        chosen.push_back(far);
        for (int i = 0; i < x.size(); ++i) {
            if (x.dist(far, i) < dist_to_sample[i]) dist_to_sample[i] = x.dist(far, i);
        }
    }
    Rational radius = 0;
    for (int i = 0; i < x.size(); ++i) {
        if (dist_to_sample[i] > radius) radius = dist_to_sample[i];
    }
    return {std::move(chosen), radius};
}

namespace {

bool extend_isometry(const FiniteMetricSpace& x, const FiniteMetricSpace& y,
                     std::vector<int>& perm, std::vector<char>& used, int depth) {
    if (depth == x.size()) return true;
    for (int j = 0; j < y.size(); ++j) {
        if (used[j]) continue;
        bool ok = true;
        for (int i = 0; i < depth; ++i) {
            if (x.dist(i, depth) != y.dist(perm[i], j)) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        perm[depth] = j;
        used[j] = 1;
        if (extend_isometry(x, y, perm, used, depth + 1)) return true;
        used[j] = 0;
    }
    return false;
}

}  // namespace

bool are_isometric(const FiniteMetricSpace& x, const FiniteMetricSpace& y) {
    if (x.size() != y.size()) return false;
    std::vector<int> perm(x.size(), -1);
    std::vector<char> used(y.size(), 0);
    return extend_isometry(x, y, perm, used, 0);
}

}  // namespace cactoidlab
