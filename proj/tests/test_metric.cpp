#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <memory>
#include <random>

#include "cactoidlab/gh.hpp"
#include "cactoidlab/scalar.hpp"

using namespace cactoidlab;

namespace {

FiniteMetricSpace two_point(const Rational& d) {
    return FiniteMetricSpace::create({"p", "q"}, {{0, d}, {d, 0}});
}

FiniteMetricSpace one_point() { return FiniteMetricSpace::create({"o"}, {{0}}); }

// Random metric by shortest-path closure of a random symmetric matrix.
FiniteMetricSpace random_metric(std::mt19937& rng, int n) {
    std::uniform_int_distribution<int> num(1, 40);
    std::vector<std::vector<Rational>> d(n, std::vector<Rational>(n, 0));
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            d[i][j] = d[j][i] = Rational(num(rng), 8);
        }
    }
    for (int k = 0; k < n; ++k) {
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                if (d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
            }
        }
    }
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) labels.push_back("x" + std::to_string(i));
    return FiniteMetricSpace::create(std::move(labels), std::move(d));
}

// Exhaustive GH by enumerating pairs of maps (f: X->Y, g: Y->X); the
// optimal correspondence is graph(f) united with the transpose of graph(g).
Rational gh_oracle(const FiniteMetricSpace& x, const FiniteMetricSpace& y) {
    const int n = x.size(), m = y.size();
    std::vector<std::vector<int>> fs, gs;
    std::vector<int> cur(n, 0);
    auto enumerate = [](int len, int base, std::vector<std::vector<int>>& out) {
        std::vector<int> v(len, 0);
        while (true) {
            out.push_back(v);
            int i = 0;
            while (i < len && ++v[i] == base) v[i++] = 0;
            if (i == len) break;
        }
    };
    enumerate(n, m, fs);
    enumerate(m, n, gs);
    auto dis_map = [](const FiniteMetricSpace& a, const FiniteMetricSpace& b,
                      const std::vector<int>& f) {
        Rational worst = 0;
        for (int i = 0; i < a.size(); ++i) {
            for (int j = i + 1; j < a.size(); ++j) {
                Rational dev = a.dist(i, j) - b.dist(f[i], f[j]);
                if (dev < 0) dev = -dev;
                if (dev > worst) worst = dev;
            }
        }
        return worst;
    };
    std::vector<Rational> disf, disg;
    for (const auto& f : fs) disf.push_back(dis_map(x, y, f));
    for (const auto& g : gs) disg.push_back(dis_map(y, x, g));
    Rational best = -1;
    for (size_t a = 0; a < fs.size(); ++a) {
        if (best >= 0 && disf[a] >= best) continue;
        for (size_t b = 0; b < gs.size(); ++b) {
            Rational worst = disf[a] > disg[b] ? disf[a] : disg[b];
            if (best >= 0 && worst >= best) continue;
            for (int i = 0; i < n && (best < 0 || worst < best); ++i) {
                for (int j = 0; j < m; ++j) {
                    Rational dev = x.dist(i, gs[b][j]) - y.dist(fs[a][i], j);
                    if (dev < 0) dev = -dev;
                    if (dev > worst) worst = dev;
                }
            }
            if (best < 0 || worst < best) best = worst;
        }
    }
    (void)cur;
    return best / 2;
}

}  // namespace

TEST_CASE("scalar parsing and printing") {
    CHECK(parse_scalar("3") == Rational(3));
    CHECK(parse_scalar("-1.25") == Rational(-5, 4));
    CHECK(parse_scalar("1/3") == Rational(1, 3));
    CHECK(parse_scalar("0.5") == Rational(1, 2));
    CHECK(parse_scalar("0.0234375") == Rational(3, 128));  // leading zeros are decimal
    CHECK(parse_scalar("007/010") == Rational(7, 10));
    CHECK_THROWS_AS(parse_scalar("1e3"), ParseError);
    CHECK_THROWS_AS(parse_scalar("1/0"), ParseError);
    CHECK(scalar_to_string(Rational(5, 4)) == "1.25");
    CHECK(scalar_to_string(Rational(1, 3)) == "1/3");
    CHECK(scalar_to_string(Rational(-7, 2)) == "-3.5");
    CHECK(scalar_to_string(Rational(4)) == "4");
    CHECK(parse_scalar(scalar_to_string(Rational(123, 320))) == Rational(123, 320));
}

TEST_CASE("metric axiom validation") {
    CHECK_THROWS_AS(FiniteMetricSpace::create({"a", "a"}, {{0, 1}, {1, 0}}), ValidationError);
    CHECK_THROWS_AS(FiniteMetricSpace::create({"a", "b"}, {{0, 1}, {2, 0}}), ValidationError);
    CHECK_THROWS_AS(FiniteMetricSpace::create({"a", "b"}, {{0, 0}, {0, 0}}), ValidationError);
    // triangle violation: d(a,c) = 5 > 1 + 1
    CHECK_THROWS_AS(FiniteMetricSpace::create({"a", "b", "c"},
                                              {{0, 1, 5}, {1, 0, 1}, {5, 1, 0}}),
                    ValidationError);
    auto err = FiniteMetricSpace::check_axioms({"a", "b"}, {{0, Rational(-1)}, {Rational(-1), 0}});
    REQUIRE(err.has_value());
    CHECK(err->find("negative") != std::string::npos);
}

TEST_CASE("distortion and eps isometry") {
    auto x = std::make_shared<FiniteMetricSpace>(two_point(1));
    auto o = std::make_shared<FiniteMetricSpace>(one_point());
    PointMap collapse{x, o, {0, 0}};
    CHECK(distortion(collapse) == 1);
    PointMap identity{x, x, {0, 1}};
    CHECK(distortion(identity) == 0);
    CHECK(is_eps_isometry(identity, 0));
    CHECK(is_eps_isometry(collapse, 1));
    CHECK_FALSE(is_eps_isometry(collapse, Rational(1, 2)));
    PointMap include{o, x, {0}};
    CHECK(distortion(include) == 0);
    CHECK(is_eps_isometry(include, 1));
    CHECK_FALSE(is_eps_isometry(include, Rational(1, 2)));

    auto eq = std::make_shared<FiniteMetricSpace>(FiniteMetricSpace::create(
        {"a", "b", "c"}, {{0, 1, 1}, {1, 0, 1}, {1, 1, 0}}));
    PointMap fold{eq, x, {0, 0, 1}};
    CHECK(distortion(fold) == 1);
}

TEST_CASE("gh_upper on explicit correspondences") {
    auto x = two_point(Rational(3, 2));
    Correspondence diag{{{0, 0}, {1, 1}}};
    CHECK(gh_upper(x, x, diag) == 0);

    auto o = one_point();
    Correspondence full{{{0, 0}, {0, 1}}};
    CHECK(gh_upper(o, x, full) == Rational(3, 4));

    auto a = two_point(Rational(2));
    auto b = two_point(Rational(5));
    Correspondence order{{{0, 0}, {1, 1}}};
    CHECK(gh_upper(a, b, order) == Rational(3, 2));

    Correspondence bad{{{0, 0}}};
    CHECK_THROWS_AS(gh_upper(a, b, bad), ValidationError);
}

TEST_CASE("gh_exact closed forms") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> num(1, 60);
    for (int t = 0; t < 50; ++t) {
        Rational D(num(rng), 4), A(num(rng), 4), B(num(rng), 4);
        CHECK(gh_exact(one_point(), two_point(D)) == D / 2);
        Rational diff = A - B;
        if (diff < 0) diff = -diff;
        CHECK(gh_exact(two_point(A), two_point(B)) == diff / 2);
    }
}

TEST_CASE("gh_exact identity, symmetry, cap") {
    std::mt19937 rng(11);
    for (int t = 0; t < 10; ++t) {
        auto x = random_metric(rng, 2 + t % 4);
        auto y = random_metric(rng, 2 + (t + 1) % 4);
        CHECK(gh_exact(x, x) == 0);
        CHECK(gh_exact(x, y) == gh_exact(y, x));
    }
    auto big = random_metric(rng, 9);
    CHECK_THROWS_AS(gh_exact(big, big), CapExceeded);
}

TEST_CASE("gh_exact matches exhaustive oracle on small random corpus") {
    std::mt19937 rng(23);
    for (int t = 0; t < 15; ++t) {
        auto x = random_metric(rng, 2 + t % 3);
        auto y = random_metric(rng, 2 + (t + 1) % 3);
        CHECK(gh_exact(x, y) == gh_oracle(x, y));
    }
}

TEST_CASE("bound sandwich and zero iff isometric") {
    std::mt19937 rng(31);
    for (int t = 0; t < 12; ++t) {
        auto x = random_metric(rng, 2 + t % 4);
        auto y = random_metric(rng, 2 + (t + 2) % 4);
        Rational exact = gh_exact(x, y);
        CHECK(gh_lower(x, y) <= exact);
        // any covering correspondence upper-bounds
        Correspondence all;
        for (int i = 0; i < x.size(); ++i) {
            for (int j = 0; j < y.size(); ++j) all.pairs.emplace_back(i, j);
        }
        CHECK(exact <= gh_upper(x, y, all));
        CHECK((exact == 0) == are_isometric(x, y));
    }
}

TEST_CASE("gh triangle inequality on small triples") {
    std::mt19937 rng(41);
    for (int t = 0; t < 8; ++t) {
        auto x = random_metric(rng, 2 + t % 3);
        auto y = random_metric(rng, 2 + (t + 1) % 3);
        auto z = random_metric(rng, 2 + (t + 2) % 3);
        CHECK(gh_exact(x, z) <= gh_exact(x, y) + gh_exact(y, z));
    }
}

TEST_CASE("hausdorff_in") {
    auto x = two_point(Rational(5));
    CHECK(hausdorff_in(x, {0}, {0}) == 0);
    CHECK(hausdorff_in(x, {0}, {0, 1}) == 5);
    CHECK(hausdorff_in(x, {0}, {1}) == 5);
    CHECK_THROWS_AS(hausdorff_in(x, {}, {0}), ValidationError);
}

TEST_CASE("net_sample determinism and radii") {
    auto cyc = FiniteMetricSpace::create({"a", "b", "c"},
                                         {{0, 1, 1}, {1, 0, 1}, {1, 1, 0}});
    auto full = net_sample(cyc, 3);
    CHECK(full.net_radius == 0);
    auto one = net_sample(two_point(Rational(7)), 1);
    CHECK(one.net_radius == 7);
    auto two = net_sample(cyc, 2);
    CHECK(two.net_radius == 1);
    CHECK(two.indices[0] == 0);  // seeded at lexicographically first label

    std::mt19937 rng(53);
    auto x = random_metric(rng, 7);
    Rational prev;
    for (int k = 1; k <= 7; ++k) {
        auto s = net_sample(x, k);
        if (k > 1) CHECK(s.net_radius <= prev);
        prev = s.net_radius;
        // sampling error bound: restricted space within net_radius in GH
        Correspondence r;
        for (int i = 0; i < x.size(); ++i) {
            int bestj = 0;
            for (size_t j = 1; j < s.indices.size(); ++j) {
                if (x.dist(i, s.indices[j]) < x.dist(i, s.indices[bestj])) {
                    bestj = static_cast<int>(j);
                }
            }
            r.pairs.emplace_back(i, bestj);
        }
        for (size_t j = 0; j < s.indices.size(); ++j) {
            r.pairs.emplace_back(s.indices[j], static_cast<int>(j));
        }
        CHECK(gh_upper(x, x.restrict(s.indices), r) <= s.net_radius);
    }
}
