#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "rumorcast/forest.hpp"
#include "rumorcast/rng.hpp"

using namespace rumorcast;

namespace {

// n rows, d uniform features; y thresholds feature `informative`.
struct Planted {
    Matrix X;
    std::vector<int> y;
};

Planted planted_dataset(std::size_t n, std::size_t d, std::size_t informative,
                        std::uint64_t seed) {
    Planted p;
    p.X = Matrix(n, d);
    p.y.resize(n);
    Rng rng(seed);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < d; ++j) p.X.at(i, j) = rng.uniform();
        p.y[i] = p.X.at(i, informative) > 0.5 ? 1 : 0;
    }
    return p;
}

std::vector<std::string> feature_names(std::size_t d) {
    std::vector<std::string> names;
    for (std::size_t j = 0; j < d; ++j) names.push_back("f" + std::to_string(j));
    return names;
}

}  // namespace

TEST_CASE("a planted informative feature ranks first") {
    const Planted p = planted_dataset(400, 10, 3, 12345);
    ForestParams params;
    params.n_trees = 50;
    params.max_depth = 8;
    params.seed = 7;
    const ForestModel model = fit_forest(p.X.view(), p.y, params);
    const FeatureRanking ranking = rank_features(model, feature_names(10));
    CHECK(ranking.entries.front().first == "f3");
    CHECK(ranking.entries.front().second > 0.5);
}

TEST_CASE("duplicating a feature splits its importance") {
    const Planted p = planted_dataset(400, 10, 3, 99);
    ForestParams params;
    params.n_trees = 60;
    params.max_depth = 8;
    params.seed = 21;
    const ForestModel base = fit_forest(p.X.view(), p.y, params);
    const double solo_importance = base.importances[3];

    Matrix X2(p.X.rows, 11);
    for (std::size_t i = 0; i < p.X.rows; ++i) {
        for (std::size_t j = 0; j < 10; ++j) X2.at(i, j) = p.X.at(i, j);
        X2.at(i, 10) = p.X.at(i, 3);
    }
    const ForestModel dup = fit_forest(X2.view(), p.y, params);
    const double combined = dup.importances[3] + dup.importances[10];
    CHECK(std::abs(combined - solo_importance) < 0.1);
    // The copy takes a real share rather than one side absorbing everything.
    CHECK(dup.importances[10] > 0.05);
    CHECK(dup.importances[3] > 0.05);
}

TEST_CASE("fixed seed reproduces importances exactly") {
    const Planted p = planted_dataset(200, 6, 1, 5);
    ForestParams params;
    params.n_trees = 20;
    params.seed = 42;
    const ForestModel a = fit_forest(p.X.view(), p.y, params);
    const ForestModel b = fit_forest(p.X.view(), p.y, params);
    CHECK(a.importances == b.importances);

    // Per-tree seeds are seed ^ i, so adjacent base seeds can reproduce the
    // same tree set in a different order; compare well-separated seeds.
    params.seed = 4242;
    const ForestModel c = fit_forest(p.X.view(), p.y, params);
    CHECK(a.importances != c.importances);
}

TEST_CASE("importances are normalized and non-negative") {
    const Planted p = planted_dataset(300, 8, 2, 17);
    ForestParams params;
    params.n_trees = 30;
    params.seed = 3;
    const ForestModel model = fit_forest(p.X.view(), p.y, params);
    double total = 0.0;
    for (double v : model.importances) {
        CHECK(v >= 0.0);
        total += v;
    }
    CHECK(total == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("split thresholds lie strictly between observed feature values") {
    const Planted p = planted_dataset(150, 5, 0, 31);
    ForestParams params;
    params.n_trees = 10;
    params.seed = 9;
    const ForestModel model = fit_forest(p.X.view(), p.y, params);
    for (const auto& tree : model.trees) {
        for (const auto& node : tree.nodes) {
            if (node.feature < 0) continue;
            bool below = false, above = false;
            for (std::size_t i = 0; i < p.X.rows; ++i) {
                const double v = p.X.at(i, static_cast<std::size_t>(node.feature));
                below = below || v < node.threshold;
                above = above || v > node.threshold;
            }
            CHECK(below);
            CHECK(above);
        }
    }
}

TEST_CASE("bootstrap leaves out-of-bag points at roughly (1 - 1/n)^n") {
    const std::size_t n = 400;
    const Planted p = planted_dataset(n, 4, 0, 77);
    ForestParams params;
    params.n_trees = 50;
    params.seed = 13;
    const ForestModel model = fit_forest(p.X.view(), p.y, params);

    std::size_t oob = 0, total = 0;
    for (const auto& tree : model.trees) {
        REQUIRE(tree.in_bag.size() == n);
        for (bool in : tree.in_bag) {
            if (!in) ++oob;
            ++total;
        }
    }
    const double expected = std::pow(1.0 - 1.0 / static_cast<double>(n),
                                     static_cast<double>(n));
    CHECK(static_cast<double>(oob) / static_cast<double>(total) ==
          doctest::Approx(expected).epsilon(0.06));
}

TEST_CASE("forest predictions beat chance on the planted signal") {
    const Planted train = planted_dataset(400, 6, 2, 55);
    const Planted test = planted_dataset(200, 6, 2, 56);
    ForestParams params;
    params.n_trees = 40;
    params.seed = 4;
    const ForestModel model = fit_forest(train.X.view(), train.y, params);
    std::size_t correct = 0;
    for (std::size_t i = 0; i < test.X.rows; ++i)
        if ((model.predict_proba(test.X.row(i)) >= 0.5 ? 1 : 0) == test.y[i]) ++correct;
    CHECK(static_cast<double>(correct) / static_cast<double>(test.X.rows) > 0.9);
}

TEST_CASE("fit_forest input validation") {
    Matrix X(4, 2);
    std::vector<int> ones{1, 1, 1, 1};
    CHECK_THROWS_AS(fit_forest(X.view(), ones, ForestParams{}), std::invalid_argument);

    Matrix tiny(1, 2);
    CHECK_THROWS_AS(fit_forest(tiny.view(), {1}, ForestParams{}), std::invalid_argument);

    std::vector<int> wrong{1, 0};
    CHECK_THROWS_AS(fit_forest(X.view(), wrong, ForestParams{}), std::invalid_argument);
}

TEST_CASE("select_top_k keeps ranking order and validates k") {
    FeatureRanking r;
    r.entries = {{"a", 0.5}, {"b", 0.3}, {"c", 0.2}};
    CHECK(select_top_k(r, 3) == std::vector<std::string>{"a", "b", "c"});
    CHECK(select_top_k(r, 1) == std::vector<std::string>{"a"});
    CHECK_THROWS_AS(select_top_k(r, 4), std::invalid_argument);
}

TEST_CASE("rank_features breaks ties by schema order") {
    ForestModel model;
    model.importances = {0.25, 0.25, 0.5};
    const FeatureRanking r = rank_features(model, {"x", "y", "z"});
    CHECK(r.entries[0].first == "z");
    CHECK(r.entries[1].first == "x");  // tie with y, earlier in schema
    CHECK(r.entries[2].first == "y");
}
