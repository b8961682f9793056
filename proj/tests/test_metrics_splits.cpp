#include <doctest.h>

#include <algorithm>
#include <set>

#include "rumorcast/metrics.hpp"
#include "rumorcast/rng.hpp"
#include "rumorcast/splits.hpp"

using namespace rumorcast;

TEST_CASE("precision") {
    CHECK(precision({3, 1, 0, 0}).value == 0.75);
    CHECK(precision({9, 1, 0, 0}).value == 0.9);
    const MetricValue degenerate = precision({0, 0, 5, 5});
    CHECK(degenerate.value == 0.0);
    CHECK(degenerate.degenerate);
    CHECK_FALSE(precision({3, 1, 0, 0}).degenerate);
}

TEST_CASE("recall") {
    CHECK(recall({9, 0, 1, 0}).value == 0.9);
    CHECK(recall({0, 0, 5, 0}).value == 0.0);
    CHECK(recall({5, 0, 0, 3}).value == 1.0);
    CHECK(recall({0, 4, 0, 4}).degenerate);
}

TEST_CASE("f score reference values") {
    CHECK(f_score(0.897, 0.902) == doctest::Approx(0.899).epsilon(0.0012));
    CHECK(f_score(0.908, 0.925) == doctest::Approx(0.916).epsilon(0.0012));
    CHECK(f_score(0.9, 0.9) == doctest::Approx(0.9));
}

TEST_CASE("f score properties") {
    Rng rng(17);
    for (int i = 0; i < 1000; ++i) {
        const double p = rng.uniform();
        const double r = rng.uniform();
        const double f = f_score(p, r);
        CHECK(f >= 0.0);
        CHECK(f <= 1.0);
        if (p * r == 0.0) CHECK(f == 0.0);
        if (f == 0.0) CHECK(p * r == 0.0);
    }
    CHECK(f_score(0.37, 0.37) == doctest::Approx(0.37));
    CHECK(f_score(0.0, 0.9) == 0.0);
}

TEST_CASE("metrics_from_counts agrees with the direct formulas bit for bit") {
    Rng rng(23);
    for (int i = 0; i < 1000; ++i) {
        ConfusionCounts c;
        c.tp = rng.uniform_int(0, 50);
        c.fp = rng.uniform_int(0, 50);
        c.fn = rng.uniform_int(0, 50);
        c.tn = rng.uniform_int(0, 50);
        const Metrics m = metrics_from_counts(c);

        const double p = (c.tp + c.fp) == 0
                             ? 0.0
                             : static_cast<double>(c.tp) / static_cast<double>(c.tp + c.fp);
        const double r = (c.tp + c.fn) == 0
                             ? 0.0
                             : static_cast<double>(c.tp) / static_cast<double>(c.tp + c.fn);
        const double f = (p + r) == 0.0 ? 0.0 : 2.0 * p * r / (p + r);
        CHECK(m.precision == p);
        CHECK(m.recall == r);
        CHECK(m.f == f);
    }
}

TEST_CASE("make_split cuts 10 items into 8 train and 2 test") {
    const SplitPlan plan = make_split(10, 0.8, 1);
    CHECK(plan.train_indices.size() == 8);
    CHECK(plan.test_indices.size() == 2);

    std::set<std::size_t> all(plan.train_indices.begin(), plan.train_indices.end());
    all.insert(plan.test_indices.begin(), plan.test_indices.end());
    CHECK(all.size() == 10);
}

TEST_CASE("make_split is deterministic per seed") {
    const SplitPlan a = make_split(100, 0.8, 7);
    const SplitPlan b = make_split(100, 0.8, 7);
    CHECK(a.train_indices == b.train_indices);
    CHECK(a.test_indices == b.test_indices);
    const SplitPlan c = make_split(100, 0.8, 8);
    CHECK(a.train_indices != c.train_indices);
}

TEST_CASE("stratified split keeps the class ratio within one item") {
    std::vector<int> labels(100, 0);
    for (int i = 0; i < 35; ++i) labels[static_cast<std::size_t>(i)] = 1;
    const SplitPlan plan = make_split(100, 0.8, 3, &labels);
    CHECK(plan.train_indices.size() == 80);

    std::size_t train_pos = 0;
    for (std::size_t i : plan.train_indices) train_pos += labels[i] == 1;
    CHECK(std::llabs(static_cast<long long>(train_pos) - 28) <= 1);

    std::size_t test_pos = 0;
    for (std::size_t i : plan.test_indices) test_pos += labels[i] == 1;
    CHECK(train_pos + test_pos == 35);
}

TEST_CASE("make_split rejects tiny inputs") {
    CHECK_THROWS_AS(make_split(1, 0.8, 0), std::invalid_argument);
    CHECK_THROWS_AS(make_split(10, 0.0, 0), std::invalid_argument);
    CHECK_THROWS_AS(make_split(10, 1.0, 0), std::invalid_argument);
}

TEST_CASE("k_fold partitions 100 into ten folds of ten") {
    const SplitPlan plan = k_fold(100, 10, 5);
    REQUIRE(plan.folds.size() == 10);
    for (const auto& fold : plan.folds) CHECK(fold.size() == 10);
}

TEST_CASE("k_fold of 23 into 10 gives three 3s and seven 2s") {
    const SplitPlan plan = k_fold(23, 10, 5);
    REQUIRE(plan.folds.size() == 10);
    std::vector<std::size_t> sizes;
    for (const auto& fold : plan.folds) sizes.push_back(fold.size());
    CHECK(std::count(sizes.begin(), sizes.end(), 3) == 3);
    CHECK(std::count(sizes.begin(), sizes.end(), 2) == 7);
}

TEST_CASE("k_fold folds are disjoint and cover the index range") {
    Rng rng(31);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t n = static_cast<std::size_t>(rng.uniform_int(10, 400));
        const std::size_t k = static_cast<std::size_t>(rng.uniform_int(2, 10));
        if (n < k) continue;
        const SplitPlan plan = k_fold(n, k, static_cast<std::uint64_t>(trial));
        std::set<std::size_t> seen;
        std::size_t total = 0;
        std::size_t min_size = n, max_size = 0;
        for (const auto& fold : plan.folds) {
            min_size = std::min(min_size, fold.size());
            max_size = std::max(max_size, fold.size());
            total += fold.size();
            for (std::size_t idx : fold) {
                CHECK(idx < n);
                CHECK(seen.insert(idx).second);  // disjoint
            }
        }
        CHECK(total == n);          // covering
        CHECK(max_size - min_size <= 1);
    }
}

TEST_CASE("k_fold input validation and determinism") {
    CHECK_THROWS_AS(k_fold(5, 10, 0), std::invalid_argument);
    CHECK_THROWS_AS(k_fold(10, 1, 0), std::invalid_argument);
    CHECK(k_fold(50, 5, 9).folds == k_fold(50, 5, 9).folds);
}
