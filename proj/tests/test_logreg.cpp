#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "rumorcast/logreg.hpp"
#include "rumorcast/rng.hpp"

using namespace rumorcast;

namespace {

struct Toy {
    Matrix X;
    std::vector<int> y;
};

Toy random_dataset(std::size_t n, std::size_t d, std::uint64_t seed, double signal = 1.0) {
    Toy t;
    t.X = Matrix(n, d);
    t.y.resize(n);
    Rng rng(seed);
    for (std::size_t i = 0; i < n; ++i) {
        double z = 0.0;
        for (std::size_t j = 0; j < d; ++j) {
            t.X.at(i, j) = rng.normal();
            z += (j == 0 ? signal : 0.0) * t.X.at(i, j);
        }
        t.y[i] = rng.bernoulli(sigmoid(z)) ? 1 : 0;
    }
    return t;
}

// Column-standardize in place with population moments, so the model's
// internal standardization is the identity and weights are comparable to a
// raw-space oracle.
void standardize(Matrix& X) {
    for (std::size_t j = 0; j < X.cols; ++j) {
        double mean = 0.0;
        for (std::size_t i = 0; i < X.rows; ++i) mean += X.at(i, j);
        mean /= static_cast<double>(X.rows);
        double var = 0.0;
        for (std::size_t i = 0; i < X.rows; ++i) {
            const double d = X.at(i, j) - mean;
            var += d * d;
        }
        var /= static_cast<double>(X.rows);
        const double std_ = std::sqrt(var);
        for (std::size_t i = 0; i < X.rows; ++i) X.at(i, j) = (X.at(i, j) - mean) / std_;
    }
}

std::vector<std::string> names(std::size_t d) {
    std::vector<std::string> out;
    for (std::size_t j = 0; j < d; ++j) out.push_back("x" + std::to_string(j));
    return out;
}

}  // namespace

TEST_CASE("analytic gradient matches central finite differences") {
    for (std::uint64_t seed : {1ULL, 2ULL, 3ULL}) {
        const Toy t = random_dataset(30, 4, seed);
        Rng rng(seed * 100 + 7);
        for (int trial = 0; trial < 10; ++trial) {
            std::vector<double> w(5);
            for (auto& v : w) v = rng.uniform(-2.0, 2.0);

            const std::vector<double> analytic = logreg_gradient(t.X.view(), t.y, w, 10.0);
            const std::vector<double> fd = oracle::finite_difference_gradient(
                [&](const std::vector<double>& wt) {
                    return logreg_log_posterior(t.X.view(), t.y, wt, 10.0);
                },
                w);

            double num = 0.0, den = 0.0;
            for (std::size_t j = 0; j < w.size(); ++j) {
                num += (analytic[j] - fd[j]) * (analytic[j] - fd[j]);
                den += analytic[j] * analytic[j];
            }
            CHECK(std::sqrt(num) / std::max(std::sqrt(den), 1e-8) < 1e-5);
        }
    }
}

TEST_CASE("labels independent of features give near-zero weights") {
    const std::size_t n = 500;
    Toy t = random_dataset(n, 5, 13, /*signal=*/0.0);
    const LogRegModel m = fit_logreg(t.X.view(), t.y, names(5), {});
    const double bound = 3.0 / std::sqrt(static_cast<double>(n));
    for (double w : m.weights) CHECK(std::abs(w) < bound);
    CHECK(m.converged);
}

TEST_CASE("perfectly separable data stays finite; weights grow with sigma2") {
    Matrix X(2, 1);
    X.at(0, 0) = -1.0;
    X.at(1, 0) = 1.0;
    const std::vector<int> y{0, 1};

    LogRegParams small;
    small.sigma2 = 1.0;
    LogRegParams large;
    large.sigma2 = 100.0;
    const LogRegModel ms = fit_logreg(X.view(), y, names(1), small);
    const LogRegModel ml = fit_logreg(X.view(), y, names(1), large);

    CHECK(std::isfinite(ms.weights[1]));
    CHECK(std::isfinite(ml.weights[1]));
    CHECK(std::abs(ml.weights[1]) > std::abs(ms.weights[1]));
}

TEST_CASE("log posterior is non-decreasing across accepted steps") {
    const Toy t = random_dataset(120, 3, 21);
    const LogRegModel m = fit_logreg(t.X.view(), t.y, names(3), {});
    REQUIRE(m.log_posterior_path.size() >= 2);
    for (std::size_t i = 1; i < m.log_posterior_path.size(); ++i)
        CHECK(m.log_posterior_path[i] >= m.log_posterior_path[i - 1]);
}

TEST_CASE("fast grid oracle equals brute force on a coarse grid") {
    Toy t = random_dataset(20, 2, 33, 1.5);
    standardize(t.X);
    std::vector<double> x1(20), x2(20);
    for (std::size_t i = 0; i < 20; ++i) {
        x1[i] = t.X.at(i, 0);
        x2[i] = t.X.at(i, 1);
    }
    const oracle::SoftplusTable table;
    oracle::GridSpec coarse;
    coarse.step = 0.1;
    const auto fast = oracle::grid_search_map(x1, x2, t.y, 10.0, coarse, table);
    const auto brute = oracle::brute_force_map(x1, x2, t.y, 10.0, coarse, table);
    CHECK(fast.w[0] == brute.w[0]);
    CHECK(fast.w[1] == brute.w[1]);
    CHECK(fast.w[2] == brute.w[2]);
}

TEST_CASE("MAP weights agree with the grid-search oracle") {
    // Finer 0.02 grid here; the acceptance suite runs the full 0.01 version.
    Toy t = random_dataset(20, 2, 33, 1.5);
    standardize(t.X);

    LogRegParams params;
    params.sigma2 = 10.0;
    const LogRegModel m = fit_logreg(t.X.view(), t.y, names(2), params);
    REQUIRE(m.converged);

    std::vector<double> x1(20), x2(20);
    for (std::size_t i = 0; i < 20; ++i) {
        x1[i] = t.X.at(i, 0);
        x2[i] = t.X.at(i, 1);
    }
    const oracle::SoftplusTable table;
    oracle::GridSpec spec;
    spec.step = 0.02;
    const auto grid = oracle::grid_search_map(x1, x2, t.y, params.sigma2, spec, table);

    REQUIRE(std::abs(m.weights[0]) < 4.5);  // stays inside the search box
    REQUIRE(std::abs(m.weights[1]) < 4.5);
    REQUIRE(std::abs(m.weights[2]) < 4.5);
    CHECK(std::abs(m.weights[0] - grid.w[0]) <= 0.02);
    CHECK(std::abs(m.weights[1] - grid.w[1]) <= 0.02);
    CHECK(std::abs(m.weights[2] - grid.w[2]) <= 0.02);
}

TEST_CASE("predict_proba basics") {
    LogRegModel m;
    m.selected_features = {"x0"};
    m.weights = {0.0, 0.0};
    m.feature_means = {0.0};
    m.feature_stds = {1.0};

    SUBCASE("zero weights give one half everywhere") {
        CHECK(predict_proba(m, std::vector<double>{3.7}) == 0.5);
        CHECK(predict_proba(m, std::vector<double>{-120.0}) == 0.5);
    }
    SUBCASE("probability is monotone in the linear score") {
        m.weights = {0.0, 2.0};
        double prev = 0.0;
        for (double x : {-5.0, -1.0, 0.0, 1.0, 5.0, 50.0}) {
            const double p = predict_proba(m, std::vector<double>{x});
            CHECK(p > prev);
            CHECK(p > 0.0);
            CHECK(p < 1.0);
            prev = p;
        }
        CHECK(predict_proba(m, std::vector<double>{50.0}) > 0.999);
    }
    SUBCASE("matches the oracle sigmoid on grid weights") {
        m.selected_features = {"x0", "x1"};
        m.weights = {0.31, -1.24, 0.87};
        m.feature_means = {0.0, 0.0};
        m.feature_stds = {1.0, 1.0};
        const std::vector<double> x{0.4, -1.1};
        const double z = 0.31 + (-1.24) * 0.4 + 0.87 * (-1.1);
        const double expected = 1.0 / (1.0 + std::exp(-z));
        CHECK(std::abs(predict_proba(m, x) - expected) < 1e-3);
    }
    SUBCASE("schema mismatch errors") {
        CHECK_THROWS_AS(predict_proba(m, std::vector<double>{1.0, 2.0}),
                        std::invalid_argument);
    }
}

TEST_CASE("classify uses the >= threshold convention") {
    LogRegModel m;
    m.selected_features = {"x0"};
    m.weights = {0.0, 0.0};
    m.feature_means = {0.0};
    m.feature_stds = {1.0};

    // proba is exactly 0.5 everywhere.
    CHECK(classify(m, std::vector<double>{1.0}, 0.5) == Classification::positive);
    CHECK(classify(m, std::vector<double>{1.0}, 0.0) == Classification::positive);

    // Shift the intercept so proba is just below 0.49.
    m.weights[0] = std::log(0.49 / 0.51);
    CHECK(predict_proba(m, std::vector<double>{0.0}) == doctest::Approx(0.49));
    CHECK(classify(m, std::vector<double>{0.0}, 0.5) == Classification::negative);
}

TEST_CASE("constant features are dropped with zero weight") {
    Matrix X(40, 2);
    Rng rng(5);
    std::vector<int> y(40);
    for (std::size_t i = 0; i < 40; ++i) {
        X.at(i, 0) = rng.normal();
        X.at(i, 1) = 2.5;  // constant
        y[i] = X.at(i, 0) > 0 ? 1 : 0;
    }
    const LogRegModel m = fit_logreg(X.view(), y, names(2), {});
    CHECK(m.weights[2] == 0.0);
    CHECK(m.feature_stds[1] == 1.0);
    CHECK(m.feature_stds[0] > 0.0);
    // Prediction still works on full-width rows.
    CHECK(predict_proba(m, std::vector<double>{1.0, 2.5}) > 0.5);
}

TEST_CASE("fit_logreg input validation") {
    Matrix X(4, 1);
    X.at(2, 0) = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS(fit_logreg(X.view(), {0, 1, 0, 1}, names(1), {}), std::invalid_argument);

    Matrix ok(4, 1);
    CHECK_THROWS_AS(fit_logreg(ok.view(), {1, 1, 1, 1}, names(1), {}), std::invalid_argument);
    CHECK_THROWS_AS(fit_logreg(ok.view(), {0, 1}, names(1), {}), std::invalid_argument);
}

TEST_CASE("laplace covariance is produced on request and symmetric") {
    const Toy t = random_dataset(100, 2, 77);
    LogRegParams params;
    params.want_covariance = true;
    const LogRegModel m = fit_logreg(t.X.view(), t.y, names(2), params);
    REQUIRE(!m.laplace_covariance.empty());
    REQUIRE(m.laplace_covariance.size() == 3);
    for (std::size_t a = 0; a < 3; ++a) {
        CHECK(m.laplace_covariance[a][a] > 0.0);
        for (std::size_t b = 0; b < 3; ++b)
            CHECK(m.laplace_covariance[a][b] ==
                  doctest::Approx(m.laplace_covariance[b][a]).epsilon(1e-9));
    }

    // The moderated predictive is pulled toward one half.
    const std::vector<double> x{1.5, -0.5};
    const double plain = predict_proba(m, x, false);
    const double moderated = predict_proba(m, x, true);
    CHECK(std::abs(moderated - 0.5) <= std::abs(plain - 0.5) + 1e-12);
}
