#include "rumorcast/forest.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "rumorcast/rng.hpp"

namespace rumorcast {

namespace {

double gini(std::int64_t pos, std::int64_t total) {
    if (total == 0) return 0.0;
    const double p = static_cast<double>(pos) / static_cast<double>(total);
    return 2.0 * p * (1.0 - p);
}

struct TreeBuilder {
    const Dataset& X;
    const std::vector<int>& y;
    const ForestParams& params;
    int features_per_split;
    Rng rng;

    DecisionTree tree;
    std::vector<double> importance;          // raw impurity decrease per feature
    std::vector<std::uint32_t> indices;      // bootstrap sample, partitioned in place
    std::vector<std::pair<double, int>> scratch;

    TreeBuilder(const Dataset& X_, const std::vector<int>& y_, const ForestParams& p,
                int k, std::uint64_t seed)
        : X(X_), y(y_), params(p), features_per_split(k), rng(seed) {
        importance.assign(X.cols, 0.0);
    }

    void build() {
        const std::size_t n = X.rows;
        indices.resize(n);
        tree.in_bag.assign(n, false);
        for (std::size_t i = 0; i < n; ++i) {
            const auto j = static_cast<std::size_t>(rng.uniform_int(0, static_cast<std::int64_t>(n) - 1));
            indices[i] = static_cast<std::uint32_t>(j);
            tree.in_bag[j] = true;
        }
        grow(0, n, 0);
    }

    int grow(std::size_t begin, std::size_t end, int depth) {
        const std::size_t n = end - begin;
        std::int64_t pos = 0;
        for (std::size_t i = begin; i < end; ++i) pos += y[indices[i]];

        const int node_id = static_cast<int>(tree.nodes.size());
        tree.nodes.push_back({});
        TreeNode& node = tree.nodes[node_id];
        node.samples = static_cast<std::int64_t>(n);
        node.positive_fraction = n ? static_cast<double>(pos) / static_cast<double>(n) : 0.0;

        const bool pure = pos == 0 || pos == static_cast<std::int64_t>(n);
        if (pure || depth >= params.max_depth ||
            n < 2 * static_cast<std::size_t>(params.min_leaf)) {
            return node_id;
        }

        // Candidate features: sampled without replacement.
        std::vector<int> candidates(X.cols);
        std::iota(candidates.begin(), candidates.end(), 0);
        for (int i = 0; i < features_per_split; ++i) {
            const auto j = static_cast<std::size_t>(
                rng.uniform_int(i, static_cast<std::int64_t>(X.cols) - 1));
            std::swap(candidates[static_cast<std::size_t>(i)], candidates[j]);
        }
        candidates.resize(static_cast<std::size_t>(features_per_split));

        const double parent_impurity = gini(pos, static_cast<std::int64_t>(n));
        int best_feature = -1;
        double best_threshold = 0.0;
        double best_decrease = 1e-12;  // require a real improvement

        for (int f : candidates) {
            scratch.clear();
            scratch.reserve(n);
            for (std::size_t i = begin; i < end; ++i)
                scratch.emplace_back(X.at(indices[i], static_cast<std::size_t>(f)), y[indices[i]]);
            std::sort(scratch.begin(), scratch.end());

            std::int64_t left_pos = 0;
            for (std::size_t i = 0; i + 1 < n; ++i) {
                left_pos += scratch[i].second;
                if (scratch[i].first == scratch[i + 1].first) continue;
                const auto left_n = static_cast<std::int64_t>(i + 1);
                const auto right_n = static_cast<std::int64_t>(n) - left_n;
                if (left_n < params.min_leaf || right_n < params.min_leaf) continue;
                const double decrease =
                    parent_impurity -
                    (static_cast<double>(left_n) / static_cast<double>(n)) * gini(left_pos, left_n) -
                    (static_cast<double>(right_n) / static_cast<double>(n)) *
                        gini(pos - left_pos, right_n);
                if (decrease > best_decrease) {
                    best_decrease = decrease;
                    best_feature = f;
                    best_threshold = (scratch[i].first + scratch[i + 1].first) / 2.0;
                }
            }
        }

        if (best_feature < 0) return node_id;

        const auto mid = std::partition(indices.begin() + static_cast<std::ptrdiff_t>(begin),
                                        indices.begin() + static_cast<std::ptrdiff_t>(end),
                                        [&](std::uint32_t idx) {
                                            return X.at(idx, static_cast<std::size_t>(best_feature)) <=
                                                   best_threshold;
                                        });
        const auto split = static_cast<std::size_t>(mid - indices.begin());
        if (split == begin || split == end) return node_id;  // numeric edge, keep as leaf

        importance[static_cast<std::size_t>(best_feature)] +=
            (static_cast<double>(n) / static_cast<double>(X.rows)) * best_decrease;

        const int left = grow(begin, split, depth + 1);
        const int right = grow(split, end, depth + 1);
        TreeNode& parent = tree.nodes[node_id];  // vector may have reallocated
        parent.feature = best_feature;
        parent.threshold = best_threshold;
        parent.left = left;
        parent.right = right;
        return node_id;
    }
};

}  // namespace

double DecisionTree::predict_proba(const double* row) const {
    int cur = 0;
    while (nodes[static_cast<std::size_t>(cur)].feature >= 0) {
        const TreeNode& n = nodes[static_cast<std::size_t>(cur)];
        cur = row[n.feature] <= n.threshold ? n.left : n.right;
    }
    return nodes[static_cast<std::size_t>(cur)].positive_fraction;
}

double ForestModel::predict_proba(const double* row) const {
    double sum = 0.0;
    for (const auto& t : trees) sum += t.predict_proba(row);
    return trees.empty() ? 0.0 : sum / static_cast<double>(trees.size());
}

ForestModel fit_forest(const Dataset& X, const std::vector<int>& y, const ForestParams& params) {
    if (X.rows < 2) throw std::invalid_argument("fit_forest: need at least 2 rows");
    if (X.rows != y.size()) throw std::invalid_argument("fit_forest: X/y size mismatch");
    const auto pos = std::count(y.begin(), y.end(), 1);
    if (pos == 0 || pos == static_cast<std::ptrdiff_t>(y.size()))
        throw std::invalid_argument("fit_forest: both classes must be present");
    if (params.n_trees <= 0) throw std::invalid_argument("fit_forest: n_trees must be positive");

    const int k = params.features_per_split > 0
                      ? std::min<int>(params.features_per_split, static_cast<int>(X.cols))
                      : static_cast<int>(std::ceil(std::sqrt(static_cast<double>(X.cols))));

    ForestModel model;
    model.params = params;
    model.params.features_per_split = k;
    model.trees.resize(static_cast<std::size_t>(params.n_trees));

    std::vector<std::vector<double>> raw(static_cast<std::size_t>(params.n_trees));

    auto train_one = [&](std::size_t t) {
        TreeBuilder builder(X, y, params, k, params.seed ^ static_cast<std::uint64_t>(t));
        builder.build();
        model.trees[t] = std::move(builder.tree);
        raw[t] = std::move(builder.importance);
    };

    // Trees are independent; spread across cores when available. Results are
    // aggregated in index order so scheduling never changes the model.
    const unsigned workers = std::min<unsigned>(std::thread::hardware_concurrency(),
                                                static_cast<unsigned>(params.n_trees));
    if (workers > 1) {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                for (std::size_t t = next.fetch_add(1); t < model.trees.size();
                     t = next.fetch_add(1))
                    train_one(t);
            });
        for (auto& th : pool) th.join();
    } else {
        for (std::size_t t = 0; t < model.trees.size(); ++t) train_one(t);
    }

    model.importances.assign(X.cols, 0.0);
    for (const auto& imp : raw)
        for (std::size_t f = 0; f < X.cols; ++f) model.importances[f] += imp[f];
    double total = std::accumulate(model.importances.begin(), model.importances.end(), 0.0);
    if (total > 0.0) {
        for (auto& v : model.importances) v /= total;
    } else {
        // No usable split anywhere (e.g. constant features): uniform ranking.
        std::fill(model.importances.begin(), model.importances.end(),
                  1.0 / static_cast<double>(X.cols));
    }
    return model;
}

FeatureRanking rank_features(const ForestModel& model, const std::vector<std::string>& names) {
    if (names.size() != model.importances.size())
        throw std::invalid_argument("rank_features: name count does not match importances");
    std::vector<std::size_t> order(names.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return model.importances[a] > model.importances[b];
    });
    FeatureRanking r;
    r.entries.reserve(names.size());
    for (std::size_t i : order) r.entries.emplace_back(names[i], model.importances[i]);
    return r;
}

std::vector<std::string> select_top_k(const FeatureRanking& ranking, std::size_t k) {
    if (k > ranking.entries.size())
        throw std::invalid_argument("select_top_k: k exceeds ranking size");
    std::vector<std::string> out;
    out.reserve(k);
    for (std::size_t i = 0; i < k; ++i) out.push_back(ranking.entries[i].first);
    return out;
}

}  // namespace rumorcast
