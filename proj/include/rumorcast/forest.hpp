#pragma once

// Random forest of axis-aligned Gini trees, used for feature ranking via
// normalized mean decrease in impurity. Fully determined by the seed:
// tree i draws from its own generator seeded seed ^ i.

#include <cstdint>
#include <string>
#include <vector>

#include "rumorcast/dataset.hpp"

namespace rumorcast {

struct ForestParams {
    int n_trees = 100;
    int max_depth = 12;
    int min_leaf = 5;
    int features_per_split = 0;  // 0 -> ceil(sqrt(d))
    std::uint64_t seed = 0;
};

struct TreeNode {
    int feature = -1;          // -1 for leaves
    double threshold = 0.0;    // midpoint between two observed values
    int left = -1, right = -1;
    double positive_fraction = 0.0;
    std::int64_t samples = 0;
};

struct DecisionTree {
    std::vector<TreeNode> nodes;  // nodes[0] is the root
    std::vector<bool> in_bag;     // per training row, for OOB accounting

    double predict_proba(const double* row) const;
};

struct ForestModel {
    std::vector<DecisionTree> trees;
    ForestParams params;
    std::vector<double> importances;  // per feature, non-negative, sums to 1

    double predict_proba(const double* row) const;
};

// Bootstrap-trained forest; requires at least 2 rows and both classes.
ForestModel fit_forest(const Dataset& X, const std::vector<int>& y, const ForestParams& params);

struct FeatureRanking {
    // (feature name, importance), sorted descending; ties keep schema order.
    std::vector<std::pair<std::string, double>> entries;
};

FeatureRanking rank_features(const ForestModel& model, const std::vector<std::string>& names);

// First k names of the ranking; errors when k exceeds it.
std::vector<std::string> select_top_k(const FeatureRanking& ranking, std::size_t k);

}  // namespace rumorcast
