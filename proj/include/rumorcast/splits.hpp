#pragma once

// Seeded train/test splitting and k-fold partitioning. Same seed, same plan.

#include <cstdint>
#include <optional>
#include <vector>

namespace rumorcast {

struct SplitPlan {
    std::vector<std::size_t> train_indices;
    std::vector<std::size_t> test_indices;
    std::vector<std::vector<std::size_t>> folds;  // empty unless k_fold built it
    std::uint64_t seed = 0;
};

// Shuffle-then-cut split; stratified per label when labels are supplied
// (labels.size() must equal n). Requires n >= 2.
SplitPlan make_split(std::size_t n, double train_frac, std::uint64_t seed,
                     const std::vector<int>* labels = nullptr);

// k disjoint folds covering 0..n-1 with sizes differing by at most 1;
// train/test of the plan are left empty. Requires n >= k >= 2.
SplitPlan k_fold(std::size_t n, std::size_t k, std::uint64_t seed);

}  // namespace rumorcast
