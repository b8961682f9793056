#include "rumorcast/splits.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "rumorcast/rng.hpp"

namespace rumorcast {

SplitPlan make_split(std::size_t n, double train_frac, std::uint64_t seed,
                     const std::vector<int>* labels) {
    if (n < 2) throw std::invalid_argument("make_split: need at least 2 items");
    if (!(train_frac > 0.0 && train_frac < 1.0))
        throw std::invalid_argument("make_split: train_frac must be in (0,1)");
    if (labels && labels->size() != n)
        throw std::invalid_argument("make_split: label count mismatch");

    SplitPlan plan;
    plan.seed = seed;
    Rng rng(seed);

    auto cut = [&](std::vector<std::size_t>& pool) {
        rng.shuffle(pool);
        const auto want = static_cast<std::size_t>(
            std::llround(train_frac * static_cast<double>(pool.size())));
        for (std::size_t i = 0; i < pool.size(); ++i)
            (i < want ? plan.train_indices : plan.test_indices).push_back(pool[i]);
    };

    if (!labels) {
        std::vector<std::size_t> pool(n);
        for (std::size_t i = 0; i < n; ++i) pool[i] = i;
        cut(pool);
    } else {
        // Per-class pools keep the train ratio within one item per class.
        std::vector<int> classes = *labels;
        std::sort(classes.begin(), classes.end());
        classes.erase(std::unique(classes.begin(), classes.end()), classes.end());
        for (int c : classes) {
            std::vector<std::size_t> pool;
            for (std::size_t i = 0; i < n; ++i)
                if ((*labels)[i] == c) pool.push_back(i);
            cut(pool);
        }
    }
    std::sort(plan.train_indices.begin(), plan.train_indices.end());
    std::sort(plan.test_indices.begin(), plan.test_indices.end());
    return plan;
}

SplitPlan k_fold(std::size_t n, std::size_t k, std::uint64_t seed) {
    if (k < 2) throw std::invalid_argument("k_fold: need at least 2 folds");
    if (n < k) throw std::invalid_argument("k_fold: need at least k items");

    SplitPlan plan;
    plan.seed = seed;
    Rng rng(seed);

    std::vector<std::size_t> pool(n);
    for (std::size_t i = 0; i < n; ++i) pool[i] = i;
    rng.shuffle(pool);

    plan.folds.resize(k);
    const std::size_t base = n / k;
    const std::size_t extra = n % k;  // first n%k folds take one more
    std::size_t at = 0;
    for (std::size_t f = 0; f < k; ++f) {
        const std::size_t size = base + (f < extra ? 1 : 0);
        for (std::size_t i = 0; i < size; ++i) plan.folds[f].push_back(pool[at++]);
        std::sort(plan.folds[f].begin(), plan.folds[f].end());
    }
    return plan;
}

}  // namespace rumorcast
