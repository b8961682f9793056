#pragma once

// Precision / recall / F over confusion counts, with "diffused" (or True)
// as the positive class. Zero denominators yield 0 with a degeneracy flag
// instead of aborting sparse folds.

#include <cstdint>

namespace rumorcast {

struct ConfusionCounts {
    std::int64_t tp = 0;
    std::int64_t fp = 0;
    std::int64_t fn = 0;
    std::int64_t tn = 0;

    std::int64_t total() const { return tp + fp + fn + tn; }
};

struct MetricValue {
    double value = 0.0;
    bool degenerate = false;  // zero denominator
};

MetricValue precision(const ConfusionCounts& c);
MetricValue recall(const ConfusionCounts& c);

// Harmonic mean; 0 when p + r == 0.
double f_score(double p, double r);

struct Metrics {
    double precision = 0.0;
    double recall = 0.0;
    double f = 0.0;
    bool precision_degenerate = false;
    bool recall_degenerate = false;
    ConfusionCounts counts;
};

Metrics metrics_from_counts(const ConfusionCounts& c);

}  // namespace rumorcast
