#include "rumorcast/metrics.hpp"

namespace rumorcast {

MetricValue precision(const ConfusionCounts& c) {
    const std::int64_t denom = c.tp + c.fp;
    if (denom == 0) return {0.0, true};
    return {static_cast<double>(c.tp) / static_cast<double>(denom), false};
}

MetricValue recall(const ConfusionCounts& c) {
    const std::int64_t denom = c.tp + c.fn;
    if (denom == 0) return {0.0, true};
    return {static_cast<double>(c.tp) / static_cast<double>(denom), false};
}

double f_score(double p, double r) {
    if (p + r == 0.0) return 0.0;
    return 2.0 * p * r / (p + r);
}

Metrics metrics_from_counts(const ConfusionCounts& c) {
    Metrics m;
    const MetricValue p = precision(c);
    const MetricValue r = recall(c);
    m.precision = p.value;
    m.recall = r.value;
    m.f = f_score(p.value, r.value);
    m.precision_degenerate = p.degenerate;
    m.recall_degenerate = r.degenerate;
    m.counts = c;
    return m;
}

}  // namespace rumorcast
