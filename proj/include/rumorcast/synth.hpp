#pragma once

// Synthetic corpora with planted ground truth. Edge diffusion labels are
// Bernoulli(sigmoid(w . x + b)) under class-specific planted weights (then
// flipped with label_noise); retweet chains are planted to hit the per-class
// mean-depth targets; the optimal-classifier accuracy and F ceiling are
// computed alongside so learned models can be checked against them.

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rumorcast/content_analysis.hpp"
#include "rumorcast/corpus.hpp"
#include "rumorcast/diffusion.hpp"
#include "rumorcast/feature_schema.hpp"

namespace rumorcast {

struct SynthConfig {
    int n_users = 320;
    double follow_prob = 0.07;
    int n_topics_true = 3;
    int n_topics_false = 3;
    int tweets_per_topic = 50;

    // Planted weights over the 57-feature schema (post-transform space);
    // empty means the built-in defaults.
    std::vector<double> planted_weights_true;
    std::vector<double> planted_weights_false;

    // Used directly when the matching target fraction is unset.
    double intercept_true = 0.0;
    double intercept_false = 0.0;

    // When set, the intercept is solved so the expected materialized
    // diffused fraction of the class (chains included) hits the target.
    std::optional<double> target_diffused_fraction_true = 0.35;
    std::optional<double> target_diffused_fraction_false = 0.45;

    double target_mean_depth_true = 2.0;
    double target_mean_depth_false = 4.0;

    double label_noise = 0.05;  // in [0, 0.5)
    bool emit_text = false;     // score tweets through the lexicon analyzer

    // Fractions of each class's posts drawn from the "hot" (fearful-news)
    // score component and from the in-between "warm" band; hot defaults
    // center the solved intercepts on the class diffusion targets.
    double hot_rate_true = 0.29;
    double hot_rate_false = 0.40;
    double warm_rate = 0.10;

    std::uint64_t seed = 1;

    static std::vector<double> default_planted_weights(TruthStatus status);
    void validate() const;  // throws std::invalid_argument
};

// Expected-count metrics of the optimal classifier (real-valued confusion).
struct BayesCeiling {
    double accuracy = 0.0;
    double precision = 0.0;
    double recall = 0.0;
    double f = 0.0;
};

struct SynthResult {
    Corpus corpus;
    std::map<std::string, LatentScores> scores;

    // Ground truth: exactly what build_edges() yields on the corpus.
    std::vector<DiffusionEdge> edges;
    // Aligned with edges: the probability the materialized label is diffused
    // (1 for planted chain edges), and the feature-only probability the
    // optimal classifier works from.
    std::vector<double> edge_q;
    std::vector<double> edge_q_feature;

    std::vector<double> planted_weights_true;
    std::vector<double> planted_weights_false;
    double intercept_true = 0.0;   // after solving, when a target was set
    double intercept_false = 0.0;

    std::map<TruthStatus, BayesCeiling> bayes;
    double bayes_rate = 0.0;  // pooled optimal-classifier accuracy
    std::size_t forced_edge_count = 0;  // chain edges, diffused by construction
};

SynthResult generate(const SynthConfig& config);

// Pooled expected accuracy of the optimal classifier on the generated
// distribution, Monte Carlo over at least 1e5 edge samples.
double bayes_rate(const SynthConfig& config);

// Writes users/tweets/reactions/follows/topics JSONL plus scores.jsonl and
// ground_truth.json into the directory.
void write_synth_outputs(const SynthResult& result, const SynthConfig& config,
                         const std::filesystem::path& dir);

}  // namespace rumorcast
