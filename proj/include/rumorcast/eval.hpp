#pragma once

// Evaluation harness: edge featurization into a learning matrix, the
// train/test + k-fold protocol, inter-credibility transfer tests, and
// majority-vote credibility prediction with the diffusion tag as an input.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rumorcast/content_analysis.hpp"
#include "rumorcast/corpus.hpp"
#include "rumorcast/dataset.hpp"
#include "rumorcast/diffusion.hpp"
#include "rumorcast/feature_schema.hpp"
#include "rumorcast/features.hpp"
#include "rumorcast/forest.hpp"
#include "rumorcast/logreg.hpp"
#include "rumorcast/metrics.hpp"
#include "rumorcast/splits.hpp"

namespace rumorcast {

// Loaded scores win over the lexicon analyzer for tweets they cover.
struct ScoreProvider {
    std::map<std::string, LatentScores> loaded;
    const Lexicon* lexicon = nullptr;  // nullptr -> default_lexicon()

    LatentScores scores_for(const TweetRecord& t) const;
};

struct EdgeDataset {
    std::vector<DiffusionEdge> edges;
    Matrix X;  // one row per edge, feature-schema order
    std::vector<int> y;  // 1 = diffused
    std::vector<std::string> feature_names;
};

EdgeDataset build_edge_dataset(const Corpus& corpus, const ScoreProvider& scores,
                               DiffusionOptions diffusion = {}, FeatureOptions features = {});

EdgeDataset subset(const EdgeDataset& data, const std::vector<std::size_t>& indices);
EdgeDataset filter_by_status(const EdgeDataset& data, TruthStatus status);

struct DiffusionTrainConfig {
    std::size_t top_k = 20;
    ForestParams forest;   // seed is derived from `seed` when left 0
    LogRegParams logreg;
    double threshold = 0.5;
    std::uint64_t seed = 42;
    bool pooled_ranking = false;  // per-class ranking is the default
};

struct TrainedDiffusionModel {
    LogRegModel model;
    FeatureRanking ranking;
};

// Rank with a random forest on the training edges, keep the top-k features,
// then fit the MAP logistic model on them.
TrainedDiffusionModel train_diffusion_model(const EdgeDataset& train,
                                            const DiffusionTrainConfig& config);

// Classify every edge and tally with "diffused" as the positive class.
Metrics evaluate_diffusion(const LogRegModel& model, const EdgeDataset& test,
                           double threshold = 0.5);

// Same evaluation path, used when the model was trained on the opposite
// truth class.
Metrics cross_credibility(const LogRegModel& model, const EdgeDataset& other_class_test,
                          double threshold = 0.5);

// Per-fold metrics for a fixed feature selection.
std::vector<Metrics> cross_validate_logreg(const EdgeDataset& data,
                                           const std::vector<std::string>& selected,
                                           const LogRegParams& params, std::size_t folds,
                                           std::uint64_t seed, double threshold = 0.5);

// --- Credibility -----------------------------------------------------------

inline constexpr const char* kDiffusionFeatureName = "diffusion_label";

// Where the diffusion input column comes from at evaluation time.
enum class DiffusionInput { observed, predicted };

struct CredibilityDataset {
    Matrix X;  // schema features, plus the diffusion column when included
    std::vector<int> y;  // 1 = True
    std::vector<std::string> feature_names;
    std::vector<std::string> message_ids;    // per row: root tweet id
    std::vector<TruthStatus> true_status;    // per row
};

// Training always uses observed labels; evaluation may substitute the
// diffusion model's predictions via DiffusionInput::predicted.
CredibilityDataset build_credibility_dataset(const EdgeDataset& data, bool include_diffusion,
                                             DiffusionInput source = DiffusionInput::observed,
                                             const LogRegModel* diffusion_model = nullptr,
                                             double diffusion_threshold = 0.5);

LogRegModel train_credibility_model(const CredibilityDataset& train, const LogRegParams& params);

struct CredibilityPrediction {
    TruthStatus status = TruthStatus::False;
    bool tie = false;  // even split; broken toward False
};

// Majority of per-edge votes; errors on an empty vote set.
CredibilityPrediction majority_vote(const std::vector<TruthStatus>& votes);

// Majority-vote prediction over one message's edge rows.
CredibilityPrediction predict_credibility(const LogRegModel& model, const Dataset& message_rows,
                                          const std::vector<std::string>& row_feature_names,
                                          double threshold = 0.5);

struct CredibilityEval {
    Metrics message_level;  // majority vote per message, True as positive
    Metrics edge_level;     // per-edge votes, True as positive
    std::size_t tie_count = 0;
    std::size_t message_count = 0;
};

CredibilityEval evaluate_credibility(const LogRegModel& model, const CredibilityDataset& test,
                                     double threshold = 0.5);

struct AblationResult {
    CredibilityEval with_diffusion;
    CredibilityEval without_diffusion;
};

// Two credibility models, with and without the diffusion column.
AblationResult ablate_diffusion_feature(const EdgeDataset& train, const EdgeDataset& test,
                                        const LogRegParams& params, double threshold = 0.5);

// --- Full protocol ---------------------------------------------------------

struct ClassReport {
    std::string status;
    FeatureRanking ranking;
    std::vector<std::string> selected_features;
    Metrics holdout;
    std::vector<Metrics> fold_metrics;
    double mean_fold_f = 0.0;
    std::size_t train_edges = 0;
    std::size_t test_edges = 0;
};

struct EvalReport {
    ClassReport true_class;
    ClassReport false_class;
    Metrics false_model_true_test;  // inter-credibility transfer
    Metrics true_model_false_test;
    CredibilityEval credibility;    // with diffusion column, observed labels
    AblationResult ablation;
    std::map<TruthStatus, double> diffused_fraction;
};

struct ProtocolConfig {
    DiffusionTrainConfig train;
    double train_frac = 0.8;
    std::size_t folds = 10;
    DiffusionInput credibility_input = DiffusionInput::observed;
};

// 80/20 per class + k-fold CV + transfer + credibility + ablation.
EvalReport run_protocol(const EdgeDataset& data, const ProtocolConfig& config);

}  // namespace rumorcast
