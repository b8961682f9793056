#include "rumorcast/eval.hpp"

#include <algorithm>
#include <stdexcept>

namespace rumorcast {

namespace {

// Derives independent sub-seeds from one run seed (splitmix64 step).
std::uint64_t sub_seed(std::uint64_t seed, std::uint64_t tag) {
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (tag + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

Matrix select_columns(const Matrix& X, const std::vector<std::string>& names,
                      const std::vector<std::string>& wanted) {
    std::vector<std::size_t> idx;
    idx.reserve(wanted.size());
    for (const auto& w : wanted) {
        auto it = std::find(names.begin(), names.end(), w);
        if (it == names.end())
            throw std::invalid_argument("feature \"" + w + "\" missing from dataset");
        idx.push_back(static_cast<std::size_t>(it - names.begin()));
    }
    Matrix out(X.rows, idx.size());
    for (std::size_t r = 0; r < X.rows; ++r)
        for (std::size_t c = 0; c < idx.size(); ++c) out.at(r, c) = X.at(r, idx[c]);
    return out;
}

}  // namespace

LatentScores ScoreProvider::scores_for(const TweetRecord& t) const {
    auto it = loaded.find(t.tweet_id);
    if (it != loaded.end()) return it->second;
    return analyze_text(t.text, lexicon ? *lexicon : default_lexicon());
}

EdgeDataset build_edge_dataset(const Corpus& corpus, const ScoreProvider& scores,
                               DiffusionOptions diffusion, FeatureOptions features) {
    EdgeDataset data;
    data.edges = build_edges(corpus, diffusion);
    data.feature_names = FeatureSchema::instance().names();
    data.X = Matrix(data.edges.size(), kFeatureCount);
    data.y.resize(data.edges.size());

    FeatureExtractor extractor(corpus, features);
    std::map<std::string, LatentScores> score_cache;
    for (std::size_t i = 0; i < data.edges.size(); ++i) {
        const DiffusionEdge& e = data.edges[i];
        const TweetRecord& event = corpus.tweet(e.event_tweet_id);
        auto it = score_cache.find(event.tweet_id);
        if (it == score_cache.end())
            it = score_cache.emplace(event.tweet_id, scores.scores_for(event)).first;
        const FeatureVector fv = extractor.assemble(e.spreader_id, e.receiver_id, event, it->second);
        std::copy(fv.values.begin(), fv.values.end(), data.X.row(i));
        data.y[i] = e.label == DiffusionLabel::diffused ? 1 : 0;
    }
    return data;
}

EdgeDataset subset(const EdgeDataset& data, const std::vector<std::size_t>& indices) {
    EdgeDataset out;
    out.feature_names = data.feature_names;
    out.X = Matrix(indices.size(), data.X.cols);
    out.edges.reserve(indices.size());
    out.y.reserve(indices.size());
    for (std::size_t r = 0; r < indices.size(); ++r) {
        const std::size_t i = indices[r];
        out.edges.push_back(data.edges[i]);
        out.y.push_back(data.y[i]);
        std::copy(data.X.row(i), data.X.row(i) + data.X.cols, out.X.row(r));
    }
    return out;
}

EdgeDataset filter_by_status(const EdgeDataset& data, TruthStatus status) {
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < data.edges.size(); ++i)
        if (data.edges[i].topic_status == status) keep.push_back(i);
    return subset(data, keep);
}

TrainedDiffusionModel train_diffusion_model(const EdgeDataset& train,
                                            const DiffusionTrainConfig& config) {
    ForestParams fp = config.forest;
    if (fp.seed == 0) fp.seed = sub_seed(config.seed, 1);
    const ForestModel forest = fit_forest(train.X.view(), train.y, fp);

    TrainedDiffusionModel out;
    out.ranking = rank_features(forest, train.feature_names);
    const std::vector<std::string> selected = select_top_k(out.ranking, config.top_k);
    const Matrix Xsel = select_columns(train.X, train.feature_names, selected);
    out.model = fit_logreg(Xsel.view(), train.y, selected, config.logreg);
    out.model.positive_label = "diffused";
    return out;
}

Metrics evaluate_diffusion(const LogRegModel& model, const EdgeDataset& test, double threshold) {
    if (test.edges.empty()) throw std::invalid_argument("evaluate_diffusion: empty test set");
    const Matrix Xsel = select_columns(test.X, test.feature_names, model.selected_features);
    ConfusionCounts c;
    for (std::size_t i = 0; i < Xsel.rows; ++i) {
        const bool predicted =
            classify(model, {Xsel.row(i), Xsel.cols}, threshold) == Classification::positive;
        const bool actual = test.y[i] == 1;
        if (predicted && actual) ++c.tp;
        else if (predicted && !actual) ++c.fp;
        else if (!predicted && actual) ++c.fn;
        else ++c.tn;
    }
    return metrics_from_counts(c);
}

Metrics cross_credibility(const LogRegModel& model, const EdgeDataset& other_class_test,
                          double threshold) {
    return evaluate_diffusion(model, other_class_test, threshold);
}

std::vector<Metrics> cross_validate_logreg(const EdgeDataset& data,
                                           const std::vector<std::string>& selected,
                                           const LogRegParams& params, std::size_t folds,
                                           std::uint64_t seed, double threshold) {
    const SplitPlan plan = k_fold(data.edges.size(), folds, seed);
    std::vector<Metrics> out;
    out.reserve(folds);
    for (std::size_t f = 0; f < plan.folds.size(); ++f) {
        std::vector<std::size_t> train_idx;
        for (std::size_t g = 0; g < plan.folds.size(); ++g)
            if (g != f)
                train_idx.insert(train_idx.end(), plan.folds[g].begin(), plan.folds[g].end());
        std::sort(train_idx.begin(), train_idx.end());

        const EdgeDataset train = subset(data, train_idx);
        const EdgeDataset test = subset(data, plan.folds[f]);
        const Matrix Xsel = select_columns(train.X, train.feature_names, selected);
        const LogRegModel model = fit_logreg(Xsel.view(), train.y, selected, params);
        out.push_back(evaluate_diffusion(model, test, threshold));
    }
    return out;
}

CredibilityDataset build_credibility_dataset(const EdgeDataset& data, bool include_diffusion,
                                             DiffusionInput source,
                                             const LogRegModel* diffusion_model,
                                             double diffusion_threshold) {
    CredibilityDataset out;
    out.feature_names = data.feature_names;
    if (include_diffusion) out.feature_names.push_back(kDiffusionFeatureName);

    const std::size_t cols = out.feature_names.size();
    out.X = Matrix(data.edges.size(), cols);
    out.y.resize(data.edges.size());
    out.message_ids.reserve(data.edges.size());
    out.true_status.reserve(data.edges.size());

    Matrix Xdiff;
    if (include_diffusion && source == DiffusionInput::predicted) {
        if (!diffusion_model)
            throw std::invalid_argument("predicted diffusion input requires a diffusion model");
        Xdiff = select_columns(data.X, data.feature_names, diffusion_model->selected_features);
    }

    for (std::size_t i = 0; i < data.edges.size(); ++i) {
        std::copy(data.X.row(i), data.X.row(i) + data.X.cols, out.X.row(i));
        if (include_diffusion) {
            double bit;
            if (source == DiffusionInput::observed) {
                bit = data.y[i] == 1 ? 1.0 : 0.0;
            } else {
                bit = classify(*diffusion_model, {Xdiff.row(i), Xdiff.cols},
                               diffusion_threshold) == Classification::positive
                          ? 1.0
                          : 0.0;
            }
            out.X.at(i, cols - 1) = bit;
        }
        out.y[i] = data.edges[i].topic_status == TruthStatus::True ? 1 : 0;
        out.message_ids.push_back(data.edges[i].tweet_id);
        out.true_status.push_back(data.edges[i].topic_status);
    }
    return out;
}

LogRegModel train_credibility_model(const CredibilityDataset& train, const LogRegParams& params) {
    LogRegModel m = fit_logreg(train.X.view(), train.y, train.feature_names, params);
    m.positive_label = "True";
    return m;
}

CredibilityPrediction majority_vote(const std::vector<TruthStatus>& votes) {
    if (votes.empty()) throw std::invalid_argument("majority_vote: no votes");
    const auto trues = static_cast<std::size_t>(
        std::count(votes.begin(), votes.end(), TruthStatus::True));
    const std::size_t falses = votes.size() - trues;
    CredibilityPrediction p;
    if (trues == falses) {
        p.status = TruthStatus::False;  // rumor-cautious tie rule
        p.tie = true;
    } else {
        p.status = trues > falses ? TruthStatus::True : TruthStatus::False;
    }
    return p;
}

CredibilityPrediction predict_credibility(const LogRegModel& model, const Dataset& message_rows,
                                          const std::vector<std::string>& row_feature_names,
                                          double threshold) {
    if (message_rows.rows == 0) throw std::invalid_argument("predict_credibility: no edges");
    std::vector<TruthStatus> votes;
    votes.reserve(message_rows.rows);
    for (std::size_t i = 0; i < message_rows.rows; ++i) {
        const std::vector<double> x = project_features(
            {message_rows.row(i), message_rows.cols}, row_feature_names, model.selected_features);
        votes.push_back(classify(model, x, threshold) == Classification::positive
                            ? TruthStatus::True
                            : TruthStatus::False);
    }
    return majority_vote(votes);
}

CredibilityEval evaluate_credibility(const LogRegModel& model, const CredibilityDataset& test,
                                     double threshold) {
    if (test.y.empty()) throw std::invalid_argument("evaluate_credibility: empty test set");
    const Matrix Xsel = select_columns(test.X, test.feature_names, model.selected_features);

    struct MessageTally {
        std::vector<TruthStatus> votes;
        TruthStatus truth = TruthStatus::False;
    };
    std::map<std::string, MessageTally> messages;

    ConfusionCounts edge_counts;
    for (std::size_t i = 0; i < Xsel.rows; ++i) {
        const bool predicted_true =
            classify(model, {Xsel.row(i), Xsel.cols}, threshold) == Classification::positive;
        const bool actually_true = test.true_status[i] == TruthStatus::True;
        if (predicted_true && actually_true) ++edge_counts.tp;
        else if (predicted_true && !actually_true) ++edge_counts.fp;
        else if (!predicted_true && actually_true) ++edge_counts.fn;
        else ++edge_counts.tn;

        MessageTally& tally = messages[test.message_ids[i]];
        tally.votes.push_back(predicted_true ? TruthStatus::True : TruthStatus::False);
        tally.truth = test.true_status[i];
    }

    CredibilityEval out;
    ConfusionCounts msg_counts;
    for (const auto& [id, tally] : messages) {
        const CredibilityPrediction p = majority_vote(tally.votes);
        if (p.tie) ++out.tie_count;
        const bool predicted_true = p.status == TruthStatus::True;
        const bool actually_true = tally.truth == TruthStatus::True;
        if (predicted_true && actually_true) ++msg_counts.tp;
        else if (predicted_true && !actually_true) ++msg_counts.fp;
        else if (!predicted_true && actually_true) ++msg_counts.fn;
        else ++msg_counts.tn;
    }
    out.message_level = metrics_from_counts(msg_counts);
    out.edge_level = metrics_from_counts(edge_counts);
    out.message_count = messages.size();
    return out;
}

AblationResult ablate_diffusion_feature(const EdgeDataset& train, const EdgeDataset& test,
                                        const LogRegParams& params, double threshold) {
    AblationResult out;
    {
        const CredibilityDataset ctrain = build_credibility_dataset(train, true);
        const CredibilityDataset ctest = build_credibility_dataset(test, true);
        const LogRegModel model = train_credibility_model(ctrain, params);
        out.with_diffusion = evaluate_credibility(model, ctest, threshold);
    }
    {
        const CredibilityDataset ctrain = build_credibility_dataset(train, false);
        const CredibilityDataset ctest = build_credibility_dataset(test, false);
        const LogRegModel model = train_credibility_model(ctrain, params);
        out.without_diffusion = evaluate_credibility(model, ctest, threshold);
    }
    return out;
}

namespace {

EdgeDataset concat(const EdgeDataset& a, const EdgeDataset& b) {
    EdgeDataset out;
    out.feature_names = a.feature_names;
    out.X = Matrix(a.edges.size() + b.edges.size(), a.X.cols);
    for (std::size_t r = 0; r < a.edges.size(); ++r)
        std::copy(a.X.row(r), a.X.row(r) + a.X.cols, out.X.row(r));
    for (std::size_t r = 0; r < b.edges.size(); ++r)
        std::copy(b.X.row(r), b.X.row(r) + b.X.cols, out.X.row(a.edges.size() + r));
    out.edges = a.edges;
    out.edges.insert(out.edges.end(), b.edges.begin(), b.edges.end());
    out.y = a.y;
    out.y.insert(out.y.end(), b.y.begin(), b.y.end());
    return out;
}

}  // namespace

EvalReport run_protocol(const EdgeDataset& data, const ProtocolConfig& config) {
    if (data.edges.empty()) throw std::invalid_argument("run_protocol: empty dataset");

    EvalReport report;
    report.diffused_fraction = class_balance(data.edges);

    const TruthStatus statuses[2] = {TruthStatus::True, TruthStatus::False};
    ClassReport* reports[2] = {&report.true_class, &report.false_class};
    EdgeDataset class_data[2], class_train[2], class_test[2];
    LogRegModel models[2];

    for (int s = 0; s < 2; ++s) {
        class_data[s] = filter_by_status(data, statuses[s]);
        if (class_data[s].edges.empty())
            throw std::invalid_argument(std::string("run_protocol: no edges for status ") +
                                        to_string(statuses[s]));
        const SplitPlan plan =
            make_split(class_data[s].edges.size(), config.train_frac,
                       sub_seed(config.train.seed, 10 + static_cast<std::uint64_t>(s)),
                       &class_data[s].y);
        class_train[s] = subset(class_data[s], plan.train_indices);
        class_test[s] = subset(class_data[s], plan.test_indices);
    }

    const EdgeDataset pooled_train = concat(class_train[0], class_train[1]);
    const EdgeDataset pooled_test = concat(class_test[0], class_test[1]);

    // Pooled mode ranks once over both classes' training edges; per-class
    // mode (the default) reranks inside each class.
    FeatureRanking pooled_ranking;
    std::vector<std::string> pooled_selected;
    if (config.train.pooled_ranking) {
        ForestParams fp = config.train.forest;
        if (fp.seed == 0) fp.seed = sub_seed(config.train.seed, 21);
        const ForestModel forest = fit_forest(pooled_train.X.view(), pooled_train.y, fp);
        pooled_ranking = rank_features(forest, pooled_train.feature_names);
        pooled_selected = select_top_k(pooled_ranking, config.train.top_k);
    }

    for (int s = 0; s < 2; ++s) {
        ClassReport& cr = *reports[s];
        cr.status = to_string(statuses[s]);
        if (config.train.pooled_ranking) {
            cr.ranking = pooled_ranking;
            const Matrix Xsel =
                select_columns(class_train[s].X, class_train[s].feature_names, pooled_selected);
            models[s] = fit_logreg(Xsel.view(), class_train[s].y, pooled_selected,
                                   config.train.logreg);
            models[s].positive_label = "diffused";
        } else {
            DiffusionTrainConfig tc = config.train;
            tc.seed = sub_seed(config.train.seed, 20 + static_cast<std::uint64_t>(s));
            TrainedDiffusionModel trained = train_diffusion_model(class_train[s], tc);
            cr.ranking = std::move(trained.ranking);
            models[s] = std::move(trained.model);
        }
        cr.selected_features = models[s].selected_features;
        cr.holdout = evaluate_diffusion(models[s], class_test[s], config.train.threshold);
        cr.fold_metrics = cross_validate_logreg(
            class_data[s], models[s].selected_features, config.train.logreg, config.folds,
            sub_seed(config.train.seed, 30 + static_cast<std::uint64_t>(s)),
            config.train.threshold);
        double fsum = 0.0;
        for (const auto& m : cr.fold_metrics) fsum += m.f;
        cr.mean_fold_f = fsum / static_cast<double>(cr.fold_metrics.size());
        cr.train_edges = class_train[s].edges.size();
        cr.test_edges = class_test[s].edges.size();
    }

    report.true_model_false_test =
        cross_credibility(models[0], class_test[1], config.train.threshold);
    report.false_model_true_test =
        cross_credibility(models[1], class_test[0], config.train.threshold);

    const CredibilityDataset cred_train = build_credibility_dataset(pooled_train, true);
    const LogRegModel cred_model = train_credibility_model(cred_train, config.train.logreg);
    CredibilityDataset cred_test;
    TrainedDiffusionModel pooled_diffusion;
    if (config.credibility_input == DiffusionInput::predicted) {
        // Inference without ground-truth labels: feed the diffusion model's
        // predictions into the diffusion column.
        DiffusionTrainConfig tc = config.train;
        tc.seed = sub_seed(config.train.seed, 40);
        pooled_diffusion = train_diffusion_model(pooled_train, tc);
        cred_test = build_credibility_dataset(pooled_test, true, DiffusionInput::predicted,
                                              &pooled_diffusion.model, config.train.threshold);
    } else {
        cred_test = build_credibility_dataset(pooled_test, true);
    }
    report.credibility = evaluate_credibility(cred_model, cred_test, config.train.threshold);

    report.ablation = ablate_diffusion_feature(pooled_train, pooled_test, config.train.logreg,
                                               config.train.threshold);
    return report;
}

}  // namespace rumorcast
