// rumorcast CLI: reproducible batch commands over JSONL corpora.
//
// Exit codes: 0 success, 1 validation/usage error, 2 internal error.
// Every command that writes artifacts drops a manifest (resolved config +
// input digests) beside them; reruns with identical inputs and seed are
// byte-identical.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "rumorcast/content_analysis.hpp"
#include "rumorcast/corpus.hpp"
#include "rumorcast/diffusion.hpp"
#include "rumorcast/eval.hpp"
#include "rumorcast/manifest.hpp"
#include "rumorcast/model_io.hpp"
#include "rumorcast/synth.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace rumorcast;

namespace {

struct CommonOpts {
    std::string corpus_dir;
    std::string out;
    std::string scores_path;
    std::string lexicon_path;
    std::uint64_t seed = 42;
};

struct LearnOpts {
    std::size_t top_k = 20;
    double sigma2 = 10.0;
    int trees = 100;
    std::size_t folds = 10;
    double train_frac = 0.8;
    double threshold = 0.5;
    bool pooled = false;
    std::string ranking_path;
    std::string model_path;
    bool predicted_diffusion = false;
};

fs::path manifest_path_for(const fs::path& out) {
    if (fs::is_directory(out) || out.extension().empty()) return out / "manifest.json";
    fs::path p = out;
    p += ".manifest.json";
    return p;
}

void write_text(const fs::path& path, const std::string& body) {
    if (path.has_parent_path()) fs::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << body;
}

Corpus load_corpus(const CommonOpts& opts) {
    if (opts.corpus_dir.empty()) throw std::invalid_argument("--corpus is required");
    return parse_corpus(CorpusPaths::in_dir(opts.corpus_dir));
}

void require_out(const CommonOpts& opts) {
    if (opts.out.empty()) throw std::invalid_argument("--out is required");
}

ScoreProvider make_score_provider(const CommonOpts& opts, Lexicon& lexicon_storage) {
    ScoreProvider provider;
    if (!opts.lexicon_path.empty()) {
        lexicon_storage = load_lexicon(opts.lexicon_path);
        provider.lexicon = &lexicon_storage;
    }
    if (!opts.scores_path.empty()) {
        provider.loaded = load_scores(opts.scores_path);
    } else if (!opts.corpus_dir.empty()) {
        // A scores.jsonl sitting next to the corpus is picked up automatically.
        const fs::path side = fs::path(opts.corpus_dir) / "scores.jsonl";
        if (fs::exists(side)) provider.loaded = load_scores(side);
    }
    return provider;
}

std::vector<fs::path> corpus_inputs(const CommonOpts& opts) {
    std::vector<fs::path> inputs = CorpusPaths::in_dir(opts.corpus_dir).all();
    if (!opts.scores_path.empty()) {
        inputs.push_back(opts.scores_path);
    } else {
        const fs::path side = fs::path(opts.corpus_dir) / "scores.jsonl";
        if (fs::exists(side)) inputs.push_back(side);
    }
    if (!opts.lexicon_path.empty()) inputs.push_back(opts.lexicon_path);
    return inputs;
}

json common_config_json(const CommonOpts& opts) {
    return json{{"corpus", opts.corpus_dir},
                {"out", opts.out},
                {"scores", opts.scores_path},
                {"lexicon", opts.lexicon_path},
                {"seed", opts.seed}};
}

json learn_config_json(const CommonOpts& opts, const LearnOpts& learn) {
    json config = common_config_json(opts);
    config["top_k"] = learn.top_k;
    config["sigma2"] = learn.sigma2;
    config["trees"] = learn.trees;
    config["folds"] = learn.folds;
    config["train_frac"] = learn.train_frac;
    config["threshold"] = learn.threshold;
    config["pooled"] = learn.pooled;
    if (!learn.ranking_path.empty()) config["ranking"] = learn.ranking_path;
    if (!learn.model_path.empty()) config["model"] = learn.model_path;
    return config;
}

DiffusionTrainConfig train_config(const CommonOpts& opts, const LearnOpts& learn) {
    DiffusionTrainConfig tc;
    tc.top_k = learn.top_k;
    tc.logreg.sigma2 = learn.sigma2;
    tc.forest.n_trees = learn.trees;
    tc.threshold = learn.threshold;
    tc.seed = opts.seed;
    tc.pooled_ranking = learn.pooled;
    return tc;
}

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

json synth_config_json(const SynthConfig& c) {
    json j{{"n_users", c.n_users},
           {"follow_prob", c.follow_prob},
           {"n_topics_true", c.n_topics_true},
           {"n_topics_false", c.n_topics_false},
           {"tweets_per_topic", c.tweets_per_topic},
           {"intercept_true", c.intercept_true},
           {"intercept_false", c.intercept_false},
           {"target_mean_depth_true", c.target_mean_depth_true},
           {"target_mean_depth_false", c.target_mean_depth_false},
           {"label_noise", c.label_noise},
           {"emit_text", c.emit_text},
           {"hot_rate_true", c.hot_rate_true},
           {"hot_rate_false", c.hot_rate_false},
           {"warm_rate", c.warm_rate},
           {"seed", c.seed}};
    if (!c.planted_weights_true.empty()) j["planted_weights_true"] = c.planted_weights_true;
    if (!c.planted_weights_false.empty()) j["planted_weights_false"] = c.planted_weights_false;
    if (c.target_diffused_fraction_true)
        j["target_diffused_fraction_true"] = *c.target_diffused_fraction_true;
    if (c.target_diffused_fraction_false)
        j["target_diffused_fraction_false"] = *c.target_diffused_fraction_false;
    return j;
}

SynthConfig synth_config_from_json(const json& j) {
    SynthConfig c;
    c.n_users = j.value("n_users", c.n_users);
    c.follow_prob = j.value("follow_prob", c.follow_prob);
    c.n_topics_true = j.value("n_topics_true", c.n_topics_true);
    c.n_topics_false = j.value("n_topics_false", c.n_topics_false);
    c.tweets_per_topic = j.value("tweets_per_topic", c.tweets_per_topic);
    c.intercept_true = j.value("intercept_true", c.intercept_true);
    c.intercept_false = j.value("intercept_false", c.intercept_false);
    c.target_mean_depth_true = j.value("target_mean_depth_true", c.target_mean_depth_true);
    c.target_mean_depth_false = j.value("target_mean_depth_false", c.target_mean_depth_false);
    c.label_noise = j.value("label_noise", c.label_noise);
    c.emit_text = j.value("emit_text", c.emit_text);
    c.hot_rate_true = j.value("hot_rate_true", c.hot_rate_true);
    c.hot_rate_false = j.value("hot_rate_false", c.hot_rate_false);
    c.warm_rate = j.value("warm_rate", c.warm_rate);
    c.seed = j.value("seed", c.seed);
    if (j.contains("planted_weights_true"))
        c.planted_weights_true = j["planted_weights_true"].get<std::vector<double>>();
    if (j.contains("planted_weights_false"))
        c.planted_weights_false = j["planted_weights_false"].get<std::vector<double>>();
    if (j.contains("target_diffused_fraction_true")) {
        if (j["target_diffused_fraction_true"].is_null())
            c.target_diffused_fraction_true.reset();
        else
            c.target_diffused_fraction_true = j["target_diffused_fraction_true"].get<double>();
    }
    if (j.contains("target_diffused_fraction_false")) {
        if (j["target_diffused_fraction_false"].is_null())
            c.target_diffused_fraction_false.reset();
        else
            c.target_diffused_fraction_false = j["target_diffused_fraction_false"].get<double>();
    }
    return c;
}

// --- commands ---------------------------------------------------------------

int cmd_ingest(const CommonOpts& opts) {
    const Corpus corpus = load_corpus(opts);
    json summary{{"users", corpus.users.size()},
                 {"tweets", corpus.tweets.size()},
                 {"reactions", corpus.reactions.size()},
                 {"follow_edges", corpus.follow_edges.size()},
                 {"topics", corpus.topics.size()},
                 {"snapshot_time", format_timestamp(corpus.snapshot_time)}};
    std::cout << summary.dump(2) << '\n';
    if (!opts.out.empty()) {
        write_corpus(corpus, CorpusPaths::in_dir(opts.out));
        write_text(fs::path(opts.out) / "summary.json", summary.dump(2) + "\n");
        write_manifest(fs::path(opts.out) / "manifest.json", "ingest",
                       common_config_json(opts), corpus_inputs(opts));
    }
    return 0;
}

int cmd_featurize(const CommonOpts& opts, bool favorite_fraction, bool exclude_replies) {
    const Corpus corpus = load_corpus(opts);
    Lexicon lexicon_storage;
    const ScoreProvider provider = make_score_provider(opts, lexicon_storage);

    DiffusionOptions dopt;
    dopt.include_replies = !exclude_replies;
    FeatureOptions fopt;
    if (favorite_fraction)
        fopt.favorite_ratio = FeatureOptions::FavoriteRatio::fraction_favorited;

    const EdgeDataset data = build_edge_dataset(corpus, provider, dopt, fopt);
    require_out(opts);

    std::string body;
    for (const auto& name : data.feature_names) {
        body += name;
        body += ',';
    }
    body += "label\n";
    for (std::size_t i = 0; i < data.X.rows; ++i) {
        for (std::size_t j = 0; j < data.X.cols; ++j) {
            body += format_double(data.X.at(i, j));
            body += ',';
        }
        body += data.y[i] ? '1' : '0';
        body += '\n';
    }
    write_text(opts.out, body);

    json config = common_config_json(opts);
    config["favorite_fraction"] = favorite_fraction;
    config["exclude_replies"] = exclude_replies;
    write_manifest(manifest_path_for(opts.out), "featurize", config, corpus_inputs(opts));
    return 0;
}

int cmd_edges(const CommonOpts& opts, bool exclude_replies) {
    const Corpus corpus = load_corpus(opts);
    require_out(opts);
    DiffusionOptions dopt;
    dopt.include_replies = !exclude_replies;
    write_edges_jsonl(build_edges(corpus, dopt), opts.out);

    json config = common_config_json(opts);
    config["exclude_replies"] = exclude_replies;
    write_manifest(manifest_path_for(opts.out), "edges", config,
                   CorpusPaths::in_dir(opts.corpus_dir).all());
    return 0;
}

int cmd_stats(const CommonOpts& opts) {
    const Corpus corpus = load_corpus(opts);
    const std::vector<DiffusionEdge> edges = build_edges(corpus);

    json topics = json::object();
    for (const auto& [topic_id, stats] : cascade_stats(corpus, edges))
        topics[topic_id] = cascade_stats_json(stats);
    json by_status = json::object();
    for (const auto& [status, stats] : cascade_stats_by_status(corpus, edges))
        by_status[to_string(status)] = cascade_stats_json(stats);
    json balance = json::object();
    if (!edges.empty())
        for (const auto& [status, fraction] : class_balance(edges))
            balance[to_string(status)] = fraction;

    const json report{{"topics", topics}, {"by_status", by_status},
                      {"diffused_fraction", balance}};
    if (opts.out.empty()) {
        std::cout << report.dump(2) << '\n';
    } else {
        write_text(opts.out, report.dump(2) + "\n");
        write_manifest(manifest_path_for(opts.out), "stats", common_config_json(opts),
                       CorpusPaths::in_dir(opts.corpus_dir).all());
    }
    return 0;
}

int cmd_rank(const CommonOpts& opts, const LearnOpts& learn) {
    const Corpus corpus = load_corpus(opts);
    Lexicon lexicon_storage;
    const ScoreProvider provider = make_score_provider(opts, lexicon_storage);
    const EdgeDataset data = build_edge_dataset(corpus, provider);
    require_out(opts);

    ForestParams fp;
    fp.n_trees = learn.trees;
    fp.seed = opts.seed;

    json out = json::object();
    if (learn.pooled) {
        const ForestModel forest = fit_forest(data.X.view(), data.y, fp);
        out["pooled"] = ranking_json(rank_features(forest, data.feature_names));
    } else {
        for (TruthStatus status : {TruthStatus::True, TruthStatus::False}) {
            const EdgeDataset class_data = filter_by_status(data, status);
            if (class_data.edges.empty())
                throw std::invalid_argument(std::string("no edges with status ") +
                                            to_string(status));
            const ForestModel forest = fit_forest(class_data.X.view(), class_data.y, fp);
            out[to_string(status)] = ranking_json(rank_features(forest, data.feature_names));
        }
    }
    write_text(opts.out, out.dump(2) + "\n");
    write_manifest(manifest_path_for(opts.out), "rank", learn_config_json(opts, learn),
                   corpus_inputs(opts));
    return 0;
}

// Deployable per-class diffusion models fitted on the whole corpus.
int cmd_train(const CommonOpts& opts, const LearnOpts& learn) {
    const Corpus corpus = load_corpus(opts);
    Lexicon lexicon_storage;
    const ScoreProvider provider = make_score_provider(opts, lexicon_storage);
    const EdgeDataset data = build_edge_dataset(corpus, provider);
    require_out(opts);

    std::optional<json> preranked;
    if (!learn.ranking_path.empty()) {
        std::ifstream in(learn.ranking_path);
        if (!in) throw std::invalid_argument("cannot open ranking " + learn.ranking_path);
        preranked = json::parse(in);
    }

    const fs::path out_dir = opts.out;
    fs::create_directories(out_dir);
    for (TruthStatus status : {TruthStatus::True, TruthStatus::False}) {
        const EdgeDataset class_data = filter_by_status(data, status);
        if (class_data.edges.empty())
            throw std::invalid_argument(std::string("no edges with status ") + to_string(status));

        FeatureRanking ranking;
        if (preranked) {
            const char* key = learn.pooled ? "pooled" : to_string(status);
            if (!preranked->contains(key))
                throw std::invalid_argument(std::string("ranking file lacks \"") + key +
                                            "\" entry");
            ranking = ranking_from_json((*preranked)[key]);
        } else {
            ForestParams fp;
            fp.n_trees = learn.trees;
            fp.seed = opts.seed;
            const ForestModel forest = fit_forest(class_data.X.view(), class_data.y, fp);
            ranking = rank_features(forest, data.feature_names);
        }

        const std::vector<std::string> selected = select_top_k(ranking, learn.top_k);
        Matrix Xsel(class_data.X.rows, selected.size());
        for (std::size_t r = 0; r < class_data.X.rows; ++r) {
            const std::vector<double> row = project_features(
                {class_data.X.row(r), class_data.X.cols}, class_data.feature_names, selected);
            std::copy(row.begin(), row.end(), Xsel.row(r));
        }
        LogRegParams lp;
        lp.sigma2 = learn.sigma2;
        LogRegModel model = fit_logreg(Xsel.view(), class_data.y, selected, lp);
        model.positive_label = "diffused";

        const std::string tag = status == TruthStatus::True ? "true" : "false";
        save_model(model, out_dir / ("model_" + tag + ".json"));
        write_text(out_dir / ("ranking_" + tag + ".json"),
                   ranking_json(ranking).dump(2) + "\n");
    }

    std::vector<fs::path> inputs = corpus_inputs(opts);
    if (!learn.ranking_path.empty()) inputs.push_back(learn.ranking_path);
    write_manifest(out_dir / "manifest.json", "train", learn_config_json(opts, learn), inputs);
    return 0;
}

int cmd_eval(const CommonOpts& opts, const LearnOpts& learn) {
    const Corpus corpus = load_corpus(opts);
    Lexicon lexicon_storage;
    const ScoreProvider provider = make_score_provider(opts, lexicon_storage);
    const EdgeDataset data = build_edge_dataset(corpus, provider);
    require_out(opts);

    json report;
    if (!learn.model_path.empty()) {
        // Fixed-model evaluation over the whole corpus.
        const LogRegModel model = load_model(learn.model_path);
        report["model"] = learn.model_path;
        report["overall"] = metrics_json(evaluate_diffusion(model, data, learn.threshold));
        for (TruthStatus status : {TruthStatus::True, TruthStatus::False}) {
            const EdgeDataset class_data = filter_by_status(data, status);
            if (!class_data.edges.empty())
                report[std::string("status_") + to_string(status)] =
                    metrics_json(evaluate_diffusion(model, class_data, learn.threshold));
        }
    } else {
        ProtocolConfig pc;
        pc.train = train_config(opts, learn);
        pc.train_frac = learn.train_frac;
        pc.folds = learn.folds;
        pc.credibility_input = learn.predicted_diffusion ? DiffusionInput::predicted
                                                         : DiffusionInput::observed;
        report = eval_report_json(run_protocol(data, pc));
    }
    write_text(opts.out, report.dump(2) + "\n");

    std::vector<fs::path> inputs = corpus_inputs(opts);
    if (!learn.model_path.empty()) inputs.push_back(learn.model_path);
    write_manifest(manifest_path_for(opts.out), "eval", learn_config_json(opts, learn), inputs);
    return 0;
}

int cmd_credibility(const CommonOpts& opts, const LearnOpts& learn, bool with_diffusion) {
    const Corpus corpus = load_corpus(opts);
    Lexicon lexicon_storage;
    const ScoreProvider provider = make_score_provider(opts, lexicon_storage);
    const EdgeDataset data = build_edge_dataset(corpus, provider);
    require_out(opts);

    std::vector<int> truth_labels(data.edges.size());
    for (std::size_t i = 0; i < data.edges.size(); ++i)
        truth_labels[i] = data.edges[i].topic_status == TruthStatus::True ? 1 : 0;
    const SplitPlan plan =
        make_split(data.edges.size(), learn.train_frac, opts.seed, &truth_labels);
    const EdgeDataset train = subset(data, plan.train_indices);
    const EdgeDataset test = subset(data, plan.test_indices);

    LogRegParams lp;
    lp.sigma2 = learn.sigma2;
    const CredibilityDataset cred_train = build_credibility_dataset(train, with_diffusion);
    const LogRegModel model = train_credibility_model(cred_train, lp);

    CredibilityDataset cred_test;
    if (with_diffusion && learn.predicted_diffusion) {
        const TrainedDiffusionModel diffusion =
            train_diffusion_model(train, train_config(opts, learn));
        cred_test = build_credibility_dataset(test, true, DiffusionInput::predicted,
                                              &diffusion.model, learn.threshold);
    } else {
        cred_test = build_credibility_dataset(test, with_diffusion);
    }
    const CredibilityEval eval = evaluate_credibility(model, cred_test, learn.threshold);

    json report = credibility_eval_json(eval);
    report["with_diffusion"] = with_diffusion;
    report["diffusion_input"] =
        learn.predicted_diffusion && with_diffusion ? "predicted" : "observed";
    write_text(opts.out, report.dump(2) + "\n");

    json config = learn_config_json(opts, learn);
    config["with_diffusion"] = with_diffusion;
    write_manifest(manifest_path_for(opts.out), "credibility", config, corpus_inputs(opts));
    return 0;
}

int cmd_ablate(const CommonOpts& opts, const LearnOpts& learn) {
    const Corpus corpus = load_corpus(opts);
    Lexicon lexicon_storage;
    const ScoreProvider provider = make_score_provider(opts, lexicon_storage);
    const EdgeDataset data = build_edge_dataset(corpus, provider);
    require_out(opts);

    std::vector<int> truth_labels(data.edges.size());
    for (std::size_t i = 0; i < data.edges.size(); ++i)
        truth_labels[i] = data.edges[i].topic_status == TruthStatus::True ? 1 : 0;
    const SplitPlan plan =
        make_split(data.edges.size(), learn.train_frac, opts.seed, &truth_labels);

    LogRegParams lp;
    lp.sigma2 = learn.sigma2;
    const AblationResult result = ablate_diffusion_feature(
        subset(data, plan.train_indices), subset(data, plan.test_indices), lp, learn.threshold);

    const json report{{"with_diffusion", credibility_eval_json(result.with_diffusion)},
                      {"without_diffusion", credibility_eval_json(result.without_diffusion)},
                      {"message_f_delta", result.with_diffusion.message_level.f -
                                              result.without_diffusion.message_level.f},
                      {"edge_f_delta", result.with_diffusion.edge_level.f -
                                           result.without_diffusion.edge_level.f}};
    write_text(opts.out, report.dump(2) + "\n");
    write_manifest(manifest_path_for(opts.out), "ablate", learn_config_json(opts, learn),
                   corpus_inputs(opts));
    return 0;
}

int cmd_synth(const CommonOpts& opts, const SynthConfig& config,
              const std::string& config_path) {
    require_out(opts);
    const SynthResult result = generate(config);
    write_synth_outputs(result, config, opts.out);

    std::vector<fs::path> inputs;
    if (!config_path.empty()) inputs.push_back(config_path);
    write_manifest(fs::path(opts.out) / "manifest.json", "synth", synth_config_json(config),
                   inputs);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"rumorcast: microscopic rumor-diffusion pipeline"};
    app.require_subcommand(1);

    CommonOpts opts;
    LearnOpts learn;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--corpus", opts.corpus_dir, "Corpus directory");
        cmd->add_option("--out", opts.out, "Output path");
        cmd->add_option("--seed", opts.seed, "Random seed");
        cmd->add_option("--scores", opts.scores_path, "Precomputed latent scores JSONL");
        cmd->add_option("--lexicon", opts.lexicon_path, "Lexicon JSON for the analyzer");
    };
    auto add_learn = [&](CLI::App* cmd) {
        cmd->add_option("--top-k", learn.top_k, "Features kept after ranking");
        cmd->add_option("--sigma2", learn.sigma2, "Gaussian prior variance");
        cmd->add_option("--trees", learn.trees, "Forest size");
        cmd->add_option("--threshold", learn.threshold, "Classification threshold");
        cmd->add_flag("--pooled", learn.pooled, "Rank over both classes pooled");
    };

    CLI::App* ingest = app.add_subcommand("ingest", "Parse and validate a corpus");
    add_common(ingest);

    std::vector<std::string> keywords;
    CLI::App* query = app.add_subcommand("query", "Build the boolean search query");
    query->add_option("--keywords", keywords, "Comma-separated keywords")
        ->required()
        ->delimiter(',');

    bool favorite_fraction = false;
    bool exclude_replies = false;
    CLI::App* featurize = app.add_subcommand("featurize", "Emit the edge feature CSV");
    add_common(featurize);
    featurize->add_flag("--favorite-fraction", favorite_fraction,
                        "Use fraction-of-favorited-tweets instead of normalized mean");
    featurize->add_flag("--exclude-replies", exclude_replies,
                        "Do not count replies as engagement");

    CLI::App* edges = app.add_subcommand("edges", "Emit diffusion edges as JSONL");
    add_common(edges);
    edges->add_flag("--exclude-replies", exclude_replies, "Do not count replies as engagement");

    CLI::App* stats = app.add_subcommand("stats", "Cascade statistics as JSON");
    add_common(stats);

    CLI::App* rank = app.add_subcommand("rank", "Random-forest feature ranking");
    add_common(rank);
    add_learn(rank);

    CLI::App* train = app.add_subcommand("train", "Fit per-class diffusion models");
    add_common(train);
    add_learn(train);
    train->add_option("--ranking", learn.ranking_path, "Reuse a rank output file");

    CLI::App* eval_cmd = app.add_subcommand("eval", "Run the evaluation protocol");
    add_common(eval_cmd);
    add_learn(eval_cmd);
    eval_cmd->add_option("--model", learn.model_path, "Evaluate a saved model instead");
    eval_cmd->add_option("--folds", learn.folds, "Cross-validation folds");
    eval_cmd->add_option("--train-frac", learn.train_frac, "Training fraction");
    eval_cmd->add_flag("--predicted-diffusion", learn.predicted_diffusion,
                       "Feed predicted diffusion labels into the credibility task");

    bool with_diffusion_flag = false;
    bool without_diffusion_flag = false;
    CLI::App* cred = app.add_subcommand("credibility", "Majority-vote credibility prediction");
    add_common(cred);
    add_learn(cred);
    cred->add_option("--train-frac", learn.train_frac, "Training fraction");
    cred->add_flag("--with-diffusion", with_diffusion_flag,
                   "Include the diffusion tag input (default)");
    cred->add_flag("--without-diffusion", without_diffusion_flag,
                   "Drop the diffusion tag input");
    cred->add_flag("--predicted-diffusion", learn.predicted_diffusion,
                   "Use the diffusion model's predictions at inference");

    CLI::App* ablate = app.add_subcommand("ablate", "Credibility with vs without diffusion");
    add_common(ablate);
    add_learn(ablate);
    ablate->add_option("--train-frac", learn.train_frac, "Training fraction");

    // synth flags land in optionals so a --config file can supply the rest.
    std::string synth_config_path;
    std::optional<int> s_users, s_topics_true, s_topics_false, s_tweets;
    std::optional<double> s_follow, s_noise, s_depth_true, s_depth_false, s_frac_true,
        s_frac_false;
    bool s_emit_text = false;
    bool s_no_target = false;
    CLI::App* synth_cmd = app.add_subcommand("synth", "Generate a planted synthetic corpus");
    add_common(synth_cmd);
    synth_cmd->add_option("--config", synth_config_path, "SynthConfig JSON file");
    synth_cmd->add_option("--users", s_users, "User count");
    synth_cmd->add_option("--follow-prob", s_follow, "Follow probability");
    synth_cmd->add_option("--topics-true", s_topics_true, "True topic count");
    synth_cmd->add_option("--topics-false", s_topics_false, "False topic count");
    synth_cmd->add_option("--tweets-per-topic", s_tweets, "Original tweets per topic");
    synth_cmd->add_option("--noise", s_noise, "Label flip probability");
    synth_cmd->add_option("--depth-true", s_depth_true, "Mean depth target, True topics");
    synth_cmd->add_option("--depth-false", s_depth_false, "Mean depth target, False topics");
    synth_cmd->add_option("--frac-true", s_frac_true, "Diffused fraction target, True topics");
    synth_cmd->add_option("--frac-false", s_frac_false,
                          "Diffused fraction target, False topics");
    synth_cmd->add_flag("--no-target-fraction", s_no_target,
                        "Use fixed intercepts instead of fraction targets");
    synth_cmd->add_flag("--emit-text", s_emit_text,
                        "Generate lexicon text and score it with the analyzer");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    try {
        if (*ingest) return cmd_ingest(opts);
        if (*query) {
            std::cout << build_query(keywords) << '\n';
            return 0;
        }
        if (*featurize) return cmd_featurize(opts, favorite_fraction, exclude_replies);
        if (*edges) return cmd_edges(opts, exclude_replies);
        if (*stats) return cmd_stats(opts);
        if (*rank) return cmd_rank(opts, learn);
        if (*train) return cmd_train(opts, learn);
        if (*eval_cmd) return cmd_eval(opts, learn);
        if (*cred) {
            if (with_diffusion_flag && without_diffusion_flag)
                throw std::invalid_argument(
                    "--with-diffusion and --without-diffusion are mutually exclusive");
            return cmd_credibility(opts, learn, !without_diffusion_flag);
        }
        if (*ablate) return cmd_ablate(opts, learn);
        if (*synth_cmd) {
            SynthConfig config;
            if (!synth_config_path.empty()) {
                std::ifstream in(synth_config_path);
                if (!in) throw std::invalid_argument("cannot open config " + synth_config_path);
                config = synth_config_from_json(json::parse(in));
            }
            config.seed = opts.seed;
            if (s_users) config.n_users = *s_users;
            if (s_follow) config.follow_prob = *s_follow;
            if (s_topics_true) config.n_topics_true = *s_topics_true;
            if (s_topics_false) config.n_topics_false = *s_topics_false;
            if (s_tweets) config.tweets_per_topic = *s_tweets;
            if (s_noise) config.label_noise = *s_noise;
            if (s_depth_true) config.target_mean_depth_true = *s_depth_true;
            if (s_depth_false) config.target_mean_depth_false = *s_depth_false;
            if (s_frac_true) config.target_diffused_fraction_true = *s_frac_true;
            if (s_frac_false) config.target_diffused_fraction_false = *s_frac_false;
            if (s_emit_text) config.emit_text = true;
            if (s_no_target) {
                config.target_diffused_fraction_true.reset();
                config.target_diffused_fraction_false.reset();
            }
            return cmd_synth(opts, config, synth_config_path);
        }
        return 1;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 2;
    }
}
