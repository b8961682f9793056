#include "rumorcast/model_io.hpp"

#include <fstream>

namespace rumorcast {

using nlohmann::json;

void save_model(const LogRegModel& model, const std::filesystem::path& path) {
    json j;
    j["format"] = "rumorcast-logreg";
    j["version"] = kModelFormatVersion;
    j["positive_label"] = model.positive_label;
    j["selected_features"] = model.selected_features;
    j["weights"] = model.weights;  // [0] is the intercept
    j["feature_means"] = model.feature_means;
    j["feature_stds"] = model.feature_stds;
    j["sigma2"] = model.sigma2;
    j["converged"] = model.converged;
    j["iterations"] = model.iterations;
    j["newton_fallback"] = model.newton_fallback;
    if (!model.laplace_covariance.empty()) j["laplace_covariance"] = model.laplace_covariance;

    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write model " + path.string());
    out << j.dump(2) << '\n';
}

LogRegModel load_model(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open model " + path.string());
    json j = json::parse(in);
    if (j.value("format", "") != "rumorcast-logreg")
        throw std::runtime_error(path.string() + ": not a rumorcast logistic model file");
    if (j.value("version", 0) != kModelFormatVersion)
        throw std::runtime_error(path.string() + ": unsupported model version");

    LogRegModel m;
    m.positive_label = j.value("positive_label", "diffused");
    m.selected_features = j.at("selected_features").get<std::vector<std::string>>();
    m.weights = j.at("weights").get<std::vector<double>>();
    m.feature_means = j.at("feature_means").get<std::vector<double>>();
    m.feature_stds = j.at("feature_stds").get<std::vector<double>>();
    m.sigma2 = j.at("sigma2").get<double>();
    m.converged = j.value("converged", false);
    m.iterations = j.value("iterations", 0);
    m.newton_fallback = j.value("newton_fallback", false);
    if (j.contains("laplace_covariance"))
        m.laplace_covariance = j["laplace_covariance"].get<std::vector<std::vector<double>>>();

    if (m.weights.size() != m.selected_features.size() + 1 ||
        m.feature_means.size() != m.selected_features.size() ||
        m.feature_stds.size() != m.selected_features.size())
        throw std::runtime_error(path.string() + ": inconsistent model dimensions");
    for (double s : m.feature_stds)
        if (!(s > 0.0)) throw std::runtime_error(path.string() + ": non-positive feature std");
    return m;
}

json ranking_json(const FeatureRanking& ranking) {
    json arr = json::array();
    for (const auto& [name, importance] : ranking.entries)
        arr.push_back(json{{"feature", name}, {"importance", importance}});
    return json{{"format", "rumorcast-ranking"}, {"version", 1}, {"ranking", arr}};
}

FeatureRanking ranking_from_json(const json& j) {
    FeatureRanking r;
    for (const auto& e : j.at("ranking"))
        r.entries.emplace_back(e.at("feature").get<std::string>(),
                               e.at("importance").get<double>());
    return r;
}

json metrics_json(const Metrics& m) {
    return json{{"precision", m.precision},
                {"recall", m.recall},
                {"f", m.f},
                {"precision_degenerate", m.precision_degenerate},
                {"recall_degenerate", m.recall_degenerate},
                {"tp", m.counts.tp},
                {"fp", m.counts.fp},
                {"fn", m.counts.fn},
                {"tn", m.counts.tn}};
}

json credibility_eval_json(const CredibilityEval& e) {
    return json{{"message_level", metrics_json(e.message_level)},
                {"edge_level", metrics_json(e.edge_level)},
                {"tie_count", e.tie_count},
                {"message_count", e.message_count}};
}

namespace {

json class_report_json(const ClassReport& cr) {
    json folds = json::array();
    for (const auto& m : cr.fold_metrics) folds.push_back(metrics_json(m));
    return json{{"status", cr.status},
                {"holdout", metrics_json(cr.holdout)},
                {"folds", folds},
                {"mean_fold_f", cr.mean_fold_f},
                {"selected_features", cr.selected_features},
                {"ranking", ranking_json(cr.ranking)},
                {"train_edges", cr.train_edges},
                {"test_edges", cr.test_edges}};
}

}  // namespace

json eval_report_json(const EvalReport& report) {
    json fractions;
    for (const auto& [status, fraction] : report.diffused_fraction)
        fractions[to_string(status)] = fraction;
    return json{
        {"true_model", class_report_json(report.true_class)},
        {"false_model", class_report_json(report.false_class)},
        {"inter_credibility",
         json{{"false_model_true_test", metrics_json(report.false_model_true_test)},
              {"true_model_false_test", metrics_json(report.true_model_false_test)}}},
        {"credibility", credibility_eval_json(report.credibility)},
        {"ablation", json{{"with_diffusion", credibility_eval_json(report.ablation.with_diffusion)},
                          {"without_diffusion",
                           credibility_eval_json(report.ablation.without_diffusion)}}},
        {"diffused_fraction", fractions}};
}

json cascade_stats_json(const CascadeStats& s) {
    return json{{"mean_depth", s.mean_depth},
                {"max_depth", s.max_depth},
                {"edge_count", s.edge_count},
                {"diffused_fraction", s.diffused_fraction}};
}

}  // namespace rumorcast
