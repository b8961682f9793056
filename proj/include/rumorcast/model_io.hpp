#pragma once

// Versioned JSON persistence for fitted models, rankings and reports.

#include <filesystem>

#include <json.hpp>

#include "rumorcast/diffusion.hpp"
#include "rumorcast/eval.hpp"
#include "rumorcast/forest.hpp"
#include "rumorcast/logreg.hpp"
#include "rumorcast/metrics.hpp"

namespace rumorcast {

inline constexpr int kModelFormatVersion = 1;

void save_model(const LogRegModel& model, const std::filesystem::path& path);
LogRegModel load_model(const std::filesystem::path& path);

nlohmann::json ranking_json(const FeatureRanking& ranking);
FeatureRanking ranking_from_json(const nlohmann::json& j);

nlohmann::json metrics_json(const Metrics& m);
nlohmann::json credibility_eval_json(const CredibilityEval& e);
nlohmann::json eval_report_json(const EvalReport& report);
nlohmann::json cascade_stats_json(const CascadeStats& s);

}  // namespace rumorcast
