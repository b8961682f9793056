#pragma once

// Bayesian logistic regression: MAP estimation under an isotropic Gaussian
// prior N(0, sigma2 I) on the non-intercept weights, solved by Newton
// iterations with backtracking on standardized features. The Laplace
// approximation (inverse Hessian at the MAP) is computed on request.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "rumorcast/dataset.hpp"

namespace rumorcast {

struct LogRegParams {
    double sigma2 = 10.0;
    double tol = 1e-6;  // convergence: gradient infinity-norm
    int max_iter = 100;
    bool want_covariance = false;
};

struct LogRegModel {
    // weights[0] is the unpenalized intercept; weights[1+j] pairs with
    // selected_features[j] in standardized space.
    std::vector<double> weights;
    double sigma2 = 10.0;
    std::vector<double> feature_means;
    std::vector<double> feature_stds;  // constant features keep std 1, weight pinned 0
    std::vector<std::string> selected_features;

    std::vector<std::vector<double>> laplace_covariance;  // empty unless requested
    bool converged = false;
    int iterations = 0;
    bool newton_fallback = false;            // Hessian solve failed at least once
    std::vector<double> log_posterior_path;  // value after each accepted step

    std::string positive_label = "diffused";

    // Linear score of a raw feature row aligned with selected_features.
    double linear_score(std::span<const double> x) const;
};

double sigmoid(double z);

// Log posterior and its gradient for weights w over a fixed design matrix
// (no intercept column; w[0] is the intercept, unpenalized). Exposed for the
// finite-difference and grid-search oracles.
double logreg_log_posterior(const Dataset& X, const std::vector<int>& y,
                            std::span<const double> w, double sigma2);
std::vector<double> logreg_gradient(const Dataset& X, const std::vector<int>& y,
                                    std::span<const double> w, double sigma2);

// MAP fit; X rows are raw feature vectors aligned with feature_names.
// Requires finite values and both classes present.
LogRegModel fit_logreg(const Dataset& X, const std::vector<int>& y,
                       const std::vector<std::string>& feature_names,
                       const LogRegParams& params = {});

// sigmoid(w . standardized x). With use_posterior_predictive and a stored
// Laplace covariance, applies the probit moderation kappa(s^2) * z.
double predict_proba(const LogRegModel& m, std::span<const double> x,
                     bool use_posterior_predictive = false);

enum class Classification { positive, negative };

// predict_proba >= threshold counts as positive (ties go to positive).
Classification classify(const LogRegModel& m, std::span<const double> x,
                        double threshold = 0.5);

// Reorders a named value row onto the wanted feature list; throws
// std::invalid_argument when a wanted feature is missing.
std::vector<double> project_features(std::span<const double> values,
                                     const std::vector<std::string>& value_names,
                                     const std::vector<std::string>& wanted);

}  // namespace rumorcast
