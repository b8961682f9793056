#include "rumorcast/logreg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <unordered_map>

namespace rumorcast {

namespace {

// log(1 + e^z) without overflow.
double log1pexp(double z) {
    if (z > 35.0) return z;
    if (z < -35.0) return std::exp(z);
    return std::log1p(std::exp(z));
}

// In-place Cholesky factorization of a symmetric positive-definite matrix
// stored row-major; returns false when a pivot degenerates.
bool cholesky(std::vector<double>& a, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            double sum = a[i * n + j];
            for (std::size_t k = 0; k < j; ++k) sum -= a[i * n + k] * a[j * n + k];
            if (i == j) {
                if (sum <= 1e-12) return false;
                a[i * n + i] = std::sqrt(sum);
            } else {
                a[i * n + j] = sum / a[j * n + j];
            }
        }
    }
    return true;
}

// Solves L L^T x = b given the Cholesky factor in the lower triangle.
std::vector<double> cholesky_solve(const std::vector<double>& l, std::size_t n,
                                   std::vector<double> b) {
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < i; ++k) b[i] -= l[i * n + k] * b[k];
        b[i] /= l[i * n + i];
    }
    for (std::size_t i = n; i-- > 0;) {
        for (std::size_t k = i + 1; k < n; ++k) b[i] -= l[k * n + i] * b[k];
        b[i] /= l[i * n + i];
    }
    return b;
}

// Full inverse from the Cholesky factor, for the Laplace covariance.
std::vector<double> cholesky_inverse(const std::vector<double>& l, std::size_t n) {
    std::vector<double> inv(n * n, 0.0);
    for (std::size_t col = 0; col < n; ++col) {
        std::vector<double> e(n, 0.0);
        e[col] = 1.0;
        std::vector<double> x = cholesky_solve(l, n, std::move(e));
        for (std::size_t row = 0; row < n; ++row) inv[row * n + col] = x[row];
    }
    return inv;
}

}  // namespace

double sigmoid(double z) {
    if (z >= 0.0) {
        const double e = std::exp(-z);
        return 1.0 / (1.0 + e);
    }
    const double e = std::exp(z);
    return e / (1.0 + e);
}

double logreg_log_posterior(const Dataset& X, const std::vector<int>& y,
                            std::span<const double> w, double sigma2) {
    if (w.size() != X.cols + 1) throw std::invalid_argument("weight size must be cols + 1");
    double lp = 0.0;
    for (std::size_t i = 0; i < X.rows; ++i) {
        double z = w[0];
        for (std::size_t j = 0; j < X.cols; ++j) z += w[j + 1] * X.at(i, j);
        lp += y[i] * z - log1pexp(z);
    }
    for (std::size_t j = 1; j < w.size(); ++j) lp -= w[j] * w[j] / (2.0 * sigma2);
    return lp;
}

std::vector<double> logreg_gradient(const Dataset& X, const std::vector<int>& y,
                                    std::span<const double> w, double sigma2) {
    if (w.size() != X.cols + 1) throw std::invalid_argument("weight size must be cols + 1");
    std::vector<double> g(w.size(), 0.0);
    for (std::size_t i = 0; i < X.rows; ++i) {
        double z = w[0];
        for (std::size_t j = 0; j < X.cols; ++j) z += w[j + 1] * X.at(i, j);
        const double resid = static_cast<double>(y[i]) - sigmoid(z);
        g[0] += resid;
        for (std::size_t j = 0; j < X.cols; ++j) g[j + 1] += resid * X.at(i, j);
    }
    for (std::size_t j = 1; j < w.size(); ++j) g[j] -= w[j] / sigma2;
    return g;
}

LogRegModel fit_logreg(const Dataset& X, const std::vector<int>& y,
                       const std::vector<std::string>& feature_names,
                       const LogRegParams& params) {
    if (X.rows != y.size()) throw std::invalid_argument("fit_logreg: X/y size mismatch");
    if (X.rows == 0) throw std::invalid_argument("fit_logreg: empty dataset");
    if (feature_names.size() != X.cols)
        throw std::invalid_argument("fit_logreg: feature name count mismatch");
    const auto pos = std::count(y.begin(), y.end(), 1);
    if (pos == 0 || pos == static_cast<std::ptrdiff_t>(y.size()))
        throw std::invalid_argument("fit_logreg: both classes must be present");
    if (!(params.sigma2 > 0.0)) throw std::invalid_argument("fit_logreg: sigma2 must be positive");
    for (std::size_t i = 0; i < X.rows * X.cols; ++i)
        if (!std::isfinite(X.data[i]))
            throw std::invalid_argument("fit_logreg: non-finite value in design matrix");

    const std::size_t d = X.cols;
    const std::size_t n = X.rows;

    LogRegModel m;
    m.sigma2 = params.sigma2;
    m.selected_features = feature_names;
    m.feature_means.assign(d, 0.0);
    m.feature_stds.assign(d, 1.0);

    std::vector<bool> active(d, false);
    for (std::size_t j = 0; j < d; ++j) {
        double mean = 0.0;
        for (std::size_t i = 0; i < n; ++i) mean += X.at(i, j);
        mean /= static_cast<double>(n);
        double var = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double dlt = X.at(i, j) - mean;
            var += dlt * dlt;
        }
        var /= static_cast<double>(n);
        m.feature_means[j] = mean;
        if (var > 1e-24) {
            m.feature_stds[j] = std::sqrt(var);
            active[j] = true;
        }
    }

    // Standardized design restricted to active columns.
    std::vector<std::size_t> cols;
    for (std::size_t j = 0; j < d; ++j)
        if (active[j]) cols.push_back(j);
    const std::size_t k = cols.size();
    Matrix Z(n, k);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t c = 0; c < k; ++c)
            Z.at(i, c) = (X.at(i, cols[c]) - m.feature_means[cols[c]]) / m.feature_stds[cols[c]];

    const std::size_t dim = k + 1;
    std::vector<double> w(dim, 0.0);
    double lp = logreg_log_posterior(Z.view(), y, w, params.sigma2);
    m.log_posterior_path.push_back(lp);

    std::vector<double> hess(dim * dim);
    for (int iter = 0; iter < params.max_iter; ++iter) {
        std::vector<double> g = logreg_gradient(Z.view(), y, w, params.sigma2);
        double gmax = 0.0;
        for (double v : g) gmax = std::max(gmax, std::abs(v));
        if (gmax < params.tol) {
            m.converged = true;
            break;
        }
        m.iterations = iter + 1;

        // Negative Hessian of the log posterior (positive definite target).
        std::fill(hess.begin(), hess.end(), 0.0);
        for (std::size_t i = 0; i < n; ++i) {
            double z = w[0];
            for (std::size_t c = 0; c < k; ++c) z += w[c + 1] * Z.at(i, c);
            const double p = sigmoid(z);
            const double s = p * (1.0 - p);
            hess[0] += s;
            for (std::size_t a = 0; a < k; ++a) {
                const double za = Z.at(i, a);
                hess[(a + 1) * dim] += s * za;
                for (std::size_t b = 0; b <= a; ++b)
                    hess[(a + 1) * dim + (b + 1)] += s * za * Z.at(i, b);
            }
        }
        for (std::size_t a = 1; a < dim; ++a) hess[a * dim + a] += 1.0 / params.sigma2;
        for (std::size_t a = 0; a < dim; ++a)
            for (std::size_t b = a + 1; b < dim; ++b) hess[a * dim + b] = hess[b * dim + a];

        std::vector<double> direction;
        std::vector<double> chol = hess;
        if (cholesky(chol, dim)) {
            direction = cholesky_solve(chol, dim, g);
        } else {
            m.newton_fallback = true;
            direction = g;  // plain ascent direction
        }

        // Backtracking keeps the log posterior non-decreasing.
        double step = 1.0;
        bool accepted = false;
        for (int half = 0; half < 60; ++half) {
            std::vector<double> trial(dim);
            for (std::size_t j = 0; j < dim; ++j) trial[j] = w[j] + step * direction[j];
            const double trial_lp = logreg_log_posterior(Z.view(), y, trial, params.sigma2);
            if (trial_lp >= lp) {
                w = std::move(trial);
                lp = trial_lp;
                accepted = true;
                break;
            }
            step *= 0.5;
        }
        if (!accepted) break;  // no ascent possible at double precision
        m.log_posterior_path.push_back(lp);
    }
    if (!m.converged) {
        // Re-check: the loop may have exhausted max_iter right at the optimum.
        std::vector<double> g = logreg_gradient(Z.view(), y, w, params.sigma2);
        double gmax = 0.0;
        for (double v : g) gmax = std::max(gmax, std::abs(v));
        m.converged = gmax < params.tol;
    }

    // Scatter the active weights back into schema order.
    m.weights.assign(d + 1, 0.0);
    m.weights[0] = w[0];
    for (std::size_t c = 0; c < k; ++c) m.weights[cols[c] + 1] = w[c + 1];

    if (params.want_covariance) {
        std::fill(hess.begin(), hess.end(), 0.0);
        for (std::size_t i = 0; i < n; ++i) {
            double z = w[0];
            for (std::size_t c = 0; c < k; ++c) z += w[c + 1] * Z.at(i, c);
            const double s = sigmoid(z) * (1.0 - sigmoid(z));
            hess[0] += s;
            for (std::size_t a = 0; a < k; ++a) {
                const double za = Z.at(i, a);
                hess[(a + 1) * dim] += s * za;
                for (std::size_t b = 0; b <= a; ++b)
                    hess[(a + 1) * dim + (b + 1)] += s * za * Z.at(i, b);
            }
        }
        for (std::size_t a = 1; a < dim; ++a) hess[a * dim + a] += 1.0 / params.sigma2;
        for (std::size_t a = 0; a < dim; ++a)
            for (std::size_t b = a + 1; b < dim; ++b) hess[a * dim + b] = hess[b * dim + a];
        std::vector<double> chol = hess;
        if (cholesky(chol, dim)) {
            const std::vector<double> inv = cholesky_inverse(chol, dim);
            m.laplace_covariance.assign(d + 1, std::vector<double>(d + 1, 0.0));
            // Map active-space covariance back to full indices (intercept first).
            std::vector<std::size_t> full{0};
            for (std::size_t c = 0; c < k; ++c) full.push_back(cols[c] + 1);
            for (std::size_t a = 0; a < dim; ++a)
                for (std::size_t b = 0; b < dim; ++b)
                    m.laplace_covariance[full[a]][full[b]] = inv[a * dim + b];
        }
    }
    return m;
}

double LogRegModel::linear_score(std::span<const double> x) const {
    if (x.size() != selected_features.size())
        throw std::invalid_argument("feature vector does not match model schema");
    double z = weights[0];
    for (std::size_t j = 0; j < x.size(); ++j) {
        if (!std::isfinite(x[j])) throw std::invalid_argument("non-finite feature value");
        z += weights[j + 1] * (x[j] - feature_means[j]) / feature_stds[j];
    }
    return z;
}

namespace {

// Keep probabilities strictly inside (0, 1) for finite inputs.
double clamp_open_unit(double p) {
    return std::min(std::max(p, std::numeric_limits<double>::min()),
                    std::nextafter(1.0, 0.0));
}

}  // namespace

double predict_proba(const LogRegModel& m, std::span<const double> x,
                     bool use_posterior_predictive) {
    const double z = m.linear_score(x);
    if (!use_posterior_predictive || m.laplace_covariance.empty())
        return clamp_open_unit(sigmoid(z));

    // Probit-approximate predictive: sigmoid(z / sqrt(1 + pi s^2 / 8)).
    std::vector<double> xt(m.weights.size(), 1.0);
    for (std::size_t j = 0; j < x.size(); ++j)
        xt[j + 1] = (x[j] - m.feature_means[j]) / m.feature_stds[j];
    double s2 = 0.0;
    for (std::size_t a = 0; a < xt.size(); ++a)
        for (std::size_t b = 0; b < xt.size(); ++b)
            s2 += xt[a] * m.laplace_covariance[a][b] * xt[b];
    s2 = std::max(s2, 0.0);
    const double kappa = 1.0 / std::sqrt(1.0 + 3.14159265358979323846 * s2 / 8.0);
    return clamp_open_unit(sigmoid(kappa * z));
}

Classification classify(const LogRegModel& m, std::span<const double> x, double threshold) {
    return predict_proba(m, x) >= threshold ? Classification::positive
                                            : Classification::negative;
}

std::vector<double> project_features(std::span<const double> values,
                                     const std::vector<std::string>& value_names,
                                     const std::vector<std::string>& wanted) {
    if (values.size() != value_names.size())
        throw std::invalid_argument("project_features: value/name size mismatch");
    std::unordered_map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < value_names.size(); ++i) index[value_names[i]] = i;
    std::vector<double> out;
    out.reserve(wanted.size());
    for (const auto& name : wanted) {
        auto it = index.find(name);
        if (it == index.end())
            throw std::invalid_argument("feature \"" + name + "\" missing from input vector");
        out.push_back(values[it->second]);
    }
    return out;
}

}  // namespace rumorcast
