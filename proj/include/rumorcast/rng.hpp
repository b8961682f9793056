#pragma once

// Deterministic sampling on top of std::mt19937_64. The std <random>
// distributions are implementation-defined, so everything downstream of a
// seed goes through these fixed transforms instead.

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace rumorcast {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next_u64() { return gen_(); }

    // Uniform in [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Uniform integer in [lo, hi] via 128-bit multiply (no modulo bias worth
    // caring about at these ranges).
    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        const unsigned __int128 wide = static_cast<unsigned __int128>(gen_()) * span;
        return lo + static_cast<std::int64_t>(wide >> 64);
    }

    bool bernoulli(double p) { return uniform() < p; }

    // Box-Muller; consumes two uniforms per pair, caches the spare.
    double normal(double mean = 0.0, double stddev = 1.0) {
        if (have_spare_) {
            have_spare_ = false;
            return mean + stddev * spare_;
        }
        double u1 = uniform();
        while (u1 <= 0.0) u1 = uniform();
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double theta = 2.0 * 3.14159265358979323846 * u2;
        spare_ = r * std::sin(theta);
        have_spare_ = true;
        return mean + stddev * r * std::cos(theta);
    }

    double exponential(double rate = 1.0) {
        double u = uniform();
        while (u <= 0.0) u = uniform();
        return -std::log(u) / rate;
    }

    // Marsaglia-Tsang; shape < 1 goes through the boost identity.
    double gamma(double shape) {
        if (shape < 1.0) {
            double u = uniform();
            while (u <= 0.0) u = uniform();
            return gamma(shape + 1.0) * std::pow(u, 1.0 / shape);
        }
        const double d = shape - 1.0 / 3.0;
        const double c = 1.0 / std::sqrt(9.0 * d);
        while (true) {
            double x, v;
            do {
                x = normal();
                v = 1.0 + c * x;
            } while (v <= 0.0);
            v = v * v * v;
            const double u = uniform();
            if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
            if (u > 0.0 && std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
        }
    }

    // Symmetric Dirichlet(alpha, ..., alpha): normalized gamma draws.
    std::vector<double> dirichlet(std::size_t k, double alpha = 1.0) {
        return dirichlet(std::vector<double>(k, alpha));
    }

    std::vector<double> dirichlet(const std::vector<double>& alphas) {
        std::vector<double> v(alphas.size());
        double sum = 0.0;
        for (std::size_t i = 0; i < alphas.size(); ++i) {
            v[i] = alphas[i] == 1.0 ? exponential() : gamma(alphas[i]);
            sum += v[i];
        }
        if (sum <= 0.0) {
            // Degenerate draw at tiny alpha: fall back to a random corner.
            const auto corner = static_cast<std::size_t>(
                uniform_int(0, static_cast<std::int64_t>(alphas.size()) - 1));
            for (std::size_t i = 0; i < v.size(); ++i) v[i] = i == corner ? 1.0 : 0.0;
            return v;
        }
        for (auto& x : v) x /= sum;
        return v;
    }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            const auto j = static_cast<std::size_t>(uniform_int(0, static_cast<std::int64_t>(i) - 1));
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    std::mt19937_64 gen_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

}  // namespace rumorcast
