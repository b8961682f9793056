#pragma once

// The fixed 57-column edge feature schema:
//   src network (3) + dest network (3) + src solo interaction (12) +
//   dest solo interaction (12) + pairwise (2) + social homogeneity (1) +
//   message (24).
// Order is a constant of the artifact; CSV headers, model files and planted
// synth weights all index into it.

#include <cstddef>
#include <string>
#include <unordered_map>
#include <vector>

namespace rumorcast {

enum class FeatureKind { boolean, ratio, count, probability };
enum class FeatureTransform { identity, log1p };

struct FeatureSpec {
    std::string name;
    FeatureKind kind;
    FeatureTransform transform;
};

class FeatureSchema {
public:
    static const FeatureSchema& instance();

    std::size_t size() const { return specs_.size(); }
    const FeatureSpec& at(std::size_t i) const { return specs_[i]; }
    const std::vector<FeatureSpec>& specs() const { return specs_; }
    const std::vector<std::string>& names() const { return names_; }

    // Index of a feature name; throws std::out_of_range when unknown.
    std::size_t index_of(const std::string& name) const;

private:
    FeatureSchema();
    std::vector<FeatureSpec> specs_;
    std::vector<std::string> names_;
    std::unordered_map<std::string, std::size_t> index_;
};

inline constexpr std::size_t kFeatureCount = 57;

// Applies the schema transform (log1p on count-kind columns) to a raw value.
double apply_transform(FeatureTransform t, double raw);

struct FeatureVector {
    std::vector<double> values;  // length kFeatureCount, transforms applied

    bool operator==(const FeatureVector&) const = default;
};

}  // namespace rumorcast
