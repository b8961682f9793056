#pragma once

// Latent message attributes: sentiment (3), emotion (5), intent (5) and an
// abusiveness score, produced by a deterministic lexicon scorer. Precomputed
// scores can be injected from any external analyzer via load_scores(); when
// both are available the loaded scores win.

#include <array>
#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace rumorcast {

inline constexpr std::size_t kLatentScoreCount = 14;

struct LatentScores {
    double positive = 0, negative = 0, neutral = 0;
    double happy = 0, fear = 0, sad = 0, angry = 0, bored = 0;
    double feedback = 0, news = 0, query = 0, spam = 0, marketing = 0;
    double abusive = 0;

    bool operator==(const LatentScores&) const = default;

    // Values in canonical field order (the message-feature schema order).
    std::array<double, kLatentScoreCount> values() const;
    static const std::array<const char*, kLatentScoreCount>& field_names();

    // All fields in [0,1] and each multinomial group sums to 1 within tol.
    bool valid(double tol = 1e-9) const;
};

// The 13 multinomial categories grouped, plus "abusive".
struct Lexicon {
    std::map<std::string, std::set<std::string>> terms;  // category -> lowercase terms
    double alpha = 1.0;                                  // additive smoothing, > 0

    bool valid() const;
};

// Category names in schema order; the first 13 are the multinomial classes.
const std::vector<std::string>& lexicon_categories();

// Small built-in lexicon. Test-fixture quality, not linguistic ground truth.
const Lexicon& default_lexicon();

// JSON object of category -> array of terms; alpha optional ("alpha": x).
Lexicon load_lexicon(const std::filesystem::path& path);

// Bag-of-words scoring: tokens are lowercased maximal alphanumeric runs
// (any non-ASCII codepoint counts as a word character). Group scores are
// (hits + alpha) / sum(hits + alpha); abusive = hits / (token_count + 1).
LatentScores analyze_text(const std::string& text, const Lexicon& lexicon);

std::vector<std::string> tokenize(const std::string& text);

// JSONL of {"tweet_id": ..., <14 score fields>}. Every row is validated
// against the LatentScores invariants; violations name the tweet and field.
std::map<std::string, LatentScores> load_scores(const std::filesystem::path& path);

void write_scores(const std::map<std::string, LatentScores>& scores,
                  const std::filesystem::path& path);

}  // namespace rumorcast
