#pragma once

// Per-edge feature assembly over an immutable corpus. A FeatureExtractor
// caches per-user posting aggregates once; extraction is then pure and safe
// to run concurrently across edges.

#include <array>
#include <map>
#include <string>

#include "rumorcast/content_analysis.hpp"
#include "rumorcast/corpus.hpp"
#include "rumorcast/feature_schema.hpp"

namespace rumorcast {

struct FeatureOptions {
    // "avg favorite-tweet" is ambiguous; default is the mean favorite count
    // normalized by the corpus max, the alternative is the fraction of the
    // user's tweets with at least one favorite.
    enum class FavoriteRatio { normalized_mean, fraction_favorited };
    FavoriteRatio favorite_ratio = FavoriteRatio::normalized_mean;
};

struct NetworkFeatures {
    double followers_count;
    double friends_count;
    double followers_friends_ratio;
};

struct SoloFeatures {
    double directed_tweets_ratio;
    double retweet_to_tweet_ratio;
    double tweets_with_hashtag_ratio;
    double tweets_with_url_ratio;
    double tweets_with_media_ratio;
    double avg_favorite_tweet;
    double avg_tweets_per_day;
    double has_profile_url;
    double has_description;
    double verified;
    double statuses_count;
    double account_age_days;

    std::array<double, 12> values() const;
};

struct PairwiseFeatures {
    double shared_friends;
    double dialogue;            // directional: src tweets mentioning dst
    double social_homogeneity;  // Jaccard similarity of friend sets
};

class FeatureExtractor {
public:
    explicit FeatureExtractor(const Corpus& corpus, FeatureOptions options = {});

    NetworkFeatures network(const UserRecord& u) const;
    SoloFeatures solo(const std::string& user_id) const;
    PairwiseFeatures pairwise(const std::string& src_id, const std::string& dst_id) const;

    // 24 raw message values: 10 observables then the 14 latent scores.
    std::array<double, 24> message(const TweetRecord& t, const LatentScores& s) const;

    // Full 57-feature vector in schema order with count transforms applied.
    FeatureVector assemble(const std::string& src_id, const std::string& dst_id,
                           const TweetRecord& tweet, const LatentScores& scores) const;

    const Corpus& corpus() const { return *corpus_; }

private:
    struct UserAggregates {
        std::int64_t authored = 0;
        std::int64_t with_mention = 0;
        std::int64_t retweets = 0;
        std::int64_t with_hashtag = 0;
        std::int64_t with_url = 0;
        std::int64_t with_media = 0;
        std::int64_t with_favorite = 0;
        double favorite_sum = 0.0;
        std::map<std::string, std::int64_t> mention_counts;  // mentioned user -> tweets
    };

    const UserAggregates& aggregates(const std::string& user_id) const;

    const Corpus* corpus_;
    FeatureOptions options_;
    std::map<std::string, UserAggregates> per_user_;
    double max_favorite_count_ = 0.0;
};

// Free-function forms over a transient extractor; the class is the efficient
// path for bulk featurization.
NetworkFeatures network_features(const UserRecord& u);
SoloFeatures solo_interaction_features(const std::string& user_id, const Corpus& corpus,
                                       FeatureOptions options = {});
PairwiseFeatures pairwise_features(const std::string& src_id, const std::string& dst_id,
                                   const Corpus& corpus);
std::array<double, 24> message_features(const TweetRecord& t, const LatentScores& s);
FeatureVector assemble_edge_vector(const std::string& src_id, const std::string& dst_id,
                                   const TweetRecord& tweet, const LatentScores& scores,
                                   const Corpus& corpus, FeatureOptions options = {});

}  // namespace rumorcast
