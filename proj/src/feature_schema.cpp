#include "rumorcast/feature_schema.hpp"

#include <cmath>
#include <stdexcept>

namespace rumorcast {

namespace {

void add_network(std::vector<FeatureSpec>& v, const std::string& prefix) {
    v.push_back({prefix + "_followers_count", FeatureKind::count, FeatureTransform::log1p});
    v.push_back({prefix + "_friends_count", FeatureKind::count, FeatureTransform::log1p});
    v.push_back({prefix + "_followers_friends_ratio", FeatureKind::ratio, FeatureTransform::identity});
}

void add_solo(std::vector<FeatureSpec>& v, const std::string& prefix) {
    v.push_back({prefix + "_directed_tweets_ratio", FeatureKind::ratio, FeatureTransform::identity});
    v.push_back({prefix + "_retweet_to_tweet_ratio", FeatureKind::ratio, FeatureTransform::identity});
    v.push_back({prefix + "_tweets_with_hashtag_ratio", FeatureKind::ratio, FeatureTransform::identity});
    v.push_back({prefix + "_tweets_with_url_ratio", FeatureKind::ratio, FeatureTransform::identity});
    v.push_back({prefix + "_tweets_with_media_ratio", FeatureKind::ratio, FeatureTransform::identity});
    v.push_back({prefix + "_avg_favorite_tweet", FeatureKind::probability, FeatureTransform::identity});
    v.push_back({prefix + "_avg_tweets_per_day", FeatureKind::ratio, FeatureTransform::identity});
    v.push_back({prefix + "_has_profile_url", FeatureKind::boolean, FeatureTransform::identity});
    v.push_back({prefix + "_has_description", FeatureKind::boolean, FeatureTransform::identity});
    v.push_back({prefix + "_verified", FeatureKind::boolean, FeatureTransform::identity});
    v.push_back({prefix + "_statuses_count", FeatureKind::count, FeatureTransform::log1p});
    v.push_back({prefix + "_account_age_days", FeatureKind::count, FeatureTransform::log1p});
}

}  // namespace

FeatureSchema::FeatureSchema() {
    specs_.reserve(kFeatureCount);
    add_network(specs_, "src");
    add_network(specs_, "dest");
    add_solo(specs_, "src");
    add_solo(specs_, "dest");
    specs_.push_back({"shared_friends", FeatureKind::count, FeatureTransform::log1p});
    specs_.push_back({"dialogue", FeatureKind::ratio, FeatureTransform::identity});
    specs_.push_back({"social_homogeneity", FeatureKind::probability, FeatureTransform::identity});

    // Message observables, in the order of the message-feature table.
    specs_.push_back({"msg_quoted_status", FeatureKind::boolean, FeatureTransform::identity});
    specs_.push_back({"msg_is_rt", FeatureKind::boolean, FeatureTransform::identity});
    specs_.push_back({"msg_rt_count", FeatureKind::count, FeatureTransform::log1p});
    specs_.push_back({"msg_rt_status", FeatureKind::boolean, FeatureTransform::identity});
    specs_.push_back({"msg_favorited_count", FeatureKind::count, FeatureTransform::log1p});
    specs_.push_back({"msg_has_hashtag", FeatureKind::boolean, FeatureTransform::identity});
    specs_.push_back({"msg_has_url", FeatureKind::boolean, FeatureTransform::identity});
    specs_.push_back({"msg_has_mentions", FeatureKind::boolean, FeatureTransform::identity});
    specs_.push_back({"msg_has_media", FeatureKind::boolean, FeatureTransform::identity});
    specs_.push_back({"msg_tweet_length", FeatureKind::probability, FeatureTransform::identity});

    // Latent message attributes in LatentScores field order.
    for (const char* name : {"positive_sentiment", "negative_sentiment", "neutral_sentiment",
                             "happy_emotion", "fear_emotion", "sad_emotion", "angry_emotion",
                             "bored_emotion", "feedback_intent", "news_intent", "query_intent",
                             "spam_intent", "marketing_intent", "abusive"})
        specs_.push_back({std::string("msg_") + name, FeatureKind::probability,
                          FeatureTransform::identity});

    names_.reserve(specs_.size());
    for (const auto& s : specs_) names_.push_back(s.name);
    for (std::size_t i = 0; i < names_.size(); ++i) index_[names_[i]] = i;
}

const FeatureSchema& FeatureSchema::instance() {
    static const FeatureSchema schema;
    return schema;
}

std::size_t FeatureSchema::index_of(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) throw std::out_of_range("unknown feature \"" + name + "\"");
    return it->second;
}

double apply_transform(FeatureTransform t, double raw) {
    return t == FeatureTransform::log1p ? std::log1p(raw) : raw;
}

}  // namespace rumorcast
