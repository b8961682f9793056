#include "rumorcast/features.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace rumorcast {

namespace {

std::size_t utf8_codepoints(const std::string& s) {
    std::size_t n = 0;
    for (unsigned char c : s)
        if ((c & 0xC0) != 0x80) ++n;
    return n;
}

// Age in whole days against the corpus snapshot, at least 1.
double account_age_days(const UserRecord& u, Timestamp snapshot) {
    Timestamp delta = snapshot - u.account_created_at;
    if (delta < 0) delta = 0;
    return std::max<double>(1.0, static_cast<double>(delta / 86400));
}

}  // namespace

std::array<double, 12> SoloFeatures::values() const {
    return {directed_tweets_ratio,
            retweet_to_tweet_ratio,
            tweets_with_hashtag_ratio,
            tweets_with_url_ratio,
            tweets_with_media_ratio,
            avg_favorite_tweet,
            avg_tweets_per_day,
            has_profile_url,
            has_description,
            verified,
            statuses_count,
            account_age_days};
}

FeatureExtractor::FeatureExtractor(const Corpus& corpus, FeatureOptions options)
    : corpus_(&corpus), options_(options) {
    for (const auto& [id, t] : corpus.tweets) {
        UserAggregates& a = per_user_[t.author_id];
        ++a.authored;
        if (!t.mentions.empty()) ++a.with_mention;
        if (t.is_retweet) ++a.retweets;
        if (!t.hashtags.empty()) ++a.with_hashtag;
        if (!t.urls.empty()) ++a.with_url;
        if (t.has_media) ++a.with_media;
        if (t.favorite_count > 0) ++a.with_favorite;
        a.favorite_sum += static_cast<double>(t.favorite_count);
        for (const auto& m : t.mentions)
            if (m != t.author_id) ++a.mention_counts[m];
        max_favorite_count_ = std::max(max_favorite_count_, static_cast<double>(t.favorite_count));
    }
}

const FeatureExtractor::UserAggregates& FeatureExtractor::aggregates(
    const std::string& user_id) const {
    static const UserAggregates empty;
    auto it = per_user_.find(user_id);
    return it == per_user_.end() ? empty : it->second;
}

NetworkFeatures FeatureExtractor::network(const UserRecord& u) const {
    return network_features(u);
}

SoloFeatures FeatureExtractor::solo(const std::string& user_id) const {
    const UserRecord& u = corpus_->user(user_id);
    const UserAggregates& a = aggregates(user_id);
    const double denom = static_cast<double>(std::max<std::int64_t>(a.authored, 1));

    SoloFeatures f{};
    f.directed_tweets_ratio = static_cast<double>(a.with_mention) / denom;
    f.retweet_to_tweet_ratio = static_cast<double>(a.retweets) / denom;
    f.tweets_with_hashtag_ratio = static_cast<double>(a.with_hashtag) / denom;
    f.tweets_with_url_ratio = static_cast<double>(a.with_url) / denom;
    f.tweets_with_media_ratio = static_cast<double>(a.with_media) / denom;
    if (options_.favorite_ratio == FeatureOptions::FavoriteRatio::fraction_favorited) {
        f.avg_favorite_tweet = static_cast<double>(a.with_favorite) / denom;
    } else {
        const double mean_fav = a.favorite_sum / denom;
        f.avg_favorite_tweet = max_favorite_count_ > 0 ? mean_fav / max_favorite_count_ : 0.0;
    }
    const double age = account_age_days(u, corpus_->snapshot_time);
    f.avg_tweets_per_day = static_cast<double>(u.statuses_count) / age;
    f.has_profile_url = u.has_profile_url ? 1.0 : 0.0;
    f.has_description = u.has_description ? 1.0 : 0.0;
    f.verified = u.verified ? 1.0 : 0.0;
    f.statuses_count = static_cast<double>(u.statuses_count);
    f.account_age_days = age;
    return f;
}

PairwiseFeatures FeatureExtractor::pairwise(const std::string& src_id,
                                            const std::string& dst_id) const {
    const UserRecord& src = corpus_->user(src_id);
    const UserRecord& dst = corpus_->user(dst_id);

    std::size_t shared = 0;
    const auto& small = src.friend_ids.size() <= dst.friend_ids.size() ? src.friend_ids
                                                                       : dst.friend_ids;
    const auto& large = src.friend_ids.size() <= dst.friend_ids.size() ? dst.friend_ids
                                                                       : src.friend_ids;
    for (const auto& f : small)
        if (large.count(f)) ++shared;

    const std::size_t unions = src.friend_ids.size() + dst.friend_ids.size() - shared;

    const UserAggregates& a = aggregates(src_id);
    auto it = a.mention_counts.find(dst_id);
    const double mentions_of_dst = it == a.mention_counts.end()
                                       ? 0.0
                                       : static_cast<double>(it->second);

    PairwiseFeatures p{};
    p.shared_friends = static_cast<double>(shared);
    p.dialogue = mentions_of_dst / static_cast<double>(std::max<std::int64_t>(a.authored, 1));
    p.social_homogeneity = unions == 0 ? 0.0 : static_cast<double>(shared) / static_cast<double>(unions);
    return p;
}

std::array<double, 24> FeatureExtractor::message(const TweetRecord& t,
                                                 const LatentScores& s) const {
    return message_features(t, s);
}

FeatureVector FeatureExtractor::assemble(const std::string& src_id, const std::string& dst_id,
                                         const TweetRecord& tweet,
                                         const LatentScores& scores) const {
    const NetworkFeatures sn = network(corpus_->user(src_id));
    const NetworkFeatures dn = network(corpus_->user(dst_id));
    const SoloFeatures ss = solo(src_id);
    const SoloFeatures ds = solo(dst_id);
    const PairwiseFeatures pw = pairwise(src_id, dst_id);
    const std::array<double, 24> msg = message(tweet, scores);

    std::vector<double> raw;
    raw.reserve(kFeatureCount);
    raw.push_back(sn.followers_count);
    raw.push_back(sn.friends_count);
    raw.push_back(sn.followers_friends_ratio);
    raw.push_back(dn.followers_count);
    raw.push_back(dn.friends_count);
    raw.push_back(dn.followers_friends_ratio);
    for (double v : ss.values()) raw.push_back(v);
    for (double v : ds.values()) raw.push_back(v);
    raw.push_back(pw.shared_friends);
    raw.push_back(pw.dialogue);
    raw.push_back(pw.social_homogeneity);
    for (double v : msg) raw.push_back(v);

    const FeatureSchema& schema = FeatureSchema::instance();
    if (raw.size() != schema.size())
        throw std::logic_error("feature block assembly does not match schema size");

    FeatureVector fv;
    fv.values.resize(raw.size());
    for (std::size_t i = 0; i < raw.size(); ++i) {
        double v = apply_transform(schema.at(i).transform, raw[i]);
        if (!std::isfinite(v))
            throw std::runtime_error("non-finite value for feature " + schema.at(i).name);
        fv.values[i] = v;
    }
    return fv;
}

NetworkFeatures network_features(const UserRecord& u) {
    NetworkFeatures f{};
    f.followers_count = static_cast<double>(u.followers_count);
    f.friends_count = static_cast<double>(u.friends_count);
    f.followers_friends_ratio = static_cast<double>(u.followers_count) /
                                static_cast<double>(std::max<std::int64_t>(u.friends_count, 1));
    return f;
}

SoloFeatures solo_interaction_features(const std::string& user_id, const Corpus& corpus,
                                       FeatureOptions options) {
    return FeatureExtractor(corpus, options).solo(user_id);
}

PairwiseFeatures pairwise_features(const std::string& src_id, const std::string& dst_id,
                                   const Corpus& corpus) {
    return FeatureExtractor(corpus).pairwise(src_id, dst_id);
}

std::array<double, 24> message_features(const TweetRecord& t, const LatentScores& s) {
    std::array<double, 24> out{};
    std::size_t i = 0;
    out[i++] = t.is_quote ? 1.0 : 0.0;
    // Rt-ness of the observed instance: this record arrived as a retweet event.
    out[i++] = t.is_retweet ? 1.0 : 0.0;
    out[i++] = static_cast<double>(t.retweet_count);
    out[i++] = t.is_retweet ? 1.0 : 0.0;
    out[i++] = static_cast<double>(t.favorite_count);
    out[i++] = t.hashtags.empty() ? 0.0 : 1.0;
    out[i++] = t.urls.empty() ? 0.0 : 1.0;
    out[i++] = t.mentions.empty() ? 0.0 : 1.0;
    out[i++] = t.has_media ? 1.0 : 0.0;
    out[i++] = static_cast<double>(utf8_codepoints(t.text)) / 280.0;
    for (double v : s.values()) out[i++] = v;
    return out;
}

FeatureVector assemble_edge_vector(const std::string& src_id, const std::string& dst_id,
                                   const TweetRecord& tweet, const LatentScores& scores,
                                   const Corpus& corpus, FeatureOptions options) {
    return FeatureExtractor(corpus, options).assemble(src_id, dst_id, tweet, scores);
}

}  // namespace rumorcast
