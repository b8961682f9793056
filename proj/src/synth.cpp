#include "rumorcast/synth.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

#include "rumorcast/eval.hpp"
#include "rumorcast/features.hpp"
#include "rumorcast/logreg.hpp"
#include "rumorcast/rng.hpp"

namespace rumorcast {

using nlohmann::json;

namespace {

std::string user_id(int i) {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "u%04d", i);
    return buf;
}

std::string tweet_id(int i) {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "t%06d", i);
    return buf;
}

// All event timestamps stay inside one UTC day so account ages (whole days
// against the corpus snapshot) are identical no matter which record ends up
// defining the snapshot.
constexpr const char* kBaseTime = "2019-09-01T00:00:00Z";
constexpr Timestamp kDayWindow = 86399;

struct EdgePlan {
    double q = 0.0;          // P(materialized label = diffused); 1 for chain edges
    double q_feature = 0.0;  // noise-folded sigmoid of the planted score
    bool forced = false;     // chain edge, diffused by construction
    double score = 0.0;      // planted w . x (no intercept)
};

// Expected confusion of the feature-based optimal rule sigmoid(w.x+b) >= 0.5.
// The rule cannot see chain membership, so forced edges are decided from
// features like any other edge but resolve as diffused with certainty.
BayesCeiling ceiling_from(const std::vector<EdgePlan>& plans) {
    double tp = 0, fp = 0, fn = 0, tn = 0;
    for (const EdgePlan& p : plans) {
        if (p.q_feature >= 0.5) {
            tp += p.q;
            fp += 1.0 - p.q;
        } else {
            fn += p.q;
            tn += 1.0 - p.q;
        }
    }
    BayesCeiling c;
    const double total = tp + fp + fn + tn;
    if (total > 0) c.accuracy = (tp + tn) / total;
    if (tp + fp > 0) c.precision = tp / (tp + fp);
    if (tp + fn > 0) c.recall = tp / (tp + fn);
    if (c.precision + c.recall > 0)
        c.f = 2.0 * c.precision * c.recall / (c.precision + c.recall);
    return c;
}

}  // namespace

std::vector<double> SynthConfig::default_planted_weights(TruthStatus status) {
    const FeatureSchema& schema = FeatureSchema::instance();
    std::vector<double> w(schema.size(), 0.0);
    auto set = [&](const char* name, double v) { w[schema.index_of(name)] = v; };
    if (status == TruthStatus::True) {
        set("msg_fear_emotion", 50.0);
        set("msg_news_intent", 40.0);
        set("msg_positive_sentiment", -30.0);
        set("msg_tweet_length", 3.0);
        set("social_homogeneity", 3.0);
    } else {
        set("msg_fear_emotion", 45.0);
        set("msg_news_intent", 45.0);
        set("msg_negative_sentiment", 25.0);
        set("msg_happy_emotion", -35.0);
        set("msg_tweet_length", 3.0);
        set("social_homogeneity", 3.0);
    }
    return w;
}

void SynthConfig::validate() const {
    if (n_users < 2) throw std::invalid_argument("synth: need at least 2 users");
    if (!(follow_prob >= 0.0 && follow_prob <= 1.0))
        throw std::invalid_argument("synth: follow_prob must be in [0,1]");
    if (n_topics_true < 0 || n_topics_false < 0 || n_topics_true + n_topics_false == 0)
        throw std::invalid_argument("synth: need at least one topic");
    if (tweets_per_topic <= 0) throw std::invalid_argument("synth: tweets_per_topic must be positive");
    if (!(label_noise >= 0.0 && label_noise < 0.5))
        throw std::invalid_argument("synth: label_noise must be in [0, 0.5)");
    for (auto target : {target_diffused_fraction_true, target_diffused_fraction_false})
        if (target && !(*target > 0.0 && *target < 1.0))
            throw std::invalid_argument("synth: target diffused fraction must be in (0,1)");
    for (double rate : {hot_rate_true, hot_rate_false})
        if (!(rate >= 0.0 && rate + warm_rate <= 1.0))
            throw std::invalid_argument("synth: hot + warm rates must fit in [0, 1]");
    if (warm_rate < 0.0) throw std::invalid_argument("synth: warm rate must be non-negative");
    for (double depth : {target_mean_depth_true, target_mean_depth_false}) {
        if (depth < 0.0) throw std::invalid_argument("synth: depth target must be non-negative");
        if (std::ceil(depth) + 1.0 > static_cast<double>(n_users))
            throw std::invalid_argument("synth: depth target infeasible for graph size");
    }
    const std::size_t d = FeatureSchema::instance().size();
    if (!planted_weights_true.empty() && planted_weights_true.size() != d)
        throw std::invalid_argument("synth: planted_weights_true must have 57 entries");
    if (!planted_weights_false.empty() && planted_weights_false.size() != d)
        throw std::invalid_argument("synth: planted_weights_false must have 57 entries");
}

SynthResult generate(const SynthConfig& config) {
    config.validate();
    Rng rng(config.seed);
    const Timestamp base = parse_timestamp(kBaseTime);

    SynthResult result;
    Corpus& corpus = result.corpus;

    // Users: ids first, profiles after the graph exists.
    const int n = config.n_users;
    std::vector<std::string> uids(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) uids[static_cast<std::size_t>(i)] = user_id(i);

    // Follower graph: independent Bernoulli per ordered (follower, followee).
    for (int f = 0; f < n; ++f)
        for (int u = 0; u < n; ++u)
            if (f != u && rng.bernoulli(config.follow_prob))
                corpus.follow_edges.emplace(uids[static_cast<std::size_t>(f)],
                                            uids[static_cast<std::size_t>(u)]);

    // Topics.
    struct TopicPlan {
        std::string id;
        TruthStatus status;
    };
    std::vector<TopicPlan> topic_plan;
    for (int i = 0; i < config.n_topics_true; ++i) {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "topic_true_%02d", i);
        topic_plan.push_back({buf, TruthStatus::True});
    }
    for (int i = 0; i < config.n_topics_false; ++i) {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "topic_false_%02d", i);
        topic_plan.push_back({buf, TruthStatus::False});
    }
    const std::vector<std::string> keyword_pool{
        "storm", "flood", "vaccine", "election", "market", "blackout",
        "wildfire", "protest", "outage", "recall", "merger", "earthquake"};
    for (std::size_t i = 0; i < topic_plan.size(); ++i) {
        TopicLabel t;
        t.topic_id = topic_plan[i].id;
        t.status = topic_plan[i].status;
        const std::size_t k = 3 + static_cast<std::size_t>(rng.uniform_int(0, 2));
        for (std::size_t j = 0; j < k; ++j)
            t.keywords.push_back(keyword_pool[(i * 3 + j * 5) % keyword_pool.size()]);
        std::sort(t.keywords.begin(), t.keywords.end());
        t.keywords.erase(std::unique(t.keywords.begin(), t.keywords.end()), t.keywords.end());
        corpus.topics.emplace(t.topic_id, t);
    }

    // Original tweets plus planted retweet chains. Chain follows are added to
    // the graph, so everything here precedes profile finalization.
    struct ChainEdgeKey {
        std::string event;
        std::string receiver;
        bool operator<(const ChainEdgeKey& o) const {
            return std::tie(event, receiver) < std::tie(o.event, o.receiver);
        }
    };
    std::set<ChainEdgeKey> forced;
    const Lexicon& lexicon = default_lexicon();
    // Spread originals across the day, leaving room for chains and reactions.
    int tweet_counter = 0;
    Timestamp clock = base;

    std::vector<std::string> category_names = lexicon_categories();

    // Scores come from a three-component Dirichlet mixture. "Hot" posts read
    // as fearful news and spread, "cold" posts do not, and a small "warm"
    // band sits in between so the intercept solve has a smooth knob without
    // cutting into either cluster. Hot rates are centered on the class
    // diffusion targets; the rate difference also gives the credibility task
    // a feature signal.
    enum class Band { hot, warm, cold };
    const std::vector<double> alpha_sent[3] = {{0.08, 1.50, 0.40},   // hot
                                               {0.50, 0.50, 0.50},   // warm
                                               {1.20, 0.10, 0.80}};  // cold
    const std::vector<double> alpha_emo[3] = {{0.05, 5.00, 0.05, 0.05, 0.05},
                                              {0.40, 0.80, 0.40, 0.40, 0.40},
                                              {1.50, 0.04, 0.50, 0.50, 0.30}};
    const std::vector<double> alpha_intent[3] = {{0.05, 5.00, 0.05, 0.05, 0.05},
                                                 {0.40, 0.80, 0.40, 0.40, 0.40},
                                                 {1.00, 0.04, 0.50, 0.40, 0.40}};
    auto sample_scores = [&](const std::string& text, TruthStatus status) {
        if (config.emit_text) return analyze_text(text, lexicon);
        const double hot_rate = status == TruthStatus::False ? config.hot_rate_false
                                                             : config.hot_rate_true;
        const double u = rng.uniform();
        const Band band = u < hot_rate
                              ? Band::hot
                              : (u < hot_rate + config.warm_rate ? Band::warm : Band::cold);
        const auto bi = static_cast<std::size_t>(band);
        LatentScores s;
        const std::vector<double> sent = rng.dirichlet(alpha_sent[bi]);
        s.positive = sent[0];
        s.negative = sent[1];
        s.neutral = sent[2];
        const std::vector<double> emo = rng.dirichlet(alpha_emo[bi]);
        s.happy = emo[0];
        s.fear = emo[1];
        s.sad = emo[2];
        s.angry = emo[3];
        s.bored = emo[4];
        const std::vector<double> intent = rng.dirichlet(alpha_intent[bi]);
        s.feedback = intent[0];
        s.news = intent[1];
        s.query = intent[2];
        s.spam = intent[3];
        s.marketing = intent[4];
        s.abusive = rng.uniform(0.0, 0.4);
        return s;
    };

    auto make_text = [&](const TopicLabel& topic, int seq) {
        if (!config.emit_text) {
            char buf[96];
            std::snprintf(buf, sizeof(buf), "post %d about %s", seq, topic.topic_id.c_str());
            std::string s(buf);
            // Pad to a random length so the length feature varies.
            const auto extra = static_cast<std::size_t>(rng.uniform_int(0, 180));
            s.append(extra, 'x');
            return s;
        }
        // Text mode: draw tokens from a few lexicon categories.
        std::string s;
        const auto tokens = 8 + rng.uniform_int(0, 8);
        for (int j = 0; j < tokens; ++j) {
            const auto& cat =
                category_names[static_cast<std::size_t>(rng.uniform_int(
                    0, static_cast<std::int64_t>(category_names.size()) - 1))];
            const auto& words = lexicon.terms.at(cat);
            auto it = words.begin();
            std::advance(it, rng.uniform_int(0, static_cast<std::int64_t>(words.size()) - 1));
            if (!s.empty()) s += ' ';
            s += *it;
        }
        return s;
    };

    // Cumulative rounding keeps the per-topic mean at the target while every
    // length stays floor(target) or ceil(target).
    auto chain_length = [](double target, int index) {
        auto cum = [&](int i) { return std::llround(target * static_cast<double>(i)); };
        return static_cast<int>(cum(index + 1) - cum(index));
    };

    for (const TopicPlan& tp : topic_plan) {
        const TopicLabel& topic = corpus.topics.at(tp.id);
        const double depth_target = tp.status == TruthStatus::True
                                        ? config.target_mean_depth_true
                                        : config.target_mean_depth_false;
        for (int k = 0; k < config.tweets_per_topic; ++k) {
            TweetRecord t;
            t.tweet_id = tweet_id(tweet_counter++);
            const int author = static_cast<int>(rng.uniform_int(0, n - 1));
            t.author_id = uids[static_cast<std::size_t>(author)];
            t.text = make_text(topic, k);
            clock += 7 + rng.uniform_int(0, 5);
            t.created_at = clock;
            t.favorite_count = static_cast<std::int64_t>(
                std::max(0.0, std::round(std::exp(rng.normal(1.2, 1.0)) - 1.0)));
            t.is_retweet = false;
            t.is_quote = rng.bernoulli(0.1);
            if (rng.bernoulli(0.4)) t.hashtags.push_back("tag" + std::to_string(k % 7));
            if (rng.bernoulli(0.3)) t.urls.push_back("https://example.org/" + t.tweet_id);
            if (rng.bernoulli(0.2))
                t.mentions.push_back(uids[static_cast<std::size_t>(rng.uniform_int(0, n - 1))]);
            t.has_media = rng.bernoulli(0.25);
            t.topic_id = topic.topic_id;
            result.scores.emplace(t.tweet_id, sample_scores(t.text, tp.status));
            corpus.tweets.emplace(t.tweet_id, t);

            // Plant the retweet chain below this original.
            const int chain = chain_length(depth_target, k);
            std::string parent_id = t.tweet_id;
            int parent_author = author;
            std::vector<int> used{author};
            Timestamp chain_clock = t.created_at;
            for (int link = 0; link < chain; ++link) {
                int next;
                do {
                    next = static_cast<int>(rng.uniform_int(0, n - 1));
                } while (std::find(used.begin(), used.end(), next) != used.end());
                used.push_back(next);

                corpus.follow_edges.emplace(uids[static_cast<std::size_t>(next)],
                                            uids[static_cast<std::size_t>(parent_author)]);

                TweetRecord r;
                r.tweet_id = tweet_id(tweet_counter++);
                r.author_id = uids[static_cast<std::size_t>(next)];
                r.text = t.text;
                chain_clock += 3 + rng.uniform_int(0, 3);
                r.created_at = chain_clock;
                r.favorite_count = static_cast<std::int64_t>(
                    std::max(0.0, std::round(std::exp(rng.normal(0.5, 0.8)) - 1.0)));
                r.is_retweet = true;
                r.retweet_of = parent_id;
                r.is_quote = false;
                r.hashtags = t.hashtags;
                r.urls = t.urls;
                r.mentions = t.mentions;
                r.has_media = t.has_media;
                r.topic_id = t.topic_id;
                result.scores.emplace(r.tweet_id, result.scores.at(t.tweet_id));
                corpus.tweets.emplace(r.tweet_id, r);

                ReactionRecord reaction;
                reaction.reactor_id = r.author_id;
                reaction.tweet_id = parent_id;
                reaction.kind = ReactionKind::retweet;
                reaction.reacted_at = r.created_at;
                corpus.reactions.push_back(reaction);
                forced.insert({parent_id, r.author_id});

                parent_id = r.tweet_id;
                parent_author = next;
            }
        }
    }

    // Platform-reported retweet counts: corpus children plus crawl slack.
    std::map<std::string, std::int64_t> children;
    for (const auto& [id, t] : corpus.tweets)
        if (t.retweet_of) ++children[*t.retweet_of];
    for (auto& [id, t] : corpus.tweets)
        t.retweet_count = children[id] + rng.uniform_int(0, 3);

    // Profiles, now that the graph (including chain follows) is final.
    std::map<std::string, std::set<std::string>> followees;
    std::map<std::string, std::int64_t> follower_count;
    for (const auto& [follower, followee] : corpus.follow_edges) {
        followees[follower].insert(followee);
        ++follower_count[followee];
    }
    for (int i = 0; i < n; ++i) {
        UserRecord u;
        u.user_id = uids[static_cast<std::size_t>(i)];
        u.friend_ids = followees[u.user_id];
        u.friends_count = static_cast<std::int64_t>(u.friend_ids.size()) + rng.uniform_int(0, 5);
        u.followers_count = follower_count[u.user_id] + rng.uniform_int(0, 20);
        u.statuses_count = static_cast<std::int64_t>(
            std::max(0.0, std::round(std::exp(rng.normal(5.0, 1.4)))));
        const std::int64_t age_days = rng.uniform_int(30, 3000);
        u.account_created_at = base - age_days * 86400;
        u.verified = rng.bernoulli(0.05);
        u.has_profile_url = rng.bernoulli(0.35);
        u.has_description = rng.bernoulli(0.7);
        corpus.users.emplace(u.user_id, u);
    }

    auto refresh_snapshot = [&corpus] {
        corpus.snapshot_time = 0;
        for (const auto& [id, u] : corpus.users)
            corpus.snapshot_time = std::max(corpus.snapshot_time, u.account_created_at);
        for (const auto& [id, t] : corpus.tweets)
            corpus.snapshot_time = std::max(corpus.snapshot_time, t.created_at);
        for (const auto& r : corpus.reactions)
            corpus.snapshot_time = std::max(corpus.snapshot_time, r.reacted_at);
    };
    refresh_snapshot();

    // Enumerate exposures and featurize them against the final structure.
    std::vector<DiffusionEdge> planned = build_edges(corpus);
    FeatureExtractor extractor(corpus);

    const std::vector<double> w_true = config.planted_weights_true.empty()
                                           ? SynthConfig::default_planted_weights(TruthStatus::True)
                                           : config.planted_weights_true;
    const std::vector<double> w_false =
        config.planted_weights_false.empty()
            ? SynthConfig::default_planted_weights(TruthStatus::False)
            : config.planted_weights_false;
    result.planted_weights_true = w_true;
    result.planted_weights_false = w_false;

    std::vector<EdgePlan> plans(planned.size());
    std::map<TruthStatus, std::vector<std::size_t>> by_status;
    for (std::size_t i = 0; i < planned.size(); ++i) {
        const DiffusionEdge& e = planned[i];
        plans[i].forced = forced.count({e.event_tweet_id, e.receiver_id}) > 0;
        const std::vector<double>& w =
            e.topic_status == TruthStatus::True ? w_true : w_false;
        const FeatureVector fv = extractor.assemble(
            e.spreader_id, e.receiver_id, corpus.tweet(e.event_tweet_id),
            result.scores.at(e.event_tweet_id));
        double score = 0.0;
        for (std::size_t j = 0; j < fv.values.size(); ++j) score += w[j] * fv.values[j];
        plans[i].score = score;
        by_status[e.topic_status].push_back(i);
    }

    const double rho = config.label_noise;
    auto q_of = [rho](double p) { return p * (1.0 - rho) + (1.0 - p) * rho; };

    // Per class: fix or solve the intercept, then fill per-edge q.
    for (TruthStatus status : {TruthStatus::True, TruthStatus::False}) {
        const auto& idx = by_status[status];
        if (idx.empty()) continue;
        const auto target = status == TruthStatus::True ? config.target_diffused_fraction_true
                                                        : config.target_diffused_fraction_false;
        double intercept = status == TruthStatus::True ? config.intercept_true
                                                       : config.intercept_false;
        if (target) {
            auto expected_fraction = [&](double b) {
                double sum = 0.0;
                for (std::size_t i : idx)
                    sum += plans[i].forced ? 1.0 : q_of(sigmoid(plans[i].score + b));
                return sum / static_cast<double>(idx.size());
            };
            // Bracket wide enough to saturate every edge's sigmoid.
            double score_lo = 0.0, score_hi = 0.0;
            for (std::size_t i : idx) {
                score_lo = std::min(score_lo, plans[i].score);
                score_hi = std::max(score_hi, plans[i].score);
            }
            double lo = -score_hi - 45.0, hi = -score_lo + 45.0;
            if (expected_fraction(lo) > *target || expected_fraction(hi) < *target)
                throw std::invalid_argument(
                    "synth: target diffused fraction unreachable for this configuration");
            for (int iter = 0; iter < 200; ++iter) {
                const double mid = (lo + hi) / 2.0;
                (expected_fraction(mid) < *target ? lo : hi) = mid;
            }
            intercept = (lo + hi) / 2.0;
        }
        if (status == TruthStatus::True)
            result.intercept_true = intercept;
        else
            result.intercept_false = intercept;

        for (std::size_t i : idx) {
            plans[i].q_feature = q_of(sigmoid(plans[i].score + intercept));
            plans[i].q = plans[i].forced ? 1.0 : plans[i].q_feature;
        }
    }

    // Sample labels in canonical edge order and materialize reactions for
    // diffused non-chain edges. Non-retweet kinds keep the cascade intact.
    const ReactionKind sampled_kinds[3] = {ReactionKind::like, ReactionKind::reply,
                                           ReactionKind::quote};
    std::vector<bool> materialized(planned.size(), false);
    for (std::size_t i = 0; i < planned.size(); ++i) {
        if (plans[i].forced) {
            ++result.forced_edge_count;
            materialized[i] = true;
            continue;
        }
        if (!rng.bernoulli(plans[i].q)) continue;
        materialized[i] = true;
        ReactionRecord r;
        r.reactor_id = planned[i].receiver_id;
        r.tweet_id = planned[i].event_tweet_id;
        r.kind = sampled_kinds[rng.uniform_int(0, 2)];
        // Within the day window when possible, but never before the exposure.
        const Timestamp latest = std::max(base + kDayWindow, planned[i].exposure_time);
        r.reacted_at = std::min<Timestamp>(
            latest, planned[i].exposure_time + 30 + rng.uniform_int(0, 3600));
        corpus.reactions.push_back(r);
    }
    std::sort(corpus.reactions.begin(), corpus.reactions.end());
    refresh_snapshot();

    // The returned ground truth is build_edges on the final corpus; it must
    // reproduce the sampled labels edge for edge.
    result.edges = build_edges(corpus);
    if (result.edges.size() != planned.size())
        throw std::logic_error("synth: edge count changed after materializing reactions");
    result.edge_q.resize(planned.size());
    result.edge_q_feature.resize(planned.size());
    for (std::size_t i = 0; i < planned.size(); ++i) {
        result.edge_q[i] = plans[i].q;
        result.edge_q_feature[i] = plans[i].q_feature;
        const bool diffused = result.edges[i].label == DiffusionLabel::diffused;
        if (diffused != materialized[i])
            throw std::logic_error("synth: materialized labels do not match sampled labels");
    }

    for (TruthStatus status : {TruthStatus::True, TruthStatus::False}) {
        std::vector<EdgePlan> class_plans;
        for (std::size_t i : by_status[status]) class_plans.push_back(plans[i]);
        if (!class_plans.empty()) result.bayes[status] = ceiling_from(class_plans);
    }
    result.bayes_rate = ceiling_from(plans).accuracy;
    return result;
}

double bayes_rate(const SynthConfig& config) {
    const SynthResult result = generate(config);
    if (result.edge_q.empty()) return 0.5;

    // Per-edge accuracy of the feature-based optimal rule.
    auto edge_accuracy = [&](std::size_t i) {
        return result.edge_q_feature[i] >= 0.5 ? result.edge_q[i] : 1.0 - result.edge_q[i];
    };

    // Monte Carlo over at least 1e5 samples of the edge population; when the
    // population itself is that large the full mean is the exact expectation.
    constexpr std::size_t kMinSamples = 100000;
    const std::size_t n = result.edge_q.size();
    if (n >= kMinSamples) {
        double acc = 0.0;
        for (std::size_t i = 0; i < n; ++i) acc += edge_accuracy(i);
        return acc / static_cast<double>(n);
    }
    Rng rng(config.seed ^ 0xB10E5ULL);
    double acc = 0.0;
    for (std::size_t i = 0; i < kMinSamples; ++i)
        acc += edge_accuracy(static_cast<std::size_t>(
            rng.uniform_int(0, static_cast<std::int64_t>(n) - 1)));
    return acc / static_cast<double>(kMinSamples);
}

void write_synth_outputs(const SynthResult& result, const SynthConfig& config,
                         const std::filesystem::path& dir) {
    std::filesystem::create_directories(dir);
    write_corpus(result.corpus, CorpusPaths::in_dir(dir));
    write_scores(result.scores, dir / "scores.jsonl");

    json truth;
    truth["format"] = "rumorcast-ground-truth";
    truth["version"] = 1;
    truth["seed"] = config.seed;
    truth["label_noise"] = config.label_noise;
    truth["planted_weights_true"] = result.planted_weights_true;
    truth["planted_weights_false"] = result.planted_weights_false;
    truth["intercept_true"] = result.intercept_true;
    truth["intercept_false"] = result.intercept_false;
    truth["feature_names"] = FeatureSchema::instance().names();
    truth["forced_edge_count"] = result.forced_edge_count;
    truth["edge_count"] = result.edges.size();
    truth["bayes_rate"] = result.bayes_rate;
    for (const auto& [status, ceiling] : result.bayes) {
        json c{{"accuracy", ceiling.accuracy},
               {"precision", ceiling.precision},
               {"recall", ceiling.recall},
               {"f", ceiling.f}};
        truth[std::string("bayes_") + to_string(status)] = c;
    }
    truth["target_mean_depth_true"] = config.target_mean_depth_true;
    truth["target_mean_depth_false"] = config.target_mean_depth_false;
    if (config.target_diffused_fraction_true)
        truth["target_diffused_fraction_true"] = *config.target_diffused_fraction_true;
    if (config.target_diffused_fraction_false)
        truth["target_diffused_fraction_false"] = *config.target_diffused_fraction_false;

    std::ofstream out(dir / "ground_truth.json", std::ios::binary);
    if (!out) throw std::runtime_error("cannot write ground_truth.json");
    out << truth.dump(2) << '\n';
}

}  // namespace rumorcast
