#include "rumorcast/diffusion.hpp"

#include <algorithm>
#include <fstream>
#include <stdexcept>
#include <unordered_map>

#include <json.hpp>

namespace rumorcast {

using nlohmann::json;

namespace {

// Memoized root-of-cascade resolution with cycle detection.
class RootResolver {
public:
    explicit RootResolver(const Corpus& corpus) : corpus_(&corpus) {}

    const std::string& root(const std::string& tweet_id) {
        auto it = cache_.find(tweet_id);
        if (it != cache_.end()) return it->second;

        std::vector<std::string> path;
        std::string cur = tweet_id;
        while (true) {
            auto hit = cache_.find(cur);
            if (hit != cache_.end()) {
                cur = hit->second;
                break;
            }
            const TweetRecord& t = corpus_->tweet(cur);
            if (!t.retweet_of) break;
            path.push_back(cur);
            cur = *t.retweet_of;
            if (path.size() > corpus_->tweets.size())
                throw std::runtime_error("retweet_of cycle involving tweet \"" + tweet_id + "\"");
        }
        for (const auto& id : path) cache_.emplace(id, cur);
        cache_.emplace(tweet_id, cur);
        return cache_[tweet_id];
    }

private:
    const Corpus* corpus_;
    std::unordered_map<std::string, std::string> cache_;
};

}  // namespace

const char* to_string(DiffusionLabel l) {
    return l == DiffusionLabel::diffused ? "diffused" : "not_diffused";
}

DiffusionLabel diffusion_label_from_string(const std::string& s) {
    if (s == "diffused") return DiffusionLabel::diffused;
    if (s == "not_diffused") return DiffusionLabel::not_diffused;
    throw std::invalid_argument("unknown diffusion label \"" + s + "\"");
}

std::vector<DiffusionEdge> build_edges(const Corpus& corpus, DiffusionOptions options) {
    RootResolver roots(corpus);

    std::map<std::string, std::vector<std::string>> followers;  // followee -> followers
    for (const auto& [follower, followee] : corpus.follow_edges)
        followers[followee].push_back(follower);

    std::vector<DiffusionEdge> edges;
    for (const auto& [id, t] : corpus.tweets) {
        auto it = followers.find(t.author_id);
        if (it == followers.end()) continue;
        const std::string& root_id = roots.root(id);
        const TweetRecord& root = corpus.tweet(root_id);
        const TruthStatus status = corpus.topic(root.topic_id).status;
        for (const auto& f : it->second) {
            DiffusionEdge e;
            e.spreader_id = t.author_id;
            e.receiver_id = f;
            e.tweet_id = root_id;
            e.label = DiffusionLabel::not_diffused;
            e.topic_status = status;
            e.event_tweet_id = id;
            e.exposure_time = t.created_at;
            edges.push_back(std::move(e));
        }
    }

    // (receiver, root message) -> candidate edge indices.
    std::map<std::pair<std::string, std::string>, std::vector<std::size_t>> by_receiver_root;
    for (std::size_t i = 0; i < edges.size(); ++i)
        by_receiver_root[{edges[i].receiver_id, edges[i].tweet_id}].push_back(i);

    for (const auto& r : corpus.reactions) {
        if (r.kind == ReactionKind::reply && !options.include_replies) continue;
        const std::string& target_root = roots.root(r.tweet_id);
        auto it = by_receiver_root.find({r.reactor_id, target_root});
        if (it == by_receiver_root.end()) continue;

        const std::string& target_author = corpus.tweet(r.tweet_id).author_id;
        std::size_t exact = edges.size();
        std::size_t by_author = edges.size();
        std::size_t latest = edges.size();
        for (std::size_t i : it->second) {
            const DiffusionEdge& e = edges[i];
            if (e.exposure_time > r.reacted_at) continue;
            if (e.event_tweet_id == r.tweet_id) {
                exact = i;
                break;
            }
            if (e.spreader_id == target_author &&
                (by_author == edges.size() ||
                 e.exposure_time > edges[by_author].exposure_time))
                by_author = i;
            if (latest == edges.size() || e.exposure_time > edges[latest].exposure_time ||
                (e.exposure_time == edges[latest].exposure_time &&
                 e.spreader_id < edges[latest].spreader_id))
                latest = i;
        }
        std::size_t chosen = exact != edges.size()     ? exact
                             : by_author != edges.size() ? by_author
                                                         : latest;
        if (chosen != edges.size()) edges[chosen].label = DiffusionLabel::diffused;
    }

    std::sort(edges.begin(), edges.end(), [](const DiffusionEdge& a, const DiffusionEdge& b) {
        return std::tie(a.tweet_id, a.receiver_id, a.spreader_id, a.event_tweet_id) <
               std::tie(b.tweet_id, b.receiver_id, b.spreader_id, b.event_tweet_id);
    });
    return edges;
}

int cascade_depth(const Corpus& corpus, const std::string& tweet_id) {
    if (!corpus.tweets.count(tweet_id))
        throw std::invalid_argument("unknown tweet \"" + tweet_id + "\"");

    RootResolver roots(corpus);
    const std::string root_id = roots.root(tweet_id);

    // Collect the cascade: every tweet whose root is root_id.
    std::vector<const TweetRecord*> cascade;
    for (const auto& [id, t] : corpus.tweets)
        if (roots.root(id) == root_id) cascade.push_back(&t);

    // Spread events by author for the flattened-retweet fallback.
    std::map<std::string, std::vector<const TweetRecord*>> by_author;
    for (const TweetRecord* t : cascade) by_author[t->author_id].push_back(t);

    auto effective_parent = [&](const TweetRecord& t) -> std::string {
        const std::string& target = *t.retweet_of;
        if (target != root_id) return target;  // explicit chain
        const TweetRecord& root = corpus.tweet(root_id);
        if (corpus.follow_edges.count({t.author_id, root.author_id})) return root_id;
        // Flattened: latest strictly-prior spread event by a followed spreader.
        const TweetRecord* best = nullptr;
        for (const auto& [author, events] : by_author) {
            if (author == t.author_id) continue;
            if (!corpus.follow_edges.count({t.author_id, author})) continue;
            for (const TweetRecord* e : events) {
                if (e->created_at >= t.created_at) continue;
                if (!best || e->created_at > best->created_at ||
                    (e->created_at == best->created_at && e->tweet_id < best->tweet_id))
                    best = e;
            }
        }
        return best ? best->tweet_id : root_id;
    };

    std::unordered_map<std::string, int> depth;
    depth[root_id] = 0;
    // Parents always resolve to the root or a strictly earlier event, so
    // iterating in time order settles depths in one pass.
    std::vector<const TweetRecord*> ordered = cascade;
    std::sort(ordered.begin(), ordered.end(), [](const TweetRecord* a, const TweetRecord* b) {
        return std::tie(a->created_at, a->tweet_id) < std::tie(b->created_at, b->tweet_id);
    });
    int max_depth = 0;
    for (const TweetRecord* t : ordered) {
        if (t->tweet_id == root_id || !t->retweet_of) continue;
        const std::string parent = effective_parent(*t);
        auto it = depth.find(parent);
        const int d = (it == depth.end() ? 0 : it->second) + 1;
        depth[t->tweet_id] = d;
        max_depth = std::max(max_depth, d);
    }
    return max_depth;
}

std::map<TruthStatus, double> class_balance(const std::vector<DiffusionEdge>& edges) {
    if (edges.empty()) throw std::invalid_argument("class_balance: empty edge list");
    std::map<TruthStatus, std::pair<std::int64_t, std::int64_t>> tally;  // diffused, total
    for (const auto& e : edges) {
        auto& [diff, total] = tally[e.topic_status];
        if (e.label == DiffusionLabel::diffused) ++diff;
        ++total;
    }
    std::map<TruthStatus, double> out;
    for (const auto& [status, counts] : tally)
        out[status] = static_cast<double>(counts.first) / static_cast<double>(counts.second);
    return out;
}

namespace {

CascadeStats stats_over(const Corpus& corpus, const std::vector<const TweetRecord*>& origins,
                        const std::vector<const DiffusionEdge*>& edges) {
    CascadeStats s;
    double depth_sum = 0.0;
    for (const TweetRecord* t : origins) {
        const int d = cascade_depth(corpus, t->tweet_id);
        depth_sum += d;
        s.max_depth = std::max(s.max_depth, d);
    }
    if (!origins.empty()) s.mean_depth = depth_sum / static_cast<double>(origins.size());
    s.edge_count = static_cast<std::int64_t>(edges.size());
    std::int64_t diffused = 0;
    for (const DiffusionEdge* e : edges)
        if (e->label == DiffusionLabel::diffused) ++diffused;
    if (!edges.empty())
        s.diffused_fraction = static_cast<double>(diffused) / static_cast<double>(edges.size());
    return s;
}

}  // namespace

std::map<std::string, CascadeStats> cascade_stats(const Corpus& corpus,
                                                  const std::vector<DiffusionEdge>& edges) {
    std::map<std::string, std::vector<const TweetRecord*>> origins;
    for (const auto& [id, t] : corpus.tweets)
        if (!t.is_retweet) origins[t.topic_id].push_back(&t);

    std::map<std::string, std::vector<const DiffusionEdge*>> edges_by_topic;
    for (const auto& e : edges)
        edges_by_topic[corpus.tweet(e.tweet_id).topic_id].push_back(&e);

    std::map<std::string, CascadeStats> out;
    for (const auto& [topic_id, label] : corpus.topics)
        out[topic_id] = stats_over(corpus, origins[topic_id], edges_by_topic[topic_id]);
    return out;
}

std::map<TruthStatus, CascadeStats> cascade_stats_by_status(
    const Corpus& corpus, const std::vector<DiffusionEdge>& edges) {
    std::map<TruthStatus, std::vector<const TweetRecord*>> origins;
    for (const auto& [id, t] : corpus.tweets)
        if (!t.is_retweet) origins[corpus.topic(t.topic_id).status].push_back(&t);

    std::map<TruthStatus, std::vector<const DiffusionEdge*>> edges_by_status;
    for (const auto& e : edges) edges_by_status[e.topic_status].push_back(&e);

    std::map<TruthStatus, CascadeStats> out;
    for (TruthStatus status : {TruthStatus::True, TruthStatus::False})
        out[status] = stats_over(corpus, origins[status], edges_by_status[status]);
    return out;
}

void write_edges_jsonl(const std::vector<DiffusionEdge>& edges,
                       const std::filesystem::path& path) {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    for (const auto& e : edges) {
        json obj{{"spreader_id", e.spreader_id},
                 {"receiver_id", e.receiver_id},
                 {"tweet_id", e.tweet_id},
                 {"label", to_string(e.label)},
                 {"topic_status", to_string(e.topic_status)}};
        out << obj.dump() << '\n';
    }
}

}  // namespace rumorcast
