#pragma once

// Exposure-edge reconstruction and cascade statistics.
//
// Every (re)tweet event exposes each follower of its author; the resulting
// edge is labeled diffused when the follower reacted to the message at or
// after the exposure time. A reaction is attributed to exactly one exposure:
// the matching event when referenced directly, otherwise the spreader that
// authored the referenced tweet, otherwise the followed spreader with the
// latest prior spread event (flattened-retweet fallback).

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "rumorcast/corpus.hpp"

namespace rumorcast {

enum class DiffusionLabel { diffused, not_diffused };

const char* to_string(DiffusionLabel l);
DiffusionLabel diffusion_label_from_string(const std::string& s);

struct DiffusionEdge {
    std::string spreader_id;
    std::string receiver_id;
    std::string tweet_id;  // root message of the cascade
    DiffusionLabel label = DiffusionLabel::not_diffused;
    TruthStatus topic_status = TruthStatus::False;

    // Event bookkeeping (not part of the serialized edge record).
    std::string event_tweet_id;  // the (re)tweet that exposed the receiver
    Timestamp exposure_time = 0;

    bool operator==(const DiffusionEdge&) const = default;
};

struct DiffusionOptions {
    bool include_replies = true;  // replies count as engagement by default
};

// One edge per (spread event, follower), sorted by (tweet_id, receiver_id,
// spreader_id, event_tweet_id).
std::vector<DiffusionEdge> build_edges(const Corpus& corpus, DiffusionOptions options = {});

// Longest retweet chain below the original tweet of the given message
// (original = 0, direct retweet = 1). Flattened retweets (retweet_of points
// at the root but the retweeter does not follow the root author) are
// re-attached to the latest prior spread event by a followed spreader.
int cascade_depth(const Corpus& corpus, const std::string& tweet_id);

// Fraction of diffused edges per truth status; errors on an empty edge list.
std::map<TruthStatus, double> class_balance(const std::vector<DiffusionEdge>& edges);

struct CascadeStats {
    double mean_depth = 0.0;
    int max_depth = 0;
    std::int64_t edge_count = 0;
    double diffused_fraction = 0.0;
};

// Depth statistics over each topic's original tweets plus that topic's
// edge tally.
std::map<std::string, CascadeStats> cascade_stats(const Corpus& corpus,
                                                  const std::vector<DiffusionEdge>& edges);

// Same statistics pooled by truth status.
std::map<TruthStatus, CascadeStats> cascade_stats_by_status(
    const Corpus& corpus, const std::vector<DiffusionEdge>& edges);

void write_edges_jsonl(const std::vector<DiffusionEdge>& edges,
                       const std::filesystem::path& path);

}  // namespace rumorcast
