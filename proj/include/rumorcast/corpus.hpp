#pragma once

// Corpus schema and JSONL ingestion.
//
// A corpus is five JSONL files (users, tweets, reactions, follows, topics).
// Records are immutable after parse_corpus() and referentially closed: every
// author, reactor, follow endpoint, reaction target and retweet parent must
// resolve, and every tweet's topic must exist.

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace rumorcast {

// Seconds since the Unix epoch, UTC.
using Timestamp = std::int64_t;

// Accepts "YYYY-MM-DDTHH:MM:SSZ" or a plain integer of epoch seconds.
Timestamp parse_timestamp(const std::string& text);
std::string format_timestamp(Timestamp t);

// Raised for malformed lines and dangling references. Carries the file and
// 1-based line the offending record came from when known.
class ParseError : public std::runtime_error {
public:
    ParseError(std::string file, std::size_t line, const std::string& what)
        : std::runtime_error(file + ":" + std::to_string(line) + ": " + what),
          file_(std::move(file)), line_(line) {}
    explicit ParseError(const std::string& what) : std::runtime_error(what), line_(0) {}

    const std::string& file() const noexcept { return file_; }
    std::size_t line() const noexcept { return line_; }

private:
    std::string file_;
    std::size_t line_;
};

struct UserRecord {
    std::string user_id;
    std::int64_t followers_count = 0;
    std::int64_t friends_count = 0;
    std::int64_t statuses_count = 0;
    Timestamp account_created_at = 0;
    bool verified = false;
    bool has_profile_url = false;
    bool has_description = false;
    std::set<std::string> friend_ids;

    bool operator==(const UserRecord&) const = default;
};

struct TweetRecord {
    std::string tweet_id;
    std::string author_id;
    std::string text;
    Timestamp created_at = 0;
    std::int64_t retweet_count = 0;
    std::int64_t favorite_count = 0;
    bool is_retweet = false;
    std::optional<std::string> retweet_of;
    bool is_quote = false;
    std::vector<std::string> hashtags;
    std::vector<std::string> urls;
    std::vector<std::string> mentions;
    bool has_media = false;
    std::string topic_id;

    bool operator==(const TweetRecord&) const = default;
};

enum class ReactionKind { retweet, quote, reply, like };

const char* to_string(ReactionKind k);
ReactionKind reaction_kind_from_string(const std::string& s);

struct ReactionRecord {
    std::string reactor_id;
    std::string tweet_id;
    ReactionKind kind = ReactionKind::like;
    Timestamp reacted_at = 0;

    bool operator==(const ReactionRecord&) const = default;
    auto operator<=>(const ReactionRecord&) const = default;
};

enum class TruthStatus { True, False };

const char* to_string(TruthStatus s);
TruthStatus truth_status_from_string(const std::string& s);

struct TopicLabel {
    std::string topic_id;
    TruthStatus status = TruthStatus::False;
    std::vector<std::string> keywords;

    bool operator==(const TopicLabel&) const = default;
};

struct Corpus {
    std::map<std::string, UserRecord> users;
    std::map<std::string, TweetRecord> tweets;
    std::vector<ReactionRecord> reactions;  // kept in canonical sorted order
    std::set<std::pair<std::string, std::string>> follow_edges;  // (follower, followee)
    std::map<std::string, TopicLabel> topics;

    // Max timestamp observed anywhere in the corpus; account ages and
    // "created_at <= snapshot" checks measure against this.
    Timestamp snapshot_time = 0;

    bool operator==(const Corpus&) const = default;

    const UserRecord& user(const std::string& id) const;
    const TweetRecord& tweet(const std::string& id) const;
    const TopicLabel& topic(const std::string& id) const;
};

struct CorpusPaths {
    std::filesystem::path users;
    std::filesystem::path tweets;
    std::filesystem::path reactions;
    std::filesystem::path follows;
    std::filesystem::path topics;

    // Standard fixed file names under one directory.
    static CorpusPaths in_dir(const std::filesystem::path& dir);
    std::vector<std::filesystem::path> all() const;
};

// Parses and validates the five JSONL files. Line order never affects the
// result. Throws ParseError naming file + line for malformed rows and the
// missing id for dangling references.
Corpus parse_corpus(const CorpusPaths& paths);

// Inverse of parse_corpus: writes canonical JSONL (sorted ids, \n endings).
void write_corpus(const Corpus& corpus, const CorpusPaths& paths);

// Boolean search query over a keyword set: the disjunction of the size-n
// conjunction and all size-(n-1) conjunctions, subsets ordered by size
// descending then by keyword position. Keywords are lowercased and
// deduplicated first; a single keyword renders bare.
std::string build_query(const std::vector<std::string>& keywords);

}  // namespace rumorcast
