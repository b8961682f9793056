#pragma once

// Shared fixtures for the unit tests.

#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <string>

#include "rumorcast/corpus.hpp"

namespace rumorcast::testing {

inline Timestamp base_time() { return parse_timestamp("2019-09-01T00:00:00Z"); }

inline UserRecord make_user(const std::string& id, std::int64_t followers = 0,
                            std::int64_t friends = 0, std::int64_t statuses = 0,
                            std::int64_t age_days = 100) {
    UserRecord u;
    u.user_id = id;
    u.followers_count = followers;
    u.friends_count = friends;
    u.statuses_count = statuses;
    u.account_created_at = base_time() - age_days * 86400;
    return u;
}

inline TweetRecord make_tweet(const std::string& id, const std::string& author,
                              const std::string& topic, Timestamp offset_seconds = 0) {
    TweetRecord t;
    t.tweet_id = id;
    t.author_id = author;
    t.text = "hello world";
    t.created_at = base_time() + offset_seconds;
    t.topic_id = topic;
    return t;
}

inline TopicLabel make_topic(const std::string& id, TruthStatus status) {
    TopicLabel t;
    t.topic_id = id;
    t.status = status;
    t.keywords = {"alpha", "beta"};
    return t;
}

// Minimal consistent corpus skeleton: one topic, no users/tweets yet.
inline Corpus empty_corpus_with_topic(const std::string& topic_id = "topic0",
                                      TruthStatus status = TruthStatus::False) {
    Corpus c;
    c.topics.emplace(topic_id, make_topic(topic_id, status));
    c.snapshot_time = base_time();
    return c;
}

class TempDir {
public:
    explicit TempDir(const std::string& tag) {
        path_ = std::filesystem::temp_directory_path() /
                ("rumorcast_test_" + tag + "_" + std::to_string(::getpid()));
        std::filesystem::remove_all(path_);
        std::filesystem::create_directories(path_);
    }
    ~TempDir() { std::filesystem::remove_all(path_); }

    const std::filesystem::path& path() const { return path_; }

private:
    std::filesystem::path path_;
};

inline void write_file(const std::filesystem::path& p, const std::string& content) {
    std::ofstream out(p, std::ios::binary);
    out << content;
}

inline std::string read_file(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

}  // namespace rumorcast::testing
