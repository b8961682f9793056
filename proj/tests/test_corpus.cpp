#include <doctest.h>

#include <algorithm>

#include "rumorcast/corpus.hpp"
#include "test_support.hpp"

using namespace rumorcast;
using namespace rumorcast::testing;

TEST_CASE("build_query reproduces the three-keyword expansion") {
    CHECK(build_query({"hillary", "destroy", "syria"}) ==
          "((hillary AND destroy AND syria) OR (hillary AND destroy) OR "
          "(hillary AND syria) OR (destroy AND syria))");
}

TEST_CASE("build_query single keyword renders bare") {
    CHECK(build_query({"earthquake"}) == "earthquake");
}

TEST_CASE("build_query two keywords") {
    CHECK(build_query({"a", "b"}) == "((a AND b) OR (a) OR (b))");
}

TEST_CASE("build_query lowercases and deduplicates") {
    CHECK(build_query({"Hillary", "hillary"}) == "hillary");
    CHECK(build_query({"Alpha", "beta"}) == "((alpha AND beta) OR (alpha) OR (beta))");
}

TEST_CASE("build_query clause count is 1 + n for n >= 2") {
    std::vector<std::string> kw;
    for (int n = 2; n <= 6; ++n) {
        kw.clear();
        for (int i = 0; i < n; ++i) kw.push_back("k" + std::to_string(i));
        const std::string q = build_query(kw);
        std::size_t clauses = 1, at = 0;
        while ((at = q.find(" OR ", at)) != std::string::npos) {
            ++clauses;
            at += 4;
        }
        CHECK(clauses == static_cast<std::size_t>(n) + 1);
    }
}

TEST_CASE("build_query rejects empty keyword list") {
    CHECK_THROWS_AS(build_query({}), std::invalid_argument);
}

TEST_CASE("timestamps round-trip and accept integers") {
    CHECK(format_timestamp(parse_timestamp("2019-09-01T12:34:56Z")) == "2019-09-01T12:34:56Z");
    CHECK(parse_timestamp("0") == 0);
    CHECK(format_timestamp(0) == "1970-01-01T00:00:00Z");
    CHECK(parse_timestamp("1567296000") == parse_timestamp("2019-09-01T00:00:00Z"));
    CHECK_THROWS(parse_timestamp("not a time"));
}

namespace {

CorpusPaths write_corpus_files(const std::filesystem::path& dir, const std::string& users,
                               const std::string& tweets, const std::string& reactions,
                               const std::string& follows, const std::string& topics) {
    const CorpusPaths paths = CorpusPaths::in_dir(dir);
    write_file(paths.users, users);
    write_file(paths.tweets, tweets);
    write_file(paths.reactions, reactions);
    write_file(paths.follows, follows);
    write_file(paths.topics, topics);
    return paths;
}

const char* kUserA =
    R"({"user_id":"a","followers_count":10,"friends_count":5,"statuses_count":100,)"
    R"("account_created_at":"2019-01-01T00:00:00Z","verified":false,)"
    R"("has_profile_url":true,"has_description":false,"friend_ids":["b"]})";
const char* kUserB =
    R"({"user_id":"b","followers_count":3,"friends_count":2,"statuses_count":50,)"
    R"("account_created_at":"2018-01-01T00:00:00Z","verified":true,)"
    R"("has_profile_url":false,"has_description":true,"friend_ids":[]})";
const char* kTopic =
    R"({"topic_id":"topic0","status":"False","keywords":["storm","flood"]})";
const char* kTweet1 =
    R"({"tweet_id":"t1","author_id":"a","text":"breaking storm news","created_at":"2019-09-01T01:00:00Z",)"
    R"("retweet_count":2,"favorite_count":1,"is_retweet":false,"is_quote":false,)"
    R"("hashtags":["storm"],"urls":[],"mentions":["b"],"has_media":false,"topic_id":"topic0"})";

}  // namespace

TEST_CASE("parse_corpus: empty files yield an empty corpus") {
    TempDir dir("corpus_empty");
    const CorpusPaths paths = write_corpus_files(dir.path(), "", "", "", "", "");
    const Corpus c = parse_corpus(paths);
    CHECK(c.users.empty());
    CHECK(c.tweets.empty());
    CHECK(c.reactions.empty());
    CHECK(c.follow_edges.empty());
    CHECK(c.topics.empty());
}

TEST_CASE("parse_corpus: minimal valid corpus") {
    TempDir dir("corpus_minimal");
    const CorpusPaths paths = write_corpus_files(
        dir.path(), std::string(kUserA) + "\n" + kUserB + "\n", std::string(kTweet1) + "\n", "",
        "", std::string(kTopic) + "\n");
    const Corpus c = parse_corpus(paths);
    CHECK(c.users.size() == 2);
    CHECK(c.tweets.size() == 1);
    CHECK(c.follow_edges.empty());
    CHECK(c.tweet("t1").mentions == std::vector<std::string>{"b"});
    CHECK(c.snapshot_time == parse_timestamp("2019-09-01T01:00:00Z"));
}

TEST_CASE("parse_corpus: unresolved author is an error") {
    TempDir dir("corpus_dangling");
    const CorpusPaths paths = write_corpus_files(dir.path(), std::string(kUserB) + "\n",
                                                 std::string(kTweet1) + "\n", "", "",
                                                 std::string(kTopic) + "\n");
    CHECK_THROWS_WITH_AS(parse_corpus(paths), doctest::Contains("unresolved author \"a\""),
                         ParseError);
}

TEST_CASE("parse_corpus: malformed line reports file and line number") {
    TempDir dir("corpus_malformed");
    const CorpusPaths paths = write_corpus_files(
        dir.path(), std::string(kUserA) + "\n" + kUserB + "\n{oops\n", "", "", "", "");
    try {
        parse_corpus(paths);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
        CHECK(e.file() == paths.users.string());
        CHECK(std::string(e.what()).find("malformed JSON") != std::string::npos);
    }
}

TEST_CASE("parse_corpus: referential integrity across files") {
    TempDir dir("corpus_refs");
    SUBCASE("dangling follow endpoint") {
        const CorpusPaths paths = write_corpus_files(
            dir.path(), std::string(kUserA) + "\n" + kUserB + "\n", "", "",
            R"({"follower":"a","followee":"ghost"})" "\n", "");
        CHECK_THROWS_WITH_AS(parse_corpus(paths), doctest::Contains("ghost"), ParseError);
    }
    SUBCASE("dangling reaction tweet") {
        const CorpusPaths paths = write_corpus_files(
            dir.path(), std::string(kUserA) + "\n" + kUserB + "\n", "",
            R"({"reactor_id":"b","tweet_id":"missing","kind":"like","reacted_at":0})" "\n", "",
            "");
        CHECK_THROWS_WITH_AS(parse_corpus(paths), doctest::Contains("missing"), ParseError);
    }
    SUBCASE("dangling topic") {
        const CorpusPaths paths =
            write_corpus_files(dir.path(), std::string(kUserA) + "\n" + kUserB + "\n",
                               std::string(kTweet1) + "\n", "", "", "");
        CHECK_THROWS_WITH_AS(parse_corpus(paths), doctest::Contains("unresolved topic"),
                             ParseError);
    }
    SUBCASE("is_retweet without retweet_of") {
        std::string bad = kTweet1;
        const auto at = bad.find("\"is_retweet\":false");
        bad.replace(at, 18, "\"is_retweet\":true");
        const CorpusPaths paths =
            write_corpus_files(dir.path(), std::string(kUserA) + "\n" + kUserB + "\n", bad + "\n",
                               "", "", std::string(kTopic) + "\n");
        CHECK_THROWS_AS(parse_corpus(paths), ParseError);
    }
    SUBCASE("negative count") {
        std::string bad = kUserA;
        const auto at = bad.find("\"followers_count\":10");
        bad.replace(at, 20, "\"followers_count\":-1");
        const CorpusPaths paths = write_corpus_files(dir.path(), bad + "\n", "", "", "", "");
        CHECK_THROWS_WITH_AS(parse_corpus(paths), doctest::Contains("non-negative"), ParseError);
    }
    SUBCASE("over-long text") {
        std::string bad = kTweet1;
        const auto at = bad.find("breaking storm news");
        bad.replace(at, 19, std::string(281, 'x'));
        const CorpusPaths paths =
            write_corpus_files(dir.path(), std::string(kUserA) + "\n" + kUserB + "\n", bad + "\n",
                               "", "", std::string(kTopic) + "\n");
        CHECK_THROWS_WITH_AS(parse_corpus(paths), doctest::Contains("280"), ParseError);
    }
}

TEST_CASE("parse_corpus is independent of line order") {
    TempDir dir("corpus_order");
    const std::string users_ab = std::string(kUserA) + "\n" + kUserB + "\n";
    const std::string users_ba = std::string(kUserB) + "\n" + kUserA + "\n";
    const std::string follows =
        R"({"follower":"b","followee":"a"})" "\n";
    const CorpusPaths p1 = write_corpus_files(dir.path(), users_ab, std::string(kTweet1) + "\n",
                                              "", follows, std::string(kTopic) + "\n");
    const Corpus c1 = parse_corpus(p1);
    const CorpusPaths p2 = write_corpus_files(dir.path(), users_ba, std::string(kTweet1) + "\n",
                                              "", follows, std::string(kTopic) + "\n");
    const Corpus c2 = parse_corpus(p2);
    CHECK(c1 == c2);
}

TEST_CASE("corpus round-trips through write and parse") {
    TempDir dir("corpus_roundtrip");
    Corpus c = empty_corpus_with_topic();
    UserRecord a = make_user("a", 10, 5, 100);
    a.friend_ids = {"b"};
    a.has_profile_url = true;
    c.users.emplace("a", a);
    c.users.emplace("b", make_user("b", 3, 2, 50));
    TweetRecord t1 = make_tweet("t1", "a", "topic0", 3600);
    t1.hashtags = {"storm"};
    t1.mentions = {"b"};
    t1.retweet_count = 1;
    c.tweets.emplace("t1", t1);
    TweetRecord t2 = make_tweet("t2", "b", "topic0", 7200);
    t2.is_retweet = true;
    t2.retweet_of = "t1";
    c.tweets.emplace("t2", t2);
    c.follow_edges.insert({"b", "a"});
    c.reactions.push_back({"b", "t1", ReactionKind::retweet, base_time() + 7200});
    std::sort(c.reactions.begin(), c.reactions.end());
    c.snapshot_time = base_time() + 7200;

    const CorpusPaths paths = CorpusPaths::in_dir(dir.path());
    write_corpus(c, paths);
    const Corpus back = parse_corpus(paths);
    CHECK(back == c);

    // Writing the parsed corpus again is byte-identical.
    TempDir dir2("corpus_roundtrip2");
    const CorpusPaths paths2 = CorpusPaths::in_dir(dir2.path());
    write_corpus(back, paths2);
    for (std::size_t i = 0; i < paths.all().size(); ++i)
        CHECK(read_file(paths.all()[i]) == read_file(paths2.all()[i]));
}
