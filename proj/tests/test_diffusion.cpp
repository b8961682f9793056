#include <doctest.h>

#include <map>

#include "rumorcast/diffusion.hpp"
#include "rumorcast/synth.hpp"
#include "test_support.hpp"

using namespace rumorcast;
using namespace rumorcast::testing;

namespace {

// Original by "a" with three followers; f1 retweets it.
Corpus three_follower_corpus() {
    Corpus c = empty_corpus_with_topic();
    for (const char* id : {"a", "f1", "f2", "f3"}) c.users.emplace(id, make_user(id));
    c.tweets.emplace("t1", make_tweet("t1", "a", "topic0", 0));
    for (const char* f : {"f1", "f2", "f3"}) c.follow_edges.insert({f, "a"});
    c.reactions.push_back({"f1", "t1", ReactionKind::retweet, base_time() + 60});
    c.snapshot_time = base_time() + 60;
    return c;
}

// a -> b -> c retweet chain with explicit parents.
Corpus two_hop_corpus() {
    Corpus c = empty_corpus_with_topic();
    for (const char* id : {"a", "b", "cc"}) c.users.emplace(id, make_user(id));
    c.follow_edges.insert({"b", "a"});
    c.follow_edges.insert({"cc", "b"});
    c.tweets.emplace("t1", make_tweet("t1", "a", "topic0", 0));
    TweetRecord rb = make_tweet("rb", "b", "topic0", 100);
    rb.is_retweet = true;
    rb.retweet_of = "t1";
    c.tweets.emplace("rb", rb);
    TweetRecord rc = make_tweet("rc", "cc", "topic0", 200);
    rc.is_retweet = true;
    rc.retweet_of = "rb";
    c.tweets.emplace("rc", rc);
    c.reactions.push_back({"b", "t1", ReactionKind::retweet, base_time() + 100});
    c.reactions.push_back({"cc", "rb", ReactionKind::retweet, base_time() + 200});
    std::sort(c.reactions.begin(), c.reactions.end());
    c.snapshot_time = base_time() + 200;
    return c;
}

std::map<std::pair<std::string, std::string>, const DiffusionEdge*> index_edges(
    const std::vector<DiffusionEdge>& edges) {
    std::map<std::pair<std::string, std::string>, const DiffusionEdge*> out;
    for (const auto& e : edges) out[{e.spreader_id, e.receiver_id}] = &e;
    return out;
}

}  // namespace

TEST_CASE("spreader with no followers yields no edges") {
    Corpus c = empty_corpus_with_topic();
    c.users.emplace("a", make_user("a"));
    c.tweets.emplace("t1", make_tweet("t1", "a", "topic0"));
    CHECK(build_edges(c).empty());
}

TEST_CASE("three followers, one retweet: three edges, one diffused") {
    const std::vector<DiffusionEdge> edges = build_edges(three_follower_corpus());
    REQUIRE(edges.size() == 3);
    int diffused = 0;
    for (const auto& e : edges) {
        CHECK(e.spreader_id == "a");
        CHECK(e.tweet_id == "t1");
        CHECK(e.topic_status == TruthStatus::False);
        if (e.label == DiffusionLabel::diffused) {
            ++diffused;
            CHECK(e.receiver_id == "f1");
        }
    }
    CHECK(diffused == 1);
}

TEST_CASE("two-hop chain labels both hops diffused against the root message") {
    const std::vector<DiffusionEdge> edges = build_edges(two_hop_corpus());
    // Exposures: t1 -> b, rb -> cc (rc has no followers).
    REQUIRE(edges.size() == 2);
    const auto by_pair = index_edges(edges);
    REQUIRE(by_pair.count({"a", "b"}));
    REQUIRE(by_pair.count({"b", "cc"}));
    CHECK(by_pair.at({"a", "b"})->label == DiffusionLabel::diffused);
    CHECK(by_pair.at({"b", "cc"})->label == DiffusionLabel::diffused);
    CHECK(by_pair.at({"a", "b"})->tweet_id == "t1");
    CHECK(by_pair.at({"b", "cc"})->tweet_id == "t1");  // edges carry the root
}

TEST_CASE("reactions before exposure do not label the edge") {
    Corpus c = empty_corpus_with_topic();
    for (const char* id : {"a", "f1"}) c.users.emplace(id, make_user(id));
    c.follow_edges.insert({"f1", "a"});
    c.tweets.emplace("t1", make_tweet("t1", "a", "topic0", 1000));
    c.reactions.push_back({"f1", "t1", ReactionKind::like, base_time() + 10});
    c.snapshot_time = base_time() + 1000;
    const auto edges = build_edges(c);
    REQUIRE(edges.size() == 1);
    CHECK(edges[0].label == DiffusionLabel::not_diffused);
}

TEST_CASE("flattened root reaction attributes to the latest prior spreader") {
    // f follows only b; f's like references the root tweet directly.
    Corpus c = empty_corpus_with_topic();
    for (const char* id : {"a", "b", "f"}) c.users.emplace(id, make_user(id));
    c.follow_edges.insert({"b", "a"});
    c.follow_edges.insert({"f", "b"});
    c.tweets.emplace("t1", make_tweet("t1", "a", "topic0", 0));
    TweetRecord rb = make_tweet("rb", "b", "topic0", 100);
    rb.is_retweet = true;
    rb.retweet_of = "t1";
    c.tweets.emplace("rb", rb);
    c.reactions.push_back({"b", "t1", ReactionKind::retweet, base_time() + 100});
    c.reactions.push_back({"f", "t1", ReactionKind::like, base_time() + 300});
    std::sort(c.reactions.begin(), c.reactions.end());
    c.snapshot_time = base_time() + 300;

    const auto edges = build_edges(c);
    const auto by_pair = index_edges(edges);
    REQUIRE(by_pair.count({"b", "f"}));
    CHECK(by_pair.at({"b", "f"})->label == DiffusionLabel::diffused);
}

TEST_CASE("replies can be excluded from engagement") {
    Corpus c = three_follower_corpus();
    c.reactions[0].kind = ReactionKind::reply;
    const auto with_replies = build_edges(c);
    int diffused = 0;
    for (const auto& e : with_replies)
        if (e.label == DiffusionLabel::diffused) ++diffused;
    CHECK(diffused == 1);

    DiffusionOptions opt;
    opt.include_replies = false;
    for (const auto& e : build_edges(c, opt)) CHECK(e.label == DiffusionLabel::not_diffused);
}

TEST_CASE("edge output is sorted and stable") {
    const auto e1 = build_edges(two_hop_corpus());
    const auto e2 = build_edges(two_hop_corpus());
    CHECK(e1 == e2);
    for (std::size_t i = 1; i < e1.size(); ++i) {
        const auto key = [](const DiffusionEdge& e) {
            return std::tie(e.tweet_id, e.receiver_id, e.spreader_id, e.event_tweet_id);
        };
        CHECK(key(e1[i - 1]) < key(e1[i]));
    }
}

TEST_CASE("cascade depth") {
    SUBCASE("no retweets") {
        Corpus c = empty_corpus_with_topic();
        c.users.emplace("a", make_user("a"));
        c.tweets.emplace("t1", make_tweet("t1", "a", "topic0"));
        CHECK(cascade_depth(c, "t1") == 0);
    }
    SUBCASE("single retweet") {
        Corpus c = empty_corpus_with_topic();
        for (const char* id : {"a", "b"}) c.users.emplace(id, make_user(id));
        c.follow_edges.insert({"b", "a"});
        c.tweets.emplace("t1", make_tweet("t1", "a", "topic0", 0));
        TweetRecord rb = make_tweet("rb", "b", "topic0", 50);
        rb.is_retweet = true;
        rb.retweet_of = "t1";
        c.tweets.emplace("rb", rb);
        CHECK(cascade_depth(c, "t1") == 1);
        // Resolves from any tweet of the cascade.
        CHECK(cascade_depth(c, "rb") == 1);
    }
    SUBCASE("explicit two-hop chain") {
        CHECK(cascade_depth(two_hop_corpus(), "t1") == 2);
    }
    SUBCASE("flattened chain is reconstructed through follow edges") {
        // c retweets "t1" directly (platform flattening) but only follows b.
        Corpus c = two_hop_corpus();
        TweetRecord& rc = c.tweets.at("rc");
        rc.retweet_of = "t1";
        CHECK(cascade_depth(c, "t1") == 2);
    }
    SUBCASE("missing tweet errors") {
        CHECK_THROWS_AS(cascade_depth(two_hop_corpus(), "nope"), std::invalid_argument);
    }
}

TEST_CASE("class balance") {
    std::vector<DiffusionEdge> edges;
    for (int i = 0; i < 100; ++i) {
        DiffusionEdge e;
        e.topic_status = TruthStatus::True;
        e.label = i < 35 ? DiffusionLabel::diffused : DiffusionLabel::not_diffused;
        edges.push_back(e);
    }
    CHECK(class_balance(edges).at(TruthStatus::True) == doctest::Approx(0.35));

    for (auto& e : edges) e.label = DiffusionLabel::diffused;
    CHECK(class_balance(edges).at(TruthStatus::True) == 1.0);

    CHECK_THROWS_AS(class_balance({}), std::invalid_argument);
}

TEST_CASE("diffusion properties hold on generated corpora") {
    SynthConfig config;
    config.n_users = 60;
    config.tweets_per_topic = 8;
    config.n_topics_true = 1;
    config.n_topics_false = 1;
    config.seed = 99;
    const SynthResult synth = generate(config);
    const auto edges = build_edges(synth.corpus);

    SUBCASE("edge count equals the sum of follower counts over spread events") {
        std::map<std::string, std::size_t> followers;
        for (const auto& [follower, followee] : synth.corpus.follow_edges)
            ++followers[followee];
        std::size_t expected = 0;
        for (const auto& [id, t] : synth.corpus.tweets) expected += followers[t.author_id];
        CHECK(edges.size() == expected);
    }

    SUBCASE("diffused edges have a witnessing reaction, untouched edges none") {
        std::set<std::tuple<std::string, std::string>> reacted;  // (reactor, event tweet)
        for (const auto& r : synth.corpus.reactions) reacted.insert({r.reactor_id, r.tweet_id});
        for (const auto& e : edges) {
            const bool witnessed = reacted.count({e.receiver_id, e.event_tweet_id}) > 0;
            CHECK((e.label == DiffusionLabel::diffused) == witnessed);
        }
    }

    SUBCASE("tweets with zero retweet count have depth zero") {
        for (const auto& [id, t] : synth.corpus.tweets)
            if (t.retweet_count == 0 && !t.is_retweet)
                CHECK(cascade_depth(synth.corpus, id) == 0);
    }
}

TEST_CASE("cascade stats per topic and per status") {
    const Corpus c = two_hop_corpus();
    const auto edges = build_edges(c);
    const auto by_topic = cascade_stats(c, edges);
    REQUIRE(by_topic.count("topic0"));
    CHECK(by_topic.at("topic0").mean_depth == 2.0);
    CHECK(by_topic.at("topic0").max_depth == 2);
    CHECK(by_topic.at("topic0").edge_count == 2);
    CHECK(by_topic.at("topic0").diffused_fraction == 1.0);

    const auto by_status = cascade_stats_by_status(c, edges);
    CHECK(by_status.at(TruthStatus::False).mean_depth == 2.0);
    CHECK(by_status.at(TruthStatus::True).edge_count == 0);
}

TEST_CASE("edges serialize with the five contract fields") {
    TempDir dir("edges");
    const auto path = dir.path() / "edges.jsonl";
    write_edges_jsonl(build_edges(three_follower_corpus()), path);
    const std::string body = read_file(path);
    CHECK(body.find("\"spreader_id\":\"a\"") != std::string::npos);
    CHECK(body.find("\"label\":\"diffused\"") != std::string::npos);
    CHECK(body.find("\"topic_status\":\"False\"") != std::string::npos);
    CHECK(body.find("event_tweet_id") == std::string::npos);
}
