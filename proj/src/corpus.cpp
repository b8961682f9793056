#include "rumorcast/corpus.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdio>
#include <fstream>

#include <json.hpp>

namespace rumorcast {

using nlohmann::json;

namespace {

// Howard Hinnant's civil-date algorithms.
std::int64_t days_from_civil(int y, unsigned m, unsigned d) {
    y -= m <= 2;
    const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
    const unsigned yoe = static_cast<unsigned>(y - era * 400);
    const unsigned doy = (153 * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;
    const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
    return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

void civil_from_days(std::int64_t z, int& y, unsigned& m, unsigned& d) {
    z += 719468;
    const std::int64_t era = (z >= 0 ? z : z - 146096) / 146097;
    const unsigned doe = static_cast<unsigned>(z - era * 146097);
    const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
    const std::int64_t yr = static_cast<std::int64_t>(yoe) + era * 400;
    const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
    const unsigned mp = (5 * doy + 2) / 153;
    d = doy - (153 * mp + 2) / 5 + 1;
    m = mp < 10 ? mp + 3 : mp - 9;
    y = static_cast<int>(yr + (m <= 2));
}

std::size_t utf8_codepoints(const std::string& s) {
    std::size_t n = 0;
    for (unsigned char c : s)
        if ((c & 0xC0) != 0x80) ++n;
    return n;
}

std::string lowercase_ascii(std::string s) {
    for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return s;
}

bool is_blank(const std::string& s) {
    return std::all_of(s.begin(), s.end(),
                       [](unsigned char c) { return std::isspace(c) != 0; });
}

// Typed field accessors with parse-context errors.
struct LineCtx {
    const std::string& file;
    std::size_t line;

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(file, line, msg); }

    const json& get(const json& obj, const char* key) const {
        auto it = obj.find(key);
        if (it == obj.end()) fail(std::string("missing field \"") + key + "\"");
        return *it;
    }
    std::string str(const json& obj, const char* key) const {
        const json& v = get(obj, key);
        if (!v.is_string()) fail(std::string("field \"") + key + "\" must be a string");
        return v.get<std::string>();
    }
    std::int64_t count(const json& obj, const char* key) const {
        const json& v = get(obj, key);
        if (!v.is_number_integer()) fail(std::string("field \"") + key + "\" must be an integer");
        auto n = v.get<std::int64_t>();
        if (n < 0) fail(std::string("field \"") + key + "\" must be non-negative");
        return n;
    }
    bool boolean(const json& obj, const char* key) const {
        const json& v = get(obj, key);
        if (!v.is_boolean()) fail(std::string("field \"") + key + "\" must be a boolean");
        return v.get<bool>();
    }
    Timestamp time(const json& obj, const char* key) const {
        const json& v = get(obj, key);
        if (v.is_number_integer()) return v.get<std::int64_t>();
        if (v.is_string()) {
            try {
                return parse_timestamp(v.get<std::string>());
            } catch (const std::exception& e) {
                fail(std::string("field \"") + key + "\": " + e.what());
            }
        }
        fail(std::string("field \"") + key + "\" must be a timestamp");
    }
    std::vector<std::string> str_list(const json& obj, const char* key) const {
        const json& v = get(obj, key);
        if (!v.is_array()) fail(std::string("field \"") + key + "\" must be an array");
        std::vector<std::string> out;
        out.reserve(v.size());
        for (const auto& e : v) {
            if (!e.is_string()) fail(std::string("field \"") + key + "\" must hold strings");
            out.push_back(e.get<std::string>());
        }
        return out;
    }
};

// Where a record came from, for referential-integrity diagnostics.
struct Origin {
    std::string file;
    std::size_t line = 0;
};

template <typename Fn>
void for_each_jsonl(const std::filesystem::path& path, Fn&& fn) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path.string());
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || is_blank(line)) continue;
        json obj;
        try {
            obj = json::parse(line);
        } catch (const json::exception& e) {
            throw ParseError(path.string(), lineno, std::string("malformed JSON: ") + e.what());
        }
        if (!obj.is_object())
            throw ParseError(path.string(), lineno, "each line must be a JSON object");
        fn(obj, LineCtx{path.string(), lineno});
    }
}

json timestamp_json(Timestamp t) { return json(format_timestamp(t)); }

}  // namespace

Timestamp parse_timestamp(const std::string& text) {
    if (!text.empty() && (std::isdigit(static_cast<unsigned char>(text[0])) || text[0] == '-')) {
        // ISO strings also start with a digit; only treat as epoch seconds when
        // the whole token is numeric.
        if (text.find_first_not_of("-0123456789") == std::string::npos)
            return std::stoll(text);
    }
    int y = 0;
    unsigned mo = 0, d = 0, h = 0, mi = 0, s = 0;
    char z = 0;
    if (std::sscanf(text.c_str(), "%4d-%2u-%2uT%2u:%2u:%2u%c", &y, &mo, &d, &h, &mi, &s, &z) != 7 ||
        z != 'Z' || mo < 1 || mo > 12 || d < 1 || d > 31 || h > 23 || mi > 59 || s > 60)
        throw std::invalid_argument("invalid timestamp \"" + text + "\"");
    return days_from_civil(y, mo, d) * 86400 + h * 3600 + mi * 60 + s;
}

std::string format_timestamp(Timestamp t) {
    std::int64_t days = t / 86400;
    std::int64_t rem = t % 86400;
    if (rem < 0) {
        rem += 86400;
        --days;
    }
    int y;
    unsigned mo, d;
    civil_from_days(days, y, mo, d);
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%04d-%02u-%02uT%02lld:%02lld:%02lldZ", y, mo, d,
                  static_cast<long long>(rem / 3600), static_cast<long long>((rem / 60) % 60),
                  static_cast<long long>(rem % 60));
    return buf;
}

const char* to_string(ReactionKind k) {
    switch (k) {
        case ReactionKind::retweet: return "retweet";
        case ReactionKind::quote: return "quote";
        case ReactionKind::reply: return "reply";
        case ReactionKind::like: return "like";
    }
    return "like";
}

ReactionKind reaction_kind_from_string(const std::string& s) {
    if (s == "retweet") return ReactionKind::retweet;
    if (s == "quote") return ReactionKind::quote;
    if (s == "reply") return ReactionKind::reply;
    if (s == "like") return ReactionKind::like;
    throw std::invalid_argument("unknown reaction kind \"" + s + "\"");
}

const char* to_string(TruthStatus s) {
    return s == TruthStatus::True ? "True" : "False";
}

TruthStatus truth_status_from_string(const std::string& s) {
    if (s == "True") return TruthStatus::True;
    if (s == "False") return TruthStatus::False;
    throw std::invalid_argument("unknown truth status \"" + s + "\" (expected True or False)");
}

const UserRecord& Corpus::user(const std::string& id) const {
    auto it = users.find(id);
    if (it == users.end()) throw std::out_of_range("unknown user \"" + id + "\"");
    return it->second;
}

const TweetRecord& Corpus::tweet(const std::string& id) const {
    auto it = tweets.find(id);
    if (it == tweets.end()) throw std::out_of_range("unknown tweet \"" + id + "\"");
    return it->second;
}

const TopicLabel& Corpus::topic(const std::string& id) const {
    auto it = topics.find(id);
    if (it == topics.end()) throw std::out_of_range("unknown topic \"" + id + "\"");
    return it->second;
}

CorpusPaths CorpusPaths::in_dir(const std::filesystem::path& dir) {
    return CorpusPaths{dir / "users.jsonl", dir / "tweets.jsonl", dir / "reactions.jsonl",
                       dir / "follows.jsonl", dir / "topics.jsonl"};
}

std::vector<std::filesystem::path> CorpusPaths::all() const {
    return {users, tweets, reactions, follows, topics};
}

Corpus parse_corpus(const CorpusPaths& paths) {
    Corpus c;
    std::map<std::string, Origin> user_origin, tweet_origin;

    for_each_jsonl(paths.users, [&](const json& obj, const LineCtx& ctx) {
        UserRecord u;
        u.user_id = ctx.str(obj, "user_id");
        u.followers_count = ctx.count(obj, "followers_count");
        u.friends_count = ctx.count(obj, "friends_count");
        u.statuses_count = ctx.count(obj, "statuses_count");
        u.account_created_at = ctx.time(obj, "account_created_at");
        u.verified = ctx.boolean(obj, "verified");
        u.has_profile_url = ctx.boolean(obj, "has_profile_url");
        u.has_description = ctx.boolean(obj, "has_description");
        for (auto& f : ctx.str_list(obj, "friend_ids")) u.friend_ids.insert(std::move(f));
        if (!c.users.emplace(u.user_id, u).second)
            ctx.fail("duplicate user_id \"" + u.user_id + "\"");
        user_origin[u.user_id] = Origin{ctx.file, ctx.line};
    });

    for_each_jsonl(paths.topics, [&](const json& obj, const LineCtx& ctx) {
        TopicLabel t;
        t.topic_id = ctx.str(obj, "topic_id");
        try {
            t.status = truth_status_from_string(ctx.str(obj, "status"));
        } catch (const std::invalid_argument& e) {
            ctx.fail(e.what());
        }
        t.keywords = ctx.str_list(obj, "keywords");
        if (t.keywords.empty()) ctx.fail("topic keywords must be non-empty");
        for (const auto& k : t.keywords)
            if (is_blank(k)) ctx.fail("topic keywords must not be blank");
        if (!c.topics.emplace(t.topic_id, t).second)
            ctx.fail("duplicate topic_id \"" + t.topic_id + "\"");
    });

    for_each_jsonl(paths.tweets, [&](const json& obj, const LineCtx& ctx) {
        TweetRecord t;
        t.tweet_id = ctx.str(obj, "tweet_id");
        t.author_id = ctx.str(obj, "author_id");
        t.text = ctx.str(obj, "text");
        if (utf8_codepoints(t.text) > 280) ctx.fail("text exceeds 280 characters");
        t.created_at = ctx.time(obj, "created_at");
        t.retweet_count = ctx.count(obj, "retweet_count");
        t.favorite_count = ctx.count(obj, "favorite_count");
        t.is_retweet = ctx.boolean(obj, "is_retweet");
        if (auto it = obj.find("retweet_of"); it != obj.end() && !it->is_null()) {
            if (!it->is_string()) ctx.fail("field \"retweet_of\" must be a string");
            t.retweet_of = it->get<std::string>();
        }
        if (t.is_retweet != t.retweet_of.has_value())
            ctx.fail("is_retweet must hold exactly when retweet_of is present");
        t.is_quote = ctx.boolean(obj, "is_quote");
        t.hashtags = ctx.str_list(obj, "hashtags");
        t.urls = ctx.str_list(obj, "urls");
        t.mentions = ctx.str_list(obj, "mentions");
        t.has_media = ctx.boolean(obj, "has_media");
        t.topic_id = ctx.str(obj, "topic_id");
        if (!c.users.count(t.author_id))
            ctx.fail("unresolved author \"" + t.author_id + "\"");
        if (!c.topics.count(t.topic_id))
            ctx.fail("unresolved topic \"" + t.topic_id + "\"");
        if (!c.tweets.emplace(t.tweet_id, t).second)
            ctx.fail("duplicate tweet_id \"" + t.tweet_id + "\"");
        tweet_origin[t.tweet_id] = Origin{ctx.file, ctx.line};
    });

    // retweet_of may point forward in the file; resolve after the full load.
    for (const auto& [id, t] : c.tweets) {
        if (t.retweet_of && !c.tweets.count(*t.retweet_of)) {
            const Origin& o = tweet_origin[id];
            throw ParseError(o.file, o.line, "unresolved retweet_of \"" + *t.retweet_of + "\"");
        }
    }

    for_each_jsonl(paths.follows, [&](const json& obj, const LineCtx& ctx) {
        std::string follower = ctx.str(obj, "follower");
        std::string followee = ctx.str(obj, "followee");
        if (follower == followee) ctx.fail("self-follow \"" + follower + "\"");
        if (!c.users.count(follower)) ctx.fail("unresolved follower \"" + follower + "\"");
        if (!c.users.count(followee)) ctx.fail("unresolved followee \"" + followee + "\"");
        c.follow_edges.emplace(std::move(follower), std::move(followee));
    });

    for_each_jsonl(paths.reactions, [&](const json& obj, const LineCtx& ctx) {
        ReactionRecord r;
        r.reactor_id = ctx.str(obj, "reactor_id");
        r.tweet_id = ctx.str(obj, "tweet_id");
        try {
            r.kind = reaction_kind_from_string(ctx.str(obj, "kind"));
        } catch (const std::invalid_argument& e) {
            ctx.fail(e.what());
        }
        r.reacted_at = ctx.time(obj, "reacted_at");
        if (!c.users.count(r.reactor_id)) ctx.fail("unresolved reactor \"" + r.reactor_id + "\"");
        if (!c.tweets.count(r.tweet_id)) ctx.fail("unresolved tweet \"" + r.tweet_id + "\"");
        c.reactions.push_back(std::move(r));
    });

    // Canonical order makes the corpus independent of input line order.
    std::sort(c.reactions.begin(), c.reactions.end());

    c.snapshot_time = 0;
    for (const auto& [id, u] : c.users) c.snapshot_time = std::max(c.snapshot_time, u.account_created_at);
    for (const auto& [id, t] : c.tweets) c.snapshot_time = std::max(c.snapshot_time, t.created_at);
    for (const auto& r : c.reactions) c.snapshot_time = std::max(c.snapshot_time, r.reacted_at);

    return c;
}

void write_corpus(const Corpus& corpus, const CorpusPaths& paths) {
    auto open = [](const std::filesystem::path& p) {
        if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
        std::ofstream out(p, std::ios::binary);
        if (!out) throw std::runtime_error("cannot write " + p.string());
        return out;
    };

    {
        std::ofstream out = open(paths.users);
        for (const auto& [id, u] : corpus.users) {
            json obj{{"user_id", u.user_id},
                     {"followers_count", u.followers_count},
                     {"friends_count", u.friends_count},
                     {"statuses_count", u.statuses_count},
                     {"account_created_at", timestamp_json(u.account_created_at)},
                     {"verified", u.verified},
                     {"has_profile_url", u.has_profile_url},
                     {"has_description", u.has_description},
                     {"friend_ids", u.friend_ids}};
            out << obj.dump() << '\n';
        }
    }
    {
        std::ofstream out = open(paths.tweets);
        for (const auto& [id, t] : corpus.tweets) {
            json obj{{"tweet_id", t.tweet_id},
                     {"author_id", t.author_id},
                     {"text", t.text},
                     {"created_at", timestamp_json(t.created_at)},
                     {"retweet_count", t.retweet_count},
                     {"favorite_count", t.favorite_count},
                     {"is_retweet", t.is_retweet},
                     {"is_quote", t.is_quote},
                     {"hashtags", t.hashtags},
                     {"urls", t.urls},
                     {"mentions", t.mentions},
                     {"has_media", t.has_media},
                     {"topic_id", t.topic_id}};
            if (t.retweet_of) obj["retweet_of"] = *t.retweet_of;
            out << obj.dump() << '\n';
        }
    }
    {
        std::ofstream out = open(paths.reactions);
        for (const auto& r : corpus.reactions) {
            json obj{{"reactor_id", r.reactor_id},
                     {"tweet_id", r.tweet_id},
                     {"kind", to_string(r.kind)},
                     {"reacted_at", timestamp_json(r.reacted_at)}};
            out << obj.dump() << '\n';
        }
    }
    {
        std::ofstream out = open(paths.follows);
        for (const auto& [follower, followee] : corpus.follow_edges) {
            json obj{{"follower", follower}, {"followee", followee}};
            out << obj.dump() << '\n';
        }
    }
    {
        std::ofstream out = open(paths.topics);
        for (const auto& [id, t] : corpus.topics) {
            json obj{{"topic_id", t.topic_id},
                     {"status", to_string(t.status)},
                     {"keywords", t.keywords}};
            out << obj.dump() << '\n';
        }
    }
}

std::string build_query(const std::vector<std::string>& keywords) {
    std::vector<std::string> kw;
    for (const auto& raw : keywords) {
        if (is_blank(raw)) throw std::invalid_argument("keywords must not be blank");
        std::string k = lowercase_ascii(raw);
        if (std::find(kw.begin(), kw.end(), k) == kw.end()) kw.push_back(std::move(k));
    }
    if (kw.empty()) throw std::invalid_argument("keyword list must be non-empty");

    const std::size_t n = kw.size();
    if (n == 1) return kw.front();

    auto conjunction = [](const std::vector<std::string>& terms) {
        std::string s = "(";
        for (std::size_t i = 0; i < terms.size(); ++i) {
            if (i) s += " AND ";
            s += terms[i];
        }
        s += ")";
        return s;
    };

    std::vector<std::string> clauses;
    clauses.push_back(conjunction(kw));
    // Size n-1 subsets in lexicographic index order: drop the last index first.
    for (std::size_t drop = n; drop-- > 0;) {
        std::vector<std::string> sub;
        for (std::size_t i = 0; i < n; ++i)
            if (i != drop) sub.push_back(kw[i]);
        clauses.push_back(conjunction(sub));
    }

    std::string out = "(";
    for (std::size_t i = 0; i < clauses.size(); ++i) {
        if (i) out += " OR ";
        out += clauses[i];
    }
    out += ")";
    return out;
}

}  // namespace rumorcast
