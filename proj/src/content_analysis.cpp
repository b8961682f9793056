#include "rumorcast/content_analysis.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

#include "rumorcast/corpus.hpp"

namespace rumorcast {

using nlohmann::json;

namespace {

const std::vector<std::string>& sentiment_group() {
    static const std::vector<std::string> g{"positive", "negative", "neutral"};
    return g;
}
const std::vector<std::string>& emotion_group() {
    static const std::vector<std::string> g{"happy", "fear", "sad", "angry", "bored"};
    return g;
}
const std::vector<std::string>& intent_group() {
    static const std::vector<std::string> g{"feedback", "news", "query", "spam", "marketing"};
    return g;
}

double& field_by_name(LatentScores& s, const std::string& name) {
    if (name == "positive") return s.positive;
    if (name == "negative") return s.negative;
    if (name == "neutral") return s.neutral;
    if (name == "happy") return s.happy;
    if (name == "fear") return s.fear;
    if (name == "sad") return s.sad;
    if (name == "angry") return s.angry;
    if (name == "bored") return s.bored;
    if (name == "feedback") return s.feedback;
    if (name == "news") return s.news;
    if (name == "query") return s.query;
    if (name == "spam") return s.spam;
    if (name == "marketing") return s.marketing;
    if (name == "abusive") return s.abusive;
    throw std::invalid_argument("unknown score field \"" + name + "\"");
}

}  // namespace

std::array<double, kLatentScoreCount> LatentScores::values() const {
    return {positive, negative, neutral, happy, fear,  sad,  angry,
            bored,    feedback, news,    query, spam, marketing, abusive};
}

const std::array<const char*, kLatentScoreCount>& LatentScores::field_names() {
    static const std::array<const char*, kLatentScoreCount> names{
        "positive", "negative", "neutral",  "happy", "fear",      "sad",    "angry",
        "bored",    "feedback", "news",     "query", "spam",      "marketing", "abusive"};
    return names;
}

bool LatentScores::valid(double tol) const {
    for (double v : values())
        if (!(v >= 0.0 && v <= 1.0)) return false;
    if (std::abs(positive + negative + neutral - 1.0) > tol) return false;
    if (std::abs(happy + fear + sad + angry + bored - 1.0) > tol) return false;
    if (std::abs(feedback + news + query + spam + marketing - 1.0) > tol) return false;
    return true;
}

const std::vector<std::string>& lexicon_categories() {
    static const std::vector<std::string> cats{
        "positive", "negative", "neutral",  "happy", "fear",      "sad",    "angry",
        "bored",    "feedback", "news",     "query", "spam",      "marketing", "abusive"};
    return cats;
}

bool Lexicon::valid() const {
    if (!(alpha > 0.0)) return false;
    if (terms.size() != lexicon_categories().size()) return false;
    for (const auto& cat : lexicon_categories())
        if (!terms.count(cat)) return false;
    return true;
}

const Lexicon& default_lexicon() {
    static const Lexicon lex = [] {
        Lexicon l;
        l.alpha = 1.0;
        auto put = [&l](const char* cat, std::initializer_list<const char*> words) {
            auto& s = l.terms[cat];
            for (const char* w : words) s.insert(w);
        };
        put("positive",
            {"good",      "great",     "love",      "loved",    "best",      "awesome",
             "amazing",   "wonderful", "excellent", "fantastic", "beautiful", "brilliant",
             "success",   "proud",     "hope",      "hopeful",  "glad",      "positive",
             "perfect",   "nice",      "superb",    "thrilled", "delighted", "grateful",
             "blessed",   "inspiring", "impressive", "strong",  "bright",    "favorite",
             "support",   "celebrate", "victory",   "smile",    "kind",      "truth",
             "honest",    "heroic",    "uplifting", "admirable"});
        put("negative",
            {"bad",      "worse",      "worst",   "hate",     "hated",    "terrible",
             "awful",    "horrible",   "disaster", "fail",    "failed",   "failure",
             "lie",      "lies",       "liar",    "fake",     "corrupt",  "evil",
             "wrong",    "ugly",       "disgusting", "shameful", "pathetic", "toxic",
             "broken",   "crisis",     "scandal", "fraud",    "ruin",     "destroy",
             "damage",   "collapse",   "losing",  "loser",    "weak",     "nasty",
             "cruel",    "dishonest",  "poison",  "rotten"});
        put("neutral",
            {"data",     "information", "standard", "regular",  "notice",   "record",
             "detail",   "document",    "reference", "context", "moderate", "average",
             "typical",  "general",     "status",   "current",  "ongoing",  "pending",
             "estimate", "figure",      "measure",  "process",  "procedure", "policy",
             "term",     "item",        "entry",    "listing",  "routine",  "agenda",
             "memo",     "minutes",     "quarterly", "annual",  "baseline", "interim",
             "provisional", "nominal",  "unchanged", "steady"});
        put("happy",
            {"happy",    "joy",       "joyful",   "fun",      "laugh",    "laughing",
             "smiling",  "cheerful",  "excited",  "exciting", "delight",  "yay",
             "hooray",   "celebration", "party",  "lol",      "haha",     "bliss",
             "sunshine", "cheers",    "festive",  "merry",    "playful",  "upbeat",
             "rejoice",  "giggle",    "grin",     "happiness", "enjoy",   "enjoying",
             "lovely",   "sweet",     "charming", "bubbly",   "radiant",  "gleeful",
             "jolly",    "chipper",   "elated",   "beaming"});
        put("fear",
            {"fear",      "afraid",    "scared",   "scary",     "terror",   "terrifying",
             "panic",     "warning",   "danger",   "dangerous", "threat",   "threatening",
             "alarm",     "alarming",  "horror",   "dread",     "anxious",  "anxiety",
             "worried",   "worry",     "frightened", "frightening", "beware", "unsafe",
             "risk",      "risky",     "emergency", "evacuate", "bomb",     "outbreak",
             "epidemic",  "pandemic",  "deadly",   "fatal",     "lethal",   "menace",
             "peril",     "shock",     "chilling", "ominous"});
        put("sad",
            {"sad",       "sadness",   "cry",      "crying",    "tears",    "tragic",
             "tragedy",   "grief",     "grieving", "mourn",     "mourning", "heartbroken",
             "heartbreaking", "sorrow", "loss",    "lost",      "lonely",   "alone",
             "depressed", "depressing", "gloomy",  "hopeless",  "devastated", "devastating",
             "painful",   "hurt",      "hurting",  "weep",      "rip",      "condolences",
             "funeral",   "farewell",  "regret",   "sorry",     "unhappy",  "miserable",
             "despair",   "somber",    "anguish",  "aching"});
        put("angry",
            {"angry",     "anger",     "mad",      "furious",   "rage",     "raging",
             "outrage",   "outrageous", "disgusted", "annoyed",  "annoying", "frustrated",
             "frustrating", "fury",    "irate",    "livid",     "resent",   "bitter",
             "hostile",   "aggressive", "fight",   "fighting",  "protest",  "boycott",
             "condemn",   "denounce",  "slam",     "blast",     "insult",   "offensive",
             "unacceptable", "betrayed", "betrayal", "seething", "fuming",  "indignant",
             "wrath",     "appalled",  "infuriating", "grr"});
        put("bored",
            {"bored",     "boring",    "boredom",  "dull",      "tedious",  "tiresome",
             "monotonous", "bland",    "meh",      "yawn",      "whatever", "uninteresting",
             "uninspired", "mundane",  "repetitive", "dreary",   "drab",     "stale",
             "flat",      "lifeless",  "unoriginal", "predictable", "forgettable", "sleepy",
             "tired",     "snooze",    "blah",     "humdrum",   "dry",      "plain",
             "ordinary",  "lame",      "pointless", "listless", "weary",    "numbing",
             "vapid",     "insipid",   "drudgery", "idle"});
        put("feedback",
            {"feedback",  "review",    "rating",   "rated",     "stars",    "recommend",
             "recommended", "suggestion", "suggest", "opinion",  "experience", "complaint",
             "complain",  "praise",    "thank",    "thanks",    "appreciate", "response",
             "respond",   "comment",   "critique", "criticism", "improve",  "improvement",
             "satisfied", "unsatisfied", "disappointed", "refund", "service", "helpful",
             "unhelpful", "quality",   "issue",    "bug",       "request",  "testimonial",
             "endorse",   "vouch",     "gripe",    "kudos"});
        put("news",
            {"news",      "breaking",  "report",   "reported",  "reporting", "reporter",
             "headline",  "update",    "updates",  "announced", "announcement", "confirmed",
             "sources",   "source",    "exclusive", "live",     "coverage", "press",
             "media",     "journalist", "bulletin", "alert",    "developing", "statement",
             "spokesperson", "briefing", "correspondent", "broadcast", "publish", "published",
             "article",   "story",     "investigation", "revealed", "leak",  "leaked",
             "footage",   "witness",   "scoop",    "newsroom"});
        put("query",
            {"question",  "questions", "ask",      "asking",    "asked",    "who",
             "what",      "when",      "where",    "why",       "how",      "anyone",
             "anybody",   "wondering", "wonder",   "curious",   "help",     "info",
             "explain",   "clarify",   "confirm",  "really",    "seriously", "does",
             "did",       "can",       "could",    "should",    "would",    "know",
             "knows",     "answer",    "answers",  "poll",      "survey",   "thoughts",
             "advice",    "please",    "pls",      "huh"});
        put("spam",
            {"spam",      "free",      "win",      "winner",    "prize",    "claim",
             "click",     "link",      "subscribe", "follow",   "followback", "giveaway",
             "promo",     "discount",  "offer",    "limited",   "deal",     "cash",
             "money",     "earn",      "rich",     "bitcoin",   "crypto",   "lottery",
             "jackpot",   "bonus",     "gift",     "guaranteed", "urgent",  "hurry",
             "dm",        "viral",     "congratulations", "selected", "expires", "signup",
             "unlock",    "redeem",    "instant",  "millionaire"});
        put("marketing",
            {"marketing", "sale",      "sales",    "buy",       "shop",     "shopping",
             "order",     "store",     "brand",    "product",   "products", "launch",
             "launching", "collection", "retail",  "coupon",    "code",     "checkout",
             "shipping",  "delivery",  "stock",    "available", "preorder", "bundle",
             "upgrade",   "premium",   "membership", "trial",   "demo",     "catalog",
             "advert",    "advertising", "campaign", "sponsor", "sponsored", "partner",
             "affiliate", "merch",     "pricing",  "price"});
        put("abusive",
            {"idiot",     "stupid",    "dumb",     "moron",     "fool",     "trash",
             "garbage",   "scum",      "clown",    "jerk",      "creep",    "disgrace",
             "shutup",    "worthless", "ignorant", "imbecile",  "buffoon",  "nitwit",
             "dimwit",    "halfwit",   "numbskull", "blockhead", "bonehead", "airhead",
             "dunce",     "twit",      "dolt",     "simpleton", "crook",    "fraudster",
             "swine",     "vermin",    "parasite", "coward",    "weasel",   "sleazebag",
             "lowlife",   "degenerate", "slimeball", "knucklehead"});
        return l;
    }();
    return lex;
}

Lexicon load_lexicon(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open lexicon " + path.string());
    json obj = json::parse(in);
    Lexicon l;
    for (auto& [key, value] : obj.items()) {
        if (key == "alpha") {
            l.alpha = value.get<double>();
            continue;
        }
        if (!value.is_array())
            throw std::runtime_error("lexicon category \"" + key + "\" must be an array");
        auto& s = l.terms[key];
        for (const auto& w : value) s.insert(w.get<std::string>());
    }
    if (!l.valid())
        throw std::runtime_error("lexicon " + path.string() +
                                 " must define all 14 categories and alpha > 0");
    return l;
}

std::vector<std::string> tokenize(const std::string& text) {
    std::vector<std::string> tokens;
    std::string cur;
    for (unsigned char c : text) {
        // ASCII alphanumerics plus any non-ASCII codepoint byte form words.
        bool word = std::isalnum(c) != 0 || c >= 0x80 || c == '_';
        if (word) {
            cur += static_cast<char>(std::tolower(c));
        } else if (!cur.empty()) {
            tokens.push_back(std::move(cur));
            cur.clear();
        }
    }
    if (!cur.empty()) tokens.push_back(std::move(cur));
    return tokens;
}

LatentScores analyze_text(const std::string& text, const Lexicon& lexicon) {
    if (!lexicon.valid()) throw std::invalid_argument("invalid lexicon");

    const std::vector<std::string> tokens = tokenize(text);
    std::map<std::string, std::size_t> hits;
    for (const auto& cat : lexicon_categories()) hits[cat] = 0;
    for (const auto& tok : tokens)
        for (const auto& [cat, words] : lexicon.terms)
            if (words.count(tok)) ++hits[cat];

    LatentScores s;
    auto score_group = [&](const std::vector<std::string>& group) {
        double denom = 0;
        for (const auto& cat : group) denom += static_cast<double>(hits[cat]) + lexicon.alpha;
        for (const auto& cat : group)
            field_by_name(s, cat) = (static_cast<double>(hits[cat]) + lexicon.alpha) / denom;
    };
    score_group(sentiment_group());
    score_group(emotion_group());
    score_group(intent_group());
    s.abusive = static_cast<double>(hits["abusive"]) / (static_cast<double>(tokens.size()) + 1.0);
    return s;
}

std::map<std::string, LatentScores> load_scores(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path.string());

    std::map<std::string, LatentScores> out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line.find_first_not_of(" \t\r") == std::string::npos) continue;
        json obj;
        try {
            obj = json::parse(line);
        } catch (const json::exception& e) {
            throw ParseError(path.string(), lineno, std::string("malformed JSON: ") + e.what());
        }
        if (!obj.is_object() || !obj.contains("tweet_id") || !obj["tweet_id"].is_string())
            throw ParseError(path.string(), lineno, "row must be an object with tweet_id");
        const std::string tweet_id = obj["tweet_id"].get<std::string>();

        LatentScores s;
        for (const char* name : LatentScores::field_names()) {
            auto it = obj.find(name);
            if (it == obj.end() || !it->is_number())
                throw ParseError(path.string(), lineno,
                                 "tweet \"" + tweet_id + "\": missing score field \"" + name + "\"");
            double v = it->get<double>();
            if (!(v >= 0.0 && v <= 1.0))
                throw ParseError(path.string(), lineno,
                                 "tweet \"" + tweet_id + "\": field \"" + name +
                                     "\" out of range [0,1]");
            field_by_name(s, name) = v;
        }
        if (!s.valid())
            throw ParseError(path.string(), lineno,
                             "tweet \"" + tweet_id + "\": score groups must each sum to 1");
        if (!out.emplace(tweet_id, s).second)
            throw ParseError(path.string(), lineno, "duplicate tweet_id \"" + tweet_id + "\"");
    }
    return out;
}

void write_scores(const std::map<std::string, LatentScores>& scores,
                  const std::filesystem::path& path) {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    for (const auto& [tweet_id, s] : scores) {
        json obj{{"tweet_id", tweet_id}};
        auto vals = s.values();
        const auto& names = LatentScores::field_names();
        for (std::size_t i = 0; i < names.size(); ++i) obj[names[i]] = vals[i];
        out << obj.dump() << '\n';
    }
}

}  // namespace rumorcast
