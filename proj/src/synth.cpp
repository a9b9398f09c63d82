#include "sentiflux/synth.hpp"

#include <array>
#include <stdexcept>

#include "sentiflux/reference_scorer.hpp"

namespace sentiflux {

namespace {

constexpr std::array<const char*, 24> kFillerWords = {
    "the",   "a",        "an",     "of",    "in",   "on",     "it",     "its",
    "this",  "that",     "movie",  "scene", "plot", "acting", "screen", "story",
    "was",   "is",       "were",   "to",    "be",   "with",   "watch",  "tonight",
};

constexpr std::array<const char*, 10> kSubjects = {
    "gravity", "oscars", "netflix", "cinema",  "trailer",
    "weekend", "review", "sequel",  "premiere", "cast",
};

constexpr std::array<const char*, 6> kHandles = {
    "bob", "alice42", "critic_jo", "moviefan", "newsdesk", "a_viewer",
};

}  // namespace

SynthCorpus::SynthCorpus(std::uint64_t n, std::uint64_t seed, const SentimentLexicon& lexicon,
                         NegationMode mode)
    : lexicon_(lexicon),
      mode_(mode),
      emoticons_(lexicon.emoticon_surfaces()),
      remaining_(n),
      rng_(seed) {
    if (lexicon.empty()) throw std::invalid_argument("synth corpus needs a non-empty lexicon");

    // Pools come from the sorted entry list so the draw order never depends
    // on hash-map iteration order.
    for (const LexiconEntry& e : lexicon.sorted_entries()) {
        switch (e.polarity) {
            case Polarity::Negation:
                negation_pool_.push_back(e.surface);
                break;
            case Polarity::BlindNegation:
                blind_pool_.push_back(e.surface);
                break;
            default:
                if (e.pos == PartOfSpeech::Emoticon) {
                    emoticon_pool_.push_back(e.surface);
                } else {
                    sentiment_words_.push_back(e.surface);
                }
                break;
        }
    }
}

std::string SynthCorpus::pick_token() {
    const auto draw = [&](const std::vector<std::string>& pool) -> std::string {
        if (pool.empty()) return kFillerWords[rng_() % kFillerWords.size()];
        return pool[rng_() % pool.size()];
    };

    if (!opinion_tweet_) {
        // Chatter: no sentiment-bearing categories at all.
        const std::uint64_t r = rng_() % 100;
        if (r < 70) return kFillerWords[rng_() % kFillerWords.size()];
        if (r < 85) return std::string("#") + kSubjects[rng_() % kSubjects.size()];
        if (r < 95) return std::string("@") + kHandles[rng_() % kHandles.size()];
        return "http://t.co/" + std::to_string(rng_() % 100000);
    }

    const std::uint64_t r = rng_() % 100;
    if (r < 40) return kFillerWords[rng_() % kFillerWords.size()];
    if (r < 65) return draw(sentiment_words_);
    if (r < 75) return draw(emoticon_pool_);
    if (r < 83) return draw(negation_pool_);
    if (r < 85) return draw(blind_pool_);
    if (r < 94) {
        if (rng_() % 5 == 0 && !sentiment_words_.empty()) {
            return std::string("#") + sentiment_words_[rng_() % sentiment_words_.size()];
        }
        return std::string("#") + kSubjects[rng_() % kSubjects.size()];
    }
    if (r < 97) return std::string("@") + kHandles[rng_() % kHandles.size()];
    return "http://t.co/" + std::to_string(rng_() % 100000);
}

std::optional<TweetRecord> SynthCorpus::next() {
    if (remaining_ == 0) return std::nullopt;
    --remaining_;
    ++produced_;

    opinion_tweet_ = rng_() % 10 >= 3;
    const std::uint64_t token_count = 5 + rng_() % 16;

    std::string text;
    for (std::uint64_t i = 0; i < token_count; ++i) {
        if (i > 0) text += ' ';
        text += pick_token();
    }

    TweetRecord record;
    record.id = "synth-" + std::to_string(produced_);
    record.text = std::move(text);

    const std::vector<Token> tokens = tokenize(record.text, emoticons_);
    record.gold_label = reference::score(tokens, lexicon_, mode_, true).label;
    return record;
}

std::vector<TweetRecord> synth_corpus(std::uint64_t n, std::uint64_t seed,
                                      const SentimentLexicon& lexicon, NegationMode mode) {
    std::vector<TweetRecord> out;
    out.reserve(n);
    SynthCorpus stream(n, seed, lexicon, mode);
    while (auto record = stream.next()) out.push_back(std::move(*record));
    return out;
}

}  // namespace sentiflux
