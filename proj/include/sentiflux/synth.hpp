#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "sentiflux/ingest.hpp"
#include "sentiflux/lexicon.hpp"
#include "sentiflux/scorer.hpp"
#include "sentiflux/tokenizer.hpp"

namespace sentiflux {

// Deterministic generator of synthetic tweets with gold labels. Tweets mix
// lexicon words, emoticons, negations, blind negations, hashtags, mentions,
// urls, and out-of-vocabulary filler; each is 5-20 tokens. The gold label is
// computed by the reference scorer under `mode`, with hashtag words scored.
// Identical (n, seed, lexicon, mode) produce byte-identical corpora.
class SynthCorpus : public TweetStream {
public:
    SynthCorpus(std::uint64_t n, std::uint64_t seed, const SentimentLexicon& lexicon,
                NegationMode mode);

    std::optional<TweetRecord> next() override;

private:
    std::string pick_token();

    const SentimentLexicon& lexicon_;
    NegationMode mode_;
    EmoticonSet emoticons_;
    std::uint64_t remaining_;
    std::uint64_t produced_ = 0;
    std::mt19937_64 rng_;
    bool opinion_tweet_ = false;

    std::vector<std::string> sentiment_words_;
    std::vector<std::string> emoticon_pool_;
    std::vector<std::string> negation_pool_;
    std::vector<std::string> blind_pool_;
};

// Materializes the whole corpus up front.
std::vector<TweetRecord> synth_corpus(std::uint64_t n, std::uint64_t seed,
                                      const SentimentLexicon& lexicon, NegationMode mode);

}  // namespace sentiflux
