#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sentiflux/lexicon.hpp"
#include "sentiflux/tokenizer.hpp"

namespace sentiflux {

// Scores are integer half-units: a strong entry contributes +-2, a weak one
// +-1. Display values are half-units / 2.
using SentiScore = std::int64_t;

enum class SentimentLabel { Positive, Negative, Neutral };

// Literal flips the running total at each negation token; FinalFlip negates
// the final total when the tweet contains an odd number of negation tokens.
enum class NegationMode { Literal, FinalFlip };

std::string_view to_string(SentimentLabel label);
std::string_view to_string(NegationMode mode);
std::optional<SentimentLabel> parse_label(std::string_view token);
std::optional<NegationMode> parse_negation_mode(std::string_view token);

struct MatchedTerm {
    std::string term;
    Polarity polarity = Polarity::Neutral;
    Strength strength = Strength::WeakSubj;

    bool operator==(const MatchedTerm&) const = default;
};

struct ScoredTweet {
    std::string tweet_id;
    SentiScore score = 0;
    SentimentLabel label = SentimentLabel::Neutral;
    bool blind_negation_hit = false;
    std::vector<MatchedTerm> matched;
    std::vector<std::string> hashtags;
    std::uint32_t negation_count = 0;

    bool operator==(const ScoredTweet&) const = default;
};

// Half-unit contribution of a sentiment entry. Pre: polarity is Positive,
// Negative, or Neutral.
SentiScore word_contribution(const LexiconEntry& entry);

// value > 0 -> Positive, < 0 -> Negative, 0 -> Neutral.
SentimentLabel label_from_score(SentiScore score);

// Scores one tokenized tweet against the lexicon. Mentions and urls are never
// looked up; hashtag inner words are looked up when score_hashtag_words is
// set. A blind-negation match stops the scan: the label is forced Negative
// and the score stays frozen at its value so far.
ScoredTweet score_tweet(std::string_view tweet_id, std::span<const Token> tokens,
                        const SentimentLexicon& lexicon, NegationMode mode,
                        bool score_hashtag_words = true);

}  // namespace sentiflux
