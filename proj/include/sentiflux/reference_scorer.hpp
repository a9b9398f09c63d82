#pragma once

#include <span>
#include <string>

#include "sentiflux/lexicon.hpp"
#include "sentiflux/scorer.hpp"
#include "sentiflux/tokenizer.hpp"

namespace sentiflux::reference {

// Deliberately plain re-implementation of the scoring loop, kept separate
// from the production scorer so the two can cross-check each other. It is
// also the labeler for synthetic corpora. Uses +-1.0 / +-0.5 double steps;
// the production half-unit score equals 2 * senti_score.
struct ReferenceResult {
    double senti_score = 0.0;
    SentimentLabel label = SentimentLabel::Neutral;
    bool blind_negation = false;
};

ReferenceResult score(std::span<const Token> tokens, const SentimentLexicon& lexicon,
                      NegationMode mode, bool score_hashtag_words = true);

}  // namespace sentiflux::reference
