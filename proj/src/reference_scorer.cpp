#include "sentiflux/reference_scorer.hpp"

namespace sentiflux::reference {

ReferenceResult score(std::span<const Token> tokens, const SentimentLexicon& lexicon,
                      NegationMode mode, bool score_hashtag_words) {
    double senti_score = 0.0;
    int negations = 0;

    for (const Token& token : tokens) {
        if (token.kind == TokenKind::Mention) continue;
        if (token.kind == TokenKind::Url) continue;
        if (token.kind == TokenKind::Hashtag && !score_hashtag_words) continue;

        const LexiconEntry* entry = lexicon.lookup(token.surface);
        if (entry == nullptr) continue;

        if (entry->polarity == Polarity::BlindNegation) {
            ReferenceResult out;
            out.senti_score = senti_score;
            out.label = SentimentLabel::Negative;
            out.blind_negation = true;
            return out;
        }
        if (entry->polarity == Polarity::Positive && entry->strength == Strength::StrongSubj) {
            senti_score = senti_score + 1;
        } else if (entry->polarity == Polarity::Positive && entry->strength == Strength::WeakSubj) {
            senti_score = senti_score + 0.5;
        } else if (entry->polarity == Polarity::Negative && entry->strength == Strength::StrongSubj) {
            senti_score = senti_score - 1;
        } else if (entry->polarity == Polarity::Negative && entry->strength == Strength::WeakSubj) {
            senti_score = senti_score - 0.5;
        }
        if (entry->polarity == Polarity::Negation) {
            if (mode == NegationMode::Literal) {
                senti_score = senti_score * -1;
            } else {
                negations = negations + 1;
            }
        }
    }

    if (mode == NegationMode::FinalFlip && negations % 2 == 1) senti_score = senti_score * -1;

    ReferenceResult out;
    out.senti_score = senti_score;
    if (senti_score > 0) {
        out.label = SentimentLabel::Positive;
    } else if (senti_score < 0) {
        out.label = SentimentLabel::Negative;
    } else {
        out.label = SentimentLabel::Neutral;
    }
    return out;
}

}  // namespace sentiflux::reference
