#include "sentiflux/scorer.hpp"

#include <cassert>

namespace sentiflux {

std::string_view to_string(SentimentLabel label) {
    switch (label) {
        case SentimentLabel::Positive: return "positive";
        case SentimentLabel::Negative: return "negative";
        case SentimentLabel::Neutral: return "neutral";
    }
    return "?";
}

std::string_view to_string(NegationMode mode) {
    return mode == NegationMode::Literal ? "literal" : "final-flip";
}

std::optional<SentimentLabel> parse_label(std::string_view token) {
    if (token == "positive") return SentimentLabel::Positive;
    if (token == "negative") return SentimentLabel::Negative;
    if (token == "neutral") return SentimentLabel::Neutral;
    return std::nullopt;
}

std::optional<NegationMode> parse_negation_mode(std::string_view token) {
    if (token == "literal") return NegationMode::Literal;
    if (token == "final-flip") return NegationMode::FinalFlip;
    return std::nullopt;
}

SentiScore word_contribution(const LexiconEntry& entry) {
    assert(entry.polarity == Polarity::Positive || entry.polarity == Polarity::Negative ||
           entry.polarity == Polarity::Neutral);
    const SentiScore magnitude = entry.strength == Strength::StrongSubj ? 2 : 1;
    switch (entry.polarity) {
        case Polarity::Positive: return magnitude;
        case Polarity::Negative: return -magnitude;
        default: return 0;
    }
}

SentimentLabel label_from_score(SentiScore score) {
    if (score > 0) return SentimentLabel::Positive;
    if (score < 0) return SentimentLabel::Negative;
    return SentimentLabel::Neutral;
}

ScoredTweet score_tweet(std::string_view tweet_id, std::span<const Token> tokens,
                        const SentimentLexicon& lexicon, NegationMode mode,
                        bool score_hashtag_words) {
    ScoredTweet result;
    result.tweet_id = std::string(tweet_id);
    result.hashtags = extract_hashtags(tokens);

    SentiScore score = 0;
    for (const Token& token : tokens) {
        switch (token.kind) {
            case TokenKind::Mention:
            case TokenKind::Url:
                continue;
            case TokenKind::Hashtag:
                if (!score_hashtag_words) continue;
                break;
            case TokenKind::Word:
            case TokenKind::Emoticon:
                break;
        }

        const LexiconEntry* entry = lexicon.lookup(token.surface);
        if (entry == nullptr) continue;
        result.matched.push_back({token.surface, entry->polarity, entry->strength});

        if (entry->polarity == Polarity::BlindNegation) {
            result.blind_negation_hit = true;
            break;
        }
        if (entry->polarity == Polarity::Negation) {
            ++result.negation_count;
            if (mode == NegationMode::Literal) score = -score;
            continue;
        }
        score += word_contribution(*entry);
    }

    if (result.blind_negation_hit) {
        result.score = score;
        result.label = SentimentLabel::Negative;
        return result;
    }
    if (mode == NegationMode::FinalFlip && result.negation_count % 2 == 1) score = -score;
    result.score = score;
    result.label = label_from_score(score);
    return result;
}

}  // namespace sentiflux
