#include <random>

#include "doctest.h"
#include "sentiflux/lexicon.hpp"
#include "sentiflux/reference_scorer.hpp"
#include "sentiflux/scorer.hpp"
#include "sentiflux/tokenizer.hpp"

using namespace sentiflux;

namespace {

const SentimentLexicon& plus_lexicon() {
    static const SentimentLexicon lexicon =
        load_lexicon_file(std::string(SENTIFLUX_DATA_DIR) + "/table1_plus.lex");
    return lexicon;
}

ScoredTweet score_text(std::string_view text, NegationMode mode,
                       bool score_hashtag_words = true) {
    const EmoticonSet emoticons(plus_lexicon().emoticon_surfaces());
    const auto tokens = tokenize(text, emoticons);
    return score_tweet("t", tokens, plus_lexicon(), mode, score_hashtag_words);
}

}  // namespace

TEST_CASE("word_contribution covers both strengths and neutral") {
    const auto entry = [](Polarity p, Strength s) {
        return LexiconEntry{"w", s, PartOfSpeech::Any, false, p};
    };
    CHECK(word_contribution(entry(Polarity::Positive, Strength::StrongSubj)) == 2);
    CHECK(word_contribution(entry(Polarity::Positive, Strength::WeakSubj)) == 1);
    CHECK(word_contribution(entry(Polarity::Negative, Strength::StrongSubj)) == -2);
    CHECK(word_contribution(entry(Polarity::Negative, Strength::WeakSubj)) == -1);
    CHECK(word_contribution(entry(Polarity::Neutral, Strength::StrongSubj)) == 0);
}

TEST_CASE("label_from_score is sign-exact") {
    CHECK(label_from_score(1) == SentimentLabel::Positive);
    CHECK(label_from_score(0) == SentimentLabel::Neutral);
    CHECK(label_from_score(-2) == SentimentLabel::Negative);

    std::mt19937 rng(7);
    for (int i = 0; i < 1000; ++i) {
        const SentiScore s = static_cast<SentiScore>(rng() % 2001) - 1000;
        CHECK(label_from_score(s) == label_from_score(2 * s));
    }
}

TEST_CASE("blind negation stops the scan and forces negative") {
    for (const NegationMode mode : {NegationMode::Literal, NegationMode::FinalFlip}) {
        const auto result = score_text("the acting needed to be better", mode);
        CHECK(result.blind_negation_hit);
        CHECK(result.label == SentimentLabel::Negative);
        CHECK(result.score == 0);  // frozen before "better" is reached
        REQUIRE(result.matched.size() == 1);
        CHECK(result.matched[0].term == "needed");
        CHECK(result.matched[0].polarity == Polarity::BlindNegation);
    }
}

TEST_CASE("negation modes disagree on 'the movie was not good'") {
    const auto literal = score_text("the movie was not good", NegationMode::Literal);
    CHECK_FALSE(literal.blind_negation_hit);
    CHECK(literal.score == 2);
    CHECK(literal.label == SentimentLabel::Positive);
    CHECK(literal.negation_count == 1);

    const auto flipped = score_text("the movie was not good", NegationMode::FinalFlip);
    CHECK(flipped.score == -2);
    CHECK(flipped.label == SentimentLabel::Negative);
    CHECK(flipped.negation_count == 1);
}

TEST_CASE("weak word and strong emoticon accumulate") {
    for (const NegationMode mode : {NegationMode::Literal, NegationMode::FinalFlip}) {
        const auto result = score_text("abandoned :(", mode);
        CHECK(result.score == -3);
        CHECK(result.label == SentimentLabel::Negative);
        REQUIRE(result.matched.size() == 2);
        CHECK(result.matched[0].term == "abandoned");
        CHECK(result.matched[1].term == ":(");
    }
}

TEST_CASE("empty tweet is neutral") {
    const auto result = score_text("", NegationMode::Literal);
    CHECK(result.score == 0);
    CHECK(result.label == SentimentLabel::Neutral);
    CHECK(result.matched.empty());
    CHECK(result.hashtags.empty());
}

TEST_CASE("literal mode flips at each negation encounter") {
    const auto result = score_text("neither good nor good", NegationMode::Literal);
    CHECK(result.score == 0);
    CHECK(result.label == SentimentLabel::Neutral);
    CHECK(result.negation_count == 2);
}

TEST_CASE("final-flip mode cancels an even negation count") {
    const auto result = score_text("neither good nor good", NegationMode::FinalFlip);
    CHECK(result.score == 4);
    CHECK(result.label == SentimentLabel::Positive);
}

TEST_CASE("duplicate tokens contribute independently") {
    const auto result = score_text("good good", NegationMode::Literal);
    CHECK(result.score == 4);
}

TEST_CASE("mentions and urls never match the lexicon") {
    // "good" appears as a mention body and inside a url; neither is scored.
    const auto result = score_text("@good http://good.example", NegationMode::Literal);
    CHECK(result.score == 0);
    CHECK(result.matched.empty());
}

TEST_CASE("hashtag words score only when enabled") {
    const auto on = score_text("#good", NegationMode::Literal, true);
    CHECK(on.score == 2);
    CHECK(on.label == SentimentLabel::Positive);
    CHECK(on.hashtags == std::vector<std::string>{"good"});

    const auto off = score_text("#good", NegationMode::Literal, false);
    CHECK(off.score == 0);
    CHECK(off.label == SentimentLabel::Neutral);
    CHECK(off.hashtags == std::vector<std::string>{"good"});  // still extracted as subject
}

TEST_CASE("hashtags are collected even past a blind negation stop") {
    const auto result = score_text("needed #gravity", NegationMode::Literal);
    CHECK(result.blind_negation_hit);
    CHECK(result.hashtags == std::vector<std::string>{"gravity"});
}

TEST_CASE("neutral entries count as matches but add nothing") {
    const std::vector<std::string> lines = {
        "weaksubj\tokay\tadj\tn\tneutral",
    };
    const auto lexicon = load_lexicon(std::span<const std::string>(lines));
    const EmoticonSet emoticons(lexicon.emoticon_surfaces());
    const auto tokens = tokenize("okay okay", emoticons);
    const auto result = score_tweet("t", tokens, lexicon, NegationMode::Literal, true);
    CHECK(result.score == 0);
    CHECK(result.label == SentimentLabel::Neutral);
    CHECK(result.matched.size() == 2);
}

TEST_CASE("score_tweet is pure") {
    const auto a = score_text("neither good nor abandoned :( #good", NegationMode::FinalFlip);
    const auto b = score_text("neither good nor abandoned :( #good", NegationMode::FinalFlip);
    CHECK(a == b);
}

TEST_CASE("unmatched tokens are inert") {
    std::mt19937 rng(99);
    const std::vector<std::string> oov = {"zzz", "qqq", "xyzzy", "blorp", "fnord"};
    const std::string base = "neither good nor abandoned :)";
    const auto expected = score_text(base, NegationMode::Literal);

    for (int iter = 0; iter < 200; ++iter) {
        std::vector<std::string> words = {"neither", "good", "nor", "abandoned", ":)"};
        const int inserts = 1 + static_cast<int>(rng() % 4);
        for (int i = 0; i < inserts; ++i) {
            words.insert(words.begin() + static_cast<long>(rng() % (words.size() + 1)),
                         oov[rng() % oov.size()]);
        }
        std::string text;
        for (const std::string& w : words) {
            if (!text.empty()) text += ' ';
            text += w;
        }
        const auto padded = score_text(text, NegationMode::Literal);
        CHECK(padded.score == expected.score);
        CHECK(padded.label == expected.label);
        CHECK(padded.matched == expected.matched);
        CHECK(padded.negation_count == expected.negation_count);
    }
}

TEST_CASE("reference scorer agrees with the production scorer on the worked examples") {
    const EmoticonSet emoticons(plus_lexicon().emoticon_surfaces());
    const std::vector<std::string> texts = {
        "the acting needed to be better",
        "the movie was not good",
        "abandoned :(",
        "",
        "neither good nor good",
        "#good :) not",
    };
    for (const std::string& text : texts) {
        const auto tokens = tokenize(text, emoticons);
        for (const NegationMode mode : {NegationMode::Literal, NegationMode::FinalFlip}) {
            const auto fast = score_tweet("t", tokens, plus_lexicon(), mode, true);
            const auto ref = reference::score(tokens, plus_lexicon(), mode, true);
            CHECK(fast.label == ref.label);
            CHECK(fast.blind_negation_hit == ref.blind_negation);
            CHECK(static_cast<double>(fast.score) == doctest::Approx(2.0 * ref.senti_score));
        }
    }
}
