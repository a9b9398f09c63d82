#include <sstream>

#include "doctest.h"
#include "sentiflux/ingest.hpp"
#include "sentiflux/lexicon.hpp"
#include "sentiflux/reference_scorer.hpp"
#include "sentiflux/scorer.hpp"
#include "sentiflux/synth.hpp"
#include "sentiflux/tokenizer.hpp"

using namespace sentiflux;

namespace {

std::vector<TweetRecord> drain(TweetStream& stream) {
    std::vector<TweetRecord> out;
    while (auto record = stream.next()) out.push_back(std::move(*record));
    return out;
}

const SentimentLexicon& demo_lexicon() {
    static const SentimentLexicon lexicon =
        load_lexicon_file(std::string(SENTIFLUX_DATA_DIR) + "/demo.lex");
    return lexicon;
}

}  // namespace

TEST_CASE("jsonl reader maps fields and synthesizes ids") {
    std::istringstream in(
        "{\"id\":\"42\",\"text\":\"abandoned :(\"}\n"
        "{\"text\":\"no id here\",\"timestamp_ms\":1700000000123}\n"
        "{\"text\":\"with gold\",\"label\":\"negative\"}\n");
    TweetReader reader(in, InputFormat::Jsonl);
    const auto records = drain(reader);
    REQUIRE(records.size() == 3);
    CHECK(records[0].id == "42");
    CHECK(records[0].text == "abandoned :(");
    CHECK_FALSE(records[0].gold_label.has_value());
    CHECK(records[1].id == "line-2");
    CHECK(records[1].timestamp_ms == 1700000000123);
    CHECK(records[2].gold_label == SentimentLabel::Negative);
    CHECK(reader.records_skipped() == 0);
}

TEST_CASE("jsonl reader skips malformed records with diagnostics") {
    std::istringstream in(
        "{\"text\":\"fine\"}\n"
        "not json at all\n"
        "{\"no_text\":1}\n"
        "{\"text\":42}\n"
        "{\"text\":\"ok\",\"label\":\"sideways\"}\n"
        "{\"text\":\"also fine\"}\n");
    TweetReader reader(in, InputFormat::Jsonl);
    const auto records = drain(reader);
    CHECK(records.size() == 2);
    CHECK(reader.records_skipped() == 4);
    CHECK(records.size() + reader.records_skipped() == 6);
    REQUIRE(reader.skip_diagnostics().size() == 4);
    CHECK(reader.skip_diagnostics()[0].find("line 2") != std::string::npos);
}

TEST_CASE("text reader synthesizes line ids and keeps empty tweets") {
    std::istringstream in("first tweet\n\nthe acting needed to be better\n");
    TweetReader reader(in, InputFormat::Text);
    const auto records = drain(reader);
    REQUIRE(records.size() == 3);
    CHECK(records[0].id == "line-1");
    CHECK(records[1].text.empty());
    CHECK(records[2].id == "line-3");
    CHECK(records[2].text == "the acting needed to be better");
}

TEST_CASE("labeled-tsv reader parses gold labels") {
    std::istringstream in(
        "negative\tthe movie was not good\n"
        "positive\tloved it\n"
        "sideways\tbad label\n"
        "no tab\n"
        "neutral\t\n");
    TweetReader reader(in, InputFormat::LabeledTsv);
    const auto records = drain(reader);
    REQUIRE(records.size() == 3);
    CHECK(records[0].gold_label == SentimentLabel::Negative);
    CHECK(records[0].text == "the movie was not good");
    CHECK(records[2].text.empty());
    CHECK(reader.records_skipped() == 2);
}

TEST_CASE("crlf line endings are stripped") {
    std::istringstream in("positive\tgood one\r\n");
    TweetReader reader(in, InputFormat::LabeledTsv);
    const auto records = drain(reader);
    REQUIRE(records.size() == 1);
    CHECK(records[0].text == "good one");
}

TEST_CASE("file reader throws on a missing path") {
    CHECK_THROWS_AS(FileTweetReader("/nonexistent/tweets.jsonl", InputFormat::Text),
                    std::runtime_error);
}

TEST_CASE("synth corpus with n=0 is empty") {
    SynthCorpus stream(0, 7, demo_lexicon(), NegationMode::FinalFlip);
    CHECK_FALSE(stream.next().has_value());
}

TEST_CASE("synth corpus rejects an empty lexicon") {
    const SentimentLexicon empty;
    CHECK_THROWS_AS(SynthCorpus(1, 1, empty, NegationMode::FinalFlip), std::invalid_argument);
}

TEST_CASE("synth corpus is deterministic") {
    const auto a = synth_corpus(1000, 7, demo_lexicon(), NegationMode::FinalFlip);
    const auto b = synth_corpus(1000, 7, demo_lexicon(), NegationMode::FinalFlip);
    CHECK(a == b);

    const auto c = synth_corpus(1000, 8, demo_lexicon(), NegationMode::FinalFlip);
    CHECK(a != c);
}

TEST_CASE("synth corpus covers all three labels and stays within 5-20 tokens") {
    const auto corpus = synth_corpus(200, 11, demo_lexicon(), NegationMode::FinalFlip);
    REQUIRE(corpus.size() == 200);
    std::size_t positive = 0, negative = 0, neutral = 0;
    for (const TweetRecord& record : corpus) {
        REQUIRE(record.gold_label.has_value());
        switch (*record.gold_label) {
            case SentimentLabel::Positive: ++positive; break;
            case SentimentLabel::Negative: ++negative; break;
            case SentimentLabel::Neutral: ++neutral; break;
        }
        // Generator tokens are space-joined, so spaces + 1 counts them.
        const auto spaces = std::count(record.text.begin(), record.text.end(), ' ');
        CHECK(spaces + 1 >= 5);
        CHECK(spaces + 1 <= 20);
    }
    CHECK(positive > 0);
    CHECK(negative > 0);
    CHECK(neutral > 0);
}

TEST_CASE("synth gold labels match the production scorer in the matching mode") {
    for (const NegationMode mode : {NegationMode::Literal, NegationMode::FinalFlip}) {
        const auto corpus = synth_corpus(500, 3, demo_lexicon(), mode);
        const EmoticonSet emoticons(demo_lexicon().emoticon_surfaces());
        for (const TweetRecord& record : corpus) {
            const auto tokens = tokenize(record.text, emoticons);
            const auto scored = score_tweet(record.id, tokens, demo_lexicon(), mode, true);
            CHECK(scored.label == *record.gold_label);
        }
    }
}
