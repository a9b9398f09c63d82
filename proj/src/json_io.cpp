#include "sentiflux/json_io.hpp"

#include <algorithm>
#include <vector>

namespace sentiflux {

OrderedJson to_json(const ScoredTweet& tweet) {
    OrderedJson matched = OrderedJson::array();
    for (const MatchedTerm& term : tweet.matched) {
        matched.push_back({{"term", term.term},
                           {"polarity", to_string(term.polarity)},
                           {"strength", to_string(term.strength)}});
    }
    return OrderedJson{{"id", tweet.tweet_id},
                       {"score", tweet.score},
                       {"score_display", static_cast<double>(tweet.score) / 2.0},
                       {"label", to_string(tweet.label)},
                       {"blind_negation", tweet.blind_negation_hit},
                       {"hashtags", tweet.hashtags},
                       {"matched", std::move(matched)},
                       {"negations", tweet.negation_count}};
}

namespace {

OrderedJson opt_json(const std::optional<double>& value) {
    return value ? OrderedJson(*value) : OrderedJson(nullptr);
}

}  // namespace

OrderedJson to_json(const EvalReport& report) {
    OrderedJson per_class;
    for (const SentimentLabel label : kAllLabels) {
        const ClassMetrics& metrics = report.per_class[label_index(label)];
        per_class[std::string(to_string(label))] = {{"precision", opt_json(metrics.precision)},
                                                    {"recall", opt_json(metrics.recall)},
                                                    {"f1", opt_json(metrics.f1)}};
    }
    OrderedJson confusion;
    for (const SentimentLabel gold : kAllLabels) {
        OrderedJson row;
        for (const SentimentLabel predicted : kAllLabels) {
            row[std::string(to_string(predicted))] = report.confusion.at(gold, predicted);
        }
        confusion[std::string(to_string(gold))] = std::move(row);
    }
    return OrderedJson{{"accuracy", opt_json(report.accuracy)},
                       {"per_class", std::move(per_class)},
                       {"confusion", std::move(confusion)},
                       {"n_evaluated", report.n_evaluated},
                       {"n_missing_gold", report.n_missing_gold}};
}

OrderedJson to_json(const LabelCounts& counts) {
    return OrderedJson{{"positive", counts.positive},
                       {"negative", counts.negative},
                       {"neutral", counts.neutral},
                       {"total", counts.total()}};
}

OrderedJson batch_summary_json(const BatchResult& result, std::size_t top_hashtags) {
    std::vector<std::pair<std::string, LabelCounts>> tags(result.agg.per_hashtag.begin(),
                                                          result.agg.per_hashtag.end());
    std::stable_sort(tags.begin(), tags.end(), [](const auto& a, const auto& b) {
        if (a.second.total() != b.second.total()) return a.second.total() > b.second.total();
        return a.first < b.first;
    });
    if (tags.size() > top_hashtags) tags.resize(top_hashtags);

    OrderedJson per_hashtag = OrderedJson::array();
    for (const auto& [tag, counts] : tags) {
        per_hashtag.push_back({{"hashtag", tag},
                               {"positive", counts.positive},
                               {"negative", counts.negative},
                               {"neutral", counts.neutral},
                               {"total", counts.total()}});
    }

    return OrderedJson{{"counts", to_json(result.agg.counts)},
                       {"tweets_processed", result.agg.tweets_processed},
                       {"records_skipped", result.agg.records_skipped},
                       {"distinct_hashtags", result.agg.per_hashtag.size()},
                       {"top_hashtags", std::move(per_hashtag)},
                       {"elapsed_ms", result.elapsed_ms},
                       {"throughput_tps", result.throughput_tps}};
}

OrderedJson lexicon_report_json(const SentimentLexicon& lexicon) {
    OrderedJson polarity_counts;
    for (const char* name : {"positive", "negative", "neutral", "negation", "blindnegation"}) {
        polarity_counts[name] = 0;
    }
    OrderedJson pos_counts;
    for (const char* name : {"adj", "noun", "verb", "advb", "conj", "emoti", "anypos"}) {
        pos_counts[name] = 0;
    }
    OrderedJson strength_counts{{"weaksubj", 0}, {"strongsubj", 0}};
    for (const LexiconEntry& entry : lexicon.sorted_entries()) {
        polarity_counts[std::string(to_string(entry.polarity))] =
            polarity_counts[std::string(to_string(entry.polarity))].get<std::uint64_t>() + 1;
        pos_counts[std::string(to_string(entry.pos))] =
            pos_counts[std::string(to_string(entry.pos))].get<std::uint64_t>() + 1;
        strength_counts[std::string(to_string(entry.strength))] =
            strength_counts[std::string(to_string(entry.strength))].get<std::uint64_t>() + 1;
    }

    OrderedJson duplicates = OrderedJson::array();
    for (const DuplicateNote& note : lexicon.duplicates()) {
        duplicates.push_back({{"surface", note.surface},
                              {"kept_line", note.kept_line},
                              {"dropped_line", note.dropped_line}});
    }
    OrderedJson malformed = OrderedJson::array();
    for (const RowError& error : lexicon.row_errors()) {
        malformed.push_back(
            {{"line", error.line_number}, {"field", error.field}, {"message", error.message}});
    }

    return OrderedJson{{"entry_count", lexicon.entry_count()},
                       {"polarity_counts", std::move(polarity_counts)},
                       {"pos_counts", std::move(pos_counts)},
                       {"strength_counts", std::move(strength_counts)},
                       {"duplicates", std::move(duplicates)},
                       {"malformed_lines", std::move(malformed)},
                       {"warnings", lexicon.warning_log()}};
}

}  // namespace sentiflux
