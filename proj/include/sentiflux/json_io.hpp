#pragma once

#include <cstdint>
#include <string>

#include "json.hpp"
#include "sentiflux/evaluate.hpp"
#include "sentiflux/lexicon.hpp"
#include "sentiflux/pipeline.hpp"
#include "sentiflux/scorer.hpp"

namespace sentiflux {

using OrderedJson = nlohmann::ordered_json;

// One JSONL result line. `score` is integer half-units; `score_display` is
// the conventional scale (half-units / 2).
OrderedJson to_json(const ScoredTweet& tweet);

// Field names: accuracy, per_class, confusion, n_evaluated, n_missing_gold.
// Undefined metrics are emitted as null, never as 0.
OrderedJson to_json(const EvalReport& report);

OrderedJson to_json(const LabelCounts& counts);

// Aggregate summary with per-hashtag tables sorted by total (descending,
// ties lexicographic), truncated to top_hashtags entries.
OrderedJson batch_summary_json(const BatchResult& result, std::size_t top_hashtags);

// Validation report for lexicon-check.
OrderedJson lexicon_report_json(const SentimentLexicon& lexicon);

}  // namespace sentiflux
