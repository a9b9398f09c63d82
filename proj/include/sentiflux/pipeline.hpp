#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>

#include "sentiflux/ingest.hpp"
#include "sentiflux/lexicon.hpp"
#include "sentiflux/scorer.hpp"

namespace sentiflux {

struct LabelCounts {
    std::uint64_t positive = 0;
    std::uint64_t negative = 0;
    std::uint64_t neutral = 0;

    std::uint64_t total() const { return positive + negative + neutral; }
    void add(SentimentLabel label);
    LabelCounts& operator+=(const LabelCounts& other);

    bool operator==(const LabelCounts&) const = default;
};

// Order-independent aggregate over a set of records. Merging partials is a
// commutative monoid: pointwise sums with the default-constructed partial as
// identity.
struct BatchPartial {
    LabelCounts counts;
    std::map<std::string, LabelCounts> per_hashtag;
    std::uint64_t tweets_processed = 0;
    std::uint64_t records_skipped = 0;

    void add(const ScoredTweet& tweet);

    bool operator==(const BatchPartial&) const = default;
};

BatchPartial merge(BatchPartial a, const BatchPartial& b);

struct BatchResult {
    BatchPartial agg;
    double elapsed_ms = 0.0;
    double throughput_tps = 0.0;
};

// Receives each scored tweet exactly once, in arbitrary order. `seq` is the
// record's 0-based position in the input stream. May be invoked concurrently
// from several workers; wrap with serializing_sink or ordering_sink when the
// callee is not thread-safe.
using ScoredSink = std::function<void(std::uint64_t seq, const ScoredTweet& tweet)>;

// Serializes concurrent sink calls with a mutex; delivery order unspecified.
ScoredSink serializing_sink(ScoredSink inner);

// Serializes and reorders delivery into input order (seq 0, 1, 2, ...).
// Buffers only the in-flight window, so memory stays bounded.
ScoredSink ordering_sink(ScoredSink inner);

struct RunOptions {
    NegationMode mode = NegationMode::FinalFlip;
    unsigned parallelism = 1;
    bool score_hashtag_words = true;
    std::size_t chunk_size = 1024;
};

// Tokenizes and scores every record of the stream across a pool of
// `parallelism` workers and merges the per-worker aggregates. The aggregate
// is identical for any parallelism value. Sink exceptions abort the run and
// are rethrown after the pool drains.
BatchResult run_batch(TweetStream& tweets, const SentimentLexicon& lexicon,
                      const RunOptions& options, const ScoredSink& sink = {});

// Scores a pre-materialized synthetic corpus so that elapsed time covers
// scoring plus aggregation only, not generation.
BatchResult benchmark_corpus(std::uint64_t n, std::uint64_t seed, const SentimentLexicon& lexicon,
                             const RunOptions& options);

}  // namespace sentiflux
