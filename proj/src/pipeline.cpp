#include "sentiflux/pipeline.hpp"

#include <atomic>
#include <chrono>
#include <condition_variable>
#include <deque>
#include <exception>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <vector>

#include "sentiflux/synth.hpp"
#include "sentiflux/tokenizer.hpp"

namespace sentiflux {

void LabelCounts::add(SentimentLabel label) {
    switch (label) {
        case SentimentLabel::Positive: ++positive; break;
        case SentimentLabel::Negative: ++negative; break;
        case SentimentLabel::Neutral: ++neutral; break;
    }
}

LabelCounts& LabelCounts::operator+=(const LabelCounts& other) {
    positive += other.positive;
    negative += other.negative;
    neutral += other.neutral;
    return *this;
}

void BatchPartial::add(const ScoredTweet& tweet) {
    counts.add(tweet.label);
    for (const std::string& tag : tweet.hashtags) per_hashtag[tag].add(tweet.label);
    ++tweets_processed;
}

BatchPartial merge(BatchPartial a, const BatchPartial& b) {
    a.counts += b.counts;
    for (const auto& [tag, counts] : b.per_hashtag) a.per_hashtag[tag] += counts;
    a.tweets_processed += b.tweets_processed;
    a.records_skipped += b.records_skipped;
    return a;
}

ScoredSink serializing_sink(ScoredSink inner) {
    auto mutex = std::make_shared<std::mutex>();
    return [mutex, inner = std::move(inner)](std::uint64_t seq, const ScoredTweet& tweet) {
        const std::lock_guard<std::mutex> lock(*mutex);
        inner(seq, tweet);
    };
}

ScoredSink ordering_sink(ScoredSink inner) {
    struct State {
        std::mutex mutex;
        std::uint64_t next_seq = 0;
        std::map<std::uint64_t, ScoredTweet> pending;
    };
    auto state = std::make_shared<State>();
    return [state, inner = std::move(inner)](std::uint64_t seq, const ScoredTweet& tweet) {
        const std::lock_guard<std::mutex> lock(state->mutex);
        if (seq != state->next_seq) {
            state->pending.emplace(seq, tweet);
            return;
        }
        inner(seq, tweet);
        ++state->next_seq;
        while (!state->pending.empty() && state->pending.begin()->first == state->next_seq) {
            inner(state->next_seq, state->pending.begin()->second);
            state->pending.erase(state->pending.begin());
            ++state->next_seq;
        }
    };
}

namespace {

struct Chunk {
    std::uint64_t base_seq = 0;
    std::vector<TweetRecord> records;
};

// Single-producer multi-consumer queue with back-pressure.
class ChunkQueue {
public:
    explicit ChunkQueue(std::size_t capacity) : capacity_(capacity) {}

    void push(Chunk&& chunk) {
        std::unique_lock<std::mutex> lock(mutex_);
        not_full_.wait(lock, [&] { return queue_.size() < capacity_ || closed_; });
        if (closed_) return;
        queue_.push_back(std::move(chunk));
        not_empty_.notify_one();
    }

    std::optional<Chunk> pop() {
        std::unique_lock<std::mutex> lock(mutex_);
        not_empty_.wait(lock, [&] { return !queue_.empty() || closed_; });
        if (queue_.empty()) return std::nullopt;
        Chunk chunk = std::move(queue_.front());
        queue_.pop_front();
        not_full_.notify_one();
        return chunk;
    }

    void close() {
        const std::lock_guard<std::mutex> lock(mutex_);
        closed_ = true;
        not_empty_.notify_all();
        not_full_.notify_all();
    }

private:
    std::mutex mutex_;
    std::condition_variable not_full_;
    std::condition_variable not_empty_;
    std::deque<Chunk> queue_;
    std::size_t capacity_;
    bool closed_ = false;
};

}  // namespace

BatchResult run_batch(TweetStream& tweets, const SentimentLexicon& lexicon,
                      const RunOptions& options, const ScoredSink& sink) {
    if (options.parallelism < 1) throw std::invalid_argument("parallelism must be >= 1");
    if (options.chunk_size < 1) throw std::invalid_argument("chunk_size must be >= 1");

    const auto start = std::chrono::steady_clock::now();
    const EmoticonSet emoticons(lexicon.emoticon_surfaces());

    const unsigned workers = options.parallelism;
    ChunkQueue queue(static_cast<std::size_t>(workers) * 4);
    std::vector<BatchPartial> partials(workers);
    std::atomic<bool> abort{false};
    std::exception_ptr first_error;
    std::mutex error_mutex;

    const auto record_error = [&] {
        const std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
        abort.store(true, std::memory_order_relaxed);
    };

    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            BatchPartial& local = partials[w];
            while (auto chunk = queue.pop()) {
                if (abort.load(std::memory_order_relaxed)) continue;  // drain
                try {
                    std::uint64_t seq = chunk->base_seq;
                    for (const TweetRecord& record : chunk->records) {
                        const std::vector<Token> tokens = tokenize(record.text, emoticons);
                        const ScoredTweet scored = score_tweet(record.id, tokens, lexicon,
                                                               options.mode,
                                                               options.score_hashtag_words);
                        local.add(scored);
                        if (sink) sink(seq, scored);
                        ++seq;
                    }
                } catch (...) {
                    record_error();
                }
            }
        });
    }

    std::uint64_t next_seq = 0;
    try {
        Chunk chunk;
        chunk.base_seq = 0;
        chunk.records.reserve(options.chunk_size);
        while (!abort.load(std::memory_order_relaxed)) {
            auto record = tweets.next();
            if (!record) break;
            chunk.records.push_back(std::move(*record));
            ++next_seq;
            if (chunk.records.size() >= options.chunk_size) {
                queue.push(std::move(chunk));
                chunk = Chunk{};
                chunk.base_seq = next_seq;
                chunk.records.reserve(options.chunk_size);
            }
        }
        if (!chunk.records.empty() && !abort.load(std::memory_order_relaxed)) {
            queue.push(std::move(chunk));
        }
    } catch (...) {
        record_error();
    }

    queue.close();
    for (std::thread& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);

    BatchResult result;
    for (const BatchPartial& partial : partials) result.agg = merge(std::move(result.agg), partial);
    result.agg.records_skipped += tweets.records_skipped();

    const auto elapsed = std::chrono::steady_clock::now() - start;
    const auto ns = std::chrono::duration_cast<std::chrono::nanoseconds>(elapsed).count();
    result.elapsed_ms = static_cast<double>(ns) / 1e6;
    result.throughput_tps =
        ns > 0 ? static_cast<double>(result.agg.tweets_processed) * 1e9 / static_cast<double>(ns)
               : 0.0;
    return result;
}

BatchResult benchmark_corpus(std::uint64_t n, std::uint64_t seed, const SentimentLexicon& lexicon,
                             const RunOptions& options) {
    VectorStream stream(synth_corpus(n, seed, lexicon, options.mode));
    return run_batch(stream, lexicon, options);
}

}  // namespace sentiflux
