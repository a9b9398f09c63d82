#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sentiflux/scorer.hpp"

namespace sentiflux {

struct TweetRecord {
    std::string id;  // synthesized "line-N" when the input carries none
    std::string text;
    std::optional<SentimentLabel> gold_label;
    std::optional<std::int64_t> timestamp_ms;

    bool operator==(const TweetRecord&) const = default;
};

enum class InputFormat { Jsonl, Text, LabeledTsv };

std::optional<InputFormat> parse_input_format(std::string_view token);
std::string_view to_string(InputFormat format);

// Single-consumer pull stream of tweet records.
class TweetStream {
public:
    virtual ~TweetStream() = default;
    virtual std::optional<TweetRecord> next() = 0;
    // Malformed records dropped so far (never yielded).
    virtual std::uint64_t records_skipped() const { return 0; }
};

// Streams records out of a line-oriented source one line at a time; memory
// use is bounded by the longest line, not the file size. Malformed records
// are skipped and counted, with the first few diagnostics retained.
class TweetReader : public TweetStream {
public:
    TweetReader(std::istream& in, InputFormat format);

    std::optional<TweetRecord> next() override;
    std::uint64_t records_skipped() const override { return skipped_; }
    const std::vector<std::string>& skip_diagnostics() const { return diagnostics_; }

private:
    std::optional<TweetRecord> parse_line(std::string_view line, std::size_t line_number);
    void note_skip(std::size_t line_number, std::string_view reason);

    std::istream& in_;
    InputFormat format_;
    std::size_t line_number_ = 0;
    std::uint64_t skipped_ = 0;
    std::vector<std::string> diagnostics_;
};

// TweetReader that owns the underlying file handle. Throws std::runtime_error
// when the path cannot be opened.
class FileTweetReader : public TweetStream {
public:
    FileTweetReader(const std::filesystem::path& path, InputFormat format);

    std::optional<TweetRecord> next() override { return reader_->next(); }
    std::uint64_t records_skipped() const override { return reader_->records_skipped(); }
    const std::vector<std::string>& skip_diagnostics() const {
        return reader_->skip_diagnostics();
    }

private:
    std::ifstream file_;
    std::unique_ptr<TweetReader> reader_;
};

// In-memory stream over pre-materialized records; hands each record out once.
class VectorStream : public TweetStream {
public:
    explicit VectorStream(std::vector<TweetRecord> records) : records_(std::move(records)) {}

    std::optional<TweetRecord> next() override {
        if (index_ >= records_.size()) return std::nullopt;
        return std::move(records_[index_++]);
    }

private:
    std::vector<TweetRecord> records_;
    std::size_t index_ = 0;
};

}  // namespace sentiflux
