#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>

#include "sentiflux/scorer.hpp"

namespace sentiflux {

inline constexpr std::array<SentimentLabel, 3> kAllLabels = {
    SentimentLabel::Positive, SentimentLabel::Negative, SentimentLabel::Neutral};

inline std::size_t label_index(SentimentLabel label) { return static_cast<std::size_t>(label); }

// 3x3 gold-vs-predicted tallies. Cells merge by pointwise addition.
struct ConfusionMatrix {
    std::array<std::array<std::uint64_t, 3>, 3> cells{};  // [gold][predicted]

    std::uint64_t& at(SentimentLabel gold, SentimentLabel predicted) {
        return cells[label_index(gold)][label_index(predicted)];
    }
    std::uint64_t at(SentimentLabel gold, SentimentLabel predicted) const {
        return cells[label_index(gold)][label_index(predicted)];
    }
    std::uint64_t total() const;
    std::uint64_t diagonal() const;
    std::uint64_t gold_count(SentimentLabel label) const;
    std::uint64_t predicted_count(SentimentLabel label) const;

    bool operator==(const ConfusionMatrix&) const = default;
};

// Metrics that would divide by zero are left unset rather than reported as 0.
struct ClassMetrics {
    std::optional<double> precision;
    std::optional<double> recall;
    std::optional<double> f1;
};

struct EvalReport {
    std::optional<double> accuracy;  // unset when nothing was evaluated
    std::array<ClassMetrics, 3> per_class;
    ConfusionMatrix confusion;
    std::uint64_t n_evaluated = 0;
    std::uint64_t n_missing_gold = 0;
};

struct LabeledPair {
    SentimentLabel predicted;
    SentimentLabel gold;
};

// Incremental tally; order of add calls never affects the report.
class EvalTally {
public:
    void add(SentimentLabel predicted, SentimentLabel gold);
    void add_missing_gold() { ++n_missing_gold_; }

    std::uint64_t n_evaluated() const { return confusion_.total(); }
    EvalReport report() const;

private:
    ConfusionMatrix confusion_;
    std::uint64_t n_missing_gold_ = 0;
};

EvalReport evaluate(std::span<const LabeledPair> pairs);

// Aligned human-readable rendering of the report.
std::string render_report_table(const EvalReport& report);

}  // namespace sentiflux
