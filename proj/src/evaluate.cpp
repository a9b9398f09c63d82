#include "sentiflux/evaluate.hpp"

#include <iomanip>
#include <sstream>

namespace sentiflux {

std::uint64_t ConfusionMatrix::total() const {
    std::uint64_t sum = 0;
    for (const auto& row : cells)
        for (const std::uint64_t cell : row) sum += cell;
    return sum;
}

std::uint64_t ConfusionMatrix::diagonal() const {
    return cells[0][0] + cells[1][1] + cells[2][2];
}

std::uint64_t ConfusionMatrix::gold_count(SentimentLabel label) const {
    const auto& row = cells[label_index(label)];
    return row[0] + row[1] + row[2];
}

std::uint64_t ConfusionMatrix::predicted_count(SentimentLabel label) const {
    const std::size_t col = label_index(label);
    return cells[0][col] + cells[1][col] + cells[2][col];
}

void EvalTally::add(SentimentLabel predicted, SentimentLabel gold) {
    ++confusion_.at(gold, predicted);
}

EvalReport EvalTally::report() const {
    EvalReport report;
    report.confusion = confusion_;
    report.n_evaluated = confusion_.total();
    report.n_missing_gold = n_missing_gold_;
    if (report.n_evaluated > 0) {
        report.accuracy = static_cast<double>(confusion_.diagonal()) /
                          static_cast<double>(report.n_evaluated);
    }

    for (const SentimentLabel label : kAllLabels) {
        ClassMetrics& metrics = report.per_class[label_index(label)];
        const std::uint64_t gold = confusion_.gold_count(label);
        const std::uint64_t predicted = confusion_.predicted_count(label);
        const std::uint64_t correct = confusion_.at(label, label);
        if (predicted > 0)
            metrics.precision = static_cast<double>(correct) / static_cast<double>(predicted);
        if (gold > 0) metrics.recall = static_cast<double>(correct) / static_cast<double>(gold);
        if (metrics.precision && metrics.recall && *metrics.precision + *metrics.recall > 0) {
            metrics.f1 = 2 * *metrics.precision * *metrics.recall /
                         (*metrics.precision + *metrics.recall);
        }
    }
    return report;
}

EvalReport evaluate(std::span<const LabeledPair> pairs) {
    EvalTally tally;
    for (const LabeledPair& pair : pairs) tally.add(pair.predicted, pair.gold);
    return tally.report();
}

namespace {

std::string fmt(const std::optional<double>& value) {
    if (!value) return "undefined";
    std::ostringstream os;
    os << std::fixed << std::setprecision(4) << *value;
    return os.str();
}

}  // namespace

std::string render_report_table(const EvalReport& report) {
    std::ostringstream os;
    os << "evaluated: " << report.n_evaluated << "  missing gold: " << report.n_missing_gold
       << "\naccuracy:  " << fmt(report.accuracy) << "\n\n";

    os << std::left << std::setw(10) << "gold\\pred";
    for (const SentimentLabel label : kAllLabels) os << std::right << std::setw(10) << to_string(label);
    os << '\n';
    for (const SentimentLabel gold : kAllLabels) {
        os << std::left << std::setw(10) << to_string(gold);
        for (const SentimentLabel predicted : kAllLabels)
            os << std::right << std::setw(10) << report.confusion.at(gold, predicted);
        os << '\n';
    }

    os << '\n'
       << std::left << std::setw(10) << "class" << std::right << std::setw(12) << "precision"
       << std::setw(12) << "recall" << std::setw(12) << "f1" << '\n';
    for (const SentimentLabel label : kAllLabels) {
        const ClassMetrics& metrics = report.per_class[label_index(label)];
        os << std::left << std::setw(10) << to_string(label) << std::right << std::setw(12)
           << fmt(metrics.precision) << std::setw(12) << fmt(metrics.recall) << std::setw(12)
           << fmt(metrics.f1) << '\n';
    }
    return os.str();
}

}  // namespace sentiflux
