#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <variant>
#include <vector>

namespace sentiflux {

// Sentiment class of a dictionary entry. Negation and BlindNegation are
// structural: they steer the scoring loop instead of contributing units.
enum class Polarity { Positive, Negative, Neutral, Negation, BlindNegation };

enum class Strength { WeakSubj, StrongSubj };

enum class PartOfSpeech { Adjective, Noun, Verb, Adverb, Conjunction, Emoticon, Any };

std::string_view to_string(Polarity p);
std::string_view to_string(Strength s);
std::string_view to_string(PartOfSpeech pos);

std::optional<Polarity> parse_polarity(std::string_view token);
std::optional<Strength> parse_strength(std::string_view token);
std::optional<PartOfSpeech> parse_pos(std::string_view token);

// One dictionary row. Word surfaces are stored lowercase; emoticon surfaces
// are stored verbatim so punctuation stays exact.
struct LexiconEntry {
    std::string surface;
    Strength strength = Strength::WeakSubj;
    PartOfSpeech pos = PartOfSpeech::Any;
    bool stemmed = false;
    Polarity polarity = Polarity::Neutral;

    bool operator==(const LexiconEntry&) const = default;
};

// Diagnostic for one unparseable dictionary line.
struct RowError {
    std::size_t line_number = 0;
    std::string field;    // the offending field, or "" for structural errors
    std::string message;

    std::string to_string() const;
};

using RowResult = std::variant<LexiconEntry, RowError>;

// Parses one non-blank, non-comment record of the tab-separated format
// `strength<TAB>word<TAB>pos<TAB>stemmed<TAB>polarity`.
RowResult parse_lexicon_line(std::string_view line, std::size_t line_number);

struct LoadOptions {
    bool strict = false;  // abort on the first row error instead of skipping
};

// Thrown on unreadable input, and on the first row error in strict mode.
class LexiconError : public std::runtime_error {
public:
    explicit LexiconError(const std::string& what) : std::runtime_error(what) {}
};

struct DuplicateNote {
    std::string surface;
    std::size_t kept_line = 0;
    std::size_t dropped_line = 0;
};

struct TransparentStringHash {
    using is_transparent = void;
    std::size_t operator()(std::string_view s) const noexcept {
        return std::hash<std::string_view>{}(s);
    }
};

// Immutable dictionary keyed by surface form. At most one entry per surface;
// duplicate rows are resolved at load time (strength first, then structural
// polarity, then first-in-file) and logged.
class SentimentLexicon {
public:
    using Map = std::unordered_map<std::string, LexiconEntry, TransparentStringHash, std::equal_to<>>;

    std::size_t entry_count() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }

    // `surface` must already be normalized: lowercased word, verbatim emoticon.
    const LexiconEntry* lookup(std::string_view surface) const;

    const Map& entries() const { return entries_; }
    const std::vector<std::string>& warning_log() const { return warnings_; }
    const std::vector<RowError>& row_errors() const { return row_errors_; }
    const std::vector<DuplicateNote>& duplicates() const { return duplicates_; }

    // Surfaces of every entry with pos = emoti, sorted; feeds the tokenizer.
    std::vector<std::string> emoticon_surfaces() const;

    // Entries sorted by surface, for deterministic serialization and reports.
    std::vector<LexiconEntry> sorted_entries() const;

private:
    friend class LexiconBuilder;

    Map entries_;
    std::vector<std::string> warnings_;
    std::vector<RowError> row_errors_;
    std::vector<DuplicateNote> duplicates_;
};

SentimentLexicon load_lexicon(std::span<const std::string> lines, const LoadOptions& options = {});
SentimentLexicon load_lexicon(std::istream& in, const LoadOptions& options = {});
SentimentLexicon load_lexicon_file(const std::filesystem::path& path, const LoadOptions& options = {});

// Writes entries back in the input file format, sorted by surface. Loading
// the output reproduces the lexicon entry for entry.
std::string serialize_lexicon(const SentimentLexicon& lexicon);

}  // namespace sentiflux
