#include "sentiflux/lexicon.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <fstream>
#include <sstream>

namespace sentiflux {

namespace {

std::string ascii_lower(std::string_view s) {
    std::string out(s);
    for (char& c : out) {
        if (c >= 'A' && c <= 'Z') c += 'a' - 'A';
    }
    return out;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\r')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

bool has_whitespace(std::string_view s) {
    return s.find_first_of(" \t\r\n\f\v") != std::string_view::npos;
}

int strength_rank(Strength s) { return s == Strength::StrongSubj ? 1 : 0; }

bool is_structural(Polarity p) {
    return p == Polarity::Negation || p == Polarity::BlindNegation;
}

// Duplicate rule: higher strength wins, then structural polarity
// (negation/blindnegation) wins, then the earlier row stays.
bool replaces(const LexiconEntry& candidate, const LexiconEntry& incumbent) {
    if (strength_rank(candidate.strength) != strength_rank(incumbent.strength))
        return strength_rank(candidate.strength) > strength_rank(incumbent.strength);
    if (is_structural(candidate.polarity) != is_structural(incumbent.polarity))
        return is_structural(candidate.polarity);
    return false;
}

}  // namespace

std::string_view to_string(Polarity p) {
    switch (p) {
        case Polarity::Positive: return "positive";
        case Polarity::Negative: return "negative";
        case Polarity::Neutral: return "neutral";
        case Polarity::Negation: return "negation";
        case Polarity::BlindNegation: return "blindnegation";
    }
    return "?";
}

std::string_view to_string(Strength s) {
    return s == Strength::WeakSubj ? "weaksubj" : "strongsubj";
}

std::string_view to_string(PartOfSpeech pos) {
    switch (pos) {
        case PartOfSpeech::Adjective: return "adj";
        case PartOfSpeech::Noun: return "noun";
        case PartOfSpeech::Verb: return "verb";
        case PartOfSpeech::Adverb: return "advb";
        case PartOfSpeech::Conjunction: return "conj";
        case PartOfSpeech::Emoticon: return "emoti";
        case PartOfSpeech::Any: return "anypos";
    }
    return "?";
}

std::optional<Polarity> parse_polarity(std::string_view token) {
    const std::string t = ascii_lower(token);
    if (t == "positive") return Polarity::Positive;
    if (t == "negative") return Polarity::Negative;
    if (t == "neutral") return Polarity::Neutral;
    if (t == "negation") return Polarity::Negation;
    if (t == "blindnegation") return Polarity::BlindNegation;
    return std::nullopt;
}

std::optional<Strength> parse_strength(std::string_view token) {
    const std::string t = ascii_lower(token);
    if (t == "weaksubj") return Strength::WeakSubj;
    if (t == "strongsubj") return Strength::StrongSubj;
    return std::nullopt;
}

std::optional<PartOfSpeech> parse_pos(std::string_view token) {
    const std::string t = ascii_lower(token);
    if (t == "adj") return PartOfSpeech::Adjective;
    if (t == "noun") return PartOfSpeech::Noun;
    if (t == "verb") return PartOfSpeech::Verb;
    if (t == "advb") return PartOfSpeech::Adverb;
    if (t == "conj") return PartOfSpeech::Conjunction;
    if (t == "emoti") return PartOfSpeech::Emoticon;
    if (t == "anypos") return PartOfSpeech::Any;
    return std::nullopt;
}

std::string RowError::to_string() const {
    std::ostringstream os;
    os << "line " << line_number << ": " << message;
    if (!field.empty()) os << " ('" << field << "')";
    return os.str();
}

RowResult parse_lexicon_line(std::string_view line, std::size_t line_number) {
    std::array<std::string_view, 6> fields;
    std::size_t count = 0;
    std::size_t start = 0;
    while (true) {
        const std::size_t tab = line.find('\t', start);
        const std::string_view field =
            line.substr(start, tab == std::string_view::npos ? std::string_view::npos : tab - start);
        if (count < fields.size()) fields[count] = trim(field);
        ++count;
        if (tab == std::string_view::npos) break;
        start = tab + 1;
    }
    if (count != 5) {
        return RowError{line_number, std::string(line),
                        "expected 5 tab-separated fields, got " + std::to_string(count)};
    }

    const auto strength = parse_strength(fields[0]);
    if (!strength) return RowError{line_number, std::string(fields[0]), "unknown strength"};

    const auto pos = parse_pos(fields[2]);
    if (!pos) return RowError{line_number, std::string(fields[2]), "unknown part of speech"};

    const std::string stemmed_token = ascii_lower(fields[3]);
    if (stemmed_token != "y" && stemmed_token != "n")
        return RowError{line_number, std::string(fields[3]), "stemmed flag must be 'y' or 'n'"};

    const auto polarity = parse_polarity(fields[4]);
    if (!polarity) return RowError{line_number, std::string(fields[4]), "unknown polarity"};

    const std::string_view raw_surface = fields[1];
    if (raw_surface.empty()) return RowError{line_number, "", "empty word surface"};
    if (has_whitespace(raw_surface))
        return RowError{line_number, std::string(raw_surface), "word surface contains whitespace"};

    LexiconEntry entry;
    entry.surface = *pos == PartOfSpeech::Emoticon ? std::string(raw_surface)
                                                   : ascii_lower(raw_surface);
    entry.strength = *strength;
    entry.pos = *pos;
    entry.stemmed = stemmed_token == "y";
    entry.polarity = *polarity;
    return entry;
}

class LexiconBuilder {
public:
    explicit LexiconBuilder(const LoadOptions& options) : options_(options) {}

    void feed(std::string_view line, std::size_t line_number) {
        const std::string_view stripped = trim(line);
        if (stripped.empty() || stripped.front() == '#') return;

        RowResult result = parse_lexicon_line(line, line_number);
        if (const auto* error = std::get_if<RowError>(&result)) {
            if (options_.strict) throw LexiconError("lexicon " + error->to_string());
            lexicon_.row_errors_.push_back(*error);
            lexicon_.warnings_.push_back("skipped " + error->to_string());
            return;
        }

        auto& entry = std::get<LexiconEntry>(result);
        auto [it, inserted] = lexicon_.entries_.try_emplace(entry.surface, entry);
        if (inserted) {
            kept_line_[entry.surface] = line_number;
            return;
        }

        const std::size_t incumbent_line = kept_line_[entry.surface];
        DuplicateNote note{entry.surface, 0, 0};
        if (replaces(entry, it->second)) {
            note.kept_line = line_number;
            note.dropped_line = incumbent_line;
            it->second = entry;
            kept_line_[entry.surface] = line_number;
        } else {
            note.kept_line = incumbent_line;
            note.dropped_line = line_number;
        }
        lexicon_.duplicates_.push_back(note);
        lexicon_.warnings_.push_back("duplicate surface '" + note.surface + "': kept line " +
                                     std::to_string(note.kept_line) + ", dropped line " +
                                     std::to_string(note.dropped_line));
    }

    SentimentLexicon take() { return std::move(lexicon_); }

private:
    LoadOptions options_;
    SentimentLexicon lexicon_;
    std::unordered_map<std::string, std::size_t> kept_line_;
};

const LexiconEntry* SentimentLexicon::lookup(std::string_view surface) const {
    const auto it = entries_.find(surface);
    return it == entries_.end() ? nullptr : &it->second;
}

std::vector<std::string> SentimentLexicon::emoticon_surfaces() const {
    std::vector<std::string> out;
    for (const auto& [surface, entry] : entries_) {
        if (entry.pos == PartOfSpeech::Emoticon) out.push_back(surface);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<LexiconEntry> SentimentLexicon::sorted_entries() const {
    std::vector<LexiconEntry> out;
    out.reserve(entries_.size());
    for (const auto& [surface, entry] : entries_) out.push_back(entry);
    std::sort(out.begin(), out.end(),
              [](const LexiconEntry& a, const LexiconEntry& b) { return a.surface < b.surface; });
    return out;
}

SentimentLexicon load_lexicon(std::span<const std::string> lines, const LoadOptions& options) {
    LexiconBuilder builder(options);
    std::size_t line_number = 0;
    for (const std::string& line : lines) builder.feed(line, ++line_number);
    return builder.take();
}

SentimentLexicon load_lexicon(std::istream& in, const LoadOptions& options) {
    if (!in) throw LexiconError("unreadable lexicon stream");
    LexiconBuilder builder(options);
    std::string line;
    std::size_t line_number = 0;
    while (std::getline(in, line)) builder.feed(line, ++line_number);
    return builder.take();
}

SentimentLexicon load_lexicon_file(const std::filesystem::path& path, const LoadOptions& options) {
    std::ifstream in(path);
    if (!in) throw LexiconError("cannot open lexicon file: " + path.string());
    return load_lexicon(in, options);
}

std::string serialize_lexicon(const SentimentLexicon& lexicon) {
    std::ostringstream os;
    for (const LexiconEntry& e : lexicon.sorted_entries()) {
        os << to_string(e.strength) << '\t' << e.surface << '\t' << to_string(e.pos) << '\t'
           << (e.stemmed ? 'y' : 'n') << '\t' << to_string(e.polarity) << '\n';
    }
    return os.str();
}

}  // namespace sentiflux
