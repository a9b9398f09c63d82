#include "sentiflux/ingest.hpp"

#include <istream>

#include "json.hpp"

namespace sentiflux {

namespace {
constexpr std::size_t kMaxDiagnostics = 20;
}

std::optional<InputFormat> parse_input_format(std::string_view token) {
    if (token == "jsonl") return InputFormat::Jsonl;
    if (token == "text") return InputFormat::Text;
    if (token == "labeled-tsv") return InputFormat::LabeledTsv;
    return std::nullopt;
}

std::string_view to_string(InputFormat format) {
    switch (format) {
        case InputFormat::Jsonl: return "jsonl";
        case InputFormat::Text: return "text";
        case InputFormat::LabeledTsv: return "labeled-tsv";
    }
    return "?";
}

TweetReader::TweetReader(std::istream& in, InputFormat format) : in_(in), format_(format) {}

std::optional<TweetRecord> TweetReader::next() {
    std::string line;
    while (std::getline(in_, line)) {
        ++line_number_;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (auto record = parse_line(line, line_number_)) return record;
    }
    return std::nullopt;
}

std::optional<TweetRecord> TweetReader::parse_line(std::string_view line, std::size_t line_number) {
    TweetRecord record;
    record.id = "line-" + std::to_string(line_number);

    switch (format_) {
        case InputFormat::Text:
            record.text = std::string(line);
            return record;

        case InputFormat::LabeledTsv: {
            const std::size_t tab = line.find('\t');
            if (tab == std::string_view::npos) {
                note_skip(line_number, "expected 'label<TAB>text'");
                return std::nullopt;
            }
            const auto label = parse_label(line.substr(0, tab));
            if (!label) {
                note_skip(line_number, "unknown label");
                return std::nullopt;
            }
            record.gold_label = *label;
            record.text = std::string(line.substr(tab + 1));
            return record;
        }

        case InputFormat::Jsonl: {
            const nlohmann::json obj = nlohmann::json::parse(line, nullptr, false);
            if (obj.is_discarded() || !obj.is_object()) {
                note_skip(line_number, "invalid JSON object");
                return std::nullopt;
            }
            const auto text = obj.find("text");
            if (text == obj.end() || !text->is_string()) {
                note_skip(line_number, "missing string field \"text\"");
                return std::nullopt;
            }
            record.text = text->get<std::string>();
            if (const auto id = obj.find("id"); id != obj.end() && id->is_string()) {
                record.id = id->get<std::string>();
            }
            if (const auto label = obj.find("label"); label != obj.end()) {
                if (!label->is_string()) {
                    note_skip(line_number, "field \"label\" must be a string");
                    return std::nullopt;
                }
                const auto parsed = parse_label(label->get<std::string>());
                if (!parsed) {
                    note_skip(line_number, "unknown label");
                    return std::nullopt;
                }
                record.gold_label = *parsed;
            }
            if (const auto ts = obj.find("timestamp_ms"); ts != obj.end() && ts->is_number_integer()) {
                record.timestamp_ms = ts->get<std::int64_t>();
            }
            return record;
        }
    }
    return std::nullopt;
}

void TweetReader::note_skip(std::size_t line_number, std::string_view reason) {
    ++skipped_;
    if (diagnostics_.size() < kMaxDiagnostics) {
        diagnostics_.push_back("line " + std::to_string(line_number) + ": " + std::string(reason));
    }
}

FileTweetReader::FileTweetReader(const std::filesystem::path& path, InputFormat format)
    : file_(path) {
    if (!file_) throw std::runtime_error("cannot open input file: " + path.string());
    reader_ = std::make_unique<TweetReader>(file_, format);
}

}  // namespace sentiflux
