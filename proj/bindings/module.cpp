#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <fstream>
#include <stdexcept>

#include "sentiflux/evaluate.hpp"
#include "sentiflux/ingest.hpp"
#include "sentiflux/json_io.hpp"
#include "sentiflux/lexicon.hpp"
#include "sentiflux/pipeline.hpp"
#include "sentiflux/reference_scorer.hpp"
#include "sentiflux/synth.hpp"
#include "sentiflux/tokenizer.hpp"

namespace py = pybind11;
using namespace sentiflux;

namespace {

py::object json_to_py(const OrderedJson& j) {
    switch (j.type()) {
        case OrderedJson::value_t::null: return py::none();
        case OrderedJson::value_t::boolean: return py::bool_(j.get<bool>());
        case OrderedJson::value_t::number_integer: return py::int_(j.get<std::int64_t>());
        case OrderedJson::value_t::number_unsigned: return py::int_(j.get<std::uint64_t>());
        case OrderedJson::value_t::number_float: return py::float_(j.get<double>());
        case OrderedJson::value_t::string: return py::str(j.get<std::string>());
        case OrderedJson::value_t::array: {
            py::list out;
            for (const auto& item : j) out.append(json_to_py(item));
            return out;
        }
        case OrderedJson::value_t::object: {
            py::dict out;
            for (const auto& [key, value] : j.items()) out[py::str(key)] = json_to_py(value);
            return out;
        }
        default: return py::none();
    }
}

NegationMode mode_from(const std::string& mode) {
    const auto parsed = parse_negation_mode(mode);
    if (!parsed) throw std::invalid_argument("mode must be 'literal' or 'final-flip'");
    return *parsed;
}

InputFormat format_from(const std::string& format) {
    const auto parsed = parse_input_format(format);
    if (!parsed) throw std::invalid_argument("format must be 'jsonl', 'text', or 'labeled-tsv'");
    return *parsed;
}

RunOptions options_from(const std::string& mode, unsigned parallelism, bool score_hashtag_words) {
    RunOptions options;
    options.mode = mode_from(mode);
    options.parallelism = parallelism;
    options.score_hashtag_words = score_hashtag_words;
    return options;
}

py::object score_text(const std::string& text, const SentimentLexicon& lexicon,
                      const std::string& mode, bool score_hashtag_words,
                      const std::string& tweet_id) {
    const EmoticonSet emoticons(lexicon.emoticon_surfaces());
    const auto tokens = tokenize(text, emoticons);
    const ScoredTweet scored =
        score_tweet(tweet_id, tokens, lexicon, mode_from(mode), score_hashtag_words);
    return json_to_py(to_json(scored));
}

py::object run_file(const SentimentLexicon& lexicon, const std::string& path,
                    const std::string& format, const std::string& mode, unsigned parallelism,
                    bool score_hashtag_words, const std::optional<std::string>& output_path,
                    std::size_t top_hashtags) {
    FileTweetReader stream(path, format_from(format));
    const RunOptions options = options_from(mode, parallelism, score_hashtag_words);

    BatchResult result;
    {
        const py::gil_scoped_release release;
        if (output_path) {
            std::ofstream out(*output_path);
            if (!out) throw std::runtime_error("cannot open output file: " + *output_path);
            const ScoredSink sink =
                ordering_sink([&out](std::uint64_t, const ScoredTweet& tweet) {
                    out << to_json(tweet).dump() << '\n';
                });
            result = run_batch(stream, lexicon, options, sink);
        } else {
            result = run_batch(stream, lexicon, options);
        }
    }
    return json_to_py(batch_summary_json(result, top_hashtags));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Lexicon-based tweet sentiment scoring engine";

    py::class_<SentimentLexicon>(m, "Lexicon")
        .def_static(
            "from_file",
            [](const std::string& path, bool strict) {
                return load_lexicon_file(path, LoadOptions{strict});
            },
            py::arg("path"), py::arg("strict") = false)
        .def_static(
            "from_lines",
            [](const std::vector<std::string>& lines, bool strict) {
                return load_lexicon(std::span<const std::string>(lines), LoadOptions{strict});
            },
            py::arg("lines"), py::arg("strict") = false)
        .def_property_readonly("entry_count", &SentimentLexicon::entry_count)
        .def_property_readonly("warnings", &SentimentLexicon::warning_log)
        .def("lookup",
             [](const SentimentLexicon& lexicon, const std::string& surface) -> py::object {
                 const LexiconEntry* entry = lexicon.lookup(surface);
                 if (entry == nullptr) return py::none();
                 py::dict out;
                 out["surface"] = entry->surface;
                 out["strength"] = std::string(to_string(entry->strength));
                 out["pos"] = std::string(to_string(entry->pos));
                 out["stemmed"] = entry->stemmed;
                 out["polarity"] = std::string(to_string(entry->polarity));
                 return out;
             })
        .def("emoticons", &SentimentLexicon::emoticon_surfaces)
        .def("serialize", [](const SentimentLexicon& lexicon) { return serialize_lexicon(lexicon); })
        .def("report", [](const SentimentLexicon& lexicon) {
            return json_to_py(lexicon_report_json(lexicon));
        });

    m.def(
        "tokenize",
        [](const std::string& text, const SentimentLexicon& lexicon) {
            const EmoticonSet emoticons(lexicon.emoticon_surfaces());
            py::list out;
            for (const Token& token : tokenize(text, emoticons)) {
                py::dict d;
                d["kind"] = std::string(to_string(token.kind));
                d["surface"] = token.surface;
                d["begin"] = token.begin;
                d["end"] = token.end;
                out.append(d);
            }
            return out;
        },
        py::arg("text"), py::arg("lexicon"));

    m.def(
        "extract_hashtags",
        [](const std::string& text, const SentimentLexicon& lexicon) {
            const EmoticonSet emoticons(lexicon.emoticon_surfaces());
            return extract_hashtags(tokenize(text, emoticons));
        },
        py::arg("text"), py::arg("lexicon"));

    m.def("score", &score_text, py::arg("text"), py::arg("lexicon"),
          py::arg("mode") = "final-flip", py::arg("score_hashtag_words") = true,
          py::arg("tweet_id") = "");

    m.def(
        "reference_score",
        [](const std::string& text, const SentimentLexicon& lexicon, const std::string& mode,
           bool score_hashtag_words) {
            const EmoticonSet emoticons(lexicon.emoticon_surfaces());
            const auto tokens = tokenize(text, emoticons);
            const auto result =
                reference::score(tokens, lexicon, mode_from(mode), score_hashtag_words);
            py::dict out;
            out["senti_score"] = result.senti_score;
            out["label"] = std::string(to_string(result.label));
            out["blind_negation"] = result.blind_negation;
            return out;
        },
        py::arg("text"), py::arg("lexicon"), py::arg("mode") = "final-flip",
        py::arg("score_hashtag_words") = true);

    m.def("run_file", &run_file, py::arg("lexicon"), py::arg("path"),
          py::arg("format") = "jsonl", py::arg("mode") = "final-flip",
          py::arg("parallelism") = 1, py::arg("score_hashtag_words") = true,
          py::arg("output_path") = std::nullopt, py::arg("top_hashtags") = 10);

    m.def(
        "benchmark",
        [](const SentimentLexicon& lexicon, std::uint64_t n, std::uint64_t seed,
           const std::string& mode, unsigned parallelism) {
            const RunOptions options = options_from(mode, parallelism, true);
            BatchResult result;
            {
                const py::gil_scoped_release release;
                result = benchmark_corpus(n, seed, lexicon, options);
            }
            return json_to_py(batch_summary_json(result, 10));
        },
        py::arg("lexicon"), py::arg("n"), py::arg("seed") = 1, py::arg("mode") = "final-flip",
        py::arg("parallelism") = 1);

    m.def(
        "synth_corpus",
        [](const SentimentLexicon& lexicon, std::uint64_t n, std::uint64_t seed,
           const std::string& mode) {
            py::list out;
            for (const TweetRecord& record : synth_corpus(n, seed, lexicon, mode_from(mode))) {
                py::dict d;
                d["id"] = record.id;
                d["text"] = record.text;
                d["gold"] = std::string(to_string(*record.gold_label));
                out.append(d);
            }
            return out;
        },
        py::arg("lexicon"), py::arg("n"), py::arg("seed") = 1, py::arg("mode") = "final-flip");

    m.def(
        "evaluate_pairs",
        [](const std::vector<std::pair<std::string, std::string>>& pairs) {
            EvalTally tally;
            for (const auto& [predicted, gold] : pairs) {
                const auto p = parse_label(predicted);
                const auto g = parse_label(gold);
                if (!p || !g) throw std::invalid_argument("labels must be positive/negative/neutral");
                tally.add(*p, *g);
            }
            return json_to_py(to_json(tally.report()));
        },
        py::arg("pairs"), "Pairs are (predicted, gold) label strings.");

    m.attr("__version__") = "0.1.0";
}
