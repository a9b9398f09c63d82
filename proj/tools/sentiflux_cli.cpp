#include <deque>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <mutex>
#include <thread>

#include "CLI11.hpp"
#include "sentiflux/evaluate.hpp"
#include "sentiflux/ingest.hpp"
#include "sentiflux/json_io.hpp"
#include "sentiflux/lexicon.hpp"
#include "sentiflux/pipeline.hpp"
#include "sentiflux/synth.hpp"
#include "sentiflux/tokenizer.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitRuntime = 1;
constexpr int kExitUsage = 2;

// Table 2 of the original speed experiment: 674,412 tweets in 14.8 seconds.
constexpr std::uint64_t kReferenceTweets = 674412;
constexpr double kReferenceSeconds = 14.8;
constexpr double kReferenceTps = static_cast<double>(kReferenceTweets) / kReferenceSeconds;

struct CommonOptions {
    std::string lexicon_path;
    bool strict_lexicon = false;
    std::string mode = "final-flip";
    unsigned parallelism = std::max(1u, std::thread::hardware_concurrency());
    bool no_hashtag_words = false;

    sentiflux::RunOptions run_options() const {
        sentiflux::RunOptions options;
        options.mode = *sentiflux::parse_negation_mode(mode);
        options.parallelism = parallelism;
        options.score_hashtag_words = !no_hashtag_words;
        return options;
    }
};

void add_common_options(CLI::App& cmd, CommonOptions& opts, bool with_mode = true) {
    cmd.add_option("--lexicon", opts.lexicon_path, "Path to the sentiment dictionary")
        ->envname("SENTIFLUX_LEXICON");
    cmd.add_flag("--strict-lexicon", opts.strict_lexicon,
                 "Fail on the first malformed dictionary line");
    if (with_mode) {
        cmd.add_option("--mode", opts.mode, "Negation semantics")
            ->check(CLI::IsMember({"literal", "final-flip"}))
            ->capture_default_str();
        cmd.add_option("--parallelism", opts.parallelism, "Worker count")
            ->check(CLI::PositiveNumber)
            ->capture_default_str();
        cmd.add_flag("--no-hashtag-words", opts.no_hashtag_words,
                     "Do not score the word inside a hashtag");
    }
}

sentiflux::SentimentLexicon load_lexicon_or_throw(const CommonOptions& opts) {
    return sentiflux::load_lexicon_file(opts.lexicon_path,
                                        sentiflux::LoadOptions{opts.strict_lexicon});
}

std::unique_ptr<sentiflux::TweetStream> open_input(const std::string& input,
                                                   sentiflux::InputFormat format) {
    if (input == "-") return std::make_unique<sentiflux::TweetReader>(std::cin, format);
    return std::make_unique<sentiflux::FileTweetReader>(input, format);
}

const std::vector<std::string>* input_diagnostics(const sentiflux::TweetStream& stream) {
    if (const auto* r = dynamic_cast<const sentiflux::TweetReader*>(&stream))
        return &r->skip_diagnostics();
    if (const auto* r = dynamic_cast<const sentiflux::FileTweetReader*>(&stream))
        return &r->skip_diagnostics();
    return nullptr;
}

void print_skip_diagnostics(const sentiflux::TweetStream& stream) {
    if (const auto* diags = input_diagnostics(stream)) {
        for (const std::string& d : *diags) std::cerr << "skipped " << d << '\n';
    }
}

void print_batch_summary(const sentiflux::BatchResult& result, std::size_t top_hashtags) {
    const auto& agg = result.agg;
    std::cerr << "tweets: " << agg.tweets_processed << "  (positive " << agg.counts.positive
              << ", negative " << agg.counts.negative << ", neutral " << agg.counts.neutral
              << ", skipped records " << agg.records_skipped << ")\n";

    const sentiflux::OrderedJson summary = sentiflux::batch_summary_json(result, top_hashtags);
    const auto& tags = summary["top_hashtags"];
    if (!tags.empty()) {
        std::cerr << "top hashtags:\n";
        for (const auto& tag : tags) {
            std::cerr << "  #" << tag["hashtag"].get<std::string>() << "  total "
                      << tag["total"] << " (+" << tag["positive"] << " -" << tag["negative"]
                      << " =" << tag["neutral"] << ")\n";
        }
    }
    std::cerr << std::fixed << std::setprecision(1) << "elapsed: " << result.elapsed_ms
              << " ms, throughput: " << std::setprecision(0) << result.throughput_tps
              << " tweets/s\n";
}

int cmd_analyze(const CommonOptions& common, const std::string& input, const std::string& format,
                const std::string& output, std::size_t top_hashtags) {
    const auto fmt = sentiflux::parse_input_format(format);
    const auto lexicon = load_lexicon_or_throw(common);
    auto stream = open_input(input, *fmt);

    std::ofstream file_out;
    if (output != "-") {
        file_out.open(output);
        if (!file_out) {
            std::cerr << "error: cannot open output file: " << output << '\n';
            return kExitRuntime;
        }
    }
    std::ostream& out = output == "-" ? std::cout : file_out;

    const sentiflux::ScoredSink sink = sentiflux::ordering_sink(
        [&out](std::uint64_t, const sentiflux::ScoredTweet& tweet) {
            out << sentiflux::to_json(tweet).dump() << '\n';
        });

    const sentiflux::BatchResult result =
        sentiflux::run_batch(*stream, lexicon, common.run_options(), sink);

    out.flush();
    if (!out) {
        std::cerr << "error: failed writing results to " << (output == "-" ? "stdout" : output)
                  << '\n';
        return kExitRuntime;
    }
    print_skip_diagnostics(*stream);
    print_batch_summary(result, top_hashtags);
    return kExitOk;
}

int cmd_benchmark(const CommonOptions& common, std::uint64_t n, std::uint64_t seed) {
    const auto lexicon = load_lexicon_or_throw(common);
    const sentiflux::BatchResult result =
        sentiflux::benchmark_corpus(n, seed, lexicon, common.run_options());

    sentiflux::OrderedJson report{
        {"n", n},
        {"seed", seed},
        {"tweets_processed", result.agg.tweets_processed},
        {"counts", sentiflux::to_json(result.agg.counts)},
        {"elapsed_ms", result.elapsed_ms},
        {"throughput_tps", result.throughput_tps},
        {"parallelism", common.parallelism},
        {"mode", common.mode},
        {"reference",
         {{"tweets", kReferenceTweets},
          {"seconds", kReferenceSeconds},
          {"throughput_tps", kReferenceTps}}},
        {"speedup_vs_reference", result.throughput_tps / kReferenceTps}};
    std::cout << report.dump(2) << '\n';

    std::cerr << std::fixed << std::setprecision(1);
    std::cerr << "               this run        reference\n"
              << "tweets         " << std::setw(12) << result.agg.tweets_processed << "    "
              << std::setw(12) << kReferenceTweets << '\n'
              << "elapsed (s)    " << std::setw(12) << result.elapsed_ms / 1000.0 << "    "
              << std::setw(12) << kReferenceSeconds << '\n'
              << std::setprecision(0) << "tweets/s       " << std::setw(12)
              << result.throughput_tps << "    " << std::setw(12) << kReferenceTps << '\n';
    return kExitOk;
}

int cmd_evaluate(const CommonOptions& common, const std::string& input,
                 const std::string& format, const std::string& output) {
    const auto fmt = sentiflux::parse_input_format(format);
    if (*fmt == sentiflux::InputFormat::Text) {
        std::cerr << "error: evaluate needs a gold-bearing format (labeled-tsv, or jsonl with "
                     "\"label\")\n";
        return kExitUsage;
    }
    const auto lexicon = load_lexicon_or_throw(common);
    auto stream = open_input(input, *fmt);

    // Gold labels indexed by the stream position run_batch reports back.
    struct GoldTap : sentiflux::TweetStream {
        explicit GoldTap(sentiflux::TweetStream& inner) : inner(inner) {}
        std::optional<sentiflux::TweetRecord> next() override {
            auto record = inner.next();
            if (record) {
                const std::lock_guard<std::mutex> lock(mutex);
                golds.push_back(record->gold_label);
            }
            return record;
        }
        std::uint64_t records_skipped() const override { return inner.records_skipped(); }
        std::optional<sentiflux::SentimentLabel> gold_at(std::uint64_t seq) {
            const std::lock_guard<std::mutex> lock(mutex);
            return golds[seq];
        }

        sentiflux::TweetStream& inner;
        std::mutex mutex;
        std::deque<std::optional<sentiflux::SentimentLabel>> golds;
    };

    GoldTap tap(*stream);
    sentiflux::EvalTally tally;
    const sentiflux::ScoredSink sink = sentiflux::serializing_sink(
        [&](std::uint64_t seq, const sentiflux::ScoredTweet& tweet) {
            if (const auto gold = tap.gold_at(seq)) {
                tally.add(tweet.label, *gold);
            } else {
                tally.add_missing_gold();
            }
        });

    sentiflux::run_batch(tap, lexicon, common.run_options(), sink);
    print_skip_diagnostics(*stream);

    if (tally.n_evaluated() == 0) {
        std::cerr << "error: no record carries a gold label; nothing to evaluate\n";
        return kExitRuntime;
    }
    const sentiflux::EvalReport report = tally.report();

    std::ofstream file_out;
    if (output != "-") {
        file_out.open(output);
        if (!file_out) {
            std::cerr << "error: cannot open output file: " << output << '\n';
            return kExitRuntime;
        }
    }
    std::ostream& out = output == "-" ? std::cout : file_out;
    out << sentiflux::to_json(report).dump(2) << '\n';
    std::cerr << sentiflux::render_report_table(report);
    return kExitOk;
}

int cmd_lexicon_check(const CommonOptions& common) {
    if (common.strict_lexicon) {
        try {
            load_lexicon_or_throw(common);
        } catch (const sentiflux::LexiconError& e) {
            std::cerr << "error: " << e.what() << '\n';
            return kExitRuntime;
        }
    }
    const auto lexicon = sentiflux::load_lexicon_file(common.lexicon_path);
    std::cout << sentiflux::lexicon_report_json(lexicon).dump(2) << '\n';

    std::cerr << "entries: " << lexicon.entry_count() << ", duplicates: "
              << lexicon.duplicates().size() << ", malformed lines: "
              << lexicon.row_errors().size() << '\n';
    for (const std::string& warning : lexicon.warning_log()) std::cerr << warning << '\n';
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Lexicon-based tweet sentiment scorer and batch pipeline"};
    app.require_subcommand(1);

    CommonOptions common;
    std::string input = "-";
    std::string output = "-";
    std::string format = "jsonl";
    std::string eval_format = "labeled-tsv";
    std::size_t top_hashtags = 10;
    std::uint64_t bench_n = kReferenceTweets;
    std::uint64_t bench_seed = 1;

    const auto format_check = CLI::IsMember({"jsonl", "text", "labeled-tsv"});

    CLI::App* analyze = app.add_subcommand("analyze", "Score tweets and emit JSONL results");
    add_common_options(*analyze, common);
    analyze->add_option("--input", input, "Input path, or - for stdin")->capture_default_str();
    analyze->add_option("--format", format, "Input format")->check(format_check)
        ->capture_default_str();
    analyze->add_option("--output", output, "Output path, or - for stdout")
        ->capture_default_str();
    analyze->add_option("--top-hashtags", top_hashtags, "Hashtags shown in the summary")
        ->capture_default_str();

    CLI::App* benchmark =
        app.add_subcommand("benchmark", "Score a synthetic corpus and report throughput");
    add_common_options(*benchmark, common);
    benchmark->add_option("--n", bench_n, "Corpus size")->check(CLI::PositiveNumber)
        ->capture_default_str();
    benchmark->add_option("--seed", bench_seed, "Corpus seed")->capture_default_str();

    CLI::App* evaluate =
        app.add_subcommand("evaluate", "Compare predictions against gold labels");
    add_common_options(*evaluate, common);
    evaluate->add_option("--input", input, "Input path, or - for stdin")->capture_default_str();
    evaluate->add_option("--format", eval_format, "Input format (must carry gold labels)")
        ->check(format_check)
        ->capture_default_str();
    evaluate->add_option("--output", output, "Report path, or - for stdout")
        ->capture_default_str();

    CLI::App* lexicon_check =
        app.add_subcommand("lexicon-check", "Validate a dictionary file and report its contents");
    add_common_options(*lexicon_check, common, /*with_mode=*/false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    if (common.lexicon_path.empty()) {
        std::cerr << "error: no lexicon given (use --lexicon PATH or set SENTIFLUX_LEXICON)\n"
                  << "Run with --help for usage.\n";
        return kExitUsage;
    }

    try {
        if (analyze->parsed()) return cmd_analyze(common, input, format, output, top_hashtags);
        if (benchmark->parsed()) return cmd_benchmark(common, bench_n, bench_seed);
        if (evaluate->parsed()) return cmd_evaluate(common, input, eval_format, output);
        if (lexicon_check->parsed()) return cmd_lexicon_check(common);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitRuntime;
    }
    return kExitUsage;
}
