#include "lexistat/cli.hpp"

#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <unicode/unistr.h>

#include "lexistat/corpus.hpp"
#include "lexistat/corpus_io.hpp"
#include "lexistat/errors.hpp"
#include "lexistat/lexicon.hpp"
#include "lexistat/lexicon_io.hpp"
#include "lexistat/measures.hpp"

namespace lexistat {

namespace {

// Route a writer to --output or the console stream.
void emit(const std::optional<std::string>& output_path, std::ostream& fallback,
          const std::function<void(std::ostream&)>& writer) {
    if (!output_path) {
        writer(fallback);
        return;
    }
    std::ofstream file(*output_path, std::ios::binary);
    if (!file)
        throw IoError(*output_path, "cannot open for writing");
    writer(file);
    if (!file)
        throw IoError(*output_path, "write failure");
}

std::u32string decode_utf8_flag(const std::string& value) {
    const icu::UnicodeString text = icu::UnicodeString::fromUTF8(value);
    std::u32string code_points;
    for (std::int32_t i = 0; i < text.length(); i = text.moveIndex32(i, 1))
        code_points.push_back(static_cast<char32_t>(text.char32At(i)));
    return code_points;
}

void check_format(const std::string& format) {
    if (format != "tsv" && format != "json")
        throw std::invalid_argument("unknown format '" + format + "' (expected tsv or json)");
}

struct AnalyzeOptions {
    std::string input;
    std::string output;
    bool no_hyphen_letter = false;
    bool no_case_fold = false;
    std::string extra_letter_chars;
};

void cmd_analyze(const AnalyzeOptions& options, std::ostream& out) {
    TokenizerConfig config;
    config.hyphen_is_letter = !options.no_hyphen_letter;
    config.case_fold = !options.no_case_fold;
    config.extra_letter_chars = decode_utf8_flag(options.extra_letter_chars);

    const CorpusTable table = build_table(load_documents(options.input), config);
    write_table_file(table, options.output);
    write_table_metadata_file(table, config, options.output + ".meta");

    out << "total_tokens\t" << table.total_tokens << '\n';
    out << "vocabulary\t" << table.entries.size() << '\n';
}

struct RankOptions {
    std::string table_path;
    std::string measure;
    std::optional<double> a;
    std::optional<std::int64_t> top;
    std::optional<std::int64_t> min_freq;
    std::optional<std::string> output;
    std::string format = "tsv";
};

void cmd_rank(const RankOptions& options, std::ostream& out) {
    check_format(options.format);
    const CorpusTable table = read_table_file(options.table_path);
    RankedDictionary dict = rank(table, Measure::from_name(options.measure, options.a));
    if (options.min_freq)
        dict = select_by_threshold(dict, *options.min_freq);
    if (options.top)
        dict = select_top(dict, *options.top);

    emit(options.output, out, [&](std::ostream& sink) {
        if (options.format == "json")
            write_dictionary_json(dict, sink);
        else
            write_dictionary_tsv(dict, sink);
    });
}

void cmd_table_demo(const std::optional<std::string>& output, std::ostream& out) {
    // The classic nine hypothetical five-category rows used to contrast
    // dispersion-based usage coefficients.
    static const std::vector<std::vector<std::int64_t>> rows = {
        {1, 1, 1, 1, 1}, {2, 1, 1, 1, 0}, {2, 2, 1, 0, 0},
        {3, 1, 1, 0, 0}, {3, 2, 0, 0, 0}, {4, 1, 0, 0, 0},
        {5, 0, 0, 0, 0}, {0, 0, 3, 3, 4}, {1, 1, 1, 1, 6},
    };

    emit(output, out, [&](std::ostream& sink) {
        sink << "word\tA\tB\tC\tD\tE\ttotal\tU\tU_m\tU_R\n";
        for (std::size_t i = 0; i < rows.size(); ++i) {
            const FrequencyDistribution dist("word" + std::to_string(i + 1), rows[i]);
            sink << (i + 1);
            for (std::int64_t count : dist.counts)
                sink << '\t' << count;
            sink << '\t' << dist.total();
            sink << '\t' << format_fixed(juilland_u(dist), 2);
            sink << '\t' << format_fixed(carroll_um(dist), 2);
            sink << '\t' << format_fixed(ur_score(dist), 2);
            sink << '\n';
        }
    });
}

struct CompareOptions {
    std::string path_a;
    std::string path_b;
    std::int64_t n = 0;
    std::optional<std::string> output;
    std::string format = "tsv";
};

void cmd_compare(const CompareOptions& options, std::ostream& out) {
    check_format(options.format);
    const LoadedDictionary a = read_dictionary_file(options.path_a);
    const LoadedDictionary b = read_dictionary_file(options.path_b);
    const ComparisonReport report = compare(a.entries, b.entries, options.n);

    emit(options.output, out, [&](std::ostream& sink) {
        if (options.format == "json")
            write_report_json(report, sink);
        else
            write_report_text(report, sink);
    });
}

struct MergeOptions {
    std::vector<std::string> inputs;
    std::optional<std::string> output;
    std::string format = "tsv";
};

enum class MergeInputKind { table, dictionary };

MergeInputKind sniff_merge_input(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError(path, "cannot open for reading");
    std::string first_line;
    std::getline(in, first_line);
    const std::size_t start = first_line.find_first_not_of(" \t\r");
    if (start != std::string::npos && first_line[start] == '{')
        return MergeInputKind::dictionary;
    if (first_line.rfind("word\t", 0) == 0)
        return MergeInputKind::table;
    if (first_line.rfind("rank\t", 0) == 0)
        throw ParseError(path, 1,
                         "dictionary TSV carries no measure kind; export the dictionary as JSON "
                         "(rank --format json) to merge it");
    throw ParseError(path, 1, "unrecognized input (expected a corpus table or a JSON dictionary)");
}

void cmd_merge(const MergeOptions& options, std::ostream& out) {
    check_format(options.format);
    const MergeInputKind kind = sniff_merge_input(options.inputs.front());
    for (const auto& path : options.inputs) {
        if (sniff_merge_input(path) != kind)
            throw std::invalid_argument("merge: mixed input kinds (tables and dictionaries)");
    }

    if (kind == MergeInputKind::table) {
        CorpusTable merged = read_table_file(options.inputs.front());
        for (std::size_t i = 1; i < options.inputs.size(); ++i)
            merged = merge_tables(merged, read_table_file(options.inputs[i]));
        emit(options.output, out, [&](std::ostream& sink) { write_table(merged, sink); });
        return;
    }

    std::vector<RankedDictionary> dicts;
    for (const auto& path : options.inputs) {
        LoadedDictionary loaded = read_dictionary_file(path);
        if (!loaded.measure)
            throw ParseError(path, 0, "dictionary lacks a measure kind");
        dicts.push_back({*loaded.measure, std::move(loaded.entries)});
    }
    const RankedDictionary pooled = pool_ur(dicts);
    emit(options.output, out, [&](std::ostream& sink) {
        if (options.format == "json")
            write_dictionary_json(pooled, sink);
        else
            write_dictionary_tsv(pooled, sink);
    });
}

void cmd_curves(std::int64_t max_f, const std::optional<std::string>& output, std::ostream& out) {
    const std::vector<LawCurveRow> rows = law_curves(max_f);
    emit(output, out, [&](std::ostream& sink) {
        sink << "F\tstevens\tharmonic\tweber_fechner\n";
        for (const auto& row : rows) {
            sink << row.f << '\t' << format_fixed(row.stevens, 6) << '\t'
                 << format_fixed(row.harmonic, 6) << '\t'
                 << format_fixed(row.weber_fechner, 6) << '\n';
        }
    });
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"corpus lexicostatistics: frequency tables, usage measures, ranked dictionaries"};
    app.require_subcommand(1);

    AnalyzeOptions analyze_options;
    auto* analyze = app.add_subcommand(
        "analyze", "Tokenize a corpus (directory or manifest) into a frequency table");
    analyze->add_option("input", analyze_options.input, "corpus directory or manifest file")
        ->required();
    analyze->add_option("-o,--output", analyze_options.output,
                        "table file to write (sidecar goes to <output>.meta)")
        ->required();
    analyze->add_flag("--no-hyphen-letter", analyze_options.no_hyphen_letter,
                      "treat hyphens as separators instead of letters");
    analyze->add_flag("--no-case-fold", analyze_options.no_case_fold,
                      "keep the original letter case");
    analyze->add_option("--extra-letter-chars", analyze_options.extra_letter_chars,
                        "additional characters to treat as letters (UTF-8)");

    RankOptions rank_options;
    auto* rank_cmd = app.add_subcommand("rank", "Build a ranked dictionary from a table");
    rank_cmd->add_option("table", rank_options.table_path, "corpus table (TSV)")->required();
    rank_cmd
        ->add_option("-m,--measure", rank_options.measure,
                     "frequency, range, generalized, juilland, carroll or ur")
        ->required();
    rank_cmd->add_option("--a", rank_options.a, "interpolation parameter for generalized");
    rank_cmd->add_option("--top", rank_options.top, "keep only the first N entries");
    rank_cmd->add_option("--min-freq", rank_options.min_freq,
                         "keep entries with total frequency >= M (frequency measure only)");
    rank_cmd->add_option("-o,--output", rank_options.output, "write to file instead of stdout");
    rank_cmd->add_option("-f,--format", rank_options.format, "tsv (default) or json");

    std::optional<std::string> demo_output;
    auto* demo = app.add_subcommand(
        "table-demo", "Print the nine-word usage-measure comparison table");
    demo->add_option("-o,--output", demo_output, "write to file instead of stdout");

    CompareOptions compare_options;
    auto* compare_cmd =
        app.add_subcommand("compare", "Overlap report between two ranked dictionaries");
    compare_cmd->add_option("dict_a", compare_options.path_a, "first dictionary")->required();
    compare_cmd->add_option("dict_b", compare_options.path_b, "second dictionary")->required();
    compare_cmd->add_option("-n,--n", compare_options.n, "list length to compare")->required();
    compare_cmd->add_option("-o,--output", compare_options.output,
                            "write to file instead of stdout");
    compare_cmd->add_option("-f,--format", compare_options.format, "tsv (default) or json");

    MergeOptions merge_options;
    auto* merge_cmd = app.add_subcommand(
        "merge", "Pool corpus tables (disjoint categories) or UR dictionaries");
    merge_cmd->add_option("inputs", merge_options.inputs, "tables or JSON dictionaries")
        ->required()
        ->expected(-1);
    merge_cmd->add_option("-o,--output", merge_options.output, "write to file instead of stdout");
    merge_cmd->add_option("-f,--format", merge_options.format,
                          "tsv (default) or json (dictionary output)");

    std::int64_t max_f = 0;
    std::optional<std::string> curves_output;
    auto* curves_cmd = app.add_subcommand(
        "curves", "Tabulate the power-law, harmonic and logarithmic response curves");
    curves_cmd->add_option("max_f", max_f, "largest frequency to tabulate")->required();
    curves_cmd->add_option("-o,--output", curves_output, "write to file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }

    try {
        if (*analyze)
            cmd_analyze(analyze_options, out);
        else if (*rank_cmd)
            cmd_rank(rank_options, out);
        else if (*demo)
            cmd_table_demo(demo_output, out);
        else if (*compare_cmd)
            cmd_compare(compare_options, out);
        else if (*merge_cmd)
            cmd_merge(merge_options, out);
        else if (*curves_cmd)
            cmd_curves(max_f, curves_output, out);
    } catch (const std::exception& e) {
        err << "lexistat: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

}  // namespace lexistat
