#include "lexistat/lexicon_io.hpp"

#include <charconv>
#include <fstream>
#include <ostream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "lexistat/errors.hpp"

namespace lexistat {

namespace {

using nlohmann::json;

json measure_to_json(const Measure& measure) {
    json object;
    object["measure"] = measure.name();
    if (measure.kind() == MeasureKind::generalized)
        object["a"] = measure.a();
    return object;
}

json entries_to_json(const std::vector<DictionaryEntry>& entries) {
    json array = json::array();
    for (const auto& entry : entries) {
        array.push_back({{"rank", entry.rank},
                         {"word", entry.word},
                         {"score", entry.score},
                         {"freq", entry.total_freq}});
    }
    return array;
}

void validate_entries(const std::vector<DictionaryEntry>& entries, const std::string& path) {
    std::set<std::string> seen;
    double previous_score = 0.0;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        const auto& entry = entries[i];
        if (entry.rank != static_cast<std::int64_t>(i) + 1)
            throw ParseError(path, 0, "ranks must be 1.." + std::to_string(entries.size())
                                          + " with no gaps");
        if (!seen.insert(entry.word).second)
            throw ParseError(path, 0, "duplicate word: " + entry.word);
        if (i > 0 && entry.score > previous_score)
            throw ParseError(path, 0, "scores must be non-increasing by rank");
        previous_score = entry.score;
    }
}

std::int64_t parse_int(const std::string& field, const std::string& path, std::size_t line) {
    std::int64_t value = 0;
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc() || ptr != field.data() + field.size())
        throw ParseError(path, line, "expected an integer, got '" + field + "'");
    return value;
}

LoadedDictionary read_dictionary_json(const std::string& text, const std::string& path) {
    json document;
    try {
        document = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(path, 0, std::string("invalid JSON: ") + e.what());
    }

    LoadedDictionary dict;
    try {
        std::optional<double> a;
        if (document.contains("a"))
            a = document.at("a").get<double>();
        dict.measure = Measure::from_name(document.at("measure").get<std::string>(), a);
        for (const auto& item : document.at("entries")) {
            dict.entries.push_back({item.at("rank").get<std::int64_t>(),
                                    item.at("word").get<std::string>(),
                                    item.at("score").get<double>(),
                                    item.at("freq").get<std::int64_t>()});
        }
    } catch (const json::exception& e) {
        throw ParseError(path, 0, std::string("bad dictionary document: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw ParseError(path, 0, e.what());
    }
    validate_entries(dict.entries, path);
    return dict;
}

LoadedDictionary read_dictionary_tsv(std::istream& in, const std::string& path) {
    std::string line;
    if (!std::getline(in, line) || line != "rank\tword\tscore\tfreq")
        throw ParseError(path, 1, "expected header rank<TAB>word<TAB>score<TAB>freq");

    LoadedDictionary dict;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty())
            continue;
        std::istringstream fields(line);
        std::string rank_field, word, score_field, freq_field;
        if (!std::getline(fields, rank_field, '\t') || !std::getline(fields, word, '\t')
            || !std::getline(fields, score_field, '\t') || !std::getline(fields, freq_field))
            throw ParseError(path, line_no, "expected rank<TAB>word<TAB>score<TAB>freq");

        double score = 0.0;
        const auto [ptr, ec] =
            std::from_chars(score_field.data(), score_field.data() + score_field.size(), score);
        if (ec != std::errc() || ptr != score_field.data() + score_field.size())
            throw ParseError(path, line_no, "bad score '" + score_field + "'");
        dict.entries.push_back({parse_int(rank_field, path, line_no), word, score,
                                parse_int(freq_field, path, line_no)});
    }
    validate_entries(dict.entries, path);
    return dict;
}

}  // namespace

void write_dictionary_tsv(const RankedDictionary& dict, std::ostream& out) {
    out << "rank\tword\tscore\tfreq\n";
    for (const auto& entry : dict.entries) {
        out << entry.rank << '\t' << entry.word << '\t' << format_fixed(entry.score, 4) << '\t'
            << entry.total_freq << '\n';
    }
}

void write_dictionary_json(const RankedDictionary& dict, std::ostream& out) {
    json document = measure_to_json(dict.measure);
    document["entries"] = entries_to_json(dict.entries);
    out << document.dump(2) << '\n';
}

LoadedDictionary read_dictionary(std::istream& in, const std::string& path) {
    std::ostringstream buffer;
    buffer << in.rdbuf();
    const std::string text = std::move(buffer).str();

    const std::size_t first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{')
        return read_dictionary_json(text, path);
    std::istringstream tsv(text);
    return read_dictionary_tsv(tsv, path);
}

LoadedDictionary read_dictionary_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError(path, "cannot open for reading");
    return read_dictionary(in, path);
}

void write_report_text(const ComparisonReport& report, std::ostream& out) {
    out << "n\t" << report.n << '\n';
    out << "common\t" << report.common << '\n';
    out << "jaccard\t" << format_fixed(report.jaccard, 4) << '\n';
    for (const auto& entry : report.only_a)
        out << "only_a\t" << entry.rank << '\t' << entry.word << '\n';
    for (const auto& entry : report.only_b)
        out << "only_b\t" << entry.rank << '\t' << entry.word << '\n';
}

void write_report_json(const ComparisonReport& report, std::ostream& out) {
    auto word_list = [](const std::vector<DictionaryEntry>& entries) {
        json array = json::array();
        for (const auto& entry : entries)
            array.push_back({{"rank", entry.rank}, {"word", entry.word}});
        return array;
    };
    json document{{"n", report.n},
                  {"common", report.common},
                  {"jaccard", report.jaccard},
                  {"only_a", word_list(report.only_a)},
                  {"only_b", word_list(report.only_b)}};
    out << document.dump(2) << '\n';
}

}  // namespace lexistat
