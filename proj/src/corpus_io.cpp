#include "lexistat/corpus_io.hpp"

#include <algorithm>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include "lexistat/errors.hpp"

namespace fs = std::filesystem;

namespace lexistat {

namespace {

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError(path.string(), "cannot open for reading");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad())
        throw IoError(path.string(), "read failure");
    return std::move(buffer).str();
}

std::ofstream open_output(const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw IoError(path, "cannot open for writing");
    return out;
}

std::vector<std::string> split_tabs(const std::string& line) {
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
        const std::size_t tab = line.find('\t', start);
        if (tab == std::string::npos) {
            fields.push_back(line.substr(start));
            return fields;
        }
        fields.push_back(line.substr(start, tab - start));
        start = tab + 1;
    }
}

std::int64_t parse_count(const std::string& field, const std::string& path, std::size_t line) {
    std::int64_t value = 0;
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc() || ptr != field.data() + field.size())
        throw ParseError(path, line, "expected an integer count, got '" + field + "'");
    if (value < 0)
        throw ParseError(path, line, "negative count");
    return value;
}

}  // namespace

std::vector<std::pair<std::string, std::string>> load_documents(const std::string& path) {
    std::vector<std::pair<std::string, std::string>> documents;
    const fs::path root(path);

    if (fs::is_directory(root)) {
        std::vector<fs::path> files;
        for (const auto& entry : fs::directory_iterator(root)) {
            const std::string name = entry.path().filename().string();
            if (entry.is_regular_file() && !name.empty() && name.front() != '.')
                files.push_back(entry.path());
        }
        std::sort(files.begin(), files.end(),
                  [](const fs::path& a, const fs::path& b) { return a.filename() < b.filename(); });
        for (const auto& file : files)
            documents.emplace_back(file.stem().string(), read_file(file));
        if (documents.empty())
            throw IoError(path, "directory contains no corpus files");
        return documents;
    }

    if (!fs::is_regular_file(root))
        throw IoError(path, "not a directory or manifest file");

    // Manifest: `name<TAB>path` per line, paths relative to the manifest.
    std::istringstream manifest(read_file(root));
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(manifest, line)) {
        ++line_no;
        if (line.empty())
            continue;
        const std::size_t tab = line.find('\t');
        if (tab == std::string::npos || tab == 0 || tab + 1 == line.size())
            throw ParseError(path, line_no, "manifest line must be name<TAB>path");
        documents.emplace_back(line.substr(0, tab),
                               read_file(root.parent_path() / line.substr(tab + 1)));
    }
    if (documents.empty())
        throw ParseError(path, 0, "manifest lists no documents");
    return documents;
}

void write_table(const CorpusTable& table, std::ostream& out) {
    out << "word";
    for (const auto& category : table.categories)
        out << '\t' << category.name;
    out << '\n';
    for (const auto& [word, dist] : table.entries) {
        out << word;
        for (std::int64_t count : dist.counts)
            out << '\t' << count;
        out << '\n';
    }
}

void write_table_file(const CorpusTable& table, const std::string& path) {
    auto out = open_output(path);
    write_table(table, out);
    if (!out)
        throw IoError(path, "write failure");
}

void write_table_metadata(const CorpusTable& table, const TokenizerConfig& config,
                          std::ostream& out) {
    out << "total_tokens\t" << table.total_tokens << '\n';
    out << "categories\t" << table.categories.size() << '\n';
    for (const auto& category : table.categories)
        out << "category\t" << category.name << '\t' << category.size_tokens << '\n';
    out << "tokenizer.hyphen_is_letter\t" << (config.hyphen_is_letter ? "true" : "false") << '\n';
    out << "tokenizer.case_fold\t" << (config.case_fold ? "true" : "false") << '\n';
    out << "tokenizer.extra_letter_chars\t" << to_utf8(config.extra_letter_chars) << '\n';
}

void write_table_metadata_file(const CorpusTable& table, const TokenizerConfig& config,
                               const std::string& path) {
    auto out = open_output(path);
    write_table_metadata(table, config, out);
    if (!out)
        throw IoError(path, "write failure");
}

CorpusTable read_table(std::istream& in, const std::string& path) {
    std::string line;
    if (!std::getline(in, line))
        throw ParseError(path, 1, "missing header line");
    const std::vector<std::string> header = split_tabs(line);
    if (header.size() < 2 || header[0] != "word")
        throw ParseError(path, 1, "header must be word<TAB>cat1<TAB>...<TAB>catN");

    CorpusTable table;
    const std::size_t n = header.size() - 1;
    for (std::size_t j = 0; j < n; ++j) {
        if (header[j + 1].empty())
            throw ParseError(path, 1, "empty category name in header");
        table.categories.push_back({static_cast<int>(j), header[j + 1], 0});
    }

    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty())
            continue;
        const std::vector<std::string> fields = split_tabs(line);
        if (fields.size() != n + 1)
            throw ParseError(path, line_no,
                             "expected " + std::to_string(n + 1) + " fields, got "
                                 + std::to_string(fields.size()));
        const std::string& word = fields[0];
        if (word.empty())
            throw ParseError(path, line_no, "empty word");
        if (table.entries.count(word) > 0)
            throw ParseError(path, line_no, "duplicate word: " + word);

        FrequencyDistribution dist;
        dist.word = word;
        dist.counts.reserve(n);
        std::int64_t row_total = 0;
        for (std::size_t j = 0; j < n; ++j) {
            const std::int64_t count = parse_count(fields[j + 1], path, line_no);
            dist.counts.push_back(count);
            table.categories[j].size_tokens += count;
            row_total += count;
        }
        if (row_total == 0)
            throw ParseError(path, line_no, "all-zero counts for word: " + word);
        table.total_tokens += row_total;
        table.entries.emplace(word, std::move(dist));
    }
    return table;
}

CorpusTable read_table_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError(path, "cannot open for reading");
    return read_table(in, path);
}

std::string to_utf8(const std::u32string& code_points) {
    std::string utf8;
    for (char32_t cp : code_points) {
        const auto value = static_cast<std::uint32_t>(cp);
        if (value < 0x80) {
            utf8 += static_cast<char>(value);
        } else if (value < 0x800) {
            utf8 += static_cast<char>(0xC0 | (value >> 6));
            utf8 += static_cast<char>(0x80 | (value & 0x3F));
        } else if (value < 0x10000) {
            utf8 += static_cast<char>(0xE0 | (value >> 12));
            utf8 += static_cast<char>(0x80 | ((value >> 6) & 0x3F));
            utf8 += static_cast<char>(0x80 | (value & 0x3F));
        } else {
            utf8 += static_cast<char>(0xF0 | (value >> 18));
            utf8 += static_cast<char>(0x80 | ((value >> 12) & 0x3F));
            utf8 += static_cast<char>(0x80 | ((value >> 6) & 0x3F));
            utf8 += static_cast<char>(0x80 | (value & 0x3F));
        }
    }
    return utf8;
}

}  // namespace lexistat
