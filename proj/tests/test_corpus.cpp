#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "lexistat/corpus.hpp"
#include "lexistat/corpus_io.hpp"
#include "lexistat/errors.hpp"
#include "lexistat/measures.hpp"

using namespace lexistat;
namespace fs = std::filesystem;

namespace {

using Tokens = std::vector<std::string>;
using Docs = std::vector<std::pair<std::string, std::string>>;

// Scratch directory removed on scope exit.
struct TempDir {
    fs::path path;

    explicit TempDir(const std::string& tag) {
        path = fs::temp_directory_path() / ("lexistat_corpus_" + tag);
        fs::remove_all(path);
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }

    fs::path file(const std::string& name, const std::string& content) const {
        const fs::path p = path / name;
        std::ofstream out(p, std::ios::binary);
        out << content;
        return p;
    }
};

std::string join(const Tokens& tokens) {
    std::string text;
    for (const auto& token : tokens) {
        if (!text.empty())
            text += ' ';
        text += token;
    }
    return text;
}

}  // namespace

TEST_CASE("tokenize applies the default rules") {
    CHECK(tokenize("Red-haired cat, the CAT!") == Tokens{"red-haired", "cat", "the", "cat"});
    CHECK(tokenize("") == Tokens{});
    CHECK(tokenize("один—два один") == Tokens{"один", "два", "один"});
}

TEST_CASE("tokenize hyphen handling") {
    // U+2010 is a hyphen, em/en dashes are separators.
    CHECK(tokenize("re‐read") == Tokens{"re‐read"});
    CHECK(tokenize("a–b c—d") == Tokens{"a", "b", "c", "d"});
    CHECK(tokenize("-ab- --") == Tokens{"ab"});
    CHECK(tokenize("--well--known--") == Tokens{"well--known"});
    CHECK(tokenize("из-за чего-то") == Tokens{"из-за", "чего-то"});

    TokenizerConfig no_hyphen;
    no_hyphen.hyphen_is_letter = false;
    CHECK(tokenize("red-haired", no_hyphen) == Tokens{"red", "haired"});
}

TEST_CASE("tokenize separators and case folding") {
    CHECK(tokenize("a1b c2000d") == Tokens{"a", "b", "c", "d"});
    CHECK(tokenize("don't") == Tokens{"don", "t"});
    CHECK(tokenize("ЁЛКА ёлка") == Tokens{"ёлка", "ёлка"});
    CHECK(tokenize("STRASSE Straße") == Tokens{"strasse", "strasse"});

    TokenizerConfig keep_case;
    keep_case.case_fold = false;
    CHECK(tokenize("The CAT Cat", keep_case) == Tokens{"The", "CAT", "Cat"});

    TokenizerConfig apostrophe;
    apostrophe.extra_letter_chars = U"'";
    CHECK(tokenize("don't d'école", apostrophe) == Tokens{"don't", "d'école"});
}

TEST_CASE("tokenize rejects invalid UTF-8 with a byte offset") {
    const std::string bad = std::string("ab") + char(0xFF) + "cd";
    CHECK_THROWS_AS(tokenize(bad), TokenizeError);
    try {
        tokenize(bad);
    } catch (const TokenizeError& e) {
        CHECK(e.byte_offset() == 2);
    }

    const std::string truncated = std::string("x \xD0");  // lone lead byte
    CHECK_THROWS_AS(tokenize(truncated), TokenizeError);
}

TEST_CASE("tokenize round-trips through a space join") {
    std::mt19937 rng(99);
    const std::vector<std::string> letters = {"a", "b", "z", "ж", "ю", "é", "ß"};
    std::uniform_int_distribution<std::size_t> letter_gen(0, letters.size() - 1);
    std::uniform_int_distribution<int> len_gen(1, 6);
    std::uniform_int_distribution<int> count_gen(0, 12);
    std::uniform_int_distribution<int> hyphen_gen(0, 4);

    for (int round = 0; round < 200; ++round) {
        Tokens words;
        const int count = count_gen(rng);
        for (int w = 0; w < count; ++w) {
            std::string word;
            const int len = len_gen(rng);
            for (int i = 0; i < len; ++i) {
                if (!word.empty() && word.back() != '-' && hyphen_gen(rng) == 0)
                    word += '-';
                word += letters[letter_gen(rng)];
            }
            if (word.back() == '-')
                word += letters[letter_gen(rng)];
            words.push_back(word);
        }
        const Tokens once = tokenize(join(words));
        const Tokens twice = tokenize(join(once));
        CHECK(once == twice);
    }
}

TEST_CASE("build_table counts per category") {
    const CorpusTable table = build_table({{"A", "a b a"}, {"B", "b"}});
    REQUIRE(table.categories.size() == 2);
    CHECK(table.categories[0].name == "A");
    CHECK(table.categories[0].size_tokens == 3);
    CHECK(table.categories[1].size_tokens == 1);
    CHECK(table.total_tokens == 4);
    REQUIRE(table.entries.size() == 2);
    CHECK(table.entries.at("a").counts == std::vector<std::int64_t>{2, 0});
    CHECK(table.entries.at("b").counts == std::vector<std::int64_t>{1, 1});
}

TEST_CASE("build_table degenerate corpora") {
    const CorpusTable empty_doc = build_table({{"only", ""}});
    CHECK(empty_doc.categories.size() == 1);
    CHECK(empty_doc.entries.empty());
    CHECK(empty_doc.total_tokens == 0);

    CHECK_THROWS_AS(build_table({}), std::invalid_argument);
    CHECK_THROWS_AS(build_table({{"X", "a"}, {"X", "b"}}), std::invalid_argument);
    CHECK_THROWS_AS(build_table({{"bad\tname", "a"}}), std::invalid_argument);
}

TEST_CASE("build_table reproduces engineered per-category counts") {
    // Five documents whose counts per word equal the nine demo rows.
    const std::vector<std::vector<std::int64_t>> rows = {
        {1, 1, 1, 1, 1}, {2, 1, 1, 1, 0}, {2, 2, 1, 0, 0},
        {3, 1, 1, 0, 0}, {3, 2, 0, 0, 0}, {4, 1, 0, 0, 0},
        {5, 0, 0, 0, 0}, {0, 0, 3, 3, 4}, {1, 1, 1, 1, 6},
    };
    const std::vector<std::string> words = {"alpha",   "bravo", "charlie", "delta", "echo",
                                            "foxtrot", "golf",  "hotel",   "india"};
    Docs docs;
    for (int j = 0; j < 5; ++j) {
        std::string text;
        for (std::size_t w = 0; w < words.size(); ++w) {
            for (std::int64_t k = 0; k < rows[w][j]; ++k)
                text += words[w] + " ";
        }
        docs.emplace_back("doc" + std::to_string(j), text);
    }

    const CorpusTable table = build_table(docs);
    REQUIRE(table.entries.size() == words.size());
    for (std::size_t w = 0; w < words.size(); ++w)
        CHECK(table.entries.at(words[w]).counts == rows[w]);
}

TEST_CASE("build_table is deterministic and keeps global invariants") {
    const Docs docs = {{"A", "a b-c d ё Ж"}, {"B", "b-c b-c x"}, {"C", ""}};
    const CorpusTable once = build_table(docs);
    const CorpusTable twice = build_table(docs);
    REQUIRE(once.entries.size() == twice.entries.size());
    for (const auto& [word, dist] : once.entries)
        CHECK(twice.entries.at(word).counts == dist.counts);

    std::int64_t sum_sizes = 0;
    for (const auto& category : once.categories)
        sum_sizes += category.size_tokens;
    std::int64_t sum_entries = 0;
    for (const auto& [word, dist] : once.entries) {
        CHECK(dist.range() <= static_cast<std::int64_t>(docs.size()));
        CHECK(dist.total() <= once.total_tokens);
        CHECK(dist.total() > 0);
        sum_entries += dist.total();
    }
    CHECK(once.total_tokens == sum_sizes);
    CHECK(once.total_tokens == sum_entries);
}

TEST_CASE("merge_tables pools disjoint corpora") {
    const CorpusTable a = build_table({{"A", "w w"}});
    const CorpusTable b = build_table({{"B", "w w w"}});
    const CorpusTable merged = merge_tables(a, b);

    REQUIRE(merged.categories.size() == 2);
    CHECK(merged.categories[1].id == 1);
    CHECK(merged.entries.at("w").counts == std::vector<std::int64_t>{2, 3});
    CHECK(merged.total_tokens == 5);

    // Pooling adds harmonic scores: H2 + H3.
    CHECK(ur_score(merged.entries.at("w"))
          == doctest::Approx(1.5 + 11.0 / 6.0).epsilon(1e-12));

    CHECK_THROWS_AS(merge_tables(a, a), std::invalid_argument);
}

TEST_CASE("merge_tables with an empty table is the identity on entries") {
    const CorpusTable a = build_table({{"A", "x y x"}});
    const CorpusTable empty = build_table({{"E", ""}});
    const CorpusTable merged = merge_tables(a, empty);
    CHECK(merged.total_tokens == a.total_tokens);
    REQUIRE(merged.entries.size() == a.entries.size());
    for (const auto& [word, dist] : a.entries) {
        const auto& extended = merged.entries.at(word).counts;
        CHECK(std::vector<std::int64_t>(extended.begin(), extended.end() - 1) == dist.counts);
        CHECK(extended.back() == 0);
    }
}

TEST_CASE("merge_tables is associative and adds ur scores") {
    const CorpusTable a = build_table({{"A", "p q p"}});
    const CorpusTable b = build_table({{"B", "q r"}});
    const CorpusTable c = build_table({{"C", "p r r q q"}});

    const CorpusTable left = merge_tables(merge_tables(a, b), c);
    const CorpusTable right = merge_tables(a, merge_tables(b, c));
    REQUIRE(left.entries.size() == right.entries.size());
    for (const auto& [word, dist] : left.entries)
        CHECK(right.entries.at(word).counts == dist.counts);
    CHECK(left.total_tokens == right.total_tokens);

    for (const auto& [word, dist] : left.entries) {
        double split = 0.0;
        for (const auto* part : {&a, &b, &c}) {
            const auto it = part->entries.find(word);
            if (it != part->entries.end())
                split += ur_score(it->second);
        }
        CHECK(ur_score(dist) == doctest::Approx(split).epsilon(1e-12));
    }
}

TEST_CASE("table TSV serialization is bit-exact") {
    const CorpusTable table = build_table({{"A", "a b a"}, {"B", "b"}});
    std::ostringstream out;
    write_table(table, out);
    CHECK(out.str() == "word\tA\tB\na\t2\t0\nb\t1\t1\n");

    std::ostringstream meta;
    write_table_metadata(table, TokenizerConfig{}, meta);
    CHECK(meta.str()
          == "total_tokens\t4\n"
             "categories\t2\n"
             "category\tA\t3\n"
             "category\tB\t1\n"
             "tokenizer.hyphen_is_letter\ttrue\n"
             "tokenizer.case_fold\ttrue\n"
             "tokenizer.extra_letter_chars\t\n");
}

TEST_CASE("table TSV round-trips") {
    const CorpusTable table =
        build_table({{"A", "кто-то был тут"}, {"B", "был был dog"}, {"C", "dog"}});
    std::stringstream stream;
    write_table(table, stream);
    const CorpusTable loaded = read_table(stream);

    REQUIRE(loaded.categories.size() == table.categories.size());
    for (std::size_t j = 0; j < table.categories.size(); ++j) {
        CHECK(loaded.categories[j].name == table.categories[j].name);
        CHECK(loaded.categories[j].size_tokens == table.categories[j].size_tokens);
    }
    CHECK(loaded.total_tokens == table.total_tokens);
    REQUIRE(loaded.entries.size() == table.entries.size());
    for (const auto& [word, dist] : table.entries)
        CHECK(loaded.entries.at(word).counts == dist.counts);
}

TEST_CASE("table parsing reports line numbers") {
    auto parse = [](const std::string& text) {
        std::istringstream in(text);
        return read_table(in, "test.tsv");
    };

    CHECK_THROWS_WITH_AS(parse("word\n"), "test.tsv:1: header must be word<TAB>cat1<TAB>...<TAB>catN",
                         ParseError);
    CHECK_THROWS_AS(parse("nope\tA\nx\t1\n"), ParseError);

    try {
        parse("word\tA\tB\nx\t1\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
    }

    CHECK_THROWS_AS(parse("word\tA\nx\tfive\n"), ParseError);
    CHECK_THROWS_AS(parse("word\tA\nx\t-3\n"), ParseError);
    CHECK_THROWS_AS(parse("word\tA\nx\t0\n"), ParseError);
    CHECK_THROWS_AS(parse("word\tA\nx\t1\nx\t2\n"), ParseError);
    CHECK_THROWS_AS(parse("word\tA\n\t4\n"), ParseError);
    CHECK_THROWS_AS(parse(""), ParseError);
}

TEST_CASE("load_documents from a directory sorts by file name") {
    TempDir dir("docs");
    dir.file("b.txt", "beta");
    dir.file("a.txt", "alpha");
    dir.file(".hidden", "nope");

    const Docs docs = load_documents(dir.path.string());
    REQUIRE(docs.size() == 2);
    CHECK(docs[0].first == "a");
    CHECK(docs[0].second == "alpha");
    CHECK(docs[1].first == "b");

    TempDir empty("empty");
    CHECK_THROWS_AS(load_documents(empty.path.string()), IoError);
    CHECK_THROWS_AS(load_documents((dir.path / "missing").string()), IoError);
}

TEST_CASE("load_documents from a manifest keeps line order") {
    TempDir dir("manifest");
    dir.file("one.txt", "first text");
    dir.file("two.txt", "second text");
    const fs::path manifest = dir.file("corpus.manifest", "Zwei\ttwo.txt\nEins\tone.txt\n");

    const Docs docs = load_documents(manifest.string());
    REQUIRE(docs.size() == 2);
    CHECK(docs[0].first == "Zwei");
    CHECK(docs[0].second == "second text");
    CHECK(docs[1].first == "Eins");

    const fs::path bad = dir.file("bad.manifest", "no-tab-here\n");
    CHECK_THROWS_AS(load_documents(bad.string()), ParseError);
    const fs::path missing = dir.file("missing.manifest", "X\tnot_there.txt\n");
    CHECK_THROWS_AS(load_documents(missing.string()), IoError);
}
