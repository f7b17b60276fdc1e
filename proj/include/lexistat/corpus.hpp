#ifndef LEXISTAT_CORPUS_HPP
#define LEXISTAT_CORPUS_HPP

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lexistat/measures.hpp"

// Raw text -> per-category frequency table. One category per document.

namespace lexistat {

/// Tokenization rules. The defaults treat hyphens as letters and merge case
/// variants; digits and punctuation always separate.
struct TokenizerConfig {
    bool hyphen_is_letter = true;
    bool case_fold = true;
    /// Extra code points to treat as letters (e.g. U+0027 apostrophe).
    std::u32string extra_letter_chars;
};

struct Category {
    int id = 0;
    std::string name;
    std::int64_t size_tokens = 0;
};

/// Category registry plus every word's per-category counts. Immutable after
/// construction; build_table/merge_tables/load_table maintain the invariants
/// (counts length == category count, no all-zero entry, totals consistent).
struct CorpusTable {
    std::vector<Category> categories;
    std::map<std::string, FrequencyDistribution> entries;  // keyed by word
    std::int64_t total_tokens = 0;
};

/// Split text into normalized word tokens: maximal runs of Unicode letters
/// plus the hyphens U+002D and U+2010 (when enabled) plus any configured
/// extra characters. Edge hyphens are stripped, tokens are case folded when
/// enabled, and empty results are dropped. Throws TokenizeError with the
/// byte offset on invalid UTF-8.
std::vector<std::string> tokenize(std::string_view text, const TokenizerConfig& config = {});

/// Count tokens per document; one category per document, in input order.
/// Document names must be unique and free of tabs/newlines (they become
/// TSV column headers).
CorpusTable build_table(const std::vector<std::pair<std::string, std::string>>& documents,
                        const TokenizerConfig& config = {});

/// Pool two corpora over disjoint category name sets: categories are
/// concatenated (a's then b's), counts extended with zero fill, totals add.
CorpusTable merge_tables(const CorpusTable& a, const CorpusTable& b);

}  // namespace lexistat

#endif
