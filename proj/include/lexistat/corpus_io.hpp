#ifndef LEXISTAT_CORPUS_IO_HPP
#define LEXISTAT_CORPUS_IO_HPP

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "lexistat/corpus.hpp"

// On-disk forms of a corpus:
//  - input: a directory of UTF-8 text files (one file = one category, stem =
//    category name, files in byte order of their names) or a manifest of
//    `name<TAB>path` lines;
//  - output: a TSV table `word<TAB>cat1<TAB>...<TAB>catN` with integer
//    counts, rows sorted by word, LF endings, plus a line-oriented key-value
//    sidecar recording category names, sizes and the tokenizer settings.

namespace lexistat {

/// Read corpus documents from a directory or a manifest file. Order is
/// deterministic: file-name order for directories, line order for manifests.
std::vector<std::pair<std::string, std::string>> load_documents(const std::string& path);

/// Counts are the source of truth; scores are never serialized here.
void write_table(const CorpusTable& table, std::ostream& out);
void write_table_file(const CorpusTable& table, const std::string& path);

/// Sidecar metadata: category registry plus the tokenizer configuration the
/// table was built with.
void write_table_metadata(const CorpusTable& table, const TokenizerConfig& config,
                          std::ostream& out);
void write_table_metadata_file(const CorpusTable& table, const TokenizerConfig& config,
                               const std::string& path);

/// Parse a TSV table back. Category sizes are recomputed from the column
/// sums (they are fully determined by the counts). Throws ParseError with a
/// line number on malformed input.
CorpusTable read_table(std::istream& in, const std::string& path_for_errors = "<stream>");
CorpusTable read_table_file(const std::string& path);

/// UTF-8 encode a code point sequence (used for the sidecar and tests).
std::string to_utf8(const std::u32string& code_points);

}  // namespace lexistat

#endif
