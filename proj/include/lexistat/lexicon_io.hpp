#ifndef LEXISTAT_LEXICON_IO_HPP
#define LEXISTAT_LEXICON_IO_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "lexistat/lexicon.hpp"

// Dictionary and report serialization.
//
// TSV (human/plotting): `rank<TAB>word<TAB>score<TAB>freq`, scores with four
// decimals and a dot separator. JSON (machine): same fields plus the measure
// kind, full-precision scores. A dictionary TSV does not record its measure,
// so operations whose preconditions depend on it (pooling) take JSON input.

namespace lexistat {

/// Dictionary parsed from disk; measure is present only for JSON input.
struct LoadedDictionary {
    std::optional<Measure> measure;
    std::vector<DictionaryEntry> entries;
};

void write_dictionary_tsv(const RankedDictionary& dict, std::ostream& out);
void write_dictionary_json(const RankedDictionary& dict, std::ostream& out);

/// Auto-detects JSON ('{' first) vs TSV. Validates ranks 1..len, scores
/// non-increasing, unique words. Throws ParseError on malformed input.
LoadedDictionary read_dictionary(std::istream& in, const std::string& path_for_errors);
LoadedDictionary read_dictionary_file(const std::string& path);

void write_report_text(const ComparisonReport& report, std::ostream& out);
void write_report_json(const ComparisonReport& report, std::ostream& out);

}  // namespace lexistat

#endif
