#ifndef LEXISTAT_LEXICON_HPP
#define LEXISTAT_LEXICON_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lexistat/corpus.hpp"
#include "lexistat/measures.hpp"

// Ranked dictionaries over a corpus table: score, sort, select, pool,
// compare. All transformations are pure.

namespace lexistat {

enum class MeasureKind {
    frequency,    // total frequency F
    range,        // range t
    generalized,  // F^(1-a) * t^a
    juilland_u,   // F * D
    carroll_um,   // D2-interpolation between f_min and F
    ur,           // sum of per-category harmonic numbers
};

/// A measure selection; generalized carries its interpolation parameter.
class Measure {
  public:
    static Measure frequency() { return Measure(MeasureKind::frequency); }
    static Measure range() { return Measure(MeasureKind::range); }
    static Measure generalized(double a);
    static Measure juilland_u() { return Measure(MeasureKind::juilland_u); }
    static Measure carroll_um() { return Measure(MeasureKind::carroll_um); }
    static Measure ur() { return Measure(MeasureKind::ur); }

    /// Parse the CLI/serialization name: frequency, range, generalized,
    /// juilland, carroll, ur.
    static Measure from_name(const std::string& name, std::optional<double> a = std::nullopt);

    MeasureKind kind() const { return kind_; }
    double a() const;  // generalized only
    std::string name() const;

    bool operator==(const Measure& other) const;

  private:
    explicit Measure(MeasureKind kind) : kind_(kind) {}

    MeasureKind kind_;
    std::optional<double> a_;
};

struct DictionaryEntry {
    std::int64_t rank = 0;  // 1-based, no gaps
    std::string word;
    double score = 0.0;
    std::int64_t total_freq = 0;
};

/// Deterministically ordered word list: score descending, ties broken by
/// total frequency descending, then word ascending in code-point order.
struct RankedDictionary {
    Measure measure = Measure::frequency();
    std::vector<DictionaryEntry> entries;
};

/// Overlap between the top-n of two dictionaries. Difference lists keep
/// each word's rank in its source list and are sorted by it.
struct ComparisonReport {
    std::int64_t n = 0;
    std::int64_t common = 0;
    std::vector<DictionaryEntry> only_a;
    std::vector<DictionaryEntry> only_b;
    double jaccard = 0.0;  // common / (2n - common)
};

/// Score every word of the table under the measure and sort. Dispersion
/// measures (juilland, carroll) need at least two categories; carroll uses
/// the table's actual category sizes, so every category must be non-empty.
RankedDictionary rank(const CorpusTable& table, const Measure& measure);

/// First min(n, size) entries, ranks preserved.
RankedDictionary select_top(const RankedDictionary& dict, std::int64_t n);

/// Entries with total frequency >= min_freq, order and ranks preserved.
/// Only meaningful for frequency-ranked dictionaries; rejects others.
RankedDictionary select_by_threshold(const RankedDictionary& dict, std::int64_t min_freq);

/// Pool UR dictionaries: union of words with summed scores and frequencies,
/// re-ranked. Summing scores is exactly pooling the underlying corpora,
/// since the UR score is itself a sum over categories.
RankedDictionary pool_ur(const std::vector<RankedDictionary>& dicts);

/// Top-n overlap between two ranked lists. Both must have at least n entries.
ComparisonReport compare(const RankedDictionary& a, const RankedDictionary& b, std::int64_t n);
ComparisonReport compare(const std::vector<DictionaryEntry>& a,
                         const std::vector<DictionaryEntry>& b, std::int64_t n);

}  // namespace lexistat

#endif
