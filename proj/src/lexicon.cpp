#include "lexistat/lexicon.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <unordered_set>

namespace lexistat {

Measure Measure::generalized(double a) {
    GeneralizedParams params(a);  // validates the range
    Measure measure(MeasureKind::generalized);
    measure.a_ = params.a();
    return measure;
}

Measure Measure::from_name(const std::string& name, std::optional<double> a) {
    if (name == "generalized") {
        if (!a)
            throw std::invalid_argument("measure 'generalized' requires parameter a");
        return generalized(*a);
    }
    if (a)
        throw std::invalid_argument("parameter a only applies to measure 'generalized'");
    if (name == "frequency")
        return frequency();
    if (name == "range")
        return range();
    if (name == "juilland")
        return juilland_u();
    if (name == "carroll")
        return carroll_um();
    if (name == "ur")
        return ur();
    throw std::invalid_argument(
        "unknown measure '" + name
        + "' (expected frequency, range, generalized, juilland, carroll or ur)");
}

double Measure::a() const {
    if (kind_ != MeasureKind::generalized)
        throw std::logic_error("measure has no parameter a");
    return *a_;
}

std::string Measure::name() const {
    switch (kind_) {
        case MeasureKind::frequency: return "frequency";
        case MeasureKind::range: return "range";
        case MeasureKind::generalized: return "generalized";
        case MeasureKind::juilland_u: return "juilland";
        case MeasureKind::carroll_um: return "carroll";
        case MeasureKind::ur: return "ur";
    }
    return "?";
}

bool Measure::operator==(const Measure& other) const {
    return kind_ == other.kind_ && a_ == other.a_;
}

namespace {

// score desc, then total frequency desc, then word asc (code-point order,
// which for UTF-8 keys is byte order).
bool entry_before(const DictionaryEntry& lhs, const DictionaryEntry& rhs) {
    if (lhs.score != rhs.score)
        return lhs.score > rhs.score;
    if (lhs.total_freq != rhs.total_freq)
        return lhs.total_freq > rhs.total_freq;
    return lhs.word < rhs.word;
}

void sort_and_number(std::vector<DictionaryEntry>& entries) {
    std::sort(entries.begin(), entries.end(), entry_before);
    for (std::size_t i = 0; i < entries.size(); ++i)
        entries[i].rank = static_cast<std::int64_t>(i) + 1;
}

}  // namespace

RankedDictionary rank(const CorpusTable& table, const Measure& measure) {
    if (table.entries.empty())
        throw std::invalid_argument("rank: corpus table is empty");

    const std::size_t n = table.categories.size();
    const MeasureKind kind = measure.kind();
    if ((kind == MeasureKind::juilland_u || kind == MeasureKind::carroll_um) && n < 2)
        throw std::invalid_argument("rank: measure '" + measure.name()
                                    + "' needs at least 2 categories, table has "
                                    + std::to_string(n));

    std::vector<std::int64_t> sizes;
    if (kind == MeasureKind::carroll_um) {
        for (const auto& category : table.categories) {
            if (category.size_tokens <= 0)
                throw std::invalid_argument("rank: category '" + category.name
                                            + "' is empty; carroll needs non-empty categories");
            sizes.push_back(category.size_tokens);
        }
    }

    RankedDictionary dict{measure, {}};
    dict.entries.reserve(table.entries.size());
    for (const auto& [word, dist] : table.entries) {
        double score = 0.0;
        switch (kind) {
            case MeasureKind::frequency:
                score = static_cast<double>(dist.total());
                break;
            case MeasureKind::range:
                score = static_cast<double>(dist.range());
                break;
            case MeasureKind::generalized:
                score = generalized_m(dist.total(), dist.range(), GeneralizedParams(measure.a()));
                break;
            case MeasureKind::juilland_u:
                score = juilland_u(dist);
                break;
            case MeasureKind::carroll_um:
                score = carroll_um(dist, &sizes);
                break;
            case MeasureKind::ur:
                score = ur_score(dist);
                break;
        }
        dict.entries.push_back({0, word, score, dist.total()});
    }
    sort_and_number(dict.entries);
    return dict;
}

RankedDictionary select_top(const RankedDictionary& dict, std::int64_t n) {
    if (n < 1)
        throw std::invalid_argument("select_top: n must be positive");
    RankedDictionary head{dict.measure, {}};
    const auto keep = std::min<std::size_t>(static_cast<std::size_t>(n), dict.entries.size());
    head.entries.assign(dict.entries.begin(), dict.entries.begin() + keep);
    return head;
}

RankedDictionary select_by_threshold(const RankedDictionary& dict, std::int64_t min_freq) {
    if (dict.measure.kind() != MeasureKind::frequency)
        throw std::invalid_argument("select_by_threshold: dictionary is ranked by '"
                                    + dict.measure.name() + "', expected 'frequency'");
    if (min_freq < 1)
        throw std::invalid_argument("select_by_threshold: min_freq must be positive");
    RankedDictionary filtered{dict.measure, {}};
    for (const auto& entry : dict.entries) {
        if (entry.total_freq >= min_freq)
            filtered.entries.push_back(entry);
    }
    return filtered;
}

RankedDictionary pool_ur(const std::vector<RankedDictionary>& dicts) {
    if (dicts.empty())
        throw std::invalid_argument("pool_ur: no dictionaries to pool");
    for (const auto& dict : dicts) {
        if (dict.measure.kind() != MeasureKind::ur)
            throw std::invalid_argument("pool_ur: dictionary ranked by '" + dict.measure.name()
                                        + "', pooling is only defined for 'ur'");
    }

    // Accumulate in argument order so the sums match a merged-corpus pass.
    std::map<std::string, DictionaryEntry> pooled;
    for (const auto& dict : dicts) {
        for (const auto& entry : dict.entries) {
            auto [it, inserted] = pooled.try_emplace(entry.word, entry);
            if (!inserted) {
                it->second.score += entry.score;
                it->second.total_freq += entry.total_freq;
            }
        }
    }

    RankedDictionary result{Measure::ur(), {}};
    result.entries.reserve(pooled.size());
    for (auto& [word, entry] : pooled)
        result.entries.push_back(std::move(entry));
    sort_and_number(result.entries);
    return result;
}

ComparisonReport compare(const std::vector<DictionaryEntry>& a,
                         const std::vector<DictionaryEntry>& b, std::int64_t n) {
    if (n < 1)
        throw std::invalid_argument("compare: n must be positive");
    if (static_cast<std::int64_t>(a.size()) < n || static_cast<std::int64_t>(b.size()) < n)
        throw std::invalid_argument("compare: need " + std::to_string(n)
                                    + " entries per list, got " + std::to_string(a.size())
                                    + " and " + std::to_string(b.size()));

    const auto un = static_cast<std::size_t>(n);
    std::unordered_set<std::string> words_a;
    std::unordered_set<std::string> words_b;
    for (std::size_t i = 0; i < un; ++i) {
        words_a.insert(a[i].word);
        words_b.insert(b[i].word);
    }

    ComparisonReport report;
    report.n = n;
    for (std::size_t i = 0; i < un; ++i) {
        if (words_b.count(a[i].word) > 0)
            ++report.common;
        else
            report.only_a.push_back(a[i]);
        if (words_a.count(b[i].word) == 0)
            report.only_b.push_back(b[i]);
    }
    report.jaccard = static_cast<double>(report.common)
                   / static_cast<double>(2 * n - report.common);
    return report;
}

ComparisonReport compare(const RankedDictionary& a, const RankedDictionary& b, std::int64_t n) {
    return compare(a.entries, b.entries, n);
}

}  // namespace lexistat
