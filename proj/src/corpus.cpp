#include "lexistat/corpus.hpp"

#include <unicode/uchar.h>
#include <unicode/unistr.h>
#include <unicode/utf8.h>

#include <stdexcept>

#include "lexistat/errors.hpp"

namespace lexistat {

namespace {

bool is_hyphen(UChar32 cp) {
    return cp == U'-' || cp == U'‐';
}

bool is_token_char(UChar32 cp, const TokenizerConfig& config) {
    if (u_isalpha(cp))  // general category L
        return true;
    if (config.hyphen_is_letter && is_hyphen(cp))
        return true;
    return config.extra_letter_chars.find(static_cast<char32_t>(cp)) != std::u32string::npos;
}

// Strips leading/trailing hyphens, folds case, and appends the token unless
// nothing is left of it.
void finish_token(const icu::UnicodeString& raw, const TokenizerConfig& config,
                  std::vector<std::string>& out) {
    std::int32_t begin = 0;
    std::int32_t end = raw.length();
    while (begin < end && is_hyphen(raw.char32At(begin)))
        begin = raw.moveIndex32(begin, 1);
    while (end > begin && is_hyphen(raw.char32At(raw.moveIndex32(end, -1))))
        end = raw.moveIndex32(end, -1);
    if (begin >= end)
        return;

    icu::UnicodeString token(raw, begin, end - begin);
    if (config.case_fold)
        token.foldCase(U_FOLD_CASE_DEFAULT);

    std::string utf8;
    token.toUTF8String(utf8);
    out.push_back(std::move(utf8));
}

}  // namespace

std::vector<std::string> tokenize(std::string_view text, const TokenizerConfig& config) {
    std::vector<std::string> tokens;
    icu::UnicodeString current;

    const auto* bytes = reinterpret_cast<const std::uint8_t*>(text.data());
    const auto length = static_cast<std::int32_t>(text.size());
    std::int32_t i = 0;
    while (i < length) {
        const std::int32_t start = i;
        UChar32 cp;
        U8_NEXT(bytes, i, length, cp);
        if (cp < 0)
            throw TokenizeError("invalid UTF-8 sequence", static_cast<std::size_t>(start));

        if (is_token_char(cp, config)) {
            current.append(cp);
        } else if (!current.isEmpty()) {
            finish_token(current, config, tokens);
            current.remove();
        }
    }
    if (!current.isEmpty())
        finish_token(current, config, tokens);
    return tokens;
}

CorpusTable build_table(const std::vector<std::pair<std::string, std::string>>& documents,
                        const TokenizerConfig& config) {
    if (documents.empty())
        throw std::invalid_argument("build_table: corpus has no documents");

    CorpusTable table;
    const std::size_t n = documents.size();
    table.categories.reserve(n);

    for (std::size_t j = 0; j < n; ++j) {
        const auto& [name, text] = documents[j];
        if (name.find_first_of("\t\n\r") != std::string::npos)
            throw std::invalid_argument("build_table: document name contains tab or newline: " + name);
        for (const auto& category : table.categories) {
            if (category.name == name)
                throw std::invalid_argument("build_table: duplicate document name: " + name);
        }

        std::int64_t doc_tokens = 0;
        for (std::string& token : tokenize(text, config)) {
            auto [it, inserted] = table.entries.try_emplace(token);
            if (inserted) {
                it->second.word = it->first;
                it->second.counts.assign(n, 0);
            }
            ++it->second.counts[j];
            ++doc_tokens;
        }
        table.categories.push_back({static_cast<int>(j), name, doc_tokens});
        table.total_tokens += doc_tokens;
    }
    return table;
}

CorpusTable merge_tables(const CorpusTable& a, const CorpusTable& b) {
    for (const auto& ca : a.categories) {
        for (const auto& cb : b.categories) {
            if (ca.name == cb.name)
                throw std::invalid_argument("merge_tables: category name in both corpora: " + ca.name);
        }
    }

    CorpusTable merged;
    const std::size_t na = a.categories.size();
    const std::size_t nb = b.categories.size();
    merged.categories = a.categories;
    for (const auto& category : b.categories) {
        Category shifted = category;
        shifted.id = static_cast<int>(merged.categories.size());
        merged.categories.push_back(shifted);
    }
    merged.total_tokens = a.total_tokens + b.total_tokens;

    for (const auto& [word, dist] : a.entries) {
        FrequencyDistribution extended(word, dist.counts);
        extended.counts.resize(na + nb, 0);
        merged.entries.emplace(word, std::move(extended));
    }
    for (const auto& [word, dist] : b.entries) {
        auto [it, inserted] = merged.entries.try_emplace(word);
        if (inserted) {
            it->second.word = word;
            it->second.counts.assign(na + nb, 0);
        }
        for (std::size_t j = 0; j < nb; ++j)
            it->second.counts[na + j] = dist.counts[j];
    }
    return merged;
}

}  // namespace lexistat
