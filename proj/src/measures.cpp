#include "lexistat/measures.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <stdexcept>

namespace lexistat {

namespace {

// Exact summation is used up to this frequency; the asymptotic expansion
// takes over above it, where its truncation error is already below 1e-13.
constexpr std::int64_t kHarmonicExactCutoff = 256;

void require(bool condition, const char* message) {
    if (!condition)
        throw std::invalid_argument(message);
}

}  // namespace

FrequencyDistribution::FrequencyDistribution(std::string w, std::vector<std::int64_t> c)
    : word(std::move(w)), counts(std::move(c)) {
    for (std::int64_t count : counts)
        require(count >= 0, "FrequencyDistribution: negative count");
}

std::int64_t FrequencyDistribution::total() const {
    std::int64_t sum = 0;
    for (std::int64_t count : counts)
        sum += count;
    return sum;
}

std::int64_t FrequencyDistribution::range() const {
    return std::count_if(counts.begin(), counts.end(),
                         [](std::int64_t count) { return count > 0; });
}

GeneralizedParams::GeneralizedParams(double a) : a_(a) {
    require(a >= 0.0 && a <= 1.0, "GeneralizedParams: a must lie in [0, 1]");
}

double harmonic_r(std::int64_t f) {
    require(f >= 0, "harmonic_r: frequency must be non-negative");
    if (f > kHarmonicExactCutoff)
        return harmonic_r_asymptotic(f);
    double sum = 0.0;
    for (std::int64_t k = 1; k <= f; ++k)
        sum += 1.0 / static_cast<double>(k);
    return sum;
}

double harmonic_r_asymptotic(std::int64_t f) {
    require(f >= 1, "harmonic_r_asymptotic: frequency must be positive");
    // H_F = psi(F+1) + C with psi(x) ~ ln x - 1/(2x) - 1/(12x^2) + 1/(120x^4).
    const double x = static_cast<double>(f) + 1.0;
    const double x2 = x * x;
    return std::log(x) + kEulerGamma - 1.0 / (2.0 * x) - 1.0 / (12.0 * x2)
         + 1.0 / (120.0 * x2 * x2);
}

double generalized_m(std::int64_t f, std::int64_t t, const GeneralizedParams& params) {
    require(t >= 1, "generalized_m: range must be positive");
    require(f >= t, "generalized_m: frequency cannot be below range");
    return std::pow(static_cast<double>(f), 1.0 - params.a())
         * std::pow(static_cast<double>(t), params.a());
}

double juilland_d(const FrequencyDistribution& dist) {
    const std::size_t n = dist.category_count();
    require(n >= 2, "juilland_d: dispersion undefined for a single category");
    const std::int64_t total = dist.total();
    require(total > 0, "juilland_d: total frequency must be positive");

    const double mean = static_cast<double>(total) / static_cast<double>(n);
    double variance = 0.0;
    for (std::int64_t count : dist.counts) {
        const double d = static_cast<double>(count) - mean;
        variance += d * d;
    }
    variance /= static_cast<double>(n);
    const double v = std::sqrt(variance) / mean;
    return 1.0 - v / std::sqrt(static_cast<double>(n - 1));
}

double juilland_u(const FrequencyDistribution& dist) {
    return static_cast<double>(dist.total()) * juilland_d(dist);
}

namespace {

// p_j over the categories: F_j / F for equal sizes, else proportional
// frequencies F_j / s_j renormalized to sum 1.
std::vector<double> category_probabilities(const FrequencyDistribution& dist,
                                           const std::vector<std::int64_t>* sizes) {
    if (sizes != nullptr) {
        require(sizes->size() == dist.category_count(),
                "carroll: category size list must match the distribution");
        for (std::int64_t s : *sizes)
            require(s > 0, "carroll: category sizes must be positive");
    }
    std::vector<double> p(dist.category_count());
    double norm = 0.0;
    for (std::size_t j = 0; j < p.size(); ++j) {
        p[j] = sizes ? static_cast<double>(dist.counts[j]) / static_cast<double>((*sizes)[j])
                     : static_cast<double>(dist.counts[j]);
        norm += p[j];
    }
    for (double& pj : p)
        pj /= norm;
    return p;
}

}  // namespace

double carroll_d2(const FrequencyDistribution& dist,
                  const std::vector<std::int64_t>* category_sizes) {
    const std::size_t n = dist.category_count();
    require(n >= 2, "carroll_d2: log n = 0, D2 undefined for a single category");
    require(dist.total() > 0, "carroll_d2: total frequency must be positive");

    double entropy = 0.0;
    for (double pj : category_probabilities(dist, category_sizes)) {
        if (pj > 0.0)
            entropy -= pj * std::log(pj);
    }
    return entropy / std::log(static_cast<double>(n));
}

double carroll_um(const FrequencyDistribution& dist,
                  const std::vector<std::int64_t>* category_sizes) {
    const double d2 = carroll_d2(dist, category_sizes);
    const double f = static_cast<double>(dist.total());

    double f_min;
    if (category_sizes != nullptr) {
        const std::int64_t min_size =
            *std::min_element(category_sizes->begin(), category_sizes->end());
        std::int64_t size_total = 0;
        for (std::int64_t s : *category_sizes)
            size_total += s;
        f_min = f * static_cast<double>(min_size) / static_cast<double>(size_total);
    } else {
        f_min = f / static_cast<double>(dist.category_count());
    }
    return d2 * f + (1.0 - d2) * f_min;
}

double ur_score(const FrequencyDistribution& dist) {
    // Plain left-to-right sum: it keeps the score bit-identical whether a
    // corpus is scored whole or pooled category by category.
    double sum = 0.0;
    for (std::int64_t count : dist.counts)
        sum += harmonic_r(count);
    return sum;
}

double stevens_r(double stimulus, const StevensParams& params) {
    require(stimulus >= 0.0, "stevens_r: stimulus must be non-negative");
    require(params.exponent > 0.0, "stevens_r: exponent must be positive");
    return params.scale * std::pow(stimulus, params.exponent) + params.offset;
}

std::vector<LawCurveRow> law_curves(std::int64_t max_f) {
    require(max_f >= 1, "law_curves: max_f must be positive");
    std::vector<LawCurveRow> rows;
    rows.reserve(static_cast<std::size_t>(max_f));
    double harmonic = 0.0;
    double compensation = 0.0;
    for (std::int64_t f = 1; f <= max_f; ++f) {
        // Kahan-compensated running sum of 1/f.
        const double term = 1.0 / static_cast<double>(f) - compensation;
        const double next = harmonic + term;
        compensation = (next - harmonic) - term;
        harmonic = next;

        rows.push_back({f,
                        std::sqrt(static_cast<double>(f)),
                        harmonic,
                        std::log(static_cast<double>(f)) + kEulerGamma});
    }
    return rows;
}

double round_half_away(double value, int decimals) {
    double scale = 1.0;
    for (int i = 0; i < decimals; ++i)
        scale *= 10.0;
    const double scaled = value * scale;
    return (scaled < 0.0 ? -std::floor(-scaled + 0.5) : std::floor(scaled + 0.5)) / scale;
}

std::string format_fixed(double value, int decimals) {
    // std::to_chars is locale-independent, so the separator stays a dot.
    char buffer[64];
    const auto result = std::to_chars(buffer, buffer + sizeof(buffer),
                                      round_half_away(value, decimals),
                                      std::chars_format::fixed, decimals);
    return std::string(buffer, result.ptr);
}

}  // namespace lexistat
