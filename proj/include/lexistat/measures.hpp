#ifndef LEXISTAT_MEASURES_HPP
#define LEXISTAT_MEASURES_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

// Word-usage measures over per-category frequency counts: total frequency,
// range, the generalized F/t compromise family, Juilland's dispersion-based
// usage coefficient, Carroll's entropy-based usage coefficient, and the
// harmonic-number usage measure U_R together with the psychophysical
// response laws it interpolates between.
//
// Everything here is a pure function over immutable inputs; no shared state.

namespace lexistat {

/// Euler-Mascheroni constant, the limit of H_N - ln N.
inline constexpr double kEulerGamma = 0.5772156649015329;

/// Per-category frequency counts of one word. Houses the total corpus
/// frequency F (total()) and the range t (range()).
struct FrequencyDistribution {
    std::string word;
    std::vector<std::int64_t> counts;  // F_j for category j, all >= 0

    FrequencyDistribution() = default;
    FrequencyDistribution(std::string w, std::vector<std::int64_t> c);

    std::size_t category_count() const { return counts.size(); }

    /// F: sum of all per-category counts.
    std::int64_t total() const;

    /// t: number of categories with a nonzero count.
    std::int64_t range() const;
};

/// Interpolation parameter for the generalized measure F^(1-a) * t^a.
/// a = 0 ranks by frequency alone, a = 1 by range alone.
class GeneralizedParams {
  public:
    explicit GeneralizedParams(double a);
    double a() const { return a_; }

  private:
    double a_;
};

/// Parameters of the power-law response R = scale * S^exponent + offset.
struct StevensParams {
    double scale = 1.0;
    double offset = 0.0;
    double exponent = 0.5;  // must be > 0
};

/// Partial sum of the harmonic series, H_F = sum_{k=1..F} 1/k = psi(F+1) + C.
/// H_0 = 0, H_1 = 1. Exact summation for small F, asymptotic expansion above
/// a fixed cutoff; the two paths agree within ~1e-13 at the switch.
double harmonic_r(std::int64_t f);

/// Asymptotic evaluation of H_F through the digamma expansion at F+1:
/// ln(F+1) + C - 1/(2(F+1)) - 1/(12(F+1)^2) + 1/(120(F+1)^4).
/// Requires F >= 1; coarse near 1, accurate to ~1e-14 relative by F = 64.
double harmonic_r_asymptotic(std::int64_t f);

/// Generalized usage measure F^(1-a) * t^a. Requires F >= t >= 1.
double generalized_m(std::int64_t f, std::int64_t t, const GeneralizedParams& params);

/// Juilland's dispersion coefficient D = 1 - V/sqrt(n-1), where V is the
/// coefficient of variation (population std / mean) of the counts.
/// 1 for perfectly even counts, 0 when all frequency sits in one category.
/// Requires n >= 2 categories and a positive total.
double juilland_d(const FrequencyDistribution& dist);

/// Juilland's usage coefficient U = F * D.
double juilland_u(const FrequencyDistribution& dist);

/// Carroll's dispersion index D2: Shannon entropy of the category
/// distribution normalized by log n. With category sizes given, proportional
/// frequencies F_j/s_j are used in place of absolute ones. 0*log 0 == 0;
/// the value is independent of the log base. Requires n >= 2, total > 0.
double carroll_d2(const FrequencyDistribution& dist,
                  const std::vector<std::int64_t>* category_sizes = nullptr);

/// Carroll's usage coefficient U_m = D2*F + (1 - D2)*f_min, where f_min is
/// the frequency floor F * (min size / total size), i.e. F/n for equal-sized
/// categories. Stays positive when all frequency concentrates in one
/// category, unlike Juilland's U.
double carroll_um(const FrequencyDistribution& dist,
                  const std::vector<std::int64_t>* category_sizes = nullptr);

/// U_R: sum over categories of H_{F_j}. Needs no dispersion normalizer, so
/// it is defined for any n >= 1, and pooling corpora just adds scores.
double ur_score(const FrequencyDistribution& dist);

/// Power-law response a * S^n + b; with default parameters, sqrt(S).
double stevens_r(double stimulus, const StevensParams& params = {});

/// One row of the response-law comparison: the power-law, harmonic-sum and
/// logarithmic responses at integer stimulus f.
struct LawCurveRow {
    std::int64_t f = 0;
    double stevens = 0.0;         // sqrt(f)
    double harmonic = 0.0;        // H_f
    double weber_fechner = 0.0;   // ln f + C
};

/// Rows for f = 1..max_f. The harmonic column is carried as a compensated
/// running sum, so long tables stay exact to the last ulp.
std::vector<LawCurveRow> law_curves(std::int64_t max_f);

/// Round half away from zero at the given number of decimals.
double round_half_away(double value, int decimals);

/// Fixed-point decimal formatting with half-away-from-zero rounding and a
/// dot separator, e.g. format_fixed(3.4189, 2) == "3.42".
std::string format_fixed(double value, int decimals);

}  // namespace lexistat

#endif
