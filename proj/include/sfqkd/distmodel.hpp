#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace sfqkd::dist {

struct GaussianModel {
    double mean = 0.0;
    double sigma = 0.0;
};

/// Sample mean, population standard deviation and the excess kurtosis as a
/// goodness diagnostic (NaN when sigma is zero).
struct GaussianFit {
    double mean = 0.0;
    double sigma = 0.0;
    double excess_kurtosis = 0.0;
    std::size_t count = 0;

    GaussianModel model() const { return {mean, sigma}; }
};

GaussianFit fit_gaussian(std::span<const double> samples);

struct Histogram {
    double lower = 0.0;
    double upper = 0.0;
    std::vector<double> bin_centers;
    std::vector<std::size_t> counts;

    std::size_t total() const;
};

/// Equal-width histogram spanning [min, max] of the samples. A degenerate
/// (constant) sample set lands in a single bin of zero width.
Histogram make_histogram(std::span<const double> samples, std::size_t bins);

struct FluctuationDistribution {
    std::vector<double> samples;
    Histogram histogram;
    double mean = 0.0;
    double sigma = 0.0;
    double excess_kurtosis = 0.0;
    std::size_t count = 0;
    // Spread removed by Gaussian deconvolution against a reference, zero if
    // the distribution was reported as measured.
    double removed_noise_sigma = 0.0;
};

FluctuationDistribution make_distribution(std::vector<double> samples, std::size_t bins = 100);

struct IntervalSpec {
    enum class Kind { sigma_multiple, percent };

    Kind kind = Kind::sigma_multiple;
    double factor = 0.0;

    static IntervalSpec sigma_multiple(double y) { return {Kind::sigma_multiple, y}; }
    static IntervalSpec percent(double x) { return {Kind::percent, x}; }
};

struct FluctuationInterval {
    double lower = 0.0;
    double upper = 0.0;
    IntervalSpec construction{};

    double width() const { return upper - lower; }
    bool contains(double x) const { return lower <= x && x <= upper; }
};

/// m +- y*sigma, or (1 +- x/100) m with the endpoints ordered for negative m.
FluctuationInterval make_interval(double mean, double sigma, IntervalSpec spec);

/// Gaussian probability mass outside the interval (both tails).
double gaussian_tail_outside(const GaussianModel& model, const FluctuationInterval& interval);

/// Union bound over settings: sum of the per-setting tail masses.
double tail_probability(std::span<const FluctuationInterval> intervals,
                        std::span<const GaussianModel> models);

enum class PhaseSetting { zero_z = 0, one_z = 1, zero_x = 2 };
enum class IntensityState { signal = 0, decoy = 1, vacuum = 2 };

const char* to_string(PhaseSetting s);
const char* to_string(IntensityState s);

struct BudgetEntry {
    GaussianModel model;
    IntervalSpec spec;
    FluctuationInterval interval;
    // Tail probability set by fiat instead of being derived from the model.
    std::optional<double> asserted_tail;

    static BudgetEntry make(GaussianModel model, IntervalSpec spec,
                            std::optional<double> asserted_tail = std::nullopt);
    double tail() const;
};

/// Phase intervals R_ph^c (radians, absolute angles) and intensity intervals
/// R_int^k (mean photon number) with the tail probability of each group.
struct FluctuationBudget {
    std::array<BudgetEntry, 3> phase;      // indexed by PhaseSetting
    std::array<BudgetEntry, 3> intensity;  // indexed by IntensityState
    std::optional<double> phase_asserted_tail;
    std::optional<double> intensity_asserted_tail;

    const BudgetEntry& at(PhaseSetting s) const { return phase[static_cast<std::size_t>(s)]; }
    const BudgetEntry& at(IntensityState s) const { return intensity[static_cast<std::size_t>(s)]; }

    double phase_tail() const;
    double intensity_tail() const;
    double p_fail() const { return phase_tail() + intensity_tail(); }

    /// Copy with the signal and decoy means replaced and their intervals
    /// re-derived from the stored interval specs.
    FluctuationBudget with_intensity_means(double signal, double decoy) const;

    void validate() const;
};

/// Zero-width phase intervals at the nominal angles (0, pi, pi/2) and
/// zero-width intensity intervals.
FluctuationBudget ideal_budget(double signal, double decoy, double vacuum);

/// Budget file (JSON): per-setting {mean, sigma, interval_spec, asserted_tail?}.
FluctuationBudget parse_budget(const std::string& json_text);
FluctuationBudget load_budget(const std::string& path);
std::string dump_budget(const FluctuationBudget& budget);

}  // namespace sfqkd::dist
