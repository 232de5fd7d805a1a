#pragma once

#include <array>
#include <cstddef>
#include <string>

#include "sfqkd/distmodel.hpp"

namespace sfqkd::security {

// Index conventions used throughout: intensities (signal, decoy, vacuum)
// follow dist::IntensityState, settings (0Z, 1Z, 0X) follow
// dist::PhaseSetting, Bob's basis is 0 = Z, 1 = X and his outcome is the bit.
inline constexpr std::size_t kIntensities = 3;
inline constexpr std::size_t kSettings = 3;
inline constexpr std::size_t kBasisZ = 0;
inline constexpr std::size_t kBasisX = 1;

/// Concentration correction applied to every observed count before it enters
/// a decoy bound. `azuma` charges sqrt(N_sent ln(1/eps) / 2) per count, the
/// martingale form used for non-i.i.d. sources; `hoeffding` charges
/// sqrt(n ln(1/eps) / 2) on the count n itself.
struct FiniteSizeModel {
    enum class Kind { none, hoeffding, azuma };
    Kind kind = Kind::azuma;

    double deviation(double count, double n_sent, double eps) const;
};

const char* to_string(FiniteSizeModel::Kind k);
FiniteSizeModel::Kind finite_size_kind_from_string(const std::string& s);

/// How the phase-error bound combines interval endpoints. `joint` uses one
/// angle triple for the whole estimate; `per_term` lets every coefficient
/// pick its own worst endpoint, which covers pulses that wander inside their
/// intervals from one emission to the next.
enum class PhaseBound { joint, per_term };

const char* to_string(PhaseBound m);
PhaseBound phase_bound_from_string(const std::string& s);

struct ProtocolParams {
    double n_sent = 1e13;
    double alice_pz = 0.5;  // P_Z for Alice; 0Z and 1Z share it equally
    double bob_pz = 0.5;
    // Nominal source settings used to generate statistics. evaluate_key_rate
    // overwrites them with the budget means.
    std::array<double, kIntensities> mu{0.602, 0.236, 1e-3};
    std::array<double, kIntensities> intensity_prob{0.5, 0.25, 0.25};
    std::array<double, kSettings> phases{0.0, 3.141592653589793, 1.5707963267948966};
    double eps_s = 1e-10;
    double f_e = 1.05;
    FiniteSizeModel finite_size{};
    PhaseBound phase_bound = PhaseBound::per_term;

    double alice_px() const { return 1.0 - alice_pz; }
    double bob_px() const { return 1.0 - bob_pz; }
    double setting_prob(std::size_t c) const { return c < 2 ? alice_pz / 2.0 : alice_px(); }
    double bob_basis_prob(std::size_t b) const { return b == kBasisZ ? bob_pz : bob_px(); }

    // Split of eps_s: half to privacy amplification, the rest to the tag
    // bound, or a quarter each to the tag bound and the concentration
    // corrections when those are enabled.
    double eps_pa() const { return eps_s / 2.0; }
    double eps_tag() const;
    double eps_per_concentration() const;

    void validate() const;
};

struct ChannelDetectorModel {
    double fiber_length_km = 0.0;
    double loss_db_per_km = 0.20;
    double detector_efficiency = 0.80;
    double dark_count_prob = 1e-9;
    double misalignment = 0.005;

    double transmittance() const;
    void validate() const;
};

/// Expected detection counts for every (intensity, setting, Bob basis, Bob
/// outcome), together with the choice probabilities that produced them.
struct ObservedStatistics {
    using OutcomeCounts = std::array<double, 2>;
    using BasisCounts = std::array<OutcomeCounts, 2>;

    double n_sent = 0.0;
    std::array<double, kIntensities> intensity_prob{};
    std::array<double, kSettings> setting_prob{};
    std::array<double, 2> bob_basis_prob{};
    std::array<std::array<BasisCounts, kSettings>, kIntensities> counts{};

    double count(std::size_t k, std::size_t c, std::size_t basis, std::size_t outcome) const
    {
        return counts[k][c][basis][outcome];
    }
    /// Pulses sent with setting c and measured by Bob in `basis`, summed over
    /// intensities.
    double pulses(std::size_t c, std::size_t basis) const
    {
        return n_sent * setting_prob[c] * bob_basis_prob[basis];
    }

    double sifted() const;      // Z-Z detections over all intensities
    double z_errors() const;
    double qber_z() const;
};

/// Outcome probabilities for a coherent pulse of mean photon number `mu`
/// prepared at Bloch angle `theta` and measured in `basis`, with double clicks
/// assigned at random.
std::array<double, 2> detection_probabilities(double mu, double theta, std::size_t basis,
                                              const ChannelDetectorModel& ch);

ObservedStatistics simulate_statistics(const ProtocolParams& p, const ChannelDetectorModel& ch);

/// Smallest n with P[Bin(n_sent, p_fail) > n] <= eps_tag by the multiplicative
/// Chernoff bound.
double tagged_signal_bound(double n_sent, double p_fail, double eps_tag);

enum class ZeroKeyReason {
    none,
    overlapping_intervals,   // decoy structure unusable at some endpoint
    no_single_photons,       // single-photon bound collapsed to zero
    phase_error_too_high,    // e_ph >= 1/2
    negative_length,         // privacy amplification ate everything
};

const char* to_string(ZeroKeyReason r);

struct YieldBound {
    double lower = 0.0;
    double upper = 0.0;
};

/// Single-photon yields (per pulse sent with that setting and basis) for
/// Bob's X-basis outcomes, plus the outcome-summed yield.
struct SinglePhotonXYields {
    std::array<std::array<YieldBound, 2>, kSettings> outcome{};
    std::array<YieldBound, kSettings> total{};
};

struct DecoyBound {
    double value = 0.0;
    ZeroKeyReason reason = ZeroKeyReason::none;
};

/// Weak + vacuum decoy bounds on the single-photon yield of one event class.
/// counts[k] are the detections with intensity k out of `pulses` sent in that
/// class; each intensity sweeps the endpoints of its interval and the worst
/// case is returned.
DecoyBound single_photon_yield_lower(const std::array<double, kIntensities>& counts,
                                     double pulses, const ProtocolParams& p,
                                     const dist::FluctuationBudget& budget);
DecoyBound single_photon_yield_upper(const std::array<double, kIntensities>& counts,
                                     double pulses, const ProtocolParams& p,
                                     const dist::FluctuationBudget& budget);

/// Lower bound S_Z1^L on untagged single-photon Z-basis detections, with
/// n_tag already removed and the result clamped at zero.
DecoyBound decoy_single_photon_bound(const ObservedStatistics& stats,
                                     const dist::FluctuationBudget& budget, double n_tag,
                                     const ProtocolParams& p);

SinglePhotonXYields estimate_x_yields(const ObservedStatistics& stats,
                                      const dist::FluctuationBudget& budget,
                                      const ProtocolParams& p);

/// Loss-tolerant phase-error rate from X-basis single-photon yields. The
/// three states are qubits with Bloch vectors in the x-z plane at the
/// interval endpoints; the worst of the 2^3 endpoint combinations is kept,
/// jointly or term by term depending on `mode`.
/// Throws EstimationError when the states are (nearly) collinear.
double phase_error_rate(const SinglePhotonXYields& yields, const dist::FluctuationBudget& budget,
                        PhaseBound mode = PhaseBound::per_term);

/// e_ph^U = (rate * S_Z1^L + n_tag) / S_Z1^L.
double phase_error_bound(const ObservedStatistics& stats, const dist::FluctuationBudget& budget,
                         double s_z1_lower, double n_tag, const ProtocolParams& p);

double binary_entropy(double x);
double error_correction_cost(double n_sift, double e_z, double f_e);
double key_length(double s_z1_lower, double e_ph_upper, double eps_pa, double lambda_ec);

struct KeyRateResult {
    double s_z1_lower = 0.0;
    double e_ph_upper = 0.0;
    double n_tag = 0.0;
    double n_sift = 0.0;
    double qber_z = 0.0;
    double lambda_ec = 0.0;
    double length = 0.0;  // bits
    double rate = 0.0;    // bits per pulse sent
    double mu_signal = 0.0;
    double mu_decoy = 0.0;
    ZeroKeyReason reason = ZeroKeyReason::none;
};

/// Full chain: simulate, bound S_Z1 and e_ph, evaluate the key length. The
/// budget means replace p.mu and p.phases as the simulated source settings.
KeyRateResult evaluate_key_rate(const ProtocolParams& p, const ChannelDetectorModel& ch,
                                const dist::FluctuationBudget& budget);

struct Range {
    double lo = 0.0;
    double hi = 0.0;
};

struct OptimizationGrid {
    Range signal{0.1, 0.8};
    Range decoy{0.001, 0.15};
    std::size_t signal_steps = 50;
    std::size_t decoy_steps = 50;
};

struct OptimizationResult {
    bool found = false;  // false: every grid point gave zero key
    KeyRateResult best;
};

/// Exhaustive grid search over (mu_signal, mu_decoy) maximizing the key
/// length; ties go to the smaller signal, then the smaller decoy. Percent
/// intervals of the template are re-derived around each candidate.
OptimizationResult optimize_intensities(const ProtocolParams& p, const ChannelDetectorModel& ch,
                                        const dist::FluctuationBudget& budget_template,
                                        const OptimizationGrid& grid);
OptimizationResult optimize_intensities_serial(const ProtocolParams& p,
                                               const ChannelDetectorModel& ch,
                                               const dist::FluctuationBudget& budget_template,
                                               const OptimizationGrid& grid);

}  // namespace sfqkd::security
