#pragma once

#include <cstdint>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "sfqkd/denoise.hpp"
#include "sfqkd/distmodel.hpp"
#include "sfqkd/signalio.hpp"

namespace sfqkd::phase {

/// Two-output Mach-Zehnder readout. CD1 sees I sin^2(x/2) and CD2 sees
/// (I/R) cos^2(x/2) on top of the detector floors, x = theta'_A - theta_B.
struct InterferometerModel {
    double intensity = 0.0;  // volt-seconds at CD1
    double loss_ratio = 1.0;  // R
    double d1_floor = 0.0;
    double d2_floor = 0.0;

    void validate() const;
};

struct DetectorEnergies {
    double d1 = 0.0;
    double d2 = 0.0;
};

DetectorEnergies interferometer_forward(const InterferometerModel& m, double theta_a_actual,
                                        double theta_b);

/// How R is read off the scan extremes.
enum class RConvention {
    floor_compensated,  // (D1max - D1min) / (D2max - D2min)
    peak_ratio,         // D1max / D2max
};

const char* to_string(RConvention c);
RConvention r_convention_from_string(const std::string& s);

struct CalibrationRecord {
    double d1_min = 0.0;
    double d1_max = 0.0;
    double d2_min = 0.0;
    double d2_max = 0.0;
    double r = 1.0;
    double delta_nominal = 0.0;  // theta_A - theta_B
    double theta_b = 0.0;
    // Scan proxy values where each detector first crosses its half-energy
    // level, when the scan brackets one.
    std::optional<double> d1_half_point;
    std::optional<double> d2_half_point;

    void validate() const;
    InterferometerModel model() const;
};

struct ScanPoint {
    double proxy = 0.0;  // applied modulator setting, arbitrary units
    double d1 = 0.0;
    double d2 = 0.0;
};

struct CalibrationOptions {
    RConvention r_convention = RConvention::floor_compensated;
    // Minimum (max - min) on each detector, relative to its max.
    double contrast_floor = 0.05;
};

CalibrationRecord calibrate(const std::vector<ScanPoint>& scan, const CalibrationOptions& opts = {});

/// Measurement basis paired with Alice's nominal phase: pi/2 for 0 and pi, 0 for pi/2.
double theta_b_for(double theta_a);

/// Copy of the record bound to a nominal setting.
CalibrationRecord for_setting(CalibrationRecord cal, double theta_a);

/// Interferometer inversion. `branch_negative` picks the sign of theta'_A - theta_B.
/// Energies must already sit on or above the floors.
double compute_phase_deviation(double d1, double d2, const CalibrationRecord& cal,
                               bool branch_negative);

enum class SampleFlag : std::uint8_t {
    ok,
    clamped,     // reading below a floor by less than the tolerance, clamped
    edge,        // |theta'_A - theta_B| at 0 or pi, branch ambiguous
    saturated,   // CD2 at its floor
};

struct PhaseInversion {
    std::vector<double> deviations;  // every pulse, including flagged ones
    std::vector<SampleFlag> flags;
    std::size_t clamped = 0;
    std::size_t edge = 0;
    std::size_t saturated = 0;

    /// Deviations of the pulses that are neither edge nor saturated.
    std::vector<double> retained() const;
};

struct InversionOptions {
    // Energy noise floor (volt-seconds). Readings below a detector floor by at
    // most clamp_factor * noise_floor are clamped; further below is a DataError.
    double noise_floor = 0.0;
    double clamp_factor = 3.0;
    // Pulses with |theta'_A - theta_B| within edge_margin of 0 or pi are edge samples.
    double edge_margin = 1e-6;
};

PhaseInversion invert_phases(const std::vector<double>& d1, const std::vector<double>& d2,
                             const CalibrationRecord& cal, const InversionOptions& opts = {});

struct PhasePipelineOptions {
    bool svd_denoise = true;
    InversionOptions inversion;
    std::size_t histogram_bins = 100;
    // Measured spread of the theta_A = 0 reference; when set the reported
    // sigma is deconvolved against it.
    std::optional<double> reference_sigma;
};

struct PhaseMeasurement {
    PhaseInversion inversion;
    signal::EnergySeries cd1_energies;
    signal::EnergySeries cd2_energies;
    std::vector<denoise::BlockReport> cd1_reports;
    std::vector<denoise::BlockReport> cd2_reports;
};

/// Denoise, integrate and invert both detector channels.
PhaseMeasurement measure_phase(const signal::Oscillogram& cd1, const signal::Oscillogram& cd2,
                               const signal::PulseGateSpec& gate, const CalibrationRecord& cal,
                               const denoise::DenoiseConfig& dn,
                               const PhasePipelineOptions& opts = {});

/// Distribution over the retained deviations delta; `cal` is bound to theta_a
/// internally.
dist::FluctuationDistribution phase_distribution_pipeline(
    const signal::Oscillogram& cd1, const signal::Oscillogram& cd2,
    const signal::PulseGateSpec& gate, const CalibrationRecord& cal, double theta_a,
    const denoise::DenoiseConfig& dn, const PhasePipelineOptions& opts = {});

struct PhaseSummary {
    double nominal_phase = 0.0;
    double mean = 0.0;   // absolute phase theta'_A
    double sigma = 0.0;
    std::size_t n_samples = 0;
};

/// Summary record: the theta_A = 0 reference reports mean 0 and sigma 0,
/// other settings report theta_A + mean(delta) and the distribution sigma.
PhaseSummary summarize_phase(const dist::FluctuationDistribution& d, double theta_a);

std::string format_phase_histogram_csv(const dist::FluctuationDistribution& d);
std::string format_phase_summary_json(const PhaseSummary& s);

/// Parses "0", "pi/2", "pi" or a plain number of radians.
double parse_nominal_phase(const std::string& s);

// Synthetic two-detector measurement.
struct PhaseSetupModel {
    InterferometerModel interferometer;
    double theta_a = 0.0;
    double deviation_mean = 0.0;   // radians, added to theta_a
    double deviation_sigma = 0.0;  // radians
    // Timing, pulse shape, pulse count, instrument noise and seed. The
    // amplitude law is ignored; amplitudes follow from the energies.
    signal::PulseTrainModel train;
};

struct TwoChannelTrace {
    signal::Oscillogram cd1;
    signal::Oscillogram cd2;
    std::vector<double> true_deviations;
};

TwoChannelTrace synthesize_phase_measurement(const PhaseSetupModel& m);

/// Noiseless gated energies at `points` phase differences evenly spread over
/// [0, span]; the proxy is the phase difference itself.
std::vector<ScanPoint> synthesize_scan(const InterferometerModel& m, std::size_t points,
                                       double span = 4.0 * std::numbers::pi);

}  // namespace sfqkd::phase
