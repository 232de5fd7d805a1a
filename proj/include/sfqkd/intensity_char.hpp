#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "sfqkd/denoise.hpp"
#include "sfqkd/distmodel.hpp"
#include "sfqkd/signalio.hpp"

namespace sfqkd::intensity {

using dist::IntensityState;

struct ConversionConstants {
    double gain = 703.0;             // O/E conversion gain, volts per watt
    double attenuation = 1.876e-6;   // power transmission after the monitor tap
    double wavelength = 1550.12e-9;  // metres
    double planck = 6.62607015e-34;  // joule seconds
    double light_speed = 299792458.0;

    void validate() const;
    double photon_energy() const;  // joules
};

/// mu = (S_e / G) * A / (h c / lambda). Negative areas stay negative.
double pulse_to_photon_number(double s_e, const ConversionConstants& k);
double photon_number_to_pulse(double mu, const ConversionConstants& k);
std::vector<double> to_photon_numbers(std::span<const double> s_e, const ConversionConstants& k);

struct ClassifyOptions {
    std::size_t histogram_bins = 128;
    std::size_t smoothing_radius = 2;  // moving-average half width, in bins
    std::size_t max_iterations = 200;
    double min_separation = 4.0;  // adjacent mean gap over the larger spread
};

struct Classification {
    std::vector<IntensityState> labels;
    // Indexed by IntensityState.
    std::array<double, 3> centers{};
    std::array<double, 3> spreads{};
    std::array<std::size_t, 3> counts{};
    std::size_t iterations = 0;

    double proportion(IntensityState s) const;
};

/// Three-level 1-D k-means seeded at the three tallest modes of a smoothed
/// histogram; the lowest cluster is vacuum and the highest signal.
Classification classify_pulses(std::span<const double> values, const ClassifyOptions& opts = {});

/// Classification statistics for externally supplied labels.
Classification classification_from_labels(std::span<const double> values,
                                          std::span<const IntensityState> labels);

/// Per-pulse energy noise (volt-seconds) implied by an averaged noise
/// spectrum of rows x cols blocks, for a gate of `gate_width` seconds.
double noise_energy_sigma(const Eigen::VectorXd& noise_spectrum, std::size_t rows,
                          std::size_t cols, double sample_period, double gate_width);

struct StateResult {
    IntensityState state = IntensityState::signal;
    dist::FluctuationDistribution distribution;  // photon numbers
    double measured_sigma = 0.0;
    // Measured spread fell below the noise spread; sigma reported as 0.
    bool over_subtracted = false;
};

struct IntensityPipelineOptions {
    ClassifyOptions classify;
    std::size_t histogram_bins = 100;
    bool svd_denoise = true;
    // Replaces clustering when present; one label per gated pulse.
    std::optional<std::vector<IntensityState>> ground_truth;
};

struct IntensityResult {
    std::array<StateResult, 3> states;  // indexed by IntensityState
    Classification classification;
    std::vector<double> photon_numbers;
    std::vector<denoise::BlockReport> reports;
    double noise_sigma_photons = 0.0;

    const StateResult& at(IntensityState s) const { return states[static_cast<std::size_t>(s)]; }
};

/// Denoise, integrate, convert, classify and fit each state. With a noise
/// reference the per-state sigma is deconvolved against the noise energy it
/// implies; the reference must come from blocks of dn.block_size periods.
IntensityResult intensity_distribution_pipeline(
    const signal::Oscillogram& osc, const signal::PulseGateSpec& gate,
    const ConversionConstants& k, const denoise::DenoiseConfig& dn,
    const std::optional<Eigen::VectorXd>& noise_ref, const IntensityPipelineOptions& opts = {});

std::string format_intensity_histogram_csv(const dist::FluctuationDistribution& d);
std::string format_intensity_summary_json(const IntensityResult& r);

// Synthetic stream with randomly chosen intensity settings.
struct IntensityStreamModel {
    ConversionConstants constants;
    std::array<double, 3> means{0.602, 0.236, 0.0};  // photons, by IntensityState
    std::array<double, 3> sigmas{0.0, 0.0, 0.0};
    std::array<double, 3> weights{6.0, 1.0, 1.0};
    // Timing, pulse shape, pulse count, instrument noise and seed; the
    // amplitude law is ignored.
    signal::PulseTrainModel train;

    void validate() const;
};

struct IntensityStream {
    signal::Oscillogram osc;
    std::vector<IntensityState> labels;
    std::vector<double> true_photon_numbers;
};

IntensityStream synthesize_intensity_stream(const IntensityStreamModel& m);

}  // namespace sfqkd::intensity
