#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

namespace sfqkd::signal {

/// Uniformly sampled voltage trace. Sample j sits at origin_time + j * sample_period.
struct Oscillogram {
    double sample_period = 0.0;  // seconds
    std::vector<double> samples;  // volts
    double origin_time = 0.0;     // seconds

    double duration() const;  // time of the last sample relative to the first
    void validate() const;
};

/// Gate windows measured from the first sample: pulse i is integrated over
/// [i * repetition_period + gate_start_offset, ... + gate_width].
struct PulseGateSpec {
    double repetition_period = 0.0;  // seconds
    double gate_start_offset = 0.0;  // seconds
    double gate_width = 0.0;         // seconds
    std::size_t pulse_count = 0;

    void validate() const;
};

struct PulseShape {
    enum class Kind { rectangular, gaussian };
    Kind kind = Kind::rectangular;
    double width = 0.0;  // seconds; full width for rectangles, FWHM for gaussians

    /// Integral of the unit-amplitude shape.
    double area() const;
};

struct AmplitudeLaw {
    enum class Family { constant, gaussian, uniform };
    double mean = 0.0;  // volts
    Family family = Family::constant;
    double spread = 0.0;  // sigma (gaussian) or half-width (uniform), volts
};

struct PulseTrainModel {
    double repetition_rate = 0.0;  // hertz
    double sample_period = 0.0;    // seconds
    std::size_t pulse_count = 0;
    double pulse_offset = 0.0;  // seconds from period start to the pulse start
    PulseShape shape;
    AmplitudeLaw amplitude;
    double instrument_noise_sigma = 0.0;  // volts, per sample
    std::uint64_t rng_seed = 0;

    double repetition_period() const { return 1.0 / repetition_rate; }
    std::size_t samples_per_period() const;
    void validate() const;
};

struct EnergySeries {
    std::vector<double> energies;  // volt-seconds
    PulseGateSpec gate;
};

/// Independent engine per (seed, stream) pair. Streams 1 and 2 are used by
/// the pulse-train synthesis for amplitudes and noise.
std::mt19937_64 stream_engine(std::uint64_t seed, std::uint64_t stream);

std::vector<double> draw_amplitudes(const PulseTrainModel& model);

/// Renders one pulse per period with the given amplitudes and adds the
/// model's instrument noise. Rectangles are anti-aliased so that the sample
/// sum times the period equals amplitude * width exactly.
Oscillogram render_pulse_train(const PulseTrainModel& model, std::span<const double> amplitudes);

Oscillogram synthesize_pulse_train(const PulseTrainModel& model);

enum class OscFormat { detect, single_column, two_column };

Oscillogram parse_oscillogram(const std::string& text, OscFormat format = OscFormat::detect);
Oscillogram load_oscillogram(const std::string& path, OscFormat format = OscFormat::detect);
std::string format_oscillogram(const Oscillogram& osc);

/// Trapezoidal integral of the piecewise-linear interpolant over every gate.
EnergySeries integrate_pulses(const Oscillogram& osc, const PulseGateSpec& gate);
EnergySeries integrate_pulses_serial(const Oscillogram& osc, const PulseGateSpec& gate);

/// Gate with one window per period of the model, `margin` seconds wider than
/// the pulse on each side.
PulseGateSpec gate_for(const PulseTrainModel& model, double margin);

std::string format_energy_csv(const EnergySeries& series);

}  // namespace sfqkd::signal
