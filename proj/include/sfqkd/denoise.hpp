#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "sfqkd/signalio.hpp"

namespace sfqkd::denoise {

/// Rows are repetition periods, columns are samples within a period.
using WaveformMatrix = Eigen::MatrixXd;

/// Thin factorisation M = U diag(S) V^T with r = min(m, n) columns in U and V.
struct SvdFactors {
    Eigen::MatrixXd U;
    Eigen::VectorXd S;  // descending, non-negative
    Eigen::MatrixXd V;
};

SvdFactors svd_factorize(const WaveformMatrix& m);

/// Elementwise mean of the descending spectra of equally shaped blocks.
Eigen::VectorXd noise_reference_spectrum(const std::vector<WaveformMatrix>& noise_blocks);

struct ThresholdPolicy {
    enum class Kind { knee, noise_max, fixed };
    Kind kind = Kind::knee;
    double value = 0.0;  // threshold for `fixed`

    static ThresholdPolicy knee() { return {Kind::knee, 0.0}; }
    static ThresholdPolicy noise_max() { return {Kind::noise_max, 0.0}; }
    static ThresholdPolicy fixed(double v) { return {Kind::fixed, v}; }
};

const char* to_string(ThresholdPolicy::Kind k);
ThresholdPolicy::Kind threshold_kind_from_string(const std::string& s);

struct DenoiseConfig {
    std::size_t block_size = 100;
    ThresholdPolicy policy;
    std::optional<Eigen::VectorXd> noise_reference;
    // Knee search: ratio s_i / s_{i+1} over the first knee_head values. Below
    // knee_min_ratio the spectrum counts as flat and fallback_keep components
    // are kept (0 means ceil(m / 8)).
    std::size_t knee_head = 32;
    double knee_min_ratio = 2.0;
    std::size_t fallback_keep = 0;

    void validate() const;
};

struct Truncation {
    std::size_t cut_index = 0;  // components [0, cut_index) are kept
    double threshold = 0.0;
};

/// `rows` is the matrix height used for the flat-spectrum fallback.
Truncation select_truncation_threshold(std::span<const double> spectrum, const DenoiseConfig& cfg,
                                       std::size_t rows);
Truncation select_truncation_threshold(const Eigen::VectorXd& spectrum, const DenoiseConfig& cfg,
                                       std::size_t rows);

WaveformMatrix truncate_and_reconstruct(const SvdFactors& f, std::size_t cut_index);

/// sqrt(measured^2 - noise^2); DomainError when measured < noise.
double gaussian_deconvolve(double sigma_measured, double sigma_noise);

struct BlockReport {
    std::size_t block_index = 0;
    std::size_t kept_components = 0;
    double threshold = 0.0;
    double frobenius_before = 0.0;
    double frobenius_after = 0.0;
};

struct MatrixResult {
    WaveformMatrix matrix;
    BlockReport report;
};

MatrixResult denoise_matrix(const WaveformMatrix& m, const DenoiseConfig& cfg);

/// Rows of `period_samples` samples grouped into blocks of cfg.block_size
/// rows; the final block may be shorter. Samples after the last whole period
/// are left out of the blocks.
std::vector<WaveformMatrix> split_blocks(const signal::Oscillogram& osc,
                                         std::size_t period_samples, std::size_t block_size);

std::size_t period_samples(const signal::Oscillogram& osc, double repetition_period);

struct DenoiseResult {
    signal::Oscillogram waveform;  // samples past the last whole period are copied unchanged
    std::vector<BlockReport> reports;
};

DenoiseResult denoise_waveform(const signal::Oscillogram& osc, double repetition_period,
                               const DenoiseConfig& cfg);
DenoiseResult denoise_waveform_serial(const signal::Oscillogram& osc, double repetition_period,
                                      const DenoiseConfig& cfg);

/// Averaged spectrum of the blocks cut from a pure-noise recording.
Eigen::VectorXd noise_reference_from_waveform(const signal::Oscillogram& noise,
                                              double repetition_period, std::size_t block_size);

std::string format_report_csv(const std::vector<BlockReport>& reports);

}  // namespace sfqkd::denoise
