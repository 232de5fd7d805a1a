#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "sfqkd/distmodel.hpp"
#include "sfqkd/security.hpp"

namespace sfqkd::sweep {

/// Measured phase fluctuation per setting (0Z, 1Z, 0X), radians.
std::array<dist::GaussianModel, 3> measured_phase_models();
/// Measured intensity fluctuation per state (signal, decoy, vacuum), photons.
std::array<dist::GaussianModel, 3> measured_intensity_models();

enum class ScenarioKind {
    phase_only,           // phase intervals, exact intensities, optimized mu
    intensity_fixed,      // percent intensity intervals at fixed mu, phases exact
    intensity_optimized,  // percent intensity intervals, optimized mu
    combined,             // phase and percent intensity intervals, optimized mu
    measured,             // measured intensity spreads at fixed mu, phase intervals
    budget,               // budget supplied by the caller
};

const char* to_string(ScenarioKind k);
ScenarioKind scenario_from_string(const std::string& s);

struct ScenarioSpec {
    ScenarioKind kind = ScenarioKind::phase_only;
    bool optimize = true;
    // Zero gives exact phases at the measured means.
    double phase_sigma_multiple = 6.2;
    // Percent half-width for the signal and decoy intervals; zero is exact.
    double intensity_percent = 0.0;
    double intensity_sigma_multiple = 6.2;  // measured scenario only
    double intensity_tail = 1.41e-9;        // asserted whenever intensities fluctuate
    std::array<double, 2> fixed_mu{0.602, 0.236};
    double vacuum_mu = 1e-3;
    std::array<dist::GaussianModel, 3> phase_models = measured_phase_models();
    std::array<dist::GaussianModel, 3> intensity_models = measured_intensity_models();
    std::optional<dist::FluctuationBudget> budget;  // ScenarioKind::budget

    void validate() const;
};

/// Defaults for each scenario: intensity scenarios use +-1% and exact phases,
/// phase-only uses exact intensities, combined uses both.
ScenarioSpec scenario_defaults(ScenarioKind k);

/// Budget for the scenario with signal and decoy centred on the given means.
dist::FluctuationBudget scenario_budget(const ScenarioSpec& s, double mu_signal, double mu_decoy);

/// Key rate at one operating point; optimized scenarios search `grid`.
security::KeyRateResult evaluate_scenario(const ScenarioSpec& s,
                                          const security::ProtocolParams& p,
                                          const security::ChannelDetectorModel& ch,
                                          const security::OptimizationGrid& grid);

struct SweepConfig {
    ScenarioSpec scenario;
    security::ProtocolParams protocol;
    security::ChannelDetectorModel channel;
    security::OptimizationGrid grid;
    double distance_start_km = 0.0;
    double distance_stop_km = 200.0;
    double distance_step_km = 2.0;
    std::vector<double> n_sent_values{1e12, 3.1622776601683795e12, 1e13};

    std::vector<double> distances() const;
    void validate() const;
};

struct SweepPoint {
    double distance_km = 0.0;
    security::KeyRateResult result;
};

struct SweepCurve {
    double n_sent = 0.0;
    std::vector<SweepPoint> points;

    /// Largest distance with a positive key length, or -1 if there is none.
    double max_distance_km() const;
};

/// One curve per N_sent, in config order; points are in distance order.
std::vector<SweepCurve> run_sweep(const SweepConfig& cfg);
std::vector<SweepCurve> run_sweep_serial(const SweepConfig& cfg);

/// "1e12", "1e12.5", ...
std::string n_sent_label(double n_sent);

std::string format_rate_csv(const SweepCurve& c);
std::string format_detail_csv(const SweepCurve& c);
/// Log-scale plot of rate CSVs named `<stem>_N<label>.csv`.
std::string gnuplot_script(const std::string& stem, const std::vector<SweepCurve>& curves);

}  // namespace sfqkd::sweep
