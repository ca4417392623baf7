#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <variant>
#include <vector>

#include "skewsim/graph.hpp"
#include "skewsim/graphgen.hpp"
#include "skewsim/spectra.hpp"

namespace skewsim {

struct GnpModel {
  std::int32_t n = 1;
  double p = 0.0;
};

struct RegularModel {
  std::int32_t n = 1;
  std::int32_t d = 0;
  RegularMethod method = RegularMethod::PairingRejection;
  std::int64_t max_attempts = 10000;
};

using ModelDescriptor = std::variant<GnpModel, RegularModel>;

/// Which analytic law an experiment is compared against. Auto resolves to
/// Semicircle for the binomial model and for regular graphs with large or
/// growing degree, and to McKay(d) for fixed small degree (d <= 10).
enum class ReferenceLaw { Auto, Semicircle, McKay };

ReferenceLaw resolve_law(const ModelDescriptor& model, ReferenceLaw requested);

/// Spectrum divisor that maps the model onto its reference law's support:
/// sqrt(n*p) for the binomial model, sqrt(d) for regular-vs-semicircle, and
/// 1 for regular-vs-McKay (the McKay law lives on the unscaled spectrum).
double normalization_scale(const ModelDescriptor& model, ReferenceLaw resolved);

/// Instrumentation hook: called once per sampled trial with the trial index,
/// the graph and its (raw, unnormalized) spectrum. Invoked from worker
/// threads; the callee synchronizes its own state.
using TrialObserver =
    std::function<void(int trial, const OrientedGraph& g, const SkewSpectrum& spec)>;

/// Monte-Carlo estimate of the normalized skew energy. Per-trial values are
/// E / (n^(3/2) sqrt(p)) for the binomial model, E / n for regular-vs-McKay
/// and E / (n sqrt(d)) for regular-vs-semicircle; reference_constant is the
/// matching analytic mean-|x| of the law. The referenced laws are
/// asymptotic, so finite-size means carry o(1) deviations; thresholds used
/// in reports are empirically calibrated at desk scale.
struct EnergyEstimate {
  ModelDescriptor model;
  ReferenceLaw law = ReferenceLaw::Semicircle;
  int trials = 0;
  std::uint64_t seed = 0;
  std::vector<double> normalized_energies;
  double mean = 0.0;
  double std_error = 0.0;
  double reference_constant = 0.0;
};

EnergyEstimate run_energy_experiment(const ModelDescriptor& model, int trials,
                                     std::uint64_t seed, int threads = 0,
                                     ReferenceLaw law = ReferenceLaw::Auto,
                                     const TrialObserver& observer = nullptr);

/// Pooled empirical spectral distribution vs the reference law: histogram
/// over the law's support extended 10% each side (out-of-range values are
/// clamped into the boundary bins so counts always sum to n*trials), plus
/// the two-sided KS distance of the pooled sample against the law's cdf.
struct EsdReport {
  ModelDescriptor model;
  ReferenceLaw law = ReferenceLaw::Semicircle;
  int trials = 0;
  std::uint64_t seed = 0;
  double scale = 1.0;
  std::vector<double> bin_edges;       // bins+1 ascending edges
  std::vector<std::int64_t> counts;    // bins entries
  double ks_distance = 0.0;
  std::vector<double> pooled_spectra;  // filled only when keep_spectra
};

EsdReport esd_experiment(const ModelDescriptor& model, int trials, int bins,
                         std::uint64_t seed, int threads = 0,
                         ReferenceLaw law = ReferenceLaw::Auto,
                         bool keep_spectra = false,
                         const TrialObserver& observer = nullptr);

/// Two-sided Kolmogorov-Smirnov statistic of a sorted sample against a
/// reference cdf: max_i max(|i/N - F(x_i)|, |(i-1)/N - F(x_i)|).
/// Throws ParameterError on an empty or unsorted sample.
double ks_distance(std::span<const double> sorted_values,
                   const std::function<double(double)>& reference_cdf);

/// Eigenvalue-count concentration for the regular model: per trial, count
/// eigenvalues of the sqrt(d)-normalized spectrum inside [lower, upper] and
/// compare with n * integral of the semicircle density over the interval.
/// Intended for growing d, hence the PairingRepair default. Intervals
/// shorter than delta^(-4/5) * d^(-1/10) * ln(d)^(1/5) are flagged
/// (interval_length_ok = false) but still run.
struct ConcentrationParams {
  std::int32_t n = 1;
  std::int32_t d = 0;
  double lower = -1.0;
  double upper = 1.0;
  double delta = 0.1;
  int trials = 10;
  std::uint64_t seed = 0;
  int threads = 0;
  RegularMethod method = RegularMethod::PairingRepair;
  std::int64_t max_attempts = 10000;
};

struct ConcentrationReport {
  ConcentrationParams params;
  std::vector<std::int64_t> counts;  // per-trial eigenvalue counts in the interval
  double expected = 0.0;             // n * (F_sc(upper) - F_sc(lower))
  double fraction_within = 0.0;      // trials with |count - expected| < delta*expected
  bool interval_length_ok = true;
};

ConcentrationReport run_concentration_experiment(const ConcentrationParams& params,
                                                 const TrialObserver& observer = nullptr);

}  // namespace skewsim
