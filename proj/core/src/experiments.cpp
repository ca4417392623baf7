#include "skewsim/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "skewsim/density.hpp"
#include "skewsim/detail/parallel.hpp"
#include "skewsim/errors.hpp"
#include "skewsim/rng.hpp"

namespace skewsim {

namespace {

OrientedGraph sample_model(const ModelDescriptor& model, std::uint64_t trial_seed) {
  if (const auto* gnp = std::get_if<GnpModel>(&model)) {
    GnpParams params{gnp->n, gnp->p, trial_seed};
    return sample_gnp_oriented(params);
  }
  const auto& reg = std::get<RegularModel>(model);
  RegularParams params{reg.n, reg.d, trial_seed, reg.max_attempts, reg.method};
  return sample_regular_oriented(params);
}

std::int32_t model_order(const ModelDescriptor& model) {
  return std::visit([](const auto& m) { return m.n; }, model);
}

DensityModel reference_model(const ModelDescriptor& model, ReferenceLaw law) {
  if (law == ReferenceLaw::McKay) {
    const auto* reg = std::get_if<RegularModel>(&model);
    if (reg == nullptr)
      throw ParameterError("the McKay law applies to the regular model only");
    return DensityModel::mckay(reg->d);
  }
  return DensityModel::semicircle();
}

// Rethrows worker errors with the trial index attached, preserving the type.
template <typename Fn>
void run_trial(int trial, Fn&& fn) {
  auto annotate = [trial](const std::string& what) {
    return "trial " + std::to_string(trial) + ": " + what;
  };
  try {
    fn();
  } catch (const SamplingError& e) {
    throw SamplingError(annotate(e.what()));
  } catch (const NumericError& e) {
    throw NumericError(annotate(e.what()));
  } catch (const ParameterError& e) {
    throw ParameterError(annotate(e.what()));
  }
}

struct MeanStderr {
  double mean = 0.0;
  double std_error = 0.0;
};

MeanStderr mean_stderr(const std::vector<double>& xs) {
  MeanStderr out;
  if (xs.empty()) return out;
  for (double x : xs) out.mean += x;
  out.mean /= static_cast<double>(xs.size());
  if (xs.size() < 2) return out;
  double var = 0.0;
  for (double x : xs) var += (x - out.mean) * (x - out.mean);
  var /= static_cast<double>(xs.size() - 1);
  out.std_error = std::sqrt(var / static_cast<double>(xs.size()));
  return out;
}

}  // namespace

ReferenceLaw resolve_law(const ModelDescriptor& model, ReferenceLaw requested) {
  if (requested != ReferenceLaw::Auto) return requested;
  if (const auto* reg = std::get_if<RegularModel>(&model)) {
    if (reg->d >= 2 && reg->d <= 10) return ReferenceLaw::McKay;
  }
  return ReferenceLaw::Semicircle;
}

double normalization_scale(const ModelDescriptor& model, ReferenceLaw resolved) {
  if (const auto* gnp = std::get_if<GnpModel>(&model))
    return std::sqrt(static_cast<double>(gnp->n) * gnp->p);
  const auto& reg = std::get<RegularModel>(model);
  if (resolved == ReferenceLaw::McKay) return 1.0;
  return std::sqrt(static_cast<double>(reg.d));
}

EnergyEstimate run_energy_experiment(const ModelDescriptor& model, int trials,
                                     std::uint64_t seed, int threads, ReferenceLaw law,
                                     const TrialObserver& observer) {
  if (trials < 1) throw ParameterError("trials must be at least 1");
  const ReferenceLaw resolved = resolve_law(model, law);

  EnergyEstimate report;
  report.model = model;
  report.law = resolved;
  report.trials = trials;
  report.seed = seed;
  report.reference_constant = energy_constant(reference_model(model, resolved));
  report.normalized_energies.assign(static_cast<std::size_t>(trials), 0.0);

  const double n = static_cast<double>(model_order(model));
  double divisor;
  if (const auto* gnp = std::get_if<GnpModel>(&model)) {
    divisor = std::pow(n, 1.5) * std::sqrt(gnp->p);
  } else {
    const auto& reg = std::get<RegularModel>(model);
    divisor = resolved == ReferenceLaw::McKay ? n : n * std::sqrt(static_cast<double>(reg.d));
  }

  detail::parallel_for_index(trials, threads, [&](int t) {
    run_trial(t, [&] {
      const OrientedGraph g = sample_model(model, derive_seed(seed, static_cast<std::uint64_t>(t)));
      const SkewSpectrum spec = skew_spectrum(skew_adjacency(g));
      if (observer) observer(t, g, spec);
      const double energy = skew_energy(spec);
      // An empty model (p = 0 or d = 0) has zero energy and a zero divisor.
      report.normalized_energies[static_cast<std::size_t>(t)] =
          divisor > 0.0 ? energy / divisor : 0.0;
    });
  });

  const MeanStderr ms = mean_stderr(report.normalized_energies);
  report.mean = ms.mean;
  report.std_error = ms.std_error;
  return report;
}

double ks_distance(std::span<const double> sorted_values,
                   const std::function<double(double)>& reference_cdf) {
  if (sorted_values.empty()) throw ParameterError("KS distance of an empty sample");
  if (!std::is_sorted(sorted_values.begin(), sorted_values.end()))
    throw ParameterError("KS distance requires an ascending sample");
  const double count = static_cast<double>(sorted_values.size());
  double dist = 0.0;
  for (std::size_t i = 0; i < sorted_values.size(); ++i) {
    const double f = reference_cdf(sorted_values[i]);
    const double hi = std::fabs(static_cast<double>(i + 1) / count - f);
    const double lo = std::fabs(static_cast<double>(i) / count - f);
    dist = std::max(dist, std::max(hi, lo));
  }
  return dist;
}

EsdReport esd_experiment(const ModelDescriptor& model, int trials, int bins,
                         std::uint64_t seed, int threads, ReferenceLaw law,
                         bool keep_spectra, const TrialObserver& observer) {
  if (trials < 1) throw ParameterError("trials must be at least 1");
  if (bins < 10) throw ParameterError("at least 10 histogram bins required");
  const ReferenceLaw resolved = resolve_law(model, law);
  const DensityModel ref = reference_model(model, resolved);

  EsdReport report;
  report.model = model;
  report.law = resolved;
  report.trials = trials;
  report.seed = seed;
  report.scale = normalization_scale(model, resolved);
  if (!(report.scale > 0.0))
    throw ParameterError("degenerate normalization scale (empty model)");

  const std::int32_t n = model_order(model);
  std::vector<std::vector<double>> per_trial(static_cast<std::size_t>(trials));
  detail::parallel_for_index(trials, threads, [&](int t) {
    run_trial(t, [&] {
      const OrientedGraph g = sample_model(model, derive_seed(seed, static_cast<std::uint64_t>(t)));
      const SkewSpectrum spec = skew_spectrum(skew_adjacency(g));
      if (observer) observer(t, g, spec);
      per_trial[static_cast<std::size_t>(t)] = normalized_spectrum(spec, report.scale).values;
    });
  });

  std::vector<double> pooled;
  pooled.reserve(static_cast<std::size_t>(trials) * static_cast<std::size_t>(n));
  for (const auto& values : per_trial) pooled.insert(pooled.end(), values.begin(), values.end());

  // Histogram over the reference support extended 10% each side. Outliers
  // are clamped into the boundary bins: counts always sum to n * trials.
  const double lo = ref.support_min() * 1.1;
  const double hi = ref.support_max() * 1.1;
  const double width = (hi - lo) / bins;
  report.bin_edges.resize(static_cast<std::size_t>(bins) + 1);
  for (int b = 0; b <= bins; ++b) report.bin_edges[static_cast<std::size_t>(b)] = lo + b * width;
  report.counts.assign(static_cast<std::size_t>(bins), 0);
  for (double x : pooled) {
    int b = static_cast<int>(std::floor((x - lo) / width));
    b = std::clamp(b, 0, bins - 1);
    ++report.counts[static_cast<std::size_t>(b)];
  }

  std::vector<double> sorted = pooled;
  std::sort(sorted.begin(), sorted.end());
  report.ks_distance = ks_distance(sorted, [&ref](double x) { return cdf(ref, x); });

  if (keep_spectra) report.pooled_spectra = std::move(pooled);
  return report;
}

ConcentrationReport run_concentration_experiment(const ConcentrationParams& params,
                                                 const TrialObserver& observer) {
  if (params.trials < 1) throw ParameterError("trials must be at least 1");
  if (!(params.delta > 0.0)) throw ParameterError("delta must be positive");
  if (!(params.lower < params.upper))
    throw ParameterError("interval must satisfy lower < upper");
  if (params.lower < -2.0 || params.upper > 2.0)
    throw ParameterError("interval must lie inside [-2,2]");
  if (params.d < 1) throw ParameterError("degree must be positive");

  const DensityModel sc = DensityModel::semicircle();
  ConcentrationReport report;
  report.params = params;
  report.expected =
      static_cast<double>(params.n) * (cdf(sc, params.upper) - cdf(sc, params.lower));
  if (!(report.expected > 0.0))
    throw ParameterError("interval carries no semicircle mass");

  const double min_length = std::pow(params.delta, -0.8) *
                            std::pow(static_cast<double>(params.d), -0.1) *
                            std::pow(std::log(static_cast<double>(params.d)), 0.2);
  report.interval_length_ok = (params.upper - params.lower) >= min_length;

  const double scale = std::sqrt(static_cast<double>(params.d));
  report.counts.assign(static_cast<std::size_t>(params.trials), 0);
  detail::parallel_for_index(params.trials, params.threads, [&](int t) {
    run_trial(t, [&] {
      RegularParams reg{params.n, params.d, derive_seed(params.seed, static_cast<std::uint64_t>(t)),
                        params.max_attempts, params.method};
      const OrientedGraph g = sample_regular_oriented(reg);
      const SkewSpectrum spec = skew_spectrum(skew_adjacency(g));
      if (observer) observer(t, g, spec);
      std::int64_t count = 0;
      for (double v : spec.values) {
        const double x = v / scale;
        if (x >= params.lower && x <= params.upper) ++count;
      }
      report.counts[static_cast<std::size_t>(t)] = count;
    });
  });

  int within = 0;
  for (std::int64_t c : report.counts)
    if (std::fabs(static_cast<double>(c) - report.expected) <
        params.delta * report.expected)
      ++within;
  report.fraction_within = static_cast<double>(within) / params.trials;
  return report;
}

}  // namespace skewsim
