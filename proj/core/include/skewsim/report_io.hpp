#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "skewsim/density.hpp"
#include "skewsim/experiments.hpp"
#include "skewsim/moments.hpp"

namespace skewsim {

/// Extra key/value pairs merged into a JSON report's "params" object. The
/// value is raw JSON (already quoted/formatted by the caller).
using ExtraParams = std::vector<std::pair<std::string, std::string>>;

std::string json_quote(const std::string& s);

/// Floating-point values in all serialized output are printed with 9
/// significant digits.
std::string format_double(double v);

// JSON reports. Every report is self-describing: a "schema" tag and a
// "params" object with the full resolved parameter set.
std::string to_json(const EnergyEstimate& report, const ExtraParams& extra = {});
std::string to_json(const EsdReport& report, const ExtraParams& extra = {});
std::string to_json(const ConcentrationReport& report, const ExtraParams& extra = {});

// CSV reports: header row + one data row per trial/bin, LF line endings.
std::string to_csv(const EnergyEstimate& report);
std::string to_csv(const EsdReport& report);
std::string to_csv(const ConcentrationReport& report);

/// One exact-vs-Monte-Carlo moment row.
std::string moments_csv(const WalkMoment& exact, const MonteCarloMoment& mc);
std::string moments_json(const WalkMoment& exact, const MonteCarloMoment& mc,
                         std::uint64_t seed, int trials, const ExtraParams& extra = {});

/// pdf/cdf table of a density model on an inclusive uniform grid.
std::string density_table_csv(const DensityModel& model, double lo, double hi, int points);
std::string density_table_json(const DensityModel& model, double lo, double hi, int points,
                               const ExtraParams& extra = {});

/// Eigenvalue list of one graph.
std::string spectrum_csv(const SkewSpectrum& spec);
std::string spectrum_json(const SkewSpectrum& spec, double energy,
                          const ExtraParams& extra = {});

/// Pooled eigenvalues of an ESD run (requires keep_spectra).
std::string pooled_spectra_csv(const EsdReport& report);

/// Standalone SVG: histogram bars (density-normalized) with the reference
/// law's density overlaid. Pure vector output, no external renderer.
void write_svg_histogram(const EsdReport& report, std::ostream& out);

}  // namespace skewsim
