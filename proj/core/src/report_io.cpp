#include "skewsim/report_io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ostream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "skewsim/errors.hpp"

namespace skewsim {

namespace {

using ordered_json = nlohmann::ordered_json;

// 9 significant digits everywhere; JSON doubles are rounded through the
// same formatting so the two formats agree.
double round9(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  return std::strtod(buf, nullptr);
}

const char* law_name(ReferenceLaw law) {
  return law == ReferenceLaw::McKay ? "mckay" : "semicircle";
}

void describe_model(const ModelDescriptor& model, ordered_json& params) {
  if (const auto* gnp = std::get_if<GnpModel>(&model)) {
    params["model"] = "gnp";
    params["n"] = gnp->n;
    params["p"] = round9(gnp->p);
  } else {
    const auto& reg = std::get<RegularModel>(model);
    params["model"] = "regular";
    params["n"] = reg.n;
    params["d"] = reg.d;
    params["sampler"] = to_string(reg.method);
    params["max_attempts"] = reg.max_attempts;
  }
}

void describe_model_csv(const ModelDescriptor& model, std::ostream& out) {
  // Columns: model,n,p,d,sampler
  if (const auto* gnp = std::get_if<GnpModel>(&model)) {
    out << "gnp," << gnp->n << ',' << format_double(gnp->p) << ",,";
  } else {
    const auto& reg = std::get<RegularModel>(model);
    out << "regular," << reg.n << ",," << reg.d << ',' << to_string(reg.method);
  }
}

void merge_extra(ordered_json& params, const ExtraParams& extra) {
  for (const auto& [key, raw] : extra) params[key] = ordered_json::parse(raw);
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

constexpr const char* kToleranceNote =
    "reference constants are asymptotic laws; finite-size runs carry o(1) "
    "deviations, and report thresholds are empirically calibrated at desk scale";

}  // namespace

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  return buf;
}

std::string json_quote(const std::string& s) { return ordered_json(s).dump(); }

std::string to_json(const EnergyEstimate& report, const ExtraParams& extra) {
  ordered_json j;
  j["schema"] = "skewsim.energy.v1";
  ordered_json params;
  describe_model(report.model, params);
  params["law"] = law_name(report.law);
  params["trials"] = report.trials;
  params["seed"] = report.seed;
  merge_extra(params, extra);
  j["params"] = params;
  ordered_json energies = ordered_json::array();
  for (double e : report.normalized_energies) energies.push_back(round9(e));
  j["normalized_energies"] = energies;
  j["mean"] = round9(report.mean);
  j["stderr"] = round9(report.std_error);
  j["reference_constant"] = round9(report.reference_constant);
  j["note"] = kToleranceNote;
  return dump(j);
}

std::string to_csv(const EnergyEstimate& report) {
  std::ostringstream out;
  out << "model,n,p,d,sampler,law,seed,trials,trial,normalized_energy,mean,stderr,"
         "reference_constant\n";
  for (std::size_t t = 0; t < report.normalized_energies.size(); ++t) {
    describe_model_csv(report.model, out);
    out << ',' << law_name(report.law) << ',' << report.seed << ',' << report.trials << ',' << t
        << ',' << format_double(report.normalized_energies[t]) << ','
        << format_double(report.mean) << ',' << format_double(report.std_error) << ','
        << format_double(report.reference_constant) << '\n';
  }
  return out.str();
}

std::string to_json(const EsdReport& report, const ExtraParams& extra) {
  ordered_json j;
  j["schema"] = "skewsim.esd.v1";
  ordered_json params;
  describe_model(report.model, params);
  params["law"] = law_name(report.law);
  params["trials"] = report.trials;
  params["seed"] = report.seed;
  params["bins"] = report.counts.size();
  merge_extra(params, extra);
  j["params"] = params;
  j["scale"] = round9(report.scale);
  ordered_json edges = ordered_json::array();
  for (double e : report.bin_edges) edges.push_back(round9(e));
  j["bin_edges"] = edges;
  j["counts"] = report.counts;
  j["ks_distance"] = round9(report.ks_distance);
  j["note"] = kToleranceNote;
  return dump(j);
}

std::string to_csv(const EsdReport& report) {
  std::ostringstream out;
  out << "model,n,p,d,sampler,law,seed,trials,scale,ks_distance,bin_index,bin_left,"
         "bin_right,count\n";
  for (std::size_t b = 0; b < report.counts.size(); ++b) {
    describe_model_csv(report.model, out);
    out << ',' << law_name(report.law) << ',' << report.seed << ',' << report.trials << ','
        << format_double(report.scale) << ',' << format_double(report.ks_distance) << ',' << b
        << ',' << format_double(report.bin_edges[b]) << ','
        << format_double(report.bin_edges[b + 1]) << ',' << report.counts[b] << '\n';
  }
  return out.str();
}

std::string to_json(const ConcentrationReport& report, const ExtraParams& extra) {
  ordered_json j;
  j["schema"] = "skewsim.concentration.v1";
  ordered_json params;
  params["n"] = report.params.n;
  params["d"] = report.params.d;
  params["lower"] = round9(report.params.lower);
  params["upper"] = round9(report.params.upper);
  params["delta"] = round9(report.params.delta);
  params["trials"] = report.params.trials;
  params["seed"] = report.params.seed;
  params["sampler"] = to_string(report.params.method);
  params["max_attempts"] = report.params.max_attempts;
  merge_extra(params, extra);
  j["params"] = params;
  j["counts"] = report.counts;
  j["expected"] = round9(report.expected);
  j["fraction_within"] = round9(report.fraction_within);
  j["interval_length_ok"] = report.interval_length_ok;
  j["note"] = kToleranceNote;
  return dump(j);
}

std::string to_csv(const ConcentrationReport& report) {
  std::ostringstream out;
  out << "n,d,lower,upper,delta,sampler,seed,trials,expected,fraction_within,"
         "interval_length_ok,trial,count,within\n";
  for (std::size_t t = 0; t < report.counts.size(); ++t) {
    const bool within = std::fabs(static_cast<double>(report.counts[t]) - report.expected) <
                        report.params.delta * report.expected;
    out << report.params.n << ',' << report.params.d << ','
        << format_double(report.params.lower) << ',' << format_double(report.params.upper) << ','
        << format_double(report.params.delta) << ',' << to_string(report.params.method) << ','
        << report.params.seed << ',' << report.params.trials << ','
        << format_double(report.expected) << ',' << format_double(report.fraction_within) << ','
        << (report.interval_length_ok ? 1 : 0) << ',' << t << ',' << report.counts[t] << ','
        << (within ? 1 : 0) << '\n';
  }
  return out.str();
}

std::string moments_csv(const WalkMoment& exact, const MonteCarloMoment& mc) {
  std::ostringstream out;
  out << "n,k,p,exact_value,mc_mean,mc_stderr\n";
  out << exact.n << ',' << exact.k << ',' << exact.p.str() << ',' << exact.value.str() << ','
      << format_double(mc.mean) << ',' << format_double(mc.std_error) << '\n';
  return out.str();
}

std::string moments_json(const WalkMoment& exact, const MonteCarloMoment& mc,
                         std::uint64_t seed, int trials, const ExtraParams& extra) {
  ordered_json j;
  j["schema"] = "skewsim.moments.v1";
  ordered_json params;
  params["n"] = exact.n;
  params["k"] = exact.k;
  params["p"] = exact.p.str();
  params["trials"] = trials;
  params["seed"] = seed;
  merge_extra(params, extra);
  j["params"] = params;
  j["exact_value"] = exact.value.str();
  j["exact_value_double"] = round9(exact.value.convert_to<double>());
  j["mc_mean"] = round9(mc.mean);
  j["mc_stderr"] = round9(mc.std_error);
  return dump(j);
}

std::string density_table_csv(const DensityModel& model, double lo, double hi, int points) {
  if (points < 2) throw ParameterError("density table needs at least 2 points");
  std::ostringstream out;
  out << "x,pdf,cdf\n";
  for (int i = 0; i < points; ++i) {
    const double x = lo + (hi - lo) * i / (points - 1);
    out << format_double(x) << ',' << format_double(pdf(model, x)) << ','
        << format_double(cdf(model, x)) << '\n';
  }
  return out.str();
}

std::string density_table_json(const DensityModel& model, double lo, double hi, int points,
                               const ExtraParams& extra) {
  if (points < 2) throw ParameterError("density table needs at least 2 points");
  ordered_json j;
  j["schema"] = "skewsim.density.v1";
  ordered_json params;
  params["model"] = model.kind() == DensityKind::Semicircle ? "semicircle" : "mckay";
  if (model.kind() == DensityKind::McKay) params["d"] = model.degree();
  params["min"] = round9(lo);
  params["max"] = round9(hi);
  params["points"] = points;
  merge_extra(params, extra);
  j["params"] = params;
  ordered_json xs = ordered_json::array(), ps = ordered_json::array(), cs = ordered_json::array();
  for (int i = 0; i < points; ++i) {
    const double x = lo + (hi - lo) * i / (points - 1);
    xs.push_back(round9(x));
    ps.push_back(round9(pdf(model, x)));
    cs.push_back(round9(cdf(model, x)));
  }
  j["x"] = xs;
  j["pdf"] = ps;
  j["cdf"] = cs;
  return dump(j);
}

std::string spectrum_csv(const SkewSpectrum& spec) {
  std::ostringstream out;
  out << "index,eigenvalue\n";
  for (std::size_t i = 0; i < spec.values.size(); ++i)
    out << i << ',' << format_double(spec.values[i]) << '\n';
  return out.str();
}

std::string spectrum_json(const SkewSpectrum& spec, double energy, const ExtraParams& extra) {
  ordered_json j;
  j["schema"] = "skewsim.spectrum.v1";
  ordered_json params;
  merge_extra(params, extra);
  j["params"] = params;
  j["n"] = spec.values.size();
  ordered_json values = ordered_json::array();
  for (double v : spec.values) values.push_back(round9(v));
  j["eigenvalues"] = values;
  j["energy"] = round9(energy);
  return dump(j);
}

std::string pooled_spectra_csv(const EsdReport& report) {
  if (report.pooled_spectra.empty())
    throw ParameterError("no pooled spectra kept in this report");
  std::ostringstream out;
  out << "index,value\n";
  for (std::size_t i = 0; i < report.pooled_spectra.size(); ++i)
    out << i << ',' << format_double(report.pooled_spectra[i]) << '\n';
  return out.str();
}

void write_svg_histogram(const EsdReport& report, std::ostream& out) {
  const int width = 800, height = 500;
  const int margin_left = 60, margin_right = 20, margin_top = 20, margin_bottom = 45;
  const double plot_w = width - margin_left - margin_right;
  const double plot_h = height - margin_top - margin_bottom;

  const double lo = report.bin_edges.front();
  const double hi = report.bin_edges.back();
  std::int64_t total = 0;
  for (auto c : report.counts) total += c;
  if (total == 0) total = 1;

  const DensityModel ref = report.law == ReferenceLaw::McKay
                               ? DensityModel::mckay(std::get<RegularModel>(report.model).d)
                               : DensityModel::semicircle();

  // Density-normalized bar heights and the reference pdf share one y-axis.
  double ymax = 0.0;
  std::vector<double> bar_density(report.counts.size());
  for (std::size_t b = 0; b < report.counts.size(); ++b) {
    const double w = report.bin_edges[b + 1] - report.bin_edges[b];
    bar_density[b] = static_cast<double>(report.counts[b]) / (static_cast<double>(total) * w);
    ymax = std::max(ymax, bar_density[b]);
  }
  const int curve_points = 256;
  for (int i = 0; i <= curve_points; ++i)
    ymax = std::max(ymax, pdf(ref, lo + (hi - lo) * i / curve_points));
  if (ymax <= 0.0) ymax = 1.0;
  ymax *= 1.05;

  auto sx = [&](double x) { return margin_left + (x - lo) / (hi - lo) * plot_w; };
  auto sy = [&](double y) { return margin_top + plot_h - y / ymax * plot_h; };

  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
      << height << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
  out << "<rect width=\"" << width << "\" height=\"" << height << "\" fill=\"white\"/>\n";

  for (std::size_t b = 0; b < report.counts.size(); ++b) {
    const double x0 = sx(report.bin_edges[b]);
    const double x1 = sx(report.bin_edges[b + 1]);
    const double y = sy(bar_density[b]);
    out << "<rect x=\"" << format_double(x0) << "\" y=\"" << format_double(y) << "\" width=\""
        << format_double(x1 - x0) << "\" height=\"" << format_double(margin_top + plot_h - y)
        << "\" fill=\"#7fb3d5\" stroke=\"#34495e\" stroke-width=\"0.5\"/>\n";
  }

  out << "<polyline fill=\"none\" stroke=\"#c0392b\" stroke-width=\"2\" points=\"";
  for (int i = 0; i <= curve_points; ++i) {
    const double x = lo + (hi - lo) * i / curve_points;
    out << format_double(sx(x)) << ',' << format_double(sy(pdf(ref, x)));
    if (i < curve_points) out << ' ';
  }
  out << "\"/>\n";

  // Axes with a handful of ticks.
  out << "<line x1=\"" << margin_left << "\" y1=\"" << margin_top + plot_h << "\" x2=\""
      << margin_left + plot_w << "\" y2=\"" << margin_top + plot_h
      << "\" stroke=\"black\"/>\n";
  out << "<line x1=\"" << margin_left << "\" y1=\"" << margin_top << "\" x2=\"" << margin_left
      << "\" y2=\"" << margin_top + plot_h << "\" stroke=\"black\"/>\n";
  for (int i = 0; i <= 4; ++i) {
    const double x = lo + (hi - lo) * i / 4;
    out << "<text x=\"" << format_double(sx(x)) << "\" y=\"" << height - 18
        << "\" font-size=\"12\" text-anchor=\"middle\">" << format_double(x) << "</text>\n";
    const double y = ymax / 1.05 * i / 4;
    out << "<text x=\"" << margin_left - 8 << "\" y=\"" << format_double(sy(y) + 4)
        << "\" font-size=\"12\" text-anchor=\"end\">" << format_double(y) << "</text>\n";
  }
  out << "<text x=\"" << margin_left + plot_w / 2 << "\" y=\"" << height - 4
      << "\" font-size=\"13\" text-anchor=\"middle\">normalized eigenvalue</text>\n";
  out << "</svg>\n";
}

}  // namespace skewsim
