#include "cli.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "skewsim/density.hpp"
#include "skewsim/errors.hpp"
#include "skewsim/experiments.hpp"
#include "skewsim/graph.hpp"
#include "skewsim/graphgen.hpp"
#include "skewsim/moments.hpp"
#include "skewsim/report_io.hpp"
#include "skewsim/spectra.hpp"

namespace skewsim::cli {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParameter = 2;
constexpr int kExitNumeric = 3;

void write_output(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParameterError("cannot open output file: " + path);
  out << content;
  if (!out) throw ParameterError("failed writing output file: " + path);
}

// Digit-by-digit accumulation: cpp_int's string constructor would read a
// leading zero as an octal prefix.
boost::multiprecision::cpp_int parse_integer(const std::string& text, bool& ok) {
  using boost::multiprecision::cpp_int;
  cpp_int value = 0;
  bool negative = false;
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
    negative = text[i] == '-';
    ++i;
  }
  if (i >= text.size()) {
    ok = false;
    return value;
  }
  for (; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') {
      ok = false;
      return value;
    }
    value = value * 10 + (text[i] - '0');
  }
  ok = true;
  return negative ? cpp_int(-value) : value;
}

Rational parse_rational(const std::string& text) {
  using boost::multiprecision::cpp_int;
  const auto bad = [&] { return ParameterError("cannot parse rational: " + text); };
  if (text.empty()) throw bad();
  if (const auto slash = text.find('/'); slash != std::string::npos) {
    bool ok_num = false, ok_den = false;
    const cpp_int num = parse_integer(text.substr(0, slash), ok_num);
    const cpp_int den = parse_integer(text.substr(slash + 1), ok_den);
    if (!ok_num || !ok_den || den == 0) throw bad();
    return Rational(num, den);
  }
  // Plain decimal: digits with an optional fractional part, read exactly.
  std::string digits;
  int frac_len = 0;
  bool seen_dot = false, negative = false;
  std::size_t i = 0;
  if (text[0] == '+' || text[0] == '-') {
    negative = text[0] == '-';
    i = 1;
  }
  for (; i < text.size(); ++i) {
    const char c = text[i];
    if (c == '.') {
      if (seen_dot) throw bad();
      seen_dot = true;
    } else if (c >= '0' && c <= '9') {
      digits.push_back(c);
      if (seen_dot) ++frac_len;
    } else {
      throw bad();
    }
  }
  if (digits.empty()) throw bad();
  bool ok = false;
  cpp_int num = parse_integer(digits, ok);
  if (!ok) throw bad();
  cpp_int den = 1;
  for (int f = 0; f < frac_len; ++f) den *= 10;
  if (negative) num = -num;
  return Rational(num, den);
}

ReferenceLaw parse_law(const std::string& name) {
  if (name == "auto") return ReferenceLaw::Auto;
  if (name == "mckay") return ReferenceLaw::McKay;
  if (name == "semicircle") return ReferenceLaw::Semicircle;
  throw ParameterError("unknown law: " + name);
}

RegularMethod parse_method(const std::string& name) {
  if (name == "rejection") return RegularMethod::PairingRejection;
  if (name == "repair") return RegularMethod::PairingRepair;
  throw ParameterError("unknown sampler: " + name);
}

// Shared model flags of the sampling subcommands.
struct ModelFlags {
  std::string model;
  std::int32_t n = 0;
  double p = -1.0;
  std::int32_t d = -1;
  std::string sampler = "rejection";
  std::int64_t max_attempts = 10000;

  void attach(CLI::App* cmd) {
    cmd->add_option("--model", model, "Random model: gnp or regular")
        ->required()
        ->check(CLI::IsMember({"gnp", "regular"}));
    cmd->add_option("-n,--vertices", n, "Vertex count")->required();
    cmd->add_option("-p,--edge-probability", p, "Edge probability (gnp)");
    cmd->add_option("-d,--degree", d, "Degree (regular)");
    cmd->add_option("--sampler", sampler,
                    "Regular sampling method: rejection (exactly uniform) or repair "
                    "(degree-exact, for large d)")
        ->check(CLI::IsMember({"rejection", "repair"}));
    cmd->add_option("--max-attempts", max_attempts, "Rejection budget for the regular sampler");
  }

  ModelDescriptor descriptor() const {
    if (model == "gnp") {
      if (p < 0.0) throw ParameterError("gnp model requires -p");
      return GnpModel{n, p};
    }
    if (d < 0) throw ParameterError("regular model requires -d");
    return RegularModel{n, d, parse_method(sampler), max_attempts};
  }
};

std::string format_or_default(const std::string& format) {
  return format.empty() ? "json" : format;
}

}  // namespace

int run(int argc, const char* const* argv) {
  CLI::App app{"skewsim: skew-adjacency spectra of random oriented graphs"};
  app.require_subcommand(1);

  // ---- gen ----
  auto* gen = app.add_subcommand("gen", "Sample a graph and emit its edge list");
  ModelFlags gen_model;
  gen_model.attach(gen);
  std::uint64_t gen_seed = 0;
  std::string gen_out;
  gen->add_option("--seed", gen_seed, "RNG seed")->envname("SKEWRAND_SEED");
  gen->add_option("-o,--output", gen_out, "Output path (default stdout)");

  // ---- spectrum ----
  auto* spectrum = app.add_subcommand("spectrum", "Eigenvalues of a graph file");
  std::string spectrum_input, spectrum_out, spectrum_format;
  spectrum->add_option("input", spectrum_input, "Edge-list file")->required();
  spectrum->add_option("--format", spectrum_format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  spectrum->add_option("-o,--output", spectrum_out, "Output path (default stdout)");

  // ---- energy ----
  auto* energy = app.add_subcommand("energy", "Normalized skew-energy experiment");
  ModelFlags energy_model;
  energy_model.attach(energy);
  int energy_trials = 5;
  std::uint64_t energy_seed = 0;
  std::string energy_law = "auto", energy_format, energy_out;
  int energy_threads = 0;
  energy->add_option("--trials", energy_trials, "Monte-Carlo trials");
  energy->add_option("--seed", energy_seed, "RNG seed")->envname("SKEWRAND_SEED");
  energy->add_option("--law", energy_law, "Reference law: auto, mckay, semicircle")
      ->check(CLI::IsMember({"auto", "mckay", "semicircle"}));
  energy->add_option("--format", energy_format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  energy->add_option("--threads", energy_threads, "Worker cap (0 = auto); results independent");
  energy->add_option("-o,--output", energy_out, "Output path (default stdout)");

  // ---- esd ----
  auto* esd = app.add_subcommand("esd", "Pooled spectral histogram and KS distance");
  ModelFlags esd_model;
  esd_model.attach(esd);
  int esd_trials = 3, esd_bins = 50, esd_threads = 0;
  std::uint64_t esd_seed = 0;
  std::string esd_law = "auto", esd_format, esd_out, esd_svg, esd_dump;
  esd->add_option("--trials", esd_trials, "Monte-Carlo trials");
  esd->add_option("--bins", esd_bins, "Histogram bins (>= 10)");
  esd->add_option("--seed", esd_seed, "RNG seed")->envname("SKEWRAND_SEED");
  esd->add_option("--law", esd_law, "Reference law: auto, mckay, semicircle")
      ->check(CLI::IsMember({"auto", "mckay", "semicircle"}));
  esd->add_option("--format", esd_format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  esd->add_option("--threads", esd_threads, "Worker cap (0 = auto); results independent");
  esd->add_option("--svg", esd_svg, "Also write an SVG histogram to this path");
  esd->add_option("--dump-spectra", esd_dump, "Also write pooled eigenvalues (CSV) to this path");
  esd->add_option("-o,--output", esd_out, "Output path (default stdout)");

  // ---- moments ----
  auto* moments = app.add_subcommand("moments", "Exact vs Monte-Carlo trace moments");
  std::int32_t mom_n = 0;
  int mom_k = 0, mom_trials = 1000, mom_threads = 0;
  std::string mom_p, mom_format, mom_out;
  std::uint64_t mom_seed = 0;
  moments->add_option("-n,--vertices", mom_n, "Vertex count (1..8)")->required();
  moments->add_option("-k,--order", mom_k, "Moment order (1..8)")->required();
  moments->add_option("-p,--edge-probability", mom_p, "Edge probability, rational (\"1/4\" or \"0.25\")")
      ->required();
  moments->add_option("--trials", mom_trials, "Monte-Carlo trials");
  moments->add_option("--seed", mom_seed, "RNG seed")->envname("SKEWRAND_SEED");
  moments->add_option("--format", mom_format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  moments->add_option("--threads", mom_threads, "Worker cap (0 = auto); results independent");
  moments->add_option("-o,--output", mom_out, "Output path (default stdout)");

  // ---- concentration ----
  auto* conc = app.add_subcommand("concentration", "Eigenvalue-count concentration (regular model)");
  ConcentrationParams conc_params;
  std::string conc_sampler = "repair", conc_format, conc_out;
  conc->add_option("-n,--vertices", conc_params.n, "Vertex count")->required();
  conc->add_option("-d,--degree", conc_params.d, "Degree")->required();
  conc->add_option("--lower", conc_params.lower, "Interval lower end (in [-2,2])");
  conc->add_option("--upper", conc_params.upper, "Interval upper end (in [-2,2])");
  conc->add_option("--delta", conc_params.delta, "Target relative deviation");
  conc->add_option("--trials", conc_params.trials, "Monte-Carlo trials");
  conc->add_option("--seed", conc_params.seed, "RNG seed")->envname("SKEWRAND_SEED");
  conc->add_option("--sampler", conc_sampler,
                   "rejection (exactly uniform) or repair (default: this experiment targets "
                   "growing d, where rejection stalls)")
      ->check(CLI::IsMember({"rejection", "repair"}));
  conc->add_option("--max-attempts", conc_params.max_attempts, "Rejection budget");
  conc->add_option("--threads", conc_params.threads, "Worker cap (0 = auto); results independent");
  conc->add_option("--format", conc_format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  conc->add_option("-o,--output", conc_out, "Output path (default stdout)");

  // ---- density ----
  auto* density = app.add_subcommand("density", "Tabulate pdf/cdf of a limit law");
  std::string den_model = "semicircle", den_format, den_out;
  int den_d = -1, den_points = 201;
  std::optional<double> den_min, den_max;
  density->add_option("--model", den_model, "semicircle or mckay")
      ->check(CLI::IsMember({"semicircle", "mckay"}));
  density->add_option("-d,--degree", den_d, "Degree (mckay)");
  density->add_option("--points", den_points, "Grid points (inclusive endpoints)");
  double den_min_raw = 0.0, den_max_raw = 0.0;
  auto* den_min_opt = density->add_option("--min", den_min_raw, "Grid start (default support min)");
  auto* den_max_opt = density->add_option("--max", den_max_raw, "Grid end (default support max)");
  density->add_option("--format", den_format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  density->add_option("-o,--output", den_out, "Output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitParameter;
  }

  try {
    if (*gen) {
      const ModelDescriptor model = gen_model.descriptor();
      OrientedGraph g;
      if (const auto* gnp = std::get_if<GnpModel>(&model)) {
        g = sample_gnp_oriented({gnp->n, gnp->p, gen_seed});
      } else {
        const auto& reg = std::get<RegularModel>(model);
        g = sample_regular_oriented({reg.n, reg.d, gen_seed, reg.max_attempts, reg.method});
      }
      write_output(gen_out, write_edge_list(g));
    } else if (*spectrum) {
      std::ifstream in(spectrum_input, std::ios::binary);
      if (!in) throw ParameterError("cannot open input file: " + spectrum_input);
      const OrientedGraph g = read_edge_list(in);
      const SkewSpectrum spec = skew_spectrum(skew_adjacency(g));
      if (format_or_default(spectrum_format) == "csv") {
        write_output(spectrum_out, spectrum_csv(spec));
      } else {
        ExtraParams extra{{"input", json_quote(spectrum_input)},
                          {"arcs", std::to_string(g.arc_count())}};
        write_output(spectrum_out, spectrum_json(spec, skew_energy(spec), extra));
      }
    } else if (*energy) {
      const ModelDescriptor model = energy_model.descriptor();
      const EnergyEstimate report = run_energy_experiment(
          model, energy_trials, energy_seed, energy_threads, parse_law(energy_law));
      if (format_or_default(energy_format) == "csv") {
        write_output(energy_out, to_csv(report));
      } else {
        ExtraParams extra{{"threads", std::to_string(energy_threads)},
                          {"format", json_quote("json")}};
        write_output(energy_out, to_json(report, extra));
      }
    } else if (*esd) {
      const ModelDescriptor model = esd_model.descriptor();
      const EsdReport report =
          esd_experiment(model, esd_trials, esd_bins, esd_seed, esd_threads,
                         parse_law(esd_law), !esd_dump.empty());
      if (!esd_svg.empty()) {
        std::ofstream svg(esd_svg, std::ios::binary);
        if (!svg) throw ParameterError("cannot open SVG output: " + esd_svg);
        write_svg_histogram(report, svg);
      }
      if (!esd_dump.empty()) write_output(esd_dump, pooled_spectra_csv(report));
      if (format_or_default(esd_format) == "csv") {
        write_output(esd_out, to_csv(report));
      } else {
        ExtraParams extra{{"threads", std::to_string(esd_threads)},
                          {"format", json_quote("json")}};
        if (!esd_svg.empty()) extra.emplace_back("svg", json_quote(esd_svg));
        if (!esd_dump.empty()) extra.emplace_back("dump_spectra", json_quote(esd_dump));
        write_output(esd_out, to_json(report, extra));
      }
    } else if (*moments) {
      const Rational p = parse_rational(mom_p);
      const WalkMoment exact = expected_trace_moment_exact(mom_n, mom_k, p);
      const GnpParams params{mom_n, p.convert_to<double>(), mom_seed};
      const MonteCarloMoment mc = empirical_trace_moment(params, mom_k, mom_trials, mom_threads);
      if (format_or_default(mom_format) == "csv") {
        write_output(mom_out, moments_csv(exact, mc));
      } else {
        ExtraParams extra{{"threads", std::to_string(mom_threads)},
                          {"format", json_quote("json")}};
        write_output(mom_out, moments_json(exact, mc, mom_seed, mom_trials, extra));
      }
    } else if (*conc) {
      conc_params.method = parse_method(conc_sampler);
      const ConcentrationReport report = run_concentration_experiment(conc_params);
      if (!report.interval_length_ok) {
        std::cerr << "warning: interval length "
                  << format_double(conc_params.upper - conc_params.lower)
                  << " is below the concentration threshold "
                  << "delta^(-4/5) d^(-1/10) ln(d)^(1/5); results are advisory\n";
      }
      if (format_or_default(conc_format) == "csv") {
        write_output(conc_out, to_csv(report));
      } else {
        ExtraParams extra{{"threads", std::to_string(conc_params.threads)},
                          {"format", json_quote("json")}};
        write_output(conc_out, to_json(report, extra));
      }
    } else if (*density) {
      DensityModel model = DensityModel::semicircle();
      if (den_model == "mckay") {
        if (den_d < 0) throw ParameterError("mckay model requires -d");
        model = DensityModel::mckay(den_d);
      }
      if (den_min_opt->count() > 0) den_min = den_min_raw;
      if (den_max_opt->count() > 0) den_max = den_max_raw;
      const double lo = den_min.value_or(model.support_min());
      const double hi = den_max.value_or(model.support_max());
      if (!(lo < hi)) throw ParameterError("grid requires min < max");
      if (format_or_default(den_format) == "csv") {
        write_output(den_out, density_table_csv(model, lo, hi, den_points));
      } else {
        ExtraParams extra{{"format", json_quote("json")}};
        write_output(den_out, density_table_json(model, lo, hi, den_points, extra));
      }
    }
  } catch (const ParameterError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitParameter;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitParameter;
  } catch (const SamplingError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitNumeric;
  } catch (const NumericError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitNumeric;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitNumeric;
  }
  return kExitOk;
}

}  // namespace skewsim::cli
