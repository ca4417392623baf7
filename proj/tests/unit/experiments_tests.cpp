#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "skewsim/density.hpp"
#include "skewsim/errors.hpp"
#include "skewsim/experiments.hpp"
#include "skewsim/report_io.hpp"
#include "test_oracles.hpp"

using namespace skewsim;

namespace {

double semicircle_cdf(double x) { return cdf(DensityModel::semicircle(), x); }

double semicircle_quantile(double q) {
  double lo = -2.0, hi = 2.0;
  for (int i = 0; i < 80; ++i) {
    const double mid = 0.5 * (lo + hi);
    (semicircle_cdf(mid) < q ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

TEST_CASE("law resolution and normalization scales") {
  CHECK(resolve_law(GnpModel{100, 0.5}, ReferenceLaw::Auto) == ReferenceLaw::Semicircle);
  CHECK(resolve_law(RegularModel{100, 3}, ReferenceLaw::Auto) == ReferenceLaw::McKay);
  CHECK(resolve_law(RegularModel{100, 50}, ReferenceLaw::Auto) == ReferenceLaw::Semicircle);
  CHECK(resolve_law(RegularModel{100, 1}, ReferenceLaw::Auto) == ReferenceLaw::Semicircle);
  CHECK(resolve_law(RegularModel{100, 3}, ReferenceLaw::Semicircle) == ReferenceLaw::Semicircle);

  CHECK(normalization_scale(GnpModel{1000, 0.2}, ReferenceLaw::Semicircle) ==
        doctest::Approx(std::sqrt(200.0)));
  CHECK(normalization_scale(RegularModel{100, 3}, ReferenceLaw::McKay) == 1.0);
  CHECK(normalization_scale(RegularModel{100, 9}, ReferenceLaw::Semicircle) == 3.0);
}

TEST_CASE("ks distance: point masses and closed forms") {
  std::vector<double> zero{0.0};
  CHECK(ks_distance(zero, semicircle_cdf) == doctest::Approx(0.5).epsilon(1e-12));

  std::vector<double> pm2{-2.0, 2.0};
  CHECK(ks_distance(pm2, semicircle_cdf) == doctest::Approx(0.5).epsilon(1e-12));

  // The +-1 spectrum of a single arc: the largest gap sits at the jump
  // points, F_sc(1) - 1/2 = sqrt(3)/(4 pi) + 1/6.
  std::vector<double> pm1{-1.0, 1.0};
  CHECK(ks_distance(pm1, semicircle_cdf) ==
        doctest::Approx(0.304498890522114679).epsilon(1e-12));

  CHECK_THROWS_AS(ks_distance(std::vector<double>{}, semicircle_cdf), ParameterError);
  std::vector<double> unsorted{1.0, -1.0};
  CHECK_THROWS_AS(ks_distance(unsorted, semicircle_cdf), ParameterError);
}

TEST_CASE("ks distance: quantile construction is 1/(2N)-close") {
  std::vector<double> quantiles;
  for (int i = 1; i <= 1000; ++i)
    quantiles.push_back(semicircle_quantile((i - 0.5) / 1000.0));
  std::sort(quantiles.begin(), quantiles.end());
  CHECK(ks_distance(quantiles, semicircle_cdf) <= 0.001);
}

TEST_CASE("ks distance: tie handling (duplicated samples leave it unchanged)") {
  std::vector<double> base{-1.5, -0.25, 0.25, 0.25, 1.5};
  const double d1 = ks_distance(base, semicircle_cdf);
  std::vector<double> doubled;
  for (double v : base) {
    doubled.push_back(v);
    doubled.push_back(v);
  }
  std::sort(doubled.begin(), doubled.end());
  CHECK(ks_distance(doubled, semicircle_cdf) == doctest::Approx(d1).epsilon(1e-14));

  // Appending a matched pair of median points to the pure-median sample.
  std::vector<double> med{0.0, 0.0, 0.0};
  CHECK(ks_distance(med, semicircle_cdf) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(ks_distance(med, semicircle_cdf) >= 0.0);
}

TEST_CASE("energy experiment: empty models normalize to zero") {
  const EnergyEstimate gnp0 = run_energy_experiment(GnpModel{200, 0.0}, 1, 5);
  CHECK(gnp0.normalized_energies == std::vector<double>{0.0});
  CHECK(gnp0.mean == 0.0);

  const EnergyEstimate reg0 = run_energy_experiment(RegularModel{50, 0}, 2, 5);
  CHECK(reg0.normalized_energies == std::vector<double>(2, 0.0));
}

TEST_CASE("energy experiment: reference constants and reproducibility") {
  const EnergyEstimate a = run_energy_experiment(RegularModel{120, 2}, 3, 11);
  CHECK(a.law == ReferenceLaw::McKay);
  CHECK(a.reference_constant == doctest::Approx(4.0 / std::numbers::pi).epsilon(1e-15));
  double mean = 0.0;
  for (double e : a.normalized_energies) mean += e;
  CHECK(a.mean == doctest::Approx(mean / 3.0).epsilon(1e-15));

  const EnergyEstimate b = run_energy_experiment(RegularModel{120, 2}, 3, 11, 3);
  CHECK(a.normalized_energies == b.normalized_energies);  // thread invariance

  const EnergyEstimate c = run_energy_experiment(GnpModel{150, 0.4}, 2, 11);
  CHECK(c.reference_constant == doctest::Approx(8.0 / (3.0 * std::numbers::pi)).epsilon(1e-15));
}

TEST_CASE("energy experiment: failures carry the trial index") {
  try {
    run_energy_experiment(RegularModel{30, 8, RegularMethod::PairingRejection, 2}, 2, 0);
    FAIL("expected SamplingError");
  } catch (const SamplingError& e) {
    CHECK(std::string(e.what()).find("trial") != std::string::npos);
  }
}

TEST_CASE("normalized energy is invariant under joint rescaling") {
  const OrientedGraph g = sample_gnp_oriented({80, 0.5, 3});
  const SkewSpectrum spec = skew_spectrum(skew_adjacency(g));
  const double energy = skew_energy(spec);
  for (double c : {0.5, 2.0, std::sqrt(40.0)}) {
    const double scaled = skew_energy(normalized_spectrum(spec, c));
    CHECK(scaled * c == doctest::Approx(energy).epsilon(1e-12));
  }
}

TEST_CASE("esd experiment: histogram bookkeeping") {
  const EsdReport report = esd_experiment(GnpModel{80, 0.4}, 3, 17, 5);
  CHECK(report.counts.size() == 17);
  CHECK(report.bin_edges.size() == 18);
  std::int64_t total = 0;
  for (auto c : report.counts) total += c;
  CHECK(total == 80 * 3);  // mass conservation, outliers clamped in
  CHECK(report.bin_edges.front() == doctest::Approx(-2.2));
  CHECK(report.bin_edges.back() == doctest::Approx(2.2));
  CHECK(report.ks_distance >= 0.0);
  CHECK(report.ks_distance <= 1.0);
  CHECK(report.pooled_spectra.empty());

  CHECK_THROWS_AS(esd_experiment(GnpModel{80, 0.4}, 3, 9, 5), ParameterError);
  CHECK_THROWS_AS(esd_experiment(GnpModel{80, 0.0}, 3, 17, 5), ParameterError);
}

TEST_CASE("esd experiment: kept spectra match the histogram") {
  const EsdReport report = esd_experiment(RegularModel{60, 2}, 2, 12, 5, 1,
                                          ReferenceLaw::Auto, true);
  CHECK(report.scale == 1.0);  // McKay comparison runs on the raw spectrum
  CHECK(report.pooled_spectra.size() == 120);
}

TEST_CASE("esd experiment: the right law fits the regular model best") {
  const EsdReport mckay = esd_experiment(RegularModel{400, 3}, 2, 40, 8, 0, ReferenceLaw::McKay);
  const EsdReport semi =
      esd_experiment(RegularModel{400, 3}, 2, 40, 8, 0, ReferenceLaw::Semicircle);
  CHECK(mckay.ks_distance < 0.08);
  CHECK(semi.ks_distance > mckay.ks_distance);
}

TEST_CASE("concentration: full support counts everything") {
  ConcentrationParams params;
  params.n = 400;
  params.d = 10;
  params.lower = -2.0;
  params.upper = 2.0;
  params.delta = 0.1;
  params.trials = 3;
  params.seed = 13;
  const ConcentrationReport report = run_concentration_experiment(params);
  CHECK(report.expected == doctest::Approx(400.0).epsilon(1e-12));
  for (auto c : report.counts) CHECK(c <= 400);
  CHECK(report.fraction_within == 1.0);
}

TEST_CASE("concentration: bulk interval at moderate degree") {
  ConcentrationParams params;
  params.n = 300;
  params.d = 40;
  params.lower = -1.0;
  params.upper = 1.0;
  params.delta = 0.15;
  params.trials = 3;
  params.seed = 4;
  const ConcentrationReport report = run_concentration_experiment(params);
  CHECK(report.expected == doctest::Approx(300.0 * 0.608997781044229358).epsilon(1e-9));
  CHECK(report.fraction_within >= 2.0 / 3.0);
  CHECK_FALSE(report.interval_length_ok);  // 2 < delta^(-4/5) d^(-1/10) ln(d)^(1/5)
}

TEST_CASE("concentration: parameter validation") {
  ConcentrationParams bad;
  bad.n = 50;
  bad.d = 4;
  bad.lower = 1.0;
  bad.upper = -1.0;
  CHECK_THROWS_AS(run_concentration_experiment(bad), ParameterError);
  bad.lower = -3.0;
  bad.upper = 1.0;
  CHECK_THROWS_AS(run_concentration_experiment(bad), ParameterError);
  bad.lower = -1.0;
  bad.delta = 0.0;
  CHECK_THROWS_AS(run_concentration_experiment(bad), ParameterError);
}

TEST_CASE("gnp energy approaches the semicircle constant as n grows") {
  // Mean absolute deviation from 8/(3 pi) over 5 trials shrinks from
  // n=300 to n=1200, checked on two seeds.
  const double target = 8.0 / (3.0 * std::numbers::pi);
  for (std::uint64_t seed : {1ULL, 2ULL}) {
    auto mean_abs_dev = [&](std::int32_t n) {
      const EnergyEstimate est = run_energy_experiment(GnpModel{n, 0.3}, 5, seed);
      double dev = 0.0;
      for (double e : est.normalized_energies) dev += std::fabs(e - target);
      return dev / 5.0;
    };
    CHECK(mean_abs_dev(1200) < mean_abs_dev(300));
  }
}
