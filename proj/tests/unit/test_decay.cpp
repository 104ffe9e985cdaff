#include <doctest.h>

#include <cmath>

#include "core/decay.hpp"

using namespace fracwave;

namespace {

SystemParams params(double a, double b, double alpha) {
  return {a, b, {alpha, 1.0, 1.0}};
}

EnergyTrace synthetic_trace(const std::function<double(double)>& energy,
                            double t_max, double dt) {
  EnergyTrace tr;
  for (double t = 0.0; t <= t_max + 1e-12; t += dt) {
    tr.times.push_back(t);
    tr.energy.push_back(energy(t));
    tr.dissipation.push_back(0.0);
    tr.balance_residual.push_back(0.0);
  }
  return tr;
}

}  // namespace

TEST_CASE("predicted decay exponents") {
  CHECK(*predicted_exponent(params(1.0, 1.0, 0.5)) == doctest::Approx(4.0));
  CHECK(*predicted_exponent(params(1.0, 2.0 * M_PI, 0.5)) ==
        doctest::Approx(2.0 / 4.5));
  CHECK(*predicted_exponent(params(1.0, M_PI, 0.5)) ==
        doctest::Approx(2.0 / 4.5));
  // sqrt(a) rational
  CHECK(*predicted_exponent(params(4.0, 1.0, 0.3)) ==
        doctest::Approx(2.0 / 4.7));
  CHECK(*predicted_exponent(params(0.25, 1.0, 0.5)) ==
        doctest::Approx(2.0 / 4.5));
  // a rational, sqrt(a) irrational: covered only for small b
  CHECK(*predicted_exponent(params(2.0, 1.0, 0.5)) ==
        doctest::Approx(2.0 / 4.5));
  CHECK_FALSE(predicted_exponent(params(2.0, 2.0, 0.5)).has_value());
  // no small-denominator structure: almost-all-irrational regime
  CHECK(*predicted_exponent(params(M_PI, 1.0, 0.5)) ==
        doctest::Approx(2.0 / 4.5));

  SUBCASE("pi-multiple detection tolerance") {
    CHECK(*predicted_exponent(params(1.0, 3.0 * M_PI + 1e-12, 0.5)) ==
          doctest::Approx(2.0 / 4.5));
    CHECK(*predicted_exponent(params(1.0, 3.0 * M_PI + 1e-3, 0.5)) ==
          doctest::Approx(4.0));
  }

  SUBCASE("scale consistency with the abscissa exponents") {
    for (double alpha : {0.1, 0.3, 0.5, 0.7, 0.9}) {
      CHECK(2.0 / *predicted_exponent(params(1.0, 1.0, alpha)) ==
            doctest::Approx(1.0 - alpha).epsilon(1e-14));
      CHECK(2.0 / *predicted_exponent(params(1.0, M_PI, alpha)) ==
            doctest::Approx(5.0 - alpha).epsilon(1e-14));
    }
  }
}

TEST_CASE("rational approximation helper") {
  CHECK(rational_approx(2.0).value() == std::make_pair(2L, 1L));
  CHECK(rational_approx(0.25).value() == std::make_pair(1L, 4L));
  CHECK(rational_approx(1.5).value() == std::make_pair(3L, 2L));
  CHECK_FALSE(rational_approx(std::sqrt(2.0)).has_value());
  CHECK_FALSE(rational_approx(M_PI).has_value());
}

TEST_CASE("decay-exponent fitting") {
  SUBCASE("exact power law recovers the exponent to machine precision") {
    const auto tr = synthetic_trace(
        [](double t) { return t > 0 ? std::pow(t, -2.0) : 1.0; }, 120.0, 0.05);
    const auto fit = fit_decay_exponent(tr, 1.0, 100.0);
    CHECK(fit.exponent == doctest::Approx(2.0).epsilon(1e-9));
    CHECK(fit.r_squared > 1.0 - 1e-12);
  }
  SUBCASE("perturbed power law stays within 0.01") {
    const auto tr = synthetic_trace(
        [](double t) {
          return t > 0 ? 5.0 * std::pow(t, -0.44) * (1.0 + 0.01 * std::sin(t))
                       : 5.0;
        },
        120.0, 0.05);
    const auto fit = fit_decay_exponent(tr, 10.0, 100.0);
    CHECK(std::abs(fit.exponent - 0.44) < 0.01);
  }
  SUBCASE("exponential trace is flagged as non-power-law") {
    const auto tr = synthetic_trace(
        [](double t) { return std::exp(-t); }, 110.0, 0.05);
    const auto fit = fit_decay_exponent(tr, 10.0, 100.0);
    CHECK(fit.exponent > 20.0);  // far above every s(alpha)
    CHECK(fit.r_squared < 0.98);
  }
  SUBCASE("window and positivity guards") {
    const auto tr = synthetic_trace(
        [](double t) { return std::max(0.0, 1.0 - 0.02 * t); }, 120.0, 0.05);
    // narrower than a factor 4
    CHECK_THROWS_AS(fit_decay_exponent(tr, 30.0, 100.0), std::invalid_argument);
    // the exact factor-4 default window is legal
    EnergyTrace pw = synthetic_trace(
        [](double t) { return t > 0 ? std::pow(t, -1.0) : 1.0; }, 100.0, 0.05);
    CHECK_NOTHROW(fit_decay_exponent(pw, 25.0, 100.0));
    // nonpositive energy in window
    CHECK_THROWS_AS(fit_decay_exponent(tr, 25.0, 100.0), std::invalid_argument);
  }
}

TEST_CASE("spectral vs energy report") {
  const SystemParams p = params(1.0, 1.0, 0.5);
  AbscissaScan scan;
  scan.params = p;
  scan.branch = 1;
  scan.fitted_exponent = -0.49;  // synthetic: |Re lambda_n| ~ n^-0.49
  DecayFit fit;
  fit.exponent = 3.6;
  fit.t_lo = 50.0;
  fit.t_hi = 200.0;
  fit.r_squared = 0.995;

  SUBCASE("consistent pipeline") {
    const auto r = spectral_vs_energy_report(p, scan, fit, p);
    CHECK(r.params_match);
    CHECK(r.consistent);  // |0.49 - 0.5| <= 0.05
    CHECK(r.expected_abscissa == doctest::Approx(0.5));
    CHECK_FALSE(r.pre_asymptotic);
  }
  SUBCASE("mismatched inputs are flagged") {
    const auto r =
        spectral_vs_energy_report(p, scan, fit, params(1.0, 2.0, 0.5));
    CHECK_FALSE(r.params_match);
    CHECK_FALSE(r.consistent);
  }
  SUBCASE("abscissa drift breaks consistency") {
    AbscissaScan off = scan;
    off.fitted_exponent = -0.6;
    const auto r = spectral_vs_energy_report(p, off, fit, p);
    CHECK_FALSE(r.consistent);
  }
  SUBCASE("low r-squared flags a pre-asymptotic window") {
    DecayFit noisy = fit;
    noisy.r_squared = 0.9;
    const auto r = spectral_vs_energy_report(p, scan, noisy, p);
    CHECK(r.pre_asymptotic);
  }
}
