#include "rydephase/interference.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "log_quadrature.hpp"
#include "rydephase/errors.hpp"

namespace rydephase {

std::vector<double> ComplexSeries::abs2() const {
  std::vector<double> out(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) out[i] = std::norm(values[i]);
  return out;
}

std::vector<double> ComplexSeries::abs2_bias_corrected() const {
  auto out = abs2();
  if (!errors) return out;
  for (std::size_t i = 0; i < out.size(); ++i) {
    const auto& e = (*errors)[i];
    out[i] -= e.re * e.re + e.im * e.im;
  }
  return out;
}

//---------------------------------------------------------------------------//
// Explicit pair sum
//---------------------------------------------------------------------------//

PairShiftTable::PairShiftTable(const AtomCloud& cloud, int alpha) : alpha_(alpha), atoms_(cloud.size()) {
  if (alpha != 3 && alpha != 6) throw InvalidArgumentError("interaction exponent must be 3 or 6");
  if (atoms_ < 2) throw InvalidArgumentError("pair sums need at least 2 atoms");
  const auto& pos = cloud.positions();
  inverse_powers_.reserve(atoms_ * (atoms_ - 1) / 2);
  std::vector<std::pair<std::size_t, std::size_t>> coincident;
  for (std::size_t i = 0; i < atoms_; ++i) {
    for (std::size_t j = i + 1; j < atoms_; ++j) {
      const double dx = pos[i][0] - pos[j][0], dy = pos[i][1] - pos[j][1], dz = pos[i][2] - pos[j][2];
      const double r2 = dx * dx + dy * dy + dz * dz;
      if (r2 < kMinSeparationUm * kMinSeparationUm) {
        coincident.emplace_back(i, j);
        inverse_powers_.push_back(0.0);
        continue;
      }
      const double inv_r2 = 1.0 / r2;
      inverse_powers_.push_back(alpha == 6 ? inv_r2 * inv_r2 * inv_r2 : inv_r2 * std::sqrt(inv_r2));
    }
  }
  if (!coincident.empty()) {
    std::ostringstream msg;
    msg << coincident.size() << " coincident atom pair(s):";
    for (std::size_t k = 0; k < coincident.size() && k < 10; ++k)
      msg << " (" << coincident[k].first << "," << coincident[k].second << ")";
    if (coincident.size() > 10) msg << " ...";
    throw DegenerateGeometryError(msg.str());
  }
}

ComplexSeries PairShiftTable::evaluate(double c_over_hbar, std::span<const double> times,
                                       Parallelism par) const {
  ComplexSeries out;
  out.unit = GridUnit::microseconds;
  out.grid.assign(times.begin(), times.end());
  out.values.resize(times.size());
  out.errors.emplace(times.size());
  out.meta = {"pair_sum", std::nullopt, atoms_};

  const std::size_t n = atoms_;
  const double nd = static_cast<double>(n);
  parallel_for(times.size(), par, [&](std::size_t k) {
    const double t = times[k];
    if (t == 0.0) {
      out.values[k] = Complex((nd - 1.0) / nd, 0.0);
      (*out.errors)[k] = {0.0, 0.0};
      return;
    }
    const double rate = c_over_hbar * t;
    std::vector<double> row_re(n, 0.0), row_im(n, 0.0);
    double sum_re = 0.0, sum_im = 0.0;
    const double* inv = inverse_powers_.data();
    for (std::size_t i = 0; i < n; ++i) {
      double acc_re = 0.0, acc_im = 0.0;
      for (std::size_t j = i + 1; j < n; ++j, ++inv) {
        const double phase = rate * *inv;
        const double c = std::cos(phase), s = -std::sin(phase);
        acc_re += c;
        acc_im += s;
        row_re[j] += c;
        row_im[j] += s;
      }
      row_re[i] += acc_re;
      row_im[i] += acc_im;
      sum_re += acc_re;
      sum_im += acc_im;
    }
    out.values[k] = Complex(2.0 * sum_re / (nd * nd), 2.0 * sum_im / (nd * nd));

    // Hoeffding: Var(U) ≈ 4 Var(h1)/N, h1 = per-atom row mean.
    double mean_re = 0.0, mean_im = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      mean_re += row_re[i];
      mean_im += row_im[i];
    }
    mean_re /= nd * (nd - 1.0);
    mean_im /= nd * (nd - 1.0);
    double var_re = 0.0, var_im = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double dr = row_re[i] / (nd - 1.0) - mean_re;
      const double di = row_im[i] / (nd - 1.0) - mean_im;
      var_re += dr * dr;
      var_im += di * di;
    }
    var_re /= nd - 1.0;
    var_im /= nd - 1.0;
    const double scale = 2.0 / std::sqrt(nd) * (nd - 1.0) / nd;
    (*out.errors)[k] = {scale * std::sqrt(var_re), scale * std::sqrt(var_im)};
  });
  return out;
}

ComplexSeries pair_sum(const AtomCloud& cloud, const PotentialSpec& pot, std::span<const double> times,
                       Parallelism par) {
  PairShiftTable table(cloud, pot.alpha());
  ComplexSeries out = table.evaluate(pot.c_over_hbar(), times, par);
  out.meta.seed = cloud.seed();
  return out;
}

//---------------------------------------------------------------------------//
// Distance-space Monte Carlo
//---------------------------------------------------------------------------//

ComplexSeries distance_mc(int dimension, int alpha, std::span<const double> taus, std::size_t samples,
                          std::uint64_t seed, Parallelism par) {
  if (alpha != 3 && alpha != 6) throw InvalidArgumentError("interaction exponent must be 3 or 6");
  if (samples < 100) throw InvalidArgumentError("distance Monte Carlo needs at least 100 samples");

  // κ = (σ/R)^α is independent of σ; draw with σ = 1.
  const SeparationSample draw = sample_pair_separation(dimension, 1.0, samples, seed);
  std::vector<double> kappa(samples);
  for (std::size_t i = 0; i < samples; ++i) kappa[i] = std::pow(draw.distances[i], -alpha);

  ComplexSeries out;
  out.unit = GridUnit::tau;
  out.grid.assign(taus.begin(), taus.end());
  out.values.resize(taus.size());
  out.errors.emplace(taus.size());
  out.meta = {"distance_mc", seed, samples};

  const double n = static_cast<double>(samples);
  parallel_for(taus.size(), par, [&](std::size_t k) {
    const double tau = taus[k];
    if (tau == 0.0) {
      out.values[k] = Complex(1.0, 0.0);
      (*out.errors)[k] = {0.0, 0.0};
      return;
    }
    double sum_re = 0.0, sum_im = 0.0, sq_re = 0.0, sq_im = 0.0;
    for (double kap : kappa) {
      const double c = std::cos(kap * tau), s = -std::sin(kap * tau);
      sum_re += c;
      sum_im += s;
      sq_re += c * c;
      sq_im += s * s;
    }
    const double mean_re = sum_re / n, mean_im = sum_im / n;
    const double var_re = std::max(0.0, (sq_re - n * mean_re * mean_re) / (n - 1.0));
    const double var_im = std::max(0.0, (sq_im - n * mean_im * mean_im) / (n - 1.0));
    out.values[k] = Complex(mean_re, mean_im);
    (*out.errors)[k] = {std::sqrt(var_re / n), std::sqrt(var_im / n)};
  });
  return out;
}

//---------------------------------------------------------------------------//
// Deterministic quadrature
//---------------------------------------------------------------------------//

QuadraturePoint quadrature_point(double dimension, int alpha, double tau) {
  if (!(dimension > 0.0)) throw InvalidArgumentError("dimension must be positive");
  if (alpha != 3 && alpha != 6) throw InvalidArgumentError("interaction exponent must be 3 or 6");
  if (!std::isfinite(tau)) throw InvalidArgumentError("tau must be finite");
  if (tau == 0.0) return {Complex(1.0, 0.0), 0.0};

  const double a = alpha;
  const double angle = std::numbers::pi * a / (2.0 * (a + 2.0)) * (tau > 0.0 ? 1.0 : -1.0);
  const double log_c = std::log(2.0 / a) - dimension * std::numbers::ln2 - std::lgamma(0.5 * dimension);
  const Complex i(0.0, 1.0);

  // κ = e^x e^{-i angle}; exponent of p(κ)·κ·e^{-iκτ}
  auto exponent = [=](double x) {
    const Complex log_kappa(x, -angle);
    return log_c - (dimension / a) * log_kappa - 0.25 * std::exp(-(2.0 / a) * log_kappa) -
           i * tau * std::exp(log_kappa);
  };
  const double saddle_x = -a / (a + 2.0) * std::log(2.0 * a * std::abs(tau));
  const auto result = detail::integrate_log(exponent, saddle_x, 1e-12);

  constexpr double kAbsTolerance = 1e-8;
  if (!(result.error <= kAbsTolerance) || !std::isfinite(result.value.real()) ||
      !std::isfinite(result.value.imag())) {
    std::ostringstream msg;
    msg << "quadrature did not converge for D=" << dimension << ", alpha=" << alpha << ", tau=" << tau
        << " (error estimate " << result.error << ")";
    throw NumericalFailureError(msg.str(), result.error);
  }
  return {result.value, result.error};
}

ComplexSeries quadrature(double dimension, int alpha, std::span<const double> taus, Parallelism par) {
  ComplexSeries out;
  out.unit = GridUnit::tau;
  out.grid.assign(taus.begin(), taus.end());
  out.values.resize(taus.size());
  out.meta = {"quadrature", std::nullopt, 0};
  parallel_for(taus.size(), par, [&](std::size_t k) { out.values[k] = quadrature_point(dimension, alpha, taus[k]).value; });
  return out;
}

//---------------------------------------------------------------------------//

Complex short_time_dd3(double tau) {
  if (!(tau > 0.0)) throw InvalidArgumentError("short-time expansion needs tau > 0");
  const double pi = std::numbers::pi;
  const double log_term = std::log(std::cbrt(tau) / 2.0) + 5.0 / 6.0 * std::numbers::egamma - 1.0 / 3.0;
  const Complex bracket = 1.0 - Complex(0.0, 6.0 / pi) * log_term;
  return 1.0 - std::sqrt(pi) * tau / 12.0 * bracket;
}

ComplexSeries ramsey_values(const ComplexSeries& at_doubled_times) {
  ComplexSeries out = at_doubled_times;
  for (auto& v : out.values) v = 0.5 * (1.0 + v);
  if (out.errors)
    for (auto& e : *out.errors) e = {0.5 * e.re, 0.5 * e.im};
  out.meta.method = "ramsey(" + at_doubled_times.meta.method + ")";
  return out;
}

}  // namespace rydephase
