#include "rydephase/asymptotics.hpp"

#include <cmath>
#include <numbers>

#include "rydephase/errors.hpp"

namespace rydephase {

namespace {

using Complex = std::complex<double>;
constexpr double kPi = std::numbers::pi;

Complex unit_phase(double angle) { return std::polar(1.0, angle); }

void require_positive(double dimension, double tau) {
  if (!(dimension > 0.0)) throw InvalidArgumentError("dimension must be positive");
  if (!(tau > 0.0)) throw InvalidArgumentError("asymptotic forms need tau > 0");
}

}  // namespace

DipoleDipoleConstants dd_constants(double dimension) {
  if (!(dimension > 0.0)) throw InvalidArgumentError("dimension must be positive");
  const double d = dimension;
  const Complex rate = 2.5 * std::pow(6.0, -0.6) * unit_phase(-kPi / 5.0);
  const double modulus = std::sqrt(kPi / 5.0) * std::pow(6.0, (d - 1.0) / 5.0) /
                         (std::pow(2.0, d - 2.0) * std::tgamma(0.5 * d));
  return {modulus * unit_phase(-kPi * (d - 1.0) / 10.0), rate};
}

VanDerWaalsConstants vdw_constants(double dimension) {
  if (!(dimension > 0.0)) throw InvalidArgumentError("dimension must be positive");
  const double d = dimension;
  const Complex rate = std::pow(12.0, 0.25) / 3.0 * unit_phase(-kPi / 8.0);
  const double modulus = std::sqrt(2.0 * kPi) * std::pow(12.0, (d - 1.0) / 8.0) /
                         (std::pow(2.0, d) * std::tgamma(0.5 * d));
  return {modulus * unit_phase(-kPi / 16.0 * (d - 1.0)), rate};
}

double dd_correction_coefficient(double dimension) {
  const double d = dimension;
  return 0.6 * (1.0 + d / 3.0) * (d - 2.0) + 14.0 / 15.0;
}

double vdw_correction_coefficient(double dimension) {
  const double d = dimension;
  return 1.5 * (1.0 + d / 6.0) * (0.5 * d - 1.0) + 35.0 / 24.0;
}

Complex dd_asymptote(double dimension, double tau, AsymptoticOrder order) {
  require_positive(dimension, tau);
  const auto [amplitude, rate] = dd_constants(dimension);
  Complex value = amplitude * std::pow(tau, (dimension - 1.0) / 5.0) * std::exp(-rate * std::pow(tau, 0.4));
  if (order == AsymptoticOrder::corrected)
    value *= 1.0 + unit_phase(kPi / 5.0) / std::pow(6.0 * tau, 0.4) * dd_correction_coefficient(dimension);
  return std::conj(value);
}

Complex vdw_asymptote(double dimension, double tau, AsymptoticOrder order) {
  require_positive(dimension, tau);
  const auto [amplitude, rate] = vdw_constants(dimension);
  Complex value =
      amplitude * std::pow(tau, (dimension - 1.0) / 8.0) * std::exp(-rate * std::pow(tau, 0.25));
  if (order == AsymptoticOrder::corrected)
    value *= 1.0 + unit_phase(kPi / 8.0) / std::pow(12.0 * tau, 0.25) * vdw_correction_coefficient(dimension);
  return std::conj(value);
}

Complex asymptote(const AsymptoteSpec& spec, double tau) {
  switch (spec.alpha) {
    case 3: return dd_asymptote(spec.dimension, tau, spec.order);
    case 6: return vdw_asymptote(spec.dimension, tau, spec.order);
    default: throw InvalidArgumentError("interaction exponent must be 3 or 6");
  }
}

}  // namespace rydephase
