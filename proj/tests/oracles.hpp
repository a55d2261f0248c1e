#pragma once

// Independent reference values for P(τ) = ∫₀^∞ p(κ) e^{-iκτ} dκ.

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include <cmath>
#include <complex>

namespace rydephase::test {

// High-precision values (25-digit real-axis oscillatory quadrature).
struct FrozenValue {
  double dimension;
  int alpha;
  double tau;
  double re;
  double im;
};

inline constexpr FrozenValue kFrozen[] = {
    {3.0, 6, 50.0, 0.537509644043381, -0.214530809338819},
    {3.0, 3, 0.01, 0.998543726603463, -0.0058821633828792},
    {3.0, 3, 1.0, 0.883808709285543, -0.18050923631333},
    {2.0, 6, 100.0, 0.244749570223136, -0.173632364560442},
    {1.0, 3, 10.0, 0.0478801497785073, -0.153367063239571},
    {1.3, 6, 20.0, 0.2720345651791, -0.141498241698426},
    {3.0, 6, 200.0, 0.319837289401815, -0.223731896465382},
    {3.0, 3, 500.0, 0.0019732840927816, 0.00220128304137456},
};

inline std::complex<double> shift_density_complex(double d, int alpha, std::complex<double> kappa) {
  const double log_c = std::log(2.0 / (std::pow(2.0, d) * std::tgamma(0.5 * d) * alpha));
  const std::complex<double> log_k = std::log(kappa);
  return std::exp(log_c - (1.0 + d / alpha) * log_k - 0.25 * std::exp(-2.0 / alpha * log_k));
}

/// Real-axis split: [0, κ_c] with tanh-sinh, κ_c = max(1, 1/τ), and the tail
/// along κ = κ_c - i y with exp-sinh. Accurate for moderate τ > 0 only.
inline std::complex<double> split_contour_p(double d, int alpha, double tau) {
  using C = std::complex<double>;
  const double kc = std::max(1.0, 1.0 / tau);
  boost::math::quadrature::tanh_sinh<double> head;
  boost::math::quadrature::exp_sinh<double> tail;
  auto head_part = [&](bool imag) {
    return head.integrate(
        [&](double k) {
          const C v = shift_density_complex(d, alpha, C(k, 0.0)) * std::exp(C(0.0, -k * tau));
          return imag ? v.imag() : v.real();
        },
        0.0, kc);
  };
  auto tail_part = [&](bool imag) {
    return tail.integrate([&](double y) {
      const C kappa(kc, -y);
      const C v = C(0.0, -1.0) * shift_density_complex(d, alpha, kappa) * std::exp(C(0.0, -kc * tau)) *
                  std::exp(-y * tau);
      return imag ? v.imag() : v.real();
    });
  };
  return {head_part(false) + tail_part(false), head_part(true) + tail_part(true)};
}

}  // namespace rydephase::test
