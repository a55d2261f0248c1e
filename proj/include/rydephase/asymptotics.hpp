#pragma once

#include <complex>

namespace rydephase {

enum class AsymptoticOrder { leading, corrected };

struct AsymptoteSpec {
  int alpha = 3;
  double dimension = 3.0;
  AsymptoticOrder order = AsymptoticOrder::leading;
};

// Long-time form P ≈ A_D τ^{(D-1)/5} exp(-B τ^{2/5}) for R^{-3}.
struct DipoleDipoleConstants {
  std::complex<double> amplitude;  // A_D
  std::complex<double> rate;       // B
};

// Long-time form P ≈ C_D τ^{(D-1)/8} exp(-F τ^{1/4}) for R^{-6}.
struct VanDerWaalsConstants {
  std::complex<double> amplitude;  // C_D
  std::complex<double> rate;       // F
};

/// Steepest-descent constants, in the e^{+iκτ} phase convention in which they
/// are customarily quoted: arg A_D = -π(D-1)/10, arg B = -π/5.
DipoleDipoleConstants dd_constants(double dimension);

/// arg C_D = -π(D-1)/16, arg F = -π/8.
VanDerWaalsConstants vdw_constants(double dimension);

// Polynomial K(D) in the first correction factor 1 + e^{iπ/5}(6τ)^{-2/5} K(D).
double dd_correction_coefficient(double dimension);

// Polynomial K(D) in the first correction factor 1 + e^{iπ/8}(12τ)^{-1/4} K(D),
// K(D) = (3/2)(1 + D/6)(D/2 - 1) + 35/24.
double vdw_correction_coefficient(double dimension);

// Asymptotic P(τ) for τ ≫ 1 in the same convention as the pair sum and the
// quadrature, P = ∫ p(κ) e^{-iκτ} dκ: the complex conjugate of the quoted
// forms. Moduli are convention independent. Throws for τ ≤ 0.
std::complex<double> dd_asymptote(double dimension, double tau, AsymptoticOrder order);
std::complex<double> vdw_asymptote(double dimension, double tau, AsymptoticOrder order);
std::complex<double> asymptote(const AsymptoteSpec& spec, double tau);

}  // namespace rydephase
