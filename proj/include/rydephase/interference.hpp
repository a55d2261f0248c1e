#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rydephase/cloud.hpp"
#include "rydephase/interaction.hpp"
#include "rydephase/parallel.hpp"

namespace rydephase {

using Complex = std::complex<double>;

enum class GridUnit { microseconds, tau };

struct SeriesMeta {
  std::string method;
  std::optional<std::uint64_t> seed;
  std::size_t samples = 0;  // atoms for pair_sum, draws for distance_mc
};

// Per-point standard errors of an estimate, real and imaginary parts separate.
struct StandardError {
  double re = 0.0;
  double im = 0.0;
};

//---------------------------------------------------------------------------//
/*!
 * Atom pair interference function sampled on a time grid.
 */
struct ComplexSeries {
  GridUnit unit = GridUnit::tau;
  std::vector<double> grid;
  std::vector<Complex> values;
  std::optional<std::vector<StandardError>> errors;
  SeriesMeta meta;

  std::size_t size() const { return grid.size(); }

  // |P|² per point; with standard errors present, the MC-noise bias
  // err_re² + err_im² is subtracted.
  std::vector<double> abs2() const;
  std::vector<double> abs2_bias_corrected() const;
};

//---------------------------------------------------------------------------//
/*!
 * Precomputed R^{-α} for every unordered atom pair of a cloud.
 *
 * The pair shifts for any coefficient are c·R^{-α}; building the table once
 * lets the same cloud be evaluated for many coefficients and times.
 */
class PairShiftTable {
 public:
  PairShiftTable(const AtomCloud& cloud, int alpha);

  int alpha() const { return alpha_; }
  std::size_t atom_count() const { return atoms_; }
  std::span<const double> inverse_powers() const { return inverse_powers_; }

  // P(t) = (1/N²) Σ_{μ≠ν} exp(-i c R^{-α} t) for each t, with the U-statistic
  // standard error of the pair mean.
  ComplexSeries evaluate(double c_over_hbar, std::span<const double> times, Parallelism par = {}) const;

 private:
  int alpha_;
  std::size_t atoms_;
  std::vector<double> inverse_powers_;  // row-major upper triangle
};

// Explicit double sum over atom pairs; times in μs.
ComplexSeries pair_sum(const AtomCloud& cloud, const PotentialSpec& pot, std::span<const double> times,
                       Parallelism par = {});

// Monte Carlo over sampled pair separations: mean of exp(-i κ τ), κ = (σ/R)^α.
ComplexSeries distance_mc(int dimension, int alpha, std::span<const double> taus, std::size_t samples,
                          std::uint64_t seed, Parallelism par = {});

/// Deterministic evaluation of P(τ) = ∫₀^∞ p(κ) e^{-iκτ} dκ.
///
/// The contour is the ray through the saddle point of the integrand,
/// arg κ = -sgn(τ)·πα/(2(α+2)), on which the integrand is non-oscillatory
/// and decays at both ends; relative accuracy therefore survives into the
/// deep tail. Absolute error ≤ 1e-8 is guaranteed or NumericalFailureError
/// is thrown. Negative τ is supported (P(-τ) = conj P(τ)).
ComplexSeries quadrature(double dimension, int alpha, std::span<const double> taus, Parallelism par = {});

// Single-point version of quadrature, with the achieved error estimate.
struct QuadraturePoint {
  Complex value;
  double error;
};
QuadraturePoint quadrature_point(double dimension, int alpha, double tau);

// Small-τ expansion of P for dipole-dipole interaction in three dimensions.
Complex short_time_dd3(double tau);

// ½[1 + P] pointwise; input is P evaluated at the doubled times.
ComplexSeries ramsey_values(const ComplexSeries& at_doubled_times);

/// Ramsey-sequence interference ½[1 + P(2t)] on `grid`, obtained by calling
/// `evaluate` on the doubled grid. Output grid equals `grid`.
template <class Evaluator>
ComplexSeries ramsey_transform(std::span<const double> grid, Evaluator&& evaluate) {
  std::vector<double> doubled(grid.begin(), grid.end());
  for (double& t : doubled) t *= 2.0;
  ComplexSeries at_double = evaluate(std::span<const double>(doubled));
  ComplexSeries out = ramsey_values(at_double);
  out.grid.assign(grid.begin(), grid.end());
  return out;
}

}  // namespace rydephase
