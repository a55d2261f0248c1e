#pragma once

#include <array>
#include <cstdint>
#include <vector>

namespace rydephase {

using Vec3 = std::array<double, 3>;

// Pairs closer than this (μm) are treated as coincident.
inline constexpr double kMinSeparationUm = 1e-9;

//---------------------------------------------------------------------------//
/*!
 * Frozen ensemble of atom positions (μm).
 *
 * Each axis has its own Gaussian width; axes with zero width carry identically
 * zero coordinates, so a D-dimensional isotropic cloud is (σ,...,σ,0,...).
 * Immutable after construction.
 */
class AtomCloud {
 public:
  AtomCloud(std::vector<Vec3> positions, Vec3 axis_sigmas, std::uint64_t seed);

  // Cloud with explicit positions (axis widths unknown, recorded as zero).
  static AtomCloud from_positions(std::vector<Vec3> positions);

  const std::vector<Vec3>& positions() const { return positions_; }
  const Vec3& axis_sigmas() const { return axis_sigmas_; }
  std::uint64_t seed() const { return seed_; }
  std::size_t size() const { return positions_.size(); }

  // Number of axes with nonzero width.
  int dimension() const;

 private:
  std::vector<Vec3> positions_;
  Vec3 axis_sigmas_;
  std::uint64_t seed_;
};

struct SeparationSample {
  std::vector<double> distances;  // μm, all strictly positive
  double dimension = 0.0;
  double sigma = 0.0;             // μm
  std::size_t rejected = 0;       // redrawn zero-separation draws
};

AtomCloud sample_gaussian_cloud(const Vec3& axis_sigmas, std::size_t count, std::uint64_t seed);

// Isotropic cloud of `dimension` axes (1..3) with common width sigma.
AtomCloud sample_isotropic_cloud(int dimension, double sigma, std::size_t count, std::uint64_t seed);

/// Density of the pair separation R = |r1 - r2| for two atoms drawn from a
/// D-dimensional isotropic Gaussian of width sigma (1/μm). D may be
/// non-integer.
double pair_separation_density(double dimension, double sigma, double separation);

SeparationSample sample_pair_separation(int dimension, double sigma, std::size_t count,
                                        std::uint64_t seed);

/// Density of the dimensionless shift κ = (σ/R)^α implied by
/// pair_separation_density:
///   p(κ) = 2 / (2^D Γ(D/2) α) · κ^{-1-D/α} · exp(-κ^{-2/α} / 4).
double shift_density(double dimension, int alpha, double kappa);

// ∫₀^∞ pair_separation_density dR and ∫₀^∞ shift_density dκ by adaptive
// quadrature in log space. Both are 1 analytically.
double pair_separation_normalization(double dimension, double sigma);
double shift_density_normalization(double dimension, int alpha);

// Atoms in a Gaussian excitation volume: (π/2)^{3/2} ρ₀ w_z w_⊥².
double estimate_atom_number(double rho0_per_um3, double w_z_um, double w_perp_um);

}  // namespace rydephase
