#include "rydephase/cloud.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "log_quadrature.hpp"
#include "rydephase/errors.hpp"
#include "rydephase/rng.hpp"

namespace rydephase {

namespace {

void require_dimension(double dimension) {
  if (!(dimension > 0.0) || !std::isfinite(dimension))
    throw InvalidArgumentError("dimension must be positive, got " + std::to_string(dimension));
}

void require_alpha(int alpha) {
  if (alpha != 3 && alpha != 6)
    throw InvalidArgumentError("interaction exponent must be 3 or 6, got " + std::to_string(alpha));
}

// log of the normalization 2 / (2^D Γ(D/2) α)
double log_shift_prefactor(double dimension, int alpha) {
  return std::log(2.0 / alpha) - dimension * std::numbers::ln2 - std::lgamma(0.5 * dimension);
}

}  // namespace

AtomCloud::AtomCloud(std::vector<Vec3> positions, Vec3 axis_sigmas, std::uint64_t seed)
    : positions_(std::move(positions)), axis_sigmas_(axis_sigmas), seed_(seed) {}

AtomCloud AtomCloud::from_positions(std::vector<Vec3> positions) {
  return AtomCloud(std::move(positions), Vec3{0.0, 0.0, 0.0}, 0);
}

int AtomCloud::dimension() const {
  int d = 0;
  for (double s : axis_sigmas_) d += s > 0.0 ? 1 : 0;
  return d;
}

AtomCloud sample_gaussian_cloud(const Vec3& axis_sigmas, std::size_t count, std::uint64_t seed) {
  if (count < 2) throw InvalidArgumentError("a cloud needs at least 2 atoms");
  bool any = false;
  for (double s : axis_sigmas) {
    if (!(s >= 0.0) || !std::isfinite(s))
      throw InvalidArgumentError("axis widths must be finite and non-negative");
    any = any || s > 0.0;
  }
  if (!any) throw InvalidArgumentError("at least one axis width must be positive");

  std::vector<Vec3> positions(count, Vec3{0.0, 0.0, 0.0});
  for (int axis = 0; axis < 3; ++axis) {
    if (axis_sigmas[axis] == 0.0) continue;
    CounterRng rng = CounterRng(seed).substream(static_cast<std::uint64_t>(axis));
    std::normal_distribution<double> normal(0.0, axis_sigmas[axis]);
    for (auto& p : positions) p[axis] = normal(rng);
  }
  return AtomCloud(std::move(positions), axis_sigmas, seed);
}

AtomCloud sample_isotropic_cloud(int dimension, double sigma, std::size_t count, std::uint64_t seed) {
  if (dimension < 1 || dimension > 3)
    throw InvalidArgumentError("isotropic cloud dimension must be 1, 2 or 3");
  if (!(sigma > 0.0)) throw InvalidArgumentError("sigma must be positive");
  Vec3 sigmas{0.0, 0.0, 0.0};
  for (int axis = 0; axis < dimension; ++axis) sigmas[axis] = sigma;
  return sample_gaussian_cloud(sigmas, count, seed);
}

double pair_separation_density(double dimension, double sigma, double separation) {
  require_dimension(dimension);
  if (!(sigma > 0.0)) throw InvalidArgumentError("sigma must be positive");
  if (!(separation >= 0.0)) throw InvalidArgumentError("separation must be non-negative");
  // S_{D-1}(R) e^{-R²/4σ²} / (4πσ²)^{D/2}, with S_{D-1} = 2π^{D/2} R^{D-1} / Γ(D/2)
  const double half_d = 0.5 * dimension;
  if (separation == 0.0) {
    if (dimension > 1.0) return 0.0;
    if (dimension < 1.0) return std::numeric_limits<double>::infinity();
    return 1.0 / (std::sqrt(std::numbers::pi) * sigma);
  }
  const double log_density = std::numbers::ln2 - std::lgamma(half_d) +
                             (dimension - 1.0) * std::log(separation) -
                             separation * separation / (4.0 * sigma * sigma) -
                             half_d * std::log(4.0 * sigma * sigma);
  return std::exp(log_density);
}

SeparationSample sample_pair_separation(int dimension, double sigma, std::size_t count,
                                        std::uint64_t seed) {
  if (dimension < 1 || dimension > 3)
    throw InvalidArgumentError("sampled separations need dimension 1, 2 or 3");
  if (!(sigma > 0.0)) throw InvalidArgumentError("sigma must be positive");
  if (count < 1) throw InvalidArgumentError("sample count must be at least 1");

  SeparationSample out;
  out.dimension = dimension;
  out.sigma = sigma;
  out.distances.reserve(count);
  // r1 - r2 has independent N(0, 2σ²) components.
  CounterRng rng(seed);
  std::normal_distribution<double> normal(0.0, std::numbers::sqrt2 * sigma);
  while (out.distances.size() < count) {
    double r2 = 0.0;
    for (int axis = 0; axis < dimension; ++axis) {
      const double x = normal(rng);
      r2 += x * x;
    }
    const double r = std::sqrt(r2);
    if (r < kMinSeparationUm) {
      ++out.rejected;
      continue;
    }
    out.distances.push_back(r);
  }
  return out;
}

double shift_density(double dimension, int alpha, double kappa) {
  require_dimension(dimension);
  require_alpha(alpha);
  if (!(kappa > 0.0)) throw InvalidArgumentError("kappa must be positive");
  const double log_kappa = std::log(kappa);
  return std::exp(log_shift_prefactor(dimension, alpha) - (1.0 + dimension / alpha) * log_kappa -
                  0.25 * std::exp(-2.0 / alpha * log_kappa));
}

double pair_separation_normalization(double dimension, double sigma) {
  require_dimension(dimension);
  if (!(sigma > 0.0)) throw InvalidArgumentError("sigma must be positive");
  // R = σ e^x; integrand R·P_D(R) in x is smooth and decays at both ends.
  auto log_integrand = [=](double x) {
    const double r = sigma * std::exp(x);
    return std::log(r) + std::log(pair_separation_density(dimension, sigma, r));
  };
  return detail::integrate_log_real(log_integrand, std::log(2.0), 1e-13).value;
}

double shift_density_normalization(double dimension, int alpha) {
  require_dimension(dimension);
  require_alpha(alpha);
  const double log_c = log_shift_prefactor(dimension, alpha);
  auto log_integrand = [=](double x) {
    return log_c - dimension / alpha * x - 0.25 * std::exp(-2.0 / alpha * x);
  };
  // peak of κ p(κ) in x = ln κ: e^{-2x/α} = 2D
  const double x_peak = -0.5 * alpha * std::log(2.0 * dimension);
  return detail::integrate_log_real(log_integrand, x_peak, 1e-13).value;
}

double estimate_atom_number(double rho0_per_um3, double w_z_um, double w_perp_um) {
  if (!(rho0_per_um3 > 0.0) || !(w_z_um > 0.0) || !(w_perp_um > 0.0))
    throw InvalidArgumentError("density and waists must be positive");
  return std::pow(0.5 * std::numbers::pi, 1.5) * rho0_per_um3 * w_z_um * w_perp_um * w_perp_um;
}

}  // namespace rydephase
