#pragma once

#include <filesystem>
#include <vector>

#include "rydephase/cloud.hpp"

namespace rydephase {

// Angular frequency of 2π × value_MHz, in rad/μs.
constexpr double two_pi_mhz(double value_mhz) { return 2.0 * 3.14159265358979323846 * value_mhz; }

//---------------------------------------------------------------------------//
/*!
 * Power-law pair potential V = C_α / R^α, stored as C_α/ħ in rad·μm^α/μs.
 */
class PotentialSpec {
 public:
  PotentialSpec(int alpha, double c_over_hbar);

  static PotentialSpec dipole_dipole(double c3_over_hbar) { return {3, c3_over_hbar}; }
  static PotentialSpec van_der_waals(double c6_over_hbar) { return {6, c6_over_hbar}; }

  int alpha() const { return alpha_; }
  double c_over_hbar() const { return c_over_hbar_; }

  // Level shift at separation R (rad/μs).
  double shift_at(double separation) const;

 private:
  int alpha_;
  double c_over_hbar_;
};

struct CoefficientRow {
  int n;
  double c_over_hbar;  // rad·μm^α/μs
};

enum class CoefficientKind { scaling_law, table };

/// Maps a principal quantum number to C_α/ħ, either by the Rydberg scaling
/// law C(n) = C(n₀)·[(n-δ)/(n₀-δ)]^p or by interpolating a table.
struct CoefficientModel {
  CoefficientKind kind = CoefficientKind::scaling_law;
  int alpha = 6;
  int anchor_n = 100;
  double anchor_value = 0.0;  // rad·μm^α/μs
  double exponent = 11.0;
  double quantum_defect = 3.13;
  std::vector<CoefficientRow> table;

  static CoefficientModel scaling_law(int alpha, int anchor_n, double anchor_value);
  static CoefficientModel from_table(int alpha, std::vector<CoefficientRow> rows,
                                     double quantum_defect = 3.13);

  // Checks the invariants; throws InvalidArgumentError.
  void validate() const;
};

// Default exponent of the scaling law for the given potential (11 vdW, 4 dd).
double default_scaling_exponent(int alpha);

double pairwise_shift(const Vec3& r1, const Vec3& r2, const PotentialSpec& pot);

double coefficient_for_level(int n, const CoefficientModel& model);

PotentialSpec potential_for_level(int n, const CoefficientModel& model);

// Ω = (C_α/ħ)/σ^α; dimensionless time is τ = Ω t.
double characteristic_frequency(const PotentialSpec& pot, double sigma);

// Two-column CSV with header `n,c_over_hbar_2pi_MHz_um_alpha`; values are
// converted from 2π×MHz·μm^α to rad·μm^α/μs.
std::vector<CoefficientRow> load_coefficient_table(const std::filesystem::path& path);

}  // namespace rydephase
