#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>

#include "rydephase/errors.hpp"
#include "rydephase/interaction.hpp"

using namespace rydephase;

TEST(Potential, ValidatesExponentAndCoefficient) {
  EXPECT_THROW(PotentialSpec(4, 1.0), InvalidArgumentError);
  EXPECT_THROW(PotentialSpec(3, 0.0), InvalidArgumentError);
  EXPECT_THROW(PotentialSpec(6, -2.0), InvalidArgumentError);
  EXPECT_THROW(PotentialSpec(6, INFINITY), InvalidArgumentError);
  EXPECT_EQ(PotentialSpec::dipole_dipole(2.0).alpha(), 3);
  EXPECT_EQ(PotentialSpec::van_der_waals(2.0).alpha(), 6);
}

TEST(Potential, ShiftPowerLaw) {
  const PotentialSpec dd = PotentialSpec::dipole_dipole(two_pi_mhz(1e5));
  EXPECT_NEAR(dd.shift_at(10.0), two_pi_mhz(100.0), 1e-9);
  const PotentialSpec vdw = PotentialSpec::van_der_waals(8.0);
  EXPECT_DOUBLE_EQ(vdw.shift_at(2.0), 8.0 / 64.0);
  EXPECT_THROW(vdw.shift_at(0.0), DegenerateGeometryError);
}

TEST(Potential, PairwiseShiftUsesEuclideanDistance) {
  const PotentialSpec pot(3, 125.0);
  EXPECT_NEAR(pairwise_shift({0, 0, 0}, {3, 4, 0}, pot), 1.0, 1e-14);
  EXPECT_EQ(pairwise_shift({1, 2, 3}, {4, 6, 3}, pot), pairwise_shift({4, 6, 3}, {1, 2, 3}, pot));
  EXPECT_THROW(pairwise_shift({1, 2, 3}, {1, 2, 3}, pot), DegenerateGeometryError);
}

TEST(Potential, CharacteristicFrequencies) {
  const double sigma = 15.0;
  const double dd = characteristic_frequency(PotentialSpec::dipole_dipole(two_pi_mhz(1e5)), sigma);
  const double vdw = characteristic_frequency(PotentialSpec::van_der_waals(two_pi_mhz(5.3e7)), sigma);
  EXPECT_NEAR(dd / two_pi_mhz(1.0), 1e5 / std::pow(15.0, 3), 1e-12);
  EXPECT_NEAR(dd / two_pi_mhz(29.63), 1.0, 1e-3);
  EXPECT_NEAR(vdw / two_pi_mhz(4.65), 1.0, 1e-3);
  EXPECT_THROW(characteristic_frequency(PotentialSpec(3, 1.0), 0.0), InvalidArgumentError);
}

TEST(Coefficients, ScalingLaw) {
  const auto m = CoefficientModel::scaling_law(6, 100, two_pi_mhz(5.3e7));
  EXPECT_EQ(m.exponent, 11.0);
  EXPECT_EQ(coefficient_for_level(100, m), two_pi_mhz(5.3e7));
  const double ratio = (50 - 3.13) / (100 - 3.13);
  EXPECT_NEAR(coefficient_for_level(50, m) / two_pi_mhz(5.3e7), std::pow(ratio, 11), 1e-12);
  EXPECT_LT(coefficient_for_level(60, m), coefficient_for_level(61, m));
  EXPECT_EQ(CoefficientModel::scaling_law(3, 100, 1.0).exponent, 4.0);
  EXPECT_THROW(coefficient_for_level(3, m), InvalidArgumentError);
  EXPECT_THROW(CoefficientModel::scaling_law(6, 100, 0.0), InvalidArgumentError);
  EXPECT_EQ(potential_for_level(80, m).alpha(), 6);
}

TEST(Coefficients, TableInterpolationAndRange) {
  const auto m = CoefficientModel::from_table(6, {{60, 10.0}, {70, 30.0}, {80, 50.0}});
  EXPECT_EQ(coefficient_for_level(70, m), 30.0);
  EXPECT_NEAR(coefficient_for_level(65, m), 20.0, 1e-12);
  EXPECT_NEAR(coefficient_for_level(78, m), 46.0, 1e-12);
  EXPECT_THROW(coefficient_for_level(59, m), OutOfRangeError);
  EXPECT_THROW(coefficient_for_level(81, m), OutOfRangeError);
  EXPECT_THROW(CoefficientModel::from_table(6, {}), InvalidArgumentError);
  EXPECT_THROW(CoefficientModel::from_table(6, {{60, 1.0}, {60, 2.0}}), InvalidArgumentError);
  EXPECT_THROW(CoefficientModel::from_table(6, {{60, -1.0}}), InvalidArgumentError);
}

TEST(Coefficients, LoadTable) {
  const auto dir = std::filesystem::temp_directory_path() / "rydephase_table_test";
  std::filesystem::create_directories(dir);
  const auto good = dir / "good.csv";
  std::ofstream(good) << "n,c_over_hbar_2pi_MHz_um_alpha\n60,1.5\n70,2.5\n";
  const auto rows = load_coefficient_table(good);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[1].n, 70);
  EXPECT_NEAR(rows[1].c_over_hbar, two_pi_mhz(2.5), 1e-12);

  const auto bad_header = dir / "bad_header.csv";
  std::ofstream(bad_header) << "n,c6\n60,1.5\n";
  EXPECT_THROW(load_coefficient_table(bad_header), InvalidArgumentError);
  const auto bad_value = dir / "bad_value.csv";
  std::ofstream(bad_value) << "n,c_over_hbar_2pi_MHz_um_alpha\n60,abc\n";
  EXPECT_THROW(load_coefficient_table(bad_value), InvalidArgumentError);
  EXPECT_THROW(load_coefficient_table(dir / "missing.csv"), IoError);
}
