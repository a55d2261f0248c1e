#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "rydephase/errors.hpp"
#include "rydephase/interference.hpp"

using namespace rydephase;

TEST(Quadrature, MatchesFrozenReferenceValues) {
  for (const auto& f : test::kFrozen) {
    const auto q = quadrature_point(f.dimension, f.alpha, f.tau);
    EXPECT_NEAR(q.value.real(), f.re, 1e-10) << f.dimension << " " << f.alpha << " " << f.tau;
    EXPECT_NEAR(q.value.imag(), f.im, 1e-10) << f.dimension << " " << f.alpha << " " << f.tau;
    EXPECT_LE(q.error, 1e-8);
  }
}

TEST(Quadrature, MatchesSplitContourOracle) {
  for (double d : {1.0, 1.3, 2.0, 3.0})
    for (int alpha : {3, 6})
      for (double tau : {0.05, 0.7, 3.0, 20.0, 50.0}) {
        const Complex ref = test::split_contour_p(d, alpha, tau);
        const Complex got = quadrature_point(d, alpha, tau).value;
        EXPECT_LT(std::abs(got - ref), 1e-8) << d << " " << alpha << " " << tau;
      }
}

TEST(Quadrature, TrivialPointsAndSymmetry) {
  const std::vector<double> taus{0.0};
  EXPECT_EQ(quadrature(3.0, 6, taus).values[0], Complex(1.0, 0.0));
  for (double tau : {0.3, 12.0, 400.0}) {
    const Complex p = quadrature_point(2.0, 3, tau).value;
    const Complex m = quadrature_point(2.0, 3, -tau).value;
    EXPECT_NEAR(std::abs(m - std::conj(p)), 0.0, 1e-12);
  }
  EXPECT_THROW(quadrature_point(0.0, 3, 1.0), InvalidArgumentError);
  EXPECT_THROW(quadrature_point(3.0, 5, 1.0), InvalidArgumentError);
  EXPECT_THROW(quadrature_point(3.0, 3, NAN), InvalidArgumentError);
}

TEST(Quadrature, ModulusBoundedAndDecaying) {
  for (double d : {1.0, 3.0})
    for (int alpha : {3, 6}) {
      double prev = 1.0;
      for (double tau = 0.1; tau < 2e4; tau *= 2.0) {
        const double a = std::abs(quadrature_point(d, alpha, tau).value);
        EXPECT_LE(a, 1.0);
        EXPECT_LT(a, prev) << d << " " << alpha << " " << tau;
        prev = a;
      }
    }
}

TEST(PairSum, TwoAtomsClosedForm) {
  const AtomCloud cloud = AtomCloud::from_positions({{0, 0, 0}, {2, 0, 0}});
  const PotentialSpec pot(3, 8.0);
  const std::vector<double> times{0.0, 0.5, 3.0};
  const auto s = pair_sum(cloud, pot, times);
  EXPECT_EQ(s.values[0], Complex(0.5, 0.0));
  for (std::size_t k = 1; k < times.size(); ++k)
    EXPECT_NEAR(std::abs(s.values[k] - 0.5 * std::exp(Complex(0.0, -times[k]))), 0.0, 1e-14);
  EXPECT_EQ(s.unit, GridUnit::microseconds);
  EXPECT_EQ(s.meta.method, "pair_sum");
}

TEST(PairSum, ZeroTimeAndBound) {
  const AtomCloud cloud = sample_isotropic_cloud(3, 15.0, 200, 4);
  const std::vector<double> times{0.0, 0.01, 0.1, 1.0};
  const auto s = pair_sum(cloud, PotentialSpec::van_der_waals(two_pi_mhz(5.3e7)), times);
  EXPECT_EQ(s.values[0], Complex(199.0 / 200.0, 0.0));
  for (const auto& v : s.values) EXPECT_LE(std::abs(v), 199.0 / 200.0 + 1e-15);
  EXPECT_EQ(*s.meta.seed, 4u);
  EXPECT_EQ(s.meta.samples, 200u);
}

TEST(PairSum, ScaleInvariance) {
  const AtomCloud cloud = sample_isotropic_cloud(3, 1.0, 150, 8);
  const double lambda = 3.7;
  std::vector<Vec3> scaled;
  for (auto p : cloud.positions()) scaled.push_back({lambda * p[0], lambda * p[1], lambda * p[2]});
  const std::vector<double> times{0.2, 1.0, 5.0};
  for (int alpha : {3, 6}) {
    const auto a = pair_sum(cloud, PotentialSpec(alpha, 1.0), times);
    const auto b = pair_sum(AtomCloud::from_positions(scaled), PotentialSpec(alpha, std::pow(lambda, alpha)), times);
    for (std::size_t k = 0; k < times.size(); ++k) EXPECT_NEAR(std::abs(a.values[k] - b.values[k]), 0.0, 1e-9);
  }
}

TEST(PairSum, CoincidentAtomsRejected) {
  const AtomCloud cloud = AtomCloud::from_positions({{0, 0, 0}, {1, 0, 0}, {0, 0, 0}});
  const std::vector<double> times{1.0};
  try {
    pair_sum(cloud, PotentialSpec(6, 1.0), times);
    FAIL() << "expected DegenerateGeometryError";
  } catch (const DegenerateGeometryError& e) {
    EXPECT_NE(std::string(e.what()).find("(0,2)"), std::string::npos);
  }
}

TEST(PairSum, DeterministicAcrossThreadCounts) {
  const AtomCloud cloud = sample_isotropic_cloud(2, 15.0, 300, 2);
  const PairShiftTable table(cloud, 3);
  std::vector<double> times;
  for (int k = 0; k < 17; ++k) times.push_back(0.01 * k);
  const auto one = table.evaluate(two_pi_mhz(1e5), times, {1});
  const auto many = table.evaluate(two_pi_mhz(1e5), times, {8});
  EXPECT_EQ(one.values, many.values);
  for (std::size_t k = 0; k < times.size(); ++k) {
    EXPECT_EQ((*one.errors)[k].re, (*many.errors)[k].re);
    EXPECT_EQ((*one.errors)[k].im, (*many.errors)[k].im);
  }
}

TEST(DistanceMc, AgreesWithQuadrature) {
  const std::vector<double> taus{0.0, 0.5, 2.0, 10.0, 40.0};
  for (int d : {1, 2, 3})
    for (int alpha : {3, 6}) {
      const auto mc = distance_mc(d, alpha, taus, 200000, 17);
      const auto q = quadrature(d, alpha, taus);
      EXPECT_EQ(mc.values[0], Complex(1.0, 0.0));
      for (std::size_t k = 1; k < taus.size(); ++k) {
        const auto& e = (*mc.errors)[k];
        EXPECT_NEAR(mc.values[k].real(), q.values[k].real(), 5.0 * e.re + 1e-12) << d << alpha << taus[k];
        EXPECT_NEAR(mc.values[k].imag(), q.values[k].imag(), 5.0 * e.im + 1e-12) << d << alpha << taus[k];
      }
    }
}

TEST(DistanceMc, SeedDeterminesResult) {
  const std::vector<double> taus{1.0, 5.0};
  const auto a = distance_mc(3, 6, taus, 1000, 5, {1});
  const auto b = distance_mc(3, 6, taus, 1000, 5, {4});
  const auto c = distance_mc(3, 6, taus, 1000, 6);
  EXPECT_EQ(a.values, b.values);
  EXPECT_NE(a.values, c.values);
  EXPECT_THROW(distance_mc(3, 6, taus, 99, 5), InvalidArgumentError);
}

TEST(Series, BiasCorrectedModulus) {
  ComplexSeries s;
  s.grid = {1.0};
  s.values = {Complex(0.3, 0.4)};
  EXPECT_EQ(s.abs2_bias_corrected(), s.abs2());
  s.errors = std::vector<StandardError>{{0.1, 0.2}};
  EXPECT_NEAR(s.abs2()[0], 0.25, 1e-15);
  EXPECT_NEAR(s.abs2_bias_corrected()[0], 0.25 - 0.05, 1e-15);
}

TEST(ShortTime, MatchesQuadratureAndClosedForm) {
  EXPECT_NEAR(short_time_dd3(0.1).real(), 1.0 - std::sqrt(std::numbers::pi) * 0.1 / 12.0, 1e-12);
  for (double tau : {0.001, 0.01, 0.03, 0.05})
    EXPECT_LT(std::abs(short_time_dd3(tau) - quadrature_point(3.0, 3, tau).value), 1e-3) << tau;
  EXPECT_THROW(short_time_dd3(0.0), InvalidArgumentError);
}

TEST(Ramsey, TransformEvaluatesAtDoubledTimes) {
  const std::vector<double> grid{0.0, 1.0, 2.5};
  std::vector<double> seen;
  const auto out = ramsey_transform(grid, [&](std::span<const double> t) {
    seen.assign(t.begin(), t.end());
    ComplexSeries s;
    s.grid = seen;
    for (double x : t) s.values.push_back(x == 0.0 ? Complex(1.0) : x == 2.0 ? Complex(-1.0) : Complex(0.0));
    s.meta.method = "stub";
    return s;
  });
  EXPECT_EQ(seen, (std::vector<double>{0.0, 2.0, 5.0}));
  EXPECT_EQ(out.grid, grid);
  EXPECT_EQ(out.values[0], Complex(1.0));
  EXPECT_EQ(out.values[1], Complex(0.0));
  EXPECT_EQ(out.values[2], Complex(0.5));
  EXPECT_EQ(out.meta.method, "ramsey(stub)");
}

TEST(Ramsey, QuadratureLongTimeLimit) {
  const std::vector<double> grid{5000.0};
  const auto out = ramsey_transform(grid, [](std::span<const double> t) { return quadrature(3.0, 3, t); });
  EXPECT_NEAR(std::abs(out.values[0]), 0.5, 1e-6);
}
