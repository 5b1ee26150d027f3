#include "oracles.hpp"
#include "unruh/channel.hpp"
#include "unruh/measures.hpp"

#include <gtest/gtest.h>

#include <cmath>

namespace unruh {
namespace {

double max_abs(const Matrix4c& m) { return m.cwiseAbs().maxCoeff(); }

Matrix4c swap_qubits(const Matrix4c& m) {
  const int p[4] = {0, 2, 1, 3};
  Matrix4c out;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) out(p[i], p[j]) = m(i, j);
  return out;
}

Matrix4c reduce(const Matrix4c& rho, double ra, double rb, const RegionSelector& sel) {
  return project_region(dilate(rho, AccelerationPair(ra, rb)), sel);
}

TEST(Acceleration, Bounds) {
  EXPECT_NO_THROW(AccelerationPair(0.0, kQuarterPi));
  EXPECT_THROW(AccelerationPair(-1e-9, 0.0), std::invalid_argument);
  EXPECT_THROW(AccelerationPair(0.0, kQuarterPi + 1e-9), std::invalid_argument);
  EXPECT_THROW(AccelerationPair(std::nan(""), 0.0), std::invalid_argument);
}

TEST(Regions, LabelsRoundTrip) {
  for (const RegionSelector& sel : all_regions()) EXPECT_EQ(parse_region(to_string(sel)), sel);
  EXPECT_EQ(to_string(RegionSelector{Wedge::I, Wedge::II}), "I-II");
  EXPECT_THROW(parse_region("III"), std::invalid_argument);
}

TEST(Isometry, ColumnsAreOrthonormal) {
  for (double r : {0.0, 0.3, kQuarterPi}) {
    const Isometry v = unruh_isometry(r);
    EXPECT_LE((v.transpose() * v - Eigen::Matrix2d::Identity()).cwiseAbs().maxCoeff(), 1e-16);
    EXPECT_DOUBLE_EQ(v(0, 0), std::cos(r));
    EXPECT_DOUBLE_EQ(v(3, 0), std::sin(r));
    EXPECT_DOUBLE_EQ(v(2, 1), 1.0);
  }
}

TEST(Dilate, PreservesTraceAndRank) {
  oracle::Random rng(21);
  const Matrix4c rho = rng.pure();
  const Matrix16c d = dilate(rho, AccelerationPair(0.4, 0.7));
  EXPECT_NEAR(d.trace().real(), 1.0, 1e-14);
  EXPECT_NEAR((d * d).trace().real(), 1.0, 1e-14);
}

TEST(ProjectRegion, MatchesEnumerationOracle) {
  oracle::Random rng(22);
  for (int k = 0; k < 50; ++k) {
    const Matrix4c rho = rng.density();
    const double ra = rng.uniform(0, kQuarterPi), rb = rng.uniform(0, kQuarterPi);
    for (const RegionSelector& sel : all_regions())
      EXPECT_LE(max_abs(reduce(rho, ra, rb, sel) - oracle::region_by_enumeration(rho, ra, rb, sel)),
                1e-15)
          << to_string(sel);
  }
}

TEST(ProjectRegion, OutputsAreStates) {
  oracle::Random rng(23);
  for (int k = 0; k < 100; ++k) {
    const Matrix4c rho = k % 2 ? rng.density() : rng.pure();
    const double ra = rng.uniform(0, kQuarterPi), rb = rng.uniform(0, kQuarterPi);
    for (const RegionSelector& sel : all_regions())
      EXPECT_TRUE(validate_density(DensityMatrix(reduce(rho, ra, rb, sel))).passed());
  }
}

TEST(ProjectRegion, RejectsWrongDimension) {
  EXPECT_THROW(project_region(DensityMatrix(Eigen::MatrixXcd::Identity(4, 4) / 4.0), RegionSelector{}),
               std::invalid_argument);
}

TEST(ProjectRegion, RejectsNonHermitianInput) {
  Matrix16c d = Matrix16c::Identity() / 16.0;
  d(0, 10) = 1e-6;  // survives the trace over both II wedges
  EXPECT_THROW(project_region(d, RegionSelector{}), NumericError);
}

TEST(Channel, IdentityAtRest) {
  oracle::Random rng(24);
  for (int k = 0; k < 100; ++k) {
    const Matrix4c rho = rng.density();
    EXPECT_LE(max_abs(reduce(rho, 0, 0, RegionSelector{}) - rho), 1e-15);
  }
}

TEST(Channel, SecondWedgesAtRestAreVacuum) {
  const Matrix4c rho = make_state(Bell{}).as4();
  Matrix4c vacuum = Matrix4c::Zero();
  vacuum(0, 0) = 1.0;
  EXPECT_LE(max_abs(reduce(rho, 0, 0, {Wedge::II, Wedge::II}) - vacuum), 1e-16);
}

TEST(Channel, IsLinear) {
  oracle::Random rng(25);
  const Matrix4c a = rng.density(), b = rng.density();
  const double w = 0.3;
  for (const RegionSelector& sel : all_regions()) {
    const Matrix4c mix = reduce(w * a + (1 - w) * b, 0.2, 0.6, sel);
    EXPECT_LE(max_abs(mix - (w * reduce(a, 0.2, 0.6, sel) + (1 - w) * reduce(b, 0.2, 0.6, sel))),
              1e-15);
  }
}

TEST(Channel, SwapCovariance) {
  oracle::Random rng(26);
  for (int k = 0; k < 20; ++k) {
    const Matrix4c rho = rng.density();
    const double ra = rng.uniform(0, kQuarterPi), rb = rng.uniform(0, kQuarterPi);
    for (const RegionSelector& sel : all_regions()) {
      const RegionSelector swapped{sel.rob, sel.alice};
      EXPECT_LE(max_abs(swap_qubits(reduce(rho, ra, rb, sel)) -
                        reduce(swap_qubits(rho), rb, ra, swapped)),
                1e-15);
    }
  }
}

TEST(Channel, PreservesXForm) {
  const Matrix4c rho = make_state(GeneralizedWerner{0.7, 0.5, -0.3}).as4();
  for (const RegionSelector& sel : all_regions()) {
    const Matrix4c out = reduce(rho, 0.3, 0.7, sel);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        const bool x_entry = i == j || i + j == 3;
        if (!x_entry) EXPECT_EQ(std::abs(out(i, j)), 0.0) << i << j << ' ' << to_string(sel);
      }
  }
}

TEST(Channel, SingletRegionOneCorrelations) {
  const Matrix4c rho = make_state(Bell{}).as4();
  for (double ra : {0.0, 0.2, 0.5, kQuarterPi})
    for (double rb : {0.0, 0.3, kQuarterPi}) {
      const BlochForm b = density_to_bloch(reduce(rho, ra, rb, RegionSelector{}));
      EXPECT_NEAR(b.c(0, 0), -std::cos(ra) * std::cos(rb), 1e-15);
      EXPECT_NEAR(b.c(1, 1), -std::cos(ra) * std::cos(rb), 1e-15);
      EXPECT_NEAR(b.c(2, 2), -(std::cos(2 * ra) + std::cos(2 * rb)) / 2, 1e-15);
    }
}

TEST(Channel, DensityOverloadsAgree) {
  oracle::Random rng(27);
  const Matrix4c rho = rng.density();
  const AccelerationPair acc(0.1, 0.5);
  const RegionSelector sel{Wedge::I, Wedge::II};
  EXPECT_LE(max_abs(channel(DensityMatrix(rho), acc, sel).as4() - reduce(rho, 0.1, 0.5, sel)), 0.0);
}

}  // namespace
}  // namespace unruh
