#include "unruh/channel.hpp"

#include <cmath>
#include <sstream>

namespace unruh {

namespace {

constexpr double kMaxAsymmetry = 1e-9;

void check_r(double r, const char* name) {
  if (!std::isfinite(r) || r < 0.0 || r > kQuarterPi) {
    std::ostringstream os;
    os << name << " = " << r << " outside [0, pi/4]";
    throw std::invalid_argument(os.str());
  }
}

// Bit positions in the 16-dim index for each factor.
constexpr int kAliceI = 3;
constexpr int kAliceII = 2;
constexpr int kRobI = 1;
constexpr int kRobII = 0;

int bit(int index, int pos) { return (index >> pos) & 1; }

}  // namespace

AccelerationPair::AccelerationPair(double r_a, double r_b) : r_a_(r_a), r_b_(r_b) {
  check_r(r_a, "r_a");
  check_r(r_b, "r_b");
}

std::string to_string(const RegionSelector& sel) {
  auto w = [](Wedge x) { return x == Wedge::I ? "I" : "II"; };
  return std::string(w(sel.alice)) + "-" + w(sel.rob);
}

RegionSelector parse_region(std::string_view label) {
  for (const RegionSelector& sel : all_regions())
    if (to_string(sel) == label) return sel;
  throw std::invalid_argument("unknown region '" + std::string(label) +
                              "' (expected I-I, II-II, I-II or II-I)");
}

const std::vector<RegionSelector>& all_regions() {
  static const std::vector<RegionSelector> regions{
      {Wedge::I, Wedge::I}, {Wedge::II, Wedge::II}, {Wedge::I, Wedge::II}, {Wedge::II, Wedge::I}};
  return regions;
}

Isometry unruh_isometry(double r) {
  check_r(r, "r");
  // Rows: |0_I 0_II>, |0_I 1_II>, |1_I 0_II>, |1_I 1_II>.
  Isometry v = Isometry::Zero();
  v(0, 0) = std::cos(r);
  v(3, 0) = std::sin(r);
  v(2, 1) = 1.0;
  return v;
}

Matrix16c dilate(const Matrix4c& rho, const AccelerationPair& acc) {
  const Isometry va = unruh_isometry(acc.r_a());
  const Isometry vb = unruh_isometry(acc.r_b());
  // V_a (x) V_b maps |a b> to (A_I A_II)(R_I R_II), already the target order.
  Eigen::Matrix<double, 16, 4> k;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 2; ++j)
      k.block<4, 2>(4 * i, 2 * j) = va(i, j) * vb;
  return k * rho * k.transpose();
}

DensityMatrix dilate(const DensityMatrix& rho, const AccelerationPair& acc) {
  return DensityMatrix(dilate(rho.as4(), acc));
}

Matrix4c project_region(const Matrix16c& dilated, const RegionSelector& sel) {
  const int keep_a = sel.alice == Wedge::I ? kAliceI : kAliceII;
  const int drop_a = sel.alice == Wedge::I ? kAliceII : kAliceI;
  const int keep_r = sel.rob == Wedge::I ? kRobI : kRobII;
  const int drop_r = sel.rob == Wedge::I ? kRobII : kRobI;

  auto full_index = [&](int a, int r, int da, int dr) {
    return (a << keep_a) | (r << keep_r) | (da << drop_a) | (dr << drop_r);
  };

  Matrix4c out = Matrix4c::Zero();
  for (int row = 0; row < 4; ++row) {
    for (int col = 0; col < 4; ++col) {
      cplx sum = 0.0;
      for (int da = 0; da < 2; ++da)
        for (int dr = 0; dr < 2; ++dr)
          sum += dilated(full_index(bit(row, 1), bit(row, 0), da, dr),
                         full_index(bit(col, 1), bit(col, 0), da, dr));
      out(row, col) = sum;
    }
  }

  const double asym = (out - out.adjoint()).cwiseAbs().maxCoeff();
  if (asym > kMaxAsymmetry) {
    std::ostringstream os;
    os << "region " << to_string(sel) << " reduction is non-Hermitian by " << asym;
    throw NumericError(os.str());
  }
  return 0.5 * (out + out.adjoint());
}

DensityMatrix project_region(const DensityMatrix& dilated, const RegionSelector& sel) {
  if (dilated.dim() != 16)
    throw std::invalid_argument("project_region expects a 16x16 dilated state, got dimension " +
                                std::to_string(dilated.dim()));
  return DensityMatrix(project_region(Matrix16c(dilated.matrix()), sel));
}

DensityMatrix channel(const DensityMatrix& rho, const AccelerationPair& acc,
                      const RegionSelector& sel) {
  return DensityMatrix(project_region(dilate(rho.as4(), acc), sel));
}

}  // namespace unruh
