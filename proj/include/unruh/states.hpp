#pragma once

// Two-qubit states in Bloch form and as explicit density matrices.
//
// Basis ordering is |Alice Rob> = |00>, |01>, |10>, |11>, with |0> the
// +1 eigenvector of sigma_z.  Bloch form:
//
//   rho = 1/4 (1 + s.sigma + t.tau + sum_ij c_ij sigma_i tau_j)

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>
#include <string>
#include <variant>

namespace unruh {

using cplx = std::complex<double>;
using Matrix4c = Eigen::Matrix<cplx, 4, 4>;
using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;

inline constexpr double kQuarterPi = 0.78539816339744830962;

namespace tol {
inline constexpr double kHermitian = 1e-12;
inline constexpr double kTrace = 1e-12;
inline constexpr double kMinEigenvalue = -1e-10;
}  // namespace tol

/// Raised when a computed quantity breaks a numeric invariant (as opposed
/// to bad input, which raises std::invalid_argument).
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct BlochForm {
  Vec3 s = Vec3::Zero();  // Alice
  Vec3 t = Vec3::Zero();  // Rob
  Mat3 c = Mat3::Zero();  // correlation dyadic, c(i, j) = tr(rho sigma_i tau_j)
};

/// Square complex matrix of dimension 4 (two qubits) or 16 (dilated
/// state).  Physical validity is not enforced here; see validate_density.
class DensityMatrix {
 public:
  explicit DensityMatrix(Eigen::MatrixXcd m);

  Eigen::Index dim() const noexcept { return m_.rows(); }
  const Eigen::MatrixXcd& matrix() const noexcept { return m_; }
  cplx operator()(Eigen::Index i, Eigen::Index j) const { return m_(i, j); }

  /// Fixed-size view for two-qubit states; throws if dim() != 4.
  Matrix4c as4() const;

 private:
  Eigen::MatrixXcd m_;
};

struct ValidationReport {
  double hermitian_deviation = 0.0;  // max |rho - rho^dagger| elementwise
  double trace_deviation = 0.0;      // |tr rho - 1|
  double min_eigenvalue = 0.0;

  bool hermitian_ok() const { return hermitian_deviation <= tol::kHermitian; }
  bool trace_ok() const { return trace_deviation <= tol::kTrace; }
  bool positive_ok() const { return min_eigenvalue >= tol::kMinEigenvalue; }
  bool passed() const { return hermitian_ok() && trace_ok() && positive_ok(); }
  std::string describe() const;
};

// State families.

struct GeneralizedWerner {
  double cxx = 0.0, cyy = 0.0, czz = 0.0;
};

/// Bell states as diagonal dyadics c = diag(sx, sy, sz), each sign +-1.
/// Only the four triples with sx*sy*sz = -1 are states; the default is
/// the singlet.
struct Bell {
  int sx = -1, sy = -1, sz = -1;
};

/// Isotropic mixture, x in [-1/3, 1], realized as c = diag(x, x, -x).
struct Werner {
  double x = 0.0;
};

/// s = (p,0,0), t = (-p,0,0), c = diag(-1, -q, -q), q = sqrt(1 - p^2).
struct GenericPure {
  double p = 0.0;
};

struct Explicit {
  BlochForm bloch;
};

using StateFamily =
    std::variant<GeneralizedWerner, Bell, Werner, GenericPure, Explicit>;

DensityMatrix bloch_to_density(const BlochForm& b);
BlochForm density_to_bloch(const DensityMatrix& rho);
BlochForm density_to_bloch(const Matrix4c& rho);

/// Bloch form of a family member after range checks.
BlochForm family_bloch(const StateFamily& f);
DensityMatrix make_state(const StateFamily& f);
std::string family_name(const StateFamily& f);

ValidationReport validate_density(const DensityMatrix& rho);

bool is_self_transposed(const BlochForm& b, double tol = 1e-12);
bool is_self_transposed(const DensityMatrix& rho, double tol = 1e-12);

/// Index of a valid Bell sign triple in {singlet, psi+, phi+, phi-}.
int bell_index(const Bell& b);

}  // namespace unruh
