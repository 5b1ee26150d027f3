#include "unruh/measures.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <sstream>

namespace unruh {

namespace {

constexpr double kFidelityImagTol = 1e-12;
constexpr double kSelfTransposedTol = 1e-12;
constexpr double kEntangledThreshold = 1e-9;

void require_valid(const DensityMatrix& rho, const char* what) {
  if (rho.dim() != 4)
    throw std::invalid_argument(std::string(what) + ": expected a two-qubit state");
  const ValidationReport rep = validate_density(rho);
  if (!rep.passed())
    throw std::invalid_argument(std::string(what) + ": invalid state (" + rep.describe() + ")");
}

void require_self_transposed(const BlochForm& b, const char* what) {
  if (!is_self_transposed(b, kSelfTransposedTol))
    throw std::invalid_argument(std::string(what) +
                                ": needs zero Bloch vectors and a diagonal dyadic");
}

// sigma_y (x) sigma_y in the computational basis.
Matrix4c spin_flip() {
  Matrix4c y = Matrix4c::Zero();
  y(0, 3) = -1.0;
  y(1, 2) = 1.0;
  y(2, 1) = 1.0;
  y(3, 0) = -1.0;
  return y;
}

}  // namespace

std::string to_string(Separability v) {
  switch (v) {
    case Separability::Separable: return "separable";
    case Separability::Entangled: return "entangled";
    case Separability::Undetermined: return "undetermined";
  }
  return "undetermined";
}

double concurrence(const DensityMatrix& rho) {
  require_valid(rho, "concurrence");
  const Matrix4c m = rho.as4();

  // rho = W W^dagger with W = U sqrt(D).  The l_i are the singular values
  // of W^T Y W, which avoids taking square roots of tiny eigenvalues of
  // rho rho~.
  Eigen::SelfAdjointEigenSolver<Matrix4c> es(0.5 * (m + m.adjoint()));
  Eigen::Vector4d w = es.eigenvalues();
  for (int i = 0; i < 4; ++i) {
    if (w[i] < tol::kMinEigenvalue) {
      std::ostringstream os;
      os << "concurrence: eigenvalue " << w[i] << " below " << tol::kMinEigenvalue;
      throw std::invalid_argument(os.str());
    }
    w[i] = std::sqrt(std::max(w[i], 0.0));
  }
  const Matrix4c wmat = es.eigenvectors() * w.asDiagonal();
  const Matrix4c tau = wmat.transpose() * spin_flip() * wmat;
  Eigen::JacobiSVD<Matrix4c> svd(tau);
  const Eigen::Vector4d l = svd.singularValues();  // decreasing
  return std::max(0.0, l[0] - l[1] - l[2] - l[3]);
}

double concurrence_self_transposed(const BlochForm& b) {
  require_self_transposed(b, "concurrence_self_transposed");
  const double trace_abs = b.c.diagonal().cwiseAbs().sum();
  return std::max(0.0, 0.5 * (trace_abs - 1.0));
}

double overlap_fidelity(const DensityMatrix& rho_final, const DensityMatrix& rho_initial) {
  if (rho_final.dim() != rho_initial.dim())
    throw std::invalid_argument("overlap_fidelity: dimension mismatch");
  const cplx f = (rho_final.matrix().transpose().cwiseProduct(rho_initial.matrix())).sum();
  if (std::abs(f.imag()) > kFidelityImagTol) {
    std::ostringstream os;
    os << "overlap_fidelity: imaginary residue " << f.imag();
    throw NumericError(os.str());
  }
  return f.real();
}

double teleportation_criterion(const BlochForm& b) {
  Eigen::JacobiSVD<Mat3> svd(b.c);
  return svd.singularValues().sum();
}

double teleportation_criterion(const DensityMatrix& rho) {
  require_valid(rho, "teleportation_criterion");
  return teleportation_criterion(density_to_bloch(rho));
}

Separability separability_self_transposed(const BlochForm& b) {
  require_self_transposed(b, "separability_self_transposed");
  const Vec3 d = b.c.diagonal();
  const double det = d[0] * d[1] * d[2];
  const double trace_abs = d.cwiseAbs().sum();
  return (det >= 0.0 || trace_abs <= 1.0) ? Separability::Separable : Separability::Entangled;
}

double purity(const DensityMatrix& rho) {
  const Eigen::MatrixXcd& m = rho.matrix();
  return (m.transpose().cwiseProduct(m)).sum().real();
}

MeasureReport measure(const DensityMatrix& rho_final, const DensityMatrix& rho_initial) {
  MeasureReport r;
  r.concurrence = concurrence(rho_final);
  r.fidelity = overlap_fidelity(rho_final, rho_initial);
  const BlochForm b = density_to_bloch(rho_final);
  r.telp = teleportation_criterion(b);
  r.purity = purity(rho_final);
  if (is_self_transposed(b, kSelfTransposedTol)) {
    r.separable_verdict = separability_self_transposed(b);
  } else if (r.concurrence > kEntangledThreshold) {
    r.separable_verdict = Separability::Entangled;
  } else if (r.concurrence == 0.0) {
    r.separable_verdict = Separability::Separable;
  } else {
    r.separable_verdict = Separability::Undetermined;
  }
  return r;
}

}  // namespace unruh
