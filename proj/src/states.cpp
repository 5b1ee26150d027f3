#include "unruh/states.hpp"

#include <Eigen/Eigenvalues>

#include <array>
#include <cmath>
#include <sstream>

namespace unruh {

namespace {

constexpr cplx kI{0.0, 1.0};

bool all_finite(const BlochForm& b) {
  return b.s.allFinite() && b.t.allFinite() && b.c.allFinite();
}

void require_range(double v, double lo, double hi, const char* name) {
  if (!std::isfinite(v) || v < lo || v > hi) {
    std::ostringstream os;
    os << name << " = " << v << " outside [" << lo << ", " << hi << "]";
    throw std::invalid_argument(os.str());
  }
}

using Pauli = Eigen::Matrix2cd;

const std::array<Pauli, 3>& paulis() {
  static const std::array<Pauli, 3> p = [] {
    std::array<Pauli, 3> m;
    m[0] << 0, 1, 1, 0;
    m[1] << 0, -kI, kI, 0;
    m[2] << 1, 0, 0, -1;
    return m;
  }();
  return p;
}

Matrix4c kron(const Pauli& a, const Pauli& b) {
  Matrix4c out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
  return out;
}

}  // namespace

DensityMatrix::DensityMatrix(Eigen::MatrixXcd m) : m_(std::move(m)) {
  if (m_.rows() != m_.cols())
    throw std::invalid_argument("density matrix must be square");
  if (m_.rows() != 4 && m_.rows() != 16)
    throw std::invalid_argument("density matrix dimension must be 4 or 16, got " +
                                std::to_string(m_.rows()));
  if (!m_.allFinite())
    throw std::invalid_argument("density matrix has non-finite entries");
}

Matrix4c DensityMatrix::as4() const {
  if (dim() != 4)
    throw std::invalid_argument("expected a 4x4 two-qubit state, got dimension " +
                                std::to_string(dim()));
  return Matrix4c(m_);
}

std::string ValidationReport::describe() const {
  std::ostringstream os;
  os.precision(3);
  os << "hermitian_dev=" << hermitian_deviation << (hermitian_ok() ? "" : " (FAIL)")
     << " trace_dev=" << trace_deviation << (trace_ok() ? "" : " (FAIL)")
     << " min_eig=" << min_eigenvalue << (positive_ok() ? "" : " (FAIL)");
  return os.str();
}

DensityMatrix bloch_to_density(const BlochForm& b) {
  if (!all_finite(b)) throw std::invalid_argument("Bloch form has non-finite entries");

  const Vec3& s = b.s;
  const Vec3& t = b.t;
  auto c = [&](int i, int j) { return b.c(i, j); };
  enum { X = 0, Y = 1, Z = 2 };

  Matrix4c r;
  r(0, 0) = 1.0 + s[Z] + t[Z] + c(Z, Z);
  r(1, 1) = 1.0 + s[Z] - t[Z] - c(Z, Z);
  r(2, 2) = 1.0 - s[Z] + t[Z] - c(Z, Z);
  r(3, 3) = 1.0 - s[Z] - t[Z] + c(Z, Z);

  r(0, 1) = t[X] - kI * t[Y] + c(Z, X) - kI * c(Z, Y);
  r(0, 2) = s[X] - kI * s[Y] + c(X, Z) - kI * c(Y, Z);
  r(0, 3) = c(X, X) - kI * c(X, Y) - kI * c(Y, X) - c(Y, Y);
  r(1, 2) = c(X, X) + kI * c(X, Y) - kI * c(Y, X) + c(Y, Y);
  r(1, 3) = s[X] - kI * s[Y] - c(X, Z) + kI * c(Y, Z);
  r(2, 3) = t[X] - kI * t[Y] - c(Z, X) + kI * c(Z, Y);

  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < i; ++j) r(i, j) = std::conj(r(j, i));

  r *= 0.25;
  return DensityMatrix(r);
}

namespace {

// products[4*i + j] = P_i (x) P_j with P_0 = identity, P_1..3 = sigma_x,y,z.
const std::array<Matrix4c, 16>& pauli_products() {
  static const std::array<Matrix4c, 16> table = [] {
    std::array<Pauli, 4> p{Pauli::Identity(), paulis()[0], paulis()[1], paulis()[2]};
    std::array<Matrix4c, 16> t;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) t[4 * i + j] = kron(p[i], p[j]);
    return t;
  }();
  return table;
}

// tr(rho P) without forming the product.
double trace_with(const Matrix4c& rho, const Matrix4c& op) {
  return (rho.transpose().cwiseProduct(op)).sum().real();
}

}  // namespace

BlochForm density_to_bloch(const Matrix4c& rho) {
  const auto& pp = pauli_products();
  BlochForm b;
  for (int i = 0; i < 3; ++i) {
    b.s[i] = trace_with(rho, pp[4 * (i + 1)]);
    b.t[i] = trace_with(rho, pp[i + 1]);
    for (int j = 0; j < 3; ++j) b.c(i, j) = trace_with(rho, pp[4 * (i + 1) + (j + 1)]);
  }
  return b;
}

BlochForm density_to_bloch(const DensityMatrix& rho) { return density_to_bloch(rho.as4()); }

int bell_index(const Bell& b) {
  static constexpr std::array<std::array<int, 3>, 4> kValid{{
      {-1, -1, -1},  // singlet
      {1, 1, -1},    // psi+
      {1, -1, 1},    // phi+
      {-1, 1, 1},    // phi-
  }};
  for (int k = 0; k < 4; ++k)
    if (kValid[k][0] == b.sx && kValid[k][1] == b.sy && kValid[k][2] == b.sz) return k;
  std::ostringstream os;
  os << "Bell sign triple (" << b.sx << ", " << b.sy << ", " << b.sz
     << ") is not a state; signs must be +-1 with product -1";
  throw std::invalid_argument(os.str());
}

BlochForm family_bloch(const StateFamily& f) {
  struct Visitor {
    BlochForm operator()(const GeneralizedWerner& g) const {
      require_range(g.cxx, -1.0, 1.0, "cxx");
      require_range(g.cyy, -1.0, 1.0, "cyy");
      require_range(g.czz, -1.0, 1.0, "czz");
      // Eigenvalues are (1 + czz +- (cxx - cyy))/4 and (1 - czz +- (cxx + cyy))/4.
      if (std::abs(g.cxx - g.cyy) > 1.0 + g.czz + 1e-14 ||
          std::abs(g.cxx + g.cyy) > 1.0 - g.czz + 1e-14) {
        std::ostringstream os;
        os << "generalized Werner (" << g.cxx << ", " << g.cyy << ", " << g.czz
           << ") is not positive: need |cxx-cyy| <= 1+czz and |cxx+cyy| <= 1-czz";
        throw std::invalid_argument(os.str());
      }
      BlochForm b;
      b.c.diagonal() << g.cxx, g.cyy, g.czz;
      return b;
    }
    BlochForm operator()(const Bell& bell) const {
      bell_index(bell);
      BlochForm b;
      b.c.diagonal() << bell.sx, bell.sy, bell.sz;
      return b;
    }
    BlochForm operator()(const Werner& w) const {
      require_range(w.x, -1.0 / 3.0, 1.0, "x");
      BlochForm b;
      b.c.diagonal() << w.x, w.x, -w.x;
      return b;
    }
    BlochForm operator()(const GenericPure& g) const {
      require_range(g.p, 0.0, 1.0, "p");
      const double q = std::sqrt(1.0 - g.p * g.p);
      BlochForm b;
      b.s << g.p, 0.0, 0.0;
      b.t << -g.p, 0.0, 0.0;
      b.c.diagonal() << -1.0, -q, -q;
      return b;
    }
    BlochForm operator()(const Explicit& e) const {
      if (!all_finite(e.bloch)) throw std::invalid_argument("Bloch form has non-finite entries");
      const bool in_range = (e.bloch.s.cwiseAbs().maxCoeff() <= 1.0) &&
                            (e.bloch.t.cwiseAbs().maxCoeff() <= 1.0) &&
                            (e.bloch.c.cwiseAbs().maxCoeff() <= 1.0);
      if (!in_range) throw std::invalid_argument("Bloch entries must lie in [-1, 1]");
      return e.bloch;
    }
  };
  return std::visit(Visitor{}, f);
}

DensityMatrix make_state(const StateFamily& f) {
  DensityMatrix rho = bloch_to_density(family_bloch(f));
  if (std::holds_alternative<Explicit>(f)) {
    const ValidationReport rep = validate_density(rho);
    if (!rep.passed())
      throw std::invalid_argument("explicit Bloch form is not a state: " + rep.describe());
  }
  return rho;
}

std::string family_name(const StateFamily& f) {
  struct Visitor {
    std::string operator()(const GeneralizedWerner&) const { return "gwerner"; }
    std::string operator()(const Bell&) const { return "bell"; }
    std::string operator()(const Werner&) const { return "werner"; }
    std::string operator()(const GenericPure&) const { return "pure"; }
    std::string operator()(const Explicit&) const { return "explicit"; }
  };
  return std::visit(Visitor{}, f);
}

ValidationReport validate_density(const DensityMatrix& rho) {
  const Eigen::MatrixXcd& m = rho.matrix();
  ValidationReport rep;
  rep.hermitian_deviation = (m - m.adjoint()).cwiseAbs().maxCoeff();
  rep.trace_deviation = std::abs(m.trace() - 1.0);
  // Eigenvalues of the Hermitian part; the anti-Hermitian part is already
  // reported above.
  const Eigen::MatrixXcd h = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h, Eigen::EigenvaluesOnly);
  rep.min_eigenvalue = es.eigenvalues().minCoeff();
  return rep;
}

bool is_self_transposed(const BlochForm& b, double tol) {
  Mat3 off = b.c;
  off.diagonal().setZero();
  return b.s.cwiseAbs().maxCoeff() <= tol && b.t.cwiseAbs().maxCoeff() <= tol &&
         off.cwiseAbs().maxCoeff() <= tol;
}

bool is_self_transposed(const DensityMatrix& rho, double tol) {
  return is_self_transposed(density_to_bloch(rho), tol);
}

}  // namespace unruh
