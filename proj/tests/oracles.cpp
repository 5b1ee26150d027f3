#include "oracles.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

namespace oracle {

Eigen::Matrix2cd pauli(int i) {
  Eigen::Matrix2cd m;
  const cplx I(0.0, 1.0);
  switch (i) {
    case 0: m << 1, 0, 0, 1; break;
    case 1: m << 0, 1, 1, 0; break;
    case 2: m << 0, -I, I, 0; break;
    default: m << 1, 0, 0, -1; break;
  }
  return m;
}

Matrix4c kron(const Eigen::Matrix2cd& a, const Eigen::Matrix2cd& b) {
  Matrix4c out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) out(2 * i + k, 2 * j + l) = a(i, j) * b(k, l);
  return out;
}

Matrix4c pauli_sum(const unruh::BlochForm& b) {
  Matrix4c out = kron(pauli(0), pauli(0));
  for (int i = 0; i < 3; ++i) {
    out += b.s[i] * kron(pauli(i + 1), pauli(0));
    out += b.t[i] * kron(pauli(0), pauli(i + 1));
    for (int j = 0; j < 3; ++j) out += b.c(i, j) * kron(pauli(i + 1), pauli(j + 1));
  }
  return 0.25 * out;
}

namespace {

// <m_I m_II | V(r) | in>
double amplitude(double r, int in, int m_I, int m_II) {
  if (in == 0) {
    if (m_I == 0 && m_II == 0) return std::cos(r);
    if (m_I == 1 && m_II == 1) return std::sin(r);
    return 0.0;
  }
  return (m_I == 1 && m_II == 0) ? 1.0 : 0.0;
}

// Amplitude with the kept and dropped wedge occupations assigned by `w`.
double kept_amplitude(double r, int in, unruh::Wedge w, int keep, int drop) {
  return w == unruh::Wedge::I ? amplitude(r, in, keep, drop) : amplitude(r, in, drop, keep);
}

}  // namespace

Matrix4c region_by_enumeration(const Matrix4c& rho, double r_a, double r_b,
                               const unruh::RegionSelector& sel) {
  Matrix4c out = Matrix4c::Zero();
  for (int ka = 0; ka < 2; ++ka)
    for (int kr = 0; kr < 2; ++kr)
      for (int ka2 = 0; ka2 < 2; ++ka2)
        for (int kr2 = 0; kr2 < 2; ++kr2) {
          cplx sum = 0.0;
          for (int da = 0; da < 2; ++da)
            for (int dr = 0; dr < 2; ++dr)
              for (int a = 0; a < 2; ++a)
                for (int b = 0; b < 2; ++b)
                  for (int a2 = 0; a2 < 2; ++a2)
                    for (int b2 = 0; b2 < 2; ++b2) {
                      const double amp = kept_amplitude(r_a, a, sel.alice, ka, da) *
                                         kept_amplitude(r_b, b, sel.rob, kr, dr) *
                                         kept_amplitude(r_a, a2, sel.alice, ka2, da) *
                                         kept_amplitude(r_b, b2, sel.rob, kr2, dr);
                      if (amp != 0.0) sum += amp * rho(2 * a + b, 2 * a2 + b2);
                    }
          out(2 * ka + kr, 2 * ka2 + kr2) = sum;
        }
  return out;
}

double concurrence_naive(const Matrix4c& rho) {
  const Matrix4c yy = kron(pauli(2), pauli(2));
  const Matrix4c r = rho * yy * rho.conjugate() * yy;
  Eigen::ComplexEigenSolver<Matrix4c> es(r, false);
  std::vector<double> l;
  for (int i = 0; i < 4; ++i) l.push_back(std::sqrt(std::max(0.0, es.eigenvalues()[i].real())));
  std::sort(l.begin(), l.end(), std::greater<>());
  return std::max(0.0, l[0] - l[1] - l[2] - l[3]);
}

double partial_transpose_min_eig(const Matrix4c& rho) {
  Matrix4c pt;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int a2 = 0; a2 < 2; ++a2)
        for (int b2 = 0; b2 < 2; ++b2) pt(2 * a + b, 2 * a2 + b2) = rho(2 * a + b2, 2 * a2 + b);
  Eigen::SelfAdjointEigenSolver<Matrix4c> es(pt, Eigen::EigenvaluesOnly);
  return es.eigenvalues()[0];
}

double Random::uniform(double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng_);
}

Matrix4c Random::density() {
  std::normal_distribution<double> n(0.0, 1.0);
  Matrix4c g;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) g(i, j) = cplx(n(rng_), n(rng_));
  Matrix4c r = g * g.adjoint();
  r /= r.trace().real();
  return 0.5 * (r + r.adjoint());
}

Matrix4c Random::pure() {
  std::normal_distribution<double> n(0.0, 1.0);
  Eigen::Vector4cd v;
  for (int i = 0; i < 4; ++i) v[i] = cplx(n(rng_), n(rng_));
  v.normalize();
  return v * v.adjoint();
}

Matrix4c Random::product() {
  const auto qubit = [&] {
    std::normal_distribution<double> n(0.0, 1.0);
    Eigen::Matrix2cd g;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) g(i, j) = cplx(n(rng_), n(rng_));
    Eigen::Matrix2cd r = g * g.adjoint();
    return Eigen::Matrix2cd(r / r.trace().real());
  };
  return kron(qubit(), qubit());
}

Eigen::Matrix2cd Random::unitary() {
  std::normal_distribution<double> n(0.0, 1.0);
  Eigen::Matrix2cd g;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) g(i, j) = cplx(n(rng_), n(rng_));
  Eigen::HouseholderQR<Eigen::Matrix2cd> qr(g);
  return qr.householderQ();
}

unruh::Vec3 Random::self_transposed_diagonal() {
  for (;;) {
    const unruh::Vec3 d(uniform(-1, 1), uniform(-1, 1), uniform(-1, 1));
    // Eigenvalues of the state are (1 - d1 - d2 - d3)/4 etc.
    if (1 - d[0] - d[1] - d[2] >= 0 && 1 - d[0] + d[1] + d[2] >= 0 &&
        1 + d[0] - d[1] + d[2] >= 0 && 1 + d[0] + d[1] - d[2] >= 0)
      return d;
  }
}

}  // namespace oracle
