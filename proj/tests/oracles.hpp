#pragma once

// Independent reference computations used by the tests.  None of these
// call into the library's channel or measure code.

#include "unruh/channel.hpp"
#include "unruh/states.hpp"

#include <random>

namespace oracle {

using unruh::cplx;
using unruh::Matrix4c;

Eigen::Matrix2cd pauli(int i);  // 0 = identity, 1..3 = x, y, z

Matrix4c kron(const Eigen::Matrix2cd& a, const Eigen::Matrix2cd& b);

/// (1/4) sum_ij r_ij sigma_i (x) sigma_j built term by term.
Matrix4c pauli_sum(const unruh::BlochForm& b);

/// Region reduction by explicit enumeration of the isometry amplitudes.
Matrix4c region_by_enumeration(const Matrix4c& rho, double r_a, double r_b,
                               const unruh::RegionSelector& sel);

/// Concurrence from sqrt(eig(rho rho~)) by a general complex eigen-solve.
double concurrence_naive(const Matrix4c& rho);

/// Smallest eigenvalue of the partial transpose on Rob's qubit.
double partial_transpose_min_eig(const Matrix4c& rho);

class Random {
 public:
  explicit Random(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi);
  Matrix4c density();                       // Ginibre, full rank
  Matrix4c pure();                          // random pure state
  Matrix4c product();                       // random mixed product state
  Eigen::Matrix2cd unitary();               // Haar-ish single-qubit unitary
  unruh::Vec3 self_transposed_diagonal();   // uniform in the valid tetrahedron

 private:
  std::mt19937_64 rng_;
};

}  // namespace oracle
