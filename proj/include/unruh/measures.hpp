#pragma once

#include "unruh/states.hpp"

#include <string>

namespace unruh {

enum class Separability { Separable, Entangled, Undetermined };

std::string to_string(Separability v);

struct MeasureReport {
  double concurrence = 0.0;
  double fidelity = 0.0;
  double telp = 0.0;
  double purity = 0.0;
  Separability separable_verdict = Separability::Undetermined;
};

/// Wootters concurrence max{0, l1 - l2 - l3 - l4}, l_i the decreasing square
/// roots of the eigenvalues of rho (sy x sy) rho* (sy x sy).  Throws
/// std::invalid_argument if rho fails validate_density.
double concurrence(const DensityMatrix& rho);

/// max{0, (sum_i |c_ii| - 1)/2} for zero Bloch vectors and diagonal dyadic.
double concurrence_self_transposed(const BlochForm& b);

/// tr(rho_final rho_initial); not the Uhlmann fidelity.
double overlap_fidelity(const DensityMatrix& rho_final, const DensityMatrix& rho_initial);

/// Sum of singular values of the correlation dyadic, tr sqrt(C^T C).
/// Values above 1 mark states useful for standard teleportation.
double teleportation_criterion(const DensityMatrix& rho);
double teleportation_criterion(const BlochForm& b);

/// Separable iff det C >= 0 or tr|C| <= 1 (self-transposed states only).
Separability separability_self_transposed(const BlochForm& b);

double purity(const DensityMatrix& rho);

/// All measures of `rho_final`, with fidelity taken against `rho_initial`.
/// The verdict uses the self-transposed dichotomy when it applies and the
/// sign of the concurrence otherwise.
MeasureReport measure(const DensityMatrix& rho_final, const DensityMatrix& rho_initial);

}  // namespace unruh
