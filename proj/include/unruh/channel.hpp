#pragma once

// Unruh-mode channel for two uniformly accelerated observers.
//
// Each qubit is mapped into a (wedge I) x (wedge II) pair by the isometry
//
//   |0> -> cos r |0_I 0_II> + sin r |1_I 1_II>
//   |1> -> |1_I 0_II>
//
// The joint dilated state lives on A_I x A_II x R_I x R_II (A_I is the most
// significant bit of the 16-dim index).  Region channels keep one wedge per
// observer and trace out the other two factors.  Outputs are always ordered
// Alice first, Rob second.

#include "unruh/states.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace unruh {

using Matrix16c = Eigen::Matrix<cplx, 16, 16>;
using Isometry = Eigen::Matrix<double, 4, 2>;

/// Accelerations r_a, r_b in [0, pi/4]; pi/4 is the infinite-acceleration
/// limit.
class AccelerationPair {
 public:
  AccelerationPair(double r_a, double r_b);

  double r_a() const noexcept { return r_a_; }
  double r_b() const noexcept { return r_b_; }

 private:
  double r_a_;
  double r_b_;
};

enum class Wedge { I, II };

struct RegionSelector {
  Wedge alice = Wedge::I;
  Wedge rob = Wedge::I;

  friend bool operator==(const RegionSelector&, const RegionSelector&) = default;
};

/// "I-I", "II-II", "I-II", "II-I" (Alice's wedge first).
std::string to_string(const RegionSelector& sel);
RegionSelector parse_region(std::string_view label);
const std::vector<RegionSelector>& all_regions();

Isometry unruh_isometry(double r);

DensityMatrix dilate(const DensityMatrix& rho, const AccelerationPair& acc);
Matrix16c dilate(const Matrix4c& rho, const AccelerationPair& acc);

/// Partial trace of a dilated state down to the selected pair of wedges.
/// Throws NumericError if the reduction is non-Hermitian beyond roundoff
/// (1e-9) before symmetrization.
DensityMatrix project_region(const DensityMatrix& dilated, const RegionSelector& sel);
Matrix4c project_region(const Matrix16c& dilated, const RegionSelector& sel);

DensityMatrix channel(const DensityMatrix& rho, const AccelerationPair& acc,
                      const RegionSelector& sel);

// Closed-form region matrices as printed in the source derivation, for
// regression only.  A handful of printed entries are wrong (one breaks
// trace preservation); those are listed by flagged_entries() and replaced
// in closed_form_region() by the value the dilation gives.

struct EntryIndex {
  int row;
  int col;
  friend bool operator==(const EntryIndex&, const EntryIndex&) = default;
};

struct EntryCorrection {
  EntryIndex index;  // zero-based, Alice-first ordering
  cplx printed;
  cplx substituted;
};

struct ClosedFormRegion {
  Matrix4c matrix;
  std::vector<EntryCorrection> corrections;
};

/// The printed matrix, entry for entry, including the wrong entries.
Matrix4c printed_region_matrix(const Matrix4c& rho, const AccelerationPair& acc,
                               const RegionSelector& sel);

ClosedFormRegion closed_form_region(const Matrix4c& rho, const AccelerationPair& acc,
                                    const RegionSelector& sel);

/// Zero-based, Alice-first indices of the printed entries known to be wrong.
std::vector<EntryIndex> flagged_entries(const RegionSelector& sel);

}  // namespace unruh
