#include "unruh/channel.hpp"

#include <cmath>

namespace unruh {

namespace {

struct Trig {
  double c1, s1, c2, s2;
  explicit Trig(const AccelerationPair& acc)
      : c1(std::cos(acc.r_a())), s1(std::sin(acc.r_a())),
        c2(std::cos(acc.r_b())), s2(std::sin(acc.r_b())) {}
};

// One-based accessor so the tables below read like the printed matrices.
struct Rho {
  const Matrix4c& m;
  cplx operator()(int i, int j) const { return m(i - 1, j - 1); }
};

struct Entry {
  EntryIndex index;  // zero-based, in the printed matrix's own ordering
  cplx correct;
};

struct Printed {
  Matrix4c matrix;
  std::vector<Entry> wrong;
};

Printed region_I_I(const Rho& p, const Trig& t) {
  const double C1 = t.c1, S1 = t.s1, C2 = t.c2, S2 = t.s2;
  Printed out;
  Matrix4c& m = out.matrix;
  m << p(1, 1) * C1 * C1 * C2 * C2, p(1, 2) * C1 * C1 * C2, p(1, 3) * C1 * C2 * C2,
      p(1, 4) * C1 * C2,
      //
      p(2, 1) * C1 * C1 * C2, C1 * C1 * (p(2, 2) + p(1, 1) * S2 * S2), p(2, 3) * C1 * C2,
      p(2, 4) * C1,
      //
      p(3, 1) * C1 * C2, p(3, 2) * C1 * C2, (p(3, 3) + p(1, 1) * S1 * S1) * C2 * C2,
      (p(3, 4) + p(1, 2) * S1 * S1) * C2,
      //
      p(4, 1) * C1 * C2, (p(4, 2) + p(3, 1) * S2 * S2) * C1, (p(4, 3) + p(2, 1) * S1 * S1) * C2,
      p(4, 4) + p(3, 3) * S2 * S2 + (p(2, 2) + p(1, 1) * S2 * S2);
  out.wrong = {
      {{1, 3}, C1 * (p(2, 4) + p(1, 3) * S2 * S2)},
      {{2, 0}, p(3, 1) * C1 * C2 * C2},
      {{3, 3}, p(4, 4) + p(3, 3) * S2 * S2 + S1 * S1 * (p(2, 2) + p(1, 1) * S2 * S2)},
  };
  return out;
}

Printed region_II_II(const Rho& p, const Trig& t) {
  const double C1 = t.c1, S1 = t.s1, C2 = t.c2, S2 = t.s2;
  Printed out;
  Matrix4c& m = out.matrix;
  const cplx rho11_II = (p(2, 2) + p(1, 1) * C2 * C2) * C1 * C1 + p(4, 4) + p(3, 3) * C2 * C2;
  m << rho11_II, (p(4, 3) + p(2, 1) * C1 * C1) * S2, (p(4, 2) + p(3, 1) * C2 * C2) * S1,
      p(4, 1) * S1 * S2,
      //
      (p(3, 4) + C1 * C1 * p(1, 2)) * S2 * S2, (p(3, 3) + p(1, 1) * C1 * C1) * S2 * S2,
      p(3, 2) * S1 * S2, p(3, 1) * S1 * S2 * S2,
      //
      (p(2, 4) + p(1, 3) * C2 * C2) * S2 * S2, p(2, 3) * S1 * S2,
      (p(2, 2) + p(1, 1) * C2 * C2) * S1 * S1, p(2, 1) * S1 * S1 * S2,
      //
      p(1, 4) * S1 * S2, p(1, 3) * S1 * S2 * S2, p(4, 3) * S1 * S1 * S2,
      p(1, 1) * S1 * S1 * S2 * S2;
  out.wrong = {
      {{1, 0}, S2 * (p(3, 4) + p(1, 2) * C1 * C1)},
      {{2, 0}, S1 * (p(2, 4) + p(1, 3) * C2 * C2)},
      {{3, 2}, p(1, 2) * S1 * S1 * S2},
  };
  return out;
}

Printed region_I_II(const Rho& p, const Trig& t) {
  const double C1 = t.c1, S1 = t.s1, C2 = t.c2, S2 = t.s2;
  Printed out;
  Matrix4c& m = out.matrix;
  m << (p(2, 2) + p(1, 1) * C2 * C2) * C1 * C1, p(2, 1) * C1 * C1 * S2 * S2,
      (p(2, 4) + p(1, 3) * C2 * C2) * C1, p(2, 3) * C1 * S2,
      //
      p(1, 2) * C1 * C1 * S2, p(1, 1) * C1 * C1 * S2 * S2, p(1, 4) * C1 * S2,
      p(3, 2) * C1 * S2 * S2,
      //
      (p(4, 2) + p(3, 1) * C2 * C2) * C1, p(4, 1) * C1 * S2,
      (p(2, 2) + p(1, 1) * C2 * C2) * S1 * S1 + (p(4, 4) + p(3, 3) * C2 * C2),
      (p(4, 3) + p(2, 1) * S1 * S1 * S2),
      //
      p(3, 2) * C1 * S2, p(3, 1) * C1 * S2 * S2, (p(3, 4) + p(4, 3) * S1 * S1) * S2,
      (p(3, 3) + p(1, 1) * S1 * S1) * S2 * S2;
  out.wrong = {
      {{0, 1}, p(2, 1) * C1 * C1 * S2},
      {{1, 3}, p(1, 3) * C1 * S2 * S2},
      {{2, 3}, S2 * (p(4, 3) + p(2, 1) * S1 * S1)},
      {{3, 2}, S2 * (p(3, 4) + p(1, 2) * S1 * S1)},
  };
  return out;
}

// Printed with Rob's wedge-I qubit as the first factor.
Printed region_II_I_rob_first(const Rho& p, const Trig& t) {
  const double C1 = t.c1, S1 = t.s1, C2 = t.c2, S2 = t.s2;
  Printed out;
  Matrix4c& m = out.matrix;
  m << (p(3, 3) + p(1, 1) * C1 * C1) * C2 * C2, p(3, 1) * S1 * S1 * C2 * C2, p(3, 4) * C2 * S1,
      p(3, 2) * C2 * S1,
      //
      p(1, 3) * S1 * S1 * C2 * C2, p(1, 1) * S1 * S1 * C2 * C2, p(1, 4) * S1 * C2,
      p(4, 3) * C2 * S1 * S1,
      //
      (p(4, 3) + p(2, 1) * C1 * C1) * C2, p(4, 1) * S1 * C2,
      (p(2, 2) + p(1, 1) * S2 * S2) * C1 * C1 + (p(4, 4) + p(3, 3) * S2 * S2),
      (p(4, 2) + p(3, 1) * S2 * S2) * S1,
      //
      p(2, 3) * S1 * C2, p(2, 1) * S1 * S1 * C2, (p(2, 4) + p(1, 3) * S2 * S2) * S1,
      (p(2, 2) + p(1, 1) * S2 * S2) * S1 * S1;
  out.wrong = {
      {{0, 1}, p(3, 1) * S1 * C2 * C2},
      {{0, 2}, C2 * (p(3, 4) + p(1, 2) * C1 * C1)},
      {{1, 0}, p(1, 3) * S1 * C2 * C2},
      {{1, 3}, p(1, 2) * S1 * S1 * C2},
  };
  return out;
}

// Basis permutation |a b> <-> |b a> on two qubits.
constexpr int swap_index(int i) { return i == 1 ? 2 : (i == 2 ? 1 : i); }

Printed printed_alice_first(const Matrix4c& rho, const AccelerationPair& acc,
                            const RegionSelector& sel) {
  const Rho p{rho};
  const Trig t(acc);
  if (sel.alice == Wedge::I && sel.rob == Wedge::I) return region_I_I(p, t);
  if (sel.alice == Wedge::II && sel.rob == Wedge::II) return region_II_II(p, t);
  if (sel.alice == Wedge::I && sel.rob == Wedge::II) return region_I_II(p, t);

  Printed rob_first = region_II_I_rob_first(p, t);
  Printed out;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      out.matrix(swap_index(i), swap_index(j)) = rob_first.matrix(i, j);
  for (const Entry& e : rob_first.wrong)
    out.wrong.push_back({{swap_index(e.index.row), swap_index(e.index.col)}, e.correct});
  return out;
}

}  // namespace

Matrix4c printed_region_matrix(const Matrix4c& rho, const AccelerationPair& acc,
                               const RegionSelector& sel) {
  return printed_alice_first(rho, acc, sel).matrix;
}

ClosedFormRegion closed_form_region(const Matrix4c& rho, const AccelerationPair& acc,
                                    const RegionSelector& sel) {
  Printed printed = printed_alice_first(rho, acc, sel);
  ClosedFormRegion out{printed.matrix, {}};
  for (const Entry& e : printed.wrong) {
    out.corrections.push_back({e.index, printed.matrix(e.index.row, e.index.col), e.correct});
    out.matrix(e.index.row, e.index.col) = e.correct;
  }
  return out;
}

std::vector<EntryIndex> flagged_entries(const RegionSelector& sel) {
  const Matrix4c probe = Matrix4c::Identity() * 0.25;
  std::vector<EntryIndex> out;
  for (const Entry& e : printed_alice_first(probe, AccelerationPair(0.0, 0.0), sel).wrong)
    out.push_back(e.index);
  return out;
}

}  // namespace unruh
