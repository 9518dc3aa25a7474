#pragma once

#include <vector>

#include "amkit/linalg.hpp"

namespace amkit {

/// Total angular momentum j = two_j / 2 acting on a d = two_j + 1 space.
struct SpinSystem {
  int two_j = 0;

  static SpinSystem from_dim(int d);

  int dim() const { return two_j + 1; }
  double j() const { return 0.5 * two_j; }
  /// Integer j, i.e. odd dimension.
  bool integer() const { return two_j % 2 == 0; }
  /// J_z eigenvalue of the i-th m-ordered basis vector (m = j - i).
  double m_at(int i) const { return j() - i; }

  bool operator==(const SpinSystem&) const = default;
};

/// MOrdered lists |m=j>, ..., |m=-j>; Logical lists residue classes q.
enum class BasisOrder { m_ordered, logical };
enum class Axis { x, y, z };

struct SpinOperators {
  ComplexMatrix jx, jy, jz, casimir;
};

/// Spin-j operators in the m-ordered basis, built from the ladder operators.
SpinOperators spin_ops(SpinSystem s);

/// J_x, J_y or J_z in the requested basis order.
ComplexMatrix spin_component(SpinSystem s, Axis axis,
                             BasisOrder order = BasisOrder::m_ordered);

/// m value encoding logical level q. Odd d: m = q (mod d). Even d:
/// m + 1/2 = q (mod d).
double m_for_level(SpinSystem s, int q);

/// For each logical level q, the index of its m value in the m-ordered basis.
std::vector<int> level_to_m_index(SpinSystem s);

/// Permutation P with P [M]_MOrdered P^dagger = [M]_Logical.
ComplexMatrix reorder_permutation(SpinSystem s);

/// Re-express a single-site operator given in `from` order in `to` order.
ComplexMatrix change_order(SpinSystem s, const ComplexMatrix& op,
                           BasisOrder from, BasisOrder to);

/// Same for an n-site state or operator (every site re-ordered).
StateVector change_order(SpinSystem s, const StateVector& psi, int n_sites,
                         BasisOrder from, BasisOrder to);
ComplexMatrix change_order(SpinSystem s, const ComplexMatrix& op, int n_sites,
                           BasisOrder from, BasisOrder to);

/// R_axis(theta) = exp(i theta J_axis).
ComplexMatrix rotation(SpinSystem s, Axis axis, double theta,
                       BasisOrder order = BasisOrder::m_ordered);

/// Pegg-Barnett phase operator F J_z F^dagger in logical order (odd d only).
ComplexMatrix pegg_barnett(SpinSystem s);

/// Highest-weight J_x eigenvector, m-ordered, amplitudes 2^-j sqrt(C(2j, j+m)).
StateVector x_plus_state(SpinSystem s);
/// Lowest-weight J_x eigenvector, m-ordered.
StateVector x_minus_state(SpinSystem s);

/// |m> basis vector in m order.
StateVector m_state(SpinSystem s, double m);

}  // namespace amkit
