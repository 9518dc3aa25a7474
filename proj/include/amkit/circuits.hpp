#pragma once

// Qutrit circuits over sites a, b, c (0, 1, 2) built from two-qutrit
// hard-controlled phase/shift gates and local unitaries.

#include <string>
#include <vector>

#include "amkit/linalg.hpp"

namespace amkit {

struct CircuitGate {
  enum class Kind { hard_z, hard_x, local };

  Kind kind = Kind::local;
  int control = -1;  // hard gates only
  int level = 0;     // control level
  int target = 0;
  int power = 1;     // exponent of Z or X
  std::string label;     // local gates only
  ComplexMatrix matrix;  // local gates only

  static CircuitGate hard_z(int level, int control, int target, int power);
  static CircuitGate hard_x(int level, int control, int target, int power);
  static CircuitGate local(std::string label, ComplexMatrix u, int target);

  /// Human-readable form such as `|1_a>-Z^2_c` or `F_c`.
  std::string describe() const;
};

/// Gates in circuit order: the first entry acts first.
struct GateSequence {
  int n_sites = 3;
  int d = 3;
  std::vector<CircuitGate> gates;

  GateSequence& then(const GateSequence& other);
  GateSequence& then(CircuitGate g);
};

/// Five-gate realization of |q> - CZ^q, q in {1, 2}.
GateSequence hard_ccz_decomposition(int q);

/// |1> - CZ followed by |2> - CZ^2: ten two-qutrit gates equal to CCZ.
GateSequence ccz_two_body();

/// Register matrix of one gate.
ComplexMatrix gate_matrix(const CircuitGate& g, int n_sites, int d);

/// Product of the embedded gates in circuit order.
ComplexMatrix compose(const GateSequence& seq);

std::string format_sequence(const GateSequence& seq);

/// C^(2) Z^k and C^(2) X^k on three qutrits via the recursive definition.
ComplexMatrix ccz_target(int k = 1);
ComplexMatrix ccx_target(int k = 1);
/// |q> - C(Z^k): hard control on a, standard control on b, target c.
ComplexMatrix hard_cz_target(int q, int k);

}  // namespace amkit
