#pragma once

#include <string>
#include <string_view>

#include "amkit/linalg.hpp"

namespace amkit {

/// Named single-qudit gates. Integer parameters live in Z_d.
struct GateName {
  enum class Kind {
    z,               // clock
    x,               // shift
    dft,             // F
    s_multiply,      // S(xi,0,0): |q> -> |xi q>
    s_shear,         // S(1,xi,0)
    s_fourier_shear, // S(1,0,xi)
    t,               // qutrit T
    xmn,             // qutrit two-level swap X_mn
    sqrt_z_analog,   // exp(i 2pi/3 (Jz^2 - Jz)), qutrit
    t5_candidate,    // exp(i 4pi/5 Jz^3), d = 5
  };

  Kind kind = Kind::z;
  int xi = 1;  // S-gate parameter
  int m = 0;   // X_mn levels
  int n = 0;

  static GateName clock() { return {Kind::z}; }
  static GateName shift() { return {Kind::x}; }
  static GateName dft() { return {Kind::dft}; }
  static GateName s_multiply(int xi) { return {Kind::s_multiply, xi}; }
  static GateName s_shear(int xi) { return {Kind::s_shear, xi}; }
  static GateName s_fourier_shear(int xi) { return {Kind::s_fourier_shear, xi}; }
  static GateName t_gate() { return {Kind::t}; }
  static GateName swap_levels(int m, int n) { return {Kind::xmn, 1, m, n}; }
  static GateName sqrt_z_analog() { return {Kind::sqrt_z_analog}; }
  static GateName t5_candidate() { return {Kind::t5_candidate}; }
};

/// Parses names such as "Z", "X", "F", "T", "X12", "S(2,0,0)", "S(1,0,2)",
/// "sqrtZ", "T5".
GateName parse_gate_name(std::string_view text);
std::string gate_label(const GateName& g);

/// Multiplicative inverse of a modulo d; throws ContractError if none exists.
int mod_inverse(int a, int d);

/// Computational-basis matrix of a named gate.
ComplexMatrix local_gate(const GateName& g, int d);

struct ControlSpec {
  enum class Kind { standard, hard };
  Kind kind = Kind::standard;
  int level = 0;  // hard controls only
  int arity = 1;  // number of control qudits

  static ControlSpec standard(int arity = 1) { return {Kind::standard, 0, arity}; }
  static ControlSpec hard(int level, int arity = 1) { return {Kind::hard, level, arity}; }
};

/// Standard: sum_a |a><a| (x) U^a, applied recursively for each extra control.
/// Hard(a): (I - |a><a|) (x) I + |a><a| (x) U (all controls at level a).
ComplexMatrix controlled(const ComplexMatrix& u, const ControlSpec& spec,
                         int d);

/// v u v^dagger
ComplexMatrix conjugate(const ComplexMatrix& u, const ComplexMatrix& v);

}  // namespace amkit
