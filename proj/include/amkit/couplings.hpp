#pragma once

// Multi-controlled phase gates written as exponentials of many-body J_z
// couplings, and the related hard-control and hypergraph generators.

#include <span>

#include "amkit/hypergraph.hpp"
#include "amkit/linalg.hpp"
#include "amkit/spin.hpp"

namespace amkit {

/// Tensor product with J_z on each listed site (1-based) and I elsewhere.
ComplexMatrix many_body_jz(SpinSystem s, std::span<const int> sites,
                           int n_total,
                           BasisOrder order = BasisOrder::logical);

/// exp(i 2k pi/d J_z^(x)n), logical order, odd d. Equals C^(n-1) Z^k.
ComplexMatrix mc_phase_odd(SpinSystem s, int n, int k);

/// exp(i 2k pi/d (J_z + I/2)^(x)n), logical order, even d. Equals C^(n-1) Z^k.
ComplexMatrix mc_phase_even(SpinSystem s, int n, int k);

/// exp(i pi/2^n (I - sigma_z)^(x)n): the qubit C^(n-1) Z.
ComplexMatrix qubit_mcz_formula(int n);

/// G_H = sum_e g_e J_z^(e) in logical order.
ComplexMatrix hypergraph_hamiltonian(const Multihypergraph& h, SpinSystem s);

/// Level projector |q><q| of a qutrit written as a polynomial in J_z:
/// (J_z^2 + J_z)/2 for m=1, (J_z^2 - J_z)/2 for m=-1, I - J_z^2 for m=0.
ComplexMatrix level_projector_polynomial(int level);

/// exp(i 2k pi/3 |q><q| (x) J_z), logical order. Equals |q> - Z^k.
ComplexMatrix hard_projector_form(int level, int k);

/// exp(i 2k pi/3 J_z (x) Theta_z), logical order, qutrits.
ComplexMatrix controlled_phase_coupling(int k);

/// exp(i 2k pi/3 |q><q| (x) Theta_z), logical order, qutrits.
ComplexMatrix hard_phase_coupling(int level, int k);

}  // namespace amkit
