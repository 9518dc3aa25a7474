#pragma once

// Spin-j couplings J_z^(x)n realized on 2j qubits per site, restricted to
// the permutation-symmetric (Dicke) sector of each site.

#include <cstddef>

#include "amkit/linalg.hpp"

namespace amkit {

/// 2^two_j x (two_j+1) isometry; column k is the normalized Dicke state with
/// k qubits in |1>, i.e. m = j - k. Qubit |0> has sigma_z = +1.
ComplexMatrix dicke_isometry(int two_j);

/// (1/2) sum_k sigma_z^(k) on two_j qubits.
ComplexMatrix collective_jz(int two_j);

struct QubitCoupling {
  ComplexMatrix matrix;  // on n * two_j qubits, site-major
  std::size_t terms = 0;
};

/// 2^-n sum over (k_1..k_n) of (x)_nu sigma_z^(nu, k_nu): one sigma_z string
/// per index tuple, two_j^n strings in all.
QubitCoupling coupling_from_qubits(int two_j, int n,
                                   std::size_t entry_cap = kDefaultEntryCap);

/// Compresses an operator on n sites of two_j qubits through the site-wise
/// Dicke isometries.
ComplexMatrix compress_symmetric(const ComplexMatrix& op, int two_j, int n);

/// Projector onto the symmetric sector of one site.
ComplexMatrix symmetrizer(int two_j);

}  // namespace amkit
