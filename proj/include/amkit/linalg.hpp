#pragma once

// Dense complex linear algebra shared by every other module.
//
// Matrices are Eigen dense complex matrices. Kronecker products follow the
// usual convention: the first factor indexes the most significant digit, so
// a multi-qudit basis state |q_1,...,q_n> sits at index sum_k q_k d^(n-k).

#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "amkit/errors.hpp"

namespace amkit {

using cplx = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using StateVector = Eigen::VectorXcd;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kDefaultTol = 1e-10;
inline constexpr double kExactTol = 1e-12;
inline constexpr std::size_t kDefaultEntryCap = std::size_t{1} << 20;

/// e^{2 pi i k / d}, with k reduced mod d first so that exponents stay small.
cplx root_of_unity(int d, long long k);

/// Non-negative residue of a mod d.
long long mod(long long a, long long d);

ComplexMatrix identity(Eigen::Index dim);

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b,
                   std::size_t entry_cap = kDefaultEntryCap);
StateVector kron(const StateVector& a, const StateVector& b,
                 std::size_t entry_cap = kDefaultEntryCap);

/// Left-to-right Kronecker product of all factors; empty input gives [1].
ComplexMatrix kron_all(std::span<const ComplexMatrix> factors,
                       std::size_t entry_cap = kDefaultEntryCap);
StateVector kron_all(std::span<const StateVector> factors,
                     std::size_t entry_cap = kDefaultEntryCap);

/// U^k for k >= 0 by repeated squaring.
ComplexMatrix matrix_power(const ComplexMatrix& u, int k);

/// max |h - h^dagger|
double hermiticity_defect(const ComplexMatrix& h);
/// max |U^dagger U - I|
double unitarity_defect(const ComplexMatrix& u);
/// max |a - b|; dimensions must agree.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

bool is_diagonal(const ComplexMatrix& m);

/// Throws ContractError when `u` is not unitary within `tol`.
void require_unitary(const ComplexMatrix& u, std::string_view what,
                     double tol = kExactTol);

/// exp(i s h) for Hermitian h. Diagonal inputs are exponentiated entrywise;
/// everything else goes through a Hermitian eigendecomposition.
ComplexMatrix expm_hermitian_phase(const ComplexMatrix& h, double s);

struct Comparison {
  bool equal = false;
  double residual = 0.0;
  cplx phase{1.0, 0.0};
};

/// Max-norm comparison of `a` against `b`. With `up_to_global_phase` the
/// unit phase taking the largest-magnitude entry of `a` onto the matching
/// entry of `b` is applied to `a` before measuring the residual.
Comparison approx_equal(const ComplexMatrix& a, const ComplexMatrix& b,
                        double tol = kDefaultTol,
                        bool up_to_global_phase = false);

/// Operator acting on `sites` (in the listed order, 0-based) of an n-site
/// register of equal local dimension d, identity elsewhere.
ComplexMatrix embed(const ComplexMatrix& op, std::span<const int> sites,
                    int n_sites, int d,
                    std::size_t entry_cap = kDefaultEntryCap);

/// |<a|b>|^2 for normalized states.
double fidelity(const StateVector& a, const StateVector& b);

/// Text form: `matrix R C` then one row per line, entries `(re,im)` with 17
/// significant digits separated by single spaces.
std::string format_matrix(const ComplexMatrix& m);
/// Text form: `state D` then one amplitude per line.
std::string format_state(const StateVector& v);

std::string format_complex(cplx z);
std::string format_real(double x);

}  // namespace amkit
