#include "amkit/symmetric.hpp"

#include <bit>
#include <cmath>
#include <vector>

namespace amkit {

namespace {

void check_two_j(int two_j) {
  if (two_j < 1) throw ContractError("two_j must be >= 1");
  if (two_j > 20) throw SizeError("two_j beyond 20 qubits per site");
}

ComplexMatrix sigma_z_on(int k, int n_qubits) {
  const Eigen::Index dim = Eigen::Index{1} << n_qubits;
  ComplexMatrix z = ComplexMatrix::Zero(dim, dim);
  for (Eigen::Index b = 0; b < dim; ++b) {
    const bool one = (b >> (n_qubits - 1 - k)) & 1;
    z(b, b) = one ? -1.0 : 1.0;
  }
  return z;
}

ComplexMatrix power_of(const ComplexMatrix& v, int n) {
  std::vector<ComplexMatrix> f(static_cast<std::size_t>(n), v);
  return kron_all(f);
}

}  // namespace

ComplexMatrix dicke_isometry(int two_j) {
  check_two_j(two_j);
  const Eigen::Index dim = Eigen::Index{1} << two_j;
  ComplexMatrix v = ComplexMatrix::Zero(dim, two_j + 1);
  for (Eigen::Index b = 0; b < dim; ++b) {
    v(b, std::popcount(static_cast<unsigned long long>(b))) = 1.0;
  }
  for (int k = 0; k <= two_j; ++k) v.col(k).normalize();
  return v;
}

ComplexMatrix collective_jz(int two_j) {
  check_two_j(two_j);
  const Eigen::Index dim = Eigen::Index{1} << two_j;
  ComplexMatrix jz = ComplexMatrix::Zero(dim, dim);
  for (int k = 0; k < two_j; ++k) jz += 0.5 * sigma_z_on(k, two_j);
  return jz;
}

QubitCoupling coupling_from_qubits(int two_j, int n, std::size_t entry_cap) {
  check_two_j(two_j);
  if (n < 1) throw ContractError("coupling_from_qubits: n must be >= 1");
  const int qubits = two_j * n;
  if (qubits > 30 ||
      (std::size_t{1} << qubits) > entry_cap / (std::size_t{1} << qubits)) {
    throw SizeError("coupling_from_qubits: " + std::to_string(qubits) +
                    " qubits exceed the dense cap");
  }
  std::vector<ComplexMatrix> site_z;
  for (int k = 0; k < two_j; ++k) site_z.push_back(sigma_z_on(k, two_j));

  const Eigen::Index dim = Eigen::Index{1} << qubits;
  QubitCoupling out{ComplexMatrix::Zero(dim, dim), 0};
  std::vector<int> idx(static_cast<std::size_t>(n), 0);
  std::vector<ComplexMatrix> factors(static_cast<std::size_t>(n));
  while (true) {
    for (int nu = 0; nu < n; ++nu) {
      factors[static_cast<std::size_t>(nu)] =
          site_z[static_cast<std::size_t>(idx[static_cast<std::size_t>(nu)])];
    }
    out.matrix += kron_all(factors, entry_cap);
    ++out.terms;
    int pos = n - 1;
    while (pos >= 0 && ++idx[static_cast<std::size_t>(pos)] == two_j) {
      idx[static_cast<std::size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) break;
  }
  out.matrix /= std::ldexp(1.0, n);
  return out;
}

ComplexMatrix compress_symmetric(const ComplexMatrix& op, int two_j, int n) {
  const ComplexMatrix v = power_of(dicke_isometry(two_j), n);
  if (op.rows() != v.rows() || op.cols() != v.rows()) {
    throw ContractError("compress_symmetric: operator dimension mismatch");
  }
  return v.adjoint() * op * v;
}

ComplexMatrix symmetrizer(int two_j) {
  const ComplexMatrix v = dicke_isometry(two_j);
  return v * v.adjoint();
}

}  // namespace amkit
