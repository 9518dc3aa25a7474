#include "amkit/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include <Eigen/Eigenvalues>

namespace amkit {

namespace {

void check_cap(std::size_t rows, std::size_t cols, std::size_t cap) {
  if (cols != 0 && rows > cap / cols) {
    throw SizeError("dense result of " + std::to_string(rows) + "x" +
                    std::to_string(cols) + " exceeds the entry cap of " +
                    std::to_string(cap));
  }
}

}  // namespace

long long mod(long long a, long long d) {
  const long long r = a % d;
  return r < 0 ? r + d : r;
}

cplx root_of_unity(int d, long long k) {
  const long long r = mod(k, d);
  if (r == 0) return {1.0, 0.0};
  // Exact values where the angle is a multiple of pi/2.
  if (4 * r == d) return {0.0, 1.0};
  if (2 * r == d) return {-1.0, 0.0};
  if (4 * r == 3 * d) return {0.0, -1.0};
  return std::polar(1.0, 2.0 * kPi * static_cast<double>(r) / d);
}

ComplexMatrix identity(Eigen::Index dim) {
  return ComplexMatrix::Identity(dim, dim);
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b,
                   std::size_t entry_cap) {
  const auto rows = static_cast<std::size_t>(a.rows() * b.rows());
  const auto cols = static_cast<std::size_t>(a.cols() * b.cols());
  check_cap(rows, cols, entry_cap);
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

StateVector kron(const StateVector& a, const StateVector& b,
                 std::size_t entry_cap) {
  check_cap(static_cast<std::size_t>(a.size() * b.size()), 1, entry_cap);
  StateVector out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    out.segment(i * b.size(), b.size()) = a(i) * b;
  }
  return out;
}

ComplexMatrix kron_all(std::span<const ComplexMatrix> factors,
                       std::size_t entry_cap) {
  ComplexMatrix out = ComplexMatrix::Ones(1, 1);
  for (const auto& f : factors) out = kron(out, f, entry_cap);
  return out;
}

StateVector kron_all(std::span<const StateVector> factors,
                     std::size_t entry_cap) {
  StateVector out = StateVector::Ones(1);
  for (const auto& f : factors) out = kron(out, f, entry_cap);
  return out;
}

ComplexMatrix matrix_power(const ComplexMatrix& u, int k) {
  if (u.rows() != u.cols()) throw ContractError("matrix_power: not square");
  if (k < 0) throw ContractError("matrix_power: negative exponent");
  ComplexMatrix result = identity(u.rows());
  ComplexMatrix base = u;
  while (k > 0) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

double hermiticity_defect(const ComplexMatrix& h) {
  if (h.rows() != h.cols()) return INFINITY;
  if (h.size() == 0) return 0.0;
  return (h - h.adjoint()).cwiseAbs().maxCoeff();
}

double unitarity_defect(const ComplexMatrix& u) {
  if (u.rows() != u.cols()) return INFINITY;
  if (u.size() == 0) return 0.0;
  return (u.adjoint() * u - identity(u.rows())).cwiseAbs().maxCoeff();
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw ContractError("dimension mismatch: " + std::to_string(a.rows()) +
                        "x" + std::to_string(a.cols()) + " vs " +
                        std::to_string(b.rows()) + "x" +
                        std::to_string(b.cols()));
  }
  if (a.size() == 0) return 0.0;
  return (a - b).cwiseAbs().maxCoeff();
}

bool is_diagonal(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) return false;
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      if (i != j && m(i, j) != cplx{}) return false;
    }
  }
  return true;
}

void require_unitary(const ComplexMatrix& u, std::string_view what,
                     double tol) {
  const double defect = unitarity_defect(u);
  if (!(defect <= tol)) {
    throw ContractError(std::string(what) +
                        ": matrix is not unitary (defect " +
                        format_real(defect) + ")");
  }
}

ComplexMatrix expm_hermitian_phase(const ComplexMatrix& h, double s) {
  if (h.rows() != h.cols()) {
    throw ContractError("expm_hermitian_phase: generator is not square");
  }
  const double defect = hermiticity_defect(h);
  if (!(defect <= kExactTol)) {
    throw ContractError("expm_hermitian_phase: generator is not Hermitian "
                        "(defect " + format_real(defect) + ")");
  }
  const Eigen::Index n = h.rows();
  if (is_diagonal(h)) {
    ComplexMatrix out = ComplexMatrix::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
      out(i, i) = std::polar(1.0, s * h(i, i).real());
    }
    return out;
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(h);
  if (eig.info() != Eigen::Success) {
    throw ContractError("expm_hermitian_phase: eigendecomposition failed");
  }
  const auto& vecs = eig.eigenvectors();
  Eigen::VectorXcd phases(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    phases(i) = std::polar(1.0, s * eig.eigenvalues()(i));
  }
  return vecs * phases.asDiagonal() * vecs.adjoint();
}

Comparison approx_equal(const ComplexMatrix& a, const ComplexMatrix& b,
                        double tol, bool up_to_global_phase) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw ContractError("approx_equal: dimension mismatch");
  }
  Comparison c;
  if (up_to_global_phase && a.size() > 0) {
    Eigen::Index bi = 0, bj = 0;
    double best = -1.0;
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
      for (Eigen::Index j = 0; j < a.cols(); ++j) {
        const double mag = std::abs(a(i, j));
        if (mag > best) {
          best = mag;
          bi = i;
          bj = j;
        }
      }
    }
    const cplx target = b(bi, bj);
    const cplx source = a(bi, bj);
    if (std::abs(target) > 0.0 && std::abs(source) > 0.0) {
      c.phase = (target / std::abs(target)) *
                (std::conj(source) / std::abs(source));
    }
  }
  c.residual = a.size() == 0 ? 0.0 : (c.phase * a - b).cwiseAbs().maxCoeff();
  c.equal = c.residual <= tol;
  return c;
}

ComplexMatrix embed(const ComplexMatrix& op, std::span<const int> sites,
                    int n_sites, int d, std::size_t entry_cap) {
  const int k = static_cast<int>(sites.size());
  long long sub_dim = 1;
  for (int i = 0; i < k; ++i) sub_dim *= d;
  if (op.rows() != sub_dim || op.cols() != sub_dim) {
    throw ContractError("embed: operator dimension does not match " +
                        std::to_string(k) + " sites of dimension " +
                        std::to_string(d));
  }
  std::vector<bool> used(static_cast<std::size_t>(n_sites), false);
  for (int s : sites) {
    if (s < 0 || s >= n_sites || used[static_cast<std::size_t>(s)]) {
      throw ContractError("embed: invalid or repeated site " +
                          std::to_string(s));
    }
    used[static_cast<std::size_t>(s)] = true;
  }
  long long dim = 1;
  for (int i = 0; i < n_sites; ++i) dim *= d;
  check_cap(static_cast<std::size_t>(dim), static_cast<std::size_t>(dim),
            entry_cap);

  // stride[s] = d^(n-1-s): weight of site s in the global index
  std::vector<long long> stride(static_cast<std::size_t>(n_sites));
  for (int s = n_sites - 1, w = 1; s >= 0; --s, w *= d) {
    stride[static_cast<std::size_t>(s)] = w;
  }
  ComplexMatrix out = ComplexMatrix::Zero(dim, dim);
  std::vector<int> digits(static_cast<std::size_t>(k));
  for (long long col = 0; col < dim; ++col) {
    long long sub_col = 0;
    long long rest = col;
    for (int i = 0; i < k; ++i) {
      const auto st = stride[static_cast<std::size_t>(sites[i])];
      const int digit = static_cast<int>((col / st) % d);
      sub_col = sub_col * d + digit;
      rest -= digit * st;
    }
    for (long long sub_row = 0; sub_row < sub_dim; ++sub_row) {
      const cplx v = op(sub_row, sub_col);
      if (v == cplx{}) continue;
      long long row = rest;
      long long r = sub_row;
      for (int i = k - 1; i >= 0; --i) {
        row += (r % d) * stride[static_cast<std::size_t>(sites[i])];
        r /= d;
      }
      out(row, col) += v;
    }
  }
  return out;
}

double fidelity(const StateVector& a, const StateVector& b) {
  if (a.size() != b.size()) throw ContractError("fidelity: size mismatch");
  return std::norm(a.dot(b));
}

std::string format_real(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x + 0.0);
  return buf;
}

std::string format_complex(cplx z) {
  return "(" + format_real(z.real()) + "," + format_real(z.imag()) + ")";
}

std::string format_matrix(const ComplexMatrix& m) {
  std::ostringstream os;
  os << "matrix " << m.rows() << ' ' << m.cols() << '\n';
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (j) os << ' ';
      os << format_complex(m(i, j));
    }
    os << '\n';
  }
  return os.str();
}

std::string format_state(const StateVector& v) {
  std::ostringstream os;
  os << "state " << v.size() << '\n';
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    os << format_complex(v(i)) << '\n';
  }
  return os.str();
}

}  // namespace amkit
