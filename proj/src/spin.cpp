#include "amkit/spin.hpp"

#include <cmath>

#include "amkit/gates.hpp"

namespace amkit {

SpinSystem SpinSystem::from_dim(int d) {
  if (d < 1) throw ContractError("spin system needs d >= 1");
  return SpinSystem{d - 1};
}

SpinOperators spin_ops(SpinSystem s) {
  if (s.two_j < 0) throw ContractError("spin_ops: two_j must be >= 0");
  const int d = s.dim();
  const double j = s.j();
  ComplexMatrix raise = ComplexMatrix::Zero(d, d);
  ComplexMatrix jz = ComplexMatrix::Zero(d, d);
  for (int i = 0; i < d; ++i) {
    const double m = s.m_at(i);
    jz(i, i) = m;
    // <m+1|J_+|m> sits one row above
    if (i > 0) raise(i - 1, i) = std::sqrt(j * (j + 1) - m * (m + 1));
  }
  const ComplexMatrix lower = raise.adjoint();
  SpinOperators ops;
  ops.jx = (raise + lower) / 2.0;
  ops.jy = (raise - lower) / cplx(0.0, 2.0);
  ops.jz = jz;
  ops.casimir = ops.jx * ops.jx + ops.jy * ops.jy + ops.jz * ops.jz;
  return ops;
}

ComplexMatrix spin_component(SpinSystem s, Axis axis, BasisOrder order) {
  auto ops = spin_ops(s);
  ComplexMatrix m;
  switch (axis) {
    case Axis::x: m = std::move(ops.jx); break;
    case Axis::y: m = std::move(ops.jy); break;
    case Axis::z: m = std::move(ops.jz); break;
  }
  return change_order(s, m, BasisOrder::m_ordered, order);
}

double m_for_level(SpinSystem s, int q) {
  const int d = s.dim();
  if (q < 0 || q >= d) throw ContractError("level out of range");
  if (s.integer()) {
    // m in [-j, j] with m = q mod d
    const int j = s.two_j / 2;
    return q <= j ? q : q - d;
  }
  // t = m + 1/2 ranges over [1 - d/2, d/2]
  const int t = q <= d / 2 ? q : q - d;
  return t - 0.5;
}

std::vector<int> level_to_m_index(SpinSystem s) {
  std::vector<int> idx(static_cast<std::size_t>(s.dim()));
  for (int q = 0; q < s.dim(); ++q) {
    idx[static_cast<std::size_t>(q)] =
        static_cast<int>(std::lround(s.j() - m_for_level(s, q)));
  }
  return idx;
}

ComplexMatrix reorder_permutation(SpinSystem s) {
  const auto idx = level_to_m_index(s);
  ComplexMatrix p = ComplexMatrix::Zero(s.dim(), s.dim());
  for (int q = 0; q < s.dim(); ++q) p(q, idx[static_cast<std::size_t>(q)]) = 1.0;
  return p;
}

ComplexMatrix change_order(SpinSystem s, const ComplexMatrix& op,
                           BasisOrder from, BasisOrder to) {
  return change_order(s, op, 1, from, to);
}

namespace {

// Global-index permutation: perm[logical index] = m-ordered index.
std::vector<Eigen::Index> site_permutation(SpinSystem s, int n_sites) {
  const auto idx = level_to_m_index(s);
  const int d = s.dim();
  Eigen::Index dim = 1;
  for (int i = 0; i < n_sites; ++i) dim *= d;
  std::vector<Eigen::Index> perm(static_cast<std::size_t>(dim));
  for (Eigen::Index g = 0; g < dim; ++g) {
    Eigen::Index rest = g, mapped = 0, weight = 1;
    for (int site = 0; site < n_sites; ++site) {
      const auto digit = rest % d;
      rest /= d;
      mapped += idx[static_cast<std::size_t>(digit)] * weight;
      weight *= d;
    }
    perm[static_cast<std::size_t>(g)] = mapped;
  }
  return perm;
}

void check_dim(SpinSystem s, Eigen::Index rows, int n_sites) {
  Eigen::Index dim = 1;
  for (int i = 0; i < n_sites; ++i) dim *= s.dim();
  if (rows != dim) throw ContractError("change_order: dimension mismatch");
}

}  // namespace

StateVector change_order(SpinSystem s, const StateVector& psi, int n_sites,
                         BasisOrder from, BasisOrder to) {
  check_dim(s, psi.size(), n_sites);
  if (from == to) return psi;
  const auto perm = site_permutation(s, n_sites);
  StateVector out(psi.size());
  for (Eigen::Index g = 0; g < psi.size(); ++g) {
    const auto m = perm[static_cast<std::size_t>(g)];
    if (to == BasisOrder::logical) {
      out(g) = psi(m);
    } else {
      out(m) = psi(g);
    }
  }
  return out;
}

ComplexMatrix change_order(SpinSystem s, const ComplexMatrix& op, int n_sites,
                           BasisOrder from, BasisOrder to) {
  check_dim(s, op.rows(), n_sites);
  if (op.cols() != op.rows()) throw ContractError("change_order: not square");
  if (from == to) return op;
  const auto perm = site_permutation(s, n_sites);
  const Eigen::Index n = op.rows();
  ComplexMatrix out(n, n);
  for (Eigen::Index a = 0; a < n; ++a) {
    for (Eigen::Index b = 0; b < n; ++b) {
      const auto ma = perm[static_cast<std::size_t>(a)];
      const auto mb = perm[static_cast<std::size_t>(b)];
      if (to == BasisOrder::logical) {
        out(a, b) = op(ma, mb);
      } else {
        out(ma, mb) = op(a, b);
      }
    }
  }
  return out;
}

ComplexMatrix rotation(SpinSystem s, Axis axis, double theta,
                       BasisOrder order) {
  return expm_hermitian_phase(spin_component(s, axis, order), theta);
}

ComplexMatrix pegg_barnett(SpinSystem s) {
  if (!s.integer()) {
    throw UnsupportedError(
        "pegg_barnett: defined only for integer j (odd dimension)");
  }
  const ComplexMatrix f = local_gate(GateName::dft(), s.dim());
  const ComplexMatrix jz = spin_component(s, Axis::z, BasisOrder::logical);
  ComplexMatrix theta = f * jz * f.adjoint();
  // Hermitian by construction; symmetrize away the rounding asymmetry.
  return (theta + theta.adjoint()) / 2.0;
}

namespace {

double binomial(int n, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

StateVector x_plus_state(SpinSystem s) {
  const int d = s.dim();
  StateVector v(d);
  const double scale = std::pow(2.0, -s.j());
  for (int i = 0; i < d; ++i) {
    // j + m = two_j - i
    v(i) = scale * std::sqrt(binomial(s.two_j, s.two_j - i));
  }
  return v;
}

StateVector x_minus_state(SpinSystem s) {
  StateVector v = x_plus_state(s);
  for (int i = 0; i < v.size(); ++i) {
    if (i % 2 == 1) v(i) = -v(i);
  }
  return v;
}

StateVector m_state(SpinSystem s, double m) {
  const double idx = s.j() - m;
  const long i = std::lround(idx);
  if (std::abs(idx - static_cast<double>(i)) > 1e-9 || i < 0 || i >= s.dim()) {
    throw ContractError("m_state: m is not a valid projection");
  }
  StateVector v = StateVector::Zero(s.dim());
  v(i) = 1.0;
  return v;
}

}  // namespace amkit
