#include "amkit/couplings.hpp"

#include <cmath>
#include <vector>

namespace amkit {

namespace {

constexpr SpinSystem kQutrit{2};

void check_sites(std::span<const int> sites, int n_total) {
  if (sites.empty()) throw ContractError("coupling needs at least one site");
  int prev = 0;
  for (int s : sites) {
    if (s <= prev || s > n_total) {
      throw ContractError("coupling sites must be strictly increasing within 1.." +
                          std::to_string(n_total));
    }
    prev = s;
  }
}

ComplexMatrix site_product(int n_total, std::span<const int> sites,
                           const ComplexMatrix& on, const ComplexMatrix& off) {
  std::vector<ComplexMatrix> factors;
  factors.reserve(static_cast<std::size_t>(n_total));
  std::size_t next = 0;
  for (int site = 1; site <= n_total; ++site) {
    if (next < sites.size() && sites[next] == site) {
      factors.push_back(on);
      ++next;
    } else {
      factors.push_back(off);
    }
  }
  return kron_all(factors);
}

std::vector<int> all_sites(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = i + 1;
  return v;
}

}  // namespace

ComplexMatrix many_body_jz(SpinSystem s, std::span<const int> sites,
                           int n_total, BasisOrder order) {
  check_sites(sites, n_total);
  const ComplexMatrix jz = spin_component(s, Axis::z, order);
  return site_product(n_total, sites, jz, identity(s.dim()));
}

ComplexMatrix mc_phase_odd(SpinSystem s, int n, int k) {
  if (!s.integer()) {
    throw UnsupportedError("mc_phase_odd needs odd d; use mc_phase_even");
  }
  if (n < 1) throw ContractError("mc_phase_odd: n must be >= 1");
  const int d = s.dim();
  const auto sites = all_sites(n);
  return expm_hermitian_phase(many_body_jz(s, sites, n),
                              2.0 * kPi * static_cast<double>(mod(k, d)) / d);
}

ComplexMatrix mc_phase_even(SpinSystem s, int n, int k) {
  if (s.integer()) throw UnsupportedError("mc_phase_even needs even d");
  if (n < 1) throw ContractError("mc_phase_even: n must be >= 1");
  const int d = s.dim();
  const ComplexMatrix shifted =
      spin_component(s, Axis::z, BasisOrder::logical) + identity(d) / 2.0;
  const auto sites = all_sites(n);
  return expm_hermitian_phase(site_product(n, sites, shifted, identity(d)),
                              2.0 * kPi * static_cast<double>(mod(k, d)) / d);
}

ComplexMatrix qubit_mcz_formula(int n) {
  if (n < 1) throw ContractError("qubit_mcz_formula: n must be >= 1");
  ComplexMatrix one_minus_z = ComplexMatrix::Zero(2, 2);
  one_minus_z(1, 1) = 2.0;
  const auto sites = all_sites(n);
  return expm_hermitian_phase(site_product(n, sites, one_minus_z, identity(2)),
                              kPi / std::ldexp(1.0, n));
}

ComplexMatrix hypergraph_hamiltonian(const Multihypergraph& h, SpinSystem s) {
  if (h.payload() != Multihypergraph::Payload::multiplicity) {
    throw ContractError(
        "hypergraph_hamiltonian needs integer multiplicities; weighted edges "
        "belong to am_hypergraph_state");
  }
  if (s.dim() != h.dim()) {
    throw ContractError("hypergraph_hamiltonian: spin dimension differs from "
                        "hypergraph dimension");
  }
  const int n = h.n_vertices();
  Eigen::Index dim = 1;
  for (int i = 0; i < n; ++i) dim *= s.dim();
  ComplexMatrix g = ComplexMatrix::Zero(dim, dim);
  for (const auto& e : h.edges()) {
    if (e.multiplicity == 0) continue;
    g += static_cast<double>(e.multiplicity) * many_body_jz(s, e.vertices, n);
  }
  return g;
}

ComplexMatrix level_projector_polynomial(int level) {
  const ComplexMatrix jz = spin_component(kQutrit, Axis::z, BasisOrder::logical);
  const ComplexMatrix jz2 = jz * jz;
  const double m = m_for_level(kQutrit, level);
  if (m > 0) return (jz2 + jz) / 2.0;
  if (m < 0) return (jz2 - jz) / 2.0;
  return identity(3) - jz2;
}

ComplexMatrix hard_projector_form(int level, int k) {
  const ComplexMatrix jz = spin_component(kQutrit, Axis::z, BasisOrder::logical);
  return expm_hermitian_phase(kron(level_projector_polynomial(level), jz),
                              2.0 * kPi * static_cast<double>(mod(k, 3)) / 3.0);
}

ComplexMatrix controlled_phase_coupling(int k) {
  const ComplexMatrix jz = spin_component(kQutrit, Axis::z, BasisOrder::logical);
  return expm_hermitian_phase(kron(jz, pegg_barnett(kQutrit)),
                              2.0 * kPi * static_cast<double>(mod(k, 3)) / 3.0);
}

ComplexMatrix hard_phase_coupling(int level, int k) {
  return expm_hermitian_phase(
      kron(level_projector_polynomial(level), pegg_barnett(kQutrit)),
      2.0 * kPi * static_cast<double>(mod(k, 3)) / 3.0);
}

}  // namespace amkit
