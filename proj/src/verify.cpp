#include "amkit/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <random>
#include <sstream>

#include "amkit/circuits.hpp"
#include "amkit/couplings.hpp"
#include "amkit/gates.hpp"
#include "amkit/hypergraph.hpp"
#include "amkit/optical.hpp"
#include "amkit/spin.hpp"
#include "amkit/symmetric.hpp"

namespace amkit {

bool SuiteReport::overall() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const Check& c) { return c.pass; });
}

void SuiteReport::add(std::string name, double residual, double tolerance) {
  // NaN residuals fail.
  const bool pass = residual <= tolerance;
  checks.push_back({std::move(name), residual, tolerance, pass});
}

void SuiteReport::append(const SuiteReport& other) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

namespace {

constexpr double kPinned12 = 1e-12;
constexpr double kPinned13 = 1e-13;
constexpr double kOpticalTol = 1e-9;

const cplx kI{0.0, 1.0};

ComplexMatrix gate(const GateName& g, int d = 3) { return local_gate(g, d); }

ComplexMatrix zpow(int k, int d = 3) {
  return matrix_power(gate(GateName::clock(), d), static_cast<int>(mod(k, d)));
}

ComplexMatrix xpow(int k, int d = 3) {
  return matrix_power(gate(GateName::shift(), d), static_cast<int>(mod(k, d)));
}

ComplexMatrix jl(int two_j, Axis a) {
  return spin_component(SpinSystem{two_j}, a, BasisOrder::logical);
}

double diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  return max_abs_diff(a, b);
}

double diff_up_to_phase(const ComplexMatrix& a, const ComplexMatrix& b) {
  return approx_equal(a, b, kDefaultTol, true).residual;
}

std::string tag(std::string_view base, std::string_view params) {
  return std::string(base) + "[" + std::string(params) + "]";
}

std::string kv(std::string_view k, int v) {
  return std::string(k) + "=" + std::to_string(v);
}

// ---------------------------------------------------------------- local

void su2_checks(SuiteReport& r) {
  for (int two_j = 1; two_j <= 8; ++two_j) {
    const SpinSystem s{two_j};
    const auto ops = spin_ops(s);
    const double comm = std::max(
        {diff(ops.jx * ops.jy - ops.jy * ops.jx, kI * ops.jz),
         diff(ops.jy * ops.jz - ops.jz * ops.jy, kI * ops.jx),
         diff(ops.jz * ops.jx - ops.jx * ops.jz, kI * ops.jy)});
    r.add(tag("local.su2_commutators", kv("two_j", two_j)), comm, kPinned12);
    const double jj = s.j() * (s.j() + 1.0);
    r.add(tag("local.casimir", kv("two_j", two_j)),
          diff(ops.casimir, jj * identity(s.dim())), kPinned12);
    double rot = 0.0;
    for (Axis a : {Axis::x, Axis::y, Axis::z}) {
      for (double theta : {0.37, kPi / 3.0, 2.0 * kPi - 0.1}) {
        rot = std::max(rot, unitarity_defect(rotation(s, a, theta)));
      }
    }
    r.add(tag("local.rotation_unitary", kv("two_j", two_j)), rot, kPinned12);
  }
}

void pauli_checks(SuiteReport& r) {
  double orders = 0.0;
  for (int d = 2; d <= 9; ++d) {
    const auto z = gate(GateName::clock(), d);
    const auto x = gate(GateName::shift(), d);
    orders = std::max({orders, diff(matrix_power(z, d), identity(d)),
                       diff(matrix_power(x, d), identity(d))});
  }
  r.add("local.pauli_order[d=2..9]", orders, kPinned12);

  for (int d : {3, 5}) {
    double weyl = 0.0;
    for (int a = 0; a < d; ++a) {
      for (int b = 0; b < d; ++b) {
        weyl = std::max(weyl, diff(xpow(a, d) * zpow(b, d),
                                   root_of_unity(d, -a * b) * zpow(b, d) *
                                       xpow(a, d)));
      }
    }
    r.add(tag("local.weyl_commutation", kv("d", d)), weyl, kPinned12);
  }
}

/// Smallest distance from v p v^dagger to any omega^c X^a Z^b.
double pauli_distance(const ComplexMatrix& m, int d) {
  double best = 1e300;
  for (int a = 0; a < d; ++a) {
    for (int b = 0; b < d; ++b) {
      const ComplexMatrix p = xpow(a, d) * zpow(b, d);
      for (int c = 0; c < d; ++c) {
        best = std::min(best, diff(m, root_of_unity(d, c) * p));
      }
    }
  }
  return best;
}

void clifford_checks(SuiteReport& r, double tol) {
  for (int d : {3, 5}) {
    std::vector<GateName> gates{GateName::dft()};
    for (int xi = 0; xi < d; ++xi) {
      if (std::gcd(xi, d) == 1) gates.push_back(GateName::s_multiply(xi));
      gates.push_back(GateName::s_shear(xi));
      gates.push_back(GateName::s_fourier_shear(xi));
    }
    double worst = 0.0;
    for (const auto& g : gates) {
      const auto v = gate(g, d);
      for (const auto& p : {xpow(1, d), zpow(1, d)}) {
        worst = std::max(worst, pauli_distance(conjugate(p, v), d));
      }
    }
    r.add(tag("local.clifford_closure", kv("d", d)), worst, tol);
  }
}

void unitarity_checks(SuiteReport& r) {
  double worst = 0.0;
  for (int d : {3, 5}) {
    std::vector<GateName> gates{GateName::clock(), GateName::shift(),
                                GateName::dft()};
    for (int xi = 1; xi < d; ++xi) {
      gates.push_back(GateName::s_multiply(xi));
      gates.push_back(GateName::s_shear(xi));
      gates.push_back(GateName::s_fourier_shear(xi));
    }
    if (d == 3) {
      gates.push_back(GateName::t_gate());
      gates.push_back(GateName::sqrt_z_analog());
      gates.push_back(GateName::swap_levels(0, 1));
      gates.push_back(GateName::swap_levels(0, 2));
      gates.push_back(GateName::swap_levels(1, 2));
    } else {
      gates.push_back(GateName::t5_candidate());
    }
    for (const auto& g : gates) {
      worst = std::max(worst, unitarity_defect(gate(g, d)));
    }
  }
  r.add("local.gates_unitary[d=3,5]", worst, kPinned12);
}

void qutrit_identity_checks(SuiteReport& r, double tol) {
  const SpinSystem q{2};
  const auto jx = jl(2, Axis::x), jy = jl(2, Axis::y), jz = jl(2, Axis::z);
  const auto z = gate(GateName::clock());
  const auto x = gate(GateName::shift());
  const auto f = gate(GateName::dft());
  const auto x12 = gate(GateName::swap_levels(1, 2));
  const auto theta = pegg_barnett(q);
  const auto i3 = identity(3);

  r.add("local.rz_2pi3_is_z",
        diff(rotation(q, Axis::z, 2.0 * kPi / 3.0, BasisOrder::logical), z),
        tol);
  r.add("local.rx_pi_is_minus_x12",
        diff(rotation(q, Axis::x, kPi, BasisOrder::logical), -x12), tol);
  r.add("local.theta_from_jx_jy",
        diff(theta, std::sqrt(1.0 / 3.0) * (jy * jx + jx * jy) -
                        std::sqrt(2.0 / 3.0) * jy),
        tol);
  const ComplexMatrix theta2 = theta * theta;
  r.add("local.theta_squared_polynomial",
        diff(theta2, (-std::sqrt(2.0) * jx + 2.0 * jy * jy + jz * jz) / 3.0),
        tol);
  r.add("local.theta_squared_projector",
        diff(theta2, i3 - ComplexMatrix::Ones(3, 3) / 3.0), tol);
  r.add("local.s110_exponential",
        diff(gate(GateName::s_shear(1)),
             expm_hermitian_phase(jz * jz, -2.0 * kPi / 3.0)),
        tol);
  r.add("local.s120_exponential",
        diff(gate(GateName::s_shear(2)),
             expm_hermitian_phase(jz * jz, 2.0 * kPi / 3.0)),
        tol);
  for (int xi : {1, 2}) {
    r.add(tag("local.s10xi_exponential", kv("xi", xi)),
          diff(gate(GateName::s_fourier_shear(xi)),
               expm_hermitian_phase(theta2, 2.0 * kPi * xi / 3.0)),
          tol);
  }
  r.add("local.s200_is_x12", diff(gate(GateName::s_multiply(2)), x12), tol);
  r.add("local.t_exponential",
        diff(gate(GateName::t_gate()), expm_hermitian_phase(jz, 2.0 * kPi / 9.0)),
        tol);
  r.add("local.theta_is_dft_conjugate_of_jz",
        diff(theta, conjugate(jz, f)), tol);
  r.add("local.dft_dagger_conjugates_z_to_x",
        diff(conjugate(z, f.adjoint()), x), tol);
  r.add("local.dft_conjugates_z_to_x_inverse",
        diff(conjugate(z, f), x.adjoint()), tol);
  double theta_exp = 0.0;
  for (int k = 0; k < 3; ++k) {
    theta_exp = std::max(
        theta_exp,
        diff(expm_hermitian_phase(theta, 2.0 * kPi * k / 3.0), xpow(-k)));
  }
  r.add("local.theta_exponential_is_x_inverse_power", theta_exp, tol);
  r.add("local.x12_conjugated_by_x_is_x02",
        diff(conjugate(x12, x), gate(GateName::swap_levels(0, 2))), tol);
  const auto cz = controlled(z, ControlSpec::standard(), 3);
  r.add("local.cz_from_hard_controls",
        diff(cz, controlled(z, ControlSpec::hard(1), 3) *
                     controlled(z * z, ControlSpec::hard(2), 3)),
        kPinned12);
}

SuiteReport local_suite(const VerifyOptions& o) {
  SuiteReport r{"local", {}};
  su2_checks(r);
  pauli_checks(r);
  clifford_checks(r, o.tol);
  unitarity_checks(r);
  qutrit_identity_checks(r, o.tol);
  return r;
}

// ------------------------------------------------------------ couplings

SuiteReport couplings_suite(const VerifyOptions& o) {
  SuiteReport r{"couplings", {}};
  for (int d : {3, 5}) {
    for (int n : {2, 3}) {
      double worst = 0.0;
      for (int k = 0; k < d; ++k) {
        worst = std::max(worst, diff(mc_phase_odd(SpinSystem::from_dim(d), n, k),
                                     controlled(zpow(k, d),
                                                ControlSpec::standard(n - 1), d)));
      }
      r.add(tag("couplings.mc_phase_odd", kv("d", d) + "," + kv("n", n)), worst,
            kPinned12);
    }
  }
  for (int d : {2, 4}) {
    for (int n : {2, 3}) {
      double worst = 0.0;
      for (int k = 0; k < d; ++k) {
        worst = std::max(worst, diff(mc_phase_even(SpinSystem::from_dim(d), n, k),
                                     controlled(zpow(k, d),
                                                ControlSpec::standard(n - 1), d)));
      }
      r.add(tag("couplings.mc_phase_even", kv("d", d) + "," + kv("n", n)), worst,
            kPinned12);
    }
  }
  for (int n : {1, 2, 3}) {
    const auto z = zpow(1, 2);
    const ComplexMatrix want =
        n == 1 ? z : controlled(z, ControlSpec::standard(n - 1), 2);
    r.add(tag("couplings.qubit_mcz", kv("n", n)),
          diff(qubit_mcz_formula(n), want), kPinned12);
  }

  const auto f = gate(GateName::dft());
  const auto i3 = identity(3);
  double cx_inv = 0.0, cz_conj = 0.0;
  for (int k = 0; k < 3; ++k) {
    const auto u = controlled_phase_coupling(k);
    cx_inv = std::max(cx_inv,
                      diff(u, controlled(xpow(-k), ControlSpec::standard(), 3)));
    cz_conj = std::max(
        cz_conj,
        diff(u, conjugate(controlled(zpow(k), ControlSpec::standard(), 3),
                          kron(i3, f))));
  }
  r.add("couplings.jz_theta_is_cx_inverse_power", cx_inv, o.tol);
  r.add("couplings.jz_theta_is_dft_conjugated_cz", cz_conj, o.tol);

  double hard = 0.0, hard_theta = 0.0;
  for (int level = 0; level < 3; ++level) {
    for (int k = 0; k < 3; ++k) {
      hard = std::max(hard, diff(hard_projector_form(level, k),
                                 controlled(zpow(k), ControlSpec::hard(level), 3)));
      hard_theta = std::max(
          hard_theta, diff(hard_phase_coupling(level, k),
                           controlled(xpow(-k), ControlSpec::hard(level), 3)));
    }
  }
  r.add("couplings.hard_projector_form", hard, kPinned12);
  r.add("couplings.hard_theta_is_hard_x_inverse_power", hard_theta, o.tol);

  double proj = 0.0;
  for (int level = 0; level < 3; ++level) {
    ComplexMatrix p = ComplexMatrix::Zero(3, 3);
    p(level, level) = 1.0;
    proj = std::max(proj, diff(level_projector_polynomial(level), p));
  }
  r.add("couplings.level_projectors", proj, kPinned12);

  const SpinSystem q{2};
  const auto rx = rotation(q, Axis::x, kPi, BasisOrder::logical);
  for (int n : {2, 3}) {
    const std::vector<int> last{n - 1};
    const auto r_on = embed(rx, last, n, 3);
    double worst = 0.0;
    for (int k = 0; k < 3; ++k) {
      const auto czk = controlled(zpow(k), ControlSpec::standard(n - 1), 3);
      worst = std::max(worst,
                       diff(controlled(zpow(-k), ControlSpec::standard(n - 1), 3),
                            r_on * czk * r_on.adjoint()));
    }
    r.add(tag("couplings.rx_conjugation_inverts_power", kv("n", n)), worst,
          o.tol);
  }

  // Hypergraph generators are diagonal and commute.
  Multihypergraph a(3, 3, Multihypergraph::Payload::multiplicity);
  a.add_edge({1, 2}, 1);
  a.add_edge({1, 2, 3}, 2);
  Multihypergraph b(3, 3, Multihypergraph::Payload::multiplicity);
  b.add_edge({2, 3}, 2);
  b.add_edge({1}, 1);
  const auto ga = hypergraph_hamiltonian(a, q);
  const auto gb = hypergraph_hamiltonian(b, q);
  r.add("couplings.hamiltonians_diagonal_commuting",
        std::max((ga * gb - gb * ga).cwiseAbs().maxCoeff(),
                 is_diagonal(ga) && is_diagonal(gb) ? 0.0 : 1.0),
        kPinned12);
  return r;
}

// ------------------------------------------------------------- circuits

SuiteReport circuits_suite(const VerifyOptions& o) {
  SuiteReport r{"circuits", {}};
  r.add("circuits.hard_ccz_q1",
        diff(compose(hard_ccz_decomposition(1)), hard_cz_target(1, 1)),
        kPinned12);
  r.add("circuits.hard_ccz_q2",
        diff(compose(hard_ccz_decomposition(2)), hard_cz_target(2, 2)),
        kPinned12);
  const auto ccz_seq = ccz_two_body();
  const auto ccz = compose(ccz_seq);
  r.add("circuits.ccz_two_body", diff(ccz, ccz_target(1)), kPinned12);
  r.add("circuits.ccz_two_body_gate_count",
        std::abs(static_cast<double>(ccz_seq.gates.size()) - 10.0), 0.0);

  const auto f = gate(GateName::dft());
  GateSequence ccx;
  ccx.then(CircuitGate::local("F", f, 2));
  ccx.then(ccz_seq);
  ccx.then(CircuitGate::local("Fdag", f.adjoint(), 2));
  const auto ccx_m = compose(ccx);
  r.add("circuits.dft_conjugated_ccx", diff(ccx_m, ccx_target(1)), o.tol);
  r.add("circuits.compose_unitary",
        std::max(unitarity_defect(ccz), unitarity_defect(ccx_m)), 1e-11);

  const SpinSystem q{2};
  const std::vector<int> c{2};
  const auto rx = embed(rotation(q, Axis::x, kPi, BasisOrder::logical), c, 3, 3);
  r.add("circuits.rx_conjugated_ccz_is_ccz2",
        diff(ccz_target(2), rx * ccz_target(1) * rx.adjoint()), o.tol);
  r.add("circuits.rx_conjugated_ccx_is_ccx2",
        diff(ccx_target(2), rx * ccx_target(1) * rx.adjoint()), o.tol);
  return r;
}

// ----------------------------------------------------------- hypergraph

Multihypergraph random_instance(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pick_d(0, 1);
  const int d = pick_d(rng) == 0 ? 3 : 5;
  std::uniform_int_distribution<int> pick_n(1, 4);
  const int n = pick_n(rng);
  Multihypergraph h(d, n, Multihypergraph::Payload::multiplicity);
  std::uniform_int_distribution<int> pick_edges(1, 6);
  std::uniform_int_distribution<int> pick_mask(1, (1 << n) - 1);
  std::uniform_int_distribution<int> pick_g(0, d - 1);
  const int edges = pick_edges(rng);
  for (int e = 0; e < edges; ++e) {
    const int mask = pick_mask(rng);
    std::vector<int> vs;
    for (int v = 0; v < n; ++v) {
      if (mask & (1 << v)) vs.push_back(v + 1);
    }
    h.add_edge(vs, pick_g(rng));
  }
  return h;
}

double state_diff(const StateVector& a, const StateVector& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

SuiteReport hypergraph_suite(const VerifyOptions& o) {
  SuiteReport r{"hypergraph", {}};
  std::mt19937_64 rng(0x5eed'2024'0917ULL);

  double paths = 0.0, order = 0.0;
  for (int i = 0; i < 50; ++i) {
    const auto h = random_instance(rng);
    const auto gates_path = hypergraph_state(h);
    paths = std::max(paths,
                     state_diff(gates_path, hypergraph_state_hamiltonian(
                                                h, SpinSystem::from_dim(h.dim()))));
    Multihypergraph rev(h.dim(), h.n_vertices(), h.payload());
    for (auto it = h.edges().rbegin(); it != h.edges().rend(); ++it) {
      rev.add_edge(it->vertices, it->multiplicity);
    }
    order = std::max(order, state_diff(gates_path, hypergraph_state(rev)));
    const auto w = h.to_weighted();
    Multihypergraph wrev(w.dim(), w.n_vertices(), w.payload());
    for (auto it = w.edges().rbegin(); it != w.edges().rend(); ++it) {
      wrev.add_weighted_edge(it->vertices, it->weight);
    }
    const auto s = SpinSystem::from_dim(h.dim());
    order = std::max(order, state_diff(am_hypergraph_state(w, s),
                                       am_hypergraph_state(wrev, s)));
  }
  r.add("hypergraph.gates_vs_hamiltonian[50 instances]", paths, o.tol);
  r.add("hypergraph.edge_order_invariance[50 instances]", order, kPinned13);

  const SpinSystem q{2};
  double slocc = 0.0;
  int done = 0;
  while (done < 20) {
    const auto h = random_instance(rng);
    if (h.dim() != 3 || h.n_vertices() > 3) continue;
    slocc = std::max(slocc, slocc_certificate(h, q).residual);
    ++done;
  }
  r.add("hypergraph.slocc_certificate[j=1,20 instances]", slocc, o.tol);

  double parity = 0.0;
  const auto rx = rotation(q, Axis::x, kPi);
  for (int n : {2, 3}) {
    std::vector<ComplexMatrix> rs(static_cast<std::size_t>(n), rx);
    const auto rall = kron_all(rs);
    for (int mask = 1; mask < (1 << n); ++mask) {
      std::vector<int> sites;
      for (int v = 0; v < n; ++v) {
        if (mask & (1 << v)) sites.push_back(v + 1);
      }
      const auto jze = many_body_jz(q, sites, n, BasisOrder::m_ordered);
      const double sign = sites.size() % 2 ? -1.0 : 1.0;
      parity = std::max(parity, diff(rall * jze * rall.adjoint(), sign * jze));
    }
  }
  r.add("hypergraph.rx_parity_symmetry", parity, kPinned12);

  const StateVector flipped = rotation(q, Axis::y, kPi) * x_plus_state(q);
  r.add("hypergraph.ry_maps_x_plus_to_x_minus",
        diff_up_to_phase(flipped, x_minus_state(q)), kPinned12);
  return r;
}

// -------------------------------------------------------------- optical

SuiteReport optical_suite(const VerifyOptions& o) {
  SuiteReport r{"optical", {}};
  const FockSpace one(3, 1);
  const auto f = gate(GateName::dft());
  r.add("optical.dft_network", diff(sequence_unitary(one, dft_network()), f),
        kPinned13);

  double locals = 0.0, local_leak = 0.0;
  const MultirailCodec c1(one);
  for (const char* name : {"Z", "X", "F", "T", "X12", "X01", "X02", "S(1,1,0)",
                           "S(1,2,0)", "S(1,0,1)", "S(1,0,2)", "S(2,0,0)"}) {
    const auto g = parse_gate_name(name);
    const auto dec = c1.decode(optical_local(g));
    locals = std::max(locals, diff_up_to_phase(dec.logical, gate(g)));
    local_leak = std::max(local_leak, dec.leakage);
  }
  r.add("optical.local_gates", locals, o.tol);
  r.add("optical.local_leakage", local_leak, kPinned13);

  const FockSpace two(6, 2);
  const MultirailCodec c2(two);
  double hard = 0.0, leak = 0.0;
  for (int level = 0; level < 3; ++level) {
    for (int k = 0; k < 3; ++k) {
      const auto dec = c2.decode(optical_hard_cz(0, level, 1, k, 2));
      hard = std::max(hard, diff(dec.logical,
                                 controlled(zpow(k), ControlSpec::hard(level), 3)));
      leak = std::max(leak, dec.leakage);
    }
  }
  r.add("optical.hard_cz", hard, kPinned12);
  double cz = 0.0;
  for (int k = 0; k < 3; ++k) {
    const auto dec = c2.decode(optical_cz(0, 1, k, 2));
    cz = std::max(cz, diff_up_to_phase(
                          dec.logical,
                          controlled(zpow(k), ControlSpec::standard(), 3)));
    leak = std::max(leak, dec.leakage);
  }
  r.add("optical.cz", cz, kOpticalTol);

  const FockSpace three(9, 3);
  const MultirailCodec c3(three);
  const auto ccz = c3.decode(optical_ccz());
  r.add("optical.ccz", diff_up_to_phase(ccz.logical, ccz_target(1)), kOpticalTol);
  leak = std::max(leak, ccz.leakage);
  r.add("optical.two_qutrit_and_ccz_leakage", leak, kPinned13);

  StateVector zero = StateVector::Zero(27);
  zero(0) = 1.0;
  const auto out =
      c3.decode(apply_sequence(three, optical_hypergraph3(), c3.encode(zero)));
  Multihypergraph h(3, 3, Multihypergraph::Payload::multiplicity);
  h.add_edge({1, 2, 3}, 1);
  r.add("optical.hypergraph3_infidelity",
        std::abs(1.0 - fidelity(out.logical, hypergraph_state(h))), kOpticalTol);
  r.add("optical.hypergraph3_leakage", out.leakage, kPinned13);

  StateVector rail0 = StateVector::Zero(3);
  rail0(0) = 1.0;
  const StateVector plus = StateVector::Constant(3, 1.0 / std::sqrt(3.0));
  r.add("optical.prepare_plus",
        state_diff(apply_sequence(one, prepare_plus(), rail0), plus), kPinned12);

  double js3 = 0.0;
  for (int n = 0; n <= 3; ++n) {
    const FockSpace fs(3, n);
    const auto j = jsm3(fs, 0, 1, 2);
    js3 = std::max({js3, diff(j.jx * j.jy - j.jy * j.jx, kI * j.jz),
                    diff(j.jy * j.jz - j.jz * j.jy, kI * j.jx),
                    diff(j.jz * j.jx - j.jx * j.jz, kI * j.jy)});
  }
  r.add("optical.jsm3_su2[N=0..3]", js3, kPinned12);
  const auto j1 = jsm3(one, 0, 1, 2);
  r.add("optical.jsm3_single_photon_is_spin1",
        std::max({diff(j1.jx, jl(2, Axis::x)), diff(j1.jy, jl(2, Axis::y)),
                  diff(j1.jz, jl(2, Axis::z))}),
        kPinned12);

  double js2 = 0.0;
  for (int n : {1, 2}) {
    const FockSpace fs(2, n);
    const auto j = jsm2(fs, 0, 1);
    const double half = 0.5 * n;
    js2 = std::max(js2, diff(j.jx * j.jx + j.jy * j.jy + j.jz * j.jz,
                             half * (half + 1.0) * identity(fs.size())));
  }
  r.add("optical.two_mode_casimir[N=1,2]", js2, kPinned12);
  return r;
}

// ------------------------------------------------------------ symmetric

SuiteReport symmetric_suite(const VerifyOptions&) {
  SuiteReport r{"symmetric", {}};
  for (auto [two_j, n] : {std::pair{2, 2}, std::pair{2, 3}, std::pair{3, 2}}) {
    const auto c = coupling_from_qubits(two_j, n);
    std::vector<ComplexMatrix> jzs(static_cast<std::size_t>(n),
                                   spin_ops(SpinSystem{two_j}).jz);
    const auto want = kron_all(jzs);
    const std::string p = kv("two_j", two_j) + "," + kv("n", n);
    r.add(tag("symmetric.compressed_coupling", p),
          diff(compress_symmetric(c.matrix, two_j, n), want), kPinned12);
    std::vector<ComplexMatrix> ps(static_cast<std::size_t>(n),
                                  symmetrizer(two_j));
    const auto proj = kron_all(ps);
    r.add(tag("symmetric.commutes_with_symmetrizer", p),
          (c.matrix * proj - proj * c.matrix).cwiseAbs().maxCoeff(), kPinned12);
    double ex = 0.0;
    for (double theta : {2.0 * kPi / 3.0, kPi}) {
      ex = std::max(
          ex, diff(compress_symmetric(expm_hermitian_phase(c.matrix, theta),
                                      two_j, n),
                   expm_hermitian_phase(want, theta)));
    }
    r.add(tag("symmetric.compressed_exponential", p), ex, 1e-11);
  }
  r.add("symmetric.term_count[two_j=2,n=3]",
        std::abs(static_cast<double>(coupling_from_qubits(2, 3).terms) - 8.0),
        0.0);
  return r;
}

using SuiteFn = SuiteReport (*)(const VerifyOptions&);

SuiteFn suite_fn(std::string_view name) {
  if (name == "local") return local_suite;
  if (name == "couplings") return couplings_suite;
  if (name == "circuits") return circuits_suite;
  if (name == "hypergraph") return hypergraph_suite;
  if (name == "optical") return optical_suite;
  if (name == "symmetric") return symmetric_suite;
  return nullptr;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{
      "local", "couplings", "circuits", "hypergraph", "optical", "symmetric"};
  return names;
}

SuiteReport run_suite(std::string_view name, const VerifyOptions& opts) {
  if (name == "all") {
    SuiteReport all{"all", {}};
    for (const auto& n : suite_names()) all.append(suite_fn(n)(opts));
    return all;
  }
  const SuiteFn fn = suite_fn(name);
  if (!fn) throw ContractError("unknown suite '" + std::string(name) + "'");
  return fn(opts);
}

std::string format_report(const SuiteReport& r) {
  std::ostringstream os;
  std::size_t passed = 0;
  char buf[64];
  for (const auto& c : r.checks) {
    os << (c.pass ? "PASS " : "FAIL ") << c.name;
    std::snprintf(buf, sizeof buf, " residual=%.3e tol=%.1e", c.residual + 0.0,
                  c.tolerance);
    os << buf << '\n';
    if (c.pass) ++passed;
  }
  os << "suite " << r.suite << ": " << (r.overall() ? "PASS" : "FAIL") << " ("
     << passed << '/' << r.checks.size() << " checks)\n";
  return os.str();
}

}  // namespace amkit
