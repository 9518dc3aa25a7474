// Acceptance run: one PASS/FAIL line per criterion, each followed by the
// individual measurements. Exit status is nonzero if any criterion fails.

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "amkit/circuits.hpp"
#include "amkit/cli.hpp"
#include "amkit/couplings.hpp"
#include "amkit/gates.hpp"
#include "amkit/hypergraph.hpp"
#include "amkit/optical.hpp"
#include "amkit/spin.hpp"
#include "amkit/symmetric.hpp"
#include "oracles.hpp"

using namespace amkit;

namespace {

const cplx kI{0.0, 1.0};

struct Line {
  std::string what;
  double value;
  double bound;
  bool at_least = false;  // value >= bound instead of value <= bound
  bool ok() const { return at_least ? value >= bound : value <= bound; }
};

struct Criterion {
  std::string id, title;
  std::vector<Line> lines;
  void le(std::string what, double v, double tol) { lines.push_back({std::move(what), v, tol}); }
  void ge(std::string what, double v, double lo) {
    lines.push_back({std::move(what), v, lo, true});
  }
  bool ok() const {
    return std::all_of(lines.begin(), lines.end(), [](const Line& l) { return l.ok(); });
  }
};

double d(const ComplexMatrix& a, const ComplexMatrix& b) { return oracle::maxdiff(a, b); }

double dp(const ComplexMatrix& a, const ComplexMatrix& b) {
  return approx_equal(a, b, kDefaultTol, true).residual;
}

ComplexMatrix zpow(int k, int dim = 3) {
  return oracle::power(oracle::clock(dim), static_cast<int>(mod(k, dim)));
}
ComplexMatrix xpow(int k, int dim = 3) {
  return oracle::power(oracle::shift(dim), static_cast<int>(mod(k, dim)));
}

Criterion ac1() {
  Criterion c{"AC1", "su(2) algebra, Casimir, rotation unitarity (two_j <= 8)", {}};
  double comm = 0, cas = 0, rot = 0;
  for (int two_j = 1; two_j <= 8; ++two_j) {
    const SpinSystem s{two_j};
    const auto o = spin_ops(s);
    comm = std::max({comm, d(o.jx * o.jy - o.jy * o.jx, kI * o.jz),
                     d(o.jy * o.jz - o.jz * o.jy, kI * o.jx),
                     d(o.jz * o.jx - o.jx * o.jz, kI * o.jy)});
    const ComplexMatrix j2 = o.jx * o.jx + o.jy * o.jy + o.jz * o.jz;
    cas = std::max(cas, d(j2, s.j() * (s.j() + 1) * identity(s.dim())));
    for (Axis a : {Axis::x, Axis::y, Axis::z}) {
      for (double t : {0.3, 1.9, 5.1}) rot = std::max(rot, unitarity_defect(rotation(s, a, t)));
    }
  }
  c.le("commutators", comm, 1e-12);
  c.le("casimir j(j+1)", cas, 1e-12);
  c.le("rotation unitarity", rot, 1e-12);
  return c;
}

Criterion ac2() {
  Criterion c{"AC2", "qutrit local-gate identities", {}};
  const SpinSystem q{2};
  const auto s = oracle::spin1_logical();
  const ComplexMatrix x12 = [] {
    ComplexMatrix m = ComplexMatrix::Zero(3, 3);
    m(0, 0) = m(1, 2) = m(2, 1) = 1.0;
    return m;
  }();
  c.le("R_z(2pi/3) = Z", d(rotation(q, Axis::z, 2 * kPi / 3, BasisOrder::logical),
                           oracle::clock(3)), 1e-10);
  const auto rx = approx_equal(rotation(q, Axis::x, kPi, BasisOrder::logical), x12,
                               1e-10, true);
  c.le("R_x(pi) = phase * X12", rx.residual, 1e-10);
  c.le("reported phase is -1", std::abs(rx.phase + 1.0), 1e-10);
  const auto theta = pegg_barnett(q);
  c.le("Theta_z from {J_y,J_x} and J_y",
       d(theta, std::sqrt(1.0 / 3) * (s.jy * s.jx + s.jx * s.jy) - std::sqrt(2.0 / 3) * s.jy),
       1e-10);
  const ComplexMatrix th2 = theta * theta;
  c.le("Theta_z^2 = I - ones/3", d(th2, identity(3) - ComplexMatrix::Ones(3, 3) / 3.0), 1e-10);
  c.le("S(1,1,0) = exp(-i2pi/3 J_z^2)",
       d(local_gate(GateName::s_shear(1), 3),
         oracle::expm_i(s.jz * s.jz, -2 * kPi / 3)), 1e-10);
  c.le("S(1,2,0) = exp(i2pi/3 J_z^2)",
       d(local_gate(GateName::s_shear(2), 3),
         oracle::expm_i(s.jz * s.jz, 2 * kPi / 3)), 1e-10);
  for (int xi : {1, 2}) {
    c.le("S(1,0," + std::to_string(xi) + ") = exp(i2pi xi/3 Theta_z^2)",
         d(local_gate(GateName::s_fourier_shear(xi), 3),
           oracle::expm_i(th2, 2 * kPi * xi / 3)), 1e-10);
  }
  c.le("S(2,0,0) = X12", d(local_gate(GateName::s_multiply(2), 3), x12), 1e-10);
  c.le("T = exp(i2pi/9 J_z)",
       d(local_gate(GateName::t_gate(), 3), oracle::expm_i(s.jz, 2 * kPi / 9)), 1e-10);
  return c;
}

Criterion ac3() {
  Criterion c{"AC3", "coupling <-> gate identities", {}};
  double odd = 0, even = 0, qubit = 0;
  for (int dim : {3, 5}) {
    for (int n : {2, 3}) {
      for (int k = 0; k < dim; ++k) {
        odd = std::max(odd, d(mc_phase_odd(SpinSystem::from_dim(dim), n, k),
                              oracle::standard_controlled(zpow(k, dim), dim, n - 1)));
      }
    }
  }
  for (int dim : {2, 4}) {
    for (int n : {2, 3}) {
      for (int k = 0; k < dim; ++k) {
        even = std::max(even, d(mc_phase_even(SpinSystem::from_dim(dim), n, k),
                                oracle::standard_controlled(zpow(k, dim), dim, n - 1)));
      }
    }
  }
  for (int n : {1, 2, 3}) qubit = std::max(qubit, d(qubit_mcz_formula(n), oracle::mc_phase(2, n, 1)));
  c.le("mc_phase_odd vs recursive controls", odd, 1e-12);
  c.le("mc_phase_even vs recursive controls", even, 1e-12);
  c.le("qubit formula i pi/2^n", qubit, 1e-12);

  // Literal reading: C(X^k) = exp(i 2k pi/3 J_z (x) Theta_z), up to phase.
  double literal = 0, inverse = 0;
  for (int k = 0; k < 3; ++k) {
    const auto u = controlled_phase_coupling(k);
    literal = std::max(literal, dp(u, oracle::standard_controlled(xpow(k), 3, 1)));
    inverse = std::max(inverse, d(u, oracle::standard_controlled(xpow(-k), 3, 1)));
  }
  c.le("C(X^k) = exp(i2k pi/3 J_z (x) Theta_z) [literal]", literal, 1e-10);
  c.le("C(X^-k) = exp(i2k pi/3 J_z (x) Theta_z)", inverse, 1e-10);

  const auto rx = rotation(SpinSystem{2}, Axis::x, kPi, BasisOrder::logical);
  double conj = 0;
  for (int n : {2, 3}) {
    const std::vector<int> last{n - 1};
    const auto r = embed(rx, last, n, 3);
    for (int k = 0; k < 3; ++k) {
      conj = std::max(conj, d(r * oracle::mc_phase(3, n, k) * r.adjoint(),
                              oracle::mc_phase(3, n, -k + 3)));
    }
  }
  c.le("R_x(pi) C^(n)Z^k R_x(pi)^dag = C^(n)Z^-k", conj, 1e-10);
  return c;
}

Criterion ac4() {
  Criterion c{"AC4", "circuit decompositions", {}};
  for (int q : {1, 2}) {
    ComplexMatrix want = identity(27);
    want.block(9 * q, 9 * q, 9, 9) = oracle::mc_phase(3, 2, q);
    c.le("|" + std::to_string(q) + ">-CZ^" + std::to_string(q) + " five gates",
         d(compose(hard_ccz_decomposition(q)), want), 1e-12);
  }
  const auto seq = ccz_two_body();
  c.le("ten-gate CCZ", d(compose(seq), oracle::mc_phase(3, 3, 1)), 1e-12);
  c.le("gate count - 10", std::abs(double(seq.gates.size()) - 10.0), 0.0);
  const auto f = oracle::dft(3);
  GateSequence ccx;
  ccx.then(CircuitGate::local("F", f, 2)).then(seq).then(CircuitGate::local("Fdag", f.adjoint(), 2));
  c.le("DFT-conjugated CCX", d(compose(ccx), oracle::standard_controlled(oracle::shift(3), 3, 2)),
       1e-10);
  return c;
}

Criterion ac5() {
  Criterion c{"AC5", "hypergraph states", {}};
  oracle::Gen g(7);
  double paths = 0, order = 0, oracle_gap = 0, slocc = 0;
  int slocc_cases = 0;
  for (int t = 0; t < 50; ++t) {
    const int dim = g.integer(0, 1) ? 3 : 5;
    const int n = g.integer(1, 4);
    std::vector<std::pair<std::vector<int>, int>> edges;
    const int ne = g.integer(1, 6);
    for (int e = 0; e < ne; ++e) edges.push_back({g.subset(n), g.integer(0, dim - 1)});
    Multihypergraph h(dim, n, Multihypergraph::Payload::multiplicity);
    Multihypergraph rev(dim, n, Multihypergraph::Payload::multiplicity);
    for (const auto& [vs, m] : edges) h.add_edge(vs, m);
    for (auto it = edges.rbegin(); it != edges.rend(); ++it) rev.add_edge(it->first, it->second);

    const auto gates = hypergraph_state(h);
    paths = std::max(paths, d(gates, hypergraph_state_hamiltonian(h, SpinSystem::from_dim(dim))));
    order = std::max(order, d(gates, hypergraph_state(rev)));
    std::vector<oracle::Edge> oe;
    for (const auto& [vs, m] : edges) oe.push_back({vs, m, 0.0});
    oracle_gap = std::max(oracle_gap, d(gates, oracle::hypergraph(dim, n, oe)));

    const auto s = SpinSystem::from_dim(dim);
    order = std::max(order, d(am_hypergraph_state(h.to_weighted(), s),
                              am_hypergraph_state(rev.to_weighted(), s)));
    if (dim == 3 && n <= 3) {
      slocc = std::max(slocc, slocc_certificate(h, s).residual);
      ++slocc_cases;
    }
  }
  c.le("gate path vs Hamiltonian path (50 instances)", paths, 1e-10);
  c.le("gate path vs enumeration oracle", oracle_gap, 1e-10);
  c.le("edge-order invariance", order, 1e-13);
  c.le("SLOCC certificate (j=1, n<=3, " + std::to_string(slocc_cases) + " cases)", slocc, 1e-10);
  return c;
}

Criterion ac6() {
  Criterion c{"AC6", "optical networks", {}};
  const FockSpace one(3, 1);
  c.le("F = U1 U2 U3 U4", d(sequence_unitary(one, dft_network()), oracle::dft(3)), 1e-13);

  const FockSpace two(6, 2);
  const MultirailCodec c2(two);
  double cz = 0, hard = 0, leak = 0;
  for (int k = 0; k < 3; ++k) {
    const auto dec = c2.decode(optical_cz(0, 1, k, 2));
    cz = std::max(cz, dp(dec.logical, oracle::mc_phase(3, 2, k)));
    leak = std::max(leak, dec.leakage);
    for (int level = 0; level < 3; ++level) {
      const auto h = c2.decode(optical_hard_cz(0, level, 1, k, 2));
      hard = std::max(hard, dp(h.logical, oracle::hard_controlled(zpow(k), 3, level)));
      leak = std::max(leak, h.leakage);
    }
  }
  const FockSpace three(9, 3);
  const MultirailCodec c3(three);
  const auto ccz = c3.decode(optical_ccz());
  leak = std::max(leak, ccz.leakage);
  c.le("decoded CZ^k", cz, 1e-9);
  c.le("decoded |q>-Z^k", hard, 1e-9);
  c.le("decoded CCZ", dp(ccz.logical, oracle::mc_phase(3, 3, 1)), 1e-9);

  StateVector zero = StateVector::Zero(27);
  zero(0) = 1.0;
  const auto out = c3.decode(apply_sequence(three, optical_hypergraph3(), c3.encode(zero)));
  leak = std::max(leak, out.leakage);
  c.le("leakage", leak, 1e-13);
  c.ge("hypergraph3 fidelity", fidelity(out.logical, oracle::hypergraph(3, 3, {{{1, 2, 3}, 1, 0.0}})),
       1 - 1e-9);

  double cas = 0;
  for (int n : {1, 2, 3, 4}) {
    const FockSpace f(2, n);
    const auto j = jsm2(f, 0, 1);
    const ComplexMatrix nn = (number_operator(f, 0) + number_operator(f, 1)) / 2.0;
    cas = std::max(cas, d(j.jx * j.jx + j.jy * j.jy + j.jz * j.jz,
                          nn * (nn + identity(f.size()))));
  }
  c.le("two-mode J^2 = (N/2)(N/2 + I)", cas, 1e-12);
  return c;
}

Criterion ac7() {
  Criterion c{"AC7", "symmetric-subspace reduction", {}};
  for (auto [two_j, n] : {std::pair{2, 2}, std::pair{2, 3}, std::pair{3, 2}}) {
    const auto q = coupling_from_qubits(two_j, n);
    const auto jz = oracle::spin_m_ordered(two_j).jz;
    ComplexMatrix want = jz;
    for (int i = 1; i < n; ++i) want = oracle::kron(want, jz);
    c.le("compressed coupling two_j=" + std::to_string(two_j) + " n=" + std::to_string(n),
         d(compress_symmetric(q.matrix, two_j, n), want), 1e-12);
  }
  c.le("(2,3) term count - 8", std::abs(double(coupling_from_qubits(2, 3).terms) - 8.0), 0.0);
  return c;
}

Criterion ac8() {
  Criterion c{"AC8", "CLI determinism", {}};
  std::ostringstream o1, e1, o2, e2;
  const int r1 = cli::run({"verify", "--suite", "all"}, o1, e1);
  const int r2 = cli::run({"verify", "--suite", "all"}, o2, e2);
  c.le("exit code run 1", r1, 0);
  c.le("exit code run 2", r2, 0);
  c.le("byte mismatch", o1.str() == o2.str() && e1.str() == e2.str() ? 0.0 : 1.0, 0.0);
  c.ge("output bytes", static_cast<double>(o1.str().size()), 1.0);
  return c;
}

}  // namespace

int main() {
  const std::vector<Criterion> all{ac1(), ac2(), ac3(), ac4(), ac5(), ac6(), ac7(), ac8()};
  bool ok = true;
  for (const auto& c : all) {
    std::printf("%s %s: %s\n", c.ok() ? "PASS" : "FAIL", c.id.c_str(), c.title.c_str());
    for (const auto& l : c.lines) {
      std::printf("    %s %s: %.3e %s %.1e\n", l.ok() ? "ok  " : "FAIL", l.what.c_str(),
                  l.value + 0.0, l.at_least ? ">=" : "<=", l.bound);
    }
    ok = ok && c.ok();
  }
  return ok ? 0 : 1;
}
