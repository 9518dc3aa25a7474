#include "amkit/circuits.hpp"

#include <array>
#include <sstream>

#include "amkit/gates.hpp"

namespace amkit {

namespace {

char site_name(int s) {
  return s >= 0 && s < 26 ? static_cast<char>('a' + s) : '?';
}

std::string power_suffix(int p) {
  return p == 1 ? "" : "^" + std::to_string(p);
}

}  // namespace

CircuitGate CircuitGate::hard_z(int level, int control, int target, int power) {
  CircuitGate g;
  g.kind = Kind::hard_z;
  g.level = level;
  g.control = control;
  g.target = target;
  g.power = power;
  return g;
}

CircuitGate CircuitGate::hard_x(int level, int control, int target, int power) {
  CircuitGate g = hard_z(level, control, target, power);
  g.kind = Kind::hard_x;
  return g;
}

CircuitGate CircuitGate::local(std::string label, ComplexMatrix u, int target) {
  CircuitGate g;
  g.kind = Kind::local;
  g.label = std::move(label);
  g.matrix = std::move(u);
  g.target = target;
  return g;
}

std::string CircuitGate::describe() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::hard_z:
    case Kind::hard_x:
      os << '|' << level << '_' << site_name(control) << ">-"
         << (kind == Kind::hard_z ? 'Z' : 'X') << power_suffix(power) << '_'
         << site_name(target);
      break;
    case Kind::local:
      os << label << '_' << site_name(target);
      break;
  }
  return os.str();
}

GateSequence& GateSequence::then(const GateSequence& other) {
  if (other.n_sites != n_sites || other.d != d) {
    throw ContractError("GateSequence: register mismatch");
  }
  gates.insert(gates.end(), other.gates.begin(), other.gates.end());
  return *this;
}

GateSequence& GateSequence::then(CircuitGate g) {
  gates.push_back(std::move(g));
  return *this;
}

GateSequence hard_ccz_decomposition(int q) {
  constexpr int a = 0, b = 1, c = 2;
  using G = CircuitGate;
  GateSequence seq;
  if (q == 1) {
    seq.gates = {G::hard_z(1, a, c, 2), G::hard_x(1, a, b, 1),
                 G::hard_z(1, b, c, 1), G::hard_x(1, a, b, 2),
                 G::hard_z(1, b, c, 2)};
  } else if (q == 2) {
    seq.gates = {G::hard_z(2, a, c, 1), G::hard_x(2, a, b, 1),
                 G::hard_z(1, b, c, 2), G::hard_x(2, a, b, 2),
                 G::hard_z(1, b, c, 1)};
  } else {
    throw UnsupportedError("hard_ccz_decomposition: q must be 1 or 2");
  }
  return seq;
}

GateSequence ccz_two_body() {
  GateSequence seq = hard_ccz_decomposition(1);
  seq.then(hard_ccz_decomposition(2));
  return seq;
}

ComplexMatrix gate_matrix(const CircuitGate& g, int n_sites, int d) {
  auto in_range = [&](int s) { return s >= 0 && s < n_sites; };
  if (!in_range(g.target)) throw ContractError("gate target outside register");
  if (g.kind == CircuitGate::Kind::local) {
    if (g.matrix.rows() != d || g.matrix.cols() != d) {
      throw ContractError("local gate " + g.label + " is not " +
                          std::to_string(d) + "x" + std::to_string(d));
    }
    require_unitary(g.matrix, g.label);
    const std::array<int, 1> sites{g.target};
    return embed(g.matrix, sites, n_sites, d);
  }
  if (!in_range(g.control) || g.control == g.target) {
    throw ContractError("hard gate control/target mismatch");
  }
  if (g.power < 0) throw ContractError("gate power must be >= 0");
  const auto base = local_gate(g.kind == CircuitGate::Kind::hard_z
                                   ? GateName::clock()
                                   : GateName::shift(),
                               d);
  const ComplexMatrix two_site =
      controlled(matrix_power(base, g.power), ControlSpec::hard(g.level), d);
  const std::array<int, 2> sites{g.control, g.target};
  return embed(two_site, sites, n_sites, d);
}

ComplexMatrix compose(const GateSequence& seq) {
  Eigen::Index dim = 1;
  for (int i = 0; i < seq.n_sites; ++i) dim *= seq.d;
  ComplexMatrix out = identity(dim);
  for (const auto& g : seq.gates) {
    out = gate_matrix(g, seq.n_sites, seq.d) * out;
  }
  return out;
}

std::string format_sequence(const GateSequence& seq) {
  std::ostringstream os;
  for (std::size_t i = 0; i < seq.gates.size(); ++i) {
    os << i + 1 << ' ' << seq.gates[i].describe() << '\n';
  }
  return os.str();
}

ComplexMatrix ccz_target(int k) {
  const auto z = local_gate(GateName::clock(), 3);
  return controlled(matrix_power(z, static_cast<int>(mod(k, 3))),
                    ControlSpec::standard(2), 3);
}

ComplexMatrix ccx_target(int k) {
  const auto x = local_gate(GateName::shift(), 3);
  return controlled(matrix_power(x, static_cast<int>(mod(k, 3))),
                    ControlSpec::standard(2), 3);
}

ComplexMatrix hard_cz_target(int q, int k) {
  const auto z = local_gate(GateName::clock(), 3);
  const ComplexMatrix cz =
      controlled(matrix_power(z, static_cast<int>(mod(k, 3))),
                 ControlSpec::standard(1), 3);
  // (I - |q><q|) (x) I_9 + |q><q| (x) CZ^k
  ComplexMatrix out = identity(27);
  out.block(9 * q, 9 * q, 9, 9) = cz;
  return out;
}

}  // namespace amkit
