#include <sstream>
#include <string>
#include <vector>

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "amkit/circuits.hpp"
#include "amkit/cli.hpp"
#include "amkit/couplings.hpp"
#include "amkit/gates.hpp"
#include "amkit/hypergraph.hpp"
#include "amkit/optical.hpp"
#include "amkit/spin.hpp"
#include "amkit/symmetric.hpp"
#include "amkit/verify.hpp"

namespace py = pybind11;
using namespace amkit;

namespace {

BasisOrder order_from(const std::string& basis) {
  if (basis == "logical") return BasisOrder::logical;
  if (basis == "m") return BasisOrder::m_ordered;
  throw py::value_error("basis must be 'logical' or 'm'");
}

ControlSpec spec_from(const std::string& kind, int level, int arity) {
  if (kind == "standard") return ControlSpec::standard(arity);
  if (kind == "hard") return ControlSpec::hard(level, arity);
  throw py::value_error("kind must be 'standard' or 'hard'");
}

py::dict decoded(const MultirailCodec::DecodedOperator& d) {
  py::dict out;
  out["matrix"] = d.logical;
  out["leakage"] = d.leakage;
  return out;
}

}  // namespace

PYBIND11_MODULE(_amkit, m) {
  m.doc() = "Qudit gates, couplings, hypergraph states and optical networks";

  py::register_exception<ContractError>(m, "ContractError", PyExc_ValueError);
  py::register_exception<UnsupportedError>(m, "UnsupportedError",
                                           PyExc_ValueError);
  py::register_exception<SizeError>(m, "SizeError", PyExc_MemoryError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  m.def(
      "local_gate",
      [](const std::string& name, int d, const std::string& basis) {
        ComplexMatrix u = local_gate(parse_gate_name(name), d);
        if (basis == "m") {
          u = change_order(SpinSystem::from_dim(d), u, BasisOrder::logical,
                           BasisOrder::m_ordered);
        } else {
          order_from(basis);
        }
        return u;
      },
      py::arg("name"), py::arg("d"), py::arg("basis") = "logical");

  m.def(
      "controlled",
      [](const ComplexMatrix& u, int d, const std::string& kind, int level,
         int arity) { return controlled(u, spec_from(kind, level, arity), d); },
      py::arg("u"), py::arg("d"), py::arg("kind") = "standard",
      py::arg("level") = 0, py::arg("arity") = 1);

  m.def(
      "spin_ops",
      [](int two_j, const std::string& basis) {
        const SpinSystem s{two_j};
        const auto o = order_from(basis);
        py::dict out;
        out["jx"] = spin_component(s, Axis::x, o);
        out["jy"] = spin_component(s, Axis::y, o);
        out["jz"] = spin_component(s, Axis::z, o);
        return out;
      },
      py::arg("two_j"), py::arg("basis") = "m");

  m.def(
      "pegg_barnett", [](int d) { return pegg_barnett(SpinSystem::from_dim(d)); },
      py::arg("d"));

  m.def(
      "mc_phase",
      [](int d, int n, int k) {
        const auto s = SpinSystem::from_dim(d);
        return s.integer() ? mc_phase_odd(s, n, k) : mc_phase_even(s, n, k);
      },
      py::arg("d"), py::arg("n"), py::arg("k"),
      "exp of the many-body J_z coupling; equals C^(n-1) Z^k");

  py::class_<Multihypergraph>(m, "Multihypergraph")
      .def_property_readonly("dim", &Multihypergraph::dim)
      .def_property_readonly("n_vertices", &Multihypergraph::n_vertices)
      .def_property_readonly("weighted",
                             [](const Multihypergraph& h) {
                               return h.payload() ==
                                      Multihypergraph::Payload::weight;
                             })
      .def_property_readonly(
          "edges",
          [](const Multihypergraph& h) {
            py::list out;
            for (const auto& e : h.edges()) {
              if (h.payload() == Multihypergraph::Payload::weight) {
                out.append(py::make_tuple(e.vertices, e.weight));
              } else {
                out.append(py::make_tuple(e.vertices, e.multiplicity));
              }
            }
            return out;
          })
      .def("to_weighted", &Multihypergraph::to_weighted)
      .def("to_text", &format_hypergraph);

  m.def("parse_hypergraph", &parse_hypergraph, py::arg("text"));
  m.def("hypergraph_state", &hypergraph_state, py::arg("h"));
  m.def(
      "hypergraph_state_hamiltonian",
      [](const Multihypergraph& h) {
        return hypergraph_state_hamiltonian(h, SpinSystem::from_dim(h.dim()));
      },
      py::arg("h"));
  m.def(
      "am_hypergraph_state",
      [](const Multihypergraph& h) {
        return am_hypergraph_state(h, SpinSystem::from_dim(h.dim()));
      },
      py::arg("h"));
  m.def(
      "slocc_certificate",
      [](const Multihypergraph& h) {
        return slocc_certificate(h, SpinSystem::from_dim(h.dim())).residual;
      },
      py::arg("h"), "Residual of (x)A_v |H> against |J_H>");

  m.def("ccz_two_body", [] { return compose(ccz_two_body()); });
  m.def(
      "hard_ccz_decomposition",
      [](int q) {
        const auto seq = hard_ccz_decomposition(q);
        std::vector<std::string> labels;
        for (const auto& g : seq.gates) labels.push_back(g.describe());
        return py::make_tuple(labels, compose(seq));
      },
      py::arg("q"));
  m.def("ccz_target", &ccz_target, py::arg("k") = 1);
  m.def("hard_cz_target", &hard_cz_target, py::arg("q"), py::arg("k"));

  m.def("dft_network", [] {
    const FockSpace f(3, 1);
    return py::make_tuple(format_optical_sequence(dft_network()),
                          sequence_unitary(f, dft_network()));
  });
  m.def("optical_ccz", [] {
    const FockSpace f(9, 3);
    return decoded(MultirailCodec(f).decode(optical_ccz()));
  });
  m.def("optical_hypergraph3", [] {
    const FockSpace f(9, 3);
    const MultirailCodec codec(f);
    StateVector zero = StateVector::Zero(27);
    zero(0) = 1.0;
    const auto out =
        codec.decode(apply_sequence(f, optical_hypergraph3(), codec.encode(zero)));
    return py::make_tuple(out.logical, out.leakage);
  });

  m.def("dicke_isometry", &dicke_isometry, py::arg("two_j"));
  m.def(
      "coupling_from_qubits",
      [](int two_j, int n) {
        const auto c = coupling_from_qubits(two_j, n);
        return py::make_tuple(c.matrix, c.terms);
      },
      py::arg("two_j"), py::arg("n"));
  m.def("compress_symmetric", &compress_symmetric, py::arg("op"),
        py::arg("two_j"), py::arg("n"));

  m.def(
      "run_suite",
      [](const std::string& name, double tol) {
        const auto r = run_suite(name, VerifyOptions{tol});
        return py::make_tuple(r.overall(), format_report(r));
      },
      py::arg("name"), py::arg("tol") = kDefaultTol);

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Runs one amkit command; returns (exit, stdout, stderr)");
}
