#include "amkit/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "amkit/circuits.hpp"
#include "amkit/gates.hpp"
#include "amkit/hypergraph.hpp"
#include "amkit/optical.hpp"
#include "amkit/spin.hpp"
#include "amkit/verify.hpp"

namespace amkit::cli {

namespace {

/// Raised for bad input that CLI11 cannot see (missing files, bad names).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", x + 0.0);
  return buf;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Multihypergraph load_hypergraph(const std::string& path) {
  try {
    return parse_hypergraph(read_file(path));
  } catch (const ParseError& e) {
    throw UsageError(path + ": " + e.what());
  }
}

std::optional<double> parse_tol(std::string_view s) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || !(v > 0.0)) {
    return std::nullopt;
  }
  return v;
}

struct Options {
  // gate
  int dim = 3;
  std::string name;
  std::string basis = "logical";
  std::vector<int> params;
  // hypergraph / amstate
  std::string file;
  std::string method = "gates";
  // decompose
  std::string target;
  int q = 0;
  // optical
  bool show_sequence = false;
  // verify
  std::string suite;
  std::string tol;
};

int cmd_gate(const Options& o, std::ostream& out) {
  std::string label = o.name;
  if (!o.params.empty()) {
    label += "(";
    for (std::size_t i = 0; i < o.params.size(); ++i) {
      if (i) label += ",";
      label += std::to_string(o.params[i]);
    }
    label += ")";
  }
  ComplexMatrix u = local_gate(parse_gate_name(label), o.dim);
  if (o.basis == "m") {
    u = change_order(SpinSystem::from_dim(o.dim), u, BasisOrder::logical,
                     BasisOrder::m_ordered);
  }
  out << format_matrix(u);
  return kExitOk;
}

int cmd_hypergraph(const Options& o, std::ostream& out) {
  const auto h = load_hypergraph(o.file);
  if (h.payload() != Multihypergraph::Payload::multiplicity) {
    throw UsageError("hypergraph needs integer multiplicities (mult G)");
  }
  if (o.method == "gates") {
    out << format_state(hypergraph_state(h));
  } else if (o.method == "hamiltonian") {
    out << format_state(
        hypergraph_state_hamiltonian(h, SpinSystem::from_dim(h.dim())));
  } else {
    const auto a = hypergraph_state(h);
    const auto b = hypergraph_state_hamiltonian(h, SpinSystem::from_dim(h.dim()));
    out << format_state(a);
    out << "max_deviation " << sci((a - b).cwiseAbs().maxCoeff()) << '\n';
  }
  return kExitOk;
}

int cmd_amstate(const Options& o, std::ostream& out) {
  auto h = load_hypergraph(o.file);
  if (h.payload() == Multihypergraph::Payload::multiplicity) h = h.to_weighted();
  out << format_state(am_hypergraph_state(h, SpinSystem::from_dim(h.dim())));
  return kExitOk;
}

int cmd_decompose(const Options& o, std::ostream& out) {
  GateSequence seq;
  ComplexMatrix want;
  if (o.target == "ccz") {
    seq = ccz_two_body();
    want = ccz_target(1);
  } else {
    if (o.q != 1 && o.q != 2) throw UsageError("hard-ccz needs --q 1 or --q 2");
    seq = hard_ccz_decomposition(o.q);
    want = hard_cz_target(o.q, o.q);
  }
  const double residual = max_abs_diff(compose(seq), want);
  out << format_sequence(seq);
  out << "residual " << sci(residual) << '\n';
  return residual <= kExactTol ? kExitOk : kExitFailed;
}

int cmd_optical(const Options& o, std::ostream& out) {
  OpticalSequence seq;
  if (o.target == "dft") {
    seq = dft_network();
  } else if (o.target == "plus") {
    seq = prepare_plus();
  } else if (o.target == "ccz") {
    seq = optical_ccz();
  } else {
    seq = optical_hypergraph3();
  }
  if (o.show_sequence) out << format_optical_sequence(seq);

  const FockSpace f(seq.modes, seq.modes / 3);
  const MultirailCodec codec(f);
  double residual = 0.0;
  double leakage = 0.0;
  if (o.target == "dft" || o.target == "ccz") {
    const auto dec = codec.decode(seq);
    const ComplexMatrix want = o.target == "dft"
                                   ? local_gate(GateName::dft(), 3)
                                   : ccz_target(1);
    residual = approx_equal(dec.logical, want, kDefaultTol, true).residual;
    leakage = dec.leakage;
    out << format_matrix(dec.logical);
    out << "residual " << sci(residual) << '\n';
  } else {
    StateVector start = StateVector::Zero(codec.logical_dim());
    start(0) = 1.0;
    const auto dec =
        codec.decode(apply_sequence(f, seq, codec.encode(start)));
    leakage = dec.leakage;
    StateVector want;
    if (o.target == "plus") {
      want = StateVector::Constant(3, 1.0 / std::sqrt(3.0));
    } else {
      Multihypergraph h(3, 3, Multihypergraph::Payload::multiplicity);
      h.add_edge({1, 2, 3}, 1);
      want = hypergraph_state(h);
    }
    residual = std::abs(1.0 - fidelity(dec.logical, want));
    out << format_state(dec.logical);
    out << "infidelity " << sci(residual) << '\n';
  }
  out << "leakage " << sci(leakage) << '\n';
  const double tol = o.target == "dft" ? kExactTol : 1e-9;
  return residual <= tol && leakage <= 1e-13 ? kExitOk : kExitFailed;
}

int cmd_verify(const Options& o, std::ostream& out) {
  VerifyOptions vo;
  if (const char* env = std::getenv("AMKIT_TOL"); env && *env) {
    const auto t = parse_tol(env);
    if (!t) throw UsageError("AMKIT_TOL must be a positive number");
    vo.tol = *t;
  }
  if (!o.tol.empty()) {
    const auto t = parse_tol(o.tol);
    if (!t) throw UsageError("--tol must be a positive number");
    vo.tol = *t;
  }
  const auto report = run_suite(o.suite, vo);
  out << format_report(report);
  return report.overall() ? kExitOk : kExitFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Angular-momentum constructions of qudit gates and hypergraph states",
               "amkit"};
  app.require_subcommand(1);
  Options o;

  auto* gate = app.add_subcommand("gate", "Print the matrix of a local gate");
  gate->add_option("--dim", o.dim, "Qudit dimension")->required()
      ->check(CLI::Range(2, 64));
  gate->add_option("--name", o.name, "Z, X, F, T, T5, sqrtZ, Xmn, S(a,b,c)")
      ->required();
  gate->add_option("--basis", o.basis, "Row/column order")
      ->check(CLI::IsMember({"logical", "m"}));
  gate->add_option("--params", o.params, "S-gate parameters a b c")
      ->expected(1, 3);

  auto* hyper = app.add_subcommand("hypergraph", "Build a qudit hypergraph state");
  hyper->add_option("--file", o.file, "HGS file")->required();
  hyper->add_option("--method", o.method, "Construction path")
      ->check(CLI::IsMember({"gates", "hamiltonian", "both"}));

  auto* am = app.add_subcommand("amstate", "Build the angular-momentum hypergraph state");
  am->add_option("--file", o.file, "HGS file")->required();

  auto* dec = app.add_subcommand("decompose", "Two-qutrit decomposition of CCZ");
  dec->add_option("--target", o.target)->required()
      ->check(CLI::IsMember({"ccz", "hard-ccz"}));
  dec->add_option("--q", o.q, "Hard control level (hard-ccz)");

  auto* opt = app.add_subcommand("optical", "Simulate a multi-rail optical network");
  opt->add_option("--target", o.target)->required()
      ->check(CLI::IsMember({"dft", "ccz", "hypergraph3", "plus"}));
  opt->add_flag("--sequence", o.show_sequence, "Also print the element list");

  auto* ver = app.add_subcommand("verify", "Run invariant suites");
  std::vector<std::string> suites = suite_names();
  suites.push_back("all");
  ver->add_option("--suite", o.suite)->required()->check(CLI::IsMember(suites));
  ver->add_option("--tol", o.tol, "Default tolerance override");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (*gate) return cmd_gate(o, out);
    if (*hyper) return cmd_hypergraph(o, out);
    if (*am) return cmd_amstate(o, out);
    if (*dec) return cmd_decompose(o, out);
    if (*opt) return cmd_optical(o, out);
    if (*ver) return cmd_verify(o, out);
  } catch (const UsageError& e) {
    err << "amkit: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ContractError& e) {
    err << "amkit: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UnsupportedError& e) {
    err << "amkit: " << e.what() << '\n';
    return kExitUsage;
  } catch (const SizeError& e) {
    err << "amkit: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace amkit::cli
