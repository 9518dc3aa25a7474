#include "amkit/hypergraph.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <charconv>
#include <cmath>
#include <optional>
#include <sstream>

#include "amkit/couplings.hpp"
#include "amkit/gates.hpp"

namespace amkit {

Multihypergraph::Multihypergraph(int d, int n_vertices, Payload payload)
    : d_(d), n_vertices_(n_vertices), payload_(payload) {
  if (d < 2) throw ContractError("hypergraph dimension must be >= 2");
  if (n_vertices < 1) throw ContractError("hypergraph needs >= 1 vertex");
}

Multihypergraph::Edge& Multihypergraph::slot_for(std::vector<int> vertices) {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  if (vertices.empty()) throw ContractError("edge needs at least one vertex");
  for (int v : vertices) {
    if (v < 1 || v > n_vertices_) {
      throw ContractError("vertex " + std::to_string(v) + " outside 1.." +
                          std::to_string(n_vertices_));
    }
  }
  for (auto& e : edges_) {
    if (e.vertices == vertices) return e;
  }
  edges_.push_back(Edge{std::move(vertices), 0, 0.0});
  return edges_.back();
}

void Multihypergraph::add_edge(std::vector<int> vertices, int multiplicity) {
  if (payload_ != Payload::multiplicity) {
    throw ContractError("cannot add a multiplicity edge to a weighted hypergraph");
  }
  if (multiplicity < 0 || multiplicity >= d_) {
    throw ContractError("multiplicity must lie in 0.." + std::to_string(d_ - 1));
  }
  auto& e = slot_for(std::move(vertices));
  e.multiplicity = static_cast<int>(mod(e.multiplicity + multiplicity, d_));
}

void Multihypergraph::add_weighted_edge(std::vector<int> vertices,
                                        double weight) {
  if (payload_ != Payload::weight) {
    throw ContractError("cannot add a weighted edge to a multiplicity hypergraph");
  }
  if (!std::isfinite(weight)) throw ContractError("edge weight must be finite");
  slot_for(std::move(vertices)).weight += weight;
}

Multihypergraph Multihypergraph::to_weighted() const {
  if (payload_ != Payload::multiplicity) return *this;
  Multihypergraph out(d_, n_vertices_, Payload::weight);
  for (const auto& e : edges_) {
    double phi = std::fmod(-2.0 * kPi * e.multiplicity / d_, 2.0 * kPi);
    if (phi < 0) phi += 2.0 * kPi;
    out.add_weighted_edge(e.vertices, phi);
  }
  return out;
}

namespace {

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::optional<long long> to_int(std::string_view t) {
  long long v = 0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc{} || ptr != t.data() + t.size()) return std::nullopt;
  return v;
}

std::optional<double> to_real(std::string_view t) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc{} || ptr != t.data() + t.size() || !std::isfinite(v)) {
    return std::nullopt;
  }
  return v;
}

struct PendingEdge {
  std::size_t line;
  std::vector<int> vertices;
  bool weighted;
  long long mult;
  double weight;
};

}  // namespace

Multihypergraph parse_hypergraph(std::string_view text) {
  std::optional<int> dim, vertices;
  std::vector<PendingEdge> edges;
  std::optional<bool> weighted;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos
                                                 ? std::string_view::npos
                                                 : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    const auto tok = split_tokens(line);
    if (tok.empty()) continue;

    if (tok[0] == "dim" || tok[0] == "vertices") {
      auto& slot = tok[0] == "dim" ? dim : vertices;
      if (slot) throw ParseError(line_no, "duplicate '" + std::string(tok[0]) + "'");
      if (!edges.empty()) {
        throw ParseError(line_no, "'" + std::string(tok[0]) + "' must precede all edges");
      }
      if (tok.size() != 2) throw ParseError(line_no, "expected one integer");
      const auto v = to_int(tok[1]);
      const long long lo = tok[0] == "dim" ? 2 : 1;
      if (!v || *v < lo || *v > 1 << 20) {
        throw ParseError(line_no, "invalid value '" + std::string(tok[1]) + "'");
      }
      slot = static_cast<int>(*v);
    } else if (tok[0] == "edge") {
      if (!dim || !vertices) {
        throw ParseError(line_no, "'dim' and 'vertices' must precede edges");
      }
      if (tok.size() < 4) {
        throw ParseError(line_no, "edge needs vertices and a mult/weight payload");
      }
      const auto kind = tok[tok.size() - 2];
      if (kind != "mult" && kind != "weight") {
        throw ParseError(line_no, "edge payload must be 'mult G' or 'weight PHI'");
      }
      PendingEdge e{line_no, {}, kind == "weight", 0, 0.0};
      for (std::size_t i = 1; i + 2 < tok.size(); ++i) {
        const auto v = to_int(tok[i]);
        if (!v) throw ParseError(line_no, "bad vertex '" + std::string(tok[i]) + "'");
        if (*v < 1 || *v > *vertices) {
          throw ParseError(line_no, "vertex " + std::string(tok[i]) +
                                        " out of range 1.." + std::to_string(*vertices));
        }
        e.vertices.push_back(static_cast<int>(*v));
      }
      if (weighted && *weighted != e.weighted) {
        throw ParseError(line_no, "mixed mult and weight payloads");
      }
      weighted = e.weighted;
      if (e.weighted) {
        const auto w = to_real(tok.back());
        if (!w) throw ParseError(line_no, "bad weight '" + std::string(tok.back()) + "'");
        e.weight = *w;
      } else {
        const auto g = to_int(tok.back());
        if (!g) throw ParseError(line_no, "bad multiplicity '" + std::string(tok.back()) + "'");
        if (*g < 0 || *g >= *dim) {
          throw ParseError(line_no, "multiplicity " + std::string(tok.back()) +
                                        " not in 0.." + std::to_string(*dim - 1));
        }
        e.mult = *g;
      }
      edges.push_back(std::move(e));
    } else {
      throw ParseError(line_no, "unknown directive '" + std::string(tok[0]) + "'");
    }
  }
  if (!dim) throw ParseError(line_no, "missing 'dim'");
  if (!vertices) throw ParseError(line_no, "missing 'vertices'");

  Multihypergraph h(*dim, *vertices,
                    weighted.value_or(false) ? Multihypergraph::Payload::weight
                                             : Multihypergraph::Payload::multiplicity);
  for (auto& e : edges) {
    if (e.weighted) {
      h.add_weighted_edge(std::move(e.vertices), e.weight);
    } else {
      h.add_edge(std::move(e.vertices), static_cast<int>(e.mult));
    }
  }
  return h;
}

std::string format_hypergraph(const Multihypergraph& h) {
  std::ostringstream os;
  os << "dim " << h.dim() << "\nvertices " << h.n_vertices() << '\n';
  const bool weighted = h.payload() == Multihypergraph::Payload::weight;
  for (const auto& e : h.edges()) {
    os << "edge";
    for (int v : e.vertices) os << ' ' << v;
    if (weighted) {
      os << " weight " << format_real(e.weight) << '\n';
    } else {
      os << " mult " << e.multiplicity << '\n';
    }
  }
  return os.str();
}

namespace {

StateVector uniform_product(int d, int n) {
  const StateVector plus =
      StateVector::Constant(d, cplx(1.0 / std::sqrt(static_cast<double>(d)), 0.0));
  std::vector<StateVector> factors(static_cast<std::size_t>(n), plus);
  return kron_all(factors);
}

void require_multiplicities(const Multihypergraph& h, const char* what) {
  if (h.payload() != Multihypergraph::Payload::multiplicity) {
    throw ContractError(std::string(what) + " needs integer multiplicities");
  }
}

}  // namespace

StateVector hypergraph_state(const Multihypergraph& h) {
  require_multiplicities(h, "hypergraph_state");
  const int d = h.dim();
  const int n = h.n_vertices();
  StateVector psi = uniform_product(d, n);
  const ComplexMatrix z = local_gate(GateName::clock(), d);
  for (const auto& e : h.edges()) {
    if (e.multiplicity == 0) continue;
    const ComplexMatrix zg = matrix_power(z, e.multiplicity);
    const int arity = static_cast<int>(e.vertices.size()) - 1;
    const ComplexMatrix gate =
        arity == 0 ? zg : controlled(zg, ControlSpec::standard(arity), d);
    std::vector<int> sites;
    for (int v : e.vertices) sites.push_back(v - 1);
    psi = embed(gate, sites, n, d) * psi;
  }
  return psi;
}

StateVector hypergraph_state_hamiltonian(const Multihypergraph& h,
                                         SpinSystem s) {
  require_multiplicities(h, "hypergraph_state_hamiltonian");
  if (!s.integer()) {
    throw UnsupportedError(
        "hypergraph_state_hamiltonian is restricted to odd d");
  }
  const ComplexMatrix g = hypergraph_hamiltonian(h, s);
  return expm_hermitian_phase(g, 2.0 * kPi / s.dim()) *
         uniform_product(s.dim(), h.n_vertices());
}

StateVector am_hypergraph_state(const Multihypergraph& h, SpinSystem s) {
  if (h.payload() != Multihypergraph::Payload::weight) {
    throw ContractError("am_hypergraph_state needs weighted edges");
  }
  if (s.dim() != h.dim()) {
    throw ContractError("am_hypergraph_state: spin dimension differs from "
                        "hypergraph dimension");
  }
  const int n = h.n_vertices();
  Eigen::Index dim = 1;
  for (int i = 0; i < n; ++i) dim *= s.dim();
  ComplexMatrix generator = ComplexMatrix::Zero(dim, dim);
  for (const auto& e : h.edges()) {
    if (e.weight == 0.0) continue;
    generator += e.weight * many_body_jz(s, e.vertices, n, BasisOrder::m_ordered);
  }
  std::vector<StateVector> factors(static_cast<std::size_t>(n), x_plus_state(s));
  return expm_hermitian_phase(generator, -1.0) * kron_all(factors);
}

ComplexMatrix slocc_operator(SpinSystem s) {
  const StateVector c = x_plus_state(s);
  const double scale = std::sqrt(static_cast<double>(s.dim()));
  ComplexMatrix a = ComplexMatrix::Zero(s.dim(), s.dim());
  for (int i = 0; i < s.dim(); ++i) a(i, i) = scale * c(i);
  return a;
}

SloccCertificate slocc_certificate(const Multihypergraph& h, SpinSystem s) {
  require_multiplicities(h, "slocc_certificate");
  if (!s.integer()) throw UnsupportedError("slocc_certificate needs odd d");
  if (s.dim() != h.dim()) {
    throw ContractError("slocc_certificate: spin dimension differs from "
                        "hypergraph dimension");
  }
  const int n = h.n_vertices();
  SloccCertificate cert;
  cert.local_ops.assign(static_cast<std::size_t>(n), slocc_operator(s));
  const StateVector graph_state = change_order(
      s, hypergraph_state(h), n, BasisOrder::logical, BasisOrder::m_ordered);
  const StateVector mapped = kron_all(cert.local_ops) * graph_state;
  const StateVector target = am_hypergraph_state(h.to_weighted(), s);
  const auto cmp = approx_equal(mapped, target, kDefaultTol, true);
  cert.phase = cmp.phase;
  cert.residual = cmp.residual;
  return cert;
}

}  // namespace amkit
