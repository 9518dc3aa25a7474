#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "amkit/linalg.hpp"
#include "amkit/spin.hpp"

namespace amkit {

/// Multi-hypergraph on vertices 1..n_vertices. Every edge carries either an
/// integer multiplicity in Z_d or a real weight in radians; one instance never
/// mixes the two.
class Multihypergraph {
 public:
  enum class Payload { multiplicity, weight };

  struct Edge {
    std::vector<int> vertices;  // 1-based, sorted, unique
    int multiplicity = 0;
    double weight = 0.0;
  };

  Multihypergraph(int d, int n_vertices, Payload payload);

  /// Adds an edge; vertices are sorted and deduplicated, and an edge on an
  /// existing vertex set is merged into it (multiplicities add mod d).
  void add_edge(std::vector<int> vertices, int multiplicity);
  void add_weighted_edge(std::vector<int> vertices, double weight);

  int dim() const { return d_; }
  int n_vertices() const { return n_vertices_; }
  Payload payload() const { return payload_; }
  const std::vector<Edge>& edges() const { return edges_; }

  /// Same vertex sets with weights phi_e = -2 pi g_e / d (mod 2 pi).
  Multihypergraph to_weighted() const;

 private:
  Edge& slot_for(std::vector<int> vertices);

  int d_;
  int n_vertices_;
  Payload payload_;
  std::vector<Edge> edges_;
};

/// Parses the HGS text format: `dim D`, `vertices N`, then
/// `edge v1 v2 ... mult G` or `edge v1 v2 ... weight PHI` lines. `#` starts a
/// comment. Errors carry the offending line number.
Multihypergraph parse_hypergraph(std::string_view text);
std::string format_hypergraph(const Multihypergraph& h);

/// prod_e C^(e) Z^{g_e} |+>^V using the recursive controlled gates.
StateVector hypergraph_state(const Multihypergraph& h);

/// exp(i 2pi/d G_H) |+>^V in logical order (odd d).
StateVector hypergraph_state_hamiltonian(const Multihypergraph& h,
                                         SpinSystem s);

/// exp(-i sum_e phi_e J_z^(e)) |x+>^V, m-ordered.
StateVector am_hypergraph_state(const Multihypergraph& h, SpinSystem s);

/// diag(sqrt(d) c_m) with c_m the |x+> amplitudes, m-ordered. Maps the
/// uniform state onto |x+>.
ComplexMatrix slocc_operator(SpinSystem s);

struct SloccCertificate {
  std::vector<ComplexMatrix> local_ops;  // one A_v per vertex, m-ordered
  cplx phase{1.0, 0.0};
  double residual = 0.0;
};

/// Applies (x)_v A_v to |H> (re-expressed in m order) and compares with
/// |J_H> of the weighted counterpart; max-norm residual after aligning the
/// global phase.
SloccCertificate slocc_certificate(const Multihypergraph& h, SpinSystem s);

}  // namespace amkit
