#pragma once

// Fixed-photon-number Fock simulator for multi-rail qutrits: phase shifters,
// beam splitters and cross-Kerr couplings, plus the decoder back to logical
// qutrit operators.

#include <cstddef>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "amkit/circuits.hpp"
#include "amkit/gates.hpp"
#include "amkit/linalg.hpp"

namespace amkit {

using Occupation = std::vector<int>;

struct OccupationHash {
  std::size_t operator()(const Occupation& n) const noexcept;
};

/// All occupations of `modes` modes holding `photons` photons, in
/// decreasing lexicographic order.
class FockSpace {
 public:
  static constexpr std::size_t kDefaultCap = 20000;

  FockSpace(int modes, int photons, std::size_t cap = kDefaultCap);

  int modes() const { return modes_; }
  int photons() const { return photons_; }
  Eigen::Index size() const { return static_cast<Eigen::Index>(basis_.size()); }
  const Occupation& at(Eigen::Index i) const {
    return basis_[static_cast<std::size_t>(i)];
  }
  /// -1 when `n` is not in the space.
  Eigen::Index index_of(const Occupation& n) const;

 private:
  int modes_;
  int photons_;
  std::vector<Occupation> basis_;
  std::unordered_map<Occupation, Eigen::Index, OccupationHash> index_;
};

/// a_i^dagger a_i
ComplexMatrix number_operator(const FockSpace& f, int i);

/// The two Hermitian generators built from A = a_i^dagger a_j:
/// real = A + A^dagger, imag = i (A - A^dagger).
struct HoppingPair {
  ComplexMatrix real, imag;
};
HoppingPair hopping_generators(const FockSpace& f, int i, int j);

struct OpticalElement {
  enum class Kind { phase_shift, beam_splitter, cross_kerr };

  Kind kind = Kind::phase_shift;
  int i = 0;
  int j = -1;        // unused by phase_shift
  double theta = 0;  // accumulated phase s for cross_kerr
  double phi = 0;    // beam_splitter only

  static OpticalElement ps(int mode, double theta);
  static OpticalElement bs(int i, int j, double theta, double phi);
  static OpticalElement ck(int i, int j, double s);

  OpticalElement dagger() const;
};

/// phase_shift: exp(-i theta n_i)
/// beam_splitter: exp(-i theta (e^{i phi} a_i^dag a_j + h.c.))
/// cross_kerr: exp(-i s n_i n_j)
ComplexMatrix element_unitary(const FockSpace& f, const OpticalElement& e);

/// Elements in circuit order (first acts first).
struct OpticalSequence {
  int modes = 3;
  std::vector<OpticalElement> elements;

  OpticalSequence& then(const OpticalSequence& other);
  OpticalSequence& then(const OpticalElement& e);
  /// Reversed sequence of inverted elements.
  OpticalSequence dagger() const;
  /// Relabels mode m as mapping[m] in a register of `new_modes` modes.
  OpticalSequence remap(const std::vector<int>& mapping, int new_modes) const;
  /// Moves a 3-mode sequence onto subsystem `nu` (modes 3nu..3nu+2).
  OpticalSequence on_subsystem(int nu, int n_subsystems) const;
};

ComplexMatrix sequence_unitary(const FockSpace& f, const OpticalSequence& seq);
/// Applies the sequence to a Fock-space state without forming its matrix.
StateVector apply_sequence(const FockSpace& f, const OpticalSequence& seq,
                           const StateVector& psi);

struct JordanSchwinger {
  ComplexMatrix jx, jy, jz;
};

/// J_x = (a0^dag (a1 + a2) + h.c.)/sqrt2, J_y = i (a0^dag (a1 - a2) - h.c.)/sqrt2,
/// J_z = n1 - n2 on the three listed modes.
JordanSchwinger jsm3(const FockSpace& f, int m0, int m1, int m2);

/// J_x = (a_i^dag a_j + h.c.)/2, J_y = (a_i^dag a_j - h.c.)/(2i),
/// J_z = (n_i - n_j)/2.
JordanSchwinger jsm2(const FockSpace& f, int i, int j);

/// U1 = balanced splitter on rails 1,2; U2 = 3pi/2 phase on rail 2;
/// U3 = magic-angle splitter on rails 0,1; U4 = U1 after a pi phase on rail 1.
OpticalElement dft_u1();
OpticalElement dft_u2();
OpticalElement dft_u3();
OpticalSequence dft_u4();

/// Three-mode network whose single-photon matrix is the qutrit DFT.
OpticalSequence dft_network();

/// U1 U3: rail-0 photon to the uniform superposition over rails.
OpticalSequence prepare_plus();

/// One photon per subsystem, logical level q sitting in rail q.
class MultirailCodec {
 public:
  /// Subsystem nu uses modes 3nu..3nu+2 of `f`.
  explicit MultirailCodec(const FockSpace& f);

  int n_subsystems() const { return n_; }
  Eigen::Index logical_dim() const { return logical_dim_; }
  /// Fock index of each logical basis state.
  const std::vector<Eigen::Index>& sector() const { return sector_; }

  StateVector encode(const StateVector& logical) const;

  struct DecodedState {
    StateVector logical;
    double leakage = 0.0;
  };
  DecodedState decode(const StateVector& fock) const;

  struct DecodedOperator {
    ComplexMatrix logical;
    double leakage = 0.0;  // worst column
  };
  DecodedOperator decode(const ComplexMatrix& fock_op) const;
  /// Runs the sequence on every encoded basis state.
  DecodedOperator decode(const OpticalSequence& seq) const;

 private:
  const FockSpace* f_;
  int n_;
  Eigen::Index logical_dim_;
  std::vector<Eigen::Index> sector_;
};

/// Element sequence for a qutrit gate on a single 3-mode subsystem.
/// Supported: Z, X, F, T, X12, S(1,xi,0), S(1,0,xi), S(xi,0,0).
OpticalSequence optical_local(const GateName& gate);
OpticalSequence optical_z_power(int k);
OpticalSequence optical_x_power(int k);

/// |level> - Z^k with control rail (control, level) and target subsystem.
OpticalSequence optical_hard_cz(int control, int level, int target, int k,
                                int n_subsystems);
/// Standard CZ^k from control subsystem to target subsystem.
OpticalSequence optical_cz(int control, int target, int k, int n_subsystems);

/// Maps a qutrit circuit onto cross-Kerr pairs and local networks.
OpticalSequence to_optical(const GateSequence& seq);
OpticalSequence optical_ccz();

/// prepare_plus on each of three subsystems followed by optical_ccz.
OpticalSequence optical_hypergraph3();

/// One element per line: `ps MODE THETA`, `bs I J THETA PHI`, `ck I J S`.
std::string format_optical_sequence(const OpticalSequence& seq);
/// Inverse of format_optical_sequence. `#` starts a comment. `modes` of 0
/// means one more than the largest mode index used.
OpticalSequence parse_optical_sequence(std::string_view text, int modes = 0);

}  // namespace amkit
