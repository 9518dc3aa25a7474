#include "amkit/optical.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <functional>
#include <sstream>

namespace amkit {

namespace {

constexpr double kTwoPi = 2.0 * kPi;

double wrap_angle(double x) {
  double r = std::fmod(x, kTwoPi);
  if (r < 0) r += kTwoPi;
  return r;
}

/// Phase angle theta with exp(-i theta) = omega^k, reduced to [0, 2pi).
double z_angle(int k) { return wrap_angle(-kTwoPi * static_cast<double>(k) / 3.0); }

void check_mode(int m, int modes) {
  if (m < 0 || m >= modes) {
    throw ContractError("mode " + std::to_string(m) + " outside 0.." +
                        std::to_string(modes - 1));
  }
}

void check_element(const OpticalElement& e, int modes) {
  check_mode(e.i, modes);
  if (e.kind != OpticalElement::Kind::phase_shift) {
    check_mode(e.j, modes);
    if (e.i == e.j) throw ContractError("two-mode element on a single mode");
  }
}

ComplexMatrix hopping(const FockSpace& f, int i, int j) {
  check_mode(i, f.modes());
  check_mode(j, f.modes());
  if (i == j) throw ContractError("hopping needs two distinct modes");
  ComplexMatrix a = ComplexMatrix::Zero(f.size(), f.size());
  for (Eigen::Index c = 0; c < f.size(); ++c) {
    Occupation n = f.at(c);
    if (n[static_cast<std::size_t>(j)] == 0) continue;
    const double amp = std::sqrt(
        static_cast<double>((n[static_cast<std::size_t>(i)] + 1) *
                            n[static_cast<std::size_t>(j)]));
    --n[static_cast<std::size_t>(j)];
    ++n[static_cast<std::size_t>(i)];
    a(f.index_of(n), c) = amp;
  }
  return a;
}

std::vector<double> occupations_of(const FockSpace& f, int mode) {
  std::vector<double> v(static_cast<std::size_t>(f.size()));
  for (Eigen::Index c = 0; c < f.size(); ++c) {
    v[static_cast<std::size_t>(c)] = f.at(c)[static_cast<std::size_t>(mode)];
  }
  return v;
}

/// Diagonal of a phase shift or cross-Kerr element.
Eigen::VectorXcd diagonal_phases(const FockSpace& f, const OpticalElement& e) {
  const auto ni = occupations_of(f, e.i);
  std::vector<double> nj;
  if (e.kind == OpticalElement::Kind::cross_kerr) nj = occupations_of(f, e.j);
  Eigen::VectorXcd out(f.size());
  for (Eigen::Index c = 0; c < f.size(); ++c) {
    const auto k = static_cast<std::size_t>(c);
    const double n = e.kind == OpticalElement::Kind::cross_kerr ? ni[k] * nj[k]
                                                                : ni[k];
    out(c) = n == 0 ? cplx{1.0, 0.0} : std::polar(1.0, -e.theta * n);
  }
  return out;
}

std::size_t binomial_capped(int n, int k, std::size_t cap) {
  std::size_t r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * static_cast<std::size_t>(n - k + i) / static_cast<std::size_t>(i);
    if (r > cap) return cap + 1;
  }
  return r;
}

}  // namespace

std::size_t OccupationHash::operator()(const Occupation& n) const noexcept {
  std::size_t h = 0;
  for (int x : n) h = h * 131 + static_cast<std::size_t>(x) + 1;
  return h;
}

FockSpace::FockSpace(int modes, int photons, std::size_t cap)
    : modes_(modes), photons_(photons) {
  if (modes < 1) throw ContractError("FockSpace needs at least one mode");
  if (photons < 0) throw ContractError("FockSpace photon count is negative");
  const std::size_t size = binomial_capped(modes + photons - 1, photons, cap);
  if (size > cap) {
    throw SizeError("Fock basis for " + std::to_string(modes) + " modes and " +
                    std::to_string(photons) + " photons exceeds cap " +
                    std::to_string(cap));
  }
  basis_.reserve(size);
  Occupation cur(static_cast<std::size_t>(modes), 0);
  std::function<void(int, int)> fill = [&](int mode, int left) {
    if (mode == modes - 1) {
      cur[static_cast<std::size_t>(mode)] = left;
      basis_.push_back(cur);
      return;
    }
    for (int n = left; n >= 0; --n) {
      cur[static_cast<std::size_t>(mode)] = n;
      fill(mode + 1, left - n);
    }
  };
  fill(0, photons);
  index_.reserve(basis_.size());
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    index_.emplace(basis_[i], static_cast<Eigen::Index>(i));
  }
}

Eigen::Index FockSpace::index_of(const Occupation& n) const {
  const auto it = index_.find(n);
  return it == index_.end() ? -1 : it->second;
}

ComplexMatrix number_operator(const FockSpace& f, int i) {
  check_mode(i, f.modes());
  ComplexMatrix n = ComplexMatrix::Zero(f.size(), f.size());
  for (Eigen::Index c = 0; c < f.size(); ++c) {
    n(c, c) = f.at(c)[static_cast<std::size_t>(i)];
  }
  return n;
}

HoppingPair hopping_generators(const FockSpace& f, int i, int j) {
  const ComplexMatrix a = hopping(f, i, j);
  const cplx I{0.0, 1.0};
  return {a + a.adjoint(), I * (a - a.adjoint())};
}

OpticalElement OpticalElement::ps(int mode, double theta) {
  return {Kind::phase_shift, mode, -1, theta, 0.0};
}

OpticalElement OpticalElement::bs(int i, int j, double theta, double phi) {
  return {Kind::beam_splitter, i, j, theta, phi};
}

OpticalElement OpticalElement::ck(int i, int j, double s) {
  return {Kind::cross_kerr, i, j, s, 0.0};
}

OpticalElement OpticalElement::dagger() const {
  OpticalElement e = *this;
  e.theta = -theta;
  return e;
}

ComplexMatrix element_unitary(const FockSpace& f, const OpticalElement& e) {
  check_element(e, f.modes());
  if (e.kind == OpticalElement::Kind::beam_splitter) {
    const auto g = hopping_generators(f, e.i, e.j);
    return expm_hermitian_phase(
        std::cos(e.phi) * g.real + std::sin(e.phi) * g.imag, -e.theta);
  }
  return diagonal_phases(f, e).asDiagonal();
}

OpticalSequence& OpticalSequence::then(const OpticalSequence& other) {
  if (other.modes != modes) {
    throw ContractError("optical sequences act on different mode counts");
  }
  elements.insert(elements.end(), other.elements.begin(), other.elements.end());
  return *this;
}

OpticalSequence& OpticalSequence::then(const OpticalElement& e) {
  check_element(e, modes);
  elements.push_back(e);
  return *this;
}

OpticalSequence OpticalSequence::dagger() const {
  OpticalSequence out{modes, {}};
  for (auto it = elements.rbegin(); it != elements.rend(); ++it) {
    out.elements.push_back(it->dagger());
  }
  return out;
}

OpticalSequence OpticalSequence::remap(const std::vector<int>& mapping,
                                       int new_modes) const {
  if (static_cast<int>(mapping.size()) != modes) {
    throw ContractError("remap: mapping size differs from mode count");
  }
  OpticalSequence out{new_modes, {}};
  for (OpticalElement e : elements) {
    e.i = mapping[static_cast<std::size_t>(e.i)];
    if (e.kind != OpticalElement::Kind::phase_shift) {
      e.j = mapping[static_cast<std::size_t>(e.j)];
    }
    out.then(e);
  }
  return out;
}

OpticalSequence OpticalSequence::on_subsystem(int nu, int n_subsystems) const {
  if (modes != 3) throw ContractError("on_subsystem needs a 3-mode sequence");
  if (nu < 0 || nu >= n_subsystems) {
    throw ContractError("subsystem index out of range");
  }
  return remap({3 * nu, 3 * nu + 1, 3 * nu + 2}, 3 * n_subsystems);
}

ComplexMatrix sequence_unitary(const FockSpace& f, const OpticalSequence& seq) {
  if (seq.modes != f.modes()) {
    throw ContractError("sequence and Fock space disagree on mode count");
  }
  ComplexMatrix u = identity(f.size());
  for (const auto& e : seq.elements) {
    if (e.kind == OpticalElement::Kind::beam_splitter) {
      u = element_unitary(f, e) * u;
    } else {
      check_element(e, f.modes());
      u = diagonal_phases(f, e).asDiagonal() * u;
    }
  }
  return u;
}

StateVector apply_sequence(const FockSpace& f, const OpticalSequence& seq,
                           const StateVector& psi) {
  if (psi.size() != f.size()) {
    throw ContractError("state dimension differs from Fock space size");
  }
  if (seq.modes != f.modes()) {
    throw ContractError("sequence and Fock space disagree on mode count");
  }
  StateVector out = psi;
  for (const auto& e : seq.elements) {
    if (e.kind == OpticalElement::Kind::beam_splitter) {
      out = element_unitary(f, e) * out;
    } else {
      check_element(e, f.modes());
      out = diagonal_phases(f, e).cwiseProduct(out);
    }
  }
  return out;
}

JordanSchwinger jsm3(const FockSpace& f, int m0, int m1, int m2) {
  if (m0 == m1 || m1 == m2 || m0 == m2) {
    throw ContractError("jsm3 needs three distinct modes");
  }
  const ComplexMatrix a01 = hopping(f, m0, m1);
  const ComplexMatrix a02 = hopping(f, m0, m2);
  const double r = 1.0 / std::sqrt(2.0);
  const cplx I{0.0, 1.0};
  const ComplexMatrix sum = a01 + a02;
  const ComplexMatrix diff = a01 - a02;
  return {r * (sum + sum.adjoint()), (I * r) * (diff - diff.adjoint()),
          number_operator(f, m1) - number_operator(f, m2)};
}

JordanSchwinger jsm2(const FockSpace& f, int i, int j) {
  const ComplexMatrix a = hopping(f, i, j);
  const cplx I{0.0, 1.0};
  return {0.5 * (a + a.adjoint()), (-0.5 * I) * (a - a.adjoint()),
          0.5 * (number_operator(f, i) - number_operator(f, j))};
}

OpticalElement dft_u1() { return OpticalElement::bs(1, 2, kPi / 4, -kPi / 2); }
OpticalElement dft_u2() { return OpticalElement::ps(2, 1.5 * kPi); }
OpticalElement dft_u3() {
  return OpticalElement::bs(0, 1, std::atan(std::sqrt(2.0)), -kPi / 2);
}

OpticalSequence dft_u4() {
  OpticalSequence s;
  s.then(OpticalElement::ps(1, kPi)).then(dft_u1());
  return s;
}

OpticalSequence dft_network() {
  // F = U1 U2 U3 U4, so U4 acts first.
  OpticalSequence s = dft_u4();
  s.then(dft_u3()).then(dft_u2()).then(dft_u1());
  return s;
}

OpticalSequence prepare_plus() {
  OpticalSequence s;
  s.then(dft_u3()).then(dft_u1());
  return s;
}

MultirailCodec::MultirailCodec(const FockSpace& f) : f_(&f) {
  if (f.modes() != 3 * f.photons() || f.photons() < 1) {
    throw ContractError("multi-rail codec needs 3 modes per photon");
  }
  n_ = f.photons();
  logical_dim_ = 1;
  for (int i = 0; i < n_; ++i) logical_dim_ *= 3;
  sector_.resize(static_cast<std::size_t>(logical_dim_));
  for (Eigen::Index x = 0; x < logical_dim_; ++x) {
    Occupation occ(static_cast<std::size_t>(f.modes()), 0);
    Eigen::Index rest = x;
    for (int nu = n_ - 1; nu >= 0; --nu) {
      occ[static_cast<std::size_t>(3 * nu + rest % 3)] = 1;
      rest /= 3;
    }
    sector_[static_cast<std::size_t>(x)] = f.index_of(occ);
  }
}

StateVector MultirailCodec::encode(const StateVector& logical) const {
  if (logical.size() != logical_dim_) {
    throw ContractError("encode: logical state has wrong dimension");
  }
  StateVector out = StateVector::Zero(f_->size());
  for (Eigen::Index x = 0; x < logical_dim_; ++x) {
    out(sector_[static_cast<std::size_t>(x)]) = logical(x);
  }
  return out;
}

MultirailCodec::DecodedState MultirailCodec::decode(
    const StateVector& fock) const {
  if (fock.size() != f_->size()) {
    throw ContractError("decode: Fock state has wrong dimension");
  }
  DecodedState out;
  out.logical.resize(logical_dim_);
  for (Eigen::Index x = 0; x < logical_dim_; ++x) {
    out.logical(x) = fock(sector_[static_cast<std::size_t>(x)]);
  }
  const double inside = out.logical.squaredNorm();
  out.leakage = std::abs(fock.squaredNorm() - inside);
  if (inside > 0) out.logical /= std::sqrt(inside);
  return out;
}

MultirailCodec::DecodedOperator MultirailCodec::decode(
    const ComplexMatrix& fock_op) const {
  if (fock_op.rows() != f_->size() || fock_op.cols() != f_->size()) {
    throw ContractError("decode: operator has wrong dimension");
  }
  DecodedOperator out;
  out.logical.resize(logical_dim_, logical_dim_);
  for (Eigen::Index c = 0; c < logical_dim_; ++c) {
    const Eigen::Index fc = sector_[static_cast<std::size_t>(c)];
    for (Eigen::Index r = 0; r < logical_dim_; ++r) {
      out.logical(r, c) = fock_op(sector_[static_cast<std::size_t>(r)], fc);
    }
    const double lost = std::abs(fock_op.col(fc).squaredNorm() -
                                 out.logical.col(c).squaredNorm());
    out.leakage = std::max(out.leakage, lost);
  }
  return out;
}

MultirailCodec::DecodedOperator MultirailCodec::decode(
    const OpticalSequence& seq) const {
  ComplexMatrix block = ComplexMatrix::Zero(f_->size(), logical_dim_);
  for (Eigen::Index c = 0; c < logical_dim_; ++c) {
    block(sector_[static_cast<std::size_t>(c)], c) = 1.0;
  }
  if (seq.modes != f_->modes()) {
    throw ContractError("sequence and Fock space disagree on mode count");
  }
  for (const auto& e : seq.elements) {
    if (e.kind == OpticalElement::Kind::beam_splitter) {
      block = element_unitary(*f_, e) * block;
    } else {
      check_element(e, f_->modes());
      block = diagonal_phases(*f_, e).asDiagonal() * block;
    }
  }
  DecodedOperator out;
  out.logical.resize(logical_dim_, logical_dim_);
  for (Eigen::Index c = 0; c < logical_dim_; ++c) {
    for (Eigen::Index r = 0; r < logical_dim_; ++r) {
      out.logical(r, c) = block(sector_[static_cast<std::size_t>(r)], c);
    }
    const double lost =
        std::abs(block.col(c).squaredNorm() - out.logical.col(c).squaredNorm());
    out.leakage = std::max(out.leakage, lost);
  }
  return out;
}

OpticalSequence optical_z_power(int k) {
  OpticalSequence s;
  const int r = static_cast<int>(mod(k, 3));
  if (r == 0) return s;
  s.then(OpticalElement::ps(1, z_angle(r)));
  s.then(OpticalElement::ps(2, z_angle(2 * r)));
  return s;
}

OpticalSequence optical_x_power(int k) {
  // F^dagger Z^k F = X^k
  OpticalSequence s;
  if (mod(k, 3) == 0) return s;
  const OpticalSequence f = dft_network();
  s.then(f).then(optical_z_power(k)).then(f.dagger());
  return s;
}

namespace {

/// S(1,xi,0) = diag(1, w^{2xi}, w^{2xi}) for d = 3.
OpticalSequence shear_sequence(int xi) {
  OpticalSequence s;
  const int r = static_cast<int>(mod(xi, 3));
  if (r == 0) return s;
  s.then(OpticalElement::ps(1, z_angle(2 * r)));
  s.then(OpticalElement::ps(2, z_angle(2 * r)));
  return s;
}

/// exp(-i pi J_x) on rails 1,2 relative to rail 0, then the collective pi
/// phase: swaps rails 1 and 2.
OpticalSequence swap12_sequence() {
  OpticalSequence s;
  s.then(dft_u1().dagger());
  s.then(OpticalElement::bs(0, 1, -kPi, 0.0));
  s.then(dft_u1());
  for (int m = 0; m < 3; ++m) s.then(OpticalElement::ps(m, kPi));
  return s;
}

OpticalSequence sandwich(const OpticalSequence& outer,
                         const OpticalSequence& inner) {
  OpticalSequence s = outer;
  s.then(inner).then(outer.dagger());
  return s;
}

}  // namespace

OpticalSequence optical_local(const GateName& gate) {
  using K = GateName::Kind;
  switch (gate.kind) {
    case K::z:
      return optical_z_power(1);
    case K::x:
      return optical_x_power(1);
    case K::dft:
      return dft_network();
    case K::t: {
      OpticalSequence s;
      s.then(OpticalElement::ps(1, 16.0 * kPi / 9.0));
      s.then(OpticalElement::ps(2, 2.0 * kPi / 9.0));
      return s;
    }
    case K::s_shear:
      return shear_sequence(gate.xi);
    case K::s_fourier_shear:
      // S(1,0,xi) = F S(1,-xi,0) F^dagger
      return sandwich(dft_network().dagger(), shear_sequence(-gate.xi));
    case K::s_multiply: {
      const int r = static_cast<int>(mod(gate.xi, 3));
      if (r == 0) throw ContractError("S(0,0,0) is not invertible");
      return r == 1 ? OpticalSequence{} : swap12_sequence();
    }
    case K::xmn: {
      const int lo = std::min(gate.m, gate.n), hi = std::max(gate.m, gate.n);
      if (lo == 1 && hi == 2) return swap12_sequence();
      if (lo == 0 && hi == 1) {
        return sandwich(optical_x_power(1), swap12_sequence());
      }
      if (lo == 0 && hi == 2) {
        return sandwich(optical_x_power(2), swap12_sequence());
      }
      throw ContractError("X_mn needs two distinct levels in 0..2");
    }
    default:
      break;
  }
  throw UnsupportedError("no optical network for gate " + gate_label(gate));
}

OpticalSequence optical_hard_cz(int control, int level, int target, int k,
                                int n_subsystems) {
  if (control == target) throw ContractError("control and target coincide");
  if (level < 0 || level > 2) throw ContractError("control level outside 0..2");
  for (int s : {control, target}) {
    if (s < 0 || s >= n_subsystems) {
      throw ContractError("subsystem index out of range");
    }
  }
  OpticalSequence s{3 * n_subsystems, {}};
  const int r = static_cast<int>(mod(k, 3));
  if (r == 0) return s;
  const int rail = 3 * control + level;
  s.then(OpticalElement::ck(rail, 3 * target + 1, z_angle(r)));
  s.then(OpticalElement::ck(rail, 3 * target + 2, z_angle(2 * r)));
  return s;
}

OpticalSequence optical_cz(int control, int target, int k, int n_subsystems) {
  if (control == target) throw ContractError("control and target coincide");
  OpticalSequence s{3 * n_subsystems, {}};
  const int r = static_cast<int>(mod(k, 3));
  if (r == 0) return s;
  for (int b = 1; b <= 2; ++b) {
    for (int a = 1; a <= 2; ++a) {
      s.then(OpticalElement::ck(3 * control + a, 3 * target + b,
                                z_angle(r * a * b)));
    }
  }
  return s;
}

OpticalSequence to_optical(const GateSequence& seq) {
  if (seq.d != 3) throw UnsupportedError("optical circuits are qutrit only");
  const int n = seq.n_sites;
  OpticalSequence out{3 * n, {}};
  for (const auto& g : seq.gates) {
    switch (g.kind) {
      case CircuitGate::Kind::hard_z:
        out.then(optical_hard_cz(g.control, g.level, g.target, g.power, n));
        break;
      case CircuitGate::Kind::hard_x: {
        const OpticalSequence f = dft_network().on_subsystem(g.target, n);
        out.then(f)
            .then(optical_hard_cz(g.control, g.level, g.target, g.power, n))
            .then(f.dagger());
        break;
      }
      case CircuitGate::Kind::local: {
        const GateName name = parse_gate_name(g.label);
        const auto check = approx_equal(local_gate(name, 3), g.matrix,
                                        kDefaultTol, true);
        if (!check.equal) {
          throw ContractError("local gate " + g.label +
                              " does not match its name");
        }
        out.then(optical_local(name).on_subsystem(g.target, n));
        break;
      }
    }
  }
  return out;
}

OpticalSequence optical_ccz() { return to_optical(ccz_two_body()); }

OpticalSequence optical_hypergraph3() {
  OpticalSequence s{9, {}};
  for (int nu = 0; nu < 3; ++nu) s.then(prepare_plus().on_subsystem(nu, 3));
  s.then(optical_ccz());
  return s;
}

std::string format_optical_sequence(const OpticalSequence& seq) {
  std::ostringstream os;
  for (const auto& e : seq.elements) {
    switch (e.kind) {
      case OpticalElement::Kind::phase_shift:
        os << "ps " << e.i << ' ' << format_real(e.theta);
        break;
      case OpticalElement::Kind::beam_splitter:
        os << "bs " << e.i << ' ' << e.j << ' ' << format_real(e.theta) << ' '
           << format_real(e.phi);
        break;
      case OpticalElement::Kind::cross_kerr:
        os << "ck " << e.i << ' ' << e.j << ' ' << format_real(e.theta);
        break;
    }
    os << '\n';
  }
  return os.str();
}

namespace {

template <typename T>
T parse_number(const std::string& tok, std::size_t line) {
  T value{};
  const char* end = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(tok.data(), end, value);
  if (ec != std::errc{} || ptr != end) {
    throw ParseError(line, "bad number '" + tok + "'");
  }
  return value;
}

}  // namespace

OpticalSequence parse_optical_sequence(std::string_view text, int modes) {
  std::vector<OpticalElement> elems;
  std::vector<std::size_t> lines;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line = 0;
  int max_mode = -1;
  while (std::getline(in, raw)) {
    ++line;
    if (const auto hash = raw.find('#'); hash != std::string::npos) {
      raw.erase(hash);
    }
    std::istringstream ls(raw);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    auto want = [&](std::size_t n) {
      if (tok.size() != n) {
        throw ParseError(line, "'" + tok[0] + "' takes " +
                                   std::to_string(n - 1) + " arguments");
      }
    };
    OpticalElement e;
    if (tok[0] == "ps") {
      want(3);
      e = OpticalElement::ps(parse_number<int>(tok[1], line),
                             parse_number<double>(tok[2], line));
    } else if (tok[0] == "bs") {
      want(5);
      e = OpticalElement::bs(parse_number<int>(tok[1], line),
                             parse_number<int>(tok[2], line),
                             parse_number<double>(tok[3], line),
                             parse_number<double>(tok[4], line));
    } else if (tok[0] == "ck") {
      want(4);
      e = OpticalElement::ck(parse_number<int>(tok[1], line),
                             parse_number<int>(tok[2], line),
                             parse_number<double>(tok[3], line));
    } else {
      throw ParseError(line, "unknown element '" + tok[0] + "'");
    }
    if (e.i < 0 || (e.kind != OpticalElement::Kind::phase_shift && e.j < 0)) {
      throw ParseError(line, "negative mode index");
    }
    if (e.kind != OpticalElement::Kind::phase_shift && e.i == e.j) {
      throw ParseError(line, "two-mode element on a single mode");
    }
    max_mode = std::max({max_mode, e.i, e.j});
    elems.push_back(e);
    lines.push_back(line);
  }
  OpticalSequence seq{modes > 0 ? modes : std::max(max_mode + 1, 1), {}};
  for (std::size_t k = 0; k < elems.size(); ++k) {
    const auto& e = elems[k];
    if (e.i >= seq.modes || e.j >= seq.modes) {
      throw ParseError(lines[k], "mode index beyond " +
                                     std::to_string(seq.modes - 1));
    }
    seq.elements.push_back(e);
  }
  return seq;
}

}  // namespace amkit
