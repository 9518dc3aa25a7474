#include "amkit/gates.hpp"

#include <cctype>
#include <cmath>
#include <charconv>
#include <numeric>
#include <vector>

#include "amkit/spin.hpp"

namespace amkit {

int mod_inverse(int a, int d) {
  const int r = static_cast<int>(mod(a, d));
  for (int x = 1; x < d; ++x) {
    if (mod(static_cast<long long>(r) * x, d) == 1) return x;
  }
  if (d == 1) return 0;
  throw ContractError(std::to_string(a) + " is not invertible mod " +
                      std::to_string(d));
}

namespace {

void require_dim(int d) {
  if (d < 2) throw ContractError("local_gate: dimension must be >= 2");
}

ComplexMatrix diagonal_phases(int d, auto&& exponent_of) {
  ComplexMatrix m = ComplexMatrix::Zero(d, d);
  for (int q = 0; q < d; ++q) m(q, q) = root_of_unity(d, exponent_of(q));
  return m;
}

ComplexMatrix dft_matrix(int d) {
  ComplexMatrix f(d, d);
  const double norm = 1.0 / std::sqrt(static_cast<double>(d));
  for (int row = 0; row < d; ++row) {
    for (int col = 0; col < d; ++col) {
      f(row, col) = norm * root_of_unity(d, static_cast<long long>(row) * col);
    }
  }
  return f;
}

// 2^{-1} mod d, only defined for odd d.
int half(int d) {
  if (d % 2 == 0) {
    throw UnsupportedError("q^2/2 exponents need odd d");
  }
  return mod_inverse(2, d);
}

}  // namespace

ComplexMatrix local_gate(const GateName& g, int d) {
  require_dim(d);
  using K = GateName::Kind;
  switch (g.kind) {
    case K::z:
      return diagonal_phases(d, [](int q) { return q; });
    case K::x: {
      ComplexMatrix m = ComplexMatrix::Zero(d, d);
      for (int q = 0; q < d; ++q) m((q + 1) % d, q) = 1.0;
      return m;
    }
    case K::dft:
      return dft_matrix(d);
    case K::s_multiply: {
      if (std::gcd(static_cast<int>(mod(g.xi, d)), d) != 1) {
        throw ContractError("S(xi,0,0): xi must be invertible mod d");
      }
      ComplexMatrix m = ComplexMatrix::Zero(d, d);
      for (int q = 0; q < d; ++q) {
        m(mod(static_cast<long long>(g.xi) * q, d), q) = 1.0;
      }
      return m;
    }
    case K::s_shear: {
      const long long h = half(d);
      return diagonal_phases(d, [&](int q) {
        return static_cast<long long>(g.xi) * q * q * h;
      });
    }
    case K::s_fourier_shear: {
      const long long h = half(d);
      const ComplexMatrix f = dft_matrix(d);
      const ComplexMatrix phases = diagonal_phases(d, [&](int q) {
        return -static_cast<long long>(g.xi) * q * q * h;
      });
      return f * phases * f.adjoint();
    }
    case K::t: {
      if (d != 3) throw UnsupportedError("T gate is defined for d = 3 only");
      // eta = e^{2 pi i / 9}
      ComplexMatrix m = ComplexMatrix::Zero(3, 3);
      m(0, 0) = 1.0;
      m(1, 1) = root_of_unity(9, 1);
      m(2, 2) = root_of_unity(9, -1);
      return m;
    }
    case K::xmn: {
      if (d != 3) throw ContractError("X_mn is a qutrit gate");
      if (!(0 <= g.m && g.m < g.n && g.n < 3)) {
        throw ContractError("X_mn needs 0 <= m < n < 3");
      }
      ComplexMatrix m = identity(3);
      m(g.m, g.m) = 0.0;
      m(g.n, g.n) = 0.0;
      m(g.m, g.n) = 1.0;
      m(g.n, g.m) = 1.0;
      return m;
    }
    case K::sqrt_z_analog: {
      if (d != 3) throw UnsupportedError("sqrt-Z analog is a qutrit gate");
      const SpinSystem s{2};
      const ComplexMatrix jz = spin_component(s, Axis::z, BasisOrder::logical);
      return expm_hermitian_phase(jz * jz - jz, 2.0 * kPi / 3.0);
    }
    case K::t5_candidate: {
      if (d != 5) throw UnsupportedError("t5_candidate is defined for d = 5");
      const SpinSystem s{4};
      const ComplexMatrix jz = spin_component(s, Axis::z, BasisOrder::logical);
      return expm_hermitian_phase(jz * jz * jz, 4.0 * kPi / 5.0);
    }
  }
  throw ContractError("unknown gate");
}

ComplexMatrix controlled(const ComplexMatrix& u, const ControlSpec& spec,
                         int d) {
  if (u.rows() != d || u.cols() != d) {
    throw ContractError("controlled: target must be d x d");
  }
  if (spec.arity < 1) throw ContractError("controlled: arity must be >= 1");
  require_unitary(u, "controlled");

  if (spec.kind == ControlSpec::Kind::hard) {
    if (spec.level < 0 || spec.level >= d) {
      throw ContractError("controlled: hard level out of range");
    }
    // Apply U only on the all-controls-at-level block.
    long long control_dim = 1;
    for (int i = 0; i < spec.arity; ++i) control_dim *= d;
    long long flat_level = 0;
    for (int i = 0; i < spec.arity; ++i) flat_level = flat_level * d + spec.level;
    const Eigen::Index dim = control_dim * d;
    if (static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim) >
        kDefaultEntryCap) {
      throw SizeError("controlled: result exceeds entry cap");
    }
    ComplexMatrix out = identity(dim);
    out.block(flat_level * d, flat_level * d, d, d) = u;
    return out;
  }

  // standard: C^(n)U = sum_a |a><a| (x) [C^(n-1)U]^a
  ComplexMatrix inner = u;
  for (int level = 0; level < spec.arity; ++level) {
    const Eigen::Index block = inner.rows();
    const auto dim = static_cast<std::size_t>(block * d);
    if (dim * dim > kDefaultEntryCap) {
      throw SizeError("controlled: result exceeds entry cap");
    }
    ComplexMatrix next = ComplexMatrix::Zero(block * d, block * d);
    ComplexMatrix power = identity(block);
    for (int a = 0; a < d; ++a) {
      next.block(a * block, a * block, block, block) = power;
      power = power * inner;
    }
    inner = std::move(next);
  }
  return inner;
}

ComplexMatrix conjugate(const ComplexMatrix& u, const ComplexMatrix& v) {
  if (u.rows() != u.cols() || v.rows() != v.cols() || u.rows() != v.rows()) {
    throw ContractError("conjugate: dimension mismatch");
  }
  return v * u * v.adjoint();
}

namespace {

std::string upper(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (!std::isspace(static_cast<unsigned char>(c))) {
      out.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
    }
  }
  return out;
}

std::vector<int> parse_ints(std::string_view body) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos <= body.size()) {
    const auto comma = body.find(',', pos);
    const auto token = body.substr(pos, comma == std::string_view::npos
                                            ? std::string_view::npos
                                            : comma - pos);
    int value = 0;
    const auto [ptr, ec] =
        std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size() || token.empty()) {
      throw ContractError("bad gate parameter '" + std::string(token) + "'");
    }
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

}  // namespace

GateName parse_gate_name(std::string_view text) {
  const std::string s = upper(text);
  if (s == "Z") return GateName::clock();
  if (s == "X") return GateName::shift();
  if (s == "F" || s == "DFT") return GateName::dft();
  if (s == "T") return GateName::t_gate();
  if (s == "T5") return GateName::t5_candidate();
  if (s == "SQRTZ") return GateName::sqrt_z_analog();
  if (s.size() == 3 && s[0] == 'X' && std::isdigit(static_cast<unsigned char>(s[1])) &&
      std::isdigit(static_cast<unsigned char>(s[2]))) {
    return GateName::swap_levels(s[1] - '0', s[2] - '0');
  }
  if (s.size() > 3 && s[0] == 'S' && s[1] == '(' && s.back() == ')') {
    const auto p = parse_ints(std::string_view(s).substr(2, s.size() - 3));
    if (p.size() != 3) throw ContractError("S gate needs three parameters");
    if (p[1] == 0 && p[2] == 0) return GateName::s_multiply(p[0]);
    if (p[0] == 1 && p[2] == 0) return GateName::s_shear(p[1]);
    if (p[0] == 1 && p[1] == 0) return GateName::s_fourier_shear(p[2]);
    throw ContractError("S gate must be S(xi,0,0), S(1,xi,0) or S(1,0,xi)");
  }
  throw ContractError("unknown gate name '" + std::string(text) + "'");
}

std::string gate_label(const GateName& g) {
  using K = GateName::Kind;
  switch (g.kind) {
    case K::z: return "Z";
    case K::x: return "X";
    case K::dft: return "F";
    case K::s_multiply: return "S(" + std::to_string(g.xi) + ",0,0)";
    case K::s_shear: return "S(1," + std::to_string(g.xi) + ",0)";
    case K::s_fourier_shear: return "S(1,0," + std::to_string(g.xi) + ")";
    case K::t: return "T";
    case K::xmn: return "X" + std::to_string(g.m) + std::to_string(g.n);
    case K::sqrt_z_analog: return "sqrtZ";
    case K::t5_candidate: return "T5";
  }
  return "?";
}

}  // namespace amkit
