#pragma once

// Brute-force reference constructions for the tests. Nothing here calls into
// the library; every oracle is built from definitions by enumeration.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include <Eigen/Dense>

namespace oracle {

using cplx = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

inline constexpr double pi = 3.14159265358979323846;

inline cplx w(int d, long long k) {
  return std::polar(1.0, 2.0 * pi * static_cast<double>(k) / d);
}

inline long long ipow(long long b, int e) {
  long long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

inline std::vector<int> digits(long long x, int d, int n) {
  std::vector<int> q(static_cast<std::size_t>(n));
  for (int i = n - 1; i >= 0; --i) {
    q[static_cast<std::size_t>(i)] = static_cast<int>(x % d);
    x /= d;
  }
  return q;
}

inline double maxdiff(const Mat& a, const Mat& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

/// exp(i s h) by Taylor series with scaling and squaring.
inline Mat expm_i(const Mat& h, double s) {
  const Mat a = cplx{0.0, s} * h;
  const double norm = a.cwiseAbs().rowwise().sum().maxCoeff();
  int squarings = 0;
  double scale = 1.0;
  while (norm * scale > 0.25) {
    scale *= 0.5;
    ++squarings;
  }
  const Mat x = a * scale;
  Mat term = Mat::Identity(a.rows(), a.cols());
  Mat sum = term;
  for (int k = 1; k < 30; ++k) {
    term = term * x / static_cast<double>(k);
    sum += term;
  }
  for (int i = 0; i < squarings; ++i) sum = sum * sum;
  return sum;
}

inline Mat clock(int d) {
  Mat z = Mat::Zero(d, d);
  for (int q = 0; q < d; ++q) z(q, q) = w(d, q);
  return z;
}

/// X|q> = |q+1 mod d>
inline Mat shift(int d) {
  Mat x = Mat::Zero(d, d);
  for (int q = 0; q < d; ++q) x((q + 1) % d, q) = 1.0;
  return x;
}

/// F = d^-1/2 sum_{q,q'} w^{q q'} |q'><q|
inline Mat dft(int d) {
  Mat f(d, d);
  for (int r = 0; r < d; ++r) {
    for (int c = 0; c < d; ++c) f(r, c) = w(d, r * c) / std::sqrt(double(d));
  }
  return f;
}

inline Mat power(const Mat& u, int k) {
  Mat r = Mat::Identity(u.rows(), u.cols());
  for (int i = 0; i < k; ++i) r = r * u;
  return r;
}

inline Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

/// Diagonal gate w^{k q_1 ... q_n} on n qudits.
inline Mat mc_phase(int d, int n, int k) {
  const long long dim = ipow(d, n);
  Mat u = Mat::Zero(dim, dim);
  for (long long x = 0; x < dim; ++x) {
    long long prod = k;
    for (int q : digits(x, d, n)) prod *= q;
    u(x, x) = w(d, prod % d);
  }
  return u;
}

/// |c_1..c_m, t> -> |c_1..c_m> (x) U^{c_1 ... c_m} |t>, by enumeration. The
/// exponent is not reduced mod d, so U need not have order d.
inline Mat standard_controlled(const Mat& u, int d, int controls) {
  const long long cdim = ipow(d, controls);
  Mat out = Mat::Zero(cdim * d, cdim * d);
  for (long long c = 0; c < cdim; ++c) {
    long long prod = 1;
    for (int q : digits(c, d, controls)) prod *= q;
    out.block(c * d, c * d, d, d) = power(u, static_cast<int>(prod));
  }
  return out;
}

/// U on the target iff the control sits at `level`.
inline Mat hard_controlled(const Mat& u, int d, int level) {
  Mat out = Mat::Identity(d * d, d * d);
  out.block(level * d, level * d, d, d) = u;
  return out;
}

/// Spin-1 matrices in logical order (q = 0, 1, 2 <-> m = 0, +1, -1).
struct Spin1 {
  Mat jx, jy, jz;
};
inline Spin1 spin1_logical() {
  const double r = 1.0 / std::sqrt(2.0);
  const cplx i{0.0, 1.0};
  Spin1 s{Mat::Zero(3, 3), Mat::Zero(3, 3), Mat::Zero(3, 3)};
  s.jx(0, 1) = s.jx(1, 0) = s.jx(0, 2) = s.jx(2, 0) = r;
  // <0|Jy|+1> = i/sqrt2, <0|Jy|-1> = -i/sqrt2
  s.jy(0, 1) = i * r;
  s.jy(1, 0) = -i * r;
  s.jy(0, 2) = -i * r;
  s.jy(2, 0) = i * r;
  s.jz(1, 1) = 1.0;
  s.jz(2, 2) = -1.0;
  return s;
}

/// Spin-j J_z, J_+ from closed-form matrix elements, m-ordered.
struct SpinJ {
  Mat jx, jy, jz;
};
inline SpinJ spin_m_ordered(int two_j) {
  const int d = two_j + 1;
  const double j = 0.5 * two_j;
  Mat jp = Mat::Zero(d, d), jz = Mat::Zero(d, d);
  for (int r = 0; r < d; ++r) {
    const double m = j - r;
    jz(r, r) = m;
    if (r > 0) jp(r - 1, r) = std::sqrt(j * (j + 1) - m * (m + 1));
  }
  const cplx i{0.0, 1.0};
  return {(jp + jp.adjoint()) / 2.0, (jp - jp.adjoint()) / (2.0 * i), jz};
}

/// Qudit hypergraph state amplitude d^{-n/2} w^{sum_e g_e prod_{v in e} q_v}.
struct Edge {
  std::vector<int> vertices;  // 1-based
  int g = 0;
  double phi = 0.0;
};
inline Vec hypergraph(int d, int n, const std::vector<Edge>& edges) {
  const long long dim = ipow(d, n);
  Vec v(dim);
  for (long long x = 0; x < dim; ++x) {
    const auto q = digits(x, d, n);
    long long phase = 0;
    for (const auto& e : edges) {
      long long prod = e.g;
      for (int u : e.vertices) prod *= q[static_cast<std::size_t>(u - 1)];
      phase += prod;
    }
    v(x) = w(d, phase % d) / std::sqrt(static_cast<double>(dim));
  }
  return v;
}

inline double binom(int n, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// exp(-i sum_e phi_e prod m_v) prod_v c_{m_v}, m-ordered (index i <-> m = j - i).
inline Vec am_hypergraph(int two_j, int n, const std::vector<Edge>& edges) {
  const int d = two_j + 1;
  const double j = 0.5 * two_j;
  const long long dim = ipow(d, n);
  Vec v(dim);
  for (long long x = 0; x < dim; ++x) {
    const auto idx = digits(x, d, n);
    double amp = 1.0;
    for (int i : idx) amp *= std::sqrt(binom(two_j, i)) / std::pow(2.0, j);
    double phase = 0.0;
    for (const auto& e : edges) {
      double prod = e.phi;
      for (int u : e.vertices) prod *= j - idx[static_cast<std::size_t>(u - 1)];
      phase -= prod;
    }
    v(x) = std::polar(amp, phase);
  }
  return v;
}

/// Fock occupations by filtering every tuple in [0, N]^M, sorted descending.
inline std::vector<std::vector<int>> fock(int modes, int photons) {
  std::vector<std::vector<int>> out;
  const long long total = ipow(photons + 1, modes);
  for (long long x = 0; x < total; ++x) {
    const auto t = digits(x, photons + 1, modes);
    int s = 0;
    for (int v : t) s += v;
    if (s == photons) out.push_back(t);
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

/// Single-photon beam splitter exp(-i theta (e^{i phi}|i><j| + h.c.)) on d
/// rails: cos(theta) on the pair, -i sin(theta) e^{+-i phi} off-diagonal.
inline Mat single_photon_bs(int rails, int i, int j, double theta, double phi) {
  Mat u = Mat::Identity(rails, rails);
  u(i, i) = u(j, j) = std::cos(theta);
  u(i, j) = cplx{0.0, -std::sin(theta)} * std::polar(1.0, phi);
  u(j, i) = cplx{0.0, -std::sin(theta)} * std::polar(1.0, -phi);
  return u;
}

/// Dicke state on n qubits with k ones, by summing all bitstrings.
inline Vec dicke(int n, int k) {
  Vec v = Vec::Zero(1LL << n);
  for (long long b = 0; b < (1LL << n); ++b) {
    int ones = 0;
    for (int i = 0; i < n; ++i) ones += (b >> i) & 1;
    if (ones == k) v(b) = 1.0;
  }
  return v.normalized();
}

/// Deterministic generator for property tests.
struct Gen {
  std::mt19937_64 rng;
  explicit Gen(std::uint64_t seed) : rng(seed) {}

  int integer(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
  }
  double real(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
  }
  Mat hermitian(int n) {
    Mat a(n, n);
    for (int r = 0; r < n; ++r) {
      for (int c = 0; c < n; ++c) a(r, c) = cplx{real(-1, 1), real(-1, 1)};
    }
    return (a + a.adjoint()) / 2.0;
  }
  Mat unitary(int n) { return expm_i(hermitian(n), 1.0); }
  std::vector<int> subset(int n) {
    std::vector<int> vs;
    while (vs.empty()) {
      for (int v = 1; v <= n; ++v) {
        if (integer(0, 1)) vs.push_back(v);
      }
    }
    return vs;
  }
};

}  // namespace oracle
