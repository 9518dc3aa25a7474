#include "doctest.h"

#include <numeric>

#include "amkit/gates.hpp"
#include "amkit/spin.hpp"
#include "oracles.hpp"

using namespace amkit;

namespace {

ComplexMatrix xpow(int k, int d) { return oracle::power(oracle::shift(d), k); }
ComplexMatrix zpow(int k, int d) { return oracle::power(oracle::clock(d), k); }

}  // namespace

TEST_CASE("Pauli and Fourier gates") {
  for (int d = 2; d <= 9; ++d) {
    CAPTURE(d);
    CHECK(oracle::maxdiff(local_gate(GateName::clock(), d), oracle::clock(d)) <
          1e-15);
    CHECK(oracle::maxdiff(local_gate(GateName::shift(), d), oracle::shift(d)) ==
          0.0);
    CHECK(oracle::maxdiff(local_gate(GateName::dft(), d), oracle::dft(d)) < 1e-14);
    CHECK(oracle::maxdiff(matrix_power(local_gate(GateName::clock(), d), d),
                          identity(d)) < 1e-12);
  }
  ComplexMatrix x(3, 3);
  x << 0, 0, 1, 1, 0, 0, 0, 1, 0;
  CHECK(local_gate(GateName::shift(), 3) == x);
  ComplexMatrix h(2, 2);
  h << 1, 1, 1, -1;
  CHECK(oracle::maxdiff(local_gate(GateName::dft(), 2), h / std::sqrt(2.0)) <
        1e-15);
}

TEST_CASE("Weyl commutation X^a Z^b = w^-ab Z^b X^a") {
  for (int d : {3, 5}) {
    for (int a = 0; a < d; ++a) {
      for (int b = 0; b < d; ++b) {
        CHECK(oracle::maxdiff(xpow(a, d) * zpow(b, d),
                              oracle::w(d, -a * b) * zpow(b, d) * xpow(a, d)) <
              1e-12);
      }
    }
  }
}

TEST_CASE("S gates") {
  const cplx w = oracle::w(3, 1);
  SUBCASE("multiplication permutes levels") {
    const auto s2 = local_gate(GateName::s_multiply(2), 5);
    for (int q = 0; q < 5; ++q) CHECK(s2((2 * q) % 5, q) == cplx(1.0, 0.0));
    CHECK_THROWS_AS(local_gate(GateName::s_multiply(3), 3), ContractError);
    CHECK_THROWS_AS(local_gate(GateName::s_multiply(2), 4), ContractError);
  }
  SUBCASE("shear phases use 2^-1 mod d") {
    const auto s = local_gate(GateName::s_shear(1), 3);
    CHECK(std::abs(s(0, 0) - 1.0) < 1e-15);
    CHECK(std::abs(s(1, 1) - w * w) < 1e-15);
    CHECK(std::abs(s(2, 2) - w * w) < 1e-15);
    // d = 5: w^{xi q^2 3}
    const auto s5 = local_gate(GateName::s_shear(2), 5);
    for (int q = 0; q < 5; ++q) {
      CHECK(std::abs(s5(q, q) - oracle::w(5, 2 * q * q * 3)) < 1e-14);
    }
  }
  SUBCASE("Fourier shear is the DFT conjugate of a shear") {
    for (int d : {3, 5}) {
      for (int xi = 0; xi < d; ++xi) {
        const auto f = oracle::dft(d);
        const ComplexMatrix want =
            f * local_gate(GateName::s_shear((d - xi) % d), d) * f.adjoint();
        CHECK(oracle::maxdiff(local_gate(GateName::s_fourier_shear(xi), d),
                              want) < 1e-12);
      }
    }
  }
  SUBCASE("even d has no shear") {
    CHECK_THROWS_AS(local_gate(GateName::s_shear(1), 4), UnsupportedError);
  }
}

TEST_CASE("Clifford closure of S gates and the DFT") {
  for (int d : {3, 5}) {
    std::vector<ComplexMatrix> cliffords{oracle::dft(d)};
    for (int xi = 0; xi < d; ++xi) {
      if (std::gcd(xi, d) == 1) {
        cliffords.push_back(local_gate(GateName::s_multiply(xi), d));
      }
      cliffords.push_back(local_gate(GateName::s_shear(xi), d));
      cliffords.push_back(local_gate(GateName::s_fourier_shear(xi), d));
    }
    for (const auto& v : cliffords) {
      for (const auto& p : {xpow(1, d), zpow(1, d)}) {
        const ComplexMatrix img = v * p * v.adjoint();
        bool found = false;
        for (int a = 0; a < d && !found; ++a) {
          for (int b = 0; b < d && !found; ++b) {
            for (int c = 0; c < d && !found; ++c) {
              found = oracle::maxdiff(img, oracle::w(d, c) * xpow(a, d) *
                                               zpow(b, d)) < 1e-10;
            }
          }
        }
        CHECK(found);
      }
    }
  }
}

TEST_CASE("qutrit non-Clifford and permutation gates") {
  const auto t = local_gate(GateName::t_gate(), 3);
  CHECK(std::abs(t(1, 1) - std::polar(1.0, 2 * kPi / 9)) < 1e-15);
  CHECK(std::abs(t(2, 2) - std::polar(1.0, -2 * kPi / 9)) < 1e-15);
  CHECK_THROWS_AS(local_gate(GateName::t_gate(), 5), UnsupportedError);

  const auto sz = local_gate(GateName::sqrt_z_analog(), 3);
  CHECK(std::abs(sz(0, 0) - 1.0) < 1e-15);
  CHECK(std::abs(sz(1, 1) - 1.0) < 1e-15);
  CHECK(std::abs(sz(2, 2) - oracle::w(3, 2)) < 1e-15);

  const auto t5 = local_gate(GateName::t5_candidate(), 5);
  CHECK(is_diagonal(t5));
  CHECK(unitarity_defect(t5) < 1e-12);

  const auto x12 = local_gate(GateName::swap_levels(1, 2), 3);
  const auto x02 = local_gate(GateName::swap_levels(0, 2), 3);
  CHECK(oracle::maxdiff(conjugate(x12, oracle::shift(3)), x02) < 1e-15);
  CHECK_THROWS_AS(local_gate(GateName::swap_levels(1, 2), 5), ContractError);
  CHECK_THROWS_AS(local_gate(GateName::swap_levels(2, 1), 3), ContractError);
}

TEST_CASE("DFT conjugation relates Z and X") {
  for (int d : {2, 3, 5}) {
    const auto f = oracle::dft(d);
    const auto z = oracle::clock(d), x = oracle::shift(d);
    CHECK(oracle::maxdiff(conjugate(z, f), x.adjoint()) < 1e-12);
    CHECK(oracle::maxdiff(conjugate(z, f.adjoint()), x) < 1e-12);
  }
  CHECK(conjugate(oracle::clock(3), identity(3)) == oracle::clock(3));
  CHECK_THROWS_AS(conjugate(identity(2), identity(3)), ContractError);
}

TEST_CASE("controlled gates") {
  const auto z = oracle::clock(3);
  const auto cz = controlled(z, ControlSpec::standard(), 3);
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) {
      CHECK(std::abs(cz(3 * a + b, 3 * a + b) - oracle::w(3, a * b)) < 1e-14);
    }
  }
  const auto hard = controlled(z, ControlSpec::hard(1), 3);
  CHECK(oracle::maxdiff(hard, oracle::hard_controlled(z, 3, 1)) < 1e-15);
  CHECK(oracle::maxdiff(controlled(identity(4), ControlSpec::standard(2), 4),
                        identity(64)) == 0.0);
  CHECK(oracle::maxdiff(cz, controlled(z, ControlSpec::hard(1), 3) *
                                controlled(z * z, ControlSpec::hard(2), 3)) <
        1e-12);

  SUBCASE("random targets against enumeration") {
    oracle::Gen g(41);
    for (int t = 0; t < 8; ++t) {
      const int d = g.integer(2, 4);
      const int arity = g.integer(1, 2);
      const auto u = g.unitary(d);
      CHECK(oracle::maxdiff(controlled(u, ControlSpec::standard(arity), d),
                            oracle::standard_controlled(u, d, arity)) < 1e-11);
    }
  }
  SUBCASE("hard control of arity 2 fires only on the all-level block") {
    const auto u = controlled(z, ControlSpec::hard(2, 2), 3);
    for (int i = 0; i < 27; ++i) {
      const bool fire = i / 3 == 8;
      CHECK(std::abs(u(i, i) - (fire ? z(i % 3, i % 3) : cplx(1.0, 0.0))) <
            1e-15);
    }
  }
  SUBCASE("contract errors") {
    ComplexMatrix bad = identity(3);
    bad(0, 0) = 2.0;
    CHECK_THROWS_AS(controlled(bad, ControlSpec::standard(), 3), ContractError);
    CHECK_THROWS_AS(controlled(z, ControlSpec::hard(3), 3), ContractError);
    CHECK_THROWS_AS(controlled(z, ControlSpec::standard(0), 3), ContractError);
  }
}

TEST_CASE("gate names") {
  CHECK(parse_gate_name("z").kind == GateName::Kind::z);
  CHECK(parse_gate_name("DFT").kind == GateName::Kind::dft);
  const auto s = parse_gate_name("S(1, 0, 2)");
  CHECK(s.kind == GateName::Kind::s_fourier_shear);
  CHECK(s.xi == 2);
  CHECK(gate_label(s) == "S(1,0,2)");
  const auto x = parse_gate_name("X12");
  CHECK(x.m == 1);
  CHECK(x.n == 2);
  CHECK_THROWS_AS(parse_gate_name("Y"), ContractError);
  CHECK_THROWS_AS(parse_gate_name("S(2,1,0)"), ContractError);
  CHECK(mod_inverse(2, 3) == 2);
  CHECK(mod_inverse(3, 7) == 5);
  CHECK_THROWS_AS(mod_inverse(2, 4), ContractError);
}
