#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "support.hpp"
#include "triqd/qmat.hpp"
#include "triqd/states.hpp"

using namespace triqd;

TEST_CASE("kron basics") {
  const ComplexMatrix i2 = ComplexMatrix::identity(2);

  SUBCASE("identity x identity") {
    CHECK(kron(i2, i2).max_abs_diff(ComplexMatrix::identity(4)) == 0.0);
  }
  SUBCASE("sigma1 x sigma1 is the anti-diagonal") {
    const ComplexMatrix m = kron(pauli(1), pauli(1));
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        CHECK(m(i, j) == (j == 3 - i ? complexd(1.0) : complexd(0.0)));
  }
  SUBCASE("sigma3 x identity is diag(1,1,-1,-1)") {
    const ComplexMatrix m = kron(pauli(3), i2);
    const double want[4] = {1, 1, -1, -1};
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        CHECK(m(i, j) == complexd(i == j ? want[i] : 0.0));
  }
  SUBCASE("oversized product is rejected") {
    CHECK_THROWS_AS(kron(ComplexMatrix::identity(4), ComplexMatrix::identity(4)),
                    std::invalid_argument);
  }
}

TEST_CASE("eig_hermitian") {
  SUBCASE("diagonal input sorts ascending") {
    ComplexMatrix m(3);
    m(0, 0) = 3.0; m(1, 1) = 1.0; m(2, 2) = 2.0;
    const Spectrum s = eig_hermitian(m);
    CHECK(s.values[0] == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(s.values[1] == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(s.values[2] == doctest::Approx(3.0).epsilon(1e-14));
  }
  SUBCASE("pauli spectrum") {
    const Spectrum s = eig_hermitian(pauli(1));
    CHECK(s.values[0] == doctest::Approx(-1.0).epsilon(1e-14));
    CHECK(s.values[1] == doctest::Approx(1.0).epsilon(1e-14));
  }
  SUBCASE("werner-ghz c=0.5 spectrum") {
    const Spectrum s = eig_hermitian(build_werner_ghz(0.5));
    for (int i = 0; i < 7; ++i) CHECK(s.values[i] == doctest::Approx(0.0625).epsilon(1e-12));
    CHECK(s.values[7] == doctest::Approx(0.5625).epsilon(1e-12));
  }
  SUBCASE("non-hermitian input names the bad entry") {
    ComplexMatrix m(2);
    m(0, 1) = 1.0;  // m(1,0) left zero
    CHECK_THROWS_WITH_AS(eig_hermitian(m), doctest::Contains("m(0,1)"),
                         std::invalid_argument);
  }
  SUBCASE("reconstruction residual below 1e-10") {
    test::Rng rng(11);
    for (int dim : {2, 4, 8})
      for (int rep = 0; rep < 20; ++rep) {
        const ComplexMatrix m = test::random_hermitian(rng, dim);
        const EigDecomposition ed = eig_hermitian_full(m);
        ComplexMatrix lam(dim);
        for (int i = 0; i < dim; ++i) lam(i, i) = ed.spectrum.values[i];
        const ComplexMatrix rec = ed.vectors * lam * ed.vectors.dagger();
        CHECK(rec.max_abs_diff(m) <= 1e-10);
      }
  }
  SUBCASE("unitary invariance of the spectrum") {
    test::Rng rng(12);
    for (int dim : {2, 4})
      for (int rep = 0; rep < 25; ++rep) {
        const ComplexMatrix m = test::random_hermitian(rng, dim);
        const ComplexMatrix u = test::random_unitary(rng, dim);
        const Spectrum s1 = eig_hermitian(m);
        const Spectrum s2 = eig_hermitian(u * m * u.dagger());
        for (int i = 0; i < dim; ++i) CHECK(std::abs(s1.values[i] - s2.values[i]) <= 1e-9);
      }
  }
}

TEST_CASE("partial_trace") {
  test::Rng rng(21);

  SUBCASE("product factorization") {
    const ComplexMatrix a = test::random_hermitian(rng, 2);
    const ComplexMatrix b = test::random_hermitian(rng, 2);
    const ComplexMatrix got = partial_trace(kron(a, b), {true, false});
    const ComplexMatrix want = b.trace() * a;
    CHECK(got.max_abs_diff(want) <= 1e-13);
  }
  SUBCASE("trace preservation") {
    for (int rep = 0; rep < 10; ++rep) {
      const ComplexMatrix m = test::random_hermitian(rng, 8);
      const ComplexMatrix red = partial_trace(m, {false, true, false});
      CHECK(std::abs(red.trace() - m.trace()) <= 1e-12);
      CHECK(red.is_hermitian(1e-12));
    }
  }
  SUBCASE("ghz marginal is maximally mixed") {
    const ComplexMatrix ghz = build_werner_ghz(1.0);
    const ComplexMatrix a = partial_trace(ghz, {true, false, false});
    ComplexMatrix want = ComplexMatrix::identity(2);
    want *= complexd(0.5);
    CHECK(a.max_abs_diff(want) <= 1e-14);
  }
  SUBCASE("tracing B then C equals tracing BC jointly") {
    for (int rep = 0; rep < 10; ++rep) {
      const ComplexMatrix m = test::random_hermitian(rng, 8);
      const ComplexMatrix two_step =
          partial_trace(partial_trace(m, {true, false, true}), {true, false});
      const ComplexMatrix joint = partial_trace(m, {true, false, false});
      CHECK(two_step.max_abs_diff(joint) <= 1e-12);
    }
  }
  SUBCASE("invalid mask") {
    CHECK_THROWS_AS(partial_trace(ComplexMatrix::identity(8), {true, false}),
                    std::invalid_argument);
  }
}

TEST_CASE("von_neumann_entropy") {
  SUBCASE("maximally mixed") {
    ComplexMatrix rho = ComplexMatrix::identity(8);
    rho *= complexd(0.125);
    CHECK(von_neumann_entropy(rho) == doctest::Approx(3.0).epsilon(1e-12));
  }
  SUBCASE("pure state") {
    CHECK(von_neumann_entropy(build_werner_ghz(1.0)) == doctest::Approx(0.0).scale(1).epsilon(1e-12));
  }
  SUBCASE("diag(1/4, 3/4)") {
    ComplexMatrix rho(2);
    rho(0, 0) = 0.25;
    rho(1, 1) = 0.75;
    CHECK(von_neumann_entropy(rho) == doctest::Approx(0.811278124459133).epsilon(1e-12));
  }
  SUBCASE("genuinely negative eigenvalue is rejected") {
    ComplexMatrix rho(2);
    rho(0, 0) = 1.0 + 1e-6;
    rho(1, 1) = -1e-6;
    CHECK_THROWS_AS(von_neumann_entropy(rho), std::invalid_argument);
  }
  SUBCASE("additivity on product states") {
    test::Rng rng(31);
    for (int rep = 0; rep < 15; ++rep) {
      const ComplexMatrix a = test::random_density(rng, 2);
      const ComplexMatrix b = test::random_density(rng, 4);
      const double lhs = von_neumann_entropy(kron(a, b));
      const double rhs = von_neumann_entropy(a) + von_neumann_entropy(b);
      CHECK(std::abs(lhs - rhs) <= 1e-9);
    }
  }
}
