#include <cmath>
#include <random>

#include "doctest.h"
#include "support/oracles.hpp"
#include "xpm/errors.hpp"
#include "xpm/linalg4.hpp"

using xpm::cx;
using xpm::DensityMatrix4;
using xpm::Eig4;
using xpm::Mat4;

namespace {

Mat4 pure_state_matrix(const std::array<cx, 4>& c) {
  Mat4 rho;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) rho(i, j) = c[i] * std::conj(c[j]);
  return rho;
}

}  // namespace

TEST_SUITE("linalg4") {

TEST_CASE("eigenvalues of simple matrices") {
  const auto id4 = xpm::eigvals_hermitian(0.25 * Mat4::identity());
  for (double v : id4) CHECK(v == doctest::Approx(0.25).epsilon(1e-14));

  const auto diag = xpm::eigvals_hermitian(Mat4::diag(0.7, 0.0, 0.3, 0.0));
  CHECK(diag[0] == doctest::Approx(0.0));
  CHECK(diag[1] == doctest::Approx(0.0));
  CHECK(diag[2] == doctest::Approx(0.3).epsilon(1e-14));
  CHECK(diag[3] == doctest::Approx(0.7).epsilon(1e-14));
}

TEST_CASE("random Hermitian matrices against the quartic-root oracle") {
  std::mt19937_64 rng(21);
  int tested = 0;
  while (tested < 25) {
    const Mat4 m = oracle::random_hermitian(rng);
    const auto ref = oracle::char_poly_eigs(m);
    // Root-finding on the characteristic polynomial loses digits for
    // near-degenerate spectra; keep the oracle in its accurate regime.
    double min_gap = 1e9;
    for (int i = 0; i + 1 < 4; ++i) min_gap = std::min(min_gap, ref[i + 1] - ref[i]);
    if (min_gap < 0.05) continue;
    ++tested;

    const Eig4 eig = xpm::eig_hermitian(m);
    for (int i = 0; i < 4; ++i)
      CHECK(std::abs(eig.values[i] - ref[i]) < 1e-9);

    // reconstruction residual ||M - Q Λ Q†||
    Mat4 rec;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        cx s = 0.0;
        for (int k = 0; k < 4; ++k)
          s += eig.vectors(i, k) * eig.values[k] * std::conj(eig.vectors(j, k));
        rec(i, j) = s;
      }
    CHECK((m - rec).frobenius_norm() < 1e-9);

    // eigenvector orthonormality
    const Mat4 gram = eig.vectors.adjoint() * eig.vectors;
    CHECK((gram - Mat4::identity()).frobenius_norm() < 1e-12);
  }
}

TEST_CASE("non-Hermitian input is rejected") {
  Mat4 m = Mat4::identity();
  m(0, 1) = cx(0.0, 1.0);
  m(1, 0) = cx(0.0, 1.0);  // conj would be -i
  CHECK_THROWS_AS(xpm::eigvals_hermitian(m), xpm::validation_error);
}

TEST_CASE("hermitian square root") {
  std::mt19937_64 rng(31);
  for (int k = 0; k < 10; ++k) {
    const Mat4 rho = oracle::random_density(rng);
    const Mat4 s = xpm::hermitian_sqrt(rho);
    CHECK((s * s - rho).frobenius_norm() < 1e-10);
  }
  CHECK_THROWS_AS(xpm::hermitian_sqrt(Mat4::diag(1.0, -0.5, 0.2, 0.3)),
                  xpm::numerical_error);
}

TEST_CASE("density matrix invariants are enforced") {
  CHECK_THROWS_AS(DensityMatrix4(Mat4::diag(1.2, -0.2, 0.0, 0.0)),
                  xpm::numerical_error);
  CHECK_THROWS_AS(DensityMatrix4(Mat4::diag(0.8, 0.1, 0.0, 0.0)),
                  xpm::numerical_error);  // trace 0.9
  Mat4 nh = Mat4::diag(0.5, 0.5, 0.0, 0.0);
  nh(0, 1) = cx(0.0, 0.3);
  CHECK_THROWS_AS(DensityMatrix4(nh), xpm::numerical_error);
  CHECK(DensityMatrix4::is_physical(Mat4::diag(0.25, 0.25, 0.25, 0.25)));
  CHECK_FALSE(DensityMatrix4::is_physical(Mat4::diag(1.2, -0.2, 0.0, 0.0)));
}

TEST_CASE("concurrence of landmark states") {
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  const DensityMatrix4 bell(
      pure_state_matrix({cx(inv_sqrt2), 0.0, 0.0, cx(inv_sqrt2)}));
  CHECK(xpm::concurrence(bell) == doctest::Approx(1.0).epsilon(1e-12));

  const DensityMatrix4 product(pure_state_matrix({cx(1.0), 0.0, 0.0, 0.0}));
  CHECK(xpm::concurrence(product) == doctest::Approx(0.0).epsilon(1e-12));

  const DensityMatrix4 mixed(Mat4::diag(0.25, 0.25, 0.25, 0.25));
  CHECK(xpm::concurrence(mixed) == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("concurrence matches the pure-state formula") {
  std::mt19937_64 rng(17);
  for (int k = 0; k < 50; ++k) {
    const auto c = oracle::random_pure_state(rng);
    const DensityMatrix4 rho(pure_state_matrix(c));
    CHECK(std::abs(xpm::concurrence(rho) - oracle::pure_concurrence(c)) <
          1e-10);
  }
}

TEST_CASE("concurrence is invariant under local unitaries") {
  std::mt19937_64 rng(23);
  for (int k = 0; k < 20; ++k) {
    const Mat4 rho = oracle::random_density(rng);
    const double c0 = xpm::concurrence(DensityMatrix4(rho));
    const Mat4 u = oracle::random_local_unitary(rng, 0) *
                   oracle::random_local_unitary(rng, 1);
    const Mat4 rotated = u * rho * u.adjoint();
    const double c1 = xpm::concurrence(DensityMatrix4(rotated));
    CHECK(std::abs(c0 - c1) < 1e-9);
  }
}

TEST_CASE("spin-flip similarity stays PSD") {
  std::mt19937_64 rng(29);
  for (int k = 0; k < 20; ++k) {
    const Mat4 rho = oracle::random_density(rng);
    Mat4 y;
    y(0, 3) = -1.0;
    y(1, 2) = 1.0;
    y(2, 1) = 1.0;
    y(3, 0) = -1.0;
    const Mat4 s = xpm::hermitian_sqrt(rho);
    const Mat4 b = s * (y * rho.conjugate() * y) * s;
    const auto vals = xpm::eigvals_hermitian(b, 1e-9);
    CHECK(vals[0] >= -1e-10);
  }
}

}  // TEST_SUITE
