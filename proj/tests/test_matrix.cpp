#include <doctest.h>

#include <cmath>
#include <numbers>

#include "ensembles.hpp"
#include "lazyq/fano.hpp"
#include "lazyq/matrix.hpp"
#include "lazyq/random.hpp"

using namespace lazyq;
using namespace std::complex_literals;

namespace {

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) { return frob_norm(a - b); }

ComplexMatrix random_hermitian(Rng& rng, std::size_t n) {
  const ComplexMatrix g = ginibre(rng, n, n);
  return 0.5 * (g + g.adjoint());
}

ComplexMatrix reconstruct(const HermitianEigen& e) {
  std::vector<Complex> d(e.values.begin(), e.values.end());
  return e.vectors * ComplexMatrix::diagonal(d) * e.vectors.adjoint();
}

}  // namespace

TEST_CASE("kron of identities and Paulis") {
  CHECK(max_abs_diff(kron(pauli(0), pauli(0)), ComplexMatrix::identity(4)) == 0.0);
  CHECK(max_abs_diff(kron(pauli(3), pauli(0)), ComplexMatrix::diagonal({1.0, 1.0, -1.0, -1.0})) == 0.0);
  // sigma_x ⊗ sigma_x: 2x2 blocks [[0, X], [X, 0]] is the anti-diagonal of ones.
  const ComplexMatrix xx = kron(pauli(1), pauli(1));
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) CHECK(xx(r, c) == Complex(r + c == 3 ? 1.0 : 0.0));
  CHECK(kron(ComplexMatrix(2, 3), ComplexMatrix(3, 1)).rows() == 6);
}

TEST_CASE("partial traces") {
  Rng rng(3);
  const ComplexMatrix ra = testing::random_qubit_state(rng);
  const ComplexMatrix rb = testing::random_qubit_state(rng);
  CHECK(max_abs_diff(partial_trace_b(kron(ra, rb)), ra) < 1e-14);
  CHECK(max_abs_diff(partial_trace_a(kron(ra, rb)), rb) < 1e-14);
  CHECK(max_abs_diff(partial_trace_b(bell_phi_plus().matrix()), 0.5 * pauli(0)) < 1e-15);
  CHECK(max_abs_diff(partial_trace_b(0.25 * ComplexMatrix::identity(4)), 0.5 * pauli(0)) == 0.0);
  CHECK_THROWS_AS(partial_trace_b(ComplexMatrix::identity(2)), DimensionError);
  CHECK_THROWS_AS(partial_trace_a(ComplexMatrix(4, 3)), DimensionError);

  for (int k = 0; k < 200; ++k) {
    const ComplexMatrix m = ginibre(rng, 4, 4);
    CHECK(std::abs(partial_trace_b(m).trace() - m.trace()) < 1e-12);
    CHECK(std::abs(partial_trace_a(m).trace() - m.trace()) < 1e-12);
  }
}

TEST_CASE("partial transpose") {
  Rng rng(5);
  const ComplexMatrix d = ComplexMatrix::diagonal({0.1, 0.2, 0.3, 0.4});
  CHECK(max_abs_diff(partial_transpose_b(d), d) == 0.0);
  const ComplexMatrix ra = testing::random_qubit_state(rng);
  const ComplexMatrix rb = testing::random_qubit_state(rng);
  CHECK(max_abs_diff(partial_transpose_b(kron(ra, rb)), kron(ra, rb.transpose())) < 1e-15);

  // |Phi+><Phi+| partially transposed is SWAP/2, spectrum {-1/2, 1/2, 1/2, 1/2}.
  const auto w = herm_eig(partial_transpose_b(bell_phi_plus().matrix())).values;
  CHECK(w[0] == doctest::Approx(-0.5).epsilon(1e-12));
  CHECK(w[3] == doctest::Approx(0.5).epsilon(1e-12));

  for (int k = 0; k < 200; ++k) {
    const ComplexMatrix h = random_hermitian(rng, 4);
    const ComplexMatrix pt = partial_transpose_b(h);
    CHECK(max_abs_diff(partial_transpose_b(pt), h) == 0.0);
    CHECK(std::abs(pt.trace() - h.trace()) < 1e-14);
    CHECK(hermiticity_defect(pt) < 1e-14);
  }
  CHECK_THROWS_AS(partial_transpose_b(ComplexMatrix(2, 2)), DimensionError);
}

TEST_CASE("herm_eig examples") {
  auto w = herm_eig(ComplexMatrix::identity(4)).values;
  CHECK(w == std::vector<double>{1, 1, 1, 1});

  w = herm_eig(ComplexMatrix::diagonal({4.0, 1.0, 3.0, 2.0})).values;
  CHECK(w == std::vector<double>{1, 2, 3, 4});

  w = herm_eig(bell_phi_plus().matrix()).values;
  CHECK(std::abs(w[0]) < 1e-15);
  CHECK(std::abs(w[1]) < 1e-15);
  CHECK(std::abs(w[2]) < 1e-15);
  CHECK(w[3] == doctest::Approx(1.0).epsilon(1e-14));

  ComplexMatrix bad = ComplexMatrix::identity(4);
  bad(0, 1) = 0.5;
  CHECK_THROWS_AS(herm_eig(bad), NotHermitianError);
  CHECK_THROWS_AS(herm_eig(ComplexMatrix(4, 3)), DimensionError);
}

TEST_CASE("herm_eig reconstructs random Hermitian matrices") {
  Rng rng(11);
  for (int k = 0; k < 1000; ++k) {
    const ComplexMatrix h = random_hermitian(rng, 4);
    const HermitianEigen e = herm_eig(h);
    CHECK(max_abs_diff(reconstruct(e), h) <= 1e-10 * std::max(1.0, frob_norm(h)));
    CHECK(max_abs_diff(e.vectors.adjoint() * e.vectors, ComplexMatrix::identity(4)) < 1e-12);
    CHECK(std::is_sorted(e.values.begin(), e.values.end()));
  }
}

TEST_CASE("herm_eig is deterministic on degenerate spectra") {
  Rng rng(12);
  const ComplexMatrix u = testing::random_local_unitary(rng);
  const ComplexMatrix h = u * ComplexMatrix::diagonal({1.0, 1.0, 2.0, 2.0}) * u.adjoint();
  const HermitianEigen a = herm_eig(h);
  const HermitianEigen b = herm_eig(h);
  CHECK(max_abs_diff(a.vectors, b.vectors) == 0.0);
  CHECK(max_abs_diff(reconstruct(a), h) < 1e-12);
}

TEST_CASE("svd3 examples") {
  Svd3 s = svd3(RealMatrix3::diagonal(1, 2, 3));
  CHECK(s.s[0] == doctest::Approx(3));
  CHECK(s.s[1] == doctest::Approx(2));
  CHECK(s.s[2] == doctest::Approx(1));

  s = svd3(RealMatrix3{});
  CHECK(s.s == Vec3{0, 0, 0});
  CHECK(frob_norm(s.u.transpose() * s.u - RealMatrix3::identity()) < 1e-15);

  s = svd3(RealMatrix3::diagonal(1, -1, 1));
  for (double v : s.s) CHECK(v == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("svd3 properties") {
  Rng rng(13);
  std::normal_distribution<double> n(0.0, 1.0);
  auto random_matrix = [&] {
    RealMatrix3 m;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) m(i, j) = n(rng);
    return m;
  };
  auto random_rotation = [&] { return rotation_from_su2(random_su2(rng)); };
  auto check_svd = [](const RealMatrix3& t, const Svd3& s) {
    CHECK(frob_norm(s.u * RealMatrix3::diagonal(s.s[0], s.s[1], s.s[2]) * s.v.transpose() - t) < 1e-12);
    CHECK(frob_norm(s.u.transpose() * s.u - RealMatrix3::identity()) < 1e-12);
    CHECK(frob_norm(s.v.transpose() * s.v - RealMatrix3::identity()) < 1e-12);
    CHECK(s.s[0] >= s.s[1]);
    CHECK(s.s[1] >= s.s[2]);
    CHECK(s.s[2] >= 0.0);
  };
  for (int k = 0; k < 500; ++k) {
    RealMatrix3 t = random_matrix();
    if (k % 3 == 1) {  // rank one
      const Vec3 a{n(rng), n(rng), n(rng)}, b{n(rng), n(rng), n(rng)};
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) t(i, j) = a[i] * b[j];
    }
    if (k % 3 == 2) {  // rank two
      for (int i = 0; i < 3; ++i) t(i, 2) = t(i, 0) - 2.0 * t(i, 1);
    }
    const Svd3 s = svd3(t);
    check_svd(t, s);
    const Svd3 rotated = svd3(random_rotation() * t * random_rotation());
    for (int i = 0; i < 3; ++i) CHECK(std::abs(rotated.s[i] - s.s[i]) < 1e-12);
  }
}

TEST_CASE("herm_exp") {
  using std::numbers::pi;
  CHECK(max_abs_diff(herm_exp(kron(pauli(3), pauli(1)), 0.0), ComplexMatrix::identity(4)) < 1e-15);
  CHECK(max_abs_diff(herm_exp(ComplexMatrix::identity(4), pi), -1.0 * ComplexMatrix::identity(4)) < 1e-15);
  const ComplexMatrix u = herm_exp(kron(pauli(3), pauli(0)), pi / 2);
  const ComplexMatrix expected = ComplexMatrix::diagonal({-1i, -1i, 1i, 1i});
  CHECK(max_abs_diff(u, expected) < 1e-15);

  Rng rng(17);
  for (int k = 0; k < 200; ++k) {
    const ComplexMatrix h = random_hermitian(rng, 4);
    const double t = std::uniform_real_distribution<double>(-3, 3)(rng);
    const ComplexMatrix a = herm_exp(h, t);
    CHECK(max_abs_diff(a * a.adjoint(), ComplexMatrix::identity(4)) < 1e-10);
    CHECK(max_abs_diff(a * herm_exp(h, -t), ComplexMatrix::identity(4)) < 1e-10);
  }
  CHECK_THROWS_AS(herm_exp(ginibre(rng, 4, 4), 1.0), NotHermitianError);
}

TEST_CASE("commutator and norm") {
  const ComplexMatrix c = commutator(pauli(1), pauli(2));
  CHECK(max_abs_diff(c, 2i * pauli(3)) == 0.0);
  CHECK(frob_norm(pauli(1)) == doctest::Approx(std::sqrt(2.0)));
  CHECK(frob_norm(commutator(pauli(3), pauli(3))) == 0.0);
}
