#include <doctest.h>

#include <cmath>
#include <numbers>

#include "ensembles.hpp"
#include "lazyq/belldiag.hpp"
#include "lazyq/classify.hpp"
#include "lazyq/families.hpp"

using namespace lazyq;
using std::numbers::pi;

namespace {

const SeparableFamilyParams kNonLazyWitness{0.5, pi / 2, pi / 2, 0.0, 1.0};
const LazyDiscordantParams kLazyDiscordant{0.5, 0.3, 0.4};

FanoParams fano(const Vec3& x, const RealMatrix3& t) {
  FanoParams p;
  p.x = x;
  p.t = t;
  return p;
}

}  // namespace

TEST_CASE("lazy_by_commutator") {
  LazyVerdict v = lazy_by_commutator(TwoQubitState::maximally_mixed());
  CHECK(v.lazy);
  CHECK(v.residual == 0.0);

  v = lazy_by_commutator(bell_phi_plus());
  CHECK(v.lazy);
  CHECK(v.residual < 1e-15);

  v = lazy_by_commutator(separable_compose(kNonLazyWitness));
  CHECK_FALSE(v.lazy);
  CHECK(v.residual > 0.01);

  FanoParams bad;
  bad.t = RealMatrix3::diagonal(1, 1, 1);
  CHECK_THROWS_AS(lazy_by_commutator(compose(bad)), InvalidStateError);
}

TEST_CASE("lazy_by_parallelism") {
  Rng rng(31);
  std::normal_distribution<double> n;
  RealMatrix3 t;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) t(i, j) = n(rng);
  LazyVerdict v = lazy_by_parallelism(fano({0, 0, 0}, t));
  CHECK(v.lazy);
  CHECK(v.residual == 0.0);

  v = lazy_by_parallelism(fano({0, 0, 0.5}, RealMatrix3::diagonal(0, 0, 0.7)));
  CHECK(v.lazy);
  CHECK(v.residual == 0.0);

  // x × column 2 = (0,0,0.5) × (0,0.3,0) = (-0.15, 0, 0).
  v = lazy_by_parallelism(fano({0, 0, 0.5}, RealMatrix3::diagonal(0, 0.3, 0.7)));
  CHECK_FALSE(v.lazy);
  CHECK(v.residual == doctest::Approx(0.15).epsilon(1e-14));
}

TEST_CASE("commutator norm equals half the root-sum-square of cross products") {
  // [rho, rho_A ⊗ I] = (i/4) sum_lj (t_j × x)_l s_l ⊗ s_j and ||s_l ⊗ s_j||_F = 2.
  Rng rng(32);
  for (int k = 0; k < 200; ++k) {
    const TwoQubitState rho(random_density_matrix(rng));
    const FanoParams p = decompose(rho);
    double s = 0.0;
    for (int j = 0; j < 3; ++j) {
      const Vec3 c = cross(p.x, p.t.column(j));
      s += dot(c, c);
    }
    CHECK(lazy_by_commutator(rho).residual == doctest::Approx(0.5 * std::sqrt(s)).epsilon(1e-10));
  }
}

TEST_CASE("zero_discord_a") {
  Rng rng(33);
  const TwoQubitState prod = testing::random_product(rng);
  DiscordVerdict d = zero_discord_a(decompose(prod));
  CHECK(d.zero_discord);
  REQUIRE(d.direction);
  CHECK(frob_norm(prod.matrix() - dephase_a(prod.matrix(), *d.direction)) < 1e-12);

  d = zero_discord_a(decompose(bell_phi_plus()));
  CHECK_FALSE(d.zero_discord);
  CHECK(d.rank == 3);
  CHECK_FALSE(d.direction);

  d = zero_discord_a(decompose(lazy_discordant_compose(kLazyDiscordant)));
  CHECK_FALSE(d.zero_discord);
  CHECK(d.rank == 2);

  // Rank-one T with x off the singular axis: lazy fails and so does zero discord.
  d = zero_discord_a(fano({0.3, 0, 0}, RealMatrix3::diagonal(0, 0, 0.5)));
  CHECK_FALSE(d.zero_discord);
  d = zero_discord_a(fano({0, 0, 0.3}, RealMatrix3::diagonal(0, 0, 0.5)));
  CHECK(d.zero_discord);
  REQUIRE(d.direction);
  CHECK(std::abs(std::abs((*d.direction)[2]) - 1.0) < 1e-12);
}

TEST_CASE("zero-discord direction dephases random zero-discord states") {
  Rng rng(34);
  for (int k = 0; k < 300; ++k) {
    const TwoQubitState rho = testing::random_zero_discord(rng);
    const DiscordVerdict d = zero_discord_a(decompose(rho));
    REQUIRE(d.zero_discord);
    CHECK(frob_norm(rho.matrix() - dephase_a(rho.matrix(), *d.direction)) <= 1e-8);
  }
}

TEST_CASE("is_product") {
  Rng rng(35);
  ProductVerdict v = is_product(testing::random_product(rng));
  CHECK(v.product);
  CHECK(v.residual < 1e-15);

  v = is_product(bell_phi_plus());
  CHECK_FALSE(v.product);
  // ||Phi+ - I/4||_F = sqrt(3/16 * 4 ... ) computed directly: eigenvalues (3/4, -1/4 x3).
  CHECK(v.residual == doctest::Approx(std::sqrt(0.75 * 0.75 + 3 * 0.0625)).epsilon(1e-14));
  CHECK(v.residual > 0.5);

  // b sin beta = 0 and a = b cos beta: rho1 = rho2.
  v = is_product(separable_compose({0.5, pi / 2, 0.0, 0.6, 0.6}));
  CHECK(v.product);
}

TEST_CASE("separable_ppt") {
  Rng rng(36);
  SeparabilityVerdict v = separable_ppt(testing::random_product(rng));
  CHECK(v.separable);
  CHECK(v.negativity == 0.0);

  v = separable_ppt(bell_phi_plus());
  CHECK_FALSE(v.separable);
  CHECK(v.negativity == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(v.min_pt_eigenvalue == doctest::Approx(-0.5).epsilon(1e-12));

  v = separable_ppt(bd_compose({{0.3, 0.2, 0.1}}));
  CHECK(v.separable);
}

TEST_CASE("pure_schmidt") {
  SchmidtReport r = pure_schmidt(TwoQubitState::from_pure({1, 0, 0, 0}));
  CHECK(r.pure);
  REQUIRE(r.coefficients);
  CHECK(r.coefficients->first == doctest::Approx(1.0));
  CHECK(r.coefficients->second == doctest::Approx(0.0));
  CHECK(*r.lazy);

  r = pure_schmidt(bell_phi_plus());
  CHECK(r.pure);
  CHECK(r.coefficients->first == doctest::Approx(1 / std::sqrt(2.0)).epsilon(1e-12));
  CHECK(r.coefficients->second == doctest::Approx(1 / std::sqrt(2.0)).epsilon(1e-12));
  CHECK(*r.lazy);

  const TwoQubitState partial = TwoQubitState::from_pure({std::cos(pi / 8), 0, 0, std::sin(pi / 8)});
  r = pure_schmidt(partial);
  CHECK(r.pure);
  CHECK(r.coefficients->first == doctest::Approx(std::cos(pi / 8)).epsilon(1e-12));
  CHECK_FALSE(*r.lazy);
  const LazyVerdict lv = lazy_by_commutator(partial);
  CHECK_FALSE(lv.lazy);
  CHECK(lv.residual > 0.0);

  r = pure_schmidt(TwoQubitState::maximally_mixed());
  CHECK_FALSE(r.pure);
  CHECK_FALSE(r.coefficients);
  CHECK_FALSE(r.lazy);
}

TEST_CASE("pure-state laziness matches the commutator test") {
  Rng rng(37);
  for (int k = 0; k < 200; ++k) {
    TwoQubitState rho = TwoQubitState::from_pure(random_pure_vector(rng, 4));
    if (k % 3 == 0) rho = testing::conjugate(bell_phi_plus(), testing::random_local_unitary(rng));
    if (k % 3 == 1)
      rho = TwoQubitState::product(ComplexMatrix::projector(random_pure_vector(rng, 2)),
                                   ComplexMatrix::projector(random_pure_vector(rng, 2)));
    const SchmidtReport r = pure_schmidt(rho);
    REQUIRE(r.pure);
    CHECK(*r.lazy == lazy_by_commutator(rho).lazy);
    CHECK(*r.lazy == (k % 3 != 2));
  }
}

TEST_CASE("classify examples") {
  Classification c = classify(bell_phi_plus());
  CHECK(c.physical);
  CHECK(*c.lazy_a);
  CHECK_FALSE(*c.zero_discord_a);
  CHECK_FALSE(*c.separable);
  CHECK(*c.pure);

  c = classify(lazy_discordant_compose(kLazyDiscordant));
  CHECK(*c.lazy_a);
  CHECK_FALSE(*c.zero_discord_a);

  c = classify(TwoQubitState::maximally_mixed());
  CHECK(*c.product);
  CHECK(*c.zero_discord_a);
  CHECK(*c.lazy_a);
  CHECK(*c.separable);
  CHECK_FALSE(*c.pure);

  FanoParams bad;
  bad.t = RealMatrix3::diagonal(1, 1, 1);
  c = classify(compose(bad));
  CHECK_FALSE(c.physical);
  CHECK_FALSE(c.lazy_a);
  CHECK_FALSE(c.separable);
  CHECK(c.witnesses.min_eigenvalue == doctest::Approx(-0.5));
}

TEST_CASE("route disagreement outside the gray zone is reported") {
  // A state whose residuals are both far from tol cannot disagree, so
  // exercise the gray-zone path with a tiny off-axis perturbation instead.
  FanoParams p;
  p.x = {0.0, 0.0, 0.4};
  p.t = RealMatrix3::diagonal(0.0, 0.0, 0.5);
  p.t(0, 2) = 1.5e-9 / 0.4;  // |x × t_3| = 1.5e-9, commutator 0.75e-9
  const Classification c = classify(compose(p));
  CHECK(c.lazy_gray_zone);
  CHECK(*c.lazy_a);
  CHECK(c.witnesses.parallel_residual > 1e-9);
  CHECK(c.witnesses.commutator_norm <= 1e-9);
}

TEST_CASE("hierarchy inclusions and lazy-discordant characterization on structured ensembles") {
  Rng rng(38);
  int lazy_discordant = 0, zero_discord = 0, non_lazy = 0;
  for (std::size_t k = 0; k < 4000; ++k) {
    const TwoQubitState rho =
        k % 5 == 4 ? TwoQubitState(random_density_matrix(rng)) : testing::random_structured(rng, k);
    const Classification c = classify(rho);
    REQUIRE(c.physical);
    if (*c.product) CHECK(*c.zero_discord_a);
    if (*c.zero_discord_a) {
      CHECK(*c.lazy_a);
      CHECK(*c.separable);
    }
    const FanoParams p = decompose(rho);
    const bool x_zero_rank2 = norm(p.x) <= kDefaultTol && c.singular_values[1] > kDefaultTol;
    CHECK((*c.lazy_a && !*c.zero_discord_a) == x_zero_rank2);
    lazy_discordant += *c.lazy_a && !*c.zero_discord_a;
    zero_discord += *c.zero_discord_a;
    non_lazy += !*c.lazy_a;
  }
  CHECK(lazy_discordant > 1000);
  CHECK(zero_discord > 1000);
  CHECK(non_lazy > 500);
}

TEST_CASE("strictness witnesses") {
  // lazy ∧ discordant ∧ separable
  const Classification a = classify(lazy_discordant_compose(kLazyDiscordant));
  CHECK((*a.lazy_a && !*a.zero_discord_a && *a.separable));
  // lazy ∧ entangled
  const Classification b = classify(bd_compose({{0.5, 0.5, -0.5}}));
  CHECK((*b.lazy_a && !*b.separable));
  // separable ∧ ¬lazy
  const Classification c = classify(separable_compose(kNonLazyWitness));
  CHECK((*c.separable && !*c.lazy_a));
}

TEST_CASE("local-unitary invariance of verdicts") {
  Rng rng(39);
  for (std::size_t k = 0; k < 1000; ++k) {
    const TwoQubitState rho =
        k % 2 ? TwoQubitState(random_density_matrix(rng)) : testing::random_structured(rng, k / 2);
    const TwoQubitState moved = testing::conjugate(rho, testing::random_local_unitary(rng));
    const Classification c0 = classify(rho), c1 = classify(moved);
    CHECK(c0.product == c1.product);
    CHECK(c0.zero_discord_a == c1.zero_discord_a);
    CHECK(c0.lazy_a == c1.lazy_a);
    CHECK(c0.separable == c1.separable);
    CHECK(c0.pure == c1.pure);
  }
}

TEST_CASE("laziness with respect to B") {
  // rho_A ⊗ rho_B is lazy both ways; the lazy-discordant family has x = 0
  // but y != 0, so it is not lazy with respect to B.
  Rng rng(40);
  CHECK(lazy_b(testing::random_product(rng)).lazy);
  CHECK_FALSE(lazy_b(lazy_discordant_compose(kLazyDiscordant)).lazy);
  CHECK(lazy_b(bell_phi_plus()).lazy);
}
