#pragma once

// Predicates of the laziness / discord / entanglement hierarchy for two
// qubits, and a combined classifier that runs them all.

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "lazyq/fano.hpp"

namespace lazyq {

inline constexpr double kDefaultTol = 1e-9;

/// Raised when two independent routes to the same verdict disagree outside
/// their declared gray zone.
class ConsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct LazyVerdict {
  bool lazy = false;
  double residual = 0.0;
};

/// ||[rho, rho_A ⊗ I]||_F <= tol. Throws InvalidStateError on unphysical
/// input.
LazyVerdict lazy_by_commutator(const TwoQubitState& rho, double tol = kDefaultTol);

/// x parallel to every column of T. Residual is
/// max_j |x × t_j| / max(1, |x| |t_j|).
LazyVerdict lazy_by_parallelism(const FanoParams& p, double tol = kDefaultTol);

struct DiscordVerdict {
  bool zero_discord = false;
  /// Measurement direction n on A (original frame) when zero_discord.
  std::optional<Vec3> direction;
  /// ||rho - sum_k (P_k⊗I) rho (P_k⊗I)|| for the candidate direction;
  /// NaN when there is no candidate.
  double dephasing_residual = 0.0;
  int rank = 0;  ///< number of singular values of T above tol
};

/// Zero discord with respect to A. Candidates come from the normal form:
/// T = 0 (any n parallel to x) or rank-one T with x along the singular
/// axis. A candidate is accepted only if the dephasing residual is at most
/// 10 * tol.
DiscordVerdict zero_discord_a(const FanoParams& p, double tol = kDefaultTol);

/// Projective dephasing of A along n: sum_k (P_k⊗I) rho (P_k⊗I), with
/// P_{0,1} = (I ± n.sigma)/2.
ComplexMatrix dephase_a(const ComplexMatrix& rho, const Vec3& n);

struct ProductVerdict {
  bool product = false;
  double residual = 0.0;  ///< ||rho - rho_A ⊗ rho_B||_F
};
ProductVerdict is_product(const TwoQubitState& rho, double tol = kDefaultTol);

struct SeparabilityVerdict {
  bool separable = false;
  double negativity = 0.0;
  double min_pt_eigenvalue = 0.0;
};
/// Partial-transpose criterion, exact for 2x2.
SeparabilityVerdict separable_ppt(const TwoQubitState& rho, double tol = kDefaultTol);

struct SchmidtReport {
  bool pure = false;
  double purity = 0.0;  ///< tr(rho^2)
  /// Descending Schmidt coefficients; present only for pure states.
  std::optional<std::pair<double, double>> coefficients;
  /// Present only for pure states: product or maximally entangled.
  std::optional<bool> lazy;
};
SchmidtReport pure_schmidt(const TwoQubitState& rho, double tol = kDefaultTol);

struct Witnesses {
  double commutator_norm = 0.0;
  double parallel_residual = 0.0;
  double negativity = 0.0;
  double min_eigenvalue = 0.0;
  double product_residual = 0.0;
};

struct Classification {
  bool physical = false;
  std::string reason;  ///< why the state is unphysical
  std::optional<bool> pure;
  std::optional<bool> product;
  std::optional<bool> zero_discord_a;
  std::optional<bool> lazy_a;
  std::optional<bool> separable;
  Witnesses witnesses;
  Vec3 singular_values{};  ///< ascending
  std::optional<Vec3> discord_direction;
  /// Both laziness residuals fell inside [tol/10, 10 tol] and the routes
  /// disagreed; the commutator verdict was kept.
  bool lazy_gray_zone = false;
};

/// Runs every predicate. Unphysical input yields physical = false with the
/// remaining verdicts empty. Throws ConsistencyError when the commutator and
/// parallelism routes disagree outside the gray zone.
Classification classify(const TwoQubitState& rho, double tol = kDefaultTol);

/// Exchange the roles of A and B.
TwoQubitState swap_parties(const TwoQubitState& rho);

/// Laziness with respect to B.
LazyVerdict lazy_b(const TwoQubitState& rho, double tol = kDefaultTol);

}  // namespace lazyq
