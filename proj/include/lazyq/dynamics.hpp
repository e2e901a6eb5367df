#pragma once

// Entropy rate of subsystem A at t = 0 under unitary coupling dynamics.
// A state is lazy exactly when this rate vanishes for every coupling; the
// functions here probe that with sampled Hamiltonians.

#include <cstdint>
#include <vector>

#include "lazyq/classify.hpp"

namespace lazyq {

struct CouplingHamiltonian {
  ComplexMatrix h;
  double norm_scale = 1.0;  ///< spectral norm of h
  std::uint64_t seed = 0;
};

/// GUE-style sample h = (g + g^dagger)/2 from a Ginibre g, rescaled to unit
/// spectral norm. Deterministic in seed.
CouplingHamiltonian random_hamiltonian(std::uint64_t seed);

/// Wrap an explicit Hermitian matrix.
CouplingHamiltonian make_hamiltonian(ComplexMatrix h);

/// e^{-iht} rho e^{iht}.
TwoQubitState evolve(const TwoQubitState& rho, const CouplingHamiltonian& h, double t);

/// Von Neumann entropy of rho_A in bits.
double entropy_a(const TwoQubitState& rho);

struct RateReport {
  double rate = 0.0;  ///< d/dt S(rho_A) at t = 0, bits per unit time
  double step = 0.0;
  std::uint64_t seed = 0;
  /// rho_A is pure within 1e-12; the entropy derivative is ill-conditioned.
  bool caution = false;
};

inline constexpr double kDefaultStep = 1e-4;

/// Central difference [S(+step) - S(-step)] / (2 step). Requires
/// 0 < step <= 1e-3 / norm_scale.
RateReport entropy_rate_at_zero(const TwoQubitState& rho, const CouplingHamiltonian& h,
                                double step = kDefaultStep);

struct RateThresholds {
  double zero = 1e-6;     ///< lazy states must stay at or below this
  double nonzero = 1e-3;  ///< non-lazy states must exceed this
  /// Non-lazy states whose commutator norm is at most this are allowed to
  /// miss the nonzero threshold; they are reported as gray zone.
  double gray_commutator = 1e-3;
};

enum class DynamicsVerdict { consistent, gray_zone, inconsistent };

struct DynamicsCheck {
  double max_abs_rate = 0.0;
  std::vector<RateReport> rates;
  bool lazy = false;  ///< classifier verdict
  double commutator_norm = 0.0;
  DynamicsVerdict verdict = DynamicsVerdict::inconsistent;
  bool consistent_with_classifier() const { return verdict != DynamicsVerdict::inconsistent; }
};

/// Max |rate| over n couplings random_hamiltonian(stream_seed(seed, k)),
/// compared against the commutator verdict.
DynamicsCheck laziness_dynamics_check(const TwoQubitState& rho, std::size_t n_hamiltonians,
                                      std::uint64_t seed, double step = kDefaultStep,
                                      const RateThresholds& thresholds = {},
                                      double tol = kDefaultTol);

}  // namespace lazyq
