#include "lazyq/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "lazyq/random.hpp"

namespace lazyq {

namespace {

double spectral_norm(const ComplexMatrix& h) {
  const auto w = herm_eig(h, 1e-12).values;
  return std::max(std::abs(w.front()), std::abs(w.back()));
}

void require_physical(const TwoQubitState& rho, const char* op) {
  const Physicality ph = validate(rho);
  if (!ph.physical) throw InvalidStateError(std::string(op) + ": " + ph.reason);
}

double entropy_bits(const ComplexMatrix& rho_a) {
  double s = 0.0;
  for (double w : herm_eig(rho_a, kStateTol).values) {
    if (w <= 1e-12) continue;
    s -= w * std::log2(w);
  }
  return s;
}

}  // namespace

CouplingHamiltonian random_hamiltonian(std::uint64_t seed) {
  Rng rng(seed);
  const ComplexMatrix g = ginibre(rng, 4, 4);
  ComplexMatrix h = 0.5 * (g + g.adjoint());
  h *= 1.0 / spectral_norm(h);
  CouplingHamiltonian out{std::move(h), 1.0, seed};
  out.norm_scale = spectral_norm(out.h);
  return out;
}

CouplingHamiltonian make_hamiltonian(ComplexMatrix h) {
  if (h.rows() != 4 || h.cols() != 4) throw DimensionError("make_hamiltonian: expected 4x4");
  if (hermiticity_defect(h) > 1e-12 * std::max(1.0, frob_norm(h))) {
    throw NotHermitianError("make_hamiltonian: coupling is not Hermitian");
  }
  const double scale = spectral_norm(h);
  return {std::move(h), scale, 0};
}

TwoQubitState evolve(const TwoQubitState& rho, const CouplingHamiltonian& h, double t) {
  require_physical(rho, "evolve");
  const ComplexMatrix u = herm_exp(h.h, t);
  return TwoQubitState(u * rho.matrix() * u.adjoint());
}

double entropy_a(const TwoQubitState& rho) {
  require_physical(rho, "entropy_a");
  return entropy_bits(partial_trace_b(rho.matrix()));
}

RateReport entropy_rate_at_zero(const TwoQubitState& rho, const CouplingHamiltonian& h,
                                double step) {
  require_physical(rho, "entropy_rate_at_zero");
  const double max_step = 1e-3 / std::max(h.norm_scale, 1e-300);
  if (!(step > 0.0) || step > max_step * (1.0 + 1e-12)) {
    throw std::invalid_argument("entropy_rate_at_zero: step must lie in (0, 1e-3 / ||h||]");
  }
  RateReport r;
  r.step = step;
  r.seed = h.seed;
  r.caution = herm_eig(partial_trace_b(rho.matrix()), kStateTol).values.front() <= 1e-12;

  // Unitary conjugation, skipping the per-call physicality check.
  auto marginal_at = [&](double t) {
    const ComplexMatrix u = herm_exp(h.h, t);
    return partial_trace_b(u * rho.matrix() * u.adjoint());
  };
  r.rate = (entropy_bits(marginal_at(step)) - entropy_bits(marginal_at(-step))) / (2.0 * step);
  return r;
}

DynamicsCheck laziness_dynamics_check(const TwoQubitState& rho, std::size_t n_hamiltonians,
                                      std::uint64_t seed, double step,
                                      const RateThresholds& thresholds, double tol) {
  const LazyVerdict lazy = lazy_by_commutator(rho, tol);
  DynamicsCheck out;
  out.lazy = lazy.lazy;
  out.commutator_norm = lazy.residual;
  out.rates.reserve(n_hamiltonians);
  for (std::size_t k = 0; k < n_hamiltonians; ++k) {
    const CouplingHamiltonian h = random_hamiltonian(stream_seed(seed, k));
    out.rates.push_back(entropy_rate_at_zero(rho, h, step));
    out.max_abs_rate = std::max(out.max_abs_rate, std::abs(out.rates.back().rate));
  }
  if (out.lazy) {
    out.verdict = out.max_abs_rate <= thresholds.zero ? DynamicsVerdict::consistent
                                                      : DynamicsVerdict::inconsistent;
  } else if (out.max_abs_rate > thresholds.nonzero) {
    out.verdict = DynamicsVerdict::consistent;
  } else {
    out.verdict = out.commutator_norm <= thresholds.gray_commutator ? DynamicsVerdict::gray_zone
                                                                    : DynamicsVerdict::inconsistent;
  }
  return out;
}

}  // namespace lazyq
