#include "lazyq/classify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace lazyq {

namespace {

void require_physical(const TwoQubitState& rho, const char* op) {
  const Physicality ph = validate(rho);
  if (!ph.physical) throw InvalidStateError(std::string(op) + ": " + ph.reason);
}

ComplexMatrix bloch_operator(const Vec3& n) {
  ComplexMatrix m(2, 2);
  for (int i = 0; i < 3; ++i) m += n[i] * pauli(i + 1);
  return m;
}

}  // namespace

LazyVerdict lazy_by_commutator(const TwoQubitState& rho, double tol) {
  require_physical(rho, "lazy_by_commutator");
  const ComplexMatrix marginal = kron(partial_trace_b(rho.matrix()), pauli(0));
  const double n = frob_norm(commutator(rho.matrix(), marginal));
  return {n <= tol, n};
}

LazyVerdict lazy_by_parallelism(const FanoParams& p, double tol) {
  const double xn = norm(p.x);
  double worst = 0.0;
  for (int j = 0; j < 3; ++j) {
    const Vec3 col = p.t.column(j);
    const double r = norm(cross(p.x, col)) / std::max(1.0, xn * norm(col));
    worst = std::max(worst, r);
  }
  return {worst <= tol, worst};
}

ComplexMatrix dephase_a(const ComplexMatrix& rho, const Vec3& n) {
  const ComplexMatrix ns = bloch_operator(n);
  const ComplexMatrix p0 = kron(0.5 * (pauli(0) + ns), pauli(0));
  const ComplexMatrix p1 = kron(0.5 * (pauli(0) - ns), pauli(0));
  return p0 * rho * p0 + p1 * rho * p1;
}

DiscordVerdict zero_discord_a(const FanoParams& p, double tol) {
  const NormalForm nf = normal_form(p);
  DiscordVerdict out;
  out.rank = static_cast<int>(std::count_if(nf.sigma.begin(), nf.sigma.end(),
                                            [&](double s) { return s > tol; }));
  std::optional<Vec3> candidate;
  if (out.rank == 0) {
    const double xn = norm(p.x);
    candidate = xn > tol ? Vec3{p.x[0] / xn, p.x[1] / xn, p.x[2] / xn} : Vec3{0.0, 0.0, 1.0};
  } else if (out.rank == 1) {
    // Largest singular value sits on axis 2 of the normal form.
    if (std::hypot(nf.x_rot[0], nf.x_rot[1]) <= tol) candidate = nf.o_a.row(2);
  }
  if (!candidate) {
    out.dephasing_residual = std::numeric_limits<double>::quiet_NaN();
    return out;
  }
  const ComplexMatrix rho = compose(p).matrix();
  out.dephasing_residual = frob_norm(rho - dephase_a(rho, *candidate));
  if (out.dephasing_residual <= 10.0 * tol) {
    out.zero_discord = true;
    out.direction = candidate;
  }
  return out;
}

ProductVerdict is_product(const TwoQubitState& rho, double tol) {
  require_physical(rho, "is_product");
  const ComplexMatrix& m = rho.matrix();
  const double r = frob_norm(m - kron(partial_trace_b(m), partial_trace_a(m)));
  return {r <= tol, r};
}

SeparabilityVerdict separable_ppt(const TwoQubitState& rho, double tol) {
  require_physical(rho, "separable_ppt");
  const HermitianEigen e = herm_eig(partial_transpose_b(rho.matrix()), kStateTol);
  SeparabilityVerdict out;
  out.min_pt_eigenvalue = e.values.front();
  for (double w : e.values)
    if (w < 0.0) out.negativity -= w;
  out.separable = out.min_pt_eigenvalue >= -tol;
  return out;
}

SchmidtReport pure_schmidt(const TwoQubitState& rho, double tol) {
  require_physical(rho, "pure_schmidt");
  const ComplexMatrix& m = rho.matrix();
  SchmidtReport out;
  out.purity = (m * m).trace().real();
  out.pure = out.purity >= 1.0 - tol;
  if (!out.pure) return out;
  const HermitianEigen e = herm_eig(partial_trace_b(m), kStateTol);
  const double w_small = std::max(0.0, e.values[0]);
  const double w_large = std::max(0.0, e.values[1]);
  out.coefficients = std::make_pair(std::sqrt(w_large), std::sqrt(w_small));
  // Schmidt probabilities (1, 0) or (1/2, 1/2).
  out.lazy = w_small <= tol || (w_large - w_small) <= tol;
  return out;
}

Classification classify(const TwoQubitState& rho, double tol) {
  Classification c;
  const Physicality ph = validate(rho, tol);
  c.witnesses.min_eigenvalue = ph.min_eigenvalue;
  if (!ph.physical) {
    c.reason = ph.reason;
    return c;
  }
  c.physical = true;

  const FanoParams p = decompose(rho);
  const LazyVerdict by_comm = lazy_by_commutator(rho, tol);
  const LazyVerdict by_par = lazy_by_parallelism(p, tol);
  c.witnesses.commutator_norm = by_comm.residual;
  c.witnesses.parallel_residual = by_par.residual;
  if (by_comm.lazy != by_par.lazy) {
    auto in_gray = [&](double r) { return r >= 0.1 * tol && r <= 10.0 * tol; };
    if (!(in_gray(by_comm.residual) && in_gray(by_par.residual))) {
      throw ConsistencyError("classify: laziness routes disagree (commutator norm " +
                             std::to_string(by_comm.residual) + ", parallel residual " +
                             std::to_string(by_par.residual) + ")");
    }
    c.lazy_gray_zone = true;
  }
  c.lazy_a = by_comm.lazy;

  const DiscordVerdict zd = zero_discord_a(p, tol);
  c.zero_discord_a = zd.zero_discord;
  c.discord_direction = zd.direction;
  c.singular_values = normal_form(p).sigma;

  const ProductVerdict prod = is_product(rho, tol);
  c.product = prod.product;
  c.witnesses.product_residual = prod.residual;

  const SeparabilityVerdict sep = separable_ppt(rho, tol);
  c.separable = sep.separable;
  c.witnesses.negativity = sep.negativity;

  c.pure = pure_schmidt(rho, tol).pure;
  return c;
}

TwoQubitState swap_parties(const TwoQubitState& rho) {
  static const ComplexMatrix swap{{1.0, 0.0, 0.0, 0.0},
                                  {0.0, 0.0, 1.0, 0.0},
                                  {0.0, 1.0, 0.0, 0.0},
                                  {0.0, 0.0, 0.0, 1.0}};
  return TwoQubitState(swap * rho.matrix() * swap);
}

LazyVerdict lazy_b(const TwoQubitState& rho, double tol) {
  return lazy_by_commutator(swap_parties(rho), tol);
}

}  // namespace lazyq
