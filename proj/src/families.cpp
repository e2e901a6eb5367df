#include "lazyq/families.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace lazyq {

void check(const LazyDiscordantParams& q) {
  if (!(q.lambda2 > 0.0)) {
    throw FamilyParameterError("lazy-discordant: requires 0 < lambda2 (got lambda2 = " +
                               std::to_string(q.lambda2) + ")");
  }
  if (!(q.lambda2 < q.lambda3)) {
    throw FamilyParameterError("lazy-discordant: requires lambda2 < lambda3 (got " +
                               std::to_string(q.lambda2) + " >= " + std::to_string(q.lambda3) + ")");
  }
  const double lhs = q.y1 * q.y1 + (q.lambda3 + q.lambda2) * (q.lambda3 + q.lambda2);
  if (!(lhs <= 1.0)) {
    std::ostringstream os;
    os << "lazy-discordant: requires y1^2 + (lambda3 + lambda2)^2 <= 1 (got " << lhs << ")";
    throw FamilyParameterError(os.str());
  }
}

TwoQubitState lazy_discordant_compose(const LazyDiscordantParams& q) {
  check(q);
  FanoParams f;
  f.y = {q.y1, 0.0, 0.0};
  f.t = RealMatrix3::diagonal(0.0, q.lambda2, q.lambda3);
  return compose(f);
}

std::array<double, 4> lazy_discordant_spectrum(const LazyDiscordantParams& q) {
  const double r_plus = std::sqrt(q.y1 * q.y1 + (q.lambda3 + q.lambda2) * (q.lambda3 + q.lambda2));
  const double r_minus = std::sqrt(q.y1 * q.y1 + (q.lambda3 - q.lambda2) * (q.lambda3 - q.lambda2));
  return {0.25 * (1.0 + r_plus), 0.25 * (1.0 - r_plus), 0.25 * (1.0 + r_minus),
          0.25 * (1.0 - r_minus)};
}

void check(const SeparableFamilyParams& s) {
  constexpr double pi = std::numbers::pi;
  auto fail = [](const std::string& what) { throw FamilyParameterError("separable: " + what); };
  if (!(s.p > 0.0 && s.p < 1.0)) fail("requires 0 < p < 1 (got p = " + std::to_string(s.p) + ")");
  if (!(s.alpha >= 0.0 && s.alpha <= pi))
    fail("requires 0 <= alpha <= pi (got alpha = " + std::to_string(s.alpha) + ")");
  if (!(s.beta >= 0.0 && s.beta <= pi))
    fail("requires 0 <= beta <= pi (got beta = " + std::to_string(s.beta) + ")");
  if (!(s.a >= 0.0 && s.a <= 1.0)) fail("requires 0 <= a <= 1 (got a = " + std::to_string(s.a) + ")");
  if (!(s.b >= 0.0 && s.b <= 1.0)) fail("requires 0 <= b <= 1 (got b = " + std::to_string(s.b) + ")");
}

TwoQubitState separable_compose(const SeparableFamilyParams& s) {
  check(s);
  const ComplexMatrix psi1 = qubit_from_bloch({0.0, 0.0, 1.0});
  const ComplexMatrix psi2 = qubit_from_bloch({std::sin(s.alpha), 0.0, std::cos(s.alpha)});
  const ComplexMatrix rho1 = qubit_from_bloch({0.0, 0.0, s.a});
  const ComplexMatrix rho2 = qubit_from_bloch({s.b * std::sin(s.beta), 0.0, s.b * std::cos(s.beta)});
  return TwoQubitState(s.p * kron(psi1, rho1) + (1.0 - s.p) * kron(psi2, rho2));
}

FanoParams separable_fano(const SeparableFamilyParams& s) {
  check(s);
  const double sa = std::sin(s.alpha), ca = std::cos(s.alpha);
  const double sb = std::sin(s.beta), cb = std::cos(s.beta);
  const double q = 1.0 - s.p;
  FanoParams f;
  f.x = {q * sa, 0.0, s.p + q * ca};
  f.y = {s.b * q * sb, 0.0, s.a * s.p + s.b * q * cb};
  // Column 1, column 2 = 0, column 3.
  f.t(0, 0) = s.b * q * sa * sb;
  f.t(2, 0) = s.b * q * ca * sb;
  f.t(0, 2) = s.b * q * sa * cb;
  f.t(2, 2) = s.a * s.p + s.b * q * ca * cb;
  return f;
}

std::string_view to_string(SeparableLabel l) {
  switch (l) {
    case SeparableLabel::product: return "product";
    case SeparableLabel::zero_discord: return "zero_discord";
    case SeparableLabel::not_lazy: return "not_lazy";
  }
  return "unknown";
}

SeparableLabel separable_classify(const SeparableFamilyParams& s, double tol) {
  check(s);
  const bool same_pure = s.alpha <= tol;
  const bool same_mixed =
      std::max(s.a, s.b) <= tol ||
      (std::abs(s.b * std::sin(s.beta)) <= tol && std::abs(s.a - s.b * std::cos(s.beta)) <= tol);
  if (same_pure || same_mixed) return SeparableLabel::product;
  if (std::numbers::pi - s.alpha <= tol) return SeparableLabel::zero_discord;
  return SeparableLabel::not_lazy;
}

double separable_boundary_distance(const SeparableFamilyParams& s) {
  const double mixed = std::max(std::abs(s.b * std::sin(s.beta)), std::abs(s.a - s.b * std::cos(s.beta)));
  return std::min({s.alpha, std::numbers::pi - s.alpha, std::max(s.a, s.b), mixed});
}

}  // namespace lazyq
