#pragma once

// Two witness families for the strictness of the hierarchy:
//
//  * lazy but discordant:  1/4 (I⊗I + y1 I⊗s1 + l2 s2⊗s2 + l3 s3⊗s3)
//  * separable but (generically) not lazy:
//      p |psi1><psi1| ⊗ rho1 + (1-p) |psi2><psi2| ⊗ rho2
//    with psi1 along +z, psi2 along (sin a, 0, cos a) on the Bloch sphere,
//    rho1 with Bloch vector a (0,0,1), rho2 with b (sin b, 0, cos b).

#include <array>
#include <stdexcept>
#include <string_view>

#include "lazyq/fano.hpp"

namespace lazyq {

/// Raised when family parameters violate the family's constraints. The
/// message names the violated inequality.
class FamilyParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct LazyDiscordantParams {
  double y1 = 0.0;
  double lambda2 = 0.0;
  double lambda3 = 0.0;
};

/// Throws FamilyParameterError unless 0 < lambda2 < lambda3 and
/// y1^2 + (lambda3 + lambda2)^2 <= 1.
void check(const LazyDiscordantParams& q);

TwoQubitState lazy_discordant_compose(const LazyDiscordantParams& q);

/// 1/4 (1 ± sqrt(y1^2 + (l3 ± l2)^2)) in the order (+,+), (-,+), (+,-), (-,-)
/// where the second sign is the one inside the square root.
std::array<double, 4> lazy_discordant_spectrum(const LazyDiscordantParams& q);

struct SeparableFamilyParams {
  double p = 0.5;
  double alpha = 0.0;
  double beta = 0.0;
  double a = 0.0;
  double b = 0.0;
};

/// Throws FamilyParameterError unless p in (0,1), alpha, beta in [0, pi],
/// a, b in [0, 1].
void check(const SeparableFamilyParams& s);

TwoQubitState separable_compose(const SeparableFamilyParams& s);

/// Closed-form Fano parameters of separable_compose(s).
FanoParams separable_fano(const SeparableFamilyParams& s);

enum class SeparableLabel { product, zero_discord, not_lazy };

std::string_view to_string(SeparableLabel l);

/// Case analysis of the separable family: product when psi1 = psi2
/// (alpha = 0), rho1 = rho2 (b sin beta = 0 and a = b cos beta, which
/// includes a = b = 0); zero discord when psi1 ⟂ psi2 (alpha = pi);
/// otherwise not lazy.
SeparableLabel separable_classify(const SeparableFamilyParams& s, double tol = 1e-9);

/// Smallest distance of s to any case boundary of separable_classify,
/// measured on the defining quantities (alpha, pi - alpha, max(a, b),
/// max(|b sin beta|, |a - b cos beta|)).
double separable_boundary_distance(const SeparableFamilyParams& s);

}  // namespace lazyq
