#pragma once

// Two-qubit states and their Pauli-basis (Fano) parametrization
//
//   rho = 1/4 (I⊗I + sum_i x_i s_i⊗I + sum_j y_j I⊗s_j + sum_ij T_ij s_i⊗s_j)
//
// plus the local-rotation normal form that diagonalizes T.

#include <stdexcept>
#include <string>

#include "lazyq/matrix.hpp"

namespace lazyq {

/// Hermiticity and unit-trace tolerance applied to every state entering the
/// library.
inline constexpr double kStateTol = 1e-9;

class InvalidStateError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A 4x4 density-matrix candidate in the computational basis |ab>, A the
/// left factor. Only the shape is enforced here; physicality is checked by
/// validate().
class TwoQubitState {
 public:
  explicit TwoQubitState(ComplexMatrix m);

  const ComplexMatrix& matrix() const noexcept { return m_; }
  Complex operator()(std::size_t r, std::size_t c) const { return m_(r, c); }

  static TwoQubitState maximally_mixed();
  static TwoQubitState from_pure(const std::vector<Complex>& amplitudes);
  static TwoQubitState product(const ComplexMatrix& rho_a, const ComplexMatrix& rho_b);

 private:
  ComplexMatrix m_;
};

/// |Phi+> = (|00> + |11>)/sqrt(2).
TwoQubitState bell_phi_plus();

/// rho = (I + r.sigma)/2 for a Bloch vector r.
ComplexMatrix qubit_from_bloch(const Vec3& r);

struct FanoParams {
  Vec3 x{};         ///< Bloch vector of A
  Vec3 y{};         ///< Bloch vector of B
  RealMatrix3 t{};  ///< correlation matrix T_ij = tr(rho s_i⊗s_j)
};

struct Physicality {
  bool physical = false;
  bool hermitian = false;
  double hermiticity_defect = 0.0;
  double trace_deviation = 0.0;  ///< |tr rho - 1|
  double min_eigenvalue = 0.0;
  std::string reason;  ///< empty when physical
};

/// Physical iff Hermitian and unit trace (within kStateTol) and the smallest
/// eigenvalue is >= -tol.
Physicality validate(const TwoQubitState& rho, double tol = 1e-9);

/// Throws InvalidStateError unless rho is Hermitian with unit trace.
FanoParams decompose(const TwoQubitState& rho);
TwoQubitState compose(const FanoParams& p);

struct NormalForm {
  Vec3 x_rot{};
  Vec3 y_rot{};
  Vec3 d{};      ///< signed diagonal of o_a t o_b^T, |d0| <= |d1| <= |d2|
  Vec3 sigma{};  ///< |d|, i.e. singular values of t, ascending
  RealMatrix3 o_a;
  RealMatrix3 o_b;
};

/// Rotations o_a, o_b in SO(3) with o_a t o_b^T diagonal. When det t < 0
/// one entry of d stays negative; it is placed on the smallest singular
/// value.
NormalForm normal_form(const FanoParams& p);

/// 2x2 SU(2) element whose adjoint action on Bloch vectors is the rotation
/// `o` (sign ambiguity resolved arbitrarily).
ComplexMatrix su2_from_rotation(const RealMatrix3& o);

/// Bloch rotation induced by u: R_ij = tr(s_i u s_j u^dagger)/2.
RealMatrix3 rotation_from_su2(const ComplexMatrix& u);

}  // namespace lazyq
