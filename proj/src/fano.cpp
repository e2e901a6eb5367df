#include "lazyq/fano.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace lazyq {

TwoQubitState::TwoQubitState(ComplexMatrix m) : m_(std::move(m)) {
  if (m_.rows() != 4 || m_.cols() != 4) {
    throw DimensionError("TwoQubitState: expected a 4x4 matrix");
  }
}

TwoQubitState TwoQubitState::maximally_mixed() {
  return TwoQubitState(0.25 * ComplexMatrix::identity(4));
}

TwoQubitState TwoQubitState::from_pure(const std::vector<Complex>& amplitudes) {
  if (amplitudes.size() != 4) throw DimensionError("from_pure: expected 4 amplitudes");
  double n2 = 0.0;
  for (const auto& a : amplitudes) n2 += std::norm(a);
  if (n2 <= 0.0) throw InvalidStateError("from_pure: zero vector");
  return TwoQubitState((1.0 / n2) * ComplexMatrix::projector(amplitudes));
}

TwoQubitState TwoQubitState::product(const ComplexMatrix& rho_a, const ComplexMatrix& rho_b) {
  return TwoQubitState(kron(rho_a, rho_b));
}

TwoQubitState bell_phi_plus() {
  const double h = 1.0 / std::sqrt(2.0);
  return TwoQubitState::from_pure({h, 0.0, 0.0, h});
}

ComplexMatrix qubit_from_bloch(const Vec3& r) {
  ComplexMatrix m = pauli(0);
  for (int i = 0; i < 3; ++i) m += r[i] * pauli(i + 1);
  return 0.5 * m;
}

Physicality validate(const TwoQubitState& rho, double tol) {
  Physicality out;
  const ComplexMatrix& m = rho.matrix();
  out.hermiticity_defect = hermiticity_defect(m);
  out.hermitian = out.hermiticity_defect <= kStateTol * std::max(1.0, frob_norm(m));
  out.trace_deviation = std::abs(m.trace() - 1.0);
  if (!out.hermitian) {
    std::ostringstream os;
    os << "matrix is not Hermitian (defect " << out.hermiticity_defect << ")";
    out.reason = os.str();
    out.min_eigenvalue = std::nan("");
    return out;
  }
  out.min_eigenvalue = herm_eig(m, kStateTol).values.front();
  if (out.trace_deviation > kStateTol) {
    std::ostringstream os;
    os << "trace deviation " << out.trace_deviation << " exceeds " << kStateTol;
    out.reason = os.str();
    return out;
  }
  if (out.min_eigenvalue < -tol) {
    std::ostringstream os;
    os << "negative eigenvalue " << out.min_eigenvalue;
    out.reason = os.str();
    return out;
  }
  out.physical = true;
  return out;
}

FanoParams decompose(const TwoQubitState& rho) {
  const ComplexMatrix& m = rho.matrix();
  const double defect = hermiticity_defect(m);
  if (defect > kStateTol * std::max(1.0, frob_norm(m))) {
    throw InvalidStateError("decompose: matrix is not Hermitian");
  }
  if (std::abs(m.trace() - 1.0) > kStateTol) {
    throw InvalidStateError("decompose: trace deviates from 1");
  }
  // tr(rho P) for P = s_i ⊗ s_j; P is Hermitian so the trace is real.
  auto expect = [&](int i, int j) {
    const ComplexMatrix p = kron(pauli(i), pauli(j));
    Complex s = 0.0;
    for (std::size_t r = 0; r < 4; ++r)
      for (std::size_t c = 0; c < 4; ++c) s += m(r, c) * p(c, r);
    return s.real();
  };
  FanoParams p;
  for (int i = 0; i < 3; ++i) {
    p.x[i] = expect(i + 1, 0);
    p.y[i] = expect(0, i + 1);
    for (int j = 0; j < 3; ++j) p.t(i, j) = expect(i + 1, j + 1);
  }
  return p;
}

TwoQubitState compose(const FanoParams& p) {
  ComplexMatrix m = ComplexMatrix::identity(4);
  for (int i = 0; i < 3; ++i) {
    m += p.x[i] * kron(pauli(i + 1), pauli(0));
    m += p.y[i] * kron(pauli(0), pauli(i + 1));
    for (int j = 0; j < 3; ++j) m += p.t(i, j) * kron(pauli(i + 1), pauli(j + 1));
  }
  return TwoQubitState(0.25 * m);
}

NormalForm normal_form(const FanoParams& p) {
  const Svd3 svd = svd3(p.t);
  NormalForm nf;
  // svd3 is descending; the normal form is ascending, so row k of o_a is
  // left singular vector 2-k.
  for (int k = 0; k < 3; ++k)
    for (int r = 0; r < 3; ++r) {
      nf.o_a(k, r) = svd.u(r, 2 - k);
      nf.o_b(k, r) = svd.v(r, 2 - k);
    }
  if (nf.o_a.determinant() < 0.0)
    for (int r = 0; r < 3; ++r) nf.o_a(0, r) = -nf.o_a(0, r);
  if (nf.o_b.determinant() < 0.0)
    for (int r = 0; r < 3; ++r) nf.o_b(0, r) = -nf.o_b(0, r);

  const RealMatrix3 diag = nf.o_a * p.t * nf.o_b.transpose();
  for (int k = 0; k < 3; ++k) {
    nf.d[k] = diag(k, k);
    nf.sigma[k] = svd.s[2 - k];
  }
  nf.x_rot = nf.o_a * p.x;
  nf.y_rot = nf.o_b * p.y;
  return nf;
}

RealMatrix3 rotation_from_su2(const ComplexMatrix& u) {
  RealMatrix3 r;
  const ComplexMatrix ud = u.adjoint();
  for (int j = 0; j < 3; ++j) {
    const ComplexMatrix img = u * pauli(j + 1) * ud;
    for (int i = 0; i < 3; ++i) r(i, j) = 0.5 * (pauli(i + 1) * img).trace().real();
  }
  return r;
}

ComplexMatrix su2_from_rotation(const RealMatrix3& o) {
  // Quaternion (w, v) from the rotation matrix (Shepperd), then
  // u = w I - i v.sigma, which rotates Bloch vectors by o.
  const double tr = o(0, 0) + o(1, 1) + o(2, 2);
  double w, x, y, z;
  if (tr > 0.0) {
    const double s = 2.0 * std::sqrt(1.0 + tr);
    w = 0.25 * s;
    x = (o(2, 1) - o(1, 2)) / s;
    y = (o(0, 2) - o(2, 0)) / s;
    z = (o(1, 0) - o(0, 1)) / s;
  } else if (o(0, 0) > o(1, 1) && o(0, 0) > o(2, 2)) {
    const double s = 2.0 * std::sqrt(1.0 + o(0, 0) - o(1, 1) - o(2, 2));
    w = (o(2, 1) - o(1, 2)) / s;
    x = 0.25 * s;
    y = (o(0, 1) + o(1, 0)) / s;
    z = (o(0, 2) + o(2, 0)) / s;
  } else if (o(1, 1) > o(2, 2)) {
    const double s = 2.0 * std::sqrt(1.0 + o(1, 1) - o(0, 0) - o(2, 2));
    w = (o(0, 2) - o(2, 0)) / s;
    x = (o(0, 1) + o(1, 0)) / s;
    y = 0.25 * s;
    z = (o(1, 2) + o(2, 1)) / s;
  } else {
    const double s = 2.0 * std::sqrt(1.0 + o(2, 2) - o(0, 0) - o(1, 1));
    w = (o(1, 0) - o(0, 1)) / s;
    x = (o(0, 2) + o(2, 0)) / s;
    y = (o(1, 2) + o(2, 1)) / s;
    z = 0.25 * s;
  }
  const double n = std::sqrt(w * w + x * x + y * y + z * z);
  w /= n;
  x /= n;
  y /= n;
  z /= n;
  return ComplexMatrix{{Complex(w, -z), Complex(-y, -x)}, {Complex(y, -x), Complex(w, z)}};
}

}  // namespace lazyq
