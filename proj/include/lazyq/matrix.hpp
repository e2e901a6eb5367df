#pragma once

// Small dense matrix kernels for two-qubit work: 2x2 and 4x4 complex
// matrices, real 3x3 matrices, and the handful of decompositions the rest
// of the library needs (Hermitian eigensolver, 3x3 SVD, exp(-iHt)).

#include <array>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace lazyq {

using Complex = std::complex<double>;

/// Thrown when matrix shapes do not fit the requested operation.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown when an operation that requires a Hermitian argument gets one
/// that is not Hermitian within tolerance.
class NotHermitianError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Row-major dense complex matrix.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols);
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix zeros(std::size_t rows, std::size_t cols);
  static ComplexMatrix diagonal(const std::vector<Complex>& d);
  /// |v><v| for a column vector given as a sequence of amplitudes.
  static ComplexMatrix projector(const std::vector<Complex>& v);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  const std::vector<Complex>& entries() const noexcept { return entries_; }

  Complex& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }

  ComplexMatrix adjoint() const;
  ComplexMatrix transpose() const;
  Complex trace() const;

  ComplexMatrix& operator+=(const ComplexMatrix& o);
  ComplexMatrix& operator-=(const ComplexMatrix& o);
  ComplexMatrix& operator*=(Complex s);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> entries_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(Complex s, ComplexMatrix m);
ComplexMatrix operator*(ComplexMatrix m, Complex s);

/// Pauli matrix sigma_i for i in {0,1,2,3}; index 0 is the 2x2 identity.
const ComplexMatrix& pauli(int i);

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);
double frob_norm(const ComplexMatrix& m);
/// Frobenius distance ||m - m^dagger||.
double hermiticity_defect(const ComplexMatrix& m);

// Two-qubit partial operations. Index convention: basis |a b> maps to row
// 2*a + b, so A is the slow (left) factor.
ComplexMatrix partial_trace_b(const ComplexMatrix& m);
ComplexMatrix partial_trace_a(const ComplexMatrix& m);
ComplexMatrix partial_transpose_b(const ComplexMatrix& m);

struct HermitianEigen {
  std::vector<double> values;  ///< ascending
  ComplexMatrix vectors;       ///< columns are eigenvectors
};

/// Cyclic Jacobi eigensolver for Hermitian matrices. Throws
/// NotHermitianError when ||m - m^dagger||_F > tol * max(1, ||m||_F).
HermitianEigen herm_eig(const ComplexMatrix& m, double tol = 1e-10);

/// exp(-i h t) for Hermitian h.
ComplexMatrix herm_exp(const ComplexMatrix& h, double t, double tol = 1e-10);

/// Real 3x3 matrix, row-major.
struct RealMatrix3 {
  std::array<std::array<double, 3>, 3> a{};

  double& operator()(int r, int c) { return a[r][c]; }
  double operator()(int r, int c) const { return a[r][c]; }

  static RealMatrix3 identity();
  static RealMatrix3 diagonal(double d0, double d1, double d2);

  RealMatrix3 transpose() const;
  double determinant() const;
  std::array<double, 3> column(int c) const { return {a[0][c], a[1][c], a[2][c]}; }
  std::array<double, 3> row(int r) const { return a[r]; }
};

using Vec3 = std::array<double, 3>;

RealMatrix3 operator-(const RealMatrix3& x, const RealMatrix3& y);
RealMatrix3 operator*(const RealMatrix3& x, const RealMatrix3& y);
Vec3 operator*(const RealMatrix3& m, const Vec3& v);
double frob_norm(const RealMatrix3& m);
double norm(const Vec3& v);
double dot(const Vec3& a, const Vec3& b);
Vec3 cross(const Vec3& a, const Vec3& b);

struct Svd3 {
  RealMatrix3 u;
  Vec3 s;  ///< descending, nonnegative
  RealMatrix3 v;
};

/// One-sided (Hestenes) Jacobi SVD: t = u * diag(s) * v^T.
Svd3 svd3(const RealMatrix3& t);

}  // namespace lazyq
