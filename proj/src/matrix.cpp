#include "lazyq/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace lazyq {

namespace {

void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError(std::string(op) + ": shape mismatch");
  }
}

void require_4x4(const ComplexMatrix& m, const char* op) {
  if (m.rows() != 4 || m.cols() != 4) {
    throw DimensionError(std::string(op) + ": expected a 4x4 matrix, got " +
                         std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
}

// Rotate so the first entry with non-negligible modulus is real and positive.
void fix_phase(ComplexMatrix& v, std::size_t col) {
  for (std::size_t r = 0; r < v.rows(); ++r) {
    const double mag = std::abs(v(r, col));
    if (mag > 1e-8) {
      const Complex phase = std::conj(v(r, col)) / mag;
      for (std::size_t k = 0; k < v.rows(); ++k) v(k, col) *= phase;
      v(r, col) = mag;
      return;
    }
  }
}

bool lex_less(const ComplexMatrix& v, std::size_t i, std::size_t j) {
  for (std::size_t r = 0; r < v.rows(); ++r) {
    const Complex a = v(r, i), b = v(r, j);
    if (a.real() != b.real()) return a.real() < b.real();
    if (a.imag() != b.imag()) return a.imag() < b.imag();
  }
  return false;
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) {
    throw DimensionError("ComplexMatrix: entry count does not match shape");
  }
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  entries_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionError("ComplexMatrix: ragged initializer");
    entries_.insert(entries_.end(), r.begin(), r.end());
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::zeros(std::size_t rows, std::size_t cols) {
  return ComplexMatrix(rows, cols);
}

ComplexMatrix ComplexMatrix::diagonal(const std::vector<Complex>& d) {
  ComplexMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

ComplexMatrix ComplexMatrix::projector(const std::vector<Complex>& v) {
  ComplexMatrix m(v.size(), v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) m(i, j) = v[i] * std::conj(v[j]);
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = std::conj((*this)(r, c));
  return out;
}

ComplexMatrix ComplexMatrix::transpose() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
  return out;
}

Complex ComplexMatrix::trace() const {
  if (!is_square()) throw DimensionError("trace: matrix is not square");
  Complex t = 0.0;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& o) {
  require_same_shape(*this, o, "operator+");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += o.entries_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& o) {
  require_same_shape(*this, o, "operator-");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= o.entries_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex s) {
  for (auto& e : entries_) e *= s;
  return *this;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
ComplexMatrix operator*(Complex s, ComplexMatrix m) { return m *= s; }
ComplexMatrix operator*(ComplexMatrix m, Complex s) { return m *= s; }

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) throw DimensionError("operator*: inner dimensions differ");
  ComplexMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex{}) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

const ComplexMatrix& pauli(int i) {
  using namespace std::complex_literals;
  static const std::array<ComplexMatrix, 4> sigma = {
      ComplexMatrix{{1.0, 0.0}, {0.0, 1.0}},
      ComplexMatrix{{0.0, 1.0}, {1.0, 0.0}},
      ComplexMatrix{{0.0, -1i}, {1i, 0.0}},
      ComplexMatrix{{1.0, 0.0}, {0.0, -1.0}},
  };
  if (i < 0 || i > 3) throw std::out_of_range("pauli: index must be in 0..3");
  return sigma[static_cast<std::size_t>(i)];
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
  return out;
}

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
  return a * b - b * a;
}

double frob_norm(const ComplexMatrix& m) {
  double s = 0.0;
  for (const auto& e : m.entries()) s += std::norm(e);
  return std::sqrt(s);
}

double hermiticity_defect(const ComplexMatrix& m) {
  if (!m.is_square()) throw DimensionError("hermiticity_defect: matrix is not square");
  double s = 0.0;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) s += std::norm(m(i, j) - std::conj(m(j, i)));
  return std::sqrt(s);
}

ComplexMatrix partial_trace_b(const ComplexMatrix& m) {
  require_4x4(m, "partial_trace_b");
  ComplexMatrix out(2, 2);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k) out(i, j) += m(2 * i + k, 2 * j + k);
  return out;
}

ComplexMatrix partial_trace_a(const ComplexMatrix& m) {
  require_4x4(m, "partial_trace_a");
  ComplexMatrix out(2, 2);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k) out(i, j) += m(2 * k + i, 2 * k + j);
  return out;
}

ComplexMatrix partial_transpose_b(const ComplexMatrix& m) {
  require_4x4(m, "partial_transpose_b");
  ComplexMatrix out(4, 4);
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b)
      for (std::size_t c = 0; c < 2; ++c)
        for (std::size_t d = 0; d < 2; ++d) out(2 * a + b, 2 * c + d) = m(2 * a + d, 2 * c + b);
  return out;
}

HermitianEigen herm_eig(const ComplexMatrix& m, double tol) {
  if (!m.is_square()) throw DimensionError("herm_eig: matrix is not square");
  const double scale = frob_norm(m);
  const double defect = hermiticity_defect(m);
  if (defect > tol * std::max(1.0, scale)) {
    throw NotHermitianError("herm_eig: matrix is not Hermitian (defect " +
                            std::to_string(defect) + ")");
  }

  const std::size_t n = m.rows();
  // Work on the exactly Hermitian part.
  ComplexMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = 0.5 * (m(i, j) + std::conj(m(j, i)));
  ComplexMatrix v = ComplexMatrix::identity(n);

  const double stop = 1e-14 * scale;
  for (int sweep = 0; sweep < 64; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off += 2.0 * std::norm(a(p, q));
    if (std::sqrt(off) <= stop) break;

    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double mag = std::abs(a(p, q));
        if (mag == 0.0) continue;
        // Phase e^{-i phi} on column q makes the (p,q) entry real, then a
        // real Jacobi rotation annihilates it. G = diag(1, e^{-i phi}) R.
        const Complex ph = std::conj(a(p, q)) / mag;
        const double app = a(p, p).real(), aqq = a(q, q).real();
        const double theta = (aqq - app) / (2.0 * mag);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const Complex gpp = c, gpq = s, gqp = -s * ph, gqq = c * ph;

        for (std::size_t k = 0; k < n; ++k) {
          const Complex akp = a(k, p), akq = a(k, q);
          a(k, p) = akp * gpp + akq * gqp;
          a(k, q) = akp * gpq + akq * gqq;
          const Complex vkp = v(k, p), vkq = v(k, q);
          v(k, p) = vkp * gpp + vkq * gqp;
          v(k, q) = vkp * gpq + vkq * gqq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const Complex apk = a(p, k), aqk = a(q, k);
          a(p, k) = std::conj(gpp) * apk + std::conj(gqp) * aqk;
          a(q, k) = std::conj(gpq) * apk + std::conj(gqq) * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
      }
    }
  }

  for (std::size_t c = 0; c < n; ++c) fix_phase(v, c);

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return a(i, i).real() < a(j, j).real();
  });
  // Near-degenerate clusters are ordered by eigenvector so the output is
  // independent of sweep history.
  const double tie = 1e-12 * std::max(1.0, scale);
  for (std::size_t start = 0; start < n;) {
    std::size_t end = start + 1;
    while (end < n && a(order[end], order[end]).real() - a(order[end - 1], order[end - 1]).real() <= tie) ++end;
    std::sort(order.begin() + static_cast<std::ptrdiff_t>(start), order.begin() + static_cast<std::ptrdiff_t>(end),
              [&](std::size_t i, std::size_t j) { return lex_less(v, i, j); });
    start = end;
  }

  HermitianEigen out{std::vector<double>(n), ComplexMatrix(n, n)};
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = a(order[k], order[k]).real();
    for (std::size_t r = 0; r < n; ++r) out.vectors(r, k) = v(r, order[k]);
  }
  return out;
}

ComplexMatrix herm_exp(const ComplexMatrix& h, double t, double tol) {
  const HermitianEigen e = herm_eig(h, tol);
  const std::size_t n = h.rows();
  ComplexMatrix out(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    const Complex phase = std::polar(1.0, -e.values[k] * t);
    for (std::size_t i = 0; i < n; ++i) {
      const Complex vik = e.vectors(i, k) * phase;
      for (std::size_t j = 0; j < n; ++j) out(i, j) += vik * std::conj(e.vectors(j, k));
    }
  }
  return out;
}

RealMatrix3 RealMatrix3::identity() { return diagonal(1.0, 1.0, 1.0); }

RealMatrix3 RealMatrix3::diagonal(double d0, double d1, double d2) {
  RealMatrix3 m;
  m.a[0][0] = d0;
  m.a[1][1] = d1;
  m.a[2][2] = d2;
  return m;
}

RealMatrix3 RealMatrix3::transpose() const {
  RealMatrix3 m;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m.a[i][j] = a[j][i];
  return m;
}

double RealMatrix3::determinant() const {
  return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
         a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
         a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
}

RealMatrix3 operator-(const RealMatrix3& x, const RealMatrix3& y) {
  RealMatrix3 m;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m.a[i][j] = x.a[i][j] - y.a[i][j];
  return m;
}

RealMatrix3 operator*(const RealMatrix3& x, const RealMatrix3& y) {
  RealMatrix3 m;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) m.a[i][j] += x.a[i][k] * y.a[k][j];
  return m;
}

Vec3 operator*(const RealMatrix3& m, const Vec3& v) {
  Vec3 out{};
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k) out[i] += m.a[i][k] * v[k];
  return out;
}

double frob_norm(const RealMatrix3& m) {
  double s = 0.0;
  for (const auto& r : m.a)
    for (double e : r) s += e * e;
  return std::sqrt(s);
}

double dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

double norm(const Vec3& v) { return std::sqrt(dot(v, v)); }

Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

Svd3 svd3(const RealMatrix3& t) {
  // Columns of w converge to mutually orthogonal vectors w = t * v.
  RealMatrix3 w = t;
  RealMatrix3 v = RealMatrix3::identity();
  for (int sweep = 0; sweep < 64; ++sweep) {
    bool rotated = false;
    for (int i = 0; i < 2; ++i) {
      for (int j = i + 1; j < 3; ++j) {
        double alpha = 0.0, beta = 0.0, gamma = 0.0;
        for (int k = 0; k < 3; ++k) {
          alpha += w.a[k][i] * w.a[k][i];
          beta += w.a[k][j] * w.a[k][j];
          gamma += w.a[k][i] * w.a[k][j];
        }
        if (gamma == 0.0 || std::abs(gamma) <= 1e-16 * std::sqrt(alpha * beta)) continue;
        rotated = true;
        const double zeta = (beta - alpha) / (2.0 * gamma);
        const double tn = (zeta >= 0.0 ? 1.0 : -1.0) / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
        const double c = 1.0 / std::sqrt(1.0 + tn * tn);
        const double s = c * tn;
        for (int k = 0; k < 3; ++k) {
          const double wi = w.a[k][i], wj = w.a[k][j];
          w.a[k][i] = c * wi - s * wj;
          w.a[k][j] = s * wi + c * wj;
          const double vi = v.a[k][i], vj = v.a[k][j];
          v.a[k][i] = c * vi - s * vj;
          v.a[k][j] = s * vi + c * vj;
        }
      }
    }
    if (!rotated) break;
  }

  std::array<double, 3> len{};
  for (int c = 0; c < 3; ++c) len[c] = norm(w.column(c));
  std::array<int, 3> order{0, 1, 2};
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return len[x] > len[y]; });

  Svd3 out;
  const double smax = len[order[0]];
  std::array<Vec3, 3> us{};
  std::array<bool, 3> filled{};
  for (int k = 0; k < 3; ++k) {
    const int c = order[k];
    out.s[k] = len[c];
    for (int r = 0; r < 3; ++r) out.v.a[r][k] = v.a[r][c];
    if (len[c] > 1e-15 * smax && len[c] > 0.0) {
      const Vec3 col = w.column(c);
      us[k] = {col[0] / len[c], col[1] / len[c], col[2] / len[c]};
      filled[k] = true;
    }
  }
  // Orthonormalize, completing null directions from the standard basis.
  for (int k = 0; k < 3; ++k) {
    auto project_out = [&](Vec3 x) {
      for (int p = 0; p < k; ++p) {
        const double d = dot(x, us[p]);
        for (int r = 0; r < 3; ++r) x[r] -= d * us[p][r];
      }
      return x;
    };
    Vec3 cand = filled[k] ? project_out(us[k]) : Vec3{};
    if (!filled[k] || norm(cand) < 0.5) {
      double best = -1.0;
      for (int e = 0; e < 3; ++e) {
        Vec3 basis{};
        basis[e] = 1.0;
        const Vec3 p = project_out(basis);
        if (norm(p) > best) {
          best = norm(p);
          cand = p;
        }
      }
    }
    const double l = norm(cand);
    us[k] = {cand[0] / l, cand[1] / l, cand[2] / l};
    for (int r = 0; r < 3; ++r) out.u.a[r][k] = us[k][r];
  }
  return out;
}

}  // namespace lazyq
