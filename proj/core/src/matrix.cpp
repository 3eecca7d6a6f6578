#include "pqc/matrix.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <string>

#include "pqc/error.hpp"

namespace pqc {

namespace {

void requireSameShape(const ComplexMatrix& a, const ComplexMatrix& b, const char* what) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorCode::kDimensionMismatch,
                std::string(what) + ": " + std::to_string(a.rows()) + "x" +
                    std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) + "x" +
                    std::to_string(b.cols()));
  }
}

void requireSquare(const ComplexMatrix& a, const char* what) {
  if (!a.isSquare()) {
    throw Error(ErrorCode::kDimensionMismatch, std::string(what) + " needs a square matrix");
  }
}

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

using EigenMatrix = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

EigenMatrix toEigen(const ComplexMatrix& a) {
  EigenMatrix m(a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) m(r, c) = a(r, c);
  return m;
}

// (a + a†)/2, so the solver sees an exactly Hermitian input.
EigenMatrix hermitianPart(const ComplexMatrix& a) {
  EigenMatrix m = toEigen(a);
  EigenMatrix h = (m + m.adjoint()) * 0.5;
  return h;
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows_ * cols_) {
    throw Error(ErrorCode::kDimensionMismatch,
                "entry buffer of length " + std::to_string(data_.size()) + " for a " +
                    std::to_string(rows_) + "x" + std::to_string(cols_) + " matrix");
  }
  if (!std::all_of(data_.begin(), data_.end(), finite)) {
    throw Error(ErrorCode::kNonFinite, "matrix entries must be finite");
  }
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) {
      throw Error(ErrorCode::kDimensionMismatch, "ragged matrix literal");
    }
    data_.insert(data_.end(), row.begin(), row.end());
  }
  if (!std::all_of(data_.begin(), data_.end(), finite)) {
    throw Error(ErrorCode::kNonFinite, "matrix entries must be finite");
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const Complex> diag) {
  ComplexMatrix m(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

ComplexMatrix ComplexMatrix::outer(std::span<const Complex> u, std::span<const Complex> v) {
  ComplexMatrix m(u.size(), v.size());
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) m(i, j) = u[i] * std::conj(v[j]);
  return m;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  requireSameShape(*this, other, "matrix addition");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  requireSameShape(*this, other, "matrix subtraction");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scalar) {
  for (auto& z : data_) z *= scalar;
  return *this;
}

void ComplexMatrix::addScaled(Complex scalar, const ComplexMatrix& other) {
  requireSameShape(*this, other, "addScaled");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += scalar * other.data_[i];
}

void ComplexMatrix::setBlock(std::size_t row, std::size_t col, const ComplexMatrix& block) {
  if (row + block.rows() > rows_ || col + block.cols() > cols_) {
    throw Error(ErrorCode::kDimensionMismatch, "block does not fit");
  }
  for (std::size_t r = 0; r < block.rows(); ++r)
    for (std::size_t c = 0; c < block.cols(); ++c) (*this)(row + r, col + c) = block(r, c);
}

ComplexMatrix ComplexMatrix::block(std::size_t row, std::size_t col, std::size_t rows,
                                   std::size_t cols) const {
  if (row + rows > rows_ || col + cols > cols_) {
    throw Error(ErrorCode::kDimensionMismatch, "block out of range");
  }
  ComplexMatrix out(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) out(r, c) = (*this)(row + r, col + c);
  return out;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }
ComplexMatrix operator*(ComplexMatrix a, Complex s) { return a *= s; }

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "product of " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                    " and " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  }
  ComplexMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex{}) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

ComplexVector operator*(const ComplexMatrix& a, std::span<const Complex> v) {
  if (a.cols() != v.size()) {
    throw Error(ErrorCode::kDimensionMismatch, "matrix-vector product");
  }
  ComplexVector out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) out[i] += a(i, k) * v[k];
  return out;
}

ComplexMatrix dagger(const ComplexMatrix& a) {
  ComplexMatrix out(a.cols(), a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(c, r) = std::conj(a(r, c));
  return out;
}

ComplexMatrix transpose(const ComplexMatrix& a) {
  ComplexMatrix out(a.cols(), a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(c, r) = a(r, c);
  return out;
}

ComplexMatrix conjugate(const ComplexMatrix& a) {
  ComplexMatrix out = a;
  for (auto& z : out.entries()) z = std::conj(z);
  return out;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Complex aij = a(i, j);
      if (aij == Complex{}) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
    }
  }
  return out;
}

ComplexMatrix tensorPower(const ComplexMatrix& a, int k) {
  if (k < 0) throw Error(ErrorCode::kInvalidArgument, "negative tensor power");
  ComplexMatrix out = ComplexMatrix::identity(1);
  for (int i = 0; i < k; ++i) out = kron(out, a);
  return out;
}

ComplexVector kron(std::span<const Complex> u, std::span<const Complex> v) {
  ComplexVector out(u.size() * v.size());
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) out[i * v.size() + j] = u[i] * v[j];
  return out;
}

Complex trace(const ComplexMatrix& a) {
  requireSquare(a, "trace");
  Complex t{};
  for (std::size_t i = 0; i < a.rows(); ++i) t += a(i, i);
  return t;
}

double frobeniusNorm(const ComplexMatrix& a) {
  double s = 0.0;
  for (const auto& z : a.entries()) s += std::norm(z);
  return std::sqrt(s);
}

double maxAbsDiff(const ComplexMatrix& a, const ComplexMatrix& b) {
  requireSameShape(a, b, "maxAbsDiff");
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    m = std::max(m, std::abs(a.entries()[i] - b.entries()[i]));
  return m;
}

double vectorNorm(std::span<const Complex> v) {
  double s = 0.0;
  for (const auto& z : v) s += std::norm(z);
  return std::sqrt(s);
}

ComplexMatrix partialTraceFirst(const ComplexMatrix& a, std::size_t dim_a, std::size_t dim_b) {
  if (a.rows() != dim_a * dim_b || a.cols() != dim_a * dim_b) {
    throw Error(ErrorCode::kDimensionMismatch, "partialTraceFirst");
  }
  ComplexMatrix out(dim_b, dim_b);
  for (std::size_t i = 0; i < dim_a; ++i)
    for (std::size_t r = 0; r < dim_b; ++r)
      for (std::size_t c = 0; c < dim_b; ++c) out(r, c) += a(i * dim_b + r, i * dim_b + c);
  return out;
}

ComplexMatrix partialTraceSecond(const ComplexMatrix& a, std::size_t dim_a, std::size_t dim_b) {
  if (a.rows() != dim_a * dim_b || a.cols() != dim_a * dim_b) {
    throw Error(ErrorCode::kDimensionMismatch, "partialTraceSecond");
  }
  ComplexMatrix out(dim_a, dim_a);
  for (std::size_t r = 0; r < dim_a; ++r)
    for (std::size_t c = 0; c < dim_a; ++c)
      for (std::size_t j = 0; j < dim_b; ++j) out(r, c) += a(r * dim_b + j, c * dim_b + j);
  return out;
}

bool isUnitary(const ComplexMatrix& a, double tol) {
  if (!a.isSquare() || a.rows() == 0) return false;
  return maxAbsDiff(dagger(a) * a, ComplexMatrix::identity(a.rows())) <= tol;
}

bool isHermitian(const ComplexMatrix& a, double tol) {
  if (!a.isSquare()) return false;
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = r; c < a.cols(); ++c)
      if (std::abs(a(r, c) - std::conj(a(c, r))) > tol) return false;
  return true;
}

bool isPSD(const ComplexMatrix& a, double tol) {
  if (!isHermitian(a, tol)) return false;
  const auto eig = hermEig(a, tol);
  return eig.eigenvalues.empty() || eig.eigenvalues.front() >= -tol;
}

bool isDensityOperator(const ComplexMatrix& a, double tol) {
  return a.rows() > 0 && isPSD(a, tol) && std::abs(trace(a) - 1.0) <= tol;
}

HermitianEigen hermEig(const ComplexMatrix& a, double tol) {
  if (!isHermitian(a, tol)) {
    throw Error(ErrorCode::kNotHermitian, "hermEig input is not Hermitian within tolerance");
  }
  Eigen::SelfAdjointEigenSolver<EigenMatrix> solver(hermitianPart(a));
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorCode::kInvalidArgument, "eigensolver did not converge");
  }
  HermitianEigen out;
  const auto& values = solver.eigenvalues();
  out.eigenvalues.assign(values.data(), values.data() + values.size());
  const auto& vectors = solver.eigenvectors();
  out.eigenvectors = ComplexMatrix(a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out.eigenvectors(r, c) = vectors(r, c);
  return out;
}

double traceNorm(const ComplexMatrix& a) {
  if (a.size() == 0) return 0.0;
  double scale = 1.0;
  for (const auto& z : a.entries()) scale = std::max(scale, std::abs(z));
  // Hermitian input: Σ|λ| directly. Going through a†a would square the
  // condition number and cost half the significant digits near zero.
  if (isHermitian(a, 1e-13 * scale)) {
    Eigen::SelfAdjointEigenSolver<EigenMatrix> solver(hermitianPart(a), Eigen::EigenvaluesOnly);
    double s = 0.0;
    for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i)
      s += std::abs(solver.eigenvalues()(i));
    return s;
  }
  Eigen::SelfAdjointEigenSolver<EigenMatrix> solver(toEigen(dagger(a) * a),
                                                   Eigen::EigenvaluesOnly);
  double s = 0.0;
  for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i)
    s += std::sqrt(std::max(0.0, solver.eigenvalues()(i)));
  return s;
}

}  // namespace pqc
