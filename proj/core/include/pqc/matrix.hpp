#pragma once

// Dense complex matrices and the handful of linear-algebra kernels the rest of
// the library needs. Storage is row-major. Every comparison is tolerance-based
// and takes its tolerance explicitly.

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace pqc {

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;

inline constexpr double kDefaultTol = 1e-10;

class ComplexMatrix {
 public:
  ComplexMatrix() = default;

  /// Zero-filled rows x cols matrix.
  ComplexMatrix(std::size_t rows, std::size_t cols);

  /// Takes ownership of a row-major entry buffer. Throws kDimensionMismatch if
  /// the size is wrong and kNonFinite on NaN/inf entries.
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);

  /// Row-by-row literal, e.g. {{0, 1}, {1, 0}}.
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix diagonal(std::span<const Complex> diag);
  /// |u><v|
  static ComplexMatrix outer(std::span<const Complex> u, std::span<const Complex> v);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t size() const noexcept { return data_.size(); }
  bool isSquare() const noexcept { return rows_ == cols_; }

  Complex& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  std::span<const Complex> entries() const noexcept { return data_; }
  std::span<Complex> entries() noexcept { return data_; }

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(Complex scalar);

  /// this += scalar * other, without a temporary.
  void addScaled(Complex scalar, const ComplexMatrix& other);

  /// Copies `block` into this matrix with its top-left corner at (row, col).
  void setBlock(std::size_t row, std::size_t col, const ComplexMatrix& block);
  ComplexMatrix block(std::size_t row, std::size_t col, std::size_t rows,
                      std::size_t cols) const;

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> data_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(Complex s, ComplexMatrix a);
ComplexMatrix operator*(ComplexMatrix a, Complex s);
ComplexVector operator*(const ComplexMatrix& a, std::span<const Complex> v);

ComplexMatrix dagger(const ComplexMatrix& a);
ComplexMatrix transpose(const ComplexMatrix& a);
ComplexMatrix conjugate(const ComplexMatrix& a);
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
/// a ⊗ a ⊗ ... (k factors); k = 0 gives the 1x1 identity.
ComplexMatrix tensorPower(const ComplexMatrix& a, int k);
ComplexVector kron(std::span<const Complex> u, std::span<const Complex> v);

Complex trace(const ComplexMatrix& a);
double frobeniusNorm(const ComplexMatrix& a);
/// max |a_ij - b_ij|; throws kDimensionMismatch on shape mismatch.
double maxAbsDiff(const ComplexMatrix& a, const ComplexMatrix& b);
double vectorNorm(std::span<const Complex> v);

/// Partial trace over the first tensor factor of an operator on C^dimA ⊗ C^dimB.
ComplexMatrix partialTraceFirst(const ComplexMatrix& a, std::size_t dim_a,
                                std::size_t dim_b);
ComplexMatrix partialTraceSecond(const ComplexMatrix& a, std::size_t dim_a,
                                 std::size_t dim_b);

bool isUnitary(const ComplexMatrix& a, double tol = kDefaultTol);
bool isHermitian(const ComplexMatrix& a, double tol = kDefaultTol);
/// Hermitian and every eigenvalue >= -tol.
bool isPSD(const ComplexMatrix& a, double tol = kDefaultTol);
/// Hermitian, PSD and unit trace, all within tol.
bool isDensityOperator(const ComplexMatrix& a, double tol = kDefaultTol);

struct HermitianEigen {
  std::vector<double> eigenvalues;  // ascending
  ComplexMatrix eigenvectors;       // columns, same order as eigenvalues
};

/// Eigendecomposition of a Hermitian matrix. Throws kNotHermitian when
/// `a` is not Hermitian within `tol`.
HermitianEigen hermEig(const ComplexMatrix& a, double tol = kDefaultTol);

/// Sum of singular values.
double traceNorm(const ComplexMatrix& a);

}  // namespace pqc
