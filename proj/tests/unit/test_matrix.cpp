#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <numeric>

#include "oracles.hpp"
#include "pqc/error.hpp"
#include "pqc/matrix.hpp"

namespace pqc {
namespace {

using testing::Rng;

const Complex kI{0.0, 1.0};
const ComplexMatrix kSigmaX{{0.0, 1.0}, {1.0, 0.0}};
const ComplexMatrix kSigmaY{{0.0, -kI}, {kI, 0.0}};
const ComplexMatrix kSigmaZ{{1.0, 0.0}, {0.0, -1.0}};

TEST(Matrix, ConstructionChecksSizeAndFiniteness) {
  EXPECT_THROW(ComplexMatrix(2, 2, std::vector<Complex>(3)), Error);
  std::vector<Complex> bad(4);
  bad[2] = std::numeric_limits<double>::quiet_NaN();
  try {
    ComplexMatrix(2, 2, bad);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNonFinite);
  }
  bad[2] = Complex(0.0, std::numeric_limits<double>::infinity());
  EXPECT_THROW(ComplexMatrix(2, 2, bad), Error);
}

TEST(Matrix, IdentityKron) {
  EXPECT_EQ(kron(ComplexMatrix::identity(2), ComplexMatrix::identity(2)),
            ComplexMatrix::identity(4));
}

TEST(Matrix, BellStateFixedBySigmaXSigmaX) {
  const double r = 1.0 / std::sqrt(2.0);
  const ComplexVector bell{r, 0.0, 0.0, r};
  const ComplexVector out = kron(kSigmaX, kSigmaX) * bell;
  for (std::size_t i = 0; i < 4; ++i) EXPECT_NEAR(std::abs(out[i] - bell[i]), 0.0, 1e-15);
}

TEST(Matrix, KronMatchesIndexFormula) {
  Rng rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    const ComplexMatrix a = testing::randomMatrix(2, 2, rng);
    const ComplexMatrix b = testing::randomMatrix(2, 2, rng);
    EXPECT_EQ(kron(a, b), testing::bruteKron(a, b));
    const ComplexMatrix c = testing::randomMatrix(3, 2, rng);
    const ComplexMatrix d = testing::randomMatrix(2, 4, rng);
    EXPECT_EQ(kron(c, d), testing::bruteKron(c, d));
  }
}

TEST(Matrix, KronAssociative) {
  Rng rng(12);
  const ComplexMatrix a = testing::randomMatrix(2, 3, rng);
  const ComplexMatrix b = testing::randomMatrix(3, 2, rng);
  const ComplexMatrix c = testing::randomMatrix(2, 2, rng);
  EXPECT_LE(maxAbsDiff(kron(kron(a, b), c), kron(a, kron(b, c))), 1e-15);
}

TEST(Matrix, TensorPowerZeroIsScalarOne) {
  EXPECT_EQ(tensorPower(kSigmaX, 0), ComplexMatrix::identity(1));
  EXPECT_EQ(tensorPower(kSigmaX, 3), kron(kSigmaX, kron(kSigmaX, kSigmaX)));
}

TEST(Matrix, Dagger) {
  EXPECT_EQ(dagger(ComplexMatrix::identity(3)), ComplexMatrix::identity(3));
  EXPECT_EQ(dagger(kSigmaY), kSigmaY);
  Rng rng(13);
  const ComplexMatrix a = testing::randomMatrix(3, 5, rng);
  EXPECT_EQ(dagger(dagger(a)), a);
  EXPECT_EQ(dagger(a).rows(), 5u);
}

TEST(Matrix, ProductShapesAndMismatch) {
  Rng rng(14);
  const ComplexMatrix a = testing::randomMatrix(2, 3, rng);
  const ComplexMatrix b = testing::randomMatrix(3, 4, rng);
  const ComplexMatrix ab = a * b;
  EXPECT_EQ(ab.rows(), 2u);
  EXPECT_EQ(ab.cols(), 4u);
  EXPECT_THROW(b * a, Error);
  EXPECT_THROW(a + b, Error);
}

TEST(Matrix, FrobeniusSubmultiplicative) {
  Rng rng(15);
  for (int trial = 0; trial < 50; ++trial) {
    const ComplexMatrix a = testing::randomMatrix(4, 4, rng);
    const ComplexMatrix b = testing::randomMatrix(4, 4, rng);
    EXPECT_LE(frobeniusNorm(a * b), frobeniusNorm(a) * frobeniusNorm(b) * (1 + 1e-14));
  }
}

TEST(Matrix, Predicates) {
  EXPECT_TRUE(isUnitary(kSigmaY));
  EXPECT_FALSE(isUnitary(2.0 * kSigmaY));
  EXPECT_FALSE(isUnitary(ComplexMatrix(2, 3)));
  EXPECT_TRUE(isHermitian(kSigmaY));
  EXPECT_FALSE(isHermitian(ComplexMatrix{{0.0, 1.0}, {0.0, 0.0}}));
  EXPECT_FALSE(isPSD(kSigmaZ));
  EXPECT_TRUE(isPSD(ComplexMatrix::identity(3)));
  EXPECT_TRUE(isDensityOperator(ComplexMatrix::identity(2) * 0.5));
  EXPECT_FALSE(isDensityOperator(ComplexMatrix::identity(2)));
}

TEST(Matrix, HermEigPauliZ) {
  const auto eig = hermEig(kSigmaZ);
  ASSERT_EQ(eig.eigenvalues.size(), 2u);
  EXPECT_NEAR(eig.eigenvalues[0], -1.0, 1e-15);
  EXPECT_NEAR(eig.eigenvalues[1], 1.0, 1e-15);
}

TEST(Matrix, HermEigScaledIdentity) {
  const auto eig = hermEig(ComplexMatrix::identity(3) * (1.0 / 3.0));
  for (double v : eig.eigenvalues) EXPECT_NEAR(v, 1.0 / 3.0, 1e-15);
}

TEST(Matrix, HermEigRejectsNonHermitian) {
  try {
    hermEig(ComplexMatrix{{0.0, 1.0}, {0.0, 0.0}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotHermitian);
  }
}

TEST(Matrix, HermEigTraceAndReconstruction) {
  Rng rng(16);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t d = 2 + static_cast<std::size_t>(trial % 15);
    const ComplexMatrix h = testing::randomHermitian(d, rng);
    const auto eig = hermEig(h);
    const double sum = std::accumulate(eig.eigenvalues.begin(), eig.eigenvalues.end(), 0.0);
    EXPECT_NEAR(sum, trace(h).real(), 1e-12 * std::max(1.0, frobeniusNorm(h)));
    EXPECT_TRUE(std::is_sorted(eig.eigenvalues.begin(), eig.eigenvalues.end()));

    std::vector<Complex> diag(eig.eigenvalues.begin(), eig.eigenvalues.end());
    const ComplexMatrix& v = eig.eigenvectors;
    const ComplexMatrix rebuilt = v * ComplexMatrix::diagonal(diag) * dagger(v);
    EXPECT_LE(frobeniusNorm(rebuilt - h), 1e-12 * frobeniusNorm(h) * static_cast<double>(d));
    EXPECT_TRUE(isUnitary(v, 1e-12));
  }
}

TEST(Matrix, TraceNormBasics) {
  EXPECT_EQ(traceNorm(ComplexMatrix(3, 3)), 0.0);
  EXPECT_NEAR(traceNorm(kSigmaZ), 2.0, 1e-15);
}

TEST(Matrix, TraceNormMatchesSvdOracle) {
  Rng rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t d = 2 + static_cast<std::size_t>(trial % 6);
    const ComplexMatrix diff =
        testing::randomDensity(d, rng) - testing::randomDensity(d, rng, 1);
    EXPECT_NEAR(traceNorm(diff), testing::svdTraceNorm(diff), 1e-12);
  }
  // general (non-Hermitian) input takes the a†a path
  const ComplexMatrix g = testing::randomMatrix(5, 5, rng);
  EXPECT_NEAR(traceNorm(g), testing::svdTraceNorm(g), 1e-9);
}

TEST(Matrix, PartialTraces) {
  Rng rng(18);
  const ComplexMatrix a = testing::randomDensity(2, rng);
  const ComplexMatrix b = testing::randomDensity(3, rng);
  const ComplexMatrix ab = kron(a, b);
  EXPECT_LE(maxAbsDiff(partialTraceFirst(ab, 2, 3), b), 1e-15);
  EXPECT_LE(maxAbsDiff(partialTraceSecond(ab, 2, 3), a), 1e-15);
  EXPECT_THROW(partialTraceFirst(ab, 3, 3), Error);
}

TEST(Matrix, BlockAccess) {
  ComplexMatrix m(4, 4);
  m.setBlock(1, 2, kSigmaX);
  EXPECT_EQ(m.block(1, 2, 2, 2), kSigmaX);
  EXPECT_EQ(m(2, 2), Complex(1.0));
  EXPECT_THROW(m.setBlock(3, 3, kSigmaX), Error);
}

}  // namespace
}  // namespace pqc
