#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"
#include "pqc/error.hpp"
#include "pqc/fock.hpp"

namespace pqc {
namespace {

using testing::Rng;

ErrorCode codeOf(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no exception";
  return ErrorCode::kInvalidArgument;
}

TEST(Fock, SectorLayout) {
  const SectorStructure s(3);
  EXPECT_EQ(s.totalDim(), 10u);
  EXPECT_EQ(s.offset(0), 0u);
  EXPECT_EQ(s.offset(2), 3u);
  EXPECT_EQ(s.offset(3), 6u);
  EXPECT_EQ(s.sectorDim(3), 4u);
  EXPECT_EQ(s.sectorOf(0), 0);
  EXPECT_EQ(s.sectorOf(2), 1);
  EXPECT_EQ(s.sectorOf(9), 3);
  EXPECT_EQ(codeOf([&] { (void)s.projector(4); }), ErrorCode::kSectorOutOfRange);
  EXPECT_EQ(codeOf([&] { (void)s.projector(-1); }), ErrorCode::kSectorOutOfRange);
  EXPECT_THROW(SectorStructure(-1), Error);
}

TEST(Fock, ProjectorOneAtNTwo) {
  const SectorStructure s(2);
  const ComplexMatrix p = s.projector(1);
  const double expected[] = {0, 1, 1, 0, 0, 0};
  for (std::size_t i = 0; i < 6; ++i) {
    for (std::size_t j = 0; j < 6; ++j) {
      EXPECT_EQ(p(i, j), Complex(i == j ? expected[i] : 0.0));
    }
  }
}

TEST(Fock, ProjectorsComplete) {
  const SectorStructure s(2);
  ComplexMatrix sum(6, 6);
  for (int n = 0; n <= 2; ++n) sum += s.projector(n);
  EXPECT_EQ(sum, ComplexMatrix::identity(6));
}

TEST(Fock, ProjectorsIdempotentHermitianRank) {
  const SectorStructure s(4);
  for (int n = 0; n <= 4; ++n) {
    const ComplexMatrix p = s.projector(n);
    EXPECT_EQ(p * p, p);
    EXPECT_TRUE(isHermitian(p, 0.0));
    EXPECT_NEAR(trace(p).real(), n + 1, 0.0);
  }
}

TEST(Fock, ParityProjectors) {
  const SectorStructure s(3);
  const auto [even, odd] = s.parityProjectors();
  EXPECT_NEAR(trace(even).real(), 4.0, 0.0);
  EXPECT_NEAR(trace(odd).real(), 6.0, 0.0);
  EXPECT_EQ(even + odd, ComplexMatrix::identity(10));
  EXPECT_EQ(even * odd, ComplexMatrix(10, 10));
}

TEST(Fock, SingleHorizontalPhoton) {
  const SourceSpec spec{{1.0, 0.0}, {0.0, 1.0}};
  const FockVector v = buildSourceState(spec);
  ASSERT_EQ(v.amplitudes.size(), 3u);
  EXPECT_EQ(v.amplitudes[0], Complex(0.0));
  EXPECT_EQ(v.amplitudes[1], Complex(1.0));  // |1,0>
  EXPECT_EQ(v.amplitudes[2], Complex(0.0));
}

TEST(Fock, DiagonalPolarizationTwoPhotons) {
  const double r = 1.0 / std::sqrt(2.0);
  const SourceSpec spec{{r, r}, {0.0, 0.0, 1.0}};
  const FockVector v = buildSourceState(spec);
  const auto sec = v.sector(2);
  EXPECT_NEAR(std::abs(sec[0] - 0.5), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(sec[1] - r), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(sec[2] - 0.5), 0.0, 1e-15);
}

TEST(Fock, VacuumPlusPairState) {
  const Complex alpha(0.6, 0.0), beta(0.0, 0.8);
  const double c = 0.3;
  const double s = std::sqrt(1 - c * c);
  const SourceSpec spec{{alpha, beta}, {c, 0.0, s}};
  const FockVector v = buildSourceState(spec);
  EXPECT_NEAR(std::abs(v.amplitudes[0] - c), 0.0, 1e-15);
  const auto sec = v.sector(2);
  EXPECT_NEAR(std::abs(sec[0] - s * alpha * alpha), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(sec[1] - s * std::sqrt(2.0) * alpha * beta), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(sec[2] - s * beta * beta), 0.0, 1e-15);
}

TEST(Fock, SectorNormsEqualAmplitudes) {
  Rng rng(21);
  for (int trial = 0; trial < 20; ++trial) {
    const SourceSpec spec = testing::randomSource(4, rng);
    const FockVector v = buildSourceState(spec);
    EXPECT_NEAR(vectorNorm(v.amplitudes), 1.0, 1e-12);
    for (int n = 0; n <= 4; ++n) {
      EXPECT_NEAR(vectorNorm(v.sector(n)), std::abs(spec.photon_amplitudes[n]), 1e-12);
    }
  }
}

TEST(Fock, SectorMatchesQubitProductState) {
  Rng rng(22);
  for (int trial = 0; trial < 10; ++trial) {
    for (int n = 1; n <= 5; ++n) {
      SourceSpec spec = testing::randomSource(n, rng, {n});
      const FockVector v = buildSourceState(spec);
      const auto sec = v.sector(n);
      const ComplexVector embedded = symmetricEmbedding(n) * sec;

      const ComplexVector phi{spec.polarization.alpha, spec.polarization.beta};
      ComplexVector product{spec.photon_amplitudes[n]};
      for (int i = 0; i < n; ++i) product = kron(product, phi);
      for (std::size_t i = 0; i < product.size(); ++i) {
        EXPECT_NEAR(std::abs(embedded[i] - product[i]), 0.0, 1e-12);
      }
    }
  }
}

TEST(Fock, EmbeddingSmallCases) {
  EXPECT_EQ(symmetricEmbedding(1), ComplexMatrix::identity(2));
  const ComplexMatrix v2 = symmetricEmbedding(2);
  const double r = 1.0 / std::sqrt(2.0);
  const ComplexMatrix expected{{1.0, 0.0, 0.0}, {0.0, r, 0.0}, {0.0, r, 0.0}, {0.0, 0.0, 1.0}};
  EXPECT_LE(maxAbsDiff(v2, expected), 1e-16);
  const ComplexMatrix v3 = symmetricEmbedding(3);
  EXPECT_LE(maxAbsDiff(dagger(v3) * v3, ComplexMatrix::identity(4)), 1e-14);
  EXPECT_THROW(symmetricEmbedding(0), Error);
}

TEST(Fock, EmbeddingProjectsOntoSymmetricSubspace) {
  // V V† commutes with every qubit swap and has rank n+1
  for (int n = 2; n <= 4; ++n) {
    const ComplexMatrix v = symmetricEmbedding(n);
    const ComplexMatrix p = v * dagger(v);
    EXPECT_LE(maxAbsDiff(p * p, p), 1e-14);
    EXPECT_NEAR(trace(p).real(), n + 1, 1e-13);
    const std::size_t dim = std::size_t{1} << n;
    ComplexMatrix swap01(dim, dim);
    for (std::size_t b = 0; b < dim; ++b) {
      const std::size_t hi = (b >> (n - 1)) & 1u, next = (b >> (n - 2)) & 1u;
      std::size_t t = b & ~((std::size_t{1} << (n - 1)) | (std::size_t{1} << (n - 2)));
      t |= (next << (n - 1)) | (hi << (n - 2));
      swap01(t, b) = 1.0;
    }
    EXPECT_LE(maxAbsDiff(swap01 * p, p), 1e-14);
  }
}

TEST(Fock, ValidationErrors) {
  EXPECT_EQ(codeOf([] { validate(PolarizationSpec{1.0, 1.0}); }), ErrorCode::kBadNormalization);
  EXPECT_EQ(codeOf([] { validate(SourceSpec{{1.0, 0.0}, {0.5, 0.5}}); }),
            ErrorCode::kBadNormalization);
  EXPECT_EQ(codeOf([] { (void)buildSourceState(SourceSpec{{1.0, 0.0}, {0.6, 0.8}}, SectorStructure(0)); }),
            ErrorCode::kDimensionMismatch);
  // trailing zeros beyond the bound are fine
  const FockVector v = buildSourceState(SourceSpec{{1.0, 0.0}, {1.0, 0.0, 0.0}}, SectorStructure(1));
  EXPECT_EQ(v.amplitudes.size(), 3u);
}

TEST(Fock, DensityMatrixIsPure) {
  Rng rng(23);
  const FockVector v = buildSourceState(testing::randomSource(3, rng));
  const ComplexMatrix rho = v.densityMatrix();
  EXPECT_TRUE(isDensityOperator(rho));
  EXPECT_LE(maxAbsDiff(rho * rho, rho), 1e-14);
}

}  // namespace
}  // namespace pqc
