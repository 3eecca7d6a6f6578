#include "pqc/fock.hpp"

#include <bit>
#include <cmath>
#include <string>

#include "combinatorics.hpp"
#include "pqc/error.hpp"

namespace pqc {

SectorStructure::SectorStructure(int max_photons) : max_photons_(max_photons) {
  if (max_photons < 0) {
    throw Error(ErrorCode::kInvalidArgument, "photon bound must be non-negative");
  }
  const auto n = static_cast<std::size_t>(max_photons);
  total_dim_ = (n + 1) * (n + 2) / 2;
}

void SectorStructure::checkSector(int n) const {
  if (n < 0 || n > max_photons_) {
    throw Error(ErrorCode::kSectorOutOfRange,
                "sector " + std::to_string(n) + " outside 0.." + std::to_string(max_photons_));
  }
}

std::size_t SectorStructure::sectorDim(int n) const {
  checkSector(n);
  return static_cast<std::size_t>(n) + 1;
}

std::size_t SectorStructure::offset(int n) const {
  checkSector(n);
  const auto m = static_cast<std::size_t>(n);
  return m * (m + 1) / 2;
}

int SectorStructure::sectorOf(std::size_t index) const {
  if (index >= total_dim_) {
    throw Error(ErrorCode::kSectorOutOfRange, "basis index out of range");
  }
  int n = 0;
  while (offset(n) + sectorDim(n) <= index) ++n;
  return n;
}

ComplexMatrix SectorStructure::projector(int n) const {
  ComplexMatrix p(total_dim_, total_dim_);
  const auto start = offset(n);
  for (std::size_t i = 0; i < sectorDim(n); ++i) p(start + i, start + i) = 1.0;
  return p;
}

std::pair<ComplexMatrix, ComplexMatrix> SectorStructure::parityProjectors() const {
  ComplexMatrix even(total_dim_, total_dim_);
  ComplexMatrix odd(total_dim_, total_dim_);
  for (int n = 0; n <= max_photons_; ++n) {
    auto& target = (n % 2 == 0) ? even : odd;
    for (std::size_t i = 0; i < sectorDim(n); ++i) target(offset(n) + i, offset(n) + i) = 1.0;
  }
  return {std::move(even), std::move(odd)};
}

void validate(const PolarizationSpec& spec) {
  const double norm = std::norm(spec.alpha) + std::norm(spec.beta);
  if (std::abs(norm - 1.0) > kNormTol) {
    throw Error(ErrorCode::kBadNormalization,
                "|alpha|^2 + |beta|^2 = " + std::to_string(norm));
  }
}

void validate(const SourceSpec& spec) {
  validate(spec.polarization);
  if (spec.photon_amplitudes.empty()) {
    throw Error(ErrorCode::kBadNormalization, "no photon-number amplitudes");
  }
  double norm = 0.0;
  for (const auto& c : spec.photon_amplitudes) norm += std::norm(c);
  if (std::abs(norm - 1.0) > kNormTol) {
    throw Error(ErrorCode::kBadNormalization, "sum |c_n|^2 = " + std::to_string(norm));
  }
}

FockVector::FockVector(SectorStructure s, ComplexVector amps)
    : structure(std::move(s)), amplitudes(std::move(amps)) {
  if (amplitudes.size() != structure.totalDim()) {
    throw Error(ErrorCode::kDimensionMismatch, "amplitude vector does not match K(N)");
  }
}

std::span<const Complex> FockVector::sector(int n) const {
  return std::span<const Complex>(amplitudes).subspan(structure.offset(n),
                                                      structure.sectorDim(n));
}

ComplexMatrix FockVector::densityMatrix() const {
  return ComplexMatrix::outer(amplitudes, amplitudes);
}

FockVector buildSourceState(const SourceSpec& spec) {
  validate(spec);
  return buildSourceState(spec, SectorStructure(spec.maxPhotons()));
}

FockVector buildSourceState(const SourceSpec& spec, const SectorStructure& structure) {
  validate(spec);
  const Complex alpha = spec.polarization.alpha;
  const Complex beta = spec.polarization.beta;
  ComplexVector amps(structure.totalDim());
  for (int n = 0; n <= spec.maxPhotons(); ++n) {
    const Complex cn = spec.photon_amplitudes[static_cast<std::size_t>(n)];
    if (n > structure.maxPhotons()) {
      if (cn != Complex{}) {
        throw Error(ErrorCode::kDimensionMismatch,
                    "source has " + std::to_string(n) + "-photon content beyond N = " +
                        std::to_string(structure.maxPhotons()));
      }
      continue;
    }
    // |k, n-k> sits at local index n-k.
    for (int k = n; k >= 0; --k) {
      const double weight = std::sqrt(static_cast<double>(detail::binomial(n, k)));
      amps[structure.offset(n) + static_cast<std::size_t>(n - k)] =
          cn * detail::ipow(alpha, k) * detail::ipow(beta, n - k) * weight;
    }
  }
  return FockVector(structure, std::move(amps));
}

ComplexMatrix symmetricEmbedding(int n) {
  if (n < 1 || n > 20) {
    throw Error(ErrorCode::kInvalidArgument, "symmetricEmbedding needs 1 <= n <= 20");
  }
  const std::size_t qubit_dim = std::size_t{1} << n;
  ComplexMatrix v(qubit_dim, static_cast<std::size_t>(n) + 1);
  for (std::size_t row = 0; row < qubit_dim; ++row) {
    const int ones = std::popcount(row);
    const int zeros = n - ones;
    // column for k zeros is n-k, i.e. the number of ones
    v(row, static_cast<std::size_t>(ones)) =
        1.0 / std::sqrt(static_cast<double>(detail::binomial(n, zeros)));
  }
  return v;
}

}  // namespace pqc
