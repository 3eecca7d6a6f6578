#pragma once

// Two-mode (H/V) photon-number states truncated at N photons.
//
// The truncated space K(N) is the direct sum of the n-photon sectors,
// n = 0..N, each of dimension n+1. Sectors are laid out in ascending n and,
// inside sector n, the basis is |k, n-k> with the horizontal count k running
// DOWN from n to 0. Sector n is identified with the totally symmetric subspace
// of n qubits through |k, n-k> <-> |s_k> (k zeros, |0> = horizontal).

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "pqc/matrix.hpp"

namespace pqc {

inline constexpr double kNormTol = 1e-12;

class SectorStructure {
 public:
  explicit SectorStructure(int max_photons);

  int maxPhotons() const noexcept { return max_photons_; }
  std::size_t sectorDim(int n) const;
  std::size_t offset(int n) const;
  std::size_t totalDim() const noexcept { return total_dim_; }
  /// Sector that owns a global basis index.
  int sectorOf(std::size_t index) const;

  /// Π_n, diagonal 0/1 on K(N). Throws kSectorOutOfRange.
  ComplexMatrix projector(int n) const;
  /// (P_even, P_odd)
  std::pair<ComplexMatrix, ComplexMatrix> parityProjectors() const;

  friend bool operator==(const SectorStructure&, const SectorStructure&) = default;

 private:
  void checkSector(int n) const;

  int max_photons_;
  std::size_t total_dim_;
};

/// Single-photon polarization α|H> + β|V>.
struct PolarizationSpec {
  Complex alpha{1.0, 0.0};
  Complex beta{0.0, 0.0};
};

/// Product-polarization source: Σ_n c_n (α a_H† + β a_V†)^n / sqrt(n!) |vac>.
struct SourceSpec {
  PolarizationSpec polarization;
  std::vector<Complex> photon_amplitudes;  // c_0 .. c_N

  int maxPhotons() const { return static_cast<int>(photon_amplitudes.size()) - 1; }
};

/// Throws kBadNormalization when |α|²+|β|² or Σ|c_n|² is off by more than kNormTol.
void validate(const PolarizationSpec& spec);
void validate(const SourceSpec& spec);

struct FockVector {
  SectorStructure structure;
  ComplexVector amplitudes;  // length structure.totalDim()

  FockVector(SectorStructure s, ComplexVector amps);

  std::span<const Complex> sector(int n) const;
  ComplexMatrix densityMatrix() const;
};

/// Builds the pure state of a product-polarization source on K(N) with
/// N = spec.maxPhotons().
FockVector buildSourceState(const SourceSpec& spec);

/// Same, embedded in a (possibly larger) truncation. Amplitudes beyond the
/// structure's bound must be zero, otherwise kDimensionMismatch.
FockVector buildSourceState(const SourceSpec& spec, const SectorStructure& structure);

/// Isometry V_n from sector n (n+1 dims) into n qubits (2^n dims). Column j is
/// the normalized symmetric state with n-j zeros. Qubit 0 is the most
/// significant bit of the row index.
ComplexMatrix symmetricEmbedding(int n);

}  // namespace pqc
