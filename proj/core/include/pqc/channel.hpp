#pragma once

#include <map>
#include <string>
#include <utility>
#include <variant>

#include "pqc/design.hpp"
#include "pqc/fock.hpp"
#include "pqc/matrix.hpp"

namespace pqc {

/// The analytic Haar-random encryption channel (no finite key).
struct HaarTwirl {};

using Encryption = std::variant<WeightedEnsemble, HaarTwirl>;

std::string encryptionName(const Encryption& enc);

/// Σ_j q_j L(U_j) ρ L(U_j)†. Throws kDimensionMismatch if rho is not an
/// operator on K(N), kNotDensityOperator if it is not a state within 1e-10.
ComplexMatrix applyChannel(const WeightedEnsemble& e, const SectorStructure& structure,
                           const ComplexMatrix& rho);
ComplexMatrix applyChannel(const Encryption& enc, const SectorStructure& structure,
                           const ComplexMatrix& rho);

/// |ω_n> = Σ_k |e_k> ⊗ |e_k> on sector n ⊗ sector n, unnormalized.
ComplexVector sectorMaxEntangled(int n);

/// (E ⊗ I)(|ω_m><ω_n|), shape (m+1)² x (n+1)². Row index a*(m+1)+b pairs
/// output basis state a with reference basis state b.
ComplexMatrix choiBlock(const WeightedEnsemble& e, int m, int n);
/// For HaarTwirl: δ_mn I/(n+1).
ComplexMatrix choiBlock(const Encryption& enc, int m, int n);

/// Choi operator (E ⊗ I)(|Ω><Ω|) on K(N) ⊗ K(N) with |Ω> = Σ_n |ω_n>, kept
/// as a map of sector blocks. A block missing from the map is zero. Global
/// index of |i>⊗|j> is i*dim K(N) + j.
class ChoiOperator {
 public:
  using BlockKey = std::pair<int, int>;

  ChoiOperator(SectorStructure structure, std::map<BlockKey, ComplexMatrix> blocks);

  const SectorStructure& structure() const noexcept { return structure_; }
  const std::map<BlockKey, ComplexMatrix>& blocks() const noexcept { return blocks_; }
  ComplexMatrix block(int m, int n) const;

  /// Dense (dim K(N))² square matrix.
  ComplexMatrix full() const;
  Complex trace() const;

  /// E(ρ)_{ik} = Σ_{jl} ρ_{jl} C[(i,j),(k,l)]
  ComplexMatrix apply(const ComplexMatrix& rho) const;

 private:
  SectorStructure structure_;
  std::map<BlockKey, ComplexMatrix> blocks_;
};

ChoiOperator fullChoi(const WeightedEnsemble& e, const SectorStructure& structure);
ChoiOperator fullChoi(const Encryption& enc, const SectorStructure& structure);
/// Diagonal blocks Π_n⊗Π_n/(n+1) only; the off-diagonal ones vanish.
ChoiOperator haarChoiOperator(const SectorStructure& structure);

enum class Dephasing { kNone, kParity, kPhotonNumber };

/// P_e ρ P_e + P_o ρ P_o
ComplexMatrix parityDephase(const ComplexMatrix& rho, const SectorStructure& structure);
/// Σ_n Π_n ρ Π_n
ComplexMatrix photonNumberDephase(const ComplexMatrix& rho, const SectorStructure& structure);
ComplexMatrix dephase(Dephasing kind, const ComplexMatrix& rho,
                      const SectorStructure& structure);

}  // namespace pqc
