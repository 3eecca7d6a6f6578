#pragma once

#include <span>
#include <vector>

#include "pqc/fock.hpp"
#include "pqc/matrix.hpp"

namespace pqc {

/// Action of a polarization unitary on the n-photon sector, L_n(U) = U^{⊗n}
/// restricted to the symmetric subspace.
struct LiftedUnitary {
  ComplexMatrix source;  // 2x2
  int photons = 0;
  ComplexMatrix matrix;  // (n+1)x(n+1)
};

/// Computed as V_n† U^{⊗n} V_n. n = 0 gives the 1x1 identity (vacuum is
/// invariant). Throws kNotUnitary unless U is a 2x2 unitary within 1e-10.
LiftedUnitary liftSymmetric(const ComplexMatrix& u, int n);

/// ⊕_n L_n(U) over the sectors of `structure`.
ComplexMatrix blockLift(const ComplexMatrix& u, const SectorStructure& structure);

/// Spin quantum number stored as 2s so half-integers stay exact.
struct Spin {
  int twice = 0;
  double value() const { return twice / 2.0; }
};

/// Multiplicity m_s of spin s in the k-fold qubit tensor product,
/// m_s = (2s+1)/(k/2+s+1) * C(k, k/2+s). Throws kBadSpin when s is out of
/// range or has the wrong parity for k.
long long multiplicity(int k, Spin s);

/// Spins s_0, s_0+1, ..., k/2 appearing in the k-fold product.
std::vector<Spin> spinsInTensorPower(int k);

struct QuadratureNode {
  double weight;
  ComplexMatrix unitary;
};

/// Product rule for the Haar measure on SU(2) in the chart
///   U = [[e^{iφ}cosθ, e^{iψ}sinθ], [-e^{-iψ}sinθ, e^{-iφ}cosθ]],
/// density ∝ sinθ cosθ. Trapezoidal in φ and ψ, Gauss-Legendre in u = cos 2θ
/// (in which the measure is flat). A rule of order k integrates every
/// polynomial of degree <= k in the entries of U and <= k in their conjugates
/// exactly. `refinement` multiplies every node count, which is only useful for
/// checking that exactness.
class HaarQuadrature {
 public:
  explicit HaarQuadrature(int order, int refinement = 1);

  int order() const noexcept { return order_; }
  std::span<const QuadratureNode> nodes() const noexcept { return nodes_; }

  static ComplexMatrix chartUnitary(double phi, double psi, double theta);

 private:
  int order_;
  std::vector<QuadratureNode> nodes_;
};

/// Gauss-Legendre nodes and weights on [-1, 1].
void gaussLegendre(int points, std::vector<double>& nodes, std::vector<double>& weights);

/// ∫ U^{⊗k} ⊗ conj(U)^{⊗k} dU, a 4^k x 4^k projector. In row-major
/// vectorization it maps vec(ξ) to vec(∫ U^{⊗k} ξ U^{†⊗k} dU).
/// Throws kQuadratureTooCoarse if quad.order() < k.
ComplexMatrix haarMoment(int k, const HaarQuadrature& quad);

/// Closed form of ∫ L(U) ρ L(U)† dU = Σ_n tr[ρ Π_n] Π_n / (n+1).
/// Throws kNotDensityOperator / kDimensionMismatch.
ComplexMatrix haarChannelApply(const ComplexMatrix& rho, const SectorStructure& structure);

/// Choi operator Σ_n Π_n ⊗ Π_n / (n+1) on K(N) ⊗ K(N).
ComplexMatrix haarChoi(const SectorStructure& structure);

}  // namespace pqc
