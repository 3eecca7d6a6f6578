#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "pqc/matrix.hpp"
#include "pqc/su2.hpp"

namespace pqc {

inline constexpr double kDesignTol = 1e-9;

struct EnsembleElement {
  double weight;
  ComplexMatrix unitary;  // 2x2
};

/// A classical key distribution over qubit unitaries. Construction validates:
/// weights non-negative and summing to 1 within 1e-12 (kWeightSumError), every
/// element a 2x2 unitary within 1e-10 (kNotUnitary, tagged with the index).
class WeightedEnsemble {
 public:
  WeightedEnsemble(std::string name, std::vector<EnsembleElement> elements);

  const std::string& name() const noexcept { return name_; }
  const std::vector<EnsembleElement>& elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }

 private:
  std::string name_;
  std::vector<EnsembleElement> elements_;
};

/// Quantum one-time pad {I, σx, σy, σz}, uniform.
WeightedEnsemble pauliEnsemble();

/// The 12-element tetrahedral set, uniform, in the fixed order
/// I, iσx, iσy, iσz, then R_klm for (k,l,m) in lexicographic order, where
/// R_klm = exp(-iπ/3 n_klm·σ) = I/2 - i(√3/2) n_klm·σ and
/// n_klm = ((-1)^k, (-1)^l, (-1)^m)/√3.
///
/// Elements are the SU(2) rotation representatives. Each differs from
/// {σ_a, exp(i2π/3 n·σ)} only by a global phase, which leaves every design
/// quantity unchanged but does move the cross-sector Choi blocks, because
/// L_n picks up the phase to the n-th power.
WeightedEnsemble clifford12Ensemble();

/// "pauli" and "clifford12" name the built-ins; anything else is read as a
/// path to an ensemble JSON file.
WeightedEnsemble resolveEnsemble(const std::string& name_or_path);

/// Σ_ij q_i q_j |tr(U_i† U_j)|^{2k}
double framePotential(const WeightedEnsemble& e, int k);

/// ∫ |tr U|^{2k} dU; the Catalan numbers 1, 2, 5, 14, ... for k = 1, 2, ...
/// Requires quad.order() >= 2k (kQuadratureTooCoarse).
double haarFramePotential(int k, const HaarQuadrature& quad);

/// Σ_j q_j U_j^{⊗k} ⊗ conj(U_j)^{⊗k}
ComplexMatrix momentOperator(const WeightedEnsemble& e, int k);

struct DesignCheck {
  int k = 0;
  bool is_design = false;
  double moment_deviation = 0.0;  // ‖M_k(e) - M_k(Haar)‖_F
  double frame_potential = 0.0;
  double haar_frame_potential = 0.0;
  double frameGap() const { return frame_potential - haar_frame_potential; }
};

/// Verdict from the moment-operator deviation; the frame-potential gap is
/// reported alongside as an independent diagnostic.
DesignCheck isKDesign(const WeightedEnsemble& e, int k, double tol = kDesignTol);

/// Key bits for N qubits: -N Σ q_j log2 q_j.
double keyLength(const WeightedEnsemble& e, int n);

WeightedEnsemble parseEnsembleJson(const std::string& text);
std::string ensembleToJson(const WeightedEnsemble& e);
WeightedEnsemble loadEnsemble(const std::filesystem::path& path);
void saveEnsemble(const WeightedEnsemble& e, const std::filesystem::path& path);

}  // namespace pqc
