#include "pqc/design.hpp"

#include <cmath>
#include <string>

#include "pqc/error.hpp"

namespace pqc {

namespace {

constexpr double kWeightTol = 1e-12;

ComplexMatrix sigmaX() { return {{0.0, 1.0}, {1.0, 0.0}}; }
ComplexMatrix sigmaY() { return {{0.0, Complex(0, -1)}, {Complex(0, 1), 0.0}}; }
ComplexMatrix sigmaZ() { return {{1.0, 0.0}, {0.0, -1.0}}; }

}  // namespace

WeightedEnsemble::WeightedEnsemble(std::string name, std::vector<EnsembleElement> elements)
    : name_(std::move(name)), elements_(std::move(elements)) {
  double total = 0.0;
  for (std::size_t j = 0; j < elements_.size(); ++j) {
    const auto& el = elements_[j];
    if (!std::isfinite(el.weight) || el.weight < 0.0) {
      throw Error(ErrorCode::kWeightSumError, "weight must be finite and non-negative", j);
    }
    if (el.unitary.rows() != 2 || el.unitary.cols() != 2 || !isUnitary(el.unitary, kDefaultTol)) {
      throw Error(ErrorCode::kNotUnitary, "element is not a 2x2 unitary within 1e-10", j);
    }
    total += el.weight;
  }
  if (std::abs(total - 1.0) > kWeightTol) {
    throw Error(ErrorCode::kWeightSumError, "weights sum to " + std::to_string(total));
  }
}

WeightedEnsemble pauliEnsemble() {
  std::vector<EnsembleElement> els;
  for (auto u : {ComplexMatrix::identity(2), sigmaX(), sigmaY(), sigmaZ()})
    els.push_back({0.25, std::move(u)});
  return WeightedEnsemble("pauli", std::move(els));
}

WeightedEnsemble clifford12Ensemble() {
  const Complex i(0.0, 1.0);
  const double w = 1.0 / 12.0;
  std::vector<EnsembleElement> els;
  els.push_back({w, ComplexMatrix::identity(2)});
  for (auto s : {sigmaX(), sigmaY(), sigmaZ()}) els.push_back({w, i * s});

  const double inv_sqrt3 = 1.0 / std::sqrt(3.0);
  const double half_sqrt3 = std::sqrt(3.0) / 2.0;
  for (int k = 0; k < 2; ++k) {
    for (int l = 0; l < 2; ++l) {
      for (int m = 0; m < 2; ++m) {
        const double nx = (k == 0 ? 1.0 : -1.0) * inv_sqrt3;
        const double ny = (l == 0 ? 1.0 : -1.0) * inv_sqrt3;
        const double nz = (m == 0 ? 1.0 : -1.0) * inv_sqrt3;
        ComplexMatrix n_dot_sigma = nx * sigmaX() + ny * sigmaY() + nz * sigmaZ();
        ComplexMatrix r = 0.5 * ComplexMatrix::identity(2);
        r.addScaled(-i * half_sqrt3, n_dot_sigma);
        els.push_back({w, std::move(r)});
      }
    }
  }
  return WeightedEnsemble("clifford12", std::move(els));
}

WeightedEnsemble resolveEnsemble(const std::string& name_or_path) {
  if (name_or_path == "pauli") return pauliEnsemble();
  if (name_or_path == "clifford12") return clifford12Ensemble();
  return loadEnsemble(name_or_path);
}

double framePotential(const WeightedEnsemble& e, int k) {
  if (k < 1) throw Error(ErrorCode::kInvalidArgument, "frame potential order must be >= 1");
  double total = 0.0;
  for (const auto& a : e.elements()) {
    const ComplexMatrix a_dag = dagger(a.unitary);
    for (const auto& b : e.elements()) {
      const double overlap = std::abs(trace(a_dag * b.unitary));
      total += a.weight * b.weight * std::pow(overlap, 2 * k);
    }
  }
  return total;
}

double haarFramePotential(int k, const HaarQuadrature& quad) {
  if (k < 1) throw Error(ErrorCode::kInvalidArgument, "frame potential order must be >= 1");
  if (quad.order() < 2 * k) {
    throw Error(ErrorCode::kQuadratureTooCoarse,
                "Haar frame potential of order " + std::to_string(k) + " needs a rule of order " +
                    std::to_string(2 * k));
  }
  double total = 0.0;
  for (const auto& node : quad.nodes())
    total += node.weight * std::pow(std::abs(trace(node.unitary)), 2 * k);
  return total;
}

ComplexMatrix momentOperator(const WeightedEnsemble& e, int k) {
  if (k < 1) throw Error(ErrorCode::kInvalidArgument, "moment order must be >= 1");
  const std::size_t dim = std::size_t{1} << (2 * k);
  ComplexMatrix moment(dim, dim);
  for (const auto& el : e.elements()) {
    moment.addScaled(el.weight, kron(tensorPower(el.unitary, k),
                                     tensorPower(conjugate(el.unitary), k)));
  }
  return moment;
}

DesignCheck isKDesign(const WeightedEnsemble& e, int k, double tol) {
  if (k < 1) throw Error(ErrorCode::kInvalidArgument, "design order must be >= 1");
  DesignCheck check;
  check.k = k;
  check.moment_deviation =
      frobeniusNorm(momentOperator(e, k) - haarMoment(k, HaarQuadrature(k)));
  check.frame_potential = framePotential(e, k);
  check.haar_frame_potential = haarFramePotential(k, HaarQuadrature(2 * k));
  check.is_design = check.moment_deviation <= tol;
  return check;
}

double keyLength(const WeightedEnsemble& e, int n) {
  if (n < 1) throw Error(ErrorCode::kInvalidArgument, "key length needs N >= 1");
  double entropy = 0.0;
  for (const auto& el : e.elements())
    if (el.weight > 0.0) entropy -= el.weight * std::log2(el.weight);
  // -0.0 for a single element
  return entropy == 0.0 ? 0.0 : n * entropy;
}

}  // namespace pqc
