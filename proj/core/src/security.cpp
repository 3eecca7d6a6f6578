#include "pqc/security.hpp"

#include <cmath>

#include "pqc/design.hpp"
#include "pqc/error.hpp"

namespace pqc {

std::string_view classificationName(Classification c) {
  switch (c) {
    case Classification::kSecure: return "SECURE";
    case Classification::kParitySecure: return "PARITY_SECURE";
    case Classification::kInsecure: return "INSECURE";
  }
  return "INSECURE";
}

SecurityReport securityReport(const Encryption& enc, int max_photons, double tol) {
  if (max_photons < 1) {
    throw Error(ErrorCode::kInvalidArgument, "security analysis needs N >= 1");
  }
  if (!(tol > 0.0)) throw Error(ErrorCode::kInvalidArgument, "tolerance must be positive");

  SecurityReport report;
  report.ensemble_name = encryptionName(enc);
  report.max_photons = max_photons;
  report.tol = tol;

  bool same_parity_ok = true;
  bool cross_parity_ok = true;
  for (int m = 0; m <= max_photons; ++m) {
    for (int n = 0; n <= max_photons; ++n) {
      const double deviation =
          frobeniusNorm(choiBlock(enc, m, n) - choiBlock(Encryption{HaarTwirl{}}, m, n));
      report.blocks.push_back({m, n, deviation});
      if (deviation > report.worst_deviation) {
        report.worst_deviation = deviation;
        report.worst_block = {m, n};
      }
      if (deviation > tol) ((m - n) % 2 == 0 ? same_parity_ok : cross_parity_ok) = false;
    }
  }
  if (same_parity_ok && cross_parity_ok) {
    report.classification = Classification::kSecure;
  } else if (same_parity_ok) {
    report.classification = Classification::kParitySecure;
  } else {
    report.classification = Classification::kInsecure;
  }
  return report;
}

double leakage(const Encryption& enc, const SourceSpec& a, const SourceSpec& b, int max_photons,
               Dephasing pre) {
  const SectorStructure structure(max_photons);
  const ComplexMatrix rho_a = dephase(pre, buildSourceState(a, structure).densityMatrix(), structure);
  const ComplexMatrix rho_b = dephase(pre, buildSourceState(b, structure).densityMatrix(), structure);
  const ComplexMatrix diff =
      applyChannel(enc, structure, rho_a) - applyChannel(enc, structure, rho_b);
  return 0.5 * traceNorm(diff);
}

Complex AppendixAReference::a() { return Complex(3.0, 1.0) / 12.0; }
Complex AppendixAReference::b() { return Complex(1.0, 1.0) / 12.0; }
double AppendixAReference::c() { return 1.0 / (3.0 * std::sqrt(2.0)); }

ComplexMatrix AppendixAReference::matrix() {
  const Complex a_ = a();
  const Complex b_ = b();
  const Complex bs = std::conj(b_);
  const Complex c_ = c();
  const Complex z{};
  return ComplexMatrix{
      {a_, z, z, -b_},
      {z, c_, z, z},
      {z, b_, -bs, z},
      {z, z, c_, z},
      {bs, -bs, b_, b_},
      {z, c_, z, z},
      {z, b_, -bs, z},
      {z, z, c_, z},
      {-bs, z, z, std::conj(a_)},
  };
}

double AppendixAReference::checksum() {
  return 2.0 * std::norm(a()) + 10.0 * std::norm(b()) + 4.0 * c() * c();
}

AppendixAResult reproduceAppendixA() {
  AppendixAResult result;
  result.computed = choiBlock(clifford12Ensemble(), 2, 1);
  result.reference = AppendixAReference::matrix();
  result.max_entry_deviation = maxAbsDiff(result.computed, result.reference);
  result.computed_norm = frobeniusNorm(result.computed);
  result.computed_checksum = result.computed_norm * result.computed_norm;
  result.reference_checksum = AppendixAReference::checksum();
  return result;
}

AppendixBResult reproduceAppendixB(Complex c, Complex alpha, Complex beta) {
  const double vacuum_weight = std::norm(c);
  if (!std::isfinite(vacuum_weight) || vacuum_weight > 1.0 + kNormTol) {
    throw Error(ErrorCode::kBadNormalization, "|c|^2 = " + std::to_string(vacuum_weight) + " > 1");
  }
  const double pair_weight = std::max(0.0, 1.0 - vacuum_weight);
  const SourceSpec source{{alpha, beta}, {c, 0.0, std::sqrt(pair_weight)}};
  const SectorStructure structure(2);

  AppendixBResult result;
  result.output = applyChannel(clifford12Ensemble(), structure,
                               buildSourceState(source, structure).densityMatrix());
  result.reference = vacuum_weight * structure.projector(0);
  result.reference.addScaled(pair_weight / 3.0, structure.projector(2));
  result.deviation = frobeniusNorm(result.output - result.reference);
  return result;
}

ComplexMatrix cliffordTwoFoldAverage() {
  const WeightedEnsemble e = clifford12Ensemble();
  ComplexMatrix sum(4, 4);
  for (const auto& el : e.elements())
    sum.addScaled(el.weight, kron(el.unitary, el.unitary));
  return sum;
}

double antisymmetricIdentityCheck() {
  const double r = 1.0 / std::sqrt(2.0);
  const ComplexVector singlet{0.0, r, -r, 0.0};
  return frobeniusNorm(cliffordTwoFoldAverage() - ComplexMatrix::outer(singlet, singlet));
}

}  // namespace pqc
