#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pqc/channel.hpp"
#include "pqc/fock.hpp"

namespace pqc {

enum class Classification { kSecure, kParitySecure, kInsecure };

std::string_view classificationName(Classification c);

struct BlockDeviation {
  int m;
  int n;
  double deviation;  // ‖C_mn - δ_mn I/(n+1)‖_F
};

struct SecurityReport {
  std::string ensemble_name;
  int max_photons = 0;
  double tol = 0.0;
  std::vector<BlockDeviation> blocks;  // (m, n) in row-major order
  Classification classification = Classification::kInsecure;
  std::pair<int, int> worst_block{0, 0};
  double worst_deviation = 0.0;
};

/// Compares every Choi block of the channel with the Haar target.
///   SECURE         all blocks within tol
///   PARITY_SECURE  every same-parity block within tol, some cross-parity block not
///   INSECURE       otherwise
SecurityReport securityReport(const Encryption& enc, int max_photons, double tol = 1e-9);

/// Trace distance between the encrypted images of two sources on K(N),
/// optionally after a dephasing pre-channel.
double leakage(const Encryption& enc, const SourceSpec& a, const SourceSpec& b,
               int max_photons, Dephasing pre = Dephasing::kNone);

/// The printed 9x4 cross block (2-photon output, 1-photon input) of the
/// 12-element set, with a = (3+i)/12, b = (1+i)/12, c = 1/(3√2).
struct AppendixAReference {
  static Complex a();
  static Complex b();
  static double c();
  static ComplexMatrix matrix();
  /// 2|a|² + 10|b|² + 4c² = 1/2
  static double checksum();
};

struct AppendixAResult {
  ComplexMatrix computed;
  ComplexMatrix reference;
  double max_entry_deviation = 0.0;
  double computed_checksum = 0.0;  // ‖C‖_F²
  double reference_checksum = 0.0;
  double computed_norm = 0.0;      // ‖C‖_F
};

AppendixAResult reproduceAppendixA();

struct AppendixBResult {
  ComplexMatrix output;     // on K(2)
  ComplexMatrix reference;  // |c|² |0,0><0,0| + (1-|c|²) Π_2 / 3
  double deviation = 0.0;   // Frobenius
};

/// Encrypts c|0,0> + sqrt(1-|c|²)(α a_H† + β a_V†)²/√2 |0,0> with the
/// 12-element set. Throws kBadNormalization if |c| > 1 or |α|²+|β|² != 1.
AppendixBResult reproduceAppendixB(Complex c, Complex alpha, Complex beta);

/// (1/12) Σ_j U_j ⊗ U_j over the 12-element set.
ComplexMatrix cliffordTwoFoldAverage();

/// ‖(1/12) Σ_j U_j^{⊗2} - |ψ⁻><ψ⁻|‖_F
double antisymmetricIdentityCheck();

}  // namespace pqc
