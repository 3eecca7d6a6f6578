#pragma once

// JSON wire formats. Complex numbers are [re, im] pairs and matrices are
// row-major arrays of rows of such pairs.

#include <filesystem>
#include <string>

#include <nlohmann/json.hpp>

#include "pqc/channel.hpp"
#include "pqc/fock.hpp"
#include "pqc/matrix.hpp"
#include "pqc/security.hpp"

namespace pqc {

using Json = nlohmann::json;

Json complexToJson(Complex z);
Complex complexFromJson(const Json& j);
Json matrixToJson(const ComplexMatrix& m);
ComplexMatrix matrixFromJson(const Json& j);

/// {"alpha": [re,im], "beta": [re,im], "photon_amplitudes": [[re,im], ...]}
Json sourceSpecToJson(const SourceSpec& spec);
/// Validates normalization (kBadNormalization); malformed input is kParseError.
SourceSpec sourceSpecFromJson(const Json& j);
SourceSpec loadSourceSpec(const std::filesystem::path& path);

/// {"max_photons": N, "blocks": [{"m": m, "n": n, "matrix": ...}, ...]}
Json choiToJson(const ChoiOperator& choi);

/// {"ensemble", "max_photons", "tol", "classification", "blocks",
///  "worst_block", "worst_deviation"}
Json reportToJson(const SecurityReport& report);

/// Reads a whole file; kParseError if it cannot be opened.
std::string readTextFile(const std::filesystem::path& path);

}  // namespace pqc
