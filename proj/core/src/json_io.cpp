#include "pqc/json_io.hpp"

#include <fstream>
#include <sstream>

#include "pqc/design.hpp"
#include "pqc/error.hpp"

namespace pqc {

namespace {

[[noreturn]] void parseFail(const std::string& what,
                            std::optional<std::size_t> index = std::nullopt) {
  throw Error(ErrorCode::kParseError, what, index);
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) parseFail(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

}  // namespace

Json complexToJson(Complex z) { return Json::array({z.real(), z.imag()}); }

Complex complexFromJson(const Json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    parseFail("complex number must be [re, im]");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

Json matrixToJson(const ComplexMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(complexToJson(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

ComplexMatrix matrixFromJson(const Json& j) {
  if (!j.is_array() || j.empty() || !j[0].is_array()) parseFail("matrix must be an array of rows");
  const std::size_t rows = j.size();
  const std::size_t cols = j[0].size();
  std::vector<Complex> entries;
  entries.reserve(rows * cols);
  for (const auto& row : j) {
    if (!row.is_array() || row.size() != cols) parseFail("ragged matrix");
    for (const auto& z : row) entries.push_back(complexFromJson(z));
  }
  try {
    return ComplexMatrix(rows, cols, std::move(entries));
  } catch (const Error& e) {
    parseFail(e.message());
  }
}

Json sourceSpecToJson(const SourceSpec& spec) {
  Json amps = Json::array();
  for (const auto& c : spec.photon_amplitudes) amps.push_back(complexToJson(c));
  return Json{{"alpha", complexToJson(spec.polarization.alpha)},
              {"beta", complexToJson(spec.polarization.beta)},
              {"photon_amplitudes", std::move(amps)}};
}

SourceSpec sourceSpecFromJson(const Json& j) {
  SourceSpec spec;
  spec.polarization.alpha = complexFromJson(field(j, "alpha"));
  spec.polarization.beta = complexFromJson(field(j, "beta"));
  const Json& amps = field(j, "photon_amplitudes");
  if (!amps.is_array() || amps.empty()) parseFail("photon_amplitudes must be a non-empty array");
  for (const auto& c : amps) spec.photon_amplitudes.push_back(complexFromJson(c));
  validate(spec);
  return spec;
}

SourceSpec loadSourceSpec(const std::filesystem::path& path) {
  const std::string text = readTextFile(path);
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    parseFail(path.string() + ": " + e.what());
  }
  return sourceSpecFromJson(j);
}

WeightedEnsemble parseEnsembleJson(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    parseFail(e.what());
  }
  const Json& name = field(j, "name");
  if (!name.is_string()) parseFail("\"name\" must be a string");
  const Json& elements = field(j, "elements");
  if (!elements.is_array()) parseFail("\"elements\" must be an array");

  std::vector<EnsembleElement> parsed;
  for (std::size_t idx = 0; idx < elements.size(); ++idx) {
    const Json& el = elements[idx];
    try {
      const Json& weight = field(el, "weight");
      if (!weight.is_number()) parseFail("\"weight\" must be a number");
      ComplexMatrix u = matrixFromJson(field(el, "unitary"));
      parsed.push_back({weight.get<double>(), std::move(u)});
    } catch (const Error& e) {
      // re-tag with the element index
      throw Error(e.code(), e.message(), idx);
    }
  }
  return WeightedEnsemble(name.get<std::string>(), std::move(parsed));
}

std::string ensembleToJson(const WeightedEnsemble& e) {
  Json elements = Json::array();
  for (const auto& el : e.elements()) {
    elements.push_back(Json{{"weight", el.weight}, {"unitary", matrixToJson(el.unitary)}});
  }
  return Json{{"name", e.name()}, {"elements", std::move(elements)}}.dump(2);
}

WeightedEnsemble loadEnsemble(const std::filesystem::path& path) {
  return parseEnsembleJson(readTextFile(path));
}

void saveEnsemble(const WeightedEnsemble& e, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::kInvalidArgument, "cannot write " + path.string());
  out << ensembleToJson(e) << '\n';
}

Json choiToJson(const ChoiOperator& choi) {
  Json blocks = Json::array();
  for (const auto& [key, block] : choi.blocks()) {
    blocks.push_back(Json{{"m", key.first}, {"n", key.second}, {"matrix", matrixToJson(block)}});
  }
  return Json{{"max_photons", choi.structure().maxPhotons()}, {"blocks", std::move(blocks)}};
}

Json reportToJson(const SecurityReport& report) {
  Json blocks = Json::array();
  for (const auto& b : report.blocks) {
    blocks.push_back(Json{{"m", b.m}, {"n", b.n}, {"deviation", b.deviation}});
  }
  return Json{{"ensemble", report.ensemble_name},
              {"max_photons", report.max_photons},
              {"tol", report.tol},
              {"classification", std::string(classificationName(report.classification))},
              {"blocks", std::move(blocks)},
              {"worst_block", Json::array({report.worst_block.first, report.worst_block.second})},
              {"worst_deviation", report.worst_deviation}};
}

std::string readTextFile(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) parseFail("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace pqc
