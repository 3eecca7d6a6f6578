#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include "pqc/channel.hpp"
#include "pqc/design.hpp"
#include "pqc/error.hpp"
#include "pqc/json_io.hpp"
#include "pqc/security.hpp"
#include "pqc/su2.hpp"

namespace pqc::cli {

namespace {

constexpr int kMaxPhotonGuard = 8;
constexpr double kReproduceTol = 1e-10;

struct CliConfig {
  std::string ensemble = "clifford12";
  int max_photons = 3;
  double tol = kDesignTol;
  std::string out_path;
  std::string format = "json";

  // design-check
  int k = 1;
  // reproduce
  std::string which;
  std::string c_literal;
  std::string alpha_literal;
  std::string beta_literal;
  // leakage
  std::string source_a;
  std::string source_b;
  std::string dephase = "none";
  // lift
  std::string unitary_literal;
  int lift_n = 1;
};

[[noreturn]] void usageError(const std::string& what) {
  throw Error(ErrorCode::kInvalidArgument, what);
}

std::string formatDouble(double x) {
  std::ostringstream s;
  s << std::setprecision(12) << x;
  return s.str();
}

std::string formatComplex(Complex z) {
  std::ostringstream s;
  s << std::setprecision(6) << z.real() << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "i";
  return s.str();
}

void appendMatrixText(std::ostringstream& s, const ComplexMatrix& m) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    s << "  ";
    for (std::size_t c = 0; c < m.cols(); ++c) s << std::setw(22) << formatComplex(m(r, c));
    s << '\n';
  }
}

/// A command result: JSON payload, text rendering and exit code.
struct Outcome {
  Json payload;
  std::string text;
  int code = kPass;
};

Encryption resolveEncryption(const std::string& name) {
  if (name == "haar") return HaarTwirl{};
  return resolveEnsemble(name);
}

Dephasing parseDephasing(const std::string& name) {
  if (name == "none") return Dephasing::kNone;
  if (name == "parity") return Dephasing::kParity;
  if (name == "photon-number") return Dephasing::kPhotonNumber;
  usageError("unknown dephasing '" + name + "' (none|parity|photon-number)");
}

Outcome cmdDesignCheck(const CliConfig& cfg) {
  if (cfg.ensemble == "haar") usageError("design-check needs a finite ensemble");
  const WeightedEnsemble e = resolveEnsemble(cfg.ensemble);

  Json levels = Json::array();
  std::ostringstream text;
  text << "ensemble " << e.name() << " (" << e.size() << " elements), tol " << cfg.tol << '\n';
  DesignCheck last;
  for (int k = 1; k <= cfg.k; ++k) {
    last = isKDesign(e, k, cfg.tol);
    levels.push_back(Json{{"k", k},
                          {"frame_potential", last.frame_potential},
                          {"haar_frame_potential", last.haar_frame_potential},
                          {"frame_gap", last.frameGap()},
                          {"moment_deviation", last.moment_deviation},
                          {"is_design", last.is_design}});
    text << "  k=" << k << "  F=" << formatDouble(last.frame_potential)
         << "  F_haar=" << formatDouble(last.haar_frame_potential)
         << "  moment_dev=" << formatDouble(last.moment_deviation) << "  "
         << (last.is_design ? "design" : "not a design") << '\n';
  }
  text << (last.is_design ? "PASS" : "FAIL") << ": " << e.name()
       << (last.is_design ? " is" : " is not") << " a unitary " << cfg.k << "-design\n";

  Outcome outcome;
  outcome.payload = Json{{"ensemble", e.name()},
                         {"k", cfg.k},
                         {"tol", cfg.tol},
                         {"is_design", last.is_design},
                         {"levels", std::move(levels)}};
  outcome.text = text.str();
  outcome.code = last.is_design ? kPass : kNegative;
  return outcome;
}

Outcome cmdAnalyze(const CliConfig& cfg) {
  const SecurityReport report = securityReport(resolveEncryption(cfg.ensemble), cfg.max_photons, cfg.tol);
  std::ostringstream text;
  text << "ensemble " << report.ensemble_name << ", N = " << report.max_photons << ", tol "
       << report.tol << '\n';
  for (const auto& b : report.blocks) {
    text << "  block (" << b.m << "," << b.n << ")  deviation " << formatDouble(b.deviation)
         << (b.deviation <= report.tol ? "" : "  *") << '\n';
  }
  text << "worst block (" << report.worst_block.first << "," << report.worst_block.second
       << ") deviation " << formatDouble(report.worst_deviation) << '\n'
       << classificationName(report.classification) << '\n';

  Outcome outcome;
  outcome.payload = reportToJson(report);
  outcome.text = text.str();
  switch (report.classification) {
    case Classification::kSecure: outcome.code = kPass; break;
    case Classification::kParitySecure: outcome.code = kParitySecure; break;
    case Classification::kInsecure: outcome.code = kNegative; break;
  }
  return outcome;
}

Outcome reproduceA() {
  const AppendixAResult r = reproduceAppendixA();
  const bool nonzero = r.computed_norm > kReproduceTol;
  const bool match = r.max_entry_deviation <= kReproduceTol &&
                     std::abs(r.computed_checksum - r.reference_checksum) <= kReproduceTol;
  std::ostringstream text;
  text << "cross block (2-photon output, 1-photon input) of clifford12:\n";
  appendMatrixText(text, r.computed);
  text << "reference:\n";
  appendMatrixText(text, r.reference);
  text << "max entry deviation " << formatDouble(r.max_entry_deviation) << '\n'
       << "checksum ||C||_F^2 = " << formatDouble(r.computed_checksum) << " (reference "
       << formatDouble(r.reference_checksum) << ")\n"
       << (nonzero ? "block is nonzero: the ensemble is not a private channel on K(2)\n" : "")
       << (match ? "MATCH" : "MISMATCH") << '\n';

  Outcome outcome;
  outcome.payload = Json{{"which", "appendix-a"},
                         {"computed", matrixToJson(r.computed)},
                         {"reference", matrixToJson(r.reference)},
                         {"max_entry_deviation", r.max_entry_deviation},
                         {"checksum", r.computed_checksum},
                         {"reference_checksum", r.reference_checksum},
                         {"nonzero", nonzero},
                         {"match", match}};
  outcome.text = text.str();
  outcome.code = match ? kPass : kNegative;
  return outcome;
}

Outcome reproduceB(const CliConfig& cfg) {
  if (cfg.c_literal.empty() || cfg.alpha_literal.empty() || cfg.beta_literal.empty()) {
    usageError("reproduce appendix-b needs --c, --alpha and --beta");
  }
  const Complex c = parseComplexLiteral(cfg.c_literal);
  const Complex alpha = parseComplexLiteral(cfg.alpha_literal);
  const Complex beta = parseComplexLiteral(cfg.beta_literal);
  const AppendixBResult r = reproduceAppendixB(c, alpha, beta);
  const bool match = r.deviation <= kReproduceTol;

  std::ostringstream text;
  text << "encrypted state on K(2):\n";
  appendMatrixText(text, r.output);
  text << "reference |c|^2 |0,0><0,0| + (1-|c|^2) P_2/3:\n";
  appendMatrixText(text, r.reference);
  text << "deviation " << formatDouble(r.deviation) << '\n' << (match ? "MATCH" : "MISMATCH") << '\n';

  Outcome outcome;
  outcome.payload = Json{{"which", "appendix-b"},
                         {"c", complexToJson(c)},
                         {"alpha", complexToJson(alpha)},
                         {"beta", complexToJson(beta)},
                         {"output", matrixToJson(r.output)},
                         {"reference", matrixToJson(r.reference)},
                         {"deviation", r.deviation},
                         {"match", match}};
  outcome.text = text.str();
  outcome.code = match ? kPass : kNegative;
  return outcome;
}

Outcome cmdReproduce(const CliConfig& cfg) {
  if (cfg.which == "appendix-a") return reproduceA();
  if (cfg.which == "appendix-b") return reproduceB(cfg);
  usageError("reproduce expects appendix-a or appendix-b");
}

Outcome cmdLeakage(const CliConfig& cfg) {
  const Encryption enc = resolveEncryption(cfg.ensemble);
  const SourceSpec a = loadSourceSpec(cfg.source_a);
  const SourceSpec b = loadSourceSpec(cfg.source_b);
  const Dephasing pre = parseDephasing(cfg.dephase);
  const double value = leakage(enc, a, b, cfg.max_photons, pre);
  const bool hidden = value <= cfg.tol;

  Outcome outcome;
  outcome.payload = Json{{"ensemble", encryptionName(enc)},
                         {"max_photons", cfg.max_photons},
                         {"dephase", cfg.dephase},
                         {"tol", cfg.tol},
                         {"leakage", value},
                         {"indistinguishable", hidden}};
  std::ostringstream text;
  text << "leakage (trace distance) " << formatDouble(value) << '\n'
       << (hidden ? "indistinguishable within tol" : "distinguishable") << '\n';
  outcome.text = text.str();
  outcome.code = hidden ? kPass : kNegative;
  return outcome;
}

Outcome cmdHaar(const CliConfig& cfg) {
  const ChoiOperator choi = haarChoiOperator(SectorStructure(cfg.max_photons));
  std::ostringstream text;
  text << "Haar channel Choi operator, N = " << cfg.max_photons << ", trace "
       << formatDouble(choi.trace().real()) << '\n';
  for (const auto& [key, block] : choi.blocks()) {
    text << "block (" << key.first << "," << key.second << "):\n";
    appendMatrixText(text, block);
  }
  return {choiToJson(choi), text.str(), kPass};
}

ComplexMatrix parseUnitaryLiteral(const std::string& text) {
  std::vector<Complex> entries;
  std::string_view rest = text;
  while (true) {
    const auto comma = rest.find(',');
    entries.push_back(parseComplexLiteral(rest.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  if (entries.size() != 4) {
    throw Error(ErrorCode::kParseError, "--unitary expects four entries u00,u01,u10,u11");
  }
  return ComplexMatrix(2, 2, std::move(entries));
}

Outcome cmdLift(const CliConfig& cfg) {
  const ComplexMatrix u = parseUnitaryLiteral(cfg.unitary_literal);
  const LiftedUnitary lifted = liftSymmetric(u, cfg.lift_n);
  std::ostringstream text;
  text << "L_" << cfg.lift_n << "(U):\n";
  appendMatrixText(text, lifted.matrix);
  return {Json{{"n", cfg.lift_n}, {"unitary", matrixToJson(u)}, {"matrix", matrixToJson(lifted.matrix)}},
          text.str(), kPass};
}

void emit(const CliConfig& cfg, const Outcome& outcome, std::ostream& out) {
  const std::string body = cfg.format == "text" ? outcome.text : outcome.payload.dump(2) + "\n";
  if (cfg.out_path.empty()) {
    out << body;
    return;
  }
  std::ofstream file(cfg.out_path);
  if (!file) throw Error(ErrorCode::kInvalidArgument, "cannot write " + cfg.out_path);
  file << body;
}

}  // namespace

Complex parseComplexLiteral(std::string_view text) {
  const auto fail = [&]() -> Error {
    return Error(ErrorCode::kParseError,
                 "bad complex literal '" + std::string(text) + "' (expected a, a+bi, a-bi or bi)");
  };
  // from_chars rejects a leading '+', and a lone "i"/"-i" has no digits.
  auto parseReal = [&](std::string_view s, double& value) -> std::size_t {
    std::size_t skip = 0;
    if (!s.empty() && s.front() == '+') skip = 1;
    const auto* begin = s.data() + skip;
    const auto [ptr, ec] = std::from_chars(begin, s.data() + s.size(), value);
    if (ec != std::errc{} || ptr == begin) throw fail();
    return static_cast<std::size_t>(ptr - s.data());
  };

  if (text.empty()) throw fail();
  double first = 0.0;
  const std::size_t used = parseReal(text, first);
  std::string_view rest = text.substr(used);
  if (rest.empty()) return {first, 0.0};
  if (rest == "i") return {0.0, first};
  if (rest.back() != 'i' || (rest.front() != '+' && rest.front() != '-')) throw fail();
  rest.remove_suffix(1);
  double second = 0.0;
  if (parseReal(rest, second) != rest.size()) throw fail();
  return {first, second};
}

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CliConfig cfg;
  CLI::App app{"Private-quantum-channel checks for multi-photon polarization encryption",
               "pqcheck"};
  app.require_subcommand(1);
  app.option_defaults()->always_capture_default();
  app.add_option("--tol", cfg.tol, "Comparison tolerance")->check(CLI::PositiveNumber);
  app.add_option("--out", cfg.out_path, "Write the report here instead of stdout");
  app.add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"json", "text"}));

  const auto add_ensemble = [&](CLI::App* sub) {
    sub->add_option("--ensemble", cfg.ensemble,
                    "pauli, clifford12, or a path to an ensemble JSON file");
  };
  const auto add_photons = [&](CLI::App* sub) {
    sub->add_option("--max-photons,-N", cfg.max_photons, "Photon-number bound N")
        ->check(CLI::Range(0, kMaxPhotonGuard));
  };

  auto* design = app.add_subcommand("design-check", "Certify a unitary k-design");
  add_ensemble(design);
  design->add_option("--k", cfg.k, "Design order")->required()->check(CLI::Range(1, 5));

  auto* analyze = app.add_subcommand("analyze", "Compare Choi blocks with the Haar channel");
  add_ensemble(analyze);
  add_photons(analyze);

  auto* reproduce = app.add_subcommand("reproduce", "Recompute the worked examples");
  reproduce->add_option("which", cfg.which, "appendix-a | appendix-b")
      ->required()
      ->check(CLI::IsMember({"appendix-a", "appendix-b"}));
  reproduce->add_option("--c", cfg.c_literal, "Vacuum amplitude");
  reproduce->add_option("--alpha", cfg.alpha_literal, "Horizontal amplitude");
  reproduce->add_option("--beta", cfg.beta_literal, "Vertical amplitude");

  auto* leak = app.add_subcommand("leakage", "Trace distance between two encrypted sources");
  add_ensemble(leak);
  add_photons(leak);
  leak->add_option("--source-a", cfg.source_a, "Source JSON")->required();
  leak->add_option("--source-b", cfg.source_b, "Source JSON")->required();
  leak->add_option("--dephase", cfg.dephase, "Pre-channel: none | parity | photon-number");

  auto* haar = app.add_subcommand("haar", "Emit the Haar channel Choi operator");
  add_photons(haar);

  auto* lift = app.add_subcommand("lift", "Lift a qubit unitary to the n-photon sector");
  lift->add_option("--unitary", cfg.unitary_literal, "u00,u01,u10,u11")->required();
  lift->add_option("--n", cfg.lift_n, "Photon number")->check(CLI::Range(0, kMaxPhotonGuard));

  for (auto* sub : {design, analyze, reproduce, leak, haar, lift}) sub->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "pqcheck: " << e.what() << '\n';
    return kError;
  }

  try {
    Outcome outcome;
    if (design->parsed()) {
      outcome = cmdDesignCheck(cfg);
    } else if (analyze->parsed()) {
      outcome = cmdAnalyze(cfg);
    } else if (reproduce->parsed()) {
      outcome = cmdReproduce(cfg);
    } else if (leak->parsed()) {
      outcome = cmdLeakage(cfg);
    } else if (haar->parsed()) {
      outcome = cmdHaar(cfg);
    } else {
      outcome = cmdLift(cfg);
    }
    emit(cfg, outcome, out);
    return outcome.code;
  } catch (const Error& e) {
    err << "pqcheck: " << e.what() << '\n';
    return kError;
  } catch (const std::exception& e) {
    err << "pqcheck: unexpected failure: " << e.what() << '\n';
    return kError;
  }
}

}  // namespace pqc::cli
