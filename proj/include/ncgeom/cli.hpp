#pragma once

#include <optional>
#include <string>

#include "json.hpp"
#include "ncgeom/calculus.hpp"

namespace ncgeom::cli {

using Json = nlohmann::ordered_json;

enum ExitCode : int { kOk = 0, kInternal = 1, kUsage = 2, kValidation = 3, kPrecondition = 4 };

inline constexpr const char* kCommands[] = {"calculus", "connection", "curvature", "ricci",
                                            "dirac",    "wave",       "spectral-action", "report-all"};

struct JobSpec {
  /// Builtin group as "dihedral:N"; ignored when cayley is set.
  std::string group = "dihedral:6";
  /// Cayley-table JSON file.
  std::optional<std::string> cayley;
  /// Label of a representative of the class.
  std::string class_label = "sr";
  /// Rational "p/q" or integer.
  std::string mu = "0";
  std::string command = "report-all";
  /// Report file; standard output when empty.
  std::optional<std::string> output;
  bool pretty = false;
  /// Test-function coefficients for spectral-action, constant term first, comma separated.
  std::string poly = "1,-1,1/2,-1/6,1/24";
  /// Cutoff Λ for spectral-action.
  std::string cutoff = "1";
};

struct RunResult {
  int exit_code = kOk;
  /// Serialized report, with a trailing newline, when exit_code is kOk.
  std::string report;
  /// Diagnostic for non-zero exit codes.
  std::string message;
};

/// Runs the job; writes the report to spec.output when set. Never throws for
/// mathematical or input errors: they map to exit codes.
RunResult run(const JobSpec& spec);

/// Builds the report object; throws the library errors.
Json build_report(const JobSpec& spec);

/// Throws UsageError.
mpq_class parse_rational(const std::string& text);

/// Throws ValidationError on unreadable files, malformed JSON or a table that
/// violates a group axiom.
FiniteGroup load_cayley(const std::string& path);
FiniteGroup parse_cayley(const std::string& text);
/// {"names": [...], "table": [[...], ...]} with two-space indentation.
std::string export_cayley(const FiniteGroup& g);

/// {"num", "den", "zeta_order", "coeffs", "decimal"}: the value is
/// Σ coeffs[i] ζ^i / den; num is null unless the value is rational.
Json exact_json(const Cyclotomic& value);

/// Six-digit rendering, trailing zeros dropped; "a+bi" for non-real values.
std::string decimal_string(const Cyclotomic& value);

}  // namespace ncgeom::cli
