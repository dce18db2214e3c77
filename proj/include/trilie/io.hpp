#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "trilie/errors.hpp"
#include "trilie/exp_scalar.hpp"
#include "trilie/invariants.hpp"
#include "trilie/polynomial.hpp"

namespace trilie {

using Json = nlohmann::ordered_json;

enum class Command { Gen, Verify, Classify, Count, Lifted, Lemma2, Normcheck, Symcheck };
enum class Format { Json, Latex, Text };

std::string to_string(Command c);
std::string to_string(Format f);
/// Throw Error(ParseError) on unknown names.
Command parse_command(std::string_view text);
Format parse_format(std::string_view text);

struct JobSpec {
  Command command = Command::Gen;
  int n = 0;
  /// Raw comma-separated tuple; parsed and checked by run().
  std::string gamma;
  Vars vars = Vars::Dual;
  Format format = Format::Json;
  std::uint64_t seed = 0;
  /// gen/verify: multiply the rational member by its clearing multiplier.
  bool clear = false;
};

struct DocumentMember {
  enum class Type { Polynomial, Rational, PowerProduct };

  Type type = Type::Polynomial;
  /// Polynomial members.
  Polynomial poly;
  /// Rational members: canonical quotient and the displayed summands.
  Polynomial num;
  Polynomial den;
  std::vector<std::pair<Polynomial, Polynomial>> summands;
  /// Power products: minor order -> exponent.
  std::map<int, Rational> factors;

  friend bool operator==(const DocumentMember&, const DocumentMember&) = default;
};

struct BasisDocument {
  int n = 0;
  std::vector<Rational> gamma;
  Vars vars = Vars::Dual;
  BasisCase kase = BasisCase::Singular;
  std::optional<int> k0;
  std::map<int, Rational> alphas;
  BasisKind kind = BasisKind::Rational;
  std::optional<Polynomial> multiplier;
  std::vector<DocumentMember> members;
  /// Verification records, kept as JSON so they round-trip verbatim.
  std::vector<Json> certificates;

  std::size_t cardinality() const { return members.size(); }
  friend bool operator==(const BasisDocument&, const BasisDocument&) = default;
};

BasisDocument make_document(const InvariantBasis& basis);

Json to_json(const Polynomial& p);
Polynomial polynomial_from_json(const Json& j);
Json to_json(const ExpScalar& s);
ExpScalar exp_scalar_from_json(const Json& j);

/// Fixed key order, rationals as "p/q" strings, two-space indentation and a
/// trailing newline.
std::string emit_json(const BasisDocument& doc);
/// Throws Error(ParseError) on malformed input.
BasisDocument parse_document(std::string_view text);
/// One member per line; exact minors in determinant notation; "\varnothing"
/// for an empty basis.
std::string emit_latex(const BasisDocument& doc);
std::string emit_text(const BasisDocument& doc);

/// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitDomain = 3;
inline constexpr int kExitVerification = 4;

int exit_code_for(ErrorKind kind);
/// {"error": kind, "message": text}.
std::string error_json(ErrorKind kind, const std::string& message);

struct RunResult {
  int exit_code = kExitOk;
  std::string output;
};

/// Executes one job. Never throws: library errors become error JSON with a
/// nonzero exit code. Output is deterministic for a fixed JobSpec.
RunResult run(const JobSpec& job);

}  // namespace trilie
