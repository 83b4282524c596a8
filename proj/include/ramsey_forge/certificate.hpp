#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "ramsey_forge/capacity.hpp"
#include "ramsey_forge/coloring.hpp"
#include "ramsey_forge/graph.hpp"
#include "ramsey_forge/solvers.hpp"

namespace ramsey_forge {

enum class CertificateKind { ColoringValidity, AlphaValue, Bound };

std::string_view to_string(CertificateKind kind);

/// Line-oriented record of a verified claim. Rendered as
///
///   certver 1
///   kind <coloring-validity|alpha-value|bound>
///   tool ramsey-forge <version>
///   object <coloring|graph|none> sha256 <hex of the canonical object file>
///   claim <text>
///   provenance <text>      (zero or more)
///   detail <text>          (zero or more)
///   report <text>          (one or more)
///   end
///
/// The report lines are exactly what re-running the verification on the
/// object reproduces.
struct Certificate {
  CertificateKind kind = CertificateKind::ColoringValidity;
  std::string tool_version;
  std::string object_format;
  std::string object_sha256;
  std::string claim;
  std::vector<std::string> provenance;
  std::vector<std::string> details;
  std::vector<std::string> report;

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

std::string sha256_hex(std::string_view bytes);

/// "spec k1,...,kn", one "color i max-clique m witness v..." line per color,
/// then "verdict pass|fail".
std::vector<std::string> report_lines(const VerificationReport& report);

/// "alpha a" and "witness v...".
std::vector<std::string> alpha_lines(const SearchResult& result);

Certificate coloring_certificate(const EdgeColoring& c, const VerificationReport& report,
                                 std::string claim, std::vector<std::string> provenance = {},
                                 std::vector<std::string> details = {});
Certificate alpha_certificate(const Graph& g, const SearchResult& result,
                              std::vector<std::string> provenance = {});
Certificate bound_certificate(const BoundReport& report);

std::string format_certificate(const Certificate& cert);
Certificate parse_certificate(std::string_view text);

void write_certificate(const Certificate& cert, const std::filesystem::path& path);
Certificate read_certificate(const std::filesystem::path& path);

/// Re-runs the verification recorded in `cert` on the serialized object and
/// returns true iff the hash and every report line match.
bool recheck_certificate(const Certificate& cert, std::string_view object_text,
                         const SolverOptions& options = {});

}  // namespace ramsey_forge
