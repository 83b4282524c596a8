#include "ramsey_forge/certificate.hpp"

#include <openssl/evp.h>

#include <array>
#include <charconv>
#include <cstdio>
#include <memory>
#include <sstream>

#include "ramsey_forge/error.hpp"
#include "ramsey_forge/io.hpp"

namespace ramsey_forge {

namespace {

constexpr std::string_view kToolName = "ramsey-forge";

std::string join_vertices(const std::vector<Vertex>& vs) {
  std::string out;
  for (Vertex v : vs) out += " " + std::to_string(v);
  return out;
}

std::string tool_version() { return std::string(kToolName) + " " + RAMSEY_FORGE_VERSION; }

}  // namespace

std::string_view to_string(CertificateKind kind) {
  switch (kind) {
    case CertificateKind::ColoringValidity:
      return "coloring-validity";
    case CertificateKind::AlphaValue:
      return "alpha-value";
    case CertificateKind::Bound:
      return "bound";
  }
  return "unknown";
}

std::string sha256_hex(std::string_view bytes) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int length = 0;
  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(), EVP_MD_CTX_free);
  if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1 ||
      EVP_DigestUpdate(ctx.get(), bytes.data(), bytes.size()) != 1 ||
      EVP_DigestFinal_ex(ctx.get(), digest.data(), &length) != 1) {
    throw Error("SHA-256 computation failed");
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  out.reserve(length * 2);
  for (unsigned int i = 0; i < length; ++i) {
    out += kHex[digest[i] >> 4];
    out += kHex[digest[i] & 0xF];
  }
  return out;
}

std::vector<std::string> report_lines(const VerificationReport& report) {
  std::vector<std::string> out;
  std::string spec = "spec ";
  for (std::size_t i = 0; i < report.spec.values().size(); ++i) {
    if (i > 0) spec += ',';
    spec += std::to_string(report.spec.values()[i]);
  }
  out.push_back(spec);
  for (const auto& c : report.colors) {
    out.push_back("color " + std::to_string(c.color) + " max-clique " +
                  std::to_string(c.max_clique) + " witness" + join_vertices(c.witness));
  }
  out.push_back(std::string("verdict ") + (report.pass ? "pass" : "fail"));
  return out;
}

std::vector<std::string> alpha_lines(const SearchResult& result) {
  return {"alpha " + std::to_string(result.size), "witness" + join_vertices(result.witness)};
}

Certificate coloring_certificate(const EdgeColoring& c, const VerificationReport& report,
                                 std::string claim, std::vector<std::string> provenance,
                                 std::vector<std::string> details) {
  Certificate cert;
  cert.kind = CertificateKind::ColoringValidity;
  cert.tool_version = tool_version();
  cert.object_format = "coloring";
  cert.object_sha256 = sha256_hex(format_coloring(c));
  cert.claim = std::move(claim);
  cert.provenance = std::move(provenance);
  cert.details = std::move(details);
  cert.report = report_lines(report);
  return cert;
}

Certificate alpha_certificate(const Graph& g, const SearchResult& result,
                              std::vector<std::string> provenance) {
  Certificate cert;
  cert.kind = CertificateKind::AlphaValue;
  cert.tool_version = tool_version();
  cert.object_format = "graph";
  cert.object_sha256 = sha256_hex(format_graph(g));
  cert.claim = "alpha = " + std::to_string(result.size);
  cert.provenance = std::move(provenance);
  cert.report = alpha_lines(result);
  return cert;
}

Certificate bound_certificate(const BoundReport& report) {
  Certificate cert;
  cert.kind = CertificateKind::Bound;
  cert.tool_version = tool_version();
  cert.object_format = "none";
  cert.claim = report.claim();
  cert.provenance = report.provenance;
  cert.report = report.lines();
  return cert;
}

std::string format_certificate(const Certificate& cert) {
  std::string out = "certver 1\n";
  out += "kind " + std::string(to_string(cert.kind)) + "\n";
  out += "tool " + cert.tool_version + "\n";
  out += "object " + cert.object_format;
  if (!cert.object_sha256.empty()) out += " sha256 " + cert.object_sha256;
  out += "\n";
  out += "claim " + cert.claim + "\n";
  for (const auto& p : cert.provenance) out += "provenance " + p + "\n";
  for (const auto& d : cert.details) out += "detail " + d + "\n";
  for (const auto& r : cert.report) out += "report " + r + "\n";
  out += "end\n";
  return out;
}

Certificate parse_certificate(std::string_view text) {
  Certificate cert;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  bool ended = false;
  auto rest_after = [](const std::string& l, std::string_view key) {
    return l.size() > key.size() ? l.substr(key.size() + 1) : std::string{};
  };
  auto starts = [](const std::string& l, std::string_view key) {
    return l.compare(0, key.size(), key) == 0 && (l.size() == key.size() || l[key.size()] == ' ');
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (ended) throw ParseError("content after 'end'", line_no);
    if (line_no == 1) {
      if (line != "certver 1") throw ParseError("expected 'certver 1'", 1);
      continue;
    }
    if (starts(line, "kind")) {
      auto k = rest_after(line, "kind");
      if (k == "coloring-validity") {
        cert.kind = CertificateKind::ColoringValidity;
      } else if (k == "alpha-value") {
        cert.kind = CertificateKind::AlphaValue;
      } else if (k == "bound") {
        cert.kind = CertificateKind::Bound;
      } else {
        throw ParseError("unknown certificate kind '" + k + "'", line_no);
      }
    } else if (starts(line, "tool")) {
      cert.tool_version = rest_after(line, "tool");
    } else if (starts(line, "object")) {
      std::istringstream words(rest_after(line, "object"));
      std::string tag;
      words >> cert.object_format;
      if (words >> tag) {
        if (tag != "sha256" || !(words >> cert.object_sha256)) {
          throw ParseError("malformed object line", line_no);
        }
      }
    } else if (starts(line, "claim")) {
      cert.claim = rest_after(line, "claim");
    } else if (starts(line, "provenance")) {
      cert.provenance.push_back(rest_after(line, "provenance"));
    } else if (starts(line, "detail")) {
      cert.details.push_back(rest_after(line, "detail"));
    } else if (starts(line, "report")) {
      cert.report.push_back(rest_after(line, "report"));
    } else if (line == "end") {
      ended = true;
    } else {
      throw ParseError("unrecognized certificate line", line_no);
    }
  }
  if (line_no == 0) throw ParseError("empty certificate", 1);
  if (!ended) throw ParseError("missing 'end'", line_no);
  return cert;
}

void write_certificate(const Certificate& cert, const std::filesystem::path& path) {
  write_file(path, format_certificate(cert));
}

Certificate read_certificate(const std::filesystem::path& path) {
  return parse_certificate(read_file(path));
}

namespace {

ColoringSpec spec_from_report(const std::vector<std::string>& report) {
  if (report.empty() || report.front().rfind("spec ", 0) != 0) {
    throw InvalidArgument("certificate report does not start with a spec line");
  }
  std::vector<int> values;
  std::string_view list = std::string_view(report.front()).substr(5);
  while (!list.empty()) {
    auto comma = list.find(',');
    auto item = list.substr(0, comma);
    int v = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (ec != std::errc{} || ptr != item.data() + item.size()) {
      throw InvalidArgument("malformed spec line in certificate");
    }
    values.push_back(v);
    list = comma == std::string_view::npos ? std::string_view{} : list.substr(comma + 1);
  }
  return ColoringSpec(std::move(values));
}

}  // namespace

bool recheck_certificate(const Certificate& cert, std::string_view object_text,
                         const SolverOptions& options) {
  switch (cert.kind) {
    case CertificateKind::ColoringValidity: {
      if (sha256_hex(object_text) != cert.object_sha256) return false;
      EdgeColoring c = parse_coloring(object_text);
      return report_lines(validate_coloring(c, spec_from_report(cert.report), options)) ==
             cert.report;
    }
    case CertificateKind::AlphaValue: {
      if (sha256_hex(object_text) != cert.object_sha256) return false;
      Graph g = parse_graph(object_text);
      return alpha_lines(max_independent_set(g, options)) == cert.report;
    }
    case CertificateKind::Bound: {
      BoundReport rebuilt;
      for (const auto& line : cert.report) {
        long long s = 0, m = 0, t = 0, n = 0, k = 0;
        if (std::sscanf(line.c_str(), "doubling s=%lld m=%lld t=%lld n=%lld k=%lld", &s, &m, &t,
                        &n, &k) == 5) {
          rebuilt.doubling = make_doubling_report(s, m, t, n, k).doubling;
        } else if (std::sscanf(line.c_str(), "corollary n=%lld r_n=%lld r_n_minus_1=%lld", &n, &s,
                               &t) == 3) {
          rebuilt.corollary = make_corollary_report(s, t, n).corollary;
        }
      }
      return rebuilt.lines() == cert.report && rebuilt.claim() == cert.claim;
    }
  }
  return false;
}

}  // namespace ramsey_forge
